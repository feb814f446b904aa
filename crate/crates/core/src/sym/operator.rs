//! The first Macdonald difference operator and the Schur bialternant, both
//! computed by clearing the Vandermonde and dividing it out exactly.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::qt::QQt;

use super::laurent::LaurentSym;

/// `D f = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i} f`.
pub fn macdonald_operator(f: &LaurentSym) -> Result<LaurentSym> {
    f.require_symmetric()?;
    let n = f.n();
    let m = f.min_exponent().unwrap_or(0).min(0);
    let g = f.shift_all(-m);
    let mut num = LaurentSym::zero(n);
    for i in 0..n {
        let sign = if i % 2 == 0 { QQt::one() } else { QQt::from_int(-1) };
        let mut tg = LaurentSym::zero(n);
        for (e, c) in g.terms() {
            tg.add_term(e.clone(), c * &QQt::monomial(1, e[i], 0));
        }
        let mut factor = LaurentSym::constant(n, sign);
        for j in 0..n {
            if j != i {
                let lin = LaurentSym::var(n, i).scale(&QQt::t()).sub(&LaurentSym::var(n, j));
                factor = factor.mul(&lin);
            }
        }
        num = num.add(&factor.mul(&vandermonde_without(n, i)).mul(&tg));
    }
    let out = divide_vandermonde(&num)?;
    Ok(out.shift_all(m).scale(&QQt::monomial(1, m, 0)))
}

/// `prod_{a<b, a,b != skip} (x_a - x_b)`.
fn vandermonde_without(n: usize, skip: usize) -> LaurentSym {
    let mut v = LaurentSym::one(n);
    for a in 0..n {
        for b in a + 1..n {
            if a != skip && b != skip {
                v = v.mul(&LaurentSym::var(n, a).sub(&LaurentSym::var(n, b)));
            }
        }
    }
    v
}

fn divide_vandermonde(f: &LaurentSym) -> Result<LaurentSym> {
    let mut cur = f.clone();
    for a in 0..f.n() {
        for b in a + 1..f.n() {
            cur = div_linear(&cur, a, b)?;
        }
    }
    Ok(cur)
}

/// Exact quotient of a polynomial by `x_a - x_b`.
pub fn div_linear(f: &LaurentSym, a: usize, b: usize) -> Result<LaurentSym> {
    let n = f.n();
    let mut buckets: HashMap<i64, HashMap<Vec<i64>, QQt>> = HashMap::new();
    let mut top = i64::MIN;
    for (e, c) in f.terms() {
        if e.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput("division by x_a - x_b needs a polynomial".into()));
        }
        top = top.max(e[a]);
        buckets.entry(e[a]).or_default().insert(e.clone(), c.clone());
    }
    let mut quot = LaurentSym::zero(n);
    let mut d = top;
    while d >= 1 {
        if let Some(bucket) = buckets.remove(&d) {
            for (mut e, c) in bucket {
                if c.is_zero() {
                    continue;
                }
                e[a] -= 1;
                quot.add_term(e.clone(), c.clone());
                e[b] += 1;
                let slot = buckets.entry(d - 1).or_default().entry(e).or_insert_with(QQt::zero);
                *slot = &*slot + &c;
            }
        }
        d -= 1;
    }
    if buckets.values().any(|bk| bk.values().any(|c| !c.is_zero())) {
        return Err(Error::InvalidInput(format!("not divisible by x{} - x{}", a + 1, b + 1)));
    }
    Ok(quot)
}

/// Schur polynomial `det(x_i^{lam_j + n - j}) / det(x_i^{n - j})`; `lam` is padded to `n`.
pub fn schur_bialternant(lam: &[i64], n: usize) -> Result<LaurentSym> {
    let mut l = lam.to_vec();
    l.resize(n, 0);
    let exps: Vec<i64> = (0..n).map(|j| l[j] + (n - 1 - j) as i64).collect();
    let mut det = LaurentSym::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut e = vec![0; n];
        for (j, &i) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        det.add_term(e, QQt::from_int(permutation_sign(&perm)));
        if !next_perm(&mut perm) {
            break;
        }
    }
    divide_vandermonde(&det)
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_perm(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `sum_i q^{lam_i} t^{n-i}`.
pub fn eigenvalue(lam: &[i64], n: usize) -> QQt {
    (0..n)
        .map(|i| QQt::monomial(1, lam.get(i).copied().unwrap_or(0), (n - 1 - i) as i64))
        .fold(QQt::zero(), |a, b| &a + &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::sym::bases::{p_poly, Basis};

    #[test]
    fn constants_and_eigenvalues() {
        let one = LaurentSym::one(2);
        assert_eq!(macdonald_operator(&one).unwrap(), LaurentSym::constant(2, &QQt::one() + &QQt::t()));
        for lam in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
            let p = p_poly(&Partition::new(lam.clone()).unwrap(), 2, Basis::Macdonald).unwrap();
            let d = macdonald_operator(&p).unwrap();
            assert_eq!(d, p.scale(&eigenvalue(&lam, 2)), "lambda = {lam:?}");
        }
    }

    #[test]
    fn laurent_input() {
        let p = p_poly(&Partition::new(vec![1]).unwrap(), 2, Basis::Macdonald).unwrap().shift_all(-1);
        let d = macdonald_operator(&p).unwrap();
        assert_eq!(d, p.scale(&eigenvalue(&[0, -1], 2)));
    }

    #[test]
    fn rejects_nonsymmetric() {
        assert!(matches!(macdonald_operator(&LaurentSym::var(2, 0)), Err(Error::NotSymmetric)));
    }

    #[test]
    fn schur_small() {
        let s21 = schur_bialternant(&[2, 1], 2).unwrap();
        assert_eq!(s21.len(), 2);
        let s2 = schur_bialternant(&[2], 2).unwrap();
        assert_eq!(s2.coeff(&[1, 1]), QQt::one());
        assert_eq!(schur_bialternant(&[], 3).unwrap(), LaurentSym::one(3));
    }
}

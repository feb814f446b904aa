//! Norms: `b_lambda`, `d_lambda`, and the constant-term inner product at `t = q^k`.

use num_bigint::BigInt;

use crate::partition::{Partition, Signature};
use crate::qt::poly::Exp;
use crate::qt::{phi_r, InfProd, QQt};
use crate::error::Result;

use super::laurent::LaurentSym;

/// Arm-leg product `b_lam(q,t) = prod_s (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)`.
pub fn b_armleg(lam: &Partition) -> QQt {
    let conj = lam.conjugate();
    let mut acc = QQt::one();
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row {
            let arm = (row - j - 1) as u32;
            let leg = (conj.part(j as usize) - i as i64 - 1) as u32;
            acc = &acc * &arm_leg_factor(arm, leg);
        }
    }
    acc
}

/// `(1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)`.
pub(crate) fn arm_leg_factor(arm: u32, leg: u32) -> QQt {
    QQt::one_minus(arm, leg + 1).div(&QQt::one_minus(arm + 1, leg)).expect("nonzero factor")
}

/// `b_lam(v) = prod_{i >= 1} phi_{m_i(lam)}(v)`.
pub fn b_hl(lam: &Partition, v: Exp) -> QQt {
    let mut acc = QQt::one();
    let top = lam.part(0);
    for i in 1..=top {
        acc = &acc * &phi_r(lam.multiplicity(i) as u32, v);
    }
    acc
}

/// `prod phi_{mult}(v)` over the distinct values of a signature, zero and negative parts included.
pub fn b_hat(sig: &Signature, v: Exp) -> QQt {
    let parts = sig.parts();
    let mut acc = QQt::one();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        acc = &acc * &phi_r((j - i) as u32, v);
        i = j;
    }
    acc
}

/// `d_lam(q,t)` in `n` variables as a formal product; only ratios at equal `n`
/// reduce at generic `t`, while every value reduces at `t = q^k`.
pub fn d_lambda(lam: &[i64], n: usize) -> InfProd {
    let mut l = lam.to_vec();
    l.resize(n, 0);
    let mut p = InfProd::one();
    for i in 0..n {
        for j in i + 1..n {
            let a = l[i] - l[j];
            let b = (j - i) as i64;
            p.push(a, b + 1, 1);
            p.push(a + 1, b - 1, 1);
            p.push(a, b, -1);
            p.push(a + 1, b, -1);
        }
    }
    p
}

/// `(1/n!) CT[f(x) g(1/x) prod_{i != j} prod_{m<k} (1 - q^m x_i/x_j)]`, the inner product at `t = q^k`.
pub fn ct_inner(f: &LaurentSym, g: &LaurentSym, k: u32) -> Result<QQt> {
    let n = f.n();
    let mut density = LaurentSym::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for m in 0..k {
                let mut e = vec![0; n];
                e[i] = 1;
                e[j] = -1;
                let mut lin = LaurentSym::one(n);
                lin.add_term(e, QQt::monomial(-1, m as i64, 0));
                density = density.mul(&lin);
            }
        }
    }
    let prod = f.mul(&g.invert_vars()).mul(&density);
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    prod.constant_term().div(&QQt::from_bigint(fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::T;
    use crate::sym::bases::{p_poly, Basis};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn b_at_q_zero() {
        for lam in [vec![1], vec![2, 1], vec![1, 1, 1], vec![3, 3, 1], vec![2, 2]] {
            let l = p(&lam);
            assert_eq!(b_armleg(&l).limit_q0().unwrap(), b_hl(&l, T), "lambda = {lam:?}");
        }
    }

    #[test]
    fn b_hat_counts_zeros() {
        let s = Signature::new(vec![1, 0, 0]).unwrap();
        assert_eq!(b_hat(&s, T), &phi_r(1, T) * &phi_r(2, T));
    }

    #[test]
    fn norm_matches_constant_term() {
        for k in 1..=2u32 {
            for lam in [vec![], vec![1], vec![2], vec![1, 1]] {
                let pl = p_poly(&p(&lam), 2, Basis::MacdonaldTqk(k)).unwrap();
                let ip = ct_inner(&pl, &pl, k).unwrap();
                let d = d_lambda(&lam, 2).at_t_eq_qk(k).unwrap();
                assert_eq!(ip, d.inv().unwrap(), "lambda = {lam:?}, k = {k}");
            }
        }
    }

    #[test]
    fn d_ratio_reduces() {
        let r = d_lambda(&[1], 2).div(&d_lambda(&[2], 2)).unwrap();
        assert!(r.to_qqt().is_ok());
    }
}

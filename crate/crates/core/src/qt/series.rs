//! q-series primitives: finite Pochhammer symbols, Gaussian binomials, and
//! formal ratios of infinite products that are reduced to finite ones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{Exp, Poly};
use super::qqt::QQt;
use crate::error::{Error, Result};

/// `c * q^q_exp * t^t_exp` with a rational coefficient and Laurent exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMonomial {
    pub coeff: BigRational,
    pub q_exp: i64,
    pub t_exp: i64,
}

impl QMonomial {
    pub fn new(coeff: BigRational, q_exp: i64, t_exp: i64) -> Self {
        QMonomial { coeff, q_exp, t_exp }
    }

    /// `q^q_exp t^t_exp` with coefficient 1.
    pub fn unit(q_exp: i64, t_exp: i64) -> Self {
        Self::new(BigRational::one(), q_exp, t_exp)
    }

    pub fn to_qqt(&self) -> QQt {
        let c = QQt::from_rational(&self.coeff);
        &c * &QQt::monomial(1, self.q_exp, self.t_exp)
    }

    fn pow(&self, i: u32) -> QMonomial {
        QMonomial {
            coeff: num_traits::pow(self.coeff.clone(), i as usize),
            q_exp: self.q_exp * i as i64,
            t_exp: self.t_exp * i as i64,
        }
    }

    fn mul(&self, o: &QMonomial) -> QMonomial {
        QMonomial {
            coeff: &self.coeff * &o.coeff,
            q_exp: self.q_exp + o.q_exp,
            t_exp: self.t_exp + o.t_exp,
        }
    }
}

/// `(a; base)_m = prod_{i<m} (1 - a base^i)`.
pub fn qpochhammer(a: &QMonomial, base: &QMonomial, m: u32) -> QQt {
    (0..m)
        .map(|i| &QQt::one() - &a.mul(&base.pow(i)).to_qqt())
        .product()
}

/// `phi_r(v) = (1 - v)(1 - v^2)...(1 - v^r)` for the monomial `v = q^a t^b`.
pub fn phi_r(r: u32, v: Exp) -> QQt {
    QQt::from_poly(phi_r_poly(r, v))
}

fn phi_r_poly(r: u32, v: Exp) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=r {
        acc = acc.mul(&Poly::one().sub(&Poly::monomial(v.0 * i, v.1 * i, BigInt::one())));
    }
    acc
}

/// Gaussian binomial `[n choose k]` in the monomial `v`; zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64, v: Exp) -> QQt {
    if k < 0 || n < 0 || k > n {
        return QQt::zero();
    }
    let (n, k) = (n as u32, k as u32);
    let num = phi_r_poly(n, v);
    let den = phi_r_poly(k, v).mul(&phi_r_poly(n - k, v));
    QQt::from_poly(num.exact_div(&den).expect("Gaussian binomials are polynomials"))
}

/// A formal product `scalar * prod (q^a t^b; q)_inf ^ e`.
///
/// Only ratios whose atoms cancel in every `t`-degree are representable as
/// rational functions; [`InfProd::to_qqt`] reports anything else as an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfProd {
    scalar: QQt,
    atoms: BTreeMap<(i64, i64), i64>,
}

impl Default for InfProd {
    fn default() -> Self {
        Self::one()
    }
}

impl InfProd {
    pub fn one() -> Self {
        InfProd { scalar: QQt::one(), atoms: BTreeMap::new() }
    }

    pub fn scalar(s: QQt) -> Self {
        InfProd { scalar: s, atoms: BTreeMap::new() }
    }

    /// The single factor `(q^a t^b; q)_inf ^ e`.
    pub fn atom(a: i64, b: i64, e: i64) -> Self {
        let mut p = Self::one();
        p.push(a, b, e);
        p
    }

    pub fn push(&mut self, a: i64, b: i64, e: i64) {
        assert!(a >= 0 && b >= 0 && (a, b) != (0, 0), "atom (q^{a} t^{b}; q)_inf is not admissible");
        let slot = self.atoms.entry((a, b)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.atoms.remove(&(a, b));
        }
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&(i64, i64), &i64)> {
        self.atoms.iter()
    }

    pub fn mul(&self, o: &InfProd) -> InfProd {
        let mut out = self.clone();
        out.scalar = &out.scalar * &o.scalar;
        for (&(a, b), &e) in &o.atoms {
            out.push(a, b, e);
        }
        out
    }

    pub fn inv(&self) -> Result<InfProd> {
        Ok(InfProd {
            scalar: self.scalar.inv()?,
            atoms: self.atoms.iter().map(|(k, e)| (*k, -e)).collect(),
        })
    }

    pub fn div(&self, o: &InfProd) -> Result<InfProd> {
        Ok(self.mul(&o.inv()?))
    }

    /// Reduces to a rational function in `q`, `t`.
    pub fn to_qqt(&self) -> Result<QQt> {
        let mut by_t: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for (&(a, b), &e) in &self.atoms {
            by_t.entry(b).or_default().push((a, e));
        }
        let mut acc = self.scalar.clone();
        for (b, group) in by_t {
            acc = &acc * &reduce_group(&group, b, 1)?;
        }
        Ok(acc)
    }

    /// Reduces at `t = q^k`, where every atom becomes `(q^c; q)_inf`.
    pub fn at_t_eq_qk(&self, k: u32) -> Result<QQt> {
        let mut collapsed: BTreeMap<i64, i64> = BTreeMap::new();
        for (&(a, b), &e) in &self.atoms {
            *collapsed.entry(a + k as i64 * b).or_insert(0) += e;
        }
        let group: Vec<(i64, i64)> = collapsed.into_iter().filter(|(_, e)| *e != 0).collect();
        let scalar = self.scalar.at_t_eq_qk(k)?;
        Ok(&scalar * &reduce_group(&group, 0, 0)?)
    }

    /// Limit `q -> 0`: `(q^a t^b; q)_inf` tends to 1 for `a > 0` and to `1 - t^b` for `a = 0`.
    pub fn limit_q0(&self) -> Result<QQt> {
        let mut acc = self.scalar.limit_q0()?;
        for (&(a, b), &e) in &self.atoms {
            if a == 0 {
                acc = &acc * &QQt::one_minus(0, b as u32).pow(e)?;
            }
        }
        Ok(acc)
    }
}

/// Reduces `prod_i (q^{a_i} t^b; q)_inf^{e_i}` with `sum e_i = 0` to finite products.
/// `t_weight` is 0 when the atoms carry no `t` (after `t = q^k`).
fn reduce_group(group: &[(i64, i64)], b: i64, t_weight: i64) -> Result<QQt> {
    let total: i64 = group.iter().map(|(_, e)| e).sum();
    if total != 0 {
        return Err(Error::NonTerminating(format!(
            "atoms with t-degree {b} have net multiplicity {total}"
        )));
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for &(a, e) in group {
        let v = if e > 0 { &mut pos } else { &mut neg };
        v.extend(std::iter::repeat_n(a, e.unsigned_abs() as usize));
    }
    pos.sort_unstable();
    neg.sort_unstable();
    let te = (b * t_weight) as u32;
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (a, a2) in pos.into_iter().zip(neg) {
        // (q^a t^b)_inf / (q^a2 t^b)_inf
        let (lo, hi, target) = if a2 >= a { (a, a2, &mut num) } else { (a2, a, &mut den) };
        for i in lo..hi {
            *target = target.mul(&Poly::one().sub(&Poly::monomial(i as u32, te, BigInt::one())));
        }
    }
    QQt::from_parts(num, den)
}

/// `[n]_v = 1 + v + ... + v^(n-1)`.
pub fn qinteger(n: u32, v: Exp) -> QQt {
    if n == 0 {
        return QQt::zero();
    }
    QQt::from_poly(Poly::from_terms((0..n).map(|i| ((v.0 * i, v.1 * i), BigInt::one()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Exp = (0, 1);

    fn poly(terms: &[((u32, u32), i64)]) -> QQt {
        QQt::from_poly(Poly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c)))))
    }

    #[test]
    fn pochhammer_examples() {
        let a = QMonomial::unit(2, -2);
        let base = QMonomial::unit(2, 0);
        let one_factor = qpochhammer(&a, &base, 1);
        let expect = (&QQt::monomial(1, 0, 2) - &QQt::monomial(1, 2, 0)).div(&QQt::monomial(1, 0, 2)).unwrap();
        assert_eq!(one_factor, expect);
        assert!(qpochhammer(&a, &base, 0).is_one());
        let two = qpochhammer(&QMonomial::unit(2, 0), &base, 2);
        assert_eq!(two, &QQt::one_minus(2, 0) * &QQt::one_minus(4, 0));
    }

    #[test]
    fn binomials() {
        assert_eq!(qbinomial(2, 1, T), poly(&[((0, 0), 1), ((0, 1), 1)]));
        assert!(qbinomial(5, 0, T).is_one());
        assert_eq!(
            qbinomial(4, 2, T),
            poly(&[((0, 0), 1), ((0, 1), 1), ((0, 2), 2), ((0, 3), 1), ((0, 4), 1)])
        );
        assert!(qbinomial(3, 4, T).is_zero());
        assert!(qbinomial(3, -1, T).is_zero());
    }

    #[test]
    fn pascal_and_symmetry() {
        for n in 1..=8i64 {
            for k in 0..=n {
                assert_eq!(qbinomial(n, k, T), qbinomial(n, n - k, T));
                let rhs = &qbinomial(n - 1, k - 1, T) + &(&QQt::monomial(1, 0, k) * &qbinomial(n - 1, k, T));
                assert_eq!(qbinomial(n, k, T), rhs);
            }
        }
    }

    #[test]
    fn phi_values() {
        assert!(phi_r(0, T).is_one());
        assert_eq!(phi_r(1, T), QQt::one_minus(0, 1));
        assert_eq!(phi_r(2, T), &QQt::one_minus(0, 1) * &QQt::one_minus(0, 2));
    }

    #[test]
    fn infinite_ratio_reduces() {
        // (t)_inf / (q t)_inf = 1 - t ; (q^2)_inf / (q)_inf = 1/(1 - q)
        let mut p = InfProd::atom(0, 1, 1);
        p.push(1, 1, -1);
        assert_eq!(p.to_qqt().unwrap(), QQt::one_minus(0, 1));
        let mut r = InfProd::atom(2, 0, 1);
        r.push(1, 0, -1);
        assert_eq!(r.to_qqt().unwrap(), QQt::one().div(&QQt::one_minus(1, 0)).unwrap());
        assert!(matches!(InfProd::atom(1, 1, 1).to_qqt(), Err(Error::NonTerminating(_))));
    }

    #[test]
    fn infinite_product_specializations() {
        // (t)_inf/(q)_inf at t = q^2 is 1/(1 - q)
        let mut p = InfProd::atom(0, 1, 1);
        p.push(1, 0, -1);
        assert_eq!(p.at_t_eq_qk(2).unwrap(), QQt::one().div(&QQt::one_minus(1, 0)).unwrap());
        assert_eq!(p.limit_q0().unwrap(), QQt::one_minus(0, 1));
    }

    #[test]
    fn qinteger_value() {
        assert_eq!(qinteger(3, (1, 0)), poly(&[((0, 0), 1), ((1, 0), 1), ((2, 0), 1)]));
    }
}

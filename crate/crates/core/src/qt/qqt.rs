//! Exact rational functions in `q` and `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Exp, Poly};
use crate::error::{Error, Result};

/// A rational function `num / den` in canonical form.
///
/// `num` and `den` are coprime in `Z[q,t]` (integer content included), the
/// graded-lex leading coefficient of `den` is positive, and zero is `0 / 1`.
/// Canonical forms compare structurally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QQt {
    num: Poly,
    den: Poly,
}

impl Default for QQt {
    fn default() -> Self {
        QQt::zero()
    }
}

impl QQt {
    pub fn zero() -> Self {
        QQt { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        QQt { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        QQt { num: Poly::constant(BigInt::from(c)), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QQt { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
            .expect("rational with nonzero denominator")
    }

    pub fn from_poly(p: Poly) -> Self {
        QQt { num: p, den: Poly::one() }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^qe * t^te` with possibly negative exponents.
    pub fn monomial(c: i64, qe: i64, te: i64) -> Self {
        Self::monomial_big(BigInt::from(c), qe, te)
    }

    pub fn monomial_big(c: BigInt, qe: i64, te: i64) -> Self {
        let (nq, dq) = if qe >= 0 { (qe as u32, 0) } else { (0, (-qe) as u32) };
        let (nt, dt) = if te >= 0 { (te as u32, 0) } else { (0, (-te) as u32) };
        Self::from_parts(Poly::monomial(nq, nt, c), Poly::monomial(dq, dt, BigInt::one()))
            .expect("monomial denominator is nonzero")
    }

    /// `1 - c q^qe t^te` for non-negative exponents.
    pub fn one_minus(qe: u32, te: u32) -> Self {
        QQt::from_poly(Poly::one().sub(&Poly::monomial(qe, te, BigInt::one())))
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QQt::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Ok(Self::sign_normalized(num, den))
    }

    fn sign_normalized(num: Poly, den: Poly) -> Self {
        let negative = den.leading_graded().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if negative {
            QQt { num: num.neg(), den: den.neg() }
        } else {
            QQt { num, den }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an exact rational if this is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> QQt {
        QQt { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &QQt) -> QQt {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return QQt { num: n, den: Poly::one() };
            }
            return Self::from_parts(n, self.den.clone()).expect("nonzero denominator");
        }
        let g = Poly::gcd(&self.den, &other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::sign_normalized(n, self.den.mul(&other.den));
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = other.den.exact_div(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return QQt::zero();
        }
        let g2 = Poly::gcd(&t, &g);
        let num = t.exact_div(&g2).expect("gcd divides");
        let den = b1.mul(&other.den.exact_div(&g2).expect("gcd divides"));
        Self::sign_normalized(num, den)
    }

    pub fn sub(&self, other: &QQt) -> QQt {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QQt) -> QQt {
        if self.is_zero() || other.is_zero() {
            return QQt::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        Self::sign_normalized(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<QQt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::sign_normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &QQt) -> Result<QQt> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<QQt> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(QQt { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Substitutes `q -> q^a t^b` and `t -> q^c t^d`.
    pub fn subs_monomial(&self, q_to: Exp, t_to: Exp) -> Result<QQt> {
        let den = self.den.subs_monomial(q_to, t_to);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes under substitution", self.den)));
        }
        Self::from_parts(self.num.subs_monomial(q_to, t_to), den)
    }

    /// `f(q^2, t^2)`.
    pub fn square_vars(&self) -> QQt {
        QQt { num: self.num.square_vars(), den: self.den.square_vars() }
    }

    /// `f(q, q^k)`.
    pub fn at_t_eq_qk(&self, k: u32) -> Result<QQt> {
        self.subs_monomial((1, 0), (k, 0))
    }

    /// `f(t, t)`.
    pub fn at_q_eq_t(&self) -> Result<QQt> {
        self.subs_monomial((0, 1), (0, 1))
    }

    /// Value at `q = 0` of the canonical form, a rational function of `t`.
    pub fn limit_q0(&self) -> Result<QQt> {
        let den = self.den.at_q_zero();
        if den.is_zero() {
            return Err(Error::Pole(format!("{} has a pole at q = 0", self)));
        }
        Self::from_parts(self.num.at_q_zero(), den)
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at q = {}, t = {}", self, q, t)));
        }
        Ok(self.num.eval(q, t) / d)
    }

    /// Exact substitution of rational values, returned as a constant rational function.
    pub fn specialize_values(&self, q: &BigRational, t: &BigRational) -> Result<QQt> {
        Ok(QQt::from_rational(&self.eval(q, t)?))
    }
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_one() || n.is_one() {
        return (n.clone(), d.clone());
    }
    let g = Poly::gcd(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.exact_div(&g).expect("gcd divides"), d.exact_div(&g).expect("gcd divides"))
    }
}

impl Add for &QQt {
    type Output = QQt;
    fn add(self, rhs: &QQt) -> QQt {
        QQt::add(self, rhs)
    }
}

impl Sub for &QQt {
    type Output = QQt;
    fn sub(self, rhs: &QQt) -> QQt {
        QQt::sub(self, rhs)
    }
}

impl Mul for &QQt {
    type Output = QQt;
    fn mul(self, rhs: &QQt) -> QQt {
        QQt::mul(self, rhs)
    }
}

impl Neg for &QQt {
    type Output = QQt;
    fn neg(self) -> QQt {
        QQt::neg(self)
    }
}

impl std::iter::Sum for QQt {
    fn sum<I: Iterator<Item = QQt>>(iter: I) -> QQt {
        iter.fold(QQt::zero(), |a, b| a.add(&b))
    }
}

impl std::iter::Product for QQt {
    fn product<I: Iterator<Item = QQt>>(iter: I) -> QQt {
        iter.fold(QQt::one(), |a, b| a.mul(&b))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = self.graded_terms();
        terms.reverse();
        for (i, ((qe, te), c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (*qe == 0 && *te == 0) {
                factors.push(mag.to_string());
            }
            for (v, e) in [("q", *qe), ("t", *te)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for QQt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Prefer a positive constant term in the printed denominator.
        let flip = self.den.coeff((0, 0)).is_negative();
        let (n, d) = if flip { (self.num.neg(), self.den.neg()) } else { (self.num.clone(), self.den.clone()) };
        write!(f, "{}/{}", wrap(&n), wrap(&d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QQt {
        QQt::q()
    }
    fn t() -> QQt {
        QQt::t()
    }
    fn one() -> QQt {
        QQt::one()
    }
    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn product_of_conjugates() {
        let a = &one() - &t();
        let b = &one() + &t();
        assert_eq!(&a * &b, QQt::one_minus(0, 2));
    }

    #[test]
    fn self_quotient_is_one() {
        let x = QQt::one_minus(1, 1).div(&QQt::one_minus(1, 0)).unwrap();
        assert!(x.div(&x).unwrap().is_one());
        assert_eq!(&QQt::zero() + &x, x);
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(one().div(&QQt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_sign() {
        // 1 / (q - 1) must store a denominator with positive graded leading coefficient.
        let x = one().div(&(&q() - &one())).unwrap();
        assert!(x.den().leading_graded().unwrap().1.is_positive());
        assert_eq!(x.num().as_constant(), Some(BigInt::from(1)));
    }

    #[test]
    fn integer_content_cancels() {
        let x = QQt::from_int(6).div(&QQt::from_int(4)).unwrap();
        assert_eq!(x.as_rational(), Some(rat(3, 2)));
    }

    fn printed_value() -> QQt {
        // (1 - t)(1 - q t^2)(1 - q - q^2 + t)/(1 - q t)
        let f = &(&(&one() - &q()) - &(&q() * &q())) + &t();
        let n = &(&QQt::one_minus(0, 1) * &QQt::one_minus(1, 2)) * &f;
        n.div(&QQt::one_minus(1, 1)).unwrap()
    }

    fn branching_value() -> QQt {
        // (1 + t^2 - 2 q^2)/(1 - q^2)
        let n = &(&one() + &(&t() * &t())) - &QQt::monomial(2, 2, 0);
        n.div(&QQt::one_minus(2, 0)).unwrap()
    }

    #[test]
    fn limit_of_printed_value() {
        assert_eq!(printed_value().limit_q0().unwrap(), QQt::one_minus(0, 2));
    }

    #[test]
    fn limit_of_branching_value() {
        let expect = &one() + &QQt::monomial(1, 0, 2);
        assert_eq!(branching_value().limit_q0().unwrap(), expect);
    }

    #[test]
    fn limit_pole() {
        let x = one().div(&q()).unwrap();
        assert!(matches!(x.limit_q0(), Err(Error::Pole(_))));
    }

    #[test]
    fn specializations() {
        assert!(branching_value().at_t_eq_qk(1).unwrap().is_one());
        let f = &one() + &QQt::monomial(1, 0, 2);
        let v = f.eval(&rat(0, 1), &rat(1, 3)).unwrap();
        assert_eq!(v, rat(10, 9));
        let g = &QQt::monomial(1, 0, 2) - &QQt::monomial(1, 4, 0);
        assert!(g.at_t_eq_qk(2).unwrap().is_zero());
    }

    #[test]
    fn substitution_pole() {
        let x = one().div(&(&q() - &t())).unwrap();
        assert!(matches!(x.at_q_eq_t(), Err(Error::Pole(_))));
    }

    #[test]
    fn laurent_monomial() {
        let x = QQt::monomial(1, 2, -2);
        assert_eq!(x.den(), &Poly::monomial(0, 2, BigInt::one()));
        assert_eq!(x.num(), &Poly::monomial(2, 0, BigInt::one()));
    }

    #[test]
    fn display() {
        assert_eq!(branching_value().to_string(), "(1 + t^2 - 2*q^2)/(1 - q^2)");
    }
}

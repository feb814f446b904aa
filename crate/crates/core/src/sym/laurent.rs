//! Laurent polynomials in `x_1..x_n` with coefficients in `Q(q,t)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qt::QQt;

/// Sparse Laurent polynomial; exponent vectors have length `n`, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSym {
    n: usize,
    terms: BTreeMap<Vec<i64>, QQt>,
}

impl LaurentSym {
    pub fn zero(n: usize) -> Self {
        LaurentSym { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, QQt::one())
    }

    pub fn constant(n: usize, c: QQt) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exps: Vec<i64>, c: QQt) -> Self {
        let mut s = Self::zero(exps.len());
        s.add_term(exps, c);
        s
    }

    /// The variable `x_i` (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, QQt::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &QQt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> QQt {
        self.terms.get(exps).cloned().unwrap_or_else(QQt::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: QQt) {
        debug_assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &QQt, other: &LaurentSym) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), c * v);
        }
    }

    pub fn add(&self, other: &LaurentSym) -> LaurentSym {
        let mut out = self.clone();
        out.axpy(&QQt::one(), other);
        out
    }

    pub fn sub(&self, other: &LaurentSym) -> LaurentSym {
        let mut out = self.clone();
        out.axpy(&QQt::from_int(-1), other);
        out
    }

    pub fn scale(&self, c: &QQt) -> LaurentSym {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentSym {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), c * v)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentSym) -> LaurentSym {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &[i64]) -> LaurentSym {
        LaurentSym {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    /// Multiplies by `(x_1 ... x_n)^m`.
    pub fn shift_all(&self, m: i64) -> LaurentSym {
        if m == 0 {
            return self.clone();
        }
        self.mul_monomial(&vec![m; self.n])
    }

    /// Views this polynomial in `n + 1` variables, multiplied by `x_{n+1}^e`.
    pub fn embed(&self, e: i64) -> LaurentSym {
        LaurentSym {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = k.clone();
                    k.push(e);
                    (k, v.clone())
                })
                .collect(),
        }
    }

    /// Coefficient of `x_n^e`, a polynomial in the first `n - 1` variables.
    pub fn coefficient_of_last(&self, e: i64) -> LaurentSym {
        let mut out = Self::zero(self.n - 1);
        for (k, v) in &self.terms {
            if k[self.n - 1] == e {
                out.terms.insert(k[..self.n - 1].to_vec(), v.clone());
            }
        }
        out
    }

    /// `f(x^{-1})`.
    pub fn invert_vars(&self) -> LaurentSym {
        LaurentSym {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.iter().map(|a| -a).collect(), v.clone())).collect(),
        }
    }

    pub fn constant_term(&self) -> QQt {
        self.coeff(&vec![0; self.n])
    }

    pub fn map_coeffs<F: Fn(&QQt) -> Result<QQt>>(&self, f: F) -> Result<LaurentSym> {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v)?);
        }
        Ok(out)
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter<F: Fn(&[i64]) -> bool>(&self, keep: F) -> LaurentSym {
        LaurentSym {
            n: self.n,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Smallest exponent appearing in any variable.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().flat_map(|k| k.iter().copied()).min()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(k, v)| {
                let mut s = k.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(v)
            })
        })
    }

    pub fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::NotSymmetric)
        }
    }

    /// Terms with exponent vectors in graded-lex descending order.
    pub fn graded_terms(&self) -> Vec<(&Vec<i64>, &QQt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: i64 = a.0.iter().sum();
            let db: i64 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

impl fmt::Display for LaurentSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .graded_terms()
            .into_iter()
            .map(|(k, v)| {
                let mono: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e != 0)
                    .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
                let mono = mono.join("*");
                match (v.is_one(), mono.is_empty()) {
                    (true, true) => "1".to_string(),
                    (true, false) => mono,
                    (false, true) => format!("({v})"),
                    (false, false) => format!("({v})*{mono}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x1 = LaurentSym::var(2, 0);
        let x2 = LaurentSym::var(2, 1);
        let s = x1.add(&x2);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), QQt::from_int(2));
        assert!(sq.is_symmetric());
        assert!(!x1.is_symmetric());
        assert!(sq.sub(&sq).is_zero());
    }

    #[test]
    fn embedding_and_slices() {
        let x1 = LaurentSym::var(1, 0);
        let e = x1.embed(3);
        assert_eq!(e.coeff(&[1, 3]), QQt::one());
        assert_eq!(e.coefficient_of_last(3), x1);
        assert!(e.coefficient_of_last(2).is_zero());
    }

    #[test]
    fn inversion_and_constant_term() {
        let x1 = LaurentSym::var(2, 0);
        let inv = x1.invert_vars();
        assert_eq!(x1.mul(&inv).constant_term(), QQt::one());
        assert_eq!(inv.min_exponent(), Some(-1));
    }
}

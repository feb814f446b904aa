//! Trace series built from the branching recursion, the chain-sum formula at
//! `q = 0`, and series division.

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{chain_weight, chains_in_window, sub_signatures, Signature};
use crate::qt::{QQt, T2};
use crate::sym::{b_hat, LaurentSym};

use super::coeffs::{c_hl, c_qt, sk_sig, ChlForm, CqtMethod};

/// A truncated trace expansion: every `x_m` with `m >= 2` has exponent at most `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSeries {
    pub lam: Signature,
    pub cutoff: i64,
    pub q0: bool,
    pub terms: LaurentSym,
}

static TRACE: Memo<(Signature, i64, bool), LaurentSym> = Memo::new();

/// `Phi_lam = sum_mu c_{lam,mu} x_n^{|lam| - |mu|} Phi_mu`, with `Phi_(m) = x_1^m`.
pub fn trace_series(lam: &Signature, cutoff: i64, q0: bool) -> Result<TraceSeries> {
    if lam.is_empty() {
        return Err(Error::InvalidInput("trace series needs at least one variable".into()));
    }
    Ok(TraceSeries { lam: lam.clone(), cutoff, q0, terms: trace_rec(lam, cutoff, q0)? })
}

fn trace_rec(mu: &Signature, cutoff: i64, q0: bool) -> Result<LaurentSym> {
    if mu.len() == 1 {
        return Ok(LaurentSym::monomial(vec![mu.parts()[0]], QQt::one()));
    }
    TRACE.get_or_try((mu.clone(), cutoff, q0), || {
        let last = mu.min_part().expect("nonempty");
        let mut out = LaurentSym::zero(mu.len());
        for nu in sub_signatures(mu, cutoff - last) {
            let c = if q0 {
                c_hl(mu, &nu, ChlForm::Product)?
            } else {
                c_qt(mu, &nu, CqtMethod::PsiOmega, None)?
            };
            if c.is_zero() {
                continue;
            }
            out.axpy(&c, &trace_rec(&nu, cutoff, q0)?.embed(mu.size() - nu.size()));
        }
        Ok(out)
    })
}

/// `sum_S sk_S(t^2) x^{wt(S)}` over chains from `lam` inside the window.
pub fn chain_sum(lam: &Signature, cutoff: i64) -> LaurentSym {
    let mut out = LaurentSym::zero(lam.len());
    for chain in chains_in_window(lam, cutoff) {
        let mut c = QQt::one();
        for w in chain.levels().windows(2) {
            c = &c * &sk_sig(&w[0], &w[1], T2);
        }
        out.add_term(chain_weight(&chain), c);
    }
    out
}

/// The constant relating the `q = 0` trace series to its chain sum: `(1 - t^2)^n / b_lam(t^2)`,
/// where `b` runs over the distinct values of the signature.
pub fn chain_constant(lam: &Signature) -> QQt {
    let n = lam.len() as i64;
    QQt::one_minus(0, 2).pow(n).expect("nonzero").div(&b_hat(lam, T2)).expect("nonzero")
}

/// `h(w) = sum_j (j - 1) w_j`, the grading used to order series terms.
pub fn h_degree(w: &[i64]) -> i64 {
    w.iter().enumerate().map(|(j, e)| j as i64 * e).sum()
}

/// Quotient `num / den` up to `h <= h_max`, dividing by the unique `h`-minimal term of `den`.
///
/// Both series must be complete for `h <= h_max + h_min(den)`; a window that caps each
/// `x_m` exponent at `cutoff` is complete there once `cutoff >= h_max + h_min(den)`.
pub fn divide_series(num: &LaurentSym, den: &LaurentSym, h_max: i64) -> Result<LaurentSym> {
    let n = num.n();
    let hmin = den.terms().map(|(e, _)| h_degree(e)).min().ok_or(Error::DivisionByZero)?;
    let leads: Vec<_> = den.terms().filter(|(e, _)| h_degree(e) == hmin).collect();
    if leads.len() != 1 {
        return Err(Error::InvalidInput("divisor has no unique h-leading term".into()));
    }
    let (le, lc) = (leads[0].0.clone(), leads[0].1.clone());
    let mut rest = num.filter(|e| h_degree(e) <= h_max + hmin);
    let mut quot = LaurentSym::zero(n);
    loop {
        let next = rest
            .terms()
            .min_by_key(|(e, _)| h_degree(e))
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = next else { break };
        let qe: Vec<i64> = e.iter().zip(&le).map(|(a, b)| a - b).collect();
        let qc = c.div(&lc)?;
        let step = den.mul_monomial(&qe).scale(&qc).filter(|w| h_degree(w) <= h_max + hmin);
        rest = rest.sub(&step);
        quot.add_term(qe, qc);
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    #[test]
    fn vacuum_coefficients() {
        let tr = trace_series(&s(&[0, 0]), 4, true).unwrap();
        for l in 0..=4 {
            assert_eq!(tr.terms.coeff(&[-l, l]), QQt::monomial(1, 0, 2 * l));
        }
    }

    #[test]
    fn small_hl_window() {
        let tr = trace_series(&s(&[2, 1]), 3, true).unwrap();
        assert!(tr.terms.coeff(&[2, 1]).is_one());
        assert_eq!(tr.terms.coeff(&[1, 2]), &QQt::one() + &QQt::monomial(1, 0, 2));
        assert_eq!(tr.terms.coeff(&[0, 3]), &QQt::monomial(1, 0, 2) + &QQt::monomial(1, 0, 4));
    }

    #[test]
    fn generic_top_term() {
        let tr = trace_series(&s(&[1, 0]), 0, false).unwrap();
        assert_eq!(tr.terms, LaurentSym::monomial(vec![1, 0], QQt::one()));
    }

    #[test]
    fn chain_sum_matches_trace() {
        for lam in [vec![0, 0], vec![2, 1], vec![1, 0, 0]] {
            let l = s(&lam);
            let tr = trace_series(&l, 3, true).unwrap();
            assert_eq!(tr.terms, chain_sum(&l, 3).scale(&chain_constant(&l)), "{lam:?}");
        }
    }
}

//! Monomial, Macdonald and Hall-Littlewood bases, and expansion in the `P` basis.

use std::collections::BTreeMap;

use crate::branching::coeffs::{g_coeff, psi, psi_hl};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{enumerate_between, partitions, Partition, Signature};
use crate::qt::{qpochhammer, QMonomial, QQt, T};

use super::laurent::LaurentSym;

/// Which family of `P` polynomials to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Generic `(q, t)`.
    Macdonald,
    /// `q = 0`, in the variable `t`.
    HallLittlewood,
    /// Macdonald at `t = q^k`.
    MacdonaldTqk(u32),
}

impl Basis {
    fn branch_coeff(self, lam: &Partition, mu: &Partition) -> QQt {
        match self {
            Basis::Macdonald => psi(lam, mu),
            Basis::HallLittlewood => psi_hl(lam, mu, T),
            Basis::MacdonaldTqk(k) => psi(lam, mu).at_t_eq_qk(k).expect("psi has no pole at t = q^k"),
        }
    }
}

/// Coefficients in a `P` basis, keyed by signature.
pub type PExpansion = BTreeMap<Signature, QQt>;

static P_CACHE: Memo<(Partition, usize, Basis), LaurentSym> = Memo::new();

/// `P_lam(x_1..x_n)` built by the branching recursion.
pub fn p_poly(lam: &Partition, n: usize, basis: Basis) -> Result<LaurentSym> {
    if lam.len() > n {
        return Err(Error::InvalidInput(format!("partition {lam} has more than {n} parts")));
    }
    Ok(p_rec(lam, n, basis))
}

fn p_rec(lam: &Partition, n: usize, basis: Basis) -> LaurentSym {
    if n == 0 {
        return LaurentSym::one(0);
    }
    P_CACHE.get_or((lam.clone(), n, basis), || {
        if n == 1 {
            return LaurentSym::monomial(vec![lam.part(0)], QQt::one());
        }
        let mut out = LaurentSym::zero(n);
        for beta in enumerate_between(lam, &Partition::empty(), n) {
            let c = basis.branch_coeff(lam, &beta);
            out.axpy(&c, &p_rec(&beta, n - 1, basis).embed(lam.size() - beta.size()));
        }
        out
    })
}

/// `P_sig` for a signature, using `P_{lam + m} = (x_1...x_n)^m P_lam`.
pub fn p_sig(sig: &Signature, basis: Basis) -> LaurentSym {
    let m = sig.min_part().unwrap_or(0);
    let base = sig.shifted(-m).to_partition().expect("shifted signature is a partition");
    p_rec(&base, sig.len(), basis).shift_all(m)
}

/// Monomial symmetric polynomial `m_gamma(x_1..x_n)`; `gamma` is padded with zeros.
pub fn monomial_sym(gamma: &[i64], n: usize) -> Result<LaurentSym> {
    if gamma.len() > n {
        return Err(Error::InvalidInput(format!("exponent {gamma:?} has more than {n} entries")));
    }
    let mut e = gamma.to_vec();
    e.resize(n, 0);
    e.sort_unstable();
    let mut out = LaurentSym::zero(n);
    loop {
        out.add_term(e.clone(), QQt::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [i64]) -> bool {
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

/// Expands a symmetric Laurent polynomial in the `P` basis by peeling off lex-leading terms.
pub fn expand_in_p(f: &LaurentSym, basis: Basis) -> Result<PExpansion> {
    let mut rest = f.clone();
    let mut out = PExpansion::new();
    loop {
        let Some((e, c)) = rest.terms().next_back().map(|(e, c)| (e.clone(), c.clone())) else {
            break;
        };
        let sig = Signature::new(e.clone()).map_err(|_| Error::NotExpressible(e.clone()))?;
        rest.axpy(&c.neg(), &p_sig(&sig, basis));
        out.insert(sig, c);
    }
    Ok(out)
}

/// `sum_sig c_sig P_sig` in `n` variables.
pub fn reconstruct(exp: &PExpansion, n: usize, basis: Basis) -> LaurentSym {
    let mut out = LaurentSym::zero(n);
    for (sig, c) in exp {
        out.axpy(c, &p_sig(sig, basis));
    }
    out
}

/// Pieri coefficient: the `P_delta` coefficient of `m_gamma P_mu`.
pub fn pieri_coeff(gamma: &[i64], mu: &Signature, delta: &Signature, basis: Basis) -> Result<QQt> {
    let n = mu.len();
    let prod = monomial_sym(gamma, n)?.mul(&p_sig(mu, basis));
    Ok(expand_in_p(&prod, basis)?.remove(delta).unwrap_or_else(QQt::zero))
}

/// Degree-`r` part of `prod_i (q x_i; q)_inf / (t x_i; q)_inf`, i.e. `sum_{|gamma| = r} g(gamma) m_gamma`.
pub fn cauchy_degree(r: i64, n: usize, squared: bool) -> LaurentSym {
    let mut out = LaurentSym::zero(n);
    for gamma in partitions(r, n) {
        let m = monomial_sym(gamma.parts(), n).expect("length checked by enumeration");
        out.axpy(&g_coeff(&gamma, squared), &m);
    }
    out
}

/// The truncated product `prod_i (q x_i; q)_inf / (t x_i; q)_inf` through total degree `d`.
pub fn cauchy_factor(n: usize, d: i64, squared: bool) -> LaurentSym {
    let mut out = LaurentSym::zero(n);
    for r in 0..=d {
        out = out.add(&cauchy_degree(r, n, squared));
    }
    out
}

/// `g_r(x; q, t) = sum_{|mu| = r} (t; q)_mu / (q; q)_mu m_mu(x)`.
pub fn g_poly(r: i64, n: usize, squared: bool) -> LaurentSym {
    let (qe, te) = if squared { (2, 2) } else { (1, 1) };
    let base = QMonomial::unit(qe, 0);
    let mut out = LaurentSym::zero(n);
    for mu in partitions(r, n) {
        let mut c = QQt::one();
        for &p in mu.parts() {
            let num = qpochhammer(&QMonomial::unit(0, te), &base, p as u32);
            let den = qpochhammer(&QMonomial::unit(qe, 0), &base, p as u32);
            c = &c * &num.div(&den).expect("(q;q)_m is nonzero");
        }
        out.axpy(&c, &monomial_sym(mu.parts(), n).expect("length checked by enumeration"));
    }
    out
}

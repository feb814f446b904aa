//! Branching coefficients and the closed forms they reduce to.
//!
//! Generic coefficients are computed in the base variables `(q, t)` and the
//! squared parameters `(q^2, t^2)` are substituted at the end, since every
//! identity involved is stable under that ring map.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{
    canonical_shift, enumerate_between, gt_preimage, horizontal_strip, partitions, signatures_between, GtPattern,
    Partition, Signature,
};
use crate::qt::poly::Exp;
use crate::qt::{qbinomial, InfProd, QQt, T2};
use crate::sym::inner::{arm_leg_factor, b_hl, d_lambda};
use crate::sym::{cauchy_degree, cauchy_factor, expand_in_p, monomial_sym, p_sig, Basis, LaurentSym, PExpansion};

static SK_FAULT: AtomicBool = AtomicBool::new(false);

/// Deliberately corrupts [`sk`] so that verification suites can be shown to fail.
pub fn set_sk_fault(on: bool) {
    SK_FAULT.store(on, Ordering::SeqCst);
}

fn sk_fault() -> bool {
    SK_FAULT.load(Ordering::SeqCst)
}

fn part(sig: &Signature) -> Result<Partition> {
    sig.to_partition()
        .ok_or_else(|| Error::InvalidInput(format!("signature {sig} has negative parts")))
}

/// `f(q^a t^b) = (q^a t^{b+1}; q)_inf / (q^{a+1} t^b; q)_inf`.
fn f_atom(a: i64, b: i64, e: i64, p: &mut InfProd) {
    p.push(a, b + 1, e);
    p.push(a + 1, b, -e);
}

static PSI: Memo<(Partition, Partition), QQt> = Memo::new();

/// `psi_{lam/mu}(q,t)` from the infinite-product formula; zero unless `lam/mu` is a horizontal strip.
pub fn psi(lam: &Partition, mu: &Partition) -> QQt {
    if !horizontal_strip(lam, mu) {
        return QQt::zero();
    }
    PSI.get_or((lam.clone(), mu.clone()), || {
        let l = mu.len();
        let mut p = InfProd::one();
        for i in 0..l {
            for j in i..l {
                let b = (j - i) as i64;
                f_atom(mu.part(i) - mu.part(j), b, 1, &mut p);
                f_atom(lam.part(i) - lam.part(j + 1), b, 1, &mut p);
                f_atom(lam.part(i) - mu.part(j), b, -1, &mut p);
                f_atom(mu.part(i) - lam.part(j + 1), b, -1, &mut p);
            }
        }
        p.to_qqt().expect("psi reduces to a finite product")
    })
}

/// `psi` for a signature pair, shifted so the smallest part of `lam` is zero.
pub fn psi_sig(lam: &Signature, mu: &Signature) -> QQt {
    let m = lam.min_part().unwrap_or(0);
    match (lam.shifted(-m).to_partition(), mu.shifted(-m).to_partition()) {
        (Some(l), Some(u)) => psi(&l, &u),
        _ => QQt::zero(),
    }
}

fn arm_leg_in(lam: &Partition, row: usize, col: usize) -> QQt {
    if (col as i64) >= lam.part(row) {
        return QQt::one();
    }
    let arm = (lam.part(row) - col as i64 - 1) as u32;
    let leg = (lam.conjugate().part(col) - row as i64 - 1) as u32;
    arm_leg_factor(arm, leg)
}

/// Rows and columns meeting `lam/mu`.
fn strip_lines(lam: &Partition, mu: &Partition) -> (Vec<bool>, Vec<bool>) {
    let mut rows = vec![false; lam.len()];
    let mut cols = vec![false; lam.part(0).max(0) as usize];
    for i in 0..lam.len() {
        for j in mu.part(i)..lam.part(i) {
            rows[i] = true;
            cols[j as usize] = true;
        }
    }
    (rows, cols)
}

/// `psi_{lam/mu} = prod_{s in R - C} b_mu(s) / b_lam(s)`.
pub fn psi_armleg(lam: &Partition, mu: &Partition) -> QQt {
    if !horizontal_strip(lam, mu) {
        return QQt::zero();
    }
    let (rows, cols) = strip_lines(lam, mu);
    let mut acc = QQt::one();
    for (i, _) in rows.iter().enumerate().filter(|(_, r)| **r) {
        for j in 0..lam.part(i) as usize {
            if !cols[j] {
                acc = &acc * &arm_leg_in(mu, i, j).div(&arm_leg_in(lam, i, j)).expect("nonzero");
            }
        }
    }
    acc
}

/// `phi_{lam/mu} = prod_{s in C} b_lam(s) / b_mu(s)`.
pub fn phi_qt(lam: &Partition, mu: &Partition) -> QQt {
    if !horizontal_strip(lam, mu) {
        return QQt::zero();
    }
    let (_, cols) = strip_lines(lam, mu);
    let mut acc = QQt::one();
    for (j, _) in cols.iter().enumerate().filter(|(_, c)| **c) {
        for i in 0..lam.conjugate().part(j) as usize {
            acc = &acc * &arm_leg_in(lam, i, j).div(&arm_leg_in(mu, i, j)).expect("nonzero");
        }
    }
    acc
}

/// Column differences `theta'_j = lam'_j - mu'_j` for `j = 1..=lam_1 + 1`.
fn theta_cols(lam: &Partition, mu: &Partition) -> Vec<i64> {
    let (lc, mc) = (lam.conjugate(), mu.conjugate());
    (0..=lam.part(0) as usize).map(|j| lc.part(j) - mc.part(j)).collect()
}

/// Hall-Littlewood `psi_{lam/mu}(v) = prod (1 - v^{m_j(mu)})` over `j` with `theta'_j = 0`, `theta'_{j+1} = 1`.
pub fn psi_hl(lam: &Partition, mu: &Partition, v: Exp) -> QQt {
    if !horizontal_strip(lam, mu) {
        return QQt::zero();
    }
    let th = theta_cols(lam, mu);
    let mut acc = QQt::one();
    for j in 1..th.len() {
        if th[j - 1] == 0 && th[j] == 1 {
            let m = mu.multiplicity(j as i64) as u32;
            acc = &acc * &QQt::one_minus(v.0 * m, v.1 * m);
        }
    }
    acc
}

/// Hall-Littlewood `phi_{lam/mu}(v) = prod (1 - v^{m_j(lam)})` over `j` with `theta'_j = 1`, `theta'_{j+1} = 0`.
pub fn phi_hl(lam: &Partition, mu: &Partition, v: Exp) -> QQt {
    if !horizontal_strip(lam, mu) {
        return QQt::zero();
    }
    let th = theta_cols(lam, mu);
    let mut acc = QQt::one();
    for j in 1..th.len() {
        if th[j - 1] == 1 && th[j] == 0 {
            let m = lam.multiplicity(j as i64) as u32;
            acc = &acc * &QQt::one_minus(v.0 * m, v.1 * m);
        }
    }
    acc
}

/// `g(gamma) = t^{|gamma|} prod_i (q/t; q)_{gamma_i} / (q; q)_{gamma_i}`, in squared variables on request.
pub fn g_coeff(gamma: &Partition, squared: bool) -> QQt {
    let mut acc = QQt::one();
    for &g in gamma.parts() {
        for m in 1..=g {
            let num = &QQt::t() - &QQt::monomial(1, m, 0);
            acc = &acc * &num.div(&QQt::one_minus(m as u32, 0)).expect("nonzero");
        }
    }
    if squared {
        acc.square_vars()
    } else {
        acc
    }
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `sk_{lam/mu}(v) = v^{sum_j C(lam'_j - mu'_j, 2)} prod_j [lam'_j - mu'_{j+1} choose m_j(mu)]_v`.
pub fn sk(lam: &Partition, mu: &Partition, v: Exp) -> QQt {
    if !lam.contains(mu) {
        return QQt::zero();
    }
    let (lc, mc) = (lam.conjugate(), mu.conjugate());
    let cols = lam.part(0).max(1) as usize;
    let e: i64 = (0..cols).map(|j| binom2(lc.part(j) - mc.part(j))).sum();
    let mut acc = QQt::monomial(1, v.0 as i64 * e, v.1 as i64 * e);
    for j in 0..cols {
        let m = mu.multiplicity(j as i64 + 1);
        acc = &acc * &qbinomial(lc.part(j) - mc.part(j + 1), m, v);
    }
    if sk_fault() && lam != mu {
        acc = &acc + &QQt::one();
    }
    acc
}

/// `sk` for a signature pair of lengths `n`, `n - 1` via the canonical shift.
pub fn sk_sig(lam: &Signature, mu: &Signature, v: Exp) -> QQt {
    let (l, m) = canonical_shift(lam, mu);
    match (l.to_partition(), m.to_partition()) {
        (Some(l), Some(m)) => sk(&l, &m, v),
        _ => QQt::zero(),
    }
}

/// `(x_1...x_{n-1})`-shift normalised so `mu >= 0`.
fn normalize_pair(beta: &Signature, mu: &Signature) -> (Signature, Signature) {
    let s = mu.min_part().unwrap_or(0);
    (beta.shifted(-s), mu.shifted(-s))
}

static OMEGA_EXP: Memo<(Partition, usize, i64), PExpansion> = Memo::new();

fn omega_expansion(mu: &Partition, n: usize, r: i64) -> Result<PExpansion> {
    OMEGA_EXP.get_or_try((mu.clone(), n, r), || {
        let sig = mu.to_signature(n)?;
        expand_in_p(&p_sig(&sig, Basis::Macdonald).mul(&cauchy_degree(r, n, false)), Basis::Macdonald)
    })
}

/// `Omega_{beta/mu}` in the base variables, read from the degree `|beta| - |mu|` part of the Cauchy product.
pub fn omega_base(beta: &Signature, mu: &Signature) -> Result<QQt> {
    if beta.len() != mu.len() {
        return Err(Error::InvalidInput(format!("omega needs equal lengths, got {beta} and {mu}")));
    }
    if !beta.contains(mu) {
        return Ok(QQt::zero());
    }
    if mu.is_empty() {
        return Ok(QQt::one());
    }
    let (b, m) = normalize_pair(beta, mu);
    let r = b.size() - m.size();
    let e = omega_expansion(&part(&m)?, m.len(), r)?;
    Ok(e.get(&b).cloned().unwrap_or_else(QQt::zero))
}

/// `Omega_{beta/mu}` from the honest product `P_mu * cauchy_factor(D)` truncated at degree `d`.
pub fn omega(beta: &Signature, mu: &Signature, d: i64, squared: bool) -> Result<QQt> {
    if beta.len() != mu.len() {
        return Err(Error::InvalidInput(format!("omega needs equal lengths, got {beta} and {mu}")));
    }
    let r = beta.size() - mu.size();
    if d < r {
        return Err(Error::CutoffTooSmall { cutoff: d, needed: r });
    }
    let n = mu.len();
    let prod = p_sig(mu, Basis::Macdonald).mul(&cauchy_factor(n, d, false));
    let e = expand_in_p(&prod, Basis::Macdonald)?;
    let v = e.get(beta).cloned().unwrap_or_else(QQt::zero);
    Ok(if squared { v.square_vars() } else { v })
}

/// How `c_{lam,mu}(q,t)` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CqtMethod {
    /// The `d_mu / d_beta * psi * Omega` sum.
    PsiOmega,
    /// Read from the `P`-expansion of a slice of `R_n P_lam`.
    Extract,
}

fn check_lengths(lam: &Signature, mu: &Signature) -> Result<()> {
    if lam.is_empty() || mu.len() + 1 != lam.len() {
        return Err(Error::InvalidInput(format!(
            "need lengths n and n-1, got {} and {}",
            lam.len(),
            mu.len()
        )));
    }
    Ok(())
}

static PSI_OMEGA: Memo<(Signature, Signature), QQt> = Memo::new();

fn c_psi_omega_base(lam: &Signature, mu: &Signature) -> Result<QQt> {
    let (l, m) = canonical_shift(lam, mu);
    PSI_OMEGA.get_or_try((l.clone(), m.clone()), || {
        let lp = part(&l)?;
        let n1 = m.len();
        let dm = d_lambda(m.parts(), n1);
        let mut acc = QQt::zero();
        for beta in signatures_between(&l, &m) {
            let ps = psi(&lp, &part(&beta)?);
            if ps.is_zero() {
                continue;
            }
            let ratio = dm.div(&d_lambda(beta.parts(), n1))?.to_qqt()?;
            let om = omega_base(&beta, &m)?;
            acc = &acc + &(&(&ps * &ratio) * &om);
        }
        Ok(acc)
    })
}

static SLICES: Memo<(Partition, usize, i64), PExpansion> = Memo::new();

/// The `x_n^d` coefficient of `R_n P_lam` in base variables, where
/// `R_n = sum_gamma g(gamma) x_n^{|gamma|} m_{-gamma}(x_1..x_{n-1})`.
pub fn branching_slice(lam: &Signature, d: i64) -> Result<LaurentSym> {
    if lam.is_empty() {
        return Err(Error::InvalidInput("empty signature".into()));
    }
    let m = lam.min_part().unwrap_or(0);
    let l0 = part(&lam.shifted(-m))?;
    let n = lam.len();
    let d0 = d - m;
    Ok(slice_rec(&l0, n, d0).shift_all(m))
}

fn slice_rec(l0: &Partition, n: usize, d0: i64) -> LaurentSym {
    let mut out = LaurentSym::zero(n - 1);
    for beta in enumerate_between(l0, &Partition::empty(), n) {
        let r = d0 - l0.size() + beta.size();
        if r < 0 {
            continue;
        }
        let ps = psi(l0, &beta);
        let pb = p_sig(&beta.to_signature(n - 1).expect("length at most n-1"), Basis::Macdonald);
        for gamma in partitions(r, n - 1) {
            let neg: Vec<i64> = gamma.parts().iter().map(|x| -x).collect();
            let mg = monomial_sym(&neg, n - 1).expect("length checked");
            out.axpy(&(&ps * &g_coeff(&gamma, false)), &mg.mul(&pb));
        }
    }
    out
}

fn slice_expansion(l0: &Partition, n: usize, d0: i64) -> Result<PExpansion> {
    SLICES.get_or_try((l0.clone(), n, d0), || expand_in_p(&slice_rec(l0, n, d0), Basis::Macdonald))
}

fn c_extract_base(lam: &Signature, mu: &Signature, cutoff: Option<i64>) -> Result<QQt> {
    let m = lam.min_part().unwrap_or(0);
    let (l0, mu0) = (lam.shifted(-m), mu.shifted(-m));
    let d0 = l0.size() - mu0.size();
    if let Some(c) = cutoff {
        if d0 > c {
            return Err(Error::CutoffTooSmall { cutoff: c, needed: d0 });
        }
    }
    if d0 < 0 {
        return Ok(QQt::zero());
    }
    let e = slice_expansion(&part(&l0)?, lam.len(), d0)?;
    Ok(e.get(&mu0).cloned().unwrap_or_else(QQt::zero))
}

/// `c_{lam,mu}` in base variables, so that `c_{lam,mu}(q,t) = c_qt_base(q^2, t^2)`.
pub fn c_qt_base(lam: &Signature, mu: &Signature, method: CqtMethod, cutoff: Option<i64>) -> Result<QQt> {
    check_lengths(lam, mu)?;
    match method {
        CqtMethod::PsiOmega => {
            if let Some(c) = cutoff {
                let (l, m) = canonical_shift(lam, mu);
                let needed: i64 = m.parts().iter().zip(l.parts()).map(|(a, b)| b - a).sum();
                if needed > c {
                    return Err(Error::CutoffTooSmall { cutoff: c, needed });
                }
            }
            c_psi_omega_base(lam, mu)
        }
        CqtMethod::Extract => c_extract_base(lam, mu, cutoff),
    }
}

/// The branching coefficient `c_{lam,mu}(q,t)`.
pub fn c_qt(lam: &Signature, mu: &Signature, method: CqtMethod, cutoff: Option<i64>) -> Result<QQt> {
    Ok(c_qt_base(lam, mu, method, cutoff)?.square_vars())
}

/// Which expression for `c_{lam,mu}(t)` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChlForm {
    /// `q -> 0` of the generic coefficient.
    Limit,
    /// `sum_beta phi_{lam/beta} t^{2|beta/mu|} sk_{beta/mu}`, normalised by `b_mu / b_lam`.
    Sum,
    /// `(b_mu / b_lam)(1 - t^2) sk_{lam/mu}(t^2)`.
    Ratio,
    /// The product of Gaussian binomials.
    Product,
}

/// `c_{lam,mu}(t)`, evaluated after the canonical shift.
pub fn c_hl(lam: &Signature, mu: &Signature, form: ChlForm) -> Result<QQt> {
    check_lengths(lam, mu)?;
    if form == ChlForm::Limit {
        return c_qt(lam, mu, CqtMethod::PsiOmega, None)?.limit_q0();
    }
    let (ls, ms) = canonical_shift(lam, mu);
    if !ls.contains(&ms) {
        return Ok(QQt::zero());
    }
    let (l, m) = (part(&ls)?, part(&ms)?);
    let norm = || b_hl(&m, T2).div(&b_hl(&l, T2));
    Ok(match form {
        ChlForm::Limit => unreachable!(),
        ChlForm::Sum => {
            let mut acc = QQt::zero();
            for beta in signatures_between(&ls, &ms) {
                let bp = part(&beta)?;
                let e = 2 * (beta.size() - ms.size());
                acc = &acc + &(&(&phi_hl(&l, &bp, T2) * &QQt::monomial(1, 0, e)) * &sk(&bp, &m, T2));
            }
            &norm()? * &acc
        }
        ChlForm::Ratio => &(&norm()? * &QQt::one_minus(0, 2)) * &sk(&l, &m, T2),
        ChlForm::Product => {
            let (lc, mc) = (l.conjugate(), m.conjugate());
            let cols = l.part(0) as usize;
            let e: i64 = (0..cols).map(|j| binom2(lc.part(j) - mc.part(j))).sum();
            let mut acc = QQt::monomial(1, 0, 2 * e);
            for j in 0..cols {
                acc = &acc * &qbinomial(lc.part(j) - mc.part(j + 1), lc.part(j) - lc.part(j + 1), T2);
            }
            acc
        }
    })
}

/// `c_{lam,mu}(q, q^k)` through Pieri coefficients in the `t = q^k` basis.
pub fn a_pieri_route(lam: &Signature, mu: &Signature, k: u32) -> Result<QQt> {
    check_lengths(lam, mu)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let n1 = mu.len();
    let shift = k as i64 - 1;
    let delta = mu.shifted(shift);
    let basis = Basis::MacdonaldTqk(k);
    let lower = Signature::new(lam.parts()[1..].to_vec())?;
    let mut acc = QQt::zero();
    for beta in signatures_between(lam, &lower) {
        let r = beta.size() - mu.size();
        if r < 0 {
            continue;
        }
        let ps = psi_sig(lam, &beta).at_t_eq_qk(k)?;
        if ps.is_zero() {
            continue;
        }
        let pb = p_sig(&beta, basis);
        for gamma in partitions(r, n1) {
            let g = g_coeff(&gamma, false).at_t_eq_qk(k)?;
            let gp: Vec<i64> = (0..n1).map(|i| shift - gamma.part(i)).collect();
            let prod = monomial_sym(&gp, n1)?.mul(&pb);
            let e = expand_in_p(&prod, basis)?;
            if let Some(c) = e.get(&delta) {
                acc = &acc + &(&(&g * &ps) * c);
            }
        }
    }
    Ok(acc.square_vars())
}

/// Diagonal coefficient attached to a Gelfand-Tsetlin pattern at `t = q^k`; zero off the image of the index map.
pub fn c_gt_pattern(pattern: &GtPattern, k: u32) -> Result<QQt> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let Some(chain) = gt_preimage(pattern, k) else {
        return Ok(QQt::zero());
    };
    let mut acc = QQt::one();
    for w in chain.levels().windows(2) {
        acc = &acc * &c_qt(&w[0], &w[1], CqtMethod::PsiOmega, None)?.at_t_eq_qk(k)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::T;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn s(v: &[i64]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }
    fn frac(n: QQt, d: QQt) -> QQt {
        n.div(&d).unwrap()
    }

    #[test]
    fn psi_examples() {
        let expect = frac(&QQt::one_minus(0, 1) * &(&QQt::one() + &QQt::q()), QQt::one_minus(1, 1));
        assert_eq!(psi(&p(&[2]), &p(&[1])), expect);
        assert!(psi(&p(&[2]), &p(&[])).is_one());
        assert!(psi(&p(&[2, 1]), &p(&[2, 1])).is_one());
        assert!(psi(&p(&[2, 2]), &p(&[1])).is_zero());
    }

    #[test]
    fn psi_oracles_agree() {
        for lam in crate::partition::partitions_up_to(5, 4) {
            for mu in crate::partition::subpartitions(&lam) {
                assert_eq!(psi(&lam, &mu), psi_armleg(&lam, &mu), "{lam} / {mu}");
                assert_eq!(psi(&lam, &mu).limit_q0().unwrap(), psi_hl(&lam, &mu, T), "{lam} / {mu}");
                assert_eq!(phi_qt(&lam, &mu).limit_q0().unwrap(), phi_hl(&lam, &mu, T), "{lam} / {mu}");
            }
        }
    }

    #[test]
    fn hl_branching_values() {
        assert_eq!(psi_hl(&p(&[2]), &p(&[1]), T), QQt::one_minus(0, 1));
        assert_eq!(phi_hl(&p(&[2, 1]), &p(&[2]), T), QQt::one_minus(0, 1));
        assert_eq!(phi_hl(&p(&[2, 1]), &p(&[1]), T), QQt::one_minus(0, 1));
        assert!(phi_hl(&p(&[2, 1]), &p(&[2, 1]), T).is_one());
    }

    #[test]
    fn g_values() {
        assert!(g_coeff(&p(&[]), true).is_one());
        let g1 = frac(&QQt::monomial(1, 0, 2) - &QQt::monomial(1, 2, 0), QQt::one_minus(2, 0));
        assert_eq!(g_coeff(&p(&[1]), true), g1);
        for l in 1..4 {
            assert_eq!(g_coeff(&p(&[l]), true).limit_q0().unwrap(), QQt::monomial(1, 0, 2 * l));
        }
    }

    #[test]
    fn sk_values() {
        assert!(sk(&p(&[2, 1]), &p(&[2, 1]), T).is_one());
        assert_eq!(sk(&p(&[1, 1]), &p(&[1]), T), &QQt::one() + &QQt::t());
        assert!(sk(&p(&[2]), &p(&[1]), T).is_one());
        assert!(sk(&p(&[1]), &p(&[2]), T).is_zero());
    }

    #[test]
    fn omega_values() {
        assert!(omega_base(&s(&[1]), &s(&[1])).unwrap().is_one());
        let g1 = frac(&QQt::monomial(1, 0, 2) - &QQt::monomial(1, 2, 0), QQt::one_minus(2, 0));
        assert_eq!(omega(&s(&[1]), &s(&[0]), 3, true).unwrap(), g1);
        assert_eq!(omega_base(&s(&[2, 1]), &s(&[1, 0])).unwrap(), omega(&s(&[2, 1]), &s(&[1, 0]), 2, false).unwrap());
        assert!(matches!(omega(&s(&[2]), &s(&[0]), 1, true), Err(Error::CutoffTooSmall { .. })));
    }

    #[test]
    fn c_examples() {
        let expect = frac(
            &(&QQt::one() + &QQt::monomial(1, 0, 2)) - &QQt::monomial(2, 2, 0),
            QQt::one_minus(2, 0),
        );
        for method in [CqtMethod::PsiOmega, CqtMethod::Extract] {
            assert!(c_qt(&s(&[1, 0]), &s(&[1]), method, None).unwrap().is_one());
            assert_eq!(c_qt(&s(&[1, 0]), &s(&[0]), method, None).unwrap(), expect);
            assert_eq!(c_qt(&s(&[2, 1]), &s(&[1]), method, None).unwrap(), expect);
        }
        assert!(expect.at_t_eq_qk(1).unwrap().is_one());
        assert!(matches!(
            c_qt(&s(&[3, 0]), &s(&[0]), CqtMethod::Extract, Some(2)),
            Err(Error::CutoffTooSmall { .. })
        ));
    }

    #[test]
    fn hl_closed_forms() {
        let one_t2 = &QQt::one() + &QQt::monomial(1, 0, 2);
        let t2t4 = &QQt::monomial(1, 0, 2) + &QQt::monomial(1, 0, 4);
        for form in [ChlForm::Limit, ChlForm::Sum, ChlForm::Ratio, ChlForm::Product] {
            assert_eq!(c_hl(&s(&[2, 1]), &s(&[1]), form).unwrap(), one_t2, "{form:?}");
            assert_eq!(c_hl(&s(&[2, 1]), &s(&[0]), form).unwrap(), t2t4, "{form:?}");
            assert!(c_hl(&s(&[2, 1]), &s(&[2]), form).unwrap().is_one(), "{form:?}");
        }
    }

    #[test]
    fn pieri_route_examples() {
        assert!(a_pieri_route(&s(&[1, 0]), &s(&[1]), 1).unwrap().is_one());
        let v = a_pieri_route(&s(&[1, 0]), &s(&[0]), 2).unwrap();
        assert_eq!(v, QQt::one_minus(2, 0));
        let c = c_qt(&s(&[1, 0]), &s(&[0]), CqtMethod::PsiOmega, None).unwrap();
        assert_eq!(c.at_t_eq_qk(2).unwrap(), v);
    }
}

//! Frozen values for small cases.

use qtbranch::branching::{
    a_pieri_route, c_hl, c_qt, g_coeff, omega, phi_hl, psi, psi_hl, sk, ChlForm, CqtMethod,
};
use qtbranch::padic::{alpha, count_chains, enumerate_subgroups};
use qtbranch::partition::{enumerate_between, gt_index, Chain, Partition, Signature};
use qtbranch::qt::{qbinomial, T, T2};
use qtbranch::sym::{p_poly, pieri_coeff, Basis, LaurentSym};
use qtbranch::QQt;

fn p(v: &[i64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn s(v: &[i64]) -> Signature {
    Signature::new(v.to_vec()).unwrap()
}

fn q(c: i64, a: i64, b: i64) -> QQt {
    QQt::monomial(c, a, b)
}

fn sum(terms: &[(i64, i64, i64)]) -> QQt {
    terms.iter().fold(QQt::zero(), |acc, &(c, a, b)| &acc + &q(c, a, b))
}

fn frac(num: &[(i64, i64, i64)], den: &[(i64, i64, i64)]) -> QQt {
    sum(num).div(&sum(den)).unwrap()
}

/// `(1 + q)(1 - t)/(1 - q t)`.
fn psi_two_one() -> QQt {
    frac(&[(1, 0, 0), (1, 1, 0), (-1, 0, 1), (-1, 1, 1)], &[(1, 0, 0), (-1, 1, 1)])
}

fn c(lam: &[i64], mu: &[i64]) -> QQt {
    c_qt(&s(lam), &s(mu), CqtMethod::PsiOmega, None).unwrap()
}

#[test]
fn between_examples() {
    assert_eq!(enumerate_between(&p(&[2, 1]), &p(&[1]), 2), vec![p(&[1]), p(&[2])]);
    assert_eq!(enumerate_between(&p(&[1]), &p(&[]), 2), vec![p(&[]), p(&[1])]);
}

#[test]
fn gt_index_example() {
    let chain = Chain::new(vec![s(&[1, 0]), s(&[0])]).unwrap();
    let pat = gt_index(&chain, 2).unwrap();
    assert_eq!(pat.display_rows(), vec![vec!["3/2".to_string(), "-1/2".to_string()], vec!["1/2".to_string()]]);
}

#[test]
fn gaussian_binomial() {
    assert_eq!(qbinomial(4, 2, T), sum(&[(1, 0, 0), (1, 0, 1), (2, 0, 2), (1, 0, 3), (1, 0, 4)]));
}

#[test]
fn printed_value_limit() {
    let f = &(&(&QQt::one() - &QQt::q()) - &q(1, 2, 0)) + &QQt::t();
    let v = (&(&QQt::one_minus(0, 1) * &QQt::one_minus(1, 2)) * &f).div(&QQt::one_minus(1, 1)).unwrap();
    assert_eq!(v.limit_q0().unwrap(), sum(&[(1, 0, 0), (-1, 0, 2)]));
}

#[test]
fn macdonald_two() {
    let f = p_poly(&p(&[2]), 2, Basis::Macdonald).unwrap();
    let mut want = LaurentSym::monomial(vec![2, 0], QQt::one());
    want.add_term(vec![0, 2], QQt::one());
    want.add_term(vec![1, 1], psi_two_one());
    assert_eq!(f, want);
}

#[test]
fn hall_littlewood_examples() {
    let f = p_poly(&p(&[2, 1]), 2, Basis::HallLittlewood).unwrap();
    let mut want = LaurentSym::monomial(vec![2, 1], QQt::one());
    want.add_term(vec![1, 2], QQt::one());
    assert_eq!(f, want);
    let g = p_poly(&p(&[2]), 2, Basis::HallLittlewood).unwrap();
    assert_eq!(g.coeff(&[1, 1]), sum(&[(1, 0, 0), (-1, 0, 1)]));
}

#[test]
fn pieri_value() {
    let want = frac(&[(1, 0, 0), (1, 0, 1), (-1, 1, 0), (-1, 1, 1)], &[(1, 0, 0), (-1, 1, 1)]);
    assert_eq!(pieri_coeff(&[1], &s(&[1, 0]), &s(&[1, 1]), Basis::Macdonald).unwrap(), want);
    assert!(pieri_coeff(&[1], &s(&[1, 0]), &s(&[2, 0]), Basis::Macdonald).unwrap().is_one());
}

#[test]
fn branching_coefficients() {
    assert_eq!(psi(&p(&[2]), &p(&[1])), psi_two_one());
    assert!(psi(&p(&[2]), &p(&[])).is_one());
    assert_eq!(psi_hl(&p(&[2]), &p(&[1]), T), sum(&[(1, 0, 0), (-1, 0, 1)]));
    assert_eq!(phi_hl(&p(&[2, 1]), &p(&[2]), T), sum(&[(1, 0, 0), (-1, 0, 1)]));
    assert_eq!(phi_hl(&p(&[2, 1]), &p(&[1]), T), sum(&[(1, 0, 0), (-1, 0, 1)]));
    assert_eq!(g_coeff(&p(&[3]), true).limit_q0().unwrap(), q(1, 0, 6));
    assert_eq!(omega(&s(&[1]), &s(&[0]), 1, true).unwrap(), frac(&[(1, 0, 2), (-1, 2, 0)], &[(1, 0, 0), (-1, 2, 0)]));
    assert_eq!(sk(&p(&[1, 1]), &p(&[1]), T), sum(&[(1, 0, 0), (1, 0, 1)]));
    assert!(sk(&p(&[2]), &p(&[1]), T).is_one());
}

#[test]
fn generic_coefficients() {
    let golden = frac(&[(1, 0, 0), (1, 0, 2), (-2, 2, 0)], &[(1, 0, 0), (-1, 2, 0)]);
    assert!(c(&[1, 0], &[1]).is_one());
    assert_eq!(c(&[1, 0], &[0]), golden);
    assert!(golden.at_q_eq_t().unwrap().is_one());
    assert_eq!(golden.limit_q0().unwrap(), sum(&[(1, 0, 0), (1, 0, 2)]));
}

#[test]
fn q0_coefficients() {
    let hl = |mu: &[i64]| c_hl(&s(&[2, 1]), &s(mu), ChlForm::Product).unwrap();
    assert_eq!(hl(&[1]), sum(&[(1, 0, 0), (1, 0, 2)]));
    assert_eq!(hl(&[0]), sum(&[(1, 0, 2), (1, 0, 4)]));
    assert!(hl(&[2]).is_one());
}

#[test]
fn pieri_route_values() {
    assert!(a_pieri_route(&s(&[1, 0]), &s(&[1]), 1).unwrap().is_one());
    assert_eq!(a_pieri_route(&s(&[1, 0]), &s(&[0]), 2).unwrap(), sum(&[(1, 0, 0), (-1, 2, 0)]));
    let c21 = c(&[2, 1], &[1]).at_t_eq_qk(2).unwrap();
    assert_eq!(a_pieri_route(&s(&[2, 1]), &s(&[1]), 2).unwrap(), c21);
}

#[test]
fn subgroup_counts() {
    assert_eq!(enumerate_subgroups(&p(&[1, 1]), 3, 243).unwrap().len(), 6);
    assert_eq!(enumerate_subgroups(&p(&[2]), 3, 243).unwrap().len(), 3);
    assert_eq!(alpha(&p(&[1, 1]), &p(&[1]), 3, 243).unwrap(), 4);
    assert_eq!(alpha(&p(&[2]), &p(&[1]), 3, 243).unwrap(), 1);
    assert_eq!(count_chains(&p(&[1, 1]), &[p(&[1])], 3, 243).unwrap(), 4);
}

#[test]
fn squared_specialization() {
    assert_eq!(sk(&p(&[1, 1]), &p(&[1]), T2), sum(&[(1, 0, 0), (1, 0, 2)]));
}

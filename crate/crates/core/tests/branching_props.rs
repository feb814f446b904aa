use proptest::prelude::*;

use qtbranch::branching::{
    c_hl, c_qt, omega, trace_series, BranchTable, ChlForm, CqtMethod, TableParams, TraceSeries,
};
use qtbranch::padic::{alpha, count_chains, DEFAULT_MAX_ORDER};
use qtbranch::partition::{
    chains_in_window, gt_index, gt_preimage, interlaces, partitions_up_to, subpartitions, GtPattern, Partition,
    Signature,
};
use qtbranch::QQt;

/// `(lam, mu)` with `lam` of length `n` and `mu` of length `n - 1`, both partitions.
fn pair(max_size: i64) -> impl Strategy<Value = (Signature, Signature)> {
    (2usize..=3).prop_flat_map(move |n| {
        let lams = partitions_up_to(max_size, n);
        let mus = partitions_up_to(max_size, n - 1);
        (prop::sample::select(lams), prop::sample::select(mus))
            .prop_map(move |(l, m)| (l.to_signature(n).unwrap(), m.to_signature(n - 1).unwrap()))
    })
}

fn c(lam: &Signature, mu: &Signature) -> QQt {
    c_qt(lam, mu, CqtMethod::PsiOmega, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shift_invariance((lam, mu) in pair(4), m in prop::sample::select(vec![-1i64, 1, 2])) {
        prop_assert_eq!(c(&lam.shifted(m), &mu.shifted(m)), c(&lam, &mu));
    }

    #[test]
    fn methods_agree((lam, mu) in pair(3)) {
        let d = lam.size() - mu.size();
        prop_assume!(d >= 0);
        prop_assert_eq!(c_qt(&lam, &mu, CqtMethod::Extract, Some(d)).unwrap(), c(&lam, &mu));
    }

    #[test]
    fn q0_limit_matches_closed_forms((lam, mu) in pair(4)) {
        let limit = c_hl(&lam, &mu, ChlForm::Limit).unwrap();
        prop_assert_eq!(&limit, &c(&lam, &mu).limit_q0().unwrap());
        for form in [ChlForm::Sum, ChlForm::Ratio, ChlForm::Product] {
            prop_assert_eq!(&c_hl(&lam, &mu, form).unwrap(), &limit, "{:?}", form);
        }
    }

    #[test]
    fn schur_degeneration((lam, mu) in pair(4)) {
        let want = if interlaces(&lam, &mu).unwrap() { QQt::one() } else { QQt::zero() };
        prop_assert_eq!(c(&lam, &mu).at_q_eq_t().unwrap(), want);
    }

    #[test]
    fn omega_is_stable(beta in prop::sample::select(partitions_up_to(4, 2)), pick in any::<prop::sample::Index>(), extra in 1i64..=2) {
        let subs = subpartitions(&beta);
        let mu = pick.get(&subs);
        let (b, m) = (beta.to_signature(2).unwrap(), mu.to_signature(2).unwrap());
        let d = beta.size() - mu.size();
        prop_assert_eq!(omega(&b, &m, d, true).unwrap(), omega(&b, &m, d + extra, true).unwrap());
    }

    #[test]
    fn gt_index_gives_patterns(lam in prop::sample::select(partitions_up_to(3, 3)), k in 1u32..=3) {
        let sig = lam.to_signature(3).unwrap();
        for chain in chains_in_window(&sig, 2) {
            let Ok(pat) = gt_index(&chain, k) else { continue };
            prop_assert!(GtPattern::from_doubled(pat.doubled_rows().to_vec()).is_ok());
            prop_assert_eq!(gt_preimage(&pat, k), Some(chain));
        }
    }

    #[test]
    fn single_type_chains_are_alpha(lam in prop::sample::select(partitions_up_to(4, 4)), pick in any::<prop::sample::Index>()) {
        let subs = subpartitions(&lam);
        let mu: &Partition = pick.get(&subs);
        prop_assert_eq!(
            count_chains(&lam, std::slice::from_ref(mu), 3, DEFAULT_MAX_ORDER).unwrap(),
            alpha(&lam, mu, 3, DEFAULT_MAX_ORDER).unwrap()
        );
    }
}

#[test]
fn branch_tables_are_deterministic_and_round_trip() {
    let lam = Signature::new(vec![2, 1, 0]).unwrap();
    for params in [TableParams::Generic, TableParams::TEqQk { k: 2 }, TableParams::Q0] {
        let a = BranchTable::build(&lam, 3, params).unwrap();
        let b = BranchTable::build(&lam, 3, params).unwrap();
        let (sa, sb) = (serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(sa, sb);
        assert_eq!(serde_json::from_str::<BranchTable>(&sa).unwrap(), a);
    }
}

#[test]
fn trace_series_round_trip() {
    let tr = trace_series(&Signature::new(vec![1, 0, 0]).unwrap(), 2, true).unwrap();
    let s = serde_json::to_string(&tr).unwrap();
    assert_eq!(serde_json::from_str::<TraceSeries>(&s).unwrap(), tr);
}

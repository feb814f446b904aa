//! Branching coefficients, trace series and the identity checks built on them.

pub mod coeffs;
pub mod table;
pub mod trace;
pub mod verify;

pub use coeffs::{
    a_pieri_route, branching_slice, c_gt_pattern, c_hl, c_qt, c_qt_base, g_coeff, omega, omega_base, phi_hl, phi_qt,
    psi, psi_armleg, psi_hl, psi_sig, set_sk_fault, sk, sk_sig, ChlForm, CqtMethod,
};
pub use table::{BranchTable, TableParams};
pub use trace::{chain_constant, chain_sum, divide_series, h_degree, trace_series, TraceSeries};
pub use verify::{run_suite, run_suites, Case, Report, Suite, VerifyConfig};

//! Symmetric Laurent polynomials over `Q(q,t)` and the bases built on them.

pub mod bases;
pub mod inner;
pub mod laurent;
pub mod operator;

pub use bases::{
    cauchy_degree, cauchy_factor, expand_in_p, g_poly, monomial_sym, p_poly, p_sig, pieri_coeff, reconstruct, Basis,
    PExpansion,
};
pub use inner::{b_armleg, b_hat, b_hl, ct_inner, d_lambda};
pub use laurent::LaurentSym;
pub use operator::{div_linear, eigenvalue, macdonald_operator, schur_bialternant};

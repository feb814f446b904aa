//! Exact arithmetic in `Q(q, t)` and the q-series it is built from.

pub mod poly;
pub mod qqt;
pub mod series;

pub use poly::Poly;
pub use qqt::QQt;
pub use series::{phi_r, qbinomial, qpochhammer, InfProd, QMonomial};

/// The variable `t` as an exponent pair.
pub const T: poly::Exp = (0, 1);
/// The variable `t^2` as an exponent pair.
pub const T2: poly::Exp = (0, 2);

//! Exact branching coefficients for Macdonald trace functions, their
//! Gelfand-Tsetlin expansions, and the Hall-Littlewood limit `q -> 0`.

pub mod branching;
pub mod error;
pub mod json;
mod memo;
pub mod padic;
pub mod partition;
pub mod qt;
pub mod sym;

pub use error::{Error, Result};
pub use qt::{Poly, QQt};

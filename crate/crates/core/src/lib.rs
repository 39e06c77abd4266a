//! Numerical toolkit for moments of S_n(t), the iterated integrals of the
//! argument of the Riemann zeta function on the critical line, and for the
//! extremal functions of exponential type used to bound them.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod argmoments;
pub mod constants;
pub mod error;
pub mod explicitformula;
pub mod extremal;
pub mod quadrature;
pub mod specialfn;
pub mod sum;
pub mod zerodata;
pub mod zetakernel;

pub use error::{Error, Result};
pub use extremal::{Approximant, ApproximantSpec, Side};
pub use quadrature::QuadratureConfig;
pub use specialfn::{eval_f, MomentOrder};
pub use zerodata::{load_zero_table, ZeroTable};

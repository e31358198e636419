//! Scalar tower shared by every evaluation path.
//!
//! Group-point evaluation runs over [`Complex64`](num_complex::Complex64),
//! over [`Jet2`] of complex numbers (first and second derivatives along one
//! direction) or over `Jet2<Jet2<Complex64>>` (mixed fourth-order
//! coefficients, used for the bitension). Exact rationals are only used by the
//! coefficient solvers in [`crate::construct`].

mod jet;
mod rational;
mod scalar;

pub use jet::Jet2;
pub use rational::{parse_rational, rat, rational_to_f64, Rational};
pub use scalar::{pow, Ring, Scalar};

//! Construction and verification of complex-valued proper biharmonic functions
//! and harmonic morphisms on the compact matrix groups U(n), SO(n) and Sp(n).
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: the scalar tower (complex numbers, exact rationals and
//!   second-order truncated Taylor jets that nest).
//! - [`groups`]: group descriptions, orthonormal Lie algebra bases, seeded
//!   point sampling and second-order truncations of `p·exp(sZ)`.
//! - [`forms`]: linear matrix-coefficient forms, compatible quadruples
//!   `(P_j, Q, R, S_j)`, evaluable rational expressions and the harmonic /
//!   biharmonic classification of quotients `P/Q`.
//! - [`operators`]: the tension field τ, the conformality operator κ and the
//!   bitension τ², all computed numerically from jets along one-parameter
//!   subgroups.
//! - [`construct`]: exact-rational coefficient solvers for harmonic and
//!   biharmonic multi-homogeneous polynomials, eigenfamilies and harmonic
//!   morphisms.
//! - [`verify`]: verification campaigns that turn operator residuals into
//!   [`report::VerificationReport`]s.

pub mod algebra;
pub mod construct;
pub mod error;
pub mod forms;
pub mod groups;
pub mod operators;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;

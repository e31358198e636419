//! Exact coefficient solvers and the builders that turn their tables into
//! evaluable functions.
//!
//! A table `c` over the box `0 ≤ k_i ≤ d_i` stands for
//! `Φ(f_1, …, f_m) = Σ_k c_k Π_i f_i^{d_i − k_i} τ(f_i)^{k_i}`. The tension
//! field acts on tables linearly (`c ↦ c̃`, see [`tilde_c`]); harmonic tables
//! are its kernel and biharmonic tables the kernel of its square.

mod build;
mod solve;
mod table;

pub use build::{
    build_phi, eigen_constants, eigenfamily_ek, morphism_from_eigenfamily, mu_rational, orthogonal_family,
    proper_indices, tau_symbolic, Polynomial,
};
pub use solve::{
    biharmonic_coeffs, harmonic_coeffs, mat_mul, multi_biharmonic_family, multi_harmonic_family,
    tension_restriction_matrix, tilde_c,
};
pub use table::{box_indices, CoeffTable, FamilyKind, MultiIndex, SolutionFamily};

//! Building blocks: linear forms in the matrix coefficients, compatible
//! quadruples `(P_j, Q, R, S_j)`, quotients `f = P/Q` with their closed-form
//! tension fields, and the harmonic / biharmonic classification.

mod classify;
mod expr;
mod quadruple;

pub use classify::{classify, columns_pairwise_dependent, isotropic, Classification, ClassifyInput};
pub use expr::{Expr, DOMAIN_EPS};
pub use quadruple::{
    make_quadruple, KappaRelation, Layout, QuadrupleData, QuadrupleFamily, QuadrupleOptions,
    SpChoice,
};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::groups::{CMatrix, GroupKind, GroupSpec, JetMatrix};

/// Which block of coordinates a form reads: the `z` block (all of U(n) and
/// SO(n), top-left of Sp(n)) or the `w` block (top-right of Sp(n)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    Z,
    W,
}

/// `Σ c_{jα} z_{jα} (+ Σ d_{jα} w_{jα})`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm {
    label: String,
    coeff_z: CMatrix,
    coeff_w: Option<CMatrix>,
    /// Non-zero coefficients against row-major ambient indices.
    terms: Vec<(usize, Complex64)>,
}

impl LinearForm {
    pub fn new(
        spec: &GroupSpec,
        label: impl Into<String>,
        coeff_z: CMatrix,
        coeff_w: Option<CMatrix>,
    ) -> Result<Self> {
        let n = spec.n;
        if coeff_z.shape() != (n, n) {
            return Err(Error::ShapeError(format!(
                "z coefficients must be {n}×{n}, got {}×{}",
                coeff_z.nrows(),
                coeff_z.ncols()
            )));
        }
        if let Some(w) = &coeff_w {
            if spec.kind != GroupKind::QuaternionicUnitary {
                return Err(Error::ShapeError(format!("w coefficients only exist on Sp(n), not {spec}")));
            }
            if w.shape() != (n, n) {
                return Err(Error::ShapeError(format!(
                    "w coefficients must be {n}×{n}, got {}×{}",
                    w.nrows(),
                    w.ncols()
                )));
            }
        }
        let d = spec.ambient_dim;
        let mut terms = Vec::new();
        for j in 0..n {
            for a in 0..n {
                let c = coeff_z[(j, a)];
                if c.norm_sqr() > 0.0 {
                    terms.push((j * d + a, c));
                }
                if let Some(w) = &coeff_w {
                    let c = w[(j, a)];
                    if c.norm_sqr() > 0.0 {
                        terms.push((j * d + n + a, c));
                    }
                }
            }
        }
        Ok(Self {
            label: label.into(),
            coeff_z,
            coeff_w,
            terms,
        })
    }

    /// From the n×(coordinate columns) matrix: n×n for U/SO, n×2n for Sp
    /// (z columns first, then w columns).
    pub fn from_coordinate_matrix(spec: &GroupSpec, label: impl Into<String>, m: &CMatrix) -> Result<Self> {
        let n = spec.n;
        let cols = spec.coordinate_cols();
        if m.shape() != (n, cols) {
            return Err(Error::ShapeError(format!(
                "coefficient matrix must be {n}×{cols}, got {}×{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let z = m.columns(0, n).into_owned();
        let w = (cols > n).then(|| m.columns(n, n).into_owned());
        Self::new(spec, label, z, w)
    }

    /// `Σ_{j,α} row_j·col_α·y_{jα}` on the given block.
    pub fn rank_one(
        spec: &GroupSpec,
        label: impl Into<String>,
        block: Block,
        row: &[Complex64],
        col: &[Complex64],
    ) -> Result<Self> {
        let n = spec.n;
        for (name, v) in [("row", row), ("column", col)] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    what: format!("{name} vector"),
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let m = CMatrix::from_fn(n, n, |j, a| row[j] * col[a]);
        Self::on_block(spec, label, block, m)
    }

    /// The coordinate function `z_{jα}` or `w_{jα}` (0-based indices).
    pub fn coordinate(spec: &GroupSpec, block: Block, j: usize, alpha: usize) -> Result<Self> {
        let n = spec.n;
        if j >= n || alpha >= n {
            return Err(Error::ShapeError(format!("coordinate ({j},{alpha}) outside {n}×{n}")));
        }
        let mut m = CMatrix::zeros(n, n);
        m[(j, alpha)] = Complex64::new(1.0, 0.0);
        let name = match (block, spec.kind) {
            (Block::W, _) => "w",
            (Block::Z, GroupKind::SpecialOrthogonal) => "x",
            (Block::Z, _) => "z",
        };
        Self::on_block(spec, format!("{name}{}{}", j + 1, alpha + 1), block, m)
    }

    fn on_block(spec: &GroupSpec, label: impl Into<String>, block: Block, m: CMatrix) -> Result<Self> {
        let n = spec.n;
        match block {
            Block::Z => Self::new(spec, label, m, None),
            Block::W => {
                if spec.kind != GroupKind::QuaternionicUnitary {
                    return Err(Error::ShapeError(format!("w block only exists on Sp(n), not {spec}")));
                }
                Self::new(spec, label, CMatrix::zeros(n, n), Some(m))
            }
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn coeff_z(&self) -> &CMatrix {
        &self.coeff_z
    }

    pub fn coeff_w(&self) -> Option<&CMatrix> {
        self.coeff_w.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn l1_norm(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm()).sum()
    }

    pub fn eval<S: Scalar>(&self, x: &JetMatrix<S>) -> S {
        let mut acc = S::zero();
        for &(idx, c) in &self.terms {
            acc = acc + x.entries[idx].scale(c);
        }
        acc
    }

    pub fn expr(&self) -> Expr {
        Expr::form(self.clone())
    }
}

/// `f = P/Q`.
pub fn quotient(p: &LinearForm, q: &LinearForm) -> Result<Expr> {
    if q.is_zero() {
        return Err(Error::ZeroVector(format!("denominator {} is identically zero", q.label())));
    }
    Ok(Expr::quotient(p.expr(), q.expr()))
}

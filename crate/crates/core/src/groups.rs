//! Concrete realisations of U(n), SO(n) and Sp(n) as groups of complex
//! matrices, with the canonical orthonormal bases of their Lie algebras.
//!
//! Sp(n) is stored in its standard complex representation: a 2n×2n unitary
//! matrix of the block form `[[z, w], [-conj(w), conj(z)]]`. The coordinate
//! functions used everywhere else are the entries of the top n rows.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::algebra::{Jet2, Ring};
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// U(n); functions on SU(n) are verified on U(n).
    #[serde(rename = "su")]
    UnitaryU,
    #[serde(rename = "so")]
    SpecialOrthogonal,
    #[serde(rename = "sp")]
    QuaternionicUnitary,
}

impl GroupKind {
    pub fn tag(self) -> &'static str {
        match self {
            GroupKind::UnitaryU => "su",
            GroupKind::SpecialOrthogonal => "so",
            GroupKind::QuaternionicUnitary => "sp",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "su" | "u" => Ok(GroupKind::UnitaryU),
            "so" => Ok(GroupKind::SpecialOrthogonal),
            "sp" => Ok(GroupKind::QuaternionicUnitary),
            other => Err(Error::InvalidGroup(format!("unknown group {other:?}"))),
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            GroupKind::UnitaryU => 2,
            GroupKind::SpecialOrthogonal => 4,
            GroupKind::QuaternionicUnitary => 1,
        }
    }
}

/// Which group, its size, and the two constants every construction needs:
/// the common Laplace eigenvalue of the matrix coefficients and the
/// conformality constant μ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
    pub ambient_dim: usize,
    pub eigenvalue: f64,
    pub mu: f64,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self> {
        if n < kind.min_n() {
            let name = match kind {
                GroupKind::UnitaryU => "SU",
                GroupKind::SpecialOrthogonal => "SO",
                GroupKind::QuaternionicUnitary => "Sp",
            };
            return Err(Error::InvalidGroup(format!(
                "n must be ≥ {} for {name}",
                kind.min_n()
            )));
        }
        let nf = n as f64;
        let (ambient_dim, eigenvalue, mu) = match kind {
            GroupKind::UnitaryU => (n, -nf, -1.0),
            GroupKind::SpecialOrthogonal => (n, -(nf - 1.0) / 2.0, -0.5),
            GroupKind::QuaternionicUnitary => (2 * n, -(2.0 * nf + 1.0) / 2.0, -0.5),
        };
        Ok(Self {
            kind,
            n,
            ambient_dim,
            eigenvalue,
            mu,
        })
    }

    pub fn unitary(n: usize) -> Result<Self> {
        Self::new(GroupKind::UnitaryU, n)
    }

    pub fn special_orthogonal(n: usize) -> Result<Self> {
        Self::new(GroupKind::SpecialOrthogonal, n)
    }

    pub fn quaternionic(n: usize) -> Result<Self> {
        Self::new(GroupKind::QuaternionicUnitary, n)
    }

    /// Dimension of the Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        let n = self.n;
        match self.kind {
            GroupKind::UnitaryU => n * n,
            GroupKind::SpecialOrthogonal => n * (n - 1) / 2,
            GroupKind::QuaternionicUnitary => n * (2 * n + 1),
        }
    }

    /// Number of coordinate columns: n for U/SO, 2n for Sp (z then w).
    pub fn coordinate_cols(&self) -> usize {
        match self.kind {
            GroupKind::QuaternionicUnitary => 2 * self.n,
            _ => self.n,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::UnitaryU => "U",
            GroupKind::SpecialOrthogonal => "SO",
            GroupKind::QuaternionicUnitary => "Sp",
        };
        write!(f, "{name}({})", self.n)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieBasisElement {
    pub matrix: CMatrix,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupPoint {
    pub matrix: CMatrix,
}

impl GroupPoint {
    pub fn identity(spec: &GroupSpec) -> Self {
        Self {
            matrix: CMatrix::identity(spec.ambient_dim, spec.ambient_dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Row-major entries.
    pub fn entries(&self) -> Vec<Complex64> {
        row_major(&self.matrix)
    }

    /// `‖p·p* − I‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim();
        let prod = &self.matrix * self.matrix.adjoint();
        max_abs(&(prod - CMatrix::identity(d, d)))
    }

    /// Deviation from the Sp block pattern `[[z, w], [-conj(w), conj(z)]]`.
    pub fn quaternionic_residual(&self) -> f64 {
        let n = self.dim() / 2;
        let m = &self.matrix;
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for a in 0..n {
                worst = worst.max((m[(n + j, n + a)] - m[(j, a)].conj()).norm());
                worst = worst.max((m[(n + j, a)] + m[(j, n + a)].conj()).norm());
            }
        }
        worst
    }
}

fn row_major(m: &CMatrix) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(m.len());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            out.push(m[(r, c)]);
        }
    }
    out
}

pub(crate) fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

fn unit(n: usize, r: usize, s: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m[(r, s)] = ONE;
    m
}

/// `(E_rs + E_sr)/√2`
fn sym(n: usize, r: usize, s: usize) -> CMatrix {
    (unit(n, r, s) + unit(n, s, r)) * Complex64::from(FRAC_1_SQRT_2)
}

/// `(E_rs − E_sr)/√2`
fn skew(n: usize, r: usize, s: usize) -> CMatrix {
    (unit(n, r, s) - unit(n, s, r)) * Complex64::from(FRAC_1_SQRT_2)
}

fn blocks(tl: &CMatrix, tr: &CMatrix, bl: &CMatrix, br: &CMatrix) -> CMatrix {
    let n = tl.nrows();
    let mut m = CMatrix::zeros(2 * n, 2 * n);
    m.view_mut((0, 0), (n, n)).copy_from(tl);
    m.view_mut((0, n), (n, n)).copy_from(tr);
    m.view_mut((n, 0), (n, n)).copy_from(bl);
    m.view_mut((n, n), (n, n)).copy_from(br);
    m
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |r| (r + 1..n).map(move |s| (r, s)))
}

/// The canonical orthonormal basis of the Lie algebra, in a fixed order.
///
/// - u(n): all `Y_rs`, then all `iX_rs` (pairs `r < s` in lexicographic
///   order), then all `iD_r`.
/// - so(n): all `Y_rs`.
/// - sp(n): the three families in order; within the first two families the
///   two matrices of each pair `r < s` are adjacent, within the third the
///   three matrices of each `r` are adjacent.
///
/// Labels use 1-based indices as in the usual matrix notation.
pub fn basis(spec: &GroupSpec) -> Vec<LieBasisElement> {
    let n = spec.n;
    let el = |matrix: CMatrix, label: String| LieBasisElement { matrix, label };
    let mut out = Vec::with_capacity(spec.algebra_dim());
    match spec.kind {
        GroupKind::UnitaryU => {
            for (r, s) in pairs(n) {
                out.push(el(skew(n, r, s), format!("Y{}{}", r + 1, s + 1)));
            }
            for (r, s) in pairs(n) {
                out.push(el(sym(n, r, s) * I, format!("iX{}{}", r + 1, s + 1)));
            }
            for r in 0..n {
                out.push(el(unit(n, r, r) * I, format!("iD{}", r + 1)));
            }
        }
        GroupKind::SpecialOrthogonal => {
            for (r, s) in pairs(n) {
                out.push(el(skew(n, r, s), format!("Y{}{}", r + 1, s + 1)));
            }
        }
        GroupKind::QuaternionicUnitary => {
            let h = Complex64::from(FRAC_1_SQRT_2);
            let zero = CMatrix::zeros(n, n);
            for (r, s) in pairs(n) {
                let y = skew(n, r, s);
                let ix = sym(n, r, s) * I;
                out.push(el(blocks(&y, &zero, &zero, &y) * h, format!("diag(Y{0}{1},Y{0}{1})", r + 1, s + 1)));
                out.push(el(blocks(&ix, &zero, &zero, &(-&ix)) * h, format!("diag(iX{0}{1},-iX{0}{1})", r + 1, s + 1)));
            }
            for (r, s) in pairs(n) {
                let x = sym(n, r, s);
                let ix = &x * I;
                out.push(el(blocks(&zero, &x, &(-&x), &zero) * h, format!("[[0,X{0}{1}],[-X{0}{1},0]]", r + 1, s + 1)));
                out.push(el(blocks(&zero, &ix, &ix, &zero) * h, format!("[[0,iX{0}{1}],[iX{0}{1},0]]", r + 1, s + 1)));
            }
            for r in 0..n {
                let d = unit(n, r, r);
                let id = &d * I;
                out.push(el(blocks(&zero, &d, &(-&d), &zero) * h, format!("[[0,D{0}],[-D{0},0]]", r + 1)));
                out.push(el(blocks(&zero, &id, &id, &zero) * h, format!("[[0,iD{0}],[iD{0},0]]", r + 1)));
                out.push(el(blocks(&id, &zero, &zero, &(-&id)) * h, format!("diag(iD{0},-iD{0})", r + 1)));
            }
        }
    }
    out
}

/// `g(Z, W) = Re trace(Z·W*)`.
pub fn metric(z: &CMatrix, w: &CMatrix) -> f64 {
    z.iter().zip(w.iter()).map(|(a, b)| (a * b.conj()).re).sum()
}

fn gaussian_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

fn gaussian_real(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    Complex64::new(re, 0.0)
}

fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthogonalises `v` against `accepted` (twice, for stability) and
/// normalises it. Returns `None` when `v` is numerically in their span.
fn orthonormalize(mut v: Vec<Complex64>, accepted: &[Vec<Complex64>]) -> Option<Vec<Complex64>> {
    let start = norm(&v);
    for _ in 0..2 {
        for u in accepted {
            let c = inner(u, &v);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= c * y;
            }
        }
    }
    let len = norm(&v);
    if len <= 1e-8 * start.max(1e-300) {
        return None;
    }
    v.iter_mut().for_each(|x| *x /= len);
    Some(v)
}

/// `J·conj(v)` with `J = [[0, -I], [I, 0]]`: the quaternionic partner column.
fn quaternionic_partner(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len() / 2;
    let mut out = vec![ZERO; 2 * n];
    for k in 0..n {
        out[k] = -v[n + k].conj();
        out[n + k] = v[k].conj();
    }
    out
}

fn from_columns(cols: &[Vec<Complex64>]) -> CMatrix {
    let d = cols.len();
    CMatrix::from_fn(d, d, |r, c| cols[c][r])
}

/// A seeded point of the group, built by Gram–Schmidt orthonormalisation of
/// Gaussian columns. The distribution is not Haar; verification only needs
/// generic points. For SO(n) the first column is negated when the
/// determinant is −1. For Sp(n) the columns are generated in quaternionic
/// pairs `(v, J·conj(v))`, which keeps the block pattern exact.
pub fn sample_point(spec: &GroupSpec, seed: u64) -> GroupPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = spec.ambient_dim;
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    match spec.kind {
        GroupKind::UnitaryU | GroupKind::SpecialOrthogonal => {
            let draw = if spec.kind == GroupKind::UnitaryU {
                gaussian_complex
            } else {
                gaussian_real
            };
            while cols.len() < d {
                let v: Vec<Complex64> = (0..d).map(|_| draw(&mut rng)).collect();
                if let Some(u) = orthonormalize(v, &cols) {
                    cols.push(u);
                }
            }
        }
        GroupKind::QuaternionicUnitary => {
            let n = spec.n;
            let mut partners = Vec::with_capacity(n);
            while partners.len() < n {
                let v: Vec<Complex64> = (0..d).map(|_| gaussian_complex(&mut rng)).collect();
                if let Some(u) = orthonormalize(v, &cols) {
                    let partner = quaternionic_partner(&u);
                    cols.push(u);
                    cols.push(partner.clone());
                    partners.push(partner);
                }
            }
            // cols alternate (v_k, Jv̄_k); reorder to [v_1..v_n, Jv̄_1..Jv̄_n].
            let firsts: Vec<_> = cols.iter().step_by(2).cloned().collect();
            cols = firsts.into_iter().chain(partners).collect();
        }
    }
    let mut matrix = from_columns(&cols);
    if spec.kind == GroupKind::SpecialOrthogonal {
        let real = matrix.map(|z| z.re);
        if real.determinant() < 0.0 {
            matrix.column_mut(0).neg_mut();
        }
        matrix = matrix.map(|z| Complex64::new(z.re, 0.0));
    }
    GroupPoint { matrix }
}

/// `count` points whose individual seeds are drawn from a stream seeded by
/// `seed`, so a campaign is reproducible from one number.
pub fn sample_points(spec: &GroupSpec, seed: u64, count: usize) -> Vec<GroupPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_point(spec, rng.next_u64())).collect()
}

/// Row-major matrix of scalars, the argument of expression evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct JetMatrix<S> {
    pub dim: usize,
    pub entries: Vec<S>,
}

impl<S: Copy> JetMatrix<S> {
    pub fn get(&self, r: usize, c: usize) -> S {
        self.entries[r * self.dim + c]
    }
}

impl JetMatrix<Complex64> {
    pub fn from_point(p: &GroupPoint) -> Self {
        Self {
            dim: p.dim(),
            entries: p.entries(),
        }
    }
}

fn check_shape(p: &CMatrix, z: &CMatrix) -> Result<()> {
    if p.nrows() != p.ncols() || z.shape() != p.shape() {
        return Err(Error::ShapeError(format!(
            "point is {}×{}, direction is {}×{}",
            p.nrows(),
            p.ncols(),
            z.nrows(),
            z.ncols()
        )));
    }
    Ok(())
}

/// Entrywise 2-jets of `s ↦ p·exp(sZ)`: `p + s·pZ + s²·pZ²/2`.
pub fn translate_jet(p: &GroupPoint, z: &LieBasisElement) -> Result<JetMatrix<Jet2<Complex64>>> {
    translate_jet_along(p, &z.matrix)
}

pub fn translate_jet_along(p: &GroupPoint, z: &CMatrix) -> Result<JetMatrix<Jet2<Complex64>>> {
    check_shape(&p.matrix, z)?;
    let first = &p.matrix * z;
    let second = &first * z * Complex64::from(0.5);
    Ok(jet_matrix(&p.matrix, &first, &second))
}

pub(crate) fn jet_matrix(
    zeroth: &CMatrix,
    first: &CMatrix,
    second: &CMatrix,
) -> JetMatrix<Jet2<Complex64>> {
    let d = zeroth.nrows();
    let mut entries = Vec::with_capacity(d * d);
    for r in 0..d {
        for c in 0..d {
            entries.push(Jet2::new(zeroth[(r, c)], first[(r, c)], second[(r, c)]));
        }
    }
    JetMatrix { dim: d, entries }
}

/// Entrywise nested jets of `(t, s) ↦ p·exp(tW)·exp(sZ)` modulo `(t³, s³)`.
/// The outer jet is in `t` (direction `W`), the inner in `s` (direction `Z`).
pub fn translate_jet2(
    p: &GroupPoint,
    w: &LieBasisElement,
    z: &LieBasisElement,
) -> Result<JetMatrix<Jet2<Jet2<Complex64>>>> {
    check_shape(&p.matrix, &w.matrix)?;
    check_shape(&p.matrix, &z.matrix)?;
    let half = Complex64::from(0.5);
    let pw1 = &p.matrix * &w.matrix;
    let pw2 = &pw1 * &w.matrix * half;
    let z2 = &z.matrix * &z.matrix * half;
    Ok(nested_jet_matrix([&p.matrix, &pw1, &pw2], &z.matrix, &z2))
}

pub(crate) fn nested_jet_matrix(
    outer: [&CMatrix; 3],
    z: &CMatrix,
    z2_half: &CMatrix,
) -> JetMatrix<Jet2<Jet2<Complex64>>> {
    let inner: Vec<JetMatrix<Jet2<Complex64>>> = outer
        .iter()
        .map(|m| jet_matrix(m, &(*m * z), &(*m * z2_half)))
        .collect();
    let d = outer[0].nrows();
    let entries = (0..d * d)
        .map(|i| Jet2::new(inner[0].entries[i], inner[1].entries[i], inner[2].entries[i]))
        .collect();
    JetMatrix { dim: d, entries }
}

impl<S: Ring> JetMatrix<S> {
    pub fn constant(p: &GroupPoint) -> Self
    where
        S: crate::algebra::Scalar,
    {
        Self {
            dim: p.dim(),
            entries: p.entries().into_iter().map(S::from_complex).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs() -> Vec<GroupSpec> {
        let mut v = Vec::new();
        for n in 2..=4 {
            v.push(GroupSpec::unitary(n).unwrap());
            v.push(GroupSpec::quaternionic(n - 1).unwrap());
        }
        for n in 4..=6 {
            v.push(GroupSpec::special_orthogonal(n).unwrap());
        }
        v
    }

    #[test]
    fn basis_cardinalities() {
        assert_eq!(basis(&GroupSpec::unitary(2).unwrap()).len(), 4);
        assert_eq!(basis(&GroupSpec::special_orthogonal(4).unwrap()).len(), 6);
        assert_eq!(basis(&GroupSpec::quaternionic(2).unwrap()).len(), 10);
        for spec in specs() {
            assert_eq!(basis(&spec).len(), spec.algebra_dim(), "{spec}");
        }
    }

    #[test]
    fn basis_is_orthonormal_and_normal() {
        for spec in specs() {
            let b = basis(&spec);
            for (i, x) in b.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    let g = metric(&x.matrix, &y.matrix);
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((g - want).abs() < 1e-13, "{spec} {} {}", x.label, y.label);
                }
                let bracket = &x.matrix * x.matrix.adjoint() - x.matrix.adjoint() * &x.matrix;
                assert!(max_abs(&bracket) < 1e-14);
                // skew-Hermitian
                assert!(max_abs(&(&x.matrix + x.matrix.adjoint())) < 1e-15);
            }
        }
    }

    #[test]
    fn sp_basis_lies_in_sp() {
        let spec = GroupSpec::quaternionic(3).unwrap();
        let n = spec.n;
        for z in basis(&spec) {
            let m = &z.matrix;
            for j in 0..n {
                for a in 0..n {
                    assert!((m[(n + j, n + a)] - m[(j, a)].conj()).norm() < 1e-15);
                    assert!((m[(n + j, a)] + m[(j, n + a)].conj()).norm() < 1e-15);
                    // W block symmetric
                    assert!((m[(j, n + a)] - m[(a, n + j)]).norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = GroupSpec::unitary(3).unwrap();
        assert_eq!(sample_point(&spec, 42), sample_point(&spec, 42));
        assert_ne!(sample_point(&spec, 42), sample_point(&spec, 43));
    }

    #[test]
    fn sampled_points_satisfy_group_invariants() {
        for spec in specs() {
            for seed in 0..20 {
                let p = sample_point(&spec, seed);
                assert!(p.unitarity_residual() < 1e-12, "{spec}");
                match spec.kind {
                    GroupKind::SpecialOrthogonal => {
                        assert!(p.matrix.iter().all(|z| z.im == 0.0));
                        let det = p.matrix.map(|z| z.re).determinant();
                        assert!((det - 1.0).abs() < 1e-12);
                    }
                    GroupKind::QuaternionicUnitary => {
                        assert!(p.quaternionic_residual() <= 1e-12);
                    }
                    GroupKind::UnitaryU => {}
                }
            }
        }
    }

    #[test]
    fn translate_jet_at_identity() {
        let spec = GroupSpec::unitary(3).unwrap();
        let b = basis(&spec);
        let id = GroupPoint::identity(&spec);
        let d1 = b.iter().find(|z| z.label == "iD1").unwrap();
        let jm = translate_jet(&id, d1).unwrap();
        assert_eq!(jm.get(0, 0), Jet2::new(ONE, I, Complex64::new(-0.5, 0.0)));

        let so = GroupSpec::special_orthogonal(4).unwrap();
        let y12 = basis(&so).into_iter().find(|z| z.label == "Y12").unwrap();
        let jm = translate_jet(&GroupPoint::identity(&so), &y12).unwrap();
        let e = jm.get(0, 1);
        assert_eq!(e.a0, ZERO);
        assert!((e.a1 - Complex64::from(FRAC_1_SQRT_2)).norm() < 1e-16);
        assert_eq!(e.a2, ZERO);
    }

    #[test]
    fn translate_jet_orders_zero_and_one() {
        let spec = GroupSpec::quaternionic(2).unwrap();
        let p = sample_point(&spec, 5);
        for z in basis(&spec) {
            let jm = translate_jet(&p, &z).unwrap();
            let pz = &p.matrix * &z.matrix;
            for r in 0..p.dim() {
                for c in 0..p.dim() {
                    assert_eq!(jm.get(r, c).a0, p.matrix[(r, c)]);
                    assert_eq!(jm.get(r, c).a1, pz[(r, c)]);
                }
            }
        }
    }

    #[test]
    fn translate_jet_rejects_shape_mismatch() {
        let p = sample_point(&GroupSpec::unitary(3).unwrap(), 1);
        let z = &basis(&GroupSpec::unitary(2).unwrap())[0];
        assert!(matches!(translate_jet(&p, z), Err(Error::ShapeError(_))));
    }

    #[test]
    fn invalid_sizes_rejected() {
        assert!(GroupSpec::special_orthogonal(3).is_err());
        assert!(GroupSpec::unitary(1).is_err());
        assert!(GroupSpec::quaternionic(0).is_err());
        let sp = GroupSpec::quaternionic(2).unwrap();
        assert_eq!(sp.ambient_dim, 4);
        assert_eq!(sp.eigenvalue, -2.5);
        assert_eq!(GroupSpec::special_orthogonal(5).unwrap().eigenvalue, -2.0);
    }
}

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Expr, LinearForm};
use crate::error::{Error, Result};
use crate::groups::{CMatrix, GroupKind, GroupSpec};

const REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `q` and every column of `M_P` are linearly dependent.
    HarmonicCaseI,
    /// `a` and `M_P` are both supported on one column `β₀`.
    HarmonicCaseII,
    ProperBiharmonic,
}

impl Classification {
    pub fn is_harmonic(self) -> bool {
        !matches!(self, Classification::ProperBiharmonic)
    }
}

/// `f = P/Q` with `P = Σ p_{jα} y_{jα}` and `Q = Σ q_k a_β y_{kβ}`.
///
/// On Sp(n) the coordinates `y` are `[z | w]`, so `M_P` is n×2n, `a` has 2n
/// entries and `q` has n.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyInput {
    pub m_p: CMatrix,
    pub q: Vec<Complex64>,
    pub a: Vec<Complex64>,
}

impl ClassifyInput {
    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let n = spec.n;
        let cols = spec.coordinate_cols();
        if self.m_p.shape() != (n, cols) {
            return Err(Error::ShapeError(format!(
                "M_P must be {n}×{cols}, got {}×{}",
                self.m_p.nrows(),
                self.m_p.ncols()
            )));
        }
        for (name, v, len) in [("q", &self.q, n), ("a", &self.a, cols)] {
            if v.len() != len {
                return Err(Error::DimensionMismatch {
                    what: format!("vector {name}"),
                    expected: len,
                    found: v.len(),
                });
            }
            if v.iter().all(|c| c.norm_sqr() == 0.0) {
                return Err(Error::ZeroVector(format!("vector {name} is zero")));
            }
        }
        if self.m_p.iter().all(|c| c.norm_sqr() == 0.0) {
            return Err(Error::ZeroVector("matrix M_P is zero".into()));
        }
        Ok(())
    }

    pub fn p_form(&self, spec: &GroupSpec) -> Result<LinearForm> {
        LinearForm::from_coordinate_matrix(spec, "P", &self.m_p)
    }

    pub fn q_form(&self, spec: &GroupSpec) -> Result<LinearForm> {
        let m = CMatrix::from_fn(spec.n, spec.coordinate_cols(), |k, b| self.q[k] * self.a[b]);
        LinearForm::from_coordinate_matrix(spec, "Q", &m)
    }

    pub fn quotient(&self, spec: &GroupSpec) -> Result<Expr> {
        self.validate(spec)?;
        super::quotient(&self.p_form(spec)?, &self.q_form(spec)?)
    }
}

fn col_norm(m: &CMatrix, c: usize) -> f64 {
    m.column(c).norm()
}

/// Rank ≤ 1 test: every 2×2 minor of every column pair vanishes relative to
/// the product of the two column norms.
pub fn columns_pairwise_dependent(m: &CMatrix) -> bool {
    let (rows, cols) = m.shape();
    for a in 0..cols {
        for b in a + 1..cols {
            let scale = col_norm(m, a) * col_norm(m, b);
            for i in 0..rows {
                for j in i + 1..rows {
                    let minor = m[(i, a)] * m[(j, b)] - m[(j, a)] * m[(i, b)];
                    if minor.norm() > REL_TOL * scale {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `Σ v_k² = 0` (bilinear, not hermitian).
pub fn isotropic(v: &[Complex64]) -> bool {
    let s: Complex64 = v.iter().map(|x| x * x).sum();
    let scale: f64 = v.iter().map(|x| x.norm_sqr()).sum();
    s.norm() <= REL_TOL * scale
}

fn is_zero_rel(x: Complex64, scale: f64) -> bool {
    x.norm() <= REL_TOL * scale
}

/// SO(n) hypotheses under which the dichotomy holds: `(a,a) ≠ 0`,
/// `(q,q) = 0` and `qᵀM_P = 0`. Without the last two the real coordinates
/// contribute extra terms and case (i) is no longer harmonic.
fn check_so_hypotheses(input: &ClassifyInput) -> Result<()> {
    let a2: Complex64 = input.a.iter().map(|x| x * x).sum();
    let a_scale: f64 = input.a.iter().map(|x| x.norm_sqr()).sum();
    if is_zero_rel(a2, a_scale) {
        return Err(Error::HypothesisViolation("SO(n) classification needs (a,a) ≠ 0".into()));
    }
    if !isotropic(&input.q) {
        return Err(Error::HypothesisViolation("SO(n) classification needs (q,q) = 0".into()));
    }
    let qn: f64 = input.q.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for c in 0..input.m_p.ncols() {
        let dot: Complex64 = input.q.iter().zip(input.m_p.column(c).iter()).map(|(x, y)| x * y).sum();
        if !is_zero_rel(dot, qn * col_norm(&input.m_p, c)) {
            return Err(Error::HypothesisViolation(format!(
                "SO(n) classification needs qᵀM_P = 0; column {c} violates it"
            )));
        }
    }
    Ok(())
}

pub fn classify(input: &ClassifyInput, spec: &GroupSpec) -> Result<Classification> {
    input.validate(spec)?;
    if spec.kind == GroupKind::SpecialOrthogonal {
        check_so_hypotheses(input)?;
    }
    let n = spec.n;
    let cols = spec.coordinate_cols();
    let with_q = CMatrix::from_fn(n, cols + 1, |j, c| if c == 0 { input.q[j] } else { input.m_p[(j, c - 1)] });
    if columns_pairwise_dependent(&with_q) {
        return Ok(Classification::HarmonicCaseI);
    }
    let a_scale = input.a.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let a_support: Vec<usize> = (0..cols).filter(|&b| input.a[b].norm() > REL_TOL * a_scale).collect();
    if let [b0] = a_support[..] {
        let m_scale = input.m_p.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let outside = (0..cols)
            .filter(|&c| c != b0)
            .any(|c| input.m_p.column(c).iter().any(|x| x.norm() > REL_TOL * m_scale));
        if !outside {
            return Ok(Classification::HarmonicCaseII);
        }
    }
    Ok(Classification::ProperBiharmonic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    #[test]
    fn pairwise_dependence() {
        let q = real(&[1.0, -2.0, 0.5]);
        let cvec = [c(0.3, 1.0), c(2.0, 0.0), c(0.0, -1.0)];
        let outer = CMatrix::from_fn(3, 3, |i, j| q[i] * cvec[j]);
        assert!(columns_pairwise_dependent(&outer));
        assert!(!columns_pairwise_dependent(&CMatrix::identity(2, 2)));
        let rank2 = CMatrix::from_row_slice(3, 3, &real(&[1.0, 2.0, 3.0, 0.5, -1.0, 2.0, 1.5, 1.0, 5.0]));
        assert_eq!(rank2.clone().svd(false, false).rank(1e-10), 2);
        assert!(!columns_pairwise_dependent(&rank2));
    }

    #[test]
    fn isotropy() {
        assert!(isotropic(&[c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)]));
        assert!(!isotropic(&real(&[1.0, 0.0, 0.0, 0.0])));
        assert!(isotropic(&[c(1.0, 0.0), c(2.0, 0.0), c(0.0, 2.0), c(0.0, 1.0)]));
    }

    #[test]
    fn unitary_cases() {
        let spec = GroupSpec::unitary(3).unwrap();
        let q = real(&[1.0, 2.0, -1.0]);
        let a = real(&[0.5, 1.0, 1.0]);
        let cv = real(&[3.0, 0.0, -1.0]);
        let case1 = ClassifyInput {
            m_p: CMatrix::from_fn(3, 3, |i, j| q[i] * cv[j]),
            q: q.clone(),
            a: a.clone(),
        };
        assert_eq!(classify(&case1, &spec).unwrap(), Classification::HarmonicCaseI);

        let mut m = CMatrix::zeros(3, 3);
        m[(0, 1)] = c(1.0, 0.0);
        m[(2, 1)] = c(0.0, 2.0);
        let case2 = ClassifyInput {
            m_p: m,
            q: q.clone(),
            a: real(&[0.0, 4.0, 0.0]),
        };
        assert_eq!(classify(&case2, &spec).unwrap(), Classification::HarmonicCaseII);

        let generic = ClassifyInput {
            m_p: CMatrix::from_fn(3, 3, |i, j| c((i * 3 + j) as f64 * 0.7 - 2.0, (i as f64) - (j * j) as f64)),
            q,
            a,
        };
        assert_eq!(classify(&generic, &spec).unwrap(), Classification::ProperBiharmonic);
    }

    #[test]
    fn rejects_zero_and_bad_shapes() {
        let spec = GroupSpec::unitary(2).unwrap();
        let zero = ClassifyInput {
            m_p: CMatrix::zeros(2, 2),
            q: real(&[1.0, 0.0]),
            a: real(&[1.0, 0.0]),
        };
        assert!(matches!(classify(&zero, &spec), Err(Error::ZeroVector(_))));
        let sp = GroupSpec::quaternionic(2).unwrap();
        let wrong = ClassifyInput {
            m_p: CMatrix::identity(2, 2),
            q: real(&[1.0, 0.0]),
            a: real(&[1.0, 0.0]),
        };
        assert!(matches!(classify(&wrong, &sp), Err(Error::ShapeError(_))));
    }

    #[test]
    fn so_hypotheses_enforced() {
        let spec = GroupSpec::special_orthogonal(4).unwrap();
        let q = vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)];
        let a = real(&[1.0, 0.5, 0.0, 2.0]);
        let cv = real(&[1.0, 1.0, -1.0, 0.0]);
        let ok = ClassifyInput {
            m_p: CMatrix::from_fn(4, 4, |i, j| q[i] * cv[j]),
            q: q.clone(),
            a: a.clone(),
        };
        assert_eq!(classify(&ok, &spec).unwrap(), Classification::HarmonicCaseI);
        let bad_q = ClassifyInput {
            q: real(&[1.0, 0.0, 0.0, 0.0]),
            ..ok.clone()
        };
        assert!(matches!(classify(&bad_q, &spec), Err(Error::HypothesisViolation(_))));
        let iso_a = ClassifyInput {
            a: q.clone(),
            ..ok
        };
        assert!(matches!(classify(&iso_a, &spec), Err(Error::HypothesisViolation(_))));
    }
}

//! Verification campaigns: operator residuals over seeded point sets,
//! collected into reports.
//!
//! Points are evaluated in parallel; results are gathered in point order so
//! reports are deterministic for a given seed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forms::{classify, ClassifyInput, Classification, Expr, QuadrupleFamily};
use crate::groups::{sample_points, CMatrix, GroupKind, GroupPoint, GroupSpec};
use crate::operators::OperatorContext;
use crate::report::{Check, VerificationReport};

/// Default tolerances of the acceptance criteria.
pub mod tol {
    pub const RELATION: f64 = 1e-9;
    pub const HARMONIC: f64 = 1e-8;
    pub const BIHARMONIC: f64 = 1e-7;
    pub const ORACLE: f64 = 1e-8;
    pub const MORPHISM: f64 = 1e-8;
    /// Lower bound on `max |τ| / max(1, |f|)` for proper biharmonicity.
    pub const PROPER_FLOOR: f64 = 1e-3;
}

/// Operator context plus a seeded point set.
#[derive(Debug, Clone)]
pub struct Campaign {
    pub ctx: OperatorContext,
    pub points: Vec<GroupPoint>,
    pub seed: u64,
}

impl Campaign {
    pub fn new(spec: &GroupSpec, seed: u64, count: usize) -> Self {
        Self {
            ctx: OperatorContext::new(spec),
            points: sample_points(spec, seed, count),
            seed,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        self.ctx.spec()
    }

    pub fn report(&self, subject: impl Into<String>) -> VerificationReport {
        VerificationReport::new(subject, *self.spec(), self.points.len(), self.seed)
    }

    /// Evaluates `f` at every point in parallel, in point order.
    pub fn map<T, F>(&self, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(&GroupPoint) -> Result<T> + Sync + Send,
    {
        self.points.par_iter().map(f).collect()
    }

    fn max<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(&GroupPoint) -> Result<f64> + Sync + Send,
    {
        Ok(self.map(f)?.into_iter().fold(0.0, f64::max))
    }

    /// `max |τh| / scale`.
    pub fn tension_residual(&self, h: &Expr) -> Result<f64> {
        self.max(|p| Ok(self.ctx.tension_scaled(h, p)?.relative()))
    }

    /// `max |τh| / max(1, |h|)`: how far from harmonic `h` is.
    pub fn tension_magnitude(&self, h: &Expr) -> Result<f64> {
        self.max(|p| {
            let t = self.ctx.tension(h, p)?;
            Ok(t.norm() / 1.0_f64.max(h.eval_at(p)?.norm()))
        })
    }

    /// `max |τ²h| / scale`.
    pub fn bitension_residual(&self, h: &Expr) -> Result<f64> {
        self.max(|p| Ok(self.ctx.tension2_scaled(h, p)?.relative()))
    }

    /// `max |κ(x, y) − rhs| / max(1, |rhs|, scale of κ)`.
    pub fn kappa_residual(&self, x: &Expr, y: &Expr, rhs: &Expr) -> Result<f64> {
        self.max(|p| {
            let k = self.ctx.conformality_scaled(x, y, p)?;
            let r = rhs.eval_at(p)?;
            Ok((k.value - r).norm() / k.scale.max(r.norm()))
        })
    }

    /// `max |τh − λh| / max(1, |λh|)`.
    pub fn eigen_residual(&self, h: &Expr, lambda: f64) -> Result<f64> {
        self.ctx.eigen_residual(h, lambda, &self.points)
    }

    /// `max |τx − y| / max(1, |y|, scale of τx)`.
    pub fn tension_matches(&self, x: &Expr, y: &Expr) -> Result<f64> {
        self.max(|p| {
            let t = self.ctx.tension_scaled(x, p)?;
            let v = y.eval_at(p)?;
            Ok((t.value - v).norm() / t.scale.max(v.norm()))
        })
    }
}

/// Eigenfunction checks for every member, the ten product rules and the
/// closed-form τ of every quotient.
pub fn verify_quadruple(fam: &QuadrupleFamily, c: &Campaign, tol: f64) -> Result<VerificationReport> {
    let mut report = c.report(format!("quadruple family on {}", fam.spec));
    let lambda = fam.spec.eigenvalue;
    let mut eigen = 0.0_f64;
    for m in fam.members() {
        eigen = eigen.max(c.eigen_residual(&m.expr(), lambda)?);
    }
    report.push(Check::at_most(format!("tau(member) = {lambda}*member"), eigen, tol));
    for rel in fam.kappa_relations() {
        let r = c.kappa_residual(&rel.lhs.0, &rel.lhs.1, &rel.rhs)?;
        report.push(Check::at_most(rel.name, r, tol));
    }
    for i in 0..fam.len() {
        let r = c.tension_matches(&fam.quotient(i), &fam.tau_closed_form(i))?;
        report.push(Check::at_most(format!("tau(f{}) closed form", i + 1), r, tol));
    }
    Ok(report)
}

pub fn verify_harmonic(name: &str, h: &Expr, c: &Campaign, tol: f64) -> Result<VerificationReport> {
    let mut report = c.report(format!("harmonic {name}"));
    report.push(Check::at_most("tau", c.tension_residual(h)?, tol));
    Ok(report)
}

/// `τ²h = 0` within `tol` and `τh` bounded away from zero somewhere.
pub fn verify_biharmonic(name: &str, h: &Expr, c: &Campaign, tol: f64) -> Result<VerificationReport> {
    let mut report = c.report(format!("proper biharmonic {name}"));
    report.push(Check::at_most("tau2", c.bitension_residual(h)?, tol));
    report.push(Check::at_least("tau nonzero", c.tension_magnitude(h)?, tol::PROPER_FLOOR));
    Ok(report)
}

/// Nested-jet `τ²Φ` against the tension of the symbolic `τΦ`.
pub fn verify_oracle(name: &str, phi: &Expr, tau_phi: &Expr, c: &Campaign, tol: f64) -> Result<VerificationReport> {
    let mut report = c.report(format!("bitension routes agree on {name}"));
    let r = c.max(|p| {
        let nested = c.ctx.tension2_scaled(phi, p)?;
        let symbolic = c.ctx.tension_scaled(tau_phi, p)?;
        Ok((nested.value - symbolic.value).norm() / nested.scale.max(symbolic.scale))
    })?;
    report.push(Check::at_most("tau2 nested vs symbolic", r, tol));
    let r = c.tension_matches(phi, tau_phi)?;
    report.push(Check::at_most("tau symbolic", r, tol));
    Ok(report)
}

/// `τf = 0` and `κ(f, f) = 0`.
pub fn verify_morphism(name: &str, f: &Expr, c: &Campaign, tol: f64) -> Result<VerificationReport> {
    let mut report = c.report(format!("harmonic morphism {name}"));
    report.push(Check::at_most(format!("tau({name})"), c.tension_residual(f)?, tol));
    report.push(Check::at_most(format!("kappa({name},{name})"), c.kappa_residual(f, f, &Expr::zero())?, tol));
    Ok(report)
}

/// `τφ = λφ` and `κ(φ, ψ) = μφψ` for all members and pairs.
pub fn verify_eigenfamily(
    name: &str,
    family: &[Expr],
    lambda: f64,
    mu: f64,
    c: &Campaign,
    tol: f64,
) -> Result<VerificationReport> {
    let mut report = c.report(format!("eigenfamily {name} (lambda = {lambda}, mu = {mu})"));
    let mut eigen = 0.0_f64;
    let mut kappa = 0.0_f64;
    for (i, phi) in family.iter().enumerate() {
        eigen = eigen.max(c.eigen_residual(phi, lambda)?);
        for psi in &family[i..] {
            let rhs = (phi * psi).scaled(Complex64::new(mu, 0.0));
            kappa = kappa.max(c.kappa_residual(phi, psi, &rhs)?);
        }
    }
    report.push(Check::at_most(format!("tau = {lambda}*phi"), eigen, tol));
    report.push(Check::at_most(format!("kappa = {mu}*phi*psi"), kappa, tol));
    Ok(report)
}

/// Outcome of comparing `classify` with the operators.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationOutcome {
    pub predicted: Classification,
    /// `max |τf| / scale`.
    pub tension: f64,
    /// `max |τf| / max(1, |f|)`.
    pub tension_magnitude: f64,
    pub bitension: f64,
    pub agrees: bool,
}

pub fn check_classification(input: &ClassifyInput, c: &Campaign) -> Result<ClassificationOutcome> {
    let spec = c.spec();
    let predicted = classify(input, spec)?;
    let f = input.quotient(spec)?;
    let tension = c.tension_residual(&f)?;
    let tension_magnitude = c.tension_magnitude(&f)?;
    let bitension = c.bitension_residual(&f)?;
    let agrees = if predicted.is_harmonic() {
        tension <= 1e-9
    } else {
        tension_magnitude >= tol::PROPER_FLOOR && bitension <= tol::BIHARMONIC
    };
    Ok(ClassificationOutcome {
        predicted,
        tension,
        tension_magnitude,
        bitension,
        agrees,
    })
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

fn gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| gaussian(rng)).collect()
}

fn real_gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| StandardNormal.sample(rng)).collect()
}

/// Isotropic `u + iv` with `u, v` real, orthonormal: `(u+iv, u+iv) = 0`.
/// A second call with `against` also makes the result bilinearly orthogonal
/// to `against` and its conjugate, so pairs `(p, q)` with
/// `(p,p) = (p,q) = (q,q) = 0` can be drawn.
pub fn isotropic_vector(rng: &mut ChaCha8Rng, n: usize, against: &[Vec<f64>]) -> (Vec<Complex64>, [Vec<f64>; 2]) {
    loop {
        let mut basis: Vec<Vec<f64>> = against.to_vec();
        let mut fresh = Vec::new();
        while fresh.len() < 2 {
            let mut v = real_gaussian_vec(rng, n);
            for _ in 0..2 {
                for b in &basis {
                    let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
                }
            }
            let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if len < 1e-6 {
                break;
            }
            v.iter_mut().for_each(|x| *x /= len);
            basis.push(v.clone());
            fresh.push(v);
        }
        if fresh.len() == 2 {
            let z = fresh[0].iter().zip(&fresh[1]).map(|(&u, &v)| Complex64::new(u, v)).collect();
            let [u, v]: [Vec<f64>; 2] = fresh.try_into().expect("two vectors");
            return (z, [u, v]);
        }
    }
}

/// Seeded input for `classify` that is designed to land in `target`.
///
/// On SO(n) the draws satisfy the hypotheses `(a,a) ≠ 0`, `(q,q) = 0` and
/// `qᵀM_P = 0` (see [`classify`]).
pub fn sample_classify_input(spec: &GroupSpec, seed: u64, target: Classification) -> ClassifyInput {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n;
    let cols = spec.coordinate_cols();
    let so = spec.kind == GroupKind::SpecialOrthogonal;
    let q = if so { isotropic_vector(&mut rng, n, &[]).0 } else { gaussian_vec(&mut rng, n) };
    let q_bar: Vec<Complex64> = q.iter().map(|x| x.conj()).collect();
    let q_norm2: f64 = q.iter().map(|x| x.norm_sqr()).sum();
    // Random column; on SO(n) projected so that Σ q_k m_k = 0.
    let column = |rng: &mut ChaCha8Rng| -> Vec<Complex64> {
        let w = gaussian_vec(rng, n);
        if !so {
            return w;
        }
        let dot: Complex64 = q.iter().zip(&w).map(|(x, y)| x * y).sum();
        w.iter().zip(&q_bar).map(|(x, y)| x - dot / q_norm2 * y).collect()
    };
    let mut m = CMatrix::zeros(n, cols);
    let a;
    match target {
        Classification::HarmonicCaseI => {
            let cv = gaussian_vec(&mut rng, cols);
            m = CMatrix::from_fn(n, cols, |i, j| q[i] * cv[j]);
            a = gaussian_vec(&mut rng, cols);
        }
        Classification::HarmonicCaseII => {
            let b0 = rng.random_range(0..cols);
            let v = column(&mut rng);
            m.set_column(b0, &nalgebra::DVector::from_vec(v));
            let mut av = vec![Complex64::new(0.0, 0.0); cols];
            av[b0] = gaussian(&mut rng);
            a = av;
        }
        Classification::ProperBiharmonic => {
            for j in 0..cols {
                let v = column(&mut rng);
                m.set_column(j, &nalgebra::DVector::from_vec(v));
            }
            a = gaussian_vec(&mut rng, cols);
        }
    }
    ClassifyInput { m_p: m, q, a }
}

/// Seeded `(p, q, a, b)` from a complex Gaussian. On SO(n) `p, q` are
/// replaced by an isotropic pair with `(p,p) = (p,q) = (q,q) = 0`.
pub fn sample_quadruple_vectors(spec: &GroupSpec, seed: u64) -> [Vec<Complex64>; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n;
    let (p, q) = if spec.kind == GroupKind::SpecialOrthogonal {
        let (p, uv) = isotropic_vector(&mut rng, n, &[]);
        let (q, _) = isotropic_vector(&mut rng, n, &uv);
        (p, q)
    } else {
        (gaussian_vec(&mut rng, n), gaussian_vec(&mut rng, n))
    };
    [p, q, gaussian_vec(&mut rng, n), gaussian_vec(&mut rng, n)]
}

/// Error for a group where no proper member exists.
pub fn require_proper(fam: &QuadrupleFamily) -> Result<()> {
    if crate::construct::proper_indices(fam).is_empty() {
        return Err(Error::InvalidInput("the family has no proper members".into()));
    }
    Ok(())
}

//! Tension field τ, conformality operator κ and bitension τ², computed from
//! jets of an expression along the one-parameter subgroups `p·exp(sZ)` of an
//! orthonormal basis.
//!
//! Jets store `h''/2` in their second slot, so every second derivative below
//! is `2·a2`.

use num_complex::Complex64;

use crate::algebra::Jet2;
use crate::error::Result;
use crate::forms::Expr;
use crate::groups::{basis, jet_matrix, max_abs, nested_jet_matrix, CMatrix, GroupPoint, GroupSpec, LieBasisElement};
use crate::report::{Check, VerificationReport};

/// Bracket sums below this are treated as zero.
const DRIFT_EPS: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Order {
    /// Contributes `Z²(h) = 2·a2`.
    Second,
    /// Contributes `−D(h) = −a1` (the connection correction).
    First,
}

#[derive(Debug, Clone)]
struct Direction {
    z: CMatrix,
    z2_half: CMatrix,
    order: Order,
}

impl Direction {
    fn new(z: CMatrix, order: Order) -> Self {
        let z2_half = &z * &z * Complex64::from(0.5);
        Self { z, z2_half, order }
    }

    fn extract<T>(&self, j: Jet2<T>) -> T
    where
        T: crate::algebra::Ring,
    {
        match self.order {
            Order::Second => j.a2 + j.a2,
            Order::First => -j.a1,
        }
    }
}

/// A value together with the magnitude it should be judged against:
/// `max(1, |h(p)|, Σ|per-direction summands|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub value: Complex64,
    pub scale: f64,
}

impl Scaled {
    pub fn relative(&self) -> f64 {
        self.value.norm() / self.scale
    }
}

#[derive(Debug, Clone)]
pub struct OperatorContext {
    spec: GroupSpec,
    basis: Vec<LieBasisElement>,
    directions: Vec<Direction>,
    drift: f64,
}

impl OperatorContext {
    pub fn new(spec: &GroupSpec) -> Self {
        Self::with_basis(spec, basis(spec))
    }

    /// Uses a caller-supplied orthonormal basis. The bracket sum
    /// `Σ [Z, Z*]` is computed once; if it does not vanish, its first-order
    /// term is subtracted in τ.
    pub fn with_basis(spec: &GroupSpec, basis: Vec<LieBasisElement>) -> Self {
        let d = spec.ambient_dim;
        let mut bracket = CMatrix::zeros(d, d);
        for z in &basis {
            let zs = z.matrix.adjoint();
            bracket += &z.matrix * &zs - &zs * &z.matrix;
        }
        let drift = max_abs(&bracket);
        let mut directions: Vec<Direction> = basis.iter().map(|z| Direction::new(z.matrix.clone(), Order::Second)).collect();
        if drift > DRIFT_EPS {
            directions.push(Direction::new(bracket, Order::First));
        }
        Self {
            spec: *spec,
            basis,
            directions,
            drift,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn basis(&self) -> &[LieBasisElement] {
        &self.basis
    }

    /// `max |Σ [Z, Z*]|`; zero for the canonical bases.
    pub fn drift(&self) -> f64 {
        self.drift
    }

    fn jets(&self, p: &GroupPoint, d: &Direction) -> crate::groups::JetMatrix<Jet2<Complex64>> {
        let first = &p.matrix * &d.z;
        let second = &p.matrix * &d.z2_half;
        jet_matrix(&p.matrix, &first, &second)
    }

    pub fn tension(&self, h: &Expr, p: &GroupPoint) -> Result<Complex64> {
        Ok(self.tension_scaled(h, p)?.value)
    }

    pub fn tension_scaled(&self, h: &Expr, p: &GroupPoint) -> Result<Scaled> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut total = 0.0;
        let mut base = 0.0_f64;
        for d in &self.directions {
            let j = h.eval(&self.jets(p, d))?;
            base = j.a0.norm();
            let t = d.extract(j);
            value += t;
            total += t.norm();
        }
        Ok(Scaled {
            value,
            scale: 1.0_f64.max(base).max(total),
        })
    }

    pub fn conformality(&self, h1: &Expr, h2: &Expr, p: &GroupPoint) -> Result<Complex64> {
        Ok(self.conformality_scaled(h1, h2, p)?.value)
    }

    /// `Σ_Z Z(h1)·Z(h2)` over the basis. The summation order is fixed, so
    /// swapping the arguments gives the identical floating-point result.
    pub fn conformality_scaled(&self, h1: &Expr, h2: &Expr, p: &GroupPoint) -> Result<Scaled> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut total = 0.0;
        let mut base = 0.0_f64;
        for d in self.directions.iter().filter(|d| d.order == Order::Second) {
            let jm = self.jets(p, d);
            let (j1, j2) = (h1.eval(&jm)?, h2.eval(&jm)?);
            base = (j1.a0 * j2.a0).norm();
            let t = j1.a1 * j2.a1;
            value += t;
            total += t.norm();
        }
        Ok(Scaled {
            value,
            scale: 1.0_f64.max(base).max(total),
        })
    }

    pub fn tension2(&self, h: &Expr, p: &GroupPoint) -> Result<Complex64> {
        Ok(self.tension2_scaled(h, p)?.value)
    }

    /// τ(τ(h)) from nested jets over all ordered direction pairs: the outer
    /// jet moves along `W` (parameter t), the inner along `Z` (parameter s),
    /// and each pair contributes `4·coef(t²s²)`.
    pub fn tension2_scaled(&self, h: &Expr, p: &GroupPoint) -> Result<Scaled> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut total = 0.0;
        let mut base = 0.0_f64;
        for outer in &self.directions {
            let pw1 = &p.matrix * &outer.z;
            let pw2 = &p.matrix * &outer.z2_half;
            for inner in &self.directions {
                let jm = nested_jet_matrix([&p.matrix, &pw1, &pw2], &inner.z, &inner.z2_half);
                let j = h.eval(&jm)?;
                base = j.a0.a0.norm();
                let t = inner.extract(outer.extract(j));
                value += t;
                total += t.norm();
            }
        }
        Ok(Scaled {
            value,
            scale: 1.0_f64.max(base).max(total),
        })
    }

    /// `max_p |τh − λh| / max(1, |λh|)`.
    pub fn eigen_residual(&self, h: &Expr, lambda: f64, points: &[GroupPoint]) -> Result<f64> {
        let mut worst = 0.0_f64;
        for p in points {
            let value = h.eval_at(p)?;
            let t = self.tension(h, p)?;
            let target = value * lambda;
            worst = worst.max((t - target).norm() / 1.0_f64.max(target.norm()));
        }
        Ok(worst)
    }

    pub fn eigen_check(
        &self,
        h: &Expr,
        lambda: f64,
        points: &[GroupPoint],
        seed: u64,
        tol: f64,
    ) -> Result<VerificationReport> {
        let mut report = VerificationReport::new(format!("eigenfunction {h}"), self.spec, points.len(), seed);
        let r = self.eigen_residual(h, lambda, points)?;
        report.push(Check::at_most(format!("tau = {lambda}*h"), r, tol));
        Ok(report)
    }
}

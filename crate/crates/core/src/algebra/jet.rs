use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::{pow, Ring, Scalar};
use crate::error::{Error, Result};

/// Degree-2 truncated Taylor series `a0 + a1·s + a2·s² + O(s³)`.
///
/// `a2` stores `h''(0)/2`, not the second derivative itself; every place that
/// extracts a second derivative multiplies by 2. The coefficient type is
/// generic so jets nest: `Jet2<Jet2<Complex64>>` carries the mixed
/// coefficients of `h(t, s)` modulo `(t³, s³)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2<T> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
}

impl<T: Ring> Jet2<T> {
    pub fn new(a0: T, a1: T, a2: T) -> Self {
        Self { a0, a1, a2 }
    }

    pub fn constant(c: T) -> Self {
        Self::new(c, T::zero(), T::zero())
    }

    /// The coordinate jet `x + s`.
    pub fn variable(x: T) -> Self {
        Self::new(x, T::one(), T::zero())
    }

    /// Second derivative at `s = 0`, i.e. `2·a2`.
    pub fn second_derivative(&self) -> T {
        self.a2 + self.a2
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        let inv = rhs.inverse().ok_or(Error::DegenerateJetDivision)?;
        Ok(self * inv)
    }

    pub fn powi(self, k: u32) -> Self {
        pow(self, k)
    }

    /// Composition `g ∘ self` for a scalar map given by its value and first
    /// two derivatives at `self.a0`.
    pub fn compose(self, g0: T, g1: T, g2: T) -> Self {
        let half = T::from_f64(0.5);
        Self::new(g0, g1 * self.a1, g1 * self.a2 + half * g2 * self.a1 * self.a1)
    }
}

impl<T: Ring> Add for Jet2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a0 + rhs.a0, self.a1 + rhs.a1, self.a2 + rhs.a2)
    }
}

impl<T: Ring> Sub for Jet2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a0 - rhs.a0, self.a1 - rhs.a1, self.a2 - rhs.a2)
    }
}

impl<T: Ring> Neg for Jet2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2)
    }
}

impl<T: Ring> Mul for Jet2<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a0 * rhs.a0,
            self.a0 * rhs.a1 + self.a1 * rhs.a0,
            self.a0 * rhs.a2 + self.a1 * rhs.a1 + self.a2 * rhs.a0,
        )
    }
}

impl<T: Ring> Ring for Jet2<T> {
    fn zero() -> Self {
        Self::constant(T::zero())
    }
    fn one() -> Self {
        Self::constant(T::one())
    }
    fn from_f64(x: f64) -> Self {
        Self::constant(T::from_f64(x))
    }
    fn inverse(self) -> Option<Self> {
        let i0 = self.a0.inverse()?;
        let i0_sq = i0 * i0;
        Some(Self::new(
            i0,
            -(self.a1 * i0_sq),
            (self.a1 * self.a1 * i0 - self.a2) * i0_sq,
        ))
    }
}

impl<T: Scalar> Scalar for Jet2<T> {
    fn from_complex(c: Complex64) -> Self {
        Self::constant(T::from_complex(c))
    }
    fn scale(self, c: Complex64) -> Self {
        Self::new(self.a0.scale(c), self.a1.scale(c), self.a2.scale(c))
    }
    fn base(self) -> Complex64 {
        self.a0.base()
    }
}

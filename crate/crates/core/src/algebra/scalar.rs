use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Commutative ring with a partial multiplicative inverse.
pub trait Ring:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Multiplicative inverse; `None` when the constant term is zero.
    fn inverse(self) -> Option<Self>;
}

/// A ring that can be evaluated at group points: it embeds the complex
/// numbers and has a complex "base value" (the constant term all the way
/// down a nested jet).
pub trait Scalar: Ring {
    fn from_complex(c: Complex64) -> Self;
    fn scale(self, c: Complex64) -> Self;
    fn base(self) -> Complex64;
}

/// `x^k` by binary exponentiation; `x^0 = 1`.
pub fn pow<R: Ring>(x: R, k: u32) -> R {
    let mut result = R::one();
    let mut base = x;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = result * base;
        }
        k >>= 1;
        if k > 0 {
            base = base * base;
        }
    }
    result
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn inverse(self) -> Option<Self> {
        (self != 0.0).then(|| 1.0 / self)
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn inverse(self) -> Option<Self> {
        (self.re != 0.0 || self.im != 0.0).then(|| self.inv())
    }
}

impl Scalar for Complex64 {
    fn from_complex(c: Complex64) -> Self {
        c
    }
    fn scale(self, c: Complex64) -> Self {
        self * c
    }
    fn base(self) -> Complex64 {
        self
    }
}

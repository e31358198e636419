//! Evaluable rational expressions over linear matrix-coefficient forms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use super::LinearForm;
use crate::algebra::{pow, Scalar};
use crate::error::{Error, Result};
use crate::groups::{GroupPoint, JetMatrix};

/// Denominators whose base value is below this multiple of their scale are
/// reported as domain errors.
pub const DOMAIN_EPS: f64 = 1e-12;

#[derive(Debug)]
enum Node {
    Const(Complex64),
    Form(LinearForm),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    /// Integer power; negative exponents are reciprocals and are checked
    /// against the domain like quotients.
    Pow(Expr, i32),
    Quotient(Expr, Expr),
}

/// Expression tree with shared subtrees. Cloning is cheap.
///
/// The same traversal evaluates over plain complex numbers, jets and nested
/// jets, so the value and its derivatives always come from one code path.
#[derive(Debug, Clone)]
pub struct Expr(Arc<Node>);

impl Expr {
    fn node(node: Node) -> Self {
        Expr(Arc::new(node))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::node(Node::Const(c))
    }

    pub fn real(x: f64) -> Self {
        Self::constant(Complex64::new(x, 0.0))
    }

    pub fn zero() -> Self {
        Self::real(0.0)
    }

    pub fn one() -> Self {
        Self::real(1.0)
    }

    pub fn form(f: LinearForm) -> Self {
        Self::node(Node::Form(f))
    }

    pub fn sum(terms: Vec<Expr>) -> Self {
        match terms.len() {
            0 => Self::zero(),
            1 => terms.into_iter().next().unwrap(),
            _ => Self::node(Node::Sum(terms)),
        }
    }

    pub fn product(factors: Vec<Expr>) -> Self {
        match factors.len() {
            0 => Self::one(),
            1 => factors.into_iter().next().unwrap(),
            _ => Self::node(Node::Product(factors)),
        }
    }

    pub fn powi(&self, k: i32) -> Self {
        match k {
            0 => Self::one(),
            1 => self.clone(),
            _ => Self::node(Node::Pow(self.clone(), k)),
        }
    }

    pub fn quotient(num: Expr, den: Expr) -> Self {
        Self::node(Node::Quotient(num, den))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self::product(vec![Self::constant(c), self.clone()])
    }

    /// True for the literal constant zero (not for expressions that merely
    /// evaluate to zero).
    pub fn is_literal_zero(&self) -> bool {
        matches!(&*self.0, Node::Const(c) if *c == Complex64::new(0.0, 0.0))
    }

    /// Magnitude against which a vanishing denominator is judged.
    fn scale_hint(&self) -> f64 {
        match &*self.0 {
            Node::Form(f) => f.l1_norm(),
            Node::Const(c) => c.norm(),
            _ => 1.0,
        }
    }

    fn describe(&self) -> String {
        match &*self.0 {
            Node::Form(f) => f.label().to_string(),
            _ => format!("{self}"),
        }
    }

    fn checked_inverse<S: Scalar>(den: &Expr, value: S) -> Result<S> {
        let magnitude = value.base().norm();
        if magnitude <= DOMAIN_EPS * den.scale_hint() {
            return Err(Error::DomainError {
                denominator: den.describe(),
                magnitude,
            });
        }
        value.inverse().ok_or_else(|| Error::DomainError {
            denominator: den.describe(),
            magnitude,
        })
    }

    pub fn eval<S: Scalar>(&self, x: &JetMatrix<S>) -> Result<S> {
        match &*self.0 {
            Node::Const(c) => Ok(S::from_complex(*c)),
            Node::Form(f) => Ok(f.eval(x)),
            Node::Sum(terms) => {
                let mut acc = S::zero();
                for t in terms {
                    acc = acc + t.eval(x)?;
                }
                Ok(acc)
            }
            Node::Product(factors) => {
                let mut acc = S::one();
                for f in factors {
                    acc = acc * f.eval(x)?;
                }
                Ok(acc)
            }
            Node::Pow(base, k) => {
                let v = base.eval(x)?;
                if *k >= 0 {
                    Ok(pow(v, *k as u32))
                } else {
                    let inv = Self::checked_inverse(base, v)?;
                    Ok(pow(inv, k.unsigned_abs()))
                }
            }
            Node::Quotient(num, den) => {
                let d = den.eval(x)?;
                let inv = Self::checked_inverse(den, d)?;
                Ok(num.eval(x)? * inv)
            }
        }
    }

    pub fn eval_at(&self, p: &GroupPoint) -> Result<Complex64> {
        self.eval(&JetMatrix::from_point(p))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Const(c) if c.im == 0.0 => write!(f, "{}", c.re),
            Node::Const(c) => write!(f, "({c})"),
            Node::Form(form) => write!(f, "{}", form.label()),
            Node::Sum(terms) => {
                write!(f, "(")?;
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            Node::Product(factors) => {
                for (i, t) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "·")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Node::Pow(b, k) => write!(f, "{b}^{k}"),
            Node::Quotient(n, d) => write!(f, "{n}/{d}"),
        }
    }
}

impl From<LinearForm> for Expr {
    fn from(f: LinearForm) -> Self {
        Expr::form(f)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, -rhs])
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::product(vec![self, rhs])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scaled(Complex64::new(-1.0, 0.0))
    }
}

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        self.clone() + rhs.clone()
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self.clone() - rhs.clone()
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        self.clone() * rhs.clone()
    }
}

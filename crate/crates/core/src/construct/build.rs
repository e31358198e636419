use num_complex::Complex64;
use num_traits::Zero;

use super::solve::tilde_c;
use super::table::CoeffTable;
use crate::algebra::{rat, rational_to_f64, Rational};
use crate::error::{Error, Result};
use crate::forms::{Block, Expr, Layout, LinearForm, QuadrupleFamily, SpChoice};
use crate::groups::{GroupKind, GroupSpec};

/// μ of the group as an exact rational.
pub fn mu_rational(spec: &GroupSpec) -> Rational {
    match spec.kind {
        GroupKind::UnitaryU => rat(-1, 1),
        GroupKind::SpecialOrthogonal | GroupKind::QuaternionicUnitary => rat(-1, 2),
    }
}

/// `Σ_k c_k Π_i f_i^{d_i − k_i} τ(f_i)^{k_i}` from `(f_i, τ(f_i))` pairs.
pub fn build_phi(table: &CoeffTable, fs: &[(Expr, Expr)]) -> Result<Expr> {
    if fs.len() != table.arity() {
        return Err(Error::DimensionMismatch {
            what: "functions for the coefficient table".into(),
            expected: table.arity(),
            found: fs.len(),
        });
    }
    let degrees = table.degrees();
    let mut terms = Vec::new();
    for (k, c) in table.iter() {
        if c.is_zero() {
            continue;
        }
        let mut factors = vec![Expr::real(rational_to_f64(c))];
        for (i, (f, tf)) in fs.iter().enumerate() {
            let (pf, pt) = ((degrees[i] - k[i]) as i32, k[i] as i32);
            if pf > 0 {
                factors.push(f.powi(pf));
            }
            if pt > 0 {
                factors.push(tf.powi(pt));
            }
        }
        terms.push(Expr::product(factors));
    }
    Ok(Expr::sum(terms))
}

/// `τ(Φ)` written out through the coefficient map `c ↦ c̃`, as an expression
/// in the same `f_i` and `τ(f_i)`.
pub fn tau_symbolic(table: &CoeffTable, mu: &Rational, fs: &[(Expr, Expr)]) -> Result<Expr> {
    build_phi(&tilde_c(table, mu), fs)
}

/// Members of the family whose quotient is proper biharmonic: every column
/// except `β`, except under Sp choice 10 where `f_β` is proper too.
pub fn proper_indices(fam: &QuadrupleFamily) -> Vec<usize> {
    match fam.data.layout {
        Layout::Full => vec![0],
        Layout::Column => fam
            .data
            .columns
            .iter()
            .enumerate()
            .filter(|(_, &j)| j != fam.data.beta || fam.data.choice == Some(SpChoice::Ten))
            .map(|(i, _)| i)
            .collect(),
    }
}

/// `E_k = {τ(f_j)^k}` over the proper members.
pub fn eigenfamily_ek(fam: &QuadrupleFamily, k: u32) -> Result<Vec<Expr>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let idx = proper_indices(fam);
    if idx.is_empty() {
        return Err(Error::InvalidInput("the family has no proper members".into()));
    }
    Ok(idx.into_iter().map(|i| fam.tau_closed_form(i).powi(k as i32)).collect())
}

/// `(λ_k, μ_k) = (2μk(k−1), 2μk²)`.
pub fn eigen_constants(mu: f64, k: u32) -> (f64, f64) {
    let k = k as f64;
    // `+ 0.0` turns λ_1 = −0 into +0 for display.
    (2.0 * mu * k * (k - 1.0) + 0.0, 2.0 * mu * k * k)
}

/// `{Q_α/Q_β | α ≠ β}` with `Q_α = Σ_j q_j z_{jα}` on U(n).
pub fn orthogonal_family(q: &[Complex64], spec: &GroupSpec, beta: usize) -> Result<Vec<Expr>> {
    if spec.kind != GroupKind::UnitaryU {
        return Err(Error::InvalidGroup(format!("orthogonal families are built on U(n), not {spec}")));
    }
    let n = spec.n;
    if q.len() != n {
        return Err(Error::DimensionMismatch {
            what: "vector q".into(),
            expected: n,
            found: q.len(),
        });
    }
    if q.iter().all(|c| c.norm_sqr() == 0.0) {
        return Err(Error::ZeroVector("vector q is zero".into()));
    }
    if beta >= n {
        return Err(Error::InvalidInput(format!("column β = {beta} outside 0..{n}")));
    }
    let column = |a: usize| -> Result<Expr> {
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        e[a] = Complex64::new(1.0, 0.0);
        Ok(LinearForm::rank_one(spec, format!("Q{}", a + 1), Block::Z, q, &e)?.expr())
    };
    let den = column(beta)?;
    (0..n).filter(|&a| a != beta).map(|a| Ok(Expr::quotient(column(a)?, den.clone()))).collect()
}

/// Homogeneous polynomial `Σ c_e φ^e` in a fixed number of variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    vars: usize,
    terms: Vec<(Vec<u32>, Complex64)>,
}

impl Polynomial {
    pub fn new(vars: usize, terms: Vec<(Vec<u32>, Complex64)>) -> Result<Self> {
        let mut degree = None;
        for (e, _) in &terms {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    what: "monomial exponent".into(),
                    expected: vars,
                    found: e.len(),
                });
            }
            let d: u32 = e.iter().sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::InvalidInput("polynomial is not homogeneous".into()));
            }
        }
        let mut merged: Vec<(Vec<u32>, Complex64)> = Vec::new();
        for (e, c) in terms {
            match merged.iter_mut().find(|(x, _)| *x == e) {
                Some((_, acc)) => *acc += c,
                None => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| c.norm_sqr() > 0.0);
        Ok(Self { vars, terms: merged })
    }

    /// The single variable `φ_i`.
    pub fn variable(vars: usize, i: usize) -> Result<Self> {
        let mut e = vec![0; vars];
        *e.get_mut(i).ok_or_else(|| Error::InvalidInput(format!("variable {i} outside 0..{vars}")))? = 1;
        Self::new(vars, vec![(e, Complex64::new(1.0, 0.0))])
    }

    /// Parses monomials joined by `+`, each a `*`-product of real numbers
    /// and variables `x<i>` or `x<i>^<p>`, e.g. `2*x0^2 + -1*x0*x1`.
    pub fn parse(vars: usize, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for mono in text.split('+').map(str::trim).filter(|s| !s.is_empty()) {
            let mut e = vec![0u32; vars];
            let mut coeff = 1.0;
            for factor in mono.split('*').map(str::trim) {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u32>().map_err(|_| Error::Parse(format!("bad power in {factor:?}")))?),
                        None => (rest, 1),
                    };
                    let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable in {factor:?}")))?;
                    if i >= vars {
                        return Err(Error::InvalidInput(format!("variable x{i} outside x0..x{}", vars.saturating_sub(1))));
                    }
                    e[i] += pow;
                } else {
                    coeff *= factor.parse::<f64>().map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                }
            }
            terms.push((e, Complex64::new(coeff, 0.0)));
        }
        Self::new(vars, terms)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(e, _)| e.iter().sum())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval_expr(&self, family: &[Expr]) -> Result<Expr> {
        if family.len() != self.vars {
            return Err(Error::DimensionMismatch {
                what: "family members".into(),
                expected: self.vars,
                found: family.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![Expr::constant(*c)];
                f.extend(e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(i, &p)| family[i].powi(p as i32)));
                Expr::product(f)
            })
            .collect();
        Ok(Expr::sum(terms))
    }

    fn coefficient(&self, e: &[u32]) -> Complex64 {
        self.terms.iter().find(|(x, _)| x == e).map_or(Complex64::new(0.0, 0.0), |(_, c)| *c)
    }

    /// True when one polynomial is a scalar multiple of the other.
    fn dependent(&self, other: &Polynomial) -> bool {
        let mut monos: Vec<&Vec<u32>> = self.terms.iter().map(|(e, _)| e).collect();
        monos.extend(other.terms.iter().map(|(e, _)| e));
        let scale = monos
            .iter()
            .map(|e| self.coefficient(e).norm() * other.coefficient(e).norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        for a in &monos {
            for b in &monos {
                let minor = self.coefficient(a) * other.coefficient(b) - self.coefficient(b) * other.coefficient(a);
                if minor.norm() > 1e-12 * scale.max(1e-300) {
                    return false;
                }
            }
        }
        true
    }
}

/// `P(φ)/Q(φ)` for linearly independent homogeneous `P, Q` of equal degree.
pub fn morphism_from_eigenfamily(family: &[Expr], num: &Polynomial, den: &Polynomial) -> Result<Expr> {
    if num.is_zero() || den.is_zero() {
        return Err(Error::DegenerateQuotient("numerator and denominator must be non-zero".into()));
    }
    if num.degree() != den.degree() || num.degree() == Some(0) {
        return Err(Error::InvalidInput("numerator and denominator need the same positive degree".into()));
    }
    if num.dependent(den) {
        return Err(Error::DegenerateQuotient("numerator and denominator are linearly dependent".into()));
    }
    Ok(Expr::quotient(num.eval_expr(family)?, den.eval_expr(family)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::sample_point;

    #[test]
    fn zero_table_builds_zero() {
        let t = CoeffTable::zeros(&[2]).unwrap();
        let f = (Expr::real(2.0), Expr::real(3.0));
        assert!(build_phi(&t, std::slice::from_ref(&f)).unwrap().is_literal_zero());
        assert!(matches!(build_phi(&t, &[f.clone(), f]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn build_phi_matches_hand_evaluation() {
        let t = CoeffTable::from_vec(vec![rat(4, 1), rat(0, 1), rat(-3, 1)]).unwrap();
        let (f, tf) = (Expr::real(2.0), Expr::real(0.5));
        let v = build_phi(&t, &[(f, tf)]).unwrap();
        let spec = GroupSpec::unitary(2).unwrap();
        let x = v.eval_at(&sample_point(&spec, 0)).unwrap();
        assert!((x - Complex64::new(4.0 * 4.0 - 3.0 * 0.25, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn polynomial_validation() {
        assert!(Polynomial::parse(2, "x0^2 + x0*x1").is_ok());
        assert!(Polynomial::parse(2, "x0^2 + x1").is_err());
        assert!(Polynomial::parse(2, "x2").is_err());
        let p = Polynomial::parse(2, "2*x0").unwrap();
        let q = Polynomial::parse(2, "x0").unwrap();
        let fam = vec![Expr::real(1.0), Expr::real(2.0)];
        assert!(matches!(morphism_from_eigenfamily(&fam, &p, &q), Err(Error::DegenerateQuotient(_))));
        let r = Polynomial::variable(2, 1).unwrap();
        assert!(morphism_from_eigenfamily(&fam, &p, &r).is_ok());
    }

    #[test]
    fn orthogonal_family_shape() {
        let spec = GroupSpec::unitary(3).unwrap();
        let q = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
        let fam = orthogonal_family(&q, &spec, 0).unwrap();
        assert_eq!(fam.len(), 2);
        let p = sample_point(&spec, 2);
        let want = p.matrix[(0, 1)] / p.matrix[(0, 0)];
        assert!((fam[0].eval_at(&p).unwrap() - want).norm() < 1e-13 * want.norm().max(1.0));
        let so = GroupSpec::special_orthogonal(4).unwrap();
        assert!(orthogonal_family(&[Complex64::new(1.0, 0.0); 4], &so, 0).is_err());
        assert!(matches!(
            orthogonal_family(&[Complex64::new(0.0, 0.0); 3], &spec, 0),
            Err(Error::ZeroVector(_))
        ));
    }

    #[test]
    fn eigen_constants_values() {
        assert_eq!(eigen_constants(-1.0, 1), (0.0, -2.0));
        assert_eq!(eigen_constants(-1.0, 2), (-4.0, -8.0));
        assert_eq!(eigen_constants(-0.5, 3), (-6.0, -9.0));
    }
}

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Block, Expr, LinearForm};
use crate::error::{Error, Result};
use crate::groups::{GroupKind, GroupSpec};

/// Which coordinate blocks of Sp(n) carry the four forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum SpChoice {
    /// P, Q, R, S all on the z block.
    Nine,
    /// P and S on w, Q and R on z.
    Ten,
    /// All on the w block.
    Eleven,
}

impl SpChoice {
    pub fn tag(self) -> u8 {
        match self {
            SpChoice::Nine => 9,
            SpChoice::Ten => 10,
            SpChoice::Eleven => 11,
        }
    }

    /// Blocks of (P, S) and (Q, R).
    fn blocks(self) -> (Block, Block) {
        match self {
            SpChoice::Nine => (Block::Z, Block::Z),
            SpChoice::Ten => (Block::W, Block::Z),
            SpChoice::Eleven => (Block::W, Block::W),
        }
    }
}

impl TryFrom<u8> for SpChoice {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            9 => Ok(SpChoice::Nine),
            10 => Ok(SpChoice::Ten),
            11 => Ok(SpChoice::Eleven),
            other => Err(Error::InvalidInput(format!("Sp choice must be 9, 10 or 11, got {other}"))),
        }
    }
}

impl From<SpChoice> for u8 {
    fn from(c: SpChoice) -> u8 {
        c.tag()
    }
}

/// How the generating vectors become forms.
///
/// `Column`: `P_j = p⊗(a_j e_j)`, `Q = q⊗(b_β e_β)`, `R = p⊗(b_β e_β)`,
/// `S_j = q⊗(a_j e_j)`, one member per selected column `j`.
/// `Full`: `P = p⊗a`, `Q = q⊗b`, `R = p⊗b`, `S = q⊗a`, a single member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Column,
    Full,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct QuadrupleOptions {
    /// 0-based denominator column.
    pub beta: usize,
    /// Member columns; defaults to every `j ≠ β` (every `j` for Sp choice 10).
    pub columns: Option<Vec<usize>>,
    /// Required on Sp(n).
    pub choice: Option<SpChoice>,
    /// Defaults to `Column`, except on SO(n) when only `a, b` are isotropic.
    pub layout: Option<Layout>,
}

/// Serialisable generating data of a quadruple family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadrupleData {
    pub group: GroupKind,
    pub n: usize,
    pub p: Vec<Complex64>,
    pub q: Vec<Complex64>,
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    pub beta: usize,
    pub columns: Vec<usize>,
    pub layout: Layout,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choice: Option<SpChoice>,
}

impl QuadrupleData {
    pub fn spec(&self) -> Result<GroupSpec> {
        GroupSpec::new(self.group, self.n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("quadruple data serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// One relation `κ(lhs.0, lhs.1) = rhs` of the quadruple conditions.
#[derive(Debug, Clone)]
pub struct KappaRelation {
    pub name: String,
    pub lhs: (Expr, Expr),
    pub rhs: Expr,
}

/// Eigenfunctions `P_j, Q, R, S_j` with the ten κ-product rules.
#[derive(Debug, Clone)]
pub struct QuadrupleFamily {
    pub spec: GroupSpec,
    pub data: QuadrupleData,
    pub p_list: Vec<LinearForm>,
    pub q: LinearForm,
    pub r: LinearForm,
    pub s_list: Vec<LinearForm>,
    pub mu: f64,
}

fn check_vec(name: &str, v: &[Complex64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            what: format!("vector {name}"),
            expected: n,
            found: v.len(),
        });
    }
    if v.iter().all(|c| c.norm_sqr() == 0.0) {
        return Err(Error::ZeroVector(format!("vector {name} is zero")));
    }
    Ok(())
}

fn bilinear(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// `(u,v) = 0` relative to `|u||v|`.
fn bilinear_vanishes(u: &[Complex64], v: &[Complex64]) -> bool {
    bilinear(u, v).norm() <= 1e-12 * norm(u) * norm(v)
}

fn unit_scaled(n: usize, idx: usize, c: Complex64) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    v[idx] = c;
    v
}

pub fn make_quadruple(
    spec: &GroupSpec,
    p: &[Complex64],
    q: &[Complex64],
    a: &[Complex64],
    b: &[Complex64],
    options: &QuadrupleOptions,
) -> Result<QuadrupleFamily> {
    let n = spec.n;
    for (name, v) in [("p", p), ("q", q), ("a", a), ("b", b)] {
        check_vec(name, v, n)?;
    }
    let beta = options.beta;
    if beta >= n {
        return Err(Error::InvalidInput(format!("column β = {beta} outside 0..{n}")));
    }
    let choice = match spec.kind {
        GroupKind::QuaternionicUnitary => Some(options.choice.ok_or_else(|| {
            Error::InvalidInput("Sp(n) quadruples need a choice of 9, 10 or 11".into())
        })?),
        _ => {
            if options.choice.is_some() {
                return Err(Error::InvalidInput(format!("a choice tag only applies to Sp(n), not {spec}")));
            }
            None
        }
    };

    let layout = match spec.kind {
        GroupKind::SpecialOrthogonal => {
            let pq_iso = bilinear_vanishes(p, p) && bilinear_vanishes(p, q) && bilinear_vanishes(q, q);
            let ab_iso = bilinear_vanishes(a, a) && bilinear_vanishes(a, b) && bilinear_vanishes(b, b);
            match (options.layout, pq_iso, ab_iso) {
                (Some(Layout::Column), true, _) | (None, true, _) => Layout::Column,
                (Some(Layout::Full), true, _) | (Some(Layout::Full), _, true) | (None, false, true) => Layout::Full,
                (Some(Layout::Column), false, true) => {
                    return Err(Error::IsotropyViolation(
                        "column layout on SO(n) needs (p,p) = (p,q) = (q,q) = 0".into(),
                    ))
                }
                _ => {
                    return Err(Error::IsotropyViolation(
                        "SO(n) needs (a,a) = (b,b) = (a,b) = 0 or (p,p) = (p,q) = (q,q) = 0".into(),
                    ))
                }
            }
        }
        _ => options.layout.unwrap_or(Layout::Column),
    };

    let columns = match layout {
        Layout::Full => Vec::new(),
        Layout::Column => match &options.columns {
            Some(cols) => cols.clone(),
            None if choice == Some(SpChoice::Ten) => (0..n).collect(),
            None => (0..n).filter(|&j| j != beta).collect(),
        },
    };
    if layout == Layout::Column {
        if columns.is_empty() {
            return Err(Error::InvalidInput("no member columns selected".into()));
        }
        if let Some(&j) = columns.iter().find(|&&j| j >= n) {
            return Err(Error::InvalidInput(format!("column {j} outside 0..{n}")));
        }
    }

    let data = QuadrupleData {
        group: spec.kind,
        n,
        p: p.to_vec(),
        q: q.to_vec(),
        a: a.to_vec(),
        b: b.to_vec(),
        beta,
        columns,
        layout,
        choice,
    };
    build(spec, data)
}

fn build(spec: &GroupSpec, data: QuadrupleData) -> Result<QuadrupleFamily> {
    let n = spec.n;
    let (block_p, block_q) = data.choice.map(SpChoice::blocks).unwrap_or((Block::Z, Block::Z));
    let (p, q, a, b) = (&data.p, &data.q, &data.a, &data.b);
    let (p_list, q_form, r_form, s_list) = match data.layout {
        Layout::Full => {
            let pf = LinearForm::rank_one(spec, "P", block_p, p, a)?;
            let sf = LinearForm::rank_one(spec, "S", block_p, q, a)?;
            let qf = LinearForm::rank_one(spec, "Q", block_q, q, b)?;
            let rf = LinearForm::rank_one(spec, "R", block_q, p, b)?;
            (vec![pf], qf, rf, vec![sf])
        }
        Layout::Column => {
            let bb = unit_scaled(n, data.beta, b[data.beta]);
            if b[data.beta].norm_sqr() == 0.0 {
                return Err(Error::ZeroVector(format!("b vanishes at column β = {}", data.beta)));
            }
            let qf = LinearForm::rank_one(spec, "Q", block_q, q, &bb)?;
            let rf = LinearForm::rank_one(spec, "R", block_q, p, &bb)?;
            let mut ps = Vec::new();
            let mut ss = Vec::new();
            for &j in &data.columns {
                if a[j].norm_sqr() == 0.0 {
                    return Err(Error::ZeroVector(format!("a vanishes at member column {j}")));
                }
                let aj = unit_scaled(n, j, a[j]);
                ps.push(LinearForm::rank_one(spec, format!("P{}", j + 1), block_p, p, &aj)?);
                ss.push(LinearForm::rank_one(spec, format!("S{}", j + 1), block_p, q, &aj)?);
            }
            (ps, qf, rf, ss)
        }
    };
    Ok(QuadrupleFamily {
        spec: *spec,
        data,
        p_list,
        q: q_form,
        r: r_form,
        s_list,
        mu: spec.mu,
    })
}

impl QuadrupleFamily {
    /// Rebuild a family from serialised data, re-running every validation.
    pub fn from_data(data: &QuadrupleData) -> Result<Self> {
        let spec = data.spec()?;
        let options = QuadrupleOptions {
            beta: data.beta,
            columns: (data.layout == Layout::Column).then(|| data.columns.clone()),
            choice: data.choice,
            layout: Some(data.layout),
        };
        make_quadruple(&spec, &data.p, &data.q, &data.a, &data.b, &options)
    }

    /// Number of quotients `f_j = P_j/Q`.
    pub fn len(&self) -> usize {
        self.p_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_list.is_empty()
    }

    /// `f_i = P_i/Q`.
    pub fn quotient(&self, i: usize) -> Expr {
        Expr::quotient(self.p_list[i].expr(), self.q.expr())
    }

    pub fn quotients(&self) -> Vec<Expr> {
        (0..self.len()).map(|i| self.quotient(i)).collect()
    }

    /// `τ(f_i) = 2μ(P_iQ − RS_i)/Q²`.
    pub fn tau_closed_form(&self, i: usize) -> Expr {
        let q = self.q.expr();
        let num = &(&self.p_list[i].expr() * &q) - &(&self.r.expr() * &self.s_list[i].expr());
        Expr::quotient(num.scaled(Complex64::new(2.0 * self.mu, 0.0)), q.powi(2))
    }

    /// `(f_i, τ(f_i))` pairs ready for building polynomials.
    pub fn pairs(&self) -> Vec<(Expr, Expr)> {
        (0..self.len()).map(|i| (self.quotient(i), self.tau_closed_form(i))).collect()
    }

    /// Every form of the family; each must be an eigenfunction with the
    /// group's eigenvalue.
    pub fn members(&self) -> Vec<&LinearForm> {
        let mut out: Vec<&LinearForm> = self.p_list.iter().collect();
        out.push(&self.q);
        out.push(&self.r);
        out.extend(self.s_list.iter());
        out
    }

    /// All instances of the ten product rules over the member indices.
    pub fn kappa_relations(&self) -> Vec<KappaRelation> {
        let mu = Complex64::new(self.mu, 0.0);
        let e = |f: &LinearForm| f.expr();
        let rel = |name: String, x: Expr, y: Expr, rhs: Expr| KappaRelation {
            name,
            lhs: (x, y),
            rhs: rhs.scaled(mu),
        };
        let (q, r) = (e(&self.q), e(&self.r));
        let mut out = vec![
            rel("k(Q,Q)=mu*Q*Q".into(), q.clone(), q.clone(), &q * &q),
            rel("k(R,R)=mu*R*R".into(), r.clone(), r.clone(), &r * &r),
            rel("k(Q,R)=mu*Q*R".into(), q.clone(), r.clone(), &q * &r),
        ];
        let n = self.len();
        for j in 0..n {
            let (pj, sj) = (e(&self.p_list[j]), e(&self.s_list[j]));
            let t = j + 1;
            out.push(rel(format!("k(Q,S{t})=mu*Q*S{t}"), q.clone(), sj.clone(), &q * &sj));
            out.push(rel(format!("k(P{t},R)=mu*P{t}*R"), pj.clone(), r.clone(), &pj * &r));
            out.push(rel(format!("k(P{t},Q)=mu*R*S{t}"), pj.clone(), q.clone(), &r * &sj));
            out.push(rel(format!("k(R,S{t})=mu*P{t}*Q"), r.clone(), sj.clone(), &pj * &q));
            for k in 0..n {
                let (pk, sk) = (e(&self.p_list[k]), e(&self.s_list[k]));
                let u = k + 1;
                if k >= j {
                    out.push(rel(format!("k(P{t},P{u})=mu*P{t}*P{u}"), pj.clone(), pk.clone(), &pj * &pk));
                    out.push(rel(format!("k(S{t},S{u})=mu*S{t}*S{u}"), sj.clone(), sk.clone(), &sj * &sk));
                }
                out.push(rel(format!("k(P{t},S{u})=mu*P{u}*S{t}"), pj.clone(), sk.clone(), &pk * &sj));
            }
        }
        out
    }
}

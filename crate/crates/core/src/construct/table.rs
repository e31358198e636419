use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Multi-index of a coefficient; entry `i` is the power of `τ(f_i)`.
pub type MultiIndex = Vec<u32>;

/// Coefficients `c_k` of `Φ = Σ_k c_k Π_i f_i^{d_i − k_i} τ(f_i)^{k_i}` over
/// the box `0 ≤ k_i ≤ d_i`. Every index of the box is stored; indices
/// outside it read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    degrees: Vec<u32>,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

/// All multi-indices of the box in lexicographic order.
pub fn box_indices(degrees: &[u32]) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for &d in degrees {
        out = out
            .into_iter()
            .flat_map(|prefix: MultiIndex| {
                (0..=d).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

impl CoeffTable {
    pub fn zeros(degrees: &[u32]) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidInput(format!("degrees must be positive, got {degrees:?}")));
        }
        let coeffs = box_indices(degrees).into_iter().map(|k| (k, Rational::zero())).collect();
        Ok(Self {
            degrees: degrees.to_vec(),
            coeffs,
        })
    }

    /// Single-variable table from `(c_0, …, c_d)`.
    pub fn from_vec(values: Vec<Rational>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidInput("a single-variable table needs at least c_0 and c_1".into()));
        }
        let mut t = Self::zeros(&[values.len() as u32 - 1])?;
        for (k, v) in values.into_iter().enumerate() {
            t.set(&[k as u32], v)?;
        }
        Ok(t)
    }

    /// Table with a single coefficient one at `k`.
    pub fn unit(degrees: &[u32], k: &[u32]) -> Result<Self> {
        let mut t = Self::zeros(degrees)?;
        t.set(k, Rational::one())?;
        Ok(t)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn arity(&self) -> usize {
        self.degrees.len()
    }

    pub fn contains(&self, k: &[u32]) -> bool {
        k.len() == self.degrees.len() && k.iter().zip(&self.degrees).all(|(a, d)| a <= d)
    }

    pub fn get(&self, k: &[u32]) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `c_{k − e_j}`, zero when the index leaves the box.
    pub(crate) fn get_shifted_down(&self, k: &[u32], j: usize) -> Rational {
        if k[j] == 0 {
            return Rational::zero();
        }
        let mut kk = k.to_vec();
        kk[j] -= 1;
        self.get(&kk)
    }

    pub fn set(&mut self, k: &[u32], v: Rational) -> Result<()> {
        if !self.contains(k) {
            return Err(Error::ShapeError(format!("index {k:?} outside the box {:?}", self.degrees)));
        }
        self.coeffs.insert(k.to_vec(), v);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficients in lexicographic index order.
    pub fn values(&self) -> Vec<Rational> {
        self.coeffs.values().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        Self {
            degrees: self.degrees.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Rescales so that the coefficient at `k` is one.
    pub fn normalized_at(&self, k: &[u32]) -> Result<Self> {
        let c = self.get(k);
        if c.is_zero() {
            return Err(Error::InvalidInput(format!("cannot normalise at {k:?}: coefficient is zero")));
        }
        Ok(self.scaled(&c.recip()))
    }

    /// Equal up to one non-zero overall factor.
    pub fn proportional(&self, other: &CoeffTable) -> bool {
        if self.degrees != other.degrees || self.is_zero() || other.is_zero() {
            return false;
        }
        let (k, pivot) = self.coeffs.iter().find(|(_, v)| !v.is_zero()).expect("non-zero table");
        let ratio = other.get(k) / pivot;
        !ratio.is_zero() && self.coeffs.iter().all(|(k, v)| v * &ratio == other.get(k))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("table serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: TableJson = serde_json::from_str(s)?;
        let mut t = Self::zeros(&raw.degrees)?;
        for entry in raw.coeffs {
            let v = parse_rational(&entry.num, &entry.den)?;
            t.set(&entry.k, v).map_err(|e| Error::Parse(e.to_string()))?;
        }
        Ok(t)
    }
}

impl fmt::Display for CoeffTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(k, v)| format!("{k:?}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    k: MultiIndex,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    degrees: Vec<u32>,
    coeffs: Vec<EntryJson>,
}

impl From<&CoeffTable> for TableJson {
    fn from(t: &CoeffTable) -> Self {
        Self {
            degrees: t.degrees.clone(),
            coeffs: t
                .coeffs
                .iter()
                .map(|(k, v)| EntryJson {
                    k: k.clone(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Harmonic,
    Biharmonic,
}

/// A basis of a solution space.
///
/// Harmonic families hold one table per unit index `e_j`, normalised to
/// `c_{e_j} = 1`. Biharmonic families hold the proper member first
/// (`c_0 = 1`, `c_{e_j} = 0`) followed by the harmonic basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionFamily {
    pub kind: FamilyKind,
    pub degrees: Vec<u32>,
    pub basis_tables: Vec<CoeffTable>,
}

impl SolutionFamily {
    pub fn dimension(&self) -> usize {
        self.basis_tables.len()
    }

    pub fn proper_member(&self) -> Option<&CoeffTable> {
        match self.kind {
            FamilyKind::Biharmonic => self.basis_tables.first(),
            FamilyKind::Harmonic => None,
        }
    }

    pub fn harmonic_members(&self) -> &[CoeffTable] {
        match self.kind {
            FamilyKind::Biharmonic => &self.basis_tables[1..],
            FamilyKind::Harmonic => &self.basis_tables,
        }
    }

    /// `Σ w_i · basis_i`.
    pub fn combination(&self, weights: &[Rational]) -> Result<CoeffTable> {
        if weights.len() != self.basis_tables.len() {
            return Err(Error::DimensionMismatch {
                what: "combination weights".into(),
                expected: self.basis_tables.len(),
                found: weights.len(),
            });
        }
        let mut out = CoeffTable::zeros(&self.degrees)?;
        for (w, t) in weights.iter().zip(&self.basis_tables) {
            for (k, v) in t.iter() {
                let cur = out.get(k);
                out.set(k, cur + w * v)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn box_is_lexicographic() {
        let idx = box_indices(&[2, 1]);
        assert_eq!(idx, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]);
    }

    #[test]
    fn json_round_trip() {
        let t = CoeffTable::from_vec(vec![rat(4, 1), rat(0, 1), rat(-3, 4)]).unwrap();
        let s = t.to_json();
        assert!(s.contains("\"num\": \"-3\""));
        assert!(s.contains("\"den\": \"4\""));
        assert_eq!(CoeffTable::from_json(&s).unwrap(), t);
        assert!(CoeffTable::from_json(&s.replace("\"den\": \"4\"", "\"den\": \"0\"")).is_err());
    }

    #[test]
    fn proportionality() {
        let a = CoeffTable::from_vec(vec![rat(4, 1), rat(0, 1), rat(-3, 1)]).unwrap();
        let b = CoeffTable::from_vec(vec![rat(1, 1), rat(0, 1), rat(-3, 4)]).unwrap();
        let c = CoeffTable::from_vec(vec![rat(1, 1), rat(0, 1), rat(-3, 5)]).unwrap();
        assert!(a.proportional(&b));
        assert!(!a.proportional(&c));
        assert_eq!(a.normalized_at(&[0]).unwrap(), b);
    }

    #[test]
    fn outside_box_reads_zero() {
        let t = CoeffTable::unit(&[1, 1], &[1, 1]).unwrap();
        assert!(t.get(&[2, 0]).is_zero());
        assert!(t.clone().set(&[2, 0], rat(1, 1)).is_err());
        assert!(CoeffTable::zeros(&[0]).is_err());
    }
}

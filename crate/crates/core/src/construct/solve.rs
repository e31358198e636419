use num_traits::{One, Zero};

use super::table::{box_indices, CoeffTable, FamilyKind, MultiIndex, SolutionFamily};
use crate::algebra::Rational;
use crate::error::{Error, Result};

fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Coefficients of `τ(Φ)` in the same monomial basis as `Φ`.
///
/// With `s = Σ k_i`:
/// `c̃_k = 2μ(s² − s)c_k + Σ_j (d_j² − (k_j − 1)²) c_{k−e_j}
///        + Σ_{i<j} [(d_i + 1 − k_i)(d_j + k_j) c_{k−e_i} + (d_j + 1 − k_j)(d_i + k_i) c_{k−e_j}]`.
///
/// Every coefficient multiplying an index with `k_i = d_i + 1` vanishes, so
/// the result lives on the original box.
pub fn tilde_c(table: &CoeffTable, mu: &Rational) -> CoeffTable {
    let d: Vec<i64> = table.degrees().iter().map(|&x| x as i64).collect();
    let m = d.len();
    let mut out = CoeffTable::zeros(table.degrees()).expect("degrees already validated");
    for k in box_indices(table.degrees()) {
        let ki: Vec<i64> = k.iter().map(|&x| x as i64).collect();
        let s: i64 = ki.iter().sum();
        let mut acc = r(2) * mu * r(s * s - s) * table.get(&k);
        for j in 0..m {
            let down = table.get_shifted_down(&k, j);
            if !down.is_zero() {
                acc += down * r(d[j] * d[j] - (ki[j] - 1) * (ki[j] - 1));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let di = table.get_shifted_down(&k, i);
                if !di.is_zero() {
                    acc += di * r((d[i] + 1 - ki[i]) * (d[j] + ki[j]));
                }
                let dj = table.get_shifted_down(&k, j);
                if !dj.is_zero() {
                    acc += dj * r((d[j] + 1 - ki[j]) * (d[i] + ki[i]));
                }
            }
        }
        out.set(&k, acc).expect("index from the box");
    }
    out
}

/// Matrix of `c ↦ c̃` on the box, rows and columns in lexicographic order.
pub fn tension_restriction_matrix(degrees: &[u32], mu: &Rational) -> Result<Vec<Vec<Rational>>> {
    let idx = box_indices(degrees);
    let len = idx.len();
    let mut mat = vec![vec![Rational::zero(); len]; len];
    for (col, k) in idx.iter().enumerate() {
        let image = tilde_c(&CoeffTable::unit(degrees, k)?, mu);
        for (row, (_, v)) in image.iter().enumerate() {
            mat[row][col] = v.clone();
        }
    }
    Ok(mat)
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); cols]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Harmonic single-variable table: `c_0 = 0`, `c_1 = 1`,
/// `−2μ k(k+1) c_{k+1} = (d² − k²) c_k`.
pub fn harmonic_coeffs(d: u32, mu: &Rational) -> Result<CoeffTable> {
    check_mu(mu)?;
    let mut c = vec![Rational::zero(), Rational::one()];
    let dd = d as i64;
    for k in 1..dd {
        let next = &c[k as usize] * r(dd * dd - k * k) / (-r(2) * mu * r(k * (k + 1)));
        c.push(next);
    }
    c.truncate(d as usize + 1);
    if d == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    CoeffTable::from_vec(c)
}

/// Biharmonic single-variable table with prescribed `c_0, c_1`.
///
/// Row `k` of `T²c = 0`, where `(Tc)_k = α_k c_k + β_k c_{k−1}` with
/// `α_k = 2μk(k−1)` and `β_k = d² − (k−1)²`, gives
/// `α_k² c_k = −β_k(α_k + α_{k−1}) c_{k−1} − β_k β_{k−1} c_{k−2}` for `k ≥ 2`.
/// For μ = −1 this is `4(k−1)²k² c_k = 4(k−1)²(d² − (k−1)²) c_{k−1}
/// − (d² − (k−2)²)(d² − (k−1)²) c_{k−2}`.
pub fn biharmonic_coeffs(d: u32, mu: &Rational, c0: Rational, c1: Rational) -> Result<CoeffTable> {
    check_mu(mu)?;
    if d == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    let dd = d as i64;
    let alpha = |k: i64| r(2) * mu * r(k * (k - 1));
    let beta = |k: i64| r(dd * dd - (k - 1) * (k - 1));
    let mut c = vec![c0, c1];
    for k in 2..=dd {
        let a = alpha(k);
        let prev = &c[k as usize - 1];
        let prev2 = &c[k as usize - 2];
        let rhs = -(beta(k) * (&a + alpha(k - 1)) * prev) - beta(k) * beta(k - 1) * prev2;
        c.push(rhs / (&a * &a));
    }
    CoeffTable::from_vec(c)
}

fn check_mu(mu: &Rational) -> Result<()> {
    if mu.is_zero() {
        return Err(Error::InvalidInput("μ must be non-zero".into()));
    }
    Ok(())
}

/// Free columns and a basis of the null space, one vector per free column
/// (that column set to one, the other free columns zero).
fn nullspace(mut a: Vec<Vec<Rational>>, ncols: usize) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][f].clone();
            }
            v
        })
        .collect();
    (free, basis)
}

/// Unknown order for elimination: decreasing total degree, then
/// lexicographic. Eliminating from the top degree down leaves the low-degree
/// indices (`0` and the `e_j`) as the free unknowns.
fn solve_order(degrees: &[u32]) -> Vec<MultiIndex> {
    let mut idx = box_indices(degrees);
    idx.sort_by(|a, b| {
        let sa: u32 = a.iter().sum();
        let sb: u32 = b.iter().sum();
        sb.cmp(&sa).then_with(|| a.cmp(b))
    });
    idx
}

fn unit_index(m: usize, j: usize) -> MultiIndex {
    let mut k = vec![0; m];
    k[j] = 1;
    k
}

fn kernel_tables(
    degrees: &[u32],
    matrix: &[Vec<Rational>],
    expected_free: &[MultiIndex],
) -> Result<Vec<(MultiIndex, CoeffTable)>> {
    let lex = box_indices(degrees);
    let order = solve_order(degrees);
    let pos = |k: &MultiIndex| lex.iter().position(|x| x == k).expect("index in box");
    let permuted: Vec<Vec<Rational>> = matrix
        .iter()
        .map(|row| order.iter().map(|k| row[pos(k)].clone()).collect())
        .collect();
    let (free, basis) = nullspace(permuted, order.len());
    if free.len() != expected_free.len() {
        return Err(Error::SolutionDimension {
            expected: expected_free.len(),
            found: free.len(),
        });
    }
    let free_idx: Vec<MultiIndex> = free.iter().map(|&f| order[f].clone()).collect();
    if expected_free.iter().any(|k| !free_idx.contains(k)) {
        return Err(Error::InconsistentSystem(format!(
            "free unknowns {free_idx:?} differ from the expected {expected_free:?}"
        )));
    }
    let mut out = Vec::new();
    for (k, v) in free_idx.into_iter().zip(basis) {
        let mut t = CoeffTable::zeros(degrees)?;
        for (idx, val) in order.iter().zip(v) {
            t.set(idx, val)?;
        }
        out.push((k, t));
    }
    Ok(out)
}

fn check_system(table: &CoeffTable, matrix: &[Vec<Rational>]) -> Result<()> {
    let v = table.values();
    for row in matrix {
        let s: Rational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        if !s.is_zero() {
            return Err(Error::InconsistentSystem("solution violates its defining system".into()));
        }
    }
    Ok(())
}

/// The harmonic solutions `T c = 0`: one table per unit index `e_j`.
pub fn multi_harmonic_family(degrees: &[u32], mu: &Rational) -> Result<SolutionFamily> {
    check_mu(mu)?;
    let m = degrees.len();
    let t = tension_restriction_matrix(degrees, mu)?;
    let expected: Vec<MultiIndex> = (0..m).map(|j| unit_index(m, j)).collect();
    let mut tables = Vec::new();
    for (k, table) in kernel_tables(degrees, &t, &expected)? {
        check_system(&table, &t)?;
        tables.push((k, table));
    }
    tables.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(SolutionFamily {
        kind: FamilyKind::Harmonic,
        degrees: degrees.to_vec(),
        basis_tables: tables.into_iter().map(|(_, t)| t).collect(),
    })
}

/// The biharmonic solutions `T² c = 0`: the proper member with `c_0 = 1`
/// first, then the harmonic basis. Fails unless the dimension is `m + 1`.
pub fn multi_biharmonic_family(degrees: &[u32], mu: &Rational) -> Result<SolutionFamily> {
    check_mu(mu)?;
    let m = degrees.len();
    let t = tension_restriction_matrix(degrees, mu)?;
    let t2 = mat_mul(&t, &t);
    let mut expected: Vec<MultiIndex> = vec![vec![0; m]];
    expected.extend((0..m).map(|j| unit_index(m, j)));
    let mut tables = kernel_tables(degrees, &t2, &expected)?;
    for (_, table) in &tables {
        check_system(table, &t2)?;
    }
    tables.sort_by(|a, b| {
        let sa: u32 = a.0.iter().sum();
        let sb: u32 = b.0.iter().sum();
        sa.cmp(&sb).then_with(|| b.0.cmp(&a.0))
    });
    if tilde_c(&tables[0].1, mu).is_zero() {
        return Err(Error::InconsistentSystem("proper member is harmonic".into()));
    }
    Ok(SolutionFamily {
        kind: FamilyKind::Biharmonic,
        degrees: degrees.to_vec(),
        basis_tables: tables.into_iter().map(|(_, t)| t).collect(),
    })
}

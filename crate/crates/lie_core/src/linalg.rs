//! Exact sparse elimination over Q(sqrt 3) and SVD-based numeric rank.

use std::collections::{BTreeMap, HashMap};

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Relative singular-value threshold used for every numeric rank.
pub const RANK_TOL: f64 = 1e-10;

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Reduced row echelon form: each row has a unit pivot and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow>,
}

fn axpy(target: &mut SparseRow, factor: &Scalar, row: &SparseRow) {
    for (c, v) in row {
        let delta = factor * v;
        let entry = target.entry(*c).or_insert_with(Scalar::zero);
        *entry -= &delta;
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

fn normalize(row: &mut SparseRow) {
    let lead = row.values().next().cloned().expect("nonempty row");
    if lead.is_one() {
        return;
    }
    let inv = lead.inv().expect("nonzero pivot");
    for v in row.values_mut() {
        *v = &*v * &inv;
    }
}

impl Rref {
    pub fn new(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Self {
        let mut echelon: HashMap<usize, SparseRow> = HashMap::new();
        for mut r in rows {
            r.retain(|_, v| !v.is_zero());
            loop {
                let Some((&lead, coeff)) = r.iter().next() else { break };
                match echelon.get(&lead) {
                    Some(p) => {
                        let coeff = coeff.clone();
                        axpy(&mut r, &coeff, p);
                    }
                    None => {
                        normalize(&mut r);
                        echelon.insert(lead, r);
                        break;
                    }
                }
            }
        }
        let mut pivots: Vec<usize> = echelon.keys().copied().collect();
        pivots.sort_unstable();
        // back substitution, highest pivot first
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut row = echelon.remove(&p).expect("pivot row");
            let hits: Vec<(usize, Scalar)> = row
                .iter()
                .filter(|(c, _)| **c != p && reduced.contains_key(c))
                .map(|(c, v)| (*c, v.clone()))
                .collect();
            for (q, _) in hits {
                if let Some(coeff) = row.get(&q).cloned() {
                    axpy(&mut row, &coeff, &reduced[&q]);
                }
            }
            reduced.insert(p, row);
        }
        let rows = pivots.iter().map(|p| reduced.remove(p).expect("row")).collect();
        Rref { ncols, pivots, rows }
    }

    pub fn from_dense(m: &[Vec<Scalar>], ncols: usize) -> Self {
        let rows = m.iter().map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect::<SparseRow>()
        });
        Rref::new(rows, ncols)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis, one vector per free column in ascending order.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|c| !is_pivot[*c])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.ncols];
                v[f] = Scalar::one();
                for (p, row) in self.pivots.iter().zip(&self.rows) {
                    if let Some(x) = row.get(&f) {
                        v[*p] = -x;
                    }
                }
                v
            })
            .collect()
    }
}

pub fn nullspace_exact(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    Rref::from_dense(m, ncols).nullspace()
}

pub fn rank_exact(m: &[Vec<Scalar>], ncols: usize) -> usize {
    Rref::from_dense(m, ncols).rank()
}

/// Solve `a x = b` exactly; `None` when inconsistent. Free variables are set to zero.
pub fn solve_exact(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let rref = Rref::from_dense(&aug, ncols + 1);
    if rref.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (p, row) in rref.pivots.iter().zip(&rref.rows) {
        if let Some(v) = row.get(&ncols) {
            x[*p] = v.clone();
        }
    }
    Some(x)
}

pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Number of singular values above `rel_tol` times the largest one.
pub fn numeric_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let s = singular_values(m);
    match s.first() {
        None => 0,
        Some(&top) if top == 0.0 => 0,
        Some(&top) => s.iter().filter(|x| **x > rel_tol * top).count(),
    }
}

/// Orthonormal kernel basis by singular-value thresholding.
pub fn numeric_nullspace(m: &DMatrix<f64>, rel_tol: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    // pad to at least square so the SVD returns a full right basis
    let rows = m.nrows().max(n);
    let mut padded = DMatrix::zeros(rows, n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("right singular vectors");
    let top = svd.singular_values.iter().copied().fold(0.0, f64::max);
    (0..n)
        .filter(|&i| top == 0.0 || svd.singular_values[i] <= rel_tol * top)
        .map(|i| vt.row(i).transpose())
        .collect()
}

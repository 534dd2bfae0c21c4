//! Joint kernels of the derivations `L_j = sum C_jk^i x_k d/dx_i` on homogeneous polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use lie_core::linalg::{Rref, SparseRow};
use lie_core::{Scalar, SubalgebraSpec};
use num_traits::Zero;
use poly_engine::{Monomial, Polynomial, DEGREE_CAP};
use serde::{Deserialize, Serialize};

use crate::error::{InvariantError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantBasis {
    pub a_indices: Vec<usize>,
    pub restrict_to_m: bool,
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

/// Variables used for invariants: all coordinates, or only those of `m`.
pub fn invariant_vars(sub: &SubalgebraSpec, restrict_to_m: bool) -> Arc<Vec<String>> {
    let names = &sub.parent.coordinate_names;
    if restrict_to_m {
        Arc::new(sub.m_indices.iter().map(|&i| names[i].clone()).collect())
    } else {
        Arc::new(names.clone())
    }
}

/// Basis indices of the chosen variables.
pub fn variable_indices(sub: &SubalgebraSpec, restrict_to_m: bool) -> Vec<usize> {
    if restrict_to_m {
        sub.m_indices.clone()
    } else {
        (0..sub.parent.dim).collect()
    }
}

/// For each `j` in `a`, the linear substitution data `x_i -> sum_k C_jk^i x_k` over the chosen variables.
/// `ops[j][i]` lists `(k, C_jk^i)` with `i, k` local variable positions.
pub fn operator_data(sub: &SubalgebraSpec, restrict_to_m: bool) -> Vec<Vec<Vec<(usize, Scalar)>>> {
    let idx = variable_indices(sub, restrict_to_m);
    let c = &sub.parent.structure_constants;
    sub.a_indices
        .iter()
        .map(|&j| {
            idx.iter()
                .map(|&i| {
                    idx.iter()
                        .enumerate()
                        .filter(|(_, &k)| !c[j][k][i].is_zero())
                        .map(|(lk, &k)| (lk, c[j][k][i].clone()))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `L_j p` for a polynomial over the chosen variables.
pub fn apply_operator(op: &[Vec<(usize, Scalar)>], p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.vars());
    for (m, coef) in p.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (k, c) in &op[i] {
                let mut m2 = m.0.clone();
                m2[i] -= 1;
                m2[*k] += 1;
                out.add_term(Monomial(m2), &(coef * c) * &Scalar::from_int(e as i64));
            }
        }
    }
    out
}

/// Monomials of a degree in descending graded-lex order, and their positions.
pub fn monomial_columns(nvars: usize, degree: u32) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let mut cols = Monomial::all_of_degree(nvars, degree);
    cols.reverse();
    let index = cols.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    (cols, index)
}

pub fn to_row(p: &Polynomial, index: &HashMap<Monomial, usize>) -> SparseRow {
    p.terms().iter().map(|(m, c)| (index[m], c.clone())).collect()
}

pub fn from_row(row: &SparseRow, cols: &[Monomial], vars: &Arc<Vec<String>>) -> Polynomial {
    Polynomial::from_terms(vars, row.iter().map(|(c, v)| (cols[*c].clone(), v.clone())))
}

/// Exact basis of degree-`k` polynomials annihilated by every `L_j`, `j` in `a`, in reduced echelon form.
pub fn invariant_space(sub: &SubalgebraSpec, degree: u32, restrict_to_m: bool) -> Result<InvariantBasis> {
    if degree > DEGREE_CAP {
        return Err(InvariantError::DegreeCap(degree));
    }
    let vars = invariant_vars(sub, restrict_to_m);
    let nv = vars.len();
    let (cols, index) = monomial_columns(nv, degree);
    let ops = operator_data(sub, restrict_to_m);
    // rows of the stacked operator matrix, keyed by (operator, output monomial)
    let mut rows: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
    for (ci, m) in cols.iter().enumerate() {
        let mono = Polynomial::from_terms(&vars, [(m.clone(), Scalar::from_int(1))]);
        for (j, op) in ops.iter().enumerate() {
            let image = apply_operator(op, &mono);
            for (out_m, c) in image.terms() {
                rows.entry((j, index[out_m])).or_default().insert(ci, c.clone());
            }
        }
    }
    let kernel = Rref::new(rows.into_values(), cols.len()).nullspace();
    let kernel_rows: Vec<SparseRow> = kernel
        .iter()
        .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
        .collect();
    let canon = Rref::new(kernel_rows, cols.len());
    let basis = canon.rows.iter().map(|r| from_row(r, &cols, &vars)).collect();
    Ok(InvariantBasis { a_indices: sub.a_indices.clone(), restrict_to_m, degree, basis })
}

/// `true` when every `L_j` kills `p`.
pub fn is_invariant(sub: &SubalgebraSpec, p: &Polynomial, restrict_to_m: bool) -> bool {
    operator_data(sub, restrict_to_m).iter().all(|op| apply_operator(op, p).is_zero())
}

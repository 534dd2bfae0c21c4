//! Indecomposable generators of an invariant algebra and the relations among them.

use std::sync::Arc;

use lie_core::linalg::{Rref, SparseRow};
use lie_core::{Scalar, SubalgebraSpec};
use num_traits::Zero;
use poly_engine::{Monomial, Polynomial};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::space::{invariant_space, invariant_vars, monomial_columns, to_row, from_row};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub poly: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub a_indices: Vec<usize>,
    pub restrict_to_m: bool,
    pub max_degree: u32,
    pub generators: Vec<Generator>,
    /// Polynomials in the generator names that vanish after substitution.
    pub relations: Vec<Polynomial>,
}

impl GeneratorSet {
    pub fn generator_vars(&self) -> Arc<Vec<String>> {
        Arc::new(self.generators.iter().map(|g| g.name.clone()).collect())
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// Substitute the generators into a polynomial over their names.
    pub fn expand(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(p.compose(&self.polys())?)
    }

    pub fn to_report(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&format!("generator {} (degree {}): {}\n", g.name, g.degree, g.poly));
        }
        for r in &self.relations {
            s.push_str(&format!("relation: {r} = 0\n"));
        }
        s
    }
}

/// Exponent vectors over generators whose weighted degree equals `target`.
pub fn weighted_monomials(weights: &[u32], target: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, w: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e * w[i] <= left {
            cur[i] = e;
            rec(i + 1, left - e * w[i], w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if weights.is_empty() {
        if target == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, target, weights, &mut vec![0; weights.len()], &mut out);
    out.sort_by(|a, b| Monomial(b.clone()).cmp(&Monomial(a.clone())));
    out
}

fn product(gens: &[Generator], exps: &[u32], vars: &Arc<Vec<String>>) -> Result<Polynomial> {
    let mut p = Polynomial::constant(vars, Scalar::from_int(1));
    for (g, &e) in gens.iter().zip(exps) {
        if e > 0 {
            p = p.mul(&g.poly.pow(e)?)?;
        }
    }
    Ok(p)
}

/// Reduce `row` against a reduced echelon form.
fn reduce(row: &SparseRow, basis: &Rref) -> SparseRow {
    let mut r = row.clone();
    for (p, prow) in basis.pivots.iter().zip(&basis.rows) {
        if let Some(c) = r.get(p).cloned() {
            for (k, v) in prow {
                let e = r.entry(*k).or_insert_with(Scalar::zero);
                *e -= &(&c * v);
                if e.is_zero() {
                    r.remove(k);
                }
            }
        }
    }
    r
}

/// Generators of degree `<= max_degree` modulo products of lower ones, with relations up to `max_degree`.
pub fn indecomposable_generators(sub: &SubalgebraSpec, max_degree: u32, restrict_to_m: bool) -> Result<GeneratorSet> {
    let vars = invariant_vars(sub, restrict_to_m);
    let mut gens: Vec<Generator> = Vec::new();
    for d in 1..=max_degree {
        let space = invariant_space(sub, d, restrict_to_m)?;
        if space.basis.is_empty() {
            continue;
        }
        let (cols, index) = monomial_columns(vars.len(), d);
        let weights: Vec<u32> = gens.iter().map(|g| g.degree).collect();
        let decomposable: Vec<SparseRow> = weighted_monomials(&weights, d)
            .iter()
            .map(|e| product(&gens, e, &vars).map(|p| to_row(&p, &index)))
            .collect::<Result<_>>()?;
        let dec = Rref::new(decomposable, cols.len());
        let remainders: Vec<SparseRow> = space.basis.iter().map(|p| reduce(&to_row(p, &index), &dec)).collect();
        let fresh = Rref::new(remainders, cols.len());
        for (k, row) in fresh.rows.iter().enumerate() {
            gens.push(Generator { name: format!("f{d}_{}", k + 1), degree: d, poly: from_row(row, &cols, &vars) });
        }
    }
    let relations = find_relations(&gens, max_degree, &vars)?;
    Ok(GeneratorSet { a_indices: sub.a_indices.clone(), restrict_to_m, max_degree, generators: gens, relations })
}

/// Relations of weighted degree `<= max_degree` not generated by lower ones.
pub fn find_relations(gens: &[Generator], max_degree: u32, vars: &Arc<Vec<String>>) -> Result<Vec<Polynomial>> {
    let gvars: Arc<Vec<String>> = Arc::new(gens.iter().map(|g| g.name.clone()).collect());
    let weights: Vec<u32> = gens.iter().map(|g| g.degree).collect();
    let mut relations: Vec<(u32, Polynomial)> = Vec::new();
    for d in 1..=max_degree {
        let monos = weighted_monomials(&weights, d);
        if monos.len() < 2 {
            continue;
        }
        let (_, index) = monomial_columns(vars.len(), d);
        // columns are generator monomials, rows are coordinate monomials
        let mut rows: std::collections::BTreeMap<usize, SparseRow> = Default::default();
        for (ci, e) in monos.iter().enumerate() {
            let p = product(gens, e, vars)?;
            for (m, c) in p.terms() {
                rows.entry(index[m]).or_default().insert(ci, c.clone());
            }
        }
        let kernel = Rref::new(rows.into_values(), monos.len()).nullspace();
        if kernel.is_empty() {
            continue;
        }
        let mono_index: std::collections::HashMap<Vec<u32>, usize> =
            monos.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        // multiples of earlier relations
        let mut implied: Vec<SparseRow> = Vec::new();
        for (rd, r) in &relations {
            for e in weighted_monomials(&weights, d - rd) {
                let shift = Polynomial::from_terms(&gvars, [(Monomial(e), Scalar::from_int(1))]);
                let prod = r.mul(&shift)?;
                implied.push(prod.terms().iter().map(|(m, c)| (mono_index[&m.0], c.clone())).collect());
            }
        }
        let implied = Rref::new(implied, monos.len());
        let new_rows: Vec<SparseRow> = kernel
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            .map(|r| reduce(&r, &implied))
            .collect();
        let fresh = Rref::new(new_rows, monos.len());
        for row in &fresh.rows {
            let p = Polynomial::from_terms(&gvars, row.iter().map(|(i, c)| (Monomial(monos[*i].clone()), c.clone())));
            relations.push((d, p));
        }
    }
    Ok(relations.into_iter().map(|(_, p)| p).collect())
}

//! Reductive splittings, centralizers and regularity of elements.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::LieAlgebraSpec;
use crate::error::{LieError, Result};
use crate::linalg::{nullspace_exact, numeric_rank, RANK_TOL};
use crate::numeric::NumericAlgebra;
use crate::scalar::Scalar;

/// A subalgebra spanned by basis elements together with its `B`-orthogonal complement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubalgebraSpec {
    pub parent: LieAlgebraSpec,
    pub a_indices: Vec<usize>,
    pub m_indices: Vec<usize>,
}

impl SubalgebraSpec {
    /// Takes `a` as the given basis indices and `m` as the rest, then checks the split is reductive.
    pub fn new(parent: LieAlgebraSpec, a_indices: Vec<usize>) -> Result<Self> {
        let n = parent.dim;
        let mut a = a_indices;
        a.sort_unstable();
        a.dedup();
        if a.iter().any(|&i| i >= n) {
            return Err(LieError::InvalidSplit("index out of range".into()));
        }
        let m: Vec<usize> = (0..n).filter(|i| !a.contains(i)).collect();
        let sub = SubalgebraSpec { parent, a_indices: a, m_indices: m };
        sub.check()?;
        Ok(sub)
    }

    fn supported_on(v: &[Scalar], idx: &[usize]) -> bool {
        v.iter().enumerate().all(|(i, c)| c.is_zero() || idx.contains(&i))
    }

    fn check(&self) -> Result<()> {
        let p = &self.parent;
        for &i in &self.a_indices {
            for &j in &self.m_indices {
                if !p.bform[i][j].is_zero() {
                    return Err(LieError::InvalidSplit(format!("B(e{i}, e{j}) != 0")));
                }
                if !Self::supported_on(&p.structure_constants[i][j], &self.m_indices) {
                    return Err(LieError::InvalidSplit(format!("[e{i}, e{j}] leaves m")));
                }
            }
            for &j in &self.a_indices {
                if !Self::supported_on(&p.structure_constants[i][j], &self.a_indices) {
                    return Err(LieError::InvalidSplit(format!("[e{i}, e{j}] leaves a")));
                }
            }
        }
        Ok(())
    }

    /// Standard maximal torus of the algebra.
    pub fn torus(parent: LieAlgebraSpec) -> Result<Self> {
        let idx = parent.cartan_indices.clone();
        Self::new(parent, idx)
    }

    pub fn is_reductive(&self) -> bool {
        self.check().is_ok()
    }

    /// `m`-component of a full coefficient vector.
    pub fn project_m(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; x.len()];
        for &i in &self.m_indices {
            out[i] = x[i];
        }
        out
    }

    /// Embed coefficients listed over `m_indices` into the full algebra.
    pub fn embed_m(&self, xm: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.parent.dim];
        for (&i, v) in self.m_indices.iter().zip(xm) {
            out[i] = *v;
        }
        out
    }

    pub fn restrict_m(&self, x: &[f64]) -> Vec<f64> {
        self.m_indices.iter().map(|&i| x[i]).collect()
    }
}

/// Exact basis of `ker ad w`, one vector per free column in ascending order.
pub fn centralizer_basis(spec: &LieAlgebraSpec, w: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
    if w.len() != spec.dim {
        return Err(LieError::Dimension { expected: spec.dim, got: w.len() });
    }
    if w.iter().all(Scalar::is_zero) {
        return Err(LieError::ZeroElement);
    }
    Ok(nullspace_exact(&spec.ad_matrix(w), spec.dim))
}

/// Centralizer of `w` as a basis-aligned reductive split.
pub fn centralizer_of(spec: &LieAlgebraSpec, w: &[Scalar]) -> Result<SubalgebraSpec> {
    let kernel = centralizer_basis(spec, w)?;
    let mut idx = Vec::new();
    for v in &kernel {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        if nz.len() != 1 {
            return Err(LieError::NotBasisAligned(kernel.len()));
        }
        idx.push(nz[0]);
    }
    SubalgebraSpec::new(spec.clone(), idx)
}

/// `dim ker ad w` by singular-value thresholding.
pub fn centralizer_dim_f64(alg: &NumericAlgebra, w: &[f64]) -> usize {
    alg.dim - numeric_rank(&alg.ad_matrix(w), RANK_TOL)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub regular: bool,
    /// Roots vanishing on the element, both signs listed.
    pub vanishing_roots: Vec<String>,
    pub positive_vanishing: usize,
}

fn from_pairs(pairs: Vec<String>) -> Regularity {
    let positive_vanishing = pairs.len();
    let mut vanishing_roots = Vec::new();
    for p in pairs {
        vanishing_roots.push(format!("-{p}"));
        vanishing_roots.push(p);
    }
    vanishing_roots.sort();
    Regularity { regular: positive_vanishing == 0, vanishing_roots, positive_vanishing }
}

/// Roots vanishing on `w`; exact through root data when `w` lies in the standard torus.
pub fn regularity(spec: &LieAlgebraSpec, w: &[Scalar]) -> Result<Regularity> {
    if w.len() != spec.dim {
        return Err(LieError::Dimension { expected: spec.dim, got: w.len() });
    }
    if let Some(rd) = &spec.root_data {
        let in_torus = w.iter().enumerate().all(|(i, c)| c.is_zero() || spec.cartan_indices.contains(&i));
        if in_torus {
            let h: Vec<Scalar> = spec.cartan_indices.iter().map(|&i| w[i].clone()).collect();
            let pairs = (0..rd.roots.len())
                .filter(|&k| rd.root_value(k, &h).is_zero())
                .map(|k| rd.roots[k].name.clone())
                .collect();
            return Ok(from_pairs(pairs));
        }
    }
    if spec.matrix_rep.is_none() {
        return Err(LieError::NoMatrixRep(spec.name.clone()));
    }
    let wf: Vec<f64> = w.iter().map(Scalar::to_f64).collect();
    regularity_f64(&NumericAlgebra::new(spec), &wf)
}

/// Eigenvalue coincidences of `i w`; roots are named `t{i}-t{j}` over ascending eigenvalues.
pub fn regularity_f64(alg: &NumericAlgebra, w: &[f64]) -> Result<Regularity> {
    if !alg.has_matrices() {
        return Err(LieError::NoMatrixRep("numeric algebra".into()));
    }
    let h = alg.to_matrix(w) * num_complex::Complex64::new(0.0, 1.0);
    let mut ev: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    let scale = ev.iter().map(|x| x.abs()).fold(1.0, f64::max);
    let mut pairs = Vec::new();
    for i in 0..ev.len() {
        for j in (i + 1)..ev.len() {
            if (ev[j] - ev[i]).abs() <= 1e-9 * scale {
                pairs.push(format!("t{}-t{}", i + 1, j + 1));
            }
        }
    }
    Ok(from_pairs(pairs))
}

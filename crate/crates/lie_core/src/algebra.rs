//! Lie algebras given by structure constants and an invariant form.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cmatrix::CMatrix;
use crate::error::{LieError, Result};
use crate::linalg::solve_exact;
use crate::scalar::{CScalar, Scalar};

/// One positive root of a matrix algebra with its root vectors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub name: String,
    /// Matrix position `(i, j)`, `i < j`, of the positive root vector.
    pub position: (usize, usize),
    /// Complex root vectors, normalized so that `B(E_a, E_-a) = 1`.
    pub e_pos: CMatrix,
    pub e_neg: CMatrix,
    /// Scale applied to the matrix unit to obtain `e_pos`.
    pub e_pos_scale: Scalar,
    /// `[E_a, E_-a]`, a complex element of the Cartan subalgebra.
    pub complex_coroot: CMatrix,
    /// Real compact coroot `i(E_ii - E_jj)` in basis coordinates.
    pub coroot: Vec<Scalar>,
    /// Basis indices carrying the real and imaginary parts of `z = B(X, E_-a)`.
    pub re_index: usize,
    pub im_index: usize,
    /// Value of the real root on each Cartan basis element.
    pub values_on_cartan: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootData {
    pub roots: Vec<Root>,
    /// Indices into `roots` of the simple roots.
    pub simple: Vec<usize>,
    /// `alpha_i(h_j)` over the simple roots.
    pub cartan_matrix: Vec<Vec<i64>>,
}

impl RootData {
    /// Value `alpha_k(Y)` for `Y` in the Cartan subalgebra, given by coordinates on the Cartan basis.
    pub fn root_value(&self, k: usize, cartan_coords: &[Scalar]) -> Scalar {
        self.roots[k]
            .values_on_cartan
            .iter()
            .zip(cartan_coords)
            .fold(Scalar::zero(), |acc, (a, c)| &acc + &(a * c))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieAlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub basis_labels: Vec<String>,
    /// Names of the coefficient coordinates used by polynomials.
    pub coordinate_names: Vec<String>,
    /// `structure_constants[i][j][k] = C_ij^k`, `[e_i, e_j] = sum_k C_ij^k e_k`.
    pub structure_constants: Vec<Vec<Vec<Scalar>>>,
    /// `B(e_i, e_j) = -1/2 tr(e_i e_j)`.
    pub bform: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_rep: Option<Vec<CMatrix>>,
    /// Basis indices spanning the standard maximal torus.
    pub cartan_indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_data: Option<RootData>,
    pub normalization: String,
}

/// `-1/2 tr(xy)`, which must be real on anti-Hermitian inputs.
pub fn trace_form(x: &CMatrix, y: &CMatrix) -> Result<Scalar> {
    let t = x.mul(y).trace();
    if !t.im.is_zero() {
        return Err(LieError::InvalidAlgebra("trace form is not real".into()));
    }
    Ok(&t.re * &Scalar::from_ratio(-1, 2))
}

impl LieAlgebraSpec {
    /// Build from an exact anti-Hermitian matrix basis; constants come from commutators.
    pub fn from_matrices(
        name: &str,
        labels: Vec<String>,
        coordinate_names: Vec<String>,
        mats: Vec<CMatrix>,
        rank: usize,
        cartan_indices: Vec<usize>,
        normalization: &str,
    ) -> Result<Self> {
        let n = mats.len();
        if labels.len() != n || coordinate_names.len() != n {
            return Err(LieError::Dimension { expected: n, got: labels.len() });
        }
        if let Some(bad) = mats.iter().position(|m| !m.is_anti_hermitian()) {
            return Err(LieError::InvalidAlgebra(format!("basis element {bad} is not anti-Hermitian")));
        }
        let mut bform = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                bform[i][j] = trace_form(&mats[i], &mats[j])?;
            }
        }
        let mut spec = LieAlgebraSpec {
            name: name.to_string(),
            dim: n,
            rank,
            basis_labels: labels,
            coordinate_names,
            structure_constants: vec![vec![vec![Scalar::zero(); n]; n]; n],
            bform,
            matrix_rep: Some(mats),
            cartan_indices,
            root_data: None,
            normalization: normalization.to_string(),
        };
        let mats = spec.matrix_rep.clone().expect("set above");
        for i in 0..n {
            for j in (i + 1)..n {
                let c = spec.coords_of(&mats[i].commutator(&mats[j]))?;
                for k in 0..n {
                    spec.structure_constants[j][i][k] = -&c[k];
                }
                spec.structure_constants[i][j] = c;
            }
        }
        Ok(spec)
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::from_int(1);
        v
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, c) in self.structure_constants[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn b(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !y[j].is_zero() && !self.bform[i][j].is_zero() {
                    acc += &(&(&x[i] * &self.bform[i][j]) * &y[j]);
                }
            }
        }
        acc
    }

    /// Matrix of `ad x`: entry `[k][j]` is the `k`-th coefficient of `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.dim;
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for j in 0..n {
            let col = self.bracket(x, &self.unit(j));
            for k in 0..n {
                m[k][j] = col[k].clone();
            }
        }
        m
    }

    /// Inverse Gram matrix of `B`; symmetric, so solving column by column gives its rows.
    pub fn gram_inverse(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .map(|j| solve_exact(&self.bform, &self.unit(j)).expect("nondegenerate form"))
            .collect()
    }

    pub fn to_matrix(&self, x: &[Scalar]) -> Result<CMatrix> {
        let mats = self.matrix_rep.as_ref().ok_or_else(|| LieError::NoMatrixRep(self.name.clone()))?;
        let size = mats[0].size;
        Ok(mats
            .iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .fold(CMatrix::zeros(size), |acc, (m, c)| acc.add(&m.scale_real(c))))
    }

    /// Basis coefficients of an exact matrix; fails if it lies outside the span.
    pub fn coords_of(&self, m: &CMatrix) -> Result<Vec<Scalar>> {
        let mats = self.matrix_rep.as_ref().ok_or_else(|| LieError::NoMatrixRep(self.name.clone()))?;
        let rhs: Vec<Scalar> = mats.iter().map(|e| trace_form(m, e)).collect::<Result<_>>()?;
        let c = solve_exact(&self.bform, &rhs)
            .ok_or_else(|| LieError::InvalidAlgebra("degenerate trace form".into()))?;
        if self.to_matrix(&c)? != *m {
            return Err(LieError::InvalidAlgebra("matrix lies outside the basis span".into()));
        }
        Ok(c)
    }

    /// Coordinates of the element `-i h` for an exact Hermitian matrix `h`.
    pub fn element_from_hermitian(&self, h: &CMatrix) -> Result<Vec<Scalar>> {
        let minus_i = CScalar::new(Scalar::zero(), Scalar::from_int(-1));
        self.coords_of(&h.scale(&minus_i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.structure_constants[i][j][k] == -&self.structure_constants[j][i][k]))
        })
    }

    /// Every Jacobi sum over basis triples vanishes exactly.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if (0..n).any(|l| !(&(&a[l] + &b[l]) + &c[l]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn form_is_invariant(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let xy = self.bracket(&self.unit(i), &self.unit(j));
                for k in 0..n {
                    let xz = self.bracket(&self.unit(i), &self.unit(k));
                    let s = &self.b(&xy, &self.unit(k)) + &self.b(&self.unit(j), &xz);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn form_is_symmetric_nondegenerate(&self) -> bool {
        let n = self.dim;
        let sym = (0..n).all(|i| (0..n).all(|j| self.bform[i][j] == self.bform[j][i]));
        sym && crate::linalg::rank_exact(&self.bform, n) == n
    }

    /// Matrix commutators reproduce the structure constants exactly.
    pub fn matrix_rep_consistent(&self) -> bool {
        let Some(mats) = &self.matrix_rep else { return true };
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let lhs = mats[i].commutator(&mats[j]);
                match self.to_matrix(&self.structure_constants[i][j]) {
                    Ok(rhs) if rhs == lhs => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        if self.basis_labels.len() != n
            || self.structure_constants.len() != n
            || self.bform.len() != n
            || self.structure_constants.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return Err(LieError::InvalidAlgebra("inconsistent array sizes".into()));
        }
        if !self.is_antisymmetric() {
            return Err(LieError::InvalidAlgebra("structure constants are not antisymmetric".into()));
        }
        if !self.satisfies_jacobi() {
            return Err(LieError::InvalidAlgebra("Jacobi identity fails".into()));
        }
        if !self.form_is_symmetric_nondegenerate() {
            return Err(LieError::InvalidAlgebra("form is degenerate or not symmetric".into()));
        }
        if !self.form_is_invariant() {
            return Err(LieError::InvalidAlgebra("form is not ad-invariant".into()));
        }
        if !self.matrix_rep_consistent() {
            return Err(LieError::InvalidAlgebra("matrix commutators disagree with constants".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: LieAlgebraSpec = serde_json::from_str(s).map_err(|e| LieError::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }
}

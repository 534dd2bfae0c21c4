//! The five slice generators of the regular chain and their bracket table.
//!
//! Slice invariants on `m` are `u_k = |z_k|^2` and `v + i w = z1 z2 conj(z3)` with
//! `z_k = x_k + i y_k` the root coordinates. Brackets are computed from
//! `{theta1, theta2}(xi) = -B(xi, [(grad theta1)_m, (grad theta2)_m])`, `xi = X - eps W`,
//! then rewritten in the generators.

use std::sync::Arc;

use invariant_solver::generators::weighted_monomials;
use lie_core::linalg::solve_exact;
use lie_core::{Scalar, SubalgebraSpec};
use magnetic_phase::{CaseTag, MagneticSystem};
use num_traits::Zero;
use poly_engine::{Monomial, Polynomial};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

pub const GENERATOR_NAMES: [&str; 5] = ["u1", "u2", "u3", "v", "w"];
const WEIGHTS: [u32; 6] = [2, 2, 2, 3, 3, 1];

/// Generators over the `m` coordinates plus a trailing `eps`.
#[derive(Clone, Debug)]
pub struct RegularChain {
    pub sub: SubalgebraSpec,
    pub w: Vec<Scalar>,
    /// `x1, y1, x2, y2, x3, y3, eps`.
    pub vars: Arc<Vec<String>>,
    pub generators: Vec<Polynomial>,
    /// `c_k = kappa_k eps` with `kappa_k = B(W, h_k)` for the coroots `h_1, h_2, h_3`.
    pub kappa: Vec<Scalar>,
    /// `u1, u2, u3, v, w, eps`.
    pub table_vars: Arc<Vec<String>>,
}

impl RegularChain {
    pub fn new(sys: &MagneticSystem) -> Result<Self> {
        if sys.case_tag != CaseTag::Regular {
            return Err(VerifyError::WrongCase("regular"));
        }
        let alg = &sys.alg;
        let rd = alg.root_data.as_ref().ok_or(VerifyError::NoRootData)?;
        let mut names: Vec<String> = sys.sub.m_indices.iter().map(|&i| alg.coordinate_names[i].clone()).collect();
        names.push("eps".into());
        let vars = Arc::new(names);
        let local = |i: usize| sys.sub.m_indices.iter().position(|&k| k == i).expect("root coordinate in m");
        let z: Vec<(Polynomial, Polynomial)> = rd
            .roots
            .iter()
            .map(|r| (Polynomial::var(&vars, local(r.re_index)), Polynomial::var(&vars, local(r.im_index))))
            .collect();
        let sq = |p: &Polynomial| p.pow(2).expect("degree 2");
        let mul = |a: &Polynomial, b: &Polynomial| a.mul(b).expect("small degree");
        let u: Vec<Polynomial> = z.iter().map(|(x, y)| &sq(x) + &sq(y)).collect();
        // z1 z2 = a + i b, then (a + i b)(x3 - i y3)
        let a = &mul(&z[0].0, &z[1].0) - &mul(&z[0].1, &z[1].1);
        let b = &mul(&z[0].0, &z[1].1) + &mul(&z[0].1, &z[1].0);
        let v = &mul(&a, &z[2].0) + &mul(&b, &z[2].1);
        let w = &mul(&b, &z[2].0) - &mul(&a, &z[2].1);
        let kappa = rd
            .roots
            .iter()
            .map(|r| {
                let mut acc = Scalar::zero();
                for i in 0..alg.dim {
                    for j in 0..alg.dim {
                        if !sys.w[i].is_zero() && !alg.bform[i][j].is_zero() && !r.coroot[j].is_zero() {
                            acc += &(&(&sys.w[i] * &alg.bform[i][j]) * &r.coroot[j]);
                        }
                    }
                }
                acc
            })
            .collect();
        let mut tv: Vec<String> = GENERATOR_NAMES.iter().map(|s| s.to_string()).collect();
        tv.push("eps".into());
        Ok(RegularChain {
            sub: sys.sub.clone(),
            w: sys.w.clone(),
            vars,
            generators: vec![u[0].clone(), u[1].clone(), u[2].clone(), v, w],
            kappa,
            table_vars: Arc::new(tv),
        })
    }

    pub fn eps(&self) -> Polynomial {
        Polynomial::var(&self.vars, self.vars.len() - 1)
    }

    /// The generators as polynomials over the `m` coordinates alone.
    pub fn generators_on_m(&self) -> Vec<Polynomial> {
        let m = Arc::new(self.vars[..self.vars.len() - 1].to_vec());
        self.generators
            .iter()
            .map(|g| {
                let images: Vec<Polynomial> = (0..self.vars.len())
                    .map(|i| if i + 1 < self.vars.len() { Polynomial::var(&m, i) } else { Polynomial::zero(&m) })
                    .collect();
                g.compose(&images).expect("same arity")
            })
            .collect()
    }

    /// `-B(xi, [(grad theta1)_m, (grad theta2)_m])` for polynomials over `vars`.
    pub fn slice_bracket(&self, t1: &Polynomial, t2: &Polynomial) -> Result<Polynomial> {
        let alg = &self.sub.parent;
        let n = alg.dim;
        let ginv = alg.gram_inverse();
        let grad = |t: &Polynomial| -> Vec<Polynomial> {
            let d: Vec<Polynomial> = (0..self.sub.m_indices.len()).map(|l| t.derivative(l)).collect();
            (0..n)
                .map(|a| {
                    self.sub.m_indices.iter().enumerate().fold(Polynomial::zero(&self.vars), |acc, (l, &i)| {
                        if ginv[a][i].is_zero() {
                            acc
                        } else {
                            &acc + &d[l].scale(&ginv[a][i])
                        }
                    })
                })
                .collect()
        };
        let (g1, g2) = (grad(t1), grad(t2));
        let mut br = vec![Polynomial::zero(&self.vars); n];
        for i in 0..n {
            if g1[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if g2[j].is_zero() {
                    continue;
                }
                let prod = g1[i].mul(&g2[j])?;
                for (k, c) in alg.structure_constants[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        br[k] = &br[k] + &prod.scale(c);
                    }
                }
            }
        }
        let eps = self.eps();
        let xi: Vec<Polynomial> = (0..n)
            .map(|k| {
                let x = match self.sub.m_indices.iter().position(|&i| i == k) {
                    Some(l) => Polynomial::var(&self.vars, l),
                    None => Polynomial::zero(&self.vars),
                };
                if self.w[k].is_zero() {
                    x
                } else {
                    &x - &eps.scale(&self.w[k])
                }
            })
            .collect();
        let mut out = Polynomial::zero(&self.vars);
        for k in 0..n {
            if xi[k].is_zero() {
                continue;
            }
            for l in 0..n {
                if !alg.bform[k][l].is_zero() && !br[l].is_zero() {
                    out = &out + &xi[k].mul(&br[l])?.scale(&alg.bform[k][l]);
                }
            }
        }
        Ok(-&out)
    }

    /// Substitute the generators (and `eps`) into a polynomial over `table_vars`.
    pub fn expand(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut images = self.generators.clone();
        images.push(self.eps());
        Ok(p.compose(&images)?)
    }

    /// Writes `p` as a polynomial in `u1, u2, u3, v, w, eps`; the second value is the
    /// part that admits no such expression (zero on success).
    pub fn express(&self, p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let mut found = Polynomial::zero(&self.table_vars);
        let mut remainder = Polynomial::zero(&self.vars);
        for (d, comp) in p.homogeneous_components() {
            let cands = weighted_monomials(&WEIGHTS, d);
            let expanded: Vec<Polynomial> = cands
                .iter()
                .map(|e| self.expand(&Polynomial::from_terms(&self.table_vars, [(Monomial(e.clone()), Scalar::from_int(1))])))
                .collect::<Result<_>>()?;
            let mut rows: Vec<Monomial> = comp.terms().keys().cloned().collect();
            for q in &expanded {
                rows.extend(q.terms().keys().cloned());
            }
            rows.sort();
            rows.dedup();
            let a: Vec<Vec<Scalar>> = rows.iter().map(|m| expanded.iter().map(|q| q.coeff(m)).collect()).collect();
            let b: Vec<Scalar> = rows.iter().map(|m| comp.coeff(m)).collect();
            match solve_exact(&a, &b) {
                Some(sol) => {
                    for (e, c) in cands.iter().zip(sol) {
                        if !c.is_zero() {
                            found.add_term(Monomial(e.clone()), c);
                        }
                    }
                }
                None => remainder = &remainder + &comp,
            }
        }
        Ok((found, remainder))
    }

    /// The closed forms asserted for the table, with `c_k = kappa_k eps`.
    pub fn printed_table(&self) -> BracketTable {
        self.printed_with(&self.kappa)
    }

    fn printed_with(&self, kappa: &[Scalar]) -> BracketTable {
        let tv = &self.table_vars;
        let g = |i: usize| Polynomial::var(tv, i);
        let (v, w) = (g(3), g(4));
        let c: Vec<Polynomial> = kappa.iter().map(|k| g(5).scale(k)).collect();
        let two = Scalar::from_int(2);
        let mul = |a: &Polynomial, b: &Polynomial| a.mul(b).expect("small degree");
        let mut entries = Vec::new();
        // {u_i, u_j} = 2v for (i, j) cyclic
        entries.push(TableEntry::new(0, 1, v.scale(&two)));
        entries.push(TableEntry::new(1, 2, v.scale(&two)));
        entries.push(TableEntry::new(0, 2, v.scale(&Scalar::from_int(-2))));
        // {u_i, v} = u_i (u_k - u_j) - c_i w with (i, j, k) cyclic
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let e = &mul(&g(i), &(&g(k) - &g(j))) - &mul(&c[i], &w);
            entries.push(TableEntry::new(i, 3, e));
        }
        // {u_i, w} = c_i v
        for i in 0..3 {
            entries.push(TableEntry::new(i, 4, mul(&c[i], &v)));
        }
        // {v, w} = -1/2 (c3 u1 u2 - c2 u1 u3 - c1 u2 u3)
        let vw = &(&mul(&c[2], &mul(&g(0), &g(1))) - &mul(&c[1], &mul(&g(0), &g(2)))) - &mul(&c[0], &mul(&g(1), &g(2)));
        entries.push(TableEntry::new(3, 4, vw.scale(&Scalar::from_ratio(-1, 2))));
        BracketTable::new(tv.clone(), kappa.to_vec(), entries)
    }

    /// The table that the computed brackets satisfy: couplings `c1, c2` as above,
    /// `c3 = -(c1 + c2)`, and `{v, w} = 1/2 (c1 u2 u3 + c2 u1 u3 + c3 u1 u2)`.
    pub fn corrected_table(&self) -> BracketTable {
        let mut kappa = self.kappa.clone();
        kappa[2] = -(&kappa[0] + &kappa[1]);
        let tv = &self.table_vars;
        let g = |i: usize| Polynomial::var(tv, i);
        let c: Vec<Polynomial> = kappa.iter().map(|k| g(5).scale(k)).collect();
        let mul = |a: &Polynomial, b: &Polynomial| a.mul(b).expect("small degree");
        let mut entries: Vec<TableEntry> = self.printed_with(&kappa).entries.into_iter().filter(|e| e.left < 3).collect();
        let vw = &(&mul(&c[0], &mul(&g(1), &g(2))) + &mul(&c[1], &mul(&g(0), &g(2)))) + &mul(&c[2], &mul(&g(0), &g(1)));
        entries.push(TableEntry::new(3, 4, vw.scale(&Scalar::from_ratio(1, 2))));
        BracketTable::new(tv.clone(), kappa, entries)
    }

    /// Brackets of the generators computed from the slice formula and rewritten.
    pub fn computed_table(&self) -> Result<(BracketTable, Vec<Polynomial>)> {
        let mut entries = Vec::new();
        let mut remainders = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                let br = self.slice_bracket(&self.generators[i], &self.generators[j])?;
                let (e, r) = self.express(&br)?;
                entries.push(TableEntry::new(i, j, e));
                remainders.push(r);
            }
        }
        Ok((BracketTable::new(self.table_vars.clone(), self.kappa.clone(), entries), remainders))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub left: usize,
    pub right: usize,
    pub value: Polynomial,
}

impl TableEntry {
    pub fn new(left: usize, right: usize, value: Polynomial) -> Self {
        TableEntry { left, right, value }
    }
}

/// Brackets among named generators, stored for `left < right`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketTable {
    pub generator_names: Vec<String>,
    /// `kappa_k` with `c_k = kappa_k eps`.
    pub couplings: Vec<Scalar>,
    pub entries: Vec<TableEntry>,
    vars: Arc<Vec<String>>,
}

impl BracketTable {
    pub fn new(vars: Arc<Vec<String>>, couplings: Vec<Scalar>, mut entries: Vec<TableEntry>) -> Self {
        entries.sort_by_key(|e| (e.left, e.right));
        let generator_names = vars[..vars.len() - 1].to_vec();
        BracketTable { generator_names, couplings, entries, vars }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        if i == j {
            return Polynomial::zero(&self.vars);
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        let v = self
            .entries
            .iter()
            .find(|e| e.left == a && e.right == b)
            .map(|e| e.value.clone())
            .unwrap_or_else(|| Polynomial::zero(&self.vars));
        if sign {
            -&v
        } else {
            v
        }
    }

    /// `{g_i, p}` for a polynomial `p` in the generators, by Leibniz; `eps` is central.
    pub fn bracket_with(&self, i: usize, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(&self.vars);
        for k in 0..self.generator_names.len() {
            let d = p.derivative(k);
            if !d.is_zero() {
                out = &out + &self.get(i, k).mul(&d)?;
            }
        }
        Ok(out)
    }

    /// `{g_i, {g_j, g_k}} + {g_j, {g_k, g_i}} + {g_k, {g_i, g_j}}`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Result<Polynomial> {
        let a = self.bracket_with(i, &self.get(j, k))?;
        let b = self.bracket_with(j, &self.get(k, i))?;
        let c = self.bracket_with(k, &self.get(i, j))?;
        Ok(&(&a + &b) + &c)
    }

    /// The table with `eps` set to a value.
    pub fn at_eps(&self, eps: &Scalar) -> Result<BracketTable> {
        let n = self.vars.len();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| if i + 1 < n { Polynomial::var(&self.vars, i) } else { Polynomial::constant(&self.vars, eps.clone()) })
            .collect();
        let entries = self
            .entries
            .iter()
            .map(|e| Ok(TableEntry::new(e.left, e.right, e.value.compose(&images)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BracketTable::new(self.vars.clone(), self.couplings.clone(), entries))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryCheck {
    pub pair: (String, String),
    pub printed: String,
    pub computed: String,
    /// Printed minus computed, expanded in the root coordinates.
    pub residual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiCheck {
    pub triple: (String, String, String),
    /// Jacobiator expanded in the root coordinates.
    pub residual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularTableReport {
    pub couplings: Vec<Scalar>,
    pub printed: BracketTable,
    pub computed: BracketTable,
    pub entries: Vec<EntryCheck>,
    /// Non-expressible parts of the computed brackets; all zero on success.
    pub remainders: Vec<String>,
    pub printed_jacobi: Vec<JacobiCheck>,
    pub computed_jacobi: Vec<JacobiCheck>,
    /// The computed table equals `corrected_table` entry by entry.
    pub corrected_matches: bool,
}

impl RegularTableReport {
    pub fn entries_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failing_entries(&self) -> Vec<&EntryCheck> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }
}

fn jacobi_checks(chain: &RegularChain, t: &BracketTable) -> Result<Vec<JacobiCheck>> {
    let mut out = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in (j + 1)..5 {
                let r = chain.expand(&t.jacobiator(i, j, k)?)?;
                out.push(JacobiCheck {
                    triple: (GENERATOR_NAMES[i].into(), GENERATOR_NAMES[j].into(), GENERATOR_NAMES[k].into()),
                    residual: r.to_text(),
                    pass: r.is_zero(),
                });
            }
        }
    }
    Ok(out)
}

/// Compares every entry of the asserted table with the computed brackets, exactly.
pub fn bracket_table_regular(sys: &MagneticSystem) -> Result<RegularTableReport> {
    let chain = RegularChain::new(sys)?;
    let printed = chain.printed_table();
    let (computed, rem) = chain.computed_table()?;
    let mut entries = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            let direct = chain.slice_bracket(&chain.generators[i], &chain.generators[j])?;
            let residual = &chain.expand(&printed.get(i, j))? - &direct;
            entries.push(EntryCheck {
                pair: (GENERATOR_NAMES[i].into(), GENERATOR_NAMES[j].into()),
                printed: printed.get(i, j).to_text(),
                computed: computed.get(i, j).to_text(),
                residual: residual.to_text(),
                pass: residual.is_zero(),
            });
        }
    }
    let corrected = chain.corrected_table();
    let corrected_matches = (0..5).all(|i| (0..5).all(|j| corrected.get(i, j) == computed.get(i, j)));
    Ok(RegularTableReport {
        corrected_matches,
        couplings: chain.kappa.clone(),
        printed_jacobi: jacobi_checks(&chain, &printed)?,
        computed_jacobi: jacobi_checks(&chain, &computed)?,
        printed,
        computed,
        entries,
        remainders: rem.iter().map(|r| r.to_text()).collect(),
    })
}

/// `u1 u2 u3 - (v + shift)^2 - w^2` expanded in the root coordinates.
pub fn cubic_relation_residual(chain: &RegularChain, shift: &Scalar) -> Result<Polynomial> {
    let g = &chain.generators;
    let v = &g[3] + &Polynomial::constant(&chain.vars, shift.clone());
    let lhs = g[0].mul(&g[1])?.mul(&g[2])?;
    Ok(&(&lhs - &v.pow(2)?) - &g[4].pow(2)?)
}

/// Exact check of `u1 u2 u3 = v^2 + w^2`.
pub fn cubic_relation_check(sys: &MagneticSystem) -> Result<bool> {
    let chain = RegularChain::new(sys)?;
    Ok(cubic_relation_residual(&chain, &Scalar::zero())?.is_zero())
}

//! Sparse polynomials with exact coefficients, ordered graded-lexicographically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use lie_core::Scalar;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{PolyError, Result};

/// Highest total degree any symbolic operation may produce.
pub const DEGREE_CAP: u32 = 8;

/// Exponent vector ordered by total degree, then lexicographically with the first variable largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// All exponent vectors of the given total degree, ascending.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(0, degree, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn variables(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), i), Scalar::one());
        p
    }

    /// Variable by name; panics if absent.
    pub fn named(vars: &Arc<Vec<String>>, name: &str) -> Self {
        let i = vars.iter().position(|v| v == name).unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, i)
    }

    pub fn from_terms(vars: &Arc<Vec<String>>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn same_vars(&self, o: &Polynomial) -> Result<()> {
        if self.vars != o.vars && *self.vars != *o.vars {
            return Err(PolyError::VariableMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial> {
        self.same_vars(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        self.same_vars(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// Product; fails beyond [`DEGREE_CAP`].
    pub fn mul(&self, o: &Polynomial) -> Result<Polynomial> {
        self.same_vars(o)?;
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a + b > DEGREE_CAP {
                return Err(PolyError::DegreeCap(a + b));
            }
        }
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut out = Self::constant(&self.vars, Scalar::one());
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * &Scalar::from_int(e as i64));
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars() {
            return Err(PolyError::Length { expected: self.nvars(), got: point.len() });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.nvars() {
            return Err(PolyError::Length { expected: self.nvars(), got: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(point).fold(c.to_f64(), |acc, (&e, x)| if e == 0 { acc } else { acc * x.powi(e as i32) })
            })
            .sum())
    }

    /// `(degree, component)` pairs, ascending in degree; empty for zero.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut by_deg: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_deg.entry(m.degree()).or_insert_with(|| Self::zero(&self.vars)).add_term(m.clone(), c.clone());
        }
        by_deg.into_iter().collect()
    }

    /// Substitute `images[i]` for variable `i`; all images share one variable list.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(PolyError::Length { expected: self.nvars(), got: images.len() });
        }
        let target = images.first().map(|p| p.vars.clone()).ok_or(PolyError::VariableMismatch)?;
        for im in images {
            if *im.vars != *target {
                return Err(PolyError::VariableMismatch);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Self::constant(&target, Scalar::one()), p.clone()]).collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul(&images[i])?;
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e as usize])?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Rewrite over a larger variable list containing every current variable name.
    pub fn embed(&self, target: &Arc<Vec<String>>) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).ok_or(PolyError::VariableMismatch))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in map.iter().enumerate() {
                e[k] = m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Canonical text, leading term first: `c * x1^2 * x3 + ...`, or `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut parts = vec![c.to_text()];
                for (name, &e) in self.vars.iter().zip(&m.0) {
                    match e {
                        0 => {}
                        1 => parts.push(name.clone()),
                        _ => parts.push(format!("{name}^{e}")),
                    }
                }
                parts.join(" * ")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse(text: &str, vars: &Arc<Vec<String>>) -> Result<Polynomial> {
        let mut out = Self::zero(vars);
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split(" + ") {
            let mut factors = term.split(" * ");
            let c = factors.next().ok_or_else(|| PolyError::Parse(term.into()))?;
            let c = Scalar::parse(c).map_err(|e| PolyError::Parse(e.to_string()))?;
            let mut e = vec![0u32; vars.len()];
            for f in factors {
                let (name, pow) = match f.split_once('^') {
                    Some((n, p)) => (n, p.parse::<u32>().map_err(|_| PolyError::Parse(f.into()))?),
                    None => (f, 1),
                };
                let i = vars.iter().position(|v| v == name).ok_or_else(|| PolyError::Parse(format!("unknown variable {name}")))?;
                e[i] += pow;
            }
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Serialized as `{ "vars": [...], "text": "..." }`.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    text: String,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr { vars: (*self.vars).clone(), text: self.to_text() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        Polynomial::parse(&r.text, &Arc::new(r.vars)).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.try_add(o).expect("polynomials over different variables")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.try_sub(o).expect("polynomials over different variables")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

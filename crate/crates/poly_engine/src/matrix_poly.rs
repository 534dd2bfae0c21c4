//! Traces of powers of the generic element `sum x_k e_k` of a matrix algebra.

use lie_core::{LieAlgebraSpec, Scalar};

use crate::error::{PolyError, Result};
use crate::poisson::algebra_vars;
use crate::polynomial::{Monomial, Polynomial};

#[derive(Clone, Debug)]
struct CPoly {
    re: Polynomial,
    im: Polynomial,
}

impl CPoly {
    fn mul(&self, o: &CPoly) -> Result<CPoly> {
        Ok(CPoly {
            re: &self.re.mul(&o.re)? - &self.im.mul(&o.im)?,
            im: &self.re.mul(&o.im)? + &self.im.mul(&o.re)?,
        })
    }

    fn add(&self, o: &CPoly) -> CPoly {
        CPoly { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

/// Real and imaginary parts of `tr((sum x_k e_k)^power)` as polynomials in the coordinates.
pub fn trace_power(alg: &LieAlgebraSpec, power: u32) -> Result<(Polynomial, Polynomial)> {
    let mats = alg.matrix_rep.as_ref().ok_or(PolyError::NoMatrixRep)?;
    let vars = algebra_vars(alg);
    let n = alg.dim;
    let s = mats[0].size;
    let zero = CPoly { re: Polynomial::zero(&vars), im: Polynomial::zero(&vars) };
    let mut generic = vec![vec![zero.clone(); s]; s];
    for a in 0..s {
        for b in 0..s {
            let mut re = Polynomial::zero(&vars);
            let mut im = Polynomial::zero(&vars);
            for (k, m) in mats.iter().enumerate() {
                let e = m.get(a, b);
                re.add_term(Monomial::var(n, k), e.re.clone());
                im.add_term(Monomial::var(n, k), e.im.clone());
            }
            generic[a][b] = CPoly { re, im };
        }
    }
    let one = CPoly { re: Polynomial::constant(&vars, Scalar::from_int(1)), im: Polynomial::zero(&vars) };
    let mut acc: Vec<Vec<CPoly>> =
        (0..s).map(|a| (0..s).map(|b| if a == b { one.clone() } else { zero.clone() }).collect()).collect();
    for _ in 0..power {
        let mut next = vec![vec![zero.clone(); s]; s];
        for a in 0..s {
            for b in 0..s {
                let mut sum = zero.clone();
                for c in 0..s {
                    sum = sum.add(&acc[a][c].mul(&generic[c][b])?);
                }
                next[a][b] = sum;
            }
        }
        acc = next;
    }
    let tr = (0..s).fold(zero, |t, a| t.add(&acc[a][a]));
    Ok((tr.re, tr.im))
}

//! Floating-point copies of polynomials for hot numeric loops.

use crate::polynomial::Polynomial;

#[derive(Clone, Debug)]
pub struct FloatPoly {
    nvars: usize,
    terms: Vec<(Vec<u32>, f64)>,
}

impl FloatPoly {
    pub fn new(p: &Polynomial) -> Self {
        FloatPoly { nvars: p.nvars(), terms: p.terms().iter().map(|(m, c)| (m.0.clone(), c.to_f64())).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(*c, |acc, (&k, v)| if k == 0 { acc } else { acc * v.powi(k as i32) }))
            .sum()
    }

    /// Partial derivatives at `x`.
    pub fn grad(&self, x: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.nvars];
        for (e, c) in &self.terms {
            for i in 0..self.nvars {
                if e[i] == 0 {
                    continue;
                }
                let mut t = c * e[i] as f64;
                for (j, (&k, v)) in e.iter().zip(x).enumerate() {
                    let k = if j == i { k - 1 } else { k };
                    if k > 0 {
                        t *= v.powi(k as i32);
                    }
                }
                g[i] += t;
            }
        }
        g
    }
}

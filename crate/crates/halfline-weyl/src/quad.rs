//! Gauss-Legendre quadrature rules.
//!
//! Nodes are roots of the Legendre polynomial P_m, found by Newton iteration
//! from the Chebyshev-like initial guesses; an m-node rule integrates
//! polynomials of degree <= 2m-1 exactly, which is what makes the
//! substituted spectral integrands below exactly integrable.

use crate::error::{Error, Result};

/// An m-node rule on the reference interval [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build the m-node rule. Needs m >= 2; Newton converges in a handful of
    /// steps for every m this crate uses.
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewNodes { nodes: m });
        }
        let mut nodes = vec![0.0; m];
        let mut weights = vec![0.0; m];
        let mf = m as f64;
        for i in 0..m.div_ceil(2) {
            // initial guess for the i-th root from the top
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
            let mut pp = 0.0;
            for _ in 0..100 {
                // evaluate P_m and its derivative by the three-term recurrence
                let mut p1 = 1.0;
                let mut p2 = 0.0;
                for j in 0..m {
                    let p3 = p2;
                    p2 = p1;
                    p1 = (((2 * j + 1) as f64) * z * p2 - j as f64 * p3) / (j + 1) as f64;
                }
                pp = mf * (z * p1 - p2) / (z * z - 1.0);
                let step = p1 / pp;
                z -= step;
                if step.abs() <= 1e-15 {
                    break;
                }
            }
            nodes[i] = -z;
            nodes[m - 1 - i] = z;
            let w = 2.0 / ((1.0 - z * z) * pp * pp);
            weights[i] = w;
            weights[m - 1 - i] = w;
        }
        Ok(GaussLegendre { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Reference nodes in ascending order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrate a scalar function over [a, b].
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(half * x + mid);
        }
        half * acc
    }

    /// Visit the mapped nodes of [a, b] with their scaled weights.
    pub fn mapped(&self, a: f64, b: f64, mut visit: impl FnMut(f64, f64)) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            visit(half * x + mid, half * w);
        }
    }
}

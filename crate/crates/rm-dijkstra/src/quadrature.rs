//! Gauss-Legendre quadrature: node/weight generation and definite
//! integration on arbitrary intervals.
//!
//! Nodes are the roots of the degree-n Legendre polynomial, found by Newton
//! iteration from the standard asymptotic initial guess; an order-n rule
//! integrates polynomials of degree <= 2n-1 exactly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Error;

/// An order-n Gauss-Legendre rule on the reference interval [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence.
fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut cur = x;
    for k in 2..=n {
        let next = ((2 * k - 1) as f64 * x * cur - (k - 1) as f64 * prev) / k as f64;
        prev = cur;
        cur = next;
    }
    let deriv = n as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, deriv)
}

impl QuadratureRule {
    /// Builds the order-n rule. Rejects `n == 0`.
    pub fn gauss_legendre(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroQuadratureOrder);
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            if n == 1 {
                z = 0.0;
            } else {
                for _ in 0..100 {
                    let (p, dp) = legendre_and_deriv(n, z);
                    let dz = p / dp;
                    z -= dz;
                    if dz.abs() < 1e-15 {
                        break;
                    }
                }
            }
            let w = if n == 1 {
                2.0
            } else {
                let (_, dp) = legendre_and_deriv(n, z);
                2.0 / ((1.0 - z * z) * dp * dp)
            };
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Ok(QuadratureRule { order: n, nodes, weights })
    }

    /// Returns the order-n rule from a process-wide cache; generation is
    /// deterministic, so cached and fresh rules are identical.
    pub fn cached(n: usize) -> Result<Arc<QuadratureRule>, Error> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QuadratureRule>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().expect("quadrature cache poisoned");
        if let Some(rule) = map.get(&n) {
            return Ok(Arc::clone(rule));
        }
        let rule = Arc::new(QuadratureRule::gauss_legendre(n)?);
        map.insert(n, Arc::clone(&rule));
        Ok(rule)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates `f` over `[a, b]` (`a <= b`) by affine-mapping the
    /// reference nodes and weights. Returns 0 when `a == b`.
    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        debug_assert!(a <= b, "integration bounds must satisfy a <= b");
        if a == b {
            return 0.0;
        }
        let half_width = 0.5 * (b - a);
        let center = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| half_width * w * f(center + half_width * x))
            .sum()
    }
}

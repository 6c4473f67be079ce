//! Gauss rules from three-term recurrences.
//!
//! Nodes come from the symmetric Jacobi matrix (Golub-Welsch) and are then
//! polished by Newton steps on the orthonormal recurrence. Weights are taken
//! as `1 / sum_k q_k(x)^2` over the orthonormal polynomials `q_k`, which keeps
//! small weights accurate to a few ulps in relative terms.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::hypergeo::ln_gamma;

/// Nodes and positive weights of an `N`-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// `(a_k, b_k)`: diagonal entry `k` and the off-diagonal entry between rows
/// `k-1` and `k` (`b_0` is unused).
type Recurrence = dyn Fn(usize) -> (f64, f64);

impl GaussRule {
    /// Rule for the weight `(1-t)^a t^b` on `[0, 1]`.
    pub fn jacobi(count: usize, a: f64, b: f64) -> Result<GaussRule> {
        if !(a > -1.0 && b > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "Jacobi exponents must exceed -1 (a = {a}, b = {b})"
            )));
        }
        let s = a + b;
        let coeffs = move |k: usize| {
            let k = k as f64;
            let diag = if k == 0.0 {
                (b - a) / (s + 2.0)
            } else {
                (b * b - a * a) / ((2.0 * k + s) * (2.0 * k + s + 2.0))
            };
            let off = if k == 0.0 {
                0.0
            } else if k == 1.0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s))
            } else {
                let c = 2.0 * k + s;
                4.0 * k * (k + a) * (k + b) * (k + s) / (c * c * (c + 1.0) * (c - 1.0))
            };
            // x = 2t - 1 maps the classical [-1, 1] recurrence to [0, 1].
            ((1.0 + diag) / 2.0, off.sqrt() / 2.0)
        };
        let mu0 = (ln_gamma(a + 1.0)? + ln_gamma(b + 1.0)? - ln_gamma(s + 2.0)?).exp();
        GaussRule::from_recurrence(count, &coeffs, mu0)
    }

    /// Rule for the weight `s^a e^{-s}` on `[0, inf)`.
    pub fn laguerre(count: usize, a: f64) -> Result<GaussRule> {
        if a <= -1.0 {
            return Err(Error::InvalidParameter(format!(
                "Laguerre exponent must exceed -1 (a = {a})"
            )));
        }
        let coeffs = move |k: usize| {
            let k = k as f64;
            (2.0 * k + a + 1.0, (k * (k + a)).sqrt())
        };
        GaussRule::from_recurrence(count, &coeffs, ln_gamma(a + 1.0)?.exp())
    }

    /// Rule for the unit weight on `[0, 1]`.
    pub fn legendre(count: usize) -> Result<GaussRule> {
        GaussRule::jacobi(count, 0.0, 0.0)
    }

    fn from_recurrence(count: usize, coeffs: &Recurrence, mu0: f64) -> Result<GaussRule> {
        if count == 0 {
            return Err(Error::InvalidParameter(
                "a Gauss rule needs at least one node".into(),
            ));
        }
        let jacobi = DMatrix::from_fn(count, count, |i, j| {
            if i == j {
                coeffs(i).0
            } else if i == j + 1 {
                coeffs(i).1
            } else if j == i + 1 {
                coeffs(j).1
            } else {
                0.0
            }
        });
        let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        nodes.sort_by(f64::total_cmp);

        let mut weights = Vec::with_capacity(count);
        for x in nodes.iter_mut() {
            for _ in 0..3 {
                let (value, slope, _) = orthonormal(*x, count, coeffs, mu0);
                if slope == 0.0 {
                    break;
                }
                let step = value / slope;
                *x -= step;
                if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                    break;
                }
            }
            let (_, _, sum_sq) = orthonormal(*x, count, coeffs, mu0);
            weights.push(1.0 / sum_sq);
        }
        Ok(GaussRule { nodes, weights })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Multiplies every weight by `f(node)`.
    pub(crate) fn fold_weight(mut self, f: impl Fn(f64) -> f64) -> GaussRule {
        for (w, &x) in self.weights.iter_mut().zip(&self.nodes) {
            *w *= f(x);
        }
        self
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(q_N(x), q_N'(x), sum_{k<N} q_k(x)^2)` for the orthonormal family.
fn orthonormal(x: f64, count: usize, coeffs: &Recurrence, mu0: f64) -> (f64, f64, f64) {
    let (mut prev, mut cur) = (0.0, 1.0 / mu0.sqrt());
    let (mut dprev, mut dcur) = (0.0, 0.0);
    let mut sum_sq = 0.0;
    for k in 0..count {
        sum_sq += cur * cur;
        let (a, b) = coeffs(k);
        let b_prev = if k == 0 { 0.0 } else { b };
        let b_next = coeffs(k + 1).1;
        let next = ((x - a) * cur - b_prev * prev) / b_next;
        let dnext = (cur + (x - a) * dcur - b_prev * dprev) / b_next;
        (prev, cur) = (cur, next);
        (dprev, dcur) = (dcur, dnext);
    }
    (cur, dcur, sum_sq)
}

//! Weighted Bergman-Dirichlet space of order `m` on the ball `|z| < R` in `C^n`.
//!
//! The norm is `||f_{1,m}||^2 + m! sum_{|q|=m} ||D^q f_{2,m}||^2 / q!` where
//! `f_{1,m}` holds the Taylor terms of degree `< m`, `f_{2,m}` the rest, and
//! the base norm is `L^2((1 - |z/R|^2)^alpha dlambda)`. Monomials are
//! orthogonal with
//!
//! ```text
//! ||z^p||^2 = pi^n Gamma(alpha+1) R^{2n+2|p|}     p! / Gamma(|p|+alpha+n+1)           |p| < m
//! ||z^p||^2 = pi^n Gamma(alpha+1) R^{2n+2(|p|-m)} p! [|p|]_m / Gamma(|p|-m+alpha+n+1)  |p| >= m
//! ```
//!
//! with `[k]_m = k (k-1) ... (k-m+1)`. Summing the basis expansion gives
//!
//! ```text
//! K(z,w) = C [ sum_{k<m} (a)_k x^k / k!  +  t^m / (m!)^2  3F2(1, 1, a; m+1, m+1; x) ]
//! ```
//!
//! where `t = <z,w>`, `x = t / R^2`, `a = alpha + n + 1` and
//! `C = Gamma(alpha+n+1) / (pi^n Gamma(alpha+1) R^{2n})`. The prefactor `C`
//! multiplies both bracketed terms.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::compensated::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::holo::CVector;
use crate::hypergeo::{
    eval_pfq_dd, gamma_ratio, ln_gamma, pochhammer, HypergeometricSpec, SeriesOptions,
};
use crate::multiindex::{falling_factorial, MultiIndex};
use crate::space::{KernelSpace, KernelValue, Measure};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BergmanDirichletSpace {
    n: usize,
    alpha: f64,
    m: u32,
    radius: f64,
}

impl BergmanDirichletSpace {
    /// Space on the unit ball.
    pub fn new(n: usize, alpha: f64, m: u32) -> Result<Self> {
        Self::with_radius(n, alpha, m, 1.0)
    }

    pub fn with_radius(n: usize, alpha: f64, m: u32, radius: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "dimension n must be at least 1".into(),
            ));
        }
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {alpha} must satisfy alpha > -1"
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "radius = {radius} must be positive"
            )));
        }
        Ok(BergmanDirichletSpace {
            n,
            alpha,
            m,
            radius,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    fn top_param(&self) -> f64 {
        self.alpha + self.n as f64 + 1.0
    }

    /// `Gamma(alpha+n+1) / (pi^n Gamma(alpha+1) R^{2n})`, the kernel at the origin for `m >= 1`.
    pub fn prefactor(&self) -> f64 {
        let ratio = gamma_ratio(self.top_param(), self.alpha + 1.0)
            .expect("alpha > -1 keeps both gamma arguments positive");
        ratio / (PI.powi(self.n as i32) * self.radius.powi(2 * self.n as i32))
    }

    fn check_dim(&self, p: &MultiIndex) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        Ok(())
    }

    /// `gamma_{alpha,p}`: `p!/Gamma(|p|+alpha+n+1)` below the order, and
    /// `p! [|p|]_m / Gamma(|p|-m+alpha+n+1)` from it on.
    pub fn gamma_coeff(&self, p: &MultiIndex) -> Result<f64> {
        self.check_dim(p)?;
        let k = p.degree();
        let (shift, falling) = if k < self.m {
            (k, 1.0)
        } else {
            (k - self.m, falling_factorial(k as f64, self.m))
        };
        let log_gamma = ln_gamma(shift as f64 + self.top_param())?;
        Ok(p.factorial_f64() * falling * (-log_gamma).exp())
    }

    /// `sqrt(K(z, z))`: the smallest `c` with `|f(z)| <= c ||f||` for every `f`.
    pub fn pointwise_bound(&self, z: &CVector) -> Result<f64> {
        self.check_point(z)?;
        let k = self.kernel_closed(z, z)?;
        Ok(k.re.max(0.0).sqrt())
    }

    /// The evaluation bound without the square root,
    /// `Gamma(a)/(pi^n Gamma(alpha+1)) (sum_{k<m} (a)_k |z|^k/k! + (1-|z|^2)^{-a})`
    /// with `a = alpha+n+1`, transported to radius `R` by `z -> z/R`.
    ///
    /// Kept for comparison; [`pointwise_bound`](Self::pointwise_bound) is the sharp bound.
    pub fn pointwise_bound_unrooted(&self, z: &CVector) -> Result<f64> {
        self.check_point(z)?;
        let r = z.norm() / self.radius;
        let a = self.top_param();
        let mut sum = 0.0;
        let mut fact = 1.0;
        for k in 0..self.m {
            if k > 0 {
                fact *= k as f64;
            }
            sum += pochhammer(a, k) * r.powi(k as i32) / fact;
        }
        sum += (1.0 - r * r).powf(-a);
        Ok(self.prefactor() * sum)
    }
}

impl KernelSpace for BergmanDirichletSpace {
    fn dim(&self) -> usize {
        self.n
    }

    fn order(&self) -> u32 {
        self.m
    }

    fn measure(&self) -> Measure {
        Measure::Ball {
            alpha: self.alpha,
            radius: self.radius,
        }
    }

    fn monomial_norm_sq(&self, p: &MultiIndex) -> Result<f64> {
        self.check_dim(p)?;
        let k = p.degree();
        let n = self.n as f64;
        let (shift, falling) = if k < self.m {
            (k, 1.0)
        } else {
            (k - self.m, falling_factorial(k as f64, self.m))
        };
        let ratio = gamma_ratio(self.alpha + 1.0, shift as f64 + self.alpha + n + 1.0)?;
        let scale = self.radius.powi(2 * (self.n as i32 + shift as i32));
        Ok(PI.powi(self.n as i32) * ratio * p.factorial_f64() * falling * scale)
    }

    fn check_point(&self, w: &CVector) -> Result<()> {
        if w.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: w.dim(),
            });
        }
        if w.norm() >= self.radius {
            return Err(Error::Domain(format!(
                "|w| = {} must be below the radius {}",
                w.norm(),
                self.radius
            )));
        }
        Ok(())
    }

    fn kernel_with(&self, t: Complex64, opts: SeriesOptions) -> Result<KernelValue> {
        let r2 = self.radius * self.radius;
        if !t.is_finite() || t.norm() >= r2 {
            return Err(Error::Domain(format!(
                "|<z,w>| = {} must be below R^2 = {r2}",
                t.norm()
            )));
        }
        let a = self.top_param();
        let x = DdComplex::from(t).div_real(Dd::new(r2));

        let mut low = DdComplex::ZERO;
        let mut term = DdComplex::ONE;
        for k in 0..self.m {
            low = low + term;
            term = (term * x).scale(Dd::new(a) + k as f64);
            term = term.div_real(Dd::new(k as f64 + 1.0));
        }

        let mp1 = self.m as f64 + 1.0;
        let spec = HypergeometricSpec::new(vec![1.0, 1.0, a], vec![mp1, mp1])?;
        let series = eval_pfq_dd(&spec, x, opts.tol, opts.max_terms)?;
        let mfact = (1..=self.m).fold(Dd::ONE, |acc, j| acc * j as f64);
        let lead = DdComplex::from(t).powu(self.m).div_real(mfact * mfact);
        let bracket = low + lead * series.value;

        let c = self.prefactor();
        Ok(KernelValue {
            value: bracket.to_c64() * c,
            terms_used: self.m as usize + series.terms_used,
            error_estimate: c * lead.norm() * series.error_estimate,
        })
    }

    fn kernel_series_at(&self, t: Complex64, max_degree: u32) -> Result<Complex64> {
        let r2 = self.radius * self.radius;
        if !t.is_finite() || t.norm() >= r2 {
            return Err(Error::Domain(format!(
                "|<z,w>| = {} must be below R^2 = {r2}",
                t.norm()
            )));
        }
        // Degree-k coefficient p!/||z^p||^2 (|p| = k) times t^k/k!, written as a
        // product of O(1) factors so that nothing overflows for large k:
        //   k < m:   (alpha+1)_n prod_{i<=k} (alpha+n+i)/i * x^k
        //   k >= m:  t^m (alpha+1)_n prod_{i<=j} (alpha+n+i)/i * x^j / ((j+1)_m)^2,  j = k - m
        // The common factor 1/(pi^n R^{2n}) is applied at the end.
        let x = DdComplex::from(t).div_real(Dd::new(r2));
        let base = (0..self.n as u32).fold(Dd::ONE, |acc, i| {
            acc * (Dd::new(self.alpha + 1.0) + i as f64)
        });
        let top = self.alpha + self.n as f64;
        let growth = |j: u32| -> DdComplex {
            (1..=j).fold(DdComplex::ONE.scale(base), |acc, i| {
                (acc * x).scale((Dd::new(top) + i as f64) / i as f64)
            })
        };
        let lead = DdComplex::from(t).powu(self.m);
        let mut acc = DdComplex::ZERO;
        for k in 0..=max_degree {
            let term = if k < self.m {
                growth(k)
            } else {
                let j = k - self.m;
                let rising = (1..=self.m).fold(Dd::ONE, |acc, i| acc * (j + i) as f64);
                (lead * growth(j)).div_real(rising * rising)
            };
            acc = acc + term;
        }
        let norm = PI.powi(self.n as i32) * self.radius.powi(2 * self.n as i32);
        Ok(acc.to_c64() / norm)
    }
}

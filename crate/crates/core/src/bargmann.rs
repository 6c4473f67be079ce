//! Bargmann-Dirichlet space of order `m` on `C^n` with Gaussian weight
//! `exp(-nu |z|^2)`.
//!
//! Integrating the defining norm against the Gaussian gives
//!
//! ```text
//! ||z^p||^2 = (pi/nu)^n p! nu^{-|p|}                |p| < m
//! ||z^p||^2 = (pi/nu)^n p! nu^{m-|p|} [|p|]_m        |p| >= m
//! ```
//!
//! and the kernel
//! `(nu/pi)^n [ sum_{k<m} (nu t)^k / k! + t^m / (m!)^2 2F2(1, 1; m+1, m+1; nu t) ]`.
//! The variant [`NuPlacement::Denominator`] puts `nu^m` under the falling
//! factorial instead; it does not reproduce the closed-form kernel and exists
//! so that quadrature can tell the two apart.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::compensated::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::hypergeo::{eval_pfq_dd, HypergeometricSpec, SeriesOptions};
use crate::multiindex::{falling_factorial, MultiIndex};
use crate::space::{KernelSpace, KernelValue, Measure};

/// Where the factor `nu^m` sits in the norm of high-degree monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NuPlacement {
    /// `nu^{m-|p|} [|p|]_m`, consistent with the Gaussian integral.
    #[default]
    Numerator,
    /// `nu^{-|p|-m} [|p|]_m`.
    Denominator,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BargmannDirichletSpace {
    n: usize,
    nu: f64,
    m: u32,
    placement: NuPlacement,
}

impl BargmannDirichletSpace {
    pub fn new(n: usize, nu: f64, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "dimension n must be at least 1".into(),
            ));
        }
        if !(nu.is_finite() && nu > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "nu = {nu} must be positive"
            )));
        }
        Ok(BargmannDirichletSpace {
            n,
            nu,
            m,
            placement: NuPlacement::Numerator,
        })
    }

    pub fn with_placement(mut self, placement: NuPlacement) -> Self {
        self.placement = placement;
        self
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn placement(&self) -> NuPlacement {
        self.placement
    }

    /// `(nu/pi)^n`.
    pub fn prefactor(&self) -> f64 {
        (self.nu / PI).powi(self.n as i32)
    }

    /// Exponent of `nu` in `||z^p||^2 / ((pi/nu)^n p!)` for `|p| = k`.
    fn nu_exponent(&self, k: u32) -> i32 {
        let (k, m) = (k as i32, self.m as i32);
        match (k < m, self.placement) {
            (true, _) => -k,
            (false, NuPlacement::Numerator) => m - k,
            (false, NuPlacement::Denominator) => -k - m,
        }
    }
}

impl KernelSpace for BargmannDirichletSpace {
    fn dim(&self) -> usize {
        self.n
    }

    fn order(&self) -> u32 {
        self.m
    }

    fn measure(&self) -> Measure {
        Measure::Gaussian { nu: self.nu }
    }

    fn monomial_norm_sq(&self, p: &MultiIndex) -> Result<f64> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        let k = p.degree();
        let falling = if k < self.m {
            1.0
        } else {
            falling_factorial(k as f64, self.m)
        };
        Ok((PI / self.nu).powi(self.n as i32)
            * p.factorial_f64()
            * self.nu.powi(self.nu_exponent(k))
            * falling)
    }

    fn kernel_with(&self, t: Complex64, opts: SeriesOptions) -> Result<KernelValue> {
        if !t.is_finite() {
            return Err(Error::Domain("<z,w> must be finite".into()));
        }
        let nu = Dd::new(self.nu);
        let x = DdComplex::from(t).scale(nu);

        let mut low = DdComplex::ZERO;
        let mut term = DdComplex::ONE;
        for k in 0..self.m {
            low = low + term;
            term = (term * x).div_real(Dd::new(k as f64 + 1.0));
        }

        let mp1 = self.m as f64 + 1.0;
        let spec = HypergeometricSpec::new(vec![1.0, 1.0], vec![mp1, mp1])?;
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
        if !t.is_finite() {
            return Err(Error::Domain("<z,w> must be finite".into()));
        }
        // Degree-k coefficient p!/||z^p||^2 (|p| = k) times t^k/k!, as a product
        // of O(1) factors; u = nu t, j = k - m:
        //   k < m:   u^k / k!
        //   k >= m:  t^m u^j / j! / ((j+1)_m)^2          (nu^m in the numerator)
        //            t^m u^j / j! / ((j+1)_m)^2 / nu^{2m} (nu^m in the denominator)
        // The common factor (nu/pi)^n is applied at the end.
        let u = DdComplex::from(t).scale(Dd::new(self.nu));
        let exp_term = |j: u32| {
            (1..=j).fold(DdComplex::ONE, |acc, i| {
                (acc * u).div_real(Dd::new(i as f64))
            })
        };
        let mut lead = DdComplex::from(t).powu(self.m);
        if self.placement == NuPlacement::Denominator {
            lead = lead.div_real(Dd::new(self.nu).powu(2 * self.m));
        }
        let mut acc = DdComplex::ZERO;
        for k in 0..=max_degree {
            let term = if k < self.m {
                exp_term(k)
            } else {
                let j = k - self.m;
                let rising = (1..=self.m).fold(Dd::ONE, |acc, i| acc * (j + i) as f64);
                (lead * exp_term(j)).div_real(rising * rising)
            };
            acc = acc + term;
        }
        Ok(acc.to_c64() * self.prefactor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holo::{CVector, TaylorSeries};

    fn mi(parts: &[u32]) -> MultiIndex {
        MultiIndex::new(parts.to_vec()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn invalid_parameters() {
        assert!(BargmannDirichletSpace::new(2, 0.0, 1).is_err());
        assert!(BargmannDirichletSpace::new(2, -1.0, 1).is_err());
        assert!(BargmannDirichletSpace::new(0, 1.0, 1).is_err());
    }

    #[test]
    fn norm_examples() {
        let s = BargmannDirichletSpace::new(2, 1.0, 0).unwrap();
        assert!((s.monomial_norm_sq(&mi(&[0, 0])).unwrap() - PI * PI).abs() < 1e-14);
        let s = BargmannDirichletSpace::new(2, 1.0, 1).unwrap();
        assert!((s.monomial_norm_sq(&mi(&[1, 0])).unwrap() - PI * PI).abs() < 1e-14);
        // (pi/2)^2 * 2! 1! / 2^3 = pi^2/16
        let s = BargmannDirichletSpace::new(2, 2.0, 0).unwrap();
        let v = s.monomial_norm_sq(&mi(&[2, 1])).unwrap();
        assert!((v - PI * PI / 16.0).abs() < 1e-15);
    }

    #[test]
    fn placements_differ_by_nu_to_the_two_m() {
        let a = BargmannDirichletSpace::new(2, 2.0, 2).unwrap();
        let b = a.with_placement(NuPlacement::Denominator);
        let p = mi(&[2, 1]);
        let ratio = a.monomial_norm_sq(&p).unwrap() / b.monomial_norm_sq(&p).unwrap();
        assert!((ratio - 16.0).abs() < 1e-12);
        let low = mi(&[1, 0]);
        assert_eq!(
            a.monomial_norm_sq(&low).unwrap(),
            b.monomial_norm_sq(&low).unwrap()
        );
    }

    #[test]
    fn function_norm_example() {
        let s = BargmannDirichletSpace::new(2, 1.0, 0).unwrap();
        let f =
            TaylorSeries::from_terms(2, [(mi(&[0, 0]), c(1.0, 0.0)), (mi(&[1, 0]), c(1.0, 0.0))])
                .unwrap();
        assert!((s.function_norm_sq(&f).unwrap() - 2.0 * PI * PI).abs() < 1e-13);
        assert_eq!(s.function_norm_sq(&TaylorSeries::zero(2)).unwrap(), 0.0);
    }

    #[test]
    fn segal_bargmann_reduction() {
        for (n, nu) in [(1, 0.5), (2, 1.0), (3, 3.0)] {
            let s = BargmannDirichletSpace::new(n, nu, 0).unwrap();
            let t = c(-2.0, 1.5);
            let want = (nu / PI).powi(n as i32) * (t * nu).exp();
            let got = s.kernel_at(t).unwrap().value;
            assert!((got - want).norm() / want.norm() < 1e-13);
        }
    }

    #[test]
    fn kernel_at_origin() {
        let s = BargmannDirichletSpace::new(2, 1.0, 1).unwrap();
        let k = s.kernel_at(c(0.0, 0.0)).unwrap().value;
        assert!((k.re - 1.0 / (PI * PI)).abs() < 1e-16);
        for d in [1, 5, 30] {
            let v = s.kernel_series_at(c(0.0, 0.0), d).unwrap();
            assert!((v.re - 1.0 / (PI * PI)).abs() < 1e-16);
        }
    }

    #[test]
    fn closed_matches_series() {
        let s = BargmannDirichletSpace::new(2, 1.0, 2).unwrap();
        let t = c(1.5, 0.0);
        let a = s.kernel_at(t).unwrap().value;
        let b = s.kernel_series_at(t, 200).unwrap();
        assert!((a - b).norm() / a.norm() < 1e-13);
    }

    #[test]
    fn denominator_variant_breaks_the_kernel() {
        let s = BargmannDirichletSpace::new(1, 2.0, 1)
            .unwrap()
            .with_placement(NuPlacement::Denominator);
        let t = c(1.0, 0.0);
        let a = s.kernel_at(t).unwrap().value;
        let b = s.kernel_series_at(t, 200).unwrap();
        assert!((a - b).norm() / a.norm() > 0.1);
    }

    #[test]
    fn exponential_tail_bound() {
        let (nu, t, d) = (1.5, c(0.8, -0.6), 6u32);
        let s = BargmannDirichletSpace::new(2, nu, 0).unwrap();
        let partial = s.kernel_series_at(t, d).unwrap();
        let full = s.prefactor() * (t * nu).exp();
        let x = nu * t.norm();
        let fact: f64 = (1..=d + 1).map(|j| j as f64).product();
        let bound = s.prefactor() * x.powi(d as i32 + 1) / fact * x.exp();
        assert!((partial - full).norm() <= bound);
    }

    #[test]
    fn enumerated_oracle() {
        let s = BargmannDirichletSpace::new(2, 0.5, 1).unwrap();
        let z = CVector::new(vec![c(0.8, 0.2), c(-0.4, 1.1)]).unwrap();
        let w = CVector::new(vec![c(0.5, -0.3), c(0.9, 0.6)]).unwrap();
        let a = s.kernel_enumerated(&z, &w, 12).unwrap();
        let b = s.kernel_series(&z, &w, 12).unwrap();
        assert!((a - b).norm() / b.norm() < 1e-13);
    }
}

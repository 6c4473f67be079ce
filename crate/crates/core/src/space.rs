//! Behaviour shared by every space in which the monomials `z^p` form an
//! orthogonal basis.
//!
//! Once a space can report `||z^p||^2`, its coefficient-space norm, inner
//! product, kernel section `K(., w)` and the reproducing map all follow. Each
//! concrete space adds a closed-form kernel and a degree-collapsed series
//! oracle for it; both depend on `z, w` only through `t = <z, w>`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::compensated::{ComplexSum, NeumaierSum};
use crate::error::{Error, Result};
use crate::holo::{inner, CVector, TaylorSeries};
use crate::hypergeo::SeriesOptions;
use crate::multiindex::{indices_up_to, MultiIndex};

/// Kernel value together with the bookkeeping of the series that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelValue {
    pub value: Complex64,
    pub terms_used: usize,
    pub error_estimate: f64,
}

/// Which weighted measure defines the space's base `L^2` norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    /// `(1 - |z/R|^2)^alpha dlambda` on the ball of radius `R`.
    Ball { alpha: f64, radius: f64 },
    /// `exp(-nu |z|^2) dlambda` on all of `C^n`.
    Gaussian { nu: f64 },
}

pub trait KernelSpace {
    fn dim(&self) -> usize;

    /// The Sobolev order `m`.
    fn order(&self) -> u32;

    fn measure(&self) -> Measure;

    /// `||z^p||^2` in the space.
    fn monomial_norm_sq(&self, p: &MultiIndex) -> Result<f64>;

    /// Closed-form kernel as a function of `t = <z, w>`.
    fn kernel_with(&self, t: Complex64, opts: SeriesOptions) -> Result<KernelValue>;

    fn kernel_at(&self, t: Complex64) -> Result<KernelValue> {
        self.kernel_with(t, SeriesOptions::default())
    }

    /// Truncated basis expansion `sum_{k <= max_degree} t^k / k! * (p! / ||z^p||^2)_{|p| = k}`.
    fn kernel_series_at(&self, t: Complex64, max_degree: u32) -> Result<Complex64>;

    /// Rejects points where evaluation is not defined.
    fn check_point(&self, _w: &CVector) -> Result<()> {
        Ok(())
    }

    fn check_series(&self, f: &TaylorSeries) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.dim(),
            });
        }
        Ok(())
    }

    /// `||f||^2 = sum_p ||z^p||^2 |a_p|^2`.
    fn function_norm_sq(&self, f: &TaylorSeries) -> Result<f64> {
        self.check_series(f)?;
        let mut acc = NeumaierSum::new();
        for (p, a) in f.terms() {
            acc.add(self.monomial_norm_sq(p)? * a.norm_sqr());
        }
        Ok(acc.value())
    }

    /// `<f, g> = sum_p ||z^p||^2 a_p conj(b_p)`.
    fn inner_product(&self, f: &TaylorSeries, g: &TaylorSeries) -> Result<Complex64> {
        self.check_series(f)?;
        self.check_series(g)?;
        let mut acc = ComplexSum::new();
        for (p, a) in f.terms() {
            let b = g.coeff(p);
            if b != Complex64::new(0.0, 0.0) {
                acc.add(a * b.conj() * self.monomial_norm_sq(p)?);
            }
        }
        Ok(acc.value())
    }

    fn pair_inner(&self, z: &CVector, w: &CVector) -> Result<Complex64> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: z.dim(),
            });
        }
        inner(z, w)
    }

    fn kernel_closed(&self, z: &CVector, w: &CVector) -> Result<Complex64> {
        Ok(self.kernel_at(self.pair_inner(z, w)?)?.value)
    }

    fn kernel_series(&self, z: &CVector, w: &CVector, max_degree: u32) -> Result<Complex64> {
        self.kernel_series_at(self.pair_inner(z, w)?, max_degree)
    }

    /// `sum_{|p| <= max_degree} z^p conj(w^p) / ||z^p||^2`, one multi-index at a
    /// time with no degree collapse.
    fn kernel_enumerated(&self, z: &CVector, w: &CVector, max_degree: u32) -> Result<Complex64> {
        self.pair_inner(z, w)?;
        let wbar: Vec<Complex64> = w.components().iter().map(|c| c.conj()).collect();
        let mut acc = ComplexSum::new();
        for p in indices_up_to(self.dim(), max_degree) {
            let num = p.monomial(z.components()) * p.monomial(&wbar);
            acc.add(num / self.monomial_norm_sq(&p)?);
        }
        Ok(acc.value())
    }

    /// Taylor polynomial of `z -> K(z, w)` through total degree `degree`.
    fn kernel_section(&self, w: &CVector, degree: u32) -> Result<TaylorSeries> {
        if w.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: w.dim(),
            });
        }
        let wbar: Vec<Complex64> = w.components().iter().map(|c| c.conj()).collect();
        let mut section = TaylorSeries::zero(self.dim());
        for p in indices_up_to(self.dim(), degree) {
            let coeff = p.monomial(&wbar) / self.monomial_norm_sq(&p)?;
            section.add_term(p, coeff)?;
        }
        Ok(section)
    }

    /// `<f, K(., w)>`, which equals `f(w)` in a reproducing kernel space.
    fn reproduce(&self, f: &TaylorSeries, w: &CVector) -> Result<Complex64> {
        self.check_series(f)?;
        self.check_point(w)?;
        let section = self.kernel_section(w, f.degree())?;
        self.inner_product(f, &section)
    }
}

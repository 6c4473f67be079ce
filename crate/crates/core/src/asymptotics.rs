//! The flat limit: ball spaces of radius `R` with weight exponent
//! `alpha = nu R^2` and their kernels as `R -> infinity`.
//!
//! With that coupling `(1 - |z/R|^2)^{nu R^2} -> exp(-nu |z|^2)`, the kernel
//! prefactor `Gamma(nu R^2 + n + 1) / (pi^n R^{2n} Gamma(nu R^2 + 1))` tends
//! to `(nu/pi)^n`, and `3F2(1, 1, nu R^2 + n + 1; m+1, m+1; t/R^2)` tends to
//! `2F2(1, 1; m+1, m+1; nu t)`. The ball kernel therefore converges to the
//! Gaussian one. Rates reported here are observations; every error is
//! `O(1/R^2)` in practice.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bargmann::BargmannDirichletSpace;
use crate::bergman::BergmanDirichletSpace;
use crate::error::{Error, Result};
use crate::holo::{inner, CVector};
use crate::hypergeo::{gamma_ratio, limit_3f2_to_2f2_error};
use crate::report::{Cell, Table};
use crate::space::KernelSpace;

/// Ball space of radius `radius` with `alpha = nu radius^2`.
pub fn scaled_space(nu: f64, radius: f64, n: usize, m: u32) -> Result<BergmanDirichletSpace> {
    if !(nu.is_finite() && nu > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "nu = {nu} must be positive"
        )));
    }
    BergmanDirichletSpace::with_radius(n, nu * radius * radius, m, radius)
}

/// `Gamma(nu R^2 + n + 1) / (pi^n R^{2n} Gamma(nu R^2 + 1))`.
pub fn prefactor_ratio(nu: f64, radius: f64, n: usize) -> Result<f64> {
    Ok(scaled_space(nu, radius, n, 0)?.prefactor())
}

/// `(nu/pi)^n`, the limit of [`prefactor_ratio`].
pub fn prefactor_limit(nu: f64, n: usize) -> f64 {
    (nu / PI).powi(n as i32)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub radius: f64,
    pub kernel_value: Complex64,
    pub limit_value: Complex64,
    pub abs_error: f64,
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one radius is required".into(),
        ));
    }
    if let Some(r) = radii.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
        return Err(Error::InvalidParameter(format!(
            "radius {r} must be positive"
        )));
    }
    if radii.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidParameter(
            "radii must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// `K_R(t)` against `K_inf(t)` for each radius, with `t = <z, w>`.
pub fn convergence_sweep_at(
    nu: f64,
    m: u32,
    n: usize,
    t: Complex64,
    radii: &[f64],
) -> Result<Vec<ConvergenceRecord>> {
    check_radii(radii)?;
    if let Some(r) = radii.iter().find(|r| t.norm() >= *r * *r) {
        return Err(Error::Domain(format!(
            "|<z,w>| = {} is not below R^2 for R = {r}",
            t.norm()
        )));
    }
    let limit = BargmannDirichletSpace::new(n, nu, m)?;
    let limit_value = limit.kernel_at(t)?.value;
    radii
        .iter()
        .map(|&radius| {
            let kernel_value = scaled_space(nu, radius, n, m)?.kernel_at(t)?.value;
            Ok(ConvergenceRecord {
                radius,
                kernel_value,
                limit_value,
                abs_error: (kernel_value - limit_value).norm(),
            })
        })
        .collect()
}

/// [`convergence_sweep_at`] for the pair `(z, w)`.
pub fn convergence_sweep(
    nu: f64,
    m: u32,
    n: usize,
    z: &CVector,
    w: &CVector,
    radii: &[f64],
) -> Result<Vec<ConvergenceRecord>> {
    if z.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: z.dim(),
        });
    }
    convergence_sweep_at(nu, m, n, inner(z, w)?, radii)
}

/// Largest `|K_R - K_inf|` over all pairs from `zs x ws`, per radius.
pub fn uniform_error_sweep(
    nu: f64,
    m: u32,
    n: usize,
    zs: &[CVector],
    ws: &[CVector],
    radii: &[f64],
) -> Result<Vec<f64>> {
    let mut worst = vec![0.0f64; radii.len()];
    for z in zs {
        for w in ws {
            for (slot, rec) in worst
                .iter_mut()
                .zip(convergence_sweep(nu, m, n, z, w, radii)?)
            {
                *slot = slot.max(rec.abs_error);
            }
        }
    }
    Ok(worst)
}

/// `e_i / e_{i+1}` for consecutive records.
pub fn error_ratios(records: &[ConvergenceRecord]) -> Vec<f64> {
    records
        .windows(2)
        .map(|p| p[0].abs_error / p[1].abs_error)
        .collect()
}

/// Columns `R, Re(K_R), Im(K_R), Re(K_inf), Im(K_inf), abs_error`.
pub fn records_table(records: &[ConvergenceRecord]) -> Table {
    let mut table = Table::new([
        "R",
        "Re(K_R)",
        "Im(K_R)",
        "Re(K_inf)",
        "Im(K_inf)",
        "abs_error",
    ]);
    for r in records {
        table.push(vec![
            Cell::Num(r.radius),
            Cell::Num(r.kernel_value.re),
            Cell::Num(r.kernel_value.im),
            Cell::Num(r.limit_value.re),
            Cell::Num(r.limit_value.im),
            Cell::Num(r.abs_error),
        ]);
    }
    table
}

/// `(x, |3F2(b, c, x+a; d, e; z/x) - 2F2(b, c; d, e; z)|)` for each `x`.
#[allow(clippy::too_many_arguments)]
pub fn confluent_limit_sweep(
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    a: f64,
    z: Complex64,
    x_values: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if x_values.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidParameter(
            "x values must be strictly increasing".into(),
        ));
    }
    x_values
        .iter()
        .map(|&x| Ok((x, limit_3f2_to_2f2_error(b, c, d, e, a, z, x)?)))
        .collect()
}

/// `Gamma(x + a) / Gamma(x + b)` routed through log-gamma; finite for huge `x`.
pub fn binet_ratio(x: f64, a: f64, b: f64) -> Result<f64> {
    gamma_ratio(x + a, x + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn scaled_space_parameters() {
        let s = scaled_space(2.0, 10.0, 2, 1).unwrap();
        assert_eq!(s.alpha(), 200.0);
        assert_eq!(s.radius(), 10.0);
        assert_eq!(scaled_space(1.0, 100.0, 2, 0).unwrap().alpha(), 1e4);
        assert!(scaled_space(0.0, 1.0, 2, 0).is_err());
    }

    #[test]
    fn prefactor_values() {
        let v = prefactor_ratio(1.0, 10.0, 2).unwrap();
        assert!((v - 102.0 * 101.0 / (PI * PI * 1e4)).abs() < 1e-15);
        let dev10 = prefactor_ratio(1.0, 10.0, 2).unwrap() * PI * PI - 1.0;
        let dev20 = prefactor_ratio(1.0, 20.0, 2).unwrap() * PI * PI - 1.0;
        assert!((3.5..4.5).contains(&(dev10 / dev20)));
        let far = prefactor_ratio(1.0, 1e3, 3).unwrap();
        assert!((far / prefactor_limit(1.0, 3) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn sweep_at_origin_is_the_prefactor_gap() {
        let recs = convergence_sweep_at(1.0, 1, 2, c(0.0, 0.0), &[5.0, 10.0]).unwrap();
        for r in &recs {
            let want = (prefactor_ratio(1.0, r.radius, 2).unwrap() - prefactor_limit(1.0, 2)).abs();
            assert!((r.abs_error - want).abs() < 1e-15);
        }
    }

    #[test]
    fn sweep_decreases() {
        let recs = convergence_sweep_at(1.0, 2, 2, c(0.5, 0.0), &[5.0, 10.0, 20.0, 40.0]).unwrap();
        assert!(recs.windows(2).all(|p| p[1].abs_error < p[0].abs_error));
        assert!(recs[3].abs_error <= 1e-3);
        for ratio in error_ratios(&recs) {
            assert!((2.5..6.0).contains(&ratio), "{ratio}");
        }
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(matches!(
            convergence_sweep_at(1.0, 0, 1, c(30.0, 0.0), &[5.0, 10.0]),
            Err(Error::Domain(_))
        ));
        assert!(convergence_sweep_at(1.0, 0, 1, c(0.1, 0.0), &[10.0, 5.0]).is_err());
        assert!(convergence_sweep_at(1.0, 0, 1, c(0.1, 0.0), &[]).is_err());
    }

    #[test]
    fn confluent_limit_examples() {
        let zero =
            confluent_limit_sweep(1.0, 1.0, 3.0, 3.0, 3.0, c(0.0, 0.0), &[1e3, 1e4]).unwrap();
        assert!(zero.iter().all(|(_, e)| *e == 0.0));
        let errs =
            confluent_limit_sweep(1.0, 1.0, 3.0, 3.0, 3.0, c(0.7, 0.0), &[1e3, 1e4, 1e5]).unwrap();
        assert!(errs.windows(2).all(|p| p[1].1 < p[0].1));
        let ratio = errs[0].1 / errs[1].1;
        assert!((7.0..13.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn csv_has_six_columns() {
        let recs = convergence_sweep_at(1.0, 0, 1, c(0.2, 0.1), &[5.0]).unwrap();
        let csv = records_table(&recs).to_csv();
        assert!(csv.starts_with("R,Re(K_R),Im(K_R),Re(K_inf),Im(K_inf),abs_error\n"));
        assert_eq!(csv.lines().nth(1).unwrap().split(',').count(), 6);
    }
}

//! Tensor-product quadrature over the ball and over `C^n` (n = 1, 2), and the
//! oracles that check norm formulas against their defining integrals.
//!
//! Points are written `z = r xi` with `t = r^2`. The radial factor becomes
//! `(1/2) (1-t)^alpha t^{n-1} dt` on the ball and `s^{n-1} e^{-s} ds / (2 nu^n)`
//! with `s = nu r^2` on `C^n`, both handled by Gauss rules with exactly that
//! weight. On `S^3` the point is `xi = (e^{i th1} sqrt(u), e^{i th2} sqrt(1-u))`
//! with `dsigma = (1/2) du dth1 dth2`; `u` gets a Legendre rule and each angle
//! an equispaced grid. For a polynomial integrand `f conj(g)` with
//! `deg f, deg g <= D` every one of these factors is integrated exactly once
//! the grid has capacity `D`.

mod rules;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::compensated::ComplexSum;
use crate::error::{Error, Result};
use crate::holo::{CVector, TaylorSeries};
use crate::multiindex::{enumerate_indices, factorial_f64, MultiIndex};
use crate::space::{KernelSpace, Measure};

pub use rules::GaussRule;

/// Capacity used when none is requested.
pub const DEFAULT_CAPACITY: u32 = 16;

/// Radial rule carried by a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialRule {
    /// Gauss-Jacobi for `(1-t)^alpha t^{n-1}` on `[0, 1]`.
    Jacobi { alpha: f64 },
    /// Gauss-Legendre on `[0, 1]` with `(1-t)^alpha t^{n-1}` folded into the
    /// weights. Not exact for non-integer `alpha`.
    LegendreFolded { alpha: f64 },
    /// Gauss-Laguerre for `s^{n-1} e^{-s}` on `[0, inf)`.
    Laguerre,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    n: usize,
    capacity: u32,
    rule: RadialRule,
    radial: GaussRule,
    angular_u: Option<GaussRule>,
    theta_count: usize,
}

fn check_dim(n: usize) -> Result<()> {
    if n == 1 || n == 2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "quadrature is available for n = 1 or 2, not n = {n}"
        )))
    }
}

fn gauss_count(capacity: u32) -> usize {
    capacity as usize / 2 + 2
}

impl QuadratureGrid {
    /// Exact grid for `(1 - |z|^2)^alpha dlambda` up to degree `capacity`.
    pub fn ball(n: usize, alpha: f64, capacity: u32) -> Result<QuadratureGrid> {
        check_dim(n)?;
        let radial = GaussRule::jacobi(gauss_count(capacity), alpha, n as f64 - 1.0)?;
        QuadratureGrid::assemble(n, capacity, RadialRule::Jacobi { alpha }, radial)
    }

    /// Ball grid whose radial rule is an `nodes`-point Legendre rule with the
    /// weight folded in.
    pub fn ball_legendre(
        n: usize,
        alpha: f64,
        capacity: u32,
        nodes: usize,
    ) -> Result<QuadratureGrid> {
        check_dim(n)?;
        if alpha <= -1.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha = {alpha} must exceed -1"
            )));
        }
        let radial = GaussRule::legendre(nodes)?
            .fold_weight(|t| (1.0 - t).powf(alpha) * t.powi(n as i32 - 1));
        QuadratureGrid::assemble(n, capacity, RadialRule::LegendreFolded { alpha }, radial)
    }

    /// Exact grid for `exp(-nu |z|^2) dlambda` up to degree `capacity`, any `nu`.
    pub fn gaussian(n: usize, capacity: u32) -> Result<QuadratureGrid> {
        check_dim(n)?;
        let radial = GaussRule::laguerre(gauss_count(capacity), n as f64 - 1.0)?;
        QuadratureGrid::assemble(n, capacity, RadialRule::Laguerre, radial)
    }

    /// Grid matching the base measure of `space`.
    pub fn for_space<S: KernelSpace + ?Sized>(space: &S, capacity: u32) -> Result<QuadratureGrid> {
        match space.measure() {
            Measure::Ball { alpha, .. } => QuadratureGrid::ball(space.dim(), alpha, capacity),
            Measure::Gaussian { .. } => QuadratureGrid::gaussian(space.dim(), capacity),
        }
    }

    fn assemble(
        n: usize,
        capacity: u32,
        rule: RadialRule,
        radial: GaussRule,
    ) -> Result<QuadratureGrid> {
        let angular_u = if n == 2 {
            Some(GaussRule::legendre(gauss_count(capacity))?)
        } else {
            None
        };
        Ok(QuadratureGrid {
            n,
            capacity,
            rule,
            radial,
            angular_u,
            theta_count: 2 * capacity as usize + 1,
        })
    }

    /// Same measure with every node count doubled.
    pub fn doubled(&self) -> Result<QuadratureGrid> {
        let count = 2 * self.radial.len();
        let radial = match self.rule {
            RadialRule::Jacobi { alpha } => GaussRule::jacobi(count, alpha, self.n as f64 - 1.0)?,
            RadialRule::Laguerre => GaussRule::laguerre(count, self.n as f64 - 1.0)?,
            RadialRule::LegendreFolded { alpha } => {
                let n = self.n as i32;
                GaussRule::legendre(count)?.fold_weight(|t| (1.0 - t).powf(alpha) * t.powi(n - 1))
            }
        };
        let angular_u = match &self.angular_u {
            Some(u) => Some(GaussRule::legendre(2 * u.len())?),
            None => None,
        };
        Ok(QuadratureGrid {
            radial,
            angular_u,
            theta_count: 2 * self.theta_count,
            ..self.clone()
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    pub fn rule(&self) -> RadialRule {
        self.rule
    }

    pub fn radial(&self) -> &GaussRule {
        &self.radial
    }

    pub fn angular_u(&self) -> Option<&GaussRule> {
        self.angular_u.as_ref()
    }

    pub fn theta_count(&self) -> usize {
        self.theta_count
    }

    fn check_capacity(&self, degree: u32) -> Result<()> {
        if degree > self.capacity {
            return Err(Error::Capacity {
                required: degree as usize,
                capacity: self.capacity as usize,
            });
        }
        Ok(())
    }

    /// Unit-sphere points with their `dsigma` weights.
    fn sphere(&self) -> Vec<(Vec<Complex64>, f64)> {
        let m = self.theta_count;
        let step = 2.0 * PI / m as f64;
        let phases: Vec<Complex64> = (0..m)
            .map(|j| Complex64::from_polar(1.0, j as f64 * step))
            .collect();
        match &self.angular_u {
            None => phases.iter().map(|&e| (vec![e], step)).collect(),
            Some(u_rule) => {
                let mut out = Vec::with_capacity(u_rule.len() * m * m);
                for (&u, &wu) in u_rule.nodes().iter().zip(u_rule.weights()) {
                    let (a, b) = (u.sqrt(), (1.0 - u).sqrt());
                    let w = 0.5 * wu * step * step;
                    for &e1 in &phases {
                        for &e2 in &phases {
                            out.push((vec![e1 * a, e2 * b], w));
                        }
                    }
                }
                out
            }
        }
    }

    /// Nodes of the full tensor grid for `measure`, with weights.
    pub fn points(&self, measure: Measure) -> Result<Vec<(CVector, f64)>> {
        let (scale, total): (Box<dyn Fn(f64) -> f64>, f64) = match (measure, self.rule) {
            (Measure::Ball { alpha, radius }, RadialRule::Jacobi { alpha: a })
            | (Measure::Ball { alpha, radius }, RadialRule::LegendreFolded { alpha: a }) => {
                if alpha != a {
                    return Err(Error::InvalidParameter(format!(
                        "grid was built for alpha = {a}, measure has alpha = {alpha}"
                    )));
                }
                if radius.is_nan() || radius <= 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "radius = {radius} must be positive"
                    )));
                }
                let factor = 0.5 * radius.powi(2 * self.n as i32);
                (Box::new(move |t: f64| radius * t.sqrt()), factor)
            }
            (Measure::Gaussian { nu }, RadialRule::Laguerre) => {
                if nu.is_nan() || nu <= 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "nu = {nu} must be positive"
                    )));
                }
                let factor = 0.5 / nu.powi(self.n as i32);
                (Box::new(move |s: f64| (s / nu).sqrt()), factor)
            }
            (measure, rule) => {
                return Err(Error::InvalidParameter(format!(
                    "grid rule {rule:?} does not fit measure {measure:?}"
                )))
            }
        };
        let sphere = self.sphere();
        let mut out = Vec::with_capacity(self.radial.len() * sphere.len());
        for (&x, &wx) in self.radial.nodes().iter().zip(self.radial.weights()) {
            let r = scale(x);
            for (xi, ws) in &sphere {
                let z = CVector::new(xi.iter().map(|c| c * r).collect())?;
                out.push((z, total * wx * ws));
            }
        }
        Ok(out)
    }

    fn integrate(
        &self,
        measure: Measure,
        degree: u32,
        g: impl Fn(&CVector) -> Complex64,
    ) -> Result<Complex64> {
        self.check_capacity(degree)?;
        let sum: ComplexSum = self
            .points(measure)?
            .iter()
            .map(|(z, w)| g(z) * *w)
            .collect();
        Ok(sum.value())
    }
}

/// `int g (1 - |z/R|^2)^alpha dlambda` over the ball of radius `R`.
///
/// `degree` is the largest total degree in `z` (and in `conj z`) of `g`;
/// the grid must have at least that capacity.
pub fn integrate_ball(
    grid: &QuadratureGrid,
    alpha: f64,
    radius: f64,
    degree: u32,
    g: impl Fn(&CVector) -> Complex64,
) -> Result<Complex64> {
    grid.integrate(Measure::Ball { alpha, radius }, degree, g)
}

/// `int g exp(-nu |z|^2) dlambda` over `C^n`.
pub fn integrate_gaussian(
    grid: &QuadratureGrid,
    nu: f64,
    degree: u32,
    g: impl Fn(&CVector) -> Complex64,
) -> Result<Complex64> {
    grid.integrate(Measure::Gaussian { nu }, degree, g)
}

/// Inner product of `f` and `g` computed from the defining integrals:
/// `<f1, g1> + m! sum_{|q|=m} (1/q!) <D^q f2, D^q g2>` in `L^2` of the base measure.
pub fn defining_inner<S: KernelSpace + ?Sized>(
    space: &S,
    grid: &QuadratureGrid,
    f: &TaylorSeries,
    g: &TaylorSeries,
) -> Result<Complex64> {
    space.check_series(f)?;
    space.check_series(g)?;
    if grid.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: grid.dim(),
        });
    }
    grid.check_capacity(f.degree().max(g.degree()))?;
    let m = space.order();
    let (f1, f2) = f.split(m);
    let (g1, g2) = g.split(m);

    let mut pieces = vec![(1.0, f1, g1)];
    if !(f2.is_zero() || g2.is_zero()) {
        let mfact = factorial_f64(m);
        for q in enumerate_indices(space.dim(), m) {
            pieces.push((
                mfact / q.factorial_f64(),
                f2.derivative(&q)?,
                g2.derivative(&q)?,
            ));
        }
    }
    pieces.retain(|(_, a, b)| !(a.is_zero() || b.is_zero()));

    let points = grid.points(space.measure())?;
    let mut total = ComplexSum::new();
    for (c, a, b) in &pieces {
        let mut acc = ComplexSum::new();
        for (z, w) in &points {
            acc.add(a.evaluate(z)? * b.evaluate(z)?.conj() * *w);
        }
        total.add(acc.value() * *c);
    }
    Ok(total.value())
}

/// `|Q - N| / N` with `Q` the defining norm of `z^p` by quadrature and `N`
/// the space's closed-form `||z^p||^2`.
pub fn verify_monomial_norm<S: KernelSpace + ?Sized>(
    space: &S,
    grid: &QuadratureGrid,
    p: &MultiIndex,
) -> Result<f64> {
    let phi = TaylorSeries::monomial(p.clone());
    let quad = defining_inner(space, grid, &phi, &phi)?.re;
    let formula = space.monomial_norm_sq(p)?;
    Ok((quad - formula).abs() / formula)
}

/// `|<z^p, z^q>| / (||z^p|| ||z^q||)`, all three from quadrature.
pub fn verify_orthogonality<S: KernelSpace + ?Sized>(
    space: &S,
    grid: &QuadratureGrid,
    p: &MultiIndex,
    q: &MultiIndex,
) -> Result<f64> {
    if p == q {
        return Err(Error::InvalidParameter(format!(
            "orthogonality needs p != q, got {p} twice"
        )));
    }
    let a = TaylorSeries::monomial(p.clone());
    let b = TaylorSeries::monomial(q.clone());
    let cross = defining_inner(space, grid, &a, &b)?;
    let na = defining_inner(space, grid, &a, &a)?.re;
    let nb = defining_inner(space, grid, &b, &b)?.re;
    Ok(cross.norm() / (na * nb).sqrt())
}

/// Relative gap between the defining norm of `f` by quadrature and the
/// coefficient-space norm `sum_p ||z^p||^2 |a_p|^2`.
pub fn verify_sobolev_norm<S: KernelSpace + ?Sized>(
    space: &S,
    grid: &QuadratureGrid,
    f: &TaylorSeries,
) -> Result<f64> {
    let quad = defining_inner(space, grid, f, f)?.re;
    let coeff = space.function_norm_sq(f)?;
    if coeff == 0.0 {
        return Ok(quad.abs());
    }
    Ok((quad - coeff).abs() / coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bargmann::{BargmannDirichletSpace, NuPlacement};
    use crate::bergman::BergmanDirichletSpace;
    use crate::hypergeo::ln_gamma;
    use crate::multiindex::indices_up_to;

    fn mi(parts: &[u32]) -> MultiIndex {
        MultiIndex::new(parts.to_vec()).unwrap()
    }

    fn one(_: &CVector) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn ball_volume() {
        let g = QuadratureGrid::ball(2, 0.0, 4).unwrap();
        let v = integrate_ball(&g, 0.0, 1.0, 0, one).unwrap();
        assert!((v.re - PI * PI / 2.0).abs() < 1e-14);
        let g = QuadratureGrid::ball(2, 1.5, 4).unwrap();
        let v = integrate_ball(&g, 1.5, 1.0, 0, one).unwrap();
        let want = PI * PI * (ln_gamma(2.5).unwrap() - ln_gamma(4.5).unwrap()).exp();
        assert!((v.re - want).abs() < 1e-14 * want);
        let g = QuadratureGrid::ball(1, 0.0, 4).unwrap();
        assert!((integrate_ball(&g, 0.0, 1.0, 0, one).unwrap().re - PI).abs() < 1e-14);
    }

    #[test]
    fn sphere_factor() {
        // (1/2) int_0^1 t^{|p|+1} dt * sigma(|xi^p|^2), with sigma(|xi_1|^2) = pi^2.
        let g = QuadratureGrid::ball(2, 0.0, 4).unwrap();
        let v = integrate_ball(&g, 0.0, 1.0, 1, |z| {
            Complex64::from(z.components()[0].norm_sqr())
        })
        .unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn torus_orthogonality() {
        let g = QuadratureGrid::ball(2, 0.7, 4).unwrap();
        let v = integrate_ball(&g, 0.7, 1.0, 1, |z| {
            z.components()[0] * z.components()[1].conj()
        })
        .unwrap();
        assert!(v.norm() < 1e-16);
        let g = QuadratureGrid::gaussian(2, 4).unwrap();
        let v = integrate_gaussian(&g, 1.0, 1, |z| z.components()[0] * z.components()[1].conj())
            .unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn gaussian_moments() {
        let g = QuadratureGrid::gaussian(2, 4).unwrap();
        assert!((integrate_gaussian(&g, 1.0, 0, one).unwrap().re - PI * PI).abs() < 1e-13);
        let v = integrate_gaussian(&g, 1.0, 1, |z| {
            Complex64::from(z.components()[0].norm_sqr())
        })
        .unwrap();
        assert!((v.re - PI * PI).abs() < 1e-13);
        let g = QuadratureGrid::gaussian(1, 4).unwrap();
        let v = integrate_gaussian(&g, 2.5, 0, one).unwrap();
        assert!((v.re - PI / 2.5).abs() < 1e-14);
    }

    #[test]
    fn capacity_and_measure_mismatch() {
        let g = QuadratureGrid::ball(2, 0.0, 4).unwrap();
        assert!(matches!(
            integrate_ball(&g, 0.0, 1.0, 5, one),
            Err(Error::Capacity {
                required: 5,
                capacity: 4
            })
        ));
        assert!(integrate_ball(&g, 0.5, 1.0, 0, one).is_err());
        assert!(integrate_gaussian(&g, 1.0, 0, one).is_err());
        assert!(QuadratureGrid::ball(3, 0.0, 4).is_err());
    }

    #[test]
    fn monomial_norms_bergman() {
        for (alpha, m) in [(0.0, 0), (1.5, 2), (0.5, 1), (2.0, 3)] {
            let s = BergmanDirichletSpace::new(2, alpha, m).unwrap();
            let g = QuadratureGrid::for_space(&s, 6).unwrap();
            for p in indices_up_to(2, 6) {
                let e = verify_monomial_norm(&s, &g, &p).unwrap();
                assert!(e < 1e-12, "alpha={alpha} m={m} p={p}: {e}");
            }
        }
    }

    #[test]
    fn monomial_norms_bargmann_and_variant() {
        let s = BargmannDirichletSpace::new(2, 2.0, 2).unwrap();
        let g = QuadratureGrid::for_space(&s, 6).unwrap();
        let p = mi(&[2, 1]);
        assert!(verify_monomial_norm(&s, &g, &p).unwrap() < 1e-12);
        let bad = s.with_placement(NuPlacement::Denominator);
        assert!(verify_monomial_norm(&bad, &g, &p).unwrap() > 0.5);
    }

    #[test]
    fn scaled_ball_change_of_variables() {
        for radius in [2.0, 5.0] {
            let s = BergmanDirichletSpace::with_radius(2, 0.8, 0, radius).unwrap();
            let g = QuadratureGrid::for_space(&s, 4).unwrap();
            for p in indices_up_to(2, 4) {
                assert!(verify_monomial_norm(&s, &g, &p).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn doubling_changes_nothing() {
        let s = BergmanDirichletSpace::new(2, 0.5, 2).unwrap();
        let g = QuadratureGrid::for_space(&s, 5).unwrap();
        let g2 = g.doubled().unwrap();
        let phi = TaylorSeries::monomial(mi(&[3, 2]));
        let a = defining_inner(&s, &g, &phi, &phi).unwrap().re;
        let b = defining_inner(&s, &g2, &phi, &phi).unwrap().re;
        assert!((a - b).abs() <= 1e-12 * a);
    }

    #[test]
    fn legendre_fallback_close_for_integer_alpha() {
        let g = QuadratureGrid::ball_legendre(2, 2.0, 4, 6).unwrap();
        let v = integrate_ball(&g, 2.0, 1.0, 0, one).unwrap();
        let want = PI * PI * (ln_gamma(3.0).unwrap() - ln_gamma(5.0).unwrap()).exp();
        assert!((v.re - want).abs() < 1e-14 * want);
    }

    #[test]
    fn orthogonality_examples() {
        let s = BergmanDirichletSpace::new(2, 0.3, 1).unwrap();
        let g = QuadratureGrid::for_space(&s, 4).unwrap();
        assert!(verify_orthogonality(&s, &g, &mi(&[1, 0]), &mi(&[0, 1])).unwrap() < 1e-14);
        assert!(verify_orthogonality(&s, &g, &mi(&[2, 0]), &mi(&[1, 1])).unwrap() < 1e-10);
        let s = BargmannDirichletSpace::new(2, 1.0, 2).unwrap();
        let g = QuadratureGrid::for_space(&s, 6).unwrap();
        assert!(verify_orthogonality(&s, &g, &mi(&[0, 0]), &mi(&[3, 3])).unwrap() < 1e-10);
        assert!(verify_orthogonality(&s, &g, &mi(&[1, 1]), &mi(&[1, 1])).is_err());
    }
}

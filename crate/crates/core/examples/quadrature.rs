//! Gauss rules and the product grids built from them.

use std::f64::consts::PI;

use bergfock::quad::{integrate_ball, integrate_gaussian};
use bergfock::{GaussRule, QuadratureGrid};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let rule = GaussRule::jacobi(5, 2.0, 1.0)?;
    println!("Gauss-Jacobi (1-t)^2 t on [0,1], 5 points");
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        println!("  node {x:.16}  weight {w:.16e}");
    }
    let lag = GaussRule::laguerre(8, 0.5)?;
    println!(
        "Gauss-Laguerre a=0.5: int s^7 s^0.5 e^-s = {:.15e}",
        lag.integrate(|s| s.powi(7))
    );

    let grid = QuadratureGrid::ball(2, 0.0, 4)?;
    let vol = integrate_ball(&grid, 0.0, 1.0, 0, |_| Complex64::new(1.0, 0.0))?;
    println!(
        "volume of the unit ball in C^2: {:.15} (pi^2/2 = {:.15})",
        vol.re,
        PI * PI / 2.0
    );

    let grid = QuadratureGrid::gaussian(2, 4)?;
    let m = integrate_gaussian(&grid, 1.5, 4, |z| {
        let a = z.components()[0];
        Complex64::new(a.norm_sqr().powi(2), 0.0)
    })?;
    println!(
        "int |z1|^4 e^(-1.5|z|^2): {:.15} (exact {:.15})",
        m.re,
        2.0 * PI * PI / 1.5f64.powi(4)
    );
    Ok(())
}

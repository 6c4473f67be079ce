//! Ball kernels with `alpha = nu R^2` approach the Gaussian kernel as `R` grows.

use bergfock::asymptotics::{convergence_sweep_at, error_ratios, prefactor_limit, prefactor_ratio};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let radii = [5.0, 10.0, 20.0, 40.0, 80.0, 160.0];
    for r in [10.0, 100.0, 1000.0] {
        println!(
            "prefactor at R={r:>6}: {:.15e} (limit {:.15e})",
            prefactor_ratio(1.0, r, 2)?,
            prefactor_limit(1.0, 2)
        );
    }
    for t in [Complex64::new(0.5, 0.0), Complex64::new(-0.5, 0.0)] {
        let recs = convergence_sweep_at(1.0, 2, 2, t, &radii)?;
        let ratios = error_ratios(&recs);
        println!("\nn=2 m=2 nu=1 t={t}");
        for (i, r) in recs.iter().enumerate() {
            let ratio = if i == 0 {
                String::new()
            } else {
                format!("{:.4}", ratios[i - 1])
            };
            println!(
                "  R={:>5}  |K_R - K_inf| = {:.6e}  {ratio}",
                r.radius, r.abs_error
            );
        }
    }
    println!("\nat t=-0.5 the error grows from R=5 to R=10 before the 1/R^2 regime sets in");
    Ok(())
}

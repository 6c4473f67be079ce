//! The coefficient norm of a polynomial against the defining derivative integral.

use bergfock::multiindex::indices_up_to;
use bergfock::quad::{defining_inner, verify_sobolev_norm};
use bergfock::{BergmanDirichletSpace, KernelSpace, QuadratureGrid, TaylorSeries};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let mut f = TaylorSeries::zero(2);
    for (k, p) in indices_up_to(2, 5).into_iter().enumerate() {
        let k = k as f64;
        f.add_term(p, Complex64::new((0.37 * k).sin(), (1.1 * k).cos()))?;
    }
    for m in 0..=3 {
        let s = BergmanDirichletSpace::new(2, 0.5, m)?;
        let grid = QuadratureGrid::for_space(&s, 5)?;
        println!(
            "m={m}: coefficients {:.15e}  integral {:.15e}  rel {:.1e}",
            s.function_norm_sq(&f)?,
            defining_inner(&s, &grid, &f, &f)?.re,
            verify_sobolev_norm(&s, &grid, &f)?
        );
    }
    Ok(())
}

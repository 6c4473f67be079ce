//! Closed-form ball kernel against its truncated basis expansion.

use bergfock::{BergmanDirichletSpace, CVector, KernelSpace};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let z = CVector::new(vec![Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)])?;
    let w = CVector::new(vec![Complex64::new(0.5, -0.2), Complex64::new(0.1, 0.3)])?;
    println!("t = <z, w> = {:.6}", bergfock::inner(&z, &w)?);
    println!(
        "{:>5} {:>4} {:>26} {:>26} {:>10}",
        "alpha", "m", "closed", "series(200)", "rel diff"
    );
    for alpha in [0.0, 0.5, 2.0] {
        for m in 0..=3 {
            let space = BergmanDirichletSpace::new(2, alpha, m)?;
            let closed = space.kernel_closed(&z, &w)?;
            let series = space.kernel_series(&z, &w, 200)?;
            println!(
                "{alpha:>5} {m:>4} {:>26} {:>26} {:>10.2e}",
                format!("{closed:.12}"),
                format!("{series:.12}"),
                (closed - series).norm() / closed.norm()
            );
        }
    }
    Ok(())
}

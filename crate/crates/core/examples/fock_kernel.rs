//! Gaussian-weight kernel: m = 0 is `(nu/pi)^n e^{nu t}`, higher orders damp growth.

use bergfock::{BargmannDirichletSpace, KernelSpace};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let nu = 1.0;
    println!(
        "{:>6} {:>14} {:>14} {:>14} {:>14}",
        "t", "m=0", "m=1", "m=2", "m=3"
    );
    for t in [-3.0, -1.0, 0.0, 1.0, 3.0, 6.0] {
        let mut row = format!("{t:>6}");
        for m in 0..=3 {
            let k = BargmannDirichletSpace::new(1, nu, m)?.kernel_at(Complex64::new(t, 0.0))?;
            row.push_str(&format!(" {:>14.8e}", k.value.re));
        }
        println!("{row}");
    }
    let s = BargmannDirichletSpace::new(1, nu, 0)?;
    let t = Complex64::new(1.0, 2.0);
    println!(
        "\nm=0 at t={t}: kernel {:.15}, exp form {:.15}",
        s.kernel_at(t)?.value,
        (t * nu).exp() * nu / std::f64::consts::PI
    );
    Ok(())
}

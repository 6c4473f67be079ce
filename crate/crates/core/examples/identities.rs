//! Multinomial identities behind the degree collapse of the kernel series.

use bergfock::multiindex::{enumerate_indices, power_sum_residual, snomial_identity_residual};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    for k in [2, 5, 10] {
        println!(
            "k={k:>2}: {} indices of degree k in C^3, falling-factorial binomial absolute residual {:.1e}",
            enumerate_indices(3, k).len(),
            snomial_identity_residual(1.7, -0.4, k)
        );
    }
    let z = [
        Complex64::new(0.3, 0.2),
        Complex64::new(-0.5, 0.1),
        Complex64::new(0.2, 0.9),
    ];
    let w = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.4, -0.6),
        Complex64::new(-0.3, 0.2),
    ];
    for k in [0, 3, 7, 10] {
        println!(
            "sum_|p|=k z^p conj(w)^p / p! vs <z,w>^k/k!: k={k:>2} residual {:.1e}",
            power_sum_residual(&z, &w, k)?
        );
    }
    Ok(())
}

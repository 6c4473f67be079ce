//! `3F2(b,c,x+a; d,e; z/x) -> 2F2(b,c; d,e; z)` at rate `1/x`.

use bergfock::asymptotics::confluent_limit_sweep;
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let xs = [1e2, 1e3, 1e4, 1e5, 1e6];
    let z = Complex64::new(-0.6, 0.7);
    let errs = confluent_limit_sweep(1.0, 1.0, 3.0, 3.0, 2.5, z, &xs)?;
    for w in errs.windows(2) {
        println!(
            "x={:>8.0e}  error {:.6e}  decade ratio {:.4}",
            w[1].0,
            w[1].1,
            w[0].1 / w[1].1
        );
    }
    Ok(())
}

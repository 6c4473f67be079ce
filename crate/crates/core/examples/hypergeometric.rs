//! Generalized hypergeometric series in double-double arithmetic.

use bergfock::hypergeo::eval_pfq;
use bergfock::HypergeometricSpec;
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let cases = [
        ("1F1(1;2;z)", vec![1.0], vec![2.0], Complex64::new(2.0, 0.0)),
        (
            "2F1(1,1;2;z)",
            vec![1.0, 1.0],
            vec![2.0],
            Complex64::new(0.5, 0.5),
        ),
        (
            "3F2(1,1,4.5;3,3;z)",
            vec![1.0, 1.0, 4.5],
            vec![3.0, 3.0],
            Complex64::new(-0.9, 0.1),
        ),
        (
            "2F2(1,1;4,4;z)",
            vec![1.0, 1.0],
            vec![4.0, 4.0],
            Complex64::new(-20.0, 0.0),
        ),
        (
            "2F1(-4,2;3;z) polynomial",
            vec![-4.0, 2.0],
            vec![3.0],
            Complex64::new(5.0, 0.0),
        ),
    ];
    for (name, a, b, z) in cases {
        let spec = HypergeometricSpec::new(a, b)?;
        let r = eval_pfq(&spec, z, 1e-17, 20_000)?;
        println!(
            "{name:<28} z={z:<10} value={:.16e}  terms={}  tail~{:.1e}",
            r.value, r.terms_used, r.error_estimate
        );
    }
    let z = Complex64::new(2.0, 0.0);
    println!("check: (e^2 - 1)/2 = {:.16e}", (z.exp().re - 1.0) / 2.0);
    Ok(())
}

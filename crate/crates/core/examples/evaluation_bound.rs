//! `|f(z)| <= sqrt(K(z,z)) ||f||`, with equality for kernel sections.

use bergfock::{BergmanDirichletSpace, CVector, KernelSpace};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let s = BergmanDirichletSpace::new(2, 0.0, 1)?;
    let w = CVector::new(vec![Complex64::new(0.3, 0.0), Complex64::new(0.0, 0.4)])?;
    for degree in [2, 8, 32, 64] {
        let f = s.kernel_section(&w, degree)?;
        let lhs = f.evaluate(&w)?.norm();
        let rhs = s.pointwise_bound(&w)? * s.function_norm_sq(&f)?.sqrt();
        println!(
            "section of degree {degree:>2}: |f(w)| / bound = {:.12}",
            lhs / rhs
        );
    }
    for r in [0.0, 0.5, 0.9, 0.99] {
        let z = CVector::new(vec![Complex64::new(r, 0.0), Complex64::new(0.0, 0.0)])?;
        println!("|z|={r:<5} sqrt K(z,z) = {:.6e}", s.pointwise_bound(&z)?);
    }
    Ok(())
}

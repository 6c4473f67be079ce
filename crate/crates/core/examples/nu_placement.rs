//! Where `nu^m` sits in the Gaussian monomial norm, decided by quadrature.

use bergfock::multiindex::indices_up_to;
use bergfock::quad::verify_monomial_norm;
use bergfock::{BargmannDirichletSpace, NuPlacement, QuadratureGrid};

fn main() -> bergfock::Result<()> {
    for nu in [0.5, 1.0, 2.0, 3.0] {
        let mut worst = [0.0f64; 2];
        for (slot, placement) in [NuPlacement::Numerator, NuPlacement::Denominator]
            .into_iter()
            .enumerate()
        {
            let s = BargmannDirichletSpace::new(2, nu, 2)?.with_placement(placement);
            let grid = QuadratureGrid::for_space(&s, 6)?;
            for p in indices_up_to(2, 6) {
                worst[slot] = worst[slot].max(verify_monomial_norm(&s, &grid, &p)?);
            }
        }
        println!(
            "nu={nu}: numerator worst rel {:.1e}, denominator worst rel {:.3}",
            worst[0], worst[1]
        );
    }
    println!("the two agree only at nu = 1");
    Ok(())
}

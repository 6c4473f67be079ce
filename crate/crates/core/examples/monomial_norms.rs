//! Monomial norms from the coefficient formula next to their quadrature values.

use bergfock::multiindex::indices_up_to;
use bergfock::quad::{defining_inner, verify_monomial_norm};
use bergfock::{
    BargmannDirichletSpace, BergmanDirichletSpace, KernelSpace, QuadratureGrid, TaylorSeries,
};

fn show(name: &str, space: &dyn KernelSpace) -> bergfock::Result<()> {
    let grid = QuadratureGrid::for_space(space, 4)?;
    println!("{name}");
    for p in indices_up_to(space.dim(), 4) {
        let f = TaylorSeries::monomial(p.clone());
        println!(
            "  p={:?}  formula {:.15e}  quadrature {:.15e}  rel {:.1e}",
            p.parts(),
            space.monomial_norm_sq(&p)?,
            defining_inner(space, &grid, &f, &f)?.re,
            verify_monomial_norm(space, &grid, &p)?
        );
    }
    Ok(())
}

fn main() -> bergfock::Result<()> {
    show(
        "ball n=2 alpha=0.5 m=2",
        &BergmanDirichletSpace::new(2, 0.5, 2)?,
    )?;
    show(
        "gaussian n=2 nu=2 m=2",
        &BargmannDirichletSpace::new(2, 2.0, 2)?,
    )
}

//! `<f, K(., w)> = f(w)` for a polynomial in both space families.

use bergfock::multiindex::MultiIndex;
use bergfock::{BargmannDirichletSpace, BergmanDirichletSpace, CVector, KernelSpace, TaylorSeries};
use num_complex::Complex64;

fn main() -> bergfock::Result<()> {
    let f = TaylorSeries::from_terms(
        2,
        [
            (MultiIndex::new(vec![0, 0])?, Complex64::new(1.0, 0.0)),
            (MultiIndex::new(vec![1, 2])?, Complex64::new(-2.0, 0.5)),
            (MultiIndex::new(vec![4, 0])?, Complex64::new(0.0, 3.0)),
            (MultiIndex::new(vec![3, 5])?, Complex64::new(0.7, 0.0)),
        ],
    )?;
    let w = CVector::new(vec![Complex64::new(0.4, -0.3), Complex64::new(0.2, 0.5)])?;
    println!("f(w) = {:.15}", f.evaluate(&w)?);
    for m in 0..=3 {
        let ball = BergmanDirichletSpace::new(2, 1.0, m)?;
        let fock = BargmannDirichletSpace::new(2, 0.5, m)?;
        println!(
            "m={m}: ball <f,K_w> = {:.15}   gaussian <f,K_w> = {:.15}",
            ball.reproduce(&f, &w)?,
            fock.reproduce(&f, &w)?
        );
    }
    Ok(())
}

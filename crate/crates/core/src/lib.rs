pub mod asymptotics;
pub mod bargmann;
pub mod bergman;
pub mod cli;
pub mod compensated;
pub mod error;
pub mod holo;
pub mod hypergeo;
pub mod multiindex;
pub mod quad;
pub mod report;
pub mod space;

pub use bargmann::{BargmannDirichletSpace, NuPlacement};
pub use bergman::BergmanDirichletSpace;
pub use error::{Error, Result};
pub use holo::{inner, CVector, TaylorSeries};
pub use hypergeo::{HypergeometricSpec, SeriesOptions, SeriesResult};
pub use multiindex::MultiIndex;
pub use quad::{GaussRule, QuadratureGrid};
pub use space::{KernelSpace, KernelValue, Measure};

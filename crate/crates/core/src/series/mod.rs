//! Hypergeometric series solutions: the GKZ operators, exact truncated
//! series, the annihilation check, the numerical period oracle and the
//! maximal-degeneracy certificate.

mod annihilation;
mod formal;
mod generate;
mod mdp;
mod quadrature;
mod system;

pub use annihilation::{verify_annihilation, AnnihilationReport, OperatorResidual};
pub use formal::{
    box_apply, euler_residual, falling_factorial, Coordinates, EulerResidual, FormalSeries, Region,
    Truncation, TruncationSpec,
};
pub use generate::{check_series_basis, local_series, multinomial, torus_cycle_series};
pub use mdp::{
    check_tau, default_tau, tau_dual_basis, verify_max_degeneracy, ExistenceReport, MdpReport,
};
pub use quadrature::{coordinates_x, numeric_period, LaurentPolynomial, NEAR_ZERO_TOLERANCE};
pub use system::GkzSystem;

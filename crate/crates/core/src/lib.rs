//! Double-precision toolkit for fractional-order logistic growth: Mittag-Leffler
//! evaluation on the real line, Caputo derivatives (exact power rule and an L1
//! scheme), the identity family that an exact ML solution would have to satisfy,
//! and solvers for the fractional logistic equation itself.

pub mod caputo;
pub mod dd;
pub mod error;
pub mod gamma;
pub mod grid;
pub mod identities;
pub mod logistic;
pub mod ml;
pub mod report;

pub use error::{Error, Result};
pub use grid::{GridFunction, UniformGrid};
pub use ml::{EvalPolicy, MLParams};
pub use report::{GapReport, ResidualReport};

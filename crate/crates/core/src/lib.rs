#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod format;
pub mod laguerre;
pub mod oracle;
pub mod perturbation;
pub mod scalar;
pub mod special;
pub mod spectra;
pub mod tables;
pub mod tridiag;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision instantiations used by the tables, reports and CLI.
pub type Spec = spectra::PotentialSpec<f64>;
pub type State = spectra::RadialState<f64>;
pub type Morse = spectra::MorseParams<f64>;
pub type Breakdown = perturbation::EnergyBreakdown<f64>;
pub type Rule = laguerre::QuadratureRule<f64>;
pub type Grid = oracle::RadialGrid<f64>;

pub type Spec32 = spectra::PotentialSpec<f32>;
pub type Rule32 = laguerre::QuadratureRule<f32>;

//! Independent checks: grid eigensolvers, exact closed forms for the full
//! potentials, quadrature expectations and the discrepancy catalog.

mod exact;
mod grid;

pub use exact::{
    exact_full, exact_full_coulomb, exact_full_ho, full_state, hellmann_feynman_check, quad_expectation, HfParameter, HF_STEP,
};

pub use grid::{
    line_levels_below, solve_line, solve_radial, solve_radial_log, Extrapolation, LineGrid, LogGrid, RadialGrid, MIN_POINTS,
};

pub mod report;

//! Statistical force on a partition wall separating two half-wells of ideal
//! bosons, one with a Neumann and one with a Dirichlet condition at the wall.
//!
//! All quantities are dimensionless: energies in units of the half-well
//! level scale, temperatures `t = 1/b` in the same units, and forces scaled
//! so that `f = sum_n e_n N_n`.
//!
//! ```
//! use wallforce::{net_force, ThermoPoint, DEFAULT_TOL};
//!
//! let pair = net_force(ThermoPoint::new(100, 0.01).unwrap(), DEFAULT_TOL).unwrap();
//! assert!((pair.delta_f - 75.0).abs() < 1e-6);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod cli;
pub mod error;
pub mod force;
pub mod occupancy;
mod quadrature;
pub mod roots;
pub mod spectrum;

pub use error::{Error, Result};
pub use force::{
    half_force, half_force_at, net_force, net_force_zero_t, sweep, ForcePair, GridScale, Method,
    RowValues, SweepConfig, SweepRow,
};
pub use occupancy::{solve_alpha, total_number, AlphaSolution, ThermoPoint, DEFAULT_TOL, TERM_TOL};
pub use spectrum::WellSide;

//! Single-particle levels of the two half-wells.
//!
//! Energies are in units of the Dirichlet box scale, so the right half-well
//! (Neumann at the partition, Dirichlet at the outer wall) has levels
//! `(n - 1/2)^2` and the left half-well (Dirichlet at both ends) has `n^2`.

use std::fmt;

use crate::error::{Error, Result};

/// Which side of the partition a quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WellSide {
    /// Neumann at the partition, Dirichlet at the outer wall.
    Plus,
    /// Dirichlet at both walls.
    Minus,
}

impl WellSide {
    pub const BOTH: [WellSide; 2] = [WellSide::Plus, WellSide::Minus];

    /// Offset of the zero-index term when the one-sided level sum is folded
    /// onto a sum over all integers.
    pub fn sigma(self) -> f64 {
        match self {
            WellSide::Plus => 0.0,
            WellSide::Minus => 1.0,
        }
    }

    /// Sign carried by the `m`-th Fourier mode of the resummed theta series.
    pub fn tau(self) -> f64 {
        match self {
            WellSide::Plus => -1.0,
            WellSide::Minus => 1.0,
        }
    }

    pub fn ground_energy(self) -> f64 {
        match self {
            WellSide::Plus => 0.25,
            WellSide::Minus => 1.0,
        }
    }

    /// Level `n >= 1` of this half-well.
    pub fn energy_level(self, n: i64) -> Result<f64> {
        if n < 1 {
            return Err(Error::Domain(format!("level index must be >= 1, got {n}")));
        }
        Ok(self.energy_level_extended(n))
    }

    /// The closed-form level evaluated at any integer, as needed by sums that
    /// run over the whole lattice.
    pub fn energy_level_extended(self, n: i64) -> f64 {
        let k = match self {
            WellSide::Plus => n as f64 - 0.5,
            WellSide::Minus => n as f64,
        };
        k * k
    }

    /// `e_n - e_1`, computed without cancellation.
    pub fn excitation(self, n: i64) -> f64 {
        let n = n as f64;
        match self {
            WellSide::Plus => n * (n - 1.0),
            WellSide::Minus => (n - 1.0) * (n + 1.0),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            WellSide::Plus => '+',
            WellSide::Minus => '-',
        }
    }
}

impl fmt::Display for WellSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WellSide::Plus => f.write_str("plus"),
            WellSide::Minus => f.write_str("minus"),
        }
    }
}

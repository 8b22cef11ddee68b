//! Exact Hecke algebra computations with `q` specialized to a rational.
//!
//! The quadratic relation is `(T_i - q²)(T_i + 1) = 0`.

pub mod finite;
pub mod matrix;
pub mod scalar;
pub mod skew;

pub use finite::{
    c_w0, ideal_dimension, jm_eigenvalue_check, jm_element, jm_prime, parabolic_subgroup,
    regular_generator_matrices, sharp_twist_check, specht_dimension, specht_module, x_mu, y_mu,
    z_lambda, HeckeElement, ModuleMatrices,
};
pub use matrix::{Matrix, SparseMatrix};
pub use scalar::{QParam, Scalar};
pub use skew::{
    commutant_dimension, restriction_dimension_check, skew_rep_matrices, skew_weight_check,
    verify_affine_relations, SkewRepMatrices,
};

use crate::error::{Error, Result};

/// Largest ranks accepted by the factorial-size constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Left ideals and Specht modules inside the regular representation.
    pub ideal: usize,
    /// Regular representation generator matrices.
    pub regular: usize,
    /// Skew-shape modules.
    pub skew: usize,
}

impl Bounds {
    pub const DEFAULT: Bounds = Bounds {
        ideal: 5,
        regular: 6,
        skew: 8,
    };

    /// Defaults, each capped by `SEGKIT_MAX_R` when that is set to an integer.
    pub fn current() -> Bounds {
        let cap = std::env::var("SEGKIT_MAX_R")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok());
        match cap {
            Some(c) => Bounds {
                ideal: Self::DEFAULT.ideal.min(c),
                regular: Self::DEFAULT.regular.min(c),
                skew: Self::DEFAULT.skew.min(c),
            },
            None => Self::DEFAULT,
        }
    }
}

pub(crate) fn ensure_rank(r: usize, max: usize) -> Result<()> {
    if r > max {
        return Err(Error::RankTooLarge { r, max });
    }
    Ok(())
}

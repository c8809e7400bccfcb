//! Special-function backends: Laguerre polynomials (exact and float),
//! modified Bessel `I_alpha` for complex argument, Bessel `J_alpha` with
//! derivative, and Airy `Ai` with derivative.
//!
//! Everything is evaluated from power series with exact rational term
//! recurrences, switching to Poincare asymptotic expansions beyond a
//! crossover radius. Working precision is padded by the cancellation
//! budget of the series in question, so the stated precision is delivered
//! at the output.

mod airy;
mod bessel_i;
mod bessel_j;
mod laguerre;

pub use airy::airy;
pub use bessel_i::bessel_i;
pub use bessel_j::bessel_j;
pub use laguerre::{laguerre, laguerre_float};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("series did not converge within {max_terms} terms (|arg| = {arg_abs:.3e})")]
    MaxTermsExceeded { max_terms: usize, arg_abs: f64 },
    #[error("asymptotic expansion cannot reach 2^-{target_bits} at |arg| = {arg_abs:.3e}")]
    AsymptoticPrecisionLoss { target_bits: u32, arg_abs: f64 },
}

/// Evaluation policy: target precision, series/asymptotic crossover, and a
/// term cap.
///
/// The crossover default is `max(30, target_bits / 2)` in the function's
/// own argument units; at that radius the optimally truncated asymptotic
/// tail `~ exp(-2 |z|)` stays below `2^-target_bits`, and the power series
/// cancellation (at worst `exp(|z|)`) is absorbed by padding the working
/// precision.
#[derive(Clone, Debug)]
pub struct SeriesPolicy {
    pub target_bits: u32,
    pub crossover: f64,
    pub max_terms: usize,
}

impl SeriesPolicy {
    pub fn new(target_bits: u32) -> Self {
        Self {
            target_bits,
            crossover: 30f64.max(target_bits as f64 / 2.0),
            max_terms: 100_000,
        }
    }

    pub fn with_crossover(mut self, crossover: f64) -> Self {
        self.crossover = crossover;
        self
    }

    /// Working precision for a series whose worst-case cancellation is
    /// `exp(cancel_scale)`.
    pub(crate) fn working_prec(&self, cancel_scale: f64) -> u32 {
        self.target_bits + (1.4427 * cancel_scale.max(0.0)).ceil() as u32 + 32
    }
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self::new(crate::polycore::DEFAULT_PREC)
    }
}

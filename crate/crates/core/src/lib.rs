//! Energy-efficient link adaptation toolkit.
//!
//! The crate maximizes link-level energy efficiency — achievable rate divided
//! by transmit-plus-circuit power — by treating it as a concave-convex
//! fractional program. A generic Dinkelbach driver ([`fracprog`]) is combined
//! with pluggable inner subproblems:
//!
//! - [`waterfill`] — time-invariant parallel channels (water-filling, plus a
//!   Lambert-W closed form for a single flat channel),
//! - [`ergodic`] — time-varying channels with causal CSI (exponential-integral
//!   closed forms for Rayleigh fading, Monte Carlo over parallel/MIMO
//!   channels),
//! - [`mmse`] — arbitrary discrete constellations via MMSE tables and
//!   mercury/water-filling,
//! - [`nested`] — the one-dimensional reformulation that reuses any
//!   rate-maximization routine as an inner oracle,
//! - [`powermodel`] — hardware power models mapped onto the solver-facing
//!   `(mu, scale, conversion)` triple,
//! - [`numerics`] — the shared special functions, quadrature and root finding.
//!
//! All solver quantities are per-Hz (power spectral densities, rates in
//! nat/s/Hz); unit conversions live in [`powermodel`].

pub mod ergodic;
pub mod fracprog;
pub mod mmse;
pub mod nested;
pub mod numerics;
pub mod powermodel;
pub mod waterfill;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root bracket does not straddle a sign change.
    #[error("invalid bracket [{lo}, {hi}]: endpoints do not straddle a sign change")]
    InvalidBracket { lo: f64, hi: f64 },

    /// Adaptive quadrature ran out of subdivisions before meeting tolerance.
    #[error("quadrature exhausted subdivisions: best estimate {estimate} (error bound {error_bound:e})")]
    QuadratureExhausted { estimate: f64, error_bound: f64 },

    /// The constraint set is empty.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A solver failed to converge or was given an unusable start.
    #[error("solver error: {0}")]
    Solver(String),

    /// A lookup fell outside the sampled range of an MMSE table.
    #[error("table range: {0}")]
    TableRange(String),

    /// Malformed MMSE table file.
    #[error("table format: {0}")]
    TableFormat(String),

    /// Monte Carlo estimate too noisy for the requested use.
    #[error("Monte Carlo accuracy: relative standard error {relative_se:.3e} exceeds {limit:.3e}; increase the sample count")]
    MonteCarloAccuracy { relative_se: f64, limit: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

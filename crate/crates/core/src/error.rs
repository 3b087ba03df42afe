use thiserror::Error;

/// Error type shared by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input coordinate was NaN or infinite.
    #[error("non-finite input z = ({x}, {y})")]
    NonFiniteInput { x: f64, y: f64 },

    /// A constructor or operation parameter violated its contract.
    #[error("invalid parameter: {0}")]
    InvalidParam(&'static str),

    /// An operation that requires the upper half-plane received y < 0.
    #[error("requires Im z >= 0, got y = {y}")]
    NegativeImag { y: f64 },

    /// A reference method was asked to evaluate outside its validated region.
    #[error("{method} is not valid at z = ({x}, {y})")]
    OutOfDomain {
        method: &'static str,
        x: f64,
        y: f64,
    },

    /// The adaptive quadrature exhausted its subdivision budget without
    /// meeting the requested tolerance. This is a test-infrastructure
    /// failure, never a silently degraded value.
    #[error(
        "quadrature did not converge at z = ({x}, {y}): error estimate ({err_re:e}, {err_im:e})"
    )]
    QuadratureNoConverge {
        x: f64,
        y: f64,
        err_re: f64,
        err_im: f64,
    },

    /// The pole expansion was evaluated exactly at one of its real-axis poles.
    #[error("evaluation exactly at pole z = {n}·h of the pole expansion")]
    PoleHit { n: u32 },
}

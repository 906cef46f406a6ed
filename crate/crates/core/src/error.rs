//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Why a transition matrix fails to be ergodic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErgodicityFailure {
    /// The positive-entry graph is not strongly connected.
    Reducible,
    /// Strongly connected, but the gcd of cycle lengths exceeds 1.
    Periodic { period: usize },
}

impl std::fmt::Display for ErgodicityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ErgodicityFailure::Reducible => write!(f, "reducible"),
            ErgodicityFailure::Periodic { period } => write!(f, "periodic with period {period}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid stochastic matrix: {0}")]
    InvalidMatrix(String),

    #[error("chain is not ergodic ({0})")]
    NotErgodic(ErgodicityFailure),

    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: u64, residual: f64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("non-finite state at t = {time:.6} during integration")]
    NonFiniteState { time: f64 },

    #[error("time step {dt:.3e} too coarse for switching rate 1/{epsilon:.3e}; need dt <= epsilon/10")]
    StepTooCoarse { dt: f64, epsilon: f64 },

    #[error("trajectory left the domain box by more than the margin at t = {time:.6}")]
    LeftDomain { time: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error(
        "forward-backward sweep diverged at iteration {iteration} \
         (relaxation {relaxation:.3e}, lambda {lambda:.3e}); try a smaller relaxation or lambda"
    )]
    SweepDiverged { iteration: usize, relaxation: f64, lambda: f64 },

    #[error("sweep did not converge within {max_iter} iterations (last update norm {update_norm:.3e})")]
    SweepMaxIter { max_iter: usize, update_norm: f64 },

    #[error("all Monte Carlo cells censored (zero hits); increase epsilon or zeta")]
    AllCensored,

    #[error("empty data subset")]
    EmptySubset,

    #[error("subsample size {m} exceeds dataset size {n} without replacement")]
    SubsampleTooLarge { m: usize, n: usize },

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    #[error("evaluator contract violated: {0}")]
    ContractViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

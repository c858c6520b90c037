//! Error type shared by the numeric and exact-arithmetic tracks.

use thiserror::Error;

/// Errors produced by evaluators, series constructors and checks.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the mathematical domain was violated
    /// (e.g. tau not in the upper half-plane, T-transformation for half-odd m).
    #[error("domain error: {0}")]
    Domain(String),

    /// A partial denominator came closer to 0 than the configured pole guard.
    #[error("pole proximity: {0}")]
    PoleProximity(String),

    /// The elliptic specialization z = a*tau/m makes a denominator 1 - q^0 vanish.
    #[error("specialization pole: {0}")]
    SpecializationPole(String),

    /// No summation cutoff within the budget certifies the requested tail bound.
    #[error("truncation budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A region cutoff cannot be certified complete at the requested order.
    #[error("region cutoff insufficient: {0}")]
    CutoffInsufficient(String),

    /// An exponent fell outside the declared conductor lattice, or the
    /// conductor itself grew past the supported bound.
    #[error("conductor overflow: {0}")]
    ConductorOverflow(String),

    /// Series division by something that is not q^e * (unit).
    #[error("series division: {0}")]
    Division(String),
}

impl Error {
    /// Process exit code for the CLI: 2 domain, 3 pole-proximity, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::ConductorOverflow(_) | Error::Division(_) => 2,
            Error::PoleProximity(_) | Error::SpecializationPole(_) => 3,
            Error::BudgetExceeded(_) | Error::CutoffInsufficient(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

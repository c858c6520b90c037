//! Numeric and exact-arithmetic machinery for a family of indefinite
//! theta-type functions and their modular transformation identities.
//!
//! Two tracks cover every identity:
//!
//! * **numeric** — certified-truncation evaluation of theta, eta, the four
//!   Mumford thetas, the Appell-type sum `Phi_1`, and the indefinite
//!   families `g`, `h`, `G`, `F` anywhere on the upper half-plane;
//! * **exact** — formal q-expansions with rational exponents and rational
//!   coefficients ([`qseries::QExpansion`]), used where identities hold
//!   coefficient by coefficient.
//!
//! The [`modular`] module builds the weight-3/2 S and T matrices acting on
//! the span of `F^{[m](a,0)}_{n,nu}(tau, 0)` and checks the action at the
//! level of value vectors. The [`suites`] module packages every identity
//! into seeded verification runs for the `itheta` binary.
//!
//! ```
//! use indefinite_theta::numerics::TruncationBudget;
//! use indefinite_theta::theta::{eta_eval, theta_eval, ThetaIndex, ThetaSign};
//! use num_complex::Complex64;
//!
//! let budget = TruncationBudget::default();
//! let tau = Complex64::new(0.0, 1.0);
//! let eta = eta_eval(tau, &budget)?;
//! assert!((eta.re - 0.7682254).abs() < 1e-7);
//!
//! // theta_{0,1}(i, 0) = 1 + 2q + 2q^4 + ... at q = e^{-2 pi}
//! let idx = ThetaIndex::new(0, 2, ThetaSign::Plus)?;
//! let value = theta_eval(&idx, tau, Complex64::new(0.0, 0.0), &budget)?;
//! assert!((value.re - 1.0037349).abs() < 1e-7);
//! # Ok::<(), indefinite_theta::error::Error>(())
//! ```

pub mod error;
pub mod family;
pub mod modular;
pub mod numerics;
pub mod phi;
pub mod qkernels;
pub mod qseries;
pub mod report;
pub mod suites;
pub mod theta;

pub use error::{Error, Result};
pub use numerics::TruncationBudget;

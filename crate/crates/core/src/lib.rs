//! Exact combinatorics of catenoid quiver Grassmannians for the equioriented
//! type-A quiver: emptiness, irreducibility, components as Schubert data, and
//! Poincaré polynomials computed two independent ways.

pub mod error;
pub mod instance;
pub mod poincare;
pub mod repcore;
pub mod report;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use poincare::{Coeff, QPolynomial};
pub use repcore::{DimVector, Instance, Interval, Representation};
pub use schubert::{Guard, ResolutionFrame, SubsetChain};

/// Polynomials with machine-word coefficients; overflow is reported.
pub type Poly = QPolynomial<u64>;
/// Polynomials with unbounded coefficients.
pub type BigPoly = QPolynomial<BigUint>;

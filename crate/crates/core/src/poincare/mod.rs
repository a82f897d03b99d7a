//! Poincaré polynomials: the stratification formula, the cell count oracle,
//! and the q-multinomials they are built from.

mod coeff;
mod multinomial;
mod polynomial;
mod strata;

pub use coeff::Coeff;
pub use multinomial::{multinomial, q_multinomial};
pub use polynomial::QPolynomial;
pub use strata::{
    euler_characteristic, fiber_dim, poincare_cells, poincare_cells_of, poincare_formula, strata, stratum_of,
    Decomposition,
};

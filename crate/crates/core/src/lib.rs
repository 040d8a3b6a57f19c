//! Exact computations in the q-deformed quaternion algebra: normal forms,
//! differential calculus, and Hopf structure.

pub mod algebra;
pub mod cli;
pub mod calculus;
pub mod expr;
pub mod hopf;
pub mod presentations;
pub mod report;
pub mod scalar;
pub mod verify;

pub use algebra::{NCPoly, Presentation, Word};
pub use scalar::{Coefficient, GaussRational, LaurentScalar};

/// Polynomials over ℚ(i)[q, q⁻¹].
pub type Poly = NCPoly<LaurentScalar>;
/// Presentations over ℚ(i)[q, q⁻¹].
pub type Pres = Presentation<LaurentScalar>;
/// Tensor elements over ℚ(i)[q, q⁻¹].
pub type Tensor = hopf::TensorPoly<LaurentScalar>;

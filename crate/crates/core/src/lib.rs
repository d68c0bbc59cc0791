//! Exact computations with quadratic Lie superalgebras, super exterior and
//! Clifford algebras, cubic elements and cubic Dirac operators.

pub mod clifford;
pub mod envelope;
pub mod error;
pub mod kostant;
pub mod liesuper;
pub mod linalg;
pub mod multilinear;
pub mod oracle;
pub mod scalar;
pub mod schema;
pub mod space;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use multilinear::{ExtElem, ExtMonomial};
pub use scalar::Scalar;
pub use space::{Endo, GramForm, Parity, QuadSpace, SuperSpace, ValidationReport};

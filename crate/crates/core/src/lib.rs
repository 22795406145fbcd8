//! Exact computations on toric Ishida complexes.
//!
//! Given a full-dimensional rational polyhedral cone this crate builds its face
//! lattice, the Ishida complexes of every face, the graded Ext groups of the
//! Du Bois complex of the affine toric variety, the local cohomological
//! dimension defect, classical face-count invariants and the multiplicities of
//! intersection-cohomology summands in the weight-graded trivial Hodge module.
//!
//! Everything is exact. Linear algebra is generic over [`linalg::Scalar`];
//! the concrete types used throughout are the aliases below.

pub mod combinatorics;
pub mod corpus;
pub mod input;
pub mod ishida;
pub mod linalg;
pub mod mhm;
pub mod polyhedral;
pub mod report;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type IntMatrix = linalg::Matrix<BigInt>;
pub type IntVector = Vec<BigInt>;

pub use polyhedral::{Cone, Face, FaceId, FaceLattice};

//! Cones, their face lattices, quotients and shellings.

mod cone;
mod faces;
mod shelling;

pub use cone::{homogenize_polytope, Cone};
pub use faces::{
    face_cone, is_cone_over_simple, is_cone_over_simplicial, is_simple_in_dim, normal_step_vector, quotient_cone,
    Face, FaceId, FaceLattice,
};
pub use shelling::{shelling, verify_shelling, Shelling, ShellingCertificate};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ray {index} has length {len}, expected lattice rank {rank}")]
    DimensionMismatch { index: usize, len: usize, rank: usize },
    #[error("ray {0} is zero")]
    ZeroRay(usize),
    #[error("cone is not full-dimensional: rays span a subspace of dimension {span} in rank {rank}")]
    NotFullDimensional { span: usize, rank: usize },
    #[error("cone contains a line")]
    NotPointed,
    #[error("face {0} is not covered by face {1}")]
    NotACover(FaceId, FaceId),
    #[error("no face has ray set {0:?}")]
    UnknownFace(Vec<usize>),
    #[error("no generic line found for a line shelling")]
    NoGenericLine,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

//! Bent six-vertex lattice models for the classical groups.
//!
//! Models are compiled from a family and a strict partition into a small
//! graph, enumerated exhaustively, and weighted with exact Laurent
//! polynomials over `Z[i]`.

pub mod asm;
pub mod character;
pub mod identities;
pub mod labels;
pub mod lattice;
pub mod model;
pub mod relations;
pub mod state;
pub mod tikz;
pub mod weights;

pub use bent_poly::{LaurentPoly, PolyError, Var};
pub use labels::{ColLabel, Family, RowLabel, StrictPartition};
pub use lattice::{Config, Lattice, NodeKind};
pub use model::{build_model, EdgeGeom, ModelSpec};
pub use state::{enumerate_states, partition_function, state_weight, Caps, IceState};
pub use weights::{RowWeights, WeightScheme};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IceError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("missing weight for {0}")]
    MissingWeight(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

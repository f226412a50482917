//! Exact combinatorics of Serre weights for three-dimensional mod `p`
//! representations of the absolute Galois group of `Q_p` whose restriction to
//! inertia is tame and irreducible.
//!
//! The crate covers tame fundamental characters and their Frobenius orbits,
//! irreducible representations of `GL_3(F_p)`, tame inertial types, rank-one
//! Breuil modules, the predicted weight set attached to a tame type, the
//! elimination and weight-cycling procedures built on top of it, and a small
//! amount of slope bookkeeping for ordinary parts.

pub mod arith;
pub mod breuil;
pub mod cycling;
pub mod elimination;
pub mod error;
pub mod induction;
pub mod predicted;
pub mod slopes;
pub mod tame_types;
pub mod verify;
pub mod weights;

pub use arith::{decompose, Decomposition, ExpClass, FrobOrbit, Prime};
pub use error::{Error, Result};
pub use tame_types::{OrderThreePerm, TameType};
pub use weights::{AlcovePosition, WeightClass};

//! Exact computations with finite-dimensional quiver representations:
//! Hom-spaces, endomorphism rings, endosocles and radical-composite
//! profiles of module families.

pub mod endostructure;
pub mod error;
pub mod family;
pub mod harness;
pub mod homalg;
pub mod linalg;
pub mod matsub;
pub mod quiver;
pub mod representation;
pub mod scalar;
pub mod tnilpotence;

pub use error::{Error, Result};

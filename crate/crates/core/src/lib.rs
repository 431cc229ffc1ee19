//! Exact computations with finite Verma modules over the annihilation
//! superalgebra `𝔤 = K(1,4)₊ ⊕ ℂC` of the conformal superalgebra `K'₄`.

pub mod characters;
pub mod conformal;
pub mod contact;
pub mod enveloping;
pub mod error;
pub mod grassmann;
pub mod homology;
pub mod linalg;
pub mod morphisms;
pub mod scalar;
pub mod verify;
pub mod verma;

pub use error::{Error, Result};
pub use scalar::Gq;

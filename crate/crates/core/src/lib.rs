//! Skew constacyclic codes over the product ring `R = F_q^l`.
//!
//! The crate builds `(Theta, Delta, a)`-cyclic codes from generator
//! polynomials in skew polynomial rings, maps them to `F_q` through Gray
//! maps given by invertible matrices, tests Euclidean and annihilator
//! dual-containment, and derives CSS quantum code parameters.

pub mod codes;
pub mod duality;
pub mod error;
pub mod gf;
pub mod gray;
pub mod linalg;
pub mod quantum;
pub mod ring;
pub mod skewpoly;

pub use codes::{
    Effort, FqCyclicCode, LinearCode, MinDistance, NestedDistance, Outside, RCode, RCodeSpec,
};
pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldAut, FieldSpec};
pub use gray::GrayMap;
pub use linalg::Matrix;
pub use quantum::{Css, DistanceKind, QuantumParams, SingletonClass};
pub use ring::{ProductAut, RingElement, RingSpec};
pub use skewpoly::{SkewPoly, SkewRing};

//! Quiver models for moduli of orthogonal and symplectic bundles on curves.
//!
//! The library builds the quiver attached to a decomposition of a bundle into
//! stable summands, doubles it, generates trace-along-cycle invariants for the
//! isometry group of the decomposition, and checks that restricted GL
//! invariants span the invariants of the smaller group on the antisymmetric
//! extension space. On top of that sit local model reports (Ext dimensions,
//! automorphism groups, orientation fibres, smoothness verdicts) and the
//! genus-one classification, where moduli are finite quotients of products of
//! the curve itself.

pub mod asym;
pub mod decomposition;
pub mod elliptic;
pub mod error;
pub mod fixtures;
pub mod groups;
pub mod invariants;
pub mod local_models;
pub mod matrix;
pub mod modp;
pub mod quiver;
pub mod scalar;
pub mod seeding;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;

//! Exact construction and certification of adapted pairs for truncated
//! maximal parabolic subalgebras of simple Lie algebras of types B, D, E6
//! and E7.
//!
//! The pipeline builds the root system, the Chevalley structure constants,
//! the parabolic data, the candidate sets `S`, `Γ_γ`, `T`, then checks every
//! hypothesis of the regularity and non-degeneracy criteria with exact
//! rational arithmetic and compares the two character bounds.

pub mod audit;
pub mod bounds;
pub mod cascade;
pub mod certificate;
pub mod chevalley;
pub mod construction;
mod error;
pub mod linalg;
pub mod parabolic;
pub mod rootsys;
pub mod scope;
pub mod verify;

pub use error::Error;
pub use rootsys::{Family, RootId, RootSystem};
pub use scope::CaseId;

pub type Result<T> = std::result::Result<T, Error>;

/// Small exact rationals used for root coordinates, weights and `h`.
pub type Q = num_rational::Rational64;

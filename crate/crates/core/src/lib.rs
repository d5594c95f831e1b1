//! Finite 2-categories and their tensor products.
//!
//! The Gray tensor product `A ⊗ B` is computed as the middle term of the
//! (bijective-on-objects-and-arrows, locally fully faithful) factorisation of
//! the comparison `K: A ⋆ B → A × B` from the funny tensor product to the
//! cartesian product. The [`theory`] module lifts the monoidal structure of
//! `⋆` and `×` through that factorisation and checks the resulting coherence
//! axioms as equalities of concrete 2-functors.

pub mod cli;
pub mod config;
pub mod error;
pub mod homs;
pub mod icon;
pub mod kernel;
pub mod ofs;
pub mod tensor;
pub mod theory;

pub use config::Limits;
pub use error::{Error, Result};

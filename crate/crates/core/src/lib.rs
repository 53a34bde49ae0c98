//! Finite monoids, groups and categories: Green's relations, Rees
//! coordinates, radical congruences, Mal'cev product membership, kernel
//! categories and consolidation.
//!
//! Products are written left to right throughout: `mul(x, y)` is `xy`, and for
//! transformations "first `x`, then `y`".

pub mod category;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod ggm;
pub mod greens;
pub mod groups;
pub mod lh;
pub mod monoid;
pub mod oracle;
pub mod pvar;
pub mod rees;
pub mod verify;
pub mod zoo;

pub use category::{CatMorphism, FiniteCategory};
pub use congruence::{CatCongruence, Congruence, MonoidMorphism};
pub use error::{Error, Result};
pub use greens::{greens, GreensData};
pub use groups::{FiniteGroup, Subgroup};
pub use monoid::{ElementId, FiniteMonoid};
pub use pvar::Pseudovariety;
pub use rees::{ReesElement, ReesRepresentation};

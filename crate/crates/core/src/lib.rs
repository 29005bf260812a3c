//! Crystal graphs, Kashiwara-Nakashima orthogonal tableaux, plactic monoids,
//! insertion, jeu de taquin and the spin extension for types B and D.

pub mod alphabet;
pub mod column;
pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod generalized;
pub mod jdt;
pub mod plactic;
pub mod schensted;
pub mod spin;
pub mod tableau;
pub mod verify;

pub use alphabet::{Kind, LieKind, Letter, Weight, Word};
pub use error::{Error, Result};
pub use exec::Exec;

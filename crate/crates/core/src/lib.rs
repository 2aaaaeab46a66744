//! Rigid modules and ICE-closed subcategories over path algebras of Dynkin
//! quivers.
//!
//! The crate builds every indecomposable representation of a Dynkin quiver
//! over a small prime field, computes Hom and Ext dimensions exactly, and on
//! top of that enumerates basic rigid modules, the subcategories `cok U`
//! they generate, and the torsion and wide projections between them.

pub mod counting;
pub mod error;
pub mod field;
pub mod indec;
pub mod indexset;
pub mod oracle;
pub mod par;
pub mod quiver;
pub mod rep;
pub mod rigid;
pub mod subcat;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Mat, PrimeField};
pub use indec::{IndecTable, ModuleClass};
pub use indexset::IndexSet;
pub use quiver::{DynkinType, Family, Quiver};
pub use rep::{Morphism, Representation};
pub use rigid::RigidModule;
pub use subcat::Subcat;

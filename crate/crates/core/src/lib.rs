//! Exact combinatorics for products of skew Schur functions with single-row
//! Schur functions.
//!
//! The crate is organised bottom-up:
//!
//! - [`shapes`]: partitions, skew shapes, strips, and the star composition.
//! - [`tableaux`]: fillings, validity, contents, and reading words.
//! - [`insertion`]: external, internal, and reverse row insertion.
//! - [`involution`]: downward and upward slides and the sign-reversing
//!   involution built from them.
//! - [`symfunc`]: Schur-basis expansions, the Hall inner product, and perp
//!   operators.
//! - [`rules`]: the Pieri, skew Pieri, and skew Littlewood–Richardson rules
//!   together with verification sweeps.

pub mod error;
pub mod insertion;
pub mod involution;
pub mod json;
pub mod oracle;
pub mod rules;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use insertion::{external_insert, internal_insert, reverse_insert, BumpRecord, Direction};
pub use shapes::{Cell, Partition, SkewShape, StripKind};
pub use symfunc::{SchurExpansion, SkewExpansion};
pub use tableaux::{Composition, Entry, Tableau, TableauKind, Word};

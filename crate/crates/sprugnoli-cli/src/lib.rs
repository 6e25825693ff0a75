//! Command-line front end for the sprugnoli crate: element construction
//! from expression flags, deterministic matrix/sequence/stripe rendering,
//! the two-branch polynomial recurrence, and the embedded fixture registry.

pub mod element;
pub mod fixtures;
pub mod output;
pub mod recurrence;

pub use element::{Element, ElementSpec, Family};
pub use fixtures::{provenance_table, registry, run_verify, Fixture};
pub use output::{matrix_text, sequence_text, stripes_text, Format};
pub use recurrence::{build_poly_recurrence, PolyRecurrence};

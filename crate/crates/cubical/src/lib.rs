//! Computational kernel and verification harness for finite cubic algebras,
//! MR-algebras, and filter algebras.
//!
//! The crate builds interval algebras over implication lattices, enveloping
//! Boolean algebras, the filter lattice with its Heyting-style relative
//! complements, the group and algebra of g-filters, and the derived
//! MR-algebra of Boolean filters — and exhaustively verifies every law each
//! construction is supposed to satisfy on desk-scale instances, against
//! independent brute-force oracles wherever a second route exists.

pub mod cubic;
pub mod error;
pub mod instances;
pub mod interval;
pub mod filter;
pub mod lattice;
pub mod report;
pub mod scan;

pub use cubic::{CubicAlgebra, CubicHom, Origin, Subalgebra};
pub use error::{Error, Result};
pub use interval::IntervalAlgebra;
pub use lattice::{BooleanAlgebra, Elem, ImplicationLattice};
pub use report::{LawReport, LawResult, LawStatus};
pub use scan::{CheckConfig, ExecMode};

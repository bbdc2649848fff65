//! Exact counts of support-tilting modules and antichains for
//! representation-finite hereditary algebras of Dynkin type.
//!
//! The pipeline runs bottom-up: [`root_datum`] builds the Cartan datum of an
//! oriented valued diagram, [`ar_orbits`] knits the indecomposables as
//! dimension vectors, [`hom_calculus`] decides Hom/Ext vanishing,
//! [`enumerator`] counts, and [`closed_forms`] supplies the numbers to check
//! against.

pub mod ar_orbits;
pub mod closed_forms;
pub mod enumerator;
pub mod error;
pub mod hom_calculus;
pub mod oeis_io;
pub mod root_datum;
pub mod verifier;
pub mod vertex_set;

pub use ar_orbits::{knit_category, Indec, ModCategory};
pub use closed_forms::ExactInt;
pub use enumerator::{count_tables, CountTable, IndecSet, Kind};
pub use error::{Error, Result};
pub use root_datum::{build_cartan, DynkinType, OrientationSpec, Series};
pub use verifier::{Check, Suite, SuiteOptions, VerificationReport};

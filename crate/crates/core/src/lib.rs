//! Enumeration of difference sets in finite groups by successive refinement
//! of difference sums along a chain of normal subgroups.
//!
//! Elements are 0-based internally with the identity at 0; the catalog file
//! formats and printed sets use 1-based indices.

pub mod automorphism;
pub mod catalog;
pub mod difference;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod params;
pub mod results;

pub use automorphism::{automorphism_group, Automorphism, AutomorphismGroup};
pub use catalog::{catalog_group, parse_group_file, CatalogId};
pub use difference::{
    is_difference_set, DifferenceSet, DifferenceSum, GroupRingVector, Parameters,
};
pub use enumerate::{difference_sets, Enumeration, Enumerator, SearchOptions, SizeResult};
pub use error::{Error, Result};
pub use group::{cyclic_group, Group};
pub use params::possible_sizes;
pub use results::{read_results, write_results, ResultsFile};

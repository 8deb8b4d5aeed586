//! Search engine for difference Ramsey numbers and Issai (generalized
//! Schur) numbers.
//!
//! Difference colorings of complete graphs — where an edge's color depends
//! only on the difference of its endpoints — admit a level-by-level
//! recursion over the vertex count: a coloring on `n + 1` vertices is a
//! coloring on `n` vertices plus a color choice for the new difference `n`.
//! Enumerating every clique-avoiding coloring level by level yields the
//! difference Ramsey numbers `D(k_1,...,k_r)`, each a lower-bound witness
//! for the classical Ramsey number `R(k_1,...,k_r)`. The same recursion
//! over integer colorings, with subset-sum admissibility in place of the
//! clique test, yields the Issai numbers `S(k_1,...,k_r)`.

pub mod checkpoint;
pub mod clique;
pub mod coloring;
mod error;
pub mod issai;
mod level;
pub mod oracle;
pub mod search;

pub use coloring::{
    CliqueTargets, CyclicColoring, DifferenceColoring, DifferenceSet, MAX_COLORS, MAX_ELEMENT,
    MAX_VERTICES,
};
pub use error::{Error, Result};
pub use issai::{
    extract_schur_tuple, find_mono_schur_tuple, find_schur_tuple_in_color, is_schur_tuple,
    issai_search, lemma2_bound, IntegerColoring, IssaiLevel, IssaiOutcome, SchurWitness,
};
pub use oracle::ExplicitGraph;
pub use search::{
    count_orbits, extend_level, initial_level, search, SearchLevel, SearchOptions, SearchOutcome,
    SearchStatus,
};

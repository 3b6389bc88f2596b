//! Exact enumerative combinatorics of Motzkin paths with marked humps and
//! of standard Young tableaux of hook shape with at most two rows plus a
//! first-column tail.
//!
//! A path word is a string over U (up), D (down), F (flat). The library
//! provides:
//!
//! * classification and enumeration of path words ([`path`]);
//! * hump and peak statistics and their counting triangles ([`humps`]);
//! * standard hook tableaux, their enumeration and counts ([`tableaux`]);
//! * explicit bijections between marked paths, prefixes, free paths, and
//!   tableaux, with inverses and step-by-step decompositions
//!   ([`bijections`]);
//! * closed-form counting formulas with exact big-integer arithmetic
//!   ([`formulas`]);
//! * truncated integer power series and Riordan-array triangle generation
//!   ([`series`]);
//! * uniform triangle construction by independent backends ([`tables`]) and
//!   exhaustive identity verification with counterexample reporting
//!   ([`verify`]).
//!
//! Everything is exact: counts are [`num_bigint::BigInt`], divisions are
//! checked for zero remainder, and enumeration sizes are capped explicitly
//! rather than silently truncated.

pub mod bijections;
pub mod error;
pub mod formulas;
pub mod humps;
pub mod path;
pub mod series;
pub mod tables;
pub mod tableaux;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use path::{classify, parse_path, PathClass, PathWord, Step, DEFAULT_ENUM_CAP};
pub use triangle::Triangle;

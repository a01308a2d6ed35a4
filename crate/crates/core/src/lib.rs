//! Exact combinatorics of dominant Shi-arrangement regions of types A and C.
//!
//! Dominant alcoves of the affine symmetric group are modelled through two
//! interchangeable encodings: sorted abacus diagrams (windows in base-level
//! form) and staircase Shi tableaux. On top of the conversions between them
//! the crate provides
//!
//! - minimality tests selecting the representative alcove of every dominant
//!   region of the `m`-Shi arrangement, in both encodings,
//! - exhaustive region enumeration with exact Fuss-Catalan counting,
//! - the indexed bijection pairing each type A region with `m*n + 1` type C
//!   regions through balanced abacuses, and its forgetful surjection,
//! - the rotation bijection between rectangular lattice paths and indexed
//!   Dyck paths, plus the row-sum correspondence back to region tableaux,
//! - a verification harness ([`verify`]) that replays all of the above
//!   exhaustively at small rank.
//!
//! All counting is exact; windows use checked machine integers and counts
//! use big integers.

pub mod affine;
pub mod bijection;
pub mod error;
pub mod minimality;
pub mod paths;
pub mod tableau;
pub mod verify;

pub use num_bigint::BigUint;

pub use affine::{rebase, rebase_shift, Abacus, BaseLevelEntry, LevelVector, ShiftedWindow, Window};
pub use bijection::{
    admissible_set, bj1_forward, bj1_inverse, phi, psi, psi_inverse, AdmissibleSet,
};
pub use error::{Error, Result};
pub use minimality::{
    catalan_a, catalan_c, catalan_general, enumerate_regions_a, enumerate_regions_a_with_limit,
    enumerate_regions_c, enumerate_regions_c_with_limit, is_m_minimal_abacus, is_m_minimal_level,
    is_m_minimal_type_c, CatalanParams, MinimalityReport, RegionsA, RegionsC, Violation,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use paths::{
    bj2_forward, bj2_inverse, enumerate_dyck_paths, enumerate_dyck_paths_with_limit,
    enumerate_lattice_paths, enumerate_lattice_paths_with_limit, DyckIter, DyckPath, LatticePath,
    PathIter,
};
pub use tableau::{AlcoveTableau, RegionTableau, TypeCTableau};

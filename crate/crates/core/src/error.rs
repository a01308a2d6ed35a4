use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing or transforming the
/// combinatorial objects in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    InvalidModulus,

    #[error("arithmetic overflow on window values")]
    Overflow,

    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("values {first} and {second} share the same residue")]
    DuplicateResidue { first: i64, second: i64 },

    #[error("base {base} is out of range 1..={n}")]
    BaseOutOfRange { base: i64, n: usize },

    #[error("bases must form a permutation of 1..={n}")]
    BasesNotPermutation { n: usize },

    #[error("entry values must be strictly increasing (violated at position {position})")]
    NotSorted { position: usize },

    #[error("levels must sum to zero, found {sum}")]
    NonzeroLevelSum { sum: i64 },

    #[error("balance is only defined for even length, found {len}")]
    OddLength { len: usize },

    #[error("abacus is not balanced")]
    Unbalanced,

    #[error("tableau row {row} must hold {expected} entries, found {found}")]
    BadRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("expected {expected} tableau rows, found {found}")]
    BadRowCount { expected: usize, found: usize },

    #[error("tableau entry at ({i},{j}) is negative")]
    NegativeEntry { i: usize, j: usize },

    #[error("tableau entry at ({i},{j}) must lie in 0..={m}")]
    EntryAboveM { i: usize, j: usize, m: i64 },

    #[error("alcove Shi condition fails at (i,l,j)=({i},{l},{j})")]
    AlcoveShiViolated { i: usize, l: usize, j: usize },

    #[error("region Shi condition fails at (i,l,j)=({i},{l},{j})")]
    RegionShiViolated { i: usize, l: usize, j: usize },

    #[error("tableau rank must be odd, found {rank}")]
    EvenRank { rank: usize },

    #[error("tableau is not self-conjugate")]
    NotSelfConjugate,

    #[error("input is not an m-minimal alcove for m={m}: {detail}")]
    NotMinimal { m: i64, detail: String },

    #[error("index {index} is out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("shift {k} is not in the admissible set")]
    ShiftNotAdmissible { k: i64 },

    #[error("shift {k} is out of range 0..={max}")]
    ShiftOutOfRange { k: i64, max: i64 },

    #[error("rotation index {t} is out of range 0..={max}")]
    RotationOutOfRange { t: usize, max: usize },

    #[error("step {value} at position {position} is out of range 0..={max}")]
    StepOutOfRange {
        position: usize,
        value: i64,
        max: i64,
    },

    #[error("steps must be weakly increasing (violated at position {position})")]
    StepsNotMonotone { position: usize },

    #[error("step {value} at position {position} exceeds the staircase bound {bound}")]
    NotDyck {
        position: usize,
        value: i64,
        bound: i64,
    },

    #[error("enumeration of {count} items exceeds the configured limit of {limit}")]
    ResourceGuard { count: String, limit: u64 },

    #[error("the product formula does not divide exactly")]
    NonIntegralCount,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

use thiserror::Error;

/// Which clause of the standard Kleshchev conditions a multipartition breaks.
///
/// Components are reported 1-based, matching the usual `γ^(a)` indexing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkViolation {
    #[error("SK1: component {component} is empty (multipartition is not sincere)")]
    NotSincere { component: usize },
    #[error("SK2: component {component} has {len} rows, more than the bound {bound}")]
    TooManyRows {
        component: usize,
        len: usize,
        bound: i64,
    },
    #[error("SK2: part {index} of component {component} is {part}, larger than the first part {next_first} of the next component")]
    PartTooLarge {
        component: usize,
        index: i64,
        part: usize,
        next_first: usize,
    },
    #[error("SK3: component {component} has exactly {len} rows and its last part {part} is not below the next first part {next_first}")]
    BoundaryNotStrict {
        component: usize,
        len: usize,
        part: usize,
        next_first: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("a multipartition needs at least one component")]
    EmptyMultipartition,
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("malformed cut vector {0:?}: need 0 = a_0 <= a_1 <= ... <= a_m")]
    BadCutVector(Vec<usize>),
    #[error("segment ({lo},{hi}) has lo > hi")]
    EmptySegment { lo: i64, hi: i64 },
    #[error("word is not standard: {0}")]
    NonStandardWord(String),
    #[error("segment sequence is not standard at position {0}")]
    NonStandardSequence(usize),
    #[error("charge must be non-empty and weakly decreasing: {0:?}")]
    NotACharge(Vec<i64>),
    #[error("multipartition has {components} components but the charge has {charge} entries")]
    LengthMismatch { components: usize, charge: usize },
    #[error("not a standard Kleshchev multipartition: {0}")]
    NotStandardKleshchev(#[from] SkViolation),
    #[error("empty multisegment")]
    EmptyMultisegment,
    #[error("segment of length {len} exceeds n = {n}")]
    SegmentTooLong { len: usize, n: usize },
    #[error("component {component} has {rows} rows, more than n = {n}")]
    TooManyRows {
        component: usize,
        rows: usize,
        n: usize,
    },
    #[error("column {column} has {len} boxes, more than n = {n}")]
    ColumnTooLong { column: usize, len: usize, n: usize },
    #[error("Drinfeld roots are not dominant at index {0}")]
    NotDominant(usize),
    #[error("Drinfeld roots are not of integral type (odd exponent {0})")]
    NotIntegral(i64),
    #[error("Drinfeld roots must have n >= 1 and exactly n root lists")]
    BadRootShape,
    #[error("empty skew shape")]
    EmptySkewShape,
    #[error("rank {r} exceeds the desk-scale bound {max}")]
    RankTooLarge { r: usize, max: usize },
    #[error("the span of the orbit is not stable under T_{generator}")]
    ModuleNotClosed { generator: usize },
    #[error("q0 = {0} is not allowed: need |q0| not in {{0, 1}}")]
    BadQ(String),
    #[error("could not parse {what}: {input}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The isotype has no invariants in the relevant induced module: the row
    /// excess m = p - b - 1 is negative, so no value is defined. This is a
    /// distinct situation from a value that happens to equal zero.
    #[error("no invariants: b = {b} exceeds p - 1 = {}", p - 1)]
    NoInvariants { b: usize, p: usize },
    /// A hook shape [n-b, 1^b] needs 0 <= b <= n-1.
    #[error("invalid hook shape: n = {n}, b = {b}")]
    InvalidShape { n: usize, b: usize },
    /// Block sizes must be positive and the structure nonempty.
    #[error("invalid block sizes")]
    InvalidBlockSizes,
    /// Cycle type parts must be positive.
    #[error("invalid cycle type")]
    InvalidCycleType,
    /// A cycle type was paired with a group of a different degree.
    #[error("cycle type sums to {total}, expected {expected}")]
    WrongTotal { total: usize, expected: usize },
    /// A support set must be a nonempty subset of the block indices.
    #[error("empty support set")]
    EmptySupport,
    /// Support entries are block indices below p and must not repeat.
    #[error("support index {index} invalid for {p} blocks")]
    BadSupportIndex { index: usize, p: usize },
    /// The product-side closed form is stated for supports of at least two
    /// blocks; singleton supports need the permissive entry point.
    #[error("support has a single block; use the permissive evaluation")]
    SingletonSupport,
    /// Permutation images must be a bijection on 0..n.
    #[error("invalid permutation images")]
    InvalidPermutation,
    /// Positions fed to a cycle or polynomial exceeded the ambient degree.
    #[error("position {position} out of range for degree {degree}")]
    PositionOutOfRange { position: usize, degree: usize },
    /// A cycle or variable list repeated a position.
    #[error("repeated position {position}")]
    RepeatedPosition { position: usize },
    /// Two objects that must share a degree or dimension do not.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    /// The Gram matrix of the invariant basis failed to invert.
    #[error("singular Gram matrix")]
    SingularGram,
    /// A linear system had no solution or a singular coefficient matrix.
    #[error("singular matrix")]
    SingularMatrix,
    /// A polynomial could not be written in the given basis.
    #[error("polynomial does not lie in the span of the basis")]
    NotInSpan,
    /// Degree profiles need strictly decreasing degrees and positive counts.
    #[error("invalid degree profile")]
    InvalidDegreeProfile,
    /// The eigenvalue sum is defined for k >= 1.
    #[error("power k must be at least 1")]
    ZeroPower,
    /// Textual input (rational, cycle notation, profile) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

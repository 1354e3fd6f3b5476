use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NsgError {
    /// The composition violates the semigroup inequalities.
    #[error("composition {0} is not a numerical-semigroup composition")]
    InvalidComposition(String),

    /// The complement of the given gap set is not closed under addition.
    #[error("gap set is not the gap set of a numerical semigroup")]
    NotASemigroup,

    /// The operation needs at least one part (multiplicity at least 2).
    #[error("operation is undefined for the empty composition")]
    EmptyComposition,

    /// Asked for the predecessor of the tree root.
    #[error("the empty composition is the tree root and has no predecessor")]
    Root,

    /// Descendant bounds need a part of size at least 2.
    #[error("descendant bounds require a maximal part of size at least 2")]
    MaxTooSmall,

    /// A rational function with vanishing constant denominator term has no
    /// power-series expansion.
    #[error("denominator has zero constant term; not expandable as a power series")]
    NotExpandable,

    /// The root bracket `[0, 1]` shows no sign change.
    #[error("no sign change on (0,1): p(0) = {p0}, p(1) = {p1}")]
    NoSignChange { p0: f64, p1: f64 },

    /// A lane partition value at or above 1 makes the cylinder sum diverge.
    #[error("lane series diverges: L_{n}(q) = {value} >= 1")]
    Divergent { n: usize, value: f64 },

    /// Sampler probabilities are only defined for parts in {1,2,3}.
    #[error("part {0} outside {{1,2,3}}")]
    PartOutOfRange(u32),

    /// The constant estimate needs enough coefficients to anchor its tail.
    #[error("need coefficients up to genus at least {need}, got {got}")]
    InsufficientData { need: u32, got: u32 },
}

pub type Result<T> = std::result::Result<T, NsgError>;

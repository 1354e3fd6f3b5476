//! Numerical semigroups through the lens of their Kunz compositions.
//!
//! A numerical semigroup of multiplicity `m` is encoded by the composition
//! `x_1 + .. + x_{m-1}` of its genus counting gaps per residue class. This
//! crate provides:
//!
//! - the bijection between gap sets and compositions, validity checking,
//!   parameter extraction and the closure algorithm ([`kunz`]);
//! - the semigroup tree with predecessor/children, genus censuses and
//!   descendant bounds with their combinatorial over-tree ([`tree`]);
//! - exact truncated power series and the relevant closed-form generating
//!   functions ([`series`], [`poly`], [`roots`]);
//! - a transfer-matrix engine for the constrained spin models on paths and
//!   lanes ([`transfer`]);
//! - exact counts of maximum-3 compositions ending in a maximal part, the
//!   `tau(k)` constants and the bracket for the growth constant `C` in
//!   `n(g) ~ C omega^g` ([`tildec`]);
//! - a coin-toss sampler of maximum-3 compositions with its exact law
//!   ([`sampler`]).
//!
//! Exact data lives in `BigInt`/`BigRational`; numeric evaluation is
//! generic over [`scalar::Scalar`], instantiated at `f64` or the 106-bit
//! [`scalar::DoubleDouble`].

pub mod error;
pub mod kunz;
pub mod poly;
pub mod roots;
pub mod sampler;
pub mod scalar;
pub mod series;
pub mod tildec;
pub mod transfer;
pub mod tree;

pub use error::{NsgError, Result};
pub use kunz::{
    closure_from_generators, Composition, GenPart, GeneralizedComposition, NumericalSemigroup,
};
pub use sampler::{exact_probability, mu_expectation, sample, Sampler, SamplerConfig, Target};
pub use tildec::{
    brute_force_tilde_c, compute_tilde_c, estimate_c, max3_census, nu_count, tau, CEstimate,
    TildeCTable,
};
pub use transfer::{builtin_model, builtin_models, ModelName, TransferModel};
pub use tree::{children, count_by_genus, descendant_bounds, predecessor, ChildSet, OverTreeLabel};

/// Integer polynomials in `q`.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;
/// Exact rational polynomials in `q`.
pub type RatPoly = poly::Poly<num_rational::BigRational>;
/// Exact rational truncated power series.
pub type RatSeries = series::TruncatedSeries<num_rational::BigRational>;
/// 106-bit double-double scalar.
pub type DD = scalar::DoubleDouble;

/// Inverse golden ratio as `f64`; the evaluation point for every
/// asymptotic constant in the crate.
pub fn golden_ratio_inv() -> f64 {
    scalar::Scalar::golden_ratio_inv()
}

//! Exact computation of degree-2 stable-pairs residue invariants of a
//! rank-2 bundle over a genus-g curve, by equivariant localization over
//! Quot-scheme fixed loci.
//!
//! The crate is organized around the pipeline:
//!
//! - [`scalars`]: exact rationals, t-Laurent polynomials, q-series and
//!   q-rational functions;
//! - [`cohring`]: the truncated ring of localization integrands;
//! - [`integrals`]: the closed-form virtual intersection pairing;
//! - [`oracle`]: a brute-force exterior-algebra validator for the pairing;
//! - [`localization`]: fixed-component enumeration, Euler classes of the
//!   virtual normal bundle, and the stable-pairs invariants themselves;
//! - [`partitions`]: closed-form partition functions and the GW/PT
//!   correspondence checks.
//!
//! All arithmetic is exact; results are Laurent polynomials in the
//! equivariant parameter `t` and exact series in the box-counting
//! variable `q`.
//!
//! With the default `parallel` feature, sums over independent fixed
//! components and validation sweeps fan out across threads via rayon;
//! disabling the feature falls back to sequential evaluation with
//! identical results.

pub mod cohring;
pub mod exec;
pub mod integrals;
pub mod localization;
pub mod oracle;
pub mod partitions;
pub mod scalars;

/// Errors surfaced by the fallible parts of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not invertible in localized ring")]
    NotInvertible,
    #[error("exponential of non-nilpotent class")]
    NonNilpotentExponential,
    #[error("component has negative expected dimension")]
    NegativeExpectedDimension,
    #[error("fixed-direction bundle has no equivariant Euler class inverse")]
    ZeroWeight,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

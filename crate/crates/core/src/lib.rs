//! Face numbers of relative simplicial complexes and relative multicomplexes.
//!
//! The crate decides which vectors arise as face vectors (or h-vectors) of
//! relative complexes `Ψ = (Δ, Γ)`, builds explicit witnesses for accepted
//! inputs, checks and searches shelling orders, and cross-checks everything
//! against brute-force enumeration on small ground sets.

pub mod cli;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod face;
pub mod fixtures;
pub mod json;
pub mod oracle;
pub mod realizability;
pub mod shadow;
pub mod shelling;
pub mod vector;

pub use complex::{
    compressed_complex, compressed_multicomplex, Multicomplex, RelativeComplex, SimplicialComplex,
};
pub use error::{Error, Result};
pub use face::{Face, MultiFace};
pub use realizability::{CertificatePair, Direction, Verdict};
pub use shadow::{
    binomial_rep, lower_shadow, macaulay_shadow, upper_shadow, BinomialRep, ShadowKind,
};
pub use vector::{f_to_h, h_to_f, FVector, HVector};

//! Exact computer algebra for Baxter Q-function hierarchies of
//! `U_q(gl(M|N))` quantum spin chains.
//!
//! The library constructs the `2^{M+N}` Baxter Q-functions from free
//! single-index polynomials (Wronskian determinants over the singles and
//! the boson-fermion pair functions) and verifies, by exact polynomial
//! identity checking, the functional relations they satisfy: QQ relations,
//! T-systems, Bäcklund transformations, Baxter equations, determinant
//! lemmas and character limits. All arithmetic is over arbitrary-precision
//! rationals; the spectral shift `x -> x q^{1/2}` is realized exactly by a
//! rational base `t = q^{1/2}`.

pub mod diagrams;
pub mod matrix;
pub mod poly;
pub mod prng;
pub mod qhierarchy;
pub mod ratfn;
pub mod scalar;
pub mod subset;
pub mod tfun;
pub mod twist;
pub mod verify;

pub use diagrams::{GradedTuple, Partition, SkewDiagram};
pub use poly::LaurentPoly;
pub use qhierarchy::{Convention, GenConfig, QHierarchy};
pub use ratfn::RationalFn;
pub use scalar::Scalar;
pub use subset::Subset;
pub use twist::TwistData;
pub use verify::VerifyReport;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("twist genericity violated: {0}")]
    Genericity(String),
    #[error("resonance: vanishing denominator solving pair ({b},{f}) at coefficient {k}")]
    Resonance { b: u8, f: u8, k: usize },
    #[error("evaluation at a pole of the denominator")]
    PoleAtSample,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("partition {0} violates the ({1},{2})-hook")]
    HookViolation(String, usize, usize),
    #[error("regime violation: {0}")]
    Regime(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact computer algebra for the q-deformed Heisenberg algebra `H(q)`.
//!
//! `H(q)` is generated by `A` and `B` subject to `AB - qBA = 1`. Every element
//! has a unique normal form `sum_j p_j(B) A^j`. On top of normal-form
//! arithmetic this crate builds the Burchnall-Chaundy eliminant of two
//! elements, extracts and verifies the annihilating curves of commuting
//! pairs, and provides the spectral tools for the action of `H(q)` on formal
//! Laurent series (`A` acts as the q-derivative, `B` as multiplication by `t`).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals, or
//! Laurent polynomials in a symbolic `q` with rational coefficients.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod eliminant;
mod error;
pub mod laurent;
pub mod linalg;
pub mod poly;
mod roots;
pub mod scalars;
pub mod spectral;

pub use algebra::AlgebraElement;
pub use eliminant::{CurveSet, VerificationReport};
pub use error::Error;
pub use laurent::{LaurentWindow, LpdIndexSet, PairIndex};
pub use poly::{BiPoly, TriMatrix, TriPoly, UniPoly};
pub use scalars::{QParam, Rational, Scalar};
pub use spectral::{BandProfile, FiniteSubmatrix, KernelDimension};

pub type Result<T, E = Error> = core::result::Result<T, E>;

//! Exact computation in the centralizer `Z₁(n)` of the symmetric group algebra
//! `ℚ[S_n]` with respect to `S_{n-1}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, marked partitions and (marked) class sizes.
//! - [`tableaux`]: standard Young tableaux, contents, dimensions, content polynomials.
//! - [`characters`]: irreducible characters of `S_n` (Murnaghan–Nakayama).
//! - [`genchar`]: generalized characters `γ^{μ,j}_{λ,i}`, the closed-form rows,
//!   character-sum identities and connection coefficients of `Z₁(n)`.
//! - [`oracle`]: a brute-force sparse group algebra used as ground truth.
//! - [`series`]: truncated power series with exact coefficients.
//! - [`starcount`]: counting factorizations into star transpositions `(j, n)`.
//!
//! Everything that can be exact is exact. The group algebra and the series
//! engine are generic over a [`Scalar`]; the aliases below fix the exact
//! instantiations used throughout.

pub mod characters;
pub mod error;
pub mod genchar;
pub mod oracle;
pub mod partitions;
pub mod scalar;
pub mod series;
pub mod starcount;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{MarkedPartition, Partition};
pub use scalar::{FromRational, Scalar};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Arbitrary precision signed integers.
pub type Integer = num_bigint::BigInt;
/// Arbitrary precision unsigned integers.
pub type Natural = num_bigint::BigUint;

/// Group algebra element with exact rational coefficients.
pub type QElement = oracle::GroupAlgebraElement<Rational>;
/// Group algebra element with integer coefficients (enough for products of class sums).
pub type IntElement = oracle::GroupAlgebraElement<Integer>;
/// Group algebra element with double precision coefficients.
pub type F64Element = oracle::GroupAlgebraElement<f64>;

/// Truncated series with exact rational coefficients.
pub type QSeries = series::TruncatedSeries<Rational>;
/// Truncated series with double precision coefficients.
pub type F64Series = series::TruncatedSeries<f64>;

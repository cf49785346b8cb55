//! A laboratory for permutation polynomials and complete mappings of small
//! finite fields.
//!
//! The library builds concrete fields F_{p^k} and their quadratic
//! extensions, and provides:
//!
//! - brute-force bijectivity oracles for polynomials on F_{q^2}, bivariate
//!   maps on F_q x F_q, and rational maps on mu_{q+1} and the projective
//!   line;
//! - the classical permutation criteria (Hermite's criterion, the
//!   Lucas/Dickson multinomial test, monomial and depressed-cubic rules);
//! - the reduction machinery that turns "f = X^r B(X^{q-1}) permutes
//!   F_{q^2}" into a question about a low-degree rational map on mu_{q+1};
//! - executable coefficient tests for a family of classification
//!   statements about aX^{3q} + bX^{2q+1} + cX^{q+2} + dX^3 and the
//!   bivariate cubic maps it reduces to, each cross-checkable against
//!   the brute-force oracles.

// congruences like q % 3 == 1 stay in modular notation
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod combinat;
pub mod gf;
pub mod mureduce;
pub mod permcheck;
pub mod pgl2;
pub mod poly;
pub mod sampling;
pub mod theorems;

pub use gf::{Fe, FieldCtx, FieldSpec, GfError, QuadExtCtx};
pub use poly::Poly;

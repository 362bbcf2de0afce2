//! Exact computations with cosymplectic Lie algebras.
//!
//! Everything here works over ℚ, or over polynomials in named parameters
//! when a structure comes from a family. No floating point anywhere.

pub mod catalog;
pub mod cosymplectic;
pub mod error;
pub mod exterior;
pub mod extensions;
pub mod format;
pub mod lie;
pub mod properties;
pub mod sampling;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{Field, Monomial, Poly, RatFunc, Rational, Scalar};

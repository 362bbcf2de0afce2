use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// An exact field the dense linear-algebra routines can run over.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;

    /// Embeds an exact scalar, or `None` when it does not live in this field.
    fn from_scalar(s: &Scalar) -> Option<Self>;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        s.as_rational().cloned()
    }
}

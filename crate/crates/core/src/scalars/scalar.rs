use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{Poly, Rational};
use crate::error::Result;

/// An exact scalar: a rational number or a polynomial in named parameters.
///
/// A polynomial that happens to be constant is always stored as `Rat`, so
/// equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Poly(Poly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    pub fn var(name: &str) -> Self {
        Scalar::Poly(Poly::var(name))
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.constant_value() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Poly(p),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Poly::parse(text).map(Scalar::from_poly)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Poly(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Poly(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn to_poly(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::constant(r.clone()),
            Scalar::Poly(p) => p.clone(),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        match self {
            Scalar::Rat(_) => BTreeSet::new(),
            Scalar::Poly(p) => p.variables(),
        }
    }

    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Poly(p) => p.eval(assignment),
        }
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Poly(p) => Scalar::from_poly(p.substitute(assignment)),
        }
    }

    /// Exact quotient, `None` when `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Scalar) -> Option<Scalar> {
        match (self, divisor) {
            (_, d) if d.is_zero() => None,
            (Scalar::Rat(a), Scalar::Rat(b)) => Some(Scalar::Rat(a / b)),
            (Scalar::Poly(a), Scalar::Rat(b)) => Some(Scalar::Poly(a.scale(&b.recip()))),
            (a, Scalar::Poly(b)) => a.to_poly().div_exact(b).map(Scalar::from_poly),
        }
    }

    pub fn scale(&self, k: &Rational) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * k),
            Scalar::Poly(p) => Scalar::from_poly(p.scale(k)),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<&Rational> for Scalar {
    fn from(r: &Rational) -> Self {
        Scalar::Rat(r.clone())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (a, b) => Scalar::from_poly(a.to_poly().add(&b.to_poly())),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (a, b) => Scalar::from_poly(a.to_poly().sub(&b.to_poly())),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Poly(p)) | (Scalar::Poly(p), Scalar::Rat(a)) => {
                Scalar::from_poly(p.scale(a))
            }
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::from_poly(a.mul(b)),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_polynomials_collapse() {
        let a = Scalar::var("a");
        let diff = &a - &a;
        assert_eq!(diff, Scalar::zero());
        assert!(diff.is_rational());
        assert_eq!(Scalar::parse("2*x-x-x+3").unwrap(), Scalar::int(3));
    }

    #[test]
    fn exact_division_of_scalars() {
        let p = Scalar::parse("a^2-1").unwrap();
        let q = Scalar::parse("a+1").unwrap();
        assert_eq!(p.div_exact(&q).unwrap(), Scalar::parse("a-1").unwrap());
        assert_eq!(Scalar::int(3).div_exact(&Scalar::int(6)).unwrap(), Scalar::frac(1, 2));
        assert!(p.div_exact(&Scalar::zero()).is_none());
    }
}

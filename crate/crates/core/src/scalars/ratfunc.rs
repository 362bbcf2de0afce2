//! Univariate rational functions over ℚ, kept in lowest terms with a monic
//! denominator. Used when a structure carries one symbolic parameter and a
//! computation needs to divide by it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Monomial, Poly, Rational, Scalar};

/// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    fn scale(&self, k: &Rational) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead().unwrap().clone();
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (k, dc) in d.0.iter().enumerate() {
                rem[shift + k] -= &c * dc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.lead().cloned() {
            Some(l) => a.scale(&l.recip()),
            None => a,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn to_poly(&self, var: &str) -> Poly {
        Poly::from_terms(self.0.iter().enumerate().map(|(i, c)| {
            (Monomial::power(var, i as u32), c.clone())
        }))
    }
}

/// `num / den` in one named variable.
#[derive(Clone, Debug)]
pub struct RatFunc {
    var: Option<String>,
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn constant(c: Rational) -> Self {
        RatFunc {
            var: None,
            num: UniPoly::constant(c),
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn var(name: &str) -> Self {
        RatFunc {
            var: Some(name.to_string()),
            num: UniPoly::new(vec![Rational::zero(), Rational::one()]),
            den: UniPoly::constant(Rational::one()),
        }
    }

    fn new(var: Option<String>, num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = den.lead().unwrap().recip();
        let num = num.scale(&l);
        let den = den.scale(&l);
        let var = if num.degree().unwrap_or(0) == 0 && den.degree() == Some(0) {
            None
        } else {
            var
        };
        RatFunc { var, num, den }
    }

    fn join(a: &Option<String>, b: &Option<String>) -> Option<String> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing rational functions in different variables");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn variable(&self) -> Option<&str> {
        self.var.as_deref()
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.var.is_none() {
            Some(self.num.0.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.num == o.num && self.den == o.den && self.var == o.var
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        let var = RatFunc::join(&self.var, &o.var);
        RatFunc::new(
            var,
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            var: self.var,
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        let var = RatFunc::join(&self.var, &o.var);
        RatFunc::new(var, self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        assert!(!o.num.is_zero(), "division by zero rational function");
        let var = RatFunc::join(&self.var, &o.var);
        RatFunc::new(var, self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var.as_deref().unwrap_or("x");
        let num = self.num.to_poly(var);
        if self.den.degree() == Some(0) {
            return write!(f, "{num}");
        }
        let den = self.den.to_poly(var);
        let wrap = |p: &crate::scalars::Poly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

impl Field for RatFunc {
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Rat(r) => Some(RatFunc::constant(r.clone())),
            Scalar::Poly(p) => {
                let vars = p.variables();
                if vars.len() != 1 {
                    return None;
                }
                let var = vars.into_iter().next().unwrap();
                let deg = p.degree_in(&var) as usize;
                let mut coeffs = vec![Rational::zero(); deg + 1];
                for (m, c) in p.terms() {
                    coeffs[m.exponent(&var) as usize] = c.clone();
                }
                Some(RatFunc::new(
                    Some(var),
                    UniPoly::new(coeffs),
                    UniPoly::constant(Rational::one()),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn cancellation_is_exact() {
        let l = RatFunc::var("lam");
        let one = RatFunc::one();
        let f = (l.clone() * l.clone() - one.clone()) / (l.clone() - one.clone());
        assert_eq!(f, l.clone() + one.clone());
        let g = one.clone() / (l.clone() * l.clone());
        assert_eq!(g.to_string(), "1/lam^2");
        assert_eq!((g.clone() * l.clone() * l.clone()), one);
        assert_eq!(g.eval(&q(2)), Some(Rational::new(1.into(), 4.into())));
        assert_eq!(g.eval(&q(0)), None);
    }

    #[test]
    fn gcd_is_monic() {
        let a = UniPoly::new(vec![q(-2), q(0), q(2)]); // 2x^2 - 2
        let b = UniPoly::new(vec![q(3), q(3)]); // 3x + 3
        assert_eq!(a.gcd(&b), UniPoly::new(vec![q(1), q(1)]));
    }
}

//! Alternating 1-, 2- and 3-forms, the Chevalley–Eilenberg differential in
//! low degree, and the top coefficient of `α ∧ ωⁿ`.
//!
//! Sign convention: `dα(x,y) = −α([x,y])` and
//! `dω(x,y,z) = −(ω([x,y],z) + ω([y,z],x) + ω([z,x],y))`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{format_combination, zero_vector, LieAlgebra, LinearMap, Vector};
use crate::scalars::{linalg, Rational, Scalar};

fn monomial_name(indices: &[usize]) -> String {
    let sep = if indices.iter().any(|&i| i >= 9) { "," } else { "" };
    let idx: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("e^{}", idx.join(sep))
}

fn mismatch(expected: usize, found: usize) -> Error {
    Error::DimensionMismatch { expected, found }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    coeffs: Vector,
}

impl OneForm {
    pub fn new(coeffs: Vector) -> Self {
        OneForm { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        OneForm::new(zero_vector(n))
    }

    /// The dual basis element `e^i` (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut f = OneForm::zero(n);
        f.coeffs[i] = Scalar::one();
        f
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        self.coeffs[i] = c;
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &OneForm) -> OneForm {
        OneForm::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &Scalar) -> OneForm {
        OneForm::new(self.coeffs.iter().map(|a| k * a).collect())
    }

    /// `M*α = α ∘ M`.
    pub fn pullback(&self, m: &LinearMap) -> OneForm {
        OneForm::new((0..m.cols()).map(|c| self.eval(m.column(c))).collect())
    }

    /// `α ∘ φ` for an endomorphism; same as the pullback.
    pub fn compose(&self, phi: &LinearMap) -> OneForm {
        self.pullback(phi)
    }

    pub fn wedge(&self, o: &OneForm) -> TwoForm {
        let n = self.dim();
        let mut w = TwoForm::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let c = &(&self.coeffs[i] * &o.coeffs[j]) - &(&self.coeffs[j] * &o.coeffs[i]);
                w.set(i, j, c);
            }
        }
        w
    }

    /// Extends by zeros to dimension `n`.
    pub fn extend(&self, n: usize) -> OneForm {
        let mut c = self.coeffs.clone();
        c.resize(n, Scalar::zero());
        OneForm::new(c)
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> OneForm {
        OneForm::new(self.coeffs.iter().map(|c| c.substitute(assignment)).collect())
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.coeffs.iter().flat_map(Scalar::variables).collect()
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_combination(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c, monomial_name(&[i]))),
        );
        f.write_str(&s)
    }
}

/// A 2-form, stored on `e^{ij}` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl TwoForm {
    pub fn zero(dim: usize) -> Self {
        TwoForm {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// `e^{ij}` (0-based).
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut w = TwoForm::zero(dim);
        w.set(i, j, Scalar::one());
        w
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets the coefficient of `e^{ij}`; `i > j` stores the negation.
    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        assert!(i != j, "e^{{ii}} is zero");
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    /// `ω(e_i, e_j)`.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => {
                self.coeffs.get(&(j, i)).map(|c| -c).unwrap_or_default()
            }
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| c * &(&(&x[i] * &y[j]) - &(&x[j] * &y[i])))
            .sum()
    }

    /// `ι_x ω = ω(x, ·)`.
    pub fn interior(&self, x: &[Scalar]) -> OneForm {
        let mut out = zero_vector(self.dim);
        for (&(i, j), c) in &self.coeffs {
            out[j] = &out[j] + &(c * &x[i]);
            out[i] = &out[i] - &(c * &x[j]);
        }
        OneForm::new(out)
    }

    /// Antisymmetric matrix `W[i][j] = ω(e_i, e_j)`.
    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.coeff(i, j)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &TwoForm) -> TwoForm {
        let mut w = self.clone();
        for (&(i, j), c) in &o.coeffs {
            let cur = w.coeff(i, j);
            w.set(i, j, &cur + c);
        }
        w
    }

    pub fn sub(&self, o: &TwoForm) -> TwoForm {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, k: &Scalar) -> TwoForm {
        let mut w = TwoForm::zero(self.dim);
        for (&(i, j), c) in &self.coeffs {
            w.set(i, j, k * c);
        }
        w
    }

    /// `M*ω (x, y) = ω(Mx, My)`.
    pub fn pullback(&self, m: &LinearMap) -> TwoForm {
        let n = m.cols();
        let mut w = TwoForm::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                w.set(i, j, self.eval(m.column(i), m.column(j)));
            }
        }
        w
    }

    /// `ω_φ(x, y) = ω(φx, y) + ω(x, φy)`.
    pub fn twisted(&self, phi: &LinearMap) -> TwoForm {
        let n = self.dim;
        let mut w = TwoForm::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let e = |k| crate::lie::basis_vector(n, k);
                let c = &self.eval(phi.column(i), &e(j)) + &self.eval(&e(i), phi.column(j));
                w.set(i, j, c);
            }
        }
        w
    }

    /// Kernel `{x : ω(x, ·) = 0}` for rational forms.
    pub fn kernel(&self) -> Result<Vec<Vec<Rational>>> {
        let m = linalg::rational_matrix(&self.matrix())
            .ok_or_else(|| Error::ParametricUnsupported(crate::lie::join_names(&self.variables())))?;
        Ok(linalg::nullspace(&m, self.dim))
    }

    /// Same form viewed in dimension `n ≥ dim`.
    pub fn extend(&self, n: usize) -> TwoForm {
        TwoForm {
            dim: n,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> TwoForm {
        let mut w = TwoForm::zero(self.dim);
        for (&(i, j), c) in &self.coeffs {
            w.set(i, j, c.substitute(assignment));
        }
        w
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.coeffs.values().flat_map(Scalar::variables).collect()
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_combination(
            self.coeffs
                .iter()
                .map(|(&(i, j), c)| (c, monomial_name(&[i, j]))),
        );
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    dim: usize,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl ThreeForm {
    pub fn zero(dim: usize) -> Self {
        ThreeForm {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e^{ijk}` for `i < j < k`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.coeffs.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.coeffs.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_combination(
            self.coeffs
                .iter()
                .map(|(&(i, j, k), c)| (c, monomial_name(&[i, j, k]))),
        );
        f.write_str(&s)
    }
}

pub fn d1(l: &LieAlgebra, alpha: &OneForm) -> Result<TwoForm> {
    if alpha.dim() != l.dim() {
        return Err(mismatch(l.dim(), alpha.dim()));
    }
    let mut w = TwoForm::zero(l.dim());
    for (i, j, v) in l.brackets() {
        w.set(i, j, -alpha.eval(v));
    }
    Ok(w)
}

pub fn d2(l: &LieAlgebra, omega: &TwoForm) -> Result<ThreeForm> {
    let n = l.dim();
    if omega.dim() != n {
        return Err(mismatch(n, omega.dim()));
    }
    let e = |k| crate::lie::basis_vector(n, k);
    let mut out = ThreeForm::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = &(&omega.eval(&l.basis_bracket(i, j), &e(k))
                    + &omega.eval(&l.basis_bracket(j, k), &e(i)))
                    + &omega.eval(&l.basis_bracket(k, i), &e(j));
                if !s.is_zero() {
                    out.coeffs.insert((i, j, k), -s);
                }
            }
        }
    }
    Ok(out)
}

pub fn is_1cocycle(l: &LieAlgebra, alpha: &OneForm) -> Result<bool> {
    Ok(d1(l, alpha)?.is_zero())
}

pub fn is_2cocycle(l: &LieAlgebra, omega: &TwoForm) -> Result<bool> {
    Ok(d2(l, omega)?.is_zero())
}

/// Sparse alternating multi-form: sorted index tuple → coefficient.
type Multi = BTreeMap<Vec<usize>, Scalar>;

fn wedge_multi(a: &Multi, b: &Multi) -> Multi {
    let mut out = Multi::new();
    for (ia, ca) in a {
        for (ib, cb) in b {
            if ia.iter().any(|x| ib.contains(x)) {
                continue;
            }
            // sign of the shuffle that sorts ia ++ ib
            let inversions: usize = ia
                .iter()
                .map(|x| ib.iter().filter(|y| *y < x).count())
                .sum();
            let mut idx: Vec<usize> = ia.iter().chain(ib).copied().collect();
            idx.sort_unstable();
            let mut c = ca * cb;
            if inversions % 2 == 1 {
                c = -c;
            }
            let slot = out.entry(idx).or_insert_with(Scalar::zero);
            *slot = &*slot + &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `e^{1…2n+1}` in `α ∧ ωⁿ`, by expanding the wedge product.
pub fn volume_coeff(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Scalar> {
    let dim = l.dim();
    if dim % 2 == 0 {
        return Err(Error::EvenDimension(dim));
    }
    if alpha.dim() != dim {
        return Err(mismatch(dim, alpha.dim()));
    }
    if omega.dim() != dim {
        return Err(mismatch(dim, omega.dim()));
    }
    Ok(top_coefficient(alpha, omega, dim / 2))
}

/// Coefficient of the top monomial in `ωⁿ` (dimension `2n`), for the
/// symplectic nondegeneracy check.
pub fn symplectic_volume(omega: &TwoForm) -> Result<Scalar> {
    let dim = omega.dim();
    if dim % 2 == 1 {
        return Err(Error::DimensionMismatch {
            expected: dim + 1,
            found: dim,
        });
    }
    let w: Multi = omega.terms().map(|(i, j, c)| (vec![i, j], c.clone())).collect();
    let mut acc: Multi = [(vec![], Scalar::one())].into_iter().collect();
    for _ in 0..dim / 2 {
        acc = wedge_multi(&acc, &w);
    }
    Ok(acc.get(&(0..dim).collect::<Vec<_>>()).cloned().unwrap_or_default())
}

fn top_coefficient(alpha: &OneForm, omega: &TwoForm, n: usize) -> Scalar {
    let dim = 2 * n + 1;
    let w: Multi = omega.terms().map(|(i, j, c)| (vec![i, j], c.clone())).collect();
    let mut acc: Multi = alpha
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (vec![i], c.clone()))
        .collect();
    for _ in 0..n {
        acc = wedge_multi(&acc, &w);
    }
    acc.get(&(0..dim).collect::<Vec<_>>()).cloned().unwrap_or_default()
}

/// Bases of the rational cocycle spaces `Z¹` and `Z²`.
pub fn cocycle_spaces(l: &LieAlgebra) -> Result<(Vec<OneForm>, Vec<TwoForm>)> {
    l.require_rational()?;
    let n = l.dim();
    let c = l.dense::<Rational>()?;
    // Z¹: α(c_ij) = 0 for every pair
    let rows1: Vec<Vec<Rational>> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| c[i][j].clone())
        .collect();
    let z1 = linalg::nullspace(&rows1, n)
        .into_iter()
        .map(|v| OneForm::new(v.into_iter().map(Scalar::Rat).collect()))
        .collect();
    // Z²: unknowns are the coefficients on pairs p<q
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .collect();
    let mut rows2 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![Rational::from_integer(0.into()); pairs.len()];
                for (a, b, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    // ω([e_a,e_b], e_z) = Σ_m c_ab^m ω(e_m, e_z)
                    for (m, cm) in c[a][b].iter().enumerate() {
                        if cm == &Rational::from_integer(0.into()) || m == z {
                            continue;
                        }
                        let (p, q, sign) = if m < z { (m, z, 1) } else { (z, m, -1) };
                        let col = pairs.iter().position(|&pq| pq == (p, q)).unwrap();
                        row[col] += cm * Rational::from_integer(sign.into());
                    }
                }
                rows2.push(row);
            }
        }
    }
    let z2 = linalg::nullspace(&rows2, pairs.len())
        .into_iter()
        .map(|v| {
            let mut w = TwoForm::zero(n);
            for (&(p, q), c) in pairs.iter().zip(v) {
                w.set(p, q, Scalar::Rat(c));
            }
            w
        })
        .collect();
    Ok((z1, z2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g21() -> LieAlgebra {
        LieAlgebra::from_table(3, &[(1, 2, &[(1, 1)])]).unwrap()
    }

    #[test]
    fn differential_signs() {
        let l = g21();
        assert_eq!(d1(&l, &OneForm::basis(3, 0)).unwrap(), TwoForm::basis(3, 0, 1).scale(&Scalar::int(-1)));
        assert!(d1(&l, &OneForm::basis(3, 2)).unwrap().is_zero());
    }

    #[test]
    fn generic_dim3_volume() {
        let l = LieAlgebra::abelian(3);
        let a = OneForm::new(vec![Scalar::var("a1"), Scalar::var("a2"), Scalar::var("a3")]);
        let mut w = TwoForm::zero(3);
        w.set(0, 1, Scalar::var("a12"));
        w.set(0, 2, Scalar::var("a13"));
        w.set(1, 2, Scalar::var("a23"));
        let v = volume_coeff(&l, &a, &w).unwrap();
        assert_eq!(v, Scalar::parse("a3*a12-a2*a13+a1*a23").unwrap());
        assert_eq!(
            volume_coeff(&LieAlgebra::abelian(2), &OneForm::zero(2), &TwoForm::zero(2)),
            Err(Error::EvenDimension(2))
        );
    }

    #[test]
    fn dim5_volume_carries_factorial() {
        let l = LieAlgebra::abelian(5);
        let w = TwoForm::basis(5, 0, 1).add(&TwoForm::basis(5, 2, 3));
        assert_eq!(volume_coeff(&l, &OneForm::basis(5, 4), &w).unwrap(), Scalar::int(2));
    }

    #[test]
    fn cocycles_of_g21() {
        let (z1, z2) = cocycle_spaces(&g21()).unwrap();
        assert_eq!(z1, vec![OneForm::basis(3, 1), OneForm::basis(3, 2)]);
        assert_eq!(z2, vec![TwoForm::basis(3, 0, 1), TwoForm::basis(3, 1, 2)]);
    }

    #[test]
    fn printing() {
        let w = TwoForm::basis(5, 0, 1).add(&TwoForm::basis(5, 2, 4).scale(&Scalar::int(-2)));
        assert_eq!(w.to_string(), "e^12 - 2*e^35");
        let a = OneForm::new(vec![Scalar::zero(), Scalar::var("lam"), Scalar::parse("a+1").unwrap()]);
        assert_eq!(a.to_string(), "lam*e^2 + (a+1)*e^3");
    }
}

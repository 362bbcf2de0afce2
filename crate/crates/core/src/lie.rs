//! Lie algebras given by structure constants, and linear maps between them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{OneForm, TwoForm};
use crate::scalars::linalg::{self, Matrix};
use crate::scalars::{Field, Rational, Scalar};

/// A coordinate vector in the standard basis.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(k: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| k * x).collect()
}

/// `Σ c·e_i`, printed with 1-based basis names; `0` for the zero vector.
pub fn format_vector(v: &[Scalar]) -> String {
    format_combination(v.iter().enumerate().map(|(i, c)| (c, format!("e{}", i + 1))))
}

pub(crate) fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = match c {
            Scalar::Rat(r) if r < &Rational::from_integer(0.into()) => (true, Scalar::Rat(-r)),
            _ => (false, c.clone()),
        };
        let coef = match &body {
            b if b.is_one() => String::new(),
            Scalar::Rat(r) => format!("{r}*"),
            Scalar::Poly(p) if p.num_terms() == 1 => format!("{p}*"),
            Scalar::Poly(p) => format!("({p})*"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coef);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Structure constants `[e_i, e_j] = Σ_k c_ij^k e_k`, stored for `i < j` only.
/// Indices are 0-based internally; everything user-facing is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vector,
}

/// A nonzero bilinear defect on a basis pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDefect {
    pub i: usize,
    pub j: usize,
    pub defect: Vector,
}

impl LieAlgebra {
    /// The abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            brackets: BTreeMap::new(),
        }
    }

    /// Builds from 1-based integer tables: `(i, j, [(coef, k), ...])`.
    pub fn from_table(dim: usize, table: &[(usize, usize, &[(i64, usize)])]) -> Result<Self> {
        let mut l = LieAlgebra::abelian(dim);
        for &(i, j, terms) in table {
            let mut v = zero_vector(dim);
            for &(c, k) in terms {
                if k == 0 || k > dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                v[k - 1] = &v[k - 1] + &Scalar::int(c);
            }
            if i == 0 || j == 0 {
                return Err(Error::IndexOutOfRange { index: 0, dim });
            }
            l.set_bracket(i - 1, j - 1, v)?;
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j]` (0-based). Setting `[e_j, e_i]` stores the negation.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        let n = self.dim;
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx + 1, dim: n });
            }
        }
        if i == j {
            return Err(Error::IndexOutOfRange { index: i + 1, dim: n });
        }
        if value.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.iter().map(|c| -c).collect())
        };
        if is_zero_vector(&value) {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim)),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|c| -c).collect())
                .unwrap_or_else(|| zero_vector(self.dim)),
            std::cmp::Ordering::Equal => zero_vector(self.dim),
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_bracket(i, j)[k].clone()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.dim);
        for (&(i, j), v) in &self.brackets {
            let coef = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if coef.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(v) {
                if !c.is_zero() {
                    *o = &*o + &(&coef * c);
                }
            }
        }
        Ok(out)
    }

    /// All triples `i<j<k` where the cyclic Jacobi sum is nonzero.
    pub fn jacobi_defects(&self) -> Vec<JacobiDefect> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a| basis_vector(n, a);
                    let t1 = self.bracket(&self.basis_bracket(i, j), &e(k)).unwrap();
                    let t2 = self.bracket(&self.basis_bracket(j, k), &e(i)).unwrap();
                    let t3 = self.bracket(&self.basis_bracket(k, i), &e(j)).unwrap();
                    let defect = add_vectors(&add_vectors(&t1, &t2), &t3);
                    if !is_zero_vector(&defect) {
                        out.push(JacobiDefect { i, j, k, defect });
                    }
                }
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> Result<()> {
        match self.jacobi_defects().first() {
            None => Ok(()),
            Some(d) => Err(Error::NotLie(d.i + 1, d.j + 1, d.k + 1)),
        }
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<LinearMap> {
        self.check_len(x)?;
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &basis_vector(self.dim, j)).unwrap())
            .collect();
        Ok(LinearMap::from_columns(self.dim, cols))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.brackets
            .values()
            .flat_map(|v| v.iter().flat_map(Scalar::variables))
            .collect()
    }

    pub fn is_parametric(&self) -> bool {
        self.brackets.values().flatten().any(|c| !c.is_rational())
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> LieAlgebra {
        let mut out = LieAlgebra::abelian(self.dim);
        for (&(i, j), v) in &self.brackets {
            let v: Vector = v.iter().map(|c| c.substitute(assignment)).collect();
            out.set_bracket(i, j, v).unwrap();
        }
        out
    }

    pub(crate) fn require_rational(&self) -> Result<()> {
        let vars = self.variables();
        if vars.is_empty() {
            Ok(())
        } else {
            Err(Error::ParametricUnsupported(join_names(&vars)))
        }
    }

    /// Dense structure constants `c[i][j][k]` over a field.
    pub(crate) fn dense<F: Field>(&self) -> Result<Vec<Vec<Vec<F>>>> {
        let n = self.dim;
        let mut c = vec![vec![vec![F::zero(); n]; n]; n];
        for (&(i, j), v) in &self.brackets {
            for (k, s) in v.iter().enumerate() {
                let f = F::from_scalar(s)
                    .ok_or_else(|| Error::ParametricUnsupported(join_names(&s.variables())))?;
                c[j][i][k] = -f.clone();
                c[i][j][k] = f;
            }
        }
        Ok(c)
    }

    /// Basis of the center.
    pub fn center(&self) -> Result<Vec<Vec<Rational>>> {
        self.require_rational()?;
        let n = self.dim;
        let c = self.dense::<Rational>()?;
        // x in center iff Σ_i x_i c[i][j][k] = 0 for all j, k
        let rows: Matrix<Rational> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| c[i][j][k].clone()).collect())
            .collect();
        Ok(linalg::nullspace(&rows, n))
    }

    /// Basis of `[U, U]` for a subspace spanned by `basis`, echelon-reduced.
    fn bracket_span(&self, basis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut rows = Vec::new();
        for (a, x) in basis.iter().enumerate() {
            for y in &basis[a + 1..] {
                let xs: Vector = x.iter().map(Scalar::from).collect();
                let ys: Vector = y.iter().map(Scalar::from).collect();
                let z = self.bracket(&xs, &ys).unwrap();
                rows.push(z.iter().map(|s| s.as_rational().unwrap().clone()).collect());
            }
        }
        echelon_basis(rows)
    }

    /// `D⁰ = g ⊃ D¹ = [g,g] ⊃ ...` until it stabilises.
    pub fn derived_series(&self) -> Result<Vec<Vec<Vec<Rational>>>> {
        self.require_rational()?;
        let mut series = vec![linalg::identity::<Rational>(self.dim)];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last);
            if next.len() == last.len() {
                return Ok(series);
            }
            let done = next.is_empty();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self
            .derived_series()?
            .last()
            .is_some_and(Vec::is_empty))
    }

    /// `φ([e_i,e_j]) − [φe_i,e_j] − [e_i,φe_j]` on every pair where it is nonzero.
    pub fn derivation_defects(&self, phi: &LinearMap) -> Result<Vec<PairDefect>> {
        self.check_square(phi)?;
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let defect = self.derivation_defect_on(phi, i, j);
                if !is_zero_vector(&defect) {
                    out.push(PairDefect { i, j, defect });
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn derivation_defect_on(&self, phi: &LinearMap, i: usize, j: usize) -> Vector {
        let n = self.dim;
        let lhs = phi.apply(&self.basis_bracket(i, j));
        let a = self.bracket(phi.column(i), &basis_vector(n, j)).unwrap();
        let b = self.bracket(&basis_vector(n, i), phi.column(j)).unwrap();
        sub_vectors(&sub_vectors(&lhs, &a), &b)
    }

    pub fn is_derivation(&self, phi: &LinearMap) -> Result<bool> {
        Ok(self.derivation_defects(phi)?.is_empty())
    }

    fn check_square(&self, m: &LinearMap) -> Result<()> {
        if m.rows() == self.dim && m.cols() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: if m.rows() == self.dim { m.cols() } else { m.rows() },
            })
        }
    }
}

pub(crate) fn join_names(vars: &BTreeSet<String>) -> String {
    vars.iter().cloned().collect::<Vec<_>>().join(", ")
}

/// Row-echelon basis of the span of `rows`.
pub(crate) fn echelon_basis(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut m = rows;
    let r = linalg::rref(&mut m).len();
    m.truncate(r);
    m
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.brackets.is_empty() {
            return write!(f, "abelian, dim {}", self.dim);
        }
        let parts: Vec<String> = self
            .brackets()
            .map(|(i, j, v)| format!("[e{},e{}] = {}", i + 1, j + 1, format_vector(v)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// A linear map; `cols[j]` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: Vec<Vector>,
}

impl LinearMap {
    /// The zero endomorphism of an `n`-dimensional space.
    pub fn zero(n: usize) -> Self {
        LinearMap {
            rows: n,
            cols: vec![zero_vector(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::from_columns(n, (0..n).map(|i| basis_vector(n, i)).collect())
    }

    /// `columns[j]` is the image of `e_j`; `rows` is the target dimension.
    pub fn from_columns(rows: usize, columns: Vec<Vector>) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        LinearMap {
            rows,
            cols: columns,
        }
    }

    /// From a row-major matrix.
    pub fn from_matrix(m: &[Vec<Scalar>]) -> Self {
        let rows = m.len();
        LinearMap {
            rows,
            cols: linalg::transpose(m),
        }
    }

    pub fn from_rational(m: &[Vec<Rational>]) -> Self {
        LinearMap::from_matrix(&linalg::scalar_matrix(m))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    /// Row-major matrix.
    pub fn matrix(&self) -> Matrix<Scalar> {
        (0..self.rows)
            .map(|r| self.cols.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.cols[c][r]
    }

    /// Image of `e_c`.
    pub fn column(&self, c: usize) -> &[Scalar] {
        &self.cols[c]
    }

    pub fn set_column(&mut self, c: usize, v: Vector) {
        assert_eq!(v.len(), self.rows, "column length mismatch");
        self.cols[c] = v;
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.rows);
        for (x, col) in v.iter().zip(&self.cols) {
            if x.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(col) {
                if !c.is_zero() {
                    *o = &*o + &(x * c);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let columns = other.cols.iter().map(|c| self.apply(c)).collect();
        LinearMap::from_columns(self.rows, columns)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| is_zero_vector(c))
    }

    pub fn det(&self) -> Scalar {
        linalg::det_poly(&self.matrix())
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|x| x.substitute(assignment)).collect())
                .collect(),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.cols.iter().flatten().flat_map(Scalar::variables).collect()
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cols
            .iter()
            .enumerate()
            .filter(|(_, c)| !is_zero_vector(c))
            .map(|(j, c)| format!("e{} -> {}", j + 1, format_vector(c)))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Outcome of checking a candidate isomorphism `M : L1 → L2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub invertible: bool,
    /// Pairs where `M[x,y]₁ ≠ [Mx,My]₂`.
    pub homomorphism_defects: Vec<PairDefect>,
    /// `M*α₂ = α₁`, when forms were supplied.
    pub alpha_pulls_back: Option<bool>,
    /// `M*ω₂ = ω₁`, when forms were supplied.
    pub omega_pulls_back: Option<bool>,
}

impl IsomorphismReport {
    pub fn ok(&self) -> bool {
        self.invertible
            && self.homomorphism_defects.is_empty()
            && self.alpha_pulls_back != Some(false)
            && self.omega_pulls_back != Some(false)
    }
}

/// Optional forms carried by each side of an isomorphism check.
#[derive(Clone, Copy, Debug, Default)]
pub struct Forms<'a> {
    pub alpha: Option<&'a OneForm>,
    pub omega: Option<&'a TwoForm>,
}

impl<'a> Forms<'a> {
    pub fn new(alpha: &'a OneForm, omega: &'a TwoForm) -> Self {
        Forms {
            alpha: Some(alpha),
            omega: Some(omega),
        }
    }
}

pub fn check_isomorphism(
    l1: &LieAlgebra,
    l2: &LieAlgebra,
    m: &LinearMap,
    forms1: Forms<'_>,
    forms2: Forms<'_>,
) -> Result<IsomorphismReport> {
    let n = l1.dim();
    if l2.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: l2.dim(),
        });
    }
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.cols(),
        });
    }
    let invertible = !m.det().is_zero();
    let mut homomorphism_defects = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.apply(&l1.basis_bracket(i, j));
            let rhs = l2.bracket(m.column(i), m.column(j))?;
            let defect = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                homomorphism_defects.push(PairDefect { i, j, defect });
            }
        }
    }
    let alpha_pulls_back = match (forms1.alpha, forms2.alpha) {
        (Some(a1), Some(a2)) => Some(&a2.pullback(m) == a1),
        _ => None,
    };
    let omega_pulls_back = match (forms1.omega, forms2.omega) {
        (Some(w1), Some(w2)) => Some(&w2.pullback(m) == w1),
        _ => None,
    };
    Ok(IsomorphismReport {
        invertible,
        homomorphism_defects,
        alpha_pulls_back,
        omega_pulls_back,
    })
}

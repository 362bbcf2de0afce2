//! Left-symmetric products attached to symplectic and cosymplectic algebras.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{OneForm, TwoForm};
use crate::lie::LieAlgebra;
use crate::scalars::{linalg, Field};

use super::dense::{self, convert, form2, multiply, symplectic_products, unit, Dense, Products};
use super::SymplecticPair;

/// Multiplication table `e_i . e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LsaTable<F> {
    n: usize,
    p: Products<F>,
}

impl<F: Field> LsaTable<F> {
    pub(crate) fn from_products(p: Products<F>) -> Self {
        LsaTable { n: p.len(), p }
    }

    /// An all-zero table on `n` generators.
    pub fn zero(n: usize) -> Self {
        LsaTable::from_products(vec![vec![vec![F::zero(); n]; n]; n])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &[F] {
        &self.p[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<F>) {
        assert_eq!(v.len(), self.n, "product length mismatch");
        self.p[i][j] = v;
    }

    pub fn product(&self, x: &[F], y: &[F]) -> Vec<F> {
        multiply(&self.p, x, y)
    }

    /// `(x.y).z − x.(y.z)`.
    pub fn associator(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        dense::sub(
            &self.product(&self.product(x, y), z),
            &self.product(x, &self.product(y, z)),
        )
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        let e = |i| unit::<F>(n, i);
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| dense::is_zero(&self.associator(&e(i), &e(j), &e(k)))))
        })
    }

    /// Nonzero products `(i, j, e_i.e_j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[F])> {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !dense::is_zero(&self.p[i][j]))
            .map(|(i, j)| (i, j, self.p[i][j].as_slice()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LsaTable<G> {
        LsaTable::from_products(
            self.p
                .iter()
                .map(|r| r.iter().map(|v| v.iter().map(&f).collect()).collect())
                .collect(),
        )
    }
}

/// `Σ c·e_k` for a vector over any exact field.
pub fn format_field_vector<F: Field>(v: &[F]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        let coef = if body == "1" { String::new() } else { format!("{body}*") };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&format!("{coef}e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<F: Field> fmt::Display for LsaTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.entries() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "e{}.e{} = {}", i + 1, j + 1, format_field_vector(v))?;
        }
        if first {
            write!(f, "(all products vanish)")?;
        }
        Ok(())
    }
}

/// Product `*` on a symplectic algebra: `ω(x*y, z) = −ω(y, [x, z])`.
pub fn symplectic_lsa<F: Field>(pair: &SymplecticPair) -> Result<LsaTable<F>> {
    let c = pair.algebra.dense::<F>()?;
    let w: linalg::Matrix<F> = pair
        .omega
        .matrix()
        .iter()
        .map(|r| convert(r))
        .collect::<Result<_>>()?;
    Ok(LsaTable::from_products(symplectic_products(&c, &w)?))
}

/// The two independent constructions of the product on `g`: from
/// `Φ(x.y)(z) = −Φ(y)([x,z])`, and assembled from the kernel data.
pub fn lsa_routes<F: Field>(
    l: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
) -> Result<(LsaTable<F>, LsaTable<F>)> {
    if l.dim() % 2 == 0 {
        return Err(Error::EvenDimension(l.dim()));
    }
    let d = Dense::<F>::new(l, alpha, omega)?;
    Ok((
        LsaTable::from_products(d.products_via_phi()?),
        LsaTable::from_products(d.products_via_kernel()?),
    ))
}

/// The left-symmetric product of a cosymplectic algebra. Both constructions
/// are run and must agree.
pub fn cosymplectic_lsa<F: Field>(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<LsaTable<F>> {
    let (a, b) = lsa_routes(l, alpha, omega)?;
    if a != b {
        return Err(Error::ConditionsFail(vec!["lsa-routes-agree".to_string()]));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LsaDefects<F> {
    /// `(i, j, e_i.e_j − e_j.e_i − [e_i,e_j])` where nonzero.
    pub commutator: Vec<(usize, usize, Vec<F>)>,
    /// `(i, j, k, ass(e_i,e_j,e_k) − ass(e_j,e_i,e_k))` where nonzero.
    pub left_symmetry: Vec<(usize, usize, usize, Vec<F>)>,
}

impl<F> LsaDefects<F> {
    pub fn ok(&self) -> bool {
        self.commutator.is_empty() && self.left_symmetry.is_empty()
    }
}

pub fn left_symmetry_defect<F: Field>(t: &LsaTable<F>, l: &LieAlgebra) -> Result<LsaDefects<F>> {
    let n = l.dim();
    if t.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.dim(),
        });
    }
    let c = l.dense::<F>()?;
    let e = |i| unit::<F>(n, i);
    let mut commutator = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = dense::sub(&dense::sub(t.get(i, j), t.get(j, i)), &c[i][j]);
            if !dense::is_zero(&d) {
                commutator.push((i, j, d));
            }
        }
    }
    let mut left_symmetry = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let d = dense::sub(
                    &t.associator(&e(i), &e(j), &e(k)),
                    &t.associator(&e(j), &e(i), &e(k)),
                );
                if !dense::is_zero(&d) {
                    left_symmetry.push((i, j, k, d));
                }
            }
        }
    }
    Ok(LsaDefects {
        commutator,
        left_symmetry,
    })
}

/// Pairs `(a, b)` of adapted basis vectors of `h` where
/// `ad_ξ(x*y) ≠ ad_ξ x * y + x * ad_ξ y`.
pub fn reeb_derivation_defects<F: Field>(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Vec<(usize, usize)>> {
    let d = Dense::<F>::new(l, alpha, omega)?;
    let ad = d.adapted()?;
    let star = symplectic_products(&ad.hc, &ad.hw)?;
    let m = d.n - 1;
    let dmap = |x: &[F]| linalg::mat_vec(&ad.d, x);
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (unit::<F>(m, a), unit::<F>(m, b));
            let lhs = dmap(&multiply(&star, &x, &y));
            let rhs = dense::add(
                &multiply(&star, &dmap(&x), &y),
                &multiply(&star, &x, &dmap(&y)),
            );
            if lhs != rhs {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiinvarianceReport {
    /// Which of the four algebraic conditions fail (numbered 1–4).
    pub failed_conditions: Vec<u8>,
    /// Whether the full product on `g` is associative.
    pub associative: bool,
}

impl BiinvarianceReport {
    pub fn conditions_hold(&self) -> bool {
        self.failed_conditions.is_empty()
    }

    /// The conditions and the direct associativity test agree.
    pub fn consistent(&self) -> bool {
        self.conditions_hold() == self.associative
    }
}

/// Evaluates, on basis vectors of `h` with `D = ad_ξ`:
/// 1. `ass*(x,y,z) = ω(Dy, x) Dz`;
/// 2. `x * Dy = 0`;
/// 3. `Dx * y = Dy * x`;
/// 4. `D²x = 0`;
///
/// and separately whether the product on `g` is associative.
pub fn biinvariance<F: Field>(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<BiinvarianceReport> {
    let d = Dense::<F>::new(l, alpha, omega)?;
    let ad = d.adapted()?;
    let star = symplectic_products(&ad.hc, &ad.hw)?;
    let m = d.n - 1;
    let dm = |x: &[F]| linalg::mat_vec(&ad.d, x);
    let mul = |x: &[F], y: &[F]| multiply(&star, x, y);
    let e = |i| unit::<F>(m, i);
    let mut failed = Vec::new();

    let c1 = (0..m).all(|a| {
        (0..m).all(|b| {
            (0..m).all(|c| {
                let (x, y, z) = (e(a), e(b), e(c));
                let ass = dense::sub(&mul(&mul(&x, &y), &z), &mul(&x, &mul(&y, &z)));
                let rhs = dense::scale(&form2(&ad.hw, &dm(&y), &x), &dm(&z));
                ass == rhs
            })
        })
    });
    let c2 = (0..m).all(|a| (0..m).all(|b| dense::is_zero(&mul(&e(a), &dm(&e(b))))));
    let c3 = (0..m).all(|a| (0..m).all(|b| mul(&dm(&e(a)), &e(b)) == mul(&dm(&e(b)), &e(a))));
    let c4 = (0..m).all(|a| dense::is_zero(&dm(&dm(&e(a)))));
    for (k, ok) in [(1u8, c1), (2, c2), (3, c3), (4, c4)] {
        if !ok {
            failed.push(k);
        }
    }
    let associative = LsaTable::from_products(d.products_via_phi()?).is_associative();
    Ok(BiinvarianceReport {
        failed_conditions: failed,
        associative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Rational, Scalar};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn symplectic_product_on_affine_plane() {
        let h = LieAlgebra::from_table(2, &[(1, 2, &[(1, 1)])]).unwrap();
        let t = symplectic_lsa::<Rational>(&SymplecticPair::new(h, TwoForm::basis(2, 0, 1))).unwrap();
        assert_eq!(t.get(0, 1), &[q(1), q(0)]);
        assert_eq!(t.get(1, 1), &[q(0), q(1)]);
        assert_eq!(t.entries().count(), 2);
    }

    #[test]
    fn g34_table_with_symbolic_lambda() {
        let g34 = LieAlgebra::from_table(3, &[(1, 3, &[(1, 1)]), (2, 3, &[(-1, 2)])]).unwrap();
        let alpha = OneForm::basis(3, 2).scale(&Scalar::var("lam"));
        let t = cosymplectic_lsa::<RatFunc>(&g34, &alpha, &TwoForm::basis(3, 0, 1)).unwrap();
        let lam = RatFunc::var("lam");
        let inv_sq = RatFunc::constant(q(1)) / (lam.clone() * lam);
        let z = RatFunc::constant(q(0));
        assert_eq!(t.get(0, 1), &[z.clone(), z.clone(), inv_sq.clone()]);
        assert_eq!(t.get(1, 0), &[z.clone(), z.clone(), inv_sq]);
        assert_eq!(t.to_string().lines().count(), 4);
    }

    #[test]
    fn commutator_defect_is_reported() {
        let mut t = LsaTable::<Rational>::zero(2);
        t.set(0, 1, vec![q(1), q(0)]);
        let d = left_symmetry_defect(&t, &LieAlgebra::abelian(2)).unwrap();
        assert_eq!(d.commutator, vec![(0, 1, vec![q(1), q(0)])]);
        assert!(left_symmetry_defect(&LsaTable::<Rational>::zero(2), &LieAlgebra::abelian(2))
            .unwrap()
            .ok());
    }

    #[test]
    fn biinvariance_examples() {
        let g21 = LieAlgebra::from_table(3, &[(1, 2, &[(1, 1)])]).unwrap();
        let r = biinvariance::<Rational>(&g21, &OneForm::basis(3, 2), &TwoForm::basis(3, 0, 1)).unwrap();
        assert!(r.associative && r.conditions_hold());
        let g34 = LieAlgebra::from_table(3, &[(1, 3, &[(1, 1)]), (2, 3, &[(-1, 2)])]).unwrap();
        let r = biinvariance::<Rational>(&g34, &OneForm::basis(3, 2), &TwoForm::basis(3, 0, 1)).unwrap();
        assert!(!r.associative);
        assert!(r.failed_conditions.contains(&4));
        assert!(r.consistent());
    }
}

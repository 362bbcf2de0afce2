//! The correspondence between cosymplectic algebras and symplectic algebras
//! carrying an infinitesimal symplectic derivation.

use crate::error::{Error, Result};
use crate::exterior::{OneForm, TwoForm};
use crate::lie::{LieAlgebra, LinearMap};
use crate::scalars::{Rational, Scalar};

use super::{CosymplecticStructure, Dense, SymplecticPair};

/// `(h, ω_h)` with `h = ker α`, the derivation `D = ad_ξ|h`, and the basis
/// change used to get there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDecomposition {
    pub pair: SymplecticPair,
    pub derivation: LinearMap,
    /// Columns: the adapted basis (a basis of `h`, then `ξ`) in old coordinates.
    pub basis: LinearMap,
    pub reeb: Vec<Scalar>,
}

fn rat(v: &[Rational]) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar::Rat).collect()
}

/// Nonzero values of `ω(De_i, e_j) + ω(e_i, De_j)` for `i < j`.
pub fn ist_defects(omega: &TwoForm, d: &LinearMap) -> Result<Vec<(usize, usize, Scalar)>> {
    let n = omega.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.cols(),
        });
    }
    let twisted = omega.twisted(d);
    Ok(twisted.terms().map(|(i, j, c)| (i, j, c.clone())).collect())
}

pub fn kernel_symplectic(s: &CosymplecticStructure) -> Result<KernelDecomposition> {
    let dense = Dense::<Rational>::new(s.algebra(), s.alpha(), s.omega())?;
    let ad = dense.adapted()?;
    let m = dense.n - 1;
    let mut h = LieAlgebra::abelian(m);
    for a in 0..m {
        for b in a + 1..m {
            h.set_bracket(a, b, rat(&ad.hc[a][b]))?;
        }
    }
    let mut omega_h = TwoForm::zero(m);
    for a in 0..m {
        for b in a + 1..m {
            omega_h.set(a, b, Scalar::Rat(ad.hw[a][b].clone()));
        }
    }
    let derivation = LinearMap::from_rational(&ad.d);
    if !h.is_derivation(&derivation)? {
        return Err(Error::NotDerivation);
    }
    if !ist_defects(&omega_h, &derivation)?.is_empty() {
        return Err(Error::NotIst);
    }
    Ok(KernelDecomposition {
        pair: SymplecticPair::new(h, omega_h),
        derivation,
        basis: LinearMap::from_rational(&ad.basis),
        reeb: rat(&ad.xi),
    })
}

/// `g = h ⊕ ⟨ξ⟩` with `[ξ, x] = Dx`, `α = ξ*`, and `ω` extending `ω_h` by `ι_ξ ω = 0`.
/// No hypotheses are checked.
pub fn extend_by_derivation(pair: &SymplecticPair, d: &LinearMap) -> Result<(LieAlgebra, OneForm, TwoForm)> {
    let m = pair.algebra.dim();
    if d.rows() != m || d.cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: d.cols(),
        });
    }
    let mut g = LieAlgebra::abelian(m + 1);
    for (i, j, v) in pair.algebra.brackets() {
        let mut v = v.clone();
        v.push(Scalar::zero());
        g.set_bracket(i, j, v)?;
    }
    for j in 0..m {
        let mut v = d.column(j).to_vec();
        v.push(Scalar::zero());
        g.set_bracket(m, j, v)?;
    }
    Ok((g, OneForm::basis(m + 1, m), pair.omega.extend(m + 1)))
}

pub fn from_symplectic_derivation(pair: &SymplecticPair, d: &LinearMap) -> Result<CosymplecticStructure> {
    if !pair.algebra.is_derivation(d)? {
        return Err(Error::NotDerivation);
    }
    if !ist_defects(&pair.omega, d)?.is_empty() {
        return Err(Error::NotIst);
    }
    let (g, alpha, omega) = extend_by_derivation(pair, d)?;
    CosymplecticStructure::new(g, alpha, omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{check_isomorphism, Forms};

    #[test]
    fn kernel_of_g31() {
        let g31 = LieAlgebra::from_table(3, &[(2, 3, &[(1, 1)])]).unwrap();
        let s = CosymplecticStructure::new(g31, OneForm::basis(3, 1), TwoForm::basis(3, 0, 2)).unwrap();
        let k = kernel_symplectic(&s).unwrap();
        assert_eq!(k.pair.algebra, LieAlgebra::abelian(2));
        assert_eq!(k.pair.omega, TwoForm::basis(2, 0, 1));
        // h = span{e1, e3}; D: e3 ↦ e1
        assert_eq!(k.derivation.column(1), &[Scalar::one(), Scalar::zero()]);
        assert!(k.derivation.column(0).iter().all(Scalar::is_zero));
    }

    #[test]
    fn round_trip_is_witnessed_by_the_basis_change() {
        let g34 = LieAlgebra::from_table(3, &[(1, 3, &[(1, 1)]), (2, 3, &[(-1, 2)])]).unwrap();
        let alpha = OneForm::basis(3, 2).scale(&Scalar::int(2));
        let omega = TwoForm::basis(3, 0, 1).add(&TwoForm::basis(3, 1, 2).scale(&Scalar::int(3)));
        let s = CosymplecticStructure::new(g34, alpha, omega).unwrap();
        let k = kernel_symplectic(&s).unwrap();
        let back = from_symplectic_derivation(&k.pair, &k.derivation).unwrap();
        let r = check_isomorphism(
            back.algebra(),
            s.algebra(),
            &k.basis,
            Forms::new(back.alpha(), back.omega()),
            Forms::new(s.alpha(), s.omega()),
        )
        .unwrap();
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn ist_examples() {
        let w = TwoForm::basis(2, 0, 1);
        let diag = LinearMap::from_columns(2, vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::int(-1)]]);
        assert!(ist_defects(&w, &diag).unwrap().is_empty());
        assert_eq!(ist_defects(&w, &LinearMap::identity(2)).unwrap(), vec![(0, 1, Scalar::int(2))]);
    }
}

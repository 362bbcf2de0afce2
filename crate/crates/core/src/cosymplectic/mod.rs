//! Cosymplectic structures `(g, α, ω)`: validation, the map `Φ`, Reeb
//! vectors, existence, the symplectic kernel `ker α` and the associated
//! left-symmetric products.

mod dense;
mod kernel;
mod lsa;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exterior::{d1, d2, symplectic_volume, volume_coeff, OneForm, ThreeForm, TwoForm};
use crate::lie::{join_names, JacobiDefect, LieAlgebra, Vector};
use crate::scalars::linalg::{self, Matrix};
use crate::scalars::{Field, Rational, Scalar};

pub(crate) use dense::Dense;
pub use kernel::{from_symplectic_derivation, ist_defects, kernel_symplectic, KernelDecomposition};
pub use lsa::{
    biinvariance, cosymplectic_lsa, reeb_derivation_defects, left_symmetry_defect, lsa_routes,
    symplectic_lsa, BiinvarianceReport, LsaDefects, LsaTable,
};

/// Matrix of `x ↦ ι_x ω + α(x) α`: entry `[z][x]` is `Φ(e_x)(e_z)`.
pub fn phi_map(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Matrix<Scalar>> {
    let n = l.dim();
    for found in [alpha.dim(), omega.dim()] {
        if found != n {
            return Err(Error::DimensionMismatch { expected: n, found });
        }
    }
    Ok((0..n)
        .map(|z| {
            (0..n)
                .map(|x| &omega.coeff(x, z) + &(alpha.coeff(x) * alpha.coeff(z)))
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub jacobi: Vec<JacobiDefect>,
    pub d_alpha: TwoForm,
    pub d_omega: ThreeForm,
    /// Coefficient of the top monomial in `α ∧ ωⁿ`; a polynomial for families.
    pub volume: Scalar,
}

impl ValidationReport {
    pub fn lie(&self) -> bool {
        self.jacobi.is_empty()
    }

    pub fn cocycle1(&self) -> bool {
        self.d_alpha.is_zero()
    }

    pub fn cocycle2(&self) -> bool {
        self.d_omega.is_zero()
    }

    /// For families this means "nonzero as a polynomial", i.e. generically.
    pub fn nondegenerate(&self) -> bool {
        !self.volume.is_zero()
    }

    pub fn ok(&self) -> bool {
        self.lie() && self.cocycle1() && self.cocycle2() && self.nondegenerate()
    }

    /// Short names of the failing conditions.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.lie() {
            out.push("jacobi".to_string());
        }
        if !self.cocycle1() {
            out.push("cocycle1".to_string());
        }
        if !self.cocycle2() {
            out.push("cocycle2".to_string());
        }
        if !self.nondegenerate() {
            out.push("volume".to_string());
        }
        out
    }
}

pub fn validate(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<ValidationReport> {
    let volume = volume_coeff(l, alpha, omega)?;
    Ok(ValidationReport {
        jacobi: l.jacobi_defects(),
        d_alpha: d1(l, alpha)?,
        d_omega: d2(l, omega)?,
        volume,
    })
}

/// Reeb vector over any exact field that can hold the coefficients.
pub fn reeb_in<F: Field>(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Vec<F>> {
    if l.dim() % 2 == 0 {
        return Err(Error::EvenDimension(l.dim()));
    }
    Dense::<F>::new(l, alpha, omega)?.reeb()
}

/// The unique `ξ` with `α(ξ) = 1` and `ι_ξ ω = 0`, for rational structures.
pub fn reeb(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Vector> {
    Ok(reeb_in::<Rational>(l, alpha, omega)?
        .into_iter()
        .map(Scalar::Rat)
        .collect())
}

/// Checks `α(ξ) = 1` and `ι_ξ ω = 0` symbolically for a proposed Reeb vector.
pub fn is_reeb(alpha: &OneForm, omega: &TwoForm, xi: &[Scalar]) -> bool {
    alpha.eval(xi).is_one() && omega.interior(xi).is_zero()
}

/// A validated rational cosymplectic Lie algebra with its cached `Φ` and `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosymplecticStructure {
    algebra: LieAlgebra,
    alpha: OneForm,
    omega: TwoForm,
    reeb: Vector,
    phi: Matrix<Scalar>,
}

impl CosymplecticStructure {
    pub fn new(algebra: LieAlgebra, alpha: OneForm, omega: TwoForm) -> Result<Self> {
        let report = validate(&algebra, &alpha, &omega)?;
        if !report.ok() {
            return Err(Error::NotCosymplectic(report.failures().join(", ")));
        }
        let vars: std::collections::BTreeSet<String> = algebra
            .variables()
            .into_iter()
            .chain(alpha.variables())
            .chain(omega.variables())
            .collect();
        if !vars.is_empty() {
            return Err(Error::ParametricUnsupported(join_names(&vars)));
        }
        let reeb = reeb(&algebra, &alpha, &omega)?;
        let phi = phi_map(&algebra, &alpha, &omega)?;
        Ok(CosymplecticStructure {
            algebra,
            alpha,
            omega,
            reeb,
            phi,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn alpha(&self) -> &OneForm {
        &self.alpha
    }

    pub fn omega(&self) -> &TwoForm {
        &self.omega
    }

    pub fn reeb(&self) -> &[Scalar] {
        &self.reeb
    }

    pub fn phi(&self) -> &Matrix<Scalar> {
        &self.phi
    }

    pub fn lsa(&self) -> Result<LsaTable<Rational>> {
        cosymplectic_lsa(&self.algebra, &self.alpha, &self.omega)
    }
}

/// An even-dimensional Lie algebra with a 2-form, not necessarily validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticPair {
    pub algebra: LieAlgebra,
    pub omega: TwoForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticReport {
    pub jacobi: Vec<JacobiDefect>,
    pub d_omega: ThreeForm,
    /// Top coefficient of `ωⁿ`.
    pub volume: Scalar,
}

impl SymplecticReport {
    pub fn ok(&self) -> bool {
        self.jacobi.is_empty() && self.d_omega.is_zero() && !self.volume.is_zero()
    }
}

impl SymplecticPair {
    pub fn new(algebra: LieAlgebra, omega: TwoForm) -> Self {
        SymplecticPair { algebra, omega }
    }

    pub fn validate(&self) -> Result<SymplecticReport> {
        Ok(SymplecticReport {
            jacobi: self.algebra.jacobi_defects(),
            d_omega: d2(&self.algebra, &self.omega)?,
            volume: symplectic_volume(&self.omega)?,
        })
    }
}

/// The central extension `g ⊕ ⟨e⟩` (e central) with `ω + α ∧ e*`.
pub fn to_symplectic(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<SymplecticPair> {
    let n = l.dim();
    for found in [alpha.dim(), omega.dim()] {
        if found != n {
            return Err(Error::DimensionMismatch { expected: n, found });
        }
    }
    let mut big = LieAlgebra::abelian(n + 1);
    for (i, j, v) in l.brackets() {
        let mut v = v.clone();
        v.push(Scalar::zero());
        big.set_bracket(i, j, v)?;
    }
    let e_star = OneForm::basis(n + 1, n);
    let w = omega.extend(n + 1).add(&alpha.extend(n + 1).wedge(&e_star));
    Ok(SymplecticPair::new(big, w))
}

/// Result of the existence decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Existence {
    /// `det Φ` for the generic `(α, ω) ∈ Z¹ × Z²`.
    pub determinant: Scalar,
    pub generic_alpha: OneForm,
    pub generic_omega: TwoForm,
    pub witness: Option<Witness>,
}

impl Existence {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: BTreeMap<String, Rational>,
    pub alpha: OneForm,
    pub omega: TwoForm,
}

/// Decides whether `l` carries any cosymplectic structure.
///
/// `α` and `ω` range over `Z¹` and `Z²` with one symbol per basis element
/// (`u1, u2, …` and `w1, w2, …`). The answer is no exactly when `det Φ` is
/// the zero polynomial. Otherwise symbols are fixed greedily, in order, to the
/// first value of `0, 1, −1, 2, −2, …` that keeps the determinant nonzero.
pub fn exists_cosymplectic(l: &LieAlgebra) -> Result<Existence> {
    let n = l.dim();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    let (z1, z2) = crate::exterior::cocycle_spaces(l)?;
    let mut symbols = Vec::new();
    let mut alpha = OneForm::zero(n);
    for (k, b) in z1.iter().enumerate() {
        let s = format!("u{}", k + 1);
        alpha = alpha.add(&b.scale(&Scalar::var(&s)));
        symbols.push(s);
    }
    let mut omega = TwoForm::zero(n);
    for (k, b) in z2.iter().enumerate() {
        let s = format!("w{}", k + 1);
        omega = omega.add(&b.scale(&Scalar::var(&s)));
        symbols.push(s);
    }
    let determinant = linalg::det_poly(&phi_map(l, &alpha, &omega)?);
    let witness = if determinant.is_zero() {
        None
    } else {
        let assignment = greedy_nonroot(&determinant, &symbols);
        Some(Witness {
            alpha: alpha.substitute(&assignment),
            omega: omega.substitute(&assignment),
            assignment,
        })
    };
    Ok(Existence {
        determinant,
        generic_alpha: alpha,
        generic_omega: omega,
        witness,
    })
}

/// Candidate values `0, 1, −1, 2, −2, …`.
pub(crate) fn fair_integers() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| {
        let a = Rational::from_integer(k.into());
        let b = Rational::from_integer((-k).into());
        if k == 0 {
            vec![a]
        } else {
            vec![a, b]
        }
    })
}

fn greedy_nonroot(p: &Scalar, symbols: &[String]) -> BTreeMap<String, Rational> {
    let mut assignment = BTreeMap::new();
    let mut current = p.clone();
    for s in symbols {
        for c in fair_integers() {
            let one: BTreeMap<String, Rational> = [(s.clone(), c.clone())].into_iter().collect();
            let next = current.substitute(&one);
            if !next.is_zero() {
                current = next;
                assignment.insert(s.clone(), c);
                break;
            }
        }
    }
    assignment
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g21() -> LieAlgebra {
        LieAlgebra::from_table(3, &[(1, 2, &[(1, 1)])]).unwrap()
    }

    fn g34() -> LieAlgebra {
        LieAlgebra::from_table(3, &[(1, 3, &[(1, 1)]), (2, 3, &[(-1, 2)])]).unwrap()
    }

    #[test]
    fn phi_of_g21() {
        let p = phi_map(&g21(), &OneForm::basis(3, 2), &TwoForm::basis(3, 0, 1)).unwrap();
        // columns are Φ(e1) = e², Φ(e2) = −e¹, Φ(e3) = e³
        let col = |x: usize| -> Vec<Scalar> { (0..3).map(|z| p[z][x].clone()).collect() };
        assert_eq!(col(0), vec![Scalar::zero(), Scalar::one(), Scalar::zero()]);
        assert_eq!(col(1), vec![Scalar::int(-1), Scalar::zero(), Scalar::zero()]);
        assert_eq!(col(2), vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn reeb_of_scaled_alpha() {
        let xi = reeb(&g34(), &OneForm::basis(3, 2).scale(&Scalar::int(2)), &TwoForm::basis(3, 0, 1))
            .unwrap();
        assert_eq!(xi, vec![Scalar::zero(), Scalar::zero(), Scalar::frac(1, 2)]);
    }

    #[test]
    fn validation_flags_non_closed_alpha() {
        let r = validate(&g21(), &OneForm::basis(3, 0), &TwoForm::basis(3, 0, 1)).unwrap();
        assert!(!r.cocycle1());
        assert_eq!(r.failures(), vec!["cocycle1", "volume"]);
        let r = validate(&LieAlgebra::abelian(3), &OneForm::basis(3, 2), &TwoForm::basis(3, 0, 1)).unwrap();
        assert!(r.ok());
    }

    #[test]
    fn existence_on_heisenberg3() {
        let h3 = LieAlgebra::from_table(3, &[(1, 2, &[(1, 3)])]).unwrap();
        let e = exists_cosymplectic(&h3).unwrap();
        let w = e.witness.expect("H3 is cosymplectic");
        assert!(validate(&h3, &w.alpha, &w.omega).unwrap().ok());
    }

    #[test]
    fn perfect_algebras_have_none() {
        // sl2: [e1,e2]=e3, [e3,e1]=2e1... use the standard h,e,f basis
        let sl2 = LieAlgebra::from_table(
            3,
            &[(1, 2, &[(2, 2)]), (1, 3, &[(-2, 3)]), (2, 3, &[(1, 1)])],
        )
        .unwrap();
        assert!(sl2.check_jacobi().is_ok());
        let e = exists_cosymplectic(&sl2).unwrap();
        assert!(e.determinant.is_zero());
        assert!(!e.exists());
    }

    #[test]
    fn symplectization_of_g21() {
        let p = to_symplectic(&g21(), &OneForm::basis(3, 2), &TwoForm::basis(3, 0, 1)).unwrap();
        assert_eq!(p.omega.to_string(), "e^12 + e^34");
        assert!(p.validate().unwrap().ok());
    }
}

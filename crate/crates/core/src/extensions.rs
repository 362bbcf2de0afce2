//! Double extensions `ḡ ⊕ ⟨d⟩ ⊕ ⟨e⟩` and the three ways of building a
//! cosymplectic algebra two dimensions up.
//!
//! Basis order of an extension of an `n`-dimensional `ḡ`: `ē_1 … ē_n`, then
//! `d` (index `n`), then `e` (index `n + 1`). With `n = 3` this is
//! `e1 e2 e3 e4=d e5=e`.
//!
//! Brackets: `[x,y] = [x,y]‾ + θ(x,y) e`, `[d,x] = φx + λ(x) e`,
//! `[d,e] = v + t e`, and `e` is otherwise central. With
//! `∂φ(x,y) = φ[x,y] − [φx,y] − [x,φy]` and `θ_φ(x,y) = θ(φx,y) + θ(x,φy)`,
//! the Jacobi identity holds exactly when
//!
//! * `∂φ = −θ ⊗ v` (the cyclic sum over `d, x, y` has `ḡ`-part `∂φ + θ v`),
//! * `t θ − θ_φ = dλ`,
//! * `v` is central and `θ(v, ·) = 0`,
//! * `θ` is a 2-cocycle (the `e`-part of Jacobi on three elements of `ḡ`).

use std::collections::{BTreeMap, BTreeSet};

use crate::cosymplectic::{ist_defects, is_reeb, validate, Dense};
use crate::error::{Error, Result};
use crate::exterior::{d1, d2, OneForm, TwoForm};
use crate::lie::{
    add_vectors, basis_vector, is_zero_vector, scale_vector, zero_vector, LieAlgebra, LinearMap,
    PairDefect, Vector,
};
use crate::scalars::{linalg, Rational, Scalar};

/// `D = (φ, λ, v, t)` together with the 2-cocycle `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub phi: LinearMap,
    pub lambda: OneForm,
    pub v: Vector,
    pub t: Scalar,
    pub theta: TwoForm,
}

impl ExtensionData {
    pub fn zero(n: usize) -> Self {
        ExtensionData {
            phi: LinearMap::zero(n),
            lambda: OneForm::zero(n),
            v: zero_vector(n),
            t: Scalar::zero(),
            theta: TwoForm::zero(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    fn check(&self, n: usize) -> Result<()> {
        let dims = [
            self.phi.rows(),
            self.phi.cols(),
            self.lambda.dim(),
            self.v.len(),
            self.theta.dim(),
        ];
        match dims.iter().find(|&&d| d != n) {
            Some(&found) => Err(Error::DimensionMismatch { expected: n, found }),
            None => Ok(()),
        }
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> ExtensionData {
        ExtensionData {
            phi: self.phi.substitute(assignment),
            lambda: self.lambda.substitute(assignment),
            v: self.v.iter().map(|c| c.substitute(assignment)).collect(),
            t: self.t.substitute(assignment),
            theta: self.theta.substitute(assignment),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.phi.variables();
        v.extend(self.lambda.variables());
        v.extend(self.v.iter().flat_map(Scalar::variables));
        v.extend(self.t.variables());
        v.extend(self.theta.variables());
        v
    }
}

/// Builds the bracket of the double extension without checking anything.
pub fn assemble(base: &LieAlgebra, e: &ExtensionData) -> Result<LieAlgebra> {
    let n = base.dim();
    e.check(n)?;
    let (d, ee) = (n, n + 1);
    let mut g = LieAlgebra::abelian(n + 2);
    let widen = |v: &[Scalar], d_part: Scalar, e_part: Scalar| -> Vector {
        let mut w = v.to_vec();
        w.push(d_part);
        w.push(e_part);
        w
    };
    for i in 0..n {
        for j in i + 1..n {
            let v = widen(&base.basis_bracket(i, j), Scalar::zero(), e.theta.coeff(i, j));
            g.set_bracket(i, j, v)?;
        }
    }
    for j in 0..n {
        let v = widen(e.phi.column(j), Scalar::zero(), e.lambda.coeff(j).clone());
        g.set_bracket(d, j, v)?;
    }
    g.set_bracket(d, ee, widen(&e.v, Scalar::zero(), e.t.clone()))?;
    Ok(g)
}

/// `∂φ(x,y) = φ[x,y] − [φx,y] − [x,φy]` on a basis pair.
pub fn partial_phi(base: &LieAlgebra, phi: &LinearMap, i: usize, j: usize) -> Vector {
    base.derivation_defect_on(phi, i, j)
}

/// `ω_φ(x,y) = ω(φx,y) + ω(x,φy)`.
pub fn twisted_form(omega: &TwoForm, phi: &LinearMap) -> TwoForm {
    omega.twisted(phi)
}

/// `v ∈ Z(ḡ)`.
pub fn is_central(base: &LieAlgebra, v: &[Scalar]) -> bool {
    let n = base.dim();
    (0..n).all(|j| is_zero_vector(&base.bracket(v, &basis_vector(n, j)).unwrap()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionConditions {
    /// Pairs where `∂φ + θ v ≠ 0`.
    pub derivation_defects: Vec<PairDefect>,
    /// `t θ − θ_φ − dλ`.
    pub cocycle_defect: TwoForm,
    pub v_central: bool,
    pub v_in_ker_theta: bool,
    pub theta_closed: bool,
}

impl ExtensionConditions {
    pub fn ok(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.derivation_defects.is_empty() {
            out.push("dphi = -theta v".to_string());
        }
        if !self.cocycle_defect.is_zero() {
            out.push("t theta - theta_phi = d lambda".to_string());
        }
        if !self.v_central {
            out.push("v central".to_string());
        }
        if !self.v_in_ker_theta {
            out.push("v in ker theta".to_string());
        }
        if !self.theta_closed {
            out.push("theta closed".to_string());
        }
        out
    }
}

pub fn extension_conditions(base: &LieAlgebra, e: &ExtensionData) -> Result<ExtensionConditions> {
    let n = base.dim();
    e.check(n)?;
    let mut derivation_defects = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let defect = add_vectors(
                &partial_phi(base, &e.phi, i, j),
                &scale_vector(&e.theta.coeff(i, j), &e.v),
            );
            if !is_zero_vector(&defect) {
                derivation_defects.push(PairDefect { i, j, defect });
            }
        }
    }
    let cocycle_defect = e
        .theta
        .scale(&e.t)
        .sub(&e.theta.twisted(&e.phi))
        .sub(&d1(base, &e.lambda)?);
    Ok(ExtensionConditions {
        derivation_defects,
        cocycle_defect,
        v_central: is_central(base, &e.v),
        v_in_ker_theta: e.theta.interior(&e.v).is_zero(),
        theta_closed: d2(base, &e.theta)?.is_zero(),
    })
}

/// The first condition with the opposite sign on `θ v`, i.e. `∂φ = θ v`.
/// Kept so the sign can be compared against the Jacobi identity.
pub fn derivation_condition_opposite_sign(base: &LieAlgebra, e: &ExtensionData) -> Result<bool> {
    let n = base.dim();
    e.check(n)?;
    Ok((0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = partial_phi(base, &e.phi, i, j);
            let rhs = scale_vector(&e.theta.coeff(i, j), &e.v);
            lhs == rhs
        })
    }))
}

/// Checks the extension conditions, then the Jacobi identity of the result.
pub fn double_extend(base: &LieAlgebra, e: &ExtensionData) -> Result<LieAlgebra> {
    let report = extension_conditions(base, e)?;
    let g = assemble(base, e)?;
    let mut failures = report.failures();
    if !g.jacobi_defects().is_empty() {
        failures.push("jacobi".to_string());
    }
    if failures.is_empty() {
        Ok(g)
    } else {
        Err(Error::ConditionsFail(failures))
    }
}

/// The base cosymplectic data with a basis of `h̄ = ker ᾱ` and the Reeb vector.
struct Base {
    h: Vec<Vector>,
    xi: Vector,
}

fn base_data(base: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Base> {
    let report = validate(base, alpha, omega)?;
    if !report.ok() {
        return Err(Error::NotCosymplectic(report.failures().join(", ")));
    }
    let dense = Dense::<Rational>::new(base, alpha, omega)?;
    let ad = dense.adapted()?;
    let n = base.dim();
    let col = |c: usize| -> Vector { (0..n).map(|r| Scalar::Rat(ad.basis[r][c].clone())).collect() };
    Ok(Base {
        h: (0..n - 1).map(col).collect(),
        xi: col(n - 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    /// `φ` is an infinitesimal symplectic transformation of `(h̄, ω̄|h̄)`.
    pub ist_on_kernel: bool,
    /// `λ(x) = ω̄(x, φξ̄)` on `h̄`.
    pub lambda_matches: bool,
    /// `ω̄(v, x) = ᾱ(φx)` on `h̄`.
    pub v_matches: bool,
    /// `t = −ᾱ(φξ̄)`.
    pub t_matches: bool,
    /// `D` is an i.s.t. of `(ḡ ⊕ ⟨e⟩, ω̄ + ᾱ ∧ e*)`, checked directly.
    pub direct_ist: bool,
}

impl LiftReport {
    pub fn conditions(&self) -> [bool; 4] {
        [self.ist_on_kernel, self.lambda_matches, self.v_matches, self.t_matches]
    }

    pub fn all_conditions(&self) -> bool {
        self.conditions().iter().all(|&b| b)
    }

    pub fn routes_agree(&self) -> bool {
        self.all_conditions() == self.direct_ist
    }

    fn failures(&self) -> Vec<String> {
        let names = ["lift (i)", "lift (ii)", "lift (iii)", "lift (iv)"];
        names
            .iter()
            .zip(self.conditions())
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.to_string())
            .collect()
    }
}

/// `D` on `ḡ ⊕ ⟨e⟩`: `x ↦ φx + λ(x) e`, `e ↦ v + t e`.
fn lifted_map(e: &ExtensionData) -> LinearMap {
    let n = e.dim();
    let mut cols: Vec<Vector> = (0..n)
        .map(|j| {
            let mut c = e.phi.column(j).to_vec();
            c.push(e.lambda.coeff(j).clone());
            c
        })
        .collect();
    let mut last = e.v.clone();
    last.push(e.t.clone());
    cols.push(last);
    LinearMap::from_columns(n + 1, cols)
}

pub fn lift_conditions(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    e: &ExtensionData,
) -> Result<LiftReport> {
    let n = base.dim();
    e.check(n)?;
    let b = base_data(base, alpha, omega)?;
    let phi_xi = e.phi.apply(&b.xi);
    let ist_on_kernel = b.h.iter().enumerate().all(|(a, x)| {
        b.h[a + 1..].iter().all(|y| {
            (&omega.eval(&e.phi.apply(x), y) + &omega.eval(x, &e.phi.apply(y))).is_zero()
        })
    });
    let lambda_matches = b
        .h
        .iter()
        .all(|x| e.lambda.eval(x) == omega.eval(x, &phi_xi));
    let v_matches = b
        .h
        .iter()
        .all(|x| omega.eval(&e.v, x) == alpha.eval(&e.phi.apply(x)));
    let t_matches = e.t == -alpha.eval(&phi_xi);
    let big_omega = omega
        .extend(n + 1)
        .add(&alpha.extend(n + 1).wedge(&OneForm::basis(n + 1, n)));
    let direct_ist = ist_defects(&big_omega, &lifted_map(e))?.is_empty();
    Ok(LiftReport {
        ist_on_kernel,
        lambda_matches,
        v_matches,
        t_matches,
        direct_ist,
    })
}

/// A structure produced by one of the constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub algebra: LieAlgebra,
    pub alpha: OneForm,
    pub omega: TwoForm,
    /// The Reeb vector named by the construction (`d`, or `ξ̄`).
    pub reeb: Vector,
    /// Components of `λ` fixed by `t ω̄_φ − ω_{φ,φ} = dλ` (second construction only).
    pub forced_lambda: Vec<(usize, Scalar)>,
}

fn finish(
    algebra: LieAlgebra,
    alpha: OneForm,
    omega: TwoForm,
    reeb: Vector,
    failures: Vec<String>,
    forced_lambda: Vec<(usize, Scalar)>,
) -> Result<Construction> {
    if !failures.is_empty() {
        return Err(Error::ConditionsFail(failures));
    }
    let report = validate(&algebra, &alpha, &omega)?;
    if !report.ok() {
        return Err(Error::ConditionsFail(
            report.failures().into_iter().map(|f| format!("result {f}")).collect(),
        ));
    }
    if !is_reeb(&alpha, &omega, &reeb) {
        return Err(Error::ConditionsFail(vec!["result reeb".to_string()]));
    }
    Ok(Construction {
        algebra,
        alpha,
        omega,
        reeb,
        forced_lambda,
    })
}

/// First construction, assembled without checks: `θ = 0`,
/// `ω = ω̄ + ᾱ ∧ e*`, `α = d*`.
pub fn assemble_a(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    e: &ExtensionData,
) -> Result<(LieAlgebra, OneForm, TwoForm)> {
    let n = base.dim();
    let mut e = e.clone();
    e.theta = TwoForm::zero(n);
    let g = assemble(base, &e)?;
    let w = omega
        .extend(n + 2)
        .add(&alpha.extend(n + 2).wedge(&OneForm::basis(n + 2, n + 1)));
    Ok((g, OneForm::basis(n + 2, n), w))
}

pub fn construct_a(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    e: &ExtensionData,
) -> Result<Construction> {
    let n = base.dim();
    e.check(n)?;
    let b = base_data(base, alpha, omega)?;
    let mut failures = Vec::new();
    if !e.theta.is_zero() {
        failures.push("theta = 0".to_string());
    }
    failures.extend(lift_conditions(base, alpha, omega, e)?.failures());
    if !base.is_derivation(&e.phi)? {
        failures.push("phi derivation".to_string());
    }
    if !is_central(base, &e.v) {
        failures.push("v central".to_string());
    }
    let phi_xi = e.phi.apply(&b.xi);
    let on_brackets = b.h.iter().enumerate().all(|(a, x)| {
        b.h[a + 1..]
            .iter()
            .all(|y| omega.eval(&base.bracket(x, y).unwrap(), &phi_xi).is_zero())
    });
    if !on_brackets {
        failures.push("omega([x,y], phi(xi)) = 0".to_string());
    }
    let u = base.bracket(&phi_xi, &b.xi)?;
    if !b.h.iter().all(|x| omega.eval(&u, x).is_zero()) {
        failures.push("omega([phi(xi), xi], x) = 0".to_string());
    }
    let (g, a, w) = assemble_a(base, alpha, omega, e)?;
    finish(g, a, w, basis_vector(n + 2, n), failures, Vec::new())
}

/// Which components of `λ` are fixed by `dλ = rhs`, with their values, and
/// whether the system is solvable at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSystem {
    pub forced: Vec<(usize, Scalar)>,
    pub consistent: bool,
}

pub fn solve_d_lambda(base: &LieAlgebra, rhs: &TwoForm) -> Result<LambdaSystem> {
    base.require_rational()?;
    let n = base.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    // dλ(e_i,e_j) = −Σ_k c_ij^k λ_k
    let m: Vec<Vec<Rational>> = pairs
        .iter()
        .map(|&(i, j)| {
            base.basis_bracket(i, j)
                .iter()
                .map(|c| -c.as_rational().unwrap().clone())
                .collect()
        })
        .collect();
    let r: Vec<Scalar> = pairs.iter().map(|&(i, j)| rhs.coeff(i, j)).collect();
    let mt = linalg::transpose(&m);
    let zero = Rational::from_integer(0.into());
    let combine = |y: &[Rational]| -> Scalar {
        y.iter()
            .zip(&r)
            .filter(|(a, _)| **a != zero)
            .map(|(a, s)| s.scale(a))
            .sum()
    };
    let mut forced = Vec::new();
    for k in 0..n {
        let target: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(((i == k) as i64).into()))
            .collect();
        if let Some(y) = linalg::solve_any(&mt, &target, pairs.len()) {
            forced.push((k, combine(&y)));
        }
    }
    // left null space of m: w with wᵀ m = 0, i.e. mᵀ w = 0
    let consistent = if pairs.is_empty() {
        true
    } else {
        linalg::nullspace(&mt, pairs.len())
            .iter()
            .all(|w| combine(w).is_zero())
    };
    Ok(LambdaSystem { forced, consistent })
}

/// Second construction, assembled without checks: `θ = ω̄_φ`, `v = 0`,
/// `ω = ω̄ + d* ∧ e*`, `α = ᾱ + α_d d*`.
pub fn assemble_b(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    e: &ExtensionData,
    alpha_d: &Scalar,
) -> Result<(LieAlgebra, OneForm, TwoForm)> {
    let n = base.dim();
    let mut e = e.clone();
    e.theta = omega.twisted(&e.phi);
    e.v = zero_vector(n);
    let g = assemble(base, &e)?;
    let w = omega
        .extend(n + 2)
        .add(&OneForm::basis(n + 2, n).wedge(&OneForm::basis(n + 2, n + 1)));
    let mut a = alpha.extend(n + 2);
    a.set(n, alpha_d.clone());
    Ok((g, a, w))
}

pub fn construct_b(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    e: &ExtensionData,
    alpha_d: &Scalar,
) -> Result<Construction> {
    let n = base.dim();
    e.check(n)?;
    let b = base_data(base, alpha, omega)?;
    let omega_phi = omega.twisted(&e.phi);
    let mut failures = Vec::new();
    if !e.theta.is_zero() && e.theta != omega_phi {
        failures.push("theta = omega_phi".to_string());
    }
    if !is_zero_vector(&e.v) {
        failures.push("v = 0".to_string());
    }
    if !base.is_derivation(&e.phi)? {
        failures.push("phi derivation".to_string());
    }
    if !alpha.compose(&e.phi).is_zero() {
        failures.push("alpha o phi = 0".to_string());
    }
    let omega_phi_phi = omega_phi.twisted(&e.phi);
    let rhs = omega_phi.scale(&e.t).sub(&omega_phi_phi);
    if rhs != d1(base, &e.lambda)? {
        failures.push("t omega_phi - omega_phi_phi = d lambda".to_string());
    }
    let forced_lambda = solve_d_lambda(base, &rhs)?.forced;
    let (g, a, w) = assemble_b(base, alpha, omega, e, alpha_d)?;
    let mut xi = b.xi.clone();
    xi.extend([Scalar::zero(), Scalar::zero()]);
    finish(g, a, w, xi, failures, forced_lambda)
}

/// Third construction, assembled without checks: `λ = ᾱ∘φ`, `t = ᾱ(v)`,
/// `θ = 0`, `ω = ω̄ + d* ∧ e*`, `α = ᾱ + α_d d* − e*`.
pub fn assemble_c(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    phi: &LinearMap,
    v: &[Scalar],
    alpha_d: &Scalar,
) -> Result<(LieAlgebra, OneForm, TwoForm)> {
    let n = base.dim();
    let e = third_data(alpha, phi, v);
    let g = assemble(base, &e)?;
    let w = omega
        .extend(n + 2)
        .add(&OneForm::basis(n + 2, n).wedge(&OneForm::basis(n + 2, n + 1)));
    let mut a = alpha.extend(n + 2);
    a.set(n, alpha_d.clone());
    a.set(n + 1, Scalar::int(-1));
    Ok((g, a, w))
}

/// The extension data the third construction forces.
pub fn third_data(alpha: &OneForm, phi: &LinearMap, v: &[Scalar]) -> ExtensionData {
    let n = alpha.dim();
    ExtensionData {
        phi: phi.clone(),
        lambda: alpha.compose(phi),
        v: v.to_vec(),
        t: alpha.eval(v),
        theta: TwoForm::zero(n),
    }
}

pub fn construct_c(
    base: &LieAlgebra,
    alpha: &OneForm,
    omega: &TwoForm,
    phi: &LinearMap,
    v: &[Scalar],
    alpha_d: &Scalar,
) -> Result<Construction> {
    let n = base.dim();
    third_data(alpha, phi, v).check(n)?;
    let b = base_data(base, alpha, omega)?;
    let mut failures = Vec::new();
    if !base.is_derivation(phi)? {
        failures.push("phi derivation".to_string());
    }
    if !omega.twisted(phi).is_zero() {
        failures.push("omega_phi = 0".to_string());
    }
    let on_brackets = (0..n).all(|i| {
        (i + 1..n).all(|j| alpha.eval(&phi.apply(&base.basis_bracket(i, j))).is_zero())
    });
    if !on_brackets {
        failures.push("alpha(phi[x,y]) = 0".to_string());
    }
    if !is_central(base, v) {
        failures.push("v central".to_string());
    }
    if !omega.interior(v).is_zero() {
        failures.push("v in ker omega".to_string());
    }
    let (g, a, w) = assemble_c(base, alpha, omega, phi, v, alpha_d)?;
    let mut xi = b.xi.clone();
    xi.extend([Scalar::zero(), Scalar::zero()]);
    finish(g, a, w, xi, failures, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gbar() -> (LieAlgebra, OneForm, TwoForm) {
        (
            LieAlgebra::from_table(3, &[(1, 2, &[(1, 1)])]).unwrap(),
            OneForm::basis(3, 2),
            TwoForm::basis(3, 0, 1),
        )
    }

    fn heis() -> LieAlgebra {
        LieAlgebra::from_table(3, &[(1, 2, &[(1, 3)])]).unwrap()
    }

    /// φ = s·(e3 ↦ e3), θ = e^{12}, v = e3, t = 1, λ = −e³ on the Heisenberg algebra.
    fn signed_case(s: i64) -> ExtensionData {
        let mut e = ExtensionData::zero(3);
        e.phi.set_column(2, vec![Scalar::zero(), Scalar::zero(), Scalar::int(s)]);
        e.theta = TwoForm::basis(3, 0, 1);
        e.v = basis_vector(3, 2);
        e.t = Scalar::one();
        e.lambda = OneForm::basis(3, 2).scale(&Scalar::int(-1));
        e
    }

    #[test]
    fn sign_of_theta_v_is_fixed_by_jacobi() {
        let good = signed_case(-1);
        assert!(extension_conditions(&heis(), &good).unwrap().ok());
        assert!(assemble(&heis(), &good).unwrap().jacobi_defects().is_empty());
        assert!(!derivation_condition_opposite_sign(&heis(), &good).unwrap());

        let bad = signed_case(1);
        assert!(derivation_condition_opposite_sign(&heis(), &bad).unwrap());
        assert!(!extension_conditions(&heis(), &bad).unwrap().ok());
        assert!(!assemble(&heis(), &bad).unwrap().jacobi_defects().is_empty());
    }

    #[test]
    fn non_derivation_is_rejected() {
        let g31 = LieAlgebra::from_table(3, &[(2, 3, &[(1, 1)])]).unwrap();
        let mut e = ExtensionData::zero(3);
        e.phi = LinearMap::identity(3);
        match double_extend(&g31, &e) {
            Err(Error::ConditionsFail(f)) => {
                assert!(f.contains(&"dphi = -theta v".to_string()));
                assert!(f.contains(&"jacobi".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(double_extend(&LieAlgebra::abelian(3), &ExtensionData::zero(3)).unwrap(), LieAlgebra::abelian(5));
    }

    #[test]
    fn lift_routes_agree_on_a_broken_t() {
        let (g, a, w) = gbar();
        let mut e = ExtensionData::zero(3);
        e.phi.set_column(2, vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        e.t = Scalar::int(-1);
        let ok = lift_conditions(&g, &a, &w, &e).unwrap();
        assert!(ok.all_conditions() && ok.direct_ist);
        e.t = Scalar::zero();
        let bad = lift_conditions(&g, &a, &w, &e).unwrap();
        assert!(!bad.t_matches && !bad.direct_ist);
    }

    #[test]
    fn forced_lambda_in_second_construction() {
        let (g, a, w) = gbar();
        let mut e = ExtensionData::zero(3);
        // φ(e1) = a e1, φ(e2) = b e1 with symbolic a, b, t
        e.phi.set_column(0, vec![Scalar::var("a"), Scalar::zero(), Scalar::zero()]);
        e.phi.set_column(1, vec![Scalar::var("b"), Scalar::zero(), Scalar::zero()]);
        e.t = Scalar::var("t");
        let omega_phi = w.twisted(&e.phi);
        let rhs = omega_phi.scale(&e.t).sub(&omega_phi.twisted(&e.phi));
        let sys = solve_d_lambda(&g, &rhs).unwrap();
        assert!(sys.consistent);
        assert_eq!(sys.forced, vec![(0, Scalar::parse("a^2-a*t").unwrap())]);
        let _ = a;
    }
}

//! Randomized equivalence trials.
//!
//! Each suite states an "if and only if" between two independently computed
//! predicates and counts the trials where they disagree. Inputs are built so
//! that both outcomes actually occur: a trial starts from data satisfying the
//! conditions and, half of the time, has one entry knocked off.

use serde::Serialize;

use crate::catalog::{entries, heisenberg, validated_samples, Sample};
use crate::cosymplectic::{
    from_symplectic_derivation, kernel_symplectic, phi_map, to_symplectic, validate,
    CosymplecticStructure,
};
use crate::error::Result;
use crate::exterior::{cocycle_spaces, d1, d2, volume_coeff, OneForm, TwoForm};
use crate::extensions::{assemble, extension_conditions, lift_conditions, ExtensionData};
use crate::lie::{check_isomorphism, Forms, LieAlgebra, LinearMap, Vector};
use crate::sampling::{Sampler, Sampling};
use crate::scalars::{linalg, Rational, Scalar};

pub const EXTENSION_TRIALS_PER_BASE: usize = 200;
pub const LIFT_TRIALS: usize = 240;
pub const VOLUME_POINTS: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub trials: usize,
    /// Trials where both sides held.
    pub positives: usize,
    pub counterexamples: Vec<String>,
}

impl PropertyReport {
    fn new(name: &'static str) -> Self {
        PropertyReport {
            name,
            trials: 0,
            positives: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, left: bool, right: bool, what: impl FnOnce() -> String) {
        self.trials += 1;
        if left && right {
            self.positives += 1;
        }
        if left != right {
            self.counterexamples.push(format!("{} ({left} vs {right})", what()));
        }
    }

    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn values() -> [Rational; 7] {
    [q(-2, 1), q(-1, 1), q(0, 1), q(0, 1), q(1, 1), q(2, 1), q(1, 2)]
}

fn nonzero() -> [Rational; 5] {
    [q(-2, 1), q(-1, 1), q(1, 1), q(2, 1), q(1, 2)]
}

fn sc(l: &LieAlgebra, i: usize, j: usize, k: usize) -> Rational {
    l.structure_constant(i, j, k)
        .as_rational()
        .cloned()
        .expect("rational base algebra")
}

fn scalars(v: &[Rational]) -> Vector {
    v.iter().cloned().map(Scalar::Rat).collect()
}

fn rational(s: &Scalar) -> Rational {
    s.as_rational().cloned().expect("rational data")
}

/// A random combination of `basis` with coefficients from `values()`.
fn combination(basis: &[Vec<Rational>], len: usize, s: &mut Sampler) -> Vec<Rational> {
    let mut out = vec![q(0, 1); len];
    for b in basis {
        let c = s.pick(&values()).clone();
        for (o, x) in out.iter_mut().zip(b) {
            *o += &c * x;
        }
    }
    out
}

fn one_form_coeffs(a: &OneForm) -> Vec<Rational> {
    a.coeffs().iter().map(rational).collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn two_form_coeffs(w: &TwoForm) -> Vec<Rational> {
    pairs(w.dim()).into_iter().map(|(i, j)| rational(&w.coeff(i, j))).collect()
}

fn two_form(n: usize, c: &[Rational]) -> TwoForm {
    let mut w = TwoForm::zero(n);
    for ((i, j), x) in pairs(n).into_iter().zip(c) {
        w.set(i, j, Scalar::Rat(x.clone()));
    }
    w
}

// ---------------------------------------------------------------------------
// extension conditions ⟺ Jacobi of the assembled bracket

/// Rational Lie algebras used as `ḡ`.
pub fn extension_bases() -> Vec<(&'static str, LieAlgebra)> {
    let t = |n, rows: &[(usize, usize, &[(i64, usize)])]| LieAlgebra::from_table(n, rows).expect("valid table");
    vec![
        ("abelian 3", LieAlgebra::abelian(3)),
        ("r2", t(2, &[(1, 2, &[(1, 1)])])),
        ("h3", heisenberg(1)),
        ("g21+g1", t(3, &[(1, 2, &[(1, 1)])])),
        ("g34", t(3, &[(1, 3, &[(1, 1)]), (2, 3, &[(-1, 2)])])),
        ("g35", t(3, &[(1, 3, &[(-1, 2)]), (2, 3, &[(1, 1)])])),
        ("sl2", t(3, &[(1, 2, &[(2, 2)]), (1, 3, &[(-2, 3)]), (2, 3, &[(1, 1)])])),
        ("h3+r", t(4, &[(1, 2, &[(1, 3)])])),
    ]
}

/// Linear systems for `φ` and `λ` over a fixed base.
struct ExtensionSystems {
    n: usize,
    /// Rows `(i<j, k)`, columns `φ_{ab}` at `a·n + b`: the map `φ ↦ ∂φ`.
    partial: Vec<Vec<Rational>>,
    derivations: Vec<Vec<Rational>>,
    /// Rows `i<j`, columns `λ_m`: the map `λ ↦ dλ`.
    d: Vec<Vec<Rational>>,
    z1: Vec<Vec<Rational>>,
    z2: Vec<Vec<Rational>>,
    center: Vec<Vec<Rational>>,
}

impl ExtensionSystems {
    fn new(l: &LieAlgebra) -> Result<Self> {
        let n = l.dim();
        let mut partial = Vec::new();
        for (i, j) in pairs(n) {
            for k in 0..n {
                let mut row = vec![q(0, 1); n * n];
                for m in 0..n {
                    row[k * n + m] += sc(l, i, j, m);
                }
                for a in 0..n {
                    row[a * n + i] -= sc(l, a, j, k);
                    row[a * n + j] -= sc(l, i, a, k);
                }
                partial.push(row);
            }
        }
        let d = pairs(n)
            .into_iter()
            .map(|(i, j)| (0..n).map(|m| -sc(l, i, j, m)).collect())
            .collect();
        let (z1, z2) = cocycle_spaces(l)?;
        Ok(ExtensionSystems {
            n,
            derivations: linalg::nullspace(&partial, n * n),
            partial,
            d,
            z1: z1.iter().map(one_form_coeffs).collect(),
            z2: z2.iter().map(two_form_coeffs).collect(),
            center: l.center()?,
        })
    }

    /// Data satisfying every condition when the linear systems allow it.
    fn sample(&self, s: &mut Sampler) -> ExtensionData {
        let n = self.n;
        let theta = two_form(n, &combination(&self.z2, n * (n - 1) / 2, s));
        // v in the centre and in ker θ
        let constraint: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                self.center
                    .iter()
                    .map(|c| rational(&theta.eval(&scalars(c), &crate::lie::basis_vector(n, j))))
                    .collect()
            })
            .collect();
        let coeffs = linalg::nullspace(&constraint, self.center.len());
        let allowed: Vec<Vec<Rational>> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![q(0, 1); n];
                for (k, x) in c.iter().enumerate() {
                    for (o, y) in v.iter_mut().zip(&self.center[k]) {
                        *o += x * y;
                    }
                }
                v
            })
            .collect();
        let mut v = combination(&allowed, n, s);
        let rhs = |v: &[Rational]| -> Vec<Rational> {
            pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    let t = rational(&theta.coeff(i, j));
                    v.iter().map(move |x| -(&t * x)).collect::<Vec<_>>()
                })
                .collect()
        };
        let particular = match linalg::solve_any(&self.partial, &rhs(&v), n * n) {
            Some(p) => p,
            None => {
                v = vec![q(0, 1); n];
                vec![q(0, 1); n * n]
            }
        };
        let free = combination(&self.derivations, n * n, s);
        let flat: Vec<Rational> = particular.iter().zip(&free).map(|(a, b)| a + b).collect();
        let phi = LinearMap::from_rational(&flat.chunks(n).map(<[Rational]>::to_vec).collect::<Vec<_>>());
        let t = Scalar::Rat(s.pick(&values()).clone());
        let target = theta.scale(&t).sub(&theta.twisted(&phi));
        let lambda = match linalg::solve_any(&self.d, &two_form_coeffs(&target), n) {
            Some(l) => l,
            None => (0..n).map(|_| s.pick(&values()).clone()).collect(),
        };
        let closed = combination(&self.z1, n, s);
        let lambda: Vec<Rational> = lambda.iter().zip(&closed).map(|(a, b)| a + b).collect();
        ExtensionData {
            phi,
            lambda: OneForm::new(scalars(&lambda)),
            v: scalars(&v),
            t,
            theta,
        }
    }
}

/// Adds a nonzero amount to one entry of `φ`, `λ`, `v`, `t` or `θ`.
fn perturb(e: &mut ExtensionData, s: &mut Sampler) {
    let n = e.dim();
    let np = n * (n - 1) / 2;
    let slot = s.index(n * n + 2 * n + 1 + np);
    let delta = Scalar::Rat(s.pick(&nonzero()).clone());
    if slot < n * n {
        let (r, c) = (slot / n, slot % n);
        let mut col = e.phi.column(c).to_vec();
        col[r] = &col[r] + &delta;
        e.phi.set_column(c, col);
    } else if slot < n * n + n {
        let i = slot - n * n;
        let c = e.lambda.coeff(i) + &delta;
        e.lambda.set(i, c);
    } else if slot < n * n + 2 * n {
        let i = slot - n * n - n;
        e.v[i] = &e.v[i] + &delta;
    } else if slot == n * n + 2 * n {
        e.t = &e.t + &delta;
    } else {
        let (i, j) = pairs(n)[slot - n * n - 2 * n - 1];
        let c = &e.theta.coeff(i, j) + &delta;
        e.theta.set(i, j, c);
    }
}

pub fn extension_trials(sampling: Sampling) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("extension conditions vs jacobi");
    for (b, (label, base)) in extension_bases().into_iter().enumerate() {
        let sys = ExtensionSystems::new(&base)?;
        let mut s = Sampler::new(sampling, 0x100 + b as u64);
        for k in 0..EXTENSION_TRIALS_PER_BASE {
            let mut e = sys.sample(&mut s);
            if s.coin() {
                perturb(&mut e, &mut s);
            }
            let conditions = extension_conditions(&base, &e)?.ok();
            let jacobi = assemble(&base, &e)?.jacobi_defects().is_empty();
            report.record(conditions, jacobi, || format!("{label} trial {k}"));
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// lift conditions ⟺ direct i.s.t. check

fn ist_space(omega: &TwoForm) -> Vec<Vec<Rational>> {
    let m = omega.dim();
    let w = |a: usize, b: usize| rational(&omega.coeff(a, b));
    let rows: Vec<Vec<Rational>> = pairs(m)
        .into_iter()
        .map(|(i, j)| {
            let mut row = vec![q(0, 1); m * m];
            for a in 0..m {
                row[a * m + i] += w(a, j);
                row[a * m + j] += w(i, a);
            }
            row
        })
        .collect();
    linalg::nullspace(&rows, m * m)
}

/// Structures the lift trials run on: every dim-3 sample, plus the first
/// dim-5 family instance.
fn lift_bases() -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    let mut five = false;
    for e in entries() {
        if e.dim() == 3 || (e.dim() == 5 && !five) {
            let got = validated_samples(e)?;
            five |= e.dim() == 5 && !got.is_empty();
            out.extend(got);
        }
    }
    Ok(out)
}

pub fn lift_trials(sampling: Sampling) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("lift conditions vs direct ist");
    let bases = lift_bases()?;
    let spaces: Vec<Vec<Vec<Rational>>> = bases
        .iter()
        .map(|b| {
            let n = b.algebra.dim();
            let big = b
                .omega
                .extend(n + 1)
                .add(&b.alpha.extend(n + 1).wedge(&OneForm::basis(n + 1, n)));
            ist_space(&big)
        })
        .collect();
    let mut s = Sampler::new(sampling, 0x200);
    for k in 0..LIFT_TRIALS {
        let b = &bases[k % bases.len()];
        let n = b.algebra.dim();
        let m = n + 1;
        let mut d = combination(&spaces[k % bases.len()], m * m, &mut s);
        if s.coin() {
            let slot = s.index(m * m);
            d[slot] += s.pick(&nonzero());
        }
        let at = |a: usize, c: usize| Scalar::Rat(d[a * m + c].clone());
        let e = ExtensionData {
            phi: LinearMap::from_matrix(&(0..n).map(|a| (0..n).map(|c| at(a, c)).collect()).collect::<Vec<_>>()),
            lambda: OneForm::new((0..n).map(|c| at(n, c)).collect()),
            v: (0..n).map(|a| at(a, n)).collect(),
            t: at(n, n),
            theta: TwoForm::zero(n),
        };
        let r = lift_conditions(&b.algebra, &b.alpha, &b.omega, &e)?;
        report.record(r.all_conditions(), r.direct_ist, || format!("{} trial {k}", b.label));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// cosymplectic ⟺ symplectization symplectic

/// The sample itself and versions with a non-closed `α`, a non-closed `ω`,
/// `α = 0`, and `ω = 0`.
fn broken_variants(b: &Sample) -> Result<Vec<(String, OneForm, TwoForm)>> {
    let n = b.algebra.dim();
    let mut out = vec![("as is".to_string(), b.alpha.clone(), b.omega.clone())];
    for k in 0..n {
        let a = b.alpha.add(&OneForm::basis(n, k));
        if !d1(&b.algebra, &a)?.is_zero() {
            out.push((format!("alpha + e^{}", k + 1), a, b.omega.clone()));
            break;
        }
    }
    for (i, j) in pairs(n) {
        let w = b.omega.add(&TwoForm::basis(n, i, j));
        if !d2(&b.algebra, &w)?.is_zero() {
            out.push((format!("omega + e^{}{}", i + 1, j + 1), b.alpha.clone(), w));
            break;
        }
    }
    out.push(("alpha = 0".to_string(), OneForm::zero(n), b.omega.clone()));
    out.push(("omega = 0".to_string(), b.alpha.clone(), TwoForm::zero(n)));
    Ok(out)
}

pub fn symplectization_checks() -> Result<PropertyReport> {
    let mut report = PropertyReport::new("cosymplectic vs symplectization");
    for e in entries() {
        for b in validated_samples(e)? {
            for (what, a, w) in broken_variants(&b)? {
                let cosym = validate(&b.algebra, &a, &w)?.ok();
                let sym = to_symplectic(&b.algebra, &a, &w)?.validate()?.ok();
                report.record(cosym, sym, || format!("{}: {what}", b.label));
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// kernel decomposition round trip

pub fn kernel_round_trips() -> Result<PropertyReport> {
    let mut report = PropertyReport::new("kernel round trip");
    for e in entries().iter().filter(|e| e.dim() == 3) {
        for b in validated_samples(e)? {
            let s = CosymplecticStructure::new(b.algebra.clone(), b.alpha.clone(), b.omega.clone())?;
            let k = kernel_symplectic(&s)?;
            let back = from_symplectic_derivation(&k.pair, &k.derivation)?;
            let iso = check_isomorphism(
                back.algebra(),
                s.algebra(),
                &k.basis,
                Forms::new(back.alpha(), back.omega()),
                Forms::new(s.alpha(), s.omega()),
            )?;
            report.record(true, iso.ok(), || b.label.clone());
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// α ∧ ωⁿ = 0 ⟺ det Φ = 0

/// Rational algebras for the volume trials: each catalog sample and `H₃, H₅, H₇`.
fn volume_algebras() -> Result<Vec<(String, LieAlgebra)>> {
    let mut out = Vec::new();
    for e in entries() {
        if let Some(b) = validated_samples(e)?.into_iter().next() {
            out.push((b.label, b.algebra));
        }
    }
    for n in 1..=3 {
        out.push((format!("heisenberg n={n}"), heisenberg(n)));
    }
    Ok(out)
}

pub fn volume_trials(sampling: Sampling) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("volume vs det phi");
    for (idx, (label, l)) in volume_algebras()?.into_iter().enumerate() {
        let n = l.dim();
        let (z1, z2) = cocycle_spaces(&l)?;
        let z1: Vec<Vec<Rational>> = z1.iter().map(one_form_coeffs).collect();
        let z2: Vec<Vec<Rational>> = z2.iter().map(two_form_coeffs).collect();
        let mut s = Sampler::new(sampling, 0x300 + idx as u64);
        for k in 0..VOLUME_POINTS {
            let a = OneForm::new(scalars(&combination(&z1, n, &mut s)));
            let w = two_form(n, &combination(&z2, n * (n - 1) / 2, &mut s));
            let vol = volume_coeff(&l, &a, &w)?;
            let phi = linalg::rational_matrix(&phi_map(&l, &a, &w)?).expect("rational forms");
            let det = linalg::det(&phi);
            report.record(!vol.is_zero(), det != q(0, 1), || format!("{label} point {k}"));
        }
    }
    Ok(report)
}

/// Every suite, in a fixed order.
pub fn run_all(sampling: Sampling) -> Result<Vec<PropertyReport>> {
    Ok(vec![
        extension_trials(sampling)?,
        lift_trials(sampling)?,
        symplectization_checks()?,
        kernel_round_trips()?,
        volume_trials(sampling)?,
    ])
}

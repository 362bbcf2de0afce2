//! Re-checks every catalog entry from scratch.
//!
//! Checks that compare against a printed artifact (nondegeneracy polynomials,
//! the span of a printed family, a printed product table on a structure other
//! than the entry's own) are *flagged*: a flagged failure marks the entry as
//! deviating from its source but does not fail the run. Any failure, flagged
//! or not, shows up in the entry's `flag`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{entries, heisenberg, CatalogEntry, EntryKind, LsaExpectation};
use crate::cosymplectic::{
    biinvariance, cosymplectic_lsa, exists_cosymplectic, left_symmetry_defect, reeb,
    reeb_derivation_defects, validate,
};
use crate::error::Result;
use crate::exterior::{cocycle_spaces, d1, d2, volume_coeff, OneForm, TwoForm};
use crate::lie::{check_isomorphism, format_vector, Forms, LieAlgebra};
use crate::sampling::{Sampler, Sampling};
use crate::scalars::{linalg, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub flagged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            flagged: false,
            defect: None,
            detail: None,
        }
    }

    fn flagged(mut self) -> Self {
        self.flagged = true;
        self
    }

    fn defect(mut self, d: impl Into<String>) -> Self {
        if !self.pass {
            self.defect = Some(d.into());
        }
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    fn error(name: impl Into<String>, e: crate::Error) -> Self {
        Check::new(name, false).defect(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub kind: EntryKind,
    /// `matches-printed`, or `deviates-from-printed: <checks>`.
    pub flag: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    /// Every unflagged check passes.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass || c.flagged)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryReport>,
    pub ok: bool,
}

/// Sample values for parameters, in order of preference.
fn samples() -> [Rational; 4] {
    [ri(1), ri(2), ri(-1), Rational::new(1.into(), 2.into())]
}

fn ri(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

const VANISHING_POINTS: usize = 200;
const INSTANCE_ATTEMPTS: usize = 4096;

fn structure_sample(e: &CatalogEntry) -> BTreeMap<String, Rational> {
    e.structure_params
        .iter()
        .filter(|p| p.as_str() != "n")
        .map(|p| {
            let bad = e.excluded(p);
            let v = samples().into_iter().find(|v| !bad.contains(v)).expect("some sample admissible");
            (p.clone(), v)
        })
        .collect()
}

fn forms(e: &CatalogEntry) -> (OneForm, TwoForm) {
    (
        e.file.alpha.clone().expect("entry has forms"),
        e.file.omega.clone().expect("entry has forms"),
    )
}

fn show_assignment(a: &BTreeMap<String, Rational>) -> String {
    a.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// Checks that run on any validated rational structure.
fn structure_checks(suffix: &str, l: &LieAlgebra, a: &OneForm, w: &TwoForm) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |n: &str| format!("{n}{suffix}");
    match cosymplectic_lsa::<Rational>(l, a, w) {
        Ok(t) => {
            out.push(Check::new(name("lsa routes agree"), true));
            match left_symmetry_defect(&t, l) {
                Ok(d) => out.push(Check::new(name("left symmetry"), d.ok()).defect(format!(
                    "{} commutator and {} left-symmetry defects",
                    d.commutator.len(),
                    d.left_symmetry.len()
                ))),
                Err(e) => out.push(Check::error(name("left symmetry"), e)),
            }
        }
        Err(e) => {
            out.push(Check::error(name("lsa routes agree"), e));
        }
    }
    match reeb_derivation_defects::<Rational>(l, a, w) {
        Ok(d) => out.push(Check::new(name("reeb derivation"), d.is_empty()).defect(format!("pairs {d:?}"))),
        Err(e) => out.push(Check::error(name("reeb derivation"), e)),
    }
    match biinvariance::<Rational>(l, a, w) {
        Ok(b) => out.push(
            Check::new(name("biinvariance consistent"), b.consistent()).detail(format!(
                "failed conditions {:?}, associative {}",
                b.failed_conditions, b.associative
            )),
        ),
        Err(e) => out.push(Check::error(name("biinvariance consistent"), e)),
    }
    out
}

fn closure_checks(l: &LieAlgebra, a: &OneForm, w: &TwoForm) -> Result<Vec<Check>> {
    let jac = l.jacobi_defects();
    let da = d1(l, a)?;
    let dw = d2(l, w)?;
    Ok(vec![
        Check::new("jacobi", jac.is_empty()).defect(format!(
            "{} triples, first ({},{},{})",
            jac.len(),
            jac.first().map_or(0, |d| d.i + 1),
            jac.first().map_or(0, |d| d.j + 1),
            jac.first().map_or(0, |d| d.k + 1)
        )),
        Check::new("d alpha", da.is_zero()).defect(format!("d alpha = {da}")),
        Check::new("d omega", dw.is_zero()).defect(format!("d omega = {dw}")),
    ])
}

/// The printed polynomial against the computed `α ∧ ωⁿ` coefficient: an exact
/// constant multiple, or else the same zero set on fixed sample points.
fn nondegeneracy_check(e: &CatalogEntry, index: usize, sampling: Sampling) -> Result<Check> {
    let (a, w) = forms(e);
    let printed = e.nondeg.clone().expect("family has a printed polynomial");
    let vol = volume_coeff(&e.file.algebra, &a, &w)?;
    if let Some(q) = vol.div_exact(&printed) {
        if q.is_rational() && !q.is_zero() {
            return Ok(Check::new("nondegeneracy", true)
                .flagged()
                .detail(format!("volume {vol} = ({q}) * printed")));
        }
    }
    let structure = structure_sample(e);
    let values = [ri(-2), ri(-1), ri(0), ri(1), ri(2), Rational::new(1.into(), 2.into())];
    let mut sampler = Sampler::new(sampling, index as u64);
    let names = e.family_params();
    for _ in 0..VANISHING_POINTS {
        let mut point = structure.clone();
        for n in &names {
            point.insert(n.clone(), sampler.pick(&values).clone());
        }
        let (p, v) = (printed.eval(&point)?, vol.eval(&point)?);
        if (p == ri(0)) != (v == ri(0)) {
            return Ok(Check::new("nondegeneracy", false).flagged().defect(format!(
                "volume {vol}; at {} printed = {p}, computed = {v}",
                show_assignment(&point)
            )));
        }
    }
    Ok(Check::new("nondegeneracy", true).flagged().detail(format!(
        "volume {vol}; same zero set on {VANISHING_POINTS} points"
    )))
}

fn flat(a: &OneForm, w: &TwoForm) -> Vec<Scalar> {
    let n = a.dim();
    let mut v = a.coeffs().to_vec();
    for i in 0..n {
        for j in i + 1..n {
            v.push(w.coeff(i, j));
        }
    }
    v
}

fn as_rationals(v: &[Scalar]) -> Option<Vec<Rational>> {
    v.iter().map(|s| s.as_rational().cloned()).collect()
}

/// Coefficient vectors of each form parameter (the families are linear in them).
fn family_directions(e: &CatalogEntry, structure: &BTreeMap<String, Rational>) -> Vec<Vec<Rational>> {
    let (a, w) = forms(e);
    let names = e.family_params();
    names
        .iter()
        .map(|p| {
            let mut at = structure.clone();
            for q in &names {
                at.insert(q.clone(), ri((q == p) as i64));
            }
            as_rationals(&flat(&a.substitute(&at), &w.substitute(&at))).expect("fully substituted")
        })
        .collect()
}

fn span_check(e: &CatalogEntry) -> Result<Check> {
    let structure = structure_sample(e);
    let l = e.file.algebra.substitute(&structure);
    let (z1, z2) = cocycle_spaces(&l)?;
    let n = l.dim();
    let zero1 = OneForm::zero(n);
    let zero2 = TwoForm::zero(n);
    let z: Vec<Vec<Rational>> = z1
        .iter()
        .map(|b| as_rationals(&flat(b, &zero2)).expect("rational"))
        .chain(z2.iter().map(|b| as_rationals(&flat(&zero1, b)).expect("rational")))
        .collect();
    let fam = family_directions(e, &structure);
    let rz = linalg::rank(&z);
    let rf = linalg::rank(&fam);
    let joined: Vec<Vec<Rational>> = z.iter().chain(&fam).cloned().collect();
    let rj = linalg::rank(&joined);
    let inside = rj == rz;
    let span = if !inside {
        "not contained in Z1+Z2"
    } else if rf == rz {
        "spans Z1+Z2"
    } else {
        "proper subspace of Z1+Z2"
    };
    let at = if structure.is_empty() {
        String::new()
    } else {
        format!(" at {}", show_assignment(&structure))
    };
    Ok(Check::new("family cocycle span", inside)
        .flagged()
        .detail(format!("dim Z1+Z2 = {rz}, family rank {rf}, joint rank {rj}{at}; {span}"))
        .defect("family contains non-closed forms"))
}

/// Mixed-radix walk over the sample values until a structure validates.
fn find_instance(e: &CatalogEntry) -> Result<Option<BTreeMap<String, Rational>>> {
    let structure = structure_sample(e);
    let names = e.family_params();
    let s = samples();
    let total = s.len().checked_pow(names.len() as u32).unwrap_or(usize::MAX);
    for mut k in 0..total.min(INSTANCE_ATTEMPTS) {
        let mut point = structure.clone();
        for n in &names {
            point.insert(n.clone(), s[k % s.len()].clone());
            k /= s.len();
        }
        if let Some(nd) = &e.nondeg {
            if nd.eval(&point)? == ri(0) {
                continue;
            }
        }
        let f = e.file.bind(&point);
        let (a, w) = (f.alpha.unwrap(), f.omega.unwrap());
        if validate(&f.algebra, &a, &w)?.ok() {
            return Ok(Some(point));
        }
    }
    Ok(None)
}

fn family_report(e: &CatalogEntry, index: usize, sampling: Sampling) -> Result<Vec<Check>> {
    let (a, w) = forms(e);
    let mut out = closure_checks(&e.file.algebra, &a, &w)?;
    out.push(nondegeneracy_check(e, index, sampling)?);
    out.push(span_check(e)?);
    match find_instance(e)? {
        Some(point) => {
            out.push(Check::new("instance validates", true).detail(show_assignment(&point)));
            let f = e.file.bind(&point);
            out.extend(structure_checks("", &f.algebra, f.alpha.as_ref().unwrap(), f.omega.as_ref().unwrap()));
        }
        None => out.push(Check::new("instance validates", false).defect(format!(
            "no validating assignment among the first {INSTANCE_ATTEMPTS} sample points"
        ))),
    }
    Ok(out)
}

fn lsa_table_check(
    name: &str,
    l: &LieAlgebra,
    exp: &LsaExpectation,
    a: &OneForm,
    w: &TwoForm,
    lam: &Rational,
) -> Check {
    let at: BTreeMap<String, Rational> = [("lam".to_string(), lam.clone())].into();
    let (a, w) = (a.substitute(&at), w.substitute(&at));
    let n = l.dim();
    let mut expected = vec![vec![vec![ri(0); n]; n]; n];
    for (i, j, v) in (exp.products)(lam) {
        expected[i][j] = v;
    }
    match cosymplectic_lsa::<Rational>(l, &a, &w) {
        Ok(t) => {
            let mut bad = Vec::new();
            for (i, row) in expected.iter().enumerate() {
                for (j, want) in row.iter().enumerate() {
                    if t.get(i, j) != want.as_slice() {
                        bad.push(format!("e{}.e{}", i + 1, j + 1));
                    }
                }
            }
            Check::new(name, bad.is_empty()).defect(format!("products differ at {}", bad.join(", ")))
        }
        Err(e) => Check::error(name, e),
    }
}

fn normal_form_report(e: &CatalogEntry) -> Result<Vec<Check>> {
    let nf = e.normal_form.as_ref().expect("normal form data");
    let (a, w) = forms(e);
    let l = &e.file.algebra;
    let mut out = Vec::new();
    let has_lam = e.params().contains("lam");
    let lams: Vec<Rational> = if has_lam {
        samples().into_iter().filter(|v| e.admits_lam(v)).collect()
    } else {
        vec![ri(1)]
    };
    for lam in &lams {
        let at: BTreeMap<String, Rational> = [("lam".to_string(), lam.clone())].into();
        let suffix = if has_lam { format!(" lam={lam}") } else { String::new() };
        let (a, w) = (a.substitute(&at), w.substitute(&at));
        let rep = validate(l, &a, &w)?;
        out.push(Check::new(format!("validates{suffix}"), rep.ok()).defect(rep.failures().join(", ")));
        if !rep.ok() {
            continue;
        }
        let got = reeb(l, &a, &w)?;
        let want: Vec<Scalar> = (nf.reeb)(lam).into_iter().map(Scalar::Rat).collect();
        out.push(
            Check::new(format!("reeb{suffix}"), got == want)
                .detail(format_vector(&got))
                .defect(format!("expected {}", format_vector(&want))),
        );
    }
    // family membership: solve family(params) = normal form at lam = 1
    let fam = super::find(nf.family)?;
    let at: BTreeMap<String, Rational> = [("lam".to_string(), ri(1))].into();
    let target = as_rationals(&flat(&a.substitute(&at), &w.substitute(&at))).expect("rational");
    let dirs = family_directions(fam, &BTreeMap::new());
    let m = linalg::transpose(&dirs);
    let solution = linalg::solve_any(&m, &target, dirs.len());
    out.push(match &solution {
        Some(x) => {
            let names = fam.family_params();
            let shown: Vec<String> = names
                .iter()
                .zip(x)
                .filter(|(_, v)| **v != ri(0))
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            Check::new("in family", true).detail(shown.join(","))
        }
        None => Check::new("in family", false).defect(format!("forms do not fit {}", fam.name)),
    });
    // witness isomorphism onto a generic member
    let wit = &nf.witness;
    let at: BTreeMap<String, Rational> = [("lam".to_string(), wit.lam.clone())].into();
    let (na, nw) = (a.substitute(&at), w.substitute(&at));
    let m = fam.file.bind(&wit.member);
    let (ma, mw) = (m.alpha.unwrap(), m.omega.unwrap());
    let iso = check_isomorphism(l, &m.algebra, &wit.map, Forms::new(&na, &nw), Forms::new(&ma, &mw))?;
    out.push(
        Check::new("witness isomorphism", iso.ok())
            .detail(format!("lam={} onto {}", wit.lam, show_assignment(&wit.member)))
            .defect(format!("{iso:?}")),
    );
    let first = lams[0].clone();
    let at: BTreeMap<String, Rational> = [("lam".to_string(), first)].into();
    out.extend(structure_checks("", l, &a.substitute(&at), &w.substitute(&at)));
    if let Some(exp) = &e.lsa_table {
        for lam in [ri(1), ri(2)] {
            let mut c = lsa_table_check(&format!("lsa table lam={lam}"), l, exp, &exp.alpha, &exp.omega, &lam);
            if let Some(note) = exp.note {
                c = c.detail(note);
            }
            out.push(c);
        }
        if exp.note.is_some() {
            out.push(lsa_table_check("lsa table on own forms lam=1", l, exp, &a, &w, &ri(1)).flagged());
        }
    }
    Ok(out)
}

fn heisenberg_report() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let ex = exists_cosymplectic(&heisenberg(n))?;
        let want = n == 1;
        let detail = if ex.exists() {
            "YES".to_string()
        } else {
            "NO: det Φ ≡ 0 on Z¹×Z²".to_string()
        };
        out.push(Check::new(format!("exists n={n}"), ex.exists() == want).detail(detail));
    }
    Ok(out)
}

fn affine_report(e: &CatalogEntry) -> Result<Vec<Check>> {
    let (a, w) = forms(e);
    let mut out = Vec::new();
    for lam in [ri(0), ri(1)] {
        let at: BTreeMap<String, Rational> = [("lam".to_string(), lam.clone())].into();
        let l = e.file.algebra.substitute(&at);
        let rep = validate(&l, &a, &w)?;
        let dw = d2(&l, &w)?;
        out.push(
            Check::new(format!("validates lam={lam}"), rep.ok())
                .defect(format!("{}; d omega = {dw}", rep.failures().join(", "))),
        );
        out.push(Check::new(format!("non-solvable lam={lam}"), !l.is_solvable()?));
        if rep.ok() {
            out.extend(structure_checks(&format!(" lam={lam}"), &l, &a, &w));
        }
    }
    Ok(out)
}

/// `index` selects the sample stream; `verify_all` uses the entry's position.
pub fn verify_entry(e: &CatalogEntry, index: usize, sampling: Sampling) -> EntryReport {
    let checks = match e.kind {
        EntryKind::Family => family_report(e, index, sampling),
        EntryKind::NormalForm => normal_form_report(e),
        EntryKind::Heisenberg => heisenberg_report(),
        EntryKind::Affine => affine_report(e),
    }
    .unwrap_or_else(|err| vec![Check::error("internal", err)]);
    let deviations: Vec<&str> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    let flag = if deviations.is_empty() {
        "matches-printed".to_string()
    } else {
        format!("deviates-from-printed: {}", deviations.join(", "))
    };
    EntryReport {
        name: e.name.to_string(),
        kind: e.kind,
        flag,
        checks,
    }
}

pub fn verify_all() -> VerifyReport {
    verify_all_with(Sampling::default())
}

pub fn verify_all_with(sampling: Sampling) -> VerifyReport {
    let entries: Vec<EntryReport> = entries()
        .iter()
        .enumerate()
        .map(|(i, e)| verify_entry(e, i, sampling))
        .collect();
    let ok = entries.iter().all(EntryReport::ok);
    VerifyReport { entries, ok }
}

/// A validated rational structure taken from a catalog entry.
#[derive(Clone, Debug)]
pub struct Sample {
    pub label: String,
    pub algebra: LieAlgebra,
    pub alpha: OneForm,
    pub omega: TwoForm,
}

/// Every validated structure the verifier itself looks at: the first
/// validating instance of a family, each admissible sample of a normal form,
/// the existence witness for `H₃`, and whichever affine samples validate.
pub fn validated_samples(e: &CatalogEntry) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    let mut push = |label: String, l: LieAlgebra, a: OneForm, w: TwoForm| -> Result<()> {
        if validate(&l, &a, &w)?.ok() {
            out.push(Sample { label, algebra: l, alpha: a, omega: w });
        }
        Ok(())
    };
    match e.kind {
        EntryKind::Family => {
            if let Some(point) = find_instance(e)? {
                let f = e.file.bind(&point);
                push(
                    format!("{} {}", e.name, show_assignment(&point)),
                    f.algebra,
                    f.alpha.unwrap(),
                    f.omega.unwrap(),
                )?;
            }
        }
        EntryKind::NormalForm => {
            let (a, w) = forms(e);
            let lams: Vec<Rational> = if e.params().contains("lam") {
                samples().into_iter().filter(|v| e.admits_lam(v)).collect()
            } else {
                vec![ri(1)]
            };
            for lam in lams {
                let at: BTreeMap<String, Rational> = [("lam".to_string(), lam.clone())].into();
                push(
                    format!("{} lam={lam}", e.name),
                    e.file.algebra.clone(),
                    a.substitute(&at),
                    w.substitute(&at),
                )?;
            }
        }
        EntryKind::Heisenberg => {
            let h = heisenberg(1);
            if let Some(wit) = exists_cosymplectic(&h)?.witness {
                push(format!("{} n=1", e.name), h, wit.alpha, wit.omega)?;
            }
        }
        EntryKind::Affine => {
            let (a, w) = forms(e);
            for lam in [ri(0), ri(1)] {
                let at: BTreeMap<String, Rational> = [("lam".to_string(), lam.clone())].into();
                push(format!("{} lam={lam}", e.name), e.file.algebra.substitute(&at), a.clone(), w.clone())?;
            }
        }
    }
    Ok(out)
}

//! Classified cosymplectic Lie algebras as data: the three-dimensional
//! families and their normal forms, the five-dimensional families, the
//! Heisenberg algebras and the affine algebra extended by a seventh generator.
//!
//! Entries are stored in the `.alg` text format with symbolic parameters.

mod data;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{OneForm, TwoForm};
use crate::format::{parse_algebra, print_algebra, AlgebraFile};
use crate::lie::{LieAlgebra, LinearMap};
use crate::scalars::{parse_rational, Rational, Scalar};

pub use verify::{
    validated_samples, verify_all, verify_all_with, verify_entry, Check, EntryReport, Sample, VerifyReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    Family,
    NormalForm,
    Heisenberg,
    Affine,
}

/// Products expected from the left-symmetric table, as a function of `lam`.
pub type ProductTable = fn(&Rational) -> Vec<(usize, usize, Vec<Rational>)>;

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub family: &'static str,
    /// Admissible range of `lam`, as printed.
    pub range: &'static str,
    /// Expected Reeb vector at a given `lam`.
    pub reeb: fn(&Rational) -> Vec<Rational>,
    /// `map` sends the normal form at `lam` isomorphically onto the family
    /// member with parameters `member`.
    pub witness: IsoWitness,
}

#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub lam: Rational,
    pub member: BTreeMap<String, Rational>,
    pub map: LinearMap,
}

/// A printed left-symmetric product table and the structure it belongs to.
#[derive(Clone, Debug)]
pub struct LsaExpectation {
    pub alpha: OneForm,
    pub omega: TwoForm,
    pub products: ProductTable,
    /// Set when the table does not come from the entry's own forms.
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    /// Parametric data. For Heisenberg entries this is `H_3`.
    pub file: AlgebraFile,
    /// Parameters of the bracket (as opposed to the forms).
    pub structure_params: Vec<String>,
    pub nondeg: Option<Scalar>,
    pub constraints: Vec<String>,
    pub normal_form: Option<NormalForm>,
    pub lsa_table: Option<LsaExpectation>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.file.algebra.dim()
    }

    /// Every symbol that `instantiate` needs.
    pub fn params(&self) -> BTreeSet<String> {
        if self.kind == EntryKind::Heisenberg {
            return ["n".to_string()].into();
        }
        let mut p = self.file.algebra.variables();
        if let Some(a) = &self.file.alpha {
            p.extend(a.variables());
        }
        if let Some(w) = &self.file.omega {
            p.extend(w.variables());
        }
        p
    }

    /// Form parameters only.
    pub fn family_params(&self) -> Vec<String> {
        self.params()
            .into_iter()
            .filter(|p| !self.structure_params.contains(p))
            .collect()
    }

    /// Values a parameter may not take, from constraints such as
    /// `a not in {-1,0,1}` or `p != 0`.
    pub fn excluded(&self, param: &str) -> Vec<Rational> {
        let mut out = Vec::new();
        for c in &self.constraints {
            if let Some(rest) = c.strip_prefix(&format!("{param} not in {{")) {
                out.extend(
                    rest.trim_end_matches('}')
                        .split(',')
                        .filter_map(|t| parse_rational(t.trim())),
                );
            } else if let Some(rest) = c.strip_prefix(&format!("{param} != ")) {
                out.extend(parse_rational(rest.trim()));
            }
        }
        if self.kind == EntryKind::NormalForm && param == "lam" {
            out.push(Rational::from_integer(0.into()));
        }
        out
    }

    /// Whether `lam` is in the printed range of a normal form.
    pub fn admits_lam(&self, lam: &Rational) -> bool {
        let zero = Rational::from_integer(0.into());
        match self.normal_form.as_ref().map(|n| n.range) {
            Some("lam>0") => lam > &zero,
            Some("lam in R-{0}") => lam != &zero,
            _ => true,
        }
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ri(n: i64) -> Rational {
    r(n, 1)
}

fn parse(text: &str) -> AlgebraFile {
    parse_algebra(text).expect("catalog data parses")
}

fn scalar(text: &str) -> Scalar {
    Scalar::parse(text).expect("catalog polynomial parses")
}

fn member(pairs: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Row-major rational matrix to a linear map.
fn rows(m: &[&[Rational]]) -> LinearMap {
    LinearMap::from_rational(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn inv_sq(lam: &Rational) -> Rational {
    (lam * lam).recip()
}

fn unit(k: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![ri(0); 3];
    v[k] = c;
    v
}

fn normal_form_data(name: &str) -> (NormalForm, Option<LsaExpectation>) {
    let (z, one) = (ri(0), ri(1));
    let lam_e3 = || OneForm::new(vec![Scalar::zero(), Scalar::zero(), Scalar::var("lam")]);
    match name {
        "g_{2.1}⊕g_1-normal-1" => (
            NormalForm {
                family: "g_{2.1}⊕g_1",
                range: "",
                reeb: |_| unit(2, ri(1)),
                witness: IsoWitness {
                    lam: ri(1),
                    member: member(&[("a2", ri(1)), ("a3", ri(2)), ("a12", ri(3)), ("a23", ri(0))]),
                    map: rows(&[&[r(1, 3), z.clone(), z.clone()], &[z.clone(), one.clone(), z.clone()], &[z.clone(), r(-1, 2), r(1, 2)]]),
                },
            },
            Some(LsaExpectation {
                alpha: OneForm::basis(3, 2),
                omega: TwoForm::basis(3, 0, 1),
                products: |_| vec![(0, 1, unit(0, ri(1))), (1, 1, unit(1, ri(1)))],
                note: None,
            }),
        ),
        "g_{2.1}⊕g_1-normal-2" => (
            NormalForm {
                family: "g_{2.1}⊕g_1",
                range: "lam in R-{0}",
                reeb: |lam| vec![lam.recip(), ri(0), lam.recip()],
                witness: IsoWitness {
                    lam: r(2, 5),
                    member: member(&[("a2", ri(1)), ("a3", ri(2)), ("a12", ri(3)), ("a23", ri(5))]),
                    map: rows(&[&[r(1, 3), z.clone(), z.clone()], &[z.clone(), one.clone(), z.clone()], &[z.clone(), r(-1, 2), r(1, 5)]]),
                },
            },
            None,
        ),
        "g_{3.1}-normal" => (
            NormalForm {
                family: "g_{3.1}",
                range: "lam in R-{0}",
                reeb: |lam| unit(1, lam.recip()),
                witness: IsoWitness {
                    lam: r(-1, 5),
                    member: member(&[("a2", ri(1)), ("a3", ri(2)), ("a12", ri(3)), ("a13", ri(1)), ("a23", ri(1))]),
                    map: rows(&[&[r(1, 5), r(-1, 25), z.clone()], &[z.clone(), r(1, 25), ri(2)], &[z.clone(), r(-3, 25), ri(-1)]]),
                },
            },
            Some(LsaExpectation {
                alpha: lam_e3(),
                omega: TwoForm::basis(3, 0, 1),
                products: |lam| vec![(1, 1, unit(2, inv_sq(lam))), (2, 1, unit(0, ri(-1)))],
                note: Some("table reproduced on (lam*e^3, e^12), a member of the family; the normal form (lam*e^2, e^13) gives a different table"),
            }),
        ),
        "g_{3.4}^{-1}-normal" => (
            NormalForm {
                family: "g_{3.4}^{-1}",
                range: "lam>0",
                reeb: |lam| unit(2, lam.recip()),
                witness: IsoWitness {
                    lam: ri(2),
                    member: member(&[("a3", ri(2)), ("a12", ri(2)), ("a13", ri(1)), ("a23", ri(3))]),
                    map: rows(&[&[one.clone(), z.clone(), r(3, 2)], &[z.clone(), r(1, 2), r(-1, 2)], &[z.clone(), z.clone(), one.clone()]]),
                },
            },
            Some(LsaExpectation {
                alpha: lam_e3(),
                omega: TwoForm::basis(3, 0, 1),
                products: |lam| {
                    vec![
                        (0, 1, unit(2, inv_sq(lam))),
                        (1, 0, unit(2, inv_sq(lam))),
                        (2, 0, unit(0, ri(-1))),
                        (2, 1, unit(1, ri(1))),
                    ]
                },
                note: None,
            }),
        ),
        "g_{3.5}^0-normal" => (
            NormalForm {
                family: "g_{3.5}^0",
                range: "lam>0",
                reeb: |lam| unit(2, lam.recip()),
                witness: IsoWitness {
                    lam: ri(2),
                    member: member(&[("a3", ri(2)), ("a12", ri(4)), ("a13", ri(1)), ("a23", ri(1))]),
                    map: rows(&[&[r(1, 2), z.clone(), r(1, 4)], &[z.clone(), r(1, 2), r(-1, 4)], &[z.clone(), z.clone(), one.clone()]]),
                },
            },
            Some(LsaExpectation {
                alpha: lam_e3(),
                omega: TwoForm::basis(3, 0, 1),
                products: |lam| {
                    vec![
                        (0, 0, unit(2, inv_sq(lam))),
                        (1, 1, unit(2, inv_sq(lam))),
                        (2, 0, unit(1, ri(1))),
                        (2, 1, unit(0, ri(-1))),
                    ]
                },
                note: None,
            }),
        ),
        other => unreachable!("no normal form data for {other}"),
    }
}

fn family(row: &data::Row, kind: EntryKind) -> CatalogEntry {
    let (name, structure, text, nondeg, constraint) = *row;
    CatalogEntry {
        name,
        kind,
        file: parse(text),
        structure_params: structure.iter().map(|s| s.to_string()).collect(),
        nondeg: Some(scalar(nondeg)),
        constraints: if constraint.is_empty() {
            Vec::new()
        } else {
            vec![constraint.to_string()]
        },
        normal_form: None,
        lsa_table: None,
    }
}

fn build() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = data::DIM3_FAMILIES
        .iter()
        .map(|row| family(row, EntryKind::Family))
        .collect();
    for &(name, _, text, range) in data::DIM3_NORMAL_FORMS {
        let (nf, lsa) = normal_form_data(name);
        out.push(CatalogEntry {
            name,
            kind: EntryKind::NormalForm,
            file: parse(text),
            structure_params: Vec::new(),
            nondeg: None,
            constraints: if range.is_empty() {
                Vec::new()
            } else {
                vec![range.to_string()]
            },
            normal_form: Some(nf),
            lsa_table: lsa,
        });
    }
    out.extend(data::DIM5_FAMILIES.iter().map(|row| family(row, EntryKind::Family)));
    out.push(CatalogEntry {
        name: "Heisenberg",
        kind: EntryKind::Heisenberg,
        file: AlgebraFile::new(heisenberg(1)),
        structure_params: vec!["n".into()],
        nondeg: None,
        constraints: vec!["n >= 1".into()],
        normal_form: None,
        lsa_table: None,
    });
    out.push(CatalogEntry {
        name: "aff(2,R)⋉<e_7>",
        kind: EntryKind::Affine,
        file: parse(data::AFFINE),
        structure_params: vec!["lam".into()],
        nondeg: None,
        constraints: vec!["lam in R".into()],
        normal_form: None,
        lsa_table: None,
    });
    out
}

pub fn entries() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn list_entries() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

/// Lookup ignoring `_ { } ^` and spaces, with `+` accepted for `⊕` and
/// `x` for `⋉`, so `g2.1+g1-normal-1` finds `g_{2.1}⊕g_1-normal-1`.
fn key(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | '^' | ' '))
        .map(|c| match c {
            '⊕' => '+',
            '⋉' => 'x',
            c => c.to_ascii_lowercase(),
        })
        .collect()
}

pub fn find(name: &str) -> Result<&'static CatalogEntry> {
    let k = key(name);
    entries()
        .iter()
        .find(|e| key(e.name) == k)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// `H_{2n+1}` with basis `e_1..e_n, f_1..f_n, z` and `[e_i, f_i] = z`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    let mut h = LieAlgebra::abelian(dim);
    for i in 0..n {
        h.set_bracket(i, n + i, crate::lie::basis_vector(dim, 2 * n))
            .expect("indices in range");
    }
    h
}

/// A catalog entry with every parameter fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub algebra: LieAlgebra,
    pub alpha: Option<OneForm>,
    pub omega: Option<TwoForm>,
}

impl Instance {
    pub fn file(&self) -> AlgebraFile {
        AlgebraFile {
            algebra: self.algebra.clone(),
            alpha: self.alpha.clone(),
            omega: self.omega.clone(),
            params: BTreeMap::new(),
        }
    }
}

fn heisenberg_n(params: &BTreeMap<String, Rational>) -> Result<usize> {
    let n = params.get("n").ok_or_else(|| Error::MissingParam("n".into()))?;
    if !n.is_integer() || n < &ri(1) {
        return Err(Error::DegenerateParams);
    }
    n.to_integer().try_into().map_err(|_| Error::DegenerateParams)
}

/// Substitutes `params`; every entry parameter must be given. Refuses values
/// where the printed nondegeneracy polynomial vanishes or a printed
/// constraint is violated.
pub fn instantiate(name: &str, params: &BTreeMap<String, Rational>) -> Result<Instance> {
    let e = find(name)?;
    if e.kind == EntryKind::Heisenberg {
        return Ok(Instance {
            algebra: heisenberg(heisenberg_n(params)?),
            alpha: None,
            omega: None,
        });
    }
    for p in e.params() {
        let Some(v) = params.get(&p) else {
            return Err(Error::MissingParam(p));
        };
        if e.excluded(&p).contains(v) {
            return Err(Error::DegenerateParams);
        }
    }
    if let Some(lam) = params.get("lam") {
        if !e.admits_lam(lam) {
            return Err(Error::DegenerateParams);
        }
    }
    if let Some(nd) = &e.nondeg {
        if nd.eval(params)? == ri(0) {
            return Err(Error::DegenerateParams);
        }
    }
    let f = e.file.bind(params);
    Ok(Instance {
        algebra: f.algebra,
        alpha: f.alpha,
        omega: f.omega,
    })
}

/// The entry in the `.alg` format, parameters left symbolic (Heisenberg
/// entries use `n` from `params`, default 1).
pub fn export(name: &str, params: &BTreeMap<String, Rational>) -> Result<String> {
    let e = find(name)?;
    let body = if e.kind == EntryKind::Heisenberg {
        let n = if params.contains_key("n") {
            heisenberg_n(params)?
        } else {
            1
        };
        print_algebra(&AlgebraFile::new(heisenberg(n)))
    } else {
        print_algebra(&e.file.bind(params))
    };
    let mut out = format!("# {}\n", e.name);
    if let Some(nd) = &e.nondeg {
        out.push_str(&format!("# nondegenerate where {nd} != 0\n"));
    }
    for c in &e.constraints {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&body);
    Ok(out)
}

//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Reference data (normal forms, product tables, the worked double
//! extensions, aff(2)) is written out here by hand rather than taken from the
//! catalog, so the catalog is checked against something it did not produce.
//! All comparisons are exact.
//!
//! Two criteria cannot pass as stated, because the printed data they refer to
//! is not closed (see README). They are reported as FAIL. The process exits
//! nonzero only when the outcome differs from that expectation: any other
//! criterion failing, or either of those two unexpectedly passing.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};

use cosymplectic::catalog::{self, validated_samples, EntryKind};
use cosymplectic::cosymplectic::{
    cosymplectic_lsa, exists_cosymplectic, left_symmetry_defect, lsa_routes, reeb,
    reeb_derivation_defects, validate,
};
use cosymplectic::extensions::{construct_a, construct_b, construct_c, Construction, ExtensionData};
use cosymplectic::exterior::{d1, d2, volume_coeff, OneForm, TwoForm};
use cosymplectic::format::parse_algebra;
use cosymplectic::lie::{check_isomorphism, Forms, LieAlgebra, LinearMap};
use cosymplectic::properties::{self, EXTENSION_TRIALS_PER_BASE};
use cosymplectic::sampling::Sampling;
use cosymplectic::{Rational, Scalar};

/// Criteria whose printed inputs fail exact verification.
const EXPECTED_RED: [usize; 2] = [5, 7];

type Outcome = (bool, String);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn s(t: &str) -> Scalar {
    Scalar::parse(t).unwrap()
}

fn alg(text: &str) -> cosymplectic::format::AlgebraFile {
    parse_algebra(text).unwrap()
}

fn at(name: &str, v: &Rational) -> BTreeMap<String, Rational> {
    [(name.to_string(), v.clone())].into()
}

fn rat_vec(v: &[Rational]) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar::Rat).collect()
}

// 1 ------------------------------------------------------------------------

struct NormalForm {
    name: &'static str,
    text: &'static str,
    /// Admissible λ samples.
    lams: &'static [(i64, i64)],
    /// Reeb vector as a function of λ.
    reeb: fn(&Rational) -> Vec<Rational>,
}

fn normal_forms() -> Vec<NormalForm> {
    vec![
        NormalForm {
            name: "g21+g1 (e^3, e^12)",
            text: "dim 3\nbracket 1 2 : 1 1\nalpha : 1 3\nomega 1 2 : 1\n",
            lams: &[(1, 1)],
            reeb: |_| vec![q(0, 1), q(0, 1), q(1, 1)],
        },
        NormalForm {
            name: "g21+g1 (lam e^3, e^12+e^23)",
            text: "dim 3\nbracket 1 2 : 1 1\nalpha : lam 3\nomega 1 2 : 1\nomega 2 3 : 1\n",
            lams: &[(1, 1), (2, 1), (-1, 1), (1, 2)],
            reeb: |l| vec![q(1, 1) / l, q(0, 1), q(1, 1) / l],
        },
        NormalForm {
            name: "g31 (lam e^2, e^13)",
            text: "dim 3\nbracket 2 3 : 1 1\nalpha : lam 2\nomega 1 3 : 1\n",
            lams: &[(1, 1), (2, 1), (-1, 1), (1, 2)],
            reeb: |l| vec![q(0, 1), q(1, 1) / l, q(0, 1)],
        },
        NormalForm {
            name: "g34 (lam e^3, e^12)",
            text: "dim 3\nbracket 1 3 : 1 1\nbracket 2 3 : -1 2\nalpha : lam 3\nomega 1 2 : 1\n",
            lams: &[(1, 1), (2, 1), (1, 2)],
            reeb: |l| vec![q(0, 1), q(0, 1), q(1, 1) / l],
        },
        NormalForm {
            name: "g35 (lam e^3, e^12)",
            text: "dim 3\nbracket 1 3 : -1 2\nbracket 2 3 : 1 1\nalpha : lam 3\nomega 1 2 : 1\n",
            lams: &[(1, 1), (2, 1), (1, 2)],
            reeb: |l| vec![q(0, 1), q(0, 1), q(1, 1) / l],
        },
    ]
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let families = ["g_{2.1}⊕g_1", "g_{3.1}", "g_{3.4}^{-1}", "g_{3.5}^0"];
    for name in families {
        let e = catalog::find(name).unwrap();
        let (a, w) = (e.file.alpha.clone().unwrap(), e.file.omega.clone().unwrap());
        let l = &e.file.algebra;
        if !l.jacobi_defects().is_empty() || !d1(l, &a).unwrap().is_zero() || !d2(l, &w).unwrap().is_zero() {
            bad.push(format!("{name} not closed"));
        }
        if volume_coeff(l, &a, &w).unwrap().is_zero() {
            bad.push(format!("{name} degenerate"));
        }
    }
    let mut checked = 0;
    for nf in normal_forms() {
        let f = alg(nf.text);
        for &(n, d) in nf.lams {
            let lam = q(n, d);
            let b = f.bind(&at("lam", &lam));
            let (a, w) = (b.alpha.unwrap(), b.omega.unwrap());
            if !validate(&b.algebra, &a, &w).unwrap().ok() {
                bad.push(format!("{} lam={lam} does not validate", nf.name));
                continue;
            }
            let xi = reeb(&b.algebra, &a, &w).unwrap();
            let want = rat_vec(&(nf.reeb)(&lam));
            // oracle: α(ξ) = 1 and ι_ξ ω = 0, independent of how reeb() solves
            let defining = a.eval(&want) == Scalar::one() && w.interior(&want).is_zero();
            if xi != want || !defining {
                bad.push(format!("{} lam={lam} reeb", nf.name));
            }
            checked += 1;
        }
    }
    (bad.is_empty(), if bad.is_empty() {
        format!("4 families closed; {checked} normal-form samples validate with the stated Reeb vectors")
    } else {
        bad.join("; ")
    })
}

// 2 ------------------------------------------------------------------------

/// `(i, j, coefficients)` with 1-based indices, `c` scaled by `1/λ²` where marked.
type Printed = &'static [(usize, usize, [i64; 3], bool)];

fn printed_tables() -> Vec<(&'static str, &'static str, Printed)> {
    vec![
        (
            "g21+g1",
            "dim 3\nbracket 1 2 : 1 1\nalpha : 1 3\nomega 1 2 : 1\n",
            &[(1, 2, [1, 0, 0], false), (2, 2, [0, 1, 0], false)],
        ),
        (
            "g31",
            // the printed table, read on (λe³, e¹²); tied to the normal form below
            "dim 3\nbracket 2 3 : 1 1\nalpha : lam 3\nomega 1 2 : 1\n",
            &[(2, 2, [0, 0, 1], true), (3, 2, [-1, 0, 0], false)],
        ),
        (
            "g34",
            "dim 3\nbracket 1 3 : 1 1\nbracket 2 3 : -1 2\nalpha : lam 3\nomega 1 2 : 1\n",
            &[
                (1, 2, [0, 0, 1], true),
                (2, 1, [0, 0, 1], true),
                (3, 1, [-1, 0, 0], false),
                (3, 2, [0, 1, 0], false),
            ],
        ),
        (
            "g35",
            "dim 3\nbracket 1 3 : -1 2\nbracket 2 3 : 1 1\nalpha : lam 3\nomega 1 2 : 1\n",
            &[
                (1, 1, [0, 0, 1], true),
                (2, 2, [0, 0, 1], true),
                (3, 1, [0, 1, 0], false),
                (3, 2, [-1, 0, 0], false),
            ],
        ),
    ]
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for (name, text, table) in printed_tables() {
        let f = alg(text);
        for lam in [q(1, 1), q(2, 1)] {
            let b = f.bind(&at("lam", &lam));
            let t = cosymplectic_lsa::<Rational>(&b.algebra, b.alpha.as_ref().unwrap(), b.omega.as_ref().unwrap()).unwrap();
            let scale = q(1, 1) / (&lam * &lam);
            for i in 0..3 {
                for j in 0..3 {
                    let want: Vec<Rational> = match table.iter().find(|r| r.0 == i + 1 && r.1 == j + 1) {
                        Some((_, _, c, inv)) => c
                            .iter()
                            .map(|&x| if *inv { &scale * q(x, 1) } else { q(x, 1) })
                            .collect(),
                        None => vec![q(0, 1); 3],
                    };
                    if t.get(i, j) != want.as_slice() {
                        bad.push(format!("{name} lam={lam} e{}.e{}", i + 1, j + 1));
                    }
                }
            }
        }
    }
    // The g31 structure above is the normal form (−λe², e¹³) moved by
    // M: e1 ↦ −e1, e2 ↦ −e3, e3 ↦ −e2. Check the isomorphism and that the
    // normal form's own product is carried to the printed one.
    let g31 = alg("dim 3\nbracket 2 3 : 1 1\n").algebra;
    let m = LinearMap::from_columns(
        3,
        vec![vec![s("-1"), s("0"), s("0")], vec![s("0"), s("0"), s("-1")], vec![s("0"), s("-1"), s("0")]],
    );
    for lam in [q(1, 1), q(2, 1)] {
        let l = Scalar::Rat(lam.clone());
        let a0 = OneForm::basis(3, 1).scale(&-&l);
        let w0 = TwoForm::basis(3, 0, 2);
        let a1 = OneForm::basis(3, 2).scale(&l);
        let w1 = TwoForm::basis(3, 0, 1);
        let iso = check_isomorphism(&g31, &g31, &m, Forms::new(&a0, &w0), Forms::new(&a1, &w1)).unwrap();
        let t0 = cosymplectic_lsa::<Rational>(&g31, &a0, &w0).unwrap();
        let t1 = cosymplectic_lsa::<Rational>(&g31, &a1, &w1).unwrap();
        let mr: Vec<Vec<Rational>> = (0..3)
            .map(|c| m.column(c).iter().map(|x| x.as_rational().unwrap().clone()).collect())
            .collect();
        let apply = |v: &[Rational]| -> Vec<Rational> {
            (0..3).map(|r| (0..3).map(|c| &mr[c][r] * &v[c]).sum()).collect()
        };
        let natural = (0..3).all(|i| {
            (0..3).all(|j| apply(t0.get(i, j)) == t1.product(&mr[i], &mr[j]))
        });
        if !iso.ok() || !natural {
            bad.push(format!("g31 normal form lam={lam} not carried to the table structure"));
        }
    }
    (bad.is_empty(), if bad.is_empty() {
        "four tables exact at lam=1,2 (g31 via the automorphic image (lam e^3, e^12) of the normal form with -lam)".to_string()
    } else {
        bad.join("; ")
    })
}

// 3, 4 -----------------------------------------------------------------------

fn all_samples() -> Vec<catalog::Sample> {
    catalog::entries()
        .iter()
        .flat_map(|e| validated_samples(e).unwrap())
        .collect()
}

fn criterion_3(samples: &[catalog::Sample]) -> Outcome {
    let mut dims = BTreeMap::new();
    let mut bad = Vec::new();
    for b in samples {
        let t = cosymplectic_lsa::<Rational>(&b.algebra, &b.alpha, &b.omega);
        let ok = t.is_ok_and(|t| left_symmetry_defect(&t, &b.algebra).unwrap().ok());
        if !ok {
            bad.push(b.label.clone());
        }
        *dims.entry(b.algebra.dim()).or_insert(0) += 1;
    }
    let counts: Vec<String> = dims.iter().map(|(d, c)| format!("dim {d}: {c}")).collect();
    let all_dims = [3, 5, 7].iter().all(|d| dims.contains_key(d));
    (bad.is_empty() && all_dims, format!("{} structures ({}) {}", samples.len(), counts.join(", "), bad.join("; ")))
}

fn criterion_4(samples: &[catalog::Sample]) -> Outcome {
    let mut bad = Vec::new();
    for b in samples {
        let (p, k) = lsa_routes::<Rational>(&b.algebra, &b.alpha, &b.omega).unwrap();
        if p != k {
            bad.push(format!("{} routes", b.label));
        }
        if !reeb_derivation_defects::<Rational>(&b.algebra, &b.alpha, &b.omega).unwrap().is_empty() {
            bad.push(format!("{} derivation identity", b.label));
        }
    }
    let covered: std::collections::BTreeSet<&str> =
        samples.iter().map(|b| b.label.split(' ').next().unwrap()).collect();
    (bad.is_empty(), format!("{} structures from {} entries {}", samples.len(), covered.len(), bad.join("; ")))
}

// 5 ------------------------------------------------------------------------

fn grid(k: usize, names: &[String], values: &[Rational]) -> BTreeMap<String, Rational> {
    let mut k = k;
    let mut out = BTreeMap::new();
    for n in names {
        out.insert(n.clone(), values[k % values.len()].clone());
        k /= values.len();
    }
    out
}

fn criterion_5() -> Outcome {
    let values = [q(-2, 1), q(-1, 1), q(0, 1), q(1, 1), q(2, 1), q(1, 2), q(3, 1)];
    let entries: Vec<_> = catalog::entries()
        .iter()
        .filter(|e| e.kind == EntryKind::Family && e.dim() == 5)
        .collect();
    let mut closure = Vec::new();
    let mut nondeg = Vec::new();
    let mut flagged = Vec::new();
    let mut no_instance = Vec::new();
    for e in &entries {
        let structure: BTreeMap<String, Rational> = e
            .structure_params
            .iter()
            .map(|p| {
                let bad = e.excluded(p);
                let v = [q(1, 1), q(2, 1), q(-1, 1), q(1, 2)].into_iter().find(|v| !bad.contains(v)).unwrap();
                (p.clone(), v)
            })
            .collect();
        let (a, w) = (e.file.alpha.clone().unwrap(), e.file.omega.clone().unwrap());
        let l = &e.file.algebra;
        if !l.jacobi_defects().is_empty() || !d1(l, &a).unwrap().is_zero() || !d2(l, &w).unwrap().is_zero() {
            closure.push(e.name);
        }
        // printed polynomial vs computed volume
        let vol = volume_coeff(l, &a, &w).unwrap();
        let printed = e.nondeg.clone().unwrap();
        let multiple = vol.div_exact(&printed).is_some_and(|c| c.is_rational() && !c.is_zero());
        if !multiple {
            let names = e.family_params();
            let same_zeros = (0..200).all(|k| {
                // a fixed walk through the grid, spread by a stride coprime to its size
                let mut point = structure.clone();
                point.extend(grid(k * 37 + 11, &names, &values));
                (printed.eval(&point).unwrap() == q(0, 1)) == (vol.eval(&point).unwrap() == q(0, 1))
            });
            if same_zeros {
                flagged.push(e.name);
            } else {
                nondeg.push(e.name);
            }
        }
        // some rational instance validates
        let names = e.family_params();
        let found = (0..4096).any(|k| {
            let mut point = structure.clone();
            point.extend(grid(k, &names, &[q(1, 1), q(2, 1), q(-1, 1), q(1, 2)]));
            let f = e.file.bind(&point);
            validate(&f.algebra, f.alpha.as_ref().unwrap(), f.omega.as_ref().unwrap()).unwrap().ok()
        });
        if !found {
            no_instance.push(e.name);
        }
    }
    let pass = entries.len() == 23 && closure.is_empty() && nondeg.is_empty() && no_instance.is_empty();
    (
        pass,
        format!(
            "{} families; not closed: [{}]; nondegeneracy mismatch: [{}]; matched only by zero sets: [{}]; no validating instance: [{}]",
            entries.len(),
            closure.join(", "),
            nondeg.join(", "),
            flagged.join(", "),
            no_instance.join(", ")
        ),
    )
}

// 6 ------------------------------------------------------------------------

fn heisenberg(n: usize) -> LieAlgebra {
    let mut text = format!("dim {}\n", 2 * n + 1);
    for i in 1..=n {
        text.push_str(&format!("bracket {i} {} : 1 {}\n", n + i, 2 * n + 1));
    }
    alg(&text).algebra
}

fn criterion_6() -> Outcome {
    let got: Vec<(bool, bool)> = (1..=3)
        .map(|n| {
            let ex = exists_cosymplectic(&heisenberg(n)).unwrap();
            (ex.exists(), ex.determinant.is_zero())
        })
        .collect();
    let pass = got == [(true, false), (false, true), (false, true)];
    (pass, format!("H3 yes, H5 and H7 no with det Φ identically zero: {got:?}"))
}

// 7 ------------------------------------------------------------------------

const AFF: &str = "dim 7
bracket 1 3 : -1 1
bracket 1 5 : -1 2
bracket 2 4 : -1 1
bracket 2 6 : -1 2
bracket 3 4 : 1 4
bracket 3 5 : -1 5
bracket 4 5 : 1 3 -1 6
bracket 4 6 : 1 4
bracket 5 6 : -1 5
bracket 4 7 : -lam 1
bracket 6 7 : -lam 2
alpha : 1 7
omega 1 5 : 1
omega 2 6 : 1
omega 3 4 : 1
omega 4 6 : 1
";

fn criterion_7() -> Outcome {
    let f = alg(AFF);
    let mut parts = Vec::new();
    let mut pass = true;
    for lam in [q(0, 1), q(1, 1)] {
        let b = f.bind(&at("lam", &lam));
        let rep = validate(&b.algebra, b.alpha.as_ref().unwrap(), b.omega.as_ref().unwrap()).unwrap();
        let solvable = b.algebra.is_solvable().unwrap();
        pass &= rep.ok() && !solvable;
        let status = if rep.ok() {
            "validates".to_string()
        } else {
            format!("fails {} (d omega = {})", rep.failures().join(","), rep.d_omega)
        };
        parts.push(format!("lam={lam}: {status}, solvable={solvable}"));
    }
    (pass, parts.join("; "))
}

// 8 ------------------------------------------------------------------------

fn base() -> (LieAlgebra, OneForm, TwoForm) {
    let f = alg("dim 3\nbracket 1 2 : 1 1\nalpha : 1 3\nomega 1 2 : 1\n");
    (f.algebra, f.alpha.unwrap(), f.omega.unwrap())
}

fn phi(a: &str, b: &str, c: &str, f: &str) -> LinearMap {
    LinearMap::from_matrix(&[
        vec![s(a), s(b), s("0")],
        vec![s("0"), s("0"), s("0")],
        vec![s("0"), s(c), s(f)],
    ])
}

/// Printed brackets, `[e_i, e_j]` with 1-based indices in the printed order.
fn printed(rows: &[(usize, usize, [&str; 5])]) -> LieAlgebra {
    let mut g = LieAlgebra::abelian(5);
    for (i, j, v) in rows {
        g.set_bracket(i - 1, j - 1, v.iter().map(|t| s(t)).collect()).unwrap();
    }
    g
}

fn form(c: [&str; 5]) -> OneForm {
    OneForm::new(c.iter().map(|t| s(t)).collect())
}

fn two(pairs: &[(usize, usize)]) -> TwoForm {
    pairs
        .iter()
        .fold(TwoForm::zero(5), |w, &(i, j)| w.add(&TwoForm::basis(5, i - 1, j - 1)))
}

fn matches(c: &Construction, g: &LieAlgebra, a: &OneForm, w: &TwoForm, xi: usize) -> bool {
    let mut want = vec![Scalar::zero(); 5];
    want[xi - 1] = Scalar::one();
    &c.algebra == g && &c.alpha == a && &c.omega == w && c.reeb == want
}

fn derived_dim(g: &LieAlgebra, point: &[(&str, i64)]) -> usize {
    let p: BTreeMap<String, Rational> = point.iter().map(|(k, v)| (k.to_string(), q(*v, 1))).collect();
    g.substitute(&p).derived_series().unwrap()[1].len()
}

fn criterion_8() -> Outcome {
    let (g, a, w) = base();
    let e1 = ExtensionData {
        phi: phi("0", "b", "0", "f"),
        lambda: OneForm::new(vec![s("0"), s("0"), s("l3")]),
        v: vec![s("0"), s("0"), s("z")],
        t: s("-f"),
        theta: TwoForm::zero(3),
    };
    let g1 = construct_a(&g, &a, &w, &e1).unwrap();
    let ok1 = matches(
        &g1,
        &printed(&[
            (1, 2, ["1", "0", "0", "0", "0"]),
            (4, 3, ["0", "0", "f", "0", "l3"]),
            (4, 2, ["b", "0", "0", "0", "0"]),
            (4, 5, ["0", "0", "z", "0", "-f"]),
        ]),
        &form(["0", "0", "0", "1", "0"]),
        &two(&[(1, 2), (3, 5)]),
        4,
    );
    let e2 = ExtensionData {
        phi: phi("a", "b", "0", "0"),
        lambda: OneForm::new(vec![s("a^2-t*a"), s("l2"), s("l3")]),
        v: vec![s("0"); 3],
        t: s("t"),
        theta: TwoForm::zero(3),
    };
    let g2 = construct_b(&g, &a, &w, &e2, &s("x")).unwrap();
    let ok2 = matches(
        &g2,
        &printed(&[
            (1, 2, ["1", "0", "0", "0", "a"]),
            (4, 2, ["b", "0", "0", "0", "l2"]),
            (4, 1, ["a", "0", "0", "0", "a^2-t*a"]),
            (4, 3, ["0", "0", "0", "0", "l3"]),
            (4, 5, ["0", "0", "0", "0", "t"]),
        ]),
        &form(["0", "0", "1", "x", "0"]),
        &two(&[(1, 2), (4, 5)]),
        3,
    );
    let v = vec![s("0"), s("0"), s("t")];
    let g3 = construct_c(&g, &a, &w, &phi("0", "b", "c", "f"), &v, &s("x")).unwrap();
    let ok3 = matches(
        &g3,
        &printed(&[
            (1, 2, ["1", "0", "0", "0", "0"]),
            (4, 3, ["0", "0", "f", "0", "f"]),
            (4, 2, ["b", "0", "c", "0", "c"]),
            (4, 5, ["0", "0", "t", "0", "t"]),
        ]),
        &form(["0", "0", "1", "x", "-1"]),
        &two(&[(1, 2), (4, 5)]),
        3,
    );
    let d1 = derived_dim(&g1.algebra, &[("b", 1), ("f", 1), ("l3", 1), ("z", 1)]);
    let d2 = derived_dim(&g2.algebra, &[("a", 2), ("b", 1), ("t", 1), ("l2", 1), ("l3", 1)]);
    let d3 = derived_dim(&g3.algebra, &[("b", 1), ("c", 1), ("f", 1), ("t", 1)]);
    let pass = ok1 && ok2 && ok3 && d1 == 3 && d2 <= 2 && d3 <= 2;
    (
        pass,
        format!("g1 {ok1}, g2 {ok2}, g3 {ok3}; dim D(g1)={d1}, dim D(g2)={d2}, dim D(g3)={d3}"),
    )
}

// 9 ------------------------------------------------------------------------

fn criterion_9() -> Outcome {
    let reports = properties::run_all(Sampling::default()).unwrap();
    let bases = properties::extension_bases().len();
    let sampled = catalog::entries()
        .iter()
        .filter(|e| !validated_samples(e).unwrap().is_empty())
        .count();
    let dim3_samples: usize = catalog::entries()
        .iter()
        .filter(|e| e.dim() == 3)
        .map(|e| validated_samples(e).unwrap().len())
        .sum();
    let mut pass = true;
    let mut parts = Vec::new();
    for r in &reports {
        let enough = match r.name {
            "extension conditions vs jacobi" => r.trials >= EXTENSION_TRIALS_PER_BASE * bases,
            "lift conditions vs direct ist" => r.trials >= 200,
            "kernel round trip" => r.trials == dim3_samples && dim3_samples >= 9,
            "volume vs det phi" => properties::VOLUME_POINTS >= 50 && r.trials == properties::VOLUME_POINTS * (sampled + 3),
            _ => r.trials > 0,
        };
        // every equivalence must be exercised on both sides
        let both = r.name == "kernel round trip" || (r.positives > 0 && r.positives < r.trials);
        pass &= r.ok() && enough && both;
        parts.push(format!("{} {}/{} cex {}", r.name, r.positives, r.trials, r.counterexamples.len()));
    }
    (pass, parts.join("; "))
}

// 10 -----------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cosym"))
            .args(["catalog", "verify-all", "--json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let parsed = serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok();
    let pass = parsed && !a.stdout.is_empty() && a.stdout == b.stdout && a.status.code() == b.status.code();
    (pass, format!("{} bytes, identical={}, exit {:?}", a.stdout.len(), a.stdout == b.stdout, a.status.code()))
}

fn main() -> ExitCode {
    let samples = all_samples();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&samples)),
        (4, criterion_4(&samples)),
        (5, criterion_5()),
        (6, criterion_6()),
        (7, criterion_7()),
        (8, criterion_8()),
        (9, criterion_9()),
        (10, criterion_10()),
    ];
    let mut unexpected = Vec::new();
    for (k, (pass, detail)) in &results {
        println!("criterion {k:>2}: {} — {detail}", if *pass { "PASS" } else { "FAIL" });
        if *pass == EXPECTED_RED.contains(k) {
            unexpected.push(*k);
        }
    }
    let passed = results.iter().filter(|(_, (p, _))| *p).count();
    println!("acceptance: {passed}/10 PASS");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}

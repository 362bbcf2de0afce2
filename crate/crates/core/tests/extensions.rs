use cosymplectic::cosymplectic::validate;
use cosymplectic::extensions::{
    assemble_a, construct_a, construct_b, construct_c, lift_conditions, ExtensionData,
};
use cosymplectic::exterior::{OneForm, TwoForm};
use cosymplectic::lie::{basis_vector, LieAlgebra, LinearMap};
use cosymplectic::{Error, Scalar};

fn s(t: &str) -> Scalar {
    Scalar::parse(t).unwrap()
}

fn base() -> (LieAlgebra, OneForm, TwoForm) {
    (
        LieAlgebra::from_table(3, &[(1, 2, &[(1, 1)])]).unwrap(),
        OneForm::basis(3, 2),
        TwoForm::basis(3, 0, 1),
    )
}

/// φ(e1) = a e1, φ(e2) = b e1 + c e3, φ(e3) = f e3.
fn phi(a: &str, b: &str, c: &str, f: &str) -> LinearMap {
    LinearMap::from_columns(
        3,
        vec![
            vec![s(a), s("0"), s("0")],
            vec![s(b), s("0"), s(c)],
            vec![s("0"), s("0"), s(f)],
        ],
    )
}

fn table(entries: &[((usize, usize), &[&str])]) -> LieAlgebra {
    let mut g = LieAlgebra::abelian(5);
    for ((i, j), v) in entries {
        g.set_bracket(i - 1, j - 1, v.iter().map(|t| s(t)).collect()).unwrap();
    }
    g
}

fn form1(c: &[&str]) -> OneForm {
    OneForm::new(c.iter().map(|t| s(t)).collect())
}

#[test]
fn first_construction_reproduces_the_published_family() {
    let (g, a, w) = base();
    let e = ExtensionData {
        phi: phi("0", "b", "0", "f"),
        lambda: form1(&["0", "0", "l3"]),
        v: vec![s("0"), s("0"), s("z")],
        t: s("-f"),
        theta: TwoForm::zero(3),
    };
    assert!(lift_conditions(&g, &a, &w, &e).unwrap().all_conditions());
    let c = construct_a(&g, &a, &w, &e).unwrap();
    let expected = table(&[
        ((1, 2), &["1", "0", "0", "0", "0"]),
        ((4, 3), &["0", "0", "f", "0", "l3"]),
        ((4, 2), &["b", "0", "0", "0", "0"]),
        ((4, 5), &["0", "0", "z", "0", "-f"]),
    ]);
    assert_eq!(c.algebra, expected);
    assert_eq!(c.alpha, OneForm::basis(5, 3));
    assert_eq!(c.omega, TwoForm::basis(5, 0, 1).add(&TwoForm::basis(5, 2, 4)));
    assert_eq!(c.reeb, basis_vector(5, 3));
}

#[test]
fn second_construction_reproduces_the_published_family() {
    let (g, a, w) = base();
    let e = ExtensionData {
        phi: phi("a", "b", "0", "0"),
        lambda: form1(&["a^2-t*a", "l2", "l3"]),
        v: vec![s("0"); 3],
        t: s("t"),
        theta: TwoForm::zero(3),
    };
    let c = construct_b(&g, &a, &w, &e, &s("x")).unwrap();
    let expected = table(&[
        ((1, 2), &["1", "0", "0", "0", "a"]),
        ((4, 2), &["b", "0", "0", "0", "l2"]),
        ((4, 1), &["a", "0", "0", "0", "a^2-t*a"]),
        ((4, 3), &["0", "0", "0", "0", "l3"]),
        ((4, 5), &["0", "0", "0", "0", "t"]),
    ]);
    assert_eq!(c.algebra, expected);
    assert_eq!(c.alpha, form1(&["0", "0", "1", "x", "0"]));
    assert_eq!(c.omega, TwoForm::basis(5, 0, 1).add(&TwoForm::basis(5, 3, 4)));
    assert_eq!(c.reeb, basis_vector(5, 2));
    assert_eq!(c.forced_lambda, vec![(0, s("a^2-a*t"))]);

    // any other first component breaks the cocycle condition
    let mut wrong = e.clone();
    wrong.lambda = form1(&["0", "l2", "l3"]);
    assert!(matches!(construct_b(&g, &a, &w, &wrong, &s("x")), Err(Error::ConditionsFail(_))));
}

#[test]
fn third_construction_reproduces_the_published_family() {
    let (g, a, w) = base();
    let v = vec![s("0"), s("0"), s("t")];
    let c = construct_c(&g, &a, &w, &phi("0", "b", "c", "f"), &v, &s("x")).unwrap();
    let expected = table(&[
        ((1, 2), &["1", "0", "0", "0", "0"]),
        ((4, 3), &["0", "0", "f", "0", "f"]),
        ((4, 2), &["b", "0", "c", "0", "c"]),
        ((4, 5), &["0", "0", "t", "0", "t"]),
    ]);
    assert_eq!(c.algebra, expected);
    assert_eq!(c.alpha, form1(&["0", "0", "1", "x", "-1"]));
    assert_eq!(c.reeb, basis_vector(5, 2));
}

#[test]
fn first_construction_rejects_a_bad_bracket_condition() {
    // ḡ = ⟨e1,e2,e3⟩, [e2,e3] = e1, α = e², ω = e^13, φ(e2) = e3, λ = e¹
    let g = LieAlgebra::from_table(3, &[(2, 3, &[(1, 1)])]).unwrap();
    let a = OneForm::basis(3, 1);
    let w = TwoForm::basis(3, 0, 2);
    let mut e = ExtensionData::zero(3);
    e.phi.set_column(1, basis_vector(3, 2));
    e.lambda = OneForm::basis(3, 0);
    let r = construct_a(&g, &a, &w, &e);
    assert!(matches!(r, Err(Error::ConditionsFail(_))), "{r:?}");
    // assembling anyway gives something that is not cosymplectic
    let (big, ba, bw) = assemble_a(&g, &a, &w, &e).unwrap();
    assert_eq!(big.dim(), 5);
    assert!(!validate(&big, &ba, &bw).unwrap().ok());
}

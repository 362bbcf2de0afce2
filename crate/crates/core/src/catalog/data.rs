//! Raw tables, kept as close to their printed form as the file format allows.
//! Repeated parameters and printed sign patterns are deliberately left alone.

/// `(name, structure parameters, .alg text, nondegeneracy polynomial, constraints)`.
pub(super) type Row = (&'static str, &'static [&'static str], &'static str, &'static str, &'static str);

pub(super) const DIM3_FAMILIES: &[Row] = &[
    (
        "g_{2.1}⊕g_1",
        &[],
        "dim 3
bracket 1 2 : 1 1
alpha : a2 2 a3 3
omega 1 2 : a12
omega 2 3 : a23",
        "a3*a12",
        "",
    ),
    (
        "g_{3.1}",
        &[],
        "dim 3
bracket 2 3 : 1 1
alpha : a2 2 a3 3
omega 1 2 : a12
omega 1 3 : a13
omega 2 3 : a23",
        "a3*a12-a2*a13",
        "",
    ),
    (
        "g_{3.4}^{-1}",
        &[],
        "dim 3
bracket 1 3 : 1 1
bracket 2 3 : -1 2
alpha : a3 3
omega 1 2 : a12
omega 1 3 : a13
omega 2 3 : a23",
        "a3*a12",
        "",
    ),
    (
        "g_{3.5}^0",
        &[],
        "dim 3
bracket 1 3 : -1 2
bracket 2 3 : 1 1
alpha : a3 3
omega 1 2 : a12
omega 1 3 : a13
omega 2 3 : a23",
        "a3*a12",
        "",
    ),
];

/// `(name, family, .alg text in lam, admissible range)`.
pub(super) const DIM3_NORMAL_FORMS: &[(&str, &str, &str, &str)] = &[
    (
        "g_{2.1}⊕g_1-normal-1",
        "g_{2.1}⊕g_1",
        "dim 3
bracket 1 2 : 1 1
alpha : 1 3
omega 1 2 : 1",
        "",
    ),
    (
        "g_{2.1}⊕g_1-normal-2",
        "g_{2.1}⊕g_1",
        "dim 3
bracket 1 2 : 1 1
alpha : lam 3
omega 1 2 : 1
omega 2 3 : 1",
        "lam in R-{0}",
    ),
    (
        "g_{3.1}-normal",
        "g_{3.1}",
        "dim 3
bracket 2 3 : 1 1
alpha : lam 2
omega 1 3 : 1",
        "lam in R-{0}",
    ),
    (
        "g_{3.4}^{-1}-normal",
        "g_{3.4}^{-1}",
        "dim 3
bracket 1 3 : 1 1
bracket 2 3 : -1 2
alpha : lam 3
omega 1 2 : 1",
        "lam>0",
    ),
    (
        "g_{3.5}^0-normal",
        "g_{3.5}^0",
        "dim 3
bracket 1 3 : -1 2
bracket 2 3 : 1 1
alpha : lam 3
omega 1 2 : 1",
        "lam>0",
    ),
];

pub(super) const DIM5_FAMILIES: &[Row] = &[
    (
        "A_{5,1}",
        &[],
        "dim 5
bracket 3 5 : 1 1
bracket 4 5 : 1 2
alpha : a3 3 a4 4 a5 5
omega 1 3 : a13
omega 1 4 : a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a3*a15*a24-a3*a23*a25+a4*a13*a25-a4*a15*a23-a5*a13*a24+a5*a23",
        "",
    ),
    (
        "A_{5,2}",
        &[],
        "dim 5
bracket 2 5 : 1 1
bracket 3 5 : 1 2
bracket 4 5 : 1 3
alpha : a4 4 a5 5
omega 1 4 : a23
omega 1 5 : a15
omega 2 3 : -a23
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a23*(a4*a15+a5*a23)",
        "",
    ),
    (
        "A_{5,5}",
        &[],
        "dim 5
bracket 2 5 : 1 1
bracket 3 4 : 1 1
bracket 3 5 : 1 2
alpha : a3 3 a4 4 a5 5
omega 1 5 : a24
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a24*(a3*a25-a4*a23)",
        "",
    ),
    (
        "A_{5,6}",
        &[],
        "dim 5
bracket 2 5 : 1 1
bracket 3 5 : 1 2
bracket 3 4 : 1 1
bracket 4 5 : 1 3
alpha : a4 4 a5 5
omega 1 4 : a23
omega 1 5 : a24
omega 2 3 : -a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a23*(a4*a24+a5*a23)",
        "",
    ),
    (
        "A_{5,7}^{a,-a,-1}",
        &["a"],
        "dim 5
bracket 1 5 : 1 1
bracket 2 5 : a 2
bracket 3 5 : -a 3
bracket 4 5 : -1 4
alpha : a5 5
omega 1 4 : a14
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a14*a23",
        "a not in {-1,0,1}",
    ),
    (
        "A_{5,7}^{1,-1,-1}",
        &[],
        "dim 5
bracket 1 5 : 1 1
bracket 2 5 : 1 2
bracket 3 5 : -1 3
bracket 4 5 : -1 4
alpha : a5 5
omega 1 3 : a13
omega 1 4 : a14
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 3 5 : a35
omega 4 5 : a45",
        "a5*(a24*a13-a14*a23)",
        "",
    ),
    (
        "A_{5,8}^{-1}",
        &[],
        "dim 5
bracket 2 5 : 1 1
bracket 3 5 : 1 3
bracket 4 5 : -1 4
alpha : a2 2 a5 5
omega 1 2 : a12
omega 1 5 : a15
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a34*(a5*a12-a2*a15)",
        "",
    ),
    (
        "A_{5,13}^{-1,0,q}",
        &["q"],
        "dim 5
bracket 1 5 : 1 1
bracket 2 5 : -1 2
bracket 3 5 : -q 4
bracket 4 5 : q 3
alpha : a5 5
omega 1 2 : a12
omega 1 5 : a15
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a12*a34",
        "",
    ),
    (
        "A_{5,14}^0",
        &[],
        "dim 5
bracket 2 5 : 1 1
bracket 3 5 : -1 4
bracket 4 5 : 1 3
alpha : a2 2 a5 5
omega 1 2 : a12
omega 1 5 : a15
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a34*(a5*a12-a2*a15)",
        "",
    ),
    (
        "A_{5,15}^{-1}",
        &[],
        "dim 5
bracket 1 5 : 1 1
bracket 2 5 : 1 1 1 2
bracket 3 5 : -1 3
bracket 4 5 : 1 3 -1 4
alpha : a5 5
omega 1 4 : -a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a23",
        "",
    ),
    (
        "A_{5,17}^{1,p,-p}",
        &["p"],
        "dim 5
bracket 1 5 : p 1 -1 2
bracket 2 5 : 1 1 p 2
bracket 3 5 : -p 3 -1 4
bracket 4 5 : 1 3 -p 4
alpha : a5 5
omega 1 3 : a24
omega 1 4 : -a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*(a23^2+a24^2)",
        "p != 0",
    ),
    (
        "A_{5,17}^{1,0,0}",
        &[],
        "dim 5
bracket 1 5 : -1 2
bracket 2 5 : 1 1
bracket 3 5 : -1 4
bracket 4 5 : 1 3
alpha : a5 5
omega 1 2 : a12
omega 1 3 : a24
omega 1 4 : -a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*(a12*a34-a23^2-a24^2)",
        "",
    ),
    (
        "A_{5,17}^{-1,p,-p}",
        &["p"],
        "dim 5
bracket 1 5 : p 1 -1 2
bracket 2 5 : 1 1 p 2
bracket 3 5 : -p 3 1 4
bracket 4 5 : -1 3 -p 4
alpha : a5 5
omega 1 3 : -a24
omega 1 4 : a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*(a23^2+a24^2)",
        "p != 0",
    ),
    (
        "A_{5,17}^{-1,0,0}",
        &[],
        "dim 5
bracket 1 5 : -1 2
bracket 2 5 : 1 1
bracket 3 5 : 1 4
bracket 4 5 : -1 3
alpha : a5 5
omega 1 2 : a12
omega 1 3 : -a24
omega 1 4 : a23
omega 1 5 : a15
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*(a12*a34+a23^2+a24^2)",
        "",
    ),
    (
        "A_{5,18}^0",
        &[],
        "dim 5
bracket 1 5 : -1 2
bracket 2 5 : 1 1
bracket 3 5 : 1 1 -1 4
bracket 4 5 : 1 2 1 3
alpha : a5 5
omega 1 3 : a24
omega 1 5 : a15
omega 2 4 : a24
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a24",
        "",
    ),
    (
        "A_{5,19}^{1,-1}",
        &[],
        "dim 5
bracket 1 5 : 1 1
bracket 2 3 : 1 1
bracket 2 5 : 1 2
bracket 4 5 : -1 4
alpha : a3 3 a5 5
omega 1 5 : a23
omega 2 3 : a23
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a3*a23*a24",
        "",
    ),
    (
        "A_{5,19}^{1/2,-1}",
        &[],
        "dim 5
bracket 1 5 : 1/2 1
bracket 2 3 : 1 1
bracket 2 5 : 1 2
bracket 3 5 : -1/2 3
bracket 4 5 : -1 4
alpha : a5 5
omega 1 3 : a13
omega 1 5 : a15
omega 2 3 : 2*a15
omega 2 4 : a24
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a13*a24",
        "",
    ),
    (
        "A_{5,19}^{-1,2}",
        &[],
        "dim 5
bracket 1 5 : -1 1
bracket 2 3 : 1 1
bracket 2 5 : 1 2
bracket 3 5 : -2 3
bracket 4 5 : 2 4
alpha : a5 5
omega 1 2 : a12
omega 1 5 : -a23
omega 2 3 : a23
omega 2 5 : a25
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a12*a34",
        "",
    ),
    (
        "A_{5,30}^1",
        &[],
        "dim 5
bracket 2 4 : 1 1
bracket 3 4 : 1 2
bracket 1 5 : 2 1
bracket 2 5 : 1 2
bracket 4 5 : 1 4
alpha : a3 3 a5 5
omega 1 5 : 2*a24
omega 2 4 : a24
omega 2 5 : a34
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a3*a24",
        "",
    ),
    (
        "A_{5,33}^{0,-1}",
        &[],
        "dim 5
bracket 1 4 : 1 1
bracket 2 5 : 1 2
bracket 3 4 : -1 3
alpha : a4 4 a5 5
omega 1 3 : a13
omega 1 4 : a14
omega 2 5 : a25
omega 3 4 : a34
omega 4 5 : a45",
        "a4*a13*a25",
        "",
    ),
    (
        "A_{5,33}^{-1,0}",
        &[],
        "dim 5
bracket 1 4 : 1 1
bracket 2 5 : 1 2
bracket 3 5 : -1 3
alpha : a4 4 a5 5
omega 1 4 : a14
omega 2 3 : a23
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a14*a23",
        "",
    ),
    (
        "A_{5,36}",
        &[],
        "dim 5
bracket 1 4 : 1 1
bracket 2 3 : 1 1
bracket 2 4 : 1 2
bracket 2 5 : -1 2
bracket 3 5 : 1 3
alpha : a4 4 a5 5
omega 1 4 : a23
omega 2 3 : a23
omega 2 4 : -a25
omega 2 5 : a25
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a23",
        "",
    ),
    (
        "A_{5,37}",
        &[],
        "dim 5
bracket 1 4 : 2 1
bracket 2 3 : 1 1
bracket 2 4 : 1 2
bracket 3 4 : 1 3
bracket 2 5 : -1 3
bracket 3 5 : 1 2
alpha : a4 4 a5 5
omega 1 4 : 2*a23
omega 2 3 : a23
omega 2 4 : a35
omega 2 5 : -a34
omega 3 4 : a34
omega 3 5 : a35
omega 4 5 : a45",
        "a5*a23",
        "",
    ),
];

/// The affine algebra with the seventh generator acting through `lam`.
pub(super) const AFFINE: &str = "dim 7
bracket 1 3 : -1 1
bracket 2 4 : -1 1
bracket 3 4 : 1 4
bracket 4 5 : 1 3 -1 6
bracket 5 6 : -1 5
bracket 1 5 : -1 2
bracket 2 6 : -1 2
bracket 3 5 : -1 5
bracket 4 6 : 1 4
bracket 4 7 : -lam 1
bracket 6 7 : -lam 2
alpha : 1 7
omega 1 5 : 1
omega 2 6 : 1
omega 3 4 : 1
omega 4 6 : 1";

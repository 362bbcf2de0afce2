//! Line-based text formats for algebras, extension data and linear maps.
//!
//! ```text
//! # g_{3.1} with its λ = 1 normal form
//! dim 3
//! bracket 2 3 : 1 1          # [e2,e3] = e1
//! alpha : 1 2                # α = e^2
//! omega 1 3 : 1              # ω = e^13
//! param lam = 1/2
//! ```
//!
//! Indices are 1-based. Coefficients are rationals, parameter names, or
//! polynomial expressions written without spaces (`a^2-a*t`). Extension
//! data uses `phi i : c k ...` (the image of `e_i`), `lambda : c i ...`,
//! `v : c k ...`, `t = c` and `theta i j : c`; maps use `map i : c k ...`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extensions::ExtensionData;
use crate::exterior::{OneForm, TwoForm};
use crate::lie::{zero_vector, LieAlgebra, LinearMap, Vector};
use crate::scalars::{parse_rational, Rational, Scalar};

/// A parsed `.alg` file. `params` are bindings; unbound names stay symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: LieAlgebra,
    pub alpha: Option<OneForm>,
    pub omega: Option<TwoForm>,
    pub params: BTreeMap<String, Rational>,
}

impl AlgebraFile {
    pub fn new(algebra: LieAlgebra) -> Self {
        AlgebraFile {
            algebra,
            alpha: None,
            omega: None,
            params: BTreeMap::new(),
        }
    }

    pub fn with_forms(algebra: LieAlgebra, alpha: OneForm, omega: TwoForm) -> Self {
        AlgebraFile {
            alpha: Some(alpha),
            omega: Some(omega),
            ..AlgebraFile::new(algebra)
        }
    }

    /// Substitutes the bound parameters (and `extra`, which wins on clashes).
    pub fn bind(&self, extra: &BTreeMap<String, Rational>) -> AlgebraFile {
        let mut all = self.params.clone();
        all.extend(extra.iter().map(|(k, v)| (k.clone(), v.clone())));
        AlgebraFile {
            algebra: self.algebra.substitute(&all),
            alpha: self.alpha.as_ref().map(|a| a.substitute(&all)),
            omega: self.omega.as_ref().map(|w| w.substitute(&all)),
            params: BTreeMap::new(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the last token, for "expected more" errors.
    end: usize,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn token(&self, k: usize, what: &str) -> Result<&Token<'a>> {
        self.tokens
            .get(k)
            .ok_or_else(|| self.err(self.end, format!("expected {what}")))
    }

    fn index(&self, k: usize, dim: usize) -> Result<usize> {
        let t = self.token(k, "an index")?;
        let i: usize = t
            .text
            .parse()
            .map_err(|_| self.err(t.column, format!("`{}` is not an index", t.text)))?;
        if i == 0 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        Ok(i - 1)
    }

    fn scalar(&self, k: usize) -> Result<Scalar> {
        let t = self.token(k, "a coefficient")?;
        Scalar::parse(t.text).map_err(|e| match e {
            Error::Syntax {
                column, message, ..
            } => self.err(t.column + column - 1, message),
            other => other,
        })
    }

    fn expect(&self, k: usize, sym: &str) -> Result<()> {
        let t = self.token(k, &format!("`{sym}`"))?;
        if t.text == sym {
            Ok(())
        } else {
            Err(self.err(t.column, format!("expected `{sym}`, found `{}`", t.text)))
        }
    }

    fn no_more(&self, k: usize) -> Result<()> {
        match self.tokens.get(k) {
            Some(t) => Err(self.err(t.column, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }

    /// `c1 k1 c2 k2 ...` from token `k` on, as a dense vector.
    fn combination(&self, k: usize, dim: usize) -> Result<Vector> {
        let mut v = zero_vector(dim);
        let mut seen = vec![false; dim];
        let mut at = k;
        while at < self.tokens.len() {
            let c = self.scalar(at)?;
            let idx = self.index(at + 1, dim)?;
            if seen[idx] {
                let t = &self.tokens[at + 1];
                return Err(self.err(t.column, format!("index {} repeated", idx + 1)));
            }
            seen[idx] = true;
            v[idx] = c;
            at += 2;
        }
        Ok(v)
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..col],
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: n + 1,
                end: body.trim_end().chars().count() + 1,
                tokens,
            });
        }
    }
    out
}

/// Reads `dim N` if it is the first directive; `default` otherwise.
fn leading_dim(ls: &[Line<'_>], default: Option<usize>) -> Result<(usize, usize)> {
    match ls.first() {
        Some(l) if l.tokens[0].text == "dim" => {
            let t = l.token(1, "a dimension")?;
            let n: usize = t
                .text
                .parse()
                .map_err(|_| l.err(t.column, format!("`{}` is not a dimension", t.text)))?;
            l.no_more(2)?;
            Ok((n, 1))
        }
        first => match default {
            Some(n) => Ok((n, 0)),
            None => Err(match first {
                Some(l) => l.err(1, "expected `dim N` first"),
                None => Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "empty input".into(),
                },
            }),
        },
    }
}

fn pair(l: &Line<'_>, dim: usize) -> Result<(usize, usize)> {
    let (i, j) = (l.index(1, dim)?, l.index(2, dim)?);
    if i == j {
        return Err(Error::IndexOutOfRange { index: i + 1, dim });
    }
    if i > j {
        return Err(l.err(l.tokens[1].column, "indices must be increasing"));
    }
    Ok((i, j))
}

fn param(l: &Line<'_>, params: &mut BTreeMap<String, Rational>) -> Result<()> {
    let name = l.token(1, "a parameter name")?;
    l.expect(2, "=")?;
    let value = l.token(3, "a rational value")?;
    let r = parse_rational(value.text)
        .ok_or_else(|| l.err(value.column, format!("`{}` is not a rational", value.text)))?;
    l.no_more(4)?;
    if params.insert(name.text.to_string(), r).is_some() {
        return Err(l.err(name.column, format!("parameter `{}` bound twice", name.text)));
    }
    Ok(())
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let ls = lines(text);
    let (dim, skip) = leading_dim(&ls, None)?;
    let mut file = AlgebraFile::new(LieAlgebra::abelian(dim));
    let mut seen = std::collections::BTreeSet::new();
    for l in &ls[skip..] {
        match l.tokens[0].text {
            "bracket" => {
                let (i, j) = pair(l, dim)?;
                l.expect(3, ":")?;
                if !seen.insert((i, j)) {
                    return Err(Error::DuplicateBracket(i + 1, j + 1));
                }
                file.algebra.set_bracket(i, j, l.combination(4, dim)?)?;
            }
            "alpha" => {
                l.expect(1, ":")?;
                if file.alpha.is_some() {
                    return Err(l.err(1, "alpha given twice"));
                }
                file.alpha = Some(OneForm::new(l.combination(2, dim)?));
            }
            "omega" => {
                let w = file.omega.get_or_insert_with(|| TwoForm::zero(dim));
                // a bare `omega :` declares a form with no terms yet
                if l.tokens.len() == 2 && l.tokens[1].text == ":" {
                    continue;
                }
                let (i, j) = pair(l, dim)?;
                l.expect(3, ":")?;
                let c = l.scalar(4)?;
                l.no_more(5)?;
                if !w.coeff(i, j).is_zero() {
                    return Err(l.err(1, format!("omega {} {} given twice", i + 1, j + 1)));
                }
                w.set(i, j, c);
            }
            "param" => param(l, &mut file.params)?,
            "dim" => return Err(l.err(1, "`dim` must come first and only once")),
            other => return Err(l.err(1, format!("unknown directive `{other}`"))),
        }
    }
    Ok(file)
}

fn write_combination(out: &mut String, v: &[Scalar]) {
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            let _ = write!(out, " {c} {}", k + 1);
        }
    }
}

pub fn print_algebra(file: &AlgebraFile) -> String {
    let dim = file.algebra.dim();
    let mut out = format!("dim {dim}\n");
    for (i, j, v) in file.algebra.brackets() {
        let _ = write!(out, "bracket {} {} :", i + 1, j + 1);
        write_combination(&mut out, v);
        out.push('\n');
    }
    if let Some(a) = &file.alpha {
        out.push_str("alpha :");
        write_combination(&mut out, a.coeffs());
        out.push('\n');
    }
    if let Some(w) = &file.omega {
        if w.is_zero() {
            out.push_str("omega :\n");
        }
        for (i, j, c) in w.terms() {
            let _ = writeln!(out, "omega {} {} : {c}", i + 1, j + 1);
        }
    }
    for (k, v) in &file.params {
        let _ = writeln!(out, "param {k} = {v}");
    }
    out
}

/// Extension data over an `n`-dimensional base; a leading `dim` line must agree.
pub fn parse_extension(text: &str, n: usize) -> Result<(ExtensionData, BTreeMap<String, Rational>)> {
    let ls = lines(text);
    let (dim, skip) = leading_dim(&ls, Some(n))?;
    if dim != n {
        return Err(Error::DimensionMismatch { expected: n, found: dim });
    }
    let mut e = ExtensionData::zero(n);
    let mut params = BTreeMap::new();
    for l in &ls[skip..] {
        match l.tokens[0].text {
            "phi" => {
                let i = l.index(1, n)?;
                l.expect(2, ":")?;
                e.phi.set_column(i, l.combination(3, n)?);
            }
            "lambda" => {
                l.expect(1, ":")?;
                e.lambda = OneForm::new(l.combination(2, n)?);
            }
            "v" => {
                l.expect(1, ":")?;
                e.v = l.combination(2, n)?;
            }
            "t" => {
                l.expect(1, "=")?;
                e.t = l.scalar(2)?;
                l.no_more(3)?;
            }
            "theta" => {
                let (i, j) = pair(l, n)?;
                l.expect(3, ":")?;
                e.theta.set(i, j, l.scalar(4)?);
                l.no_more(5)?;
            }
            "param" => param(l, &mut params)?,
            other => return Err(l.err(1, format!("unknown directive `{other}`"))),
        }
    }
    Ok((e, params))
}

pub fn print_extension(e: &ExtensionData) -> String {
    let n = e.dim();
    let mut out = format!("dim {n}\n");
    for j in 0..n {
        let col = e.phi.column(j);
        if col.iter().any(|c| !c.is_zero()) {
            let _ = write!(out, "phi {} :", j + 1);
            write_combination(&mut out, col);
            out.push('\n');
        }
    }
    out.push_str("lambda :");
    write_combination(&mut out, e.lambda.coeffs());
    out.push_str("\nv :");
    write_combination(&mut out, &e.v);
    let _ = writeln!(out, "\nt = {}", e.t);
    for (i, j, c) in e.theta.terms() {
        let _ = writeln!(out, "theta {} {} : {c}", i + 1, j + 1);
    }
    out
}

/// `map i : c k ...` gives the image of `e_i`; unlisted columns are zero.
pub fn parse_map(text: &str) -> Result<LinearMap> {
    let ls = lines(text);
    let (n, skip) = leading_dim(&ls, None)?;
    let mut m = LinearMap::zero(n);
    for l in &ls[skip..] {
        match l.tokens[0].text {
            "map" => {
                let i = l.index(1, n)?;
                l.expect(2, ":")?;
                m.set_column(i, l.combination(3, n)?);
            }
            other => return Err(l.err(1, format!("unknown directive `{other}`"))),
        }
    }
    Ok(m)
}

pub fn print_map(m: &LinearMap) -> String {
    let mut out = format!("dim {}\n", m.cols());
    for j in 0..m.cols() {
        let _ = write!(out, "map {} :", j + 1);
        write_combination(&mut out, m.column(j));
        out.push('\n');
    }
    out
}

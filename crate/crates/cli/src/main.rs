//! `cosym`: exact checks on cosymplectic Lie algebras from the command line.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check
//! fails, 2 on usage or parse errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cosymplectic::catalog;
use cosymplectic::cosymplectic::{
    biinvariance, exists_cosymplectic, left_symmetry_defect, lsa_routes, reeb, to_symplectic,
    validate,
};
use cosymplectic::extensions::{construct_a, construct_b, construct_c, double_extend, Construction};
use cosymplectic::exterior::{OneForm, TwoForm};
use cosymplectic::format::{parse_algebra, parse_extension, parse_map, print_algebra, AlgebraFile};
use cosymplectic::lie::{check_isomorphism, format_vector, Forms, LieAlgebra};
use cosymplectic::properties;
use cosymplectic::sampling::Sampling;
use cosymplectic::scalars::parse_rational;
use cosymplectic::{Error, Field, RatFunc, Rational, Scalar};

#[derive(Parser)]
#[command(name = "cosym", version, about = "Exact checks for cosymplectic Lie algebras")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Parameter bindings, `name=p/q,...`; these override `param` lines.
    #[arg(long, global = true, value_name = "K=V,...")]
    params: Option<String>,
    /// No randomized checks: sample from fixed point sets only.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    A,
    B,
    C,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi, closedness of α and ω, and α ∧ ωⁿ ≠ 0.
    Validate { file: PathBuf },
    /// The Reeb vector.
    Reeb { file: PathBuf },
    /// The left-symmetric product, computed two ways.
    Lsa { file: PathBuf },
    /// Bi-invariance conditions against associativity of the product.
    Biinv { file: PathBuf },
    /// Whether the algebra carries any cosymplectic structure.
    Exists { file: PathBuf },
    /// Double extension of a base algebra by extension data.
    Extend {
        #[arg(long, value_enum, ignore_case = true)]
        construction: Option<Which>,
        #[arg(long)]
        data: PathBuf,
        /// Value of α(d) for the second and third constructions.
        #[arg(long = "alpha-d", value_name = "P/Q", allow_hyphen_values = true)]
        alpha_d: Option<String>,
        base: PathBuf,
    },
    /// The symplectic algebra g ⊕ ⟨e⟩ with ω + α ∧ e*.
    Symplectize { file: PathBuf },
    /// Built-in classification tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Whether a linear map is an isomorphism (of structures, when both files carry forms).
    Isocheck {
        from: PathBuf,
        to: PathBuf,
        map: PathBuf,
    },
    /// Randomized equivalence trials.
    Properties,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Entry names, kinds, dimensions and parameters.
    List,
    /// An entry in the `.alg` format, parameters left symbolic.
    Export { name: String },
    /// An entry at the values given by `--params`.
    Instantiate { name: String },
    /// Every entry against its printed data.
    VerifyAll,
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<String>,
}

#[derive(Serialize)]
struct Report {
    command: String,
    input: Value,
    checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip)]
    text: Vec<String>,
}

impl Report {
    fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            checks: Vec::new(),
            result: None,
            text: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, defect: impl FnOnce() -> String) {
        let defect = if pass { None } else { Some(defect()) };
        self.checks.push(CheckLine {
            name: name.into(),
            pass,
            defect,
        });
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn okfail(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn parse_params(text: Option<&str>) -> anyhow::Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for part in text.unwrap_or("").split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("bad parameter `{part}`, expected name=p/q"))?;
        let v = parse_rational(v.trim()).ok_or_else(|| anyhow!("bad value in `{part}`"))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

struct Ctx {
    json: bool,
    params: BTreeMap<String, Rational>,
    sampling: Sampling,
}

impl Ctx {
    fn input(&self, files: &[&Path]) -> Value {
        let params: BTreeMap<&String, String> = self.params.iter().map(|(k, v)| (k, v.to_string())).collect();
        json!({
            "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            "params": params,
        })
    }

    fn load(&self, path: &Path) -> anyhow::Result<AlgebraFile> {
        let f = parse_algebra(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        Ok(f.bind(&self.params))
    }
}

fn forms(f: &AlgebraFile, path: &Path) -> anyhow::Result<(OneForm, TwoForm)> {
    match (&f.alpha, &f.omega) {
        (Some(a), Some(w)) => Ok((a.clone(), w.clone())),
        _ => bail!("{} needs both `alpha` and `omega` lines", path.display()),
    }
}

fn bracket_lines(l: &LieAlgebra) -> Vec<String> {
    let lines: Vec<String> = l
        .brackets()
        .map(|(i, j, v)| format!("[e{},e{}] = {}", i + 1, j + 1, format_vector(v)))
        .collect();
    if lines.is_empty() {
        vec!["abelian".to_string()]
    } else {
        lines
    }
}

fn validate_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let (a, w) = forms(&f, path)?;
    let rep = validate(&f.algebra, &a, &w)?;
    let mut r = Report::new("validate", ctx.input(&[path]));
    r.check("jacobi", rep.lie(), || format!("{} failing triples", rep.jacobi.len()));
    r.check("cocycle1", rep.cocycle1(), || format!("d alpha = {}", rep.d_alpha));
    r.check("cocycle2", rep.cocycle2(), || format!("d omega = {}", rep.d_omega));
    r.check("volume", rep.nondegenerate(), || "alpha ∧ omega^n = 0".to_string());
    let mut parts = Vec::new();
    if !rep.lie() {
        parts.push("jacobi: FAIL".to_string());
    }
    parts.push(format!("cocycle1: {}", okfail(rep.cocycle1())));
    parts.push(format!("cocycle2: {}", okfail(rep.cocycle2())));
    let kind = if rep.nondegenerate() { "nonzero" } else { "zero" };
    parts.push(format!("volume: {} ({kind})", rep.volume));
    parts.push(format!("cosymplectic: {}", yes(rep.ok())));
    let mut result = json!({ "volume": rep.volume.to_string(), "cosymplectic": rep.ok() });
    if rep.ok() {
        if let Ok(xi) = reeb(&f.algebra, &a, &w) {
            parts.push(format!("reeb: {}", format_vector(&xi)));
            result["reeb"] = json!(format_vector(&xi));
        }
    }
    r.line(parts.join(", "));
    r.result = Some(result);
    Ok(r)
}

fn reeb_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let (a, w) = forms(&f, path)?;
    let xi = reeb(&f.algebra, &a, &w)?;
    let mut r = Report::new("reeb", ctx.input(&[path]));
    let s = format_vector(&xi);
    r.line(format!("reeb: {s}"));
    r.result = Some(json!({ "reeb": s }));
    Ok(r)
}

/// Both product tables and the left-symmetry test, over any coefficient field.
fn lsa_in<F: Field>(r: &mut Report, l: &LieAlgebra, a: &OneForm, w: &TwoForm) -> anyhow::Result<()> {
    let (first, second) = lsa_routes::<F>(l, a, w)?;
    let agree = first == second;
    r.check("lsa routes agree", agree, || format!("second route:\n{second}"));
    let sym = left_symmetry_defect(&first, l)?;
    r.check("left symmetry", sym.ok(), || format!("{:?}", sym));
    let table = first.to_string();
    r.text.extend(table.lines().map(str::to_string));
    r.result = Some(json!({ "products": table.lines().collect::<Vec<_>>() }));
    Ok(())
}

fn lsa_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let (a, w) = forms(&f, path)?;
    let mut r = Report::new("lsa", ctx.input(&[path]));
    let mut vars = f.algebra.variables();
    vars.extend(a.variables());
    vars.extend(w.variables());
    match vars.len() {
        0 => lsa_in::<Rational>(&mut r, &f.algebra, &a, &w)?,
        1 => lsa_in::<RatFunc>(&mut r, &f.algebra, &a, &w)?,
        _ => bail!("more than one unbound parameter; bind all but one with --params"),
    }
    Ok(r)
}

fn biinv_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let (a, w) = forms(&f, path)?;
    let b = biinvariance::<Rational>(&f.algebra, &a, &w)?;
    let mut r = Report::new("biinv", ctx.input(&[path]));
    let mut parts = Vec::new();
    for k in 1..=4u8 {
        let pass = !b.failed_conditions.contains(&k);
        r.check(format!("condition {k}"), pass, || "fails on some basis triple".to_string());
        parts.push(format!("condition {k}: {}", okfail(pass)));
    }
    r.check("associative", b.associative, || "associator nonzero".to_string());
    r.check("consistent", b.consistent(), || "conditions and associativity disagree".to_string());
    parts.push(format!("associative: {}", yes(b.associative)));
    parts.push(format!("bi-invariant: {}", yes(b.conditions_hold() && b.associative)));
    r.line(parts.join(", "));
    r.result = Some(serde_json::to_value(&b)?);
    Ok(r)
}

fn exists_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let ex = exists_cosymplectic(&f.algebra)?;
    let mut r = Report::new("exists", ctx.input(&[path]));
    r.check("exists", ex.exists(), || "det Φ ≡ 0 on Z¹×Z²".to_string());
    let mut result = json!({ "determinant": ex.determinant.to_string() });
    match &ex.witness {
        Some(wit) => {
            r.line(format!("YES: alpha = {}, omega = {}", wit.alpha, wit.omega));
            result["alpha"] = json!(wit.alpha.to_string());
            result["omega"] = json!(wit.omega.to_string());
        }
        None => r.line("NO: det Φ ≡ 0 on Z¹×Z²"),
    }
    r.result = Some(result);
    Ok(r)
}

fn construction_lines(r: &mut Report, c: &Construction) {
    r.text.extend(bracket_lines(&c.algebra));
    r.line(format!("alpha: {}", c.alpha));
    r.line(format!("omega: {}", c.omega));
    for (i, v) in &c.forced_lambda {
        r.line(format!("forced lambda(e{}) = {v}", i + 1));
    }
    r.line(format!("reeb: {}", format_vector(&c.reeb)));
    r.result = Some(json!({
        "brackets": bracket_lines(&c.algebra),
        "alpha": c.alpha.to_string(),
        "omega": c.omega.to_string(),
        "reeb": format_vector(&c.reeb),
        "forced_lambda": c.forced_lambda.iter()
            .map(|(i, v)| (format!("e{}", i + 1), v.to_string()))
            .collect::<BTreeMap<_, _>>(),
    }));
}

fn extend_cmd(
    ctx: &Ctx,
    which: Option<Which>,
    data: &Path,
    alpha_d: Option<&str>,
    base: &Path,
) -> anyhow::Result<Report> {
    let raw = parse_algebra(&read(base)?).with_context(|| format!("parsing {}", base.display()))?;
    let n = raw.algebra.dim();
    let (e, data_params) = parse_extension(&read(data)?, n).with_context(|| format!("parsing {}", data.display()))?;
    let mut all = raw.params.clone();
    all.extend(data_params);
    all.extend(ctx.params.clone());
    let f = raw.bind(&all);
    let e = e.substitute(&all);
    let alpha_d = match alpha_d {
        Some(s) => Scalar::parse(s).map_err(|err| anyhow!("--alpha-d: {err}"))?.substitute(&all),
        None => Scalar::zero(),
    };
    let mut r = Report::new("extend", ctx.input(&[base, data]));
    r.input["construction"] = json!(which.map(|w| format!("{w:?}")));
    let built = match which {
        None => double_extend(&f.algebra, &e).map(|g| {
            r.text.extend(bracket_lines(&g));
            r.result = Some(json!({ "brackets": bracket_lines(&g) }));
        }),
        Some(w) => {
            let (a, om) = forms(&f, base)?;
            match w {
                Which::A => construct_a(&f.algebra, &a, &om, &e),
                Which::B => construct_b(&f.algebra, &a, &om, &e, &alpha_d),
                Which::C => construct_c(&f.algebra, &a, &om, &e.phi, &e.v, &alpha_d),
            }
            .map(|c| construction_lines(&mut r, &c))
        }
    };
    match built {
        Ok(()) => r.check("conditions", true, String::new),
        Err(Error::ConditionsFail(fails)) => {
            for f in &fails {
                r.check(f.clone(), false, || "condition fails".to_string());
            }
            r.line(format!("conditions fail: {}", fails.join(", ")));
        }
        Err(other) => return Err(other.into()),
    }
    Ok(r)
}

fn symplectize_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let f = ctx.load(path)?;
    let (a, w) = forms(&f, path)?;
    let cosym = validate(&f.algebra, &a, &w)?.ok();
    let pair = to_symplectic(&f.algebra, &a, &w)?;
    let sym = pair.validate()?.ok();
    let mut r = Report::new("symplectize", ctx.input(&[path]));
    r.check("cosymplectic", cosym, || "input is not cosymplectic".to_string());
    r.check("symplectic", sym, || "output is not symplectic".to_string());
    let out = AlgebraFile {
        omega: Some(pair.omega.clone()),
        ..AlgebraFile::new(pair.algebra.clone())
    };
    let text = print_algebra(&out);
    r.text.extend(text.lines().map(str::to_string));
    r.line(format!("cosymplectic: {}, symplectic: {}", yes(cosym), yes(sym)));
    r.result = Some(json!({ "file": text }));
    Ok(r)
}

fn catalog_cmd(ctx: &Ctx, action: &CatalogAction) -> anyhow::Result<Report> {
    match action {
        CatalogAction::List => {
            let mut r = Report::new("catalog list", ctx.input(&[]));
            let mut rows = Vec::new();
            for e in catalog::entries() {
                let kind = serde_json::to_value(e.kind)?;
                let kind = kind.as_str().unwrap_or_default().to_string();
                let params: Vec<String> = e.params().into_iter().collect();
                r.line(format!("{:<28} {:<12} dim {}  {}", e.name, kind, e.dim(), params.join(",")));
                rows.push(json!({ "name": e.name, "kind": kind, "dim": e.dim(), "params": params }));
            }
            r.result = Some(Value::Array(rows));
            Ok(r)
        }
        CatalogAction::Export { name } => {
            let mut r = Report::new("catalog export", json!({ "name": name }));
            let text = catalog::export(name, &ctx.params)?;
            r.text.extend(text.lines().map(str::to_string));
            r.result = Some(json!({ "file": text }));
            Ok(r)
        }
        CatalogAction::Instantiate { name } => {
            let mut r = Report::new("catalog instantiate", ctx.input(&[]));
            r.input["name"] = json!(name);
            let inst = catalog::instantiate(name, &ctx.params)?;
            if let (Some(a), Some(w)) = (&inst.alpha, &inst.omega) {
                let rep = validate(&inst.algebra, a, w)?;
                r.check("validates", rep.ok(), || rep.failures().join(", "));
            }
            let text = print_algebra(&inst.file());
            r.text.extend(text.lines().map(str::to_string));
            r.result = Some(json!({ "file": text }));
            Ok(r)
        }
        CatalogAction::VerifyAll => {
            let mut r = Report::new("catalog verify-all", json!({ "seedless": ctx.sampling == Sampling::Fixed }));
            let rep = catalog::verify_all_with(ctx.sampling);
            for e in &rep.entries {
                r.check(e.name.clone(), e.ok(), || e.flag.clone());
                r.line(format!("{}: {} [{}]", e.name, okfail(e.ok()), e.flag));
                for c in e.checks.iter().filter(|c| !c.pass) {
                    let tag = if c.flagged { "flagged" } else { "FAIL" };
                    r.line(format!("    {tag} {}: {}", c.name, c.defect.as_deref().unwrap_or("")));
                }
            }
            r.line(format!("verify-all: {}", okfail(rep.ok)));
            r.result = Some(serde_json::to_value(&rep)?);
            Ok(r)
        }
    }
}

fn isocheck_cmd(ctx: &Ctx, from: &Path, to: &Path, map: &Path) -> anyhow::Result<Report> {
    let f1 = ctx.load(from)?;
    let f2 = ctx.load(to)?;
    let m = parse_map(&read(map)?).with_context(|| format!("parsing {}", map.display()))?;
    let rep = check_isomorphism(&f1.algebra, &f2.algebra, &m, side(&f1), side(&f2))?;
    let mut r = Report::new("isocheck", ctx.input(&[from, to, map]));
    r.check("invertible", rep.invertible, || "det = 0".to_string());
    r.check("homomorphism", rep.homomorphism_defects.is_empty(), || {
        rep.homomorphism_defects
            .iter()
            .map(|d| format!("(e{},e{}): {}", d.i + 1, d.j + 1, format_vector(&d.defect)))
            .collect::<Vec<_>>()
            .join("; ")
    });
    if let Some(p) = rep.alpha_pulls_back {
        r.check("alpha pulls back", p, || "M*alpha2 != alpha1".to_string());
    }
    if let Some(p) = rep.omega_pulls_back {
        r.check("omega pulls back", p, || "M*omega2 != omega1".to_string());
    }
    r.line(format!("isomorphism: {}", yes(rep.ok())));
    r.result = Some(serde_json::to_value(&rep)?);
    Ok(r)
}

fn side(f: &AlgebraFile) -> Forms<'_> {
    Forms {
        alpha: f.alpha.as_ref(),
        omega: f.omega.as_ref(),
    }
}

fn properties_cmd(ctx: &Ctx) -> anyhow::Result<Report> {
    let mut r = Report::new("properties", json!({ "seedless": ctx.sampling == Sampling::Fixed }));
    let suites = properties::run_all(ctx.sampling)?;
    for s in &suites {
        r.check(s.name, s.ok(), || s.counterexamples.join("; "));
        r.line(format!(
            "{}: trials {}, both hold {}, counterexamples {}",
            s.name,
            s.trials,
            s.positives,
            s.counterexamples.len()
        ));
    }
    r.result = Some(serde_json::to_value(&suites)?);
    Ok(r)
}

fn run(cli: &Cli, ctx: &Ctx) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Validate { file } => validate_cmd(ctx, file),
        Command::Reeb { file } => reeb_cmd(ctx, file),
        Command::Lsa { file } => lsa_cmd(ctx, file),
        Command::Biinv { file } => biinv_cmd(ctx, file),
        Command::Exists { file } => exists_cmd(ctx, file),
        Command::Extend {
            construction,
            data,
            alpha_d,
            base,
        } => extend_cmd(ctx, *construction, data, alpha_d.as_deref(), base),
        Command::Symplectize { file } => symplectize_cmd(ctx, file),
        Command::Catalog { action } => catalog_cmd(ctx, action),
        Command::Isocheck { from, to, map } => isocheck_cmd(ctx, from, to, map),
        Command::Properties => properties_cmd(ctx),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Reeb { .. } => "reeb",
        Command::Lsa { .. } => "lsa",
        Command::Biinv { .. } => "biinv",
        Command::Exists { .. } => "exists",
        Command::Extend { .. } => "extend",
        Command::Symplectize { .. } => "symplectize",
        Command::Catalog { .. } => "catalog",
        Command::Isocheck { .. } => "isocheck",
        Command::Properties => "properties",
    }
}

/// Engine errors that say something about the mathematics rather than the input.
fn is_math(e: &Error) -> bool {
    matches!(
        e,
        Error::SingularPhi
            | Error::DegenerateOmega
            | Error::NotDerivation
            | Error::NotIst
            | Error::NotLie(..)
            | Error::NotCosymplectic(_)
            | Error::ConditionsFail(_)
            | Error::DegenerateParams
    )
}

fn emit(r: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
    } else {
        for l in &r.text {
            println!("{l}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let params = match parse_params(cli.params.as_deref()) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx {
        json: cli.json,
        params,
        sampling: if cli.seedless { Sampling::Fixed } else { Sampling::default() },
    };
    match run(&cli, &ctx) {
        Ok(r) => {
            emit(&r, ctx.json);
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => match err.downcast_ref::<Error>().filter(|e| is_math(e)) {
            Some(e) => {
                let mut r = Report::new(command_name(&cli.command), Value::Null);
                r.check("error", false, || e.to_string());
                r.line(format!("error: {e}"));
                emit(&r, ctx.json);
                ExitCode::from(1)
            }
            None => {
                eprintln!("error: {err:#}");
                ExitCode::from(2)
            }
        },
    }
}

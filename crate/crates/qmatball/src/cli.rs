//! Command-line front end: argument parsing, verb dispatch and output formatting.
//!
//! Exit codes are 0 on success, 1 on a usage or input error and 2 when a
//! certification suite finds a failing identity.

use crate::algebras::{make_preset, parse_size, AlgebraName, AlgebraPreset, PresetSpec};
use crate::fock_reps::{check_equivalence, check_type, degree, gram_matrix, h_basis, lambda_chain, rep_t, rep_tpoly, rule_failures, PiRep, TensorRep};
use crate::groundfield::{rational_sqrt, Scalar};
use crate::hopf_action::{HopfAction, Letter, UqElement};
use crate::ncpoly::{poly_from_json_str, poly_to_json, rule_to_json, word_string, Counts, NCPoly};
use crate::qtrace_integral::{check_s2_conjugation, du_basis, invariance_suite, Integral};
use crate::rmatrix::{rhat, verify_rhat_properties, Tag};
use crate::sln_minors::element_x;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "qmatball", version, about = "Exact computations on the quantum matrix ball")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Dimensions of the graded pieces of a preset.
    Dims(Opts),
    /// Normal form of a polynomial given as JSON.
    Nf(Opts),
    /// Action of an element of the enveloping algebra on a polynomial.
    Act(Opts),
    /// Gram matrices of the f0-module and their positivity at q0.
    Gram(Opts),
    /// Table of the invariant integral on the finite functions.
    Integral(Opts),
    /// Invariance, S^2-conjugation and realness certificates for the integral.
    Invariance(Opts),
    /// Operator identities, types and equivalence of the Fock representations.
    RepCheck(Opts),
    /// Hecke, braid and invertibility report for the braid matrices.
    RmatrixCheck(Opts),
    /// Serialized presentation of a preset.
    Export(Opts),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Preset such as cmat:2x2, pol:1x1, lambda:2x1, omega:1x1, funu:2x2, du:1x1.
    #[arg(long)]
    pub algebra: Option<PresetSpec>,
    /// Matrix size MxN.
    #[arg(long, value_parser = parse_mn)]
    pub mn: Option<(usize, usize)>,
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Bidegree bound KxL.
    #[arg(long, value_parser = parse_bidegree)]
    pub bidegree: Option<(u32, u32)>,
    /// Numeric point p/r in (0, 1), a square of a rational.
    #[arg(long, value_parser = parse_q0)]
    pub q0: Option<BigRational>,
    /// Fock degree bound for representation checks.
    #[arg(long)]
    pub cutoff: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the output to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Polynomial as JSON, or @path to a JSON file.
    #[arg(long)]
    pub input: Option<String>,
    /// Enveloping-algebra element: a word such as "E1 F2" or JSON terms.
    #[arg(long)]
    pub xi: Option<String>,
}

fn parse_mn(s: &str) -> Result<(usize, usize), String> {
    parse_size(s).map_err(|e| e.to_string())
}

fn parse_bidegree(s: &str) -> Result<(u32, u32), String> {
    let err = || format!("bad bidegree `{s}` (expected KxL)");
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(err)?;
    Ok((a.trim().parse().map_err(|_| err())?, b.trim().parse().map_err(|_| err())?))
}

fn parse_q0(s: &str) -> Result<BigRational, String> {
    let q = crate::groundfield::parse_rational(s).ok_or_else(|| format!("bad rational `{s}`"))?;
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    if q <= zero || q >= one {
        return Err(format!("q0 = {s} must lie in (0, 1)"));
    }
    rational_sqrt(&q).ok_or_else(|| format!("q0 = {s} is not the square of a rational"))?;
    Ok(q)
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Suite(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Suite(_) => 2,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// A table rendered either as CSV or as a JSON array of objects.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Table {
        Table { header, rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(vec![]);
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r.iter().map(cell)).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.header.iter().map(|h| h.to_string()).zip(r.iter().cloned()).collect()))
                    .collect();
                format!("{}\n", serde_json::to_string_pretty(&rows).expect("json"))
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn size(o: &Opts) -> (usize, usize) {
    o.mn.or(o.algebra.map(|a| (a.m, a.n))).unwrap_or((1, 1))
}

fn preset(o: &Opts) -> Result<AlgebraPreset, CliError> {
    let spec = o.algebra.ok_or_else(|| usage("this verb needs --algebra"))?;
    Ok(make_preset(spec.name, spec.m, spec.n))
}

fn funu(o: &Opts) -> AlgebraPreset {
    let (m, n) = size(o);
    make_preset(AlgebraName::FunU, m, n)
}

fn read_input(o: &Opts) -> Result<String, CliError> {
    let raw = o.input.as_deref().ok_or_else(|| usage("this verb needs --input"))?;
    match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}"))),
        None => Ok(raw.to_string()),
    }
}

fn parse_xi(s: &str) -> Result<UqElement, CliError> {
    let t = s.trim();
    let parsed = if t.starts_with('{') {
        serde_json::from_str::<Value>(t).ok().and_then(|v| UqElement::from_json(&v))
    } else {
        UqElement::parse_word(t)
    };
    parsed.ok_or_else(|| usage(format!("cannot parse enveloping-algebra element `{s}`")))
}

fn render_poly(p: &NCPoly, format: Option<Format>) -> String {
    match format {
        None => format!("{p}\n"),
        Some(Format::Json) => format!("{}\n", poly_to_json(p)),
        Some(Format::Csv) => {
            let mut t = Table::new(vec!["coeff", "word"]);
            for (w, c) in p.terms() {
                t.push(vec![json!(c.to_canonical_string()), json!(word_string(w))]);
            }
            t.render(Format::Csv)
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n + i) / (i + 1))
}

fn dims(o: &Opts) -> Result<String, CliError> {
    let p = preset(o)?;
    let top = o.max_degree.unwrap_or(4);
    let mn = (p.m() * p.n()) as u64;
    let count = |c: Counts| json!(p.pres.enumerate_basis(c).len());
    let table = match p.spec.name {
        AlgebraName::CMat => {
            let mut t = Table::new(vec!["k", "dim", "binomial"]);
            for k in 0..=top {
                t.push(vec![json!(k), count(Counts::degree(k)), json!(binomial(mn, k as u64))]);
            }
            t
        }
        AlgebraName::Pol => {
            let mut t = Table::new(vec!["k", "l", "dim"]);
            for k in 0..=top {
                for l in 0..=top {
                    t.push(vec![json!(k), json!(l), count(Counts::bidegree(k, l))]);
                }
            }
            t
        }
        AlgebraName::Lambda => {
            let mut t = Table::new(vec!["k", "d", "dim"]);
            for k in 0..=top {
                for d in 0..=(top - k).min(mn as u32) {
                    t.push(vec![json!(k), json!(d), count(Counts::degree(k).with_dz(d))]);
                }
            }
            t
        }
        AlgebraName::Omega => {
            let mut t = Table::new(vec!["k", "d", "dbar", "l", "dim"]);
            for k in 0..=top {
                for d in 0..=top - k {
                    for e in 0..=top - k - d {
                        for l in 0..=top - k - d - e {
                            let c = Counts {
                                z: k,
                                dz: d,
                                dzs: e,
                                zs: l,
                                ..Default::default()
                            };
                            t.push(vec![json!(k), json!(d), json!(e), json!(l), count(c)]);
                        }
                    }
                }
            }
            t
        }
        AlgebraName::FunU | AlgebraName::DU => {
            let mut t = Table::new(vec!["k", "l", "f0", "dim"]);
            let f0s: &[u32] = if p.spec.name == AlgebraName::DU { &[1] } else { &[0, 1] };
            for k in 0..=top {
                for l in 0..=top {
                    for &f in f0s {
                        let c = Counts {
                            z: k,
                            f0: f,
                            zs: l,
                            ..Default::default()
                        };
                        t.push(vec![json!(k), json!(l), json!(f), count(c)]);
                    }
                }
            }
            t
        }
    };
    Ok(table.render(o.format.unwrap_or(Format::Csv)))
}

fn nf(o: &Opts) -> Result<String, CliError> {
    let p = preset(o)?;
    let f = poly_from_json_str(&read_input(o)?).map_err(|e| usage(e.0))?;
    let g = p.pres.normal_form(&f).map_err(usage)?;
    Ok(render_poly(&g, o.format))
}

fn act(o: &Opts) -> Result<String, CliError> {
    let p = preset(o)?;
    let xi = parse_xi(o.xi.as_deref().ok_or_else(|| usage("act needs --xi"))?)?;
    let f = poly_from_json_str(&read_input(o)?).map_err(|e| usage(e.0))?;
    let h = HopfAction::new(&p);
    let g = h.try_act(&xi, &f).map_err(usage)?;
    Ok(render_poly(&g, o.format))
}

fn gram(o: &Opts) -> Result<String, CliError> {
    let p = funu(o);
    let top = o.max_degree.unwrap_or(3);
    let q0 = o.q0.clone().unwrap_or_else(|| crate::groundfield::rational(1, 4));
    let mut blocks = Vec::new();
    let mut table = Table::new(vec!["k", "row", "col", "value"]);
    let mut all_positive = true;
    for k in 0..=top {
        let g = gram_matrix(&p, k).map_err(usage)?;
        let basis: Vec<String> = h_basis(&p, k).iter().map(|w| word_string(w)).collect();
        let mut positive = true;
        for d in g.leading_principal_minors() {
            let v = d.eval_at_q(&q0).map_err(usage)?;
            positive &= v.is_real() && v.real_sign() == Some(1);
        }
        all_positive &= positive;
        let mut rows = Vec::new();
        for i in 0..g.rows {
            let mut row = Vec::new();
            for j in 0..g.cols {
                let v = g.get(i, j).to_canonical_string();
                table.push(vec![json!(k), json!(basis[i]), json!(basis[j]), json!(v)]);
                row.push(json!(v));
            }
            rows.push(Value::Array(row));
        }
        blocks.push(json!({"k": k, "basis": basis, "matrix": rows, "positive_definite": positive}));
    }
    let out = match o.format.unwrap_or(Format::Csv) {
        Format::Csv => format!(
            "{}# positive definite at q0={q0} for k<={top}: {}\n",
            table.render(Format::Csv),
            if all_positive { "yes" } else { "no" }
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({"q0": q0.to_string(), "blocks": blocks})).expect("json")
        ),
    };
    if all_positive {
        Ok(out)
    } else {
        Err(CliError::Suite(format!("{out}Gram matrix not positive definite at q0={q0}")))
    }
}

fn integral(o: &Opts) -> Result<String, CliError> {
    let p = funu(o);
    let (k, l) = o.bidegree.unwrap_or((2, 2));
    let ig = Integral::new(&p).map_err(usage)?;
    let mut t = Table::new(vec!["monomial", "nu", "pretty"]);
    for a in 0..=k {
        for b in 0..=l {
            for w in du_basis(&p, a, b) {
                let v = ig.trace(&NCPoly::word(w.clone())).map_err(usage)?;
                t.push(vec![json!(word_string(&w)), json!(v.to_canonical_string()), json!(v.pretty())]);
            }
        }
    }
    Ok(t.render(o.format.unwrap_or(Format::Csv)))
}

/// Accumulates report lines and remembers the first failing identity.
#[derive(Default)]
struct Report {
    lines: Vec<String>,
    first_failure: Option<String>,
}

impl Report {
    fn record(&mut self, what: String, checked: usize, failures: &[String]) {
        self.lines.push(format!("{what}: {checked} checks, {} failures", failures.len()));
        if self.first_failure.is_none() {
            self.first_failure = failures.first().map(|f| format!("{what}: {f}"));
        }
    }

    fn finish(mut self) -> Result<String, CliError> {
        match self.first_failure.take() {
            None => {
                self.lines.push("all checks passed".into());
                Ok(self.lines.join("\n") + "\n")
            }
            Some(f) => {
                self.lines.push(format!("FAILED: first failing identity: {f}"));
                Err(CliError::Suite(self.lines.join("\n") + "\n"))
            }
        }
    }
}

fn random_finite_function(p: &AlgebraPreset, rng: &mut ChaCha8Rng, k: u32, l: u32) -> NCPoly {
    let mut f = NCPoly::zero();
    while f.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let basis = du_basis(p, rng.gen_range(0..=k), rng.gen_range(0..=l));
            let w = basis[rng.gen_range(0..basis.len())].clone();
            let c = Scalar::from_gq(crate::groundfield::Gq::new(
                crate::groundfield::rational(rng.gen_range(-3..=3), 1),
                crate::groundfield::rational(rng.gen_range(-2..=2), 1),
            ));
            f.add_term(w, c);
        }
    }
    f
}

fn invariance(o: &Opts) -> Result<String, CliError> {
    let p = funu(o);
    let (k, l) = o.bidegree.unwrap_or((3, 3));
    let mut report = Report::default();
    let inv = invariance_suite(&p, k, l).map_err(usage)?;
    report.record(
        format!("invariance nu(xi f) = eps(xi) nu(f), bidegree <= ({k},{l})"),
        inv.checked,
        &inv.failures,
    );
    let h = HopfAction::new(&p);
    let top = o.max_degree.unwrap_or(k.max(l));
    let letters = Letter::all(p.m() + p.n() - 1);
    let s2: Vec<String> = letters
        .iter()
        .filter(|&&x| !check_s2_conjugation(&h, &UqElement::letter(x), top))
        .map(|x| x.token())
        .collect();
    report.record(format!("S^2 conjugation on H_<={top}"), letters.len(), &s2);
    let ig = Integral::new(&p).map_err(usage)?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut real = Vec::new();
    let samples = 10;
    for _ in 0..samples {
        let f = random_finite_function(&p, &mut rng, k, l);
        if !ig.check_realness(&f).map_err(usage)? || !ig.check_trace_form(&f).map_err(usage)? {
            real.push(f.to_string());
        }
    }
    report.record(format!("realness and trace form (seed {})", o.seed), samples, &real);
    report.finish()
}

fn rep_check(o: &Opts) -> Result<String, CliError> {
    let (m, n) = size(o);
    let k = o.cutoff.unwrap_or(3);
    let mut report = Report::default();
    let pi = PiRep::new(m, n);
    let pol = make_preset(AlgebraName::Pol, m, n);
    let bad: Vec<String> = rule_failures(&pol, &pi, k).map_err(usage)?.iter().map(|r| word_string(r)).collect();
    report.record(format!("Pol rules as operator identities on degrees <= {k}"), pol.pres.rules().len(), &bad);
    let chain = lambda_chain(m, n);
    let ty = check_type(&TensorRep::tilde_pi(m, n), &chain[0], &chain[m * n], k);
    report.record(format!("type (Lambda1, Lambda2) on degrees <= {k}"), ty.checked, &ty.failures);
    let mut diag = Vec::new();
    if !rep_t(m, n, k).is_diagonal_with(k, |e| Scalar::q_pow(-(degree(e) as i64))) {
        diag.push("t".to_string());
    }
    if !rep_tpoly(m, n, &element_x(m, n), k).is_diagonal_with(k, |e| Scalar::q_pow(-2 * degree(e) as i64)) {
        diag.push("x".to_string());
    }
    report.record("diagonal laws for t and x".into(), 2, &diag);
    let eq = check_equivalence(&funu(o), &pi, k).map_err(usage)?;
    let eq_fail: Vec<String> = eq
        .isometry_failures
        .iter()
        .chain(&eq.rank_failures)
        .chain(&eq.intertwining_failures)
        .cloned()
        .collect();
    report.record(format!("Theta/Pi equivalence through degree {k}"), 3, &eq_fail);
    report.finish()
}

fn rmatrix_check(o: &Opts) -> Result<String, CliError> {
    let mut report = Report::default();
    for tag in [Tag::UU, Tag::VV, Tag::BarUU, Tag::BarVV] {
        let top = o.max_degree.unwrap_or(if tag.is_bar() { 4 } else { 3 });
        let mut bad = Vec::new();
        for d in 1..=top as usize {
            let r = verify_rhat_properties(&rhat(tag, d));
            if !r.all_hold() {
                bad.push(format!("d={d} hecke={:?} braid={:?} invertible={:?}", r.hecke, r.braid, r.invertible));
            }
        }
        let what = if tag.is_bar() { "invertibility" } else { "Hecke and braid" };
        report.record(format!("{tag:?} {what} for d <= {top}"), top as usize, &bad);
    }
    report.finish()
}

fn export(o: &Opts) -> Result<String, CliError> {
    let p = preset(o)?;
    match o.format.unwrap_or(Format::Json) {
        Format::Json => {
            let v = json!({
                "preset": p.spec.to_string(),
                "m": p.m(),
                "n": p.n(),
                "alphabet": p.pres.alphabet().iter().map(|s| s.token()).collect::<Vec<_>>(),
                "rules": p.pres.rules().iter().map(rule_to_json).collect::<Vec<_>>(),
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
        }
        Format::Csv => {
            let mut t = Table::new(vec!["lhs", "rhs"]);
            for r in p.pres.rules() {
                t.push(vec![json!(word_string(&r.lhs)), json!(poly_to_json(&r.rhs).to_string())]);
            }
            Ok(t.render(Format::Csv))
        }
    }
}

fn dispatch(verb: &Verb) -> (&Opts, Result<String, CliError>) {
    match verb {
        Verb::Dims(o) => (o, dims(o)),
        Verb::Nf(o) => (o, nf(o)),
        Verb::Act(o) => (o, act(o)),
        Verb::Gram(o) => (o, gram(o)),
        Verb::Integral(o) => (o, integral(o)),
        Verb::Invariance(o) => (o, invariance(o)),
        Verb::RepCheck(o) => (o, rep_check(o)),
        Verb::RmatrixCheck(o) => (o, rmatrix_check(o)),
        Verb::Export(o) => (o, export(o)),
    }
}

fn emit(o: &Opts, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &o.out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

/// Parse the arguments, run the verb and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = out.write_all(text.as_bytes());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        1
                    } else {
                        0
                    }
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let (opts, result) = dispatch(&cli.verb);
    match result.and_then(|text| emit(opts, &text, out)) {
        Ok(()) => 0,
        Err(e) => {
            let code = e.code();
            match e {
                CliError::Usage(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Suite(text) => {
                    let _ = emit(opts, &text, out);
                    let _ = writeln!(err, "suite failure");
                }
            }
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qmatball").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn argument_parsers() {
        assert_eq!(parse_bidegree("3x2"), Ok((3, 2)));
        assert!(parse_bidegree("3").is_err());
        assert!(parse_q0("1/4").is_ok());
        assert!(parse_q0("1/2").is_err());
        assert!(parse_q0("4").is_err());
        assert_eq!(parse_mn("2x1"), Ok((2, 1)));
        assert_eq!(binomial(4, 2), 10);
    }

    #[test]
    fn usage_errors_exit_with_one() {
        assert_eq!(run_str(&["frobnicate"]).0, 1);
        assert_eq!(run_str(&["dims"]).0, 1);
        assert_eq!(run_str(&["dims", "--algebra", "foo:2x2"]).0, 1);
        assert_eq!(run_str(&["gram", "--q0", "1/3"]).0, 1);
        assert_eq!(run_str(&["nf", "--algebra", "pol:1x1", "--input", "{"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn act_on_f0() {
        let (code, out, _) = run_str(&[
            "act",
            "--algebra",
            "funu:1x1",
            "--xi",
            "K1",
            "--input",
            r#"{"terms":[{"coeff":"1","word":["f0"]}]}"#,
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "f0");
    }
}

//! `regbound`: graph invariants, edge ideals, Betti tables and regularity checks from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verdict fails, 2 on bad usage or input, 3 when a
//! resource cap stops a computation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regbound::error::{EngineError, GraphError, HarnessError, IdealError};
use regbound::graph::{self, Family, Graph};
use regbound::harness::{self, CorpusReport, CorpusSpec, TheoremReport, ALL_CHECKS};
use regbound::ideal::{self, MonomialIdeal};
use regbound::{Engine, EngineConfig, Field};

#[derive(Parser)]
#[command(name = "regbound", version, about = "Regularity of powers of edge ideals, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number, stable-complex dimension and a maximum stable set.
    Alpha(Common),
    /// Induced matching number.
    Nu(Common),
    /// The whisker graph, with a leaf attached to every vertex.
    Whisker(Common),
    /// Hansen and Kwok upper bounds on the independence number.
    Bounds(Common),
    /// Minimal generators of an ideal attached to the graph.
    Ideal(IdealArgs),
    /// Multigraded Betti numbers, shown as a graded diagram.
    Betti(IdealArgs),
    /// Castelnuovo–Mumford regularity.
    Reg(IdealArgs),
    /// Runs theorem checks on one graph.
    Check(CheckArgs),
    /// Runs theorem checks over a corpus of graphs.
    Sweep(SweepArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// Graph family: path:N, cycle:N, complete:N or random:N:P[:SEED].
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Edge-list file: a header `n m`, then one `u v` pair per line (1-based).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Largest power to check.
    #[arg(long)]
    smax: Option<u32>,
    /// Coefficient field: `q` for the rationals, `pP` for Z/P with P > 10000 prime.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest lcm lattice the engine will build.
    #[arg(long, default_value_t = regbound::betti::lattice::DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Seed for random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// The edge ideal I(G).
    I,
    /// I(G) plus the squares of the variables.
    J,
    /// Polarization of J.
    Jpol,
    /// Edge ideal of the whisker graph.
    Istar,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Which::I)]
    which: Which,
    /// Power of the ideal.
    #[arg(long, default_value_t = 1)]
    power: u32,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: Common,
    /// Runs every check.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    check: CheckArgs,
    /// Corpus spec, e.g. `default` or `connected:2-4,cycles:5-8,random:20:6`.
    #[arg(long, default_value = "default")]
    corpus: String,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "q" {
        return Ok(Field::Rationals);
    }
    let p: u64 = s.strip_prefix('p').and_then(|p| p.parse().ok()).ok_or("expected `q` or `pP`")?;
    if p <= 10_000 {
        return Err(format!("prime {p} is not above 10000"));
    }
    if (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(format!("{p} is not prime"));
    }
    Ok(Field::Prime(p))
}

/// Errors sorted by exit status.
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Engine { graph_id, s, source } if source.is_resource() => {
                Failure::Resource(format!("{graph_id} at s = {s}: {source}"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a command produced: text for stdout and the exit status.
struct Outcome {
    out: String,
    code: u8,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { out, code: 0 }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

impl Common {
    /// The graph and a short name for it.
    fn graph(&self) -> Result<(String, Graph), Failure> {
        match (&self.family, &self.input) {
            (Some(f), _) => {
                let fam = Family::parse(f, self.seed)?;
                Ok((fam.label(), graph::family(&fam)?))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let g = graph::parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let name = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
                Ok((name, g))
            }
            (None, None) => Err(Failure::Usage("one of --family or --input is required".into())),
        }
    }

    fn engine(&self) -> Engine {
        Engine::new(EngineConfig { field: self.field, lattice_cap: self.lattice_cap, jobs: self.jobs, ..Default::default() })
    }

    fn smax(&self) -> Result<Option<u32>, Failure> {
        match self.smax {
            Some(0) => Err(Failure::Usage("--smax must be at least 1".into())),
            s => Ok(s),
        }
    }
}

fn alpha(c: &Common) -> Result<Outcome, Failure> {
    let (name, g) = c.graph()?;
    let r = graph::alpha(&g);
    Ok(Outcome::ok(match c.format {
        Format::Json => json(&r),
        Format::Csv => format!("graph,alpha,c\n{name},{},{}\n", r.alpha, r.c),
        Format::Text => format!("alpha({name}) = {}\nc = {}\nmaximum stable set: {:?}\n", r.alpha, r.c, r.witness),
    }))
}

fn nu(c: &Common) -> Result<Outcome, Failure> {
    let (name, g) = c.graph()?;
    let m = graph::induced_matching(&g);
    Ok(Outcome::ok(match c.format {
        Format::Json => json(&serde_json::json!({ "nu": m.len(), "matching": m })),
        Format::Csv => format!("graph,nu\n{name},{}\n", m.len()),
        Format::Text => format!("nu({name}) = {}\ninduced matching: {m:?}\n", m.len()),
    }))
}

fn whisker(c: &Common) -> Result<Outcome, Failure> {
    let (_, g) = c.graph()?;
    let w = graph::whisker(&g)?;
    Ok(Outcome::ok(match c.format {
        Format::Json => json(&w),
        Format::Csv => w.edges().fold("u,v\n".to_string(), |mut s, (u, v)| {
            let _ = writeln!(s, "{u},{v}");
            s
        }),
        Format::Text => graph::to_edge_list(&w),
    }))
}

fn bounds(c: &Common) -> Result<Outcome, Failure> {
    let (name, g) = c.graph()?;
    let r = graph::alpha(&g);
    let hansen = graph::hansen_bound(g.n() as u64, g.edge_count() as u64)?;
    let kwok = graph::kwok_bound(&g).ok().map(|k| k.to_string());
    let kwok_text = kwok.clone().unwrap_or_else(|| "undefined".into());
    Ok(Outcome::ok(match c.format {
        Format::Json => json(&serde_json::json!({ "alpha": r.alpha, "c": r.c, "hansen": hansen, "kwok": kwok })),
        Format::Csv => format!("graph,alpha,c,hansen,kwok\n{name},{},{},{hansen},{}\n", r.alpha, r.c, kwok.unwrap_or_default()),
        Format::Text => format!("{name}: hansen={hansen}, kwok={kwok_text}, alpha={}, c={}\n", r.alpha, r.c),
    }))
}

/// The requested ideal and its label, e.g. `J(C5)^2`.
fn build_ideal(a: &IdealArgs) -> Result<(String, MonomialIdeal), Failure> {
    let (name, g) = a.common.graph()?;
    let i = ideal::edge_ideal(&g);
    let (label, base) = match a.which {
        Which::I => (format!("I({name})"), i),
        Which::J => (format!("J({name})"), ideal::add_squares(&i)),
        Which::Jpol => (format!("J({name})^pol"), ideal::polarize(&ideal::add_squares(&i))),
        Which::Istar => (format!("I({name}*)"), ideal::edge_ideal(&graph::whisker(&g)?)),
    };
    if a.power == 1 {
        return Ok((label, base));
    }
    if base.is_zero() {
        return Err(Failure::Usage(format!("{label} is the zero ideal")));
    }
    Ok((format!("{label}^{}", a.power), ideal::power(&base, a.power)?))
}

fn nonzero(label: &str, i: &MonomialIdeal) -> Result<(), Failure> {
    if i.is_zero() {
        Err(Failure::Usage(format!("{label} is the zero ideal")))
    } else {
        Ok(())
    }
}

fn ideal_cmd(a: &IdealArgs) -> Result<Outcome, Failure> {
    let (label, i) = build_ideal(a)?;
    Ok(Outcome::ok(match a.common.format {
        Format::Json => json(&i),
        Format::Csv => {
            let mut s = i.ring().vars().join(",");
            s.push('\n');
            for g in i.gens() {
                let row: Vec<String> = g.0.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "{}", row.join(","));
            }
            s
        }
        Format::Text => format!("{label} = {i}\n{} generators\n", i.gens().len()),
    }))
}

fn betti_cmd(a: &IdealArgs) -> Result<Outcome, Failure> {
    let (label, i) = build_ideal(a)?;
    nonzero(&label, &i)?;
    let t = a.common.engine().betti(&i)?;
    Ok(Outcome::ok(match a.common.format {
        Format::Json => json(&t.to_json()),
        Format::Csv => t.graded().into_iter().fold("i,j,dim\n".to_string(), |mut s, ((i, j), d)| {
            let _ = writeln!(s, "{i},{j},{d}");
            s
        }),
        Format::Text => format!("Betti diagram of {label} (rows j - i, columns i)\n{}", t.diagram()),
    }))
}

fn reg_cmd(a: &IdealArgs) -> Result<Outcome, Failure> {
    let (label, i) = build_ideal(a)?;
    nonzero(&label, &i)?;
    let r = a.common.engine().regularity(&i)?;
    Ok(Outcome::ok(match a.common.format {
        Format::Json => json(&serde_json::json!({ "ideal": label, "regularity": r })),
        Format::Csv => format!("ideal,regularity\n{label},{r}\n"),
        Format::Text => format!("reg {label} = {r}\n"),
    }))
}

fn selected_checks(a: &CheckArgs) -> Result<Vec<&str>, Failure> {
    if a.all || a.checks.is_empty() {
        return Ok(ALL_CHECKS.to_vec());
    }
    a.checks
        .iter()
        .map(|c| {
            ALL_CHECKS
                .iter()
                .copied()
                .find(|k| k == c)
                .ok_or_else(|| Failure::Usage(format!("unknown check `{c}`; known: {}", ALL_CHECKS.join(", "))))
        })
        .collect()
}

fn verdict_lines(r: &TheoremReport, out: &mut String) {
    for v in &r.verdicts {
        let s = v.s.map_or(String::new(), |s| format!(" s={s}"));
        let _ = writeln!(out, "{} {}/{}{s}: {}", if v.passed { "PASS" } else { "FAIL" }, v.check, v.name, v.detail);
        if let Some(f) = &v.failure {
            let _ = writeln!(out, "  replay: {}", serde_json::to_string(f).expect("failures serialize"));
        }
    }
}

fn check_cmd(a: &CheckArgs) -> Result<Outcome, Failure> {
    let checks = selected_checks(a)?;
    let (name, g) = a.common.graph()?;
    let smax = a.common.smax()?.unwrap_or_else(|| harness::default_smax(g.n()));
    let report = harness::run_checks(&checks, &name, &g, smax, &a.common.engine())?;
    let passed = report.passed();
    let out = match a.common.format {
        Format::Json => json(&report),
        Format::Csv => CorpusReport {
            checks: checks.iter().map(|c| c.to_string()).collect(),
            reports: vec![report],
            ..Default::default()
        }
        .to_csv(),
        Format::Text => {
            let inv = &report.invariants;
            let mut out = format!(
                "{name}: n={} e={} alpha={} c={} nu={} nu*={} hansen={} smax={smax}\n",
                inv.n, inv.e, inv.alpha, inv.c, inv.nu_g, inv.nu_gstar, inv.hansen
            );
            verdict_lines(&report, &mut out);
            let failed = report.failures().count();
            let _ = writeln!(out, "{} of {} verdicts passed", report.verdicts.len() - failed, report.verdicts.len());
            out
        }
    };
    Ok(Outcome { out, code: if passed { 0 } else { 1 } })
}

/// Failed verdicts take precedence over per-instance errors in the exit status.
fn sweep_cmd(a: &SweepArgs) -> Result<Outcome, Failure> {
    let common = &a.check.common;
    let checks = selected_checks(&a.check)?;
    let entries = CorpusSpec::parse(&a.corpus)?.entries(common.seed)?;
    let report = harness::run_corpus(&entries, &checks, common.smax()?, &common.engine());
    let passed = report.all_passed();
    let out = match common.format {
        Format::Json => json(&report),
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut out = String::new();
            for r in &report.reports {
                let failed = r.failures().count();
                let status = if failed == 0 { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {} (smax={}): {} verdicts, {failed} failed", r.graph_id, r.smax, r.verdicts.len());
                if failed > 0 {
                    let failing = TheoremReport { verdicts: r.failures().cloned().collect(), ..r.clone() };
                    verdict_lines(&failing, &mut out);
                }
            }
            for e in &report.skipped {
                let _ = writeln!(out, "SKIP {}: {}", e.graph_id, e.message);
            }
            for e in &report.errors {
                let _ = writeln!(out, "ERROR {}: {}", e.graph_id, e.message);
            }
            let _ = writeln!(
                out,
                "{} graphs, {} verdicts, {} failed, {} errors",
                report.reports.len(),
                report.verdict_count(),
                report.failed_verdicts(),
                report.errors.len()
            );
            out
        }
    };
    let code = if !passed {
        1
    } else if report.has_resource_errors() {
        3
    } else if !report.errors.is_empty() {
        2
    } else {
        0
    };
    Ok(Outcome { out, code })
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let outcome = match &cli.command {
        Command::Alpha(c) => alpha(c)?,
        Command::Nu(c) => nu(c)?,
        Command::Whisker(c) => whisker(c)?,
        Command::Bounds(c) => bounds(c)?,
        Command::Ideal(a) => ideal_cmd(a)?,
        Command::Betti(a) => betti_cmd(a)?,
        Command::Reg(a) => reg_cmd(a)?,
        Command::Check(a) => check_cmd(a)?,
        Command::Sweep(a) => sweep_cmd(a)?,
    };
    print!("{}", outcome.out);
    Ok(ExitCode::from(outcome.code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

//! Command-line front end: single degrees, the verification sweep, tables and group cohomology.
//!
//! Degrees are written `a,b,c` for `a + b alpha + c lambda`.

use crate::chains::Degree;
use crate::closedform::{
    basis_at, class_latex, degree_json, degree_latex, degree_text, localization_formula, localize_at, mackey_at,
    top_basis, LocalGen,
};
use crate::engine::{self, homotopy_with_budget, verify_ker_im, EngineError, DEFAULT_BUDGET};
use crate::groupcoh::{self, CoeffModule, PeriodicResolution};
use crate::intlin::FinAbGroup;
use crate::mackey::{check_axioms, differences, MackeyC4, Subgroup};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "c4hz", version, about = "RO(C4)-graded homotopy of HZ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; C4HZ_JOBS takes precedence.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homotopy Mackey functor at one degree, with generator names.
    Compute {
        #[arg(short, long, allow_hyphen_values = true)]
        degree: Degree,
        #[arg(long, value_enum)]
        level: Option<Level>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Compare the chain computation with the closed form over a window.
    Verify {
        #[arg(long, default_value = "8,5,5")]
        window: Window,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Replace the closed-form functor at this degree (fault injection).
        #[arg(long, hide = true, allow_hyphen_values = true)]
        corrupt: Option<Degree>,
    },
    /// Coefficient tables: hh, hphi2, hphi4, borel-e2, localization:{aa,al,u2a}.
    Tables {
        kind: TableKind,
        #[arg(long, default_value = "8,5,5")]
        window: Window,
    },
    /// Group cohomology of a cyclic 2-group with cup products.
    Cohomology {
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Top,
    Mid,
    Bot,
}

impl Level {
    fn subgroup(self) -> Subgroup {
        match self {
            Level::Top => Subgroup::C4,
            Level::Mid => Subgroup::C2,
            Level::Bot => Subgroup::E,
        }
    }
}

/// Half-widths of a window of degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub a: i32,
    pub b: i32,
    pub c: i32,
}

impl Window {
    pub fn degrees(self) -> Vec<Degree> {
        Degree::window(self.a, self.b, self.c)
    }
}

impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Vec<i32> = s.split(',').map(|x| x.trim().parse::<i32>()).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        match v[..] {
            [a, b, c] if a >= 0 && b >= 0 && c >= 0 => Ok(Window { a, b, c }),
            _ => Err(format!("expected three nonnegative integers A,B,C, got {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Hh,
    HPhi2,
    HPhi4,
    BorelE2,
    Localization(LocalGen),
}

impl std::str::FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hh" => Ok(TableKind::Hh),
            "hphi2" => Ok(TableKind::HPhi2),
            "hphi4" => Ok(TableKind::HPhi4),
            "borel-e2" => Ok(TableKind::BorelE2),
            _ => match s.strip_prefix("localization:") {
                Some(g) => Ok(TableKind::Localization(g.parse()?)),
                None => Err(format!("unknown table {s}")),
            },
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    GroupCoh(#[from] groupcoh::GroupCohError),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(EngineError::BudgetExceeded { .. }) | CliError::Io(_) => EXIT_RESOURCE,
            CliError::GroupCoh(_) => EXIT_PARSE,
            _ => EXIT_FAIL,
        }
    }
}

/// Rendered output and whether every check in the run passed.
#[derive(Clone, Debug)]
pub struct Report {
    pub body: String,
    pub code: i32,
}

/// `C4HZ_JOBS` overrides `--jobs`.
pub fn effective_jobs(flag: Option<usize>) -> Option<usize> {
    std::env::var("C4HZ_JOBS").ok().and_then(|v| v.trim().parse().ok()).filter(|n| *n > 0).or(flag)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Some(j) = effective_jobs(cli.jobs) {
        engine::configure_jobs(j);
    }
    match &cli.command {
        Command::Compute { degree, level, budget } => cmd_compute(*degree, *level, *budget, cli.format),
        Command::Verify { window, budget, corrupt } => {
            let config = VerifyConfig { window: *window, budget: *budget, corrupt: *corrupt };
            let summary = cmd_verify(&config);
            let code = summary.exit_code();
            Ok(Report { body: render_verify(&summary, cli.format), code })
        }
        Command::Tables { kind, window } => Ok(cmd_tables(*kind, *window, cli.format)),
        Command::Cohomology { order, max_degree } => cmd_cohomology(*order, *max_degree, cli.format),
    }
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(r) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, &r.body),
                None => {
                    print!("{}", r.body);
                    Ok(())
                }
            };
            match written {
                Ok(()) => r.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_RESOURCE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn level_names(d: Degree, k: Subgroup) -> Vec<String> {
    basis_at(d, k).1
}

pub fn cmd_compute(d: Degree, level: Option<Level>, budget: usize, format: Format) -> Result<Report, CliError> {
    let engine = homotopy_with_budget(d, budget)?.functor;
    let closed = mackey_at(d);
    let diffs = differences(&engine, &closed);
    let agrees = diffs.is_empty();
    let body = match (level, format) {
        (Some(l), Format::Json) => {
            let k = l.subgroup();
            let v = json!({
                "degree": [d.a, d.b, d.c],
                "level": k.level_name(),
                "group": engine.level(k).notation(),
                "generators": level_names(d, k),
                "agrees": agrees,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        (Some(l), Format::Latex) => {
            let k = l.subgroup();
            let gens = if k == Subgroup::C4 { top_basis(d).iter().map(class_latex).collect() } else { level_names(d, k) };
            format!("${}$ & ${}$ & ${}$ \\\\\n", d.latex(), latex_group(engine.level(k)), gens.join(",\\ "))
        }
        (Some(l), Format::Text) => {
            let k = l.subgroup();
            format!("{d} {}: {} [{}]\n", k.level_name(), engine.level(k).notation(), level_names(d, k).join(", "))
        }
        (None, Format::Json) => {
            let mut v = degree_json(d);
            v["engine"] = engine.to_json();
            v["agrees"] = json!(agrees);
            v["differences"] = json!(diffs);
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        (None, Format::Latex) => format!("{}\n", degree_latex(d)),
        (None, Format::Text) => {
            let mut s = format!("{}\n{engine}\n", degree_text(d));
            if !agrees {
                let _ = writeln!(s, "closed form differs on {}", diffs.join(", "));
            }
            s
        }
    };
    Ok(Report { body, code: if agrees { EXIT_OK } else { EXIT_FAIL } })
}

fn latex_group(g: &FinAbGroup) -> String {
    g.notation().replace('Z', "\\mathbb{Z}").replace('+', "\\oplus ")
}

/// Settings of one verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub window: Window,
    pub budget: usize,
    pub corrupt: Option<Degree>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { window: Window { a: 8, b: 5, c: 5 }, budget: DEFAULT_BUDGET, corrupt: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutcome {
    pub degree: Degree,
    pub failures: Vec<String>,
    pub resource_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub config: VerifyConfig,
    pub degrees: usize,
    pub passed: usize,
    pub failed: Vec<DegreeOutcome>,
    pub resource_errors: Vec<DegreeOutcome>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failed.is_empty() && self.resource_errors.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if !self.failed.is_empty() {
            EXIT_FAIL
        } else if !self.resource_errors.is_empty() {
            EXIT_RESOURCE
        } else {
            EXIT_OK
        }
    }
}

fn corrupted(m: MackeyC4) -> MackeyC4 {
    if m.is_zero() {
        mackey_at(Degree::ZERO)
    } else {
        MackeyC4::zero()
    }
}

pub fn verify_degree(d: Degree, config: &VerifyConfig) -> DegreeOutcome {
    let mut out = DegreeOutcome { degree: d, failures: vec![], resource_error: None };
    let engine = match homotopy_with_budget(d, config.budget) {
        Ok(h) => h.functor,
        Err(e) => {
            out.resource_error = Some(e.to_string());
            return out;
        }
    };
    let mut closed = mackey_at(d);
    if config.corrupt == Some(d) {
        closed = corrupted(closed);
    }
    for diff in differences(&engine, &closed) {
        out.failures.push(format!("compare: {diff}"));
    }
    for (who, m) in [("engine", &engine), ("closedform", &closed)] {
        for f in check_axioms(m).failures {
            out.failures.push(format!("{who} axiom: {f}"));
        }
    }
    match verify_ker_im(d) {
        Ok(r) => {
            if !r.ker_alpha_is_im_tr {
                out.failures.push("ker(a_alpha) != im(tr42)".into());
            }
            if !r.im_alpha_is_ker_res {
                out.failures.push("im(a_alpha) != ker(res42)".into());
            }
        }
        Err(e) => out.resource_error = Some(e.to_string()),
    }
    out
}

pub fn cmd_verify(config: &VerifyConfig) -> VerifySummary {
    let degrees = config.window.degrees();
    let outcomes = engine::sweep(&degrees, |d| verify_degree(d, config));
    let mut s = VerifySummary { config: config.clone(), degrees: degrees.len(), passed: 0, failed: vec![], resource_errors: vec![] };
    for o in outcomes {
        if !o.failures.is_empty() {
            s.failed.push(o);
        } else if o.resource_error.is_some() {
            s.resource_errors.push(o);
        } else {
            s.passed += 1;
        }
    }
    s
}

pub fn render_verify(s: &VerifySummary, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(s).unwrap()),
        Format::Text => {
            let mut out = String::new();
            for o in s.failed.iter().chain(&s.resource_errors) {
                let reason = o.resource_error.iter().cloned().chain(o.failures.iter().cloned()).collect::<Vec<_>>();
                let _ = writeln!(out, "FAIL {} {}", o.degree, reason.join("; "));
            }
            let _ = writeln!(
                out,
                "{} degrees, {} passed, {} failed, {} resource errors",
                s.degrees,
                s.passed,
                s.failed.len(),
                s.resource_errors.len()
            );
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\n");
            for o in &s.failed {
                let _ = writeln!(out, "${}$ & {} \\\\", o.degree.latex(), o.failures.join("; "));
            }
            let _ = writeln!(out, "\\multicolumn{{2}}{{l}}{{{} of {} degrees pass}} \\\\", s.passed, s.degrees);
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

/// One row of a table: the recomputed group next to the printed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: Degree,
    pub computed: String,
    pub printed: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: String,
    pub presentation: String,
    pub rows: Vec<TableRow>,
    pub mismatches: usize,
}

fn presentation(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Hh => "Z[a_a, a_l, u_2a^±, u_l^±]/(a_2a u_l - 2 a_l u_2a, 2a_a, 4a_l)",
        TableKind::BorelE2 => "H^*(C4; Z) = Z[x]/4x, H^*(C4; Z~) = Z/2<y>[x]",
        TableKind::HPhi4 | TableKind::Localization(LocalGen::AAlpha) => "Z/2[u_2a, a_a^±, a_l^±]",
        TableKind::HPhi2 | TableKind::Localization(LocalGen::ALambda) => {
            "Z/4[a_l^±, u_2a, u_l, a_a]/(2a_l u_2a = a_2a u_l, 2a_a) (+) Z/4[a_l^±]<u_2a^-i u_l^j><1, a_a>/2a_a (+) Z/2[a_l^±]<2u_2a^-i> (+) Z/2<tr(e_3a)>[u_2a^-1, a_a^-1][a_l^±]"
        }
        TableKind::Localization(LocalGen::U2Alpha) => {
            "Z[u_2a^±, u_l, a_a, a_l]/(2a_a, 4a_l, a_2a u_l - 2a_l u_2a) (+) Z<2u_l^-1, 4u_l^-j>[u_2a^±] (+) Z/2<a_a^i/a_l^j>[u_2a^±] (+) Sigma^-1 torsion"
        }
    }
}

fn kind_name(kind: TableKind) -> String {
    match kind {
        TableKind::Hh => "hh".into(),
        TableKind::HPhi2 => "hphi2".into(),
        TableKind::HPhi4 => "hphi4".into(),
        TableKind::BorelE2 => "borel-e2".into(),
        TableKind::Localization(g) => format!("localization:{}", g.symbol()),
    }
}

/// The cohomology ring column `Z[x]/4x` or `Z/2<y>[x]` as printed.
fn e2_printed(m: CoeffModule, s: usize) -> FinAbGroup {
    match (m, s % 2) {
        (CoeffModule::Z, _) if s == 0 => FinAbGroup::z(),
        (CoeffModule::Z, 0) => FinAbGroup::cyclic(4),
        (CoeffModule::ZTilde, 1) => FinAbGroup::cyclic(2),
        _ => FinAbGroup::zero(),
    }
}

fn joined(gs: &[FinAbGroup]) -> String {
    gs.iter().map(|g| g.notation()).collect::<Vec<_>>().join(", ")
}

pub fn build_table(kind: TableKind, window: Window) -> Table {
    let degrees = window.degrees();
    let rows: Vec<TableRow> = match kind {
        TableKind::Hh => engine::sweep(&degrees, |d| TableRow {
            degree: d,
            computed: groupcoh::borel_group(d).notation(),
            printed: groupcoh::borel_formula(d).notation(),
            generators: vec![],
        }),
        TableKind::BorelE2 => degrees
            .iter()
            .filter(|d| d.a + d.b + 2 * d.c == 0)
            .map(|&d| {
                let col = groupcoh::hfpss_e2(d, 10);
                let m = col.coefficients.expect("underlying degree 0");
                let printed: Vec<FinAbGroup> = (0..=10).map(|s| e2_printed(m, s)).collect();
                TableRow { degree: d, computed: joined(&col.groups), printed: joined(&printed), generators: vec![] }
            })
            .collect(),
        TableKind::HPhi2 | TableKind::HPhi4 | TableKind::Localization(_) => {
            let gen = match kind {
                TableKind::HPhi2 => LocalGen::ALambda,
                TableKind::HPhi4 => LocalGen::AAlpha,
                TableKind::Localization(g) => g,
                _ => unreachable!(),
            };
            engine::sweep(&degrees, |d| {
                let printed = localization_formula(gen, d).notation();
                match localize_at(gen, d) {
                    Ok(e) => TableRow { degree: d, computed: e.group.notation(), printed, generators: e.generators },
                    Err(err) => TableRow { degree: d, computed: format!("error: {err}"), printed, generators: vec![] },
                }
            })
        }
    };
    let mismatches = rows.iter().filter(|r| r.computed != r.printed).count();
    Table { kind: kind_name(kind), presentation: presentation(kind).into(), rows, mismatches }
}

pub fn render_table(t: &Table, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = format!("{}\n", serde_json::to_string_pretty(t).unwrap()),
        Format::Text => {
            let _ = writeln!(out, "{}: {}", t.kind, t.presentation);
            for r in &t.rows {
                let mark = if r.computed == r.printed { "" } else { "  MISMATCH" };
                let _ = writeln!(out, "{:<14} {:<16} {:<16} [{}]{mark}", r.degree.to_string(), r.computed, r.printed, r.generators.join(", "));
            }
            let _ = writeln!(out, "{} rows, {} mismatches", t.rows.len(), t.mismatches);
        }
        Format::Latex => {
            let _ = writeln!(out, "% {}", t.presentation);
            out.push_str("\\begin{tabular}{lll}\n");
            for r in t.rows.iter().filter(|r| r.computed != "0" || r.printed != "0") {
                let _ = writeln!(out, "${}$ & ${}$ & ${}$ \\\\", r.degree.latex(), latex_text(&r.computed), latex_text(&r.printed));
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

fn latex_text(s: &str) -> String {
    s.replace('Z', "\\mathbb{Z}").replace('+', "\\oplus ")
}

pub fn cmd_tables(kind: TableKind, window: Window, format: Format) -> Report {
    let t = build_table(kind, window);
    Report { body: render_table(&t, format), code: if t.mismatches == 0 { EXIT_OK } else { EXIT_FAIL } }
}

/// Groups and pairings for the cohomology subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub order: usize,
    pub groups: Vec<(CoeffModule, Vec<FinAbGroup>)>,
    pub cups: Vec<CupRow>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupRow {
    pub left: CoeffModule,
    pub p: usize,
    pub right: CoeffModule,
    pub q: usize,
    pub target: String,
    pub coefficient: i64,
    pub surjective: bool,
    pub iso: bool,
}

pub fn cohomology_report(order: usize, max_degree: usize) -> Result<CohomologyReport, CliError> {
    let res = PeriodicResolution::new(order)?;
    let modules = [CoeffModule::Z, CoeffModule::ZTilde, CoeffModule::Z2];
    let groups = modules.iter().map(|&m| (m, (0..=max_degree).map(|q| groupcoh::cohomology_of(&res, m, q)).collect())).collect();
    let mut cups = vec![];
    let mut failures = vec![];
    for (m1, m2) in [(CoeffModule::Z, CoeffModule::Z), (CoeffModule::Z, CoeffModule::ZTilde), (CoeffModule::ZTilde, CoeffModule::ZTilde)] {
        for p in 0..=max_degree {
            for q in 0..=max_degree - p {
                let c = groupcoh::cup_of(&res, p, q, m1, m2);
                if c.left.is_zero() || c.right.is_zero() {
                    continue;
                }
                // x^i x^j = x^{i+j}, x^i y = x^i y, y^2 = 2x
                if m1 == CoeffModule::Z && !c.is_surjective() {
                    failures.push(format!("{}^{p} x {}^{q} not surjective", m1.symbol(), m2.symbol()));
                }
                if m1 == CoeffModule::Z && m2 == CoeffModule::ZTilde && q == 1 && !c.is_iso() {
                    failures.push(format!("H^{p}(Z) x H^1(Z~) not an isomorphism"));
                }
                if m1 == CoeffModule::ZTilde && p == 1 && q == 1 && c.coefficient != 2 {
                    failures.push("y^2 != 2x".into());
                }
                cups.push(CupRow {
                    left: m1,
                    p,
                    right: m2,
                    q,
                    target: c.target.notation(),
                    coefficient: c.coefficient,
                    surjective: c.is_surjective(),
                    iso: c.is_iso(),
                });
            }
        }
    }
    Ok(CohomologyReport { order, groups, cups, failures })
}

pub fn render_cohomology(r: &CohomologyReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = format!("{}\n", serde_json::to_string_pretty(r).unwrap()),
        Format::Text => {
            let _ = writeln!(out, "H^q(C{}; M)", r.order);
            for (m, gs) in &r.groups {
                let _ = writeln!(out, "  {:<4} {}", m.symbol(), joined(gs));
            }
            let _ = writeln!(out, "cup products on standard generators");
            for c in &r.cups {
                let _ = writeln!(
                    out,
                    "  H^{}({}) x H^{}({}) -> {}: {}{}{}",
                    c.p,
                    c.left.symbol(),
                    c.q,
                    c.right.symbol(),
                    c.target,
                    c.coefficient,
                    if c.surjective { " onto" } else { "" },
                    if c.iso { " iso" } else { "" }
                );
            }
            for f in &r.failures {
                let _ = writeln!(out, "FAIL {f}");
            }
        }
        Format::Latex => {
            let n = r.groups.first().map(|g| g.1.len()).unwrap_or(0);
            let _ = writeln!(out, "\\begin{{tabular}}{{l{}}}", "c".repeat(n));
            let head: Vec<String> = (0..n).map(|q| q.to_string()).collect();
            let _ = writeln!(out, "$q$ & {} \\\\", head.join(" & "));
            for (m, gs) in &r.groups {
                let cells: Vec<String> = gs.iter().map(|g| format!("${}$", latex_group(g))).collect();
                let name = match m {
                    CoeffModule::Z => "\\mathbb{Z}",
                    CoeffModule::ZTilde => "\\widetilde{\\mathbb{Z}}",
                    CoeffModule::Z2 => "\\mathbb{Z}/2",
                };
                let _ = writeln!(out, "${name}$ & {} \\\\", cells.join(" & "));
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

pub fn cmd_cohomology(order: usize, max_degree: usize, format: Format) -> Result<Report, CliError> {
    let r = cohomology_report(order, max_degree)?;
    let code = if r.failures.is_empty() { EXIT_OK } else { EXIT_FAIL };
    Ok(Report { body: render_cohomology(&r, format), code })
}

/// Parses a JSON report back; used to check round trips.
pub fn parse_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T, serde_json::Error> {
    serde_json::from_str(s)
}

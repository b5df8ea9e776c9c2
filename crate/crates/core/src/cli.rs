//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or configuration error, 2 refusal,
//! 3 verification failure (including a failed surface check).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::certify::{
    center_of, certify_trivial_center, kpi1_class, replay_checked, CenterReport, CertifyError, Kpi1Status,
    ProofTrace, Step,
};
use crate::diagram::{parse_diagram, CoxeterDiagram, Subset};
use crate::spherical::{
    coxeter_order_bfs_mask, is_spherical, max_spherical, spherical_factors, CdReport, FactorSplit,
    FiniteFamily, OrderOutcome, DEFAULT_BFS_CAP,
};
use crate::surface::{build_surface, run_surface_suite, SurfaceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

/// Environment variable supplying the default enumeration cap.
pub const CAP_ENV: &str = "ARTIN_BFS_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "artin",
    version,
    about = "Coxeter diagram analysis and trivial-center certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Analyze,
    Certify,
    Surface,
    Oracle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Components, spherical factors, spherical dimension, K(pi,1) class, center rank.
    Analyze(CommonArgs),
    /// Emit a trivial-center proof trace and replay it.
    Certify(CommonArgs),
    /// Run the surface-model check suite (labels 2 and 3 only).
    Surface(CommonArgs),
    /// Order of the Coxeter group by exact enumeration.
    Oracle(CommonArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Diagram file.
    file: PathBuf,
    /// Treat an undecided K(pi,1) status as satisfied.
    #[arg(long)]
    assume_kpi1: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration cap for the order oracle (default: $ARTIN_BFS_CAP or 20000).
    #[arg(long)]
    cap: Option<u64>,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub assume_kpi1: bool,
    pub format: Format,
    pub bfs_cap: u64,
    pub seed: u64,
}

impl RunConfig {
    fn from_cli(cli: Cli, env_cap: Option<String>) -> Result<Self, String> {
        let (command, args) = match cli.command {
            Command::Analyze(a) => (CommandKind::Analyze, a),
            Command::Certify(a) => (CommandKind::Certify, a),
            Command::Surface(a) => (CommandKind::Surface, a),
            Command::Oracle(a) => (CommandKind::Oracle, a),
        };
        let bfs_cap = match (args.cap, env_cap) {
            (Some(c), _) => c,
            (None, Some(v)) => v
                .trim()
                .parse()
                .map_err(|_| format!("{CAP_ENV}={v:?} is not a nonnegative integer"))?,
            (None, None) => DEFAULT_BFS_CAP,
        };
        if bfs_cap < 2 {
            return Err(format!("cap must be at least 2, got {bfs_cap}"));
        }
        Ok(RunConfig {
            command,
            input: args.file,
            assume_kpi1: args.assume_kpi1,
            format: args.format,
            bfs_cap,
            seed: args.seed,
        })
    }
}

/// Family and subset of one irreducible spherical component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub generators: Subset,
    pub family: Option<FiniteFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub generators: Vec<String>,
    pub irreducible: bool,
    pub spherical: bool,
    pub components: Vec<ComponentReport>,
    pub factors: FactorSplit,
    /// Coxeter group order from the family table, as decimal text.
    pub coxeter_order: Option<String>,
    pub oracle_order: Option<OrderOutcome>,
    pub max_spherical: CdReport,
    pub kpi1: Kpi1Status,
    pub center: CenterReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub generators: Vec<String>,
    pub cap: u64,
    pub outcome: OrderOutcome,
}

/// Runs the CLI on `args` (including the program name). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(CAP_ENV).ok(), out, err)
}

pub fn run_with_env<I, T>(args: I, env_cap: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(cli, env_cap) {
        Ok(cfg) => cfg,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let (code, stdout, stderr) = execute(&cfg);
    let _ = out.write_all(stdout.as_bytes());
    let _ = err.write_all(stderr.as_bytes());
    code
}

/// Runs one configured command, returning the exit code and both output streams.
pub fn execute(cfg: &RunConfig) -> (i32, String, String) {
    let text = match std::fs::read_to_string(&cfg.input) {
        Ok(t) => t,
        Err(e) => {
            return (
                EXIT_INPUT,
                String::new(),
                format!("error: {}: {e}\n", cfg.input.display()),
            )
        }
    };
    let d = match parse_diagram(&text) {
        Ok(d) => d,
        Err(e) => {
            return (
                EXIT_INPUT,
                String::new(),
                format!("error: {}: {e}\n", cfg.input.display()),
            )
        }
    };
    match cfg.command {
        CommandKind::Analyze => cmd_analyze(cfg, &d),
        CommandKind::Certify => cmd_certify(cfg, &d),
        CommandKind::Surface => cmd_surface(cfg, &d),
        CommandKind::Oracle => cmd_oracle(cfg, &d),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn join_subsets(subsets: &[Subset]) -> String {
    if subsets.is_empty() {
        return "none".into();
    }
    subsets
        .iter()
        .map(Subset::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn analyze(d: &CoxeterDiagram, cap: u64, assume: bool) -> AnalyzeReport {
    let all = d.all_generators();
    let whole = is_spherical(d, &all).expect("full subset");
    let components = d
        .components()
        .into_iter()
        .map(|c| {
            let mask = d.mask_of(&c).expect("component");
            ComponentReport {
                family: crate::spherical::classify_connected(d, mask),
                generators: c,
            }
        })
        .collect();
    AnalyzeReport {
        generators: d.generators().to_vec(),
        irreducible: d.is_irreducible(),
        spherical: whole.is_spherical(),
        components,
        factors: spherical_factors(d),
        coxeter_order: whole.coxeter_order.map(|o| o.to_string()),
        oracle_order: coxeter_order_bfs_mask(d, d.full_mask(), cap).ok(),
        max_spherical: max_spherical(d),
        kpi1: kpi1_class(d),
        center: center_of(d, assume),
    }
}

fn cmd_analyze(cfg: &RunConfig, d: &CoxeterDiagram) -> (i32, String, String) {
    let report = analyze(d, cfg.bfs_cap, cfg.assume_kpi1);
    if cfg.format == Format::Json {
        return (EXIT_OK, json(&report), String::new());
    }
    let mut s = String::new();
    let shape = if report.irreducible {
        "irreducible"
    } else {
        "reducible"
    };
    if report.spherical {
        let families: Vec<String> = report
            .components
            .iter()
            .filter_map(|c| c.family.map(|f| f.to_string()))
            .collect();
        let order = report.coxeter_order.as_deref().unwrap_or("?");
        let _ = write!(
            s,
            "{shape}; spherical, family {}, |W|={order}",
            families.join(" x ")
        );
        match report.oracle_order {
            Some(OrderOutcome::Exact(n)) => {
                let _ = write!(s, " (enumerated {n})");
            }
            Some(OrderOutcome::ExceededCap) => {
                let _ = write!(s, " (enumeration exceeded cap {})", cfg.bfs_cap);
            }
            None => {}
        }
    } else {
        let _ = write!(s, "{shape}; infinite type");
    }
    let _ = writeln!(
        s,
        "; spherical dimension {}; witnesses {}; K(pi,1) class: {}",
        report.max_spherical.value,
        join_subsets(&report.max_spherical.witnesses),
        report.kpi1
    );
    let _ = writeln!(s, "components: {}", join_subsets(&d.components()));
    for c in &report.components {
        let family = c.family.map_or("infinite type".to_string(), |f| f.to_string());
        let _ = writeln!(s, "  {}: {family}", c.generators);
    }
    let _ = writeln!(
        s,
        "spherical factors: {}; infinite part: {}",
        join_subsets(&report.factors.spherical),
        join_subsets(&report.factors.infinite)
    );
    let gens = if report.center.generators.is_empty() {
        String::new()
    } else {
        format!(" ({})", report.center.generators.join(", "))
    };
    let _ = writeln!(
        s,
        "center rank {}{gens}; {:?}",
        report.center.rank, report.center.conditionality
    );
    (EXIT_OK, s, String::new())
}

/// Indented rule tree with premises and citations.
pub fn render_trace(trace: &ProofTrace) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "K(pi,1): {}", trace.kpi1);
    if !trace.root.assumptions.is_empty() {
        let _ = writeln!(s, "assumptions:");
        for a in &trace.root.assumptions {
            let _ = writeln!(s, "  - {a}");
        }
    }
    render_step(&trace.root, 0, &mut s);
    s
}

fn render_step(step: &Step, depth: usize, s: &mut String) {
    let pad = "  ".repeat(depth);
    let goal = serde_json::to_string(&step.goal).expect("goal serializes");
    let _ = writeln!(
        s,
        "{pad}{:?} on {} goal {goal}",
        step.rule,
        step.diagram.all_generators()
    );
    for p in &step.premises {
        let mark = if p.ok { "ok" } else { "FAIL" };
        let fact = serde_json::to_string(&p.fact).expect("fact serializes");
        let _ = writeln!(s, "{pad}  [{mark}] {fact} ({})", p.citation);
    }
    for child in &step.children {
        render_step(child, depth + 1, s);
    }
}

fn cmd_certify(cfg: &RunConfig, d: &CoxeterDiagram) -> (i32, String, String) {
    match certify_trivial_center(d, cfg.assume_kpi1) {
        Ok(trace) => {
            if let Err(f) = replay_checked(&trace) {
                return (EXIT_VERIFICATION, String::new(), format!("replay failed {f}\n"));
            }
            let body = match cfg.format {
                Format::Json => json(&trace),
                Format::Text => {
                    let mut s = render_trace(&trace);
                    s.push_str("replay: ok\n");
                    s
                }
            };
            (EXIT_OK, body, String::new())
        }
        Err(CertifyError::Refused(r)) => {
            let body = match cfg.format {
                Format::Json => json(&r),
                Format::Text => format!("refused: {r}\n"),
            };
            (EXIT_REFUSED, body, String::new())
        }
        Err(CertifyError::Verification(v)) => {
            let body = match cfg.format {
                Format::Json => json(&v),
                Format::Text => String::new(),
            };
            (EXIT_VERIFICATION, body, format!("{v}\n"))
        }
    }
}

fn cmd_surface(cfg: &RunConfig, d: &CoxeterDiagram) -> (i32, String, String) {
    let cs = match build_surface(d) {
        Ok(cs) => cs,
        Err(e) => return (EXIT_INPUT, String::new(), format!("error: {e}\n")),
    };
    let report: SurfaceReport = match run_surface_suite(&cs, cfg.seed) {
        Ok(r) => r,
        Err(e) => return (EXIT_VERIFICATION, String::new(), format!("error: {e}\n")),
    };
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    };
    if cfg.format == Format::Json {
        return (code, json(&report), String::new());
    }
    let mut s = String::new();
    let genus = report.genus.map_or("undefined".to_string(), |g| g.to_string());
    let _ = writeln!(
        s,
        "{} vertices, {} edges, euler characteristic {}, {} components, {} boundary components, genus {genus}, H1 rank {}",
        report.vertices,
        report.edges,
        report.euler_characteristic,
        report.components,
        report.boundary_components,
        report.h1_rank
    );
    for c in &report.checks {
        let _ = writeln!(
            s,
            "{} {}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    for r in &report.center_records {
        let _ = writeln!(
            s,
            "center {}: square matches multitwist {}, fourth power matches {}",
            r.square.subset, r.square.matches, r.fourth.matches
        );
    }
    (code, s, String::new())
}

fn cmd_oracle(cfg: &RunConfig, d: &CoxeterDiagram) -> (i32, String, String) {
    let outcome = match coxeter_order_bfs_mask(d, d.full_mask(), cfg.bfs_cap) {
        Ok(o) => o,
        Err(e) => return (EXIT_INPUT, String::new(), format!("error: {e}\n")),
    };
    let report = OracleReport {
        generators: d.generators().to_vec(),
        cap: cfg.bfs_cap,
        outcome,
    };
    let body = match cfg.format {
        Format::Json => json(&report),
        Format::Text => match outcome {
            OrderOutcome::Exact(n) => format!("{n}\n"),
            OrderOutcome::ExceededCap => format!("ExceededCap (cap {})\n", cfg.bfs_cap),
        },
    };
    (EXIT_OK, body, String::new())
}

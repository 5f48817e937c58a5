//! The `invseq` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::analysis::{check_root_against, classify_triples, estimate_growth, reference_growth, GrowthModel};
use crate::catalog;
use crate::combinat::{words_r1r2, words_r1r3};
use crate::error::{Error, Result};
use crate::gentree::{count_class, ClassId};
use crate::oracle::{Oracle, WordConstraint};
use crate::sequence::{triple_to_pattern_set, PatternSet, RelationTriple};
use crate::series::{
    closed_form_733_by_conjugates, expand_closed_form, iterate_catalytic_system, minimal_polynomial, TruncatedSeries,
};
use crate::verify::{self, VerifyParams, ITERATED};

#[derive(Debug, Parser)]
#[command(name = "invseq", version, about = "Count and analyse pattern-avoiding inversion sequences")]
pub struct Cli {
    /// Longest length searched exhaustively [env: INVSEQ_ORACLE_BOUND, default 10].
    #[arg(long, global = true)]
    pub oracle_bound: Option<usize>,
    /// Worker threads for parallel work.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file with `oracle_bound`, `workers` and `format` keys. Flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Jsonl,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Gentree,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Algebraic,
    Stretched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rules {
    #[value(name = "R1R2")]
    R1R2,
    #[value(name = "R1R3")]
    R1R3,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Selector {
    /// Class index (e.g. 1176, 663A) or relation triple (e.g. ">,<=,!=").
    #[arg(long, allow_hyphen_values = true)]
    pub class: Option<String>,
    /// Comma-separated patterns, e.g. 100,102,201.
    #[arg(long)]
    pub patterns: Option<String>,
    /// Relation triple, e.g. "-,!=,>".
    #[arg(long, allow_hyphen_values = true)]
    pub triple: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print I_0 .. I_n.
    Count {
        #[command(flatten)]
        selector: Selector,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        /// Compare the b-file rendering with this file instead of printing it.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Expand a closed-form generating function and cross-check it.
    Series {
        #[arg(long)]
        class: String,
        #[arg(long)]
        order: usize,
        /// Also check the minimal polynomial against the counting series.
        #[arg(long)]
        verify_minpoly: bool,
    },
    /// Partition all 343 triples by pattern set and by counting sequence.
    Classify {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// List every group, not just the totals.
        #[arg(long)]
        groups: bool,
    },
    /// Fit a growth model to generating-tree terms.
    Asymptotics {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Model::Algebraic)]
        model: Model,
        /// Hold mu fixed in the stretched model.
        #[arg(long)]
        fixed_mu: Option<f64>,
    },
    /// Count commitment words by formula and by brute force.
    Words {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum)]
        rules: Rules,
    },
    /// Run every cross-check.
    VerifyAll {
        #[arg(long, default_value_t = 9)]
        oracle_n: usize,
        #[arg(long, default_value_t = 50)]
        series_order: usize,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    oracle_bound: Option<usize>,
    workers: Option<usize>,
    format: Option<Format>,
}

/// Settings after merging flags, the config file and the environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub oracle: Oracle,
    pub workers: Option<usize>,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let oracle = match cli.oracle_bound.or(file.oracle_bound) {
            Some(b) => Oracle::with_bound(b),
            None => Oracle::from_env(),
        };
        let workers = cli.workers.or(file.workers);
        if workers == Some(0) {
            return Err(Error::Parse("--workers must be positive".into()));
        }
        Ok(Self { oracle, workers, format: cli.format.or(file.format).unwrap_or(Format::Table) })
    }
}

/// One term of a counting sequence in `jsonl` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub n: usize,
    /// Decimal, since terms outgrow every fixed-width integer.
    pub value: String,
}

/// One verification verdict in `jsonl` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub class: String,
    pub terms: usize,
    pub model: String,
    pub mu: f64,
    pub g: f64,
    pub constant: Option<f64>,
    pub log_mu1: Option<f64>,
    pub sigma: Option<String>,
    pub mu_spread: f64,
    pub g_spread: f64,
    pub residual_rms: f64,
    pub reference_mu: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    pub k: usize,
    pub b: usize,
    pub rules: String,
    pub formula: String,
    pub oracle: String,
}

/// A resolved class / pattern-set selector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Class(ClassId),
    Patterns(PatternSet),
}

impl Target {
    pub fn from_selector(sel: &Selector) -> Result<Self> {
        if let Some(c) = &sel.class {
            if let Ok(id) = c.parse::<ClassId>() {
                return Ok(Target::Class(id));
            }
            if let Some(e) = catalog::lookup(c) {
                return Ok(Target::Patterns(e.pattern_set()));
            }
            return Err(Error::UnknownClass(c.clone()));
        }
        let set = match (&sel.patterns, &sel.triple) {
            (Some(p), _) => PatternSet::parse(p)?,
            (_, Some(t)) => triple_to_pattern_set(&t.parse::<RelationTriple>()?),
            _ => return Err(Error::Parse("no selector given".into())),
        };
        Ok(match ClassId::for_pattern_set(&set) {
            Some(id) => Target::Class(id),
            None => Target::Patterns(set),
        })
    }

    fn pattern_set(&self) -> PatternSet {
        match self {
            Target::Class(c) => c.pattern_set(),
            Target::Patterns(p) => p.clone(),
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable record")
}

/// Renders terms in OEIS b-file form: `n value` per line.
pub fn render_bfile(terms: &[BigUint]) -> String {
    terms.iter().enumerate().map(|(n, v)| format!("{n} {v}\n")).collect()
}

fn write_terms(out: &mut dyn Write, format: Format, header: &str, terms: &[BigUint]) -> std::io::Result<()> {
    match format {
        Format::Bfile => out.write_all(render_bfile(terms).as_bytes()),
        Format::Jsonl => {
            for (n, v) in terms.iter().enumerate() {
                writeln!(out, "{}", json(&TermRecord { n, value: v.to_string() }))?;
            }
            Ok(())
        }
        Format::Table => {
            writeln!(out, "# {header}")?;
            for (n, v) in terms.iter().enumerate() {
                writeln!(out, "{n} {v}")?;
            }
            Ok(())
        }
    }
}

fn write_check(out: &mut dyn Write, format: Format, name: &str, ok: bool, detail: &str) -> std::io::Result<()> {
    match format {
        Format::Jsonl => {
            writeln!(out, "{}", json(&CheckRecord { check: name.into(), ok, detail: detail.into() }))
        }
        _ => writeln!(out, "{} {name}: {detail}", if ok { "OK" } else { "FAIL" }),
    }
}

/// Parses `args` and runs the command, writing to `out`. `Ok(true)` means
/// every verification that was asked for passed.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> Result<bool>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run(&Cli::try_parse_from(args).map_err(|e| Error::Parse(e.to_string()))?, out)
}

/// Runs an already parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let cfg = RunConfig::resolve(cli)?;
    if let Some(w) = cfg.workers {
        // Ignored if a pool already exists, as in repeated in-process runs.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    execute(&cli.command, &cfg, out)
}

fn io(e: std::io::Error) -> Error {
    Error::Output { kind: e.kind(), message: e.to_string() }
}

fn execute(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Count { selector, n, engine, compare } => cmd_count(selector, *n, *engine, compare.as_ref(), cfg, out),
        Command::Series { class, order, verify_minpoly } => {
            cmd_series(&class.parse()?, *order, *verify_minpoly, cfg.format, out)
        }
        Command::Classify { max_n, groups } => cmd_classify(*max_n, *groups, cfg, out),
        Command::Asymptotics { class, terms, model, fixed_mu } => {
            cmd_asymptotics(&class.parse()?, *terms, *model, *fixed_mu, cfg.format, out)
        }
        Command::Words { k, b, rules } => cmd_words(*k, *b, *rules, cfg, out),
        Command::VerifyAll { oracle_n, series_order } => {
            let params = VerifyParams { oracle_n: *oracle_n, series_order: *series_order, ..VerifyParams::default() };
            let checks = verify::run_all(&cfg.oracle, params)?;
            for c in &checks {
                write_check(out, cfg.format, &c.name, c.passed, &c.detail).map_err(io)?;
            }
            Ok(checks.iter().all(|c| c.passed))
        }
    }
}

fn cmd_count(
    sel: &Selector,
    n: usize,
    engine: Option<Engine>,
    compare: Option<&PathBuf>,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<bool> {
    let target = Target::from_selector(sel)?;
    let engine = engine.unwrap_or(match target {
        Target::Class(_) => Engine::Gentree,
        Target::Patterns(_) => Engine::Oracle,
    });
    let set = target.pattern_set();
    let (terms, header) = match (engine, &target) {
        (Engine::Gentree, Target::Class(c)) => (count_class(*c, n), format!("class {c} {set} engine gentree")),
        (Engine::Gentree, Target::Patterns(p)) => return Err(Error::UnknownClass(p.to_string())),
        (Engine::Oracle, _) => (cfg.oracle.counting_sequence(n, &set)?, format!("{set} engine oracle")),
    };
    if let Some(path) = compare {
        let expected = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let got = render_bfile(&terms);
        let ok = got == expected;
        let detail = if ok {
            format!("{} matches", path.display())
        } else {
            let line = got.lines().zip(expected.lines()).position(|(a, b)| a != b).unwrap_or(got.lines().count().min(expected.lines().count()));
            format!("{} differs from line {}", path.display(), line + 1)
        };
        write_check(out, cfg.format, "b-file", ok, &detail).map_err(io)?;
        return Ok(ok);
    }
    write_terms(out, cfg.format, &header, &terms).map_err(io)?;
    Ok(true)
}

fn cmd_series(class: &ClassId, order: usize, minpoly: bool, format: Format, out: &mut dyn Write) -> Result<bool> {
    let c = *class;
    let closed = expand_closed_form(c, order)?;
    let terms = closed.to_counts()?;
    write_terms(out, format, &format!("closed form for class {c}"), &terms).map_err(io)?;
    let tree = count_class(c, order);
    let mut all = true;
    let ok = terms == tree;
    all &= ok;
    write_check(out, format, "closed form = gentree", ok, &format!("through z^{order}")).map_err(io)?;
    if ITERATED.contains(&c) {
        let ok = iterate_catalytic_system(c, order)?.to_counts()? == tree;
        all &= ok;
        write_check(out, format, "catalytic iteration = gentree", ok, &format!("through z^{order}")).map_err(io)?;
    }
    if c == ClassId::C733 {
        let ok = closed_form_733_by_conjugates(order)? == closed;
        all &= ok;
        write_check(out, format, "Q(sqrt 5) roots = symmetric functions", ok, &format!("through z^{order}")).map_err(io)?;
    }
    if minpoly {
        let p = minimal_polynomial(c)?;
        let ok = p.annihilates(&TruncatedSeries::from_counts(&tree));
        all &= ok;
        let kind = if p.derived { "derived" } else { "given" };
        write_check(out, format, "minimal polynomial", ok, &format!("{kind}, degree {}: {p}", p.degree())).map_err(io)?;
    }
    Ok(all)
}

fn cmd_classify(max_n: usize, groups: bool, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let c = classify_triples(max_n, &cfg.oracle)?;
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io);
    match cfg.format {
        Format::Jsonl => {
            w(
                out,
                serde_json::json!({
                    "triples": c.triple_count(),
                    "pattern_sets": c.pattern_set_count(),
                    "equivalence_classes": c.equivalence_count(),
                    "wilf_classes": c.wilf_count(),
                    "max_n": max_n,
                })
                .to_string(),
            )?;
            if groups {
                for g in &c.wilf_groups {
                    w(
                        out,
                        serde_json::json!({
                            "representative": g.triples[0].to_string(),
                            "members": g.triples.len(),
                            "pattern_sets": g.pattern_sets.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                            "sequence": g.sequence.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        })
                        .to_string(),
                    )?;
                }
            }
        }
        _ => {
            w(out, format!("triples {}", c.triple_count()))?;
            w(out, format!("pattern sets {}", c.pattern_set_count()))?;
            w(out, format!("equivalence classes {} (n <= {max_n})", c.equivalence_count()))?;
            w(out, format!("wilf classes {} (n <= {max_n})", c.wilf_count()))?;
            if groups {
                for (i, g) in c.wilf_groups.iter().enumerate() {
                    let sets: Vec<String> = g.pattern_sets.iter().map(|p| p.to_string()).collect();
                    w(
                        out,
                        format!(
                            "{i:>3} {} members={} I_{max_n}={} sets={}",
                            g.triples[0],
                            g.triples.len(),
                            g.sequence[max_n],
                            sets.join(" ")
                        ),
                    )?;
                }
            }
        }
    }
    Ok(true)
}

fn cmd_asymptotics(
    class: &ClassId,
    terms: usize,
    model: Model,
    fixed_mu: Option<f64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<bool> {
    let c = *class;
    let seq = count_class(c, terms);
    let m = match model {
        Model::Algebraic => GrowthModel::Algebraic,
        Model::Stretched => GrowthModel::Stretched { fixed_mu },
    };
    let e = estimate_growth(&seq, m)?;
    let rec = GrowthRecord {
        class: c.to_string(),
        terms,
        model: format!("{model:?}").to_lowercase(),
        mu: e.mu,
        g: e.g,
        constant: e.constant,
        log_mu1: e.stretched.as_ref().map(|s| s.log_mu1),
        sigma: e.stretched.as_ref().map(|s| format!("{}/{}", s.sigma.0, s.sigma.1)),
        mu_spread: e.diagnostics.mu_spread,
        g_spread: e.diagnostics.g_spread,
        residual_rms: e.diagnostics.residual_rms,
        reference_mu: reference_growth(c),
    };
    match format {
        Format::Jsonl => writeln!(out, "{}", json(&rec)).map_err(io)?,
        _ => {
            writeln!(out, "class {c}, {terms} terms, {} model", rec.model).map_err(io)?;
            writeln!(out, "mu {:.8}", e.mu).map_err(io)?;
            writeln!(out, "g {:.5}", e.g).map_err(io)?;
            if let Some(k) = e.constant {
                writeln!(out, "C {k:.6}").map_err(io)?;
            }
            if let Some(s) = &e.stretched {
                writeln!(out, "sigma {}/{}  log mu1 {:.4}", s.sigma.0, s.sigma.1, s.log_mu1).map_err(io)?;
            }
            writeln!(
                out,
                "diagnostics: mu spread {:.2e}, g spread {:.2e}, residual rms {:.2e}",
                e.diagnostics.mu_spread, e.diagnostics.g_spread, e.diagnostics.residual_rms
            )
            .map_err(io)?;
            if let Some(r) = rec.reference_mu {
                writeln!(out, "reference mu {r:.8} (relative error {:.2e})", ((e.mu - r) / r).abs()).map_err(io)?;
            }
        }
    }
    if model == Model::Algebraic {
        if let Some(r) = check_root_against(c, e.mu, 1e-3) {
            write_check(out, format, "growth polynomial root", r.passed(), &format!("root {:.8}", r.root)).map_err(io)?;
            return Ok(r.passed());
        }
    }
    Ok(true)
}

fn cmd_words(k: usize, b: usize, rules: Rules, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let (formula, constraint) = match rules {
        Rules::R1R2 => (words_r1r2(k as u64, b as u64), WordConstraint::r1_r2(k, b as u32)),
        Rules::R1R3 => (words_r1r3(k as u64, b as u64), WordConstraint::r1_r3(k, b as u32)),
    };
    let brute = if b > k || b == 0 { BigUint::ZERO } else { cfg.oracle.count_words(&constraint)? };
    let ok = formula == brute;
    let rec = WordRecord {
        k,
        b,
        rules: format!("{rules:?}"),
        formula: formula.to_string(),
        oracle: brute.to_string(),
    };
    match cfg.format {
        Format::Jsonl => writeln!(out, "{}", json(&rec)).map_err(io)?,
        _ => writeln!(out, "k={k} b={b} {}: formula {formula}, brute force {brute}", rec.rules).map_err(io)?,
    }
    write_check(out, cfg.format, "formula = brute force", ok, &format!("{formula}")).map_err(io)?;
    Ok(ok)
}

/// Entry point for the binary: returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(true) => 0,
        Ok(false) => 1,
        // a closed pipe, as in `invseq ... | head`
        Err(Error::Output { kind: std::io::ErrorKind::BrokenPipe, .. }) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

//! Command-line front end: argument definitions, rendering, and exit codes.
//!
//! Exit codes are a stable contract: `0` success, `2` invalid input, `3`
//! internal inconsistency (a result failed to be a polynomial, a table row
//! mismatched, or a verification check failed), `1` anything else (I/O).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use realbetti::identities::{self, IdentityId};
use realbetti::tables::{self, TableSection};
use realbetti::{
    enumerate_unstable_types, extract_polynomial, low_rank_moduli_closed_form,
    quaternionic_admissible, quaternionic_to_real, real_refinement_count, BettiResult, DiskCache,
    Engine, Error, FormulaId, FormulaParams, ModuliOptions, RealBundleType, RealCurveTopology,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "realbetti",
    version,
    about = "Z/2 Betti numbers of real moduli spaces"
)]
pub struct Cli {
    /// Directory for cached semistable series (default: $REALBETTI_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Do not read or write the disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial of one moduli space.
    Compute(ComputeArgs),
    /// Recompute a bundled reference table.
    Table(TableArgs),
    /// Run identity checks and closed-form cross-checks.
    Verify(VerifyArgs),
    /// Harder-Narasimhan strata.
    Strata {
        #[command(subcommand)]
        action: StrataAction,
    },
    /// Closed-form series.
    Formula {
        #[command(subcommand)]
        action: FormulaAction,
    },
    /// Disk cache administration.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub degree: i64,
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub circles: u32,
    /// Stiefel-Whitney numbers, comma separated (labels only).
    #[arg(long, value_delimiter = ',')]
    pub w: Option<Vec<u8>>,
    /// Treat (rank, degree) as a quaternionic bundle type.
    #[arg(long)]
    pub quaternionic: bool,
    /// Allow curves without real points.
    #[arg(long)]
    pub allow_a0: bool,
    /// Truncation order; may only raise the default.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_parser = parse_section)]
    pub section: TableSection,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

fn parse_section(s: &str) -> Result<TableSection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 60)]
    pub order: usize,
    /// Bend every identity's right-hand side; all identity checks should fail.
    #[arg(long, hide = true)]
    pub perturb: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum StrataAction {
    /// One JSON object per unstable type.
    List {
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_codim: i64,
        /// Only even part degrees (curves without real points).
        #[arg(long)]
        even_parts: bool,
        /// Also report the number of real refinements for this many circles.
        #[arg(long)]
        circles: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FormulaAction {
    /// Expand a closed form and print it as JSON.
    Dump {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long)]
        circles: Option<u32>,
        #[arg(long)]
        rank: Option<u32>,
        /// Classical group rank; omitted means the stable limit.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    Clear,
    Stats,
}

/// Failure with its exit code and a one-line reason.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub reason: String,
}

impl Failure {
    fn invalid(reason: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            reason: reason.into(),
        }
    }

    fn internal(reason: impl Into<String>) -> Self {
        Self {
            code: EXIT_INTERNAL,
            reason: reason.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Cache(_) => EXIT_IO,
            ref e if e.is_validation() => EXIT_INVALID,
            _ => EXIT_INTERNAL,
        };
        Self {
            code,
            reason: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            reason: format!("Io {e}"),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeParams {
    pub rank: u32,
    pub degree: i64,
    pub genus: u32,
    pub circles: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub w: Option<Vec<u8>>,
    pub quaternionic: bool,
    /// Degree of the real problem actually computed.
    pub real_degree: i64,
}

/// JSON shape of `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub params: ComputeParams,
    pub degree: usize,
    pub coeffs: Vec<String>,
    pub palindromic: bool,
    pub strata: usize,
    pub order: usize,
}

impl ComputeOutput {
    pub fn new(params: ComputeParams, result: &BettiResult) -> Self {
        Self {
            params,
            degree: result.polynomial.degree(),
            coeffs: result
                .polynomial
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            palindromic: result.polynomial.is_palindromic(),
            strata: result.strata_count,
            order: result.order,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("power,coefficient\n");
        for (i, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{i},{c}");
        }
        out
    }
}

fn engine(cli: &Cli) -> Engine {
    let engine = Engine::new();
    if cli.no_cache {
        return engine;
    }
    match cli
        .cache_dir
        .clone()
        .map(DiskCache::new)
        .or_else(DiskCache::from_env)
    {
        Some(cache) => engine.with_disk_cache(cache),
        None => engine,
    }
}

fn cache_for_admin(cli: &Cli) -> CliResult<DiskCache> {
    cli.cache_dir
        .clone()
        .map(DiskCache::new)
        .or_else(DiskCache::from_env)
        .ok_or_else(|| Failure::invalid("NoCacheDir set --cache-dir or REALBETTI_CACHE_DIR"))
}

/// Runs a parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Compute(args) => cmd_compute(&engine(cli), args, out),
        Command::Table(args) => cmd_table(&engine(cli), args.section, args.format, out),
        Command::Verify(args) => cmd_verify(&engine(cli), args, out),
        Command::Strata { action } => cmd_strata(action, out),
        Command::Formula { action } => cmd_formula(action, out),
        Command::Cache { action } => {
            let cache = cache_for_admin(cli)?;
            match action {
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    writeln!(out, "removed {n} entries from {}", cache.dir().display())?;
                }
                CacheAction::Stats => {
                    let s = cache.stats()?;
                    writeln!(out, "dir: {}", cache.dir().display())?;
                    writeln!(out, "entries: {}", s.entries)?;
                    writeln!(out, "bytes: {}", s.bytes)?;
                }
            }
            Ok(())
        }
    }
}

pub fn cmd_compute(engine: &Engine, args: &ComputeArgs, out: &mut dyn Write) -> CliResult<()> {
    let topo = RealCurveTopology::new(args.genus, args.circles)?;
    let mut real_degree = args.degree;
    if args.quaternionic {
        if args.w.is_some() {
            return Err(Failure::invalid(
                "InvalidInput --w does not apply to quaternionic bundles",
            ));
        }
        if !quaternionic_admissible(args.rank, args.degree, &topo) {
            return Err(Error::NotAdmissible {
                rank: args.rank,
                degree: args.degree,
            }
            .into());
        }
        real_degree = quaternionic_to_real(args.rank, args.degree, &topo)?.1;
    } else if let Some(w) = &args.w {
        if w.len() != args.circles as usize {
            return Err(Failure::invalid(format!(
                "InvalidStiefelWhitney expected {} entries, got {}",
                args.circles,
                w.len()
            )));
        }
        RealBundleType::new(args.rank, args.degree, w.clone())?;
    }
    let opts = ModuliOptions {
        allow_a0: args.allow_a0,
        order: args.order,
    };
    let start = Instant::now();
    let result = engine.moduli_betti(args.rank, real_degree, &topo, &opts)?;
    let elapsed = start.elapsed();
    let params = ComputeParams {
        rank: args.rank,
        degree: args.degree,
        genus: args.genus,
        circles: args.circles,
        w: args.w.clone(),
        quaternionic: args.quaternionic,
        real_degree,
    };
    let output = ComputeOutput::new(params, &result);
    match args.format {
        Format::Json => writeln!(out, "{}", output.to_json())?,
        Format::Csv => write!(out, "{}", output.to_csv())?,
        Format::Text => {
            let kind = if args.quaternionic {
                " quaternionic"
            } else {
                ""
            };
            writeln!(
                out,
                "M(r={}, d={}, g={}, a={}){kind}",
                args.rank, args.degree, args.genus, args.circles
            )?;
            if args.quaternionic {
                writeln!(out, "computed as real degree {real_degree}")?;
            }
            if let Some(w) = &args.w {
                let w: Vec<String> = w.iter().map(u8::to_string).collect();
                writeln!(out, "w: ({})", w.join(","))?;
            }
            writeln!(out, "P(t) = {}", result.polynomial)?;
            writeln!(out, "coefficients: {}", output.coeffs.join(","))?;
            writeln!(out, "degree: {}", output.degree)?;
            writeln!(out, "palindromic: {}", output.palindromic)?;
            writeln!(out, "strata: {}", output.strata)?;
            writeln!(out, "order: {}", output.order)?;
            writeln!(out, "wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3)?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct TableRowJson {
    genus: u32,
    circles: u32,
    rank: u32,
    degree: i64,
    expected: Vec<String>,
    computed: Vec<String>,
    matches: bool,
}

pub fn cmd_table(
    engine: &Engine,
    section: TableSection,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<()> {
    let rows = tables::recompute(section, engine)?;
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    match format {
        Format::Json => {
            let json: Vec<TableRowJson> = rows
                .iter()
                .map(|r| TableRowJson {
                    genus: r.golden.genus,
                    circles: r.golden.circles,
                    rank: r.golden.rank,
                    degree: r.golden.degree,
                    expected: r.golden.coeffs.iter().map(u64::to_string).collect(),
                    computed: r
                        .computed
                        .polynomial
                        .coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect(),
                    matches: r.matches,
                })
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("serializable")
            )?;
        }
        Format::Csv => {
            writeln!(out, "genus,circles,rank,degree,power,coefficient,matches")?;
            for r in &rows {
                for (i, c) in r.computed.polynomial.coeffs().iter().enumerate() {
                    let g = &r.golden;
                    writeln!(
                        out,
                        "{},{},{},{},{i},{c},{}",
                        g.genus, g.circles, g.rank, g.degree, r.matches
                    )?;
                }
            }
        }
        Format::Text => {
            writeln!(out, "table {section}")?;
            for r in &rows {
                let g = &r.golden;
                let status = if r.matches { "ok" } else { "MISMATCH" };
                writeln!(
                    out,
                    "g={} a={} r={} d={}  {}  [{status}]",
                    g.genus, g.circles, g.rank, g.degree, r.computed.polynomial
                )?;
                if !r.matches {
                    let expected: Vec<String> = g.coeffs.iter().map(u64::to_string).collect();
                    writeln!(out, "    expected coefficients {}", expected.join(","))?;
                }
            }
            writeln!(out, "{} rows, {mismatches} mismatches", rows.len())?;
        }
    }
    if mismatches > 0 {
        return Err(Failure::internal(format!(
            "TableMismatch section={section} rows={mismatches}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Every check `verify` runs, in order.
pub fn verification_checks(engine: &Engine, order: usize, perturb: bool) -> Vec<CheckOutcome> {
    let mut checks = Vec::new();
    for id in IdentityId::ALL {
        let report = identities::check(id, order, perturb);
        checks.push(CheckOutcome {
            name: format!("identity {id}"),
            pass: report.equal,
            detail: report.to_string(),
        });
    }
    let (_, oracle) = identities::verify_partition_identity_with_oracle(order);
    checks.push(CheckOutcome {
        name: "partition brute force".into(),
        pass: oracle.is_none(),
        detail: match oracle {
            None => format!("p(n) agrees for n <= {}", order.min(30)),
            Some(m) => format!("n={} series {} brute force {}", m.index, m.lhs, m.rhs),
        },
    });
    for r in 1..=3u32 {
        for g in 2..=4u32 {
            for a in 1..=g + 1 {
                checks.push(closed_form_check(engine, r, 1, g, a));
            }
        }
    }
    checks
}

fn closed_form_check(engine: &Engine, r: u32, d: i64, g: u32, a: u32) -> CheckOutcome {
    let name = format!("closed form r={r} d={d} g={g} a={a}");
    let outcome = (|| -> realbetti::Result<(bool, String)> {
        let topo = RealCurveTopology::new(g, a)?;
        let rec = engine.moduli_betti(r, d, &topo, &ModuliOptions::default())?;
        let closed = low_rank_moduli_closed_form(r, &topo, rec.order)?;
        let closed = extract_polynomial(&closed, rec.polynomial.degree())?;
        let same = closed == rec.polynomial;
        Ok((
            same,
            if same {
                rec.polynomial.to_string()
            } else {
                format!("recursion {} closed form {closed}", rec.polynomial)
            },
        ))
    })();
    match outcome {
        Ok((pass, detail)) => CheckOutcome { name, pass, detail },
        Err(e) => CheckOutcome {
            name,
            pass: false,
            detail: e.to_string(),
        },
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    order: usize,
    passed: usize,
    failed: usize,
    checks: &'a [CheckOutcome],
}

pub fn cmd_verify(engine: &Engine, args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let checks = verification_checks(engine, args.order, args.perturb);
    let failed = checks.iter().filter(|c| !c.pass).count();
    let passed = checks.len() - failed;
    match args.format {
        Format::Json => {
            let json = VerifyJson {
                order: args.order,
                passed,
                failed,
                checks: &checks,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("serializable")
            )?;
        }
        Format::Text | Format::Csv => {
            for c in &checks {
                writeln!(
                    out,
                    "{} {}: {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )?;
            }
            writeln!(out, "{passed} passed, {failed} failed")?;
        }
    }
    if failed > 0 {
        return Err(Failure::internal(format!("VerifyFailed failed={failed}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct StratumJson {
    parts: Vec<(u32, i64)>,
    codim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    real_refinements: Option<u64>,
}

fn cmd_strata(action: &StrataAction, out: &mut dyn Write) -> CliResult<()> {
    let StrataAction::List {
        rank,
        degree,
        genus,
        max_codim,
        even_parts,
        circles,
    } = action;
    let types = enumerate_unstable_types(*rank, *degree, *genus, *max_codim, *even_parts)?;
    for (hn, codim) in types {
        let line = StratumJson {
            parts: hn.parts.iter().map(|p| (p.rank, p.degree)).collect(),
            codim,
            real_refinements: circles.map(|a| real_refinement_count(&hn, a)),
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&line).expect("serializable")
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct FormulaJson {
    formula: String,
    expression: String,
    series: realbetti::TruncatedSeries,
}

fn cmd_formula(action: &FormulaAction, out: &mut dyn Write) -> CliResult<()> {
    let FormulaAction::Dump {
        formula,
        genus,
        circles,
        rank,
        n,
        order,
    } = action;
    let params = FormulaParams {
        genus: *genus,
        real_circles: *circles,
        rank: *rank,
        n: *n,
    };
    let id = FormulaId::from_name(formula, params)?;
    let form = id.closed_form(*order)?;
    let json = FormulaJson {
        formula: id.to_string(),
        expression: form.to_string(),
        series: form.expand(*order)?,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&json).expect("serializable")
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (CliResult<()>, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("realbetti").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(&cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn compute_json_round_trips() {
        let (r, text) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "2",
            "--format",
            "json",
        ]);
        r.unwrap();
        let parsed: ComputeOutput = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(parsed.coeffs, vec!["1", "4", "7", "7", "4", "1"]);
        assert_eq!(parsed.to_json(), text.trim());
        assert!(text.starts_with(r#"{"params":{"rank":2,"degree":1,"genus":2,"circles":2,"#));
    }

    #[test]
    fn compute_rank_one() {
        let (r, text) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "1",
            "--degree",
            "0",
            "--genus",
            "4",
            "--circles",
            "1",
        ]);
        r.unwrap();
        assert!(text.contains("coefficients: 1,4,6,4,1"));
        assert!(text.contains("palindromic: true"));
    }

    #[test]
    fn compute_errors_map_to_exit_two() {
        let (r, _) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "2",
            "--degree",
            "2",
            "--genus",
            "2",
            "--circles",
            "1",
        ]);
        let f = r.unwrap_err();
        assert_eq!(f.code, EXIT_INVALID);
        assert!(f.reason.starts_with("NotCoprime"));

        let (r, _) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "2",
            "--w",
            "1,1",
        ]);
        assert_eq!(r.unwrap_err().code, EXIT_INVALID);

        let (r, _) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "3",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "0",
            "--quaternionic",
        ]);
        assert_eq!(r.unwrap_err().code, EXIT_INVALID);
    }

    #[test]
    fn w_is_a_label_only() {
        let base = [
            "--no-cache",
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "2",
            "--format",
            "csv",
        ];
        let (_, plain) = run_args(&base);
        let mut with_w = base.to_vec();
        with_w.extend(["--w", "0,1"]);
        let (r, labelled) = run_args(&with_w);
        r.unwrap();
        assert_eq!(plain, labelled);
        assert!(plain.starts_with("power,coefficient\n0,1\n1,4\n"));
    }

    #[test]
    fn quaternionic_path() {
        let (r, text) = run_args(&[
            "--no-cache",
            "compute",
            "--rank",
            "3",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "0",
            "--quaternionic",
            "--allow-a0",
            "--format",
            "json",
        ]);
        r.unwrap();
        let parsed: ComputeOutput = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(parsed.params.real_degree, 4);
        assert_eq!(parsed.degree, 10);
        assert!(parsed.palindromic);
    }

    #[test]
    fn perturbed_verify_fails() {
        let engine = Engine::new();
        let checks = verification_checks(&engine, 30, true);
        let failing: Vec<_> = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failing.len(), 4, "{failing:?}");
        assert!(failing.iter().all(|n| n.starts_with("identity")));
    }

    #[test]
    fn strata_lines() {
        let (r, text) = run_args(&[
            "strata",
            "list",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--max-codim",
            "6",
            "--circles",
            "3",
        ]);
        r.unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            r#"{"parts":[[1,1],[1,0]],"codim":2,"real_refinements":4}"#
        );
    }

    #[test]
    fn formula_dump() {
        let (r, text) = run_args(&[
            "formula",
            "dump",
            "--formula",
            "rank2-moduli",
            "--genus",
            "2",
            "--circles",
            "1",
            "--order",
            "8",
        ]);
        r.unwrap();
        let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(
            v["series"]["coeffs"],
            serde_json::json!(["1", "3", "4", "4", "3", "1", "0", "0", "0"])
        );
        let (r, _) = run_args(&[
            "formula",
            "dump",
            "--formula",
            "rank2-moduli",
            "--genus",
            "2",
            "--circles",
            "0",
        ]);
        assert_eq!(r.unwrap_err().code, EXIT_INVALID);
    }

    #[test]
    fn cache_admin() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        run_args(&[
            "--cache-dir",
            d,
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "1",
        ])
        .0
        .unwrap();
        let (r, text) = run_args(&["--cache-dir", d, "cache", "stats"]);
        r.unwrap();
        assert!(!text.contains("entries: 0"));
        let (r, _) = run_args(&["--cache-dir", d, "cache", "clear"]);
        r.unwrap();
        let (_, text) = run_args(&["--cache-dir", d, "cache", "stats"]);
        assert!(text.contains("entries: 0"));
    }
}

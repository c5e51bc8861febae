//! Command dispatch for the `sqdepth` binary.
//!
//! Reports go to the `out` stream as JSON; `--pretty` adds a human-readable
//! summary on the `err` stream.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sqdepth_core::{
    analyze, bound_certificates, build_strand, conjecture_scan, exact_depth, parse_instance,
    stanley_depth, AnalysisOptions, AnalysisReport, Certificate, FieldSpec, GeneratorParams,
    InstanceFile, QuotientInstance, RhoTable, SquareFreeMonomial, StrandComplex,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sqdepth", version, about = "Depth certificates, exact depth and Stanley depth of I/J")]
struct Cli {
    /// Print a human-readable summary to standard error.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Coefficient field: `q` or `gf:<p>`. Repeatable.
    #[arg(long = "field", value_parser = parse_field)]
    fields: Vec<FieldSpec>,
}

impl FieldArgs {
    fn or_default(&self) -> Vec<FieldSpec> {
        if self.fields.is_empty() {
            AnalysisOptions::default().fields
        } else {
            let mut f = self.fields.clone();
            f.dedup();
            f
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: sqdepth_core::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Everything: counts, certificates, exact depth per field, Stanley depth.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        fields: FieldArgs,
        /// Skip the Stanley depth search when |P| exceeds this size.
        #[arg(long, default_value_t = 40)]
        max_sdepth_poset: usize,
    },
    /// Exact depth only.
    Depth {
        file: PathBuf,
        #[command(flatten)]
        fields: FieldArgs,
    },
    /// Certificates computable from the degree counts alone.
    Bounds { file: PathBuf },
    /// Stanley depth with a witness partition.
    Sdepth { file: PathBuf },
    /// Dump the strand at one square-free multidegree.
    Strands {
        file: PathBuf,
        /// Variable indices of the multidegree, e.g. `1,2,4`; defaults to all.
        #[arg(long, value_delimiter = ',')]
        multidegree: Option<Vec<usize>>,
        #[command(flatten)]
        fields: FieldArgs,
    },
    /// Generate random instances and cross-check everything.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        fields: FieldArgs,
        #[arg(long, default_value_t = 40)]
        max_sdepth_poset: usize,
    },
}

#[derive(Serialize)]
struct DepthReport {
    instance: InstanceFile,
    d: usize,
    depth: BTreeMap<String, usize>,
}

#[derive(Serialize)]
struct BoundsReport {
    instance: InstanceFile,
    d: usize,
    hypothesis_flag: bool,
    rho: BTreeMap<usize, usize>,
    alpha: BTreeMap<usize, i64>,
    certificates: Vec<Certificate>,
    upper_bound: Option<usize>,
}

#[derive(Serialize)]
struct SdepthReport {
    instance: InstanceFile,
    sdepth: usize,
    witness: Vec<sqdepth_core::IntervalRecord>,
}

#[derive(Serialize)]
struct StrandReport<'a> {
    instance: InstanceFile,
    strand: &'a StrandComplex,
    homology: BTreeMap<String, BTreeMap<usize, usize>>,
}

enum Failure {
    Invalid(String),
    Inconsistent(String),
}

impl From<sqdepth_core::Error> for Failure {
    fn from(e: sqdepth_core::Error) -> Self {
        match e {
            sqdepth_core::Error::NegativeHomology { .. }
            | sqdepth_core::Error::RankInconsistency { .. } => Failure::Inconsistent(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<QuotientInstance, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) {
    let text = serde_json::to_string_pretty(value).expect("report serialization");
    let _ = writeln!(out, "{text}");
}

fn pretty_analysis(err: &mut dyn Write, r: &AnalysisReport) {
    let _ = writeln!(err, "n = {}, d = {}", r.instance.n, r.d);
    let _ = writeln!(err, "{:>4} {:>6} {:>6}", "t", "rho", "alpha");
    for (t, rho) in &r.rho {
        let alpha = r.alpha.get(t).map(|a| a.to_string()).unwrap_or_default();
        let _ = writeln!(err, "{t:>4} {rho:>6} {alpha:>6}");
    }
    for c in r.certificates.iter().filter(|c| c.fired) {
        let field = c.field.map(|f| format!(" [{f}]")).unwrap_or_default();
        let t = c.t.map(|t| format!(" t={t}")).unwrap_or_default();
        let _ = writeln!(err, "fired: {}{t}{field} -> {:?}", c.kind, c.conclusions);
    }
    for (f, d) in &r.depth {
        let _ = writeln!(err, "depth over {f}: {d}");
    }
    if let Some(s) = r.sdepth {
        let _ = writeln!(err, "sdepth: {s}");
    }
    for w in &r.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for i in &r.inconsistencies {
        let _ = writeln!(err, "INCONSISTENT: {i}");
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Analyze {
            file,
            fields,
            max_sdepth_poset,
        } => {
            let inst = load(&file)?;
            let options = AnalysisOptions {
                fields: fields.or_default(),
                max_sdepth_poset: Some(max_sdepth_poset),
            };
            let report = analyze(&inst, &options)?;
            emit(out, &report);
            if cli.pretty {
                pretty_analysis(err, &report);
            }
            Ok(if report.consistent {
                EXIT_OK
            } else {
                EXIT_INCONSISTENT
            })
        }
        Command::Depth { file, fields } => {
            let inst = load(&file)?;
            let mut depth = BTreeMap::new();
            for f in fields.or_default() {
                depth.insert(f.to_string(), exact_depth(&inst, f)?);
            }
            if cli.pretty {
                for (f, d) in &depth {
                    let _ = writeln!(err, "depth over {f}: {d}");
                }
            }
            emit(
                out,
                &DepthReport {
                    instance: InstanceFile::from_instance(&inst),
                    d: inst.d(),
                    depth,
                },
            );
            Ok(EXIT_OK)
        }
        Command::Bounds { file } => {
            let inst = load(&file)?;
            let table = RhoTable::from_layers(&sqdepth_core::enumerate_quotient(&inst), inst.n());
            let certificates = bound_certificates(&inst, &table);
            let upper_bound = certificates.iter().filter_map(Certificate::upper_bound).min();
            if cli.pretty {
                for c in certificates.iter().filter(|c| c.fired) {
                    let _ = writeln!(err, "fired: {} -> {:?}", c.kind, c.conclusions);
                }
            }
            emit(
                out,
                &BoundsReport {
                    instance: InstanceFile::from_instance(&inst),
                    d: inst.d(),
                    hypothesis_flag: inst.hypothesis_flag(),
                    rho: table.rho.clone(),
                    alpha: table.alpha.clone(),
                    certificates,
                    upper_bound,
                },
            );
            Ok(EXIT_OK)
        }
        Command::Sdepth { file } => {
            let inst = load(&file)?;
            let (sdepth, p) = stanley_depth(&inst);
            if cli.pretty {
                let _ = writeln!(err, "sdepth: {sdepth}");
                for iv in &p.intervals {
                    let _ = writeln!(err, "  {iv}");
                }
            }
            let witness = p
                .intervals
                .iter()
                .map(|iv| sqdepth_core::IntervalRecord {
                    bottom: iv.bottom.support(),
                    top: iv.top.support(),
                })
                .collect();
            emit(
                out,
                &SdepthReport {
                    instance: InstanceFile::from_instance(&inst),
                    sdepth,
                    witness,
                },
            );
            Ok(EXIT_OK)
        }
        Command::Strands {
            file,
            multidegree,
            fields,
        } => {
            let inst = load(&file)?;
            let a = match multidegree {
                Some(s) => SquareFreeMonomial::from_support(inst.n(), &s)?,
                None => SquareFreeMonomial::full(inst.n()),
            };
            let strand = build_strand(&inst, &a);
            let mut homology = BTreeMap::new();
            for f in fields.or_default() {
                homology.insert(f.to_string(), strand.homology(f)?);
            }
            if cli.pretty {
                for i in (0..=strand.length()).rev() {
                    let basis: Vec<String> = strand.basis(i).iter().map(|m| m.to_string()).collect();
                    let _ = writeln!(err, "C_{i}: {}", basis.join(" "));
                }
            }
            emit(
                out,
                &StrandReport {
                    instance: InstanceFile::from_instance(&inst),
                    strand: &strand,
                    homology,
                },
            );
            Ok(EXIT_OK)
        }
        Command::Scan {
            n,
            count,
            seed,
            fields,
            max_sdepth_poset,
        } => {
            if n == 0 || n > sqdepth_core::monomial::MAX_VARS {
                return Err(Failure::Invalid(format!("--n must be in 1..=20, got {n}")));
            }
            let params = GeneratorParams::desk(n, seed);
            let options = AnalysisOptions {
                fields: fields.or_default(),
                max_sdepth_poset: Some(max_sdepth_poset),
            };
            let report = conjecture_scan(&params, count, &options)?;
            emit(out, &report);
            if cli.pretty {
                let _ = writeln!(
                    err,
                    "{} instances, {} sdepth skipped, {} conjecture findings, {} theorem violations",
                    report.entries.len(),
                    report.sdepth_skipped,
                    report.conjecture_violations.len(),
                    report.theorem_violations.len()
                );
            }
            Ok(if report.theorem_violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INCONSISTENT
            })
        }
    }
}

/// Parse `argv` (including the program name), run, and return the exit status.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Inconsistent(msg)) => {
            let _ = writeln!(err, "internal inconsistency: {msg}");
            EXIT_INCONSISTENT
        }
    }
}

//! Command-line definitions and dispatch. The binary parses, calls [`run`]
//! under the timeout, prints and exits.

use crate::corpus::CorpusConfig;
use crate::error::{Error, Result};
use crate::extension::transfer::proposition_ids;
use crate::limits::Limits;
use crate::report::{
    analyze_extension, analyze_ring, classify_report, construct_report, lattice_report, to_text, verify_report,
    z_ideal_report, Report,
};
use crate::ring::{parse_ideal, ExtSpec, RingSpec};
use crate::suites::{run_suite, SuiteOptions, SuiteReport};
use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "qmax", version, about = "Quasi-maximal ideals of finite commutative rings")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct Global {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the random part of the corpus.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest ring built; also the corpus size cap for `verify`.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    /// Largest ideal lattice enumerated.
    #[arg(long, global = true)]
    pub max_ideals: Option<usize>,
    /// Abort with exit code 3 after this many milliseconds.
    #[arg(long, global = true)]
    pub timeout_ms: Option<u64>,
    /// Include wall time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Summarize a ring, or an extension given as ext(R, S) or ext([gens], S).
    Analyze { spec: String },
    /// Classify one ideal.
    Classify {
        spec: String,
        /// Generators, comma separated.
        #[arg(long)]
        ideal: String,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Restrict the transfer suite to these statement ids.
        #[arg(long, value_delimiter = ',')]
        props: Option<Vec<String>>,
        /// Keep per-instance transfer records.
        #[arg(long)]
        records: bool,
    },
    /// Build a subring whose conductor is the given quasi-maximal ideal.
    Construct {
        spec: String,
        #[arg(long)]
        ideal: String,
    },
    /// List every ideal with covers, radicals and maximal/prime flags.
    Lattice { spec: String },
    /// Classify the ideal nZ of the integers.
    #[command(name = "z-ideal", alias = "Z-ideal")]
    ZIdeal { n: u64 },
}

fn quote(s: &str) -> String {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "/-_.,^".contains(c)) {
        s.to_string()
    } else {
        format!("'{}'", s.replace('\'', "'\\''"))
    }
}

/// Canonical command line: parses back to the same [`Cli`].
pub fn echo(cli: &Cli) -> String {
    let mut out = String::from("qmax");
    let g = &cli.global;
    if g.json {
        out.push_str(" --json");
    }
    if g.seed != 0 {
        let _ = write!(out, " --seed {}", g.seed);
    }
    if let Some(n) = g.max_size {
        let _ = write!(out, " --max-size {n}");
    }
    if let Some(n) = g.max_ideals {
        let _ = write!(out, " --max-ideals {n}");
    }
    if let Some(n) = g.timeout_ms {
        let _ = write!(out, " --timeout-ms {n}");
    }
    if g.timing {
        out.push_str(" --timing");
    }
    match &cli.command {
        Command::Analyze { spec } => {
            let _ = write!(out, " analyze {}", quote(spec));
        }
        Command::Classify { spec, ideal } => {
            let _ = write!(out, " classify {} --ideal {}", quote(spec), quote(ideal));
        }
        Command::Verify { suite, props, records } => {
            let _ = write!(out, " verify {}", quote(suite));
            if let Some(p) = props {
                let _ = write!(out, " --props {}", quote(&p.join(",")));
            }
            if *records {
                out.push_str(" --records");
            }
        }
        Command::Construct { spec, ideal } => {
            let _ = write!(out, " construct {} --ideal {}", quote(spec), quote(ideal));
        }
        Command::Lattice { spec } => {
            let _ = write!(out, " lattice {}", quote(spec));
        }
        Command::ZIdeal { n } => {
            let _ = write!(out, " z-ideal {n}");
        }
    }
    out
}

/// Statement ids accepted by `--props`.
pub fn prop_ids() -> Vec<&'static str> {
    let mut ids = proposition_ids();
    ids.extend(["monic-quotient-transfer", "retract-transfer"]);
    ids.sort_unstable();
    ids
}

/// Installs the caps from the flags. For `verify`, `--max-size` caps the
/// corpus rather than ring construction.
pub fn install_limits(cli: &Cli) {
    let g = &cli.global;
    let mut l = Limits::default();
    if let (Some(n), false) = (g.max_size, matches!(cli.command, Command::Verify { .. })) {
        l.max_size = n;
    }
    if let Some(n) = g.max_ideals {
        l.max_ideals = n;
    }
    l.install();
}

pub enum Outcome {
    Done(Report),
    /// Some suite reported a failure.
    Failed(Report),
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    install_limits(cli);
    let g = &cli.global;
    let results = match &cli.command {
        Command::Analyze { spec } if spec.trim_start().starts_with("ext(") => analyze_extension(&ExtSpec::parse(spec)?.build()?)?,
        Command::Analyze { spec } => analyze_ring(&RingSpec::parse(spec)?.build()?)?,
        Command::Classify { spec, ideal } => {
            let r = RingSpec::parse(spec)?.build()?;
            classify_report(&r, &parse_ideal(&r, ideal)?)?
        }
        Command::Construct { spec, ideal } => {
            let s = RingSpec::parse(spec)?.build()?;
            construct_report(&s, &parse_ideal(&s, ideal)?)?
        }
        Command::Lattice { spec } => lattice_report(&RingSpec::parse(spec)?.build()?)?,
        Command::ZIdeal { n } => z_ideal_report(*n)?,
        Command::Verify { suite, props, records } => {
            if let Some(p) = props {
                let known = prop_ids();
                if let Some(bad) = p.iter().find(|x| !known.contains(&x.as_str())) {
                    return Err(Error::InvalidParameter(format!("unknown statement id {bad:?}; known: {}", known.join(", "))));
                }
            }
            let mut cfg = CorpusConfig { seed: g.seed, ..CorpusConfig::default() };
            if let Some(n) = g.max_size {
                cfg.max_size = n;
            }
            let opts = SuiteOptions { corpus: cfg, props: props.clone(), records: *records };
            let reports = run_suite(suite, &opts)?;
            let failed = !reports.iter().all(SuiteReport::passed);
            let mut rep = Report::new(echo(cli), g.seed, verify_report(&reports));
            rep.corpus = Some(cfg);
            return Ok(if failed { Outcome::Failed(rep) } else { Outcome::Done(rep) });
        }
    };
    Ok(Outcome::Done(Report::new(echo(cli), g.seed, results)))
}

/// Exit status for an error: 3 for caps, 1 for a failed internal
/// cross-check, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::InternalInconsistency(_) => 1,
        _ => 2,
    }
}

fn verify_text(rep: &Report) -> String {
    let mut out = String::new();
    let suites = rep.results["suites"].as_array().cloned().unwrap_or_default();
    for s in &suites {
        let failed = s["failed"].as_u64().unwrap_or(0);
        let _ = writeln!(
            out,
            "{}: {} (checked {}, failed {failed}, hypothesis not met {})",
            s["suite"].as_str().unwrap_or("?"),
            if failed == 0 { "pass" } else { "FAIL" },
            s["checked"],
            s["hypothesis_not_met"],
        );
        for f in s["failures"].as_array().into_iter().flatten() {
            let _ = writeln!(out, "  {}", f.as_str().unwrap_or_default());
        }
    }
    out
}

/// Human-readable rendering.
pub fn render_text(cli: &Cli, rep: &Report) -> String {
    let mut out = format!("{}\n", rep.command);
    out.push_str(&match cli.command {
        Command::Verify { .. } => verify_text(rep),
        _ => to_text(&rep.results),
    });
    if let Some(ms) = rep.wall_time_ms {
        let _ = writeln!(out, "wall time: {ms} ms");
    }
    out
}


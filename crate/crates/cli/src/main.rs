use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sgtrim::counting::{count_all, count_multiplicity};
use sgtrim::explorer::{explore, ExplorationTask};
use sgtrim::oracle::naive_invariants;
use sgtrim::properties::{gcd_lefts, is_cutting};
use sgtrim::{Error, PropertySpec, Ratio, Semigroup, Target};

#[derive(Parser)]
#[command(name = "sgtrim", version, about = "Explore the tree of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a semigroup given as `g1,g2,...[@t]`.
    Info {
        spec: String,
        /// Recompute the invariants with the reference oracle and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Count semigroups by multiplicity and genus.
    #[command(group(ArgGroup::new("which").required(true).args(["multiplicity", "all"])))]
    Count {
        gamma: u32,
        #[arg(long)]
        multiplicity: Option<u32>,
        #[arg(long)]
        all: bool,
        /// Explore m <= ceil(2 gamma / 3) only and fill the rest by recurrence.
        #[arg(long, conflicts_with = "multiplicity")]
        kaplan: bool,
        #[arg(long, env = "SGTRIM_THREADS")]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List the semigroups of genus up to gamma with a given defect.
    #[command(group(ArgGroup::new("target").required(true).args([
        "wilf_negative", "eliahou_negative", "zero_wilf_nontrivial", "non_generic",
    ])))]
    Search {
        gamma: u32,
        #[arg(long)]
        wilf_negative: bool,
        #[arg(long)]
        eliahou_negative: bool,
        #[arg(long)]
        zero_wilf_nontrivial: bool,
        #[arg(long)]
        non_generic: bool,
        #[arg(long, env = "SGTRIM_THREADS")]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Trim::Auto)]
        trim: Trim,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Trim {
    Auto,
    None,
}

#[derive(Serialize)]
struct Cutting {
    #[serde(rename = "G_c")]
    genus: bool,
    #[serde(rename = "H_3")]
    generic: bool,
    #[serde(rename = "D_3")]
    density: bool,
}

#[derive(Serialize)]
struct InfoRecord {
    generators: Vec<u32>,
    truncation: Option<u32>,
    multiplicity: u32,
    conductor: u32,
    frobenius: i64,
    genus: u32,
    edim: u32,
    left_count: u32,
    left_primitives: Vec<u32>,
    big_primitives: Vec<u32>,
    depth: u32,
    density: u32,
    wilf: i64,
    eliahou: i64,
    quasi_superficial: bool,
    gcd_lefts: u32,
    cutting: Cutting,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

#[derive(Serialize)]
struct HitRecord<'a> {
    generators: &'a [u32],
    truncation: Option<u32>,
    multiplicity: u32,
    genus: u32,
    conductor: u32,
    edim: u32,
    wilf: i64,
    eliahou: i64,
}

enum Failure {
    Usage(String),
    BadSpec(String),
    Overflow(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } => Failure::Overflow(e.to_string()),
            Error::InvalidParameter(_) | Error::GuardViolation { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn parse_spec(spec: &str) -> Result<Semigroup, Failure> {
    let bad = |why: String| Failure::BadSpec(format!("bad semigroup {spec:?}: {why}"));
    let (gens, trunc) = match spec.split_once('@') {
        Some((g, t)) => (g, Some(t.trim().parse::<u32>().map_err(|e| bad(e.to_string()))?)),
        None => (spec, None),
    };
    let gens = gens
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<u32>().map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Semigroup::from_generators(&gens, trunc).map_err(|e| bad(e.to_string()))
}

fn threads(requested: Option<usize>) -> Result<usize, Failure> {
    match requested {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(n) => Ok(n),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn info(spec: &str, verify: bool) -> Result<(), Failure> {
    let s = parse_spec(spec)?;
    let inv = s.invariants();
    let (generators, truncation) = s.canonical_description();
    let g_bound = PropertySpec::GenusBound(s.conductor().max(1));
    let d3 = PropertySpec::LargeDensity(Ratio::integer(3));
    let record = InfoRecord {
        generators,
        truncation,
        multiplicity: s.multiplicity(),
        conductor: s.conductor(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        edim: s.edim(),
        left_count: s.left_count(),
        left_primitives: s.left_primitives().to_vec(),
        big_primitives: s.big_primitives().to_vec(),
        depth: inv.depth,
        density: inv.density,
        wilf: inv.wilf,
        eliahou: inv.eliahou,
        quasi_superficial: s.is_quasi_superficial(),
        gcd_lefts: gcd_lefts(&s),
        cutting: Cutting {
            genus: is_cutting(&s, &g_bound),
            generic: is_cutting(&s, &PropertySpec::generic()),
            density: is_cutting(&s, &d3),
        },
        verified: verify.then(|| naive_invariants(&s) == inv),
    };
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &record).map_err(|e| Failure::Other(e.to_string()))?;
    writeln!(out)?;
    if record.verified == Some(false) {
        return Err(Failure::Other("invariants disagree with the reference oracle".into()));
    }
    Ok(())
}

fn count(
    gamma: u32,
    multiplicity: Option<u32>,
    kaplan: bool,
    workers: usize,
    format: Format,
) -> Result<(), Failure> {
    if gamma == 0 {
        return Err(Failure::Usage("gamma must be positive".into()));
    }
    let mat = match multiplicity {
        Some(m) => count_multiplicity(gamma, m, workers)?,
        None => count_all(gamma, workers, kaplan)?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        Format::Csv => mat.write_csv(&mut out)?,
        Format::Json => {
            serde_json::to_writer(&mut out, &mat.rows()).map_err(|e| Failure::Other(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn search(gamma: u32, target: Target, workers: usize, trim: Trim) -> Result<(), Failure> {
    if gamma == 0 {
        return Err(Failure::Usage("gamma must be positive".into()));
    }
    let task = match trim {
        Trim::Auto => ExplorationTask::trimmed(gamma, target),
        Trim::None => ExplorationTask::full(gamma, target),
    }
    .workers(workers);
    let result = explore(&task)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for h in &result.hits {
        let rec = HitRecord {
            generators: &h.generators,
            truncation: h.truncation,
            multiplicity: h.multiplicity,
            genus: h.genus,
            conductor: h.conductor,
            edim: h.edim,
            wilf: h.invariants.wilf,
            eliahou: h.invariants.eliahou,
        };
        serde_json::to_writer(&mut out, &rec).map_err(|e| Failure::Other(e.to_string()))?;
        writeln!(out)?;
    }
    out.flush()?;
    eprintln!("{} hits", result.hits.len());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Info { spec, verify } => info(&spec, verify),
        Command::Count { gamma, multiplicity, all: _, kaplan, threads: t, format } => {
            count(gamma, multiplicity, kaplan, threads(t)?, format)
        }
        Command::Search { gamma, wilf_negative, eliahou_negative, zero_wilf_nontrivial, non_generic: _, threads: t, trim } => {
            let target = if wilf_negative {
                Target::WilfNegative
            } else if eliahou_negative {
                Target::EliahouNegative
            } else if zero_wilf_nontrivial {
                Target::ZeroWilfNontrivial
            } else {
                Target::NonGeneric(Ratio::integer(3))
            };
            search(gamma, target, threads(t)?, trim)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (1, m),
                Failure::BadSpec(m) => (2, m),
                Failure::Overflow(m) => (4, m),
                Failure::Other(m) => (3, m),
            };
            eprintln!("sgtrim: {msg}");
            ExitCode::from(code)
        }
    }
}

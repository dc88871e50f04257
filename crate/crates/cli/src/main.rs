//! `kneser`: compute, cache and invert Kneser chromatic function invariants.

use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kneser_core::catalog::{self, SeriesCache, DEFAULT_SEED, DEFAULT_TRIALS};
use kneser_core::kneser::PsumEngine;
use kneser_core::reconstruction::{
    is_isomorphism, reconstruct_from_invariant, reconstruct_with_witness, tree_classes_of,
};
use kneser_core::tree_invariants::min_degree_sequence;
use kneser_core::{parse_graph6, write_graph6, Error, PSeries, SimpleGraph};

const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "kneser", version, about)]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Machine-readable output (the default for every command but reconstruct).
    #[arg(long, global = true)]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Power sum expansion of X_{K_{N,k}}(G), one JSON line per input graph.
    Invariant {
        /// graph6 strings; read from stdin, one per line, when absent.
        graphs: Vec<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        /// JSONL cache to consult and extend.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Rebuilds a tree from a k = 2 series file ("-" for stdin).
    Reconstruct {
        series: PathBuf,
        /// graph6 of the source tree; also report an explicit isomorphism to it.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Round trip over every tree up to --nmax vertices, as JSONL.
    Verify {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
    /// Searches for non-isomorphic graphs with equal invariants.
    Collide {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Minimum degree sequence r(T) of a tree.
    Profile {
        /// graph6 string; read from stdin when absent.
        graph: Option<String>,
    },
}

enum Failure {
    Input(String),
    Cap(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn graph_inputs(args: &[String]) -> Result<Vec<SimpleGraph>, Failure> {
    let lines: Vec<String> = if args.is_empty() {
        io::stdin().lock().lines().collect::<Result<_, _>>()?
    } else {
        args.to_vec()
    };
    let graphs: Vec<SimpleGraph> = lines
        .iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).map_err(|e| Failure::Input(format!("{}: {e}", l.trim()))))
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Input("no graph6 input".into()));
    }
    Ok(graphs)
}

fn series_text(x: &PSeries) -> String {
    let mut out = String::new();
    for (class, coeff) in x.terms() {
        let comps: Vec<String> = class.components().iter().map(|c| format!("p[{c}]")).collect();
        out.push_str(&format!("{coeff:+} {}\n", comps.join(" ")));
    }
    out
}

fn invariant(out: &mut impl Write, args: &[String], k: usize, cache: Option<PathBuf>, text: bool) -> Outcome {
    let graphs = graph_inputs(args)?;
    let mut cache = cache.map(SeriesCache::open).transpose()?;
    let mut engine = PsumEngine::new(k)?;
    for g in &graphs {
        let x = match cache.as_mut() {
            Some(c) => c.get_or_compute(g, k)?,
            None => engine.kneser_psum(g)?,
        };
        if text {
            writeln!(out, "# {} k={k}", write_graph6(g))?;
            write!(out, "{}", series_text(&x))?;
        } else {
            writeln!(out, "{}", x.to_json())?;
        }
    }
    Ok(())
}

fn reconstruct(out: &mut impl Write, path: &PathBuf, witness: Option<&str>, json: bool) -> Outcome {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    let x = PSeries::from_json(text.trim())?;
    let result = match witness {
        Some(g6) => {
            let t = parse_graph6(g6).map_err(Error::from)?;
            let r = reconstruct_with_witness(&tree_classes_of(&x)?, &t)?;
            let map = r.witness.as_deref().unwrap_or_default();
            if !is_isomorphism(&t, &r.tree, map) {
                return Err(Failure::Verify("witness is not an isomorphism".into()));
            }
            r
        }
        None => reconstruct_from_invariant(&x)?,
    };
    if json || witness.is_some() {
        writeln!(out, "{}", serde_json::to_string(&result.to_json()).expect("serialize"))?;
    } else {
        writeln!(out, "{}", write_graph6(&result.tree))?;
    }
    Ok(())
}

fn verify(out: &mut impl Write, nmax: usize, text: bool) -> Outcome {
    let report = catalog::verify(nmax)?;
    if text {
        for r in &report.records {
            writeln!(
                out,
                "{:>2} {:<12} |Λt|={:<3} {} {}",
                r.n,
                r.graph6,
                r.lambda_t_size,
                kneser_core::DegreeProfile(r.min_profile.clone()),
                if r.pass { "pass" } else { "FAIL" }
            )?;
        }
        let s = &report.summary;
        writeln!(out, "{}/{} passed, injective: {}", s.passed, s.total, s.injective)?;
    } else {
        write!(out, "{}", report.to_jsonl())?;
    }
    if report.summary.ok() {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "{} of {} trees failed",
            report.summary.total - report.summary.passed,
            report.summary.total
        )))
    }
}

fn collide(out: &mut impl Write, nmax: usize, k: usize, trials: usize, seed: u64, text: bool) -> Outcome {
    let report = catalog::collide(nmax, k, trials, seed)?;
    if text {
        writeln!(
            out,
            "k={} n<={} graphs={} m={} seed={} trials={} fingerprint groups={} confirmed={}",
            report.k,
            report.n_max,
            report.graphs,
            report.m,
            report.seed,
            report.trials,
            report.fingerprint_groups,
            report.confirmed.len()
        )?;
        for p in &report.confirmed {
            writeln!(out, "{} {}", p.first, p.second)?;
        }
    } else {
        writeln!(out, "{}", serde_json::to_string(&report).expect("serialize"))?;
    }
    Ok(())
}

fn profile(out: &mut impl Write, graph: Option<String>, text: bool) -> Outcome {
    let args: Vec<String> = graph.into_iter().collect();
    let graphs = graph_inputs(&args)?;
    for t in &graphs {
        let r = min_degree_sequence(t)?;
        if text {
            writeln!(out, "{r}")?;
        } else {
            writeln!(out, "{}", serde_json::to_string(&r).expect("serialize"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.format.text;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = match cli.command {
        Command::Invariant { graphs, k, cache } => invariant(&mut out, &graphs, k as usize, cache, text),
        Command::Reconstruct { series, witness } => {
            reconstruct(&mut out, &series, witness.as_deref(), cli.format.json)
        }
        Command::Verify { nmax } => verify(&mut out, nmax, text),
        Command::Collide { nmax, k, trials, seed } => collide(&mut out, nmax, k as usize, trials, seed, text),
        Command::Profile { graph } => profile(&mut out, graph, text),
    };
    let flushed = out.flush();
    let (code, message) = match outcome {
        Ok(()) => match flushed {
            Ok(()) => return ExitCode::SUCCESS,
            Err(e) => (EXIT_INPUT, e.to_string()),
        },
        Err(Failure::Input(m)) => (EXIT_INPUT, m),
        Err(Failure::Cap(m)) => (EXIT_CAP, m),
        Err(Failure::Verify(m)) => (EXIT_VERIFY, m),
    };
    eprintln!("kneser: {message}");
    ExitCode::from(code)
}

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use shifted_burnside::group::{automorphisms, catalog_entries};
use shifted_burnside::verify::{run_suite, SUITES};
use shifted_burnside::{catalog_lookup, essential_report, EssentialReport, Group, ScanConfig};

#[derive(Parser)]
#[command(name = "shifted-burnside", version, about = "Essential algebra counts for shifted Burnside algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Gen, St', Dim and Prod for a pair (G, T).
    Report {
        #[arg(long)]
        g: String,
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; defaults to all cores.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        threads: Option<u16>,
        #[arg(long, env = "BE_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Use the reduced candidate set and automorphism orbits.
        #[arg(long)]
        fast: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// List the built-in groups.
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct HDoc {
    pub h: String,
    pub candidate_classes: usize,
    pub pairs: usize,
    pub factored_here: usize,
}

#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct TimingsDoc {
    pub lattice: u64,
    pub scan: u64,
    pub rank: u64,
}

#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct ReportDoc {
    pub schema: String,
    pub g: String,
    pub t: String,
    pub gen: usize,
    pub st_prime: usize,
    pub dim: usize,
    pub prod: usize,
    pub per_h: Vec<HDoc>,
    pub timings_ms: TimingsDoc,
}

impl From<EssentialReport> for ReportDoc {
    fn from(r: EssentialReport) -> Self {
        ReportDoc {
            schema: "1".into(),
            g: r.g,
            t: r.t,
            gen: r.gen,
            st_prime: r.st_prime,
            dim: r.dim,
            prod: r.prod,
            per_h: r
                .per_h
                .into_iter()
                .map(|b| HDoc {
                    h: b.h,
                    candidate_classes: b.candidate_classes,
                    pairs: b.pairs,
                    factored_here: b.factored_here,
                })
                .collect(),
            timings_ms: TimingsDoc {
                lattice: r.timings_ms.lattice,
                scan: r.timings_ms.scan,
                rank: r.timings_ms.rank,
            },
        }
    }
}

fn print_text(doc: &ReportDoc) {
    println!("G = {}, T = {}", doc.g, doc.t);
    println!("Gen: {}", doc.gen);
    println!("St': {}", doc.st_prime);
    println!("Dim: {}", doc.dim);
    println!("Prod: {}", doc.prod);
    if !doc.per_h.is_empty() {
        println!();
        println!("{:<8} {:>10} {:>12} {:>9}", "H", "classes", "pairs", "factored");
        for b in &doc.per_h {
            println!("{:<8} {:>10} {:>12} {:>9}", b.h, b.candidate_classes, b.pairs, b.factored_here);
        }
    }
    let t = &doc.timings_ms;
    println!();
    println!("time (ms): lattice {} scan {} rank {}", t.lattice, t.scan, t.rank);
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Report {
            g,
            t,
            format,
            threads,
            cache_dir,
            fast,
        } => {
            let g = catalog_lookup(&g)?;
            let t = catalog_lookup(&t)?;
            let cfg = ScanConfig {
                threads: threads.map(usize::from),
                reduced: fast,
                symmetry: fast,
                cache_dir,
                ..Default::default()
            };
            let doc = ReportDoc::from(essential_report(&g, &t, &cfg)?);
            match format {
                Format::Text => print_text(&doc),
                Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
            }
            Ok(true)
        }
        Command::Verify { suite, seed } => {
            let r = run_suite(&suite, seed)?;
            if r.passed() {
                println!("{}: PASS ({} checks, seed {seed})", r.name, r.checks);
            } else {
                println!(
                    "{}: FAIL ({} of {} checks failed, seed {seed})",
                    r.name,
                    r.failure_count(),
                    r.checks
                );
                for f in &r.failures {
                    println!("  {f}");
                }
            }
            Ok(r.passed())
        }
        Command::Catalog => {
            println!("{:<9} {:>5} {:>8} {:>5}", "name", "order", "abelian", "|Out|");
            for e in catalog_entries() {
                let g = catalog_lookup(e.name).with_context(|| format!("building {}", e.name))?;
                if g.order() != e.order {
                    bail!("catalog entry {} has order {}", e.name, g.order());
                }
                println!(
                    "{:<9} {:>5} {:>8} {:>5}",
                    e.name,
                    e.order,
                    if g.is_abelian() { "yes" } else { "no" },
                    automorphisms(&g).out_order()
                );
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

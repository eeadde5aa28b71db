use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use circulant_codes::{
    classify, enumerator_string, improve, is_graph_vector, load_bounds, min_distance, paley_vector,
    vector_from_connection_set, weight_distribution_with, weight_profile, BoundsTable,
    ConnectionSet, DistributionOptions, GeneratorVector, Outcome,
};

mod verify;

#[derive(Parser)]
#[command(
    name = "circode",
    version,
    about = "Binary (I | A) codes from circulant generator vectors"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator vector and whether it comes from an undirected graph.
    Gen(VectorArgs),
    /// Exact minimum distance with the per-message-weight table.
    Mindist {
        #[command(flatten)]
        vector: VectorArgs,
        /// Stop as soon as a codeword lighter than this is found.
        #[arg(long)]
        stop_below: Option<usize>,
        /// Message weights shown in the table.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full weight distribution.
    Enumerate {
        #[command(flatten)]
        vector: VectorArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest n for which the 2^n sweep is attempted.
        #[arg(long, default_value_t = 32)]
        max_n: usize,
    },
    /// Clear bad elements until the target distance is reached.
    Search {
        #[command(flatten)]
        vector: VectorArgs,
        /// Target distance; defaults to the lower bound for [2n, n].
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_iters: usize,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Compare the minimum distance with the best-known bounds.
    Classify {
        #[command(flatten)]
        vector: VectorArgs,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Recompute every reference instance and compare with published values.
    VerifyPaper {
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Skip weight distributions for n above this.
        #[arg(long, default_value_t = 32)]
        max_n: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VectorArgs {
    /// Comma-separated bits, e.g. 0,1,1,0,1.
    #[arg(long)]
    vector: Option<String>,
    /// Connection set `n:a1,a2,...`.
    #[arg(long)]
    set: Option<String>,
    /// Prime p = 1 mod 4; quadratic-residue graph.
    #[arg(long)]
    paley: Option<usize>,
}

impl VectorArgs {
    fn resolve(&self) -> Result<GeneratorVector> {
        if let Some(v) = &self.vector {
            return v.parse().with_context(|| format!("invalid --vector {v:?}"));
        }
        if let Some(s) = &self.set {
            let set: ConnectionSet = s.parse().with_context(|| format!("invalid --set {s:?}"))?;
            return Ok(vector_from_connection_set(&set));
        }
        let p = self.paley.expect("clap enforces one input form");
        paley_vector(p).with_context(|| format!("invalid --paley {p}"))
    }
}

#[derive(Args)]
struct BoundsArgs {
    /// Bounds CSV (`length,dimension,lower,upper`); defaults to the bundled table.
    #[arg(long)]
    bounds: Option<PathBuf>,
}

impl BoundsArgs {
    fn load(&self) -> Result<BoundsTable> {
        match &self.bounds {
            None => Ok(BoundsTable::bundled()),
            Some(path) => {
                let file =
                    File::open(path).with_context(|| format!("opening {}", path.display()))?;
                load_bounds(file).with_context(|| format!("reading {}", path.display()))
            }
        }
    }
}

fn elapsed_line(start: Instant) {
    println!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
}

/// `Ok(true)` when every requested check passed.
fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.command {
        Command::Gen(args) => {
            let alpha = args.resolve()?;
            println!("{alpha}");
            println!("graph={}", is_graph_vector(&alpha));
            Ok(true)
        }
        Command::Mindist {
            vector,
            stop_below,
            depth,
            format,
        } => {
            let alpha = vector.resolve()?;
            let start = Instant::now();
            let result = min_distance(&alpha, stop_below)?;
            let table = weight_profile(&alpha, depth)?;
            match format {
                Format::Text => {
                    println!("k s'_k rows");
                    for row in &table {
                        println!("{} {} {}", row.k, row.a_weight, braces(&row.support));
                    }
                }
                Format::Csv => {
                    println!("k,a_weight,rows");
                    for row in &table {
                        let rows: Vec<String> = row.support.iter().map(|r| r.to_string()).collect();
                        println!("{},{},{}", row.k, row.a_weight, rows.join(" "));
                    }
                }
            }
            if result.exact {
                println!("d={}", result.d);
            } else {
                println!(
                    "d<={} (upper bound, stopped below {})",
                    result.d,
                    stop_below.unwrap_or(0)
                );
            }
            println!("witness rows={}", braces(&result.witness_rows));
            println!("witness={}", result.witness);
            elapsed_line(start);
            Ok(true)
        }
        Command::Enumerate {
            vector,
            format,
            max_n,
        } => {
            let alpha = vector.resolve()?;
            let w = weight_distribution_with(&alpha, &DistributionOptions { max_n })?;
            match format {
                Format::Text => println!("{}", enumerator_string(&w)),
                Format::Csv => print!("{}", w.to_csv()),
            }
            Ok(true)
        }
        Command::Search {
            vector,
            target,
            max_iters,
            bounds,
        } => {
            let alpha = vector.resolve()?;
            let table = bounds.load()?;
            let n = alpha.n();
            let target = match target {
                Some(t) => t,
                None => {
                    table
                        .lookup(2 * n, n)
                        .context("no --target given and no bounds entry to default from")?
                        .lower
                }
            };
            let start = Instant::now();
            let trace = improve(&alpha, target, max_iters)?;
            print!("{}", trace.to_log());
            println!("final={}", trace.final_alpha);
            println!("graph={}", is_graph_vector(&trace.final_alpha));
            match classify(&trace.final_alpha, &table) {
                Ok(c) => println!(
                    "class={} d={} bounds=[{},{}] lower={} upper={}",
                    c.class,
                    c.d,
                    c.bounds.length,
                    c.bounds.dimension,
                    c.bounds.lower,
                    c.bounds.upper
                ),
                Err(e) => println!("class=unknown ({e})"),
            }
            elapsed_line(start);
            Ok(trace.outcome == Outcome::Reached)
        }
        Command::Classify { vector, bounds } => {
            let alpha = vector.resolve()?;
            let c = classify(&alpha, &bounds.load()?)?;
            println!(
                "class={} d={} bounds=[{},{}] lower={} upper={}",
                c.class, c.d, c.bounds.length, c.bounds.dimension, c.bounds.lower, c.bounds.upper
            );
            Ok(true)
        }
        Command::VerifyPaper { bounds, max_n } => {
            let start = Instant::now();
            let table = bounds.load()?;
            let reports = verify::run_all(&table, max_n)?;
            print!("{}", verify::render(&reports));
            elapsed_line(start);
            Ok(reports.iter().all(|r| r.passed()))
        }
    }
}

fn braces(rows: &[usize]) -> String {
    let items: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! `polybox` command line: evaluate, solve, generate and benchmark
//! box-constrained polynomial problems stored as JSON documents.

use clap::{Parser, Subcommand, ValueEnum};
use polybox::bench::{
    run_benchmark, write_delta_hist_csv, write_improvement_csv, write_results_csv,
    write_summary_csv, BenchConfig, DEFAULT_TH_GRID,
};
use polybox::generate::{generate_random_pol, GenSpec};
use polybox::record::{from_record, to_record, ProblemDoc};
use polybox::solver::{solve, Bounds, ObjectiveMode, SolveError, SolveOptions};
use polybox::{PolyError, Polynomial};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "polybox",
    version,
    about = "Box-constrained sparse polynomial optimization"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a problem's polynomial at a batch of points
    Eval {
        /// Problem JSON file
        #[arg(long)]
        problem: PathBuf,
        /// Points CSV, one comma-separated point per line, no header
        #[arg(long)]
        points: PathBuf,
        /// Emit a JSON array instead of one value per line
        #[arg(long)]
        json: bool,
    },
    /// Minimize, maximize or root-find a problem over its box
    Solve {
        /// Problem JSON file
        #[arg(long)]
        problem: PathBuf,
        /// Lower bounds (comma separated; a single value broadcasts)
        #[arg(long, allow_hyphen_values = true)]
        xmin: Option<String>,
        /// Upper bounds (comma separated; a single value broadcasts)
        #[arg(long, allow_hyphen_values = true)]
        xmax: Option<String>,
        /// Initial guess (comma separated; a single value broadcasts; default 0)
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
        /// Objective sense
        #[arg(long, value_enum, default_value_t = ModeArg::Min)]
        mode: ModeArg,
        /// Number of starting points
        #[arg(long, default_value_t = 1)]
        ntrials: u32,
        /// Grid points per coordinate
        #[arg(long, default_value_t = 1000)]
        ngrid: usize,
        /// Maximum rounds per trial
        #[arg(long = "iter-max", default_value_t = 100)]
        iter_max: u32,
        /// Relative improvement threshold for stopping
        #[arg(long, default_value_t = 1e-2)]
        eps: f64,
        /// Seed for the restart sampler
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compact single-line JSON output
        #[arg(long)]
        json: bool,
    },
    /// Generate a random problem file
    Gen {
        /// Number of variables
        #[arg(long)]
        nx: usize,
        /// Total degree (attained exactly)
        #[arg(long)]
        deg: u32,
        /// Number of monomials
        #[arg(long)]
        card: usize,
        /// Generator seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output problem JSON path
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run the benchmark protocol and write its CSV reports
    Bench {
        /// Benchmark config JSON (defaults apply for missing keys)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for the CSV files
        #[arg(long)]
        out: PathBuf,
        /// Override the config seed
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Min,
    Max,
    Root,
}

impl From<ModeArg> for ObjectiveMode<f64> {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Min => ObjectiveMode::Minimize,
            ModeArg::Max => ObjectiveMode::Maximize,
            ModeArg::Root => ObjectiveMode::RootFind,
        }
    }
}

enum CliError {
    /// Bad input: exit code 2.
    Validation(String),
    /// Failure while computing: exit code 1.
    Runtime(String),
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::AllNonFinite => CliError::Runtime(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<(Polynomial<f64>, ProblemDoc), CliError> {
    let doc = ProblemDoc::from_json(&read_to_string(path)?)?;
    let p = from_record(&doc)?;
    Ok((p, doc))
}

/// Parses a comma-separated vector flag; a single value broadcasts to `n`
/// components.
fn parse_vec(flag: &str, raw: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    let values: Vec<f64> = parts
        .iter()
        .map(|s| {
            s.parse::<f64>().map_err(|_| {
                CliError::Validation(format!("--{flag}: cannot parse '{s}' as a number"))
            })
        })
        .collect::<Result<_, _>>()?;
    if values.len() == n {
        Ok(values)
    } else if values.len() == 1 {
        Ok(vec![values[0]; n])
    } else {
        Err(CliError::Validation(format!(
            "--{flag}: expected 1 or {n} values, got {}",
            values.len()
        )))
    }
}

fn read_points(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_path(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record =
            record.map_err(|e| CliError::Validation(format!("points line {}: {e}", i + 1)))?;
        let row: Vec<f64> = record
            .iter()
            .map(|s| {
                s.trim().parse::<f64>().map_err(|_| {
                    CliError::Validation(format!("points line {}: '{s}' is not a number", i + 1))
                })
            })
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Eval {
            problem,
            points,
            json,
        } => {
            let (p, _) = load_problem(&problem)?;
            let rows = read_points(&points)?;
            let values = p.eval_batch(&rows)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&values).expect("values serialize")
                );
            } else {
                for v in values {
                    println!("{v}");
                }
            }
            Ok(())
        }
        Cmd::Solve {
            problem,
            xmin,
            xmax,
            x0,
            mode,
            ntrials,
            ngrid,
            iter_max,
            eps,
            seed,
            json,
        } => {
            let (p, doc) = load_problem(&problem)?;
            let n = p.nx();
            let xmin = match xmin {
                Some(raw) => parse_vec("xmin", &raw, n)?,
                None => doc.xmin.clone().ok_or_else(|| {
                    CliError::Validation(
                        "no lower bounds: supply --xmin or put xmin in the problem file".into(),
                    )
                })?,
            };
            let xmax = match xmax {
                Some(raw) => parse_vec("xmax", &raw, n)?,
                None => doc.xmax.clone().ok_or_else(|| {
                    CliError::Validation(
                        "no upper bounds: supply --xmax or put xmax in the problem file".into(),
                    )
                })?,
            };
            let bounds = Bounds::new(xmin, xmax)?;
            let x0 = match x0 {
                Some(raw) => parse_vec("x0", &raw, n)?,
                None => vec![0.0; n],
            };
            let opts = SolveOptions::new(x0)
                .with_ntrials(ntrials)
                .with_ngrid(ngrid)
                .with_iter_max(iter_max)
                .with_eps(eps)
                .with_mode(mode.into())
                .with_seed(seed);
            let sol = solve(&p, &bounds, &opts)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&sol).expect("solution serializes")
                );
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&sol).expect("solution serializes")
                );
            }
            Ok(())
        }
        Cmd::Gen {
            nx,
            deg,
            card,
            seed,
            out,
        } => {
            let p: Polynomial<f64> = generate_random_pol(&GenSpec {
                nx,
                deg_max: deg,
                card,
                seed,
            })?;
            let doc = to_record(&p);
            std::fs::write(&out, doc.to_json())
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", out.display())))?;
            Ok(())
        }
        Cmd::Bench {
            config,
            out,
            seed,
            jobs,
        } => {
            let mut cfg: BenchConfig = match config {
                Some(path) => serde_json::from_str(&read_to_string(&path)?)
                    .map_err(|e| CliError::Validation(format!("config: {e}")))?,
                None => BenchConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            std::fs::create_dir_all(&out)
                .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out.display())))?;
            let records = match jobs {
                Some(j) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(j)
                        .build()
                        .map_err(|e| CliError::Validation(format!("--jobs: {e}")))?;
                    pool.install(|| run_benchmark(&cfg, &[]))
                }
                None => run_benchmark(&cfg, &[]),
            }
            .map_err(|e| CliError::Runtime(e.to_string()))?;
            let results = out.join("results.csv");
            let summary = out.join("summary.csv");
            let improvement = out.join("improvement.csv");
            let hist = out.join("delta_hist.csv");
            write_results_csv(&records, &results).map_err(|e| CliError::Runtime(e.to_string()))?;
            write_summary_csv(&records, &summary).map_err(|e| CliError::Runtime(e.to_string()))?;
            write_improvement_csv(
                &records,
                &cfg.ntrials_variants,
                &DEFAULT_TH_GRID,
                &improvement,
            )
            .map_err(|e| CliError::Runtime(e.to_string()))?;
            write_delta_hist_csv(&records, 20, &hist)
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            println!("{}", results.display());
            println!("{}", summary.display());
            println!("{}", improvement.display());
            println!("{}", hist.display());
            Ok(())
        }
    }
}

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use unirat::bench::{render_rows, run_bench, BenchParams};
use unirat::commands::{
    cmd_decompose, cmd_equiv, cmd_luroth, cmd_member, cmd_polygen, CmdError, ExitClass, Outcome,
};
use unirat::golden::run_golden_corpus;

/// Exact engine for unirational fields of transcendence degree one:
/// Lueroth generators, polynomial generators, and uni-multivariate
/// decomposition of rational functions over Q.
#[derive(Parser)]
#[command(name = "unirat", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lueroth generator of Q(f1, ..., fm)
    Luroth {
        /// Declared variables, e.g. x,y,z
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
        /// Input rational functions
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Polynomial generator of Q(f1, ..., fm), when one exists
    Polygen {
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Nontrivial decomposition f = g(h)
    Decompose {
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Enumerate all equivalence classes of decompositions
        #[arg(long)]
        all: bool,
        expr: String,
    },
    /// The unique g with f = g(h), if f lies in Q(h)
    Member {
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long)]
        json: bool,
        f: String,
        h: String,
    },
    /// Whether Q(h1) = Q(h2)
    Equiv {
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long)]
        json: bool,
        h1: String,
        h2: String,
    },
    /// Random-instance benchmark over a (variables, degree) grid
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Per-instance wall-clock budget in seconds
        #[arg(long = "max-seconds", default_value_t = 60.0)]
        max_seconds: f64,
        /// Variable counts (defaults to the 2,4,8 grid)
        #[arg(long = "n-list", value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
        /// Composite degrees (defaults to the 8,10,25,30 grid)
        #[arg(long = "d-list", value_delimiter = ',')]
        d_list: Option<Vec<usize>>,
        /// Instances per grid cell
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
    /// Run the shipped golden-example corpus
    Golden {
        /// Corpus directory (defaults to ./corpus)
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn emit(outcome: Outcome, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(&outcome.json).unwrap());
    } else {
        println!("{}", outcome.text);
    }
    match outcome.exit {
        ExitClass::Ok => ExitCode::SUCCESS,
        ExitClass::Null => ExitCode::from(1),
    }
}

fn fail(err: CmdError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Command::Luroth { vars, json, exprs } => match cmd_luroth(&exprs, &vars) {
            Ok(o) => emit(o, json),
            Err(e) => fail(e),
        },
        Command::Polygen { vars, json, exprs } => match cmd_polygen(&exprs, &vars) {
            Ok(o) => emit(o, json),
            Err(e) => fail(e),
        },
        Command::Decompose { vars, json, all, expr } => match cmd_decompose(&expr, &vars, all) {
            Ok(o) => emit(o, json),
            Err(e) => fail(e),
        },
        Command::Member { vars, json, f, h } => match cmd_member(&f, &h, &vars) {
            Ok(o) => emit(o, json),
            Err(e) => fail(e),
        },
        Command::Equiv { vars, json, h1, h2 } => match cmd_equiv(&h1, &h2, &vars) {
            Ok(o) => emit(o, json),
            Err(e) => fail(e),
        },
        Command::Bench { seed, json, max_seconds, n_list, d_list, reps } => {
            let defaults = BenchParams::table_grid(seed);
            let params = BenchParams {
                seed,
                n_list: n_list.unwrap_or(defaults.n_list),
                d_list: d_list.unwrap_or(defaults.d_list),
                reps,
                max_seconds,
            };
            let rows = run_bench(&params);
            if json {
                let classes = serde_json::to_value(&rows).unwrap();
                let total: f64 = rows.iter().map(|r| r.total_ms).sum();
                let fact: f64 = rows.iter().map(|r| r.factor_ms).sum();
                let payload = unirat::output::payload(
                    "bench",
                    None,
                    None,
                    None,
                    Some(classes),
                    &unirat::output::Timings { total_ms: total, factor_ms: fact },
                );
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                print!("{}", render_rows(&rows));
            }
            if rows.iter().all(|r| r.success) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Golden { dir, json } => {
            let dir = dir.unwrap_or_else(|| PathBuf::from("corpus"));
            match run_golden_corpus(&dir) {
                Ok(report) => {
                    if json {
                        let payload = serde_json::json!({
                            "status": if report.all_passed() { "pass" } else { "fail" },
                            "generator": null,
                            "g": null,
                            "h": null,
                            "classes": report.passed,
                            "timings": {"total_ms": 0.0, "factor_ms": 0.0},
                        });
                        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
                    } else {
                        print!("{}", report.render());
                    }
                    if report.all_passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: cannot read corpus: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use splinter_cli::cache::CacheStatus;
use splinter_cli::params::pairs_from_tokens;
use splinter_cli::report::render_table;
use splinter_cli::{listing_json, report_exit_code, run_cached, run_scenario, Cache, CliError, Scenario};

#[derive(Parser)]
#[command(name = "splinter", version, about = "Exact verifications of splinter-related computations over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario: `run <name> [--param value]...`
    Run {
        /// Write the canonical report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Bypass the report cache.
        #[arg(long)]
        no_cache: bool,
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// List scenarios and their parameter schemas.
    List {
        /// Only names containing this string.
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Inspect or manage the report cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cached report for a scenario, if present.
    Get {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run a scenario and store its report.
    Put {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Remove every cached report.
    Clear,
}

fn scenario(name: &str, tokens: &[String]) -> Result<Scenario, CliError> {
    Scenario::new(name, &pairs_from_tokens(tokens)?)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Run {
            out,
            format,
            no_cache,
            name,
            params,
        } => {
            let s = scenario(&name, &params)?;
            let cache = (!no_cache).then(Cache::from_env);
            let (bytes, _) = run_cached(&s, cache.as_ref())?;
            if let Some(path) = out {
                std::fs::write(&path, &bytes).map_err(|e| CliError::Io(e.to_string()))?;
            }
            match format {
                Format::Machine => print!("{}", String::from_utf8_lossy(&bytes)),
                Format::Table => {
                    let v: serde_json::Value =
                        serde_json::from_slice(&bytes).map_err(|e| CliError::Internal(e.to_string()))?;
                    print!("{}", render_table(&v));
                }
            }
            Ok(report_exit_code(&bytes))
        }
        Command::List { filter, format } => {
            let listing = listing_json(filter.as_deref());
            match format {
                Format::Machine => println!("{}", serde_json::to_string_pretty(&listing).expect("serializable")),
                Format::Table => {
                    for s in listing.as_array().expect("array") {
                        let keys: Vec<String> = s["params"]
                            .as_array()
                            .expect("array")
                            .iter()
                            .map(|p| format!("--{} {}", p["key"].as_str().unwrap_or(""), p["default"].as_str().unwrap_or("")))
                            .collect();
                        println!("{:20} {}", s["name"].as_str().unwrap_or(""), s["summary"].as_str().unwrap_or(""));
                        if !keys.is_empty() {
                            println!("{:20} {}", "", keys.join(" "));
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Cache { action } => {
            let cache = Cache::from_env();
            match action {
                CacheAction::Get { name, params } => {
                    let s = scenario(&name, &params)?;
                    match cache.get(&cache.key(&s))? {
                        CacheStatus::Hit(bytes) => {
                            print!("{}", String::from_utf8_lossy(&bytes));
                            Ok(0)
                        }
                        CacheStatus::Miss => {
                            eprintln!("miss");
                            Ok(0)
                        }
                        CacheStatus::Corrupt => {
                            eprintln!("corrupt entry discarded");
                            Ok(0)
                        }
                    }
                }
                CacheAction::Put { name, params } => {
                    let s = scenario(&name, &params)?;
                    let bytes = run_scenario(&s)?.canonical_bytes();
                    cache.put(&cache.key(&s), &bytes)?;
                    println!("stored {}", cache.key(&s));
                    Ok(report_exit_code(&bytes))
                }
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    println!("removed {n} entries from {}", cache.dir().display());
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

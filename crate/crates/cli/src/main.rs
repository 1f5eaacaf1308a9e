use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use forca_cli::corpus::run_corpus;
use forca_cli::{parse_document, run_job, JobError, RunOptions, Task};
use forca_core::MonomialOrder;

/// Exact computations for forcing algebras.
#[derive(Parser, Debug)]
#[command(name = "forca", version)]
struct Cli {
    /// What to compute; must match the document's `task`.
    #[arg(value_enum)]
    task: Task,
    /// Job document (JSON), or a directory for `corpus`.
    path: PathBuf,
    /// Monomial order: degrevlex, lex or block:k.
    #[arg(long)]
    order: Option<MonomialOrder>,
    /// Cap on S-pairs per Gröbner computation.
    #[arg(long, env = "FORCA_MAX_PAIRS")]
    max_pairs: Option<usize>,
    /// Characteristic, overriding the document.
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Largest e for Frobenius powers q = p^e.
    #[arg(long)]
    emax: Option<u32>,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

fn emit(json: &Option<PathBuf>, text: &str) -> Result<(), JobError> {
    match json {
        None => Ok(()),
        Some(p) if p.as_os_str() == "-" => {
            println!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| JobError::Schema(format!("{}: {e}", p.display()))),
    }
}

fn run(cli: &Cli) -> Result<u8, JobError> {
    let opts = RunOptions {
        order: cli.order,
        max_pairs: cli.max_pairs,
        characteristic: cli.characteristic,
        emax: cli.emax,
    };
    if cli.task == Task::Corpus {
        let report = run_corpus(&cli.path, &opts)?;
        print!("{}", report.summary());
        emit(&cli.json, &serde_json::to_string_pretty(&report).expect("corpus report serializes"))?;
        return Ok(if report.all_passed() { 0 } else { 1 });
    }
    let text = std::fs::read_to_string(&cli.path).map_err(|e| JobError::Schema(format!("{}: {e}", cli.path.display())))?;
    let doc = parse_document(&text)?;
    if doc.task != cli.task {
        return Err(JobError::Schema(format!(
            "document task is `{}`, command line asked for `{}`",
            doc.task.as_str(),
            cli.task.as_str()
        )));
    }
    let start = Instant::now();
    let report = run_job(&doc, &opts)?;
    print!("{}", report.summary());
    println!("  elapsed: {:.3} s", start.elapsed().as_secs_f64());
    emit(&cli.json, &report.to_json())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("forca: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

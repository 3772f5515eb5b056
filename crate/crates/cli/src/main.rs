use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qcong::{emit_remainders, emit_report, parse_range, Format, SweepConfig, EXIT_INVALID};
use qcong_core::congruence::DEFAULT_MAX_DEGREE;

#[derive(Debug, Parser)]
#[command(name = "qcong", version, about = "Exact verification of q-congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check theorem instances over a parameter range.
    Verify {
        /// Comma-separated tags, e.g. thm12,thm13,lemma32.
        #[arg(long, value_delimiter = ',', required = true)]
        theorem: Vec<String>,
        /// Inclusive range `A..B` of n (a prime bound for classical checks).
        #[arg(long)]
        range: String,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long, env = "QCONG_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the full remainder of every failing check to stderr.
        #[arg(long)]
        dump_remainders: bool,
        /// Refuse any check whose polynomials would exceed this degree.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Run the built-in examples and invariants.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            theorem,
            range,
            jobs,
            format,
            out,
            dump_remainders,
            max_degree,
        } => verify(
            theorem,
            &range,
            jobs,
            format,
            out,
            dump_remainders,
            max_degree,
        ),
        Command::Selftest => selftest(),
    };
    ExitCode::from(code as u8)
}

fn verify(
    theorems: Vec<String>,
    range: &str,
    jobs: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
    dump_remainders: bool,
    max_degree: usize,
) -> i32 {
    let (lo, hi) = match parse_range(range) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qcong: {e}");
            return EXIT_INVALID;
        }
    };
    let config = SweepConfig {
        theorems,
        lo,
        hi,
        jobs: jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
        format,
        dump_remainders,
        max_degree,
    };
    if let Err(e) = config.plan() {
        eprintln!("qcong: {e}");
        return EXIT_INVALID;
    }
    let (code, records) = qcong::run(&config);
    let report = emit_report(&records, config.format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, report) {
                eprintln!("qcong: cannot write {}: {e}", path.display());
                return EXIT_INVALID;
            }
        }
        None => print!("{report}"),
    }
    if config.dump_remainders {
        eprint!("{}", emit_remainders(&records));
    }
    code
}

fn selftest() -> i32 {
    let results = qcong_core::selftest::run();
    for r in &results {
        println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "{} of {} self-checks pass",
        results.len() - failed,
        results.len()
    );
    i32::from(failed > 0)
}

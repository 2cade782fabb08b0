use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use partid_cli::{render_report, run_sweep, CheckKind, Format, Jobs, SweepConfig};

/// Exact-arithmetic verifier for a partition identity and the summation
/// identities behind it.
#[derive(Parser)]
#[command(name = "partid", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected checks over their parameter grids and report every
    /// cell. Exit code 0 means all cells passed, 1 that at least one failed,
    /// 2 that the invocation itself was invalid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n (and m, k, r bound) in the main, rewrite, transform and
    /// reduced grids.
    #[arg(long = "max-n", default_value_t = 12)]
    max_n: u32,

    /// Inclusive range of the parameter s, written lo..hi.
    #[arg(long = "s", value_parser = parse_s_range, default_value = "1..6")]
    s: (u32, u32),

    /// Comma-separated list of check families to run.
    #[arg(
        long = "checks",
        value_delimiter = ',',
        default_value = "main,rewrite,transform,chu,reduced,genfunc,pbin-oracle"
    )]
    checks: Vec<CheckKind>,

    /// Truncation order for the generating-function checks.
    #[arg(long = "series-order", default_value_t = 16)]
    series_order: usize,

    /// Largest diagram (in cells) the brute-force selection oracle accepts.
    #[arg(long = "oracle-cap", default_value_t = 16)]
    oracle_cap: u32,

    /// Report format.
    #[arg(long = "format", value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads: a count, or "auto" for one per core.
    #[arg(long = "jobs", default_value = "auto")]
    jobs: Jobs,

    /// Write the report to this file instead of standard output.
    #[arg(long = "output")]
    output: Option<PathBuf>,

    /// Replace the (s-1)! factor of the main right-hand side by s!, which
    /// must make the sweep fail: a self-test of the failure path.
    #[arg(long = "negative-control", hide = true)]
    negative_control: bool,
}

fn parse_s_range(raw: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {raw:?}"))?;
    let lo: u32 = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid lower bound in {raw:?}"))?;
    let hi: u32 = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid upper bound in {raw:?}"))?;
    Ok((lo, hi))
}

impl VerifyArgs {
    fn into_config(self) -> (SweepConfig, Option<PathBuf>) {
        let mut checks = self.checks;
        // duplicate selections are harmless; run each family once
        let mut seen = Vec::new();
        checks.retain(|c| {
            if seen.contains(c) {
                false
            } else {
                seen.push(*c);
                true
            }
        });
        let config = SweepConfig {
            max_n: self.max_n,
            s_range: self.s,
            checks,
            series_order: self.series_order,
            oracle_cap: self.oracle_cap,
            format: self.format,
            jobs: self.jobs,
            negative_control: self.negative_control,
        };
        (config, self.output)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let (config, output) = args.into_config();
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }

    let report = run_sweep(&config);
    let rendered = render_report(&report, config.format);

    let write_result = match &output {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = write_result {
        eprintln!("error: failed to write report: {e}");
        return ExitCode::from(2);
    }

    // non-canonical trailer: timing stays out of the report bytes
    eprintln!(
        "# duration (non-canonical): {} ms, {} cells, {} failed",
        report.duration.as_millis(),
        report.results.len(),
        report.fail
    );

    if report.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

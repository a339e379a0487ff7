use betadix_cli::{error_code_help, run, CliError, Command, ExperimentManifest, Params, Runtime};
use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "betadix", version, about = "Beta-adic expansions and digit-omission experiments")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Worker threads for counting (results do not depend on this).
    #[arg(long, global = true, env = "BETADIX_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Write resumable progress here at every |N(beta)|-power.
    #[arg(long, global = true, env = "BETADIX_CHECKPOINT")]
    checkpoint: Option<PathBuf>,
    /// Continue a count from a checkpoint file.
    #[arg(long, global = true, env = "BETADIX_RESUME")]
    resume: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true, env = "BETADIX_OUTPUT")]
    output: Option<PathBuf>,
    /// Also write the experiment manifest to this file.
    #[arg(long, global = true, env = "BETADIX_SAVE_MANIFEST")]
    save_manifest: Option<PathBuf>,
    /// No progress lines on standard error.
    #[arg(long, short, global = true, env = "BETADIX_QUIET")]
    quiet: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Digits of --value in base --beta.
    Expand(Params),
    /// Decide whether --beta with digits 0..|N(beta)|-1 is a canonical number system.
    CnsCheck(Params),
    /// Exponents n <= N for which alpha^n omits --digit.
    Count(Params),
    /// Counts at |N(beta)|-power checkpoints against N^sigma(beta).
    BoundReport(Params),
    /// Evaluate G_l(x) = alpha^l exp(x log alpha^u) at each prime above --beta.
    Interpolate(Params),
    /// Check the spacing of exponents whose powers share their first --k digits.
    GapCheck(Params),
    /// Multiplicative persistence in --base.
    Persistence(Params),
    /// Practical numbers and central binomial coefficients.
    Practical(Params),
    /// Run an experiment manifest (JSON).
    Run { manifest: PathBuf },
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", json!({ "error": { "code": e.code(), "message": e.to_string() } }));
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let help = error_code_help();
    let cmd = <Cli as clap::CommandFactory>::command().after_help(help);
    let cli = match cmd.try_get_matches().and_then(|m| <Cli as clap::FromArgMatches>::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            eprintln!("{}", json!({ "error": { "code": "E_USAGE", "message": e.kind().to_string() } }));
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let manifest = match cli.command {
        Cmd::Run { manifest } => {
            let text = match std::fs::read_to_string(&manifest) {
                Ok(t) => t,
                Err(source) => return fail(&CliError::Io { path: manifest, source }),
            };
            match ExperimentManifest::parse(&text) {
                Ok(m) => m,
                Err(e) => return fail(&e.into()),
            }
        }
        Cmd::Expand(params) => ExperimentManifest { command: Command::Expand, params },
        Cmd::CnsCheck(params) => ExperimentManifest { command: Command::CnsCheck, params },
        Cmd::Count(params) => ExperimentManifest { command: Command::Count, params },
        Cmd::BoundReport(params) => ExperimentManifest { command: Command::BoundReport, params },
        Cmd::Interpolate(params) => ExperimentManifest { command: Command::Interpolate, params },
        Cmd::GapCheck(params) => ExperimentManifest { command: Command::GapCheck, params },
        Cmd::Persistence(params) => ExperimentManifest { command: Command::Persistence, params },
        Cmd::Practical(params) => ExperimentManifest { command: Command::Practical, params },
    };
    let write = |path: &PathBuf, text: &str| {
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })
    };
    if let Some(path) = &cli.save_manifest {
        if let Err(e) = write(path, &manifest.render()) {
            return fail(&e);
        }
    }
    let rt = Runtime {
        jobs: cli.jobs,
        checkpoint: cli.checkpoint,
        resume: cli.resume,
        quiet: cli.quiet,
    };
    match run(&manifest, &rt) {
        Ok(report) => match &cli.output {
            Some(path) => match write(path, &report) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&e),
            },
            None => {
                print!("{report}");
                ExitCode::SUCCESS
            }
        },
        Err(e) => fail(&e),
    }
}

mod args;
mod check;
mod eval;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use ellded::qseries::SeriesPolicy;
use ellded::verify::VerifyOptions;
use ellded::Error;

use args::{Cli, Command};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

fn error_code(e: &Error) -> u8 {
    if e.is_domain() {
        EXIT_DOMAIN
    } else {
        EXIT_USAGE
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let mut policy = SeriesPolicy::default();
    if let Some(m) = cli.global.max_terms {
        policy.max_terms = m;
    }
    let policy = policy.validated()?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let (records, pass) = match &cli.command {
        Command::Verify(a) => {
            let opts = VerifyOptions {
                policy,
                tol: cli.global.tol,
                seed: cli.global.seed,
            };
            let recs = check::run(a, &opts)?;
            let pass = recs.iter().all(|r| r.pass);
            let values = recs
                .iter()
                .map(|r| serde_json::to_value(r).expect("records serialize"))
                .collect::<Vec<_>>();
            (values, pass)
        }
        other => {
            let policy = match cli.global.tol {
                Some(tol) => SeriesPolicy { tol, ..policy },
                None => policy,
            };
            (vec![eval::run(other, &policy)?], true)
        }
    };
    output::write_records(&mut out, &records, cli.global.format)
        .and_then(|_| out.flush())
        .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))?;
    Ok(pass)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use wha_cli::{execute, summary, to_json, Command, EXIT_PARSE};
use wha_core::model::{parse_model, to_json as model_json};
use wha_core::scalar::FieldSpec;

/// Verify weak bimonoid, weak Hopf monoid and quantum groupoid models exactly.
#[derive(Parser)]
#[command(name = "wha", version)]
struct Cli {
    command: Command,
    /// Model file (JSON).
    model: PathBuf,
    /// Override the model's field: `Q` or `Fp:<p>`.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Print the JSON report on standard output instead of the summary.
    #[arg(long)]
    json: bool,
    /// Write the JSON report (or, for build-frobenius-square, the derived model) here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

fn fail(msg: &str, code: i32) -> ExitCode {
    eprintln!("wha: {msg}");
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let text = match std::fs::read_to_string(&cli.model) {
        Ok(t) => t,
        Err(e) => return fail(&format!("{}: {e}", cli.model.display()), EXIT_PARSE),
    };
    let model = match parse_model(&text) {
        Ok(m) => m,
        Err(e) => return fail(&format!("{}: {e}", cli.model.display()), EXIT_PARSE),
    };
    let outcome = match execute(cli.command, &model, cli.field) {
        Ok(o) => o,
        Err(e) => return fail(&e.to_string(), EXIT_PARSE),
    };
    let report_json = to_json(&outcome.report);
    let text_summary = summary(&outcome.report);
    if let Some(derived) = &outcome.derived_model {
        let body = model_json(derived);
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, body) {
                    return fail(&format!("{}: {e}", path.display()), EXIT_PARSE);
                }
                print!("{}", if cli.json { &report_json } else { &text_summary });
            }
            None => {
                print!("{body}");
                eprint!("{text_summary}");
            }
        }
    } else {
        if let Some(path) = &cli.out {
            if let Err(e) = std::fs::write(path, &report_json) {
                return fail(&format!("{}: {e}", path.display()), EXIT_PARSE);
            }
        }
        print!("{}", if cli.json { &report_json } else { &text_summary });
    }
    ExitCode::from(outcome.exit_code as u8)
}

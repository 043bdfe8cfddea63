mod args;
mod commands;
mod render;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::{run, CliError, Settings};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match Settings::load(&cli) {
        Ok(s) => s,
        Err(e) => return report_error(&e, cli.format.unwrap_or(Format::Text)),
    };
    match run(&cli.command, &settings) {
        Ok(report) => {
            print!("{}", render::render(&report, settings.format));
            ExitCode::from(report.status)
        }
        Err(e) => report_error(&e, settings.format),
    }
}

fn report_error(e: &CliError, format: Format) -> ExitCode {
    eprintln!("error: {}", e.message);
    if format == Format::Json {
        let doc = serde_json::json!({ "error": e.message, "exit_status": e.status });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    }
    ExitCode::from(e.status)
}

mod commands;
mod config;
mod error;
mod output;
mod values;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Arg, ArgAction, ArgMatches};
use noisy_cavity::engine::Registry;

use commands::{Command, WORKERS_ENV};
use config::{Config, CONFIG_KEY, OUT_KEY};
use error::CliError;
use output::CsvOutput;

fn cli(registry: &Registry<dyn Command>) -> clap::Command {
    let mut app = clap::Command::new("noisy-cavity")
        .version(env!("CARGO_PKG_VERSION"))
        .about("Entanglement of two thermally driven atoms in a detuned cavity; writes CSV")
        .after_help(format!(
            "Values are a number, a range start:stop:count[:lin|log], or a list v1,v2,...\n\
             Flags override entries of the --config file (key = value per line, # comments).\n\
             {WORKERS_ENV} sets the number of worker threads."
        ))
        .subcommand_required(true)
        .arg_required_else_help(true);
    for command in registry.iter() {
        let mut sub = clap::Command::new(command.name()).about(command.about());
        for key in command.keys() {
            sub = sub.arg(
                Arg::new(key.name)
                    .long(key.name)
                    .value_name("VALUE")
                    .allow_negative_numbers(true)
                    .help(format!("{} [default: {}]", key.help, key.default)),
            );
        }
        sub = sub
            .arg(
                Arg::new(CONFIG_KEY)
                    .long(CONFIG_KEY)
                    .value_name("PATH")
                    .value_parser(clap::value_parser!(PathBuf))
                    .action(ArgAction::Set)
                    .help("file of key = value lines"),
            )
            .arg(
                Arg::new(OUT_KEY)
                    .long(OUT_KEY)
                    .value_name("PATH")
                    .value_parser(clap::value_parser!(PathBuf))
                    .action(ArgAction::Set)
                    .help("CSV output path"),
            );
        app = app.subcommand(sub);
    }
    app
}

fn resolve(command: &dyn Command, m: &ArgMatches) -> Result<Config, CliError> {
    let file = match m.get_one::<PathBuf>(CONFIG_KEY) {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            Some((path.clone(), text))
        }
        None => None,
    };
    let flags: Vec<(&'static str, String)> = command
        .keys()
        .iter()
        .filter_map(|k| m.get_one::<String>(k.name).map(|v| (k.name, v.clone())))
        .collect();
    Config::resolve(
        command.name(),
        command.keys(),
        file.as_ref().map(|(p, t)| (p.as_path(), t.as_str())),
        &flags,
        m.get_one::<PathBuf>(OUT_KEY).cloned(),
    )
}

fn run(args: impl IntoIterator<Item = OsString>) -> Result<(), CliError> {
    let registry = commands::registry();
    let matches = match cli(&registry).try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return Ok(());
        }
        Err(e) => return Err(CliError::Parser(e.render().to_string())),
    };
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let command = registry.require(name)?;
    let cfg = resolve(command, sub)?;

    let mut out = CsvOutput::new();
    out.comment(&format!("noisy-cavity {} {}", env!("CARGO_PKG_VERSION"), cfg.mode()));
    for line in cfg.header_lines() {
        out.comment(&line);
    }
    let report = command.run(&cfg, &mut out)?;
    let rows = out.rows();
    out.write_to(cfg.out())?;
    for line in &report.summary {
        println!("{line}");
    }
    println!("wrote {rows} rows to {}", cfg.out().display());
    match report.failure {
        Some(reason) => Err(CliError::ValidationFailed(reason)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Parser(text)) => {
            eprint!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

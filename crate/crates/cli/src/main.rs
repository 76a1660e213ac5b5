use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ellgen_cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let out = run(&cfg);
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &out.document),
        None => std::io::stdout().lock().write_all(out.document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("ellgen: cannot write output: {e}");
        return ExitCode::from(74);
    }
    ExitCode::from(out.status as u8)
}

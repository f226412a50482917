use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;

use gl3_serre_cli::{run_cli, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run_cli(&cli, || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    });
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.stdout.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(out.code as u8)
}

use clap::Parser;
use kmcomplex::cli::{exit_code, run, JobSpec};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let job = JobSpec::parse();
    match run(&job) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = markov_cli::run(std::env::args_os());
    if !outcome.written {
        let mut stdout = std::io::stdout().lock();
        // A closed pipe leaves nothing useful to report.
        let _ = stdout.write_all(outcome.document.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}

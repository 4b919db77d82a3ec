use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = biquadrate::cli::run(std::env::args_os());
    // Ignore broken pipes when piped into `head` and friends.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code as u8)
}

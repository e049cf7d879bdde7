use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = fuzzlat_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}

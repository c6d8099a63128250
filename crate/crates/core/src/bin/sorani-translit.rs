use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut output = io::BufWriter::new(io::stdout().lock());
    let mut errors = io::stderr().lock();
    let code = sorani_translit::cli::run(std::env::args_os(), &mut input, &mut output, &mut errors);
    let _ = output.flush();
    ExitCode::from(code as u8)
}

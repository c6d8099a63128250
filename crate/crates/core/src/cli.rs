//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O, encoding or input-format
//! error, 3 strict mode saw warnings. Standard output carries only the
//! transliterated text or the report.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::alphabet::{load_overrides, AlphabetTable, Direction};
use crate::eval::{evaluate_ar2la, evaluate_la2ar, load_corpus};
use crate::transliterator::{Engine, Options, StreamError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Ar2la,
    La2ar,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Ar2la => Direction::Ar2La,
            DirectionArg::La2ar => Direction::La2Ar,
        }
    }
}

/// Transliterate Sorani Kurdish between the Arabic-based and Latin-based
/// orthographies.
#[derive(Debug, Parser)]
#[command(name = "sorani-translit", version)]
pub struct Args {
    #[arg(long, value_enum, default_value_t = DirectionArg::Ar2la)]
    pub direction: DirectionArg,

    /// Input file (default: standard input).
    #[arg(long = "in", value_name = "FILE", conflicts_with = "eval")]
    pub input: Option<PathBuf>,

    /// Output file (default: standard output).
    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Read `ll` as ł and `rr` as ř in Latin input.
    #[arg(long)]
    pub digraphs: bool,

    /// Tab-separated file of mapping overrides.
    #[arg(long = "override", value_name = "FILE")]
    pub override_path: Option<PathBuf>,

    /// Evaluate against a gold corpus instead of transliterating.
    #[arg(long, num_args = 2, value_names = ["ABO_GOLD", "LBO_GOLD"])]
    pub eval: Option<Vec<PathBuf>>,

    /// Print the evaluation report as JSON.
    #[arg(long, requires = "eval")]
    pub json: bool,

    /// Exit with status 3 if any warning was produced.
    #[arg(long)]
    pub strict: bool,
}

/// Parses `argv` (program name first) and runs the tool.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}

fn execute(
    args: &Args,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let table = match &args.override_path {
        Some(path) => {
            let rules = load_overrides(path).map_err(|e| e.to_string())?;
            AlphabetTable::with_overrides(&rules).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => AlphabetTable::new(),
    };
    let engine = Engine::new(
        table,
        Options {
            digraphs: args.digraphs,
            ..Options::default()
        },
    );
    let direction = Direction::from(args.direction);

    let mut file_out;
    let out: &mut dyn Write = match &args.output {
        Some(path) => {
            let f = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            file_out = BufWriter::new(f);
            &mut file_out
        }
        None => stdout,
    };

    if let Some(gold) = &args.eval {
        let corpus = load_corpus(&gold[0], &gold[1]).map_err(|e| e.to_string())?;
        let report = match direction {
            Direction::Ar2La => evaluate_ar2la(&corpus, &engine),
            Direction::La2Ar => evaluate_la2ar(&corpus, &engine),
        };
        let text = if args.json {
            report.to_json() + "\n"
        } else {
            report.to_string()
        };
        out.write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| e.to_string())?;
        return Ok(EXIT_OK);
    }

    let mut file_in;
    let input: &mut dyn BufRead = match &args.input {
        Some(path) => {
            let f = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
            file_in = BufReader::new(f);
            &mut file_in
        }
        None => stdin,
    };
    let input_name = args
        .input
        .as_ref()
        .map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());

    let mut warnings = 0usize;
    let result = engine.transliterate_stream(input, out, direction, |line, w| {
        warnings += 1;
        let _ = writeln!(stderr, "warning: {input_name}:{line}: {w}");
    });
    match result {
        Ok(_) => {}
        Err(StreamError::Encoding { offset }) => {
            return Err(format!(
                "{input_name}: invalid UTF-8 at byte offset {offset}"
            ))
        }
        Err(StreamError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => return Ok(EXIT_OK),
        Err(StreamError::Io(e)) => return Err(e.to_string()),
    }
    Ok(if args.strict && warnings > 0 {
        EXIT_STRICT
    } else {
        EXIT_OK
    })
}

use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::{Engine, Stats, Warning};
use crate::alphabet::Direction;
use crate::exec::Execution;

// Lines per batch handed to the worker pool.
const BATCH_LINES: usize = 2048;

#[derive(Debug, Error)]
pub enum StreamError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("invalid UTF-8 at byte offset {offset}")]
    Encoding { offset: u64 },
}

impl Engine {
    /// Transliterates `input` line by line into `output`.
    ///
    /// Memory use is bounded by one batch of lines. A leading byte order
    /// mark is dropped. Line endings are copied unchanged. `on_warning`
    /// receives the 1-based line number with each warning; spans are
    /// relative to that line.
    pub fn transliterate_stream<R, W, F>(
        &self,
        mut input: R,
        output: &mut W,
        direction: Direction,
        mut on_warning: F,
    ) -> Result<Stats, StreamError>
    where
        R: BufRead,
        W: Write + ?Sized,
        F: FnMut(usize, &Warning),
    {
        let mut stats = Stats::default();
        let mut offset: u64 = 0;
        let mut line_no = 0;
        let mut batch: Vec<String> = Vec::with_capacity(BATCH_LINES);
        let mut buf = Vec::new();
        loop {
            buf.clear();
            let n = input.read_until(b'\n', &mut buf)?;
            if n > 0 {
                let mut bytes = &buf[..];
                if offset == 0 {
                    bytes = bytes.strip_prefix("\u{FEFF}".as_bytes()).unwrap_or(bytes);
                }
                let skipped = (buf.len() - bytes.len()) as u64;
                let line = std::str::from_utf8(bytes).map_err(|e| StreamError::Encoding {
                    offset: offset + skipped + e.valid_up_to() as u64,
                })?;
                batch.push(line.to_owned());
                offset += n as u64;
            }
            if batch.len() == BATCH_LINES || (n == 0 && !batch.is_empty()) {
                let results = self.options.execution.map(&batch, |line| {
                    self.transliterate_text_with(line, direction, Execution::Sequential)
                });
                for r in results {
                    line_no += 1;
                    output.write_all(r.output.as_bytes())?;
                    for w in &r.warnings {
                        on_warning(line_no, w);
                    }
                    stats = stats.merge(r.stats);
                }
                batch.clear();
            }
            if n == 0 {
                break;
            }
        }
        output.flush()?;
        Ok(stats)
    }
}

//! CSV assembled in memory, written in one go once a run succeeds.

use std::fs;
use std::path::Path;

use crate::error::CliError;

/// Shortest decimal text that parses back to exactly `x`. Negative zero is
/// written as `0.0`.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x == 0.0 {
        "0.0".into()
    } else {
        format!("{x:?}")
    }
}

/// Compact label form for column names (`0.5`, `1`).
pub fn fmt_label(x: f64) -> String {
    format!("{x}")
}

fn writer_over(buf: Vec<u8>) -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().flexible(true).from_writer(buf)
}

pub struct CsvOutput {
    writer: csv::Writer<Vec<u8>>,
    rows: usize,
}

impl Default for CsvOutput {
    fn default() -> Self {
        Self::new()
    }
}

impl CsvOutput {
    pub fn new() -> Self {
        Self {
            writer: writer_over(Vec::new()),
            rows: 0,
        }
    }

    /// A `# text` line.
    pub fn comment(&mut self, text: &str) {
        let writer = std::mem::replace(&mut self.writer, writer_over(Vec::new()));
        let mut buf = writer.into_inner().expect("writing to memory");
        for line in text.lines() {
            buf.extend_from_slice(b"# ");
            buf.extend_from_slice(line.as_bytes());
            buf.push(b'\n');
        }
        self.writer = writer_over(buf);
    }

    pub fn header<S: AsRef<str>>(&mut self, names: &[S]) {
        self.writer
            .write_record(names.iter().map(|s| s.as_ref()))
            .expect("writing to memory");
    }

    pub fn row<S: AsRef<[u8]>>(&mut self, fields: impl IntoIterator<Item = S>) {
        self.writer.write_record(fields).expect("writing to memory");
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.writer.into_inner().expect("writing to memory")
    }

    pub fn write_to(self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.into_bytes())
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.0, 0.1, 1.0 / 3.0, 1e-300, 6.02e23, f64::MIN_POSITIVE, 0.924465250376255_86] {
            assert_eq!(fmt_float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
        assert_eq!(fmt_float(0.5), "0.5");
        assert_eq!(fmt_float(-0.0), "0.0");
        assert_eq!(fmt_label(1.0), "1");
    }

    #[test]
    fn comments_and_rows_interleave() {
        let mut out = CsvOutput::new();
        out.comment("mode\nsecond");
        out.header(&["a", "b"]);
        out.row(["1", "2"]);
        out.comment("done");
        assert_eq!(out.rows(), 1);
        assert_eq!(String::from_utf8(out.into_bytes()).unwrap(), "# mode\n# second\na,b\n1,2\n# done\n");
    }
}

//! Run configuration: per-mode defaults, then a `key = value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::CliError;
use crate::values::ParamValue;

/// One configurable key of a mode.
#[derive(Debug, Clone, Copy)]
pub struct KeySpec {
    pub name: &'static str,
    pub default: &'static str,
    pub help: &'static str,
}

impl KeySpec {
    pub const fn new(name: &'static str, default: &'static str, help: &'static str) -> Self {
        Self { name, default, help }
    }
}

/// Keys every mode understands besides its own.
pub const OUT_KEY: &str = "out";
pub const CONFIG_KEY: &str = "config";

#[derive(Debug, Clone, PartialEq)]
enum Source {
    Default,
    File { path: PathBuf, line: usize },
    Flag,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Default => write!(f, "default"),
            Source::File { path, line } => write!(f, "{}:{line}", path.display()),
            Source::Flag => write!(f, "command line"),
        }
    }
}

#[derive(Debug, Clone)]
struct Entry {
    key: &'static str,
    value: String,
    source: Source,
}

/// `(key, value, line)` triples of a config file, `#` comments and blank lines skipped.
pub fn parse_config_text(path: &Path, text: &str) -> Result<Vec<(String, String, usize)>, CliError> {
    let mut out: Vec<(String, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(CliError::Usage(format!(
                "{}:{line}: expected 'key = value', got '{content}'",
                path.display()
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() {
            return Err(CliError::Usage(format!("{}:{line}: missing key", path.display())));
        }
        if let Some((_, _, first)) = out.iter().find(|(k, _, _)| k == key) {
            return Err(CliError::Usage(format!(
                "{}:{line}: key '{key}' already set on line {first}",
                path.display()
            )));
        }
        out.push((key.to_string(), value.to_string(), line));
    }
    Ok(out)
}

/// Fully resolved settings of one run.
#[derive(Debug, Clone)]
pub struct Config {
    mode: &'static str,
    entries: Vec<Entry>,
    out: PathBuf,
}

impl Config {
    /// Layers defaults, then `file` (already read, with its path), then `flags`.
    pub fn resolve(
        mode: &'static str,
        keys: &'static [KeySpec],
        file: Option<(&Path, &str)>,
        flags: &[(&'static str, String)],
        out_flag: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        let mut entries: Vec<Entry> = keys
            .iter()
            .map(|k| Entry {
                key: k.name,
                value: k.default.to_string(),
                source: Source::Default,
            })
            .collect();
        let mut out = None;

        if let Some((path, text)) = file {
            for (key, value, line) in parse_config_text(path, text)? {
                if key == OUT_KEY {
                    out = Some(PathBuf::from(value));
                    continue;
                }
                let Some(entry) = entries.iter_mut().find(|e| e.key == key) else {
                    let known: Vec<&str> = keys.iter().map(|k| k.name).collect();
                    return Err(CliError::Usage(format!(
                        "{}:{line}: unknown key '{key}' for mode {mode} (known: {}, out)",
                        path.display(),
                        known.join(", ")
                    )));
                };
                entry.value = value;
                entry.source = Source::File {
                    path: path.to_path_buf(),
                    line,
                };
            }
        }
        for (key, value) in flags {
            let entry = entries
                .iter_mut()
                .find(|e| e.key == *key)
                .expect("flags are generated from the key table");
            entry.value = value.clone();
            entry.source = Source::Flag;
        }
        let out = out_flag.or(out).ok_or_else(|| {
            CliError::Usage("no output path: pass --out <path> or set 'out' in the config file".into())
        })?;

        let cfg = Self { mode, entries, out };
        Ok(cfg)
    }

    pub fn mode(&self) -> &'static str {
        self.mode
    }

    pub fn out(&self) -> &Path {
        &self.out
    }

    fn entry(&self, key: &str) -> &Entry {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .unwrap_or_else(|| panic!("mode {} has no key '{key}'", self.mode))
    }

    fn bad(&self, key: &str, msg: impl fmt::Display) -> CliError {
        let e = self.entry(key);
        CliError::Usage(format!("{key} = '{}' ({}): {msg}", e.value, e.source))
    }

    pub fn raw(&self, key: &str) -> &str {
        &self.entry(key).value
    }

    pub fn value(&self, key: &str) -> Result<ParamValue, CliError> {
        ParamValue::parse(self.raw(key)).map_err(|m| self.bad(key, m))
    }

    pub fn scalar(&self, key: &str) -> Result<f64, CliError> {
        match self.value(key)? {
            ParamValue::Scalar(v) => Ok(v),
            _ => Err(self.bad(key, "expected a single number")),
        }
    }

    pub fn count(&self, key: &str) -> Result<usize, CliError> {
        self.raw(key)
            .trim()
            .parse()
            .map_err(|_| self.bad(key, "expected a non-negative integer"))
    }

    /// Wraps a parse error of a string-valued key with its provenance.
    pub fn parse_with<T>(
        &self,
        key: &str,
        f: impl FnOnce(&str) -> Result<T, String>,
    ) -> Result<T, CliError> {
        f(self.raw(key).trim()).map_err(|m| self.bad(key, m))
    }

    /// `# key = value` for every key, in table order. The output path is left
    /// out so that identical settings give identical files.
    pub fn header_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| format!("{} = {}", e.key, e.value))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KEYS: &[KeySpec] = &[
        KeySpec::new("gamma", "0.1", "rate"),
        KeySpec::new("t", "0:10:5", "grid"),
    ];

    #[test]
    fn precedence_is_default_file_flag() {
        let text = "# comment\ngamma = 0.2  # inline\n\nt = 0,1\nout = from_file.csv\n";
        let cfg = Config::resolve("m", KEYS, Some((Path::new("a.cfg"), text)), &[], None).unwrap();
        assert_eq!(cfg.scalar("gamma").unwrap(), 0.2);
        assert_eq!(cfg.value("t").unwrap().points(), vec![0.0, 1.0]);
        assert_eq!(cfg.out(), Path::new("from_file.csv"));

        let flags = [("gamma", "0.3".to_string())];
        let cfg = Config::resolve(
            "m",
            KEYS,
            Some((Path::new("a.cfg"), text)),
            &flags,
            Some("flag.csv".into()),
        )
        .unwrap();
        assert_eq!(cfg.scalar("gamma").unwrap(), 0.3);
        assert_eq!(cfg.out(), Path::new("flag.csv"));
        assert_eq!(cfg.header_lines(), ["gamma = 0.3", "t = 0,1"]);
    }

    #[test]
    fn diagnostics_name_the_line() {
        let err = Config::resolve("m", KEYS, Some((Path::new("a.cfg"), "gamma = 1\nbeta = 2\n")), &[], None)
            .unwrap_err();
        assert!(err.to_string().contains("a.cfg:2") && err.to_string().contains("beta"), "{err}");
        let err = Config::resolve("m", KEYS, Some((Path::new("a.cfg"), "gamma 1\n")), &[], None).unwrap_err();
        assert!(err.to_string().contains("a.cfg:1"), "{err}");
        let err = Config::resolve("m", KEYS, Some((Path::new("a.cfg"), "gamma=1\ngamma=2\n")), &[], None)
            .unwrap_err();
        assert!(err.to_string().contains("already set on line 1"), "{err}");

        let cfg = Config::resolve("m", KEYS, Some((Path::new("a.cfg"), "gamma = x\n")), &[], Some("o".into()))
            .unwrap();
        let err = cfg.scalar("gamma").unwrap_err();
        assert!(err.to_string().contains("a.cfg:1"), "{err}");
    }

    #[test]
    fn output_path_is_required() {
        assert!(Config::resolve("m", KEYS, None, &[], None).is_err());
    }
}

//! Parameter values: a number, an evenly spaced range `start:stop:count[:lin|log]`,
//! or an explicit list `v1,v2,...`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Scalar(f64),
    Range {
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    },
    List(Vec<f64>),
}

fn number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{}' is not a number", s.trim()))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{}' is not finite", s.trim()))
    }
}

impl ParamValue {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty value".into());
        }
        if s.contains(':') {
            return Self::parse_range(s);
        }
        if s.contains(',') {
            let values = s.split(',').map(number).collect::<Result<Vec<_>, _>>()?;
            return Ok(Self::List(values));
        }
        number(s).map(Self::Scalar)
    }

    fn parse_range(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(format!("range '{s}' must be start:stop:count[:lin|log]"));
        }
        let start = number(parts[0])?;
        let stop = number(parts[1])?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| format!("range count '{}' is not a non-negative integer", parts[2].trim()))?;
        let spacing = match parts.get(3).map(|p| p.trim()) {
            None | Some("lin") => Spacing::Linear,
            Some("log") => Spacing::Log,
            Some(other) => return Err(format!("range spacing must be lin or log, got '{other}'")),
        };
        if count < 2 {
            return Err(format!("range '{s}' needs at least 2 points"));
        }
        if !(stop > start) {
            return Err(format!("range '{s}' needs stop > start"));
        }
        if spacing == Spacing::Log && !(start > 0.0) {
            return Err(format!("log range '{s}' needs start > 0"));
        }
        Ok(Self::Range {
            start,
            stop,
            count,
            spacing,
        })
    }

    /// More than a single fixed number.
    pub fn is_sweep(&self) -> bool {
        !matches!(self, Self::Scalar(_))
    }

    pub fn points(&self) -> Vec<f64> {
        match self {
            Self::Scalar(v) => vec![*v],
            Self::List(v) => v.clone(),
            Self::Range {
                start,
                stop,
                count,
                spacing,
            } => {
                let n = *count;
                (0..n)
                    .map(|k| {
                        if k == n - 1 {
                            return *stop;
                        }
                        let f = k as f64 / (n - 1) as f64;
                        match spacing {
                            Spacing::Linear => start + (stop - start) * f,
                            Spacing::Log => start * (stop / start).powf(f),
                        }
                    })
                    .collect()
            }
        }
    }
}

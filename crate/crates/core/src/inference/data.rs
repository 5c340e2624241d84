use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// A sample of positive lifetimes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    /// Values in ascending order.
    pub values: Vec<f64>,
    /// Values in input order.
    pub original: Vec<f64>,
}

impl Dataset {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidData("dataset is empty".into()));
        }
        if let Some((i, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::InvalidData(format!(
                "value #{} is {v}; lifetimes must be positive and finite",
                i + 1
            )));
        }
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        Ok(Self {
            values: sorted,
            original: values,
        })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.n() as f64
    }

    /// Sample variance with divisor n − 1 (0 for a single value).
    pub fn variance(&self) -> f64 {
        let n = self.n();
        if n < 2 {
            return 0.0;
        }
        let m = self.mean();
        self.values.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1) as f64
    }

    /// Parses one value per line. Blank lines and lines starting with `#`
    /// are skipped; a non-numeric first data line is taken as a CSV header.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut seen_data = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line
                .split(',')
                .map(str::trim)
                .filter(|f| !f.is_empty())
                .collect();
            if fields.len() != 1 {
                return Err(Error::InvalidData(format!(
                    "line {}: expected a single column, found {:?}",
                    lineno + 1,
                    line
                )));
            }
            match fields[0].parse::<f64>() {
                Ok(v) => values.push(v),
                Err(_) if !seen_data => {}
                Err(_) => {
                    return Err(Error::InvalidData(format!(
                        "line {}: '{}' is not a number",
                        lineno + 1,
                        fields[0]
                    )))
                }
            }
            seen_data = true;
        }
        Self::new(values)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

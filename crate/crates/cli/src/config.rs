//! Optional `key = value` run configuration. Command-line flags win over the file.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected text, json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub scalar_q_order: i64,
    pub d1max: usize,
    pub d2max: usize,
    pub gmax: usize,
    pub hmax: usize,
    pub format: Format,
    pub preset: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { scalar_q_order: 30, d1max: 10, d2max: 2, gmax: 4, hmax: 4, format: Format::Text, preset: None }
    }
}

fn positive<T: FromStr + PartialOrd + Default>(key: &str, v: &str) -> Result<T, String> {
    match v.parse::<T>() {
        Ok(n) if n > T::default() => Ok(n),
        _ => Err(format!("{key} must be a positive integer, got {v:?}")),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "scalar_q_order" => cfg.scalar_q_order = positive(key, value)?,
                "d1max" => cfg.d1max = positive(key, value)?,
                "d2max" => cfg.d2max = positive(key, value)?,
                "gmax" => cfg.gmax = positive(key, value)?,
                "hmax" => cfg.hmax = positive(key, value)?,
                "format" => cfg.format = value.parse()?,
                "preset" => cfg.preset = Some(value.to_string()),
                _ => return Err(format!("line {}: unknown key {key:?}", n + 1)),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = RunConfig::parse("# run\nscalar_q_order = 12\nformat=csv\n\npreset = l2-sextic # double plane\n").unwrap();
        assert_eq!(cfg.scalar_q_order, 12);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.preset.as_deref(), Some("l2-sextic"));
        assert_eq!(cfg.gmax, 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("gmax = 0").is_err());
        assert!(RunConfig::parse("gmax").is_err());
        assert!(RunConfig::parse("colour = blue").is_err());
        assert!(RunConfig::parse("format = yaml").is_err());
    }
}

//! `key = value` config files whose keys mirror the long flags.

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("config line {line}: expected key = value")]
    Syntax { line: usize },
}

/// Parses the file into `(key, value)` pairs; `#` starts a comment line.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: idx + 1 })?;
        let key = k.trim().trim_start_matches("--");
        if key.is_empty() {
            return Err(ConfigError::Syntax { line: idx + 1 });
        }
        let value = v.trim().trim_matches('"');
        out.push((key.to_string(), value.to_string()));
    }
    Ok(out)
}

/// Expands `--config PATH` into flags placed before the explicit ones, so
/// flags on the command line win.
pub fn expand_config_args(args: Vec<String>) -> Result<Vec<String>, ConfigError> {
    let Some(pos) = args.iter().position(|a| a == "--config" || a.starts_with("--config=")) else {
        return Ok(args);
    };
    let (path, consumed) = match args[pos].strip_prefix("--config=") {
        Some(p) => (p.to_string(), 1),
        None => match args.get(pos + 1) {
            Some(p) => (p.clone(), 2),
            None => return Ok(args),
        },
    };
    let text =
        std::fs::read_to_string(Path::new(&path)).map_err(|source| ConfigError::Read { path: path.clone(), source })?;
    let explicit: Vec<String> = args
        .iter()
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split_once('=').map_or(a, |(k, _)| k).to_string())
        .collect();
    let mut injected = Vec::new();
    for (k, v) in parse_config(&text)? {
        if explicit.contains(&k) {
            continue;
        }
        match v.as_str() {
            "true" => injected.push(format!("--{k}")),
            "false" => {}
            _ => {
                injected.push(format!("--{k}"));
                injected.push(v);
            }
        }
    }
    // program name and subcommand stay in front
    let mut rest: Vec<String> =
        args.into_iter().enumerate().filter(|(i, _)| *i < pos || *i >= pos + consumed).map(|(_, a)| a).collect();
    let head = rest.len().min(2);
    let tail = rest.split_off(head);
    rest.extend(injected);
    rest.extend(tail);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_comments() {
        let c = parse_config("# data\nn = 6\nsigma = \"(136245)\"\nall-m = true\n").unwrap();
        assert_eq!(c[0], ("n".into(), "6".into()));
        assert_eq!(c[1], ("sigma".into(), "(136245)".into()));
        assert_eq!(c[2], ("all-m".into(), "true".into()));
    }

    #[test]
    fn rejects_lines_without_equals() {
        assert!(matches!(parse_config("n 6"), Err(ConfigError::Syntax { line: 1 })));
    }
}

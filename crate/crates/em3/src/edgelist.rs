//! The edge-list text format.
//!
//! ```text
//! # comments start with '#'
//! n m
//! a b c      (m lines, 1 ≤ a < b < c ≤ n, single spaces)
//! ```
//!
//! Blank lines are ignored. Writers emit edges in lexicographic order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use em3_core::{Triple, TripleSystem, Vertex};

use crate::error::CliError;

fn bad(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str, expected: usize) -> Result<Vec<u64>, CliError> {
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != expected {
        return Err(bad(
            line,
            format!("expected {expected} numbers separated by single spaces, got {text:?}"),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| bad(line, format!("{f:?} is not a non-negative integer")))
        })
        .collect()
}

/// Parses an edge list. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<TripleSystem, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing header line \"n m\""))?;
    let header = numbers(header_line, header, 2)?;
    let (n, m) = (header[0], header[1]);
    if n > em3_core::hypergraph::MAX_VERTICES as u64 {
        return Err(bad(
            header_line,
            format!(
                "n = {n} exceeds the supported {}",
                em3_core::hypergraph::MAX_VERTICES
            ),
        ));
    }
    let mut system =
        TripleSystem::empty(n as usize).map_err(|e| bad(header_line, e.to_string()))?;
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if system.len() as u64 == m {
            return Err(bad(line, format!("more than the announced {m} edges")));
        }
        let v = numbers(line, text, 3)?;
        if !(v[0] < v[1] && v[1] < v[2]) {
            return Err(bad(line, "vertices must be strictly increasing"));
        }
        if v[0] == 0 || v[2] > n {
            return Err(bad(line, format!("vertices must lie in 1..={n}")));
        }
        let t = Triple::new(v[0] as Vertex, v[1] as Vertex, v[2] as Vertex)
            .map_err(|e| bad(line, e.to_string()))?;
        if !system.insert(t).map_err(|e| bad(line, e.to_string()))? {
            return Err(bad(line, format!("duplicate edge {t}")));
        }
    }
    if (system.len() as u64) < m {
        return Err(bad(
            last_line,
            format!("announced {m} edges but found {}", system.len()),
        ));
    }
    Ok(system)
}

/// Renders an edge list.
pub fn render(f: &TripleSystem) -> String {
    let mut out = format!("{} {}\n", f.n(), f.len());
    for e in f.edges() {
        let [a, b, c] = e.elements();
        writeln!(out, "{a} {b} {c}").expect("writing to a String");
    }
    out
}

pub fn read(path: &Path) -> Result<TripleSystem, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn write(path: &Path, f: &TripleSystem) -> Result<(), CliError> {
    fs::write(path, render(f)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# K4\n4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
        let f = parse(text).unwrap();
        assert_eq!(f, TripleSystem::complete(4).unwrap());
        assert_eq!(render(&f), "4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    }

    #[test]
    fn writer_sorts_edges() {
        let f = parse("5 2\n3 4 5\n1 2 3\n").unwrap();
        assert_eq!(render(&f), "5 2\n1 2 3\n3 4 5\n");
    }

    #[test]
    fn empty_family() {
        let f = parse("3 0\n").unwrap();
        assert!(f.is_empty());
        assert_eq!(f.n(), 3);
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("", 1),
            ("4 1\n1 2\n", 2),
            ("4 1\n# c\n1  2 3\n", 3),
            ("4 1\n2 1 3\n", 2),
            ("4 1\n1 2 5\n", 2),
            ("4 2\n1 2 3\n1 2 3\n", 3),
            ("4 1\n1 2 3\n1 2 4\n", 3),
            ("4 2\n1 2 3\n", 2),
            ("4 x\n", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(CliError::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: expected a parse error, got {other:?}"),
            }
        }
    }
}

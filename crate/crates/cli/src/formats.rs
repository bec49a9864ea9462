//! Input file grammars.
//!
//! Matrix files: a header line `matrix m n`, then m rows of n integers.
//! Graph files: a header line `bipartite m n`, then one `i j` line per
//! edge with 1-based indices. Lines starting with `#` and blank lines
//! are ignored in both. Every error names the offending line.

use std::fmt;
use std::str::FromStr;

use toricsplit::graphs::BipartiteGraph;
use toricsplit::{Int, IntMatrix};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based positions in the file.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_header(line: usize, text: &str, keyword: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != keyword {
        return Err(err(
            line,
            format!("expected header `{keyword} m n`, got `{text}`"),
        ));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("bad dimension `{s}`")))
    };
    Ok((parse(fields[1])?, parse(fields[2])?))
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(err(1, "empty file"));
    };
    let (m, n) = parse_header(hline, header, "matrix")?;
    if m == 0 || n == 0 {
        return Err(err(hline, "matrix dimensions must be positive"));
    }
    let body = &lines[1..];
    if body.len() != m {
        return Err(err(
            body.last().map_or(hline, |&(l, _)| l),
            format!("expected {m} rows, got {}", body.len()),
        ));
    }
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(m);
    for &(lno, line) in body {
        let entries: Result<Vec<Int>, ParseError> = line
            .split_whitespace()
            .map(|s| Int::from_str(s).map_err(|_| err(lno, format!("bad integer `{s}`"))))
            .collect();
        let entries = entries?;
        if entries.len() != n {
            return Err(err(
                lno,
                format!("expected {n} entries, got {}", entries.len()),
            ));
        }
        rows.push(entries);
    }
    let entries: Vec<Int> = rows.into_iter().flatten().collect();
    IntMatrix::new(m, n, entries).map_err(|e| err(hline, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(err(1, "empty file"));
    };
    let (m, n) = parse_header(hline, header, "bipartite")?;
    let mut edges = Vec::new();
    for &(lno, line) in &lines[1..] {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(lno, format!("expected `i j`, got `{line}`")));
        }
        let parse = |s: &str, side: usize| -> Result<usize, ParseError> {
            let v = s
                .parse::<usize>()
                .map_err(|_| err(lno, format!("bad index `{s}`")))?;
            if v < 1 || v > side {
                return Err(err(lno, format!("index {v} out of range 1..={side}")));
            }
            Ok(v - 1)
        };
        edges.push((parse(fields[0], m)?, parse(fields[1], n)?));
    }
    BipartiteGraph::new(m, n, edges).map_err(|e| err(hline, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_roundtrip_and_diagnostics() {
        let m = parse_matrix("# comment\nmatrix 2 3\n1 2 3\n4 -5 6\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m.entry(1, 1), &Int::from(-5));
        let e = parse_matrix("matrix 2 3\n1 2 3\n4 x 6\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_matrix("matrix 2 3\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_matrix("matrix 1 2\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn graph_parsing() {
        let g = parse_graph("bipartite 2 3\n1 1\n1 2\n2 2\n2 3\n# trailing\n").unwrap();
        assert_eq!((g.left(), g.right()), (2, 3));
        assert_eq!(g.edges().len(), 4);
        let e = parse_graph("bipartite 2 3\n1 4\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_graph("bipartite 2 3\n1 1\n1 1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }
}

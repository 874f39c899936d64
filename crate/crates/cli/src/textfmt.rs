//! Plain-text matrix interchange format.
//!
//! The first non-comment line holds `c a`; `c` lines of `a` whitespace
//! separated entries follow. An entry is `-` (or `-1`) for a null
//! polynomial, a bare exponent for a monomial, or a comma separated exponent
//! list such as `0,2,9` for `1 + x^2 + x^9`. Lines starting with `#` are
//! comments.

use sclcc_core::matrix::{ExponentMatrix, SymbolicMatrix};
use thiserror::Error;

/// Parse failure with 1-based line and token coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, token {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Parses the text format. Zero-weight columns are rejected here, at the IO
/// boundary.
pub fn parse_symbolic(text: &str) -> Result<SymbolicMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_no, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let mut dims = header.split_whitespace();
    let c: usize = dims
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&c| c > 0)
        .ok_or_else(|| ParseError::new(header_no, 1, "expected positive row count"))?;
    let a: usize = dims
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&a| a > 0)
        .ok_or_else(|| ParseError::new(header_no, 2, "expected positive column count"))?;
    if dims.next().is_some() {
        return Err(ParseError::new(header_no, 3, "trailing tokens after dimensions"));
    }

    let mut entries: Vec<Vec<u32>> = Vec::with_capacity(c * a);
    for i in 0..c {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| ParseError::new(header_no + i + 1, 1, format!("missing row {i}")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != a {
            return Err(ParseError::new(
                line_no,
                tokens.len().min(a) + 1,
                format!("expected {a} entries, found {}", tokens.len()),
            ));
        }
        for (t, token) in tokens.iter().enumerate() {
            entries.push(parse_entry(token).map_err(|msg| ParseError::new(line_no, t + 1, msg))?);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(ParseError::new(line_no, 1, "unexpected extra rows"));
    }

    let h = SymbolicMatrix::from_entries(c, a, entries)
        .map_err(|e| ParseError::new(header_no, 1, e.to_string()))?;
    for j in 0..a {
        if h.column_weight(j) == 0 {
            return Err(ParseError::new(header_no, j + 1, format!("column {j} has weight zero")));
        }
    }
    Ok(h)
}

fn parse_entry(token: &str) -> Result<Vec<u32>, String> {
    if token == "-" || token == "-1" {
        return Ok(Vec::new());
    }
    token
        .split(',')
        .map(|part| {
            part.parse::<u32>().map_err(|_| format!("bad exponent {part:?} in entry {token:?}"))
        })
        .collect()
}

/// Writes a matrix back in the text format; monomial matrices use the bare
/// integer form with `-1` for null entries.
pub fn write_symbolic(h: &SymbolicMatrix) -> String {
    let monomial = h.is_monomial();
    let mut out = format!("{} {}\n", h.c(), h.a());
    for i in 0..h.c() {
        let row: Vec<String> = (0..h.a())
            .map(|j| {
                let entry = h.entry(i, j);
                if entry.is_empty() {
                    if monomial { "-1".to_string() } else { "-".to_string() }
                } else {
                    entry.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_exponent(p: &ExponentMatrix) -> String {
    write_symbolic(&p.to_symbolic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bare_integer_format() {
        let h = parse_symbolic("2 3\n0 -1 2\n1 0 -\n").unwrap();
        assert_eq!(h.entry(0, 1), &[] as &[u32]);
        assert_eq!(h.entry(0, 2), &[2]);
        assert!(h.is_monomial());
    }

    #[test]
    fn parses_polynomial_entries_and_round_trips() {
        let text = "3 2\n0,1,4 -\n- 0,2\n7 0\n";
        let h = parse_symbolic(text).unwrap();
        assert_eq!(h.entry(0, 0), &[0, 1, 4]);
        assert_eq!(h.entry(2, 0), &[7]);
        let back = parse_symbolic(&write_symbolic(&h)).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_zero_weight_column() {
        let err = parse_symbolic("2 2\n0 -\n1 -\n").unwrap_err();
        assert!(err.message.contains("weight zero"));
        assert_eq!(err.column, 2);
    }

    #[test]
    fn reports_line_and_token() {
        let err = parse_symbolic("2 2\n0 1\n2 x\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 2));
        let err = parse_symbolic("2 2\n0 1 2\n3 4\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_symbolic("").unwrap_err();
        assert_eq!(err.message, "empty input");
    }

    #[test]
    fn comments_are_skipped() {
        let h = parse_symbolic("# header\n1 1\n# body\n0,1\n").unwrap();
        assert_eq!(h.entry(0, 0), &[0, 1]);
    }

    #[test]
    fn rejects_duplicate_exponents() {
        let err = parse_symbolic("1 1\n3,3\n").unwrap_err();
        assert!(err.message.contains("duplicate"));
    }
}

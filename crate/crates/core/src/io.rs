//! Tournament files, DOT export and report serialization.
//!
//! A tournament file is the decimal order on the first line followed by one
//! line per alternative with exactly `n` characters from `{0,1}`; character
//! `y` of row `x` is `1` iff `x ≻ y`. Every line ends in `\n` and no other
//! whitespace is allowed.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::construction::{self, label};
use crate::error::Error;
use crate::tournament::Tournament;
use crate::verify::VerificationReport;
use crate::Rational;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("not a tournament: {0}")]
    Invalid(#[from] Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// `num/den` in lowest terms, also for integers (`0/1`, `1/1`).
pub fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_tournament(text: &str) -> Result<Tournament, ParseError> {
    if !text.ends_with('\n') {
        let last = text.lines().count().max(1);
        return Err(syntax(last, text.lines().last().map_or(1, |l| l.len() + 1), "missing final newline"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
    let header = lines[0];
    if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
        let col = header.bytes().position(|b| !b.is_ascii_digit()).unwrap_or(0) + 1;
        return Err(syntax(1, col, "expected the decimal order"));
    }
    let n: usize = header.parse().map_err(|_| syntax(1, 1, "order does not fit"))?;
    if lines.len() != n + 1 {
        return Err(syntax(
            lines.len().min(n + 1) + 1,
            1,
            format!("expected {n} matrix rows, found {}", lines.len() - 1),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for (x, line) in lines[1..].iter().enumerate() {
        let line_no = x + 2;
        let mut row = Vec::with_capacity(n);
        for (c, b) in line.bytes().enumerate() {
            match b {
                b'0' => row.push(false),
                b'1' => row.push(true),
                _ => return Err(syntax(line_no, c + 1, format!("unexpected character {:?}", b as char))),
            }
        }
        if row.len() != n {
            return Err(syntax(line_no, row.len() + 1, format!("expected {n} characters, found {}", row.len())));
        }
        rows.push(row);
    }
    Ok(Tournament::from_matrix(&rows)?)
}

pub fn format_tournament(t: &Tournament) -> String {
    let n = t.order();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 8);
    writeln!(out, "{n}").expect("write to string");
    for x in 0..n {
        out.extend((0..n).map(|y| if t.dominates(x, y) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn read_tournament(path: impl AsRef<Path>) -> Result<Tournament, ParseError> {
    parse_tournament(&std::fs::read_to_string(path)?)
}

pub fn write_tournament(t: &Tournament, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, format_tournament(t))
}

/// Graphviz text with one edge per dominance pair. Alternatives of the
/// order-36 construction get their `v{block}_{triangle}_{position}` labels
/// and, with `clusters`, nested subgraphs per block and small triangle.
pub fn export_dot(t: &Tournament, clusters: bool) -> String {
    let paper = construction::is_paper_layout(t);
    let mut out = String::from("digraph tournament {\n");
    let node = |out: &mut String, x: usize, indent: &str| {
        if paper {
            writeln!(out, "{indent}{x} [label=\"{}\"];", label(x)).expect("write to string");
        } else {
            writeln!(out, "{indent}{x};").expect("write to string");
        }
    };
    if paper && clusters {
        for b in 0..4u8 {
            writeln!(out, "  subgraph cluster_block{b} {{\n    label=\"block {b}\";").expect("write");
            for tri in 1..=3u8 {
                writeln!(out, "    subgraph cluster_v{b}_{tri} {{\n      label=\"v{b}_{tri}\";").expect("write");
                for x in &construction::triangle(b, tri) {
                    node(&mut out, x, "      ");
                }
                out.push_str("    }\n");
            }
            out.push_str("  }\n");
        }
    } else {
        for x in 0..t.order() {
            node(&mut out, x, "  ");
        }
    }
    for x in 0..t.order() {
        for y in t.dominion(x).expect("in range") {
            writeln!(out, "  {x} -> {y};").expect("write to string");
        }
    }
    out.push_str("}\n");
    out
}

pub fn report_to_json(report: &VerificationReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

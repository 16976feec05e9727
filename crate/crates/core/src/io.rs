//! The `setfn v1` and `graph v1` text formats.
//!
//! ```text
//! setfn v1
//! elements a b
//! {} = 0
//! {a} = 1
//! {b} = 1
//! {a,b} = 1/2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Subset lines may come
//! in any order but each subset appears exactly once. [`serialize`] writes
//! the canonical form: subsets in ascending mask order, values in lowest
//! terms, no comments.

use std::fmt;

use crate::constructors::graph::Graph;
use crate::error::Error;
use crate::ground::{GroundSet, Subset};
use crate::rat::{format_rat, parse_rat, Rat, RatSyntaxError};
use crate::setfn::SetFunction;

pub const SETFN_MAGIC: &str = "setfn v1";
pub const GRAPH_MAGIC: &str = "graph v1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty document")]
    Empty,
    #[error("bad magic line: expected {expected:?}")]
    BadMagic { expected: &'static str },
    #[error("expected `{0}` line")]
    MissingHeader(&'static str),
    #[error("trailing garbage {0:?}")]
    TrailingGarbage(String),
    #[error("malformed subset {0:?}")]
    MalformedSubset(String),
    #[error("malformed line; expected `{0}`")]
    MalformedLine(&'static str),
    #[error("malformed value {0:?}")]
    MalformedValue(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("duplicate subset {0}")]
    DuplicateSubset(String),
    #[error("missing subset {0}")]
    MissingSubset(String),
    #[error("{0}")]
    Invalid(Error),
}

/// A parse failure; `line` is 1-based, `None` means end of file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.kind),
            None => write!(f, "end of file: {}", self.kind),
        }
    }
}

impl std::error::Error for ParseError {}

fn at(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: Some(line),
        kind,
    }
}

/// Significant lines with their 1-based numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_magic<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    magic: &'static str,
) -> Result<(), ParseError> {
    let (no, line) = lines.next().ok_or(ParseError {
        line: None,
        kind: ParseErrorKind::Empty,
    })?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let expected: Vec<&str> = magic.split_whitespace().collect();
    if tokens.len() >= expected.len() && tokens[..expected.len()] == expected[..] {
        if tokens.len() > expected.len() {
            return Err(at(
                no,
                ParseErrorKind::TrailingGarbage(tokens[expected.len()..].join(" ")),
            ));
        }
        Ok(())
    } else {
        Err(at(no, ParseErrorKind::BadMagic { expected: magic }))
    }
}

/// The labels following `keyword` on the next significant line.
fn expect_label_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &'static str,
) -> Result<(usize, Vec<&'a str>), ParseError> {
    let (no, line) = lines.next().ok_or(ParseError {
        line: None,
        kind: ParseErrorKind::MissingHeader(keyword),
    })?;
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(at(no, ParseErrorKind::MissingHeader(keyword)));
    }
    Ok((no, tokens.collect()))
}

/// Parses `{}` or `{a,b,...}` against `ground`.
pub fn parse_subset(token: &str, ground: &GroundSet) -> Result<Subset, ParseErrorKind> {
    let malformed = || ParseErrorKind::MalformedSubset(token.to_string());
    let inner = token
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(malformed)?;
    if inner.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let labels: Vec<&str> = inner.split(',').collect();
    if labels
        .iter()
        .any(|l| l.is_empty() || l.contains(['{', '}']))
    {
        return Err(malformed());
    }
    ground.subset(labels).map_err(ParseErrorKind::Invalid)
}

fn parse_value(token: &str) -> Result<Rat, ParseErrorKind> {
    parse_rat(token).map_err(|e| match e {
        RatSyntaxError::ZeroDenominator => ParseErrorKind::ZeroDenominator,
        RatSyntaxError::Malformed => ParseErrorKind::MalformedValue(token.to_string()),
    })
}

/// Parses a `setfn v1` document.
pub fn parse(text: &str) -> Result<SetFunction, ParseError> {
    let mut lines = significant_lines(text);
    expect_magic(&mut lines, SETFN_MAGIC)?;
    let (no, labels) = expect_label_line(&mut lines, "elements")?;
    let ground = GroundSet::new(labels).map_err(|e| at(no, ParseErrorKind::Invalid(e)))?;

    let mut slots: Vec<Option<Rat>> = vec![None; ground.table_len()];
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 3 || tokens[1] != "=" {
            return Err(at(no, ParseErrorKind::MalformedLine("<subset> = <value>")));
        }
        let subset = parse_subset(tokens[0], &ground).map_err(|k| at(no, k))?;
        let value = parse_value(tokens[2]).map_err(|k| at(no, k))?;
        if tokens.len() > 3 {
            return Err(at(
                no,
                ParseErrorKind::TrailingGarbage(tokens[3..].join(" ")),
            ));
        }
        let slot = &mut slots[subset.index()];
        if slot.is_some() {
            return Err(at(
                no,
                ParseErrorKind::DuplicateSubset(ground.format(subset)),
            ));
        }
        *slot = Some(value);
    }

    let mut table = Vec::with_capacity(slots.len());
    for (mask, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(v) => table.push(v),
            None => {
                return Err(ParseError {
                    line: None,
                    kind: ParseErrorKind::MissingSubset(ground.format(Subset(mask as u32))),
                })
            }
        }
    }
    Ok(SetFunction::from_table(ground, table).expect("one value per subset"))
}

/// Canonical `setfn v1` text, newline-terminated.
pub fn serialize(f: &SetFunction) -> String {
    let ground = f.ground();
    let mut out = String::new();
    out.push_str(SETFN_MAGIC);
    out.push('\n');
    out.push_str("elements");
    for label in ground.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (mask, value) in f.table().iter().enumerate() {
        out.push_str(&ground.format(Subset(mask as u32)));
        out.push_str(" = ");
        out.push_str(&format_rat(value));
        out.push('\n');
    }
    out
}

/// Parses a `graph v1` document.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = significant_lines(text);
    expect_magic(&mut lines, GRAPH_MAGIC)?;
    let (vertex_line, vertices) = expect_label_line(&mut lines, "vertices")?;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 4 || tokens[1] != "=" {
            return Err(at(
                no,
                ParseErrorKind::MalformedLine("<edge> = <vertex> <vertex>"),
            ));
        }
        if tokens.len() > 4 {
            return Err(at(
                no,
                ParseErrorKind::TrailingGarbage(tokens[4..].join(" ")),
            ));
        }
        edges.push((tokens[0], tokens[2], tokens[3]));
        edge_lines.push(no);
    }
    Graph::new(vertices, edges).map_err(|e| {
        // point at the edge line responsible when there is one
        let line = match &e {
            Error::UnknownVertex { edge, .. } => edge_line(&edge_lines, text, edge),
            Error::DuplicateLabel(l) | Error::InvalidLabel(l) => {
                edge_line(&edge_lines, text, l).or(Some(vertex_line))
            }
            _ => Some(vertex_line),
        };
        ParseError {
            line,
            kind: ParseErrorKind::Invalid(e),
        }
    })
}

fn edge_line(edge_lines: &[usize], text: &str, label: &str) -> Option<usize> {
    let all: Vec<&str> = text.lines().collect();
    // the last line naming the label is the offending one for duplicates
    edge_lines
        .iter()
        .rev()
        .copied()
        .find(|&no| all[no - 1].split_whitespace().next() == Some(label))
}

/// Canonical `graph v1` text.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(GRAPH_MAGIC);
    out.push('\n');
    out.push_str("vertices");
    for v in g.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for e in g.edges() {
        let (u, v) = e.ends;
        out.push_str(&format!(
            "{} = {} {}\n",
            e.label,
            g.vertices()[u],
            g.vertices()[v]
        ));
    }
    out
}

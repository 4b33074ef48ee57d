//! The line-oriented tree file format.
//!
//! ```text
//! # comments run to end of line
//! tree <n> scale=<d>
//! v <id> <decimal-weight>      (n lines)
//! e <u> <w>                    (n - 1 lines)
//! ```
//!
//! Weights may have at most `d` fractional digits and are stored as
//! `weight * 10^d`. [`serialize_tree`] writes the canonical form: header,
//! vertex lines by id, then edge lines with `u < w` in sorted order, weights
//! padded to exactly `d` digits.

use std::fmt::Write;

use thiserror::Error;

use super::decimal::{format_scaled, parse_scaled, DecimalError, MAX_SCALE};
use crate::tree::{BuildError, Edge, VertexId, WeightedTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: weight `{text}` has more than {scale} fractional digits")]
    TooManyFractionalDigits { line: usize, text: String, scale: u32 },
    #[error("line {line}: vertex {id} is listed more than once")]
    DuplicateVertex { line: usize, id: VertexId },
    #[error("vertex {0} has no `v` line")]
    MissingVertex(VertexId),
    #[error("missing `tree <n> scale=<d>` header")]
    MissingHeader,
    #[error("{}invalid tree: {source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Build { line: Option<usize>, source: BuildError },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_header(line: usize, tokens: &[&str]) -> Result<(usize, u32), ParseError> {
    match tokens {
        ["tree", n, scale] => {
            let n = n
                .parse::<usize>()
                .map_err(|_| syntax(line, format!("bad vertex count `{n}`")))?;
            let scale = scale
                .strip_prefix("scale=")
                .and_then(|d| d.parse::<u32>().ok())
                .filter(|d| *d <= MAX_SCALE)
                .ok_or_else(|| syntax(line, format!("bad scale `{scale}` (expected scale=0..{MAX_SCALE})")))?;
            Ok((n, scale))
        }
        _ => Err(syntax(line, "expected header `tree <n> scale=<d>`")),
    }
}

fn parse_id(line: usize, token: &str) -> Result<VertexId, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex id `{token}`")))
}

pub fn parse_tree(text: &str) -> Result<WeightedTree, ParseError> {
    let mut header: Option<(usize, u32)> = None;
    let mut weights: Vec<Option<i64>> = Vec::new();
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some((n, scale)) = header else {
            let parsed = parse_header(line, &tokens)?;
            weights = vec![None; parsed.0];
            header = Some(parsed);
            continue;
        };
        match tokens.as_slice() {
            ["v", id, weight] => {
                let id = parse_id(line, id)?;
                if id >= n {
                    return Err(syntax(line, format!("vertex id {id} out of range for {n} vertices")));
                }
                let value = parse_scaled(weight, scale).map_err(|e| match e {
                    DecimalError::TooManyFractionalDigits { text, scale } => {
                        ParseError::TooManyFractionalDigits { line, text, scale }
                    }
                    other => syntax(line, other.to_string()),
                })?;
                if weights[id].replace(value).is_some() {
                    return Err(ParseError::DuplicateVertex { line, id });
                }
            }
            ["e", u, w] => {
                edges.push((parse_id(line, u)?, parse_id(line, w)?));
                edge_lines.push(line);
            }
            ["tree", ..] => return Err(syntax(line, "duplicate header")),
            _ => return Err(syntax(line, format!("unrecognized line `{}`", content.trim()))),
        }
    }

    let (n, scale) = header.ok_or(ParseError::MissingHeader)?;
    let weights = weights
        .into_iter()
        .enumerate()
        .map(|(id, w)| w.ok_or(ParseError::MissingVertex(id)))
        .collect::<Result<Vec<_>, _>>()?;
    WeightedTree::build(n, weights, &edges, scale).map_err(|source| ParseError::Build {
        line: offending_line(&source, &edges, &edge_lines),
        source,
    })
}

/// Points an edge-specific build error back at the first line responsible.
fn offending_line(err: &BuildError, edges: &[(VertexId, VertexId)], lines: &[usize]) -> Option<usize> {
    let position = match *err {
        BuildError::SelfLoop(v) => edges.iter().position(|&(a, b)| a == v && b == v),
        BuildError::IdOutOfRange { id, .. } => edges.iter().position(|&(a, b)| a == id || b == id),
        BuildError::DuplicateEdge(e) => edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| a != b && Edge::new(a, b) == e)
            .map(|(i, _)| i)
            .nth(1),
        _ => None,
    };
    position.map(|i| lines[i])
}

pub fn serialize_tree(tree: &WeightedTree) -> String {
    let scale = tree.scale();
    let mut out = format!("tree {} scale={}\n", tree.vertex_count(), scale);
    for (id, &w) in tree.weights().iter().enumerate() {
        writeln!(out, "v {id} {}", format_scaled(w, scale)).unwrap();
    }
    for e in tree.edges() {
        writeln!(out, "e {} {}", e.u, e.v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let t = parse_tree("tree 1 scale=0\nv 0 7\n").unwrap();
        assert_eq!(t.total_weight(), 7);
        assert_eq!(serialize_tree(&t), "tree 1 scale=0\nv 0 7\n");
    }

    #[test]
    fn comments_blank_lines_and_any_order() {
        let text = "# a pair\n\ntree 2 scale=1  # header\ne 1 0\nv 1 0.5\nv 0 2\n";
        let t = parse_tree(text).unwrap();
        assert_eq!(t.weights(), &[20, 5]);
        assert_eq!(serialize_tree(&t), "tree 2 scale=1\nv 0 2.0\nv 1 0.5\ne 0 1\n");
    }

    #[test]
    fn fractional_digit_limit() {
        let err = parse_tree("tree 1 scale=2\nv 0 0.055\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::TooManyFractionalDigits {
                line: 2,
                text: "0.055".into(),
                scale: 2
            }
        );
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let cases = [
            ("", ParseError::MissingHeader),
            ("tree x scale=0\n", syntax(1, "")),
            ("tree 2 scale=q\n", syntax(1, "")),
            ("tree 2 scale=0\nv 0 1\nw 1 1\n", syntax(3, "")),
            ("tree 2 scale=0\nv 0 1\nv 2 1\n", syntax(3, "")),
            ("tree 2 scale=0\nv 0 abc\n", syntax(2, "")),
            ("tree 2 scale=0\ntree 2 scale=0\n", syntax(2, "")),
        ];
        for (text, expected) in cases {
            let err = parse_tree(text).unwrap_err();
            match (&err, &expected) {
                (ParseError::Syntax { line: a, .. }, ParseError::Syntax { line: b, .. }) => {
                    assert_eq!(a, b, "{text:?}")
                }
                _ => assert_eq!(err, expected, "{text:?}"),
            }
        }
        assert_eq!(
            parse_tree("tree 2 scale=0\nv 0 1\nv 0 1\n").unwrap_err(),
            ParseError::DuplicateVertex { line: 3, id: 0 }
        );
        assert_eq!(
            parse_tree("tree 2 scale=0\nv 0 1\ne 0 1\n").unwrap_err(),
            ParseError::MissingVertex(1)
        );
    }

    #[test]
    fn build_errors_point_at_edges() {
        let dup = "tree 3 scale=0\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 0\n";
        assert!(matches!(
            parse_tree(dup).unwrap_err(),
            ParseError::Build {
                line: Some(6),
                source: BuildError::DuplicateEdge(_)
            }
        ));
        let out_of_range = "tree 2 scale=0\nv 0 1\nv 1 1\ne 0 5\n";
        assert!(matches!(
            parse_tree(out_of_range).unwrap_err(),
            ParseError::Build {
                line: Some(4),
                source: BuildError::IdOutOfRange { id: 5, .. }
            }
        ));
        let cycle = "tree 3 scale=0\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 2 0\n";
        assert!(matches!(
            parse_tree(cycle).unwrap_err(),
            ParseError::Build {
                line: None,
                source: BuildError::EdgeCountMismatch { .. }
            }
        ));
        let negative = "tree 1 scale=1\nv 0 -0.5\n";
        assert!(matches!(
            parse_tree(negative).unwrap_err(),
            ParseError::Build {
                source: BuildError::NegativeWeight { .. },
                ..
            }
        ));
    }
}

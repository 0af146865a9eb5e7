//! Text formats.
//!
//! * Edge list: a header line `n m`, then `m` lines `u v` (0-based). Lines
//!   starting with `#` are comments.
//! * DIMACS: `p edge n m`, then `e u v` lines (1-based). `c` lines are
//!   comments.
//! * Matching: one `u-v` line per edge, in canonical order.
//! * Partition: `classes k`, then one `u v c` line per edge (color 1-based).
//! * List assignment and label sidecar: one `v : {a,b,...}` line per vertex.
//! * DIM certificate: `dim-certificate`, `graph-sha256 <hex>` (digest of the
//!   canonical edge-list serialization), then the matching lines.
//!
//! Everything is written in canonical order with `\n` line endings and no
//! trailing whitespace, so serializing a parsed file gives its canonical form.

use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generators::SubsetLabel;
use crate::graph::{EdgeId, Graph};
use crate::partition::{DimPartition, ListAssignment};
use crate::solver::Matching;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

fn number<T: FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {token:?}")))
}

fn no_more(line: usize, mut tokens: std::str::SplitWhitespace<'_>) -> Result<()> {
    match tokens.next() {
        None => Ok(()),
        Some(t) => Err(Error::parse(line, format!("unexpected token {t:?}"))),
    }
}

fn checked_pair(line: usize, n: usize, u: usize, v: usize) -> Result<(usize, usize)> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::parse(
                line,
                format!("vertex {x} out of range for {n} vertices"),
            ));
        }
    }
    if u == v {
        return Err(Error::parse(line, format!("self-loop at vertex {u}")));
    }
    Ok((u, v))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let mut tokens = header.split_whitespace();
    let n: usize = number(hl, tokens.next(), "vertex count")?;
    let m: usize = number(hl, tokens.next(), "edge count")?;
    no_more(hl, tokens)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, line) in lines {
        let mut tokens = line.split_whitespace();
        let u = number(ln, tokens.next(), "endpoint")?;
        let v = number(ln, tokens.next(), "endpoint")?;
        no_more(ln, tokens)?;
        pairs.push(checked_pair(ln, n, u, v)?);
        last_line = ln;
    }
    if pairs.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 1;
    for (ln, line) in content_lines(text, "c") {
        last_line = ln;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(ln, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            ln,
                            format!("expected 'p edge', found {other:?}"),
                        ))
                    }
                }
                let n = number(ln, tokens.next(), "vertex count")?;
                let m = number(ln, tokens.next(), "edge count")?;
                no_more(ln, tokens)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| Error::parse(ln, "edge before problem line"))?;
                let u: usize = number(ln, tokens.next(), "endpoint")?;
                let v: usize = number(ln, tokens.next(), "endpoint")?;
                no_more(ln, tokens)?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(ln, "dimacs vertices are 1-based"));
                }
                pairs.push(checked_pair(ln, n, u - 1, v - 1)?);
            }
            Some(other) => {
                return Err(Error::parse(ln, format!("unknown line type {other:?}")))
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last_line, "missing problem line"))?;
    if pairs.len() != m {
        return Err(Error::parse(
            last_line,
            format!("problem line declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            writeln!(out, "{} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}

/// Hex SHA-256 of the canonical edge-list serialization.
pub fn graph_digest(g: &Graph) -> String {
    let digest = Sha256::digest(serialize_graph(g, Format::EdgeList).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn serialize_matching(g: &Graph, m: &Matching) -> String {
    m.edges()
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            format!("{u}-{v}\n")
        })
        .collect()
}

fn parse_endpoint_pair(g: &Graph, line: usize, text: &str) -> Result<EdgeId> {
    let (a, b) = text
        .split_once('-')
        .ok_or_else(|| Error::parse(line, format!("expected u-v, found {text:?}")))?;
    let u: usize = number(line, Some(a.trim()), "endpoint")?;
    let v: usize = number(line, Some(b.trim()), "endpoint")?;
    g.edge_id(u, v)
        .ok_or_else(|| Error::parse(line, format!("{u}-{v} is not an edge")))
}

pub fn parse_matching(g: &Graph, text: &str) -> Result<Matching> {
    let ids = content_lines(text, "#")
        .map(|(ln, line)| parse_endpoint_pair(g, ln, line))
        .collect::<Result<Vec<_>>>()?;
    Matching::new(g, ids)
}

pub fn serialize_partition(g: &Graph, p: &DimPartition) -> String {
    let mut out = format!("classes {}\n", p.num_classes());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{u} {v} {}", p.color_of(EdgeId(i))).unwrap();
    }
    out
}

/// Parses a partition file against `g`. Every edge of `g` must be colored
/// exactly once; lines may come in any order.
pub fn parse_partition(g: &Graph, text: &str) -> Result<DimPartition> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("classes") {
        return Err(Error::parse(hl, "expected 'classes k'"));
    }
    let k: usize = number(hl, tokens.next(), "class count")?;
    no_more(hl, tokens)?;
    let mut colors = vec![0u32; g.m()];
    for (ln, line) in lines {
        let mut tokens = line.split_whitespace();
        let u: usize = number(ln, tokens.next(), "endpoint")?;
        let v: usize = number(ln, tokens.next(), "endpoint")?;
        let c: u32 = number(ln, tokens.next(), "color")?;
        no_more(ln, tokens)?;
        let e = g
            .edge_id(u, v)
            .ok_or_else(|| Error::parse(ln, format!("{u} {v} is not an edge")))?;
        if colors[e.0] != 0 {
            return Err(Error::parse(ln, format!("edge {u} {v} colored twice")));
        }
        if c == 0 {
            return Err(Error::parse(ln, "colors are 1-based"));
        }
        colors[e.0] = c;
    }
    if let Some(i) = colors.iter().position(|&c| c == 0) {
        let (u, v) = g.edges()[i];
        return Err(Error::InvalidPartition(format!("edge {u} {v} has no color")));
    }
    DimPartition::new(k, colors)
}

fn set_line(v: usize, elements: &[u32]) -> String {
    format!("{v} : {{{}}}\n", elements.iter().join(","))
}

fn parse_set_lines(text: &str) -> Result<Vec<(usize, Vec<u32>)>> {
    content_lines(text, "#")
        .map(|(ln, line)| {
            let (v, set) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(ln, "expected 'v : {...}'"))?;
            let v: usize = number(ln, Some(v.trim()), "vertex")?;
            let inner = set
                .trim()
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| Error::parse(ln, "expected braces around the set"))?;
            let elements = inner
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| number(ln, Some(t), "label"))
                .collect::<Result<Vec<u32>>>()?;
            Ok((v, elements))
        })
        .collect()
}

fn dense_sets(text: &str) -> Result<Vec<Vec<u32>>> {
    let entries = parse_set_lines(text)?;
    let mut out = vec![None; entries.len()];
    for (v, set) in entries {
        let slot = out
            .get_mut(v)
            .ok_or_else(|| Error::InvalidListAssignment(format!("vertex {v} out of range")))?;
        if slot.replace(set).is_some() {
            return Err(Error::InvalidListAssignment(format!("vertex {v} listed twice")));
        }
    }
    // all slots are filled: one entry per vertex, all distinct and in range
    Ok(out.into_iter().map(Option::unwrap).collect())
}

pub fn serialize_list_assignment(l: &ListAssignment) -> String {
    l.lists()
        .iter()
        .enumerate()
        .map(|(v, s)| set_line(v, s))
        .collect()
}

/// Parses a list-assignment file. The label universe is not stored in the
/// file and must be supplied.
pub fn parse_list_assignment(text: &str, universe: usize) -> Result<ListAssignment> {
    ListAssignment::new(universe, dense_sets(text)?)
}

pub fn serialize_labels(labels: &[SubsetLabel]) -> String {
    labels
        .iter()
        .enumerate()
        .map(|(v, s)| set_line(v, s.elements()))
        .collect()
}

pub fn parse_labels(text: &str) -> Result<Vec<SubsetLabel>> {
    Ok(dense_sets(text)?.into_iter().map(SubsetLabel::new).collect())
}

pub fn serialize_certificate(g: &Graph, m: &Matching) -> String {
    format!(
        "dim-certificate\ngraph-sha256 {}\n{}",
        graph_digest(g),
        serialize_matching(g, m)
    )
}

/// Parses a certificate and checks that it was issued for `g`. Whether the
/// matching is actually a DIM is left to the caller.
pub fn parse_certificate(g: &Graph, text: &str) -> Result<Matching> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "dim-certificate")) => {}
        _ => return Err(Error::parse(1, "expected 'dim-certificate'")),
    }
    let digest = match lines.next() {
        Some((_, line)) => line
            .strip_prefix("graph-sha256 ")
            .ok_or_else(|| Error::parse(2, "expected 'graph-sha256 <hex>'"))?,
        None => return Err(Error::parse(2, "missing graph digest")),
    };
    if digest != graph_digest(g) {
        return Err(Error::parse(2, "certificate was issued for a different graph"));
    }
    let ids = lines
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(ln, l)| parse_endpoint_pair(g, ln, l))
        .collect::<Result<Vec<_>>>()?;
    Matching::new(g, ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, kneser_dim_partition, petersen};
    use crate::partition::{find_dim_partition, list_assignment};
    use crate::solver::find_dim;

    #[test]
    fn edge_list_triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n0 2\n", Format::EdgeList).unwrap();
        assert_eq!(g, cycle(3).unwrap());
    }

    #[test]
    fn edge_list_comments_and_blank_lines() {
        let g = parse_graph("# a triangle\n3 3\n\n2 1\n# mid\n1 0\n0 2\n", Format::EdgeList).unwrap();
        assert_eq!(serialize_graph(&g, Format::EdgeList), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_graph("p edge 2 1\ne 1 2\n", Format::Dimacs).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(serialize_graph(&g, Format::Dimacs), "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn malformed_inputs() {
        let bad = [
            ("", Format::EdgeList),
            ("3\n", Format::EdgeList),
            ("3 1\n0 x\n", Format::EdgeList),
            ("3 1\n0 3\n", Format::EdgeList),
            ("3 1\n1 1\n", Format::EdgeList),
            ("3 2\n0 1\n", Format::EdgeList),
            ("3 1\n0 1 2\n", Format::EdgeList),
            ("p edge 2 2\ne 1 2\n", Format::Dimacs),
            ("e 1 2\n", Format::Dimacs),
            ("p edge 2 1\ne 0 1\n", Format::Dimacs),
            ("p edge 2 1\nx 1 2\n", Format::Dimacs),
        ];
        for (text, format) in bad {
            assert!(
                matches!(parse_graph(text, format), Err(Error::Parse { .. })),
                "{text:?} should fail"
            );
        }
    }

    #[test]
    fn parse_error_reports_line() {
        let err = parse_graph("2 1\n\n0 5\n", Format::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn matching_round_trip() {
        let g = cycle(6).unwrap();
        let d = find_dim(&g).unwrap();
        let text = serialize_matching(&g, &d);
        assert_eq!(text, "0-1\n3-4\n");
        assert_eq!(parse_matching(&g, &text).unwrap(), d);
    }

    #[test]
    fn partition_round_trip() {
        let g = cycle(9).unwrap();
        let p = find_dim_partition(&g).unwrap();
        let text = serialize_partition(&g, &p);
        assert!(text.starts_with("classes 3\n0 1 "));
        assert_eq!(parse_partition(&g, &text).unwrap(), p);
        assert!(parse_partition(&g, "classes 3\n0 1 1\n").is_err());
    }

    #[test]
    fn list_and_label_round_trip() {
        let (lg, p) = kneser_dim_partition(3).unwrap();
        let l = list_assignment(&lg.graph, &p).unwrap();
        let text = serialize_list_assignment(&l);
        assert_eq!(parse_list_assignment(&text, 5).unwrap(), l);

        let labels = serialize_labels(&lg.labels);
        assert!(labels.starts_with("0 : {1,2}\n1 : {1,3}\n"));
        assert_eq!(parse_labels(&labels).unwrap(), lg.labels);
        assert_eq!(parse_labels("0 : {}\n").unwrap()[0].elements(), &[] as &[u32]);
    }

    #[test]
    fn certificate_binds_the_graph() {
        let g = petersen();
        let d = find_dim(&g).unwrap();
        let cert = serialize_certificate(&g, &d);
        assert_eq!(parse_certificate(&g, &cert).unwrap(), d);
        assert!(parse_certificate(&cycle(6).unwrap(), &cert).is_err());
        assert_eq!(graph_digest(&g).len(), 64);
    }
}

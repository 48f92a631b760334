//! Text ingestion: edge-list and DIMACS formats, both 1-based.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("malformed vertex label '{tok}'")))?;
    if v == 0 {
        return Err(parse_err(line, "vertex labels are 1-based; got 0"));
    }
    Ok(v)
}

/// Parses edge-list text: lines of "u v" with 1-based labels, an optional
/// first line "n <count>", and '#' comments. Duplicate edges collapse;
/// self-loops are rejected; with a header, labels must stay in range.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut saw_content = false;
    let mut max_label = 0usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut toks = line.split_whitespace();
        let Some(first) = toks.next() else { continue };

        if first == "n" {
            if saw_content {
                return Err(parse_err(line_no, "'n' header after edge lines"));
            }
            saw_content = true;
            let count = toks
                .next()
                .ok_or_else(|| parse_err(line_no, "'n' header missing a count"))?;
            if toks.next().is_some() {
                return Err(parse_err(line_no, "trailing tokens after 'n' header"));
            }
            let count: usize = count
                .parse()
                .map_err(|_| parse_err(line_no, format!("malformed vertex count '{count}'")))?;
            declared_n = Some(count);
            continue;
        }

        saw_content = true;
        let u = parse_label(first, line_no)?;
        let v_tok = toks
            .next()
            .ok_or_else(|| parse_err(line_no, "expected 'u v'"))?;
        let v = parse_label(v_tok, line_no)?;
        if toks.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens after edge"));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop '{u} {u}' rejected")));
        }
        if let Some(n) = declared_n {
            if u > n || v > n {
                return Err(parse_err(
                    line_no,
                    format!("edge ({u}, {v}) outside declared range n = {n}"),
                ));
            }
        }
        max_label = max_label.max(u).max(v);
        edges.push((u - 1, v - 1));
    }

    let n = declared_n.unwrap_or(max_label);
    Graph::from_edges(n, edges)
}

/// Parses DIMACS text: 'c' comments, one "p edge n m" line, then "e u v"
/// lines, 1-based. A mismatch between m and the number of distinct edges is
/// logged as a warning rather than an error.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "c" => continue,
            "p" => {
                if n.is_some() {
                    return Err(parse_err(line_no, "duplicate 'p' line"));
                }
                match toks.next() {
                    Some("edge") => {}
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!("expected 'p edge', got 'p {}'", other.unwrap_or("")),
                        ))
                    }
                }
                let n_tok = toks
                    .next()
                    .ok_or_else(|| parse_err(line_no, "'p edge' missing vertex count"))?;
                let m_tok = toks
                    .next()
                    .ok_or_else(|| parse_err(line_no, "'p edge' missing edge count"))?;
                n = Some(
                    n_tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("malformed count '{n_tok}'")))?,
                );
                declared_m = m_tok
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("malformed count '{m_tok}'")))?;
            }
            "e" => {
                let n = n.ok_or_else(|| parse_err(line_no, "'e' line before 'p' line"))?;
                let u_tok = toks
                    .next()
                    .ok_or_else(|| parse_err(line_no, "'e' line missing endpoints"))?;
                let v_tok = toks
                    .next()
                    .ok_or_else(|| parse_err(line_no, "'e' line missing endpoint"))?;
                let u = parse_label(u_tok, line_no)?;
                let v = parse_label(v_tok, line_no)?;
                if u > n || v > n {
                    return Err(parse_err(
                        line_no,
                        format!("edge ({u}, {v}) exceeds declared n = {n}"),
                    ));
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop '{u} {u}' rejected")));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(parse_err(line_no, format!("unknown line type '{other}'")));
            }
        }
    }

    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing 'p edge' line"))?;
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != declared_m {
        log::warn!(
            "DIMACS header declares {} edges but {} distinct edges were read",
            declared_m,
            g.edge_count()
        );
    }
    Ok(g)
}

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Graph input encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `n` on the first line, then 1-based `u v` pairs; `#` starts a comment line.
    EdgeList,
    /// Standard graph6, one graph per line.
    Graph6,
}

/// Parses a single graph. For graph6 input the first graph is returned.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::parse("input", "no graph6 line found")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| {
        Error::parse(
            format!("line {lineno}"),
            format!("expected vertex count, got {header:?}"),
        )
    })?;
    if n > MAX_VERTICES {
        return Err(Error::guard("vertex count", n, MAX_VERTICES));
    }
    let mut g = Graph::empty(n)?;

    for (lineno, line) in lines {
        let loc = || format!("line {lineno}");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(loc(), format!("expected \"u v\", got {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            let v: usize = f
                .parse()
                .map_err(|_| Error::parse(loc(), format!("bad vertex {f:?}")))?;
            if v == 0 || v > n {
                return Err(Error::parse(loc(), format!("vertex {v} out of range 1..={n}")));
            }
            *slot = v - 1;
        }
        if ends[0] == ends[1] {
            return Err(Error::parse(loc(), format!("loop at vertex {}", ends[0] + 1)));
        }
        g.add_edge(ends[0], ends[1])?;
    }
    Ok(g)
}

/// Parses every non-empty line as a graph6 string. An optional `>>graph6<<`
/// header is accepted.
pub fn parse_graph6(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode_graph6(l.trim(), i + 1))
        .collect()
}

fn decode_graph6(line: &str, lineno: usize) -> Result<Graph> {
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
    let err = |offset: usize, msg: &str| Error::parse(format!("line {lineno}, offset {offset}"), msg);

    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside graph6 range 63..=126"));
        }
    }
    let (n, start) = match body.first() {
        None => return Err(err(0, "empty graph6 string")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(err(1, "graphs this large are not supported"));
            }
            if body.len() < 4 {
                return Err(err(1, "truncated vertex count"));
            }
            let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::guard("vertex count", n, MAX_VERTICES));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            start,
            &format!("expected {expected} data bytes for {n} vertices, found {}", data.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

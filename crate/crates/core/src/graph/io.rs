//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper triangle column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`) into 6-bit groups, most significant bit first, each offset by
//! 63. The vertex count uses one byte for `n <= 62` and a `~`-prefixed 18-bit
//! or 36-bit form beyond that.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(n: usize) -> Vec<u8> {
    let six = |shift: usize| ((n >> shift) & 0x3f) as u8 + OFFSET;
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        vec![126, six(12), six(6), six(0)]
    } else {
        vec![126, 126, six(30), six(24), six(18), six(12), six(6), six(0)]
    }
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} is not valid graph6")));
    }
    let (n, body) = decode_size(s)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {need} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::try_empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - OFFSET;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = body[need - 1] - OFFSET;
        if pad & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Parse("nonzero graph6 padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_size(s: &[u8]) -> Result<(usize, &[u8])> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - OFFSET))
    };
    match s {
        [] => Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => {
            Ok((value(&rest[..3]), &rest[3..]))
        }
        [126, ..] => Err(Error::Parse("truncated graph6 size".into())),
        [b, rest @ ..] => Ok((usize::from(b - OFFSET), rest)),
    }
}

/// `n` on the first line, then one `u v` pair per line (0-based, `u < v`).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are ignored;
/// duplicate edges collapse.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
    let mut edges = vec![];
    for line in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad edge line {line:?}")))?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::from_edges(n, &edges)
}

/// Accepts either format: text whose first token is a decimal number is an
/// edge list, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.split_whitespace().next().unwrap_or("");
    if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
        from_edge_list(text)
    } else {
        from_graph6(text)
    }
}

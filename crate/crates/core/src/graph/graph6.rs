//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_ORDER: usize = 68_719_476_735;

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for graph6");
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

fn sextet(b: u8) -> Result<usize, GraphError> {
    if !(BIAS..=126).contains(&b) {
        return Err(GraphError::Parse(format!(
            "byte {b:#04x} outside the graph6 range"
        )));
    }
    Ok((b - BIAS) as usize)
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Parse("empty input".into()));
    }
    let (n, body) = if bytes[0] != b'~' {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return Err(GraphError::Parse("truncated size field".into()));
        }
        let mut n = 0;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::Parse("truncated size field".into()));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Parse(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= bits {
                break 'outer;
            }
            let word = sextet(body[k / 6])?;
            if (word >> (5 - k % 6)) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if let Some(&last) = body.last() {
        let used = bits - (expected - 1) * 6;
        if used < 6 && sextet(last)? & ((1 << (6 - used)) - 1) != 0 {
            return Err(GraphError::Parse("non-zero padding bits".into()));
        }
    }
    Graph::new(n, &pairs)
}

//! Text formats: a plain edge list and graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based endpoints. Text after `#` on any line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let [n, m] = parse_pair(header, hline)?;

    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let [u, v] = parse_pair(line, no)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str, no: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "line {no}: expected two integers, found `{line}`"
        )));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::Parse(format!("line {no}: `{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Emits the edge-list format with edges in sorted order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses a single graph in graph6 format. An optional `>>graph6<<` header
/// and surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!(
                "graph6: byte {i} ({b:#04x}) outside the printable range 63..=126"
            )));
        }
    }
    let (n, body) = decode_size(bytes)?;

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6: expected {needed} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n);
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[t / 6] - 63;
            if (byte >> (5 - t % 6)) & 1 == 1 {
                g.insert(u, v);
            }
            t += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[needed - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse("graph6: non-zero padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Parse("graph6: empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("graph6: truncated 8-byte size header".into()));
            }
            Ok((six(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("graph6: truncated 4-byte size header".into()));
            }
            Ok((six(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Emits `g` in graph6 format without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent decoder working from the bit string rather than byte offsets.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let bitstring: String = b[1..].iter().map(|&c| format!("{:06b}", c - 63)).collect();
        let mut edges = Vec::new();
        let mut chars = bitstring.chars();
        for j in 0..n {
            for i in 0..j {
                if chars.next() == Some('1') {
                    edges.push((i, j));
                }
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn decode_star() {
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = reference_decode("D?{");
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g.edges().collect::<Vec<_>>(), edges);
    }

    #[test]
    fn decode_k2_and_header() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn known_encoding() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn malformed_graph6() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err()); // truncated
        assert!(parse_graph6("D?{?").is_err()); // trailing byte
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("~?").is_err());
        assert!(parse_graph6("A \n").is_err());
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::from_fn(100, |u, v| (u * 7 + v * 3) % 5 == 0);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);

        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=20, seed in any::<u64>()) {
            let mut state = seed;
            let g = Graph::from_fn(n, |_, _| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 63 == 1
            });
            let s = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s.clone());
            let (rn, redges) = reference_decode(&s);
            prop_assert_eq!(rn, n);
            prop_assert_eq!(redges, g.edges().collect::<Vec<_>>());
        }
    }
}

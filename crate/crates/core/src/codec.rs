//! Serialization: graph6, DOT, and a small JSON schema.
//!
//! graph6 packs the upper triangle column by column (for each column j,
//! bits (0,j)..(j-1,j)) into 6-bit groups, most significant bit first,
//! each group offset by 63 into the printable range. Orders up to 62
//! fit in a one-byte header; 63 and 64 need the `~`-prefixed long form.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use serde::{Deserialize, Serialize};

const OFFSET: u8 = 63;

fn triangle_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Canonical graph6 line for g (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(b'~');
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse a graph6 line. Rejects orders outside 1..=64, stray bytes,
/// wrong payload length, and nonzero padding bits.
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::FormatError("empty graph6 string".into()));
    }
    let (n, payload) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::FormatError(
                "graph6 order beyond supported range".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::FormatError("truncated graph6 header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::FormatError(format!("bad header byte {b}")));
            }
            n = (n << 6) | (b - OFFSET) as usize;
        }
        (n, &bytes[4..])
    } else {
        let b = bytes[0];
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::FormatError(format!("bad header byte {b}")));
        }
        ((b - OFFSET) as usize, &bytes[1..])
    };
    if n == 0 || n > 64 {
        return Err(Error::FormatError(format!(
            "graph6 order {n} outside supported range 1..=64"
        )));
    }
    let nbits = triangle_bits(n);
    let expected = nbits.div_ceil(6);
    if payload.len() != expected {
        return Err(Error::FormatError(format!(
            "graph6 payload has {} bytes, expected {expected}",
            payload.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[pos / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(Error::FormatError(format!("bad payload byte {byte}")));
            }
            let b = (byte - OFFSET) >> (5 - pos % 6) & 1;
            if b == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            pos += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = payload[expected - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::FormatError("nonzero graph6 padding bits".into()));
        }
    }
    Ok(Graph::from_adj(n, adj))
}

/// DOT rendering. With `one_based` the printed labels start at 1,
/// matching the rest of the command-line output. Isolated vertices get
/// their own node statement so the order survives a round through dot.
pub fn to_dot(g: &Graph, one_based: bool) -> String {
    let shift = usize::from(one_based);
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {};\n", v + shift));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u + shift, v + shift));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Compact JSON: `{"n":4,"edges":[[0,1],[1,2]]}` with each pair
/// ordered u < v and the list ascending lexicographic.
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.order(),
        edges: g.edges(),
    };
    serde_json::to_string(&doc).expect("graph JSON serializes")
}

/// Parse the JSON schema above. Endpoint order inside a pair is not
/// significant on input; ids and order limits are enforced.
pub fn from_json(s: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(s).map_err(|e| Error::FormatError(format!("bad graph JSON: {e}")))?;
    if doc.n == 0 || doc.n > 64 {
        return Err(Error::InvalidOrder(doc.n));
    }
    Graph::from_edges(doc.n, &doc.edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path};

    #[test]
    fn fixed_vectors_for_one_and_two_vertices() {
        assert_eq!(encode_graph6(&complete(1).unwrap()), "@");
        assert_eq!(encode_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(decode_graph6("@").unwrap().order(), 1);
        let k2 = decode_graph6("A_").unwrap();
        assert_eq!(k2.order(), 2);
        assert!(k2.has_edge(0, 1));
    }

    #[test]
    fn round_trip_small_families() {
        for g in [
            path(7).unwrap(),
            cycle(5).unwrap(),
            complete(6).unwrap(),
            Graph::empty(11).unwrap(),
            path(63).unwrap(),
            cycle(64).unwrap(),
        ] {
            let enc = encode_graph6(&g);
            assert_eq!(decode_graph6(&enc).unwrap(), g, "through {enc}");
        }
    }

    #[test]
    fn long_form_header_used_above_62() {
        assert!(!encode_graph6(&path(62).unwrap()).starts_with('~'));
        assert!(encode_graph6(&path(63).unwrap()).starts_with('~'));
        assert!(encode_graph6(&path(64).unwrap()).starts_with('~'));
    }

    #[test]
    fn decode_rejects_malformed_input() {
        for bad in [
            "",
            " ",
            "?",          // order 0
            "B",          // missing payload
            "A",          // missing payload
            "A_extra",    // trailing bytes
            "A\x1f",      // payload byte below range
            "Aw",         // nonzero padding for n = 2
            "~~??????@?", // order beyond 64
            "~?B?",       // long-form order 130 > 64
        ] {
            assert!(
                matches!(decode_graph6(bad), Err(Error::FormatError(_))),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn decode_rejects_truncated_long_header() {
        assert!(matches!(decode_graph6("~B"), Err(Error::FormatError(_))));
    }

    #[test]
    fn dot_output_lists_edges_and_isolated_vertices() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let dot = to_dot(&g, true);
        assert_eq!(dot.matches("--").count(), 2);
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.contains("  4;"), "isolated vertex missing:\n{dot}");
        let zero = to_dot(&g, false);
        assert!(zero.contains("0 -- 1;"));
    }

    #[test]
    fn json_round_trip_and_schema_shape() {
        let g = complete(2).unwrap();
        assert_eq!(to_json(&g), r#"{"n":2,"edges":[[0,1]]}"#);
        let h = from_json(r#"{"n":3,"edges":[[2,0],[0,1]]}"#).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        assert!(matches!(
            from_json(r#"{"n":3,"edges":[[0,0]]}"#),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            from_json(r#"{"n":0,"edges":[]}"#),
            Err(Error::InvalidOrder(0))
        ));
        assert!(matches!(from_json("{"), Err(Error::FormatError(_))));
    }
}

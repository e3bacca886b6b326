//! graph6 codec, short form only: header byte n+63 for n <= 62, then the
//! upper triangle in column-major order (columns j = 1..n, rows i < j),
//! packed big-endian into 6-bit groups, each group offset by 63, final group
//! zero-padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, VERTEX_CAP};

/// Decode one graph6 line with the default vertex cap.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    decode_graph6_capped(text, VERTEX_CAP)
}

/// Decode one graph6 line, rejecting graphs larger than `cap`.
pub fn decode_graph6_capped(text: &str, cap: usize) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::G6Empty);
    }
    if bytes[0] == 126 {
        return Err(Error::G6LongForm);
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::G6BadByte { byte: bytes[0], pos: 0 });
    }
    let n = (bytes[0] - 63) as usize;
    if n > cap {
        return Err(Error::G6OverCap { n, cap });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != want {
        return Err(Error::G6BadLength { n, got: body.len(), want });
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::G6BadByte { byte: b, pos: i + 1 });
        }
    }

    let bit = |k: usize| -> bool {
        let byte = (body[k / 6] - 63) as u32;
        byte >> (5 - k % 6) & 1 == 1
    };
    // Padding bits beyond the triangle must be zero.
    for k in nbits..want * 6 {
        if bit(k) {
            return Err(Error::G6TrailingBits);
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encode a graph in short-form graph6. Only n <= 62 is representable.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::G6Unencodable { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    let mut push_bit = |out: &mut Vec<u8>, b: bool| {
        acc = acc << 1 | b as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    };
    for j in 1..n {
        for i in 0..j {
            push_bit(&mut out, g.has_edge(i, j));
        }
    }
    if !nbits.is_multiple_of(6) {
        let pad = 6 - nbits % 6;
        for _ in 0..pad {
            push_bit(&mut out, false);
        }
    }
    Ok(String::from_utf8(out).unwrap())
}

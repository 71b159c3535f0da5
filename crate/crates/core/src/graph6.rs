//! graph6 encoding (McKay), vertices mapped `0..n` <-> `1..=n`.

use crate::error::GraphError;
use crate::graph::Graph;

fn parse_err(message: impl Into<String>) -> GraphError {
    GraphError::Parse { line: 1, message: message.into() }
}

pub fn decode(s: &str) -> Result<Graph, GraphError> {
    let bytes = s.as_bytes();
    if bytes.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(parse_err(format!("invalid graph6 character in {s:?}")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err("empty graph6 string")),
        [126, 126, ..] => return Err(parse_err("graph6 sizes above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err("truncated graph6 size field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            (n, &rest[3..])
        }
        [c, rest @ ..] => ((c - 63) as usize, rest),
    };
    if n == 0 {
        return Err(parse_err("graph6 graph with zero vertices"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len())));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
            k += 1;
        }
    }
    Graph::new(n as u32, edges)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n() as usize;
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i as u32 + 1, j as u32 + 1) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // Triangle and the 4-cycle 1-2-3-4 as produced by nauty's geng/showg.
        assert_eq!(encode(&Graph::triangle()), "Bw");
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(encode(&c4), "Cl");
        assert_eq!(decode("Bw").unwrap(), Graph::triangle());
        assert_eq!(decode("Cl").unwrap(), c4);
    }

    #[test]
    fn large_size_field() {
        let g = Graph::new(70, [(1, 70), (3, 4)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err());
        assert!(decode("Bww").is_err());
        assert!(decode("B\u{7f}").is_err());
    }
}

use std::fmt::Write;

use gbhard_core::problems::DirectedGraph;

use super::{content_lines, parse_numbers, ParseError};

/// `<num_vertices> <num_edges>` then one 0-based `<src> <dst>` per line.
/// Edge order is kept; parallel edges are allowed, self-loops are not.
/// Blank lines and `#` comments are skipped.
pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing `<num_vertices> <num_edges>` header"))?;
    let [n, e] = parse_numbers::<2>(hl, header, "`<num_vertices> <num_edges>`")?;
    let n = n as usize;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let [s, d] = parse_numbers::<2>(no, line, "an edge `<src> <dst>`")?;
        for v in [s, d] {
            if v as usize >= n {
                return Err(ParseError::new(
                    no,
                    format!("vertex {v} out of range for {n} vertices"),
                ));
            }
        }
        if s == d {
            return Err(ParseError::new(no, format!("self-loop on vertex {s}")));
        }
        edges.push((s as usize, d as usize));
    }
    if edges.len() as u64 != e {
        return Err(ParseError::new(
            hl,
            format!("header declares {e} edges, found {}", edges.len()),
        ));
    }
    DirectedGraph::new(n, edges).map_err(|err| ParseError::new(hl, err.to_string()))
}

pub fn write_graph(g: &DirectedGraph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (s, d) in g.edges() {
        writeln!(out, "{s} {d}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges_kept() {
        let g = parse_graph("2 3\n0 1\n0 1\n1 0").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (1, 0)]);
    }

    #[test]
    fn errors() {
        let e = parse_graph("1 1\n0 0").unwrap_err();
        assert_eq!((e.line, e.message.as_str()), (2, "self-loop on vertex 0"));
        assert_eq!(parse_graph("2 1\n0 2").unwrap_err().line, 2);
        assert_eq!(parse_graph("3 4\n0 1\n1 2\n2 0").unwrap_err().line, 1);
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn triangle_round_trip() {
        let text = "3 3\n0 1\n1 2\n2 0\n";
        assert_eq!(write_graph(&parse_graph(text).unwrap()), text);
    }
}

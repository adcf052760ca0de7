//! Canonical edge-list text format and DOT export.
//!
//! ```text
//! # fibcube family=O p=2 r=2 n=4
//! 8 10
//! 0000
//! ...
//! 0 1
//! ...
//! ```
//!
//! Graphs without cube parameters use the header `# fibcube graph` and have
//! no label lines. Output is ASCII with `\n` line endings and is stable byte
//! for byte.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};
use crate::words::{CubeParams, Family, Word};

const MAGIC: &str = "# fibcube";

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let labels = g.origin().zip(g.labels());
    match labels {
        Some((params, _)) => writeln!(out, "{MAGIC} {params}").unwrap(),
        None => writeln!(out, "{MAGIC} graph").unwrap(),
    }
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    if let Some((_, words)) = labels {
        for w in words {
            writeln!(out, "{w}").unwrap();
        }
    }
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

/// Parses the canonical edge-list format. Edge lines may come in any order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };

    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let rest = header
        .strip_prefix(MAGIC)
        .ok_or_else(|| err(1, "expected '# fibcube' header"))?
        .trim();
    let params = if rest == "graph" {
        None
    } else {
        Some(parse_params(rest).map_err(|msg| err(1, &msg))?)
    };

    let (line, counts) = lines.next().ok_or_else(|| err(2, "missing counts line"))?;
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| err(line, "expected '<vertices> <edges>'"))?;
    let [vertex_count, edge_count] = counts[..] else {
        return Err(err(line, "expected '<vertices> <edges>'"));
    };

    let mut labels = Vec::new();
    if let Some(params) = params {
        for _ in 0..vertex_count {
            let (line, text) = lines
                .next()
                .ok_or_else(|| err(line, "missing label line"))?;
            let word: Word = text
                .trim()
                .parse()
                .map_err(|e: Error| err(line, &e.to_string()))?;
            if word.len() != params.n {
                return Err(err(line, "label length differs from n"));
            }
            labels.push(word);
        }
    }

    let mut edges = Vec::with_capacity(edge_count);
    let mut last = line;
    for _ in 0..edge_count {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(last + 1, "missing edge line"))?;
        last = line;
        let ends: Vec<usize> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(line, "expected '<u> <v>'"))?;
        let [u, v] = ends[..] else {
            return Err(err(line, "expected '<u> <v>'"));
        };
        edges.push((u, v));
    }
    if let Some((line, text)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(line, &format!("unexpected trailing content {text:?}")));
    }

    let mut g = Graph::from_edges(vertex_count, edges).map_err(|e| err(last, &e.to_string()))?;
    if let Some(params) = params {
        g = g.with_labels(labels).map_err(|e| err(2, &e.to_string()))?;
        g.origin = Some(params);
    }
    Ok(g)
}

fn parse_params(s: &str) -> std::result::Result<CubeParams, String> {
    let mut family = None;
    let (mut p, mut r, mut n) = (None, None, None);
    for field in s.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| format!("malformed header field {field:?}"))?;
        let number = || {
            value
                .parse::<usize>()
                .map_err(|_| format!("bad number in {field:?}"))
        };
        match key {
            "family" => family = Some(value.parse::<Family>().map_err(|e| e.to_string())?),
            "p" => p = Some(number()?),
            "r" => r = Some(number()?),
            "n" => n = Some(number()?),
            _ => return Err(format!("unknown header field {key:?}")),
        }
    }
    match (family, p, r, n) {
        (Some(f), Some(p), Some(r), Some(n)) => {
            CubeParams::new(f, p, r, n).map_err(|e| e.to_string())
        }
        _ => Err("header needs family, p, r and n".into()),
    }
}

/// Graphviz rendering; vertices are named by their word label when present.
pub fn to_dot(g: &Graph) -> String {
    let name = |v: usize| match g.label(v) {
        Some(w) => format!("\"{w}\""),
        None => v.to_string(),
    };
    let mut out = String::from("graph fibcube {\n");
    if let Some(params) = g.origin() {
        writeln!(out, "  label=\"{params}\";").unwrap();
    }
    for v in 0..g.vertex_count() {
        writeln!(out, "  {};", name(v)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {};", name(e.u), name(e.v)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cube;

    #[test]
    fn golden_cube_file() {
        let g = build_cube(CubeParams::o(2, 1, 3).unwrap());
        let expected = "# fibcube family=O p=2 r=1 n=3\n\
                        4 3\n\
                        000\n001\n010\n100\n\
                        0 1\n0 2\n0 3\n";
        assert_eq!(to_edge_list(&g), expected);
        assert_eq!(parse_edge_list(expected).unwrap(), g);
    }

    #[test]
    fn empty_word_cube() {
        let g = build_cube(CubeParams::i(1, 1, 0).unwrap());
        let text = to_edge_list(&g);
        assert_eq!(text, "# fibcube family=I p=1 r=1 n=0\n1 0\n\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn unlabeled_round_trip() {
        let g = Graph::cycle(5);
        let text = to_edge_list(&g);
        assert!(text.starts_with("# fibcube graph\n5 5\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        // edge order on input is free
        let shuffled = "# fibcube graph\n3 2\n2 1\n1 0\n";
        assert_eq!(parse_edge_list(shuffled).unwrap(), Graph::path(3));
    }

    #[test]
    fn round_trip_over_grid() {
        for family in [Family::O, Family::I] {
            for n in 0..=7 {
                let g = build_cube(CubeParams::new(family, 2, 2, n).unwrap());
                assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = [
            ("", 1),
            ("graph\n", 1),
            ("# fibcube graph\n3\n", 2),
            ("# fibcube graph\n3 1\n0 0\n", 3),
            ("# fibcube graph\n3 2\n0 1\n", 4),
            ("# fibcube graph\n2 1\n0 1\nextra\n", 4),
            ("# fibcube family=O p=2 r=1 n=2\n3 0\n00\n01\n1\n", 5),
            ("# fibcube family=Q p=2 r=1 n=2\n1 0\n00\n", 1),
        ];
        for (text, line) in bad {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn dot_uses_labels() {
        let dot = to_dot(&build_cube(CubeParams::o(1, 1, 2).unwrap()));
        assert!(dot.contains("\"00\" -- \"01\";"));
        assert!(dot.ends_with("}\n"));
        assert!(to_dot(&Graph::path(2)).contains("0 -- 1;"));
    }
}

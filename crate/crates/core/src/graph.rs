//! Simple undirected graphs, the named families used throughout the crate,
//! and the plain-text edge-list format.
//!
//! Vertices are always `0..n`. Product families label vertex `(i, j)` of
//! `G □ H` (with `0 <= i < |G|`, `0 <= j < |H|`) as `i * |H| + j`, so a
//! 1-based grid vertex `(i, j)` of `P_n □ P_m` becomes `(i - 1) * m + (j - 1)`.
//! Path vertex `i` in `1..=n` becomes `i - 1`; cycle vertices keep their
//! labels `0..n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Named graph families that can be generated directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `P_rows □ P_cols`; the prism `P_n □ P_2` is `Grid { rows: n, cols: 2 }`.
    Grid { rows: usize, cols: usize },
    /// `P_rows □ C_cols`.
    Cylinder { rows: usize, cols: usize },
    /// `C_rows □ C_cols`.
    Torus { rows: usize, cols: usize },
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => n,
            Family::Grid { rows, cols }
            | Family::Cylinder { rows, cols }
            | Family::Torus { rows, cols } => rows * cols,
        }
    }

    /// Grid coordinates `(row, col)` of a vertex when the family is a grid.
    pub fn grid_coords(&self, v: usize) -> Option<(usize, usize)> {
        match *self {
            Family::Grid { cols, .. } => Some((v / cols, v % cols)),
            Family::Path { .. } => Some((v, 0)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::Grid { rows, cols: 2 } => write!(f, "prism:{rows}"),
            Family::Grid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
            Family::Cylinder { rows, cols } => write!(f, "cylinder:{rows}x{cols}"),
            Family::Torus { rows, cols } => write!(f, "torus:{rows}x{cols}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadFamily {
            descriptor: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = s.split_once(':').ok_or_else(|| bad("expected `name:params`"))?;
        let size = |t: &str| -> Result<usize> {
            let v: usize = t.trim().parse().map_err(|_| bad("sizes must be positive integers"))?;
            if v == 0 {
                return Err(bad("sizes must be positive"));
            }
            Ok(v)
        };
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(['x', 'X']).ok_or_else(|| bad("expected `NxM`"))?;
            Ok((size(a)?, size(b)?))
        };
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "path" => Family::Path { n: size(params)? },
            "cycle" => Family::Cycle { n: size(params)? },
            "complete" => Family::Complete { n: size(params)? },
            "grid" => {
                let (rows, cols) = pair(params)?;
                Family::Grid { rows, cols }
            }
            "prism" => Family::Grid { rows: size(params)?, cols: 2 },
            "cylinder" => {
                let (rows, cols) = pair(params)?;
                Family::Cylinder { rows, cols }
            }
            "torus" => {
                let (rows, cols) = pair(params)?;
                Family::Torus { rows, cols }
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        match family {
            Family::Cycle { n } if n < 3 => Err(bad("cycles need at least 3 vertices")),
            Family::Cylinder { cols, .. } if cols < 3 => Err(bad("cycle factor needs at least 3 vertices")),
            Family::Torus { rows, cols } if rows < 3 || cols < 3 => {
                Err(bad("cycle factors need at least 3 vertices"))
            }
            f => Ok(f),
        }
    }
}

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    family: Option<Family>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Graph { adj, family: None })
    }

    pub fn family(family: Family) -> Result<Self> {
        let edges = family_edges(family);
        let mut g = Graph::new(family.order(), &edges)?;
        g.family = Some(family);
        Ok(g)
    }

    /// Parses a descriptor such as `path:14`, `cycle:16` or `grid:3x3`.
    pub fn from_descriptor(descriptor: &str) -> Result<Self> {
        Graph::family(descriptor.parse()?)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn family_tag(&self) -> Option<Family> {
        self.family
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Subgraph induced on `keep` (any order, duplicates ignored), relabelled
    /// to `0..keep.len()` in ascending order of the original labels. Also
    /// returns the new-to-old label map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut old: Vec<usize> = keep.to_vec();
        old.sort_unstable();
        old.dedup();
        let n = self.n();
        if let Some(&bad) = old.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut new_of = vec![usize::MAX; n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|(u, v)| (new_of[u], new_of[v]))
            .collect();
        Ok((Graph::new(old.len(), &edges)?, old))
    }

    /// Plain edge-list text: `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format. `#` starts a comment; blank lines are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            reason: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                reason: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let err = |reason: String| Error::Parse { line, reason };
    if fields.len() != 2 {
        return Err(err(format!("expected two integers, got `{text}`")));
    }
    let a = fields[0].parse().map_err(|_| err(format!("bad integer `{}`", fields[0])))?;
    let b = fields[1].parse().map_err(|_| err(format!("bad integer `{}`", fields[1])))?;
    Ok((a, b))
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(n);
    if n >= 3 {
        e.push((n - 1, 0));
    }
    e
}

fn product_edges(
    n: usize,
    first: &[(usize, usize)],
    m: usize,
    second: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(first.len() * m + second.len() * n);
    for &(a, b) in first {
        for j in 0..m {
            edges.push((a * m + j, b * m + j));
        }
    }
    for i in 0..n {
        for &(a, b) in second {
            edges.push((i * m + a, i * m + b));
        }
    }
    edges
}

fn family_edges(family: Family) -> Vec<(usize, usize)> {
    match family {
        Family::Path { n } => path_edges(n),
        Family::Cycle { n } => cycle_edges(n),
        Family::Complete { n } => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Grid { rows, cols } => {
            product_edges(rows, &path_edges(rows), cols, &path_edges(cols))
        }
        Family::Cylinder { rows, cols } => {
            product_edges(rows, &path_edges(rows), cols, &cycle_edges(cols))
        }
        Family::Torus { rows, cols } => {
            product_edges(rows, &cycle_edges(rows), cols, &cycle_edges(cols))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn small_graphs() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.edge_count(), 1);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.neighbors(0), &[1, 2]);
        // a 5-cycle with the edge {4, 0} removed is P_5
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.degrees(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn family_edge_counts() {
        assert_eq!(Graph::from_descriptor("path:14").unwrap().edge_count(), 13);
        assert_eq!(Graph::from_descriptor("cycle:16").unwrap().edge_count(), 16);
        let g = Graph::from_descriptor("grid:3x3").unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        for (n, m) in [(1, 1), (2, 5), (4, 3), (7, 2)] {
            let g = Graph::family(Family::Grid { rows: n, cols: m }).unwrap();
            assert_eq!(g.edge_count(), n * (m - 1) + m * (n - 1));
        }
        assert_eq!(Graph::from_descriptor("complete:5").unwrap().edge_count(), 10);
        assert_eq!(Graph::from_descriptor("torus:3x4").unwrap().edge_count(), 24);
        assert_eq!(Graph::from_descriptor("cylinder:2x4").unwrap().edge_count(), 12);
        assert_eq!(Graph::from_descriptor("prism:5").unwrap().n(), 10);
    }

    #[test]
    fn adjacency_invariants() {
        for d in ["path:6", "cycle:7", "grid:3x4", "cylinder:3x5", "torus:4x3", "complete:4"] {
            let g = Graph::from_descriptor(d).unwrap();
            for u in 0..g.n() {
                let ns = g.neighbors(u);
                assert!(ns.windows(2).all(|w| w[0] < w[1]), "{d}");
                assert!(!ns.contains(&u));
                for &v in ns {
                    assert!(g.has_edge(v, u));
                }
            }
        }
    }

    #[test]
    fn descriptor_errors() {
        assert!(matches!(Graph::from_descriptor("star:5"), Err(Error::UnknownFamily(_))));
        assert!(matches!(Graph::from_descriptor("path:0"), Err(Error::BadFamily { .. })));
        assert!(matches!(Graph::from_descriptor("path"), Err(Error::BadFamily { .. })));
        assert!(matches!(Graph::from_descriptor("cycle:2"), Err(Error::BadFamily { .. })));
        assert!(matches!(Graph::from_descriptor("grid:3"), Err(Error::BadFamily { .. })));
    }

    #[test]
    fn descriptor_display_round_trips() {
        for d in ["path:3", "cycle:5", "complete:2", "grid:3x4", "prism:6", "cylinder:2x3", "torus:3x3"] {
            let f: Family = d.parse().unwrap();
            assert_eq!(f.to_string(), d);
        }
    }

    #[test]
    fn edge_list_round_trip_and_comments() {
        let text = "# a triangle\n3 3\n0 1\n1 2 # closing\n\n2 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c6 = Graph::from_descriptor("cycle:6").unwrap();
        let (h, map) = c6.induced_subgraph(&[5, 0, 1]).unwrap();
        assert_eq!(map, vec![0, 1, 5]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(0, 2) && h.has_edge(0, 1));
    }
}

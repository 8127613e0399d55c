//! Graphviz DOT and CSV renderings of graphs with a marked vertex set.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::types::VertexSet;

/// Undirected DOT graph; marked vertices are drawn filled. Grid-family
/// vertices get pinned positions so that `neato -n` reproduces the layout.
pub fn to_dot(g: &Graph, marked: &VertexSet) -> String {
    let family = g.family_tag();
    let mut out = String::from("graph G {\n  node [shape=circle, width=0.3, fixedsize=true, label=\"\"];\n");
    for v in 0..g.n() {
        write!(out, "  {v} [").unwrap();
        if marked.contains(v) {
            out.push_str("style=filled, fillcolor=black");
        } else {
            out.push_str("style=solid");
        }
        if let Some((row, col)) = family.and_then(|f| f.grid_coords(v)) {
            write!(out, ", pos=\"{},{}!\"", row * 60, col * 60).unwrap();
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One vertex per line under a `vertex` header; grid-family graphs also get
/// `row,col` columns.
pub fn vertex_list_csv(g: &Graph, set: &VertexSet) -> String {
    let family = g.family_tag().filter(|f| f.grid_coords(0).is_some());
    let mut out = String::from(if family.is_some() { "vertex,row,col\n" } else { "vertex\n" });
    for v in set.iter() {
        match family.and_then(|f| f.grid_coords(v)) {
            Some((row, col)) => writeln!(out, "{v},{row},{col}").unwrap(),
            None => writeln!(out, "{v}").unwrap(),
        }
    }
    out
}

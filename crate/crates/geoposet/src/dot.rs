//! Graphviz output for Hasse diagrams.

use std::collections::BTreeMap;
use std::fmt::Write;

/// A digraph with one node per class labeled `"id (cr)"`, cover edges from
/// lower to upper class, and classes of equal crossing count on one rank.
pub fn hasse_dot(name: &str, ids: &[String], cr: &[usize], covers: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{name}\" {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (id, c) in ids.iter().zip(cr) {
        let _ = writeln!(out, "  \"{id}\" [label=\"{id} ({c})\"];");
    }
    let mut ranks: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for (id, &c) in ids.iter().zip(cr) {
        ranks.entry(c).or_default().push(id);
    }
    for nodes in ranks.values() {
        let list: Vec<String> = nodes.iter().map(|id| format!("\"{id}\"")).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", list.join("; "));
    }
    let mut edges = covers.to_vec();
    edges.sort_unstable();
    for (a, b) in edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", ids[a], ids[b]);
    }
    out.push_str("}\n");
    out
}

//! Graphviz DOT export.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::io::Structure;

#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    /// Elements drawn as open circles (e.g. the elements added by a completion).
    pub added: Vec<usize>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn name(labels: Option<&[String]>, v: usize) -> String {
    labels.map_or_else(|| v.to_string(), |l| l[v].clone())
}

fn ranks(out: &mut String, groups: BTreeMap<i64, Vec<usize>>) {
    for members in groups.values() {
        let ids: Vec<String> = members.iter().map(|v| format!("n{v}")).collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
}

/// Deterministic DOT text. Posets are Hasse diagrams ranked by height,
/// bipartite graphs are ranked by side, and digraphs by level when graded.
pub fn export_dot(s: &Structure, opts: &DotOptions) -> String {
    let mut out = String::new();
    let (keyword, n) = match s {
        Structure::Poset(p) => ("digraph", p.len()),
        Structure::Bipartite(g) => ("graph", g.len()),
        Structure::Digraph(d) => ("digraph", d.len()),
    };
    writeln!(out, "{keyword} G {{").unwrap();
    if n == 0 {
        out.push_str("}\n");
        return out;
    }
    let labels = s.labels();
    match s {
        Structure::Poset(_) => out.push_str("  rankdir=BT;\n"),
        Structure::Bipartite(_) => out.push_str("  rankdir=BT;\n"),
        Structure::Digraph(_) => out.push_str("  rankdir=TB;\n"),
    }
    out.push_str("  node [shape=circle, style=filled, fillcolor=gray20, fontcolor=white];\n");
    for v in 0..n {
        let mut attrs = vec![format!("label={}", quote(&name(labels, v)))];
        if opts.added.contains(&v) {
            attrs.push("style=solid, fontcolor=black".into());
        }
        if let Structure::Digraph(d) = s {
            if d.is_boundary(v) {
                attrs.push("style=dashed, fontcolor=black".into());
            }
        }
        writeln!(out, "  n{v} [{}];", attrs.join(", ")).unwrap();
    }
    match s {
        Structure::Poset(p) => {
            for (a, b) in p.covers() {
                writeln!(out, "  n{a} -> n{b} [arrowhead=none];").unwrap();
            }
            let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (v, h) in p.heights().into_iter().enumerate() {
                groups.entry(h as i64).or_default().push(v);
            }
            ranks(&mut out, groups);
        }
        Structure::Bipartite(g) => {
            for (a, b) in g.edges() {
                writeln!(out, "  n{a} -- n{b};").unwrap();
            }
            let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for v in 0..n {
                groups.entry(i64::from(g.side(v) == lattice_loom::Side::Upper)).or_default().push(v);
            }
            ranks(&mut out, groups);
        }
        Structure::Digraph(d) => {
            for &(a, b) in d.arcs() {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
            if let Some(levels) = d.levels() {
                let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
                for (v, &l) in levels.iter().enumerate() {
                    groups.entry(-l).or_default().push(v);
                }
                ranks(&mut out, groups);
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_loom::Poset;

    #[test]
    fn empty_poset_is_an_empty_block() {
        let s = Structure::Poset(Poset::antichain(0));
        assert_eq!(export_dot(&s, &DotOptions::default()), "digraph G {\n}\n");
    }

    #[test]
    fn added_nodes_are_open() {
        let s = Structure::Poset(Poset::chain(3));
        let text = export_dot(&s, &DotOptions { added: vec![1] });
        assert!(text.contains("n1 [label=\"1\", style=solid"));
        assert!(text.contains("n0 -> n1"));
        assert_eq!(text.matches("rank=same").count(), 3);
    }
}

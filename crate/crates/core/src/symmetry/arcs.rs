//! s-arcs and (local) s-arc-transitivity.

use super::{automorphism_group, map_tuple, stabilizer, AutMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcOrbitReport {
    pub s: usize,
    pub arc_count: usize,
    /// Orbits of the full automorphism group on all s-arcs.
    pub orbit_count: usize,
    /// Per vertex: orbits on the s-arcs starting there (of the whole group
    /// for the global test, of the vertex stabilizer for the local one).
    pub per_vertex: Vec<usize>,
    pub verdict: bool,
}

/// All s-arcs `v0 .. vs` with consecutive vertices adjacent and `v_i != v_{i+2}`.
pub fn s_arcs(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(s + 1);
    for v in 0..g.len() {
        path.push(v);
        grow(g, s, &mut path, &mut out);
        path.pop();
    }
    out
}

fn grow(g: &Graph, s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if path.len() == s + 1 {
        out.push(path.clone());
        return;
    }
    let last = path[path.len() - 1];
    let back = (path.len() >= 2).then(|| path[path.len() - 2]);
    for &w in g.neighbors(last) {
        if Some(w) != back {
            path.push(w);
            grow(g, s, path, out);
            path.pop();
        }
    }
}

/// Whether `Aut(g)` has a single orbit on s-arcs.
pub fn is_s_arc_transitive(g: &Graph, s: usize) -> Result<ArcOrbitReport> {
    let arcs = s_arcs(g, s);
    if arcs.is_empty() {
        return Err(Error::NoArcs(s));
    }
    let grp = automorphism_group(g, AutMode::Graph);
    let ids = grp.orbit_ids(&arcs, |t, p| map_tuple(t, p));
    let orbit_count = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut per: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
    for (a, &id) in arcs.iter().zip(&ids) {
        per[a[0]].push(id);
    }
    let per_vertex = per
        .into_iter()
        .map(|mut v| {
            v.sort_unstable();
            v.dedup();
            v.len()
        })
        .collect();
    Ok(ArcOrbitReport {
        s,
        arc_count: arcs.len(),
        orbit_count,
        per_vertex,
        verdict: orbit_count == 1,
    })
}

/// Whether every vertex stabilizer `G_v` is transitive on the s-arcs starting at `v`.
///
/// Vertices in one `Aut(g)`-orbit have conjugate stabilizers, so one
/// stabilizer is computed per orbit.
pub fn is_locally_s_arc_transitive(g: &Graph, s: usize) -> Result<ArcOrbitReport> {
    let arcs = s_arcs(g, s);
    if arcs.is_empty() {
        return Err(Error::NoArcs(s));
    }
    let grp = automorphism_group(g, AutMode::Graph);
    let orbit_count = grp.orbit_count(&arcs, |t, p| map_tuple(t, p));
    let mut by_start: Vec<Vec<Vec<usize>>> = vec![Vec::new(); g.len()];
    for a in &arcs {
        by_start[a[0]].push(a.clone());
    }
    let mut per_vertex = vec![0; g.len()];
    for orbit in grp.orbits() {
        let v = orbit[0];
        let count = if by_start[v].is_empty() {
            0
        } else {
            let stab = stabilizer(g, AutMode::Graph, &[v]);
            stab.orbit_count(&by_start[v], |t, p| map_tuple(t, p))
        };
        for &w in &orbit {
            per_vertex[w] = count;
        }
    }
    let verdict = per_vertex.iter().all(|&c| c <= 1);
    Ok(ArcOrbitReport {
        s,
        arc_count: arcs.len(),
        orbit_count,
        per_vertex,
        verdict,
    })
}

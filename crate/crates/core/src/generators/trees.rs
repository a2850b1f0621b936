//! Truncated directed trees and the DL-digraphs built over them.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::symmetry::{automorphism_group, map_tuple, AutMode};

/// Truncation of the directed tree in which every vertex has `m` in-neighbours
/// and `n` out-neighbours.
///
/// Grown breadth-first from the base arc `0 -> 1` (levels 0 and -1). Vertices
/// at undirected distance less than `radius` from the base arc are completed
/// (in-neighbours first); those at distance exactly `radius` are boundary.
pub fn directed_tree(m: usize, n: usize, radius: usize) -> Result<Digraph> {
    if m < 2 || n < 2 {
        return Err(Error::BadParams(format!("directed tree needs in- and out-valency >= 2, got ({m}, {n})")));
    }
    grow_tree(m, n, radius)
}

fn grow_tree(m: usize, n: usize, radius: usize) -> Result<Digraph> {
    if radius < 1 {
        return Err(Error::BadParams("radius must be at least 1".into()));
    }
    if m < 1 || n < 1 {
        return Err(Error::BadParams(format!("valencies must be positive, got ({m}, {n})")));
    }
    let estimate = (m + n).saturating_pow(radius as u32).saturating_mul(2);
    if estimate > 5_000_000 {
        return Err(Error::BadParams(format!("tree with valencies ({m}, {n}) and radius {radius} is too large")));
    }
    let mut arcs = vec![(0, 1)];
    let mut level = vec![0i64, -1];
    let mut dist = vec![0usize, 0];
    let mut indeg = vec![0usize, 1];
    let mut outdeg = vec![1usize, 0];
    let mut queue: VecDeque<usize> = VecDeque::from([0, 1]);
    while let Some(v) = queue.pop_front() {
        let (need_in, need_out) = (m - indeg[v], n - outdeg[v]);
        let mut add = |up: bool| {
            let w = level.len();
            level.push(if up { level[v] + 1 } else { level[v] - 1 });
            dist.push(dist[v] + 1);
            if up {
                arcs.push((w, v));
                indeg.push(0);
                outdeg.push(1);
            } else {
                arcs.push((v, w));
                indeg.push(1);
                outdeg.push(0);
            }
            w
        };
        let mut fresh = Vec::new();
        for _ in 0..need_in {
            fresh.push(add(true));
        }
        for _ in 0..need_out {
            fresh.push(add(false));
        }
        indeg[v] = m;
        outdeg[v] = n;
        queue.extend(fresh.into_iter().filter(|&w| dist[w] < radius));
    }
    let boundary: Vec<usize> = (0..level.len()).filter(|&v| dist[v] == radius).collect();
    let labels = (0..level.len()).map(|v| format!("t{v}")).collect();
    Digraph::new(level.len(), &arcs)?
        .with_levels(level)?
        .with_boundary(&boundary)
        .map(|d| d.with_labels(labels))
}

/// How the in- and out-neighbours of each tree vertex are matched with the
/// two sides of the pattern graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BijectionPolicy {
    /// Neighbours in increasing id order.
    #[default]
    Sorted,
    /// Neighbours shuffled independently at each vertex.
    Shuffled(u64),
}

/// [`dl_construction_with`] using sorted bijections.
pub fn dl_construction(delta: &BipartiteGraph, radius: usize) -> Result<Digraph> {
    dl_construction_with(delta, radius, BijectionPolicy::Sorted)
}

/// Truncated DL-digraph of a connected edge-transitive bipartite graph.
///
/// The underlying tree has in-valency `|upper(delta)|` and out-valency
/// `|lower(delta)|`. Vertices are the tree arcs; `(a, b) -> (b, d)` is an arc
/// when the upper vertex matched with `a` at `b` is adjacent to the lower
/// vertex matched with `d` at `b`. Arcs are only added at completed tree
/// vertices, and tree arcs touching the tree boundary are boundary.
pub fn dl_construction_with(delta: &BipartiteGraph, radius: usize, policy: BijectionPolicy) -> Result<Digraph> {
    let upper = delta.upper();
    let lower = delta.lower();
    if upper.is_empty() || lower.is_empty() || !delta.is_connected() {
        return Err(Error::NotConnected);
    }
    let grp = automorphism_group(delta, AutMode::OrderPreserving);
    let edges: Vec<Vec<usize>> = delta.edges().iter().map(|&(x, y)| vec![x, y]).collect();
    if grp.orbit_count(&edges, |t, p| map_tuple(t, p)) != 1 {
        return Err(Error::NotOneArcTransitive);
    }
    let tree = grow_tree(upper.len(), lower.len(), radius)?;
    let tlevel = tree.levels().expect("tree is graded");
    let tarcs = tree.arcs();
    let mut rng = match policy {
        BijectionPolicy::Sorted => None,
        BijectionPolicy::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut arcs = Vec::new();
    for b in (0..tree.len()).filter(|&b| !tree.is_boundary(b)) {
        let mut ins = tree.in_neighbors(b).to_vec();
        let mut outs = tree.out_neighbors(b).to_vec();
        if let Some(rng) = rng.as_mut() {
            ins.shuffle(rng);
            outs.shuffle(rng);
        }
        for (i, &a) in ins.iter().enumerate() {
            let from = tree.arc_index(a, b).expect("tree arc");
            for (j, &d) in outs.iter().enumerate() {
                if delta.adjacent(upper[i], lower[j]) {
                    arcs.push((from, tree.arc_index(b, d).expect("tree arc")));
                }
            }
        }
    }
    let level: Vec<i64> = tarcs.iter().map(|&(_, b)| tlevel[b]).collect();
    let boundary: Vec<usize> = (0..tarcs.len())
        .filter(|&i| tree.is_boundary(tarcs[i].0) || tree.is_boundary(tarcs[i].1))
        .collect();
    let labels = tarcs.iter().map(|&(a, b)| format!("t{a}t{b}")).collect();
    Digraph::new(tarcs.len(), &arcs)?
        .with_levels(level)?
        .with_boundary(&boundary)
        .map(|d| d.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, crown};
    use crate::symmetry::isomorphic;

    #[test]
    fn smallest_tree() {
        let t = directed_tree(2, 2, 1).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t.arcs().len(), 7);
        assert_eq!(t.boundary().len(), 6);
        for v in [0, 1] {
            assert_eq!(t.in_neighbors(v).len(), 2);
            assert_eq!(t.out_neighbors(v).len(), 2);
        }
        assert!(matches!(directed_tree(1, 2, 2), Err(Error::BadParams(_))));
        assert!(matches!(directed_tree(2, 2, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn interior_valencies() {
        let t = directed_tree(3, 2, 3).unwrap();
        assert!(t.is_connected());
        assert_eq!(t.arcs().len() + 1, t.len());
        for v in (0..t.len()).filter(|&v| !t.is_boundary(v)) {
            assert_eq!(t.in_neighbors(v).len(), 3);
            assert_eq!(t.out_neighbors(v).len(), 2);
        }
        for v in t.boundary() {
            assert_eq!(t.in_neighbors(v).len() + t.out_neighbors(v).len(), 1);
        }
    }

    #[test]
    fn dl_of_square() {
        let k22 = complete_bipartite(2, 2).unwrap();
        let d = dl_construction(&k22, 2).unwrap();
        for v in (0..d.len()).filter(|&v| !d.is_boundary(v)) {
            assert_eq!(d.out_neighbors(v).len(), 2);
            assert_eq!(d.in_neighbors(v).len(), 2);
        }
    }

    #[test]
    fn bijection_choice_is_irrelevant() {
        let c6 = crown(3).unwrap();
        let a = dl_construction_with(&c6, 2, BijectionPolicy::Sorted).unwrap();
        for seed in [1, 2, 3] {
            let b = dl_construction_with(&c6, 2, BijectionPolicy::Shuffled(seed)).unwrap();
            assert!(isomorphic(&a, &b, AutMode::OrderPreserving));
        }
    }

    #[test]
    fn pattern_must_be_edge_transitive() {
        // Path x0 - y0 - x1 - y1 - x2: end edges and middle edges differ.
        let path = BipartiteGraph::from_parts(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        assert_eq!(dl_construction(&path, 2), Err(Error::NotOneArcTransitive));
        let split = BipartiteGraph::from_parts(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(dl_construction(&split, 2), Err(Error::NotConnected));
    }
}

//! Automorphism groups, isomorphism tests and the transitivity predicates
//! built on them.
//!
//! Every structure is first turned into a [`ColoredDigraph`]; automorphisms
//! and isomorphisms are computed on that common form by individualization and
//! colour refinement.

mod arcs;
mod cs;
mod refine;
mod search;

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::graph::{BipartiteGraph, Graph};
use crate::poset::Poset;
use crate::util::UnionFind;

pub use arcs::{is_locally_s_arc_transitive, is_s_arc_transitive, s_arcs, ArcOrbitReport};
pub use cs::{connected_subsets, is_k_cs_homogeneous, is_k_cs_transitive};
pub use search::find_isomorphism;

/// Which structure-preserving maps count as automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutMode {
    /// Maps preserving the order (or arc direction); levels cannot be swapped.
    OrderPreserving,
    /// Maps preserving the underlying undirected graph; the two sides of a
    /// bipartite graph may be exchanged.
    Graph,
}

/// Vertex-coloured digraph on `0..n`; automorphisms preserve colours and arcs.
#[derive(Debug, Clone)]
pub struct ColoredDigraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    colors: Vec<u32>,
    adj: Vec<FixedBitSet>,
}

impl ColoredDigraph {
    pub fn new(n: usize, arcs: &[(usize, usize)], colors: Vec<u32>) -> Self {
        assert_eq!(colors.len(), n, "one colour per vertex");
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(a, b) in arcs {
            if !adj[a].put(b) {
                out[a].push(b);
                inn[b].push(a);
            }
        }
        ColoredDigraph {
            n,
            out,
            inn,
            colors,
            adj,
        }
    }

    /// Undirected graph: each edge becomes a pair of opposite arcs.
    pub fn undirected(n: usize, edges: &[(usize, usize)], colors: Vec<u32>) -> Self {
        let arcs: Vec<_> = edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        Self::new(n, &arcs, colors)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Whether `perm` maps colours to equal colours and arcs onto arcs.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        is_isomorphism(self, self, perm)
    }
}

pub(crate) fn is_isomorphism(a: &ColoredDigraph, b: &ColoredDigraph, map: &[usize]) -> bool {
    if a.n != b.n || map.len() != a.n || a.arc_count() != b.arc_count() {
        return false;
    }
    let mut hit = FixedBitSet::with_capacity(a.n);
    for v in 0..a.n {
        if map[v] >= a.n || hit.put(map[v]) || a.colors[v] != b.colors[map[v]] {
            return false;
        }
    }
    (0..a.n).all(|v| a.out[v].iter().all(|&w| b.has_arc(map[v], map[w])))
}

/// Structures that can be handed to the automorphism search.
pub trait ToColoredDigraph {
    fn to_colored_digraph(&self, mode: AutMode) -> ColoredDigraph;
}

impl ToColoredDigraph for ColoredDigraph {
    fn to_colored_digraph(&self, _mode: AutMode) -> ColoredDigraph {
        self.clone()
    }
}

impl ToColoredDigraph for Poset {
    /// Order-preserving maps are the automorphisms of the Hasse digraph.
    fn to_colored_digraph(&self, mode: AutMode) -> ColoredDigraph {
        let colors = vec![0; self.len()];
        match mode {
            AutMode::OrderPreserving => ColoredDigraph::new(self.len(), &self.covers(), colors),
            AutMode::Graph => ColoredDigraph::undirected(self.len(), &self.covers(), colors),
        }
    }
}

impl ToColoredDigraph for Graph {
    fn to_colored_digraph(&self, _mode: AutMode) -> ColoredDigraph {
        ColoredDigraph::undirected(self.len(), &self.edges(), vec![0; self.len()])
    }
}

impl ToColoredDigraph for BipartiteGraph {
    fn to_colored_digraph(&self, mode: AutMode) -> ColoredDigraph {
        let colors = vec![0; self.len()];
        match mode {
            AutMode::OrderPreserving => ColoredDigraph::new(self.len(), &self.edges(), colors),
            AutMode::Graph => ColoredDigraph::undirected(self.len(), &self.edges(), colors),
        }
    }
}

/// A permutation group given by generators, with a base and the orbit
/// lengths along its stabilizer chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    /// `orbit_sizes[i]` is the length of the orbit of `base[i]` under the
    /// pointwise stabilizer of `base[..i]`.
    pub orbit_sizes: Vec<usize>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            base: Vec::new(),
            orbit_sizes: Vec::new(),
        }
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes.iter().fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s))
    }

    /// Vertex orbits, each sorted, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        uf.groups()
    }

    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        self.orbits().into_iter().find(|o| o.binary_search(&v).is_ok()).unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Orbit index for each item of a family closed under the group.
    ///
    /// `act` maps an item through a permutation; the family must contain the
    /// image of every item under every generator.
    pub fn orbit_ids<T, F>(&self, items: &[T], act: F) -> Vec<usize>
    where
        T: Hash + Eq,
        F: Fn(&T, &[usize]) -> T,
    {
        let index: HashMap<&T, usize> = items.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut uf = UnionFind::new(items.len());
        for g in &self.generators {
            for (i, t) in items.iter().enumerate() {
                let img = act(t, g);
                let j = *index.get(&img).expect("item family must be closed under the group");
                uf.union(i, j);
            }
        }
        uf.classes()
    }

    /// Number of orbits on a family of items closed under the group.
    pub fn orbit_count<T, F>(&self, items: &[T], act: F) -> usize
    where
        T: Hash + Eq,
        F: Fn(&T, &[usize]) -> T,
    {
        self.orbit_ids(items, act).into_iter().max().map_or(0, |m| m + 1)
    }
}

/// Image of a tuple of points under a permutation.
pub fn map_tuple(t: &[usize], g: &[usize]) -> Vec<usize> {
    t.iter().map(|&x| g[x]).collect()
}

/// Image of a set of points (kept sorted) under a permutation.
pub fn map_set(t: &[usize], g: &[usize]) -> Vec<usize> {
    let mut v = map_tuple(t, g);
    v.sort_unstable();
    v
}

/// Full automorphism group of `s` under `mode`.
pub fn automorphism_group<S: ToColoredDigraph + ?Sized>(s: &S, mode: AutMode) -> PermGroup {
    search::automorphisms(&s.to_colored_digraph(mode), &[])
}

/// Pointwise stabilizer of `points` in the automorphism group of `s`.
pub fn stabilizer<S: ToColoredDigraph + ?Sized>(s: &S, mode: AutMode, points: &[usize]) -> PermGroup {
    search::automorphisms(&s.to_colored_digraph(mode), points)
}

/// Whether two structures are isomorphic under `mode`.
pub fn isomorphic<S: ToColoredDigraph + ?Sized>(a: &S, b: &S, mode: AutMode) -> bool {
    find_isomorphism(&a.to_colored_digraph(mode), &b.to_colored_digraph(mode)).is_some()
}

#[cfg(test)]
pub(crate) mod brute {
    use super::*;
    use itertools::Itertools;

    /// Counts automorphisms by trying every permutation.
    pub fn count_automorphisms(g: &ColoredDigraph) -> usize {
        (0..g.len()).permutations(g.len()).filter(|p| g.is_automorphism(p)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PairMode;

    fn k33() -> BipartiteGraph {
        let edges: Vec<_> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
        BipartiteGraph::from_parts(3, 3, &edges).unwrap()
    }

    #[test]
    fn antichain_has_full_symmetric_group() {
        let g = automorphism_group(&Poset::antichain(3), AutMode::OrderPreserving);
        assert_eq!(g.order(), BigUint::from(6u32));
        assert!(g.is_transitive());
    }

    #[test]
    fn k33_orders() {
        let k = k33();
        assert_eq!(automorphism_group(&k, AutMode::OrderPreserving).order(), BigUint::from(36u32));
        assert_eq!(automorphism_group(&k, AutMode::Graph).order(), BigUint::from(72u32));
        let cd = k.to_colored_digraph(AutMode::Graph);
        assert_eq!(brute::count_automorphisms(&cd), 72);
    }

    #[test]
    fn double_bowtie_has_one_swap() {
        let p = Poset::new(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)], PairMode::Relations).unwrap();
        let g = automorphism_group(&p, AutMode::OrderPreserving);
        assert_eq!(g.order(), BigUint::from(2u32));
        assert_eq!(g.orbits(), vec![vec![0, 2], vec![1], vec![3, 5], vec![4]]);
    }

    #[test]
    fn chain_is_rigid() {
        let g = automorphism_group(&Poset::chain(5), AutMode::OrderPreserving);
        assert_eq!(g.order(), BigUint::from(1u32));
        // As a graph the path can be reversed.
        let g = automorphism_group(&Poset::chain(5), AutMode::Graph);
        assert_eq!(g.order(), BigUint::from(2u32));
    }

    #[test]
    fn stabilizer_of_cycle_vertex() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(automorphism_group(&g, AutMode::Graph).order(), BigUint::from(12u32));
        let s = stabilizer(&g, AutMode::Graph, &[0]);
        assert_eq!(s.order(), BigUint::from(2u32));
        assert!(s.generators.iter().all(|p| p[0] == 0));
    }

    #[test]
    fn empty_structure() {
        let g = automorphism_group(&Poset::empty(), AutMode::Graph);
        assert_eq!(g.order(), BigUint::from(1u32));
    }

    #[test]
    fn tuple_orbits() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let grp = automorphism_group(&g, AutMode::Graph);
        let arcs: Vec<Vec<usize>> = g.edges().iter().flat_map(|&(a, b)| [vec![a, b], vec![b, a]]).collect();
        assert_eq!(grp.orbit_count(&arcs, |t, p| map_tuple(t, p)), 1);
    }
}

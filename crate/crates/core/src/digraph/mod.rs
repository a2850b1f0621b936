//! Finite asymmetric digraphs with optional level maps and truncation
//! boundaries.
//!
//! Arcs point from the higher level to the lower one: a cover `x < y` of a
//! poset becomes the arc `(y, x)`, and when levels are present every arc
//! `(a, b)` satisfies `level[a] == level[b] + 1`.

mod props;
mod reach;
mod yshape;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::{PairMode, Poset};
use crate::symmetry::{AutMode, ColoredDigraph, ToColoredDigraph};

pub use props::{check_p_properties, PReport, PropertyResult, Verdict};
pub use reach::{
    alternating_class, alternating_classes, class_graph, descendants, intersection_property,
    is_desc_tree, reachability_graph, IntersectionReport, ReachReport,
};
pub use yshape::{y_shapes, y_transitive, YReport, YShape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    level: Option<Vec<i64>>,
    boundary: FixedBitSet,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Duplicate arcs are merged; loops and opposite arc pairs are rejected.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &(a, b) in &sorted {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::OutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if sorted.binary_search(&(b, a)).is_ok() {
                return Err(Error::NotAsymmetric(a.min(b), a.max(b)));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(a, b) in &sorted {
            out[a].push(b);
            inn[b].push(a);
        }
        for row in &mut inn {
            row.sort_unstable();
        }
        Ok(Digraph {
            n,
            arcs: sorted,
            out,
            inn,
            level: None,
            boundary: FixedBitSet::with_capacity(n),
            labels: None,
        })
    }

    /// Attaches a level map; every arc must drop exactly one level.
    pub fn with_levels(mut self, level: Vec<i64>) -> Result<Self> {
        if level.len() != self.n {
            return Err(Error::BadParams(format!("{} levels for {} vertices", level.len(), self.n)));
        }
        for &(a, b) in &self.arcs {
            if level[a] != level[b] + 1 {
                return Err(Error::NotGraded(a, b));
            }
        }
        self.level = Some(level);
        Ok(self)
    }

    pub fn with_boundary(mut self, boundary: &[usize]) -> Result<Self> {
        for &v in boundary {
            if v >= self.n {
                return Err(Error::OutOfRange { id: v, n: self.n });
            }
            self.boundary.insert(v);
        }
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_index(&self, a: usize, b: usize) -> Option<usize> {
        self.arcs.binary_search(&(a, b)).ok()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arc_index(a, b).is_some()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn levels(&self) -> Option<&[i64]> {
        self.level.as_deref()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary.contains(v)
    }

    pub fn boundary(&self) -> Vec<usize> {
        self.boundary.ones().collect()
    }

    pub fn has_boundary(&self) -> bool {
        !self.boundary.is_clear()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Neighbours in the underlying undirected graph.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().chain(self.inn[v].iter()).copied()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Undirected distances from a set of sources (`usize::MAX` when unreachable).
    pub fn distances_from(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subdigraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    /// Levels, boundary flags and labels are carried over.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let arcs: Vec<_> = self
            .arcs
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]))
            .collect();
        let mut d = Digraph::new(vertices.len(), &arcs).expect("subdigraph of a valid digraph");
        if let Some(l) = &self.level {
            d.level = Some(vertices.iter().map(|&v| l[v]).collect());
        }
        for (i, &v) in vertices.iter().enumerate() {
            if self.is_boundary(v) {
                d.boundary.insert(i);
            }
        }
        if let Some(l) = &self.labels {
            d.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        d
    }
}

impl ToColoredDigraph for Digraph {
    fn to_colored_digraph(&self, mode: AutMode) -> ColoredDigraph {
        let colors = vec![0; self.n];
        match mode {
            AutMode::OrderPreserving => ColoredDigraph::new(self.n, &self.arcs, colors),
            AutMode::Graph => ColoredDigraph::undirected(self.n, &self.arcs, colors),
        }
    }
}

/// Hasse digraph of a poset, arcs from each element to the elements it covers.
///
/// Levels (element heights) are attached when every cover raises height by
/// exactly one.
pub fn digraph_from_poset(p: &Poset) -> Digraph {
    let arcs: Vec<_> = p.covers().into_iter().map(|(x, y)| (y, x)).collect();
    let mut d = Digraph::new(p.len(), &arcs).expect("covers are asymmetric and loop-free");
    let h: Vec<i64> = p.heights().into_iter().map(|x| x as i64).collect();
    if let Ok(with) = d.clone().with_levels(h) {
        d = with;
    }
    if let Some(l) = p.labels() {
        d = d.with_labels(l.to_vec());
    }
    d
}

/// Like [`digraph_from_poset`] but fails when the poset is not graded.
pub fn graded_digraph_from_poset(p: &Poset) -> Result<Digraph> {
    let d = digraph_from_poset(p);
    if d.levels().is_none() {
        let h = p.heights();
        let (x, y) = p
            .covers()
            .into_iter()
            .find(|&(x, y)| h[y] != h[x] + 1)
            .expect("ungraded poset has a long cover");
        return Err(Error::NotGraded(y, x));
    }
    Ok(d)
}

/// The poset in which `a > b` whenever `b` is reachable from `a`.
pub fn poset_of(d: &Digraph) -> Result<Poset> {
    let pairs: Vec<_> = d.arcs().iter().map(|&(a, b)| (b, a)).collect();
    let p = Poset::new(d.len(), &pairs, PairMode::Relations)?;
    Ok(match d.labels() {
        Some(l) => p.with_labels(l.to_vec()),
        None => p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_arcs() {
        assert_eq!(Digraph::new(2, &[(0, 1), (1, 0)]), Err(Error::NotAsymmetric(0, 1)));
        assert_eq!(Digraph::new(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert!(matches!(Digraph::new(2, &[(0, 2)]), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn two_chain_gives_one_arc() {
        let d = digraph_from_poset(&Poset::chain(2));
        assert_eq!(d.arcs(), &[(1, 0)]);
        assert_eq!(d.levels(), Some(&[0, 1][..]));
    }

    #[test]
    fn ungraded_poset() {
        let q = Poset::new(4, &[(0, 1), (1, 2), (0, 3), (3, 2)], PairMode::Relations).unwrap();
        assert!(graded_digraph_from_poset(&q).is_ok());
        let r = Poset::new(4, &[(0, 1), (1, 2), (3, 2)], PairMode::Relations).unwrap();
        assert_eq!(graded_digraph_from_poset(&r), Err(Error::NotGraded(2, 3)));
    }

    #[test]
    fn levels_validated() {
        let d = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(d.clone().with_levels(vec![2, 1, 0]).is_ok());
        assert_eq!(d.with_levels(vec![2, 0, -1]), Err(Error::NotGraded(0, 1)));
    }

    #[test]
    fn poset_round_trip() {
        let d = Digraph::new(4, &[(0, 1), (0, 2), (3, 1)]).unwrap();
        let back = digraph_from_poset(&poset_of(&d).unwrap());
        assert_eq!(back.arcs(), d.arcs());
    }
}

//! Finite strict partial orders.
//!
//! A [`Poset`] is stored as its full strict order (one bit row per element
//! for the up-set and one for the down-set) together with the cover relation.
//! Element ids are dense, `0..n`.

mod cones;
mod shape;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use cones::{cones, ConePartition};
pub use shape::{classify_interval, shape_of, IntervalShape, ShapeKind};

/// How the pairs handed to [`Poset::new`] are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// Pairs are covers; the order is their transitive closure.
    Covers,
    /// Pairs are arbitrary strict relations; the order is their transitive closure.
    Relations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds a poset on `0..n` from `(a, b)` pairs meaning `a < b`.
    ///
    /// Duplicate pairs are ignored. A pair `(a, a)` or any set of pairs whose
    /// closure relates an element to itself is rejected with [`Error::Cycle`].
    pub fn new(n: usize, pairs: &[(usize, usize)], _mode: PairMode) -> Result<Self> {
        // Both modes close transitively; covers given as covers simply survive
        // the reduction unchanged.
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::OutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            if seen.insert((a, b)) {
                succ[a].push(b);
                indeg[b] += 1;
            }
        }

        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cycle(culprit));
        }

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            for &w in &succ[v] {
                row.insert(w);
                row.union_with(&above[w]);
            }
            above[v] = row;
        }
        Ok(Self::from_closure(above, None))
    }

    pub fn empty() -> Self {
        Self::from_closure(Vec::new(), None)
    }

    /// An `n`-element chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &pairs, PairMode::Covers).expect("chains are acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, &[], PairMode::Covers).expect("antichains are acyclic")
    }

    /// Builds from a strict up-set matrix that is already transitively closed.
    pub(crate) fn from_closure(above: Vec<FixedBitSet>, labels: Option<Vec<String>>) -> Self {
        let n = above.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in above.iter().enumerate() {
            for b in row.ones() {
                below[b].insert(a);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            for b in above[a].ones() {
                if above[a].is_disjoint(&below[b]) {
                    upper_covers[a].push(b);
                    lower_covers[b].push(a);
                }
            }
        }
        Poset {
            n,
            above,
            below,
            upper_covers,
            lower_covers,
            labels,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.lt(b, a)
    }

    /// Strict up-set of `a`.
    pub fn above(&self, a: usize) -> &FixedBitSet {
        &self.above[a]
    }

    /// Strict down-set of `a`.
    pub fn below(&self, a: usize) -> &FixedBitSet {
        &self.below[a]
    }

    pub fn up_closed(&self, a: usize) -> FixedBitSet {
        let mut s = self.above[a].clone();
        s.insert(a);
        s
    }

    pub fn down_closed(&self, a: usize) -> FixedBitSet {
        let mut s = self.below[a].clone();
        s.insert(a);
        s
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// Cover pairs `(a, b)` with `a` covered by `b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.upper_covers[a].iter().map(move |&b| (a, b)))
            .collect()
    }

    /// All strict relations `(a, b)` with `a < b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.above[a].ones().map(move |b| (a, b)))
            .collect()
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        self.below[a].is_clear()
    }

    pub fn is_maximal(&self, a: usize) -> bool {
        self.above[a].is_clear()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_minimal(a)).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_maximal(a)).collect()
    }

    /// Every element is minimal or maximal (maximal chains have at most two elements).
    pub fn is_two_level(&self) -> bool {
        (0..self.n).all(|a| self.is_minimal(a) || self.is_maximal(a))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| self.above[a].count_ones(..) + self.below[a].count_ones(..) + 1 == self.n)
    }

    /// Length of the longest chain ending at each element (minimal elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.n];
        // Elements sorted by down-set size form a linear extension.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| self.below[a].count_ones(..));
        for &a in &order {
            h[a] = self.lower_covers[a].iter().map(|&b| h[b] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Sizes of the height levels, bottom first.
    pub fn level_sizes(&self) -> Vec<usize> {
        let h = self.heights();
        let top = h.iter().copied().max().map_or(0, |m| m + 1);
        let mut sizes = vec![0; top];
        for x in h {
            sizes[x] += 1;
        }
        sizes
    }

    /// Greatest common lower bound of `a` and `b`, if the pair has one.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.down_closed(a);
        common.intersect_with(&self.down_closed(b));
        greatest_in(&common, |m| self.down_closed(m))
    }

    /// Least common upper bound of `a` and `b`, if the pair has one.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.up_closed(a);
        common.intersect_with(&self.up_closed(b));
        greatest_in(&common, |m| self.up_closed(m))
    }

    /// Subposet induced on `elements`; element `i` of the result is `elements[i]`.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let k = elements.len();
        let mut above = vec![FixedBitSet::with_capacity(k); k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                if self.lt(a, b) {
                    above[i].insert(j);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| elements.iter().map(|&e| l[e].clone()).collect());
        Poset::from_closure(above, labels)
    }

    /// The interval `[a, b]` as an induced subposet, with the id map back into `self`.
    pub fn interval(&self, a: usize, b: usize) -> Result<(Poset, Vec<usize>)> {
        for id in [a, b] {
            if id >= self.n {
                return Err(Error::OutOfRange { id, n: self.n });
            }
        }
        if !self.le(a, b) {
            return Err(Error::NotComparable(a, b));
        }
        let mut members = self.up_closed(a);
        members.intersect_with(&self.down_closed(b));
        let ids: Vec<usize> = members.ones().collect();
        Ok((self.induced(&ids), ids))
    }

    /// The order dual.
    pub fn dual(&self) -> Poset {
        Poset::from_closure(self.below.clone(), self.labels.clone())
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let pairs: Vec<_> = self.covers().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        let mut p = Poset::new(self.n, &pairs, PairMode::Covers).expect("relabeling keeps acyclicity");
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (i, s) in l.iter().enumerate() {
                nl[perm[i]] = s.clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let off = self.n;
        let mut pairs = self.covers();
        pairs.extend(other.covers().into_iter().map(|(a, b)| (a + off, b + off)));
        Poset::new(self.n + other.n, &pairs, PairMode::Covers).expect("union of acyclic orders")
    }

    /// Whether the comparability graph is connected. The empty poset counts as connected.
    ///
    /// Every element added by the Dedekind-MacNeille completion sits above some
    /// original element and below another, so this agrees with connectivity of
    /// the completion's comparability graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            let nbrs = self.upper_covers[v].iter().chain(self.lower_covers[v].iter());
            for &w in nbrs {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Connected components of the comparability graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in self.upper_covers[v].iter().chain(self.lower_covers[v].iter()) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// The element `m` of `set` whose closure (as given by `closed`) contains the whole set.
fn greatest_in(set: &FixedBitSet, closed: impl Fn(usize) -> FixedBitSet) -> Option<usize> {
    let size = set.count_ones(..);
    set.ones().find(|&m| {
        let c = closed(m);
        c.count_ones(..) >= size && set.is_subset(&c)
    })
}

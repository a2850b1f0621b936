//! Alternating-walk reachability between arcs, descendants and the
//! intersection property.

use fixedbitset::FixedBitSet;

use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::poset::Direction;
use crate::symmetry::{automorphism_group, isomorphic, map_tuple, AutMode};
use crate::util::UnionFind;

/// Class index of every arc (indexed like [`Digraph::arcs`]) under the
/// relation generated by "shares a tail" and "shares a head".
pub fn alternating_classes(d: &Digraph) -> Vec<usize> {
    let arcs = d.arcs();
    let mut uf = UnionFind::new(arcs.len());
    let mut first_tail = vec![usize::MAX; d.len()];
    let mut first_head = vec![usize::MAX; d.len()];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        if first_tail[a] == usize::MAX {
            first_tail[a] = i;
        } else {
            uf.union(first_tail[a], i);
        }
        if first_head[b] == usize::MAX {
            first_head[b] = i;
        } else {
            uf.union(first_head[b], i);
        }
    }
    uf.classes()
}

/// Arcs reachable from `(a, b)` by alternating walks, sorted.
pub fn alternating_class(d: &Digraph, arc: (usize, usize)) -> Result<Vec<(usize, usize)>> {
    let idx = d.arc_index(arc.0, arc.1).ok_or(Error::MissingArc(arc.0, arc.1))?;
    let ids = alternating_classes(d);
    Ok(d
        .arcs()
        .iter()
        .zip(&ids)
        .filter(|(_, &c)| c == ids[idx])
        .map(|(&a, _)| a)
        .collect())
}

/// The bipartite graph spanned by a set of arcs: tails on the upper side,
/// heads on the lower side. Vertices keep the order of their ids in `d`.
pub fn class_graph(class: &[(usize, usize)]) -> (BipartiteGraph, Vec<usize>) {
    let mut verts: Vec<usize> = class.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let pos = |v: usize| verts.binary_search(&v).expect("vertex of the class");
    let tails: FixedBitSet = class.iter().map(|&(a, _)| a).collect();
    let side: Vec<Side> = verts
        .iter()
        .map(|&v| if tails.contains(v) { Side::Upper } else { Side::Lower })
        .collect();
    let edges: Vec<_> = class.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
    match BipartiteGraph::new(side.clone(), &edges) {
        Ok(g) => (g, verts),
        // A vertex that is both a tail and a head: keep every vertex on one
        // side so callers can still inspect it; it will never match a delta.
        Err(_) => {
            let flat = vec![Side::Lower; verts.len()];
            let g = BipartiteGraph::new(flat, &[]).expect("edgeless graph");
            (g, verts)
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReachReport {
    /// Arc classes, each sorted, ordered by least arc.
    pub classes: Vec<Vec<(usize, usize)>>,
    /// Whether a class touches a boundary vertex (and so is only partly visible).
    pub truncated: Vec<bool>,
    /// One class containing every arc.
    pub universal: bool,
    /// No vertex is both a tail and a head within one class.
    pub bipartite: bool,
    /// All complete classes are pairwise isomorphic.
    pub classes_isomorphic: bool,
    /// `Aut(D)` is transitive on arcs.
    pub arc_transitive: bool,
    /// A complete class as a bipartite graph, when one exists.
    pub delta: Option<BipartiteGraph>,
}

impl ReachReport {
    pub fn complete_classes(&self) -> impl Iterator<Item = &Vec<(usize, usize)>> {
        self.classes.iter().zip(&self.truncated).filter(|(_, &t)| !t).map(|(c, _)| c)
    }
}

pub fn reachability_graph(d: &Digraph) -> Result<ReachReport> {
    if !d.is_connected() {
        return Err(Error::NotConnected);
    }
    if d.arcs().is_empty() {
        return Err(Error::NoArcs(1));
    }
    let ids = alternating_classes(d);
    let k = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); k];
    for (&a, &c) in d.arcs().iter().zip(&ids) {
        classes[c].push(a);
    }
    let truncated: Vec<bool> = classes
        .iter()
        .map(|c| c.iter().any(|&(a, b)| d.is_boundary(a) || d.is_boundary(b)))
        .collect();
    let bipartite = classes.iter().all(|c| {
        let tails: FixedBitSet = c.iter().map(|&(a, _)| a).collect();
        c.iter().all(|&(_, b)| !tails.contains(b))
    });
    let complete: Vec<BipartiteGraph> = classes
        .iter()
        .zip(&truncated)
        .filter(|(_, &t)| !t)
        .map(|(c, _)| class_graph(c).0)
        .collect();
    let classes_isomorphic = complete
        .windows(2)
        .all(|w| isomorphic(&w[0], &w[1], AutMode::OrderPreserving));
    let grp = automorphism_group(d, AutMode::OrderPreserving);
    let arcs: Vec<Vec<usize>> = d.arcs().iter().map(|&(a, b)| vec![a, b]).collect();
    let arc_transitive = grp.orbit_count(&arcs, |t, p| map_tuple(t, p)) == 1;
    Ok(ReachReport {
        universal: k == 1 && !bipartite,
        classes,
        truncated,
        bipartite,
        classes_isomorphic,
        arc_transitive,
        delta: complete.into_iter().next(),
    })
}

/// Vertices reachable from `v` by directed paths (including `v`), following
/// arcs forwards for [`Direction::Down`] and backwards for [`Direction::Up`].
pub fn descendants(d: &Digraph, v: usize, direction: Direction) -> Vec<usize> {
    reach_set(d, v, direction).ones().collect()
}

pub(crate) fn reach_set(d: &Digraph, v: usize, direction: Direction) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(d.len());
    seen.insert(v);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        let next = match direction {
            Direction::Down => d.out_neighbors(x),
            Direction::Up => d.in_neighbors(x),
        };
        for &w in next {
            if !seen.put(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// The subdigraph induced on the descendants of `v` is a tree.
pub fn is_desc_tree(d: &Digraph, v: usize) -> bool {
    let set = reach_set(d, v, Direction::Down);
    let arcs = set.ones().map(|x| d.out_neighbors(x).len()).sum::<usize>();
    arcs + 1 == set.count_ones(..)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub holds: bool,
    /// First pair whose common descendants are not the descendants of one vertex.
    pub witness: Option<(usize, usize)>,
    pub pairs_checked: usize,
}

/// Any two descendant sets that meet intersect in the descendant set of a
/// single vertex. Boundary vertices are not used as sources.
pub fn intersection_property(d: &Digraph) -> IntersectionReport {
    let n = d.len();
    let desc: Vec<FixedBitSet> = (0..n).map(|v| reach_set(d, v, Direction::Down)).collect();
    let sizes: Vec<usize> = desc.iter().map(|s| s.count_ones(..)).collect();
    let mut checked = 0;
    for x in (0..n).filter(|&x| !d.is_boundary(x)) {
        for y in (x + 1..n).filter(|&y| !d.is_boundary(y)) {
            let mut common = desc[x].clone();
            common.intersect_with(&desc[y]);
            let size = common.count_ones(..);
            if size == 0 {
                continue;
            }
            checked += 1;
            // The generator is the member whose descendants are all of `common`.
            let principal = common.ones().any(|z| sizes[z] == size && desc[z].is_subset(&common));
            if !principal {
                return IntersectionReport {
                    holds: false,
                    witness: Some((x, y)),
                    pairs_checked: checked,
                };
            }
        }
    }
    IntersectionReport {
        holds: true,
        witness: None,
        pairs_checked: checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_path_classes_are_single_arcs() {
        let d = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(alternating_class(&d, (1, 2)).unwrap(), vec![(1, 2)]);
        let r = reachability_graph(&d).unwrap();
        assert_eq!(r.classes.len(), 3);
        assert!(r.bipartite && !r.universal);
        assert_eq!(r.delta.unwrap().edges().len(), 1);
        assert_eq!(alternating_class(&d, (2, 1)), Err(Error::MissingArc(2, 1)));
    }

    #[test]
    fn universal_class() {
        // 0->1, 2->1, 2->0: arcs share heads/tails into one class with 0 both tail and head.
        let d = Digraph::new(3, &[(0, 1), (2, 1), (2, 0)]).unwrap();
        let r = reachability_graph(&d).unwrap();
        assert!(r.universal);
    }

    #[test]
    fn descendants_and_ancestors() {
        let d = Digraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(descendants(&d, 3, Direction::Down), vec![3]);
        assert_eq!(descendants(&d, 0, Direction::Down), vec![0, 1, 2, 3]);
        assert_eq!(descendants(&d, 3, Direction::Up), vec![0, 1, 2, 3]);
        assert!(!is_desc_tree(&d, 0));
        assert!(is_desc_tree(&d, 1));
    }

    #[test]
    fn diamond_has_intersection_property() {
        let d = Digraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(intersection_property(&d).holds);
    }

    #[test]
    fn doubled_diamond_violates_it() {
        // a=0, b1=1, b2=2, c1=3, c2=4
        let d = Digraph::new(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let r = intersection_property(&d);
        assert!(!r.holds);
        assert_eq!(r.witness, Some((1, 2)));
    }

    #[test]
    fn disconnected_rejected() {
        let d = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(reachability_graph(&d), Err(Error::NotConnected)));
    }
}

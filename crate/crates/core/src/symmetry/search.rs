//! Individualization-refinement search for automorphisms and isomorphisms.

use super::refine::{individualize, refine, Cells};
use super::{is_isomorphism, ColoredDigraph, PermGroup};
use crate::util::UnionFind;

struct FirstPath {
    nodes: Vec<Cells>,
    /// Target colour chosen at each non-leaf node.
    targets: Vec<u32>,
    base: Vec<usize>,
    leaf_vertex: Vec<usize>,
}

fn first_path(g: &ColoredDigraph, root: Cells) -> FirstPath {
    let mut nodes = vec![root];
    let mut targets = Vec::new();
    let mut base = Vec::new();
    while let Some(t) = nodes.last().unwrap().target_cell() {
        let cur = nodes.last().unwrap();
        let b = cur.members(t)[0];
        let next = refine(g, &individualize(&cur.colors, b));
        targets.push(t);
        base.push(b);
        nodes.push(next);
    }
    let leaf = nodes.last().unwrap();
    let mut leaf_vertex = vec![0; g.len()];
    for v in 0..g.len() {
        leaf_vertex[leaf.colors[v] as usize] = v;
    }
    FirstPath {
        nodes,
        targets,
        base,
        leaf_vertex,
    }
}

/// Generators and stabilizer-chain data for the automorphisms of `g` that fix
/// every vertex of `prefix`.
pub(crate) fn automorphisms(g: &ColoredDigraph, prefix: &[usize]) -> PermGroup {
    let n = g.len();
    let mut root = refine(g, g.colors());
    for &p in prefix {
        root = refine(g, &individualize(&root.colors, p));
    }
    let fp = first_path(g, root);
    let depth = fp.base.len();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut orbit_sizes = vec![1usize; depth];
    for level in (0..depth).rev() {
        let b = fp.base[level];
        let cell = fp.nodes[level].members(fp.targets[level]);
        let mut orbits = Orbits::new(n, &gens);
        for &w in &cell {
            if orbits.same(b, w) {
                continue;
            }
            let child = refine(g, &individualize(&fp.nodes[level].colors, w));
            if let Some(perm) = extend(g, &fp, level + 1, child) {
                orbits.add(&perm);
                gens.push(perm);
            }
        }
        orbit_sizes[level] = orbits.size_of(b);
    }
    PermGroup {
        degree: n,
        generators: gens,
        base: fp.base,
        orbit_sizes,
    }
}

/// Searches below `node` (sitting at `level` of the tree) for a leaf whose
/// matching with the first leaf is an automorphism.
fn extend(g: &ColoredDigraph, fp: &FirstPath, level: usize, node: Cells) -> Option<Vec<usize>> {
    let reference = &fp.nodes[level];
    if node.trace != reference.trace || node.count != reference.count {
        return None;
    }
    if node.is_discrete() {
        let mut perm = vec![0; g.len()];
        for v in 0..g.len() {
            perm[fp.leaf_vertex[node.colors[v] as usize]] = v;
        }
        return g.is_automorphism(&perm).then_some(perm);
    }
    let t = *fp.targets.get(level)?;
    for w in node.members(t) {
        let child = refine(g, &individualize(&node.colors, w));
        if let Some(p) = extend(g, fp, level + 1, child) {
            return Some(p);
        }
    }
    None
}

struct Orbits {
    uf: UnionFind,
}

impl Orbits {
    fn new(n: usize, gens: &[Vec<usize>]) -> Self {
        let mut o = Orbits { uf: UnionFind::new(n) };
        for g in gens {
            o.add(g);
        }
        o
    }

    fn add(&mut self, g: &[usize]) {
        for (v, &w) in g.iter().enumerate() {
            self.uf.union(v, w);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.uf.find(a) == self.uf.find(b)
    }

    fn size_of(&mut self, a: usize) -> usize {
        let r = self.uf.find(a);
        (0..self.uf.len()).filter(|&v| self.uf.find(v) == r).count()
    }
}

/// An isomorphism `a -> b` (as a vertex map) if one exists.
pub fn find_isomorphism(a: &ColoredDigraph, b: &ColoredDigraph) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.arc_count() != b.arc_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let mut arcs = Vec::with_capacity(2 * a.arc_count());
    for v in 0..n {
        arcs.extend(a.out_neighbors(v).iter().map(|&w| (v, w)));
        arcs.extend(b.out_neighbors(v).iter().map(|&w| (n + v, n + w)));
    }
    let mut colors = a.colors().to_vec();
    colors.extend_from_slice(b.colors());
    let union = ColoredDigraph::new(2 * n, &arcs, colors.clone());
    let root = refine(&union, &colors);
    let map = pair_search(&union, n, root)?;
    debug_assert!(is_isomorphism(a, b, &map));
    is_isomorphism(a, b, &map).then_some(map)
}

fn balanced(cells: &Cells, n: usize) -> bool {
    let mut diff = vec![0i64; cells.count];
    for (v, &c) in cells.colors.iter().enumerate() {
        diff[c as usize] += if v < n { 1 } else { -1 };
    }
    diff.iter().all(|&d| d == 0)
}

fn pair_search(union: &ColoredDigraph, n: usize, node: Cells) -> Option<Vec<usize>> {
    if !balanced(&node, n) {
        return None;
    }
    let mut size = vec![0usize; node.count];
    for &c in &node.colors {
        size[c as usize] += 1;
    }
    match size.iter().position(|&s| s > 2) {
        None => {
            let mut partner = vec![usize::MAX; node.count];
            for v in n..2 * n {
                partner[node.colors[v] as usize] = v - n;
            }
            Some((0..n).map(|v| partner[node.colors[v] as usize]).collect())
        }
        Some(t) => {
            let members = node.members(t as u32);
            let u = members[0];
            for &w in members.iter().filter(|&&w| w >= n) {
                let mut c = individualize(&node.colors, u);
                c[w] -= 1;
                let child = refine(union, &c);
                if let Some(m) = pair_search(union, n, child) {
                    return Some(m);
                }
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> ColoredDigraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredDigraph::undirected(n, &e, vec![0; n])
    }

    #[test]
    fn cycles_isomorphic_only_to_same_length() {
        let six = cycle(6);
        let two_triangles = ColoredDigraph::undirected(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            vec![0; 6],
        );
        assert!(find_isomorphism(&six, &cycle(6)).is_some());
        assert!(find_isomorphism(&six, &two_triangles).is_none());
        assert!(find_isomorphism(&six, &cycle(5)).is_none());
    }

    #[test]
    fn relabeled_digraph_maps_back() {
        let a = ColoredDigraph::new(4, &[(0, 1), (1, 2), (0, 3)], vec![0, 0, 1, 0]);
        let p = [2, 0, 3, 1];
        let arcs: Vec<_> = [(0, 1), (1, 2), (0, 3)].iter().map(|&(x, y)| (p[x], p[y])).collect();
        let mut colors = vec![0; 4];
        colors[p[2]] = 1;
        let b = ColoredDigraph::new(4, &arcs, colors);
        let m = find_isomorphism(&a, &b).unwrap();
        assert_eq!(m, p.to_vec());
    }

    #[test]
    fn cycle_group_order() {
        for n in 3..9 {
            let g = automorphisms(&cycle(n), &[]);
            assert_eq!(g.order(), num_bigint::BigUint::from(2 * n), "C{n}");
        }
    }
}

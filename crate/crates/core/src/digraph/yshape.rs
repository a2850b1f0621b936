//! Depth-bounded Y-configurations: two directed paths merging at a junction
//! and continuing along a shared forward path (and the dual shape, one
//! backward path splitting into two forward branches).

use super::Digraph;
use crate::symmetry::{find_isomorphism, ColoredDigraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YShape {
    pub junction: usize,
    /// Shared path from the junction, `trunk[0] == junction`; forward for a
    /// Y-shape, backward for the dual.
    pub trunk: Vec<usize>,
    /// The two branches, each listed from the vertex next to the junction
    /// outwards, in sorted order.
    pub branches: [Vec<usize>; 2],
    pub depth: usize,
    /// Branches leave the junction forwards (the dual shape).
    pub dual: bool,
}

impl YShape {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.trunk.iter().chain(&self.branches[0]).chain(&self.branches[1]).copied()
    }
}

/// Paths of `len` further vertices from `v`, avoiding boundary vertices.
fn paths(d: &Digraph, v: usize, len: usize, forward: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    extend(d, v, len, forward, &mut cur, &mut out);
    out
}

fn extend(d: &Digraph, v: usize, len: usize, forward: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let last = cur.last().copied().unwrap_or(v);
    let next = if forward { d.out_neighbors(last) } else { d.in_neighbors(last) };
    for &w in next {
        if d.is_boundary(w) || w == v || cur.contains(&w) {
            continue;
        }
        cur.push(w);
        extend(d, v, len, forward, cur, out);
        cur.pop();
    }
}

/// Y-shapes (and, with `dual`, their duals) of the given depth whose vertices
/// avoid the boundary.
pub fn y_shapes(d: &Digraph, depth: usize, dual: bool) -> Vec<YShape> {
    assert!(depth >= 1, "depth must be at least 1");
    let mut out = Vec::new();
    for j in (0..d.len()).filter(|&j| !d.is_boundary(j)) {
        // Y: branches come in, trunk goes out. Dual: the reverse.
        let branch_paths = paths(d, j, depth, dual);
        if branch_paths.len() < 2 {
            continue;
        }
        let trunks = paths(d, j, depth, !dual);
        for (i, b1) in branch_paths.iter().enumerate() {
            for b2 in &branch_paths[i + 1..] {
                if b1.iter().any(|x| b2.contains(x)) {
                    continue;
                }
                for t in &trunks {
                    if t.iter().any(|x| b1.contains(x) || b2.contains(x)) {
                        continue;
                    }
                    let mut trunk = vec![j];
                    trunk.extend(t);
                    out.push(YShape {
                        junction: j,
                        trunk,
                        branches: [b1.clone(), b2.clone()],
                        depth,
                        dual,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YReport {
    pub depth: usize,
    pub y_total: usize,
    /// Shapes whose junction has a boundary-free neighbourhood of radius `depth`.
    pub y_interior: usize,
    /// Classes of interior shapes under isomorphism of their marked neighbourhoods.
    pub y_classes: usize,
    pub ybar_total: usize,
    pub ybar_interior: usize,
    pub ybar_classes: usize,
    /// Each family forms at most one class.
    pub verdict: bool,
    /// The digraph is a truncation, so the verdict concerns the visible window only.
    pub window_relative: bool,
}

/// Window reading of transitivity on Y- and dual Y-configurations.
///
/// Each interior shape is marked inside the radius-`depth` neighbourhood of
/// its junction (junction, trunk positions and branch positions get their own
/// colours; the two branches share colours so they may be swapped). Two shapes
/// are equivalent when the marked neighbourhoods are isomorphic, which is what
/// an automorphism carrying one shape to the other would induce.
pub fn y_transitive(d: &Digraph, depth: usize) -> YReport {
    let (y_total, y_interior, y_classes) = classify(d, &y_shapes(d, depth, false));
    let (ybar_total, ybar_interior, ybar_classes) = classify(d, &y_shapes(d, depth, true));
    YReport {
        depth,
        y_total,
        y_interior,
        y_classes,
        ybar_total,
        ybar_interior,
        ybar_classes,
        verdict: y_classes <= 1 && ybar_classes <= 1,
        window_relative: d.has_boundary(),
    }
}

fn classify(d: &Digraph, shapes: &[YShape]) -> (usize, usize, usize) {
    let mut reps: Vec<ColoredDigraph> = Vec::new();
    let mut interior = 0;
    for s in shapes {
        let Some(ball) = marked_ball(d, s) else {
            continue;
        };
        interior += 1;
        if !reps.iter().any(|r| find_isomorphism(r, &ball).is_some()) {
            reps.push(ball);
        }
    }
    (shapes.len(), interior, reps.len())
}

fn marked_ball(d: &Digraph, s: &YShape) -> Option<ColoredDigraph> {
    let dist = d.distances_from(&[s.junction]);
    let ball: Vec<usize> = (0..d.len()).filter(|&v| dist[v] <= s.depth).collect();
    if ball.iter().any(|&v| d.is_boundary(v)) {
        return None;
    }
    let sub = d.induced(&ball);
    let pos = |v: usize| ball.binary_search(&v).expect("shape lies in the ball");
    let mut colors = vec![0u32; ball.len()];
    for (i, &t) in s.trunk.iter().enumerate() {
        colors[pos(t)] = 1 + i as u32;
    }
    for b in &s.branches {
        for (i, &x) in b.iter().enumerate() {
            colors[pos(x)] = 1 + (s.depth + 1 + i) as u32;
        }
    }
    Some(ColoredDigraph::new(ball.len(), sub.arcs(), colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_line_has_no_shapes() {
        let d = Digraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(y_shapes(&d, 1, false).is_empty());
        assert!(y_shapes(&d, 2, true).is_empty());
        assert!(y_transitive(&d, 2).verdict);
    }

    #[test]
    fn single_merge() {
        // 0 -> 2, 1 -> 2, 2 -> 3
        let d = Digraph::new(4, &[(0, 2), (1, 2), (2, 3)]).unwrap();
        let ys = y_shapes(&d, 1, false);
        assert_eq!(ys.len(), 1);
        assert_eq!(ys[0].junction, 2);
        assert_eq!(ys[0].trunk, vec![2, 3]);
        assert_eq!(ys[0].branches, [vec![0], vec![1]]);
        assert!(y_shapes(&d, 1, true).is_empty());
    }

    #[test]
    fn inequivalent_merges() {
        // Junction 2 has three in-arcs, junction 6 only two.
        let d = Digraph::new(9, &[(0, 2), (1, 2), (8, 2), (2, 3), (4, 6), (5, 6), (6, 7)]).unwrap();
        let r = y_transitive(&d, 1);
        assert_eq!(r.y_interior, 4);
        assert_eq!(r.y_classes, 2);
        assert!(!r.verdict);
    }
}

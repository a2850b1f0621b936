//! Window checks of the structural properties a digraph built from a
//! bipartite pattern `delta` should have: alternating cycles, cycles and
//! stars inside copies of `delta`, and one copy of `delta` per arc.

use std::collections::{HashMap, HashSet};

use super::reach::{alternating_classes, class_graph};
use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::symmetry::{isomorphic, AutMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// Nothing in the window to check.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub verdict: Verdict,
    pub checked: usize,
    /// Witnesses left undecided because the truncation cuts them off.
    pub skipped: usize,
}

impl PropertyResult {
    pub fn ok(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail(_))
    }

    fn finish(checked: usize, skipped: usize, failure: Option<String>) -> Self {
        let verdict = match failure {
            Some(f) => Verdict::Fail(f),
            None if checked == 0 => Verdict::Vacuous,
            None => Verdict::Pass,
        };
        PropertyResult {
            verdict,
            checked,
            skipped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PReport {
    /// Every arc drops exactly one level.
    pub levels: bool,
    /// Every cycle alternates in direction at each vertex.
    pub p2: PropertyResult,
    /// Every cycle lies in one reachability class isomorphic to `delta`.
    pub p3: PropertyResult,
    /// Out-stars and in-stars of interior vertices lie in copies of `delta`.
    pub p4: PropertyResult,
    /// Every interior arc lies in exactly one copy of `delta`.
    pub p5: PropertyResult,
    /// The digraph is a truncation; verdicts concern the visible window.
    pub window_relative: bool,
}

impl PReport {
    pub fn all_ok(&self) -> bool {
        self.levels && self.p2.ok() && self.p3.ok() && self.p4.ok() && self.p5.ok()
    }
}

pub fn check_p_properties(d: &Digraph, delta: &BipartiteGraph) -> Result<PReport> {
    let levels = d.levels().ok_or(Error::MissingLevels)?;
    if !delta.is_connected() || delta.edges().is_empty() {
        return Err(Error::NotConnected);
    }
    let levels_ok = d.arcs().iter().all(|&(a, b)| levels[a] == levels[b] + 1);
    let ids = alternating_classes(d);
    let k = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (&a, &c) in d.arcs().iter().zip(&ids) {
        classes[c].push(a);
    }
    let truncated: Vec<bool> = classes
        .iter()
        .map(|c| c.iter().any(|&(a, b)| d.is_boundary(a) || d.is_boundary(b)))
        .collect();
    let iso: Vec<Option<bool>> = classes
        .iter()
        .zip(&truncated)
        .map(|(c, &t)| (!t).then(|| isomorphic(&class_graph(c).0, delta, AutMode::OrderPreserving)))
        .collect();
    let blocks = cyclic_blocks(d);

    // P2
    let mut failure = None;
    for block in &blocks {
        let mut is_tail = HashSet::new();
        let mut is_head = HashSet::new();
        for &i in block {
            let (a, b) = d.arcs()[i];
            is_tail.insert(a);
            is_head.insert(b);
        }
        if let Some(v) = is_tail.intersection(&is_head).min() {
            failure = Some(format!("a cycle passes straight through vertex {v}"));
            break;
        }
    }
    let p2 = PropertyResult::finish(blocks.len(), 0, failure);

    // P3
    let (mut checked, mut skipped, mut failure) = (0, 0, None);
    for block in &blocks {
        let c = ids[block[0]];
        if block.iter().any(|&i| ids[i] != c) {
            failure = Some(format!("a cycle through arc {:?} spans several classes", d.arcs()[block[0]]));
            break;
        }
        match iso[c] {
            Some(true) => checked += 1,
            Some(false) => {
                failure = Some(format!("class of arc {:?} is not isomorphic to delta", d.arcs()[block[0]]));
                break;
            }
            None => skipped += 1,
        }
    }
    let p3 = PropertyResult::finish(checked, skipped, failure);

    // P4
    let (mut checked, mut skipped, mut failure) = (0, 0, None);
    'stars: for v in (0..d.len()).filter(|&v| !d.is_boundary(v)) {
        let stars = [
            d.out_neighbors(v).iter().map(|&w| (v, w)).collect::<Vec<_>>(),
            d.in_neighbors(v).iter().map(|&u| (u, v)).collect::<Vec<_>>(),
        ];
        for star in stars.iter().filter(|s| !s.is_empty()) {
            let idx = d.arc_index(star[0].0, star[0].1).expect("star arc");
            let c = ids[idx];
            match iso[c] {
                Some(true) => checked += 1,
                Some(false) => {
                    failure = Some(format!("star at vertex {v} lies in a class not isomorphic to delta"));
                    break 'stars;
                }
                None => {
                    if copies_containing(delta, &classes[c], star, 1).is_empty() {
                        skipped += 1;
                    } else {
                        checked += 1;
                    }
                }
            }
        }
    }
    let p4 = PropertyResult::finish(checked, skipped, failure);

    // P5
    let (mut checked, mut skipped, mut failure) = (0, 0, None);
    for (i, &(a, b)) in d.arcs().iter().enumerate() {
        if d.is_boundary(a) || d.is_boundary(b) {
            continue;
        }
        let c = ids[i];
        let count = match iso[c] {
            Some(true) => 1,
            _ => copies_containing(delta, &classes[c], &[(a, b)], 2).len(),
        };
        match (count, iso[c]) {
            (1, _) => checked += 1,
            (0, None) => skipped += 1,
            (n, _) => {
                failure = Some(format!("arc ({a}, {b}) lies in {n} copies of delta"));
                break;
            }
        }
    }
    let p5 = PropertyResult::finish(checked, skipped, failure);

    Ok(PReport {
        levels: levels_ok,
        p2,
        p3,
        p4,
        p5,
        window_relative: d.has_boundary(),
    })
}

/// Arc-index sets of the biconnected blocks (of the underlying graph) that
/// contain a cycle.
fn cyclic_blocks(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.len();
    let arcs = d.arcs();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, arc used to enter it, next adjacency position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, via, ref mut pos)) = stack.last_mut() {
            if *pos < adj[v].len() {
                let (w, e) = adj[v][*pos];
                *pos += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == via {
                                break;
                            }
                        }
                        if block.len() > 1 {
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

/// Distinct copies (as arc sets) of `delta` inside `host` containing every
/// arc of `required`, stopping after `limit` copies. Upper vertices of
/// `delta` map to tails, lower ones to heads.
fn copies_containing(
    delta: &BipartiteGraph,
    host: &[(usize, usize)],
    required: &[(usize, usize)],
    limit: usize,
) -> Vec<Vec<(usize, usize)>> {
    let arcset: HashSet<(usize, usize)> = host.iter().copied().collect();
    if required.iter().any(|a| !arcset.contains(a)) {
        return Vec::new();
    }
    let mut nbrs: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in host {
        nbrs.entry(a).or_default().push(b);
        nbrs.entry(b).or_default().push(a);
    }
    let tails: HashSet<usize> = host.iter().map(|&(a, _)| a).collect();

    // Delta vertices in an order where each one after the first two has an
    // earlier neighbour; the first two form an edge (upper, lower).
    let (l0, u0) = delta.edges()[0];
    let mut order = vec![u0, l0];
    let mut placed = vec![false; delta.len()];
    placed[u0] = true;
    placed[l0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in delta.neighbors(order[i]) {
            if !placed[w] {
                placed[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }

    let mut found: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut image = vec![usize::MAX; delta.len()];
    let mut used: HashSet<usize> = HashSet::new();
    for &(t, h) in host {
        image[u0] = t;
        image[l0] = h;
        used.insert(t);
        used.insert(h);
        embed(delta, &order, 2, &mut image, &mut used, &nbrs, &tails, &arcset, required, &mut found, limit);
        used.clear();
        if found.len() >= limit {
            break;
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn embed(
    delta: &BipartiteGraph,
    order: &[usize],
    k: usize,
    image: &mut Vec<usize>,
    used: &mut HashSet<usize>,
    nbrs: &HashMap<usize, Vec<usize>>,
    tails: &HashSet<usize>,
    arcset: &HashSet<(usize, usize)>,
    required: &[(usize, usize)],
    found: &mut HashSet<Vec<(usize, usize)>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if k == order.len() {
        let mut arcs: Vec<(usize, usize)> = delta
            .edges()
            .into_iter()
            .map(|(lo, up)| (image[up], image[lo]))
            .collect();
        arcs.sort_unstable();
        if required.iter().all(|r| arcs.binary_search(r).is_ok()) {
            found.insert(arcs);
        }
        return;
    }
    let x = order[k];
    let anchor = delta
        .neighbors(x)
        .iter()
        .copied()
        .find(|&w| image[w] != usize::MAX)
        .expect("connected delta has a placed neighbour");
    let want_tail = delta.side(x) == Side::Upper;
    let candidates = nbrs.get(&image[anchor]).cloned().unwrap_or_default();
    for c in candidates {
        if used.contains(&c) || tails.contains(&c) != want_tail {
            continue;
        }
        let fits = delta.neighbors(x).iter().all(|&w| {
            image[w] == usize::MAX
                || if want_tail {
                    arcset.contains(&(c, image[w]))
                } else {
                    arcset.contains(&(image[w], c))
                }
        });
        if !fits {
            continue;
        }
        image[x] = c;
        used.insert(c);
        embed(delta, order, k + 1, image, used, nbrs, tails, arcset, required, found, limit);
        used.remove(&c);
        image[x] = usize::MAX;
    }
}

//! Colour refinement to the coarsest equitable partition.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::ColoredDigraph;

/// An equitable colouring together with a fingerprint of how it was reached.
///
/// Colours are `0..count` and are assigned from sorted signatures, so
/// isomorphic inputs produce colourings related by the isomorphism and equal
/// traces.
#[derive(Debug, Clone)]
pub(crate) struct Cells {
    pub colors: Vec<u32>,
    pub count: usize,
    pub trace: u64,
}

impl Cells {
    pub fn is_discrete(&self) -> bool {
        self.count == self.colors.len()
    }

    pub fn members(&self, color: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == color).collect()
    }

    /// First colour class with more than one member.
    pub fn target_cell(&self) -> Option<u32> {
        let mut size = vec![0usize; self.count];
        for &c in &self.colors {
            size[c as usize] += 1;
        }
        size.iter().position(|&s| s > 1).map(|c| c as u32)
    }
}

type Signature = (u32, Vec<u32>, Vec<u32>);

pub(crate) fn refine(g: &ColoredDigraph, colors: &[u32]) -> Cells {
    let n = g.len();
    let mut cur = colors.to_vec();
    let mut prev = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    let mut hasher = DefaultHasher::new();
    n.hash(&mut hasher);
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut o: Vec<u32> = g.out_neighbors(v).iter().map(|&w| cur[w]).collect();
                let mut i: Vec<u32> = g.in_neighbors(v).iter().map(|&w| cur[w]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (cur[v], o, i)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut next = vec![0u32; n];
        let mut color = 0u32;
        let mut run = 0usize;
        for (k, &v) in order.iter().enumerate() {
            if k > 0 && sigs[v] != sigs[order[k - 1]] {
                sigs[order[k - 1]].hash(&mut hasher);
                run.hash(&mut hasher);
                color += 1;
                run = 0;
            }
            next[v] = color;
            run += 1;
        }
        if let Some(&last) = order.last() {
            sigs[last].hash(&mut hasher);
            run.hash(&mut hasher);
        }
        let count = if n == 0 { 0 } else { color as usize + 1 };
        cur = next;
        u64::MAX.hash(&mut hasher);
        if count == prev {
            return Cells {
                colors: cur,
                count,
                trace: hasher.finish(),
            };
        }
        prev = count;
    }
}

/// Gives `v` a colour of its own, placed just before the rest of its class.
pub(crate) fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let mut c: Vec<u32> = colors.iter().map(|&x| 2 * x + 1).collect();
    c[v] -= 1;
    c
}

//! Finite approximations of the generic bipartite graph.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::BipartiteGraph;

/// Largest number of 2-colourings examined in one round; larger sides are sampled.
pub const GENERIC_SAMPLE_CAP: usize = 1024;

/// [`generic_bipartite_from`] starting from a single lower vertex.
pub fn generic_bipartite(n_rounds: usize, seed: u64) -> BipartiteGraph {
    generic_bipartite_from(1, 0, n_rounds, seed)
}

/// Starts from `nx` lower and `ny` upper isolated vertices and runs
/// `n_rounds` witness rounds, alternately adding upper (first) and lower
/// vertices.
///
/// A round on the upper side looks at 2-colourings `(U, X \ U)` of the
/// current lower side and adds a new vertex joined to exactly `U` whenever no
/// existing upper vertex has neighbourhood `U`. All colourings are used when
/// there are at most [`GENERIC_SAMPLE_CAP`] of them; otherwise that many are
/// drawn with a generator seeded by `seed`.
pub fn generic_bipartite_from(nx: usize, ny: usize, n_rounds: usize, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Neighbourhoods, each sorted, indexed within the side.
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); nx];
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); ny];
    for round in 0..n_rounds {
        let (grow, other) = if round % 2 == 0 {
            (&mut upper, &mut lower)
        } else {
            (&mut lower, &mut upper)
        };
        let k = other.len();
        let mut seen: HashSet<Vec<usize>> = grow.iter().cloned().collect();
        for u in colourings(k, &mut rng) {
            if seen.insert(u.clone()) {
                let w = grow.len();
                for &v in &u {
                    other[v].push(w);
                }
                grow.push(u);
            }
        }
    }
    let edges: Vec<(usize, usize)> = lower
        .iter()
        .enumerate()
        .flat_map(|(i, ns)| ns.iter().map(move |&j| (i, j)))
        .collect();
    let mut labels: Vec<String> = (0..lower.len()).map(|i| format!("x{i}")).collect();
    labels.extend((0..upper.len()).map(|j| format!("y{j}")));
    BipartiteGraph::from_parts(lower.len(), upper.len(), &edges)
        .expect("edges index both sides")
        .with_labels(labels)
}

/// Subsets of `0..k` standing for the colourings of a side of size `k`.
fn colourings(k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let members = |mask: &dyn Fn(usize) -> bool| (0..k).filter(|&i| mask(i)).collect::<Vec<_>>();
    if k < usize::BITS as usize && (1usize << k) <= GENERIC_SAMPLE_CAP {
        (0..1usize << k).map(|m| members(&|i| m >> i & 1 == 1)).collect()
    } else {
        (0..GENERIC_SAMPLE_CAP)
            .map(|_| {
                let bits: Vec<bool> = (0..k).map(|_| rng.gen()).collect();
                members(&|i| bits[i])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_rounds_keeps_base() {
        let g = generic_bipartite_from(1, 1, 0, 7);
        assert_eq!(g.len(), 2);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn first_round_adds_two_witnesses() {
        let g = generic_bipartite(1, 0);
        assert_eq!(g.lower().len(), 1);
        assert_eq!(g.upper().len(), 2);
        assert_eq!(g.edges().len(), 1);
    }

    #[test]
    fn extension_property_after_round() {
        // After an upper round every subset of the lower side is some neighbourhood.
        let g = generic_bipartite(3, 0);
        let lower = g.lower();
        let hoods: HashSet<Vec<usize>> = g.upper().iter().map(|&y| g.neighbors(y).to_vec()).collect();
        // The third round grows the upper side over the four lower vertices.
        assert_eq!(lower.len(), 4);
        for m in 0..1usize << 4 {
            let u: Vec<usize> = (0..4).filter(|&i| m >> i & 1 == 1).map(|i| lower[i]).collect();
            assert!(hoods.contains(&u), "missing witness for {u:?}");
        }
    }

    #[test]
    fn seeded_sampling_is_deterministic() {
        let a = generic_bipartite(5, 11);
        let b = generic_bipartite(5, 11);
        assert_eq!(a, b);
    }
}

//! Connected-substructure transitivity and homogeneity for posets.
//!
//! Substructures are induced subposets whose comparability graph is connected.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use super::{automorphism_group, map_set, map_tuple, AutMode};
use crate::poset::Poset;

/// Sorted `k`-element subsets inducing a connected subposet, in sorted order.
pub fn connected_subsets(p: &Poset, k: usize) -> Vec<Vec<usize>> {
    if k == 0 || k > p.len() {
        return Vec::new();
    }
    let mut layer: HashSet<Vec<usize>> = (0..p.len()).map(|v| vec![v]).collect();
    for _ in 1..k {
        let mut next = HashSet::new();
        for s in &layer {
            for &v in s {
                let nbrs = p.above(v).ones().chain(p.below(v).ones());
                for w in nbrs {
                    if let Err(pos) = s.binary_search(&w) {
                        let mut t = s.clone();
                        t.insert(pos, w);
                        next.insert(t);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<_> = layer.into_iter().collect();
    out.sort_unstable();
    out
}

/// Bit `i * k + j` is set when `t[i] < t[j]`.
fn signature(p: &Poset, t: &[usize]) -> u64 {
    let k = t.len();
    let mut sig = 0u64;
    for i in 0..k {
        for j in 0..k {
            if p.lt(t[i], t[j]) {
                sig |= 1 << (i * k + j);
            }
        }
    }
    sig
}

fn iso_type(p: &Poset, s: &[usize]) -> u64 {
    s.iter()
        .copied()
        .permutations(s.len())
        .map(|t| signature(p, &t))
        .min()
        .unwrap_or(0)
}

/// Any two isomorphic connected `k`-element subposets lie in one orbit of
/// the order-automorphism group. Vacuously true without such subsets.
pub fn is_k_cs_transitive(p: &Poset, k: usize) -> bool {
    assert!(k <= 8, "k-CS tests support k <= 8");
    let subsets = connected_subsets(p, k);
    if subsets.is_empty() {
        return true;
    }
    let grp = automorphism_group(p, AutMode::OrderPreserving);
    let orbit = grp.orbit_ids(&subsets, |s, g| map_set(s, g));
    single_orbit_per_class(subsets.iter().map(|s| iso_type(p, s)).zip(orbit))
}

/// Every isomorphism between connected `k`-element subposets extends to an
/// order automorphism: ordered tuples with the same order pattern lie in one
/// orbit on ordered tuples.
pub fn is_k_cs_homogeneous(p: &Poset, k: usize) -> bool {
    assert!(k <= 8, "k-CS tests support k <= 8");
    let subsets = connected_subsets(p, k);
    if subsets.is_empty() {
        return true;
    }
    let tuples: Vec<Vec<usize>> = subsets
        .iter()
        .flat_map(|s| s.iter().copied().permutations(k))
        .collect();
    let grp = automorphism_group(p, AutMode::OrderPreserving);
    let orbit = grp.orbit_ids(&tuples, |t, g| map_tuple(t, g));
    single_orbit_per_class(tuples.iter().map(|t| signature(p, t)).zip(orbit))
}

fn single_orbit_per_class(pairs: impl Iterator<Item = (u64, usize)>) -> bool {
    let mut seen: HashMap<u64, usize> = HashMap::new();
    for (class, orbit) in pairs {
        if *seen.entry(class).or_insert(orbit) != orbit {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PairMode;
    use crate::symmetry::ToColoredDigraph;

    fn poset(n: usize, rel: &[(usize, usize)]) -> Poset {
        Poset::new(n, rel, PairMode::Relations).unwrap()
    }

    fn k22() -> Poset {
        poset(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
    }

    /// Direct check over every automorphism and every pair of tuples.
    fn brute_homogeneous(p: &Poset, k: usize) -> bool {
        let cd = p.to_colored_digraph(AutMode::OrderPreserving);
        let auts: Vec<Vec<usize>> = (0..p.len()).permutations(p.len()).filter(|g| cd.is_automorphism(g)).collect();
        let tuples: Vec<Vec<usize>> = connected_subsets(p, k)
            .iter()
            .flat_map(|s| s.iter().copied().permutations(k))
            .collect();
        tuples.iter().all(|a| {
            tuples.iter().all(|b| {
                signature(p, a) != signature(p, b) || auts.iter().any(|g| map_tuple(a, g) == *b)
            })
        })
    }

    fn brute_transitive(p: &Poset, k: usize) -> bool {
        let cd = p.to_colored_digraph(AutMode::OrderPreserving);
        let auts: Vec<Vec<usize>> = (0..p.len()).permutations(p.len()).filter(|g| cd.is_automorphism(g)).collect();
        let subsets = connected_subsets(p, k);
        subsets.iter().all(|a| {
            subsets.iter().all(|b| {
                iso_type(p, a) != iso_type(p, b) || auts.iter().any(|g| map_set(a, g) == *b)
            })
        })
    }

    #[test]
    fn connected_subsets_of_k22() {
        let p = k22();
        assert_eq!(connected_subsets(&p, 2).len(), 4);
        assert_eq!(connected_subsets(&p, 3).len(), 4);
        assert_eq!(connected_subsets(&p, 5).len(), 0);
    }

    #[test]
    fn k22_single_points_fall_into_two_orbits() {
        assert!(!is_k_cs_transitive(&k22(), 1));
        assert!(is_k_cs_homogeneous(&k22(), 3));
    }

    #[test]
    fn crown_three_subsets() {
        let crown = poset(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]);
        assert!(is_k_cs_transitive(&crown, 3));
        assert!(is_k_cs_homogeneous(&crown, 3));
    }

    #[test]
    fn fence_is_not_two_cs_transitive() {
        // a<b, c<b, c<d: the three 2-chains are pairwise isomorphic but the
        // poset has no non-trivial automorphism.
        let fence = poset(4, &[(0, 1), (2, 1), (2, 3)]);
        assert!(!is_k_cs_transitive(&fence, 2));
        assert!(!brute_transitive(&fence, 2));
    }

    #[test]
    fn double_bowtie_not_three_cs_homogeneous() {
        let p = poset(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]);
        assert!(!is_k_cs_homogeneous(&p, 3));
    }

    #[test]
    fn agrees_with_brute_force() {
        let cases = [
            k22(),
            poset(5, &[(0, 1), (1, 2), (0, 3), (3, 4)]),
            poset(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]),
            poset(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        ];
        for p in &cases {
            for k in 1..=3 {
                assert_eq!(is_k_cs_homogeneous(p, k), brute_homogeneous(p, k), "{p:?} k={k}");
                assert_eq!(is_k_cs_transitive(p, k), brute_transitive(p, k), "{p:?} k={k}");
            }
        }
    }
}

//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use lattice_loom::Poset;

/// Lower bounds of every element of `s`, and upper bounds, as sorted lists.
fn bounds(p: &Poset, s: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let lower = (0..p.len()).filter(|&x| s.iter().all(|&a| p.le(x, a))).collect();
    let upper = (0..p.len()).filter(|&x| s.iter().all(|&a| p.le(a, x))).collect();
    (lower, upper)
}

/// Every Dedekind-MacNeille ideal of `p`, found by closing each subset
/// (feasible up to about 16 elements).
pub fn ideals_by_subsets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    assert!(n <= 20, "too many subsets");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let (_, up) = bounds(p, &s);
        if up.is_empty() {
            continue;
        }
        let (closed, _) = bounds(p, &up);
        if closed == s {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Ideals of a two-level poset that are not principal: closed sets of at
/// least two minimal elements with at least two common upper bounds.
/// Enumerates subsets of the minimal elements only.
pub fn added_ideals_two_level(p: &Poset) -> Vec<Vec<usize>> {
    let mins = p.minimal();
    let maxs = p.maximal();
    let k = mins.len();
    assert!(k <= 22, "too many subsets");
    let mut out = Vec::new();
    for mask in 1u64..(1 << k) {
        if mask.count_ones() < 2 {
            continue;
        }
        let s: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| mins[i]).collect();
        let up: Vec<usize> = maxs.iter().copied().filter(|&y| s.iter().all(|&x| p.lt(x, y))).collect();
        if up.is_empty() {
            continue;
        }
        let closed: Vec<usize> = mins.iter().copied().filter(|&x| up.iter().all(|&y| p.lt(x, y))).collect();
        // With a single upper bound y the closure is the principal ideal of y.
        if closed == s && up.len() >= 2 {
            out.push(s);
        }
    }
    out
}

//! Dedekind-MacNeille completion by ideal enumeration.
//!
//! Ideals are the non-empty subsets `J` with a non-empty set of upper bounds
//! `J↑` and `J = J↑↓`. No artificial global top or bottom is added, so a
//! completion of a poset without a least element has no least element either.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Default cap on the number of ideals enumerated.
pub const DEFAULT_MAX_IDEALS: usize = 1 << 20;

/// Environment variable overriding [`DEFAULT_MAX_IDEALS`].
pub const MAX_IDEALS_ENV: &str = "LATTICE_LOOM_MAX_IDEALS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionConfig {
    pub max_ideals: usize,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig {
            max_ideals: DEFAULT_MAX_IDEALS,
        }
    }
}

impl CompletionConfig {
    /// Default configuration, with the cap taken from the environment when set.
    pub fn from_env() -> Self {
        let max_ideals = std::env::var(MAX_IDEALS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_IDEALS);
        CompletionConfig { max_ideals }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub members: Vec<usize>,
    pub upper_bounds: Vec<usize>,
}

/// Common upper bounds of `s` (all of `p` when `s` is empty).
fn uppers(p: &Poset, s: &FixedBitSet) -> FixedBitSet {
    let mut acc = full(p.len());
    for x in s.ones() {
        acc.intersect_with(&p.up_closed(x));
    }
    acc
}

/// Common lower bounds of `t` (all of `p` when `t` is empty).
fn lowers(p: &Poset, t: &FixedBitSet) -> FixedBitSet {
    let mut acc = full(p.len());
    for x in t.ones() {
        acc.intersect_with(&p.down_closed(x));
    }
    acc
}

fn full(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

fn galois_closure(p: &Poset, s: &FixedBitSet) -> (FixedBitSet, FixedBitSet) {
    let up = uppers(p, s);
    (lowers(p, &up), up)
}

/// `S↑↓` together with `S↑`.
pub fn ideal_closure(p: &Poset, s: &[usize]) -> Result<Ideal> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut set = FixedBitSet::with_capacity(p.len());
    for &x in s {
        if x >= p.len() {
            return Err(Error::OutOfRange { id: x, n: p.len() });
        }
        set.insert(x);
    }
    let (members, up) = galois_closure(p, &set);
    if up.is_clear() {
        return Err(Error::Unbounded);
    }
    Ok(Ideal {
        members: members.ones().collect(),
        upper_bounds: up.ones().collect(),
    })
}

/// Enumerates every Galois-closed set in lectic order.
fn closed_sets(p: &Poset, mut visit: impl FnMut(&FixedBitSet, &FixedBitSet) -> Result<()>) -> Result<()> {
    let n = p.len();
    let (mut a, mut up) = galois_closure(p, &FixedBitSet::with_capacity(n));
    loop {
        visit(&a, &up)?;
        let mut found = false;
        for i in (0..n).rev() {
            if a.contains(i) {
                a.set(i, false);
                continue;
            }
            let mut cand = a.clone();
            cand.insert(i);
            let (b, bu) = galois_closure(p, &cand);
            // Accept when b adds nothing below i.
            let new_low = b.ones().take_while(|&j| j < i).any(|j| !a.contains(j));
            if !new_low {
                a = b;
                up = bu;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(());
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompletedPoset {
    pub completion: Poset,
    /// Completion element of each original element (its principal ideal).
    pub embed: Vec<usize>,
    pub ideals: Vec<Ideal>,
    /// Completion elements not in the image of `embed`, sorted.
    pub added: Vec<usize>,
    pub up_ram: Vec<usize>,
    pub down_ram: Vec<usize>,
    original: Vec<Option<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl CompletedPoset {
    pub fn is_added(&self, x: usize) -> bool {
        self.original[x].is_none()
    }

    /// Original element whose principal ideal is `x`, if any.
    pub fn original_of(&self, x: usize) -> Option<usize> {
        self.original[x]
    }

    /// Completion element whose ideal has exactly these (sorted) members.
    pub fn ideal_index(&self, members: &[usize]) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Sorted elements of `M⁺`: the image of the original poset plus all
    /// ramification points.
    pub fn m_plus_elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.embed.clone();
        v.extend(&self.up_ram);
        v.extend(&self.down_ram);
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `M⁺` as an induced subposet of the completion, with its id map.
    pub fn m_plus(&self) -> (Poset, Vec<usize>) {
        let ids = self.m_plus_elements();
        (self.completion.induced(&ids), ids)
    }

    /// Extends an automorphism of the original poset to the completion.
    pub fn extend_permutation(&self, perm: &[usize]) -> Vec<usize> {
        self.ideals
            .iter()
            .map(|j| {
                let mut m: Vec<usize> = j.members.iter().map(|&x| perm[x]).collect();
                m.sort_unstable();
                self.index[&m]
            })
            .collect()
    }

    pub fn is_up_ram(&self, x: usize) -> bool {
        self.up_ram.binary_search(&x).is_ok()
    }

    pub fn is_down_ram(&self, x: usize) -> bool {
        self.down_ram.binary_search(&x).is_ok()
    }
}

/// Completion with the ideal cap taken from the environment.
pub fn dm_completion(p: &Poset) -> Result<CompletedPoset> {
    dm_completion_with(p, &CompletionConfig::from_env())
}

pub fn dm_completion_with(p: &Poset, config: &CompletionConfig) -> Result<CompletedPoset> {
    let mut raw: Vec<(FixedBitSet, FixedBitSet)> = Vec::new();
    closed_sets(p, |a, up| {
        if !a.is_clear() && !up.is_clear() {
            if raw.len() >= config.max_ideals {
                return Err(Error::SizeLimit {
                    cap: config.max_ideals,
                });
            }
            raw.push((a.clone(), up.clone()));
        }
        Ok(())
    })?;
    let mut keyed: Vec<(Vec<usize>, FixedBitSet, FixedBitSet)> =
        raw.into_iter().map(|(a, u)| (a.ones().collect(), a, u)).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));

    let m = keyed.len();
    let mut above = vec![FixedBitSet::with_capacity(m); m];
    for i in 0..m {
        let ci = keyed[i].0.len();
        for j in 0..m {
            if i != j && keyed[j].0.len() > ci && keyed[i].1.is_subset(&keyed[j].1) {
                above[i].insert(j);
            }
        }
    }
    let index: HashMap<Vec<usize>, usize> = keyed.iter().enumerate().map(|(i, k)| (k.0.clone(), i)).collect();
    let embed: Vec<usize> = (0..p.len())
        .map(|x| {
            let key: Vec<usize> = p.down_closed(x).ones().collect();
            index[&key]
        })
        .collect();
    let mut original = vec![None; m];
    for (x, &e) in embed.iter().enumerate() {
        original[e] = Some(x);
    }
    let labels: Vec<String> = (0..m)
        .map(|i| match original[i] {
            Some(x) => p.label(x),
            None => {
                let members = &keyed[i].1;
                let tops: Vec<String> = members
                    .ones()
                    .filter(|&x| p.above(x).is_disjoint(members))
                    .map(|x| p.label(x))
                    .collect();
                format!("{{{}}}", tops.join(","))
            }
        })
        .collect();
    let completion = Poset::from_closure(above, Some(labels));
    let added: Vec<usize> = (0..m).filter(|&i| original[i].is_none()).collect();
    let ideals: Vec<Ideal> = keyed
        .into_iter()
        .map(|(members, _, up)| Ideal {
            members,
            upper_bounds: up.ones().collect(),
        })
        .collect();

    let mut cp = CompletedPoset {
        completion,
        embed,
        ideals,
        added,
        up_ram: Vec::new(),
        down_ram: Vec::new(),
        original,
        index,
    };
    let (up, down) = compute_ramification(p, &cp);
    cp.up_ram = up;
    cp.down_ram = down;
    Ok(cp)
}

/// Meets and joins (in the completion) of incomparable pairs of original elements.
fn compute_ramification(p: &Poset, cp: &CompletedPoset) -> (Vec<usize>, Vec<usize>) {
    let mut up = Vec::new();
    let mut down = Vec::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p.comparable(a, b) {
                continue;
            }
            let mut meet = p.down_closed(a);
            meet.intersect_with(&p.down_closed(b));
            if !meet.is_clear() {
                let key: Vec<usize> = meet.ones().collect();
                up.push(cp.index[&key]);
            }
            let mut both = p.down_closed(a);
            both.union_with(&p.down_closed(b));
            let (join, bounds) = galois_closure(p, &both);
            if !bounds.is_clear() {
                let key: Vec<usize> = join.ones().collect();
                down.push(cp.index[&key]);
            }
        }
    }
    up.sort_unstable();
    up.dedup();
    down.sort_unstable();
    down.dedup();
    (up, down)
}

/// Every pair with a common upper bound has a least one, and every pair with
/// a common lower bound has a greatest one.
pub fn is_dm_complete(p: &Poset) -> bool {
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let mut ub = p.up_closed(a);
            ub.intersect_with(&p.up_closed(b));
            if !ub.is_clear() && p.join(a, b).is_none() {
                return false;
            }
            let mut lb = p.down_closed(a);
            lb.intersect_with(&p.down_closed(b));
            if !lb.is_clear() && p.meet(a, b).is_none() {
                return false;
            }
        }
    }
    true
}

/// Upward and downward ramification points, as completion elements.
pub fn ramification_points(p: &Poset) -> Result<(Vec<usize>, Vec<usize>)> {
    let cp = dm_completion(p)?;
    Ok((cp.up_ram, cp.down_ram))
}

/// `M⁺` as a subposet of the completion.
pub fn m_plus(p: &Poset) -> Result<Poset> {
    Ok(dm_completion(p)?.m_plus().0)
}

/// The Hasse graph of the completion is a forest.
pub fn is_cycle_free(p: &Poset) -> Result<bool> {
    let c = dm_completion(p)?.completion;
    Ok(hasse_is_forest(&c))
}

pub(crate) fn hasse_is_forest(c: &Poset) -> bool {
    c.covers().len() + c.components().len() == c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PairMode;
    use itertools::Itertools;

    fn double_bowtie() -> Poset {
        let p = Poset::new(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)], PairMode::Relations).unwrap();
        p.with_labels(["x", "y", "z", "u", "v", "w"].iter().map(|s| s.to_string()).collect())
    }

    /// Ideals by trying every subset.
    fn brute_ideals(p: &Poset) -> Vec<Vec<usize>> {
        let n = p.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ub: Vec<usize> = (0..n).filter(|&u| s.iter().all(|&x| p.le(x, u))).collect();
            if ub.is_empty() {
                continue;
            }
            let lb: Vec<usize> = (0..n).filter(|&l| ub.iter().all(|&u| p.le(l, u))).collect();
            if lb == s {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn double_bowtie_completion() {
        let p = double_bowtie();
        let cp = dm_completion(&p).unwrap();
        assert_eq!(cp.completion.len(), 8);
        assert_eq!(cp.added.len(), 2);
        let names: Vec<String> = cp.added.iter().map(|&a| cp.completion.label(a)).collect();
        assert_eq!(names, vec!["{x,y}", "{y,z}"]);
        for &a in &cp.added {
            assert!(cp.is_up_ram(a) && cp.is_down_ram(a));
        }
        // y is the meet of u and w; v is the join of x and z.
        assert!(cp.is_up_ram(cp.embed[1]));
        assert!(cp.is_down_ram(cp.embed[4]));
        assert_eq!(cp.completion.covers().len(), 8);
        assert!(is_dm_complete(&cp.completion));
        assert!(!is_dm_complete(&p));
        assert!(!is_cycle_free(&p).unwrap());
    }

    #[test]
    fn double_bowtie_closure() {
        let p = double_bowtie();
        let j = ideal_closure(&p, &[0, 1]).unwrap();
        assert_eq!(j.members, vec![0, 1]);
        assert_eq!(j.upper_bounds, vec![3, 4]);
        assert_eq!(ideal_closure(&p, &[3]).unwrap().members, vec![0, 1, 3]);
        assert_eq!(ideal_closure(&p, &[3, 5]), Err(Error::Unbounded));
        assert_eq!(ideal_closure(&p, &[]), Err(Error::EmptyInput));
    }

    #[test]
    fn chain_is_its_own_completion() {
        let cp = dm_completion(&Poset::chain(4)).unwrap();
        assert!(cp.added.is_empty());
        assert_eq!(cp.completion.len(), 4);
        assert!(is_cycle_free(&Poset::chain(2)).unwrap());
    }

    #[test]
    fn antichain_has_no_ramification() {
        let (u, d) = ramification_points(&Poset::antichain(3)).unwrap();
        assert!(u.is_empty() && d.is_empty());
    }

    #[test]
    fn size_limit() {
        let edges: Vec<_> = (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, 4 + j))).collect();
        let p = Poset::new(8, &edges, PairMode::Relations).unwrap();
        let r = dm_completion_with(&p, &CompletionConfig { max_ideals: 5 });
        assert_eq!(r.unwrap_err(), Error::SizeLimit { cap: 5 });
        assert_eq!(dm_completion(&p).unwrap().completion.len(), 14);
    }

    #[test]
    fn matches_brute_force_on_small_posets() {
        let mut cases = vec![double_bowtie(), Poset::antichain(3), Poset::chain(3)];
        // Every two-level poset on 2 + 3 elements with each pair pattern.
        for mask in 0u32..64 {
            let rel: Vec<_> = (0..2)
                .cartesian_product(0..3)
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, (a, b))| (a, 2 + b))
                .collect();
            cases.push(Poset::new(5, &rel, PairMode::Relations).unwrap());
        }
        for p in &cases {
            let cp = dm_completion(p).unwrap();
            let got: Vec<Vec<usize>> = cp.ideals.iter().map(|j| j.members.clone()).collect();
            assert_eq!(got, brute_ideals(p));
            for (x, &e) in cp.embed.iter().enumerate() {
                for (y, &f) in cp.embed.iter().enumerate() {
                    assert_eq!(p.le(x, y), cp.completion.le(e, f));
                }
            }
        }
    }

    #[test]
    fn automorphisms_extend() {
        let p = double_bowtie();
        let cp = dm_completion(&p).unwrap();
        let swap = [2, 1, 0, 5, 4, 3];
        let ext = cp.extend_permutation(&swap);
        let mut sorted = ext.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..8).collect::<Vec<_>>());
        assert_eq!(ext[cp.added[0]], cp.added[1]);
    }
}

//! Structural checks on completions, each returning its violations.

use crate::completion::CompletedPoset;
use crate::poset::Poset;

/// All intervals `[a, b]` of `p` are chains, i.e. no two incomparable
/// elements have both a common lower and a common upper bound.
pub fn intervals_are_chains(p: &Poset) -> bool {
    (0..p.len()).all(|x| {
        (x + 1..p.len()).all(|y| {
            p.comparable(x, y)
                || p.below(x).intersection(p.below(y)).next().is_none()
                || p.above(x).intersection(p.above(y)).next().is_none()
        })
    })
}

/// Intervals of `M⁺` (the original elements plus ramification points) are chains.
pub fn m_plus_intervals_are_chains(c: &CompletedPoset) -> bool {
    intervals_are_chains(&c.m_plus().0)
}

/// Pairs `a < b` of the completion where `[a, b)` misses `M ∪ ↑Ram` or
/// `(a, b]` misses `M ∪ ↓Ram`.
pub fn density_violations(c: &CompletedPoset) -> Vec<(usize, usize)> {
    let q = &c.completion;
    let lower_ok = |x: usize| !c.is_added(x) || c.is_up_ram(x);
    let upper_ok = |x: usize| !c.is_added(x) || c.is_down_ram(x);
    let mut out = Vec::new();
    for a in 0..q.len() {
        for b in q.above(a).ones() {
            let inside = |x: usize| q.le(a, x) && q.le(x, b);
            let half_open_low = (0..q.len()).any(|x| x != b && inside(x) && lower_ok(x));
            let half_open_high = (0..q.len()).any(|x| x != a && inside(x) && upper_ok(x));
            if !half_open_low || !half_open_high {
                out.push((a, b));
            }
        }
    }
    out
}

/// Meets and joins of incomparable pairs of the completion itself, sorted.
pub fn completion_ramification(c: &CompletedPoset) -> (Vec<usize>, Vec<usize>) {
    let q = &c.completion;
    let mut up = Vec::new();
    let mut down = Vec::new();
    for a in 0..q.len() {
        for b in a + 1..q.len() {
            if q.comparable(a, b) {
                continue;
            }
            up.extend(q.meet(a, b));
            down.extend(q.join(a, b));
        }
    }
    for v in [&mut up, &mut down] {
        v.sort_unstable();
        v.dedup();
    }
    (up, down)
}

/// The ramification points of the original poset agree with those of its completion.
pub fn ramification_is_stable(c: &CompletedPoset) -> bool {
    let (up, down) = completion_ramification(c);
    up == c.up_ram && down == c.down_ram
}

/// Added elements of a two-level completion that lie above fewer than two
/// minimal or below fewer than two maximal original elements.
pub fn thin_added_elements(p: &Poset, c: &CompletedPoset) -> Vec<usize> {
    let q = &c.completion;
    let mins: Vec<usize> = p.minimal().into_iter().map(|x| c.embed[x]).collect();
    let maxs: Vec<usize> = p.maximal().into_iter().map(|x| c.embed[x]).collect();
    c.added
        .iter()
        .copied()
        .filter(|&z| {
            let below = mins.iter().filter(|&&m| q.lt(m, z)).count();
            let above = maxs.iter().filter(|&&m| q.lt(z, m)).count();
            below < 2 || above < 2
        })
        .collect()
}

/// Incidence structure of a semilinear space: every maximal element covers at
/// least two minimal ones, and two minimal elements lie below at most one
/// common maximal element.
pub fn is_semilinear(p: &Poset) -> bool {
    let mins = p.minimal();
    let maxs = p.maximal();
    let lines_ok = maxs.iter().all(|&y| p.is_minimal(y) || mins.iter().filter(|&&x| p.lt(x, y)).count() >= 2);
    let points_ok = mins.iter().enumerate().all(|(i, &a)| {
        mins[i + 1..]
            .iter()
            .all(|&b| maxs.iter().filter(|&&y| p.lt(a, y) && p.lt(b, y)).count() <= 1)
    });
    lines_ok && points_ok
}

/// Pairs of maximal elements where the meet-cover correspondence fails: the
/// meet of two maximal elements must be covered by both, and an element
/// covered by two maximal elements must be their meet.
pub fn meet_cover_violations(p: &Poset, c: &CompletedPoset) -> Vec<(usize, usize)> {
    let q = &c.completion;
    let maxs: Vec<usize> = p.maximal().into_iter().map(|x| c.embed[x]).collect();
    let mut out = Vec::new();
    for (i, &b) in maxs.iter().enumerate() {
        for &d in &maxs[i + 1..] {
            let meet = q.meet(b, d);
            let forward = meet.map_or(true, |y| q.lower_covers(b).contains(&y) && q.lower_covers(d).contains(&y));
            let backward = q
                .lower_covers(b)
                .iter()
                .filter(|y| q.lower_covers(d).contains(y))
                .all(|&y| meet == Some(y));
            if !forward || !backward {
                out.push((b, d));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::dm_completion;
    use crate::poset::PairMode;

    fn diamond() -> Poset {
        Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], PairMode::Covers).unwrap()
    }

    #[test]
    fn diamond_intervals() {
        assert!(!intervals_are_chains(&diamond()));
        assert!(intervals_are_chains(&Poset::chain(4)));
        assert!(intervals_are_chains(&Poset::antichain(3)));
        // A "V" is fine: the two tops share no upper bound.
        let v = Poset::new(3, &[(0, 1), (0, 2)], PairMode::Covers).unwrap();
        assert!(intervals_are_chains(&v));
    }

    #[test]
    fn square_completion() {
        // K_{2,2}: one added element in the middle.
        let p = Poset::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], PairMode::Covers).unwrap();
        let c = dm_completion(&p).unwrap();
        assert!(density_violations(&c).is_empty());
        assert!(ramification_is_stable(&c));
        assert!(thin_added_elements(&p, &c).is_empty());
        assert!(!is_semilinear(&p));
        assert!(meet_cover_violations(&p, &c).is_empty());
    }

    #[test]
    fn triangle_is_semilinear() {
        let p = Poset::new(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)], PairMode::Covers).unwrap();
        assert!(is_semilinear(&p));
    }
}

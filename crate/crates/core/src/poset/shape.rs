use super::Poset;
use crate::completion::dm_completion;
use crate::error::{Error, Result};
use crate::symmetry::{isomorphic, AutMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// Totally ordered with this many elements.
    Chain(usize),
    /// A bottom, a top and an antichain of `k >= 2` elements in between.
    KDiamond(usize),
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalShape {
    pub kind: ShapeKind,
    pub witness: Poset,
    /// Two (minimal, maximal) pairs of the input whose intervals differ.
    pub counterexample: Option<((usize, usize), (usize, usize))>,
}

/// Shape of a single finite poset.
pub fn shape_of(p: &Poset) -> ShapeKind {
    let n = p.len();
    if n > 0 && p.is_chain() {
        return ShapeKind::Chain(n);
    }
    if n >= 4 {
        let (mins, maxs) = (p.minimal(), p.maximal());
        if let ([a], [b]) = (mins.as_slice(), maxs.as_slice()) {
            let middle_ok = (0..n)
                .filter(|&c| c != *a && c != *b)
                .all(|c| p.upper_covers(c) == [*b] && p.lower_covers(c) == [*a]);
            if middle_ok {
                return ShapeKind::KDiamond(n - 2);
            }
        }
    }
    ShapeKind::Other
}

/// Common shape of the completion intervals `[x, y]` over all comparable
/// minimal `x` and maximal `y` of a two-level poset.
///
/// When two such intervals are not isomorphic the kind is `Other` and the
/// offending pairs are recorded.
pub fn classify_interval(m: &Poset) -> Result<IntervalShape> {
    if let Some(x) = (0..m.len()).find(|&x| !m.is_minimal(x) && !m.is_maximal(x)) {
        return Err(Error::BadParams(format!("not two-level: element {x} is neither minimal nor maximal")));
    }
    let pairs: Vec<(usize, usize)> = m.relations();
    let Some(&first) = pairs.first() else {
        return Err(Error::NoComparablePair);
    };
    let cp = dm_completion(m)?;
    let c = &cp.completion;
    let interval = |(x, y): (usize, usize)| c.interval(cp.embed[x], cp.embed[y]).map(|r| r.0);
    let witness = interval(first)?;
    for &pair in &pairs[1..] {
        let other = interval(pair)?;
        let same = other.len() == witness.len()
            && other.covers().len() == witness.covers().len()
            && isomorphic(&witness, &other, AutMode::OrderPreserving);
        if !same {
            return Ok(IntervalShape {
                kind: ShapeKind::Other,
                witness,
                counterexample: Some((first, pair)),
            });
        }
    }
    Ok(IntervalShape {
        kind: shape_of(&witness),
        witness,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PairMode;

    fn complete_bipartite(m: usize, n: usize) -> Poset {
        let rel: Vec<_> = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
        Poset::new(m + n, &rel, PairMode::Relations).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(shape_of(&Poset::chain(3)), ShapeKind::Chain(3));
        let d = Poset::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], PairMode::Covers).unwrap();
        assert_eq!(shape_of(&d), ShapeKind::KDiamond(3));
        assert_eq!(shape_of(&Poset::antichain(2)), ShapeKind::Other);
    }

    #[test]
    fn complete_bipartite_intervals_are_three_chains() {
        let s = classify_interval(&complete_bipartite(3, 3)).unwrap();
        assert_eq!(s.kind, ShapeKind::Chain(3));
        assert!(s.counterexample.is_none());
    }

    #[test]
    fn double_bowtie_intervals_differ() {
        let p = Poset::new(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)], PairMode::Relations).unwrap();
        let s = classify_interval(&p).unwrap();
        assert_eq!(s.kind, ShapeKind::Other);
        assert!(s.counterexample.is_some());
    }

    #[test]
    fn errors() {
        assert_eq!(classify_interval(&Poset::antichain(2)), Err(Error::NoComparablePair));
        assert!(matches!(classify_interval(&Poset::chain(3)), Err(Error::BadParams(_))));
    }
}

use super::{Direction, Poset};

/// Cones of an element: classes of its strict up-set (or down-set) under
/// "some element strictly between the base and both of them".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConePartition {
    pub base: usize,
    pub direction: Direction,
    /// Each class sorted; classes sorted by least member.
    pub classes: Vec<Vec<usize>>,
    pub ro: usize,
}

/// Partitions the strict up-set (down-set) of `x` into cones.
///
/// Two elements `a, b > x` are joined when some `y` with `x < y <= a, b`
/// exists; classes are the transitive closure, i.e. the components of the
/// comparability graph restricted to the strict up-set.
pub fn cones(p: &Poset, x: usize, direction: Direction) -> ConePartition {
    let set = match direction {
        Direction::Up => p.above(x),
        Direction::Down => p.below(x),
    };
    let members: Vec<usize> = set.ones().collect();
    let mut class_of = vec![usize::MAX; p.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &s in &members {
        if class_of[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[s] = id;
        let mut cls = vec![s];
        let mut i = 0;
        while i < cls.len() {
            let v = cls[i];
            i += 1;
            for &w in p.upper_covers(v).iter().chain(p.lower_covers(v)) {
                if set.contains(w) && class_of[w] == usize::MAX {
                    class_of[w] = id;
                    cls.push(w);
                }
            }
        }
        cls.sort_unstable();
        classes.push(cls);
    }
    let ro = classes.len();
    ConePartition {
        base: x,
        direction,
        classes,
        ro,
    }
}

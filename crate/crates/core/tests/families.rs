mod common;

use lattice_loom::completion::dm_completion;
use lattice_loom::generators::{generate_bipartite, Family};
use lattice_loom::poset::{cones, PairMode};
use lattice_loom::symmetry::{is_locally_s_arc_transitive, is_s_arc_transitive, isomorphic};
use lattice_loom::{classify_interval, AutMode, BipartiteGraph, Direction, Poset, ShapeKind};

fn bip(f: Family) -> BipartiteGraph {
    generate_bipartite(&f).unwrap()
}

/// Minimal elements below both of two points, counted directly.
fn common_lower(g: &BipartiteGraph, a: usize, b: usize) -> usize {
    g.neighbors(a).iter().filter(|y| g.neighbors(b).contains(y)).count()
}

fn check_design(g: &BipartiteGraph, v: usize, k: usize, lambda: usize) {
    let points = g.lower();
    let blocks = g.upper();
    assert_eq!(points.len(), v);
    assert!(blocks.iter().all(|&b| g.neighbors(b).len() == k));
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            assert_eq!(common_lower(g, a, b), lambda);
        }
    }
}

#[test]
fn complete_bipartite_add_one_middle_element() {
    for m in 2..=5 {
        for n in 2..=5 {
            let p = bip(Family::CompleteBipartite(m, n)).to_poset();
            let c = dm_completion(&p).unwrap();
            assert_eq!(c.added.len(), 1, "K_{m},{n}");
            assert_eq!(common::added_ideals_two_level(&p).len(), 1);
            assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::Chain(3));
        }
    }
}

#[test]
fn small_completions_match_subset_closure() {
    for f in [
        Family::Crown(3),
        Family::Crown(4),
        Family::CompleteBipartite(2, 3),
        Family::ComplementMatching(4),
        Family::Cube(3),
        Family::FanoComplement,
    ] {
        let p = bip(f.clone()).to_poset();
        let c = dm_completion(&p).unwrap();
        let mut ours: Vec<Vec<usize>> = c.ideals.iter().map(|j| j.members.clone()).collect();
        ours.sort();
        assert_eq!(ours, common::ideals_by_subsets(&p), "{f}");
    }
}

#[test]
fn fano_complement_numbers() {
    let g = bip(Family::FanoComplement);
    check_design(&g, 7, 4, 2);
    assert!(is_locally_s_arc_transitive(g.graph(), 2).unwrap().verdict);
    let p = g.to_poset();
    let c = dm_completion(&p).unwrap();
    assert_eq!(c.completion.level_sizes(), vec![7, 21, 7]);
    assert_eq!(common::added_ideals_two_level(&p).len(), 21);
    assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::KDiamond(3));
    for &z in &c.added {
        assert_eq!(cones(&c.completion, z, Direction::Up).ro, 2);
        assert_eq!(cones(&c.completion, z, Direction::Down).ro, 2);
    }
    for a in p.minimal() {
        let up = c.completion.above(c.embed[a]);
        assert_eq!(up.ones().filter(|&z| c.is_added(z)).count(), 6);
        assert_eq!(up.ones().filter(|&z| !c.is_added(z)).count(), 4);
    }
}

#[test]
fn fano_complement_is_the_binary_plane_non_incidence_graph() {
    let a = bip(Family::FanoComplement);
    let b = bip(Family::NonIncidence { n: 3, q: 2 });
    assert!(isomorphic(&a, &b, AutMode::OrderPreserving));
}

#[test]
fn binary_three_space_numbers() {
    let g = bip(Family::Subspace { n: 4, q: 2 });
    check_design(&g, 15, 7, 3);
    assert!(is_s_arc_transitive(g.graph(), 2).unwrap().verdict);
    let p = g.to_poset();
    let c = dm_completion(&p).unwrap();
    assert_eq!(c.completion.level_sizes(), vec![15, 35, 15]);
    assert_eq!(common::added_ideals_two_level(&p).len(), 35);
    assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::KDiamond(3));
    for &z in &c.added {
        assert_eq!(cones(&c.completion, z, Direction::Up).ro, 3);
        assert_eq!(cones(&c.completion, z, Direction::Down).ro, 3);
    }
    let r = 3;
    for a in p.minimal() {
        let up = c.completion.above(c.embed[a]);
        assert_eq!(up.ones().filter(|&z| c.is_added(z)).count(), r * (r - 1) + 1);
        assert_eq!(up.ones().filter(|&z| !c.is_added(z)).count(), r * (r - 1) + 1);
    }
}

#[test]
fn ternary_three_space_numbers() {
    let p = bip(Family::Subspace { n: 4, q: 3 }).to_poset();
    let c = dm_completion(&p).unwrap();
    assert_eq!(c.completion.level_sizes(), vec![40, 130, 40]);
    assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::KDiamond(4));
    for &z in &c.added {
        assert_eq!(cones(&c.completion, z, Direction::Up).ro, 4);
        assert_eq!(cones(&c.completion, z, Direction::Down).ro, 4);
    }
}

#[test]
fn non_incidence_level_counts() {
    let p = bip(Family::NonIncidence { n: 3, q: 2 }).to_poset();
    assert_eq!(dm_completion(&p).unwrap().completion.level_sizes(), vec![7, 21, 7]);
    let p = bip(Family::NonIncidence { n: 4, q: 2 }).to_poset();
    let c = dm_completion(&p).unwrap();
    assert_eq!(c.completion.level_sizes(), vec![15, 105, 105, 15]);
    assert_eq!(common::added_ideals_two_level(&p).len(), 210);
}

#[test]
fn cube_completion_adds_distance_two_pairs() {
    for n in 3..=5usize {
        let g = bip(Family::Cube(n));
        assert!(is_s_arc_transitive(g.graph(), 1).unwrap().verdict);
        assert!(is_s_arc_transitive(g.graph(), 2).unwrap().verdict);
        let p = g.to_poset();
        let labels = p.labels().unwrap().to_vec();
        let c = dm_completion(&p).unwrap();
        let distance = |a: usize, b: usize| labels[a].chars().zip(labels[b].chars()).filter(|(x, y)| x != y).count();
        for &z in &c.added {
            let m = &c.ideals[z].members;
            assert_eq!(m.len(), 2);
            assert_eq!(distance(m[0], m[1]), 2);
        }
        let lower = g.lower();
        let pairs = lower
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| lower[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| distance(a, b) == 2)
            .count();
        assert_eq!(c.added.len(), pairs);
        assert_eq!(pairs, (1 << (n - 2)) * n * (n - 1) / 2);
        assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::KDiamond(n - 1));
    }
}

#[test]
fn complement_of_matching_completes_to_subset_lattice() {
    let g = bip(Family::ComplementMatching(4));
    assert!(is_s_arc_transitive(g.graph(), 2).unwrap().verdict);
    let p = g.to_poset();
    let c = dm_completion(&p).unwrap();
    assert_eq!(c.completion.len(), 14);
    // Non-empty proper subsets of a 4-set under inclusion.
    let sets: Vec<u32> = (1..15).collect();
    let mut rel = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if a != b && a & b == a {
                rel.push((i, j));
            }
        }
    }
    let boolean = Poset::new(14, &rel, PairMode::Relations).unwrap();
    assert!(isomorphic(&c.completion, &boolean, AutMode::OrderPreserving));
    assert_eq!(classify_interval(&p).unwrap().kind, ShapeKind::KDiamond(2));
}

#[test]
fn crowns_are_semilinear_and_complete() {
    for n in 3..=7 {
        let p = bip(Family::Crown(n)).to_poset();
        let c = dm_completion(&p).unwrap();
        assert!(c.added.is_empty());
        assert!(common::added_ideals_two_level(&p).is_empty());
    }
}

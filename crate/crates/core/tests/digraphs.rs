use std::collections::{BTreeSet, VecDeque};

use lattice_loom::digraph::{
    alternating_class, alternating_classes, check_p_properties, class_graph, descendants, digraph_from_poset,
    intersection_property, is_desc_tree, poset_of, reachability_graph, y_transitive, Digraph,
};
use lattice_loom::generators::corpus::digraph_corpus;
use lattice_loom::generators::{
    complete_bipartite, crown, directed_tree, dl_construction, generate, Family, Structure,
};
use lattice_loom::poset::cones;
use lattice_loom::symmetry::isomorphic;
use lattice_loom::{AutMode, Direction};

/// Alternating closure of one arc by plain breadth-first search over arcs.
fn alternating_bfs(d: &Digraph, start: (usize, usize)) -> BTreeSet<(usize, usize)> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, b)) = queue.pop_front() {
        for &x in d.arcs() {
            if (x.0 == a || x.1 == b) && seen.insert(x) {
                queue.push_back(x);
            }
        }
    }
    seen
}

#[test]
fn tree_round_trips_through_its_order() {
    let t = directed_tree(3, 2, 3).unwrap();
    let back = digraph_from_poset(&poset_of(&t).unwrap());
    assert_eq!(back.arcs(), t.arcs());
}

#[test]
fn tree_root_has_three_upper_cones() {
    let t = directed_tree(3, 2, 2).unwrap();
    let p = poset_of(&t).unwrap();
    assert_eq!(cones(&p, 0, Direction::Up).ro, 3);
    assert_eq!(cones(&p, 0, Direction::Down).ro, 2);
}

#[test]
fn alternating_classes_match_search() {
    for e in digraph_corpus() {
        let d = &e.item;
        for &a in d.arcs().iter().step_by(7) {
            let ours: BTreeSet<_> = alternating_class(d, a).unwrap().into_iter().collect();
            assert_eq!(ours, alternating_bfs(d, a), "{}", e.name);
        }
    }
}

#[test]
fn alternating_relation_is_an_equivalence() {
    for e in digraph_corpus() {
        let d = &e.item;
        let ids = alternating_classes(d);
        for (i, &a) in d.arcs().iter().enumerate() {
            let class = alternating_class(d, a).unwrap();
            assert!(class.contains(&a));
            for &b in &class {
                let j = d.arc_index(b.0, b.1).unwrap();
                assert_eq!(ids[i], ids[j], "{}", e.name);
            }
        }
    }
}

#[test]
fn descendants_and_ancestors_are_adjoint() {
    for e in digraph_corpus() {
        let d = &e.item;
        let n = d.len();
        let down: Vec<Vec<usize>> = (0..n).map(|v| descendants(d, v, Direction::Down)).collect();
        for y in (0..n).step_by(3) {
            let up = descendants(d, y, Direction::Up);
            for x in 0..n {
                assert_eq!(down[x].contains(&y), up.contains(&x), "{}", e.name);
            }
        }
    }
}

#[test]
fn trees_have_the_intersection_property() {
    for (m, n) in [(2, 2), (3, 2), (2, 3)] {
        let t = directed_tree(m, n, 3).unwrap();
        assert!(intersection_property(&t).holds);
        for v in 0..t.len() {
            assert!(is_desc_tree(&t, v));
        }
    }
}

#[test]
fn tree_classes_are_stars_and_y_shapes_are_one_orbit() {
    let t = directed_tree(2, 2, 4).unwrap();
    let r = reachability_graph(&t).unwrap();
    // In a tree each arc only alternates back onto itself through shared endpoints.
    for c in r.complete_classes() {
        let (g, _) = class_graph(c);
        assert!(g.is_connected());
        assert_eq!(g.edges().len() + 1, g.len());
    }
    let y = y_transitive(&t, 2);
    assert!(y.y_interior > 0 && y.verdict);
}

#[test]
fn alternating_line_routes_to_the_tree() {
    let a = generate(&Family::DlAlt { radius: 3 }).unwrap();
    let Structure::Digraph(a) = a else { panic!("digraph expected") };
    assert_eq!(a, directed_tree(2, 2, 3).unwrap());
}

#[test]
fn dl_of_square_recovers_square() {
    let k22 = complete_bipartite(2, 2).unwrap();
    let d = dl_construction(&k22, 3).unwrap();
    let r = reachability_graph(&d).unwrap();
    let mut complete = 0;
    for c in r.complete_classes() {
        complete += 1;
        let (g, _) = class_graph(c);
        assert!(isomorphic(&g, &k22, AutMode::OrderPreserving));
    }
    assert!(complete > 0);
    assert!(r.bipartite);
}

#[test]
fn dl_of_hexagon_window() {
    let c6 = crown(3).unwrap();
    let d = dl_construction(&c6, 3).unwrap();
    let r = reachability_graph(&d).unwrap();
    let mut complete = 0;
    for c in r.complete_classes() {
        complete += 1;
        // A 6-cycle: six vertices, six arcs, every vertex on two of them, connected.
        let (g, _) = class_graph(c);
        assert_eq!(g.len(), 6);
        assert_eq!(g.edges().len(), 6);
        assert!((0..6).all(|v| g.neighbors(v).len() == 2));
        assert!(g.is_connected());
    }
    assert!(complete > 0);
    for v in (0..d.len()).filter(|&v| !d.is_boundary(v)) {
        assert!(is_desc_tree(&d, v));
    }
    assert!(intersection_property(&d).holds);
    let p = check_p_properties(&d, &c6).unwrap();
    assert!(p.all_ok() && p.window_relative);
    assert!(y_transitive(&d, 2).verdict);
}

#[test]
fn incomplete_patterns_lose_the_intersection_property() {
    // Two upper vertices of K22 share both lower neighbours, so their
    // descendant sets meet in more than one principal set.
    let k22 = complete_bipartite(2, 2).unwrap();
    assert!(!lattice_loom::is_dm_complete(&k22.to_poset()));
    let d = dl_construction(&k22, 2).unwrap();
    let r = intersection_property(&d);
    assert!(!r.holds && r.witness.is_some());
    assert!(check_p_properties(&d, &k22).unwrap().all_ok());
}

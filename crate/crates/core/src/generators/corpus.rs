//! Fixed test corpora: two-level posets and graded digraphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{generate, Family, Structure};
use crate::digraph::{digraph_from_poset, Digraph};
use crate::graph::BipartiteGraph;
use crate::poset::{PairMode, Poset};

pub const DEFAULT_SEED: u64 = 20;

#[derive(Debug, Clone)]
pub struct CorpusEntry<T> {
    pub name: String,
    pub item: T,
}

/// Random bipartite graph with `nx` lower and `ny` upper vertices, each edge
/// present with probability `p`.
pub fn random_bipartite(nx: usize, ny: usize, p: f64, rng: &mut impl Rng) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..nx {
        for j in 0..ny {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::from_parts(nx, ny, &edges).expect("edges index both sides")
}

fn family_posets(families: &[Family]) -> Vec<CorpusEntry<Poset>> {
    families
        .iter()
        .map(|f| match generate(f) {
            Ok(Structure::Bipartite(g)) => CorpusEntry { name: f.to_string(), item: g.to_poset() },
            _ => unreachable!("corpus families are valid bipartite families"),
        })
        .collect()
}

/// Two-level posets: crowns, complete bipartite graphs, complements of
/// matchings, cubes, designs, projective geometries, two overlapping
/// bowties and a few seeded random graphs (connected ones only).
pub fn two_level_corpus(seed: u64) -> Vec<CorpusEntry<Poset>> {
    use Family::*;
    let mut out = family_posets(&[
        Crown(2),
        Crown(3),
        Crown(4),
        Crown(5),
        Crown(6),
        CompleteBipartite(2, 3),
        CompleteBipartite(3, 3),
        CompleteBipartite(3, 4),
        ComplementMatching(3),
        ComplementMatching(4),
        ComplementMatching(5),
        Cube(3),
        Cube(4),
        FanoIncidence,
        FanoComplement,
        Subspace { n: 3, q: 3 },
        Subspace { n: 4, q: 2 },
    ]);
    let bowtie = Poset::new(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)], PairMode::Covers)
        .expect("two-level relation");
    out.push(CorpusEntry { name: "double-bowtie".into(), item: bowtie });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut made = 0;
    while made < 5 {
        let nx = rng.gen_range(3..=5);
        let ny = rng.gen_range(3..=5);
        let g = random_bipartite(nx, ny, 0.5, &mut rng);
        if g.is_connected() {
            out.push(CorpusEntry { name: format!("random-{made} ({nx}+{ny})"), item: g.to_poset() });
            made += 1;
        }
    }
    out
}

/// Graded digraphs: directed trees, DL-digraphs and Hasse digraphs of
/// completed two-level posets.
pub fn digraph_corpus() -> Vec<CorpusEntry<Digraph>> {
    use Family::*;
    let families = [
        DirectedTree { m: 2, n: 2, radius: 3 },
        DirectedTree { m: 3, n: 2, radius: 2 },
        Dl { delta: Box::new(Crown(3)), radius: 3 },
        Dl { delta: Box::new(CompleteBipartite(2, 2)), radius: 3 },
        Dl { delta: Box::new(CompleteBipartite(2, 3)), radius: 2 },
        Dl { delta: Box::new(Crown(4)), radius: 2 },
        Dl { delta: Box::new(Cube(3)), radius: 2 },
    ];
    let mut out: Vec<CorpusEntry<Digraph>> = families
        .iter()
        .map(|f| match generate(f) {
            Ok(Structure::Digraph(d)) => CorpusEntry { name: f.to_string(), item: d },
            _ => unreachable!("corpus families are valid digraph families"),
        })
        .collect();
    for f in [Crown(3), FanoComplement] {
        let Ok(Structure::Bipartite(g)) = generate(&f) else {
            unreachable!("bipartite family");
        };
        let c = crate::completion::dm_completion(&g.to_poset()).expect("small completion");
        out.push(CorpusEntry { name: format!("hasse of completed {f}"), item: digraph_from_poset(&c.completion) });
    }
    out
}

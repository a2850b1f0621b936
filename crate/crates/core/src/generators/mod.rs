//! Constructors for the concrete families: crowns, complete bipartite graphs,
//! complements of perfect matchings, generalized cubes, Fano-plane designs,
//! projective point/hyperplane graphs, directed trees, DL-digraphs and the
//! finite generic bipartite graph.

pub mod corpus;
pub mod field;
mod generic;
mod trees;

use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

pub use field::FpVector;
pub use generic::{generic_bipartite, generic_bipartite_from, GENERIC_SAMPLE_CAP};
pub use trees::{dl_construction, dl_construction_with, directed_tree, BijectionPolicy};

/// A family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The `2n`-crown: `b_i < t_i` and `b_i < t_{i+1 mod n}`.
    Crown(usize),
    CompleteBipartite(usize, usize),
    /// `x_i < y_j` iff `i != j`.
    ComplementMatching(usize),
    /// Binary strings of length `n`, even weight below, odd weight above,
    /// joined when they differ in one place.
    Cube(usize),
    FanoIncidence,
    /// Points against the 4-point complements of the Fano lines.
    FanoComplement,
    /// Projective points below the hyperplanes containing them.
    Subspace { n: usize, q: u32 },
    /// Projective points below the hyperplanes not containing them.
    NonIncidence { n: usize, q: u32 },
    /// Truncated directed tree with in-valency `m` and out-valency `n`.
    DirectedTree { m: usize, n: usize, radius: usize },
    /// Truncated DL-digraph of a bipartite pattern given by another family.
    Dl { delta: Box<Family>, radius: usize },
    /// Truncated DL-digraph of the alternating line, i.e. the (2,2)-tree.
    DlAlt { radius: usize },
    Generic { rounds: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Bipartite(BipartiteGraph),
    Digraph(Digraph),
}

impl Family {
    /// Parses a family name and integer parameters, e.g. `("subspace", [4, 2])`.
    ///
    /// `dl` takes `k radius` and uses the `2k`-crown as pattern.
    pub fn parse(name: &str, params: &[u64]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let u = |i: usize| params[i] as usize;
        let f = match name.to_ascii_lowercase().as_str() {
            "crown" => {
                want(1)?;
                Family::Crown(u(0))
            }
            "complete-bipartite" | "kmn" => {
                want(2)?;
                Family::CompleteBipartite(u(0), u(1))
            }
            "complement-matching" => {
                want(1)?;
                Family::ComplementMatching(u(0))
            }
            "cube" => {
                want(1)?;
                Family::Cube(u(0))
            }
            "fano" | "fano-incidence" => {
                want(0)?;
                Family::FanoIncidence
            }
            "fano-complement" => {
                want(0)?;
                Family::FanoComplement
            }
            "subspace" => {
                want(2)?;
                Family::Subspace { n: u(0), q: params[1] as u32 }
            }
            "non-incidence" => {
                want(2)?;
                Family::NonIncidence { n: u(0), q: params[1] as u32 }
            }
            "directed-tree" | "tree" => {
                want(3)?;
                Family::DirectedTree { m: u(0), n: u(1), radius: u(2) }
            }
            "dl" => {
                want(2)?;
                Family::Dl { delta: Box::new(Family::Crown(u(0))), radius: u(1) }
            }
            "dl-alt" => {
                want(1)?;
                Family::DlAlt { radius: u(0) }
            }
            "generic" => {
                want(2)?;
                Family::Generic { rounds: u(0), seed: params[1] }
            }
            other => return Err(Error::BadParams(format!("unknown family '{other}'"))),
        };
        Ok(f)
    }

    /// Names accepted by [`Family::parse`].
    pub const NAMES: &'static [&'static str] = &[
        "crown",
        "complete-bipartite",
        "complement-matching",
        "cube",
        "fano",
        "fano-complement",
        "subspace",
        "non-incidence",
        "directed-tree",
        "dl",
        "dl-alt",
        "generic",
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Crown(n) => write!(f, "crown {n}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete-bipartite {m} {n}"),
            Family::ComplementMatching(n) => write!(f, "complement-matching {n}"),
            Family::Cube(n) => write!(f, "cube {n}"),
            Family::FanoIncidence => write!(f, "fano"),
            Family::FanoComplement => write!(f, "fano-complement"),
            Family::Subspace { n, q } => write!(f, "subspace {n} {q}"),
            Family::NonIncidence { n, q } => write!(f, "non-incidence {n} {q}"),
            Family::DirectedTree { m, n, radius } => write!(f, "directed-tree {m} {n} {radius}"),
            Family::Dl { delta, radius } => write!(f, "dl ({delta}) {radius}"),
            Family::DlAlt { radius } => write!(f, "dl-alt {radius}"),
            Family::Generic { rounds, seed } => write!(f, "generic {rounds} {seed}"),
        }
    }
}

pub fn generate(family: &Family) -> Result<Structure> {
    use Structure::{Bipartite, Digraph as Di};
    Ok(match family {
        Family::Crown(n) => Bipartite(crown(*n)?),
        Family::CompleteBipartite(m, n) => Bipartite(complete_bipartite(*m, *n)?),
        Family::ComplementMatching(n) => Bipartite(complement_matching(*n)?),
        Family::Cube(n) => Bipartite(cube(*n)?),
        Family::FanoIncidence => Bipartite(fano(false)),
        Family::FanoComplement => Bipartite(fano(true)),
        Family::Subspace { n, q } => Bipartite(subspace(*n, *q, true)?),
        Family::NonIncidence { n, q } => Bipartite(subspace(*n, *q, false)?),
        Family::DirectedTree { m, n, radius } => Di(directed_tree(*m, *n, *radius)?),
        Family::Dl { delta, radius } => match generate(delta)? {
            Bipartite(g) => Di(dl_construction(&g, *radius)?),
            Di(_) => return Err(Error::BadParams("DL pattern must be a bipartite graph".into())),
        },
        Family::DlAlt { radius } => Di(directed_tree(2, 2, *radius)?),
        Family::Generic { rounds, seed } => Bipartite(generic_bipartite(*rounds, *seed)),
    })
}

/// Generates a family expected to be bipartite.
pub fn generate_bipartite(family: &Family) -> Result<BipartiteGraph> {
    match generate(family)? {
        Structure::Bipartite(g) => Ok(g),
        Structure::Digraph(_) => Err(Error::BadParams(format!("{family} is not a bipartite family"))),
    }
}

fn labelled(nx: usize, ny: usize, edges: &[(usize, usize)], lx: Vec<String>, ly: Vec<String>) -> BipartiteGraph {
    let mut labels = lx;
    labels.extend(ly);
    BipartiteGraph::from_parts(nx, ny, edges)
        .expect("generated edges cross the parts")
        .with_labels(labels)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn crown(n: usize) -> Result<BipartiteGraph> {
    if n < 2 {
        return Err(Error::BadParams(format!("crown needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n).flat_map(|i| [(i, i), (i, (i + 1) % n)]).collect();
    Ok(labelled(n, n, &edges, names("b", n), names("t", n)))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<BipartiteGraph> {
    if m < 1 || n < 1 {
        return Err(Error::BadParams(format!("complete bipartite needs both parts non-empty, got {m}, {n}")));
    }
    let edges: Vec<_> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    Ok(labelled(m, n, &edges, names("x", m), names("y", n)))
}

pub fn complement_matching(n: usize) -> Result<BipartiteGraph> {
    if n < 2 {
        return Err(Error::BadParams(format!("complement of a perfect matching needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    Ok(labelled(n, n, &edges, names("x", n), names("y", n)))
}

pub fn cube(n: usize) -> Result<BipartiteGraph> {
    if !(2..=16).contains(&n) {
        return Err(Error::BadParams(format!("cube needs 2 <= n <= 16, got {n}")));
    }
    let words: Vec<u32> = (0..1u32 << n).collect();
    let even: Vec<u32> = words.iter().copied().filter(|w| w.count_ones() % 2 == 0).collect();
    let odd: Vec<u32> = words.iter().copied().filter(|w| w.count_ones() % 2 == 1).collect();
    let mut edges = Vec::new();
    for (i, &x) in even.iter().enumerate() {
        for (j, &y) in odd.iter().enumerate() {
            if (x ^ y).count_ones() == 1 {
                edges.push((i, j));
            }
        }
    }
    let word = |w: &u32| (0..n).map(|b| if w >> (n - 1 - b) & 1 == 1 { '1' } else { '0' }).collect::<String>();
    Ok(labelled(
        even.len(),
        odd.len(),
        &edges,
        even.iter().map(word).collect(),
        odd.iter().map(word).collect(),
    ))
}

/// Lines of the Fano plane on points `0..7`: translates of `{0, 1, 3}` mod 7.
pub fn fano_lines() -> Vec<[usize; 3]> {
    (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect()
}

fn fano(complement: bool) -> BipartiteGraph {
    let lines = fano_lines();
    let mut edges = Vec::new();
    for p in 0..7 {
        for (j, l) in lines.iter().enumerate() {
            if l.contains(&p) != complement {
                edges.push((p, j));
            }
        }
    }
    let block = if complement { "B" } else { "L" };
    labelled(7, 7, &edges, names("p", 7), names(block, 7))
}

fn subspace(n: usize, q: u32, incidence: bool) -> Result<BipartiteGraph> {
    if n < 3 {
        return Err(Error::BadParams(format!("subspace graphs need n >= 3, got {n}")));
    }
    field::check_field(q)?;
    if (q as f64).powi(n as i32) > 1e6 {
        return Err(Error::BadParams(format!("q^n = {q}^{n} is too large")));
    }
    // Hyperplanes are keyed by their normalized normal covectors.
    let points = FpVector::projective_points(n, q);
    let mut edges = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, h) in points.iter().enumerate() {
            if (h.dot(x) == 0) == incidence {
                edges.push((i, j));
            }
        }
    }
    let k = points.len();
    Ok(labelled(
        k,
        k,
        &edges,
        points.iter().map(|p| format!("<{p}>")).collect(),
        points.iter().map(|h| format!("[{h}]")).collect(),
    ))
}

//! Single-line JSON structure files.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use lattice_loom::digraph::Digraph;
use lattice_loom::poset::PairMode;
use lattice_loom::{BipartiteGraph, Error as CoreError, Poset, Side};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poset,
    Bipartite,
    Digraph,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Poset => "poset",
            Kind::Bipartite => "bipartite",
            Kind::Digraph => "digraph",
        })
    }
}

/// On-disk form. Poset edges are `a < b` pairs, bipartite edges join a lower
/// and an upper vertex, digraph edges are arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: Kind,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<BTreeMap<usize, i64>>,
    /// Part of each vertex: 0 lower, 1 upper.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Poset(Poset),
    Bipartite(BipartiteGraph),
    Digraph(Digraph),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Poset(_) => Kind::Poset,
            Structure::Bipartite(_) => Kind::Bipartite,
            Structure::Digraph(_) => Kind::Digraph,
        }
    }

    /// The structure read as a poset: bipartite graphs put the lower side
    /// below, digraphs are read through their reachability order.
    pub fn to_poset(&self) -> Result<Poset, CoreError> {
        match self {
            Structure::Poset(p) => Ok(p.clone()),
            Structure::Bipartite(g) => Ok(g.to_poset()),
            Structure::Digraph(d) => lattice_loom::digraph::poset_of(d),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        match self {
            Structure::Poset(p) => p.labels(),
            Structure::Bipartite(g) => g.labels(),
            Structure::Digraph(d) => d.labels(),
        }
    }
}

impl From<lattice_loom::generators::Structure> for Structure {
    fn from(s: lattice_loom::generators::Structure) -> Self {
        match s {
            lattice_loom::generators::Structure::Bipartite(g) => Structure::Bipartite(g),
            lattice_loom::generators::Structure::Digraph(d) => Structure::Digraph(d),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid structure ({invariant}): {detail}")]
    Validation { invariant: &'static str, detail: String },
}

impl FileError {
    /// Name of the violated invariant for validation errors.
    pub fn invariant(&self) -> Option<&'static str> {
        match self {
            FileError::Validation { invariant, .. } => Some(invariant),
            _ => None,
        }
    }
}

fn invalid(invariant: &'static str, detail: impl Into<String>) -> FileError {
    FileError::Validation { invariant, detail: detail.into() }
}

fn from_core(e: CoreError) -> FileError {
    let invariant = match &e {
        CoreError::Cycle(_) => "acyclic",
        CoreError::NotAsymmetric(..) => "asymmetry",
        CoreError::Loop(_) => "irreflexive",
        CoreError::NotBipartite(..) => "bipartition",
        CoreError::OutOfRange { .. } => "range",
        CoreError::NotGraded(..) => "levels",
        _ => "structure",
    };
    invalid(invariant, e.to_string())
}

impl StructureFile {
    pub fn from_structure(s: &Structure) -> StructureFile {
        let mut f = StructureFile {
            kind: s.kind(),
            n: 0,
            edges: Vec::new(),
            levels: None,
            bipartition: None,
            boundary: None,
            labels: s.labels().map(<[String]>::to_vec),
            meta: BTreeMap::new(),
        };
        match s {
            Structure::Poset(p) => {
                f.n = p.len();
                f.edges = p.covers();
            }
            Structure::Bipartite(g) => {
                f.n = g.len();
                f.edges = g.edges();
                f.bipartition = Some(g.sides().iter().map(|s| u8::from(*s == Side::Upper)).collect());
            }
            Structure::Digraph(d) => {
                f.n = d.len();
                f.edges = d.arcs().to_vec();
                f.levels = d.levels().map(|l| l.iter().copied().enumerate().collect());
                if d.has_boundary() {
                    f.boundary = Some(d.boundary());
                }
            }
        }
        f
    }

    /// Validates the file and builds the structure it describes.
    pub fn to_structure(&self) -> Result<Structure, FileError> {
        let n = self.n;
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(invalid("range", format!("edge ({a}, {b}) outside 0..{n}")));
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a != b && self.edges.contains(&(b, a))) {
            return Err(invalid("asymmetry", format!("both ({a}, {b}) and ({b}, {a}) present")));
        }
        if let Some(l) = &self.labels {
            if l.len() != n {
                return Err(invalid("labels", format!("{} labels for {n} vertices", l.len())));
            }
        }
        let s = match self.kind {
            Kind::Poset => {
                let p = Poset::new(n, &self.edges, PairMode::Relations).map_err(from_core)?;
                Structure::Poset(match &self.labels {
                    Some(l) => p.with_labels(l.clone()),
                    None => p,
                })
            }
            Kind::Bipartite => {
                let parts = self
                    .bipartition
                    .as_ref()
                    .ok_or_else(|| invalid("bipartition", "bipartite file needs a part assignment"))?;
                if parts.len() != n || parts.iter().any(|&x| x > 1) {
                    return Err(invalid("bipartition", "part assignment must give 0 or 1 for every vertex"));
                }
                let side = parts.iter().map(|&x| if x == 0 { Side::Lower } else { Side::Upper }).collect();
                let edges: Vec<(usize, usize)> =
                    self.edges.iter().map(|&(a, b)| if parts[a] == 0 { (a, b) } else { (b, a) }).collect();
                let g = BipartiteGraph::new(side, &edges).map_err(from_core)?;
                Structure::Bipartite(match &self.labels {
                    Some(l) => g.with_labels(l.clone()),
                    None => g,
                })
            }
            Kind::Digraph => {
                let mut d = Digraph::new(n, &self.edges).map_err(from_core)?;
                if let Some(levels) = &self.levels {
                    if levels.len() != n || levels.keys().any(|&v| v >= n) {
                        return Err(invalid("levels", "level map must cover every vertex exactly once"));
                    }
                    d = d.with_levels(levels.values().copied().collect()).map_err(from_core)?;
                }
                if let Some(b) = &self.boundary {
                    d = d.with_boundary(b).map_err(from_core)?;
                }
                if let Some(l) = &self.labels {
                    d = d.with_labels(l.clone());
                }
                Structure::Digraph(d)
            }
        };
        Ok(s)
    }
}

/// Parses the single JSON object of a structure file.
pub fn parse(text: &str) -> Result<StructureFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// One line of JSON with a trailing newline.
pub fn to_text(file: &StructureFile) -> String {
    let mut s = serde_json::to_string(file).expect("structure files serialize");
    s.push('\n');
    s
}

pub fn load(path: &Path) -> Result<Structure, FileError> {
    load_file(path)?.to_structure()
}

pub fn load_file(path: &Path) -> Result<StructureFile, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.into(), source })?;
    parse(&text)
}

pub fn save(s: &Structure, path: &Path) -> Result<(), FileError> {
    let text = to_text(&StructureFile::from_structure(s));
    std::fs::write(path, text).map_err(|source| FileError::Io { path: path.into(), source })
}

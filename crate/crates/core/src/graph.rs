//! Undirected graphs and bipartite graphs with a recorded bipartition.

use crate::error::{Error, Result};
use crate::poset::{PairMode, Poset};

/// Simple undirected graph on `0..n`, adjacency lists kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::OutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Lower,
    Upper,
}

/// Bipartite graph whose lower side plays the role of minimal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    side: Vec<Side>,
    graph: Graph,
    labels: Option<Vec<String>>,
}

impl BipartiteGraph {
    pub fn new(side: Vec<Side>, edges: &[(usize, usize)]) -> Result<Self> {
        let graph = Graph::new(side.len(), edges)?;
        for &(a, b) in edges {
            if side[a] == side[b] {
                return Err(Error::NotBipartite(a, b));
            }
        }
        Ok(BipartiteGraph {
            side,
            graph,
            labels: None,
        })
    }

    /// Lower side `0..nx`, upper side `nx..nx+ny`; edges given as `(i, j)`
    /// with `i < nx` and `j < ny` indexing within each side.
    pub fn from_parts(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut side = vec![Side::Lower; nx];
        side.extend(std::iter::repeat(Side::Upper).take(ny));
        let mut shifted = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i >= nx {
                return Err(Error::OutOfRange { id: i, n: nx });
            }
            if j >= ny {
                return Err(Error::OutOfRange { id: j, n: ny });
            }
            shifted.push((i, nx + j));
        }
        Self::new(side, &shifted)
    }

    /// Reads a two-level poset as a bipartite graph; isolated elements go to the lower side.
    pub fn from_poset(p: &Poset) -> Result<Self> {
        if !p.is_two_level() {
            let x = (0..p.len()).find(|&x| !p.is_minimal(x) && !p.is_maximal(x)).unwrap_or(0);
            return Err(Error::BadParams(format!("element {x} is neither minimal nor maximal")));
        }
        let side = (0..p.len())
            .map(|x| if p.is_minimal(x) { Side::Lower } else { Side::Upper })
            .collect();
        let mut g = Self::new(side, &p.covers())?;
        g.labels = p.labels().map(<[String]>::to_vec);
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn lower(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.side[v] == Side::Lower).collect()
    }

    pub fn upper(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.side[v] == Side::Upper).collect()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.graph.adjacent(a, b)
    }

    /// Edges as `(lower, upper)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .graph
            .edges()
            .into_iter()
            .map(|(a, b)| if self.side[a] == Side::Lower { (a, b) } else { (b, a) })
            .collect();
        out.sort_unstable();
        out
    }

    /// The two-level poset with `lower < upper` along every edge.
    pub fn to_poset(&self) -> Poset {
        let p = Poset::new(self.len(), &self.edges(), PairMode::Covers)
            .expect("edges from lower to upper cannot form a cycle");
        match &self.labels {
            Some(l) => p.with_labels(l.clone()),
            None => p,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

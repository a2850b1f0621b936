use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {id} out of range for structure of size {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("relation creates a directed cycle through element {0}")]
    Cycle(usize),
    #[error("elements {0} and {1} are not comparable (need a <= b)")]
    NotComparable(usize, usize),
    #[error("poset has no comparable (minimal, maximal) pair")]
    NoComparablePair,
    #[error("ideal closure of an empty set is undefined")]
    EmptyInput,
    #[error("set has no common upper bound")]
    Unbounded,
    #[error("ideal enumeration exceeded the cap of {cap}")]
    SizeLimit { cap: usize },
    #[error("graph has no {0}-arcs")]
    NoArcs(usize),
    #[error("arc ({0}, {1}) is not in the digraph")]
    MissingArc(usize, usize),
    #[error("structure is not connected")]
    NotConnected,
    #[error("cover relation is not graded: {0} covers {1} across more than one level")]
    NotGraded(usize, usize),
    #[error("digraph carries no level map")]
    MissingLevels,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("field order {0} is not prime; only prime fields are supported")]
    NonPrimeField(u32),
    #[error("input graph is not 1-arc-transitive")]
    NotOneArcTransitive,
    #[error("digraph is not asymmetric: both ({0}, {1}) and ({1}, {0}) present")]
    NotAsymmetric(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) does not cross the bipartition")]
    NotBipartite(usize, usize),
}

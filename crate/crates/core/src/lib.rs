//! Dedekind-MacNeille completions, ramification structure and symmetry
//! predicates for finite posets, bipartite graphs and digraphs.

pub mod checks;
pub mod completion;
pub mod digraph;
pub mod error;
pub mod generators;
pub mod graph;
pub mod poset;
pub mod symmetry;
mod util;

pub use completion::{
    dm_completion, dm_completion_with, ideal_closure, is_cycle_free, is_dm_complete, m_plus,
    ramification_points, CompletedPoset, CompletionConfig, Ideal,
};
pub use error::{Error, Result};
pub use generators::{generate, Family, Structure};
pub use graph::{BipartiteGraph, Graph, Side};
pub use poset::{classify_interval, cones, ConePartition, Direction, IntervalShape, PairMode, Poset, ShapeKind};
pub use symmetry::{automorphism_group, AutMode, PermGroup};
pub use util::UnionFind;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lattice_loom::completion::{dm_completion, is_cycle_free, CompletedPoset};
use lattice_loom::digraph::{
    alternating_class, check_p_properties, digraph_from_poset, intersection_property, is_desc_tree,
    reachability_graph, y_transitive, Digraph,
};
use lattice_loom::generators::corpus::DEFAULT_SEED;
use lattice_loom::generators::{dl_construction_with, generate, BijectionPolicy, Family};
use lattice_loom::poset::cones;
use lattice_loom::symmetry::{
    is_k_cs_homogeneous, is_k_cs_transitive, is_locally_s_arc_transitive, is_s_arc_transitive,
};
use lattice_loom::{automorphism_group, classify_interval, is_dm_complete, AutMode, BipartiteGraph, Direction, Poset};
use lattice_loom_cli::claims::{format_table, run_claims};
use lattice_loom_cli::dot::{export_dot, DotOptions};
use lattice_loom_cli::io::{self, Structure, StructureFile};

#[derive(Parser)]
#[command(name = "lattice-loom", version, about = "Completions, symmetry and reachability of finite partial orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as a structure file.
    Gen {
        family: String,
        params: Vec<u64>,
        /// Seed for randomized families.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dedekind-MacNeille completion of a structure.
    Complete {
        file: PathBuf,
        /// Write the completion as a poset file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Interval [a, b] of the completion between two original elements (ids or labels).
    Interval { file: PathBuf, a: String, b: String },
    /// Upward and downward ramification points with their orders.
    Ram { file: PathBuf },
    /// Decide a property; exits 1 when it fails.
    Check {
        file: PathBuf,
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Pattern graph for the p-properties check.
        #[arg(long)]
        delta: Option<PathBuf>,
    },
    /// Alternating-walk reachability classes of a digraph.
    Reach {
        file: PathBuf,
        /// Print the class of this arc, given as `tail,head`.
        #[arg(long)]
        arc: Option<String>,
    },
    /// Truncated digraph built from a bipartite pattern.
    Dl {
        delta_file: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Match neighbours with a seeded random bijection instead of sorted order.
        #[arg(long)]
        shuffle: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the registered claims whose id matches a glob.
    Claims {
        #[arg(long, default_value = "*")]
        filter: String,
    },
    /// Graphviz DOT text for a structure.
    ExportDot {
        file: PathBuf,
        /// Draw the completion, with added elements as open circles.
        #[arg(long)]
        completion: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

const PROPERTIES: &[&str] = &[
    "dm-complete",
    "cycle-free",
    "connected",
    "uniform-intervals",
    "s-arc-transitive",
    "locally-s-arc-transitive",
    "k-cs-transitive",
    "k-cs-homogeneous",
    "vertex-transitive",
    "intersection",
    "desc-trees",
    "y-transitive",
    "p-properties",
];

/// Failure classes mapped to exit codes.
enum Failure {
    /// The checked property or claims did not hold.
    Negative(String),
    /// Bad input or arguments.
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn load(path: &Path) -> Result<Structure, Failure> {
    io::load(path).map_err(usage)
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    load(path)?.to_poset().map_err(usage)
}

fn load_digraph(path: &Path) -> Result<Digraph, Failure> {
    Ok(match load(path)? {
        Structure::Digraph(d) => d,
        other => digraph_from_poset(&other.to_poset().map_err(usage)?),
    })
}

fn load_bipartite(path: &Path) -> Result<BipartiteGraph, Failure> {
    match load(path)? {
        Structure::Bipartite(g) => Ok(g),
        other => BipartiteGraph::from_poset(&other.to_poset().map_err(usage)?).map_err(usage),
    }
}

fn emit(s: &Structure, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => io::save(s, path).map(|()| String::new()).map_err(usage),
        None => Ok(io::to_text(&StructureFile::from_structure(s))),
    }
}

fn write_text(text: String, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => std::fs::write(path, text).map(|()| String::new()).map_err(usage),
        None => Ok(text),
    }
}

/// An element given by id or by label.
fn element(p: &Poset, s: &str) -> Result<usize, Failure> {
    if let Some(x) = p.labels().and_then(|l| l.iter().position(|x| x == s)) {
        return Ok(x);
    }
    match s.parse::<usize>() {
        Ok(x) if x < p.len() => Ok(x),
        _ => Err(usage(format!("no element {s:?}"))),
    }
}

fn names(p: &Poset, xs: &[usize]) -> String {
    xs.iter().map(|&x| p.label(x)).collect::<Vec<_>>().join(" ")
}

fn completion(p: &Poset) -> Result<CompletedPoset, Failure> {
    dm_completion(p).map_err(usage)
}

fn gen(family: &str, params: &[u64], seed: Option<u64>, output: Option<&Path>) -> Outcome {
    let mut params = params.to_vec();
    if family == "generic" && params.len() == 1 {
        params.push(seed.unwrap_or(DEFAULT_SEED));
    }
    let f = Family::parse(family, &params).map_err(|e| usage(format!("{e}; families: {}", Family::NAMES.join(", "))))?;
    let s: Structure = generate(&f).map_err(usage)?.into();
    emit(&s, output)
}

fn complete(file: &Path, output: Option<&Path>) -> Outcome {
    let p = load_poset(file)?;
    let c = completion(&p)?;
    let mut out = String::new();
    writeln!(out, "elements {} (original {}, added {})", c.completion.len(), p.len(), c.added.len()).unwrap();
    writeln!(out, "levels {:?}", c.completion.level_sizes()).unwrap();
    writeln!(out, "added: {}", names(&c.completion, &c.added)).unwrap();
    if let Some(path) = output {
        io::save(&Structure::Poset(c.completion.clone()), path).map_err(usage)?;
    }
    Ok(out)
}

fn interval(file: &Path, a: &str, b: &str) -> Outcome {
    let p = load_poset(file)?;
    let (a, b) = (element(&p, a)?, element(&p, b)?);
    let c = completion(&p)?;
    let (q, ids) = c.completion.interval(c.embed[a], c.embed[b]).map_err(usage)?;
    let mut out = String::new();
    writeln!(out, "elements {}: {}", q.len(), names(&c.completion, &ids)).unwrap();
    writeln!(out, "shape {:?}", lattice_loom::poset::shape_of(&q)).unwrap();
    if p.is_two_level() {
        if let Ok(s) = classify_interval(&p) {
            writeln!(out, "all intervals {:?}", s.kind).unwrap();
        }
    }
    Ok(out)
}

fn ram(file: &Path) -> Outcome {
    let p = load_poset(file)?;
    let c = completion(&p)?;
    let q = &c.completion;
    let mut out = String::new();
    for (name, set, dir) in [("up", &c.up_ram, Direction::Up), ("down", &c.down_ram, Direction::Down)] {
        let items: Vec<String> = set.iter().map(|&x| format!("{}(ro {})", q.label(x), cones(q, x, dir).ro)).collect();
        writeln!(out, "{name}: {}", items.join(" ")).unwrap();
    }
    Ok(out)
}

fn check(file: &Path, property: &str, s: usize, k: usize, depth: usize, delta: Option<&Path>) -> Outcome {
    let (holds, detail) = match property {
        "dm-complete" => (is_dm_complete(&load_poset(file)?), String::new()),
        "cycle-free" => (is_cycle_free(&load_poset(file)?).map_err(usage)?, String::new()),
        "connected" => (load_poset(file)?.is_connected(), String::new()),
        "uniform-intervals" => {
            let shape = classify_interval(&load_poset(file)?).map_err(usage)?;
            (shape.counterexample.is_none(), format!("{:?}", shape.kind))
        }
        "s-arc-transitive" | "locally-s-arc-transitive" => {
            let g = load_bipartite(file)?;
            let r = if property == "s-arc-transitive" {
                is_s_arc_transitive(g.graph(), s)
            } else {
                is_locally_s_arc_transitive(g.graph(), s)
            }
            .map_err(usage)?;
            (r.verdict, format!("{} {s}-arcs, {} orbits", r.arc_count, r.orbit_count))
        }
        "k-cs-transitive" => (is_k_cs_transitive(&load_poset(file)?, k), String::new()),
        "k-cs-homogeneous" => (is_k_cs_homogeneous(&load_poset(file)?, k), String::new()),
        "vertex-transitive" => {
            let g = automorphism_group(&load_poset(file)?, AutMode::OrderPreserving);
            (g.is_transitive(), format!("group order {}", g.order()))
        }
        "intersection" => {
            let r = intersection_property(&load_digraph(file)?);
            (r.holds, format!("{} pairs", r.pairs_checked))
        }
        "desc-trees" => {
            let d = load_digraph(file)?;
            ((0..d.len()).filter(|&v| !d.is_boundary(v)).all(|v| is_desc_tree(&d, v)), String::new())
        }
        "y-transitive" => {
            let r = y_transitive(&load_digraph(file)?, depth);
            (r.verdict, format!("{} Y classes, {} dual Y classes", r.y_classes, r.ybar_classes))
        }
        "p-properties" => {
            let delta = delta.ok_or_else(|| usage("p-properties needs --delta"))?;
            let r = check_p_properties(&load_digraph(file)?, &load_bipartite(delta)?).map_err(usage)?;
            let detail = format!("levels {} P2 {:?} P3 {:?} P4 {:?} P5 {:?}", r.levels, r.p2.verdict, r.p3.verdict, r.p4.verdict, r.p5.verdict);
            (r.all_ok(), detail)
        }
        other => return Err(usage(format!("unknown property {other:?}; known: {}", PROPERTIES.join(", ")))),
    };
    let line = if detail.is_empty() { format!("{property}: {holds}\n") } else { format!("{property}: {holds} ({detail})\n") };
    if holds {
        Ok(line)
    } else {
        Err(Failure::Negative(line))
    }
}

fn reach(file: &Path, arc: Option<&str>) -> Outcome {
    let d = load_digraph(file)?;
    let mut out = String::new();
    if let Some(arc) = arc {
        let (a, b) = arc
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| usage(format!("arc {arc:?} is not `tail,head`")))?;
        let class = alternating_class(&d, (a, b)).map_err(usage)?;
        let arcs: Vec<String> = class.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        writeln!(out, "class of {a}->{b}: {} arcs", class.len()).unwrap();
        writeln!(out, "{}", arcs.join(" ")).unwrap();
        return Ok(out);
    }
    let r = reachability_graph(&d).map_err(usage)?;
    let complete = r.complete_classes().count();
    writeln!(out, "classes {} (complete {complete})", r.classes.len()).unwrap();
    writeln!(out, "universal {}", r.universal).unwrap();
    writeln!(out, "bipartite {}", r.bipartite).unwrap();
    writeln!(out, "complete classes isomorphic {}", r.classes_isomorphic).unwrap();
    writeln!(out, "arc-transitive {}", r.arc_transitive).unwrap();
    if let Some(g) = &r.delta {
        writeln!(out, "class graph: {} vertices, {} edges", g.len(), g.edges().len()).unwrap();
    }
    Ok(out)
}

fn dl(delta: &Path, radius: usize, shuffle: Option<u64>, output: Option<&Path>) -> Outcome {
    let g = load_bipartite(delta)?;
    let policy = shuffle.map_or(BijectionPolicy::Sorted, BijectionPolicy::Shuffled);
    let d = dl_construction_with(&g, radius, policy).map_err(usage)?;
    emit(&Structure::Digraph(d), output)
}

fn claims(filter: &str) -> Outcome {
    let reports = run_claims(filter);
    let text = format_table(&reports);
    if reports.iter().all(|r| r.status.passed()) {
        Ok(text)
    } else {
        Err(Failure::Negative(text))
    }
}

fn export(file: &Path, with_completion: bool, output: Option<&Path>) -> Outcome {
    let s = load(file)?;
    let text = if with_completion {
        let c = completion(&s.to_poset().map_err(usage)?)?;
        export_dot(&Structure::Poset(c.completion), &DotOptions { added: c.added })
    } else {
        export_dot(&s, &DotOptions::default())
    };
    write_text(text, output)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { family, params, seed, output } => gen(&family, &params, seed, output.as_deref()),
        Command::Complete { file, output } => complete(&file, output.as_deref()),
        Command::Interval { file, a, b } => interval(&file, &a, &b),
        Command::Ram { file } => ram(&file),
        Command::Check { file, property, s, k, depth, delta } => check(&file, &property, s, k, depth, delta.as_deref()),
        Command::Reach { file, arc } => reach(&file, arc.as_deref()),
        Command::Dl { delta_file, radius, shuffle, output } => dl(&delta_file, radius, shuffle, output.as_deref()),
        Command::Claims { filter } => claims(&filter),
        Command::ExportDot { file, completion, output } => export(&file, completion, output.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

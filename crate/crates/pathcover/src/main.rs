use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pathcover::census::{self, Rule};
use pathcover::report::{emit_table, TableFormat};
use pathcover::source::{self, GraphSource};
use pathcover_core::constructions::{
    anchor_supergraph, disjoint_paths, thm34_core, thm34_full, twin_pair, twin_trees,
    CheckStatus, ConstructionSpec, LabeledConstruction,
};
use pathcover_core::graph6::Graph6Error;
use pathcover_core::sequence::sequence_feasibility;
use pathcover_core::solver::MAX_SOLVER_N;
use pathcover_core::{decode_graph6, encode_graph6, path_sequence, Graph, PathSequence};

/// Exact path sequences, censuses and constructions for small graphs.
#[derive(Parser)]
#[command(name = "pathcover", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the path sequence of one graph
    Sequence {
        /// graph6 string, e.g. "DQc"
        graph6: Option<String>,
        /// read the graph from a file instead: edge-list ("n m" header,
        /// then "u v" lines) or a single graph6 line
        #[arg(long, conflicts_with = "graph6")]
        file: Option<PathBuf>,
    },
    /// Tabulate path sequences with multiplicities over a graph population
    Census {
        /// census all connected graphs on this many vertices (2..=7)
        n: Option<usize>,
        /// graph6 file with one graph per line (orders 8 and 9 live here)
        #[arg(long, conflicts_with = "n")]
        file: Option<PathBuf>,
        /// output format: markdown, csv or json
        #[arg(long, default_value = "markdown")]
        format: String,
        /// skip the pairwise-non-isomorphism check on file input
        #[arg(long)]
        trusted: bool,
        /// worker threads (default: all available)
        #[arg(long)]
        jobs: Option<usize>,
        /// write the table here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// keep disconnected graphs from file input in the census
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Check every graph of a population against known sequence properties
    Verify {
        /// sweep all connected graphs on this many vertices (2..=7)
        n: Option<usize>,
        /// graph6 file with one graph per line
        #[arg(long, conflicts_with = "n")]
        file: Option<PathBuf>,
        /// comma-separated rules: conjecture, bounds, suffix
        #[arg(long, default_value = "conjecture,bounds,suffix")]
        rules: String,
        /// skip the pairwise-non-isomorphism check on file input
        #[arg(long)]
        trusted: bool,
        /// worker threads (default: all available)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Build one of the library constructions and print it as graph6
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a candidate sequence against the necessary conditions
    Feasible {
        /// comma-separated values, e.g. "5,4,3,2,1"
        sequence: String,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Graph with prescribed values psi_k = pk and psi_m = pm (m < k)
    TwoTarget(TwoTargetArgs),
    /// Non-isomorphic pair with equal path sequences on n >= 4 vertices
    Twins {
        #[arg(long)]
        n: usize,
    },
    /// Non-isomorphic trees with equal path sequences on n >= 7 vertices
    TwinTrees {
        #[arg(long)]
        n: usize,
    },
    /// s disjoint paths on m vertices each
    Paths {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
    },
    /// Supergraph in which the base graph's vertices form a minimum cover
    /// against k-vertex paths
    Anchor {
        /// base graph as a graph6 string
        #[arg(long)]
        graph6: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct TwoTargetArgs {
    /// core only: skip the pendant paths that raise psi_m to pm
    #[arg(long)]
    core_only: bool,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    pk: usize,
    #[arg(long)]
    pm: usize,
}

/// A command failure carrying its process exit code:
/// 2 usage/parse, 3 resource caps.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn cap(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn classify_source(err: source::SourceError) -> Failure {
    match &err {
        source::SourceError::BadGraph6 {
            err: Graph6Error::UnsupportedOrder { .. },
            ..
        } => cap(err.to_string()),
        source::SourceError::DedupeUnavailable { .. } => cap(err.to_string()),
        source::SourceError::Enumeration(_) => cap(err.to_string()),
        _ => usage(err.to_string()),
    }
}

fn classify_census(err: census::CensusError) -> Failure {
    match err {
        census::CensusError::Source(e) => classify_source(e),
        census::CensusError::Solver(e) => cap(e.to_string()),
        other => usage(other.to_string()),
    }
}

/// Solver cap, possibly lowered (never raised) by PATHCOVER_MAX_N.
fn effective_cap() -> Result<usize, Failure> {
    match std::env::var("PATHCOVER_MAX_N") {
        Err(_) => Ok(MAX_SOLVER_N),
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map(|v| v.min(MAX_SOLVER_N))
            .map_err(|_| usage(format!("PATHCOVER_MAX_N={raw:?} is not a number"))),
    }
}

fn check_cap(order: usize, what: &str) -> Result<(), Failure> {
    let limit = effective_cap()?;
    if order > limit {
        Err(cap(format!(
            "{what} on {order} vertices exceeds the solver cap of {limit}"
        )))
    } else {
        Ok(())
    }
}

fn with_pool<T: Send>(
    jobs: Option<usize>,
    work: impl FnOnce() -> T + Send,
) -> Result<T, Failure> {
    match jobs {
        None => Ok(work()),
        Some(j) => {
            if j == 0 {
                return Err(usage("--jobs must be at least 1"));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| usage(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Sequence { graph6, file } => cmd_sequence(graph6, file),
        Command::Census {
            n,
            file,
            format,
            trusted,
            jobs,
            output,
            include_disconnected,
        } => cmd_census(n, file, format, trusted, jobs, output, include_disconnected),
        Command::Verify {
            n,
            file,
            rules,
            trusted,
            jobs,
        } => cmd_verify(n, file, rules, trusted, jobs),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Feasible { sequence } => cmd_feasible(&sequence),
    }
}

fn read_graph_file(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let first_line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first_line
        .trim_start()
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit())
    {
        source::parse_edge_list(&text).map_err(classify_source)
    } else {
        decode_line(first_line.trim())
    }
}

fn decode_line(line: &str) -> Result<Graph, Failure> {
    decode_graph6(line).map_err(|e| match e {
        Graph6Error::UnsupportedOrder { .. } => cap(e.to_string()),
        other => usage(other.to_string()),
    })
}

fn cmd_sequence(graph6: Option<String>, file: Option<PathBuf>) -> Result<u8, Failure> {
    let graph = match (graph6, file) {
        (Some(g6), None) => decode_line(g6.trim())?,
        (None, Some(path)) => read_graph_file(&path)?,
        _ => return Err(usage("pass a graph6 string or --file, not both or neither")),
    };
    check_cap(graph.order(), "input graph")?;
    let seq = path_sequence(&graph).map_err(|e| cap(e.to_string()))?;
    println!("{seq}, hamilton_path={}", seq.ends_in_one());
    Ok(0)
}

fn graph_source(
    n: Option<usize>,
    file: Option<PathBuf>,
    trusted: bool,
) -> Result<GraphSource, Failure> {
    match (n, file) {
        (Some(n), None) => Ok(GraphSource::Builtin { n }),
        (None, Some(path)) => Ok(GraphSource::File { path, trusted }),
        _ => Err(usage("pass a vertex count or --file, not both or neither")),
    }
}

fn cmd_census(
    n: Option<usize>,
    file: Option<PathBuf>,
    format: String,
    trusted: bool,
    jobs: Option<usize>,
    output: Option<PathBuf>,
    include_disconnected: bool,
) -> Result<u8, Failure> {
    let format = TableFormat::parse(&format)
        .ok_or_else(|| usage(format!("unknown format {format:?} (markdown, csv, json)")))?;
    let source = graph_source(n, file, trusted)?;
    let loaded = source::load_graphs(&source).map_err(classify_source)?;
    check_cap(loaded.n, "census graphs")?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    let graphs: Vec<Graph> = if include_disconnected {
        loaded.graphs
    } else {
        loaded.graphs.into_iter().filter(Graph::is_connected).collect()
    };
    let report = with_pool(jobs, || census::census_of_graphs(loaded.n, &graphs))?
        .map_err(classify_census)?;
    let text = emit_table(&report, format);
    match output {
        None => print!("{text}"),
        Some(path) => fs::write(&path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
    }
    Ok(0)
}

fn cmd_verify(
    n: Option<usize>,
    file: Option<PathBuf>,
    rules: String,
    trusted: bool,
    jobs: Option<usize>,
) -> Result<u8, Failure> {
    let mut parsed = Vec::new();
    for name in rules.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        parsed.push(
            Rule::parse(name)
                .ok_or_else(|| usage(format!("unknown rule {name:?} (conjecture, bounds, suffix)")))?,
        );
    }
    if parsed.is_empty() {
        return Err(usage("no rules given"));
    }
    let source = graph_source(n, file, trusted)?;
    let loaded = source::load_graphs(&source).map_err(classify_source)?;
    check_cap(loaded.n, "graphs under verification")?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    let list = with_pool(jobs, || census::verify_graphs(&loaded.graphs, &parsed))?
        .map_err(classify_census)?;
    for v in &list.items {
        println!("{}\t{}\t{}", v.graph6, v.rule, v.details);
    }
    println!("{} violations", list.items.len());
    Ok(if list.passed() { 0 } else { 1 })
}

fn print_labeled(built: &LabeledConstruction, checked_line: &str) {
    println!("{}", encode_graph6(&built.graph));
    for (name, set) in &built.annotations {
        println!("{name}: {set:?}");
    }
    match built.status {
        CheckStatus::Verified => println!("checked: {checked_line}"),
        CheckStatus::Unchecked => println!(
            "unchecked: order {} beyond the solver cap",
            built.graph.order()
        ),
    }
}

fn construction_err(e: pathcover_core::constructions::ConstructionError) -> Failure {
    usage(e.to_string())
}

fn cmd_construct(kind: ConstructKind) -> Result<u8, Failure> {
    match kind {
        ConstructKind::TwoTarget(args) => {
            let spec = ConstructionSpec::new(args.m, args.k, args.pk, args.pm)
                .map_err(construction_err)?;
            let a = spec.derived_a();
            let core_order = (args.pk + a - 1) * (2 * args.m - 1);
            let full_order = core_order + (args.pm - (args.pk + a - 1)) * args.m;
            let order = if args.core_only { core_order } else { full_order };
            if order <= MAX_SOLVER_N {
                check_cap(order, "construction")?;
            }
            if args.core_only {
                let built = thm34_core(&spec).map_err(construction_err)?;
                print_labeled(
                    &built,
                    &format!("psi_{}={} psi_{}={}", args.m, args.pk + a - 1, args.k, args.pk),
                );
            } else {
                let built = thm34_full(&spec).map_err(construction_err)?;
                print_labeled(
                    &built,
                    &format!("psi_{}={} psi_{}={}", args.m, args.pm, args.k, args.pk),
                );
            }
            Ok(0)
        }
        ConstructKind::Twins { n } => {
            if n <= MAX_SOLVER_N {
                check_cap(n, "twin pair")?;
            }
            let pair = twin_pair(n).map_err(construction_err)?;
            println!("{}", encode_graph6(&pair.left));
            println!("{}", encode_graph6(&pair.right));
            match pair.status {
                CheckStatus::Verified => {
                    let seq = path_sequence(&pair.left).expect("under cap");
                    println!("checked: sequences equal, {seq}");
                }
                CheckStatus::Unchecked => {
                    println!("unchecked: order {n} beyond the solver cap")
                }
            }
            Ok(0)
        }
        ConstructKind::TwinTrees { n } => {
            check_cap(n.min(MAX_SOLVER_N), "twin trees")?;
            let pair = twin_trees(n).map_err(construction_err)?;
            println!("{}", encode_graph6(&pair.left));
            println!("{}", encode_graph6(&pair.right));
            match pair.status {
                CheckStatus::Verified => {
                    let seq = path_sequence(&pair.left).expect("under cap");
                    println!("checked: non-isomorphic trees, sequences equal, {seq}");
                }
                CheckStatus::Unchecked => {
                    println!("unchecked: order {n} beyond the solver cap (non-isomorphism still certified)")
                }
            }
            Ok(0)
        }
        ConstructKind::Paths { s, m } => {
            let order = s.checked_mul(m).unwrap_or(usize::MAX);
            if order <= MAX_SOLVER_N {
                check_cap(order, "disjoint paths")?;
            }
            let g = disjoint_paths(s, m).map_err(construction_err)?;
            println!("{}", encode_graph6(&g));
            println!("connected: {}", g.is_connected());
            if order <= MAX_SOLVER_N {
                println!("checked: psi_{m}={s}");
            } else {
                println!("unchecked: order {order} beyond the solver cap");
            }
            Ok(0)
        }
        ConstructKind::Anchor { graph6, k } => {
            let base = decode_line(graph6.trim())?;
            let order = base.order().checked_mul(k).unwrap_or(usize::MAX);
            if order <= MAX_SOLVER_N {
                check_cap(order, "anchor supergraph")?;
            }
            let built = anchor_supergraph(&base, k).map_err(construction_err)?;
            let anchors = built.graph.order() / k.max(1);
            print_labeled(&built, &format!("psi_{k}={anchors}, anchors form a minimum cover"));
            Ok(0)
        }
    }
}

fn cmd_feasible(sequence: &str) -> Result<u8, Failure> {
    let seq: PathSequence = sequence.parse().map_err(usage)?;
    let failures = sequence_feasibility(&seq);
    if failures.is_empty() {
        println!("{seq}: passes all necessary conditions (realisability not implied)");
        Ok(0)
    } else {
        for f in &failures {
            println!("{seq}: {f}");
        }
        Ok(1)
    }
}

//! Command-line front end: decompose datasets into clan trees, emit
//! implications and closure lattices, reconstruct graphs from
//! implications, and cross-check the engine against the brute-force
//! oracle.
//!
//! Exit codes: 0 success, 1 input error, 2 enumeration-guard refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaifman::{
    build_exponential, build_linear, build_standard, build_thresholded, count_cooccurrences,
    decompose, decompose_with_order, generate_implications, ingest_relational,
    ingest_transactional, io, lattice_to_tree, oracle, reconstruct, CooccurrenceCounts, Error,
    ImplicationSet, ItemFilter, ItemId, SkeletonNode, SplitMix64, TwoStructure, TypeBound,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gaifman", version, about = "Clan decomposition of generalized Gaifman graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Relational,
    Transactional,
    Graph,
    Implications,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Standard,
    Threshold,
    Linear,
    Exp,
}

#[derive(Args)]
struct InputOpts {
    /// Input file.
    #[arg(long)]
    input: PathBuf,
    /// How to interpret the input file.
    #[arg(long, value_enum)]
    kind: InputKind,
    /// Gaifman variant for dataset inputs.
    #[arg(long, value_enum, default_value = "standard")]
    variant: Variant,
    /// Co-occurrence threshold for the threshold variant.
    #[arg(long)]
    threshold: Option<u64>,
    /// Interval size for the linear variant.
    #[arg(long)]
    interval: Option<u64>,
    /// Zero out co-occurrence counts below this value first.
    #[arg(long)]
    lower_threshold: Option<u64>,
    /// Keep only items occurring in at least this many transactions.
    #[arg(long)]
    min_count: Option<u64>,
    /// Keep only the most frequent items (ties at the cutoff included).
    #[arg(long)]
    top_items: Option<usize>,
    /// Treat empty relational cells as a distinct "column=" value.
    #[arg(long)]
    keep_empty_cells: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the input and emit the clan tree as DOT.
    Decompose {
        #[command(flatten)]
        input: InputOpts,
        /// Collapse at least this many disconnected leaf siblings into one node.
        #[arg(long)]
        others_min: Option<usize>,
        /// Shuffle the insertion order with this seed.
        #[arg(long)]
        order_seed: Option<u64>,
        /// Output file (stdout by default).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the implication set of the input structure.
    Implications {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the closed-set lattice report of the input.
    Closures {
        #[command(flatten)]
        input: InputOpts,
        /// Maximum universe size for closed-set enumeration.
        #[arg(long, default_value_t = gaifman::LATTICE_GUARD)]
        guard: usize,
        /// Append the typed tree of strong closed sets.
        #[arg(long)]
        types: bool,
        /// Child-count regime when the input is an implication file.
        #[arg(long, value_enum, default_value = "two")]
        type_bound: BoundArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a graph from an implication file.
    Reconstruct {
        /// Implication file.
        #[arg(long)]
        input: PathBuf,
        /// Seed the first pair as present (edge) rather than absent.
        #[arg(long)]
        seed_present: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the incremental engine against the brute-force oracle on
    /// random structures.
    OracleCheck {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_classes: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundArg {
    Two,
    Multi,
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn load_structure(opts: &InputOpts) -> Result<TwoStructure, Error> {
    let text = read_input(&opts.input)?;
    let counts: CooccurrenceCounts = match opts.kind {
        InputKind::Graph => return io::parse_graph_file(&text),
        InputKind::Implications => {
            return Err(Error::Input(
                "implication files describe a closure space, not a structure; \
                 use the closures or reconstruct subcommands"
                    .into(),
            ))
        }
        InputKind::Relational | InputKind::Transactional => {
            let mut dataset = match opts.kind {
                InputKind::Relational => ingest_relational(&text, opts.keep_empty_cells)?,
                _ => ingest_transactional(&text)?,
            };
            match (opts.min_count, opts.top_items) {
                (Some(_), Some(_)) => {
                    return Err(Error::Input("choose one of --min-count and --top-items".into()))
                }
                (Some(m), None) => {
                    dataset = dataset.filter_items(ItemFilter::MinCount(m))?.0;
                }
                (None, Some(k)) => {
                    let (d, clamped) = dataset.filter_items(ItemFilter::TopN(k))?;
                    if clamped {
                        eprintln!("warning: --top-items exceeds the universe; keeping all items");
                    }
                    dataset = d;
                }
                (None, None) => {}
            }
            count_cooccurrences(&dataset)
        }
    };
    let counts = match opts.lower_threshold {
        Some(t) => counts.apply_lower_threshold(t)?,
        None => counts,
    };
    match opts.variant {
        Variant::Standard => Ok(build_standard(&counts)),
        Variant::Threshold => {
            let t = opts
                .threshold
                .ok_or_else(|| Error::Input("--variant threshold needs --threshold".into()))?;
            build_thresholded(&counts, t)
        }
        Variant::Linear => {
            let n = opts
                .interval
                .ok_or_else(|| Error::Input("--variant linear needs --interval".into()))?;
            build_linear(&counts, n)
        }
        Variant::Exp => Ok(build_exponential(&counts)),
    }
}

fn load_implications(opts: &InputOpts) -> Result<(ImplicationSet, TypeBound), Error> {
    if opts.kind == InputKind::Implications {
        let text = read_input(&opts.input)?;
        return Ok((io::parse_implications(&text)?, TypeBound::TwoClass));
    }
    let structure = load_structure(opts)?;
    let bound = TypeBound::for_structure(&structure);
    Ok((generate_implications(&structure), bound))
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn skeleton_lines(node: &SkeletonNode, set: &ImplicationSet, depth: usize, out: &mut String) {
    out.push_str(&"  ".repeat(depth));
    let labels: Vec<&str> = node.set.iter().map(|&i| set.label(i)).collect();
    out.push_str(&labels.join(" "));
    match node.clan_type {
        Some(gaifman::ClanType::Complete) => out.push_str(" [complete]"),
        Some(gaifman::ClanType::Primitive) => out.push_str(" [primitive]"),
        None => {}
    }
    out.push('\n');
    for child in &node.children {
        skeleton_lines(child, set, depth + 1, out);
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Decompose { input, others_min, order_seed, out } => {
            let structure = load_structure(&input)?;
            let tree = match order_seed {
                None => decompose(&structure),
                Some(seed) => {
                    let mut order: Vec<ItemId> = structure.item_ids().collect();
                    SplitMix64(seed).shuffle(&mut order);
                    decompose_with_order(&structure, &order)?
                }
            };
            let tree = match others_min {
                Some(k) => tree.group_others(k)?,
                None => tree,
            };
            write_out(out.as_ref(), &io::render_dot(&tree))
        }
        Command::Implications { input, out } => {
            let structure = load_structure(&input)?;
            let set = generate_implications(&structure);
            write_out(out.as_ref(), &io::render_implications(&set))
        }
        Command::Closures { input, guard, types, type_bound, out } => {
            let (set, inferred_bound) = load_implications(&input)?;
            let bound = if input.kind == InputKind::Implications {
                match type_bound {
                    BoundArg::Two => TypeBound::TwoClass,
                    BoundArg::Multi => TypeBound::MultiClass,
                }
            } else {
                inferred_bound
            };
            let lattice = set.enumerate_closed_sets(guard)?;
            let mut text = io::lattice_report(&lattice);
            if types {
                text.push('\n');
                let skeleton = lattice_to_tree(&lattice, bound)?;
                skeleton_lines(&skeleton, &set, 0, &mut text);
            }
            write_out(out.as_ref(), &text)
        }
        Command::Reconstruct { input, seed_present, out } => {
            let text = read_input(&input)?;
            let set = io::parse_implications(&text)?;
            let graph = reconstruct(&set, seed_present)?;
            write_out(out.as_ref(), &io::render_graph_file(&graph))
        }
        Command::OracleCheck { count, max_vertices, max_classes, seed } => {
            if max_vertices > gaifman::ORACLE_GUARD {
                return Err(Error::GuardExceeded {
                    size: max_vertices,
                    guard: gaifman::ORACLE_GUARD,
                });
            }
            let mut rng = SplitMix64(seed);
            for i in 0..count {
                let n = 2 + rng.below(max_vertices.max(2) as u64 - 1) as usize;
                let classes = 2 + rng.below(max_classes.max(2) as u64 - 1) as u32;
                let s = oracle::random_structure(&mut rng, n, classes);
                let fast = decompose(&s).canonical_form();
                let brute = oracle::brute_force_tree(&s)?.canonical_form();
                if fast != brute {
                    return Err(Error::Input(format!(
                        "mismatch on structure {i}: incremental {fast} vs oracle {brute}"
                    )));
                }
            }
            println!("oracle-check: {count} structures agree");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::GuardExceeded { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

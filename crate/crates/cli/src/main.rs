use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use treesplit::bench::{run_bench, BenchConfig, EpsilonPolicy, InstanceSource, StartKind, BASELINE};
use treesplit::generators::{assign_weights, prufer_random_tree, wilson_spanning_tree, WeightKind, WeightSpec};
use treesplit::io::{format_half, format_scaled, parse_doubled_epsilon, parse_tree, serialize_tree, ResultRecord};
use treesplit::{edge_split_weights, is_cut_edge, Edge, MethodRegistry, StartRule, ToleranceWindow, WeightedTree};

const EXIT_SPLIT: u8 = 0;
const EXIT_NOT_SPLITTABLE: u8 = 3;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "treesplit", version, about = "Balanced edge cuts in vertex-weighted trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find an edge whose removal balances the tree within ε, or a vertex
    /// proving that none exists. Exits 0 on a split, 3 if not splittable.
    Split(SplitArgs),
    /// Test one edge. Exits 0 if it is a cut edge, 3 if not.
    Check(CheckArgs),
    /// Write a random weighted tree.
    Gen(GenArgs),
    /// Compare methods and start rules over random instances.
    Bench(BenchArgs),
    /// List the available search methods.
    Methods,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Prufer,
    Grid,
}

#[derive(Args)]
struct SplitArgs {
    /// Tree file, or `-` for stdin.
    path: PathBuf,
    #[arg(long, short)]
    epsilon: String,
    /// `improved` (maximum degree, then weight), `min-average`, `random` or a vertex id.
    #[arg(long, default_value = "improved")]
    start: StartRule,
    #[arg(long, default_value = "descent")]
    method: String,
    /// Seed for `--start random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include the per-iteration classifications.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    #[arg(long, short)]
    epsilon: String,
    #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
    edge: Vec<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertex count for `prufer`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    width: Option<usize>,
    /// Defaults to the width.
    #[arg(long)]
    height: Option<usize>,
    /// `const:<c>` or `uniform:<lo>:<hi>`.
    #[arg(long, default_value = "const:1")]
    weights: WeightKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Defaults to stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, conflicts_with = "input")]
    kind: Option<Kind>,
    /// Use one tree file for every trial instead of generating instances.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    height: Option<usize>,
    #[arg(long, default_value = "uniform:1:100")]
    weights: WeightKind,
    /// A decimal, or `S/<k>` for a fraction of each instance's total.
    #[arg(long, default_value = "S/20")]
    epsilon: EpsilonPolicy,
    #[arg(long, value_delimiter = ',', default_value = "descent,literal,baseline")]
    methods: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "improved,random")]
    starts: Vec<StartKind>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on baseline edge draws per instance.
    #[arg(long, default_value_t = 1000)]
    max_attempts: u64,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let registry = MethodRegistry::builtin();
    let outcome = match cli.command {
        Command::Split(args) => split(&args, &registry),
        Command::Check(args) => check(&args),
        Command::Gen(args) => generate(&args),
        Command::Bench(args) => bench(&args, &registry),
        Command::Methods => methods(&registry),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn read_tree(path: &Path) -> Result<WeightedTree> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_tree(&text).with_context(|| format!("parsing {}", path.display()))
}

fn window(tree: &WeightedTree, epsilon: &str) -> Result<ToleranceWindow> {
    let doubled = parse_doubled_epsilon(epsilon, tree.scale()).with_context(|| format!("epsilon `{epsilon}`"))?;
    Ok(ToleranceWindow::for_tree(tree, doubled)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn split(args: &SplitArgs, registry: &MethodRegistry) -> Result<u8> {
    let method = registry.get(&args.method).ok_or_else(|| {
        anyhow!(
            "unknown method `{}` (available: {})",
            args.method,
            registry.names().join(", ")
        )
    })?;
    let tree = read_tree(&args.path)?;
    let window = window(&tree, &args.epsilon)?;
    let start = args.start.with_seed(args.seed).resolve(&tree)?;

    let clock = Instant::now();
    let result = method.split(&tree, &window, start)?;
    let elapsed_us = clock.elapsed().as_micros() as u64;

    let start = method.uses_start().then_some(start);
    let record = ResultRecord::new(&tree, &window, &result, method.name(), start, elapsed_us, args.trace);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&record)?),
        Format::Human => print!("{}", human_record(&record)),
    }
    Ok(if result.verdict.is_split() {
        EXIT_SPLIT
    } else {
        EXIT_NOT_SPLITTABLE
    })
}

fn human_record(r: &ResultRecord) -> String {
    let mut out = match (&r.edge, &r.sides, r.witness) {
        (Some([u, v]), Some([a, b]), _) => format!("split at edge ({u}, {v}): {a} | {b}\n"),
        (_, _, Some(w)) => format!("not splittable: every component of T - {{{w}}} is below S/2 - ε\n"),
        _ => String::new(),
    };
    out += &format!(
        "S = {}, ε = {}, method {}, {} iteration(s)",
        r.total, r.epsilon, r.method, r.iterations
    );
    if let Some(s) = r.start {
        out += &format!(", start {s}");
    }
    out += &format!(", {} us\n", r.elapsed_us);
    for (i, step) in r.trace.iter().flatten().enumerate() {
        let weight = step.weight.as_deref().unwrap_or("");
        let line = match (step.kind.as_str(), step.edge, step.next) {
            ("found", Some([u, v]), _) => format!("cut edge ({u}, {v}), side {weight}"),
            ("descend", _, Some(next)) => format!("heavy component {weight}, move to {next}"),
            _ => "no cut edge".to_string(),
        };
        out += &format!("  {:>3}. vertex {}: {line}\n", i + 1, step.vertex);
    }
    out
}

fn check(args: &CheckArgs) -> Result<u8> {
    let tree = read_tree(&args.path)?;
    let window = window(&tree, &args.epsilon)?;
    let (u, v) = (args.edge[0], args.edge[1]);
    if u == v {
        bail!("edge ({u}, {u}) is a self-loop");
    }
    let edge = Edge::new(u, v);
    let cut = is_cut_edge(&tree, edge, &window)?;
    let (w1, w2) = edge_split_weights(&tree, edge)?;
    let scale = tree.scale();
    match args.format {
        Format::Json => println!(
            "{}",
            json!({
                "edge": [edge.u, edge.v],
                "sides": [format_scaled(w1, scale), format_scaled(w2, scale)],
                "cut": cut,
                "epsilon": format_half(window.doubled_epsilon(), scale),
                "total": format_scaled(window.total(), scale),
            })
        ),
        Format::Human => println!(
            "edge {edge}: {} | {} is {}a cut edge for S = {}, ε = {}",
            format_scaled(w1, scale),
            format_scaled(w2, scale),
            if cut { "" } else { "not " },
            format_scaled(window.total(), scale),
            format_half(window.doubled_epsilon(), scale)
        ),
    }
    Ok(if cut { EXIT_SPLIT } else { EXIT_NOT_SPLITTABLE })
}

fn grid_dims(width: Option<usize>, height: Option<usize>) -> Result<(usize, usize)> {
    let width = width.context("--width is required for grid trees")?;
    Ok((width, height.unwrap_or(width)))
}

fn generate(args: &GenArgs) -> Result<u8> {
    let topology = match args.kind {
        Kind::Prufer => prufer_random_tree(args.n.context("--n is required for prufer trees")?, args.seed)?,
        Kind::Grid => {
            let (w, h) = grid_dims(args.width, args.height)?;
            wilson_spanning_tree(w, h, args.seed)?
        }
    };
    let spec = WeightSpec {
        kind: args.weights,
        seed: args.seed.wrapping_add(1),
    };
    let tree = assign_weights(&topology, &spec)?;
    write_output(args.output.as_deref(), &serialize_tree(&tree))?;
    Ok(0)
}

fn bench(args: &BenchArgs, registry: &MethodRegistry) -> Result<u8> {
    let source = match (&args.input, args.kind) {
        (Some(path), _) => InstanceSource::Fixed(read_tree(path)?),
        (None, Some(Kind::Prufer)) => InstanceSource::Prufer {
            n: args.n.context("--n is required for prufer instances")?,
        },
        (None, Some(Kind::Grid)) => {
            let (width, height) = grid_dims(args.width, args.height)?;
            InstanceSource::Grid { width, height }
        }
        (None, None) => bail!("one of --kind or --input is required"),
    };
    let config = BenchConfig {
        source,
        weights: args.weights,
        epsilon: args.epsilon.clone(),
        methods: args.methods.clone(),
        starts: args.starts.clone(),
        trials: args.trials,
        seed: args.seed,
        max_attempts: args.max_attempts,
    };
    let report = run_bench(&config, registry)?;
    let text = match args.format {
        Format::Human => report.to_table(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    write_output(args.output.as_deref(), &text)?;
    Ok(0)
}

fn methods(registry: &MethodRegistry) -> Result<u8> {
    for name in registry.names() {
        let m = registry.get(name).expect("listed method");
        println!("{name:<10} {}", m.description());
    }
    println!("{BASELINE:<10} uniform random edge draws until one is a cut edge (bench only)");
    Ok(0)
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use treecube::{
    cube_root, deck, enumeration_cap, parse_deck, parse_graph, power, reconstruct, DeckError,
    GraphFormat, LabeledGraph, RootKind,
};
use treecube_harness::{collide, pool, run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "treecube",
    version,
    about = "Cubes of trees: roots, decks, and verification sweeps"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Graph encoding for input and output.
    #[arg(long, value_enum, default_value_t = Format::Edgelist, global = true)]
    format: Format,
    /// Also write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest tree order to sweep.
    #[arg(long, global = true)]
    max_order: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> GraphFormat {
        match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the k-th power of a graph.
    Power {
        /// Graph file, or `-` for standard input.
        input: PathBuf,
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Find the tree whose cube is the input graph.
    Root { input: PathBuf },
    /// Write the vertex-deleted deck of a graph.
    Deck { input: PathBuf },
    /// Rebuild the tree cube behind a deck.
    Reconstruct { input: PathBuf },
    /// Decide whether a deck belongs to a tree cube.
    Recognize { input: PathBuf },
    /// Run an invariant sweep over all trees up to the maximum order.
    Verify { suite: Suite },
    /// Search for non-isomorphic trees with isomorphic n-th powers.
    Collide {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Skip collisions whose common power is complete.
        #[arg(long)]
        require_noncomplete: bool,
    },
}

enum Fail {
    Usage(String),
    Input(String),
}

type Outcome = Result<bool, Fail>;

fn read_input(path: &Path) -> Result<String, Fail> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Fail::Input(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, format: Format) -> Result<LabeledGraph, Fail> {
    let text = read_input(path)?;
    parse_graph(&text, format.into()).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn read_deck(path: &Path) -> Result<treecube::Deck, Fail> {
    let text = read_input(path)?;
    parse_deck(&text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn write_json(path: Option<&Path>, value: &impl Serialize) -> Result<(), Fail> {
    let Some(path) = path else { return Ok(()) };
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    fs::write(path, text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn max_order(global: &Global, default: usize) -> Result<usize, Fail> {
    let order = global.max_order.unwrap_or(default);
    let cap = enumeration_cap();
    if order == 0 || order > cap {
        return Err(Fail::Usage(format!("--max-order must be in 1..={cap}")));
    }
    Ok(order)
}

fn edge_text(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if parts.is_empty() {
        "(no edges)".into()
    } else {
        parts.join(" ")
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let json = g.json.as_deref();
    let out = &mut io::stdout().lock();
    let print = |out: &mut io::StdoutLock, text: &str| {
        out.write_all(text.as_bytes())
            .map_err(|e| Fail::Usage(format!("stdout: {e}")))
    };
    match &cli.command {
        Command::Power { input, k } => {
            let graph = read_graph(input, g.format)?;
            let result = power(&graph, *k);
            print(out, &result.encode(g.format.into()))?;
            write_json(json, &result)?;
            Ok(true)
        }
        Command::Root { input } => {
            let graph = read_graph(input, g.format)?;
            let report = cube_root(&graph).report(graph.order());
            print(out, &format!("kind: {:?}\n", report.kind))?;
            for (i, edges) in report.roots.iter().enumerate() {
                print(out, &format!("root {}: {}\n", i + 1, edge_text(edges)))?;
            }
            if !report.roots_enumerated {
                print(
                    out,
                    "roots not listed: order exceeds the enumeration limit\n",
                )?;
            }
            write_json(json, &report)?;
            Ok(report.kind != RootKind::NotACube)
        }
        Command::Deck { input } => {
            let graph = read_graph(input, g.format)?;
            print(out, &deck(&graph).to_text(g.format.into()))?;
            Ok(true)
        }
        Command::Reconstruct { input } | Command::Recognize { input } => {
            let cards = read_deck(input)?;
            let report = reconstruct(&cards).map_err(|e| match e {
                DeckError::OrderTooSmall(_) => Fail::Usage(e.to_string()),
                _ => Fail::Input(e.to_string()),
            })?;
            let verdict = if report.recognized {
                "recognized"
            } else {
                "not recognized"
            };
            print(out, &format!("{verdict}\n"))?;
            if matches!(cli.command, Command::Reconstruct { .. }) {
                for step in &report.trace {
                    print(out, &format!("  {step}\n"))?;
                }
                if let Some(graph) = &report.graph {
                    print(out, &graph.encode(g.format.into()))?;
                }
            }
            write_json(json, &report)?;
            Ok(report.recognized)
        }
        Command::Verify { suite } => {
            let order = max_order(g, suite.default_max_order())?;
            let report =
                run_suite(*suite, order, g.workers).map_err(|e| Fail::Usage(e.to_string()))?;
            print(
                out,
                &format!(
                    "{:<22} {:>9} {:>7} {:>9} {:>10}\n",
                    "suite", "max order", "checked", "failures", "elapsed"
                ),
            )?;
            print(
                out,
                &format!(
                    "{:<22} {:>9} {:>7} {:>9} {:>9.2}s\n",
                    report.suite.name(),
                    report.max_order,
                    report.checked,
                    report.failures.len(),
                    report.elapsed.as_secs_f64()
                ),
            )?;
            for f in &report.failures {
                let subjects: Vec<String> = f.subjects.iter().map(|c| c.to_hex()).collect();
                print(
                    out,
                    &format!("  p={} [{}] {}\n", f.order, subjects.join(", "), f.detail),
                )?;
            }
            print(out, if report.passed() { "PASS\n" } else { "FAIL\n" })?;
            write_json(json, &report)?;
            Ok(report.passed())
        }
        Command::Collide {
            n,
            require_noncomplete,
        } => {
            let order = max_order(g, 10)?;
            let pool = pool(g.workers).map_err(|e| Fail::Usage(e.to_string()))?;
            let result = pool
                .install(|| collide(*n, order, *require_noncomplete))
                .map_err(|e| Fail::Usage(e.to_string()))?;
            print(
                out,
                &format!(
                    "{} collisions of {}-th powers up to order {order}\n",
                    result.pairs.len(),
                    n
                ),
            )?;
            for pair in &result.pairs {
                print(
                    out,
                    &format!(
                        "  p={} complete={} | {} | {}\n",
                        pair.first.order(),
                        pair.complete,
                        edge_text(&pair.first.edges()),
                        edge_text(&pair.second.edges())
                    ),
                )?;
            }
            write_json(json, &result)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("treecube: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Input(msg)) => {
            eprintln!("treecube: {msg}");
            ExitCode::from(3)
        }
    }
}

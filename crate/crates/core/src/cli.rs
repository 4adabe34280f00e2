//! Command-line front end.
//!
//! Every command renders into an [`Outcome`] instead of writing to the
//! process streams, so the binary stays a thin shell and commands can be
//! exercised in-process.

use std::ffi::OsString;
use std::fmt::Write;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arcset::ArcSet;
use crate::conflict::build_conflict_graph;
use crate::count::{count_arborescences, has_arborescence};
use crate::digraph::{parse_adjacency_matrix, parse_arc_list, Arc, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::growth::{enumerate_with, GrowthOptions, Strategy};
use crate::mis::maximal_noncrossing_sets;
use crate::oracle::{
    brute_force_arborescences, brute_force_maximal_independent_sets,
    brute_force_projective_arborescences, OracleLimits,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_LIMIT: usize = 1_000_000;
const ORACLE_LIMITS: OracleLimits = OracleLimits {
    max_vertices: 10,
    max_arcs: 64,
};

#[derive(Parser, Debug)]
#[command(
    name = "projtree",
    version,
    about = "Enumerate projective spanning arborescences of a digraph"
)]
struct Cli {
    /// Input format.
    #[arg(long, value_enum, global = true, default_value_t = InputFormat::ArcList)]
    format: InputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    ArcList,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Direct,
    ViaSubgraphs,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Direct => Strategy::Direct,
            StrategyArg::ViaSubgraphs => Strategy::ViaSubgraphs,
        }
    }
}

#[derive(Args, Debug)]
struct InputArg {
    /// Input file; stdin when omitted or "-".
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RootArg {
    /// Root vertex; defaults to the root named in the arc-list header.
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args, Debug)]
struct GrowthArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Direct)]
    strategy: StrategyArg,
    /// Abort past this many trees or pre-trees per generation.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    /// Use the exponential-time brute-force reference instead.
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List arcs in lexicographic order with their K-indices, then all crossing pairs.
    Conflicts(InputArg),
    /// List every maximal projective spanning subgraph.
    Subgraphs {
        #[command(flatten)]
        input: InputArg,
        /// Abort once a level holds more sets than this.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Use the exponential-time brute-force reference instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Count spanning arborescences rooted at the root.
    Count {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        root: RootArg,
        /// Count projective arborescences only.
        #[arg(long)]
        projective: bool,
        #[command(flatten)]
        growth: GrowthArgs,
    },
    /// Print every projective spanning arborescence rooted at the root.
    Enumerate {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        root: RootArg,
        #[command(flatten)]
        growth: GrowthArgs,
        /// One DOT graph per tree.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
    },
    /// Exit 0 if a spanning arborescence rooted at the root exists, 1 otherwise.
    Check {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        root: RootArg,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    #[default]
    Text,
    Dot,
    JsonLines,
}

/// Resolved settings for one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` reads stdin.
    pub input: Option<PathBuf>,
    pub format: InputFormat,
    pub root: Option<VertexId>,
    pub strategy: Strategy,
    pub limit: usize,
    pub output: OutputMode,
    pub projective: bool,
    pub oracle: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: None,
            format: InputFormat::ArcList,
            root: None,
            strategy: Strategy::Direct,
            limit: DEFAULT_LIMIT,
            output: OutputMode::Text,
            projective: false,
            oracle: false,
        }
    }
}

/// Exit status and captured streams of a command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn load_graph(text: &str, format: InputFormat) -> Result<Digraph> {
    match format {
        InputFormat::ArcList => parse_arc_list(text),
        InputFormat::Matrix => parse_adjacency_matrix(text),
    }
}

fn join_arcs(arcs: impl IntoIterator<Item = Arc>) -> String {
    arcs.into_iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn root_of(cfg: &RunConfig, g: &Digraph) -> Result<VertexId> {
    let r = cfg.root.or(g.root()).ok_or(Error::Parse {
        line: 1,
        message: "no root given: pass --root or add \"root <r>\" to the header".into(),
    })?;
    if r.get() > g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: r.get(),
            n: g.n(),
        });
    }
    Ok(r)
}

pub fn cmd_conflicts(_cfg: &RunConfig, g: &Digraph) -> Outcome {
    let cg = build_conflict_graph(g);
    let mut out = String::new();
    for (i, a) in cg.ordered_arcs().iter().enumerate() {
        writeln!(out, "arc {} {}", i + 1, a).unwrap();
    }
    for (i, j) in cg.conflict_pairs() {
        writeln!(out, "conflict {} {}", i + 1, j + 1).unwrap();
    }
    Outcome::ok(out)
}

pub fn cmd_subgraphs(cfg: &RunConfig, g: &Digraph) -> Outcome {
    let cg = build_conflict_graph(g);
    let sets = if cfg.oracle {
        brute_force_maximal_independent_sets(&cg, ORACLE_LIMITS)
    } else {
        maximal_noncrossing_sets(&cg, Some(cfg.limit))
    };
    match sets {
        Ok(sets) => {
            let mut out = String::new();
            for s in &sets {
                writeln!(out, "{}", join_arcs(g.arcs_of(s))).unwrap();
            }
            Outcome::ok(out)
        }
        Err(e) => limit_or_error(e),
    }
}

fn limit_or_error(e: Error) -> Outcome {
    match e {
        Error::LimitExceeded(_) => Outcome::error(format!(
            "{e}; enumeration stopped and no output was written"
        )),
        e => Outcome::error(e),
    }
}

fn canonical_key(g: &Digraph, set: &ArcSet) -> Vec<(VertexId, VertexId)> {
    let mut key: Vec<_> = g.arcs_of(set).map(|a| (a.head, a.tail)).collect();
    key.sort();
    key
}

/// Projective trees as arc sets over `g`, in canonical order.
fn projective_trees(cfg: &RunConfig, g: &Digraph, r: VertexId) -> Result<Vec<ArcSet>> {
    if cfg.oracle {
        let mut trees = brute_force_projective_arborescences(g, r, ORACLE_LIMITS)?;
        trees.sort_by_cached_key(|t| canonical_key(g, t));
        if trees.len() > cfg.limit {
            return Err(Error::LimitExceeded(cfg.limit));
        }
        return Ok(trees);
    }
    let opts = GrowthOptions {
        strategy: cfg.strategy,
        limit: Some(cfg.limit),
        keep_rejected: false,
    };
    Ok(enumerate_with(g, r, &opts)?
        .trees
        .into_iter()
        .map(|t| t.arcs().clone())
        .collect())
}

pub fn cmd_count(cfg: &RunConfig, g: &Digraph) -> Outcome {
    let r = match root_of(cfg, g) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let count = if cfg.projective {
        projective_trees(cfg, g, r).map(|t| t.len().to_string())
    } else if cfg.oracle {
        brute_force_arborescences(g, r, ORACLE_LIMITS).map(|t| t.len().to_string())
    } else {
        count_arborescences(g, r).map(|c| c.to_string())
    };
    match count {
        Ok(c) => Outcome::ok(format!("{c}\n")),
        Err(e) => limit_or_error(e),
    }
}

pub fn cmd_enumerate(cfg: &RunConfig, g: &Digraph) -> Outcome {
    let r = match root_of(cfg, g) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let trees = match projective_trees(cfg, g, r) {
        Ok(t) => t,
        Err(e) => return limit_or_error(e),
    };
    let mut out = String::new();
    for t in &trees {
        let mut arcs: Vec<Arc> = g.arcs_of(t).collect();
        arcs.sort_by_key(|a| (a.head, a.tail));
        match cfg.output {
            OutputMode::Text => writeln!(out, "{}", join_arcs(arcs)).unwrap(),
            OutputMode::Dot => out.push_str(
                &g.subgraph_with_arcs(t)
                    .expect("tree arcs belong to g")
                    .to_dot(None),
            ),
            OutputMode::JsonLines => {
                let arcs: Vec<[usize; 2]> =
                    arcs.iter().map(|a| [a.tail.get(), a.head.get()]).collect();
                writeln!(out, "{}", json!({ "root": r.get(), "arcs": arcs })).unwrap();
            }
        }
    }
    Outcome::ok(out)
}

pub fn cmd_check(cfg: &RunConfig, g: &Digraph) -> Outcome {
    let result = root_of(cfg, g).and_then(|r| has_arborescence(g, r));
    match result {
        Ok(true) => Outcome::ok("yes\n".into()),
        Ok(false) => Outcome {
            code: EXIT_NO,
            stdout: "no\n".into(),
            stderr: String::new(),
        },
        Err(e) => Outcome::error(e),
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn vertex_arg(root: Option<usize>) -> std::result::Result<Option<VertexId>, Error> {
    match root {
        None => Ok(None),
        Some(0) => Err(Error::VertexOutOfRange { vertex: 0, n: 0 }),
        Some(r) => Ok(VertexId::new(r)),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// reading the graph from `stdin` unless a path is given.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut cfg = RunConfig {
        format: cli.format,
        ..Default::default()
    };
    let handler: fn(&RunConfig, &Digraph) -> Outcome;
    let root;
    match cli.command {
        Command::Conflicts(input) => {
            cfg.input = input.input;
            root = None;
            handler = cmd_conflicts;
        }
        Command::Subgraphs {
            input,
            limit,
            oracle,
        } => {
            cfg.input = input.input;
            cfg.limit = limit;
            cfg.oracle = oracle;
            root = None;
            handler = cmd_subgraphs;
        }
        Command::Count {
            input,
            root: r,
            projective,
            growth,
        } => {
            cfg.input = input.input;
            cfg.projective = projective;
            cfg.strategy = growth.strategy.into();
            cfg.limit = growth.limit;
            cfg.oracle = growth.oracle;
            root = r.root;
            handler = cmd_count;
        }
        Command::Enumerate {
            input,
            root: r,
            growth,
            dot,
            json,
        } => {
            cfg.input = input.input;
            cfg.strategy = growth.strategy.into();
            cfg.limit = growth.limit;
            cfg.oracle = growth.oracle;
            cfg.output = match (dot, json) {
                (true, _) => OutputMode::Dot,
                (_, true) => OutputMode::JsonLines,
                _ => OutputMode::Text,
            };
            root = r.root;
            handler = cmd_enumerate;
        }
        Command::Check { input, root: r } => {
            cfg.input = input.input;
            root = r.root;
            handler = cmd_check;
        }
    }
    cfg.root = match vertex_arg(root) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let text = match read_input(&cfg.input, stdin) {
        Ok(t) => t,
        Err(e) => return Outcome::error(format!("cannot read input: {e}")),
    };
    let g = match load_graph(&text, cfg.format) {
        Ok(g) => g,
        Err(e) => return Outcome::error(e),
    };
    let mut outcome = handler(&cfg, &g);
    if cfg.oracle && outcome.code == EXIT_OK {
        outcome
            .stderr
            .push_str("note: results computed by the exponential-time brute-force oracle\n");
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAPER: &str = "n 6\n2 3\n2 6\n3 6\n4 1\n4 2\n5 2\n5 4\n";

    fn exec(args: &[&str], input: &str) -> Outcome {
        let argv = std::iter::once("projtree").chain(args.iter().copied());
        run(argv, &mut input.as_bytes())
    }

    #[test]
    fn conflicts_output() {
        let o = exec(&["conflicts"], PAPER);
        assert_eq!(o.code, 0);
        assert_eq!(
            o.stdout,
            "arc 1 2 3\narc 2 4 1\narc 3 4 2\narc 4 5 2\narc 5 5 4\narc 6 2 6\narc 7 3 6\n\
             conflict 2 4\nconflict 2 6\nconflict 2 7\nconflict 3 7\nconflict 4 7\n"
        );
        let o = exec(&["conflicts"], "n 3\n1 2\n2 3\n");
        assert_eq!(
            o.stdout
                .lines()
                .filter(|l| l.starts_with("conflict"))
                .count(),
            0
        );
    }

    #[test]
    fn malformed_input() {
        let o = exec(&["conflicts"], "n 3\n1 2\nfoo\n");
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("line 3"), "{}", o.stderr);
        assert!(o.stdout.is_empty());
    }

    #[test]
    fn subgraphs_output() {
        let o = exec(&["subgraphs"], PAPER);
        assert_eq!(
            o.stdout,
            "2 3, 4 1, 4 2, 5 4\n2 3, 4 2, 5 2, 5 4, 2 6\n2 3, 5 4, 2 6, 3 6\n"
        );
        assert_eq!(exec(&["subgraphs"], "n 3\n1 2\n2 3\n").stdout, "1 2, 2 3\n");
        let o = exec(&["subgraphs"], "n 3\n");
        assert_eq!((o.code, o.stdout.as_str()), (0, ""));
        let o = exec(&["subgraphs", "--oracle"], PAPER);
        assert_eq!(o.stdout, exec(&["subgraphs"], PAPER).stdout);
        let o = exec(&["subgraphs", "--limit", "2"], PAPER);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("limit of 2 exceeded"));
    }

    #[test]
    fn count_output() {
        assert_eq!(exec(&["count", "--root", "5"], PAPER).stdout, "4\n");
        assert_eq!(
            exec(&["count", "--root", "5", "--projective"], PAPER).stdout,
            "0\n"
        );
        assert_eq!(
            exec(&["count", "--root", "5", "--oracle"], PAPER).stdout,
            "4\n"
        );
        assert_eq!(
            exec(&["count", "--root", "1"], "n 3\n1 2\n2 3\n").stdout,
            "1\n"
        );
        assert_eq!(exec(&["count"], "n 3 root 1\n1 2\n2 3\n").stdout, "1\n");
        let o = exec(&["count", "--root", "9"], PAPER);
        assert_eq!(o.code, EXIT_USAGE);
        let o = exec(&["count"], PAPER);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("no root"));
    }

    #[test]
    fn enumerate_output() {
        let o = exec(&["enumerate", "--root", "5"], PAPER);
        assert_eq!((o.code, o.stdout.as_str()), (0, ""));
        assert_eq!(
            exec(&["enumerate", "--root", "1"], "n 3\n1 2\n2 3\n").stdout,
            "1 2, 2 3\n"
        );
        let four = "n 4\n1 2\n1 3\n2 3\n2 4\n3 4\n";
        for extra in [&[][..], &["--strategy", "via-subgraphs"], &["--oracle"]] {
            let mut args = vec!["enumerate", "--root", "1"];
            args.extend_from_slice(extra);
            assert_eq!(
                exec(&args, four).stdout,
                "1 2, 1 3, 3 4\n1 2, 2 3, 2 4\n1 2, 2 3, 3 4\n",
                "{extra:?}"
            );
        }
        let json = exec(&["enumerate", "--root", "1", "--json"], "n 3\n1 2\n2 3\n").stdout;
        assert_eq!(json, "{\"arcs\":[[1,2],[2,3]],\"root\":1}\n");
        let dot = exec(&["enumerate", "--root", "1", "--dot"], four).stdout;
        assert_eq!(dot.matches("digraph G").count(), 3);
        let o = exec(&["enumerate", "--root", "1", "--limit", "2"], four);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stdout.is_empty());
    }

    #[test]
    fn check_output() {
        let o = exec(&["check", "--root", "5"], PAPER);
        assert_eq!((o.code, o.stdout.as_str()), (0, "yes\n"));
        let o = exec(&["check", "--root", "6"], PAPER);
        assert_eq!((o.code, o.stdout.as_str()), (1, "no\n"));
        let o = exec(&["check", "--root", "1"], "n 1\n");
        assert_eq!((o.code, o.stdout.as_str()), (0, "yes\n"));
        assert_eq!(exec(&["check", "--root", "7"], PAPER).code, EXIT_USAGE);
        assert_eq!(exec(&["check", "--root", "0"], PAPER).code, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(exec(&["conflicts", "--root", "1"], PAPER).code, EXIT_USAGE);
        assert_eq!(exec(&["subgraphs", "--root", "1"], PAPER).code, EXIT_USAGE);
        assert_eq!(exec(&["frobnicate"], PAPER).code, EXIT_USAGE);
        assert_eq!(
            exec(&["enumerate", "--root", "1", "--dot", "--json"], PAPER).code,
            EXIT_USAGE
        );
        assert_eq!(exec(&["--help"], "").code, EXIT_OK);
    }

    #[test]
    fn matrix_input() {
        let m = "0 0 0 0 0 0\n0 0 1 0 0 1\n0 0 0 0 0 1\n1 1 0 0 0 0\n0 1 0 1 0 0\n0 0 0 0 0 0\n";
        assert_eq!(
            exec(&["--format", "matrix", "conflicts"], m),
            exec(&["conflicts"], PAPER)
        );
        assert_eq!(
            exec(&["count", "--format", "matrix", "--root", "5", "-"], m).stdout,
            "4\n"
        );
    }
}

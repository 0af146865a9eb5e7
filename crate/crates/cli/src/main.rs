//! `dimatch` command line.
//!
//! Exit status: 0 on success, 1 when the answer is "no" (no DIM, no
//! partition, a failed check), 2 on usage or input errors, 3 when a search
//! budget runs out.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimatch::corpus::{
    counterexample_file, exhaustive_corpus, random_connected_sample, sweep, SweepConfig,
    MAX_EXHAUSTIVE_N,
};
use dimatch::generators::{self, LabeledGraph};
use dimatch::io::{self as dio, Format};
use dimatch::partition::{find_dim_partition_with_budget, list_assignment, verify_dim_partition};
use dimatch::solver::{enumerate_dims, find_dim};
use dimatch::theorems::{full_report, Budgets, DEFAULT_BUDGET, DEFAULT_MAX_CYCLE_LEN};
use dimatch::{DimPartition, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "dimatch", version, about = "Dominating induced matchings in simple graphs")]
struct Cli {
    /// Graph file format, for both reading and writing.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Find, enumerate or size dominating induced matchings.
    Dim {
        #[command(subcommand)]
        action: DimAction,
    },
    /// Find or verify a partition of the edges into DIMs.
    Partition {
        #[command(subcommand)]
        action: PartitionAction,
    },
    /// Run every structural check on a graph.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Run the checks over a corpus of small graphs.
    Sweep(SweepArgs),
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    /// Kneser graph on the k-subsets of {1..n}.
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Kneser graph KG(2r-1, r-1), optionally with its DIM partition.
    KneserFamily {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        with_partition: bool,
    },
    /// Bipartite disjointness graph of (r-1)- and (s-1)-subsets of {1..r+s-1}.
    Bg {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        with_partition: bool,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        k: usize,
    },
    Petersen,
}

#[derive(Args, Debug)]
struct GenOutput {
    /// Write the graph here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Write the partition here; without it the partition follows the graph
    /// on stdout after a blank line.
    #[arg(long, global = true)]
    partition_out: Option<PathBuf>,
    /// Write the subset labels of the vertices here.
    #[arg(long, global = true)]
    labels_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph file, or '-' for stdin.
    graph: PathBuf,
}

#[derive(Subcommand, Debug)]
enum DimAction {
    /// Print one DIM, one "u-v" line per edge.
    Find {
        #[command(flatten)]
        input: GraphInput,
        /// Also write a certificate binding the DIM to the graph.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Print every DIM.
    Enum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the common size of the DIMs.
    Size {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check a certificate against a graph.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum PartitionAction {
    /// Search for a DIM partition and print it.
    Find {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also write the vertex list assignment of the partition.
        #[arg(long)]
        lists_out: Option<PathBuf>,
    },
    /// Verify a partition file.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        partition: PathBuf,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLE_LEN)]
    max_cycle: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    /// Key-value text report.
    All(VerifyArgs),
    /// JSON report.
    Report(VerifyArgs),
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Exhaustive sweep over connected graphs on 1..=N vertices.
    #[arg(long)]
    max_n: Option<usize>,
    /// Add a seeded random sample of connected graphs.
    #[arg(long)]
    sample: bool,
    /// Vertex count of sampled graphs.
    #[arg(long, default_value_t = 8, requires = "sample")]
    n: usize,
    #[arg(long, default_value_t = 42, requires = "sample")]
    seed: u64,
    #[arg(long, default_value_t = 1000, requires = "sample")]
    count: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLE_LEN)]
    max_cycle: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Where counterexample graphs are written, if any turn up.
    #[arg(long, default_value = "sweep-counterexamples")]
    dump_dir: PathBuf,
}

enum Failure {
    No(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExhausted { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = Format::from(cli.format);
    let result = match cli.command {
        Command::Gen { family, out } => generate(family, &out, format),
        Command::Dim { action } => dim(action, format),
        Command::Partition { action } => partition(action, format),
        Command::Verify { action } => verify(action, format),
        Command::Sweep(args) => run_sweep(args),
    };
    let (stdout, code, message) = match result {
        Ok(text) => (text, 0, None),
        Err(Failure::No(text)) => (text, 1, None),
        Err(Failure::Usage(msg)) => (String::new(), 2, Some(msg)),
        Err(Failure::Budget(msg)) => (String::new(), 3, Some(msg)),
    };
    // A closed pipe on stdout is not worth a panic.
    let _ = io::stdout().lock().write_all(stdout.as_bytes());
    if let Some(msg) = message {
        eprintln!("error: {msg}");
    }
    ExitCode::from(code)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
    }
}

fn read_graph(input: &GraphInput, format: Format) -> Result<Graph, Failure> {
    let text = read_input(&input.graph)?;
    dio::parse_graph(&text, format)
        .map_err(|e| Failure::Usage(format!("{}: {e}", input.graph.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))
}

fn generate(family: GenFamily, out: &GenOutput, format: Format) -> CmdResult {
    let (lg, partition): (LabeledGraph, Option<DimPartition>) = match family {
        GenFamily::Kneser { n, k } => (generators::kneser(n, k)?, None),
        GenFamily::KneserFamily { r, with_partition } => {
            let (lg, p) = generators::kneser_dim_partition(r)?;
            (lg, with_partition.then_some(p))
        }
        GenFamily::Bg { r, s, with_partition } => {
            let (lg, p) = generators::bg_dim_partition(r, s)?;
            (lg, with_partition.then_some(p))
        }
        other => {
            let g = match other {
                GenFamily::Cycle { n } => generators::cycle(n)?,
                GenFamily::Complete { n } => generators::complete(n)?,
                GenFamily::Star { k } => generators::star(k)?,
                GenFamily::Petersen => generators::petersen(),
                _ => unreachable!(),
            };
            let lg = LabeledGraph {
                graph: g,
                labels: Vec::new(),
                ground_size: 0,
            };
            (lg, None)
        }
    };
    let g = &lg.graph;
    let mut stdout = String::new();

    let graph_text = dio::serialize_graph(g, format);
    match &out.output {
        Some(path) => write_file(path, &graph_text)?,
        None => stdout.push_str(&graph_text),
    }
    if let Some(p) = &partition {
        let text = dio::serialize_partition(g, p);
        match &out.partition_out {
            Some(path) => write_file(path, &text)?,
            None => {
                if !stdout.is_empty() {
                    stdout.push('\n');
                }
                stdout.push_str(&text);
            }
        }
    } else if out.partition_out.is_some() {
        return Err(Failure::Usage(
            "--partition-out needs a family generated with --with-partition".into(),
        ));
    }
    if let Some(path) = &out.labels_out {
        if lg.labels.is_empty() {
            return Err(Failure::Usage("this family has no vertex labels".into()));
        }
        write_file(path, &dio::serialize_labels(&lg.labels))?;
    }
    Ok(stdout)
}

fn dim(action: DimAction, format: Format) -> CmdResult {
    match action {
        DimAction::Find { input, certificate } => {
            let g = read_graph(&input, format)?;
            let Some(d) = find_dim(&g) else {
                return Err(Failure::No("no DIM\n".into()));
            };
            if let Some(path) = certificate {
                write_file(&path, &dio::serialize_certificate(&g, &d))?;
            }
            Ok(dio::serialize_matching(&g, &d))
        }
        DimAction::Enum { input, budget } => {
            let g = read_graph(&input, format)?;
            let dims = enumerate_dims(&g, budget)?;
            let mut out = format!("count {}\n", dims.len());
            for d in &dims {
                out.push('\n');
                out.push_str(&dio::serialize_matching(&g, d));
            }
            if dims.is_empty() {
                Err(Failure::No(out))
            } else {
                Ok(out)
            }
        }
        DimAction::Size { input } => {
            let g = read_graph(&input, format)?;
            match find_dim(&g) {
                Some(d) => Ok(format!("{}\n", d.len())),
                None => Err(Failure::No("no DIM\n".into())),
            }
        }
        DimAction::Check { input, certificate } => {
            let g = read_graph(&input, format)?;
            let d = dio::parse_certificate(&g, &read_input(&certificate)?)?;
            let w = dimatch::solver::classify_dim(&g, d.edges())?;
            let line = format!("{}\n", w.classification());
            if w.is_valid() {
                Ok(line)
            } else {
                Err(Failure::No(line))
            }
        }
    }
}

fn partition(action: PartitionAction, format: Format) -> CmdResult {
    match action {
        PartitionAction::Find {
            input,
            budget,
            lists_out,
        } => {
            let g = read_graph(&input, format)?;
            let Some(p) = find_dim_partition_with_budget(&g, Some(budget))? else {
                return Err(Failure::No("no partition\n".into()));
            };
            if let Some(path) = lists_out {
                let l = list_assignment(&g, &p)?;
                write_file(&path, &dio::serialize_list_assignment(&l))?;
            }
            Ok(dio::serialize_partition(&g, &p))
        }
        PartitionAction::Verify { input, partition } => {
            let g = read_graph(&input, format)?;
            let p = dio::parse_partition(&g, &read_input(&partition)?)?;
            let check = verify_dim_partition(&g, &p)?;
            let mut out = String::new();
            writeln!(out, "valid = {}", check.valid).unwrap();
            writeln!(out, "class_count_ok = {}", check.class_count_ok).unwrap();
            writeln!(out, "regularity = {}", check.regularity).unwrap();
            if check.valid {
                Ok(out)
            } else {
                Err(Failure::No(out))
            }
        }
    }
}

fn verify(action: VerifyAction, format: Format) -> CmdResult {
    let (args, json) = match action {
        VerifyAction::All(a) => (a, false),
        VerifyAction::Report(a) => (a, true),
    };
    if args.max_cycle < 3 {
        return Err(Failure::Usage("--max-cycle must be at least 3".into()));
    }
    let g = read_graph(&args.input, format)?;
    let budgets = Budgets {
        enumeration: args.budget,
        partition: args.budget,
        max_cycle_len: args.max_cycle,
    };
    let report = full_report(&g, &budgets);
    let text = if json { report.to_json() } else { report.to_string() };
    if report.all_passed() {
        Ok(text)
    } else {
        Err(Failure::No(text))
    }
}

fn run_sweep(args: SweepArgs) -> CmdResult {
    if args.max_n.is_none() && !args.sample {
        return Err(Failure::Usage("give --max-n, --sample, or both".into()));
    }
    if args.max_cycle < 3 {
        return Err(Failure::Usage("--max-cycle must be at least 3".into()));
    }
    let mut header = String::new();
    let mut corpus = Vec::new();
    if let Some(max_n) = args.max_n {
        if max_n > MAX_EXHAUSTIVE_N {
            return Err(Failure::Usage(format!(
                "exhaustive sweeps are limited to --max-n {MAX_EXHAUSTIVE_N}"
            )));
        }
        corpus.extend(exhaustive_corpus(max_n)?);
        writeln!(header, "exhaustive_max_n = {max_n}").unwrap();
    }
    if args.sample {
        corpus.extend(random_connected_sample(args.count, &[args.n], args.seed)?);
        writeln!(
            header,
            "sample = {} graphs on {} vertices, seed {}",
            args.count, args.n, args.seed
        )
        .unwrap();
    }
    let config = SweepConfig {
        budgets: Budgets {
            enumeration: args.budget,
            partition: args.budget,
            max_cycle_len: args.max_cycle,
        },
        ..SweepConfig::default()
    };
    writeln!(header, "max_cycle_len = {}", config.budgets.max_cycle_len).unwrap();
    writeln!(header, "budget = {}", args.budget).unwrap();
    writeln!(header, "oracle_max_edges = {}", config.oracle_max_edges).unwrap();

    let summary = sweep(&corpus, &config);
    let mut out = header + &summary.to_string();
    if summary.counterexamples.is_empty() {
        return Ok(out);
    }
    fs::create_dir_all(&args.dump_dir)
        .map_err(|e| Failure::Usage(format!("creating {}: {e}", args.dump_dir.display())))?;
    for (i, c) in summary.counterexamples.iter().enumerate() {
        let path = args.dump_dir.join(format!("counterexample-{i:04}.g"));
        write_file(&path, &counterexample_file(c))?;
        writeln!(out, "dumped {}", path.display()).unwrap();
    }
    Err(Failure::No(out))
}

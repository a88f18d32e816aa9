//! Command-line front end: compute parameters, build families, run the
//! verification suite, convert between formats.
//!
//! Exit codes: 0 success (and, for `verify`, every applicable bound holds),
//! 2 usage or parse failure, 3 solver budget exceeded. Stdout carries JSON
//! or CSV only; diagnostics go to stderr.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chromadisc::bounds::{compute_report, csv_rows, verify_all, BoundReport, CSV_HEADER};
use chromadisc::discrepancy::{SolverBudget, SolverError};
use chromadisc::families;
use chromadisc::graph::{bit_pairs, Graph};

#[derive(Parser)]
#[command(
    name = "chromadisc",
    version,
    about = "Exact chromatic discrepancy toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all invariants of one graph and print a JSON report.
    Compute(ComputeArgs),
    /// Run the bound-verification suite over a corpus of graphs.
    Verify(VerifyArgs),
    /// Print a family member as graph6.
    Family { spec: String },
    /// Convert between graph formats (reads stdin unless --input is given).
    Convert(ConvertArgs),
}

#[derive(Args)]
struct GraphSource {
    /// graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Path to an edge-list file (`n: u-v,u-v,...`).
    #[arg(long)]
    edges: Option<String>,
    /// Family spec such as cycle:9, tight-phi:4,2, nphard:path:3.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Include the discrepancy witnesses in the output.
    #[arg(long)]
    witness: bool,
    /// Compute only the classical invariants.
    #[arg(long)]
    skip_discrepancy: bool,
    /// Partition budget for the exact solvers (also CHROMADISC_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every labeled graph on 1..=N vertices (N at most 6).
    #[arg(long, value_name = "N")]
    all_graphs_up_to: Option<usize>,
    /// Family spec; repeatable.
    #[arg(long = "family", value_name = "SPEC")]
    families: Vec<String>,
    /// Seeded random graph `n,p,seed`; repeatable.
    #[arg(long = "gnp", value_name = "N,P,SEED")]
    gnp: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Wire,
    #[arg(long, value_enum)]
    to: Wire,
    /// Input file; stdin when omitted.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Wire {
    Graph6,
    Edges,
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Invariant(e) => CliError::Usage(e.to_string()),
            other => CliError::Budget(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `verify ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Family { spec } => cmd_family(&spec),
        Command::Convert(args) => cmd_convert(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn budget_from(flag: Option<u64>) -> SolverBudget {
    let env = std::env::var("CHROMADISC_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok());
    match flag.or(env) {
        Some(max) => SolverBudget::with_max_partitions(max),
        None => SolverBudget::default(),
    }
}

fn load_graph(src: &GraphSource) -> Result<Graph, CliError> {
    let picked = [
        src.graph6.is_some(),
        src.edges.is_some(),
        src.family.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if picked != 1 {
        return Err(CliError::Usage(
            "provide exactly one of --graph6, --edges, --family".into(),
        ));
    }
    if let Some(g6) = &src.graph6 {
        return Graph::from_graph6(g6).map_err(|e| CliError::Usage(e.to_string()));
    }
    if let Some(path) = &src.edges {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        return Graph::from_edge_list_text(&text).map_err(|e| CliError::Usage(e.to_string()));
    }
    families::from_spec(src.family.as_ref().unwrap()).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.source)?;
    let budget = budget_from(args.budget);
    let bundle = compute_report(&g, &budget, args.skip_discrepancy)?;
    if args.witness {
        println!("{}", serde_json::to_string(&bundle).expect("serializable"));
    } else {
        println!(
            "{}",
            serde_json::to_string(&bundle.report).expect("serializable")
        );
    }
    if bundle.budget_exceeded {
        eprintln!("warning: discrepancy solvers exceeded the budget; phi and phi_hat omitted");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn corpus(args: &VerifyArgs) -> Result<Vec<(String, Graph)>, CliError> {
    let mut out = Vec::new();
    if let Some(n) = args.all_graphs_up_to {
        if n > 6 {
            return Err(CliError::Usage(format!(
                "--all-graphs-up-to caps at 6 ({n} requested): the sweep is exhaustive over labeled graphs"
            )));
        }
        for k in 1..=n {
            let pairs = bit_pairs(k);
            for mask in 0u64..(1u64 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edge_list(k, &edges).expect("in range");
                out.push((g.to_graph6(), g));
            }
        }
    }
    for spec in &args.families {
        let g = families::from_spec(spec).map_err(|e| CliError::Usage(e.to_string()))?;
        out.push((spec.clone(), g));
    }
    for spec in &args.gnp {
        let g = families::from_spec(&format!("gnp:{spec}"))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        out.push((format!("gnp:{spec}"), g));
    }
    if out.is_empty() {
        return Err(CliError::Usage(
            "empty corpus: give --all-graphs-up-to, --family or --gnp".into(),
        ));
    }
    Ok(out)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let budget = budget_from(args.budget);
    let members = corpus(&args)?;
    let mut all_hold = true;
    let mut budget_hit = false;
    let mut json_rows: Vec<serde_json::Value> = Vec::new();
    if matches!(args.format, Format::Csv) {
        println!("{CSV_HEADER}");
    }
    for (id, g) in &members {
        match verify_all(g, &budget) {
            Ok(report) => {
                report_violations(id, &report);
                all_hold &= report.all_hold;
                match args.format {
                    Format::Csv => {
                        for row in csv_rows(id, &report) {
                            println!("{row}");
                        }
                    }
                    Format::Json => {
                        json_rows.push(serde_json::json!({ "graph": id, "result": report }));
                    }
                }
            }
            Err(SolverError::Invariant(e)) => return Err(CliError::Usage(e.to_string())),
            Err(e) => {
                budget_hit = true;
                eprintln!("{id}: {e}");
                if matches!(args.format, Format::Json) {
                    json_rows.push(serde_json::json!({ "graph": id, "error": e.to_string() }));
                }
            }
        }
    }
    if matches!(args.format, Format::Json) {
        println!(
            "{}",
            serde_json::to_string(&json_rows).expect("serializable")
        );
    }
    Ok(if budget_hit {
        ExitCode::from(3)
    } else if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn report_violations(id: &str, report: &BoundReport) {
    for e in report.violations() {
        eprintln!(
            "VIOLATION {id} {}: bound {:?}, exact {:?}",
            e.name, e.bound_value, e.exact_value
        );
        eprintln!(
            "  report: {}",
            serde_json::to_string(&report.report).expect("serializable")
        );
    }
}

fn cmd_family(spec: &str) -> Result<ExitCode, CliError> {
    let g = families::from_spec(spec).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("{}", g.to_graph6());
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(args: ConvertArgs) -> Result<ExitCode, CliError> {
    let text = match &args.input {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?
        }
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            buf
        }
    };
    let g = match args.from {
        Wire::Graph6 => Graph::from_graph6(&text),
        Wire::Edges => Graph::from_edge_list_text(&text),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    match args.to {
        Wire::Graph6 => println!("{}", g.to_graph6()),
        Wire::Edges => println!("{}", g.to_edge_list_text()),
    }
    Ok(ExitCode::SUCCESS)
}

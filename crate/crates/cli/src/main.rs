use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use meshstar::claims::{span_rows, verify, Verdict, VerifyConfig};
use meshstar::formulas::{bounds_table, combined_bound, format_rational, vertex_count_comparison};
use meshstar::graph::{build_path, build_star, cartesian_product, diameter};
use meshstar::io::{
    bounds_csv, counts_csv, read_graph, read_labeling, spans_csv, verdict_csv, write_file, write_graph, write_labeling,
    write_product_graph,
};
use meshstar::labeling::validate;
use meshstar::ordering::construct_with_system;
use meshstar::product::build_product_graph;
use meshstar::search::{exact_rn, exact_rn_with_starts, permutation_oracle};
use meshstar::{Budget, CellIndexing, Graph, ProductParams, RadioSystem};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "meshstar", version, about = "Radio labelings of P(m,m) x K1,n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file.
    Gen(GraphArgs),
    /// Print the diameter.
    Diam(GraphArgs),
    /// Exact radio number by branch and bound.
    RnExact(RnArgs),
    /// Evaluate the closed-form bounds.
    Bound(BoundArgs),
    /// Label the product graph with the pairing construction.
    Label(LabelArgs),
    /// Check a labeling file against a graph.
    Validate(ValidateArgs),
    /// Check every claim on a parameter grid and print the verdicts.
    Verify(VerifyArgs),
    /// Vertex counts against the star-path product, optionally with spans.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Product,
    Path,
    Star,
    Mesh,
}

fn parse_indexing(s: &str) -> Result<CellIndexing, String> {
    s.parse().map_err(|e: meshstar::Error| e.to_string())
}

#[derive(Args)]
struct Common {
    /// Mesh order (path order for --family path).
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Star leaves.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// row-major, col-major or serpentine.
    #[arg(long, default_value = "row-major", value_parser = parse_indexing)]
    indexing: CellIndexing,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Family::Product)]
    family: Family,
    /// Read the graph from a file instead of generating it.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct RnArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
    /// Stop after this many search nodes (reproducible, unlike the time limit).
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Enumerate every ordering instead (at most 9 vertices).
    #[arg(long)]
    oracle: bool,
    /// Also write the witness labeling here.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct LabelArgs {
    #[command(flatten)]
    common: Common,
    /// Emit the consecutive-gap labeling, which may be invalid.
    #[arg(long)]
    consecutive: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    labeling: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Single grid point; the default grid when omitted.
    #[arg(long, requires = "n")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    n: Option<usize>,
    /// Restrict copy-numbering claims to one scheme.
    #[arg(long, value_parser = parse_indexing)]
    indexing: Option<CellIndexing>,
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
    /// Largest whole graph given an exact radio number.
    #[arg(long, default_value_t = 18)]
    exact_max_vertices: usize,
    /// Search nodes spent tightening the upper bound of larger graphs.
    #[arg(long, default_value_t = 100_000)]
    probe_nodes: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, default_value_t = 2)]
    m_min: usize,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Add the bound against construction spans.
    #[arg(long)]
    spans: bool,
    #[arg(long, default_value = "row-major", value_parser = parse_indexing)]
    indexing: CellIndexing,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen(a) => gen(&a),
        Command::Diam(a) => diam(&a),
        Command::RnExact(a) => rn(&a),
        Command::Bound(a) => bound(&a),
        Command::Label(a) => label(&a),
        Command::Validate(a) => check(&a),
        Command::Verify(a) => run_verify(&a),
        Command::Compare(a) => compare(&a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn params(c: &Common) -> Result<ProductParams> {
    Ok(ProductParams::new(c.m, c.n)?)
}

fn load_graph(a: &GraphArgs) -> Result<Graph> {
    if let Some(path) = &a.graph {
        return Ok(read_graph(path)?.graph);
    }
    let c = &a.common;
    let g = match a.family {
        Family::Product => build_product_graph(params(c)?, c.indexing)?.graph,
        Family::Path => build_path(c.m)?,
        Family::Star => build_star(c.n)?,
        Family::Mesh => cartesian_product(&[build_path(c.m)?, build_path(c.m)?])?,
    };
    Ok(g)
}

fn gen(a: &GraphArgs) -> Result<ExitCode> {
    let c = &a.common;
    let text = match (&a.graph, a.family) {
        (None, Family::Product) => write_product_graph(&build_product_graph(params(c)?, c.indexing)?),
        _ => write_graph(&load_graph(a)?),
    };
    emit(c.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn diam(a: &GraphArgs) -> Result<ExitCode> {
    let g = load_graph(a)?;
    let d = diameter(&g)?;
    let text = match a.common.format {
        Format::Text => format!("diameter {d}\n"),
        Format::Csv => format!("vertices,diameter\n{},{d}\n", g.num_vertices()),
    };
    emit(a.common.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn rn(a: &RnArgs) -> Result<ExitCode> {
    let g = load_graph(&a.graph)?;
    let sys = RadioSystem::new(&g)?;
    let r = if a.oracle {
        permutation_oracle(&sys)?
    } else {
        let budget = Budget {
            time: Some(Duration::from_millis(a.budget_ms)),
            max_nodes: a.max_nodes,
        };
        match (&a.graph.graph, a.graph.family) {
            (None, Family::Product) => {
                let reps = params(&a.graph.common)?.symmetry_representatives();
                exact_rn_with_starts(&sys, budget, &reps)?
            }
            _ => exact_rn(&sys, budget)?,
        }
    };
    if let (Some(path), Some(w)) = (&a.witness, &r.witness) {
        write_file(path, &write_labeling(w)).with_context(|| "writing the witness")?;
    }
    let status = format!("{:?}", r.status);
    let text = match a.graph.common.format {
        Format::Text => format!("rn = {} ({status}, {} nodes)\n", r.value, r.nodes),
        Format::Csv => format!(
            "vertices,rn,status,nodes\n{},{},{status},{}\n",
            sys.len(),
            r.value,
            r.nodes
        ),
    };
    emit(a.graph.common.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn bound(a: &BoundArgs) -> Result<ExitCode> {
    let p = params(&a.common)?;
    let rows = bounds_table(p)?;
    let text = match a.common.format {
        Format::Csv => bounds_csv(&rows),
        Format::Text => {
            let mut out = format!("rn({p}) >= {}\n", format_rational(&combined_bound(p)?));
            for r in &rows {
                let flag = if r.integral() { "" } else { "  (not an integer)" };
                writeln!(out, "  {:<40} {}{flag}", r.label(), format_rational(&r.value))?;
            }
            out
        }
    };
    emit(a.common.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn label(a: &LabelArgs) -> Result<ExitCode> {
    let c = &a.common;
    let p = params(c)?;
    let pg = build_product_graph(p, c.indexing)?;
    let sys = RadioSystem::new(&pg.graph)?;
    let built = construct_with_system(&sys, p, c.indexing)?;
    let mut text = format!(
        "# {p} indexing={} bound={} greedy_span={} consecutive_span={} consecutive_valid={}\n",
        c.indexing,
        format_rational(&combined_bound(p)?),
        built.greedy.span(),
        built.consecutive.span(),
        built.consecutive_valid
    );
    let chosen = if a.consecutive {
        &built.consecutive
    } else {
        &built.greedy
    };
    text.push_str(&write_labeling(chosen));
    emit(c.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn check(a: &ValidateArgs) -> Result<ExitCode> {
    let g = load_graph(&a.graph)?;
    let sys = RadioSystem::new(&g)?;
    let l = read_labeling(&a.labeling)?;
    let report = validate(&sys, &l)?;
    let mut text = String::new();
    match a.graph.common.format {
        Format::Text => {
            if report.is_valid() {
                writeln!(text, "valid, span {}", l.span())?;
            } else {
                writeln!(text, "invalid: {} violating pairs", report.violations.len())?;
            }
            for v in &report.violations {
                writeln!(text, "  {} {} needs {} has {}", v.u, v.v, v.required, v.actual)?;
            }
        }
        Format::Csv => {
            text.push_str("u,v,required,actual\n");
            for v in &report.violations {
                writeln!(text, "{},{},{},{}", v.u, v.v, v.required, v.actual)?;
            }
        }
    }
    emit(a.graph.common.out.as_deref(), &text)?;
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVALID)
    })
}

fn run_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let mut cfg = VerifyConfig {
        budget: Budget::time(Duration::from_millis(a.budget_ms)),
        exact_max_vertices: a.exact_max_vertices,
        probe_nodes: a.probe_nodes,
        ..VerifyConfig::default()
    };
    if let (Some(m), Some(n)) = (a.m, a.n) {
        cfg.grid = vec![ProductParams::new(m, n)?];
    }
    if let Some(ix) = a.indexing {
        cfg.indexings = vec![ix];
    }
    let rows = verify(&cfg)?;
    let text = match a.format {
        Format::Csv => verdict_csv(&rows),
        Format::Text => {
            let count = |v| rows.iter().filter(|r| r.verdict == v).count();
            let mut out = format!(
                "{} claims: {} match, {} mismatch, {} unverifiable\n",
                rows.len(),
                count(Verdict::Match),
                count(Verdict::Mismatch),
                count(Verdict::Unverifiable)
            );
            for r in &rows {
                writeln!(
                    out,
                    "{:<38} m={} n={} {:<10} expected {:<8} observed {:<11} {}",
                    r.claim_id,
                    r.m,
                    r.n,
                    r.indexing_name(),
                    format_rational(&r.expected),
                    r.observed.to_string(),
                    r.verdict
                )?;
            }
            out
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn compare(a: &CompareArgs) -> Result<ExitCode> {
    anyhow::ensure!(a.m_min <= a.m_max, "--m-min {} exceeds --m-max {}", a.m_min, a.m_max);
    let mut text = counts_csv(&vertex_count_comparison(a.m_min..=a.m_max, a.n)?);
    if a.spans {
        text.push('\n');
        text.push_str(&spans_csv(&span_rows(a.m_min..=a.m_max, a.n, a.indexing)?));
    }
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

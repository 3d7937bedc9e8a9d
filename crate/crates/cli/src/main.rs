use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use eqgraph_core::enhanced::cayley_graph;
use eqgraph_core::graph::GraphMetadata;
use eqgraph_core::group::{named_subgroup, normal_subgroups, GroupSpec, DEFAULT_ENUMERATION_BOUND};
use eqgraph_core::verifier::{
    check_instance, default_catalog, parse_claim_selector, sweep, CatalogEntry, CheckOptions, GroupContext,
    MAX_CATALOG_ORDER,
};
use eqgraph_core::{enhanced_power_graph, enhanced_quotient_graph, Gates, LabeledGraph, Subgroup};

#[derive(Parser)]
#[command(name = "eqgraph", version, about = "Enhanced power and enhanced quotient graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print it
    Build(BuildArgs),
    /// Check one claim on a (group, subgroup) pair
    Check(CheckArgs),
    /// Check claims over the default catalog (or one group)
    Sweep(SweepArgs),
    /// List the default catalog
    Catalog {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
    /// List graph kinds and output formats
    ExportFormats,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    EnhancedPower,
    EnhancedQuotient,
    DeletedPower,
    DeletedQuotient,
    Cayley,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Summary,
}

#[derive(Args, Clone, Copy)]
struct GateArgs {
    #[arg(long, default_value_t = Gates::default().clique)]
    clique_gate: usize,
    #[arg(long, default_value_t = Gates::default().hamiltonian)]
    ham_gate: usize,
    #[arg(long, default_value_t = Gates::default().circumference)]
    circ_gate: usize,
    #[arg(long, default_value_t = Gates::default().planarity)]
    planar_gate: usize,
}

impl GateArgs {
    fn options(self) -> CheckOptions {
        CheckOptions {
            gates: Gates {
                clique: self.clique_gate,
                hamiltonian: self.ham_gate,
                circumference: self.circ_gate,
                planarity: self.planar_gate,
            },
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    /// Group spec, e.g. `cyclic:4`, `dihedral:3 x cyclic:2`, `table:path.json`
    #[arg(long)]
    group: String,
    /// Subgroup: index list `0,2`, or `trivial`, `center`, `alternating`
    #[arg(long)]
    subgroup: Option<String>,
    #[arg(long, value_enum)]
    graph: GraphKind,
    /// Connection set for Cayley graphs, as element indices
    #[arg(long, value_delimiter = ',')]
    connection: Vec<usize>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Claim id, e.g. `C08`
    #[arg(long)]
    claim: String,
    #[arg(long)]
    group: String,
    /// Subgroup selector, or `all-normal` for every proper normal subgroup
    #[arg(long)]
    subgroup: String,
    #[command(flatten)]
    gates: GateArgs,
    /// Include elapsed milliseconds in the record
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Claims: `all`, `must-pass`, `adjudicated`, or ids like `C01,C08`
    #[arg(long)]
    claims: String,
    #[arg(long, default_value_t = 24)]
    max_order: usize,
    /// Sweep a single group instead of the default catalog
    #[arg(long)]
    group: Option<String>,
    /// Subgroup selector used with `--group`
    #[arg(long, default_value = "all-normal")]
    subgroup: String,
    #[arg(long, default_value_t = 1)]
    parallelism: usize,
    /// Report path (line-delimited JSON); stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the summary table here; it always goes to stderr
    #[arg(long)]
    summary: Option<PathBuf>,
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    gates: GateArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Build(args) => build(args),
        Command::Check(args) => check(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Catalog { max_order } => catalog(max_order),
        Command::ExportFormats => {
            println!("graph kinds: enhanced-power enhanced-quotient deleted-power deleted-quotient cayley");
            println!("formats: dot json summary");
            println!("report: jsonl records {{claim, group, subgroup, verdict, witness, ms}}");
            Ok(0)
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Resolves the selector; `all-normal` yields every proper normal subgroup.
fn subgroups(ctx: &GroupContext, selector: &str) -> Result<Vec<Subgroup>> {
    let group = ctx.group();
    if selector.trim() == "all-normal" {
        let bound = DEFAULT_ENUMERATION_BOUND.max(group.order());
        return Ok(normal_subgroups(group, bound)?.into_iter().filter(|h| h.order() < group.order()).collect());
    }
    let spec = GroupSpec::parse(ctx.spec()).ok();
    Ok(vec![named_subgroup(group, spec.as_ref(), selector)?])
}

fn build(args: BuildArgs) -> Result<u8> {
    let ctx = GroupContext::from_spec(&args.group)?;
    let group = ctx.group();
    let needs_subgroup = matches!(args.graph, GraphKind::EnhancedQuotient | GraphKind::DeletedQuotient);
    let subgroup = match (&args.subgroup, needs_subgroup) {
        (Some(sel), true) => {
            let mut found = subgroups(&ctx, sel)?;
            if found.len() != 1 {
                bail!("--subgroup must name a single subgroup for a quotient graph");
            }
            Some(found.remove(0))
        }
        (None, true) => bail!("--subgroup is required for quotient graphs"),
        _ => None,
    };
    let (kind, graph) = match args.graph {
        GraphKind::EnhancedPower => ("enhanced-power", enhanced_power_graph(group)),
        GraphKind::DeletedPower => ("deleted-power", enhanced_power_graph(group).deleted()?),
        GraphKind::EnhancedQuotient => ("enhanced-quotient", enhanced_quotient_graph(group, subgroup.as_ref().unwrap())?),
        GraphKind::DeletedQuotient => {
            ("deleted-quotient", enhanced_quotient_graph(group, subgroup.as_ref().unwrap())?.deleted()?)
        }
        GraphKind::Cayley => ("cayley", cayley_graph(group, &args.connection)?),
    };
    let text = match args.format {
        Format::Dot => graph.to_dot(&format!("{kind} {}", ctx.spec())),
        Format::Json => {
            let meta = GraphMetadata {
                graph: kind.to_string(),
                group: ctx.spec().to_string(),
                subgroup: subgroup.map(|h| h.members().to_vec()),
                elements: graph.elements().to_vec(),
            };
            graph.to_json(Some(meta)) + "\n"
        }
        Format::Summary => summary(kind, ctx.spec(), &graph),
    };
    emit(args.out.as_ref(), &text)?;
    Ok(0)
}

fn summary(kind: &str, spec: &str, g: &LabeledGraph) -> String {
    let p = g.profile();
    let cones: Vec<&str> = g.cone_vertices().into_iter().map(|v| g.label(v)).collect();
    let mut out = String::new();
    out += &format!("graph: {kind} of {spec}\n");
    out += &format!("vertices: {}\nedges: {}\n", g.order(), g.edge_count());
    out += &format!("connected: {}\ncomplete: {}\nbipartite: {}\n", p.connected, p.complete, p.bipartite);
    out += &format!("tree: {}\nstar: {}\neulerian: {}\n", p.tree, p.star, p.eulerian);
    match p.regular_degree {
        Some(d) => out += &format!("regular: {d}\n"),
        None => out += "regular: no\n",
    }
    out += &format!("degrees: {:?}\n", p.degree_sequence);
    out += &format!("cone vertices: {}\n", cones.join(" "));
    out
}

fn check(args: CheckArgs) -> Result<u8> {
    let claims = parse_claim_selector(&args.claim).map_err(anyhow::Error::msg)?;
    if claims.len() != 1 {
        bail!("--claim takes a single claim id");
    }
    let ctx = GroupContext::from_spec(&args.group)?;
    let mut failed = false;
    for h in subgroups(&ctx, &args.subgroup)? {
        for v in check_instance(&ctx, &h, &claims, args.gates.options()) {
            println!("{}", v.to_json_line(args.timings));
            failed |= v.is_must_pass_failure();
        }
    }
    Ok(u8::from(failed))
}

fn run_sweep(args: SweepArgs) -> Result<u8> {
    let claims = parse_claim_selector(&args.claims).map_err(anyhow::Error::msg)?;
    let catalog = match &args.group {
        Some(spec) => {
            let ctx = GroupContext::from_spec(spec)?;
            let subgroups = subgroups(&ctx, &args.subgroup)?;
            vec![CatalogEntry { spec: ctx.spec().to_string(), group: ctx.group().clone(), subgroups }]
        }
        None => {
            if args.max_order > MAX_CATALOG_ORDER {
                bail!("--max-order must be at most {MAX_CATALOG_ORDER}");
            }
            default_catalog(args.max_order)?
        }
    };
    let report = sweep(&catalog, &claims, args.parallelism, args.gates.options());
    emit(args.out.as_ref(), &report.to_jsonl(args.timings))?;
    let table = report.summary_table();
    eprint!("{table}");
    if let Some(path) = &args.summary {
        fs::write(path, &table).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.exit_code() as u8)
}

fn catalog(max_order: usize) -> Result<u8> {
    if max_order > MAX_CATALOG_ORDER {
        bail!("--max-order must be at most {MAX_CATALOG_ORDER}");
    }
    let mut out = String::new();
    for entry in default_catalog(max_order)? {
        let subs: Vec<String> = entry.subgroups.iter().map(|h| format!("{:?}", h.members())).collect();
        out += &format!("{}\t{}\t{}\n", entry.spec, entry.group.order(), subs.join(" "));
    }
    emit(None, &out)?;
    Ok(0)
}

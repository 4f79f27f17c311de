mod args;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use netdiag::engine::{VerdictTable, VerifyOptions};
use netdiag::graph::{CommonNeighborStats, StructuralProfile};
use netdiag::syndrome::{consistent_fault_sets, generate_syndrome, AdversaryPolicy, FaultInjection, Syndrome};
use netdiag::{
    edge_tolerable_diagnosability, verify_paper_results, DiagModel, DiagnosabilityReport, Graph, Strategy,
    TopologyKind, VertexSet,
};
use serde::Serialize;
use thiserror::Error;

use args::{Cli, Command, GraphSource, PolicyArg, RunArgs, StrategyArg, TopologyArg};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] netdiag::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Serialize)]
struct PropsReport {
    topology: String,
    vertex_count: usize,
    edge_count: usize,
    profile: StructuralProfile,
    vertex_connectivity: usize,
    common_neighbors: Option<CommonNeighborStats>,
}

#[derive(Serialize)]
struct SimulationReport {
    faults: VertexSet,
    syndrome: Syndrome,
    consistent: Vec<VertexSet>,
}

enum Status {
    Ok,
    VerifyFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerifyFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Status, CliError> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    match cli.command {
        Command::Gen { source, out } => {
            let (graph, _) = load(&source)?;
            emit_text(out.as_deref(), &graph.to_json())?;
        }
        Command::Props { source, out } => {
            let (graph, name) = load(&source)?;
            let stats = if graph.vertex_count() >= 2 { Some(graph.common_neighbor_stats()?) } else { None };
            let report = PropsReport {
                topology: name,
                vertex_count: graph.vertex_count(),
                edge_count: graph.edge_count(),
                profile: graph.structural_profile(),
                vertex_connectivity: graph.vertex_connectivity(),
                common_neighbors: stats,
            };
            emit(out.as_deref(), &report)?;
        }
        Command::Diag { source, run, h } => {
            let reports = diagnose(&source, &run, h..=h)?;
            match reports.as_slice() {
                [single] => emit(run.out.as_deref(), single)?,
                many => emit(run.out.as_deref(), &many)?,
            }
        }
        Command::Sweep { source, run, h } => {
            let reports = diagnose(&source, &run, h)?;
            emit(run.out.as_deref(), &reports)?;
        }
        Command::Verify { target: _, max_n, model, trials, seed, csv, out } => {
            if max_n == 0 || max_n > netdiag::topology::MAX_BH_DIMENSION {
                return Err(usage(format!(
                    "--max-n must be in 1..={}",
                    netdiag::topology::MAX_BH_DIMENSION
                )));
            }
            if trials == 0 {
                return Err(usage("--trials must be at least 1"));
            }
            let table = verify_paper_results(max_n, &model.models(), VerifyOptions { trials, seed })?;
            if let Some(path) = csv {
                write_file(&path, &table.to_csv())?;
            }
            emit(out.as_deref(), &table)?;
            summarize(&table);
            if !table.all_ok() {
                return Ok(Status::VerifyFailed);
            }
        }
        Command::Simulate { source, model, faults, policy, seed, t, out } => {
            let (graph, _) = load(&source)?;
            let model = DiagModel::from(model);
            let faults = graph.vertex_set(faults)?;
            let t = t.unwrap_or(faults.len());
            let policy = match policy {
                PolicyArg::Random => AdversaryPolicy::RandomSeeded(seed),
                PolicyArg::Zeros => AdversaryPolicy::AllZeros,
                PolicyArg::Ones => AdversaryPolicy::AllOnes,
            };
            let syndrome = generate_syndrome(&graph, &FaultInjection { faults: faults.clone(), policy }, model)?;
            let consistent: Vec<VertexSet> = consistent_fault_sets(&graph, &syndrome, t, model)?;
            emit(out.as_deref(), &SimulationReport { faults, syndrome, consistent })?;
        }
    }
    Ok(Status::Ok)
}

fn load(source: &GraphSource) -> Result<(Graph, String), CliError> {
    if let Some(path) = &source.graph {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io { path: path.clone(), source: e })?;
        return Ok((Graph::from_json(&text)?, path.display().to_string()));
    }
    let kind = topology_kind(source)?;
    Ok((kind.build()?, kind.to_string()))
}

fn topology_kind(source: &GraphSource) -> Result<TopologyKind, CliError> {
    let need = |value: Option<usize>, flag: &str, what: &str| {
        value.ok_or_else(|| usage(format!("--topology {what} needs --{flag}")))
    };
    let topology = source.topology.ok_or_else(|| usage("either --topology or --graph is required"))?;
    Ok(match topology {
        TopologyArg::Bh => TopologyKind::BalancedHypercube { n: need(source.n, "n", "bh")? },
        TopologyArg::G8 => TopologyKind::G8,
        TopologyArg::Crown => TopologyKind::Crown { k: need(source.k, "k", "crown")? },
        TopologyArg::Hypercube => TopologyKind::Hypercube { n: need(source.n, "n", "hypercube")? },
        TopologyArg::Cycle => TopologyKind::Cycle { m: need(source.m, "m", "cycle")? },
    })
}

fn strategy(run: &RunArgs) -> Result<Strategy, CliError> {
    Ok(match run.strategy {
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::Witness => Strategy::WitnessOnly,
        StrategyArg::Sampled => {
            let seed = run.seed.ok_or_else(|| usage("--strategy sampled needs --seed"))?;
            if run.trials == 0 {
                return Err(usage("--trials must be at least 1"));
            }
            Strategy::Sampled { trials: run.trials, seed }
        }
    })
}

fn diagnose(
    source: &GraphSource,
    run: &RunArgs,
    hs: std::ops::RangeInclusive<usize>,
) -> Result<Vec<DiagnosabilityReport>, CliError> {
    let (graph, _) = load(source)?;
    let strategy = strategy(run)?;
    if *hs.end() > graph.edge_count() {
        return Err(usage(format!(
            "h = {} exceeds the {} links of the graph",
            hs.end(),
            graph.edge_count()
        )));
    }
    if strategy == Strategy::Exhaustive && graph.vertex_count() > netdiag::engine::MAX_EXHAUSTIVE_VERTICES {
        return Err(usage(format!(
            "exhaustive computation on {} vertices refused (limit {}); use --strategy witness or sampled",
            graph.vertex_count(),
            netdiag::engine::MAX_EXHAUSTIVE_VERTICES
        )));
    }
    let kind = source.graph.is_none().then(|| topology_kind(source)).transpose()?;
    let mut reports = Vec::new();
    for model in run.model.models() {
        for h in hs.clone() {
            let report = edge_tolerable_diagnosability(&graph, h, model, strategy)?;
            reports.push(match kind {
                Some(kind) => report.with_topology(kind),
                None => report,
            });
        }
    }
    Ok(reports)
}

fn summarize(table: &VerdictTable) {
    for cell in &table.cells {
        eprintln!("BH_{} {:<3} h={} expected {} got {}", cell.n, cell.model.to_string(), cell.h, cell.expected, cell.short());
    }
    eprintln!(
        "{} PASS, {} CONSISTENT, {} FAIL",
        table.count(netdiag::engine::CellVerdict::Pass),
        table.count(netdiag::engine::CellVerdict::Consistent),
        table.count(netdiag::engine::CellVerdict::Fail)
    );
}

fn emit<T: Serialize + ?Sized>(out: Option<&Path>, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(netdiag::Error::from)?;
    emit_text(out, &text)
}

fn emit_text(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, &format!("{text}\n")),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(CliError::Io { path: PathBuf::from("<stdout>"), source: e })
            }
            _ => Ok(()),
        },
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}

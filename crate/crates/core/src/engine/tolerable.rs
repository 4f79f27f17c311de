//! h-edge tolerable diagnosability: the minimum of `t(G − Fe)` over every
//! link-fault set with `|Fe| <= h`.

use std::time::Instant;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::diagnosability::{descend, diagnosable_at, least_indistinguishable_pair};
use super::witness::degree_witness;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::models::{indistinguishable_unchecked, DiagModel, FaultPair};
use crate::subsets::{count_up_to, Combinations};
use crate::topology::TopologyKind;

/// Exhaustive runs are refused above this many vertices.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 20;
/// Exhaustive runs are refused when more link-fault sets than this would be
/// visited.
pub const MAX_EXHAUSTIVE_EDGE_SETS: u128 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    WitnessOnly,
    Sampled { trials: u64, seed: u64 },
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::WitnessOnly => "witness",
            Strategy::Sampled { .. } => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyDescriptor {
    pub name: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub kind: Option<TopologyKind>,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl TopologyDescriptor {
    pub fn of_graph(graph: &Graph) -> Self {
        TopologyDescriptor {
            name: "graph".into(),
            kind: None,
            vertex_count: graph.vertex_count(),
            edge_count: graph.edge_count(),
        }
    }

    pub fn of_kind(kind: TopologyKind, graph: &Graph) -> Self {
        TopologyDescriptor { name: kind.to_string(), kind: Some(kind), ..Self::of_graph(graph) }
    }
}

/// Link faults plus an indistinguishable pair in the damaged graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub fe: EdgeSet,
    pub f1: VertexSet,
    pub f2: VertexSet,
}

impl Certificate {
    pub fn new(fe: EdgeSet, pair: FaultPair) -> Self {
        Certificate { fe, f1: pair.f1, f2: pair.f2 }
    }

    pub fn max_size(&self) -> usize {
        self.f1.len().max(self.f2.len())
    }

    /// Re-checks the certificate from scratch: every link exists, the pair
    /// is distinct and indistinguishable in `G − Fe`.
    pub fn revalidate(&self, graph: &Graph, model: DiagModel) -> Result<bool> {
        let damaged = graph.delete_edges(&self.fe)?;
        let f1 = damaged.vertex_set(self.f1.iter())?;
        let f2 = damaged.vertex_set(self.f2.iter())?;
        Ok(crate::models::distinguishable(&damaged, model, &f1, &f2)?.is_none())
    }
}

/// Outcome of random lower-bound probing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeSummary {
    pub trials: u64,
    pub seed: u64,
    /// Fault-set size bound used for the sampled pairs.
    pub probed_t: usize,
    /// Trials that drew a usable pair (a bound of 0 admits none).
    pub pairs_checked: u64,
    pub refutations: u64,
    /// Index of the first refuting trial, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_refuting_trial: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosabilityReport {
    pub topology: TopologyDescriptor,
    pub model: DiagModel,
    pub h: usize,
    /// Exact value; present only for exhaustive runs.
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub strategy: &'static str,
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeSummary>,
    pub elapsed_ms: f64,
}

impl DiagnosabilityReport {
    pub fn with_topology(mut self, kind: TopologyKind) -> Self {
        self.topology.name = kind.to_string();
        self.topology.kind = Some(kind);
        self
    }

    /// JSON with the timing field zeroed, for reproducibility comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0.0;
        serde_json::to_string(&copy).expect("report serializes")
    }
}

/// `t_h^e(G)` under `model`.
///
/// * `Exhaustive` visits every `Fe` with `|Fe| <= h` (all cardinalities, no
///   monotonicity assumed) and reports the exact value with the first
///   minimizing `Fe` in (size, lexicographic) order and the least
///   indistinguishable pair of size `value + 1` in `G − Fe`.
/// * `WitnessOnly` reports `[0, bound]` from the degree witness.
/// * `Sampled` adds random probing of `(Fe, F1, F2)` triples at the witness
///   bound; a probe can only lower the upper bound, never raise the lower one.
pub fn edge_tolerable_diagnosability(
    graph: &Graph,
    h: usize,
    model: DiagModel,
    strategy: Strategy,
) -> Result<DiagnosabilityReport> {
    let start = Instant::now();
    let m = graph.edge_count();
    if h > m {
        return Err(Error::invalid(format!("h = {h} exceeds the edge count {m}")));
    }
    if graph.vertex_count() == 0 {
        return Err(Error::invalid("edge-tolerable diagnosability of the empty graph"));
    }
    let witness = degree_witness(graph, h, model)?;
    let (value, lower, upper, certificate, probe) = match strategy {
        Strategy::Exhaustive => {
            let (value, cert) = exhaustive(graph, h, model, witness.bound)?;
            (Some(value), value, value, Some(cert), None)
        }
        Strategy::WitnessOnly => {
            let cert = Certificate::new(witness.fe, witness.pair);
            (None, 0, witness.bound, Some(cert), None)
        }
        Strategy::Sampled { trials, seed } => {
            if trials == 0 {
                return Err(Error::invalid("sampled strategy needs at least one trial"));
            }
            let outcome = probe(graph, h, model, witness.bound, trials, seed);
            let (upper, cert) = match outcome.best {
                Some((_, cert)) if cert.max_size() - 1 < witness.bound => (cert.max_size() - 1, cert),
                _ => (witness.bound, Certificate::new(witness.fe, witness.pair)),
            };
            (None, 0, upper, Some(cert), Some(outcome.summary))
        }
    };
    Ok(DiagnosabilityReport {
        topology: TopologyDescriptor::of_graph(graph),
        model,
        h,
        value,
        lower,
        upper,
        strategy: strategy.name(),
        certificate,
        probe,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Every link-fault set of size at most `h`, by size then lexicographically.
fn edge_fault_sets(edges: &[Edge], h: usize) -> Vec<Vec<Edge>> {
    (0..=h)
        .flat_map(|size| Combinations::new(edges.len(), size))
        .map(|idx| idx.into_iter().map(|i| edges[i]).collect())
        .collect()
}

fn exhaustive(graph: &Graph, h: usize, model: DiagModel, upper: usize) -> Result<(usize, Certificate)> {
    let n = graph.vertex_count();
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::invalid(format!(
            "exhaustive computation on {n} vertices refused (limit {MAX_EXHAUSTIVE_VERTICES}); use the witness or sampled strategy"
        )));
    }
    let edges: Vec<Edge> = graph.edges().collect();
    let visits = count_up_to(edges.len(), h);
    if visits > MAX_EXHAUSTIVE_EDGE_SETS {
        return Err(Error::invalid(format!(
            "exhaustive computation would visit {visits} link-fault sets (limit {MAX_EXHAUSTIVE_EDGE_SETS})"
        )));
    }
    let fault_sets = edge_fault_sets(&edges, h);
    let refute = |t: usize| -> Option<Certificate> {
        let pos = fault_sets
            .par_iter()
            .position_first(|fe| !diagnosable_at(&graph.without_edges(fe.iter().copied()), t, model))?;
        let fe = &fault_sets[pos];
        let damaged = graph.without_edges(fe.iter().copied());
        let pair = least_indistinguishable_pair(&damaged, t, model)
            .expect("fast check and pair enumeration agree");
        Some(Certificate::new(fe.iter().copied().collect(), pair))
    };
    descend(upper, refute, Certificate::max_size)
}

struct ProbeOutcome {
    summary: ProbeSummary,
    best: Option<(u64, Certificate)>,
}

/// Draws `trials` triples `(Fe, F1, F2)` with `|Fe| = h` and `|F1|, |F2| <= t`.
/// Every trial owns an RNG stream derived from `(seed, trial)`, so results do
/// not depend on scheduling.
fn probe(graph: &Graph, h: usize, model: DiagModel, t: usize, trials: u64, seed: u64) -> ProbeOutcome {
    let edges: Vec<Edge> = graph.edges().collect();
    let results: Vec<(u64, bool, Option<Certificate>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let mut picked: Vec<usize> = index::sample(&mut rng, edges.len(), h).into_vec();
            picked.sort_unstable();
            let fe: Vec<Edge> = picked.into_iter().map(|i| edges[i]).collect();
            let Some((f1, f2)) = sample_pair(graph, t, &mut rng) else {
                return (trial, false, None);
            };
            let damaged = graph.without_edges(fe.iter().copied());
            let cert = indistinguishable_unchecked(&damaged, model, &f1, &f2)
                .then(|| Certificate { fe: fe.into_iter().collect(), f1, f2 });
            (trial, true, cert)
        })
        .collect();
    let pairs_checked = results.iter().filter(|r| r.1).count() as u64;
    let refutations = results.iter().filter(|r| r.2.is_some()).count() as u64;
    let first_refuting_trial = results.iter().find(|r| r.2.is_some()).map(|r| r.0);
    // tightest refutation, earliest trial on ties
    let best = results
        .into_iter()
        .filter_map(|(trial, _, cert)| cert.map(|c| (trial, c)))
        .min_by_key(|(trial, c)| (c.max_size(), *trial));
    ProbeOutcome {
        summary: ProbeSummary {
            trials,
            seed,
            probed_t: t,
            pairs_checked,
            refutations,
            first_refuting_trial,
        },
        best,
    }
}

/// Two distinct random sets of size at most `t`. Half the draws are local:
/// both sets come from the radius-2 ball around a random vertex, where
/// indistinguishable pairs concentrate. Overlap between the sets is drawn
/// explicitly so nested and intersecting pairs are well represented.
fn sample_pair(graph: &Graph, t: usize, rng: &mut ChaCha8Rng) -> Option<(VertexSet, VertexSet)> {
    let n = graph.vertex_count();
    if t == 0 || n == 0 {
        return None;
    }
    let pool: Vec<usize> = if rng.random_bool(0.5) {
        let center = rng.random_range(0..n);
        let mut ball = graph.neighbors(center).clone();
        ball.insert(center);
        let mut reach = ball.clone();
        for v in &ball {
            reach.union_with(graph.neighbors(v));
        }
        reach.to_vec()
    } else {
        (0..n).collect()
    };
    let cap = t.min(pool.len());
    let order: Vec<usize> = index::sample(rng, pool.len(), pool.len().min(2 * cap)).into_vec();
    let size1 = rng.random_range(0..=cap);
    let shared = rng.random_range(0..=size1);
    let size2 = rng.random_range(shared..=cap);
    let mut f1 = VertexSet::empty(n);
    let mut f2 = VertexSet::empty(n);
    for &i in &order[..size1] {
        f1.insert(pool[i]);
    }
    for &i in &order[..shared] {
        f2.insert(pool[i]);
    }
    for &i in order[size1..].iter().take(size2 - shared) {
        f2.insert(pool[i]);
    }
    if f1 == f2 {
        if size1 < cap {
            f2.insert(pool[order[size1]]);
        } else {
            f2.remove(pool[order[0]]);
        }
    }
    Some((f1, f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{balanced_hypercube, reference_topology};

    #[test]
    fn bh1_pmc_values() {
        let g = balanced_hypercube(1).unwrap();
        let values: Vec<usize> = (0..=2)
            .map(|h| {
                edge_tolerable_diagnosability(&g, h, DiagModel::Pmc, Strategy::Exhaustive)
                    .unwrap()
                    .value
                    .unwrap()
            })
            .collect();
        assert_eq!(values, vec![1, 1, 0]);
    }

    #[test]
    fn certificate_revalidates() {
        let g = reference_topology(TopologyKind::Cycle { m: 6 }).unwrap();
        for model in DiagModel::ALL {
            for h in 0..=2 {
                let r = edge_tolerable_diagnosability(&g, h, model, Strategy::Exhaustive).unwrap();
                let cert = r.certificate.unwrap();
                assert!(cert.fe.len() <= h);
                assert_eq!(cert.max_size(), r.value.unwrap() + 1);
                assert!(cert.revalidate(&g, model).unwrap());
            }
        }
    }

    #[test]
    fn argument_errors() {
        let g = balanced_hypercube(1).unwrap();
        assert!(edge_tolerable_diagnosability(&g, 5, DiagModel::Pmc, Strategy::Exhaustive).is_err());
        assert!(edge_tolerable_diagnosability(
            &g,
            1,
            DiagModel::Pmc,
            Strategy::Sampled { trials: 0, seed: 1 }
        )
        .is_err());
        let big = balanced_hypercube(3).unwrap();
        assert!(edge_tolerable_diagnosability(&big, 0, DiagModel::MmStar, Strategy::Exhaustive).is_err());
    }

    #[test]
    fn witness_strategy_reports_bounds() {
        let g = balanced_hypercube(2).unwrap();
        let r = edge_tolerable_diagnosability(&g, 1, DiagModel::MmStar, Strategy::WitnessOnly).unwrap();
        assert_eq!((r.value, r.lower, r.upper), (None, 0, 3));
    }

    #[test]
    fn sampling_tightens_a_loose_witness() {
        // K_4: the degree witness says 3, the true PMC value is 1
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = edge_tolerable_diagnosability(
            &g,
            0,
            DiagModel::Pmc,
            Strategy::Sampled { trials: 500, seed: 3 },
        )
        .unwrap();
        let probe = r.probe.clone().unwrap();
        assert_eq!(probe.probed_t, 3);
        assert!(probe.refutations > 0);
        assert!((1..3).contains(&r.upper), "{r:?}");
        assert!(r.certificate.unwrap().revalidate(&g, DiagModel::Pmc).unwrap());
    }
}

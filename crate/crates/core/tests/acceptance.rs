//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use netdiag::engine::{Certificate, DiagnosabilityReport};
use netdiag::engine::expected_bh_value;
use netdiag::models::distinguishable;
use netdiag::syndrome::{adversarial_syndromes, consistent_fault_sets, generate_syndrome, AdversaryPolicy, FaultInjection};
use netdiag::{
    balanced_hypercube, diagnosability, edge_tolerable_diagnosability, lemma_ll1_witness, pmc_diagnosability_by_core,
    DiagModel, Graph, Strategy, TopologyKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLE_TRIALS: u64 = 100_000;
const SAMPLE_SEED: u64 = 0x5eed;

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn exhaustive(g: &Graph, h: usize, model: DiagModel) -> DiagnosabilityReport {
    edge_tolerable_diagnosability(g, h, model, Strategy::Exhaustive).expect("exhaustive run")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = balanced_hypercube(1).unwrap();
    let pmc: Vec<_> = (0..=2).map(|h| exhaustive(&g, h, DiagModel::Pmc).value.unwrap()).collect();
    let mm: Vec<_> = (0..=2).map(|h| exhaustive(&g, h, DiagModel::MmStar).value.unwrap()).collect();
    let elapsed = start.elapsed();
    check(
        pmc == [1, 1, 0] && mm == [0, 0, 0] && within(elapsed, Duration::from_secs(1)),
        format!("BH_1 PMC {pmc:?}, MM* {mm:?} in {elapsed:.2?} (limit 1s)"),
    )
}

type Bh2Run = Vec<(DiagModel, usize, Option<usize>, Option<Certificate>)>;

fn bh2_run() -> Bh2Run {
    let g = balanced_hypercube(2).unwrap();
    let mut out = Vec::new();
    for model in DiagModel::ALL {
        for h in 0..=4 {
            let r = exhaustive(&g, h, model);
            out.push((model, h, r.value, r.certificate));
        }
    }
    out
}

fn criterion_2(run: &Bh2Run, elapsed: Duration) -> Outcome {
    let g = balanced_hypercube(2).unwrap();
    let values_ok = run.iter().all(|(_, h, v, _)| *v == Some(4 - h));
    let certs_ok = run
        .iter()
        .all(|(model, _, _, c)| c.as_ref().is_some_and(|c| c.revalidate(&g, *model).unwrap()));
    let shown: Vec<String> = run.iter().map(|(m, h, v, _)| format!("{m}/h{h}={}", v.unwrap_or(usize::MAX))).collect();
    check(
        values_ok && certs_ok && within(elapsed, Duration::from_secs(120)),
        format!("BH_2 {} in {elapsed:.2?} (limit 120s parallel)", shown.join(" ")),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        let g = balanced_hypercube(n).unwrap();
        for h in 0..=2 * n {
            for model in DiagModel::ALL {
                let w = lemma_ll1_witness(&g, h, model).unwrap();
                let damaged = g.delete_edges(&w.fe).unwrap();
                let holds = w.fe.len() == h
                    && w.bound == 2 * n - h
                    && distinguishable(&damaged, model, &w.pair.f1, &w.pair.f2).unwrap().is_none();
                checked += 1;
                if !holds {
                    bad.push(format!("n={n} h={h} {model}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        bad.is_empty() && within(elapsed, Duration::from_secs(5)),
        format!("{checked} witnesses re-validated, failures {bad:?}, in {elapsed:.2?} (limit 5s)"),
    )
}

fn criterion_4a() -> Outcome {
    let start = Instant::now();
    let g = balanced_hypercube(3).unwrap();
    let regular = g.regular_degree() == Some(6);
    let bipartite = g.two_coloring().is_some();
    let kappa = g.vertex_connectivity();
    let stats = g.common_neighbor_stats().unwrap();
    let support_ok = stats.histogram.keys().all(|c| [0, 2, 6].contains(c));
    let twins_ok = g.vertices().all(|u| {
        let twins: Vec<usize> = g.vertices().filter(|&w| w != u && g.common_neighbor_count(u, w) == 6).collect();
        twins.len() == 1 && g.neighbors(twins[0]) == g.neighbors(u)
    });
    let pairs: usize = stats.histogram.values().sum();
    let elapsed = start.elapsed();
    check(
        regular && bipartite && kappa == 6 && support_ok && twins_ok && pairs == 64 * 63 / 2
            && within(elapsed, Duration::from_secs(10)),
        format!(
            "BH_3 6-regular={regular} bipartite={bipartite} kappa={kappa} histogram={:?} unique twins={twins_ok} in {elapsed:.2?} (limit 10s)",
            stats.histogram
        ),
    )
}

fn bh3_sampled() -> Vec<DiagnosabilityReport> {
    let g = balanced_hypercube(3).unwrap();
    let mut out = Vec::new();
    for model in DiagModel::ALL {
        for h in 0..=6 {
            let strategy = Strategy::Sampled { trials: SAMPLE_TRIALS, seed: SAMPLE_SEED };
            out.push(edge_tolerable_diagnosability(&g, h, model, strategy).unwrap());
        }
    }
    out
}

fn criterion_4b(reports: &[DiagnosabilityReport]) -> Outcome {
    let mut cells = Vec::new();
    let mut ok = true;
    for r in reports {
        let probe = r.probe.as_ref().expect("sampled runs carry a probe summary");
        let expected = expected_bh_value(3, r.h, r.model).unwrap();
        let consistent = probe.trials >= SAMPLE_TRIALS
            && probe.probed_t == 6 - r.h
            && probe.refutations == 0
            && r.lower <= expected
            && expected <= r.upper;
        ok &= consistent;
        cells.push(format!(
            "{}/h{}=[{},{}]{}",
            r.model,
            r.h,
            r.lower,
            r.upper,
            if consistent { "" } else { "!" }
        ));
    }
    let pairs: u64 = reports.iter().map(|r| r.probe.as_ref().unwrap().pairs_checked).sum();
    check(
        ok,
        format!("{SAMPLE_TRIALS} trials per cell, {pairs} pairs probed, 0 refutations required: {}", cells.join(" ")),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let corpus = common::corpus(40);
    let mismatches: Vec<&str> = corpus
        .iter()
        .filter(|(_, g)| pmc_diagnosability_by_core(g).unwrap() != diagnosability(g, DiagModel::Pmc).unwrap())
        .map(|(name, _)| name.as_str())
        .collect();
    check(
        corpus.len() >= 50 && mismatches.is_empty(),
        format!("{} graphs, mismatches {mismatches:?}, in {:.2?}", corpus.len(), start.elapsed()),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let cases = [
        (TopologyKind::Hypercube { n: 3 }, DiagModel::Pmc, [3, 2, 1, 0]),
        (TopologyKind::G8, DiagModel::MmStar, [2, 2, 1, 0]),
        (TopologyKind::Crown { k: 3 }, DiagModel::MmStar, [2, 2, 1, 0]),
    ];
    let mut ok = true;
    let mut shown = Vec::new();
    for (kind, model, expected) in cases {
        let g = kind.build().unwrap();
        let values: Vec<usize> = (0..=3).map(|h| exhaustive(&g, h, model).value.unwrap()).collect();
        ok &= values == expected;
        shown.push(format!("{kind} {model} {values:?}"));
    }
    let elapsed = start.elapsed();
    check(
        ok && within(elapsed, Duration::from_secs(120)),
        format!("{} in {elapsed:.2?} (limit 120s)", shown.join("; ")),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let g = balanced_hypercube(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut runs = 0;
    let mut wrong = 0;
    for trial in 0..100u64 {
        let size = rng.random_range(0..=4);
        let faults = g.vertex_set(rand::seq::index::sample(&mut rng, 16, size).into_vec()).unwrap();
        for model in DiagModel::ALL {
            for policy in [AdversaryPolicy::AllZeros, AdversaryPolicy::AllOnes, AdversaryPolicy::RandomSeeded(trial)] {
                let inj = FaultInjection { faults: faults.clone(), policy };
                let s = generate_syndrome(&g, &inj, model).unwrap();
                runs += 1;
                if consistent_fault_sets(&g, &s, 4, model).unwrap() != vec![faults.clone()] {
                    wrong += 1;
                }
            }
        }
    }
    let bh1 = balanced_hypercube(1).unwrap();
    let zero = bh1.vertex_set([0]).unwrap();
    let two = bh1.vertex_set([2]).unwrap();
    let ambiguous = adversarial_syndromes(&bh1, &zero, DiagModel::MmStar)
        .unwrap()
        .iter()
        .filter(|s| {
            let found = consistent_fault_sets(&bh1, s, 1, DiagModel::MmStar).unwrap();
            found.contains(&zero) && found.contains(&two)
        })
        .count();
    let elapsed = start.elapsed();
    check(
        wrong == 0 && ambiguous > 0 && within(elapsed, Duration::from_secs(30)),
        format!(
            "BH_2 {runs} decodings, {wrong} not unique; BH_1 MM* {{0}}/{{2}} ambiguous under {ambiguous} adversary outcomes; in {elapsed:.2?} (limit 30s)"
        ),
    )
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(workers).build().unwrap().install(f)
}

fn criterion_8(bh2: &Bh2Run, sampled: &[DiagnosabilityReport]) -> Outcome {
    let strip = |rs: &[DiagnosabilityReport]| rs.iter().map(|r| r.to_json_without_timing()).collect::<Vec<_>>();
    let reference = strip(sampled);
    let mut ok = true;
    let mut notes = Vec::new();
    for workers in [1, 4] {
        let start = Instant::now();
        let again = in_pool(workers, bh2_run);
        let bh2_time = start.elapsed();
        let resampled = in_pool(workers, bh3_sampled);
        let same = &again == bh2 && strip(&resampled) == reference;
        ok &= same;
        if workers == 1 {
            ok &= within(bh2_time, Duration::from_secs(600));
        }
        notes.push(format!("{workers} worker(s): identical={same}, BH_2 in {bh2_time:.2?}"));
    }
    check(ok, format!("{} (single-worker BH_2 limit 600s)", notes.join("; ")))
}

fn main() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("1", criterion_1()));
    let start = Instant::now();
    let bh2 = bh2_run();
    results.push(("2", criterion_2(&bh2, start.elapsed())));
    results.push(("3", criterion_3()));
    results.push(("4a", criterion_4a()));
    let sampled = bh3_sampled();
    results.push(("4b", criterion_4b(&sampled)));
    results.push(("5", criterion_5()));
    results.push(("6", criterion_6()));
    results.push(("7", criterion_7()));
    results.push(("8", criterion_8(&bh2, &sampled)));

    for (id, outcome) in &results {
        println!("criterion {id:<2} {} {}", if outcome.ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    let failed = results.iter().filter(|(_, o)| !o.ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Test outcomes for an injected fault set, and decoding them back into the
//! fault sets they are consistent with.
//!
//! Outcome rules: under PMC a fault-free tester reports whether its testee is
//! faulty; under MM* a fault-free comparator reports 1 iff at least one of the
//! two compared neighbors is faulty. Units run by a faulty processor are
//! unreliable and take whatever the adversary policy dictates. Faulty links
//! are modelled by deleting them from the graph beforehand, never as lying
//! channels.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::models::DiagModel;
use crate::subsets::subsets_up_to;

/// Largest number of unreliable units for which every adversary outcome is
/// enumerated.
pub const MAX_ADVERSARY_UNITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TestUnit {
    /// `tester` tests its neighbor `testee`.
    Pmc { tester: usize, testee: usize },
    /// `comparator` compares its neighbors `u < v`.
    MmStar { comparator: usize, u: usize, v: usize },
}

impl TestUnit {
    /// The processor whose health decides whether the outcome is reliable.
    pub fn runner(self) -> usize {
        match self {
            TestUnit::Pmc { tester, .. } => tester,
            TestUnit::MmStar { comparator, .. } => comparator,
        }
    }

    /// Outcome of a reliable unit under fault set `faults`.
    #[inline]
    pub fn reliable_outcome(self, faults: &VertexSet) -> bool {
        match self {
            TestUnit::Pmc { testee, .. } => faults.contains(testee),
            TestUnit::MmStar { u, v, .. } => faults.contains(u) || faults.contains(v),
        }
    }
}

/// `[tester, testee]` or `[comparator, u, v]`.
impl Serialize for TestUnit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            TestUnit::Pmc { tester, testee } => [tester, testee].serialize(serializer),
            TestUnit::MmStar { comparator, u, v } => [comparator, u, v].serialize(serializer),
        }
    }
}

/// Every test unit of `graph` under `model`, in lexicographic order.
pub fn enumerate_tests(graph: &Graph, model: DiagModel) -> Vec<TestUnit> {
    let mut units = Vec::new();
    for w in graph.vertices() {
        let adj = graph.neighbors(w);
        match model {
            DiagModel::Pmc => units.extend(adj.iter().map(|testee| TestUnit::Pmc { tester: w, testee })),
            DiagModel::MmStar => {
                for u in adj {
                    for v in adj.iter().filter(|&v| v > u) {
                        units.push(TestUnit::MmStar { comparator: w, u, v });
                    }
                }
            }
        }
    }
    units
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdversaryPolicy {
    /// Independent fair coin per unreliable unit, from a seeded generator.
    RandomSeeded(u64),
    AllZeros,
    AllOnes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultInjection {
    pub faults: VertexSet,
    pub policy: AdversaryPolicy,
}

/// One outcome bit per test unit of the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    model: DiagModel,
    units: Vec<TestUnit>,
    outcomes: Vec<bool>,
}

impl Syndrome {
    /// Pairs `units` with `outcomes`; the two must have equal length.
    pub fn new(model: DiagModel, units: Vec<TestUnit>, outcomes: Vec<bool>) -> Result<Self> {
        if units.len() != outcomes.len() {
            return Err(Error::SyndromeMismatch { expected: units.len(), found: outcomes.len() });
        }
        Ok(Syndrome { model, units, outcomes })
    }

    pub fn model(&self) -> DiagModel {
        self.model
    }

    pub fn units(&self) -> &[TestUnit] {
        &self.units
    }

    pub fn outcomes(&self) -> &[bool] {
        &self.outcomes
    }

    pub fn outcome(&self, unit: TestUnit) -> Option<bool> {
        self.units.binary_search(&unit).ok().map(|i| self.outcomes[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (TestUnit, bool)> + '_ {
        self.units.iter().copied().zip(self.outcomes.iter().copied())
    }

    pub fn ones(&self) -> usize {
        self.outcomes.iter().filter(|&&b| b).count()
    }

    /// Whether fault set `faults` could have produced this syndrome.
    pub fn is_consistent_with(&self, faults: &VertexSet) -> bool {
        self.iter()
            .all(|(unit, bit)| faults.contains(unit.runner()) || unit.reliable_outcome(faults) == bit)
    }
}

/// `[[unit, bit], ...]`.
impl Serialize for Syndrome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(unit, bit)| (unit, u8::from(bit))))
    }
}

pub fn generate_syndrome(graph: &Graph, injection: &FaultInjection, model: DiagModel) -> Result<Syndrome> {
    graph.check_set(&injection.faults)?;
    let units = enumerate_tests(graph, model);
    let faults = &injection.faults;
    let mut rng = match injection.policy {
        AdversaryPolicy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let outcomes = units
        .iter()
        .map(|unit| {
            if !faults.contains(unit.runner()) {
                return unit.reliable_outcome(faults);
            }
            match injection.policy {
                AdversaryPolicy::AllZeros => false,
                AdversaryPolicy::AllOnes => true,
                AdversaryPolicy::RandomSeeded(_) => rng.as_mut().unwrap().random_bool(0.5),
            }
        })
        .collect();
    Syndrome::new(model, units, outcomes)
}

/// Every syndrome the fault set can produce, one per assignment of the
/// unreliable units. Refused when more than [`MAX_ADVERSARY_UNITS`] units are
/// unreliable.
pub fn adversarial_syndromes(graph: &Graph, faults: &VertexSet, model: DiagModel) -> Result<Vec<Syndrome>> {
    graph.check_set(faults)?;
    let units = enumerate_tests(graph, model);
    let free: Vec<usize> = (0..units.len()).filter(|&i| faults.contains(units[i].runner())).collect();
    if free.len() > MAX_ADVERSARY_UNITS {
        return Err(Error::invalid(format!(
            "{} unreliable units exceed the enumeration limit of {MAX_ADVERSARY_UNITS}",
            free.len()
        )));
    }
    let base: Vec<bool> = units.iter().map(|u| u.reliable_outcome(faults)).collect();
    (0u32..1 << free.len())
        .map(|assignment| {
            let mut outcomes = base.clone();
            for (bit, &i) in free.iter().enumerate() {
                outcomes[i] = assignment >> bit & 1 == 1;
            }
            Syndrome::new(model, units.clone(), outcomes)
        })
        .collect()
}

/// All fault sets of size at most `t` that could have produced `syndrome`,
/// in lexicographic order.
pub fn consistent_fault_sets(graph: &Graph, syndrome: &Syndrome, t: usize, model: DiagModel) -> Result<Vec<VertexSet>> {
    if syndrome.model != model {
        return Err(Error::invalid(format!(
            "syndrome was produced under {}, decoding requested under {model}",
            syndrome.model
        )));
    }
    let expected = enumerate_tests(graph, model);
    if expected != syndrome.units {
        return Err(Error::SyndromeMismatch { expected: expected.len(), found: syndrome.units.len() });
    }
    let candidates = subsets_up_to(graph.vertex_count(), t.min(graph.vertex_count()));
    Ok(candidates
        .into_par_iter()
        .filter(|f| syndrome.is_consistent_with(f))
        .collect())
}

//! Distinguishability of two candidate fault sets under the PMC and MM*
//! models.
//!
//! Both predicates take the graph with faulty links already removed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagModel {
    /// Adjacent processors test one another; a faulty tester is unreliable.
    Pmc,
    /// Every processor compares each pair of its neighbors; a faulty
    /// comparator is unreliable.
    MmStar,
}

impl DiagModel {
    pub const ALL: [DiagModel; 2] = [DiagModel::Pmc, DiagModel::MmStar];

    pub fn as_str(self) -> &'static str {
        match self {
            DiagModel::Pmc => "pmc",
            DiagModel::MmStar => "mm_star",
        }
    }
}

impl fmt::Display for DiagModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagModel::Pmc => "PMC",
            DiagModel::MmStar => "MM*",
        })
    }
}

impl FromStr for DiagModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pmc" => Ok(DiagModel::Pmc),
            "mm-star" | "mm_star" | "mm*" | "mmstar" => Ok(DiagModel::MmStar),
            other => Err(Error::invalid(format!("unknown diagnosis model `{other}`"))),
        }
    }
}

/// Two distinct candidate fault sets over the same host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaultPair {
    pub f1: VertexSet,
    pub f2: VertexSet,
}

impl FaultPair {
    pub fn new(f1: VertexSet, f2: VertexSet) -> Result<Self> {
        if f1.universe() != f2.universe() {
            return Err(Error::invalid("fault sets over different vertex ranges"));
        }
        if f1 == f2 {
            return Err(Error::EqualFaultSets);
        }
        Ok(FaultPair { f1, f2 })
    }

    pub fn from_vertices(
        graph: &Graph,
        f1: impl IntoIterator<Item = usize>,
        f2: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        FaultPair::new(graph.vertex_set(f1)?, graph.vertex_set(f2)?)
    }

    pub fn swapped(&self) -> FaultPair {
        FaultPair { f1: self.f2.clone(), f2: self.f1.clone() }
    }

    /// `max(|F1|, |F2|)`: the pair refutes t-diagnosability for every
    /// `t >= max_size()` when indistinguishable.
    pub fn max_size(&self) -> usize {
        self.f1.len().max(self.f2.len())
    }

    pub fn symmetric_difference(&self) -> VertexSet {
        self.f1.symmetric_difference(&self.f2)
    }

    pub fn union(&self) -> VertexSet {
        self.f1.union(&self.f2)
    }
}

/// Which MM* condition produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MmCondition {
    /// A fault-free comparator `u` compares `v ∈ F1△F2` with fault-free `w`.
    OutsideComparator,
    /// A fault-free comparator `w` compares two members `u, v` of `F1 − F2`.
    BothInFirstOnly,
    /// A fault-free comparator `w` compares two members `u, v` of `F2 − F1`.
    BothInSecondOnly,
}

impl MmCondition {
    /// The 1-based condition number used in the literature.
    pub fn number(self) -> u8 {
        match self {
            MmCondition::OutsideComparator => 1,
            MmCondition::BothInFirstOnly => 2,
            MmCondition::BothInSecondOnly => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum DistinguishabilityWitness {
    /// Test edge from fault-free `tester` to `testee ∈ F1△F2`.
    Pmc { tester: usize, testee: usize },
    /// Vertex triple named as in the condition it satisfies.
    MmStar { condition: MmCondition, u: usize, v: usize, w: usize },
}

/// Set algebra shared by both predicates.
struct PairSets {
    first_only: VertexSet,
    second_only: VertexSet,
    core: VertexSet,
    outside: VertexSet,
}

impl PairSets {
    #[inline]
    fn new(f1: &VertexSet, f2: &VertexSet) -> Self {
        let first_only = f1.difference(f2);
        let second_only = f2.difference(f1);
        let core = first_only.union(&second_only);
        let outside = f1.union(f2).complement();
        PairSets { first_only, second_only, core, outside }
    }
}

fn validate(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Result<()> {
    graph.check_set(f1)?;
    graph.check_set(f2)?;
    if f1 == f2 {
        return Err(Error::EqualFaultSets);
    }
    Ok(())
}

/// Returns the lowest-id test edge from `V − (F1 ∪ F2)` into `F1 △ F2`, or
/// `None` when the pair is indistinguishable.
pub fn pmc_distinguishable(
    graph: &Graph,
    f1: &VertexSet,
    f2: &VertexSet,
) -> Result<Option<DistinguishabilityWitness>> {
    validate(graph, f1, f2)?;
    Ok(pmc_witness(graph, f1, f2))
}

/// Checks all three MM* conditions, scanning fault-free comparators in
/// ascending order and conditions (1), (2), (3) at each.
pub fn mm_distinguishable(
    graph: &Graph,
    f1: &VertexSet,
    f2: &VertexSet,
) -> Result<Option<DistinguishabilityWitness>> {
    validate(graph, f1, f2)?;
    Ok(mm_witness(graph, f1, f2))
}

pub fn distinguishable(
    graph: &Graph,
    model: DiagModel,
    f1: &VertexSet,
    f2: &VertexSet,
) -> Result<Option<DistinguishabilityWitness>> {
    match model {
        DiagModel::Pmc => pmc_distinguishable(graph, f1, f2),
        DiagModel::MmStar => mm_distinguishable(graph, f1, f2),
    }
}

fn pmc_witness(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Option<DistinguishabilityWitness> {
    let sets = PairSets::new(f1, f2);
    sets.outside.iter().find_map(|tester| {
        graph
            .neighbors(tester)
            .first_common(&sets.core)
            .map(|testee| DistinguishabilityWitness::Pmc { tester, testee })
    })
}

fn mm_witness(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Option<DistinguishabilityWitness> {
    let sets = PairSets::new(f1, f2);
    for c in &sets.outside {
        let adj = graph.neighbors(c);
        if let (Some(v), Some(w)) = (adj.first_common(&sets.core), adj.first_common(&sets.outside)) {
            return Some(DistinguishabilityWitness::MmStar {
                condition: MmCondition::OutsideComparator,
                u: c,
                v,
                w,
            });
        }
        for (only, condition) in [
            (&sets.first_only, MmCondition::BothInFirstOnly),
            (&sets.second_only, MmCondition::BothInSecondOnly),
        ] {
            let common = adj.intersection(only);
            let mut hits = common.iter();
            if let (Some(u), Some(v)) = (hits.next(), hits.next()) {
                return Some(DistinguishabilityWitness::MmStar { condition, u, v, w: c });
            }
        }
    }
    None
}

/// Indistinguishability test for the enumeration loops: no witness
/// construction, no argument checks.
#[inline]
pub(crate) fn indistinguishable_unchecked(
    graph: &Graph,
    model: DiagModel,
    f1: &VertexSet,
    f2: &VertexSet,
) -> bool {
    let sets = PairSets::new(f1, f2);
    match model {
        DiagModel::Pmc => sets.outside.iter().all(|u| !graph.neighbors(u).intersects(&sets.core)),
        DiagModel::MmStar => sets.outside.iter().all(|c| {
            let adj = graph.neighbors(c);
            !(adj.intersects(&sets.core) && adj.intersects(&sets.outside))
                && adj.intersection_len(&sets.first_only) < 2
                && adj.intersection_len(&sets.second_only) < 2
        }),
    }
}

/// Re-checks a witness literally against the condition it names.
pub fn witness_holds(
    graph: &Graph,
    f1: &VertexSet,
    f2: &VertexSet,
    witness: &DistinguishabilityWitness,
) -> bool {
    let n = graph.vertex_count();
    let in_range = |x: usize| x < n;
    let outside = |x: usize| !f1.contains(x) && !f2.contains(x);
    let in_core = |x: usize| f1.contains(x) != f2.contains(x);
    match *witness {
        DistinguishabilityWitness::Pmc { tester, testee } => {
            in_range(tester)
                && in_range(testee)
                && outside(tester)
                && in_core(testee)
                && graph.has_edge(tester, testee)
        }
        DistinguishabilityWitness::MmStar { condition, u, v, w } => {
            if ![u, v, w].into_iter().all(in_range) {
                return false;
            }
            match condition {
                MmCondition::OutsideComparator => {
                    outside(u) && outside(w) && in_core(v) && graph.has_edge(u, v) && graph.has_edge(u, w)
                }
                MmCondition::BothInFirstOnly | MmCondition::BothInSecondOnly => {
                    let (a, b) = match condition {
                        MmCondition::BothInFirstOnly => (f1, f2),
                        _ => (f2, f1),
                    };
                    let only = |x: usize| a.contains(x) && !b.contains(x);
                    u != v && only(u) && only(v) && outside(w) && graph.has_edge(u, w) && graph.has_edge(v, w)
                }
            }
        }
    }
}

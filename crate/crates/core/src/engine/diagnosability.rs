//! Classical diagnosability `t(G)`.
//!
//! The pair-enumeration route decides t-diagnosability straight from the
//! pairwise distinguishability characterization. The PMC core route is an
//! independent characterization used as a fast path and as a cross-check.

use rayon::prelude::*;

use super::witness::degree_witness;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::models::{indistinguishable_unchecked, DiagModel, FaultPair};
use crate::subsets::subsets_up_to;

/// Largest vertex count accepted by [`pmc_diagnosability_by_core`], which
/// visits every nonempty vertex subset.
pub const MAX_CORE_VERTICES: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Diagnosable,
    /// The lexicographically least indistinguishable pair within the bound.
    Refuted(FaultPair),
}

impl Verdict {
    pub fn is_diagnosable(&self) -> bool {
        matches!(self, Verdict::Diagnosable)
    }

    pub fn counterexample(&self) -> Option<&FaultPair> {
        match self {
            Verdict::Diagnosable => None,
            Verdict::Refuted(pair) => Some(pair),
        }
    }
}

/// Decides whether every pair of distinct fault sets of size at most `t` is
/// distinguishable under `model`, by enumerating unordered pairs.
///
/// Pairs are visited as `(F1, F2)` with `F1 < F2` in lexicographic set order,
/// so a refutation is the least indistinguishable pair in that order. The
/// result does not depend on the worker count.
pub fn is_t_diagnosable(graph: &Graph, t: usize, model: DiagModel) -> Verdict {
    match least_indistinguishable_pair(graph, t, model) {
        Some(pair) => Verdict::Refuted(pair),
        None => Verdict::Diagnosable,
    }
}

pub(crate) fn least_indistinguishable_pair(graph: &Graph, t: usize, model: DiagModel) -> Option<FaultPair> {
    let sets = subsets_up_to(graph.vertex_count(), t.min(graph.vertex_count()));
    (0..sets.len()).into_par_iter().find_map_first(|i| {
        let f1 = &sets[i];
        sets[i + 1..]
            .iter()
            .find(|f2| indistinguishable_unchecked(graph, model, f1, f2))
            .map(|f2| FaultPair { f1: f1.clone(), f2: f2.clone() })
    })
}

fn has_indistinguishable_pair(graph: &Graph, t: usize, model: DiagModel) -> bool {
    let sets = subsets_up_to(graph.vertex_count(), t.min(graph.vertex_count()));
    (0..sets.len()).into_par_iter().any(|i| {
        let f1 = &sets[i];
        sets[i + 1..].iter().any(|f2| indistinguishable_unchecked(graph, model, f1, f2))
    })
}

/// Fast yes/no t-diagnosability: the core criterion for PMC, pair
/// enumeration for MM*.
pub(crate) fn diagnosable_at(graph: &Graph, t: usize, model: DiagModel) -> bool {
    match model {
        DiagModel::Pmc => !pmc_core_refutes(graph, t),
        DiagModel::MmStar => !has_indistinguishable_pair(graph, t, model),
    }
}

/// Walks down from a certified upper bound. `refute(c)` returns the least
/// indistinguishable pair with both sets of size at most `c`, if any.
///
/// Starting one above the bound guarantees a certificate: the loop ends at
/// the first level `c` with no refutation, holding the pair that refuted
/// `c + 1`, whose larger side then has exactly `c + 1` members.
pub(crate) fn descend<C>(
    upper: usize,
    mut refute: impl FnMut(usize) -> Option<C>,
    size: impl Fn(&C) -> usize,
) -> Result<(usize, C)> {
    let mut cert = refute(upper + 1).ok_or_else(|| {
        Error::Internal(format!("certified upper bound {upper} not refuted one level above"))
    })?;
    loop {
        let level = size(&cert) - 1;
        match refute(level) {
            None => return Ok((level, cert)),
            Some(next) => cert = next,
        }
    }
}

/// `t(G)` together with the least indistinguishable pair of size `t(G) + 1`.
/// Returns `None` for the empty graph, which has no fault sets to confuse.
pub fn diagnosability_with_certificate(graph: &Graph, model: DiagModel) -> Result<Option<(usize, FaultPair)>> {
    if graph.vertex_count() == 0 {
        return Ok(None);
    }
    let upper = degree_witness(graph, 0, model)?.bound;
    let (value, pair) = descend(
        upper,
        |t| least_indistinguishable_pair(graph, t, model),
        FaultPair::max_size,
    )?;
    Ok(Some((value, pair)))
}

/// The diagnosability `t(G)` by pair enumeration. A graph with an isolated
/// vertex gets 0.
pub fn diagnosability(graph: &Graph, model: DiagModel) -> Result<usize> {
    Ok(diagnosability_with_certificate(graph, model)?.map_or(0, |(t, _)| t))
}

/// PMC diagnosability from the core formula
/// `min over nonempty S of ⌈|S|/2⌉ + |N(S)| − 1`.
///
/// A pair is PMC-indistinguishable exactly when `N(F1 △ F2) ⊆ F1 ∩ F2`. For
/// a fixed core `S = F1 △ F2` the smallest achievable `max(|F1|, |F2|)` is
/// reached by taking `F1 ∩ F2 = N(S)` and splitting `S` evenly, which gives
/// `⌈|S|/2⌉ + |N(S)|`; `t(G)` is one less than the minimum of that over all
/// cores.
pub fn pmc_diagnosability_by_core(graph: &Graph) -> Result<usize> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::invalid("core formula needs at least one vertex"));
    }
    if n > MAX_CORE_VERTICES {
        return Err(Error::invalid(format!(
            "core enumeration visits 2^{n} subsets; limit is {MAX_CORE_VERTICES} vertices"
        )));
    }
    let min = (1u64..1 << n)
        .into_par_iter()
        .map(|mask| core_cost(graph, &VertexSet::from_mask(n, mask)))
        .min()
        .expect("at least one nonempty subset");
    Ok(min - 1)
}

#[inline]
fn core_cost(graph: &Graph, core: &VertexSet) -> usize {
    core.len().div_ceil(2) + graph.external_neighborhood_unchecked(core).len()
}

/// Whether some nonempty core `S` with `⌈|S|/2⌉ + |N(S)| <= t` exists, i.e.
/// whether the graph fails to be t-diagnosable under PMC. Only cores with
/// `|S| <= 2t` can qualify.
pub(crate) fn pmc_core_refutes(graph: &Graph, t: usize) -> bool {
    let n = graph.vertex_count();
    let max_core = (2 * t).min(n);
    if max_core == 0 {
        return false;
    }
    (0..n).into_par_iter().any(|first| {
        let mut core = graph.empty_set();
        core.insert(first);
        core_search(graph, t, max_core, first, &mut core)
    })
}

fn core_search(graph: &Graph, t: usize, max_core: usize, last: usize, core: &mut VertexSet) -> bool {
    if core_cost(graph, core) <= t {
        return true;
    }
    if core.len() == max_core {
        return false;
    }
    for v in last + 1..graph.vertex_count() {
        core.insert(v);
        let found = core_search(graph, t, max_core, v, core);
        core.remove(v);
        if found {
            return true;
        }
    }
    false
}

//! Upper-bound witnesses for edge-tolerable diagnosability.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::models::{distinguishable, DiagModel, FaultPair};

/// An edge-fault set and a pair that is indistinguishable once those links
/// are gone, certifying `t_h^e(G) <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBoundWitness {
    pub fe: EdgeSet,
    pub pair: FaultPair,
    pub bound: usize,
}

/// The regular-graph witness: at the lowest-id vertex `u` remove `h` of its
/// links (lowest first), then `F1 = N_{G−Fe}(u)` and `F2 = F1 ∪ {u}` cannot be
/// told apart, so `t_h^e(G) <= k − h`.
pub fn lemma_ll1_witness(graph: &Graph, h: usize, model: DiagModel) -> Result<UpperBoundWitness> {
    let k = graph.regular_degree().ok_or(Error::NotRegular {
        min: graph.min_degree(),
        max: graph.max_degree(),
    })?;
    if h > k {
        return Err(Error::invalid(format!("h = {h} exceeds the degree {k}")));
    }
    degree_witness(graph, h, model)
}

/// Same construction for any nonempty graph, centered on the lowest-id vertex
/// of minimum degree `δ`; removes `min(h, δ)` links and bounds the value by
/// `δ − min(h, δ)`. The pair is re-checked against the model before it is
/// returned.
pub fn degree_witness(graph: &Graph, h: usize, model: DiagModel) -> Result<UpperBoundWitness> {
    let delta = graph.min_degree();
    let u = graph
        .vertices()
        .find(|&v| graph.degree(v) == delta)
        .ok_or_else(|| Error::invalid("witness needs at least one vertex"))?;
    let fe: EdgeSet = graph
        .neighbors(u)
        .iter()
        .take(h)
        .map(|w| Edge::new(u, w).expect("simple graph"))
        .collect();
    let damaged = graph.delete_edges(&fe)?;
    let f1 = damaged.neighbors(u).clone();
    let mut f2 = f1.clone();
    f2.insert(u);
    let pair = FaultPair::new(f1, f2)?;
    if let Some(w) = distinguishable(&damaged, model, &pair.f1, &pair.f2)? {
        return Err(Error::Internal(format!("degree witness at vertex {u} distinguished by {w:?}")));
    }
    let bound = pair.max_size() - 1;
    Ok(UpperBoundWitness { fe, pair, bound })
}

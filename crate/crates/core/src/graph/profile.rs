use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub is_connected: bool,
    pub is_bipartite: bool,
    /// Side (0 or 1) of every vertex when the graph is bipartite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_coloring: Option<Vec<u8>>,
    pub is_triangle_free: bool,
    /// `Some(k)` for a k-regular graph.
    pub regular_degree: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

/// Pairwise common-neighbor counts `|N(u) ∩ N(v)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonNeighborStats {
    /// `C(G)`, the maximum over unordered pairs.
    pub max: usize,
    /// Count of unordered pairs per common-neighbor count.
    pub histogram: BTreeMap<usize, usize>,
}

impl Graph {
    pub fn structural_profile(&self) -> StructuralProfile {
        let two_coloring = self.two_coloring();
        StructuralProfile {
            is_connected: self.is_connected(),
            is_bipartite: two_coloring.is_some(),
            two_coloring,
            is_triangle_free: self.is_triangle_free(),
            regular_degree: self.regular_degree(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = self.empty_set();
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.len() == n
    }

    /// BFS 2-coloring, one component at a time.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|e| !self.neighbors(e.u()).intersects(self.neighbors(e.v())))
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.neighbors(u).intersection_len(self.neighbors(v))
    }

    pub fn common_neighbor_stats(&self) -> Result<CommonNeighborStats> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(Error::invalid(format!(
                "common-neighbor statistics need at least 2 vertices, graph has {n}"
            )));
        }
        let mut histogram = BTreeMap::new();
        for u in 0..n {
            for v in u + 1..n {
                *histogram.entry(self.common_neighbor_count(u, v)).or_insert(0) += 1;
            }
        }
        let max = *histogram.keys().next_back().unwrap();
        Ok(CommonNeighborStats { max, histogram })
    }
}

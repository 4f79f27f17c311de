//! Exact vertex connectivity through unit-capacity max flow on the split
//! graph (each vertex becomes an `in -> out` arc of capacity one).

use std::collections::VecDeque;

use super::Graph;

impl Graph {
    /// `κ(G)`, the minimum number of vertices whose removal disconnects the
    /// graph or leaves a single vertex. Complete graphs give `n - 1`.
    ///
    /// Only pairs `(v_i, v_j)` with `i <= κ` and `j > i` are examined: the
    /// lowest-indexed vertex outside a minimum separator has index at most
    /// `κ`, and every vertex in another component has a larger index.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.vertex_count();
        if self.is_complete() {
            return n.saturating_sub(1);
        }
        let mut best = self.min_degree();
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if best == 0 {
                    return 0;
                }
                if !self.has_edge(i, j) {
                    best = best.min(self.local_vertex_connectivity(i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    /// Number of internally vertex-disjoint `s`-`t` paths for nonadjacent
    /// `s != t`, capped at `limit`.
    pub fn local_vertex_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        debug_assert!(s != t && !self.has_edge(s, t));
        let mut flow = SplitFlow::new(self);
        let (source, sink) = (out_node(s), in_node(t));
        let mut value = 0;
        while value < limit && flow.augment(self, source, sink) {
            value += 1;
        }
        value
    }
}

#[inline]
fn in_node(v: usize) -> usize {
    2 * v
}

#[inline]
fn out_node(v: usize) -> usize {
    2 * v + 1
}

/// Residual state of the split network. Internal arcs `v_in -> v_out` and
/// link arcs `u_out -> v_in` all carry capacity one, so a flow is a set of
/// saturated arcs.
struct SplitFlow {
    n: usize,
    internal: Vec<bool>,
    // link[u * n + v]: unit sent along u_out -> v_in
    link: Vec<bool>,
}

impl SplitFlow {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        SplitFlow { n, internal: vec![false; n], link: vec![false; n * n] }
    }

    fn residual_neighbors(&self, g: &Graph, node: usize, out: &mut Vec<usize>) {
        out.clear();
        let v = node / 2;
        if node.is_multiple_of(2) {
            // v_in: forward through v, or cancel some u_out -> v_in
            if !self.internal[v] {
                out.push(out_node(v));
            }
            for u in g.neighbors(v) {
                if self.link[u * self.n + v] {
                    out.push(out_node(u));
                }
            }
        } else {
            // v_out: along a link, or cancel v_in -> v_out
            for w in g.neighbors(v) {
                if !self.link[v * self.n + w] {
                    out.push(in_node(w));
                }
            }
            if self.internal[v] {
                out.push(in_node(v));
            }
        }
    }

    fn augment(&mut self, g: &Graph, source: usize, sink: usize) -> bool {
        let mut parent = vec![usize::MAX; 2 * self.n];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        let mut scratch = Vec::new();
        'bfs: while let Some(x) = queue.pop_front() {
            self.residual_neighbors(g, x, &mut scratch);
            for &y in &scratch {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return false;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            let (vx, vy) = (x / 2, y / 2);
            match (x % 2, y % 2) {
                (0, 1) if vx == vy => self.internal[vx] = true,
                (1, 0) if vx == vy => self.internal[vx] = false,
                (1, 0) => {
                    let back = self.link[vy * self.n + vx];
                    debug_assert!(!back);
                    self.link[vx * self.n + vy] = true;
                }
                (0, 1) => self.link[vy * self.n + vx] = false,
                _ => unreachable!("residual arc between nodes of the same side"),
            }
            y = x;
        }
        true
    }
}

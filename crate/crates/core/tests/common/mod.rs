//! Oracles that decide diagnosis questions straight from the test semantics,
//! sharing no code with the library's predicates or search.
#![allow(dead_code)]

use netdiag::{DiagModel, Graph, TopologyKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency as bit masks; the oracles only handle graphs of at most 32
/// vertices.
pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.vertex_count() <= 32);
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect()
}

fn bit(set: u32, v: usize) -> bool {
    set >> v & 1 == 1
}

/// True when some syndrome can be produced by both `f1` and `f2`.
///
/// A unit run by a processor faulty under either hypothesis can take the
/// value the other hypothesis demands, so only units whose runner is healthy
/// under both constrain anything, and those must agree.
pub fn share_a_syndrome(adj: &[u32], model: DiagModel, f1: u32, f2: u32) -> bool {
    let n = adj.len();
    (0..n).filter(|&w| !bit(f1 | f2, w)).all(|w| {
        let nbrs: Vec<usize> = (0..n).filter(|&v| bit(adj[w], v)).collect();
        match model {
            DiagModel::Pmc => nbrs.iter().all(|&v| bit(f1, v) == bit(f2, v)),
            DiagModel::MmStar => nbrs.iter().enumerate().all(|(i, &u)| {
                nbrs[i + 1..]
                    .iter()
                    .all(|&v| (bit(f1, u) || bit(f1, v)) == (bit(f2, u) || bit(f2, v)))
            }),
        }
    })
}

/// Largest `t` such that no two distinct fault sets of size at most `t`
/// share a syndrome.
pub fn brute_diagnosability(adj: &[u32], model: DiagModel) -> usize {
    let n = adj.len();
    assert!((1..=20).contains(&n));
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..1 << n {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let mut seen: Vec<u32> = Vec::new();
    for (s, layer) in by_size.iter().enumerate() {
        // pairs whose larger side has exactly s members
        for &a in layer {
            let clash = seen.iter().any(|&b| share_a_syndrome(adj, model, a, b))
                || layer.iter().any(|&b| b != a && share_a_syndrome(adj, model, a, b));
            if clash {
                return s - 1;
            }
        }
        seen.extend(layer);
    }
    unreachable!("V minus a vertex and V always share a syndrome")
}

/// `min` over every link-fault set of at most `h` links of the brute-force
/// diagnosability of what remains.
pub fn brute_edge_tolerable(g: &Graph, h: usize, model: DiagModel) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    let base = masks(g);
    let m = edges.len();
    assert!(m <= 24);
    let mut best = usize::MAX;
    for chosen in 0u32..1 << m {
        if chosen.count_ones() as usize > h {
            continue;
        }
        let mut adj = base.clone();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if bit(chosen, i) {
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
            }
        }
        best = best.min(brute_diagnosability(&adj, model));
    }
    best
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Named reference graphs followed by random graphs on 8 to 12 vertices.
pub fn corpus(random: usize) -> Vec<(String, Graph)> {
    let mut kinds = vec![
        TopologyKind::BalancedHypercube { n: 1 },
        TopologyKind::BalancedHypercube { n: 2 },
        TopologyKind::G8,
        TopologyKind::Hypercube { n: 2 },
        TopologyKind::Hypercube { n: 3 },
    ];
    kinds.extend((2..=4).map(|k| TopologyKind::Crown { k }));
    kinds.extend((3..=8).map(|m| TopologyKind::Cycle { m }));
    let mut out: Vec<(String, Graph)> = kinds.into_iter().map(|k| (k.to_string(), k.build().unwrap())).collect();
    for i in 0..random {
        let n = 8 + i % 5;
        let p = [0.25, 0.4, 0.55, 0.7][i % 4];
        out.push((format!("G({n},{p})#{i}"), random_graph(n, p, 1000 + i as u64)));
    }
    out
}

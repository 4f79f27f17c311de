//! Balanced hypercubes and the small reference graphs used as cross-checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest balanced-hypercube dimension the generator accepts (4^6 vertices).
pub const MAX_BH_DIMENSION: usize = 6;
pub const MAX_HYPERCUBE_DIMENSION: usize = 12;

/// A vertex `(a_0, ..., a_{n-1})` of `BH_n`, each digit in `0..4`.
///
/// The integer index is base 4 with `a_0` least significant, so `BH_1`
/// keeps labels 0, 1, 2, 3 around its 4-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BhCoordinate {
    digits: Vec<u8>,
}

impl BhCoordinate {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::invalid("a balanced-hypercube coordinate needs at least one digit"));
        }
        if let Some(d) = digits.iter().find(|&&d| d > 3) {
            return Err(Error::invalid(format!("coordinate digit {d} outside 0..=3")));
        }
        Ok(BhCoordinate { digits })
    }

    pub fn dimension(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn index(&self) -> usize {
        self.digits.iter().rev().fold(0, |acc, &d| acc * 4 + d as usize)
    }

    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        check_bh_dimension(n)?;
        let count = 1usize << (2 * n);
        if index >= count {
            return Err(Error::invalid(format!(
                "index {index} outside 0..{count} for dimension {n}"
            )));
        }
        let digits = (0..n).map(|i| (index >> (2 * i) & 3) as u8).collect();
        Ok(BhCoordinate { digits })
    }

    /// The `2n` neighbor coordinates. The two `a_0 ± 1` moves come first,
    /// then for each inner digit `i >= 1` the two moves that also shift
    /// `a_i` by `(-1)^{a_0}`, the sign taken from this vertex's own `a_0`.
    /// At `n = 1` only the first pair exists.
    pub fn neighbors(&self) -> Vec<BhCoordinate> {
        let a0 = self.digits[0];
        let shift = if a0.is_multiple_of(2) { 1 } else { 3 };
        let mut out = Vec::with_capacity(2 * self.dimension());
        for step in [1u8, 3] {
            let mut digits = self.digits.clone();
            digits[0] = (a0 + step) % 4;
            out.push(BhCoordinate { digits });
        }
        for i in 1..self.dimension() {
            for step in [1u8, 3] {
                let mut digits = self.digits.clone();
                digits[0] = (a0 + step) % 4;
                digits[i] = (digits[i] + shift) % 4;
                out.push(BhCoordinate { digits });
            }
        }
        out
    }

    /// The vertex sharing every neighbor with this one: `a_0` shifted by 2.
    pub fn twin(&self) -> BhCoordinate {
        let mut digits = self.digits.clone();
        digits[0] = (digits[0] + 2) % 4;
        BhCoordinate { digits }
    }
}

impl fmt::Display for BhCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

pub fn bh_index(c: &BhCoordinate) -> usize {
    c.index()
}

pub fn bh_coordinate(n: usize, index: usize) -> Result<BhCoordinate> {
    BhCoordinate::from_index(n, index)
}

fn check_bh_dimension(n: usize) -> Result<()> {
    if (1..=MAX_BH_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "balanced hypercube dimension must be in 1..={MAX_BH_DIMENSION}, got {n}"
        )))
    }
}

/// `BH_n` on `4^n` vertices, labelled with coordinate tuples.
pub fn balanced_hypercube(n: usize) -> Result<Graph> {
    check_bh_dimension(n)?;
    let count = 1usize << (2 * n);
    let mut edges = Vec::with_capacity(count * n);
    let mut labels = Vec::with_capacity(count);
    for index in 0..count {
        let c = BhCoordinate::from_index(n, index)?;
        for nb in c.neighbors() {
            let j = nb.index();
            if index < j {
                edges.push((index, j));
            }
        }
        labels.push(c.to_string());
    }
    // BH_1 lists each cycle edge twice per endpoint
    edges.sort_unstable();
    edges.dedup();
    Graph::new(count, edges)?.with_labels(labels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TopologyKind {
    BalancedHypercube { n: usize },
    /// The 8-cycle with its four long diagonals.
    G8,
    /// `G_{k+1,k+1}`: `K_{k+1,k+1}` minus a perfect matching.
    Crown { k: usize },
    Hypercube { n: usize },
    Cycle { m: usize },
}

impl TopologyKind {
    pub fn build(self) -> Result<Graph> {
        reference_topology(self)
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyKind::BalancedHypercube { n } => write!(f, "BH_{n}"),
            TopologyKind::G8 => write!(f, "G_8"),
            TopologyKind::Crown { k } => write!(f, "G_{{{0},{0}}}", k + 1),
            TopologyKind::Hypercube { n } => write!(f, "Q_{n}"),
            TopologyKind::Cycle { m } => write!(f, "C_{m}"),
        }
    }
}

pub fn reference_topology(kind: TopologyKind) -> Result<Graph> {
    match kind {
        TopologyKind::BalancedHypercube { n } => balanced_hypercube(n),
        TopologyKind::G8 => {
            let ring = (0..8).map(|i| (i, (i + 1) % 8));
            let chords = (0..4).map(|j| (j, j + 4));
            let labels = (1..=8).map(|i| format!("x{i}")).collect();
            Graph::new(8, ring.chain(chords))?.with_labels(labels)
        }
        TopologyKind::Crown { k } => {
            if k < 2 {
                return Err(Error::invalid(format!("crown graph needs k >= 2, got {k}")));
            }
            let side = k + 1;
            let edges = (0..side)
                .flat_map(|i| (0..side).filter(move |&j| j != i).map(move |j| (i, side + j)));
            let labels = (1..=side)
                .map(|i| format!("x{i}"))
                .chain((1..=side).map(|j| format!("y{j}")))
                .collect();
            Graph::new(2 * side, edges)?.with_labels(labels)
        }
        TopologyKind::Hypercube { n } => {
            if !(1..=MAX_HYPERCUBE_DIMENSION).contains(&n) {
                return Err(Error::invalid(format!(
                    "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}, got {n}"
                )));
            }
            let count = 1usize << n;
            let edges = (0..count)
                .flat_map(|v| (0..n).map(move |b| (v, v ^ (1 << b))).filter(|&(v, w)| v < w));
            let labels = (0..count).map(|v| format!("{v:0n$b}")).collect();
            Graph::new(count, edges)?.with_labels(labels)
        }
        TopologyKind::Cycle { m } => {
            if m < 3 {
                return Err(Error::invalid(format!("cycle needs m >= 3, got {m}")));
            }
            Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
        }
    }
}

//! Size-bounded subset and combination enumeration in lexicographic order.

use crate::bitset::VertexSet;

/// All subsets of `0..universe` with at most `max_size` members, ordered
/// lexicographically on their ascending vertex sequence (`∅`, `{0}`,
/// `{0,1}`, `{0,1,2}`, ..., `{1}`, ...).
pub fn subsets_up_to(universe: usize, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = VertexSet::empty(universe);
    out.push(current.clone());
    extend(universe, max_size, 0, &mut current, &mut out);
    out
}

fn extend(universe: usize, max_size: usize, from: usize, current: &mut VertexSet, out: &mut Vec<VertexSet>) {
    if current.len() == max_size {
        return;
    }
    for v in from..universe {
        current.insert(v);
        out.push(current.clone());
        extend(universe, max_size, v + 1, current, out);
        current.remove(v);
    }
}

/// Number of subsets of an `n`-set with at most `k` members.
pub fn count_up_to(n: usize, k: usize) -> u128 {
    (0..=k.min(n)).map(|i| binomial(n, i)).sum()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `k`-combinations of `0..n` as ascending index vectors, in lexicographic
/// order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    indices: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, indices: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.indices.clone();
        let k = self.indices.len();
        // rightmost index that can still move
        match (0..k).rev().find(|&i| self.indices[i] < self.n - k + i) {
            Some(i) => {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(item)
    }
}

//! Brute-force reference implementations used to validate the fast paths,
//! plus a small deterministic RNG for reproducible randomized tests.
//!
//! Everything here is deliberately naive and shares no code with the
//! implementations it checks: canonical forms by minimizing over all
//! permutations, chromatic numbers by enumerating assignments in label
//! order, and induced-subgraph detection by scanning subsets and
//! bijections.

use crate::graph::{Graph, VertexSet};
use crate::graph6::serialize_graph6;

pub use crate::rng::SplitMix;

impl SplitMix {
    /// Bernoulli draw with probability `num/2^16`.
    fn chance(&mut self, num: u32) -> bool {
        (self.next_u64() & 0xffff) as u32 <= num
    }
}

/// Erdos-Renyi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut SplitMix, n: usize, p: f64) -> Graph {
    let threshold = (p * 65535.0) as u32;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(threshold) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// All permutations of `0..n` in lexicographic order (`perm[old] = new`).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

/// Minimum graph6 record over all relabelings. Exponential; intended for
/// n <= 8.
pub fn brute_canonical_graph6(g: &Graph) -> String {
    let mut best: Option<String> = None;
    for perm in permutations(g.n()) {
        let s = serialize_graph6(&g.relabel(&perm));
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    best.unwrap_or_else(|| serialize_graph6(g))
}

/// Least k admitting a proper coloring, by plain backtracking over vertices
/// in label order with colors `1..=k` and no ordering heuristics.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    for k in 1..=g.n() {
        let mut colors = vec![0u8; g.n()];
        if brute_color(g, 0, k as u8, &mut colors) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

fn brute_color(g: &Graph, v: usize, k: u8, colors: &mut [u8]) -> bool {
    if v == g.n() {
        return true;
    }
    'color: for c in 1..=k {
        for u in g.neighbors(v).iter() {
            if colors[u] == c {
                continue 'color;
            }
        }
        colors[v] = c;
        if brute_color(g, v + 1, k, colors) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Whether `h` occurs as an induced subgraph of `g`, by scanning every
/// |h|-subset of `g` and every bijection onto it.
pub fn brute_contains_induced(g: &Graph, h: &Graph) -> bool {
    let hn = h.n();
    if hn > g.n() {
        return false;
    }
    let mut subset: Vec<usize> = Vec::new();
    brute_subsets(g, h, 0, hn, &mut subset)
}

fn brute_subsets(g: &Graph, h: &Graph, from: usize, need: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == need {
        for perm in permutations(need) {
            // perm[i] = position of pattern vertex i within the subset.
            let ok = (0..need).all(|i| {
                (i + 1..need)
                    .all(|j| h.has_edge(i, j) == g.has_edge(subset[perm[i]], subset[perm[j]]))
            });
            if ok {
                return true;
            }
        }
        return false;
    }
    for v in from..g.n() {
        subset.push(v);
        if brute_subsets(g, h, v + 1, need, subset) {
            return true;
        }
        subset.pop();
    }
    false
}

/// Exhaustive maximum independent set size.
pub fn brute_independence_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "brute independence oracle limited to n <= 20");
    let mut best = 0;
    for bits in 0u64..1 << n {
        let s = VertexSet(bits);
        if s.len() <= best {
            continue;
        }
        if s.iter().all(|v| (g.adj_bits(v) & bits) == 0) {
            best = s.len();
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn brute_values_on_known_graphs() {
        assert_eq!(brute_chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(brute_chromatic_number(&Graph::path(5)), 2);
        assert_eq!(brute_chromatic_number(&Graph::complete(6)), 6);
        assert!(brute_contains_induced(&Graph::cycle(5), &Graph::path(4)));
        assert!(!brute_contains_induced(&Graph::cycle(5), &Graph::path(5)));
        assert_eq!(brute_independence_number(&Graph::cycle(5)), 2);
    }
}

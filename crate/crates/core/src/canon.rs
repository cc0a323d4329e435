//! Canonical forms for isomorphism rejection.
//!
//! The canonical form of a graph is the lexicographically least
//! upper-triangle adjacency bit-string over all vertex orderings, stored as
//! the graph6 record of the correspondingly relabeled graph. Two graphs have
//! equal forms iff they are isomorphic, and comparing forms of equal order
//! compares their bit-strings.
//!
//! The search places vertices position by position. Placing a vertex at
//! position `j` fixes column `j` of the bit-string (its adjacency to the
//! `j` earlier positions, earliest position most significant), and only
//! candidates achieving the minimal column value at a node can lead to the
//! minimum, so siblings above that value are never branched. Ties are
//! reduced by interchangeability: two unplaced vertices with equal open
//! neighborhoods, or equal closed neighborhoods, are swapped by an
//! automorphism fixing everything else, so one representative suffices.
//! Remaining ties are resolved by comparing against the best full string
//! found so far, column by column, and a brute-force all-permutations
//! oracle validates the result for n <= 8.

use crate::graph::Graph;
use crate::graph6::serialize_graph6;

/// Canonical form: the graph6 bytes of the canonically relabeled graph.
///
/// Ordering is by raw bytes, which groups by order (the order byte leads)
/// and then by the adjacency bit-string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    /// Vertex count encoded in the form.
    pub fn n(&self) -> usize {
        (self.bytes[0] - 63) as usize
    }

    /// The canonical graph6 record.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.bytes).unwrap()
    }

    pub fn into_string(self) -> String {
        String::from_utf8(self.bytes).unwrap()
    }

    /// Reconstructs the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        crate::graph6::parse_graph6(self.as_graph6()).unwrap()
    }

    /// Wraps an already-canonical graph6 record without re-deriving it.
    /// The caller asserts that `line` came from [`canonical_form`].
    pub fn from_canonical_graph6(line: String) -> CanonicalForm {
        CanonicalForm {
            bytes: line.into_bytes(),
        }
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm {
        bytes: serialize_graph6(&canonical_graph(g)).into_bytes(),
    }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let placement = canonical_placement(g);
    let mut new_of_old = vec![0usize; g.n()];
    for (pos, &orig) in placement.iter().enumerate() {
        new_of_old[orig] = pos;
    }
    g.relabel(&new_of_old)
}

/// The vertex ordering realizing the canonical form: `placement[i]` is the
/// original vertex at canonical position `i`.
pub fn canonical_placement(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        n,
        best: Vec::new(),
        best_cols: vec![0; n],
        have_best: false,
        placed: Vec::with_capacity(n),
        vals: vec![0; n * n],
    };
    search.descend(g.vertices().0, CmpState::Less);
    debug_assert!(search.have_best);
    search.best
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CmpState {
    /// Prefix strictly below the best string (or no best yet).
    Less,
    /// Prefix identical to the best string so far.
    Equal,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Vec<usize>,
    /// `best_cols[j]` is column `j` of the best string as an integer.
    best_cols: Vec<u64>,
    have_best: bool,
    placed: Vec<usize>,
    /// Per-depth column accumulators, `vals[depth * n + v]`.
    vals: Vec<u64>,
}

impl Search<'_> {
    /// Explores placements for the next position. Returns true if the best
    /// string was replaced somewhere in this subtree.
    fn descend(&mut self, remaining: u64, state: CmpState) -> bool {
        let d = self.placed.len();
        let n = self.n;
        if d == n {
            if state == CmpState::Less {
                self.best.clear();
                self.best.extend_from_slice(&self.placed);
                self.have_best = true;
                for j in 1..n {
                    let mut col = 0u64;
                    for i in 0..j {
                        col = col << 1 | self.g.has_edge(self.best[j], self.best[i]) as u64;
                    }
                    self.best_cols[j] = col;
                }
                return true;
            }
            return false;
        }

        let base = d * n;
        let mut minv = u64::MAX;
        {
            let mut rest = remaining;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                minv = minv.min(self.vals[base + v]);
            }
        }

        // Column d of any branched child is exactly minv; compare it to the
        // best string once for the whole node.
        let child_base = match state {
            CmpState::Less => CmpState::Less,
            CmpState::Equal if d == 0 => CmpState::Equal,
            CmpState::Equal => {
                if minv > self.best_cols[d] {
                    return false;
                } else if minv < self.best_cols[d] {
                    CmpState::Less
                } else {
                    CmpState::Equal
                }
            }
        };

        let mut seen_open = [0u64; 64];
        let mut seen_closed = [0u64; 64];
        let mut seen = 0usize;
        let mut updated = false;

        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.vals[base + v] != minv {
                continue;
            }
            let okey = self.g.adj_bits(v);
            let ckey = okey | 1 << v;
            let mut twin = false;
            for i in 0..seen {
                if seen_open[i] == okey || seen_closed[i] == ckey {
                    twin = true;
                    break;
                }
            }
            if twin {
                continue;
            }
            seen_open[seen] = okey;
            seen_closed[seen] = ckey;
            seen += 1;

            // After a best update inside this node, our prefix is exactly
            // the best prefix and later siblings still match column d.
            let child_state = if updated { CmpState::Equal } else { child_base };

            let rem2 = remaining & !(1 << v);
            let next = (d + 1) * n;
            let mut r = rem2;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                self.vals[next + u] = self.vals[base + u] << 1 | (self.g.adj_bits(u) >> v & 1);
            }
            self.placed.push(v);
            updated |= self.descend(rem2, child_state);
            self.placed.pop();
        }
        updated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracles;

    #[test]
    fn relabelings_share_one_form() {
        // C5 labeled 0-1-2-3-4-0 versus 0-2-4-1-3-0.
        let c5a = Graph::cycle(5);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_form(&c5a), canonical_form(&c5b));

        // Every relabeling of the chair yields the same form.
        let chair = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let reference = canonical_form(&chair);
        for perm in oracles::permutations(5) {
            assert_eq!(canonical_form(&chair.relabel(&perm)), reference);
        }
    }

    #[test]
    fn nonisomorphic_graphs_differ() {
        // P4 and the 3-star have the same order and size but differ.
        let p4 = Graph::path(4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        let mut forms = std::collections::BTreeSet::new();
        for bits in 0u64..64 {
            let mut edges = Vec::new();
            for (idx, (u, v)) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
                .into_iter()
                .enumerate()
            {
                if bits >> idx & 1 == 1 {
                    edges.push((u, v));
                }
            }
            forms.insert(canonical_form(&Graph::from_edges(4, &edges)));
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn matches_brute_force_lexmin() {
        let mut rng = oracles::SplitMix::new(0xc0ffee);
        for _ in 0..400 {
            let n = 1 + (rng.next_u64() % 8) as usize;
            let g = oracles::random_graph(&mut rng, n, 0.5);
            let fast = canonical_form(&g);
            let brute = oracles::brute_canonical_graph6(&g);
            assert_eq!(fast.as_graph6(), brute, "graph {g:?}");
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let mut rng = oracles::SplitMix::new(7);
        for _ in 0..200 {
            let n = 1 + (rng.next_u64() % 9) as usize;
            let g = oracles::random_graph(&mut rng, n, 0.4);
            let cg = canonical_graph(&g);
            assert_eq!(cg.n(), g.n());
            assert_eq!(cg.edge_count(), g.edge_count());
            assert_eq!(canonical_form(&cg), canonical_form(&g));
            assert_eq!(serialize_graph6(&cg), canonical_form(&g).as_graph6());
        }
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // Highly symmetric inputs exercise the twin collapse: stars,
        // cliques, complete multipartite blowups.
        let star = {
            let edges: Vec<_> = (1..13).map(|v| (0, v)).collect();
            Graph::from_edges(13, &edges)
        };
        let k13 = Graph::complete(13);
        let mut edges = Vec::new();
        for u in 0..12 {
            for v in (u + 1)..12 {
                if u % 4 != v % 4 {
                    edges.push((u, v));
                }
            }
        }
        let turan = Graph::from_edges(12, &edges);
        for g in [&star, &k13, &turan] {
            let f = canonical_form(g);
            assert_eq!(f.n(), g.n());
            assert_eq!(f.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(canonical_form(&Graph::empty(0)).as_graph6(), "?");
        assert_eq!(canonical_form(&Graph::empty(1)).as_graph6(), "@");
    }
}

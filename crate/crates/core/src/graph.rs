//! Bitset-backed simple graphs on up to 62 labeled vertices.
//!
//! Graphs are immutable after construction. Growing a graph happens by
//! `add_vertex`, which copies the adjacency rows and appends one vertex with
//! a given neighborhood mask; this is the only extension pattern the
//! enumeration needs, so nothing else mutates.

use std::fmt;

/// Largest supported order. One byte of the graph6 order field covers 0..=62.
pub const MAX_VERTICES: usize = 62;

/// A set of vertices of a host graph, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least vertex in the set, if any.
    #[inline]
    pub fn least(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Iterate over members in ascending order.
    #[inline]
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Relation between two disjoint nonempty vertex sets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetRelation {
    /// Every pair across the two sets is adjacent.
    Complete,
    /// No pair across the two sets is adjacent.
    Anticomplete,
    Mixed,
}

/// Error for operations whose arguments violate a documented precondition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArgError(pub String);

impl fmt::Display for ArgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid argument: {}", self.0)
    }
}

impl std::error::Error for ArgError {}

/// An immutable simple graph on `n <= 62` labeled vertices with one
/// adjacency bitset per vertex.
///
/// Invariants (checked at construction): symmetry, irreflexivity, and all
/// set bits below `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list. Panics on self-loops or
    /// out-of-range endpoints; duplicate edges are tolerated.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u},{v}) for order {n}");
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g
    }

    /// Builds a graph directly from adjacency rows, validating the type
    /// invariants.
    pub fn from_adj_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        let range = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            assert!(row & !range == 0, "adjacency row {v} has bits >= n");
            assert!(row >> v & 1 == 0, "self-loop at {v}");
        }
        for v in 0..n {
            for u in VertexSet(adj[v]).iter() {
                assert!(adj[u] >> v & 1 == 1, "asymmetric edge ({v},{u})");
            }
        }
        Graph { n, adj }
    }

    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n).0;
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Graph { n, adj }
    }

    /// Path `0-1-...-n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-...-n-1-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).min()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Neighbors of `v` inside `s`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, s: VertexSet) -> VertexSet {
        VertexSet(self.adj[v] & s.0)
    }

    /// Union of neighborhoods of `s`, excluding `s` itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.0)
    }

    /// Copy-and-extend: a new graph with one extra vertex whose
    /// neighborhood is `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Graph {
        assert!(self.n < MAX_VERTICES, "cannot grow past {MAX_VERTICES}");
        debug_assert!(nbrs.is_subset(self.vertices()));
        let mut adj = Vec::with_capacity(self.n + 1);
        let nv = 1u64 << self.n;
        for (v, &row) in self.adj.iter().enumerate() {
            adj.push(if nbrs.contains(v) { row | nv } else { row });
        }
        adj.push(nbrs.0);
        Graph { n: self.n + 1, adj }
    }

    /// Subgraph induced by `s`, with vertices re-indexed in ascending
    /// label order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        debug_assert!(s.is_subset(self.vertices()));
        let verts: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph {
            n: verts.len(),
            adj,
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Deletes one vertex; remaining vertices are re-indexed ascending.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().without(v))
    }

    /// Connected components of the subgraph induced by `s`, as vertex sets
    /// of the host graph, ordered by least member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s.0;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            loop {
                let mut grown = comp;
                for v in VertexSet(comp).iter() {
                    grown |= self.adj[v] & rest;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_within(self.vertices()).len() == 1
    }

    /// Classifies the relation between two disjoint nonempty sets.
    pub fn set_relation(&self, x: VertexSet, y: VertexSet) -> Result<SetRelation, ArgError> {
        if x.is_empty() || y.is_empty() {
            return Err(ArgError("set_relation requires nonempty sets".into()));
        }
        if x.intersects(y) {
            return Err(ArgError(format!(
                "set_relation requires disjoint sets, got {x} and {y}"
            )));
        }
        let mut all = true;
        let mut none = true;
        for v in x.iter() {
            let hits = self.adj[v] & y.0;
            if hits != y.0 {
                all = false;
            }
            if hits != 0 {
                none = false;
            }
            if !all && !none {
                return Ok(SetRelation::Mixed);
            }
        }
        Ok(if all {
            SetRelation::Complete
        } else {
            SetRelation::Anticomplete
        })
    }

    /// Relabels vertices: vertex `v` becomes `new_of_old[v]`. The slice must
    /// be a permutation of `0..n`.
    pub fn relabel(&self, new_of_old: &[usize]) -> Graph {
        debug_assert_eq!(new_of_old.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let nv = new_of_old[v];
            for u in VertexSet(self.adj[v]).iter() {
                adj[nv] |= 1 << new_of_old[u];
            }
        }
        Graph::from_adj_rows(adj)
    }

    /// True iff no vertex outside `s` is mixed on `s` (adjacent to some but
    /// not all of it).
    pub fn is_homogeneous_set(&self, s: VertexSet) -> bool {
        debug_assert!(!s.is_empty());
        for v in (self.vertices() - s).iter() {
            let hits = self.adj[v] & s.0;
            if hits != 0 && hits != s.0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(format!("{s}"), "{0,3,5}");
        assert!(VertexSet::singleton(3).is_subset(s));
        assert_eq!((s - VertexSet::singleton(3)).len(), 2);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(62).len(), 62);
    }

    #[test]
    fn induced_subgraph_reindexes_ascending() {
        // (K5, {0,1,2}) is a triangle.
        let k5 = Graph::complete(5);
        let t = k5.induced([0, 1, 2].into_iter().collect());
        assert_eq!(t.n(), 3);
        assert_eq!(t.edge_count(), 3);

        // (P5 path 0-1-2-3-4, {0,1,3,4}) is two disjoint edges.
        let p5 = Graph::path(5);
        let g = p5.induced([0, 1, 3, 4].into_iter().collect());
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn induced_four_of_c5_is_p4() {
        // Every 4-subset of C5 induces a path on 4 vertices.
        let c5 = Graph::cycle(5);
        for drop in 0..5 {
            let g = c5.induced(c5.vertices().without(drop));
            assert_eq!(g.n(), 4);
            assert_eq!(g.edge_count(), 3);
            let mut degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
            degs.sort();
            assert_eq!(degs, vec![1, 1, 2, 2]);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn set_relation_cases() {
        let k5 = Graph::complete(5);
        let p5 = Graph::path(5);
        let one = |v| VertexSet::singleton(v);
        let set = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();

        assert_eq!(
            k5.set_relation(one(0), set(&[1, 2])).unwrap(),
            SetRelation::Complete
        );
        assert_eq!(
            p5.set_relation(one(0), set(&[3, 4])).unwrap(),
            SetRelation::Anticomplete
        );
        assert_eq!(
            p5.set_relation(one(1), set(&[0, 3])).unwrap(),
            SetRelation::Mixed
        );
        assert!(p5.set_relation(VertexSet::EMPTY, one(1)).is_err());
        assert!(p5.set_relation(set(&[0, 1]), set(&[1, 2])).is_err());
    }

    #[test]
    fn homogeneous_sets() {
        let c5 = Graph::cycle(5);
        // Singletons are always homogeneous.
        for v in 0..5 {
            assert!(c5.is_homogeneous_set(VertexSet::singleton(v)));
        }
        // In C5 every 2-subset has an outside vertex mixed on it.
        for u in 0..5 {
            for v in u + 1..5 {
                let s: VertexSet = [u, v].into_iter().collect();
                assert!(!c5.is_homogeneous_set(s), "2-subset {s} of C5");
            }
        }
        // In a complete graph every nonempty subset is homogeneous.
        let k5 = Graph::complete(5);
        for bits in 1u64..32 {
            assert!(k5.is_homogeneous_set(VertexSet(bits)));
        }
    }

    #[test]
    fn components() {
        let p5 = Graph::path(5);
        assert_eq!(p5.components_within(p5.vertices()).len(), 1);
        let two = p5.components_within([0, 1, 3, 4].into_iter().collect());
        assert_eq!(
            two,
            vec![
                [0, 1].into_iter().collect::<VertexSet>(),
                [3, 4].into_iter().collect::<VertexSet>()
            ]
        );
        let edgeless = Graph::empty(4);
        assert_eq!(edgeless.connected_components().len(), 4);
        assert_eq!(Graph::empty(0).connected_components(), vec![]);
    }

    #[test]
    fn components_are_anticomplete_and_connected() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6), (0, 2)]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        for (i, &a) in comps.iter().enumerate() {
            assert!(g.induced(a).is_connected());
            for &b in comps.iter().skip(i + 1) {
                assert_eq!(g.set_relation(a, b).unwrap(), SetRelation::Anticomplete);
            }
        }
    }

    #[test]
    fn add_vertex_extends() {
        let p4 = Graph::path(4);
        let g = p4.add_vertex([1].into_iter().collect());
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(4, 1));
        assert_eq!(g.degree(4), 1);
        assert_eq!(g.degree(1), 3);
        // Original untouched.
        assert_eq!(p4.n(), 4);
    }

    #[test]
    fn complement_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (1, 4)]);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), 6 * 5 / 2);
    }
}

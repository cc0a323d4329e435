//! Exact coloring: k-colorability with certificates, chromatic number,
//! vertex-criticality certification, and the clique/independence numbers.
//!
//! The solver is DSATUR-ordered backtracking. One greedy maximal clique is
//! precolored `1..=|Q|` and new colors may only be introduced one past the
//! current maximum, which together remove color symmetry without losing
//! completeness. Tie-breaking is fixed (highest saturation, then highest
//! degree, then lowest label) so runs are reproducible. At the orders this
//! crate targets (n <= 13 in the generated corpora) a query is microseconds.

use crate::graph::{Graph, VertexSet};

/// A proper coloring witnessing k-colorability: `colors[v]` is in `1..=k`
/// and adjacent vertices differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoringCertificate {
    pub k: usize,
    pub colors: Vec<u8>,
}

impl ColoringCertificate {
    /// Re-checks the certificate against its graph, independently of how
    /// the search produced it.
    pub fn validate(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self
                .colors
                .iter()
                .all(|&c| c >= 1 && (c as usize) <= self.k)
            && (0..g.n()).all(|v| {
                g.neighbors(v)
                    .iter()
                    .all(|u| self.colors[u] != self.colors[v])
            })
    }
}

/// Why a criticality check stopped before computing per-vertex values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShortCircuit {
    /// A vertex of degree below k-1 cannot occur in a k-vertex-critical
    /// graph.
    LowDegree { vertex: usize },
    /// The chromatic number is not k.
    WrongChromatic,
}

/// Outcome of a k-vertex-criticality check.
///
/// `verdict` holds iff `chi == k` and deleting any vertex drops the
/// chromatic number to `k - 1`. `per_vertex[v]` is the chromatic number of
/// the graph with `v` deleted (always `chi` or `chi - 1`); it is left empty
/// when the check short-circuits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalityReport {
    pub k: usize,
    pub chi: usize,
    pub per_vertex: Vec<usize>,
    pub verdict: bool,
    pub short_circuit: Option<ShortCircuit>,
}

/// Finds a proper k-coloring if one exists. The returned certificate
/// always passes its own validation.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<ColoringCertificate> {
    assert!(k >= 1, "is_k_colorable requires k >= 1");
    let n = g.n();
    if n == 0 {
        return Some(ColoringCertificate { k, colors: vec![] });
    }
    if k >= n {
        // Trivially colorable with all-distinct labels.
        return Some(ColoringCertificate {
            k,
            colors: (1..=n as u8).collect(),
        });
    }
    let clique = greedy_maximal_clique(g);
    if clique.len() > k {
        return None;
    }
    let mut state = DsaturState::new(g, k);
    for (i, v) in clique.iter().enumerate() {
        state.assign(v, i as u8 + 1);
    }
    let colored = clique.len();
    if state.search(n - colored, clique.len() as u8) {
        let cert = ColoringCertificate {
            k,
            colors: state.colors,
        };
        debug_assert!(cert.validate(g));
        Some(cert)
    } else {
        None
    }
}

/// The least k for which a proper k-coloring exists; requires n >= 1.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_with_certificate(g).0
}

/// Chromatic number together with an optimal coloring certificate.
pub fn chromatic_number_with_certificate(g: &Graph) -> (usize, ColoringCertificate) {
    assert!(
        g.n() >= 1,
        "chromatic number of the empty graph is undefined"
    );
    let lb = greedy_maximal_clique(g).len().max(1);
    for k in lb..=g.n() {
        if let Some(cert) = is_k_colorable(g, k) {
            return (k, cert);
        }
    }
    unreachable!("n colors always suffice")
}

/// Certifies k-vertex-criticality.
///
/// Short-circuits to a negative verdict when some vertex has degree below
/// k-1 or when the chromatic number differs from k; otherwise fills
/// `per_vertex` by testing (k-1)-colorability of each one-vertex deletion
/// (the exact value is forced since deletion drops the chromatic number by
/// at most one).
pub fn is_k_vertex_critical(g: &Graph, k: usize) -> CriticalityReport {
    assert!(k >= 1);
    let n = g.n();
    let chi = if n == 0 { 0 } else { chromatic_number(g) };
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) < k - 1) {
        return CriticalityReport {
            k,
            chi,
            per_vertex: vec![],
            verdict: false,
            short_circuit: Some(ShortCircuit::LowDegree { vertex }),
        };
    }
    if chi != k {
        return CriticalityReport {
            k,
            chi,
            per_vertex: vec![],
            verdict: false,
            short_circuit: Some(ShortCircuit::WrongChromatic),
        };
    }
    let per_vertex: Vec<usize> = (0..n)
        .map(|v| {
            let h = g.delete_vertex(v);
            let dropped = if k == 1 {
                h.n() == 0
            } else {
                is_k_colorable(&h, k - 1).is_some()
            };
            if dropped {
                k - 1
            } else {
                k
            }
        })
        .collect();
    let verdict = per_vertex.iter().all(|&c| c == k - 1);
    if verdict {
        // Standard necessary conditions, re-asserted on every positive
        // verdict.
        assert!(g.min_degree().unwrap_or(0) >= k - 1);
        assert!(g.is_connected());
    }
    CriticalityReport {
        k,
        chi,
        per_vertex,
        verdict,
        short_circuit: None,
    }
}

/// Fast criticality test for the generation inner loop: no report, same
/// decisions, cheapest checks first.
pub(crate) fn is_k_vertex_critical_fast(g: &Graph, k: usize) -> bool {
    debug_assert!(k >= 2);
    let n = g.n();
    if n < k || g.min_degree().unwrap_or(0) < k - 1 {
        return false;
    }
    // Callers know g is not (k-1)-colorable, so chi >= k; equality is all
    // that needs checking.
    if is_k_colorable(g, k).is_none() {
        return false;
    }
    (0..n).all(|v| is_k_colorable(&g.delete_vertex(v), k - 1).is_some())
}

/// Size of a maximum clique, by exhaustive branch and bound.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    clique_extend(g, g.vertices().0, 0, &mut best);
    best
}

/// Size of a maximum independent set, by exhaustive branch and bound on
/// the complement.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

fn clique_extend(g: &Graph, cand: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    let mut rest = cand;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        clique_extend(g, rest & g.adj_bits(v), size + 1, best);
    }
}

/// One inclusion-maximal clique, grown greedily from the highest-degree
/// vertex (ties to the lowest label).
pub fn greedy_maximal_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    if n == 0 {
        return VertexSet::EMPTY;
    }
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), usize::MAX - v))
        .unwrap();
    let mut clique = VertexSet::singleton(start);
    let mut cand = g.neighbors(start);
    while let Some(next) = cand.iter().max_by_key(|&v| (g.degree(v), usize::MAX - v)) {
        clique.insert(next);
        cand = cand & g.neighbors(next);
    }
    clique
}

struct DsaturState<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<u8>,
    /// Distinct neighbor colors per vertex.
    saturation: Vec<u8>,
    /// `counts[v * (k+1) + c]`: neighbors of v colored c.
    counts: Vec<u8>,
}

impl<'a> DsaturState<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        DsaturState {
            g,
            k,
            colors: vec![0; g.n()],
            saturation: vec![0; g.n()],
            counts: vec![0; g.n() * (k + 1)],
        }
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.colors[v] = c;
        for u in self.g.neighbors(v).iter() {
            let slot = u * (self.k + 1) + c as usize;
            if self.counts[slot] == 0 {
                self.saturation[u] += 1;
            }
            self.counts[slot] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for u in self.g.neighbors(v).iter() {
            let slot = u * (self.k + 1) + c as usize;
            self.counts[slot] -= 1;
            if self.counts[slot] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn search(&mut self, uncolored: usize, max_used: u8) -> bool {
        if uncolored == 0 {
            return true;
        }
        // Highest saturation, then highest degree, then lowest label.
        let v = (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), usize::MAX - v))
            .unwrap();
        let limit = (self.k as u8).min(max_used + 1);
        for c in 1..=limit {
            if self.counts[v * (self.k + 1) + c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(uncolored - 1, max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

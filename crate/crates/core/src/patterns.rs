//! Named pattern graphs and induced-subgraph detection.
//!
//! A hereditary class is described by a [`PatternFamily`], a set of named
//! forbidden induced subgraphs. Detection is backtracking over pattern
//! vertices in a connectivity-first order with candidate filtering by
//! degree and adjacency bitmasks; a brute-force subset scan in the oracles
//! module validates it.

use crate::graph::{Graph, VertexSet};
use std::fmt;

/// Unknown or malformed pattern name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternError(pub String);

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown pattern name: {}", self.0)
    }
}

impl std::error::Error for PatternError {}

/// Builds one of the named small graphs, up to isomorphism.
///
/// Accepted names: `P<t>` (t >= 1), `C<t>` (t >= 3), `K<t>` (t >= 1),
/// `chair`, `cricket`, `gem`, `banner`, `dart`, `bull`, `K5-e`,
/// `P4+<l>P1` (l >= 0), `2P2`, `K3+P1`.
pub fn named_graph(name: &str) -> Result<Graph, PatternError> {
    let err = || PatternError(name.to_string());
    match name {
        // Path on 4 vertices plus a pendant on a central vertex.
        "chair" => Ok(Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)])),
        // Triangle plus two pendants on a common triangle vertex.
        "cricket" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)],
        )),
        // P4 plus a vertex complete to it.
        "gem" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        )),
        // C4 plus a pendant.
        "banner" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        )),
        // K4 minus an edge, plus a pendant on a degree-3 vertex.
        "dart" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (1, 4)],
        )),
        // Triangle with two pendants on distinct triangle vertices.
        "bull" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)],
        )),
        "K5-e" => {
            let mut edges = Vec::new();
            for u in 0..5 {
                for v in (u + 1)..5 {
                    if (u, v) != (0, 1) {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(5, &edges))
        }
        "2P2" => Ok(Graph::from_edges(4, &[(0, 1), (2, 3)])),
        "K3+P1" => Ok(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)])),
        _ => {
            if let Some(rest) = name.strip_prefix("P4+") {
                let ell: usize = rest
                    .strip_suffix("P1")
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(err)?;
                if 4 + ell > crate::graph::MAX_VERTICES {
                    return Err(err());
                }
                return Ok(Graph::from_edges(4 + ell, &[(0, 1), (1, 2), (2, 3)]));
            }
            if name.len() < 2 {
                return Err(err());
            }
            let (head, digits) = name.split_at(1);
            let t: usize = digits.parse().map_err(|_| err())?;
            if t > crate::graph::MAX_VERTICES {
                return Err(err());
            }
            match head {
                "P" if t >= 1 => Ok(Graph::path(t)),
                "C" if t >= 3 => Ok(Graph::cycle(t)),
                "K" if t >= 1 => Ok(Graph::complete(t)),
                _ => Err(err()),
            }
        }
    }
}

/// A set of named forbidden induced subgraphs.
#[derive(Clone)]
pub struct PatternFamily {
    members: Vec<(String, Graph)>,
}

impl PatternFamily {
    /// Resolves a list of pattern names. Names must be unique and each
    /// pattern nonempty.
    pub fn from_names<'a, I: IntoIterator<Item = &'a str>>(names: I) -> Result<Self, PatternError> {
        let mut members: Vec<(String, Graph)> = Vec::new();
        for name in names {
            if members.iter().any(|(m, _)| m == name) {
                return Err(PatternError(format!("duplicate pattern name {name}")));
            }
            let g = named_graph(name)?;
            assert!(g.n() >= 1);
            members.push((name.to_string(), g));
        }
        Ok(PatternFamily { members })
    }

    /// Parses a comma-separated list, e.g. `"P5,chair"`.
    pub fn parse_list(list: &str) -> Result<Self, PatternError> {
        Self::from_names(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn members(&self) -> &[(String, Graph)] {
        &self.members
    }

    pub fn names(&self) -> Vec<&str> {
        self.members.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names().join(","))
    }
}

/// Searches for an induced copy of `h` in `g`. Returns the first embedding
/// found in the deterministic search order (pattern vertices in a fixed
/// connectivity-first order, candidates ascending), as a map from pattern
/// vertex to host vertex preserving both adjacency and non-adjacency.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    assert!(h.n() >= 1, "pattern must have at least one vertex");
    let plan = Plan::new(h, None);
    let mut img = vec![0usize; h.n()];
    if run_plan(g, &plan, None, &mut img) {
        let mut emb = vec![0usize; h.n()];
        for (s, &p) in plan.slot_vertex.iter().enumerate() {
            emb[p] = img[s];
        }
        Some(emb)
    } else {
        None
    }
}

/// True iff `g` contains no member of the family as an induced subgraph.
pub fn is_family_free(g: &Graph, fam: &PatternFamily) -> bool {
    fam.members
        .iter()
        .all(|(_, h)| contains_induced(g, h).is_none())
}

/// A pattern preprocessed for repeated detection queries: slot orders,
/// per-slot adjacency constraints, and automorphism-orbit representatives
/// for rooted searches.
#[derive(Clone)]
pub struct CompiledPattern {
    pub name: String,
    pub pattern: Graph,
    free_plan: Plan,
    /// One rooted plan per orbit of the pattern's automorphism group.
    rooted_plans: Vec<Plan>,
}

#[derive(Clone)]
struct Plan {
    /// `slot_vertex[s]` is the pattern vertex assigned at slot `s`.
    slot_vertex: Vec<usize>,
    /// Bitmask over earlier slots whose pattern vertices are adjacent to
    /// this slot's vertex.
    adj_prev: Vec<u64>,
    /// Same for non-adjacent earlier slots.
    nonadj_prev: Vec<u64>,
    /// Degree of the slot's pattern vertex (candidate prefilter).
    mindeg: Vec<usize>,
    /// Slots holding isolated pattern vertices, which are interchangeable:
    /// their images are forced ascending.
    isolated: Vec<bool>,
}

impl Plan {
    fn new(h: &Graph, root: Option<usize>) -> Plan {
        let hn = h.n();
        let mut order: Vec<usize> = Vec::with_capacity(hn);
        let mut placed = VertexSet::EMPTY;
        if let Some(r) = root {
            order.push(r);
            placed.insert(r);
        }
        while order.len() < hn {
            // Most placed neighbors, then highest degree, then lowest index.
            let next = (0..hn)
                .filter(|&p| !placed.contains(p))
                .max_by_key(|&p| (h.neighbors_in(p, placed).len(), h.degree(p), usize::MAX - p))
                .unwrap();
            order.push(next);
            placed.insert(next);
        }
        let mut adj_prev = vec![0u64; hn];
        let mut nonadj_prev = vec![0u64; hn];
        for s in 0..hn {
            for t in 0..s {
                if h.has_edge(order[s], order[t]) {
                    adj_prev[s] |= 1 << t;
                } else {
                    nonadj_prev[s] |= 1 << t;
                }
            }
        }
        Plan {
            mindeg: order.iter().map(|&p| h.degree(p)).collect(),
            isolated: order.iter().map(|&p| h.degree(p) == 0).collect(),
            slot_vertex: order,
            adj_prev,
            nonadj_prev,
        }
    }
}

impl CompiledPattern {
    pub fn new(name: &str, pattern: Graph) -> CompiledPattern {
        assert!(pattern.n() >= 1 && pattern.n() <= 16);
        let roots = orbit_representatives(&pattern);
        CompiledPattern {
            name: name.to_string(),
            free_plan: Plan::new(&pattern, None),
            rooted_plans: roots
                .iter()
                .map(|&r| Plan::new(&pattern, Some(r)))
                .collect(),
            pattern,
        }
    }

    /// Unrooted search; returns the embedding indexed by pattern vertex.
    pub fn find(&self, g: &Graph) -> Option<Vec<usize>> {
        let mut img = vec![0usize; self.pattern.n()];
        if run_plan(g, &self.free_plan, None, &mut img) {
            let mut emb = vec![0usize; self.pattern.n()];
            for (s, &p) in self.free_plan.slot_vertex.iter().enumerate() {
                emb[p] = img[s];
            }
            Some(emb)
        } else {
            None
        }
    }

    /// Whether an induced copy exists that uses host vertex `forced`.
    pub fn find_using(&self, g: &Graph, forced: usize) -> bool {
        let mut img = vec![0usize; self.pattern.n()];
        self.rooted_plans
            .iter()
            .any(|plan| run_plan(g, plan, Some(forced), &mut img))
    }
}

fn find_root(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// One representative per automorphism orbit of `h`. For patterns with few
/// vertices the group is enumerated outright; larger patterns fall back to
/// collapsing twin classes, which under-merges but never over-merges.
fn orbit_representatives(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find_root(parent, a), find_root(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    if n <= 7 {
        let mut map = vec![usize::MAX; n];
        let mut used = 0u64;
        enumerate_automorphisms(h, 0, &mut map, &mut used, &mut |perm| {
            for (v, &image) in perm.iter().enumerate() {
                union(&mut parent, v, image);
            }
        });
    } else {
        for u in 0..n {
            for v in (u + 1)..n {
                let (au, av) = (h.adj_bits(u), h.adj_bits(v));
                if au == av || (au | 1 << u) == (av | 1 << v) {
                    union(&mut parent, u, v);
                }
            }
        }
    }
    (0..n).filter(|&v| find_root(&mut parent, v) == v).collect()
}

fn enumerate_automorphisms(
    h: &Graph,
    v: usize,
    map: &mut Vec<usize>,
    used: &mut u64,
    visit: &mut impl FnMut(&[usize]),
) {
    let n = h.n();
    if v == n {
        visit(map);
        return;
    }
    for w in 0..n {
        if *used >> w & 1 == 1 || h.degree(w) != h.degree(v) {
            continue;
        }
        if (0..v).any(|u| h.has_edge(u, v) != h.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        enumerate_automorphisms(h, v + 1, map, used, visit);
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
}

/// Backtracking over slots; `img[s]` receives the host vertex for slot `s`.
fn run_plan(g: &Graph, plan: &Plan, forced_first: Option<usize>, img: &mut [usize]) -> bool {
    let hn = plan.slot_vertex.len();
    if hn > g.n() {
        return false;
    }
    // Degree prefilter masks shared by all slots of equal pattern degree.
    let mut deg_ok = [0u64; 16];
    for s in 0..hn {
        if deg_ok[plan.mindeg[s]] == 0 {
            let mut mask = 0u64;
            for v in 0..g.n() {
                if g.degree(v) >= plan.mindeg[s] {
                    mask |= 1 << v;
                }
            }
            deg_ok[plan.mindeg[s]] = mask;
        }
    }
    fn rec(
        g: &Graph,
        plan: &Plan,
        deg_ok: &[u64; 16],
        img: &mut [usize],
        s: usize,
        used: u64,
        forced_first: Option<usize>,
    ) -> bool {
        let hn = plan.slot_vertex.len();
        if s == hn {
            return true;
        }
        let mut cand = deg_ok[plan.mindeg[s]] & !used;
        let mut a = plan.adj_prev[s];
        while a != 0 {
            let t = a.trailing_zeros() as usize;
            a &= a - 1;
            cand &= g.adj_bits(img[t]);
        }
        let mut na = plan.nonadj_prev[s];
        while na != 0 {
            let t = na.trailing_zeros() as usize;
            na &= na - 1;
            cand &= !g.adj_bits(img[t]);
        }
        if s == 0 {
            if let Some(f) = forced_first {
                if cand >> f & 1 == 0 {
                    return false;
                }
                cand = 1 << f;
            }
        } else if plan.isolated[s] && plan.isolated[s - 1] && !(s == 1 && forced_first.is_some()) {
            // Interchangeable isolated slots get ascending images. A forced
            // slot 0 is pinned, so the break starts after it.
            cand &= !(u64::MAX >> (63 - img[s - 1]));
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            img[s] = v;
            if rec(g, plan, deg_ok, img, s + 1, used | 1 << v, forced_first) {
                return true;
            }
        }
        false
    }
    rec(g, plan, &deg_ok, img, 0, 0, forced_first)
}

/// A family preprocessed for the enumeration inner loop.
pub struct CompiledFamily {
    patterns: Vec<CompiledPattern>,
}

impl CompiledFamily {
    pub fn new(fam: &PatternFamily) -> CompiledFamily {
        CompiledFamily {
            patterns: fam
                .members()
                .iter()
                .map(|(name, h)| CompiledPattern::new(name, h.clone()))
                .collect(),
        }
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        self.patterns.iter().all(|p| p.find(g).is_none())
    }

    /// Family-freeness check for a graph whose prefix without `new_vertex`
    /// is already known family-free: any new induced copy must use it.
    pub fn free_given_extension(&self, g: &Graph, new_vertex: usize) -> bool {
        self.patterns.iter().all(|p| !p.find_using(g, new_vertex))
    }

    /// Name of some family member occurring in `g`, with its embedding.
    pub fn first_violation(&self, g: &Graph) -> Option<(&str, Vec<usize>)> {
        self.patterns
            .iter()
            .find_map(|p| p.find(g).map(|emb| (p.name.as_str(), emb)))
    }
}

//! Exact tooling for k-vertex-critical graphs in hereditary classes
//! defined by forbidden induced subgraphs.
//!
//! The crate provides:
//! - bitset graphs on up to 62 vertices with a graph6 codec ([`graph`],
//!   [`graph6`]) and canonical forms for isomorphism rejection ([`canon`]);
//! - construction and detection of named forbidden patterns ([`patterns`]);
//! - exact chromatic number, coloring certificates, and vertex-criticality
//!   certification ([`coloring`]);
//! - executable structural checks: the incompatible-pair and homogeneous-set
//!   lemmas, the attachment case tables, and the per-claim decomposition
//!   checks for the chair and cricket variants ([`structure`]);
//! - exhaustive generation of all k-vertex-critical family-free graphs up
//!   to a vertex bound, plus corpus verification ([`enumerate`]).

pub mod canon;
pub mod coloring;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod patterns;
pub(crate) mod rng;
pub mod structure;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use coloring::{
    chromatic_number, clique_number, independence_number, is_k_colorable, is_k_vertex_critical,
    ColoringCertificate, CriticalityReport,
};
pub use enumerate::{
    cross_check, enumerate_critical, verify_corpus, CorpusReport, CorpusSummary, CountTable,
    DiffReport, EnumerationConfig, EnumerationOutcome, Frontier,
};
pub use graph::{ArgError, Graph, SetRelation, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, serialize_graph6, Graph6Error};
pub use patterns::{contains_induced, is_family_free, named_graph, PatternError, PatternFamily};
pub use structure::{
    check_lemma2, check_ramsey_lemma_degenerate, decompose, find_lemma1_violation, is_antichain,
    min_ell_for_p4_ell_p1_freeness, verify_case_table, verify_proof_claims, ClaimCheckOptions,
    ClaimReport, Decomposition, RamseyInstance, Variant,
};

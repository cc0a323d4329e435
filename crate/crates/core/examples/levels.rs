//! Prints per-level frontier statistics for a generation run.
//! Usage: levels <k> <family> <n_max> [jobs]

use vcrit_core::enumerate::{enumerate_critical, EnumerationConfig};
use vcrit_core::patterns::PatternFamily;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: usize = args[1].parse().unwrap();
    let family = PatternFamily::parse_list(&args[2]).unwrap();
    let n_max: usize = args[3].parse().unwrap();
    let mut cfg = EnumerationConfig::new(k, family, n_max);
    if let Some(j) = args.get(4) {
        cfg.jobs = j.parse().unwrap();
    }
    let started = std::time::Instant::now();
    let outcome = enumerate_critical(&cfg, |_, _| {}).unwrap();
    for s in &outcome.levels {
        println!(
            "n={:2} parents={:10} candidates={:12} unique={:10} frontier={:10} emitted={:8} [{:?}]",
            s.n,
            s.parents,
            s.candidates,
            s.unique,
            s.to_frontier,
            s.emitted,
            started.elapsed()
        );
    }
    println!("counts: {:?}", outcome.counts.rows().collect::<Vec<_>>());
    println!(
        "complete: {} elapsed: {:?}",
        outcome.complete,
        started.elapsed()
    );
}

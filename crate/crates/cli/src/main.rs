//! Command-line front end for enumerating k-vertex-critical graphs in
//! hereditary classes, verifying graph6 corpora, and replaying the
//! structural checks.
//!
//! Exit codes: 0 success; 1 a verification or check reported a negative
//! result; 2 an enumeration hit its vertex bound with live extensions left
//! (counts are partial); 64 bad usage; 66 unreadable input file.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use vcrit_core::coloring::{
    chromatic_number, clique_number, independence_number, is_k_vertex_critical,
};
use vcrit_core::enumerate::{
    cross_check, enumerate_critical, verify_corpus, CorpusSummary, CountTable, EnumerationConfig,
};
use vcrit_core::patterns::PatternFamily;
use vcrit_core::structure::{
    check_lemma2, find_lemma1_violation, verify_case_table, verify_proof_claims, ClaimCheckOptions,
    ClaimReport, Variant,
};
use vcrit_core::{parse_graph6, ArgError, Graph};

mod manifest;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_TRUNCATED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_NOINPUT: u8 = 66;

#[derive(Parser)]
#[command(
    name = "vcrit",
    version,
    about = "k-vertex-critical graphs in hereditary classes: exhaustive generation, corpus verification, structural checks",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively generate all k-vertex-critical family-free graphs up to
    /// a vertex bound.
    Enumerate(EnumerateArgs),
    /// Verify that every graph in a graph6 file is family-free and
    /// k-vertex-critical, with per-order counts.
    Verify(VerifyArgs),
    /// Replay the attachment case tables, or run the per-path structural
    /// claims against a graph6 file.
    CheckClaims(CheckClaimsArgs),
    /// Print order, size, chromatic/clique/independence numbers, and a
    /// criticality verdict for each graph in a file.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Target criticality (chromatic number of the outputs).
    #[arg(long)]
    k: usize,
    /// Comma-separated forbidden pattern names, e.g. P5,chair.
    #[arg(long)]
    family: String,
    /// Largest vertex count to extend to.
    #[arg(long, value_name = "N")]
    n_max: usize,
    /// Write emitted graphs (graph6, one per line) here; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the per-order count table as CSV here.
    #[arg(long)]
    counts: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write a reproducibility manifest here.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Extend by every neighborhood mask including the empty one
    /// (cross-validation mode; the default keeps prefixes connected).
    #[arg(long)]
    no_connected_prefix: bool,
    /// Candidate records kept in memory per level before spilling sorted
    /// runs to temporary files.
    #[arg(long, default_value_t = 8_000_000)]
    spill_threshold: usize,
    /// Suppress the human-readable summary.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    family: String,
    /// graph6 input file, one graph per line.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// CSV count table (n,count) the corpus must match exactly.
    #[arg(long)]
    expect: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Report format for per-graph verdicts.
    #[arg(long, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Only print failures and the summary.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct CheckClaimsArgs {
    /// Which 5-vertex pattern accompanies P5.
    #[arg(long)]
    variant: String,
    /// Replay the 15-row attachment case table and exit.
    #[arg(long)]
    tables_only: bool,
    /// Criticality target for per-graph checks.
    #[arg(long)]
    k: Option<usize>,
    /// graph6 input file for per-graph checks.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Also run the incompatible-pair and homogeneous-set checks per graph.
    #[arg(long)]
    lemmas: bool,
    /// Search bound for the incompatible-pair check.
    #[arg(long, default_value_t = 3)]
    lemma1_max_size: usize,
    /// Check all induced paths when the order is at most this.
    #[arg(long, default_value_t = 10)]
    exhaustive_threshold: usize,
    /// Paths sampled per graph above the exhaustive threshold.
    #[arg(long, default_value_t = 100)]
    sample: usize,
    /// Seed for path sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value = "text")]
    format: ReportFormat,
    /// Only print failures and the summary.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 input file, one graph per line.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Criticality target; defaults to each graph's chromatic number.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (e.g. `vcrit ... | head`) instead of
    // panicking in the print macros.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::CheckClaims(args) => cmd_check_claims(args),
        Command::Analyze(args) => cmd_analyze(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Input(path, e)) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            ExitCode::from(EXIT_NOINPUT)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NOINPUT)
        }
    }
}

enum CliError {
    Usage(String),
    Input(PathBuf, std::io::Error),
    Io(std::io::Error),
}

impl From<ArgError> for CliError {
    fn from(e: ArgError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_family(list: &str) -> Result<PatternFamily, CliError> {
    PatternFamily::parse_list(list).map_err(|e| CliError::Usage(e.to_string()))
}

fn read_input(path: &Path) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(path.to_path_buf(), e))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, CliError> {
    let family = parse_family(&args.family)?;
    let mut cfg = EnumerationConfig::new(args.k, family, args.n_max);
    cfg.connected_prefix = !args.no_connected_prefix;
    cfg.jobs = args.jobs;
    cfg.spill_threshold = args.spill_threshold;
    cfg.validate()?;

    let started = Instant::now();
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut write_err = None;
    let outcome = enumerate_critical(&cfg, |_, form| {
        if write_err.is_none() {
            if let Err(e) = writeln!(out, "{}", form.as_graph6()) {
                write_err = Some(e);
            }
        }
    })?;
    out.flush()?;
    if let Some(e) = write_err {
        return Err(CliError::Io(e));
    }
    let wall = started.elapsed();

    if let Some(path) = &args.counts {
        std::fs::write(path, outcome.counts.to_csv())?;
    }
    if !args.quiet {
        println!(
            "# {}-vertex-critical {}-free graphs, n <= {}",
            args.k, args.family, args.n_max
        );
        print_count_table(&outcome.counts);
        println!(
            "status: {} ({:.2?})",
            if outcome.complete {
                "complete (frontier exhausted)"
            } else {
                "truncated at n-max"
            },
            wall
        );
    }
    if let Some(path) = &args.manifest {
        let mut m = manifest::Manifest::new("enumerate", wall);
        m.set("k", args.k);
        m.set("family", &args.family);
        m.set("n_max", args.n_max);
        m.set("connected_prefix", !args.no_connected_prefix);
        m.set("jobs", args.jobs);
        m.set("spill_threshold", args.spill_threshold);
        m.set("complete", outcome.complete);
        m.add_counts(&outcome.counts);
        m.write(path)?;
    }
    Ok(if outcome.complete { 0 } else { EXIT_TRUNCATED })
}

fn print_count_table(counts: &CountTable) {
    println!("{:>4} {:>12}", "n", "count");
    for (n, c) in counts.rows() {
        println!("{n:>4} {c:>12}");
    }
    println!("{:>4} {:>12}", "all", counts.total());
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let family = parse_family(&args.family)?;
    let lines = read_input(&args.input)?;
    let started = Instant::now();
    let report = verify_corpus(lines.iter().map(String::as_str), args.k, &family, args.jobs)?;
    let wall = started.elapsed();

    for (line_no, err) in &report.parse_errors {
        println!("line {line_no}: parse error: {err}");
    }
    for v in &report.verdicts {
        if v.positive() && args.quiet {
            continue;
        }
        match args.format {
            ReportFormat::Text => {
                let mut line = format!(
                    "line {}: n={} {}",
                    v.line_no,
                    v.n,
                    if v.positive() { "ok" } else { "FAIL" }
                );
                if let Some((name, emb)) = &v.violation {
                    line.push_str(&format!(" induced {name} at {emb:?}"));
                }
                if !v.criticality.verdict {
                    line.push_str(&format!(
                        " not {}-vertex-critical (chi = {})",
                        args.k, v.criticality.chi
                    ));
                }
                println!("{line}");
            }
            ReportFormat::Kv => {
                println!(
                    "line={} n={} family_free={} critical={} chi={} canonical={}",
                    v.line_no,
                    v.n,
                    v.family_free,
                    v.criticality.verdict,
                    v.criticality.chi,
                    v.canonical.as_graph6()
                );
            }
        }
    }
    for (first, dup) in &report.duplicates {
        println!("line {dup}: duplicate of line {first} (isomorphic)");
    }

    let mut ok = report.all_positive();
    if let Some(expect_path) = &args.expect {
        let text = std::fs::read_to_string(expect_path)
            .map_err(|e| CliError::Input(expect_path.clone(), e))?;
        let expected_summary = CorpusSummary {
            counts: CountTable::from_csv(&text)?,
            ..Default::default()
        };
        let got = CorpusSummary {
            counts: report.counts.clone(),
            ..Default::default()
        };
        let diff = cross_check(&got, &expected_summary, vcrit_core::MAX_VERTICES);
        if !diff.count_mismatches.is_empty() {
            ok = false;
            for (n, got, want) in &diff.count_mismatches {
                println!("count mismatch at n={n}: got {got}, expected {want}");
            }
        }
    }

    print_count_table(&report.counts);
    println!(
        "verified {} graphs: {} positive, {} negative, {} duplicates, {} parse errors ({:.2?})",
        report.verdicts.len(),
        report.verdicts.iter().filter(|v| v.positive()).count(),
        report.verdicts.iter().filter(|v| !v.positive()).count(),
        report.duplicates.len(),
        report.parse_errors.len(),
        wall
    );

    if let Some(path) = &args.manifest {
        let mut m = manifest::Manifest::new("verify", wall);
        m.set("k", args.k);
        m.set("family", &args.family);
        m.set("jobs", args.jobs);
        m.add_input(&args.input)?;
        m.add_counts(&report.counts);
        m.set("all_positive", report.all_positive());
        m.write(path)?;
    }
    Ok(if ok { 0 } else { EXIT_NEGATIVE })
}

fn print_claim_report(r: &ClaimReport, format: ReportFormat) {
    match format {
        ReportFormat::Text => println!("{r}"),
        ReportFormat::Kv => {
            let mut line = format!("claim={} holds={}", r.id, r.holds);
            if let Some([a, b, c, d]) = r.p4 {
                line.push_str(&format!(" p4={a},{b},{c},{d}"));
            }
            if let Some(cex) = &r.counterexample {
                line.push_str(&format!(" cex={:?}", cex.explanation));
                for (name, set) in &cex.sets {
                    line.push_str(&format!(" set.{name}={set}"));
                }
            }
            println!("{line}");
        }
    }
}

fn cmd_check_claims(args: CheckClaimsArgs) -> Result<u8, CliError> {
    let variant: Variant = args.variant.parse()?;
    if args.tables_only {
        let reports = verify_case_table(variant);
        let mut all = true;
        for r in &reports {
            all &= r.holds;
            print_claim_report(r, args.format);
        }
        let forced = reports
            .iter()
            .filter(|r| !r.id.ends_with(".allowed"))
            .count();
        println!(
            "{variant} case table: {} rows, {} forced patterns confirmed, {} allowed",
            reports.len(),
            forced,
            reports.len() - forced
        );
        return Ok(if all { 0 } else { EXIT_NEGATIVE });
    }

    let (Some(k), Some(input)) = (args.k, &args.input) else {
        return Err(CliError::Usage(
            "--k and --input are required unless --tables-only is given".into(),
        ));
    };
    let lines = read_input(input)?;
    let opts = ClaimCheckOptions {
        exhaustive_threshold: args.exhaustive_threshold,
        sample: args.sample,
        seed: args.seed,
    };

    let mut graphs = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => {
                println!("line {}: parse error: {e}", i + 1);
            }
        }
    }

    let mut total = 0usize;
    let mut failures = 0usize;
    let mut precondition_failures = 0usize;
    for (line_no, g) in &graphs {
        match verify_proof_claims(g, k, variant, &opts) {
            Ok(reports) => {
                for r in &reports {
                    total += 1;
                    if !r.holds {
                        failures += 1;
                    }
                    if !r.holds || !args.quiet {
                        print!("line {line_no}: ");
                        print_claim_report(r, args.format);
                    }
                }
            }
            Err(e) => {
                precondition_failures += 1;
                println!("line {line_no}: precondition: {e}");
            }
        }
        if args.lemmas {
            total += 2;
            if let Some((x, y)) = find_lemma1_violation(g, args.lemma1_max_size) {
                failures += 1;
                println!("line {line_no}: lemma1 FAILS: X={x} Y={y}");
            } else if !args.quiet {
                println!(
                    "line {line_no}: lemma1 holds (sizes <= {})",
                    args.lemma1_max_size
                );
            }
            match check_lemma2(g, k) {
                Ok(r) => {
                    if !r.holds {
                        failures += 1;
                    }
                    if !r.holds || !args.quiet {
                        print!("line {line_no}: ");
                        print_claim_report(&r, args.format);
                    }
                }
                Err(e) => {
                    precondition_failures += 1;
                    println!("line {line_no}: lemma2 precondition: {e}");
                }
            }
        }
    }
    println!(
        "{} graphs, {} checks, {} failures, {} precondition failures",
        graphs.len(),
        total,
        failures,
        precondition_failures
    );
    Ok(if failures == 0 && precondition_failures == 0 {
        0
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, CliError> {
    let lines = read_input(&args.input)?;
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g: Graph = match parse_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                println!("line {}: parse error: {e}", i + 1);
                continue;
            }
        };
        if g.n() == 0 {
            println!("line {}: n=0", i + 1);
            continue;
        }
        let chi = chromatic_number(&g);
        let k = args.k.unwrap_or(chi);
        let report = is_k_vertex_critical(&g, k);
        println!(
            "line {}: n={} m={} chi={} omega={} alpha={} {}-critical={}",
            i + 1,
            g.n(),
            g.edge_count(),
            chi,
            clique_number(&g),
            independence_number(&g),
            k,
            report.verdict
        );
    }
    Ok(0)
}

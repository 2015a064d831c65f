//! Implementations behind the CLI subcommands. Each returns `Ok(())` or a
//! [`CliError`] that maps onto the documented exit codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use num::rational::Ratio;
use rayon::prelude::*;

use relgraph::certify::{verify_rel_answer, Problem};
use relgraph::generators::{
    gen_barrier, gen_domset_blowup, gen_ham_robust, BlowupMeta, HamGadgetMeta,
};
use relgraph::graph::{Graph, Instance, Metric};
use relgraph::oracles::{self, OracleError, OracleLimits};
use relgraph::solvers::{self, SolveError, SolveOptions};
use relgraph::{parse_graph, write_graph};

use crate::record::RelRecord;

/// Failure classes carrying the process exit code:
/// 1 verification failure / negative oracle, 2 usage, 3 oracle-cutoff
/// refusal, 4 I/O.
#[derive(Debug)]
pub enum CliError {
    Failed(String),
    /// A negative oracle answer: exit 1 with nothing on stderr (the answer
    /// was already printed).
    Negative,
    Usage(String),
    Cutoff(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) | CliError::Negative => 1,
            CliError::Usage(_) => 2,
            CliError::Cutoff(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Failed(m) | CliError::Usage(m) | CliError::Cutoff(m) | CliError::Io(m) => m,
            CliError::Negative => "",
        }
    }
}

fn io_err(context: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{context}: {e}"))
}

fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| io_err(&format!("reading {}", path.display()), e))?;
    parse_graph(&text).map_err(|e| io_err(&format!("parsing {}", path.display()), e))
}

fn parse_problem(tag: &str) -> Result<Problem, CliError> {
    Problem::from_tag(tag).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown problem '{tag}'; expected one of ham, ds, is, clique, vc, coloring, cliquecover"
        ))
    })
}

fn parse_metric(tag: &str) -> Result<Metric, CliError> {
    Metric::from_tag(tag)
        .ok_or_else(|| CliError::Usage(format!("unknown metric '{tag}'; expected maxdeg or edits")))
}

fn supported_or_usage(problem: Problem, metric: Metric) -> Result<(), CliError> {
    if solvers::is_supported(problem, metric) {
        return Ok(());
    }
    let table = solvers::SUPPORTED
        .iter()
        .map(|(p, m)| format!("{}/{}", p.tag(), m.tag()))
        .collect::<Vec<_>>()
        .join(", ");
    Err(CliError::Usage(format!(
        "no solver for {}/{}; supported pairs: {table}",
        problem.tag(),
        metric.tag()
    )))
}

/// Parses an exact rational from `p/q` or decimal notation (`0.35` means
/// `35/100`).
pub fn parse_rational(s: &str) -> Result<Ratio<u64>, CliError> {
    let bad = || CliError::Usage(format!("malformed rational '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        return Ok(Ratio::new(int * scale + frac, scale));
    }
    let int: u64 = s.parse().map_err(|_| bad())?;
    Ok(Ratio::from_integer(int))
}

fn build_instance(problem: Problem, g: Graph, k: Option<usize>) -> Result<Instance, CliError> {
    if problem.requires_threshold() && k.is_none() {
        return Err(CliError::Usage(format!(
            "problem {} requires --k",
            problem.tag()
        )));
    }
    let k = if problem.requires_threshold() { k } else { None };
    Instance::new(g, k).map_err(|e| CliError::Usage(e.to_string()))
}

fn solve_error(e: SolveError) -> CliError {
    match e {
        SolveError::Oracle(OracleError::CutoffExceeded { n, cutoff }) => CliError::Cutoff(format!(
            "instance needs the exact-oracle fallback but has {n} > {cutoff} vertices"
        )),
        other => CliError::Usage(other.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Problem tag: ham, ds, is, clique, vc, coloring, cliquecover.
    #[arg(long)]
    pub problem: String,
    /// Metric: maxdeg or edits.
    #[arg(long)]
    pub dist: String,
    /// Input graph file (edge list or DIMACS).
    #[arg(long)]
    pub input: PathBuf,
    /// Threshold for the problems that take one.
    #[arg(long)]
    pub k: Option<usize>,
    /// Seed for the randomized planting choices.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let problem = parse_problem(&args.problem)?;
    let metric = parse_metric(&args.dist)?;
    supported_or_usage(problem, metric)?;
    let g = read_graph_file(&args.input)?;
    let inst = build_instance(problem, g, args.k)?;
    let opts = SolveOptions {
        seed: args.seed,
        ..SolveOptions::default()
    };
    let answer = solvers::solve(problem, metric, &inst, &opts).map_err(solve_error)?;
    let record = RelRecord::from_answer(
        problem,
        metric,
        &answer,
        &args.input.display().to_string(),
        args.seed,
    );
    let line = serde_json::to_string(&record).expect("record serializes");
    match &args.output {
        Some(path) => fs::write(path, line + "\n")
            .map_err(|e| io_err(&format!("writing {}", path.display()), e))?,
        None => println!("{line}"),
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
enum KPolicy<'a> {
    Fixed(usize),
    Fraction(Ratio<u64>),
    File(&'a Path),
}

fn parse_k_policy(s: &str) -> Result<KPolicy<'_>, CliError> {
    if let Some(v) = s.strip_prefix("fixed:") {
        return v
            .parse()
            .map(KPolicy::Fixed)
            .map_err(|_| CliError::Usage(format!("malformed k-policy '{s}'")));
    }
    if let Some(v) = s.strip_prefix("fraction:") {
        return parse_rational(v).map(KPolicy::Fraction);
    }
    if let Some(v) = s.strip_prefix("file:") {
        return Ok(KPolicy::File(Path::new(v)));
    }
    Err(CliError::Usage(format!(
        "malformed k-policy '{s}'; expected fixed:<k>, fraction:<p>, or file:<path>"
    )))
}

#[derive(Debug, Args)]
pub struct CurateArgs {
    #[arg(long)]
    pub problem: String,
    #[arg(long)]
    pub dist: String,
    /// Directory of input graph files, processed in sorted name order.
    #[arg(long = "in-dir")]
    pub in_dir: PathBuf,
    /// Output dataset file (JSON lines plus a summary footer).
    #[arg(long)]
    pub out: PathBuf,
    /// Threshold policy: fixed:<k>, fraction:<p> (k = ⌊p·n⌋), or
    /// file:<path> with `<name> <k>` lines.
    #[arg(long = "k-policy")]
    pub k_policy: Option<String>,
    /// Worker threads (defaults to the rayon global pool).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(serde::Serialize)]
struct CurateSummary {
    records: usize,
    positive: usize,
    negative: usize,
    skipped: usize,
    distance_histogram: BTreeMap<u64, usize>,
    max_distance: Option<u64>,
    all_within_budget: bool,
}

pub fn cmd_curate(args: &CurateArgs) -> Result<(), CliError> {
    let problem = parse_problem(&args.problem)?;
    let metric = parse_metric(&args.dist)?;
    supported_or_usage(problem, metric)?;
    let policy = match &args.k_policy {
        Some(s) => Some(parse_k_policy(s)?),
        None => None,
    };
    if problem.requires_threshold() && policy.is_none() {
        return Err(CliError::Usage(format!(
            "problem {} requires --k-policy",
            problem.tag()
        )));
    }
    let k_table: BTreeMap<String, usize> = match policy {
        Some(KPolicy::File(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| io_err(&format!("reading k table {}", path.display()), e))?;
            let mut table = BTreeMap::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let mut it = line.split_whitespace();
                match (it.next(), it.next().and_then(|t| t.parse().ok())) {
                    (Some(name), Some(k)) => {
                        table.insert(name.to_string(), k);
                    }
                    _ => {
                        return Err(CliError::Usage(format!(
                            "malformed k table line: {line}"
                        )))
                    }
                }
            }
            table
        }
        _ => BTreeMap::new(),
    };

    let mut paths: Vec<PathBuf> = fs::read_dir(&args.in_dir)
        .map_err(|e| io_err(&format!("reading directory {}", args.in_dir.display()), e))?
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.path())
        .filter(|p| p.is_file())
        .collect();
    paths.sort();

    let solve_one = |(index, path): (usize, &PathBuf)| -> Result<RelRecord, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let g = parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let k = match policy {
            None => None,
            Some(KPolicy::Fixed(k)) => Some(k),
            Some(KPolicy::Fraction(p)) => {
                let k = (g.n() as u64 * p.numer()) / p.denom();
                Some(k as usize)
            }
            Some(KPolicy::File(_)) => {
                let name = path
                    .file_name()
                    .map(|n| n.to_string_lossy().to_string())
                    .unwrap_or_default();
                Some(*k_table.get(&name).ok_or_else(|| {
                    format!("{}: no threshold in the k table", path.display())
                })?)
            }
        };
        let k = k.map(|k| k.min(g.n()));
        let inst = if problem.requires_threshold() {
            Instance::new(g, k).map_err(|e| e.to_string())?
        } else {
            Instance::without_threshold(g)
        };
        let seed = args.seed.map(|s| s.wrapping_add(index as u64));
        let opts = SolveOptions {
            seed,
            ..SolveOptions::default()
        };
        let answer = solvers::solve(problem, metric, &inst, &opts).map_err(|e| e.to_string())?;
        Ok(RelRecord::from_answer(
            problem,
            metric,
            &answer,
            &path.display().to_string(),
            seed,
        ))
    };

    let indexed: Vec<(usize, &PathBuf)> = paths.iter().enumerate().collect();
    let results: Vec<Result<RelRecord, String>> = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| CliError::Io(format!("thread pool: {e}")))?
            .install(|| indexed.par_iter().map(|x| solve_one(*x)).collect()),
        None => indexed.par_iter().map(|x| solve_one(*x)).collect(),
    };

    let mut out = String::new();
    let mut summary = CurateSummary {
        records: 0,
        positive: 0,
        negative: 0,
        skipped: 0,
        distance_histogram: BTreeMap::new(),
        max_distance: None,
        all_within_budget: true,
    };
    for result in &results {
        match result {
            Ok(record) => {
                summary.records += 1;
                if record.answer == "positive" {
                    summary.positive += 1;
                } else {
                    summary.negative += 1;
                }
                *summary.distance_histogram.entry(record.distance).or_default() += 1;
                summary.max_distance =
                    Some(summary.max_distance.unwrap_or(0).max(record.distance));
                let line = serde_json::to_string(record).expect("record serializes");
                out.push_str(&line);
                out.push('\n');
            }
            Err(msg) => {
                summary.skipped += 1;
                eprintln!("warning: skipped {msg}");
            }
        }
    }
    let footer = serde_json::json!({ "summary": summary });
    let _ = writeln!(out, "{footer}");
    fs::write(&args.out, out).map_err(|e| io_err(&format!("writing {}", args.out.display()), e))?;
    eprintln!(
        "curated {} records ({} positive, {} negative, {} skipped) -> {}",
        summary.records,
        summary.positive,
        summary.negative,
        summary.skipped,
        args.out.display()
    );
    if summary.skipped > 0 {
        return Err(CliError::Io(format!(
            "{} input(s) skipped",
            summary.skipped
        )));
    }
    Ok(())
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Construction: ham-robust, ham-barrier, or domset-blowup.
    #[arg(long)]
    pub reduction: String,
    /// Source graph file.
    #[arg(long)]
    pub source: PathBuf,
    /// Robustness exponent parameter, as an exact rational or decimal.
    #[arg(long)]
    pub beta: String,
    /// Threshold (domset-blowup only).
    #[arg(long)]
    pub k: Option<usize>,
    /// Output prefix: writes <prefix>.graph and <prefix>.meta.
    #[arg(long = "out-prefix")]
    pub out_prefix: PathBuf,
}

/// The two degree-1 terminals of a Hamiltonicity source, smaller one first.
fn find_terminals(h: &Graph) -> Result<(usize, usize), CliError> {
    let leaves: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 1).collect();
    match leaves.as_slice() {
        [s, t] => Ok((*s, *t)),
        _ => Err(CliError::Usage(format!(
            "source must have exactly two degree-1 vertices, found {}",
            leaves.len()
        ))),
    }
}

fn ham_meta_text(reduction: &str, meta: &HamGadgetMeta) -> String {
    let mut out = String::new();
    let (s_prime, t_prime) = meta.terminal_neighbors();
    let _ = writeln!(out, "reduction = {reduction}");
    let _ = writeln!(out, "beta = {}/{}", meta.beta.numer(), meta.beta.denom());
    let _ = writeln!(out, "q = {}", meta.q);
    let _ = writeln!(out, "copies = {}", meta.copies);
    let _ = writeln!(out, "clique_size = {}", meta.clique_size);
    let _ = writeln!(out, "edit_budget = {}", meta.edit_budget);
    let _ = writeln!(out, "n = {}", meta.n());
    let _ = writeln!(out, "nu = {}", meta.source.n());
    let _ = writeln!(out, "source_edges = {}", meta.source.edge_count());
    let _ = writeln!(out, "s = {}", meta.s);
    let _ = writeln!(out, "t = {}", meta.t);
    let _ = writeln!(out, "s_prime = {s_prime}");
    let _ = writeln!(out, "t_prime = {t_prime}");
    let _ = writeln!(out, "junctions = 0..{}", meta.copies - 1);
    let interior: Vec<String> = (0..meta.source.n())
        .filter(|&v| v != meta.s && v != meta.t)
        .map(|v| v.to_string())
        .collect();
    let _ = writeln!(out, "interior = {}", interior.join(" "));
    let inner: Vec<String> = meta
        .source
        .edges()
        .filter(|&(u, v)| u != meta.s && u != meta.t && v != meta.s && v != meta.t)
        .map(|(u, v)| format!("({u},{v})"))
        .collect();
    let _ = writeln!(out, "inner_edges = {}", inner.join(" "));
    let _ = writeln!(
        out,
        "layout = junction vertices first; then per copy, one block of clique_size vertices \
         per interior vertex in listed order, then one connector per inner edge in listed order"
    );
    out
}

fn blowup_meta_text(meta: &BlowupMeta, k: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "reduction = domset-blowup");
    if let Some(beta) = meta.beta {
        let _ = writeln!(out, "beta = {}/{}", beta.numer(), beta.denom());
    }
    let _ = writeln!(out, "q = {}", meta.q);
    let _ = writeln!(out, "edit_budget = {}", meta.edit_budget);
    let _ = writeln!(out, "n = {}", meta.n());
    let _ = writeln!(out, "nu = {}", meta.source.n());
    let _ = writeln!(out, "k = {k}");
    let _ = writeln!(out, "layout = source vertex v becomes clique v*q..(v+1)*q");
    out
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<(), CliError> {
    let beta = parse_rational(&args.beta)?;
    let h = read_graph_file(&args.source)?;
    let (graph, meta_text, q, n) = match args.reduction.as_str() {
        "ham-robust" | "ham-barrier" => {
            let (s, t) = find_terminals(&h)?;
            let built = if args.reduction == "ham-robust" {
                gen_ham_robust(&h, s, t, beta)
            } else {
                gen_barrier(&h, s, t, beta)
            };
            let (g, meta) = built.map_err(|e| CliError::Usage(e.to_string()))?;
            let text = ham_meta_text(&args.reduction, &meta);
            (g, text, meta.q, meta.n())
        }
        "domset-blowup" => {
            let k = args.k.ok_or_else(|| {
                CliError::Usage("domset-blowup requires --k".to_string())
            })?;
            let (inst, meta) =
                gen_domset_blowup(&h, k, beta).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = blowup_meta_text(&meta, k);
            let q = meta.q;
            let n = meta.n();
            (inst.graph, text, q, n)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown reduction '{other}'; expected ham-robust, ham-barrier, or domset-blowup"
            )))
        }
    };
    let graph_path = args.out_prefix.with_extension("graph");
    let meta_path = args.out_prefix.with_extension("meta");
    fs::write(&graph_path, write_graph(&graph))
        .map_err(|e| io_err(&format!("writing {}", graph_path.display()), e))?;
    fs::write(&meta_path, meta_text)
        .map_err(|e| io_err(&format!("writing {}", meta_path.display()), e))?;
    println!("q = {q}");
    println!("n = {n}");
    println!("graph = {}", graph_path.display());
    println!("meta = {}", meta_path.display());
    Ok(())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Dataset file of record lines (non-record lines are skipped).
    #[arg(long)]
    pub record: PathBuf,
    /// Original graph file; defaults to each record's `source` path.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.record)
        .map_err(|e| io_err(&format!("reading {}", args.record.display()), e))?;
    let limits = OracleLimits::default();
    let mut checked = 0usize;
    let mut failures = 0usize;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("line {}: unparsable JSON: {e}", i + 1);
                failures += 1;
                continue;
            }
        };
        if value.get("problem").is_none() {
            continue; // summary footer or other metadata
        }
        let record: RelRecord = match serde_json::from_value(value) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("line {}: malformed record: {e}", i + 1);
                failures += 1;
                continue;
            }
        };
        checked += 1;
        let graph_path = args
            .graph
            .clone()
            .unwrap_or_else(|| PathBuf::from(&record.source));
        let original = read_graph_file(&graph_path)?;
        let outcome = (|| -> Result<(), String> {
            let problem = record.problem()?;
            let metric = record.metric()?;
            let (orig_inst, answer) = record.reconstruct(&original)?;
            let report = verify_rel_answer(problem, &orig_inst, &answer, metric, Some(&limits));
            if let Some(fail) = report.first_failure() {
                return Err(format!("check '{}' failed: {}", fail.name, fail.detail));
            }
            Ok(())
        })();
        match outcome {
            Ok(()) => println!("line {}: ok ({})", i + 1, record.source),
            Err(msg) => {
                failures += 1;
                println!("line {}: FAILED: {msg}", i + 1);
            }
        }
    }
    if failures > 0 {
        Err(CliError::Failed(format!(
            "{failures} of {checked} record(s) failed verification"
        )))
    } else {
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub problem: String,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: Option<usize>,
}

fn cutoff_err(e: OracleError) -> CliError {
    CliError::Cutoff(e.to_string())
}

fn print_set(label: &str, s: &std::collections::BTreeSet<usize>) {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    println!("{label}: {}", items.join(" "));
}

fn print_parts(parts: &[std::collections::BTreeSet<usize>]) {
    for (i, part) in parts.iter().enumerate() {
        let items: Vec<String> = part.iter().map(|v| v.to_string()).collect();
        println!("part {i}: {}", items.join(" "));
    }
}

/// Prints the exact answer. Exit behavior: 0 for positive/optimum queries,
/// 1 for a negative decision, 3 over the cutoff.
pub fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let problem = parse_problem(&args.problem)?;
    let g = read_graph_file(&args.input)?;
    let limits = OracleLimits::default();
    let negative = || CliError::Negative;
    match problem {
        Problem::HamiltonianCycle => match oracles::hamiltonian_cycle(&g, &limits)
            .map_err(cutoff_err)?
        {
            Some(cycle) => {
                let items: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                println!("positive");
                println!("cycle: {}", items.join(" "));
                Ok(())
            }
            None => {
                println!("negative");
                Err(negative())
            }
        },
        Problem::DominatingSet => {
            let ds = oracles::min_dominating_set(&g, &limits).map_err(cutoff_err)?;
            answer_set_problem(args.k, ds.len(), "minimum dominating set", &ds, |k| {
                ds.len() <= k
            })
        }
        Problem::IndependentSet => {
            let mis = oracles::max_independent_set(&g, &limits).map_err(cutoff_err)?;
            answer_set_problem(args.k, mis.len(), "maximum independent set", &mis, |k| {
                mis.len() >= k
            })
        }
        Problem::Clique => {
            let clique = oracles::max_clique(&g, &limits).map_err(cutoff_err)?;
            answer_set_problem(args.k, clique.len(), "maximum clique", &clique, |k| {
                clique.len() >= k
            })
        }
        Problem::VertexCover => {
            let vc = oracles::min_vertex_cover(&g, &limits).map_err(cutoff_err)?;
            answer_set_problem(args.k, vc.len(), "minimum vertex cover", &vc, |k| {
                vc.len() <= k
            })
        }
        Problem::Coloring => {
            let parts = oracles::chromatic_partition(&g, &limits).map_err(cutoff_err)?;
            answer_partition_problem(args.k, "chromatic number", &parts)
        }
        Problem::CliqueCover => {
            let parts = oracles::clique_cover_partition(&g, &limits).map_err(cutoff_err)?;
            answer_partition_problem(args.k, "clique cover number", &parts)
        }
    }
}

fn answer_set_problem(
    k: Option<usize>,
    size: usize,
    label: &str,
    witness: &std::collections::BTreeSet<usize>,
    positive: impl Fn(usize) -> bool,
) -> Result<(), CliError> {
    match k {
        Some(k) if positive(k) => {
            println!("positive");
            print_set(label, witness);
            Ok(())
        }
        Some(_) => {
            println!("negative");
            println!("{label} size: {size}");
            Err(CliError::Negative)
        }
        None => {
            println!("{label} size: {size}");
            print_set(label, witness);
            Ok(())
        }
    }
}

fn answer_partition_problem(
    k: Option<usize>,
    label: &str,
    parts: &[std::collections::BTreeSet<usize>],
) -> Result<(), CliError> {
    match k {
        Some(k) if parts.len() <= k => {
            println!("positive");
            print_parts(parts);
            Ok(())
        }
        Some(_) => {
            println!("negative");
            println!("{label}: {}", parts.len());
            Err(CliError::Negative)
        }
        None => {
            println!("{label}: {}", parts.len());
            print_parts(parts);
            Ok(())
        }
    }
}

//! `ordramsey`: command-line driver for the toolkit.
//!
//! Exit codes: 0 success, 1 domain error (including failed verification),
//! 2 usage error. Every `--out` accepts `-` for standard output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use num_traits::ToPrimitive;
use serde_json::json;
use sha2::{Digest, Sha256};

use ordramsey::constructions::{self, Inner};
use ordramsey::containment::{find_monochromatic_copy, find_ordered_copy};
use ordramsey::embedders::{self, Witness};
use ordramsey::experiments;
use ordramsey::generators::{self, Permutation, TripleSystem};
use ordramsey::hypergraph::{self, TripleColoring};
use ordramsey::lll::{self, BadEventFamily};
use ordramsey::rational;
use ordramsey::solver::{self, Certificate, CheckMode, DecideOptions, EdgeOrder, RamseyQuery, Verification, Verdict};
use ordramsey::stats::{self, GraphStats};
use ordramsey::{EdgeColoring, OrderedGraph};

#[derive(Parser)]
#[command(
    name = "ordramsey",
    version,
    about = "Ordered Ramsey numbers: exact search, constructions, embedders and certificates",
    after_help = "Vertices are labelled 1..n. Color 0 is red, color 1 is blue. All logarithms are base 2."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph, matching, permutation or triple system.
    Gen(GenArgs),
    /// Order-sensitive parameters of a graph, coloring or permutation.
    Stats(StatsArgs),
    /// Look for an ordered copy of a pattern.
    Contain(ContainArgs),
    /// Decide avoidability at fixed N, or find r_< with --find-r.
    Solve(SolveArgs),
    /// Exhaustive check over all colorings (small N only).
    Oracle(OracleArgs),
    /// DIMACS export, or import of a solver assignment.
    Sat(SatArgs),
    /// Re-check a certificate or an embedder witness.
    Verify(VerifyArgs),
    /// Build a lower-bound coloring.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run an upper-bound procedure on a coloring or host graph.
    Embed {
        #[command(subcommand)]
        kind: EmbedKind,
    },
    /// Moser-Tardos resampling for colorings avoiding the bad events.
    Lll(LllArgs),
    /// One Erdős–Rado extraction on a triple coloring.
    ErStep(ErArgs),
    /// Monte Carlo and discrepancy studies.
    Mc {
        #[command(subcommand)]
        kind: McKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    PathPower,
    Complete,
    Multipartite,
    Jk,
    LexProduct,
    RandomMatching,
    VdcMatching,
    JumbledMatching,
    VdcPermutation,
    TightPath3,
    CompleteTriples,
    THypergraph,
    SFamily,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count (path, path-power, complete, random-matching, tight-path3, complete-triples).
    #[arg(long)]
    n: Option<usize>,
    /// Power for path-power; index for jk.
    #[arg(long)]
    k: Option<usize>,
    /// Block count for jumbled-matching.
    #[arg(long)]
    t: Option<usize>,
    /// Exponent for vdc-matching and vdc-permutation.
    #[arg(long)]
    h: Option<u32>,
    /// Part sizes for multipartite, e.g. 2,3,2.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Input graph (t-hypergraph, lex-product outer) or triple system (s-family).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Inner graph for lex-product.
    #[arg(long)]
    inner: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Ordered graph file.
    #[arg(long = "in", conflicts_with_all = ["coloring", "permutation"])]
    input: Option<PathBuf>,
    /// Edge coloring: longest monotone path in each color.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Permutation: exact interval discrepancy.
    #[arg(long)]
    permutation: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ContainArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long, conflicts_with = "coloring")]
    host: Option<PathBuf>,
    #[arg(long, requires = "color")]
    coloring: Option<PathBuf>,
    #[arg(long)]
    color: Option<u8>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Vertex,
}

#[derive(Args)]
struct SearchArgs {
    /// Worker threads (default: ORDRAMSEY_THREADS, else all cores).
    #[arg(long, env = "ORDRAMSEY_THREADS")]
    threads: Option<usize>,
    /// Largest number of edge variables for the built-in search.
    #[arg(long, default_value_t = solver::DEFAULT_CAP_EDGES)]
    cap_edges: usize,
    #[arg(long, value_enum, default_value = "vertex")]
    order: OrderArg,
    /// Rescan whole color classes instead of the incremental check.
    #[arg(long)]
    full_rescan: bool,
    /// Disable forced-color propagation.
    #[arg(long)]
    no_propagate: bool,
}

impl SearchArgs {
    fn options(&self) -> DecideOptions {
        DecideOptions {
            threads: self.threads.filter(|&t| t > 0).unwrap_or_else(solver::default_threads),
            cap_edges: self.cap_edges,
            order: match self.order {
                OrderArg::Lex => EdgeOrder::Lexicographic,
                OrderArg::Vertex => EdgeOrder::VertexIncremental,
            },
            check: if self.full_rescan { CheckMode::FullRescan } else { CheckMode::Incremental },
            propagate: !self.no_propagate,
            ..DecideOptions::default()
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// One pattern per color, in color order. A single target with --q > 2 is repeated.
    #[arg(long = "target", required = true)]
    targets: Vec<PathBuf>,
    /// Number of colors when one target is given.
    #[arg(long, default_value_t = 2)]
    q: usize,
    /// Host size for a single decision.
    #[arg(long = "n", required_unless_present = "find_r", conflicts_with = "find_r")]
    n: Option<usize>,
    /// Search upward (or downward) for r_<.
    #[arg(long)]
    find_r: bool,
    /// First host size tried by --find-r.
    #[arg(long, default_value_t = 2)]
    start: usize,
    /// Certificate file (single decision) or directory (--find-r, default ./certs).
    #[arg(long)]
    emit_cert: Option<PathBuf>,
    /// JSON-lines results ledger used by --find-r.
    #[arg(long, default_value = "ordramsey-ledger.jsonl")]
    ledger: PathBuf,
    /// Search again even when the ledger holds a verified answer.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long = "target", required = true)]
    targets: Vec<PathBuf>,
    #[arg(long, default_value_t = 2)]
    q: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SatArgs {
    #[arg(long = "target", required = true)]
    targets: Vec<PathBuf>,
    #[arg(long)]
    n: usize,
    /// Solver output to turn into a coloring (checked against the targets).
    #[arg(long)]
    import: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "witness")]
    cert: Option<PathBuf>,
    /// Embedder witness; needs --coloring, --red and --blue.
    #[arg(long, requires_all = ["coloring", "red", "blue"])]
    witness: Option<PathBuf>,
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long)]
    red: Option<PathBuf>,
    #[arg(long)]
    blue: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// (n-1)^q vertices, no monochromatic monotone P_n.
    EsPath {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace each vertex of a base coloring by a block of size s.
    Blowup {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        s: usize,
        /// Coloring used inside every block (on s vertices).
        #[arg(long, conflicts_with = "inner_color")]
        inner: Option<PathBuf>,
        /// Constant color inside blocks.
        #[arg(long)]
        inner_color: Option<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterated self blow-up of a base coloring.
    Recursive {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        depth: u32,
        /// Clique order the base must avoid monochromatically.
        #[arg(long)]
        clique: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random blow-up with t blocks of size s; reports whether the matching is avoided.
    RandomBlowup {
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow-up (color 0 inside blocks) of a coloring avoiding h.
    Product {
        #[arg(long)]
        avoiding: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow-up of a two-coloring with red blocks.
    Offdiagonal {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        block: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cap/cup triple coloring of points given as x,y CSV lines.
    Capcup {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reorder a graph so that an embedded copy of h is spread out.
    Spread {
        /// Graph whose edges are read as unordered pairs.
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Images of h's vertices in g, e.g. 1,4,7.
        #[arg(long, value_delimiter = ',', required = true)]
        embedding: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum EmbedKind {
    /// Red monotone path P_m or blue K_n.
    PathClique {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Red matching or blue trivially ordered multipartite graph.
    Multipartite {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        part: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Red matching or blue k-th power of a monotone path.
    Bandwidth {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Copy of h in the host, or 2^s sets of low density.
    Greedy {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        h: PathBuf,
        /// Density threshold, e.g. 1/4.
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex subset of low density with no ordered copy of h.
    SparseSubset {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trivially ordered multipartite graph from dense ordered sets.
    Dense {
        #[arg(long)]
        host: PathBuf,
        /// JSON array of vertex sets.
        #[arg(long)]
        sets: PathBuf,
        /// Part size.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monotone subsequence of length n in an integer sequence.
    EsSequence {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        sequence: Vec<i64>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct HostArgs {
    /// Host graph.
    #[arg(long, conflicts_with = "coloring", required_unless_present = "coloring")]
    host: Option<PathBuf>,
    /// Two-coloring whose red class is the host.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

impl HostArgs {
    fn load(&self) -> CliResult<OrderedGraph> {
        match (&self.host, &self.coloring) {
            (Some(p), _) => read_json(p),
            (None, Some(p)) => Ok(read_json::<EdgeColoring>(p)?.class_graph(ordramsey::RED)?),
            (None, None) => Err(CliError::Usage("give --host or --coloring".into())),
        }
    }
}

#[derive(Args)]
struct LllArgs {
    #[arg(long)]
    m: usize,
    /// Red clique order to avoid.
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "1/4")]
    p_blue: String,
    /// Graphs that must not be entirely red at their labels.
    #[arg(long, num_args = 0..)]
    family: Vec<PathBuf>,
    /// Allow blue triangles.
    #[arg(long)]
    no_blue_triangle_events: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = lll::DEFAULT_RESAMPLE_CAP)]
    max_resamples: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ErArgs {
    /// Triple coloring file.
    #[arg(long, conflicts_with = "random_n", required_unless_present = "random_n")]
    coloring: Option<PathBuf>,
    /// Use a uniformly random triple coloring on this many vertices.
    #[arg(long)]
    random_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum McKind {
    /// Random perfect matchings: are long disjoint intervals always joined?
    Jumbled {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact interval discrepancy of bit-reversal permutations, h in [h-min, h-max].
    Discrepancy {
        #[arg(long, default_value_t = 1)]
        h_min: u32,
        #[arg(long, default_value_t = 7)]
        h_max: u32,
        /// CSV instead of JSON.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Domain(ordramsey::Error),
    Usage(String),
    /// Already reported; exit 1.
    Failed,
}

impl From<ordramsey::Error> for CliError {
    fn from(e: ordramsey::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| ordramsey::Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Domain(ordramsey::Error::Parse(format!("{}: {e}", path.display()))))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        None => print_stdout(&text),
        Some(p) if p.as_os_str() == "-" => print_stdout(&text),
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(ordramsey::Error::from)?;
            }
            fs::write(p, text).map_err(|e| ordramsey::Error::Io(format!("{}: {e}", p.display())).into())
        }
    }
}

fn print_stdout(text: &str) -> CliResult<()> {
    let mut so = std::io::stdout().lock();
    so.write_all(text.as_bytes()).map_err(ordramsey::Error::from)?;
    Ok(())
}

fn emit_json<T: Serialize>(out: Option<&Path>, v: &T) -> CliResult<()> {
    emit(out, &serde_json::to_string_pretty(v).map_err(ordramsey::Error::from)?)
}

fn need<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("this family needs --{flag}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Failed) => ExitCode::from(1),
    }
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Stats(a) => stats_cmd(a),
        Command::Contain(a) => contain(a),
        Command::Solve(a) => solve(a),
        Command::Oracle(a) => {
            let targets = load_targets(&a.targets, a.q)?;
            let unavoidable = solver::brute_force_oracle(&targets, a.n)?;
            println!("{}", if unavoidable { "unavoidable" } else { "avoidable" });
            Ok(())
        }
        Command::Sat(a) => sat(a),
        Command::Verify(a) => verify(a),
        Command::Construct { kind } => construct(kind),
        Command::Embed { kind } => embed(kind),
        Command::Lll(a) => lll_cmd(a),
        Command::ErStep(a) => er_step(a),
        Command::Mc { kind } => mc(kind),
    }
}

fn gen(a: GenArgs) -> CliResult<()> {
    let out = a.out.as_deref();
    let graph = |g: OrderedGraph| emit_json(out, &g);
    match a.family {
        Family::Path => graph(generators::monotone_path(need(a.n, "n")?)),
        Family::PathPower => graph(generators::path_power(need(a.n, "n")?, need(a.k, "k")?)),
        Family::Complete => graph(generators::complete(need(a.n, "n")?)),
        Family::Multipartite => {
            if a.parts.is_empty() {
                return Err(CliError::Usage("multipartite needs --parts".into()));
            }
            graph(generators::complete_multipartite_trivial(&a.parts))
        }
        Family::Jk => graph(generators::j_k(need(a.k, "k")?)),
        Family::LexProduct => {
            let g: OrderedGraph = read_json(&need(a.input, "in")?)?;
            let h: OrderedGraph = read_json(&need(a.inner, "inner")?)?;
            graph(generators::lex_product(&g, &h))
        }
        Family::RandomMatching => graph(generators::random_matching(need(a.n, "n")?, a.seed)?),
        Family::VdcMatching => graph(generators::vdc_matching(need(a.h, "h")?)?),
        Family::JumbledMatching => graph(generators::jumbled_matching(need(a.t, "t")?)?),
        Family::VdcPermutation => emit_json::<Permutation>(out, &generators::vdc_permutation(need(a.h, "h")?)?),
        Family::TightPath3 => emit_json(out, &generators::tight_path_3(need(a.n, "n")?)),
        Family::CompleteTriples => emit_json(out, &generators::complete_triple_system(need(a.n, "n")?)),
        Family::THypergraph => {
            let g: OrderedGraph = read_json(&need(a.input, "in")?)?;
            emit_json(out, &generators::t_hypergraph(&g))
        }
        Family::SFamily => {
            let hs: TripleSystem = read_json(&need(a.input, "in")?)?;
            emit_json(out, &generators::s_family(&hs)?)
        }
    }
}

fn stats_cmd(a: StatsArgs) -> CliResult<()> {
    let out = a.out.as_deref();
    if let Some(p) = &a.input {
        let g: OrderedGraph = read_json(p)?;
        let mut v = serde_json::to_value(GraphStats::of(&g)).map_err(ordramsey::Error::from)?;
        if g.is_perfect_matching() && g.n() <= 400 {
            v["jumbled"] = json!(generators::is_jumbled(&g)?);
        }
        return emit_json(out, &v);
    }
    if let Some(p) = &a.coloring {
        let c: EdgeColoring = read_json(p)?;
        let paths = (0..c.q())
            .map(|col| stats::longest_monotone_path(&c, col))
            .collect::<ordramsey::Result<Vec<_>>>()?;
        return emit_json(out, &json!({ "N": c.n(), "q": c.q(), "longest_monotone_path": paths }));
    }
    if let Some(p) = &a.permutation {
        let perm: Permutation = read_json(p)?;
        let d = generators::interval_discrepancy(&perm)?;
        return emit_json(out, &json!({ "n": perm.n(), "discrepancy": rational::to_string(&d) }));
    }
    Err(CliError::Usage("give --in, --coloring or --permutation".into()))
}

fn contain(a: ContainArgs) -> CliResult<()> {
    let pattern: OrderedGraph = read_json(&a.pattern)?;
    let found = match (&a.host, &a.coloring, a.color) {
        (Some(h), _, _) => find_ordered_copy(&read_json(h)?, &pattern)?,
        (None, Some(c), Some(color)) => find_monochromatic_copy(&read_json(c)?, color, &pattern)?,
        _ => return Err(CliError::Usage("give --host, or --coloring with --color".into())),
    };
    emit_json(a.out.as_deref(), &json!({ "found": found.is_some(), "embedding": found.map(|e| e.image) }))
}

fn load_targets(paths: &[PathBuf], q: usize) -> CliResult<Vec<OrderedGraph>> {
    let targets = paths.iter().map(|p| read_json(p)).collect::<CliResult<Vec<OrderedGraph>>>()?;
    if targets.len() == 1 {
        if q < 2 {
            return Err(CliError::Usage("--q must be at least 2".into()));
        }
        return Ok(vec![targets[0].clone(); q]);
    }
    Ok(targets)
}

#[derive(Debug, Serialize, Deserialize)]
struct LedgerRecord {
    query_hash: String,
    targets: Vec<OrderedGraph>,
    value: Option<usize>,
    lower: usize,
    upper: Option<usize>,
    certificates: Vec<String>,
}

fn query_hash(targets: &[OrderedGraph]) -> String {
    let canon = serde_json::to_string(targets).expect("graphs serialize");
    hex::encode(Sha256::digest(canon.as_bytes()))
}

fn read_ledger(path: &Path) -> CliResult<Vec<LedgerRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(path).map_err(ordramsey::Error::from)?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(k, l)| {
            serde_json::from_str(l).map_err(|e| {
                CliError::Domain(ordramsey::Error::Parse(format!("{} line {}: {e}", path.display(), k + 1)))
            })
        })
        .collect()
}

/// Both stored certificates re-verify and bracket the stored value.
fn cached_value_holds(rec: &LedgerRecord) -> bool {
    let Some(value) = rec.value else { return false };
    let mut saw_unavoidable = false;
    for p in &rec.certificates {
        let Ok(text) = fs::read_to_string(p) else { return false };
        let Ok(cert) = Certificate::from_json(&text) else { return false };
        if cert.query.targets != rec.targets {
            return false;
        }
        match solver::verify_certificate_value(&cert) {
            Ok(Verification::Valid | Verification::SearchTrusted) => {}
            _ => return false,
        }
        match cert.verdict {
            Verdict::Avoidable if cert.query.n + 1 != value => return false,
            Verdict::Unavoidable if cert.query.n != value => return false,
            Verdict::Unavoidable => saw_unavoidable = true,
            Verdict::Avoidable => {}
        }
    }
    saw_unavoidable && (value == 1 || rec.certificates.len() == 2)
}

fn solve(a: SolveArgs) -> CliResult<()> {
    let targets = load_targets(&a.targets, a.q)?;
    let opts = a.search.options();
    if !a.find_r {
        let n = a.n.expect("clap requires --n without --find-r");
        let cert = solver::decide_with(&RamseyQuery::new(targets, n)?, &opts)?;
        println!("{}", verdict_word(cert.verdict));
        if let Some(p) = &a.emit_cert {
            emit(Some(p), &cert.to_json())?;
        }
        return Ok(());
    }
    let hash = query_hash(&targets);
    if !a.force {
        let cached = read_ledger(&a.ledger)?.into_iter().rev().find(|r| r.query_hash == hash && r.value.is_some());
        if let Some(rec) = cached {
            if cached_value_holds(&rec) {
                println!("r = {} (cached, certificates re-verified)", rec.value.expect("checked"));
                for p in &rec.certificates {
                    println!("certificate: {p}");
                }
                return Ok(());
            }
            eprintln!("cached certificates for this query did not verify; searching again");
        }
    }
    let r = solver::ramsey_number_with(&targets, a.start, &opts)?;
    let dir = a.emit_cert.clone().unwrap_or_else(|| PathBuf::from("certs"));
    fs::create_dir_all(&dir).map_err(ordramsey::Error::from)?;
    let mut paths = Vec::new();
    for cert in &r.certificates {
        let p = dir.join(format!("{}-N{}-{}.json", &hash[..16], cert.query.n, verdict_word(cert.verdict)));
        fs::write(&p, cert.to_json()).map_err(ordramsey::Error::from)?;
        paths.push(p.display().to_string());
    }
    match r.value {
        Some(v) => println!("r = {v}"),
        None => println!("r >= {} (edge cap reached before closure; upper bound unknown)", r.lower),
    }
    for p in &paths {
        println!("certificate: {p}");
    }
    let rec = LedgerRecord { query_hash: hash, targets, value: r.value, lower: r.lower, upper: r.upper, certificates: paths };
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(&a.ledger)
        .map_err(ordramsey::Error::from)?;
    writeln!(f, "{}", serde_json::to_string(&rec).map_err(ordramsey::Error::from)?).map_err(ordramsey::Error::from)?;
    Ok(())
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Avoidable => "avoidable",
        Verdict::Unavoidable => "unavoidable",
    }
}

fn sat(a: SatArgs) -> CliResult<()> {
    let targets = load_targets(&a.targets, 2)?;
    let query = RamseyQuery::new(targets, a.n)?;
    match &a.import {
        None => emit(a.out.as_deref(), &solver::sat_cnf(&query)?.to_dimacs()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(ordramsey::Error::from)?;
            let c = solver::import_assignment(&text, a.n)?;
            for (color, t) in query.targets.iter().enumerate() {
                if let Some(e) = find_monochromatic_copy(&c, color as u8, t)? {
                    eprintln!("imported coloring has target {color} in color {color} at {:?}", e.image);
                    return Err(CliError::Failed);
                }
            }
            emit_json(a.out.as_deref(), &c)
        }
    }
}

fn verify(a: VerifyArgs) -> CliResult<()> {
    if let Some(p) = &a.cert {
        return match solver::verify_certificate(p)? {
            Verification::Valid => {
                println!("valid");
                Ok(())
            }
            Verification::SearchTrusted => {
                println!("search-trusted");
                Ok(())
            }
            Verification::Invalid(why) => {
                println!("invalid: {why}");
                Err(CliError::Failed)
            }
        };
    }
    if let Some(p) = &a.witness {
        let w: Witness = read_json(p)?;
        let c: EdgeColoring = read_json(a.coloring.as_deref().expect("required by clap"))?;
        let red: OrderedGraph = read_json(a.red.as_deref().expect("required by clap"))?;
        let blue: OrderedGraph = read_json(a.blue.as_deref().expect("required by clap"))?;
        return match w.verify(&c, &red, &blue) {
            Ok(()) => {
                println!("valid");
                Ok(())
            }
            Err(e) => {
                println!("invalid: {e}");
                Err(CliError::Failed)
            }
        };
    }
    Err(CliError::Usage("give --cert or --witness".into()))
}

fn construct(kind: ConstructKind) -> CliResult<()> {
    match kind {
        ConstructKind::EsPath { n, q, out } => emit_json(out.as_deref(), &constructions::es_path_coloring(n, q)?),
        ConstructKind::Blowup { base, s, inner, inner_color, out } => {
            let base: EdgeColoring = read_json(&base)?;
            let c = match (inner, inner_color) {
                (Some(p), _) => {
                    let inner: EdgeColoring = read_json(&p)?;
                    constructions::blowup_coloring(&base, s, Inner::Coloring(&inner))?
                }
                (None, Some(col)) => constructions::blowup_coloring(&base, s, Inner::Constant(col))?,
                (None, None) => return Err(CliError::Usage("give --inner or --inner-color".into())),
            };
            emit_json(out.as_deref(), &c)
        }
        ConstructKind::Recursive { base, depth, clique, out } => {
            let base: EdgeColoring = read_json(&base)?;
            emit_json(out.as_deref(), &constructions::recursive_matching_lb(&base, depth, clique)?)
        }
        ConstructKind::RandomBlowup { matching, s, t, seed, out } => {
            let m: OrderedGraph = read_json(&matching)?;
            let (c, avoids) = constructions::random_blowup_lb(&m, s, t, seed)?;
            eprintln!("matching avoided in both colors: {avoids}");
            emit_json(out.as_deref(), &c)
        }
        ConstructKind::Product { avoiding, h, s, out } => {
            let c: EdgeColoring = read_json(&avoiding)?;
            let h: OrderedGraph = read_json(&h)?;
            emit_json(out.as_deref(), &constructions::product_lb_coloring(&c, &h, s)?)
        }
        ConstructKind::Offdiagonal { coloring, block, out } => {
            let c: EdgeColoring = read_json(&coloring)?;
            emit_json(out.as_deref(), &constructions::offdiagonal_assembly(&c, block)?)
        }
        ConstructKind::Capcup { points, out } => {
            let text = fs::read_to_string(&points).map_err(ordramsey::Error::from)?;
            let pts = hypergraph::parse_points_csv(&text)?;
            emit_json(out.as_deref(), &hypergraph::capcup_coloring(&pts)?)
        }
        ConstructKind::Spread { g, h, embedding, out } => {
            let g: OrderedGraph = read_json(&g)?;
            let h: OrderedGraph = read_json(&h)?;
            emit_json(out.as_deref(), &constructions::spread_ordering(g.n(), g.edges(), &h, &embedding)?)
        }
    }
}

fn embed(kind: EmbedKind) -> CliResult<()> {
    match kind {
        EmbedKind::PathClique { coloring, m, n, out } => {
            let c: EdgeColoring = read_json(&coloring)?;
            emit_json(out.as_deref(), &embedders::path_vs_clique(&c, m, n)?)
        }
        EmbedKind::Multipartite { coloring, matching, chi, part, out } => {
            let c: EdgeColoring = read_json(&coloring)?;
            let m: OrderedGraph = read_json(&matching)?;
            emit_json(out.as_deref(), &embedders::match_vs_multipartite(&c, &m, chi, part)?)
        }
        EmbedKind::Bandwidth { coloring, matching, k, out } => {
            let c: EdgeColoring = read_json(&coloring)?;
            let m: OrderedGraph = read_json(&matching)?;
            emit_json(out.as_deref(), &embedders::bandwidth_embed(&c, &m, k)?)
        }
        EmbedKind::Greedy { host, h, c, s, out } => {
            let host = host.load()?;
            let h: OrderedGraph = read_json(&h)?;
            let c = rational::parse(&c)?;
            emit_json(out.as_deref(), &embedders::greedy_embed_or_sparse(&host, &h, &c, s)?)
        }
        EmbedKind::SparseSubset { host, h, c, seed, out } => {
            let host = host.load()?;
            let h: OrderedGraph = read_json(&h)?;
            let c = rational::parse(&c)?;
            let r = embedders::sparse_subset(&host, &h, &c, seed)?;
            emit_json(
                out.as_deref(),
                &json!({
                    "vertices": r.vertices,
                    "density": rational::to_string(&r.density),
                    "sets": r.sets,
                    "per_set": r.per_set,
                    "samples": r.samples,
                    "size_requirement_met": r.size_requirement_met,
                }),
            )
        }
        EmbedKind::Dense { host, sets, n, out } => {
            let host: OrderedGraph = read_json(&host)?;
            let sets: Vec<Vec<usize>> = read_json(&sets)?;
            let e = embedders::embed_multipartite_dense(&host, &sets, n)?;
            emit_json(out.as_deref(), &json!({ "embedding": e.image }))
        }
        EmbedKind::EsSequence { sequence, n, out } => {
            let w = embedders::erdos_szekeres_sequence_witness(&sequence, n)?;
            emit_json(out.as_deref(), &json!({ "increasing": w.increasing, "positions": w.positions }))
        }
    }
}

fn lll_cmd(a: LllArgs) -> CliResult<()> {
    let p = rational::parse(&a.p_blue)?;
    let p_blue = match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(num), Some(den)) => (num, den),
        _ => return Err(CliError::Usage(format!("--p-blue {} is not a probability", a.p_blue))),
    };
    let red_family = a.family.iter().map(|f| read_json(f)).collect::<CliResult<Vec<OrderedGraph>>>()?;
    let spec = BadEventFamily {
        m: a.m,
        blue_triangle: !a.no_blue_triangle_events,
        red_family,
        red_clique_order: a.k,
        p_blue,
        seed: a.seed,
    };
    let outcome = lll::moser_tardos_coloring_capped(&spec, a.max_resamples)?;
    lll::verify_lll(&spec, &outcome.coloring)?;
    emit_json(
        a.out.as_deref(),
        &json!({
            "coloring": outcome.coloring,
            "stats": { "resamples": outcome.resamples, "per_class_counts": outcome.per_class },
        }),
    )
}

fn er_step(a: ErArgs) -> CliResult<()> {
    let c: TripleColoring = match (&a.coloring, a.random_n) {
        (Some(p), _) => read_json(p)?,
        (None, Some(n)) => {
            let mut rng = generators::seeded_rng(a.seed);
            TripleColoring::from_fn(n, 2, |_, _, _| rng.gen_range(0..2))?
        }
        (None, None) => return Err(CliError::Usage("give --coloring or --random-n".into())),
    };
    let er = hypergraph::erdos_rado_step(&c, a.t)?;
    hypergraph::check_erdos_rado(&c, &er)?;
    emit_json(
        a.out.as_deref(),
        &json!({ "vertices": er.vertices, "chi": er.chi, "sizes": er.sizes, "verified": true }),
    )
}

fn mc(kind: McKind) -> CliResult<()> {
    match kind {
        McKind::Jumbled { n, trials, seed, out } => emit_json(out.as_deref(), &experiments::mc_jumbled(n, trials, seed)?),
        McKind::Discrepancy { h_min, h_max, csv, out } => {
            let r = experiments::mc_discrepancy(h_min..=h_max)?;
            if !csv {
                return emit_json(out.as_deref(), &r);
            }
            let mut text = String::from("h,n,discrepancy,ratio\n");
            for row in &r.rows {
                text += &format!(
                    "{},{},{},{}\n",
                    row.h,
                    row.n,
                    rational::to_string(&row.discrepancy),
                    rational::to_string(&row.ratio)
                );
            }
            text += &format!("# c_hat={} monotone={}\n", rational::to_string(&r.c_hat), r.monotone);
            emit(out.as_deref(), &text)
        }
    }
}


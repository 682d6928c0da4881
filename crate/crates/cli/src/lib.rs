//! The `pqcolor` command line.
//!
//! Every command writes one document to standard output (or `--out`).
//! Colors are printed in their canonical encoding, tables as TSV, and
//! everything else as a JSON report whose first field is
//! `"schema_version": "1"`.
//!
//! Exit codes: 0 on success, 2 when a verification finds a violation, 1 on any
//! error or refusal.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use pqcolor::analysis::{
    analyze_subset, bound, census::census_cost, choose_params, count_colors, exact_min_colors, grid_counterexample,
    injective_index, lower_bound_chain, sample_colors, three_cube_counterexample,
};
use pqcolor::colorings::{color, color_h_variant, encode, eta, h, mubayi_color, xi, xi_h, SymbolVector};
use pqcolor::table::{BlockVariant, ColorTable, Coloring, Universe};
use pqcolor::vectors::{BitVector, ResolutionChain};
use pqcolor::verifier::{
    binomial, exhaustive_count, verify_pq, verify_strong, witness_detail, Target, VerifyOptions, DEFAULT_BUDGET,
};

pub const SCHEMA_VERSION: &str = "1";

/// Exit code for a completed run that found violations.
pub const EXIT_VIOLATION: i32 = 2;
/// Exit code for errors and refusals.
pub const EXIT_ERROR: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "pqcolor", version, about = "Block-resolution edge colorings and (p,q)-coloring verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical encoding of one color.
    Color(ColorArgs),
    /// Write the color of every pair of {0,1}^alpha as TSV.
    Table(TableArgs),
    /// Check the (p,q) or strong property over all or sampled subsets.
    Verify(VerifyArgs),
    /// Count the distinct colors on a vertex set.
    Census(CensusArgs),
    /// Decompose the colors inside one vertex subset.
    Subset(SubsetArgs),
    /// Evaluate the color-count bound for K_n.
    Bounds(BoundsArgs),
    /// Choose beta, alpha and the resolution chain for K_n.
    Params(ParamsArgs),
    /// Compute f(n,p,q) exactly for tiny n.
    Oracle(OracleArgs),
    /// Iterate the lower-bound recursion from a known value.
    Chain(ChainArgs),
    /// Mubayi's coloring on a grid, with the (p,q) statement it breaks.
    Counterexample(CounterexampleArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ColorVariant {
    Full,
    FullH,
    Eta,
    H,
    Xi,
    XiH,
    Mubayi,
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// Resolution chain, e.g. 1,2,4.
    #[arg(long)]
    params: Option<ResolutionChain>,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    #[arg(long, value_enum, default_value = "full")]
    variant: ColorVariant,
    /// Resolution level for eta, h, xi and xi-h.
    #[arg(long)]
    d: Option<usize>,
    /// Alphabet size for the mubayi variant.
    #[arg(long)]
    m: Option<u32>,
    /// Dimension for the mubayi variant.
    #[arg(long)]
    t: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BlockKind {
    Eta,
    H,
}

impl From<BlockKind> for BlockVariant {
    fn from(k: BlockKind) -> Self {
        match k {
            BlockKind::Eta => BlockVariant::Eta,
            BlockKind::H => BlockVariant::H,
        }
    }
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    params: ResolutionChain,
    #[arg(long)]
    alpha: usize,
    #[arg(long, value_enum, default_value = "eta")]
    variant: BlockKind,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Which coloring acts on which vertex set.
#[derive(Args, Debug)]
struct SourceArgs {
    /// Block coloring with this resolution chain.
    #[arg(long)]
    params: Option<ResolutionChain>,
    /// Mubayi's coloring on [m]^t, given as m,t.
    #[arg(long, value_parser = parse_mt)]
    mubayi: Option<(u32, usize)>,
    /// Mubayi's coloring on the grid {1..2^s}^s.
    #[arg(long)]
    grid: Option<u32>,
    /// Block variant for --params.
    #[arg(long, value_enum, default_value = "eta")]
    variant: BlockKind,
    /// Full {0,1}^alpha.
    #[arg(long)]
    alpha: Option<usize>,
    /// One vertex per line: bitstrings, or comma lists with --mubayi.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeKind {
    Exhaustive,
    Sampled,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Check every subset S with 2 <= |S| <= SMAX spans >= |S|-1 colors.
    #[arg(long)]
    strong: Option<usize>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Maximum subset evaluations.
    #[arg(long, env = "PQCOLOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Stop after this many violations.
    #[arg(long, default_value_t = 1)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Estimate from this many random pairs instead of counting exactly.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SubsetArgs {
    #[arg(long)]
    params: ResolutionChain,
    #[arg(long)]
    d: usize,
    /// Comma-separated bitstrings.
    #[arg(long, value_delimiter = ',', required = true)]
    vertices: Vec<BitVector>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: BigUint,
    #[arg(long)]
    p: usize,
    /// Also count the colors of c_p on {0,1}^alpha exactly.
    #[arg(long)]
    census: bool,
}

#[derive(Args, Debug)]
struct ParamsArgs {
    #[arg(long)]
    n: BigUint,
    #[arg(long)]
    p: usize,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

#[derive(Args, Debug)]
struct ChainArgs {
    /// Known bound f(n,p,q) >= k, given as n,p,q,k.
    #[arg(long, value_parser = parse_base)]
    base: Base,
    #[arg(long, default_value_t = 1)]
    steps: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CounterexampleArgs {
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    three_cube: bool,
}

#[derive(Clone, Debug)]
struct Base {
    n: BigUint,
    p: usize,
    q: usize,
    k: BigUint,
}

fn parse_mt(s: &str) -> Result<(u32, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [m, t] = parts[..] else {
        return Err(format!("expected m,t, got {s:?}"));
    };
    let m = m.trim().parse().map_err(|_| format!("bad m in {s:?}"))?;
    let t = t.trim().parse().map_err(|_| format!("bad t in {s:?}"))?;
    Ok((m, t))
}

fn parse_base(s: &str) -> Result<Base, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n, p, q, k] = parts[..] else {
        return Err(format!("expected n,p,q,k, got {s:?}"));
    };
    let bad = |what: &str| format!("bad {what} in {s:?}");
    Ok(Base {
        n: n.parse().map_err(|_| bad("n"))?,
        p: p.parse().map_err(|_| bad("p"))?,
        q: q.parse().map_err(|_| bad("q"))?,
        k: k.parse().map_err(|_| bad("k"))?,
    })
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

type CmdResult = Result<(i32, String), String>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return Outcome::ok(e.to_string()),
        Err(e) => return Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: e.to_string() },
    };
    let result = match cli.command {
        Command::Color(a) => cmd_color(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Census(a) => cmd_census(a),
        Command::Subset(a) => cmd_subset(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Params(a) => cmd_params(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Chain(a) => cmd_chain(a),
        Command::Counterexample(a) => cmd_counterexample(a),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(msg) => Outcome::error(msg),
    }
}

#[derive(Serialize)]
struct Document<T: Serialize> {
    schema_version: &'static str,
    command: &'static str,
    #[serde(flatten)]
    body: T,
}

fn document<T: Serialize>(command: &'static str, body: T) -> Result<String, String> {
    let doc = Document { schema_version: SCHEMA_VERSION, command, body };
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}

/// Writes to `out` when given; returns what goes to standard output.
fn emit(text: String, out: Option<&Path>) -> Result<String, String> {
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn flag_err(flag: &str) -> impl Fn(pqcolor::Error) -> String + '_ {
    move |e| format!("invalid {flag}: {e}")
}

fn cmd_color(a: ColorArgs) -> CmdResult {
    if a.variant == ColorVariant::Mubayi {
        let m = a.m.ok_or("--variant mubayi needs --m")?;
        let v = SymbolVector::parse(m, &a.v).map_err(flag_err("--v"))?;
        let w = SymbolVector::parse(m, &a.w).map_err(flag_err("--w"))?;
        if let Some(t) = a.t {
            for (flag, x) in [("--v", &v), ("--w", &w)] {
                if x.symbols().len() != t {
                    return Err(format!("invalid {flag}: expected {t} symbols, got {}", x.symbols().len()));
                }
            }
        }
        let c = mubayi_color(&v, &w).map_err(|e| e.to_string())?;
        return Ok((0, format!("{}\n", encode(&c))));
    }
    let chain = a.params.ok_or("--params is required for block colorings")?;
    let v: BitVector = a.v.parse().map_err(flag_err("--v"))?;
    let w: BitVector = a.w.parse().map_err(flag_err("--w"))?;
    let name = a.variant.to_possible_value().expect("no skipped variants");
    let level = || a.d.ok_or_else(|| format!("--variant {} needs --d", name.get_name()));
    let code = match a.variant {
        ColorVariant::Full => color(&v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::FullH => color_h_variant(&v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::Eta => eta(level()?, &v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::H => h(level()?, &v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::Xi => xi(level()?, &v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::XiH => xi_h(level()?, &v, &w, &chain).map(|c| encode(&c)),
        ColorVariant::Mubayi => unreachable!(),
    }
    .map_err(|e| e.to_string())?;
    Ok((0, format!("{code}\n")))
}

fn cmd_table(a: TableArgs) -> CmdResult {
    let table = ColorTable::block_full(a.alpha, &a.params, a.variant.into()).map_err(|e| e.to_string())?;
    Ok((0, emit(table.to_tsv(), a.out.as_deref())?))
}

fn read_lines(path: &Path) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read --file {}: {e}", path.display()))?;
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from).collect())
}

fn resolve(src: &SourceArgs) -> Result<(Coloring, Universe), String> {
    let chosen = [src.params.is_some(), src.mubayi.is_some(), src.grid.is_some()];
    if chosen.iter().filter(|&&b| b).count() != 1 {
        return Err("give exactly one of --params, --mubayi, --grid".into());
    }
    if src.alpha.is_some() && src.file.is_some() {
        return Err("--alpha and --file cannot be combined".into());
    }
    if let Some(chain) = &src.params {
        let coloring = Coloring::Block { chain: chain.clone(), variant: src.variant.into() };
        let universe = match (&src.alpha, &src.file) {
            (Some(alpha), None) => Universe::AllBinary(*alpha),
            (None, Some(path)) => Universe::Binary(
                read_lines(path)?.iter().map(|l| l.parse().map_err(flag_err("--file"))).collect::<Result<_, _>>()?,
            ),
            _ => return Err("--params needs a vertex set: --alpha or --file".into()),
        };
        return Ok((coloring, universe));
    }
    if let Some((m, t)) = src.mubayi {
        if src.alpha.is_some() {
            return Err("--alpha cannot be combined with --mubayi".into());
        }
        let universe = match &src.file {
            None => Universe::AllSymbols { m, t },
            Some(path) => {
                let vs: Vec<SymbolVector> = read_lines(path)?
                    .iter()
                    .map(|l| SymbolVector::parse(m, l).map_err(flag_err("--file")))
                    .collect::<Result<_, _>>()?;
                if let Some(v) = vs.iter().find(|v| v.symbols().len() != t) {
                    return Err(format!("invalid --file: {v} is not in [{m}]^{t}"));
                }
                Universe::Symbols(vs)
            }
        };
        return Ok((Coloring::Mubayi, universe));
    }
    let s = src.grid.expect("one source is set");
    if src.alpha.is_some() || src.file.is_some() {
        return Err("--grid cannot be combined with --alpha or --file".into());
    }
    if !(1..=4).contains(&s) {
        return Err(format!("invalid --grid: need 1 <= s <= 4, got {s}"));
    }
    Ok((Coloring::Mubayi, Universe::AllSymbols { m: 1 << s, t: s as usize }))
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| format!("cannot start workers: {e}"))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Serialize)]
struct VerifyBody {
    passed: bool,
    #[serde(flatten)]
    report: pqcolor::verifier::VerificationReport,
    witness: Option<pqcolor::verifier::WitnessDetail>,
}

fn check_target(a: &VerifyArgs) -> Result<Target, String> {
    match (a.p, a.q, a.strong) {
        (Some(p), Some(q), None) => {
            if p < 2 || q < 1 || q as u128 > binomial(p as u64, 2) {
                return Err(format!("invalid --p/--q: need p >= 2 and 1 <= q <= C(p,2), got p={p}, q={q}"));
            }
            Ok(Target::Pq { p, q })
        }
        (None, None, Some(smax)) if smax >= 2 => Ok(Target::Strong { smax }),
        (None, None, Some(smax)) => Err(format!("invalid --strong: need smax >= 2, got {smax}")),
        _ => Err("give either --p and --q, or --strong".into()),
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let (coloring, universe) = resolve(&a.source)?;
    let target = check_target(&a)?;
    let opts = match a.mode {
        ModeKind::Exhaustive => VerifyOptions::exhaustive(),
        ModeKind::Sampled => VerifyOptions::sampled(a.seed, a.samples),
    };
    let opts = VerifyOptions { budget: a.budget, violation_cap: a.cap, ..opts };
    if a.cap == 0 {
        return Err("invalid --cap: must be at least 1".into());
    }
    let n = universe.size().ok_or_else(|| format!("{universe} is too large to tabulate"))?;
    let work = match a.mode {
        ModeKind::Exhaustive => exhaustive_count(n as usize, target),
        ModeKind::Sampled => a.samples as u128,
    };
    if work > a.budget as u128 {
        return Err(format!(
            "needs {work} subset evaluations, budget is {} (raise --budget or use --mode sampled)",
            a.budget
        ));
    }
    let report = with_workers(a.source.workers, || -> Result<_, pqcolor::Error> {
        let table = ColorTable::build(&coloring, &universe)?;
        let report = match target {
            Target::Pq { p, q } => verify_pq(&table, p, q, &opts)?,
            Target::Strong { smax } => verify_strong(&table, smax, &opts)?,
        };
        let witness = match report.violations.first() {
            Some(v) => Some(witness_detail(&table, &v.subset)?),
            None => None,
        };
        Ok((report.describe(coloring.to_string(), universe.to_string()), witness))
    })?
    .map_err(|e| e.to_string())?;
    let (report, witness) = report;
    let code = if report.passed() { 0 } else { EXIT_VIOLATION };
    let body = VerifyBody { passed: report.passed(), report, witness };
    Ok((code, emit(document("verify", body)?, a.out.as_deref())?))
}

fn cmd_census(a: CensusArgs) -> CmdResult {
    let (coloring, universe) = resolve(&a.source)?;
    let census = with_workers(a.source.workers, || match a.samples {
        Some(samples) => sample_colors(&coloring, &universe, a.seed, samples),
        None => count_colors(&coloring, &universe),
    })?
    .map_err(|e| e.to_string())?;
    Ok((0, emit(document("census", census)?, a.out.as_deref())?))
}

#[derive(Serialize)]
struct Fiber {
    prefix: String,
    members: Vec<String>,
}

#[derive(Serialize)]
struct EmergingPair {
    pair: String,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SubsetBody {
    d: usize,
    alpha: usize,
    alpha_d: usize,
    fibers: Vec<Fiber>,
    lambda_inherited: Vec<String>,
    lambda_emerging: Vec<String>,
    inherited: Vec<String>,
    emerging: Vec<EmergingPair>,
    prefix_colors: Vec<String>,
    invariant_failures: Vec<String>,
    injective_index: Option<usize>,
    index_premise: bool,
}

fn cmd_subset(a: SubsetArgs) -> CmdResult {
    let an = analyze_subset(&a.vertices, a.d, &a.params).map_err(|e| e.to_string())?;
    let index = if a.params.p() >= 1 && a.vertices[0].len() > a.params.r(a.params.p()) {
        Some(injective_index(&a.vertices, &a.params).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let body = SubsetBody {
        d: an.d,
        alpha: an.alpha,
        alpha_d: an.alpha_d,
        fibers: an
            .fibers
            .iter()
            .map(|(k, t)| Fiber { prefix: k.to_string(), members: t.iter().map(|v| v.to_string()).collect() })
            .collect(),
        lambda_inherited: an.lambda_i.iter().map(encode).collect(),
        lambda_emerging: an.lambda_e.iter().map(encode).collect(),
        inherited: an.c_i.iter().map(|(c, e)| format!("({},{})", encode(c), encode(e))).collect(),
        emerging: an
            .c_e
            .iter()
            .map(|(pair, &mu)| EmergingPair { pair: format!("{{{},{}}}", pair.lo(), pair.hi()), multiplicity: mu })
            .collect(),
        prefix_colors: an.c_b.iter().map(encode).collect(),
        invariant_failures: an.invariant_failures(),
        injective_index: index.as_ref().and_then(|i| i.index),
        index_premise: index.as_ref().is_some_and(|i| i.premise),
    };
    Ok((0, document("subset", body)?))
}

fn cmd_bounds(a: BoundsArgs) -> CmdResult {
    let mut report = bound(&a.n, a.p).map_err(|e| e.to_string())?;
    if a.census {
        let params = choose_params(&a.n, a.p).map_err(|e| e.to_string())?;
        let coloring = Coloring::Block { chain: params.chain, variant: BlockVariant::Eta };
        let universe = Universe::AllBinary(params.alpha);
        if census_cost(&universe) > pqcolor::analysis::census::CENSUS_GUARD as u128 {
            return Err(format!("--census on {universe} is too large to count exactly"));
        }
        report.colors = Some(count_colors(&coloring, &universe).map_err(|e| e.to_string())?.colors);
    }
    Ok((0, document("bounds", report)?))
}

#[derive(Serialize)]
struct ParamsBody {
    n: String,
    p: usize,
    beta: usize,
    alpha: usize,
    chain: String,
}

fn cmd_params(a: ParamsArgs) -> CmdResult {
    let params = choose_params(&a.n, a.p).map_err(|e| e.to_string())?;
    let body = ParamsBody {
        n: a.n.to_string(),
        p: a.p,
        beta: params.beta,
        alpha: params.alpha,
        chain: params.chain.to_string(),
    };
    Ok((0, document("params", body)?))
}

#[derive(Serialize)]
struct Edge {
    i: usize,
    j: usize,
    color: u32,
}

#[derive(Serialize)]
struct OracleBody {
    n: usize,
    p: usize,
    q: usize,
    f: usize,
    witness_verified: bool,
    edges: Vec<Edge>,
}

fn cmd_oracle(a: OracleArgs) -> CmdResult {
    let r = exact_min_colors(a.n, a.p, a.q).map_err(|e| e.to_string())?;
    let witness_verified = if a.n >= a.p {
        let table = ColorTable::from_edge_colors(a.n, &r.witness).map_err(|e| e.to_string())?;
        verify_pq(&table, a.p, a.q, &VerifyOptions::exhaustive()).map_err(|e| e.to_string())?.passed()
    } else {
        true
    };
    let body = OracleBody {
        n: r.n,
        p: r.p,
        q: r.q,
        f: r.colors,
        witness_verified,
        edges: r.edges().into_iter().map(|(i, j, color)| Edge { i, j, color }).collect(),
    };
    Ok((0, document("oracle", body)?))
}

#[derive(Serialize)]
struct ChainRow {
    #[serde(flatten)]
    step: pqcolor::analysis::ChainStep,
    statement: String,
}

#[derive(Serialize)]
struct ChainBody {
    steps: Vec<ChainRow>,
}

fn cmd_chain(a: ChainArgs) -> CmdResult {
    let b = a.base;
    let steps = lower_bound_chain(&b.n, b.p, b.q, &b.k, a.steps).map_err(|e| e.to_string())?;
    let steps = steps
        .into_iter()
        .map(|s| ChainRow { statement: format!("f({},{},{}) >= {}", s.n, s.p, s.q, s.k), step: s })
        .collect();
    Ok((0, document("chain", ChainBody { steps })?))
}

fn cmd_counterexample(a: CounterexampleArgs) -> CmdResult {
    let report = match a.s {
        Some(s) => grid_counterexample(s),
        None => three_cube_counterexample(),
    }
    .map_err(|e| e.to_string())?;
    Ok((0, document("counterexample", report)?))
}

//! `trapsets`: command-line front end for trapping-set enumeration.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or configuration error,
//! 3 malformed input, 4 unsupported graph (girth 4), 5 resource cap hit.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use ldpc_trapsets::bounds::{self, Bound};
use ldpc_trapsets::cycles::{enumerate_cycles, CycleRecord, SearchMode};
use ldpc_trapsets::graph::{gen_random_left_regular, gen_tanner_155};
use ldpc_trapsets::oracle::{brute_force, ClassFilter, OracleQuery};
use ldpc_trapsets::{
    girth, parse_alist, search, write_alist, ClassifyMode, CodeMeta, Error, ExpansionConfig,
    Girth, RunReport, TannerGraph, ThresholdPolicy, TrappingSet,
};

#[derive(Parser)]
#[command(name = "trapsets", version, about = "Enumerate dominant trapping sets of LDPC codes")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for trapping sets by recursive cycle expansion.
    Scan(ScanArgs),
    /// Enumerate short cycles.
    Cycles(CyclesArgs),
    /// Classify one variable set.
    Classify(ClassifyArgs),
    /// Evaluate size bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Exhaustive reference enumeration for small graphs.
    Oracle(OracleArgs),
    /// Write a generated code as alist.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Parity-check matrix in alist format.
    #[arg(long)]
    alist: Option<PathBuf>,
    /// Built-in code.
    #[arg(long, value_enum)]
    gen: Option<BuiltIn>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuiltIn {
    /// Tanner (155,64) quasi-cyclic code.
    Tanner155,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here instead of standard output.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Also write the class table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Include member variable lists.
    #[arg(long)]
    emit_sets: bool,
    /// Include wall-clock timings (makes the report run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Elementary,
    General,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    input: Input,
    /// Largest trapping-set size k.
    #[arg(long)]
    max_size: usize,
    /// Round threshold: `fixed:T`, `smallest:S` or `unbounded`.
    #[arg(long, value_parser = parse_policy, conflicts_with = "max_unsat")]
    b_policy: Option<ThresholdPolicy>,
    /// Shorthand for `--b-policy fixed:T`.
    #[arg(long)]
    max_unsat: Option<usize>,
    /// Seed cycle lengths, absolute or relative to the girth (`g,g+2`).
    #[arg(long, value_delimiter = ',', default_value = "g,g+2")]
    init_cycles: Vec<String>,
    #[arg(long, value_enum, default_value = "elementary")]
    mode: ModeArg,
    /// Run degree-2 growth after the cycle expansion.
    #[arg(long)]
    degree2: bool,
    /// Seed degree-2 growth with single variables of degree up to this.
    #[arg(long, requires = "degree2")]
    low_degree_vars: Option<usize>,
    /// Also seed with cycles whose ACE is at most this ...
    #[arg(long, requires = "ace_len")]
    ace_max: Option<usize>,
    /// ... and whose length is at most this.
    #[arg(long, requires = "ace_max")]
    ace_len: Option<usize>,
    /// Drop variables whose degree excludes them from every set with
    /// `b <=` this cap.
    #[arg(long)]
    prune_b_cap: Option<usize>,
    /// Exempt degree-2 variables from the two-satisfied-checks rule.
    #[arg(long)]
    relax_degree2: bool,
    /// Maximum variables added per step in general mode.
    #[arg(long, default_value_t = 3)]
    general_step_cap: usize,
    /// Fail once the store holds more sets than this.
    #[arg(long)]
    max_store: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CyclesArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    max_len: usize,
    /// Print every cycle as JSON instead of a count table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: Input,
    /// Comma-separated 0-based variable indices.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<usize>,
    #[arg(long)]
    relax_degree2: bool,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// b of an elementary set whose induced graph is a tree.
    CycleFree {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        dl: usize,
    },
    /// Smallest set containing a variable of degree dv with b unsatisfied checks.
    HighDegree {
        #[arg(long)]
        dv: usize,
        #[arg(long)]
        b: usize,
    },
    /// Size lower bounds for (a,b) sets with b < a.
    Nonelementary {
        #[arg(long)]
        dl: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        b: usize,
        /// Induced degree of an even-degree satisfied check.
        #[arg(long)]
        de: Option<usize>,
        /// Induced degree of an odd-degree unsatisfied check.
        #[arg(long = "do")]
        d_o: Option<usize>,
    },
    /// Largest 2-chain component without a path of length 2k-2 or more.
    Chain {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dcmax: usize,
    },
    /// Most degree-2 variables allowing no 2-chain of length 2k.
    Theorem1 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dcmax: usize,
        #[arg(long)]
        k: usize,
    },
    /// Smallest k for which m checks can hold nv2 degree-2 variables.
    MinK {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nv2: usize,
        #[arg(long)]
        dcmax: usize,
        #[arg(long, default_value_t = 64)]
        k_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Any,
    InT,
    Elementary,
    Absorbing,
    FullyAbsorbing,
    Zp,
}

impl From<FilterArg> for ClassFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Any => ClassFilter::Any,
            FilterArg::InT => ClassFilter::InT,
            FilterArg::Elementary => ClassFilter::Elementary,
            FilterArg::Absorbing => ClassFilter::Absorbing,
            FilterArg::FullyAbsorbing => ClassFilter::FullyAbsorbing,
            FilterArg::Zp => ClassFilter::Zp,
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    a_max: usize,
    #[arg(long)]
    b_max: usize,
    /// Families every reported set must belong to.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "in-t")]
    filter: Vec<FilterArg>,
    /// Also report disconnected sets (visits every subset).
    #[arg(long)]
    allow_disconnected: bool,
    /// Visit every subset even when connectivity is required.
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    relax_degree2: bool,
    /// Subsets visited before giving up.
    #[arg(long, default_value_t = 1 << 32)]
    budget: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Tanner (155,64) quasi-cyclic code.
    Tanner155 {
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Random left-regular code built by progressive edge growth.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dl: usize,
        #[arg(long, default_value_t = 6)]
        min_girth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Alist { .. } | Error::InvalidGraph(_) => 3,
            Error::UnsupportedGirth => 4,
            Error::StoreOverflow { .. } | Error::BudgetExceeded { .. } => 5,
            Error::ShiftOutOfRange { .. } | Error::Config(_) | Error::NotApplicable(_) => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        msg: format!("{}: {e}", path.display()),
    }
}

fn parse_policy(s: &str) -> Result<ThresholdPolicy, String> {
    let number = |v: &str| v.parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
    match s.split_once(':') {
        Some(("fixed", t)) => Ok(ThresholdPolicy::FixedT(number(t)?)),
        Some(("smallest", n)) => Ok(ThresholdPolicy::SmallestB(number(n)?)),
        None if s == "unbounded" => Ok(ThresholdPolicy::Unbounded),
        _ => Err(format!("expected fixed:T, smallest:S or unbounded, got {s:?}")),
    }
}

/// Resolves `g`, `g+2`, `12`, ... against the girth.
fn resolve_cycle_lengths(specs: &[String], g: usize) -> Result<Vec<usize>, Failure> {
    let mut lengths = Vec::with_capacity(specs.len());
    for spec in specs {
        let spec = spec.trim();
        let len = if let Some(rest) = spec.strip_prefix('g') {
            let offset = match rest.strip_prefix('+') {
                Some(o) => o.parse::<usize>().ok(),
                None if rest.is_empty() => Some(0),
                None => None,
            };
            offset.map(|o| g + o)
        } else {
            spec.parse().ok()
        };
        lengths.push(len.ok_or_else(|| Failure::usage(format!("bad cycle length {spec:?}")))?);
    }
    lengths.sort_unstable();
    lengths.dedup();
    Ok(lengths)
}

fn load(input: &Input) -> Result<(TannerGraph, String), Failure> {
    if let Some(path) = &input.alist {
        let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
            code: 3,
            msg: format!("{}: not UTF-8 text", path.display()),
        })?;
        let graph = parse_alist(&text)?;
        Ok((graph, hex::encode(Sha256::digest(&bytes))))
    } else {
        let graph = match input.gen.expect("clap enforces one input") {
            BuiltIn::Tanner155 => gen_tanner_155(),
        };
        Ok((graph, hex::encode(Sha256::digest(b"tanner155"))))
    }
}

fn write_text(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(report: &RunReport, output: &Output) -> Result<(), Failure> {
    if let Some(csv) = &output.csv {
        fs::write(csv, report.to_csv()).map_err(|e| io_failure(csv, e))?;
    }
    write_text(output.out.as_ref(), &report.to_json())
}

fn finite_girth(graph: &TannerGraph) -> Result<usize, Failure> {
    match girth(graph) {
        Girth::Finite(g) if g <= 4 => Err(Error::UnsupportedGirth.into()),
        Girth::Finite(g) => Ok(g),
        Girth::Infinite => Err(Failure::usage("graph has no cycles; nothing to expand")),
    }
}

fn cmd_scan(args: &ScanArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let (graph, sha) = load(&args.input)?;
    let g = finite_girth(&graph)?;
    let policy = match (args.b_policy, args.max_unsat) {
        (Some(p), _) => p,
        (None, Some(t)) => ThresholdPolicy::FixedT(t),
        (None, None) => ThresholdPolicy::Unbounded,
    };
    let mut config = ExpansionConfig::new(args.max_size, policy);
    config.mode = match args.mode {
        ModeArg::Elementary => SearchMode::Elementary,
        ModeArg::General => SearchMode::General,
    };
    config.init_cycle_lengths = resolve_cycle_lengths(&args.init_cycles, g)?;
    config.ace_max = args.ace_max;
    config.ace_len = args.ace_len.unwrap_or(0);
    config.include_low_degree_vars = args.low_degree_vars;
    config.prune_b_cap = args.prune_b_cap;
    config.degree2_phase = args.degree2;
    config.relax_degree2 = args.relax_degree2;
    config.general_step_cap = args.general_step_cap;
    config.max_store = args.max_store;
    let loaded = start.elapsed();

    let result = search(&graph, &config)?;
    let mut report = RunReport::from_search(CodeMeta::new(&graph, sha), &config, &result, args.output.emit_sets);
    if args.output.timings {
        report.timing_ms = Some(BTreeMap::from([
            ("load".to_string(), loaded.as_millis() as u64),
            ("search".to_string(), (start.elapsed() - loaded).as_millis() as u64),
        ]));
    }
    emit(&report, &args.output)
}

fn cmd_cycles(args: &CyclesArgs) -> Result<(), Failure> {
    let (graph, _) = load(&args.input)?;
    let cycles = enumerate_cycles(&graph, args.max_len);
    let text = if args.json {
        let records: Vec<CycleRecord> = cycles.iter().map(CycleRecord::from).collect();
        serde_json::to_string_pretty(&records).expect("records serialize") + "\n"
    } else {
        let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &cycles {
            *by_len.entry(c.len()).or_default() += 1;
        }
        let mut s = String::from("length  count\n");
        for (len, count) in by_len {
            s += &format!("{len:>6}  {count}\n");
        }
        s
    };
    write_text(None, &text)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Failure> {
    let (graph, _) = load(&args.input)?;
    if let Some(&v) = args.set.iter().find(|&&v| v >= graph.n()) {
        return Err(Failure::usage(format!("variable {v} out of range (n = {})", graph.n())));
    }
    let mut vars = args.set.clone();
    vars.sort_unstable();
    vars.dedup();
    let mode = if args.relax_degree2 {
        ClassifyMode::RELAXED
    } else {
        ClassifyMode::STRICT
    };
    let record = TrappingSet::new(&graph, &vars, mode).record();
    write_text(None, &(serde_json::to_string_pretty(&record).expect("record serializes") + "\n"))
}

fn bound_row(label: &str, b: Option<Bound>) -> String {
    match b {
        Some(b) => format!("{label:<16} {:>8}  ({})\n", b.value, b.exact),
        None => format!("{label:<16} {:>8}\n", "n/a"),
    }
}

fn cmd_bounds(cmd: &BoundsCommand) -> Result<(), Failure> {
    let text = match *cmd {
        BoundsCommand::CycleFree { a, dl } => {
            format!("a={a} d_l={dl}\nb                {:>8}\n", bounds::cycle_free_bound(a, dl))
        }
        BoundsCommand::HighDegree { dv, b } => {
            format!("d_v={dv} b={b}\nmin a            {:>8}\n", bounds::min_size_high_degree(dv, b)?)
        }
        BoundsCommand::Nonelementary { dl, g, b, de, d_o } => {
            let r = bounds::nonelementary_lower_bounds(dl, g, b, de, d_o)?;
            let mut s = format!("d_l={dl} g={g} b={b}\n");
            s += &bound_row("elementary", r.elementary);
            s += &bound_row("via d_e", r.via_satisfied);
            s += &bound_row("via d_o", r.via_unsatisfied);
            s
        }
        BoundsCommand::Chain { k, dcmax } => {
            format!("k={k} d_cmax={dcmax}\nmax component    {:>8}\n", bounds::max_2chain_component(k, dcmax)?)
        }
        BoundsCommand::Theorem1 { m, dcmax, k } => {
            let r = bounds::theorem1_max_nv2(m, k, dcmax)?;
            format!("m={m} d_cmax={dcmax} k={k}\n{}", bound_row("max n_v2", Some(r)))
        }
        BoundsCommand::MinK { m, nv2, dcmax, k_cap } => {
            let k = bounds::theorem1_min_k(m, nv2, dcmax, k_cap)?;
            let shown = k.map_or_else(|| format!("> {k_cap}"), |k| k.to_string());
            format!("m={m} n_v2={nv2} d_cmax={dcmax}\nmin k            {shown:>8}\n")
        }
    };
    write_text(None, &text)
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let (graph, sha) = load(&args.input)?;
    let filters: Vec<ClassFilter> = args.filter.iter().map(|&f| f.into()).collect();
    let mut query = OracleQuery::new(args.a_max, args.b_max, &filters);
    query.connectivity_required = !args.allow_disconnected;
    query.raw = args.raw;
    query.budget = args.budget;
    if args.relax_degree2 {
        query.classify_mode = ClassifyMode::RELAXED;
    }
    let store = brute_force(&graph, &query)?;
    let mut report = RunReport::from_store(CodeMeta::new(&graph, sha), &query, &store, args.output.emit_sets);
    if args.output.timings {
        report.timing_ms = Some(BTreeMap::from([("total".to_string(), start.elapsed().as_millis() as u64)]));
    }
    emit(&report, &args.output)
}

fn cmd_gen(cmd: &GenCommand) -> Result<(), Failure> {
    match cmd {
        GenCommand::Tanner155 { out } => write_text(out.as_ref(), &write_alist(&gen_tanner_155())),
        GenCommand::Random {
            n,
            m,
            dl,
            min_girth,
            seed,
            out,
        } => {
            let graph = gen_random_left_regular(*n, *m, *dl, *min_girth, *seed)?;
            write_text(out.as_ref(), &write_alist(&graph))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Scan(a) => cmd_scan(a),
        Command::Cycles(a) => cmd_cycles(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Bounds(c) => cmd_bounds(c),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Gen(c) => cmd_gen(c),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}

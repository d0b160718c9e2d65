use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crossing_core::{
    branching_multiplicity, branching_multiplicity_closed_form, check_all, count_bounded_patterns, decompose,
    first_failure, from_gt, generate, parse_crystal_json, parse_edge_list, predicted_parameter, sigma_bound,
    skeleton_size_formula, to_gt, Bounds, ColoredDigraph, Error, GtPattern, SupportingGraph, WeightFunction,
    WeightFunctionJson, DEFAULT_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "crossing", version, about = "Crossing model for regular A_n-crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal K(c, d) and export it.
    Build {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Check the crystal axioms on a graph file, or on a generated crystal.
    Verify {
        /// Crystal JSON or edge list (`from to color` per line); `-` reads stdin.
        input: Option<PathBuf>,
        #[command(flatten)]
        model: OptionalModelArgs,
        /// Number of colors for edge lists; defaults to the largest color used.
        #[arg(long)]
        colors: Option<usize>,
        /// Require the full A4 relations instead of the weak form.
        #[arg(long)]
        strict_a4: bool,
        /// Also check that random single-edge mutations are rejected.
        #[arg(long)]
        mutation_check: bool,
        #[arg(long, default_value_t = 100)]
        mutants: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Principal lattice, skeleton and subcrystal decompositions.
    Analyze {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Convert between weight-function JSON and pattern JSON, or count patterns.
    Gt {
        /// Weight-function JSON (converted to a pattern) or pattern JSON
        /// (converted to a weight function, needs `--c`).
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Option<Vec<i64>>,
        /// Print the number of patterns bounded by the partial sums of `c`.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    c: Vec<i64>,
    /// Lower bounds; zeros when omitted.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    d: Option<Vec<i64>>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct OptionalModelArgs {
    #[arg(long, requires = "c")]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "n")]
    c: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    d: Option<Vec<i64>>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

enum Failure {
    Verdict(String),
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::EstimateExceedsCap { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

impl ModelArgs {
    fn bounds(&self) -> Result<Bounds, Failure> {
        bounds_from(self.n, &self.c, self.d.as_deref(), self.cap)
    }
}

fn bounds_from(n: usize, c: &[i64], d: Option<&[i64]>, cap: usize) -> Result<Bounds, Failure> {
    if cap == 0 {
        return Err(Failure::Usage("--cap must be positive".into()));
    }
    if c.len() != n {
        return Err(Failure::Usage(format!("--c has {} entries, expected {n}", c.len())));
    }
    let d = d.map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; n]);
    if d.len() != n {
        return Err(Failure::Usage(format!("--d has {} entries, expected {n}", d.len())));
    }
    Ok(Bounds::new(c.to_vec(), d)?)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Usage(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json_text<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_build(model: &ModelArgs, out: Option<&Path>, format: GraphFormat) -> Outcome {
    let bounds = model.bounds()?;
    let k = generate(&bounds, model.cap)?;
    let length = k.graded_length()?.map_or_else(|| "ungraded".to_string(), |l| l.to_string());
    let principal = (0..k.len()).filter(|&v| k.principal_tuple(v).is_some()).count();
    println!("vertices: {}", k.len());
    println!("edges: {}", k.edge_count());
    println!("length: {length}");
    println!("principal: {principal}");
    if let Some(path) = out {
        let text = match format {
            GraphFormat::Json => to_json_text(&k.to_json()),
            GraphFormat::Dot => k.to_dot(),
            GraphFormat::Csv => k.to_csv(),
        };
        emit(Some(path), &text)?;
    }
    Ok(())
}

fn load_graph(text: &str, colors: Option<usize>) -> Result<ColoredDigraph, Failure> {
    if text.trim_start().starts_with('{') {
        Ok(parse_crystal_json(text)?)
    } else {
        Ok(parse_edge_list(text, colors)?)
    }
}

/// Random single-edge deletions and same-color insertions.
fn mutation_check(g: &ColoredDigraph, mutants: usize, seed: u64, strict: bool) -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut survivors = Vec::new();
    let nv = g.vertex_count();
    let mut tried = 0;
    for _ in 0..mutants {
        let delete = !g.edges().is_empty() && (nv == 0 || rng.gen_bool(0.5));
        let (mutant, label) = if delete {
            let e = rng.gen_range(0..g.edges().len());
            let (u, v, i) = g.edges()[e];
            (g.without_edge(e), format!("delete {} -> {} color {i}", g.name(u), g.name(v)))
        } else if nv > 0 {
            let (u, v, i) = (rng.gen_range(0..nv), rng.gen_range(0..nv), rng.gen_range(1..=g.colors()));
            (g.with_edge((u, v, i)), format!("insert {} -> {} color {i}", g.name(u), g.name(v)))
        } else {
            break;
        };
        tried += 1;
        if first_failure(&mutant, strict).is_none() {
            survivors.push(label);
        }
    }
    (tried, survivors)
}

fn cmd_verify(
    input: Option<&Path>,
    model: &OptionalModelArgs,
    colors: Option<usize>,
    strict: bool,
    mutations: Option<(usize, u64)>,
) -> Outcome {
    let g = match (input, &model.n, &model.c) {
        (Some(path), None, None) => load_graph(&read_input(path)?, colors)?,
        (None, Some(n), Some(c)) => {
            let bounds = bounds_from(*n, c, model.d.as_deref(), model.cap)?;
            generate(&bounds, model.cap)?.to_digraph()
        }
        _ => return Err(Failure::Usage("give either an input file or --n and --c".into())),
    };
    let report = check_all(&g, strict);
    print!("{report}");
    let mut verdict = report.passed();
    if let Some((mutants, seed)) = mutations {
        let (tried, survivors) = mutation_check(&g, mutants, seed, strict);
        println!("mutations: {} of {tried} rejected (seed {seed})", tried - survivors.len());
        for s in &survivors {
            println!("  accepted mutant: {s}");
        }
        verdict &= survivors.is_empty();
    }
    if verdict {
        Ok(())
    } else {
        Err(Failure::Verdict("verification failed".into()))
    }
}

fn cmd_analyze(model: &ModelArgs, out: Option<&Path>, format: ReportFormat) -> Outcome {
    let bounds = model.bounds()?;
    let k = generate(&bounds, model.cap)?;
    let report = decompose(&k)?;
    let span = bounds.span();
    let mut summary = String::new();
    let _ = writeln!(summary, "vertices: {}", report.vertices);
    let _ = writeln!(summary, "principal: {}", report.principal_count);
    let formula = skeleton_size_formula(&span).map_or_else(|| "overflow".into(), |s| s.to_string());
    let _ = writeln!(summary, "skeleton: {} (formula {formula})", report.skeleton_size);
    let _ = writeln!(summary, "upper subcrystals: {}", report.upper.len());
    let _ = writeln!(summary, "lower subcrystals: {}", report.lower.len());
    let mismatches = report
        .upper
        .iter()
        .chain(&report.lower)
        .filter(|r| r.parameter != predicted_parameter(&bounds, &r.anchor, r.side))
        .count();
    let _ = writeln!(summary, "parameter mismatches: {mismatches}");
    if k.n() > 1 {
        let mut measured: BTreeMap<&[i64], u64> = BTreeMap::new();
        for r in &report.upper {
            *measured.entry(&r.parameter).or_default() += 1;
        }
        let max = measured.values().copied().max().unwrap_or(0);
        let _ = writeln!(summary, "distinct upper parameters: {} (max multiplicity {max})", measured.len());
        for (q, count) in &measured {
            let _ = writeln!(
                summary,
                "  eta{q:?} = {count} (enumerated {}, closed form {})",
                branching_multiplicity(&span, q),
                branching_multiplicity_closed_form(&span, q)
            );
        }
    }
    print!("{summary}");
    if let Some(path) = out {
        let text = match format {
            ReportFormat::Json => to_json_text(&report),
            ReportFormat::Csv => report.to_csv(),
        };
        emit(Some(path), &text)?;
    }
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Verdict("measured parameters differ from the formula".into()))
    }
}

fn cmd_gt(input: Option<&Path>, n: Option<usize>, c: Option<&[i64]>, count: bool, out: Option<&Path>) -> Outcome {
    if count {
        let c = c.ok_or_else(|| Failure::Usage("--count needs --c".into()))?;
        if n.is_some_and(|n| n != c.len()) {
            return Err(Failure::Usage(format!("--c has {} entries, expected {}", c.len(), n.unwrap())));
        }
        if c.iter().any(|&x| x < 0) {
            return Err(Failure::Usage("--c entries must be nonnegative".into()));
        }
        return emit(out, &format!("{}\n", count_bounded_patterns(&sigma_bound(c))));
    }
    let path = input.ok_or_else(|| Failure::Usage("give an input file or --count".into()))?;
    let value: serde_json::Value =
        serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))?;
    let text = if value.is_object() {
        let json: WeightFunctionJson =
            serde_json::from_value(value).map_err(|e| Failure::Usage(format!("invalid weight function: {e}")))?;
        let (g, f) = WeightFunction::from_json(&json)?;
        to_json_text(&to_gt(&g, &f)?)
    } else {
        let x: GtPattern =
            serde_json::from_value(value).map_err(|e| Failure::Usage(format!("invalid pattern: {e}")))?;
        let c = c.ok_or_else(|| Failure::Usage("converting a pattern needs --c".into()))?;
        if c.len() != x.size() || n.is_some_and(|n| n != x.size()) {
            return Err(Failure::Usage(format!("pattern has size {}, --c has {} entries", x.size(), c.len())));
        }
        let g = SupportingGraph::new(x.size())?;
        to_json_text(&from_gt(&g, c, &x)?.to_json(&g))
    };
    emit(out, &text)
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Build { model, out, format } => cmd_build(model, out.as_deref(), *format),
        Command::Verify { input, model, colors, strict_a4, mutation_check, mutants, seed } => {
            cmd_verify(input.as_deref(), model, *colors, *strict_a4, mutation_check.then_some((*mutants, *seed)))
        }
        Command::Analyze { model, out, format } => cmd_analyze(model, out.as_deref(), *format),
        Command::Gt { input, n, c, count, out } => cmd_gt(input.as_deref(), *n, c.as_deref(), *count, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

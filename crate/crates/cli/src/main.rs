//! `slittle`: command-line driver for signed Little bumps, Kraśkiewicz
//! insertion, Coxeter-Knuth graphs and the verification suites.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use signed_little::graphs::{ck_graph_a, ck_graph_b, sdeg_standard, SignedColoredGraph};
use signed_little::insertion::{eg_insert, kraskiewicz_insert};
use signed_little::little::{bump_image_target, little_bump};
use signed_little::permutations::{reduced_words, transition_data};
use signed_little::symmetric::{expansion_by_shape, g_coefficients, stanley_c, transition_expand};
use signed_little::verify::{run_suite, Bounds, Suite};
use signed_little::wiring::WiringDiagram;
use signed_little::{Direction, SignedPermutation, StrictPartition, Transposition, Word};

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "slittle", version, about = "Signed Little bumps and type B reduced words")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Worker threads for the verification suites.
    #[arg(long, global = true, env = "SIGNED_LITTLE_JOBS")]
    jobs: Option<usize>,
    /// TOML file with defaults; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the reduced words of a signed permutation, e.g. "[2,1,5,4,3]".
    Words { perm: String },
    /// Run a Little bump on a reduced word and print its trace.
    Bump(BumpArgs),
    /// Insert a reduced word and print the insertion and recording tableaux.
    Insert {
        word: String,
        #[arg(long = "type", value_enum, default_value = "b")]
        kind: InsertKind,
    },
    /// Export a graph: CK_A(w), CK_B(w), SG_λ or a wiring diagram.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        /// A permutation for ck-a/ck-b, a partition for sg, a word for wiring.
        input: String,
    },
    /// Expand F^C_w through the transition equations.
    Expand {
        perm: String,
        /// Number of variables for the polynomial; omitted means no polynomial.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Run one of the exhaustive verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct BumpArgs {
    word: String,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "canonical")]
    i: Option<i32>,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "canonical")]
    j: Option<i32>,
    #[arg(long, conflicts_with = "up")]
    down: bool,
    #[arg(long)]
    up: bool,
    /// Bump at the transition pair of the word's permutation, downwards.
    #[arg(long, conflicts_with_all = ["i", "j", "down", "up"])]
    canonical: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InsertKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphKind {
    CkA,
    CkB,
    Sg,
    Wiring,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// transition, qpreserve, ckcommute, sdeg-axioms, insertion-bijection,
    /// peaks or delta.
    suite: String,
    /// Group as `B<n>`, e.g. B3.
    #[arg(long, conflicts_with = "rank")]
    group: Option<String>,
    /// Rank n, same as `--group B<n>`.
    #[arg(long)]
    rank: Option<usize>,
    /// Word length bound.
    #[arg(long)]
    len: Option<usize>,
    /// Largest |λ| for standard graphs.
    #[arg(long)]
    maxcells: Option<usize>,
}

/// An error in the input, reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(Usage(e.to_string()))
}

fn parse_perm(s: &str) -> Result<SignedPermutation> {
    s.parse().map_err(usage)
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse().map_err(usage)
}

fn parse_partition(s: &str) -> Result<StrictPartition> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| usage(format!("bad part {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    StrictPartition::new(parts).map_err(usage)
}

fn show_word(a: &Word) -> String {
    if a.is_empty() {
        "ε".into()
    } else {
        a.to_string()
    }
}

/// `println!` that reports write failures instead of panicking, so a closed
/// pipe ends the program quietly.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn words(perm: &str, format: Format) -> Result<()> {
    let w = parse_perm(perm)?;
    let ws = reduced_words(&w);
    match format {
        Format::Text => {
            for a in &ws {
                out!("{}", show_word(a));
            }
            out!("count: {}", ws.len());
        }
        Format::Json => print_json(&json!({
            "permutation": w.to_string(),
            "words": ws.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "count": ws.len(),
        }))?,
    }
    Ok(())
}

fn bump(args: &BumpArgs, format: Format) -> Result<()> {
    let a = parse_word(&args.word)?;
    let (t, d) = if args.canonical {
        a.is_reduced().then_some(()).ok_or_else(|| usage(format!("word {a} is not reduced")))?;
        let td = transition_data(&a.evaluate()).map_err(usage)?;
        (Transposition { i: td.r, j: td.s }, Direction::Down)
    } else {
        let (i, j) = (args.i.expect("required"), args.j.expect("required"));
        let t = Transposition::new(i, j).map_err(usage)?;
        let d = if args.up { Direction::Up } else { Direction::Down };
        (t, d)
    };
    let trace = little_bump(&a, t, d).map_err(usage)?;
    let (_, back) = bump_image_target(&a, t, d)?;
    let undo = d.opposite();
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&trace)?;
            v["inverse"] = json!({ "i": back.i, "j": back.j, "delta": undo });
            print_json(&v)?
        }
        Format::Text => {
            let sign = |d: Direction| if d == Direction::Up { '+' } else { '-' };
            out!("bump {} at ({},{}) {}", show_word(&a), t.i, t.j, sign(d));
            for ((k, dir), w) in trace.steps.iter().zip(&trace.intermediate_words) {
                out!("  P{}{k}  {}", sign(*dir), show_word(w));
            }
            out!(
                "result {} in R({})",
                show_word(&trace.result),
                trace.result.evaluate()
            );
            out!("inverse: ({},{}) {}", back.i, back.j, sign(undo));
        }
    }
    Ok(())
}

fn insert(word: &str, kind: InsertKind, format: Format) -> Result<()> {
    let a = parse_word(word)?;
    let (pair, p_text, q_text) = match kind {
        InsertKind::A => {
            let pair = eg_insert(&a).map_err(usage)?;
            let (p, q) = (pair.p.to_string(), pair.q.to_string());
            (serde_json::to_value(&pair)?, p, q)
        }
        InsertKind::B => {
            let pair = kraskiewicz_insert(&a).map_err(usage)?;
            let (p, q) = (pair.p.to_string(), pair.q.to_string());
            (serde_json::to_value(&pair)?, p, q)
        }
    };
    match format {
        Format::Json => print_json(&json!({
            "word": a.to_string(),
            "p": pair["p"],
            "q": pair["q"],
            "rendered": { "p": p_text, "q": q_text },
        })),
        Format::Text => {
            out!("P:\n{p_text}");
            out!("Q:\n{q_text}");
            Ok(())
        }
    }
}

fn graph(kind: GraphKind, input: &str, format: Format) -> Result<()> {
    let g: SignedColoredGraph = match kind {
        GraphKind::CkA => ck_graph_a(&parse_perm(input)?).map_err(usage)?,
        GraphKind::CkB => ck_graph_b(&parse_perm(input)?),
        GraphKind::Sg => sdeg_standard(&parse_partition(input)?),
        GraphKind::Wiring => {
            let a = parse_word(input)?;
            if !a.is_reduced() {
                return Err(usage(format!("word {a} is not reduced")));
            }
            let d = WiringDiagram::build(&a);
            match format {
                Format::Text => write!(std::io::stdout().lock(), "{}", d.to_dot())?,
                Format::Json => print_json(&json!({
                    "word": a.to_string(),
                    "crossings": d.crossings(),
                }))?,
            }
            return Ok(());
        }
    };
    match format {
        Format::Text => write!(std::io::stdout().lock(), "{}", g.to_dot())?,
        Format::Json => print_json(&g)?,
    }
    Ok(())
}

fn expand(perm: &str, vars: Option<usize>, format: Format) -> Result<()> {
    let w = parse_perm(perm)?;
    let leaves = transition_expand(&w);
    let by_shape = expansion_by_shape(&w);
    let g = g_coefficients(&w);
    if by_shape != g {
        bail!("transition leaves {by_shape:?} disagree with insertion counts {g:?}");
    }
    let poly = vars.map(|m| stanley_c(&w, m));
    match format {
        Format::Json => {
            let leaves: serde_json::Map<String, serde_json::Value> = leaves
                .iter()
                .map(|(leaf, k)| (leaf.to_string(), json!(k)))
                .collect();
            let mut out = json!({
                "permutation": w.to_string(),
                "length": w.length(),
                "leaves": leaves,
                "g": g,
            });
            if let Some(p) = &poly {
                out["polynomial"] = serde_json::to_value(p)?;
            }
            print_json(&out)?;
        }
        Format::Text => {
            out!("F^C_{w} =");
            for (leaf, k) in &leaves {
                out!("  {k} × F^C_{leaf}");
            }
            let terms: Vec<String> = g
                .terms
                .iter()
                .map(|(mu, c)| format!("{c} Q_{mu}"))
                .collect();
            out!("  = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
            if let Some(p) = &poly {
                out!("in {} variables:", p.num_vars());
                for (e, c) in p.coefficients() {
                    out!("  {c} x^{e:?}");
                }
            }
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, cfg: &Config, format: Format) -> Result<bool> {
    let suite: Suite = args.suite.parse().map_err(usage)?;
    let defaults = Bounds::default();
    let rank = match (&args.group, args.rank) {
        (Some(g), _) => g
            .strip_prefix(['B', 'b'])
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| usage(format!("group {g:?} is not of the form B<n>")))?,
        (None, Some(r)) => r,
        (None, None) => cfg.rank.unwrap_or(defaults.rank),
    };
    let bounds = Bounds {
        rank,
        max_len: args.len.or(cfg.len).unwrap_or(if args.group.is_some() || args.rank.is_some() {
            rank * rank
        } else {
            defaults.max_len
        }),
        max_cells: args.maxcells.or(cfg.maxcells).unwrap_or(defaults.max_cells),
    };
    let report = run_suite(suite, bounds);
    match format {
        Format::Json => print_json(&json!({ "bounds": bounds, "report": report }))?,
        Format::Text => {
            let status = if report.ok() { "PASS" } else { "FAIL" };
            out!(
                "{status} {} (B_{}, length ≤ {}, |λ| ≤ {}): {}/{} in {:.2}s",
                report.suite,
                bounds.rank,
                bounds.max_len,
                bounds.max_cells,
                report.passed,
                report.instances,
                report.elapsed_secs
            );
            for f in &report.failures {
                out!("  {f}");
            }
        }
    }
    Ok(report.ok())
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    let format = cli.format.or(cfg.format).unwrap_or(Format::Text);
    if let Some(n) = cli.jobs.or(cfg.jobs) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the worker pool")?;
    }
    match &cli.command {
        Command::Words { perm } => words(perm, format)?,
        Command::Bump(args) => bump(args, format)?,
        Command::Insert { word, kind } => insert(word, *kind, format)?,
        Command::Graph { kind, input } => graph(*kind, input, format)?,
        Command::Expand { perm, vars } => expand(perm, *vars, format)?,
        Command::Verify(args) => return verify(args, &cfg, format),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e
            .downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}

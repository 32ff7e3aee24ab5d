//! The `mscs` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
//! error or class mismatch, 4 exhaustive-search cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::approx::two_approx_mscs_tree;
use crate::class::{classify, GraphClass};
use crate::cnf::Formula;
use crate::consistency::{verify, Mode, VerifyReport};
use crate::error::Error;
use crate::fast::{solve_mscs_comb, solve_mscs_cycle, solve_mscs_path, solve_mscs_spider};
use crate::generate::{generate, GenParams, Shape};
use crate::graph::ColoredGraph;
use crate::oracle::{brute_dominating_capped, brute_max2sat, brute_solve, DEFAULT_CAP};
use crate::reductions::{
    certify_reduction_capped, default_stabilizers, dominating_to_mcs, dominating_to_mscs, max2sat_to_tree_mcs,
    ReductionInstance,
};
use crate::result::{Problem, SolveResult};
use crate::tree::solve_mscs_tree;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "mscs", version, about = "Minimum (strict) consistent subsets of vertex-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve MCS, MSCS or MCSS on an instance.
    Solve(SolveArgs),
    /// Check whether a subset is consistent, strict or spanning.
    Verify(VerifyArgs),
    /// Emit a hardness-reduction instance.
    Reduce(ReduceArgs),
    /// Generate a random instance.
    Gen(GenArgs),
    /// Time solvers on generated instances of growing size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Mcs,
    Mscs,
    Mcss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Auto,
    Path,
    Cycle,
    Spider,
    Comb,
    Tree,
    Brute,
    /// The block-tree 2-approximation (trees only).
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Cs,
    Scs,
    Css,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReductionArg {
    DominatingToMcs,
    DominatingToMscs,
    Max2satToTree,
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "mscs")]
    problem: ProblemArg,
    #[arg(long, value_enum, default_value = "auto")]
    class: ClassArg,
    /// Re-check the witness with the verifier.
    #[arg(long)]
    verify: bool,
    /// Vertex cap for exhaustive search.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated vertex ids.
    #[arg(long)]
    subset: String,
    #[arg(long, value_enum, default_value = "scs")]
    mode: ModeArg,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, clap::Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    reduction: ReductionArg,
    /// Source graph (instance file) or 2-CNF (DIMACS).
    #[arg(long)]
    input: PathBuf,
    /// Target instance path; the meta sidecar goes next to it as
    /// `<output>.meta.json`. Without it the instance is printed.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Stabilizer pairs per literal gadget (default 3(n + m) + 10).
    #[arg(long)]
    stabilizer: Option<usize>,
    /// ε for the weighted construction, as `num/den`.
    #[arg(long, default_value = "1/4")]
    eps: String,
    /// Compare the target's oracle optimum with the promised size.
    #[arg(long)]
    certify: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    shape: Shape,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    colors: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random edge weights in 1..=W.
    #[arg(long)]
    max_weight: Option<u64>,
    /// Spider leg count.
    #[arg(long)]
    legs: Option<usize>,
    /// Comb skeleton length.
    #[arg(long)]
    teeth: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    shape: Shape,
    /// Comma-separated instance sizes.
    #[arg(long, default_value = "10,20,40")]
    sizes: String,
    #[arg(long, value_enum, default_value = "auto")]
    class: ClassArg,
    #[arg(long, default_value_t = 2)]
    colors: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per size.
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> CliResult<ColoredGraph> {
    Ok(ColoredGraph::load(&read(path)?)?)
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| input_error(e.to_string())),
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn problem_of(p: ProblemArg) -> Problem {
    match p {
        ProblemArg::Mcs => Problem::Mcs,
        ProblemArg::Mscs => Problem::Mscs,
        ProblemArg::Mcss => Problem::Mcss,
    }
}

fn mode_for(problem: Problem) -> Mode {
    match problem {
        Problem::Mcs => Mode::Cs,
        Problem::Mcss => Mode::Css,
        _ => Mode::Scs,
    }
}

/// Picks and runs a solver. Warnings go to `err`.
fn dispatch(g: &ColoredGraph, problem: ProblemArg, class: ClassArg, cap: usize, err: &mut dyn Write) -> CliResult<SolveResult> {
    if problem != ProblemArg::Mscs {
        return match class {
            ClassArg::Auto | ClassArg::Brute => Ok(brute_solve(g, problem_of(problem), cap)?),
            other => Err(usage(format!(
                "no polynomial {} solver for --class {}; use --class brute or auto",
                problem_of(problem),
                other.to_possible_value().unwrap().get_name()
            ))),
        };
    }
    Ok(match class {
        ClassArg::Path => solve_mscs_path(g)?,
        ClassArg::Cycle => solve_mscs_cycle(g)?,
        ClassArg::Spider => solve_mscs_spider(g)?,
        ClassArg::Comb => solve_mscs_comb(g)?,
        ClassArg::Tree => solve_mscs_tree(g)?,
        ClassArg::Brute => brute_solve(g, Problem::Mscs, cap)?,
        ClassArg::Approx => two_approx_mscs_tree(g)?.result,
        ClassArg::Auto => {
            let class = classify(g);
            match class {
                GraphClass::Path { .. } if !g.is_weighted() => solve_mscs_path(g)?,
                GraphClass::Cycle { .. } if !g.is_weighted() => solve_mscs_cycle(g)?,
                GraphClass::Spider { .. } if !g.is_weighted() => solve_mscs_spider(g)?,
                GraphClass::Comb { .. } if !g.is_weighted() => solve_mscs_comb(g)?,
                c if c.is_tree() => solve_mscs_tree(g)?,
                _ => {
                    let _ = writeln!(
                        err,
                        "warning: no polynomial algorithm for class {}; falling back to exhaustive search",
                        class.name()
                    );
                    brute_solve(g, Problem::Mscs, cap)?
                }
            }
        }
    })
}

#[derive(Serialize)]
struct SolveReport<'a> {
    problem: Problem,
    class: &'a str,
    algorithm: crate::result::Algorithm,
    size: usize,
    witness: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.input)?;
    let class = classify(&g);
    let start = Instant::now();
    let r = dispatch(&g, a.problem, a.class, a.cap, err)?;
    let elapsed = start.elapsed();
    let verified = if a.verify { Some(verify(&g, &r.witness, mode_for(r.problem))?.holds) } else { None };
    let report = SolveReport {
        problem: r.problem,
        class: class.name(),
        algorithm: r.algorithm,
        size: r.size,
        witness: &r.witness,
        verified,
    };
    let text = if a.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        let mut s = String::new();
        writeln!(s, "problem: {}", report.problem).unwrap();
        writeln!(s, "class: {}", report.class).unwrap();
        writeln!(s, "algorithm: {}", report.algorithm).unwrap();
        writeln!(s, "size: {}", report.size).unwrap();
        writeln!(s, "witness: {}", join(report.witness)).unwrap();
        if let Some(v) = verified {
            writeln!(s, "verified: {}", if v { "yes" } else { "no" }).unwrap();
        }
        s
    };
    emit(&text, a.output.as_deref(), out)?;
    let _ = writeln!(err, "time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    Ok(if verified == Some(false) { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

fn parse_subset(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| input_error(format!("bad vertex id {t:?}"))))
        .collect()
}

fn render_report(r: &VerifyReport) -> String {
    let mut s = String::new();
    writeln!(s, "mode: {}", r.mode).unwrap();
    writeln!(s, "holds: {}", if r.holds { "yes" } else { "no" }).unwrap();
    for v in &r.violations {
        let kind = match v.kind {
            crate::consistency::ViolationKind::Color => "color",
            crate::consistency::ViolationKind::UnhitBlock => "unhit-block",
        };
        let colors: Vec<String> = v.colors_seen.iter().map(u32::to_string).collect();
        writeln!(
            s,
            "violation: vertex {} ({kind}); nearest {}; colors {}",
            v.vertex,
            join(&v.nearest),
            colors.join(",")
        )
        .unwrap();
    }
    s
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.input)?;
    let subset = parse_subset(&a.subset)?;
    let mode = match a.mode {
        ModeArg::Cs => Mode::Cs,
        ModeArg::Scs => Mode::Scs,
        ModeArg::Css => Mode::Css,
    };
    let report = verify(&g, &subset, mode)?;
    let text = if a.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        render_report(&report)
    };
    emit(&text, a.output.as_deref(), out)?;
    Ok(if report.holds { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn parse_eps(s: &str) -> CliResult<(u64, u64)> {
    let (num, den) = s.split_once('/').ok_or_else(|| usage(format!("--eps must look like num/den, got {s:?}")))?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| usage(format!("bad --eps value {s:?}")));
    Ok((parse(num)?, parse(den)?))
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

fn cmd_reduce(a: ReduceArgs, out: &mut dyn Write) -> CliResult<i32> {
    let (inst, source_opt): (ReductionInstance, Option<CliResult<usize>>) = match a.reduction {
        ReductionArg::DominatingToMcs | ReductionArg::DominatingToMscs => {
            let g = load_graph(&a.input)?;
            let inst = if a.reduction == ReductionArg::DominatingToMcs {
                dominating_to_mcs(&g)?
            } else {
                let (num, den) = parse_eps(&a.eps)?;
                dominating_to_mscs(&g, num, den)?
            };
            let gamma = a.certify.then(|| {
                brute_dominating_capped(&g, a.cap).map(|r| r.size).map_err(Failure::from)
            });
            (inst, gamma)
        }
        ReductionArg::Max2satToTree => {
            let text = String::from_utf8(read(&a.input)?).map_err(|_| input_error("CNF file is not UTF-8"))?;
            let f = Formula::parse_dimacs(&text)?;
            let big_m = a.stabilizer.unwrap_or_else(|| default_stabilizers(&f));
            let inst = max2sat_to_tree_mcs(&f, big_m)?;
            let k = a.certify.then(|| brute_max2sat(&f).map(|r| r.0).map_err(Failure::from));
            (inst, k)
        }
    };
    match &a.output {
        Some(p) => {
            emit(&inst.target.to_json(), Some(p), out)?;
            emit(&inst.meta_json(), Some(&sidecar(p)), out)?;
            let _ = writeln!(out, "wrote {} ({} vertices) and {}", p.display(), inst.target.vertex_count(), sidecar(p).display());
        }
        None => emit(&inst.target.to_json(), None, out)?,
    }
    let Some(source_opt) = source_opt else {
        return Ok(EXIT_OK);
    };
    let source_opt = source_opt?;
    let expected = inst.expected_size(source_opt);
    let ok = certify_reduction_capped(&inst, source_opt, a.cap)?;
    let verdict = if ok { "OK" } else { "FAILED" };
    let line = if a.json {
        serde_json::json!({ "certificate": verdict, "source_opt": source_opt, "expected": expected }).to_string()
    } else {
        format!("certificate {verdict}: source optimum {source_opt}, expected target optimum {expected}")
    };
    let _ = writeln!(out, "{line}");
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> CliResult<i32> {
    let p = GenParams {
        shape: a.shape,
        n: a.n,
        colors: a.colors,
        seed: a.seed,
        max_weight: a.max_weight,
        legs: a.legs,
        teeth: a.teeth,
    };
    let g = generate(&p)?;
    emit(&g.to_json(), a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let sizes: Vec<usize> = a
        .sizes
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad size {t:?}"))))
        .collect::<CliResult<_>>()?;
    let mut table = String::from("shape,n,seed,algorithm,size,millis\n");
    for &n in &sizes {
        for r in 0..a.repeat {
            let seed = a.seed + r as u64;
            let g = generate(&GenParams::new(a.shape, n, a.colors, seed))?;
            let start = Instant::now();
            let res = dispatch(&g, ProblemArg::Mscs, a.class, a.cap, err)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let shape = a.shape.to_possible_value().unwrap();
            writeln!(table, "{},{n},{seed},{},{},{ms:.3}", shape.get_name(), res.algorithm, res.size).unwrap();
        }
    }
    emit(&table, a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Reduce(a) => cmd_reduce(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Bench(a) => cmd_bench(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

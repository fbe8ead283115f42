//! Command-line front end: run streaming algorithms on stream files, query
//! the exact oracles, generate hard instances and verify them.

pub mod generate;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use pstream::clause_stream::{sat_naive, ClauseStream};
use pstream::multipass_vc::{vc_branching, vc_iterative_compression, VcOutcome, VcRun};
use pstream::oracles::{
    domset_min, fvs_min, girth, longest_path, sat2_solve, satd_brute, treewidth_exact, vc_min,
    CnfInstance, Satisfiability,
};
use pstream::reductions::{extract_bit_via_solver, Generated, ReductionTag};
use pstream::sweep::Executor;
use pstream::threshold::{
    bidimensional_decide, k_fvs_decide, k_path_decide, k_treewidth_decide, BidimensionalProblemSpec,
    Certificate, Decision, ThresholdReport,
};
use pstream::{ReplayableStream, StreamModel};
use thiserror::Error;

use generate::{Params, Truth};
use report::{join_ids, RunReport};

#[derive(Debug, Parser)]
#[command(name = "pstream", version, about = "Streaming parameterized graph algorithms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a streaming algorithm on a stream file (DIMACS CNF for sat-naive).
    Run {
        /// vc-branching, vc-ic, path, treewidth, fvs, bidim:<name> or sat-naive
        problem: String,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        input: PathBuf,
        /// Reinterpret the stream under this model.
        #[arg(long)]
        model: Option<StreamModel>,
        /// Constant of the bidimensional edge threshold.
        #[arg(long, default_value_t = 1)]
        tau: u64,
    },
    /// Exact offline value and witness.
    Oracle {
        /// vc, fvs, treewidth, path, girth, domset, 2sat or sat
        problem: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate a hard instance and its `<out>.truth` sidecar.
    Gen {
        /// perm-5path, perm-treewidth1, perm-fvs0, index-domset3, index-girth3,
        /// index-2sat or domset-est
        reduction: ReductionTag,
        /// Comma-separated key=value pairs.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode every input with the oracles and compare with its sidecar.
    Verify {
        reduction: ReductionTag,
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: pstream::Error,
    },
    #[error(transparent)]
    Core(#[from] pstream::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for bad input, 3 when an oracle or budget refuses the instance.
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Input { source, .. } | CliError::Core(source) => source,
            _ => return 2,
        };
        match core {
            pstream::Error::DeskBound { .. }
            | pstream::Error::BudgetOverflow { .. }
            | pstream::Error::SketchContradiction { .. } => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn in_file<T>(path: &Path, r: pstream::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_stream(path: &Path) -> CliResult<ReplayableStream> {
    in_file(path, ReplayableStream::parse(&read(path)?))
}

pub fn load_cnf(path: &Path) -> CliResult<CnfInstance> {
    in_file(path, CnfInstance::parse_dimacs(&read(path)?))
}

pub fn sidecar_path(instance: &Path) -> PathBuf {
    let mut s = instance.as_os_str().to_owned();
    s.push(".truth");
    PathBuf::from(s)
}

fn apply_model(stream: ReplayableStream, model: Option<StreamModel>) -> CliResult<ReplayableStream> {
    match (model, stream.model()) {
        (None, _) => Ok(stream),
        (Some(want), have) if want == have => Ok(stream),
        (Some(StreamModel::InsertDelete), StreamModel::InsertOnly) => Ok(stream.as_insert_delete()),
        (Some(want), have) => Err(CliError::Usage(format!(
            "a {have} stream cannot be read as {want}"
        ))),
    }
}

fn need_k(k: Option<u64>, problem: &str) -> CliResult<u64> {
    k.ok_or_else(|| CliError::Usage(format!("{problem} needs --k")))
}

fn threshold_report(problem: &str, k: u64, model: StreamModel, r: ThresholdReport) -> RunReport {
    RunReport {
        problem: problem.to_string(),
        k: Some(k),
        model,
        decision: r.decision,
        witness: r.certificate.map(|c| match c {
            Certificate::Path(p) | Certificate::VertexSet(p) => p,
        }),
        passes: r.passes,
        peak_words: r.peak_words,
        threshold: Some(r.threshold),
        wall_time: Default::default(),
    }
}

fn vc_report(problem: &str, k: u64, r: VcRun) -> RunReport {
    let (decision, witness) = match r.outcome {
        VcOutcome::Cover(c) => (Decision::Yes, Some(c)),
        VcOutcome::No => (Decision::No, None),
    };
    RunReport {
        problem: problem.to_string(),
        k: Some(k),
        model: StreamModel::InsertOnly,
        decision,
        witness,
        passes: r.passes,
        peak_words: r.peak_words,
        threshold: None,
        wall_time: Default::default(),
    }
}

pub fn cmd_run(
    problem: &str,
    k: Option<u64>,
    input: &Path,
    model: Option<StreamModel>,
    tau: u64,
) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = if problem == "sat-naive" {
        let cnf = load_cnf(input)?;
        let r = sat_naive(&ClauseStream::new(cnf))?;
        RunReport {
            problem: problem.to_string(),
            k,
            model: StreamModel::InsertOnly,
            decision: Decision::from_bool(r.result == Satisfiability::Sat),
            witness: None,
            passes: r.passes,
            peak_words: r.peak_words,
            threshold: None,
            wall_time: Default::default(),
        }
    } else {
        let k = need_k(k, problem)?;
        let stream = apply_model(load_stream(input)?, model)?;
        let m = stream.model();
        match problem {
            "vc-branching" | "vc-ic" => {
                let ku = usize::try_from(k).map_err(|_| CliError::Usage(format!("k={k} too large")))?;
                let run = if problem == "vc-branching" {
                    vc_branching(&stream, ku)?
                } else {
                    vc_iterative_compression(&stream, ku)?
                };
                vc_report(problem, k, run)
            }
            "path" => threshold_report(problem, k, m, k_path_decide(&stream, k)?),
            "treewidth" => threshold_report(problem, k, m, k_treewidth_decide(&stream, k)?),
            "fvs" => threshold_report(problem, k, m, k_fvs_decide(&stream, k)?),
            other => {
                let spec = other
                    .strip_prefix("bidim:")
                    .and_then(BidimensionalProblemSpec::by_name)
                    .ok_or_else(|| CliError::Usage(format!("unknown problem `{other}`")))?;
                threshold_report(problem, k, m, bidimensional_decide(&stream, k, &spec, tau)?)
            }
        }
    };
    report.wall_time = start.elapsed();
    Ok(report)
}

/// `value=` and optional `witness=` lines for one oracle query.
pub fn cmd_oracle(problem: &str, input: &Path) -> CliResult<Vec<(String, String)>> {
    let mut out = vec![("problem".to_string(), problem.to_string())];
    let mut push = |k: &str, v: String| out.push((k.to_string(), v));
    match problem {
        "2sat" | "sat" => {
            let cnf = load_cnf(input)?;
            let r = if problem == "2sat" { sat2_solve(&cnf)? } else { satd_brute(&cnf)? };
            push("value", if r == Satisfiability::Sat { "SAT" } else { "UNSAT" }.into());
        }
        _ => {
            let g = load_stream(input)?.net_graph();
            let (value, witness) = match problem {
                "vc" => vc_min(&g).map(|(v, w)| (v.to_string(), Some(w)))?,
                "fvs" => fvs_min(&g).map(|(v, w)| (v.to_string(), Some(w)))?,
                "domset" => domset_min(&g).map(|(v, w)| (v.to_string(), Some(w)))?,
                "treewidth" => (treewidth_exact(&g)?.to_string(), None),
                "path" => {
                    let p = longest_path(&g)?;
                    (p.len().saturating_sub(1).to_string(), Some(p))
                }
                "girth" => (girth(&g)?.map_or("inf".to_string(), |x| x.to_string()), None),
                other => return Err(CliError::Usage(format!("unknown oracle `{other}`"))),
            };
            push("value", value);
            if let Some(w) = witness {
                push("witness", join_ids(&w));
            }
        }
    }
    Ok(out)
}

/// Writes the instance to `out` and the sidecar to `<out>.truth`.
pub fn cmd_gen(tag: ReductionTag, params: &[String], seed: u64, out: &Path) -> CliResult<Truth> {
    let params = Params::parse(params)?;
    let artifact = generate::generate(tag, &params, seed)?;
    write(out, &artifact.body())?;
    write(&sidecar_path(out), &artifact.sidecar(tag, seed))?;
    Ok(artifact.truth)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub input: PathBuf,
    pub expected: Truth,
    pub got: Truth,
}

impl VerifyOutcome {
    pub fn matches(&self) -> bool {
        self.expected == self.got
    }
}

pub fn verify_one(tag: ReductionTag, input: &Path) -> CliResult<VerifyOutcome> {
    let side = sidecar_path(input);
    let expected = in_file(&side, Truth::from_sidecar(&read(&side)?))?;
    let got = match tag {
        ReductionTag::DomsetEst => {
            Truth::Opt(domset_min(&load_stream(input)?.net_graph())?.0)
        }
        ReductionTag::Index2Sat => {
            let cnf = load_cnf(input)?;
            Truth::Bit(extract_bit_via_solver(&Generated::Cnf(cnf), tag)?)
        }
        _ => {
            let g = Generated::Graph(load_stream(input)?);
            Truth::Bit(in_file(input, extract_bit_via_solver(&g, tag))?)
        }
    };
    Ok(VerifyOutcome {
        input: input.to_path_buf(),
        expected,
        got,
    })
}

pub fn cmd_verify(tag: ReductionTag, inputs: &[PathBuf], executor: Executor) -> CliResult<Vec<VerifyOutcome>> {
    executor
        .map_collect(inputs, |p| verify_one(tag, p))
        .into_iter()
        .collect()
}

/// Runs one command, writing its report to `out`. Returns the exit code for
/// a completed command: 0, or 1 when `verify` found a mismatch.
pub fn execute(cli: Cli, out: &mut impl Write) -> CliResult<i32> {
    let io = |source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match cli.command {
        Command::Run {
            problem,
            k,
            input,
            model,
            tau,
        } => {
            let report = cmd_run(&problem, k, &input, model, tau)?;
            write!(out, "{report}").map_err(io)?;
            Ok(0)
        }
        Command::Oracle { problem, input } => {
            for (k, v) in cmd_oracle(&problem, &input)? {
                writeln!(out, "{k}={v}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Gen {
            reduction,
            params,
            seed,
            out: path,
        } => {
            let truth = cmd_gen(reduction, &params, seed, &path)?;
            writeln!(out, "reduction={reduction}\nout={}\ntruth {truth}", path.display()).map_err(io)?;
            Ok(0)
        }
        Command::Verify {
            reduction,
            input,
            sequential,
        } => {
            let executor = if sequential { Executor::Sequential } else { Executor::default() };
            let outcomes = cmd_verify(reduction, &input, executor)?;
            let mut mismatches = 0;
            for o in &outcomes {
                let status = if o.matches() { "ok" } else { "mismatch" };
                mismatches += usize::from(!o.matches());
                writeln!(
                    out,
                    "input={} expected={} got={} status={status}",
                    o.input.display(),
                    o.expected,
                    o.got
                )
                .map_err(io)?;
            }
            writeln!(out, "checked={} mismatches={mismatches}", outcomes.len()).map_err(io)?;
            Ok(if mismatches == 0 { 0 } else { 1 })
        }
    }
}

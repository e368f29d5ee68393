//! Batch command-line front end.
//!
//! [`run`] parses an argument list, dispatches to the owning module and
//! writes the report to `out` (or to `--out`). Tables default to CSV and
//! single records to one-line JSON; `--format` overrides either.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample
//! or a numerical routine fails, 2 on a usage or input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::bench::{bench_subset_sum, log2_slope, records_csv, Algorithm};
use crate::collatz::{self, ParityVector};
use crate::error::Error;
use crate::matching::{self, BipartiteGraph, PreferenceProfile};
use crate::number_theory as nt;
use crate::subset_sum::{self, SubsetSumInstance};
use crate::topswops::{self, Deck};
use crate::zeta;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_229;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "workbench", version, about = "Exact solvers, oracles and verification scans")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Output format; tables default to csv, single records to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Subset-sum solvers and benchmark.
    #[command(subcommand, name = "subset-sum")]
    SubsetSum(SubsetSumCmd),
    /// Maximum bipartite matching.
    #[command(subcommand, name = "match")]
    Match(MatchCmd),
    /// Collatz trajectories, range verification and parity vectors.
    #[command(subcommand)]
    Collatz(CollatzCmd),
    /// Reverse-card-shuffling runs and the max-iteration table.
    #[command(subcommand)]
    Topswops(TopswopsCmd),
    /// Mertens, prime counting, Goldbach, Chen and twin primes.
    #[command(subcommand)]
    Nt(NtCmd),
    /// ζ evaluation and zero counting.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Same as `subset-sum bench`.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    Mitm,
    Naive,
}

#[derive(Debug, Subcommand)]
pub enum SubsetSumCmd {
    /// Solve an instance file (`n b` header, then n integers).
    Solve {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverChoice::Mitm)]
        solver: SolverChoice,
    },
    /// Emit a seeded random instance file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000_000)]
        bound: i64,
        /// Plant a solution.
        #[arg(long)]
        solvable: bool,
    },
    /// Comparison-count scaling of both solvers on solution-free instances.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub min_n: usize,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Include median wall time (varies between runs).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum MatchCmd {
    /// Maximum matching of a graph file (`L R` header, then `i j` edges)
    /// or of the compatibility graph of a preference file.
    Solve {
        #[arg(long, conflicts_with = "profiles", required_unless_present = "profiles")]
        file: Option<PathBuf>,
        #[arg(long)]
        profiles: Option<PathBuf>,
    },
    /// Emit a seeded random graph file.
    Gen {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CollatzCmd {
    /// Shortcut-map trajectory as `step,value,parity` CSV.
    Trace {
        n: BigUint,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Check that every start in [lo, hi] halts.
    Verify {
        #[arg(long, default_value_t = 1)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Residue class realizing a parity prefix such as `1101`.
    Realize { bits: String },
    /// Mean log step factor over seeded random starts.
    Drift {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 64)]
        bits: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum TopswopsCmd {
    /// Run one deck, e.g. `5732416` or `10,2,1,…`.
    Run { deck: String },
    /// `n,max_steps,witness` for n = 1..=max-n.
    Table {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Allow n = 11 (about 4·10⁷ runs).
        #[arg(long)]
        allow_slow: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum NtCmd {
    /// `n,M(n)` series, or with `--check-c` the list of bound violations.
    Mertens {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long)]
        check_c: Option<f64>,
    },
    /// `n,pi,li,err` at checkpoints (default: powers of ten from 10 up to n).
    Pi {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<u64>,
    },
    /// Goldbach witness for `--n`, or range check over [lo, hi].
    Goldbach {
        #[arg(long, conflicts_with_all = ["lo", "hi"], required_unless_present = "hi")]
        n: Option<u64>,
        #[arg(long, default_value_t = 4)]
        lo: u64,
        #[arg(long)]
        hi: Option<u64>,
    },
    /// Chen decomposition of an even number.
    Chen {
        #[arg(long)]
        n: u64,
    },
    /// Twin-prime pairs up to n.
    Twins {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMethod {
    Em,
    Integral,
}

#[derive(Debug, Subcommand)]
pub enum ZetaCmd {
    /// ζ(re + i·im).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        im: f64,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Em)]
        method: ZetaMethod,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Count sign changes of Z(t) on [2, T].
    Zeros {
        #[arg(long = "t")]
        height: f64,
        #[arg(long, default_value_t = zeta::DEFAULT_GRID_STEP)]
        step: f64,
    },
    /// `t,Z(t)` samples.
    Sample {
        #[arg(long, default_value_t = 2.0)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
    },
}

/// A rendered report in both formats, plus the exit status it implies.
struct Report {
    default: Format,
    csv: String,
    json: String,
    status: i32,
}

impl Report {
    fn table(csv: String, json: String) -> Self {
        Report { default: Format::Csv, csv, json, status: EXIT_OK }
    }

    fn record<T: Serialize>(value: &T, csv: String) -> Self {
        Report {
            default: Format::Json,
            csv,
            json: serde_json::to_string(value).expect("report serializes") + "\n",
            status: EXIT_OK,
        }
    }

    fn failing_if(mut self, failed: bool) -> Self {
        if failed {
            self.status = EXIT_FAILURE;
        }
        self
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence(_) | Error::ToleranceUnreachable { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = config.workers {
        pool = pool.num_threads(w as usize);
    }
    let outcome = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(&config)),
        Err(e) => Err(Failure::Runtime(format!("cannot start worker pool: {e}"))),
    };
    let report = match outcome {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_FAILURE;
        }
    };
    let text = match config.format.unwrap_or(report.default) {
        Format::Csv => &report.csv,
        Format::Json => &report.json,
    };
    let written = match &config.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    report.status
}

fn read_file(path: &PathBuf) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(config: &RunConfig) -> Outcome {
    let seed = config.seed;
    match &config.command {
        Command::SubsetSum(cmd) => subset_sum_cmd(cmd, seed),
        Command::Bench(args) => bench_cmd(args, seed),
        Command::Match(cmd) => match_cmd(cmd, seed),
        Command::Collatz(cmd) => collatz_cmd(cmd, seed),
        Command::Topswops(cmd) => topswops_cmd(cmd),
        Command::Nt(cmd) => nt_cmd(cmd),
        Command::Zeta(cmd) => zeta_cmd(cmd),
    }
}

fn subset_sum_cmd(cmd: &SubsetSumCmd, seed: u64) -> Outcome {
    match cmd {
        SubsetSumCmd::Solve { file, solver } => {
            let instance = SubsetSumInstance::parse(&read_file(file)?)?;
            let (witness, stats) = match solver {
                SolverChoice::Mitm => subset_sum::solve_mitm_with_stats(&instance)?,
                SolverChoice::Naive => subset_sum::solve_naive_with_stats(&instance)?,
            };
            let indices = witness.map(|w| w.indices());
            let record = json!({
                "solvable": indices.is_some(),
                "indices": indices,
                "comparisons": stats.comparisons(),
            });
            let mut rep = Report::record(&record, subset_sum::format_witness(witness.as_ref()) + "\n");
            rep.default = Format::Csv;
            Ok(rep)
        }
        SubsetSumCmd::Gen { n, bound, solvable } => {
            let instance = subset_sum::random_instance(*n, *bound, *solvable, seed)?;
            let text = instance.to_file_string();
            let json = json!({ "n": n, "target": instance.target(), "elements": instance.elements() });
            Ok(Report::table(text, json.to_string() + "\n"))
        }
        SubsetSumCmd::Bench(args) => bench_cmd(args, seed),
    }
}

fn bench_cmd(args: &BenchArgs, seed: u64) -> Outcome {
    if args.min_n > args.max_n {
        return Err(Failure::Usage(format!("--min-n {} exceeds --max-n {}", args.min_n, args.max_n)));
    }
    let ns: Vec<usize> = (args.min_n..=args.max_n).collect();
    let records = bench_subset_sum(&ns, args.trials, seed)?;
    let rows: Vec<_> = records
        .iter()
        .map(|r| {
            let mut v = json!({
                "algorithm": r.algorithm, "n": r.n, "trials": r.trials,
                "comparisons": r.comparisons, "solvable": r.solvable,
            });
            if args.timing {
                v["wall_seconds"] = json!(r.wall_seconds);
            }
            v
        })
        .collect();
    let json = json!({
        "records": rows,
        "naive_slope": log2_slope(&records, Algorithm::Naive),
        "mitm_slope": log2_slope(&records, Algorithm::Mitm),
    });
    Ok(Report::table(records_csv(&records, args.timing), json.to_string() + "\n"))
}

fn match_cmd(cmd: &MatchCmd, seed: u64) -> Outcome {
    match cmd {
        MatchCmd::Solve { file, profiles } => {
            let graph = match (file, profiles) {
                (Some(f), _) => BipartiteGraph::parse(&read_file(f)?)?,
                (None, Some(p)) => matching::build_compatibility(&PreferenceProfile::parse(&read_file(p)?)?),
                (None, None) => return Err(Failure::Usage("need --file or --profiles".into())),
            };
            let m = matching::maximum_matching(&graph);
            let pairs = m.pairs();
            let mut csv = String::from("left,right\n");
            for (l, r) in &pairs {
                csv.push_str(&format!("{l},{r}\n"));
            }
            let json = json!({ "size": m.len(), "perfect": m.is_perfect(), "pairs": pairs });
            Ok(Report::table(csv, json.to_string() + "\n"))
        }
        MatchCmd::Gen { left, right, density } => {
            let g = matching::random_graph(*left, *right, *density, seed)?;
            let json = json!({ "left": left, "right": right, "edges": g.edges().collect::<Vec<_>>() });
            Ok(Report::table(g.to_file_string(), json.to_string() + "\n"))
        }
    }
}

fn collatz_cmd(cmd: &CollatzCmd, seed: u64) -> Outcome {
    match cmd {
        CollatzCmd::Trace { n, max_steps } => {
            let t = collatz::trajectory(n, *max_steps)?;
            let values: Vec<String> = t.values.iter().map(BigUint::to_string).collect();
            let json = json!({ "start": n.to_string(), "steps": t.steps, "halted": t.halted, "values": values });
            Ok(Report::table(t.to_csv(), json.to_string() + "\n"))
        }
        CollatzCmd::Verify { lo, hi, budget } => {
            let r = collatz::verify_range(*lo, *hi, *budget)?;
            let csv = format!(
                "lo,hi,all_halted,max_steps_seen,max_steps_start,max_excursion,unhalted\n{},{},{},{},{},{},{}\n",
                r.lo, r.hi, r.all_halted, r.max_steps_seen, r.max_steps_start, r.max_excursion, r.unhalted.len()
            );
            let failed = !r.all_halted;
            Ok(Report::record(&r, csv).failing_if(failed))
        }
        CollatzCmd::Realize { bits } => {
            let pv = ParityVector::parse(bits)?;
            let class = collatz::realize_parity_prefix(&pv)?;
            let record = json!({
                "prefix": pv.to_string(),
                "residue": class.residue.to_string(),
                "modulus_bits": class.bits,
                "least_positive": class.least_positive().to_string(),
            });
            let csv = format!("prefix,residue,modulus_bits\n{},{},{}\n", pv, class.residue, class.bits);
            Ok(Report::record(&record, csv))
        }
        CollatzCmd::Drift { samples, bits } => {
            let mean = collatz::drift_statistic(*samples, *bits, seed)?;
            let expected = 0.5 * 0.75f64.ln();
            let record = json!({ "samples": samples, "bits": bits, "seed": seed, "mean": mean, "expected": expected });
            let csv = format!("samples,bits,seed,mean,expected\n{samples},{bits},{seed},{mean:.6},{expected:.6}\n");
            Ok(Report::record(&record, csv))
        }
    }
}

fn topswops_cmd(cmd: &TopswopsCmd) -> Outcome {
    match cmd {
        TopswopsCmd::Run { deck } => {
            let deck = Deck::parse(deck)?;
            let decks = topswops::trace(&deck);
            let mut csv = String::from("step,deck\n");
            for (i, d) in decks.iter().enumerate() {
                csv.push_str(&format!("{i},{d}\n"));
            }
            let json = json!({
                "deck": deck.to_string(),
                "steps": decks.len() - 1,
                "final": decks.last().map(Deck::to_string),
            });
            Ok(Report::table(csv, json.to_string() + "\n"))
        }
        TopswopsCmd::Table { max_n, allow_slow } => {
            let rows = (1..=*max_n)
                .map(|n| topswops::max_iterations(n, *allow_slow))
                .collect::<crate::Result<Vec<_>>>()?;
            let json: Vec<_> = rows
                .iter()
                .map(|r| json!({ "n": r.n, "max_steps": r.max_steps, "witness": r.witness.to_string() }))
                .collect();
            Ok(Report::table(topswops::table_csv(&rows), serde_json::to_string(&json).unwrap() + "\n"))
        }
    }
}

fn nt_cmd(cmd: &NtCmd) -> Outcome {
    match cmd {
        NtCmd::Mertens { n, stride, check_c: None } => {
            let series = nt::mertens(*n)?;
            let values: Vec<i64> = (1..=*n).step_by((*stride).max(1)).map(|k| series.at(k)).collect();
            let json = json!({ "n": n, "stride": stride, "values": values });
            Ok(Report::table(series.to_csv(*stride), json.to_string() + "\n"))
        }
        NtCmd::Mertens { n, check_c: Some(c), .. } => {
            let violations = nt::mertens_bound_check(*n, *c)?;
            let record = json!({
                "n": n, "c": c, "holds": violations.is_empty(),
                "violations": violations.len(), "first": violations.first(),
            });
            let csv = format!("n,c,holds,violations\n{n},{c},{},{}\n", violations.is_empty(), violations.len());
            Ok(Report::record(&record, csv).failing_if(!violations.is_empty()))
        }
        NtCmd::Pi { n, checkpoints } => {
            let points: Vec<u64> = if checkpoints.is_empty() {
                std::iter::successors(Some(10u64), |&p| p.checked_mul(10)).take_while(|&p| p <= *n).collect()
            } else {
                checkpoints.clone()
            };
            let rows = nt::prime_count_vs_li(*n, &points)?;
            Ok(Report::table(nt::pi_li_csv(&rows), serde_json::to_string(&rows).unwrap() + "\n"))
        }
        NtCmd::Goldbach { n: Some(n), .. } => {
            let w = nt::goldbach_witness(*n)?;
            let csv = match &w {
                Some(w) => format!("even_n,p,q\n{},{},{}\n", w.even_n, w.p, w.q),
                None => format!("even_n,p,q\n{n},,\n"),
            };
            let record = json!({ "even_n": n, "witness": w, "counterexample": w.is_none() });
            Ok(Report::record(&record, csv).failing_if(w.is_none()))
        }
        NtCmd::Goldbach { n: None, lo, hi } => {
            let hi = hi.ok_or_else(|| Failure::Usage("need --n or --hi".into()))?;
            let r = nt::goldbach_verify_range(*lo, hi)?;
            let csv = format!(
                "lo,hi,evens_checked,counterexamples\n{},{},{},{}\n",
                r.lo, r.hi, r.evens_checked, r.counterexamples.len()
            );
            let failed = !r.counterexamples.is_empty();
            Ok(Report::record(&r, csv).failing_if(failed))
        }
        NtCmd::Chen { n } => {
            let w = nt::chen_witness(*n)?;
            let csv = match &w {
                Some(w) => {
                    let (form, second) = match w.second {
                        nt::ChenPart::Prime(q) => ("prime", q.to_string()),
                        nt::ChenPart::Semiprime(q, r) => ("semiprime", format!("{q}*{r}")),
                    };
                    format!("even_n,p,form,second\n{},{},{form},{second}\n", w.even_n, w.p)
                }
                None => format!("even_n,p,form,second\n{n},,,\n"),
            };
            let record = json!({ "even_n": n, "witness": w, "counterexample": w.is_none() });
            Ok(Report::record(&record, csv).failing_if(w.is_none()))
        }
        NtCmd::Twins { n } => {
            let pairs = nt::twin_primes_up_to(*n)?;
            let mut csv = String::from("p,p_plus_2\n");
            for (p, q) in &pairs {
                csv.push_str(&format!("{p},{q}\n"));
            }
            Ok(Report::table(csv, serde_json::to_string(&pairs).unwrap() + "\n"))
        }
    }
}

fn zeta_cmd(cmd: &ZetaCmd) -> Outcome {
    match cmd {
        ZetaCmd::Eval { re, im, method, tolerance } => {
            let s = Complex64::new(*re, *im);
            let (value, error) = match method {
                ZetaMethod::Em => zeta::zeta_em_with_error(s)?,
                ZetaMethod::Integral => (zeta::zeta_integral(s, *tolerance)?, *tolerance),
            };
            let name = match method {
                ZetaMethod::Em => "em",
                ZetaMethod::Integral => "integral",
            };
            let record = json!({
                "re": re, "im": im, "method": name,
                "value_re": value.re, "value_im": value.im, "error_bound": error,
            });
            let csv = format!(
                "re,im,method,value_re,value_im,error_bound\n{re},{im},{name},{:.12},{:.12},{error:.3e}\n",
                value.re, value.im
            );
            Ok(Report::record(&record, csv))
        }
        ZetaCmd::Zeros { height, step } => {
            let r = zeta::count_sign_changes(*height, *step)?;
            let csv = format!(
                "T,sign_changes,argument_estimate,argument_count,grid_step,refined,unresolved_brackets\n{},{},{:.6},{},{},{},{}\n",
                r.height, r.sign_changes, r.argument_estimate, r.argument_count, r.grid_step, r.refined, r.unresolved_brackets
            );
            let failed = r.unresolved_brackets > 0;
            Ok(Report::record(&r, csv).failing_if(failed))
        }
        ZetaCmd::Sample { from, to, step } => {
            let csv = zeta::sample_csv(*from, *to, *step)?;
            let rows: Vec<_> = csv
                .lines()
                .skip(1)
                .filter_map(|l| l.split_once(','))
                .map(|(t, z)| json!({ "t": t.parse::<f64>().ok(), "z": z.parse::<f64>().ok() }))
                .collect();
            Ok(Report::table(csv, serde_json::to_string(&rows).unwrap() + "\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["workbench"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn topswops_table_row() {
        let (code, out, _) = call(&["topswops", "table", "--max-n", "7"]);
        assert_eq!(code, 0);
        assert!(out.lines().last().unwrap().starts_with("7,16,"));
    }

    #[test]
    fn collatz_trace_eleven() {
        let (code, out, _) = call(&["collatz", "trace", "11"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 12);
        assert_eq!(out.lines().last(), Some("10,1,1"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["subset-sum", "solve", "--file", "absent.txt"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["nt", "goldbach", "--n", "7"]).0, 2);
        assert_eq!(call(&["--workers", "0", "nt", "twins", "--n", "10"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn failing_verification_exits_one() {
        let (code, out, _) = call(&["nt", "mertens", "--n", "100", "--check-c", "0.000001"]);
        assert_eq!(code, 1);
        assert!(out.contains("\"holds\":false"));
        let (code, _, _) = call(&["collatz", "verify", "--lo", "1", "--hi", "100", "--budget", "3"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn format_override() {
        let (_, csv, _) = call(&["nt", "twins", "--n", "10"]);
        assert_eq!(csv, "p,p_plus_2\n3,5\n5,7\n");
        let (_, js, _) = call(&["--format", "json", "nt", "twins", "--n", "10"]);
        assert_eq!(js, "[[3,5],[5,7]]\n");
        let (_, js, _) = call(&["nt", "chen", "--n", "12", "--format", "csv"]);
        assert_eq!(js, "even_n,p,form,second\n12,5,prime,7\n");
    }
}

//! Command-line front-end: evaluates the inequality suite on seeded random
//! inputs, scenario files, and parameter grids, emitting CSV (checks, scans,
//! tables) or JSON (searches).
//!
//! Exit status: 0 when every check in the run holds, 1 when some check fails,
//! 2 on usage or domain errors (in which case no output file is written).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lpsharp::exponents::{nec_bound, r_limit, r_main, r_tilde};
use lpsharp::inequality::{corollary_report, main_report, p2_identity_report};
use lpsharp::measure::{FunctionFamily, MeasureSpace, Scenario};
use lpsharp::pair::{
    clarkson_report, improved_triangle_report, limit_triangle_bound, pair_bounds_report,
    replicated_triangle_bound,
};
use lpsharp::sampling::Sampler;
use lpsharp::scalar::{pre_scalar, scalar_final, scalar_nf5, scalar_nf5b};
use lpsharp::search::{fuzz_main, max_r_scalar, max_r_trial};
use lpsharp::trial::{trial_closed_forms, TrialConfig};
use lpsharp::{InequalityReport, DEFAULT_TOL};

#[derive(Parser)]
#[command(
    name = "lpsharp",
    version,
    about = "Sharpened L^p triangle-inequality toolkit",
    propagate_version = true
)]
struct Cli {
    /// Report destination: a file path, or "-" for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one inequality on seeded random inputs, a grid, or a scenario
    /// file; emits one CSV row per check.
    Verify(VerifyArgs),
    /// Tabulate the trial-family ratio K over an a-grid (CSV: a,K,sum_fp,gamma).
    Scan(ScanArgs),
    /// Tabulate closed-form exponents (CSV: N,p,r_main,r_tilde,r_limit,nec_bound).
    Exponents(ExponentsArgs),
    /// Search for the largest admissible overlap exponent r; emits JSON.
    SearchR(SearchRArgs),
    /// Run the full two-function suite (carb, carb+, carb++, tri5, clarkson)
    /// on scenario or seeded random pairs; emits one CSV row per bound.
    Pair(PairArgs),
    /// Track the replication bound's convergence to its limiting value
    /// (CSV: N,finite_bound,limit_bound).
    DemoLimit(DemoLimitArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ineq {
    Main,
    Corollary,
    P2,
    Clarkson,
    Tri5,
    Pair,
    Pre,
    Nf5,
    #[value(name = "nf5B")]
    Nf5B,
    Final,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which inequality to check.
    #[arg(long, value_enum)]
    ineq: Ineq,
    /// Number of functions in sampled families.
    #[arg(long = "N", default_value_t = 3)]
    n: u32,
    /// Exponent p (default 4, or the scenario's own p).
    #[arg(long)]
    p: Option<f64>,
    /// Overlap exponent r; defaults to r_main(N,p) where one is needed.
    #[arg(long)]
    r: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances to check, or grid points for the scalar forms.
    #[arg(long, default_value_t = 100)]
    iters: u64,
    /// Relative comparison tolerance (default: LP_SHARP_TOL, then 1e-10).
    #[arg(long)]
    tol: Option<f64>,
    /// Evaluate one family loaded from a scenario file instead of sampling.
    #[arg(long)]
    scenario: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long = "N", default_value_t = 3)]
    n: u32,
    #[arg(long, default_value_t = 4.0)]
    p: f64,
    /// Overlap exponent r (default r_main(N,p)).
    #[arg(long)]
    r: Option<f64>,
    #[arg(long = "a-min", default_value_t = 0.0)]
    a_min: f64,
    #[arg(long = "a-max", default_value_t = 1.0)]
    a_max: f64,
    /// Number of grid intervals; steps+1 rows are emitted.
    #[arg(long, default_value_t = 1000)]
    steps: u64,
    /// Relative comparison tolerance (default: LP_SHARP_TOL, then 1e-10).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct ExponentsArgs {
    /// Values of N (comma-separated).
    #[arg(long = "N", value_delimiter = ',', default_values_t = vec![2, 3, 4, 5, 6])]
    n: Vec<u32>,
    /// Values of p (comma-separated).
    #[arg(long, value_delimiter = ',', default_values_t = vec![2.5, 3.0, 4.0, 8.0])]
    p: Vec<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    /// Bisect r for the reduced x-form scalar bound.
    Scalar,
    /// Bisect r for K >= 1 over the trial family.
    Trial,
    /// Fuzz random families at a fixed r.
    Fuzz,
}

#[derive(Args)]
struct SearchRArgs {
    #[arg(long, value_enum)]
    mode: SearchMode,
    #[arg(long = "N", default_value_t = 3)]
    n: u32,
    #[arg(long, default_value_t = 4.0)]
    p: f64,
    /// Exponent under test in fuzz mode (default r_main(N,p)).
    #[arg(long)]
    r: Option<f64>,
    /// Bisection precision for the scalar/trial searches.
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Families sampled in fuzz mode.
    #[arg(long, default_value_t = 10_000)]
    iters: u64,
}

#[derive(Args)]
struct PairArgs {
    /// Exponent p (default 4, or the scenario's own p).
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random pairs to evaluate.
    #[arg(long, default_value_t = 1)]
    iters: u64,
    /// Relative comparison tolerance (default: LP_SHARP_TOL, then 1e-10).
    #[arg(long)]
    tol: Option<f64>,
    /// Load the pair from a two-function scenario file instead of sampling.
    #[arg(long)]
    scenario: Option<PathBuf>,
}

#[derive(Args)]
struct DemoLimitArgs {
    /// Exponent p (default 4, or the scenario's own p).
    #[arg(long)]
    p: Option<f64>,
    /// Largest replication count.
    #[arg(long = "N-max", default_value_t = 10_000)]
    n_max: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative comparison tolerance (default: LP_SHARP_TOL, then 1e-10).
    #[arg(long)]
    tol: Option<f64>,
    /// Load the pair from a two-function scenario file instead of sampling.
    #[arg(long)]
    scenario: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<bool, AnyError> {
    let (content, all_hold) = match cli.command {
        Command::Verify(args) => cmd_verify(args)?,
        Command::Scan(args) => cmd_scan(args)?,
        Command::Exponents(args) => cmd_exponents(args)?,
        Command::SearchR(args) => cmd_search_r(args)?,
        Command::Pair(args) => cmd_pair(args)?,
        Command::DemoLimit(args) => cmd_demo_limit(args)?,
    };
    if cli.output == "-" {
        print!("{content}");
    } else {
        std::fs::write(&cli.output, content)?;
    }
    Ok(all_hold)
}

/// 17 significant digits, so reports are byte-stable across platforms.
fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

fn resolve_tol(flag: Option<f64>) -> Result<f64, AnyError> {
    if let Some(tol) = flag {
        return Ok(tol);
    }
    match std::env::var("LP_SHARP_TOL") {
        Ok(text) => text
            .parse::<f64>()
            .map_err(|_| format!("LP_SHARP_TOL is not a number: {text:?}").into()),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

const REPORT_HEADER: &str = "label,N,p,r,lhs,rhs,slack,holds\n";

struct ReportSink {
    out: String,
    all_hold: bool,
    tol: f64,
}

impl ReportSink {
    fn new(tol: f64) -> Self {
        Self {
            out: REPORT_HEADER.to_string(),
            all_hold: true,
            tol,
        }
    }

    fn push(&mut self, rep: &InequalityReport, n: Option<u32>, p: Option<f64>, r: Option<f64>) {
        let holds = rep.holds_at(self.tol);
        self.all_hold &= holds;
        let n = n.map(|v| v.to_string()).unwrap_or_default();
        let p = p.map(|v| v.to_string()).unwrap_or_default();
        let r = r.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            self.out,
            "{},{n},{p},{r},{},{},{},{holds}",
            rep.label,
            f17(rep.lhs),
            f17(rep.rhs),
            f17(rep.slack),
        )
        .expect("writing to string cannot fail");
    }

    fn finish(self) -> (String, bool) {
        (self.out, self.all_hold)
    }
}

fn load_pair_scenario(path: &Path) -> Result<(MeasureSpace, Vec<f64>, Vec<f64>, f64), AnyError> {
    let scenario = Scenario::load(path)?;
    if scenario.family.len() != 2 {
        return Err(format!(
            "pair scenario must contain exactly 2 functions, got {}",
            scenario.family.len()
        )
        .into());
    }
    let f = scenario.family.function(0).to_vec();
    let g = scenario.family.function(1).to_vec();
    Ok((scenario.family.space().clone(), f, g, scenario.p))
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, bool), AnyError> {
    let tol = resolve_tol(args.tol)?;
    if args.iters == 0 {
        return Err("--iters must be at least 1".into());
    }
    let mut sink = ReportSink::new(tol);
    let mut sampler = Sampler::new(args.seed);

    match args.ineq {
        Ineq::Main | Ineq::Corollary | Ineq::P2 => {
            let (families, p): (Vec<FunctionFamily>, f64) = match &args.scenario {
                Some(path) => {
                    let scenario = Scenario::load(path)?;
                    let p = args.p.unwrap_or(scenario.p);
                    (vec![scenario.family], p)
                }
                None => (
                    (0..args.iters).map(|_| sampler.family(args.n)).collect(),
                    args.p.unwrap_or(4.0),
                ),
            };
            for fam in &families {
                let n = fam.len() as u32;
                match args.ineq {
                    Ineq::Main => {
                        let r = match args.r {
                            Some(r) => r,
                            None => r_main(n, p)?,
                        };
                        let rep = main_report(fam, p, Some(r))?;
                        sink.push(&rep, Some(n), Some(p), Some(r));
                    }
                    Ineq::Corollary => {
                        let rep = corollary_report(fam, p)?;
                        sink.push(&rep, Some(n), Some(p), Some(r_limit(p)?));
                    }
                    _ => {
                        let rep = p2_identity_report(fam)?;
                        sink.push(&rep, Some(n), Some(2.0), Some(1.0));
                    }
                }
            }
        }
        Ineq::Clarkson | Ineq::Tri5 | Ineq::Pair => {
            let (pairs, p) = match &args.scenario {
                Some(path) => {
                    let (space, f, g, scenario_p) = load_pair_scenario(path)?;
                    (vec![(space, f, g)], args.p.unwrap_or(scenario_p))
                }
                None => {
                    let pairs = (0..args.iters)
                        .map(|_| match args.ineq {
                            Ineq::Clarkson => sampler.signed_pair(),
                            _ => sampler.nonneg_pair(),
                        })
                        .collect();
                    (pairs, args.p.unwrap_or(4.0))
                }
            };
            return verify_pairs(args.ineq, pairs, p, sink);
        }
        Ineq::Pre => {
            let p = args.p.unwrap_or(4.0);
            for k in 0..=args.iters {
                let gamma = k as f64 / args.iters as f64;
                sink.push(&pre_scalar(gamma, p)?, None, Some(p), None);
            }
        }
        Ineq::Nf5 => {
            let p = args.p.unwrap_or(4.0);
            let r = match args.r {
                Some(r) => r,
                None => r_main(args.n, p)?,
            };
            let b_min = (args.n as f64).powf(1.0 - p);
            for k in 0..=args.iters {
                let b = b_min + (1.0 - b_min) * k as f64 / args.iters as f64;
                sink.push(
                    &scalar_nf5(b, args.n, p, r)?,
                    Some(args.n),
                    Some(p),
                    Some(r),
                );
            }
        }
        Ineq::Nf5B => {
            let p = args.p.unwrap_or(4.0);
            let r = match args.r {
                Some(r) => r,
                None => r_main(args.n, p)?,
            };
            let hi = (args.n as f64 - 1.0) / args.n as f64;
            for k in 0..=args.iters {
                let x = hi * k as f64 / args.iters as f64;
                sink.push(
                    &scalar_nf5b(x, args.n, p, r)?,
                    Some(args.n),
                    Some(p),
                    Some(r),
                );
            }
        }
        Ineq::Final => {
            let hi = (args.n as f64 - 1.0) / args.n as f64;
            for k in 0..args.iters {
                let x = hi * k as f64 / args.iters as f64;
                sink.push(&scalar_final(x, args.n)?, Some(args.n), None, None);
            }
        }
    }
    Ok(sink.finish())
}

fn verify_pairs(
    ineq: Ineq,
    pairs: Vec<(MeasureSpace, Vec<f64>, Vec<f64>)>,
    p: f64,
    mut sink: ReportSink,
) -> Result<(String, bool), AnyError> {
    for (space, f, g) in &pairs {
        match ineq {
            Ineq::Clarkson => {
                sink.push(&clarkson_report(f, g, p, space)?, Some(2), Some(p), None);
            }
            Ineq::Tri5 => {
                let rep = improved_triangle_report(f, g, p, space)?;
                sink.push(&rep, Some(2), Some(p), None);
            }
            _ => {
                for rep in pair_bounds_report(f, g, p, space)? {
                    sink.push(&rep, Some(2), Some(p), None);
                }
            }
        }
    }
    Ok(sink.finish())
}

fn cmd_scan(args: ScanArgs) -> Result<(String, bool), AnyError> {
    let tol = resolve_tol(args.tol)?;
    let r = match args.r {
        Some(r) => r,
        None => r_main(args.n, args.p)?,
    };
    if args.steps == 0 {
        return Err("scan needs at least one step".into());
    }
    let mut out = String::from("a,K,sum_fp,gamma\n");
    let mut all_hold = true;
    for k in 0..=args.steps {
        let a = args.a_min + (args.a_max - args.a_min) * k as f64 / args.steps as f64;
        let config = TrialConfig::new(args.n, args.p, a, r)?;
        let forms = trial_closed_forms(args.n, args.p, a)?;
        let k_ratio = config.k();
        all_hold &= k_ratio >= 1.0 - tol;
        writeln!(
            out,
            "{},{},{},{}",
            f17(a),
            f17(k_ratio),
            f17(forms.sum_fp),
            f17(forms.gamma)
        )?;
    }
    Ok((out, all_hold))
}

fn cmd_exponents(args: ExponentsArgs) -> Result<(String, bool), AnyError> {
    let mut out = String::from("N,p,r_main,r_tilde,r_limit,nec_bound\n");
    let cell = |value: lpsharp::Result<f64>| value.map(f17).unwrap_or_default();
    for &n in &args.n {
        for &p in &args.p {
            writeln!(
                out,
                "{n},{p},{},{},{},{}",
                cell(r_main(n, p)),
                cell(r_tilde(n, p)),
                cell(r_limit(p)),
                cell(nec_bound(n, p)),
            )?;
        }
    }
    Ok((out, true))
}

fn cmd_search_r(args: SearchRArgs) -> Result<(String, bool), AnyError> {
    let (result, holds) = match args.mode {
        SearchMode::Scalar => (max_r_scalar(args.n, args.p, args.tol)?, true),
        SearchMode::Trial => (max_r_trial(args.n, args.p, args.tol)?, true),
        SearchMode::Fuzz => {
            let r = match args.r {
                Some(r) => r,
                None => r_main(args.n, args.p)?,
            };
            let result = fuzz_main(args.n, args.p, r, args.seed, args.iters)?;
            let holds = result.slack >= -resolve_tol(None)?;
            (result, holds)
        }
    };
    let mut json = serde_json::to_string_pretty(&result)?;
    json.push('\n');
    Ok((json, holds))
}

fn cmd_pair(args: PairArgs) -> Result<(String, bool), AnyError> {
    let tol = resolve_tol(args.tol)?;
    if args.iters == 0 {
        return Err("--iters must be at least 1".into());
    }
    let mut sink = ReportSink::new(tol);
    let mut sampler = Sampler::new(args.seed);
    let (pairs, p) = match &args.scenario {
        Some(path) => {
            let (space, f, g, scenario_p) = load_pair_scenario(path)?;
            (vec![(space, f, g)], args.p.unwrap_or(scenario_p))
        }
        None => (
            (0..args.iters).map(|_| sampler.nonneg_pair()).collect(),
            args.p.unwrap_or(4.0),
        ),
    };
    for (space, f, g) in &pairs {
        for rep in pair_bounds_report(f, g, p, space)? {
            sink.push(&rep, Some(2), Some(p), None);
        }
        let tri = improved_triangle_report(f, g, p, space)?;
        sink.push(&tri, Some(2), Some(p), None);
        let clark = clarkson_report(f, g, p, space)?;
        sink.push(&clark, Some(2), Some(p), None);
    }
    Ok(sink.finish())
}

fn cmd_demo_limit(args: DemoLimitArgs) -> Result<(String, bool), AnyError> {
    let tol = resolve_tol(args.tol)?;
    if args.n_max < 2 {
        return Err("--N-max must be at least 2".into());
    }
    let mut sampler = Sampler::new(args.seed);
    let (space, g, h, p) = match &args.scenario {
        Some(path) => {
            let (space, g, h, scenario_p) = load_pair_scenario(path)?;
            (space, g, h, args.p.unwrap_or(scenario_p))
        }
        None => {
            let (space, g, h) = sampler.positive_pair();
            (space, g, h, args.p.unwrap_or(4.0))
        }
    };
    let limit = limit_triangle_bound(&g, &h, p, &space)?;
    let mut out = String::from("N,finite_bound,limit_bound\n");
    let mut ns: Vec<u64> = std::iter::successors(Some(2u64), |&n| Some(n * 2))
        .take_while(|&n| n < args.n_max)
        .collect();
    ns.push(args.n_max);
    let mut final_error = f64::INFINITY;
    for &n in &ns {
        let finite = replicated_triangle_bound(&g, &h, p, &space, n)?;
        final_error = (finite - limit).abs() / limit.abs();
        writeln!(out, "{n},{},{}", f17(finite), f17(limit))?;
    }
    // convergence check at the last row: relative error within 10/N (plus
    // the comparison tolerance for degenerate, already-converged pairs)
    let all_hold = final_error <= 10.0 / args.n_max as f64 + tol;
    Ok((out, all_hold))
}

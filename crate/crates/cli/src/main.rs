//! Command-line front end: analyze a system file, sweep a parameter, or
//! simulate at a concrete delay.
//!
//! Exit codes: 0 = delay-independent stable (or successful sweep/simulation),
//! 1 = not delay-independent stable, 2 = input or configuration error.

mod input;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use delaystab::ddesim::{classify, simulate, EmpiricalStability, History, SimConfig};
use delaystab::polycore::{parse_rat, rat_to_f64, Rat};
use delaystab::stability::{
    analyze_with, default_endpoint_tolerance, parse_entry_path, sweep, PointVerdict, Tolerances,
};

use input::SystemFile;

#[derive(Parser)]
#[command(
    name = "delaystab",
    about = "Delay-independent stability analysis for linear neutral delay differential systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide delay-independent stability of a system file.
    Analyze(AnalyzeArgs),
    /// Scan a parameter range and report the stability region.
    Sweep(SweepArgs),
    /// Integrate the system at a concrete delay and classify the trajectory.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// System file (JSON).
    path: PathBuf,
    /// Write the full machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Relative residual tolerance for witness verification.
    #[arg(long = "tol-res", default_value_t = 1e-8)]
    tol_res: f64,
    /// Root refinement tolerance (interval width).
    #[arg(long = "tol-root", default_value = "1e-12")]
    tol_root: String,
}

#[derive(Args)]
struct SweepArgs {
    /// System file (JSON).
    path: PathBuf,
    /// Parameter to sweep: a declared named parameter (for example `alpha`)
    /// or a matrix entry path such as `A0[0][1]` or `B[1][0][0]`.
    #[arg(long)]
    param: String,
    /// Range `lo:hi` (exact decimals).
    #[arg(long, allow_hyphen_values = true)]
    range: String,
    /// Number of grid points.
    #[arg(long, default_value_t = 21)]
    steps: usize,
}

#[derive(Args)]
struct SimulateArgs {
    /// System file (JSON).
    path: PathBuf,
    /// Delay tau > 0.
    #[arg(long)]
    tau: f64,
    /// Total integration time (default: max(20 tau, 60)).
    #[arg(long)]
    horizon: Option<f64>,
    /// Integration step; must divide tau exactly (default: tau/m, m >= 20).
    #[arg(long)]
    step: Option<f64>,
    /// Write the trajectory as CSV (time, norm, components).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Simulate(args) => cmd_simulate(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let file = SystemFile::load(&args.path)?;
    let sys = file.instantiate(&BTreeMap::new())?;
    let tol = Tolerances {
        residual_rel: args.tol_res,
        root_width: parse_rat(&args.tol_root).map_err(|e| anyhow!("--tol-root: {e}"))?,
        ..Tolerances::default()
    };
    let verdict = analyze_with(&sys, &tol)?;
    print!("{}", report::render_text(file.label.as_deref(), &verdict));
    if let Some(path) = args.json {
        let rep = report::build_report(file.label.clone(), &verdict);
        let text = serde_json::to_string_pretty(&rep)?;
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        // written reports must reload with bit-exact coefficients
        let back = report::load_report(&path)?;
        if report::poly_from_json(&back.condition_i.f)? != verdict.condition_i.f
            || report::bipoly_from_json(&back.condition_iii.f)? != verdict.condition_iii.f
        {
            bail!("report round-trip lost exactness in {}", path.display());
        }
    }
    Ok(if verdict.delay_independent_stable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let file = SystemFile::load(&args.path)?;
    let (lo, hi) = args
        .range
        .split_once(':')
        .ok_or_else(|| anyhow!("--range must be lo:hi"))?;
    let lo = parse_rat(lo).map_err(|e| anyhow!("--range lo: {e}"))?;
    let hi = parse_rat(hi).map_err(|e| anyhow!("--range hi: {e}"))?;

    type Builder = Box<dyn Fn(&Rat) -> delaystab::Result<delaystab::stability::NeutralSystem>>;
    // a named parameter, otherwise a matrix entry path
    let build: Builder =
        if file.params.contains_key(&args.param) {
            let file = file.clone();
            let name = args.param.clone();
            Box::new(move |v: &Rat| {
                let mut overrides = BTreeMap::new();
                overrides.insert(name.clone(), v.clone());
                file.instantiate(&overrides)
                    .map_err(|e| delaystab::Error::Config(format!("{e:#}")))
            })
        } else {
            let (slot, i, j) = parse_entry_path(&args.param).map_err(|_| {
                anyhow!("--param must be a declared parameter or an entry path like A0[0][1]")
            })?;
            let base = file.instantiate(&BTreeMap::new())?;
            Box::new(move |v: &Rat| base.with_entry(slot, i, j, v.clone()))
        };

    let report = sweep(build.as_ref(), &lo, &hi, args.steps, &default_endpoint_tolerance())?;
    for p in &report.points {
        println!(
            "{:>12}  {}",
            format!("{:.6}", rat_to_f64(&p.value)),
            match p.verdict {
                PointVerdict::Stable => "stable",
                PointVerdict::NotStable => "not stable",
                PointVerdict::Invalid => "invalid (standing assumption fails)",
            }
        );
    }
    for b in &report.boundaries {
        println!(
            "boundary near {:.6} (bracketed in [{:.6}, {:.6}], {} -> {})",
            b.refined,
            rat_to_f64(&b.lo),
            rat_to_f64(&b.hi),
            verdict_name(b.from),
            verdict_name(b.to),
        );
    }
    let regions = report.stable_regions();
    if regions.is_empty() {
        println!("no stable region inside the sweep range");
    }
    for (lo, hi) in regions {
        println!("stable region: ({lo:.6}, {hi:.6})");
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_name(v: PointVerdict) -> &'static str {
    match v {
        PointVerdict::Stable => "stable",
        PointVerdict::NotStable => "not-stable",
        PointVerdict::Invalid => "invalid",
    }
}

fn cmd_simulate(args: SimulateArgs) -> Result<ExitCode> {
    let file = SystemFile::load(&args.path)?;
    let sys = file.instantiate(&BTreeMap::new())?;
    if args.tau.is_nan() || args.tau <= 0.0 {
        bail!("--tau must be positive");
    }
    let horizon = args.horizon.unwrap_or((20.0 * args.tau).max(60.0));
    let step = match args.step {
        Some(s) => s,
        None => {
            let m = (args.tau / 0.02).ceil().max(20.0);
            args.tau / m
        }
    };
    let cfg = SimConfig::new(args.tau, step, horizon, History::Constant(vec![1.0; sys.dim()]))?;
    let traj = simulate(&sys, &cfg)?;
    let label = match classify(traj.growth_rate) {
        EmpiricalStability::Decaying => "decaying",
        EmpiricalStability::Growing => "growing",
        EmpiricalStability::Inconclusive => "inconclusive",
    };
    println!(
        "tau = {}, horizon = {}, step = {:.6}: {} (growth rate {:+.6e}{})",
        cfg.tau,
        cfg.horizon,
        cfg.step,
        label,
        traj.growth_rate,
        if traj.overflowed { ", overflow early stop" } else { "" }
    );
    if let Some(path) = args.out {
        let mut csv = String::from("time,norm");
        for i in 0..sys.dim() {
            csv.push_str(&format!(",x{i}"));
        }
        csv.push('\n');
        for (t, x) in traj.times.iter().zip(&traj.states) {
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            csv.push_str(&format!("{t}"));
            csv.push_str(&format!(",{norm}"));
            for v in x {
                csv.push_str(&format!(",{v}"));
            }
            csv.push('\n');
        }
        std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

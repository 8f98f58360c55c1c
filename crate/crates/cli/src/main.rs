//! `mushy-stefan <solve|verify|threshold|equivalence|sweep-h0> --config PATH ...`
//!
//! Exit codes: 0 success, 1 invalid input, 2 no similarity solution,
//! 3 numerical failure, 64 usage error.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, ValueEnum};
use mushy_stefan::asymptotics::{estimate_rates, sweep_h0, ProbeSet};
use mushy_stefan::config::{Boundary, ProblemConfig};
use mushy_stefan::equivalence::{check_xi_star_bound, convective_to_dirichlet, dirichlet_to_convective};
use mushy_stefan::verify::certify;
use mushy_stefan::{
    compute_threshold, solve_convective, solve_dirichlet, ConvectiveBc, DirichletBc, Error, RootConfig,
    SimilaritySolution,
};
use serde_json::{json, Value};

use output::{Format, Payload};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Solve,
    Verify,
    Threshold,
    Equivalence,
    #[value(name = "sweep-h0")]
    SweepH0,
}

#[derive(Debug, Parser)]
#[command(name = "mushy-stefan", version, about = "Similarity solution of solidification with a mushy zone")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Parameter file of `key = value` lines.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Certification grid, points per phase x number of times.
    #[arg(long, value_name = "NXxNT", value_parser = parse_grid)]
    grid: Option<(usize, usize)>,
    /// Finite-difference step relative to the diffusion length.
    #[arg(long, value_name = "HSTEP", allow_negative_numbers = true)]
    h: Option<f64>,
    /// Log-spaced h0 ladder.
    #[arg(long, value_name = "MIN:MAX:STEPS", value_parser = parse_ladder)]
    ladder: Option<Ladder>,
    /// Bulk temperature magnitude; overrides `Dinf` from the config.
    #[arg(long, value_name = "VALUE", allow_negative_numbers = true)]
    dinf: Option<f64>,
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (nx, nt) = s.split_once(['x', 'X']).ok_or("expected NXxNT, e.g. 10x10")?;
    let nx: usize = nx.parse().map_err(|_| format!("bad NX `{nx}`"))?;
    let nt: usize = nt.parse().map_err(|_| format!("bad NT `{nt}`"))?;
    if nx < 2 || nt < 2 {
        return Err("grid needs at least 2 points in each direction".into());
    }
    Ok((nx, nt))
}

#[derive(Debug, Clone)]
struct Ladder(Vec<f64>);

fn parse_ladder(s: &str) -> Result<Ladder, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err("expected MIN:MAX:STEPS".into());
    };
    let lo: f64 = lo.parse().map_err(|_| format!("bad MIN `{lo}`"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad MAX `{hi}`"))?;
    let n: usize = n.parse().map_err(|_| format!("bad STEPS `{n}`"))?;
    if !(lo > 0.0 && lo < hi && hi.is_finite()) || n < 2 {
        return Err("ladder needs 0 < MIN < MAX and STEPS >= 2".into());
    }
    Ok(Ladder(log_ladder(lo, hi, n)))
}

fn log_ladder(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n).map(|i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64)).collect()
}

/// Failures that end the run, with their exit code.
enum Failure {
    Invalid(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Core(Error::NoSolution(_)) => 2,
            Failure::Core(Error::Convergence { .. } | Error::Bracket { .. } | Error::NoRoot(_) | Error::Overflow { .. }) => 3,
            Failure::Core(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Invalid(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::ValueValidation => 1,
                _ => 64,
            };
            let _ = e.print();
            if code == 64 && !e.to_string().contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&cli.config)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", cli.config.display())))?;
    let mut problem: ProblemConfig = text.parse()?;
    if let Some(v) = cli.dinf {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Failure::Invalid(format!("--dinf must be finite and > 0, got {v}")));
        }
        match &mut problem.boundary {
            Boundary::Convective(bc) => bc.dinf = v,
            Boundary::Dirichlet { dinf, .. } => *dinf = Some(v),
        }
    }
    let cfg = RootConfig::default();
    let payload = match cli.command {
        Command::Solve => solve(&problem, &cfg)?,
        Command::Verify => verify(&problem, cli, &cfg)?,
        Command::Threshold => {
            let bc = convective(&problem, "threshold")?;
            Payload::Object(serde_json::to_value(compute_threshold(&problem.material, &bc, &cfg)?).unwrap())
        }
        Command::Equivalence => equivalence(&problem, &cfg)?,
        Command::SweepH0 => sweep(&problem, cli, &cfg)?,
    };
    let rendered = payload.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn convective(problem: &ProblemConfig, what: &str) -> Result<ConvectiveBc, Failure> {
    match problem.boundary {
        Boundary::Convective(bc) => Ok(bc),
        Boundary::Dirichlet { .. } => Err(Failure::Invalid(format!("{what} needs a convective boundary (`Dinf`, `h0`)"))),
    }
}

fn solution(problem: &ProblemConfig, cfg: &RootConfig) -> Result<SimilaritySolution, Failure> {
    Ok(match problem.boundary {
        Boundary::Convective(bc) => solve_convective(&problem.material, &bc, cfg)?,
        Boundary::Dirichlet { bc, .. } => solve_dirichlet(&problem.material, &bc, cfg)?,
    })
}

fn solve(problem: &ProblemConfig, cfg: &RootConfig) -> Result<Payload, Failure> {
    let sol = solution(problem, cfg)?;
    let mut obj = serde_json::to_value(sol).unwrap();
    let (h0_star, eta) = match sol.threshold(cfg).transpose()? {
        Some(rep) => (json!(rep.h0_star), json!(rep.eta)),
        None => (Value::Null, Value::Null),
    };
    let map = obj.as_object_mut().unwrap();
    map.insert("h0_star".into(), h0_star);
    map.insert("eta".into(), eta);
    map.insert("solvable".into(), json!(true));
    Ok(Payload::Object(obj))
}

fn verify(problem: &ProblemConfig, cli: &Cli, cfg: &RootConfig) -> Result<Payload, Failure> {
    let sol = solution(problem, cfg)?;
    let (nx, nt) = cli.grid.unwrap_or((10, 10));
    let report = certify(&sol, nx, nt, cli.h.unwrap_or(1e-2))?;
    Ok(Payload::Object(serde_json::to_value(report).unwrap()))
}

fn equivalence(problem: &ProblemConfig, cfg: &RootConfig) -> Result<Payload, Failure> {
    let m = &problem.material;
    let (forward, backward, dbc) = match problem.boundary {
        Boundary::Convective(bc) => {
            let fwd = convective_to_dirichlet(m, &bc, cfg)?;
            let dbc = DirichletBc { theta0: bc.theta0, d0: fwd.d0 };
            let back = dirichlet_to_convective(m, &dbc, bc.dinf, cfg)?;
            (fwd, back, dbc)
        }
        Boundary::Dirichlet { bc, dinf } => {
            let dinf = dinf.ok_or_else(|| Failure::Invalid("equivalence from a D0 config needs `Dinf` or --dinf".into()))?;
            let fwd = dirichlet_to_convective(m, &bc, dinf, cfg)?;
            let cbc = ConvectiveBc { theta0: bc.theta0, dinf, h0: fwd.h0 };
            (fwd, convective_to_dirichlet(m, &cbc, cfg)?, bc)
        }
    };
    let bound = match check_xi_star_bound(m, &dbc, cfg) {
        Ok(b) => serde_json::to_value(b).unwrap(),
        Err(Error::Bypassed(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(Payload::Equivalence(json!({ "forward": forward, "backward": backward, "xi_star_bound": bound })))
}

fn sweep(problem: &ProblemConfig, cli: &Cli, cfg: &RootConfig) -> Result<Payload, Failure> {
    let dinf = match problem.boundary {
        Boundary::Convective(bc) => bc.dinf,
        Boundary::Dirichlet { dinf, .. } => {
            dinf.ok_or_else(|| Failure::Invalid("sweep-h0 needs `Dinf` or --dinf".into()))?
        }
    };
    let ladder = cli.ladder.clone().map_or_else(|| log_ladder(1e2, 1e6, 9), |l| l.0);
    let out = sweep_h0(&problem.material, problem.theta0(), dinf, &ladder, &ProbeSet::default(), cfg)?;
    for r in &out.rejected {
        eprintln!("warning: h0 = {} is not above h0* = {}; no solution", r.h0, r.h0_star);
    }
    let rates = match estimate_rates(&out.records) {
        Ok(r) => Some(r),
        Err(e) => {
            eprintln!("warning: rates not estimated: {e}");
            None
        }
    };
    Ok(Payload::Sweep { ladder, outcome: Box::new(out), rates })
}

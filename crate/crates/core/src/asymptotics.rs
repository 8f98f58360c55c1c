//! Convergence of the convective solution to the temperature-problem solution
//! with `D0 = D∞` as `h0 → ∞`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ConvectiveBc, DirichletBc, Material};
use crate::numerics::{fit_loglog_slope, RootConfig};
use crate::solver::{solve_convective, solve_dirichlet, SimilaritySolution};
use crate::transcendental::{compute_threshold, find_nu, ConvectiveFamily, LimitFamily};

/// Where temperature and front gaps are sampled, relative to the limit
/// solution so that every probe stays inside one phase once `h0` is large.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeSet {
    pub times: Vec<f64>,
    /// Solid probes at these fractions of `s∞(t)`.
    pub solid_fractions: Vec<f64>,
    /// Liquid probes at these multiples of `r∞(t)`.
    pub liquid_multiples: Vec<f64>,
}

impl Default for ProbeSet {
    fn default() -> Self {
        Self { times: vec![0.5, 1.0, 2.0], solid_fractions: vec![0.25, 0.5], liquid_multiples: vec![1.5, 3.0] }
    }
}

impl ProbeSet {
    fn validate(&self) -> Result<()> {
        let ok = |v: &[f64], lo: f64, hi: f64| !v.is_empty() && v.iter().all(|&x| x > lo && x < hi);
        if !ok(&self.times, 0.0, f64::INFINITY) {
            return Err(Error::domain("probe times must be non-empty, finite and > 0"));
        }
        if !ok(&self.solid_fractions, 0.0, 1.0) {
            return Err(Error::domain("solid probe fractions must lie in (0, 1)"));
        }
        if !ok(&self.liquid_multiples, 1.0, f64::INFINITY) {
            return Err(Error::domain("liquid probe multiples must be finite and > 1"));
        }
        Ok(())
    }
}

/// One ladder entry. `xi_gap = ξ∞ - ξ` is signed; the other gaps are absolute
/// maxima over the probe set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub h0: f64,
    pub xi: f64,
    pub mu: f64,
    pub xi_gap: f64,
    pub mu_gap: f64,
    pub theta1_gap: f64,
    pub theta2_gap: f64,
    pub s_gap: f64,
    pub r_gap: f64,
}

/// A ladder entry at or below the solvability threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RejectedEntry {
    pub h0: f64,
    pub h0_star: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub limit: SimilaritySolution,
    pub records: Vec<SweepRecord>,
    pub rejected: Vec<RejectedEntry>,
}

/// Solves the limit problem once, then the convective problem for every
/// ladder entry. Entries with no solution are reported in `rejected`.
pub fn sweep_h0(
    mat: &Material,
    theta0: f64,
    dinf: f64,
    ladder: &[f64],
    probes: &ProbeSet,
    cfg: &RootConfig,
) -> Result<SweepOutcome> {
    probes.validate()?;
    if ladder.is_empty() {
        return Err(Error::domain("h0 ladder is empty"));
    }
    if ladder.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain("h0 ladder must be strictly increasing"));
    }
    let limit = solve_dirichlet(mat, &DirichletBc { theta0, d0: dinf }, cfg)?;

    let mut records = Vec::with_capacity(ladder.len());
    let mut rejected = Vec::new();
    for &h0 in ladder {
        match solve_convective(mat, &ConvectiveBc { theta0, dinf, h0 }, cfg) {
            Ok(sol) => records.push(gaps(&sol, &limit, h0, probes)?),
            Err(Error::NoSolution(rep)) => rejected.push(RejectedEntry { h0, h0_star: rep.h0_star }),
            Err(e) => return Err(e),
        }
    }
    Ok(SweepOutcome { limit, records, rejected })
}

fn gaps(sol: &SimilaritySolution, limit: &SimilaritySolution, h0: f64, probes: &ProbeSet) -> Result<SweepRecord> {
    let (mut theta1_gap, mut theta2_gap, mut s_gap, mut r_gap) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &t in &probes.times {
        let (s_inf, r_inf) = limit.fronts(t)?;
        let (s, r) = sol.fronts(t)?;
        s_gap = s_gap.max((s_inf - s).abs());
        r_gap = r_gap.max((r_inf - r).abs());
        for &f in &probes.solid_fractions {
            let x = f * s_inf;
            theta1_gap = theta1_gap.max((sol.theta1(x, t) - limit.theta1(x, t)).abs());
        }
        for &m in &probes.liquid_multiples {
            let x = m * r_inf;
            theta2_gap = theta2_gap.max((sol.theta2(x, t) - limit.theta2(x, t)).abs());
        }
    }
    Ok(SweepRecord {
        h0,
        xi: sol.xi,
        mu: sol.mu,
        xi_gap: limit.xi - sol.xi,
        mu_gap: (limit.mu - sol.mu).abs(),
        theta1_gap,
        theta2_gap,
        s_gap,
        r_gap,
    })
}

/// Log-log slopes of each gap against `h0`; `O(1/h0)` convergence gives -1.
/// A slope is `None` when that gap vanishes identically (e.g. θ2 with θ0 = 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub slope_xi: Option<f64>,
    pub slope_mu: Option<f64>,
    pub slope_theta1: Option<f64>,
    pub slope_theta2: Option<f64>,
    pub slope_s: Option<f64>,
    pub slope_r: Option<f64>,
    pub h0_range: (f64, f64),
    pub n_points: usize,
}

impl RateReport {
    pub fn slopes(&self) -> [Option<f64>; 6] {
        [self.slope_xi, self.slope_mu, self.slope_theta1, self.slope_theta2, self.slope_s, self.slope_r]
    }

    /// True when every available slope lies in `[lo, hi]`.
    pub fn within(&self, lo: f64, hi: f64) -> bool {
        self.slopes().iter().flatten().all(|s| (lo..=hi).contains(s))
    }
}

/// [`estimate_rates_with`] on the top half of the ladder.
pub fn estimate_rates(records: &[SweepRecord]) -> Result<RateReport> {
    estimate_rates_with(records, 0.5)
}

/// Fits the rates on the largest `ceil(fraction·n)` entries of `records`.
/// The fitted subset must hold at least 4 entries spanning 2 decades of `h0`.
pub fn estimate_rates_with(records: &[SweepRecord], fraction: f64) -> Result<RateReport> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::domain(format!("fit fraction must lie in (0, 1], got {fraction}")));
    }
    let mut sorted = records.to_vec();
    sorted.sort_by(|a, b| a.h0.total_cmp(&b.h0));
    let keep = ((fraction * sorted.len() as f64).ceil() as usize).min(sorted.len());
    let top = &sorted[sorted.len() - keep..];
    if top.len() < 4 {
        return Err(Error::domain(format!("rate fit needs at least 4 records, got {}", top.len())));
    }
    let (lo, hi) = (top[0].h0, top[top.len() - 1].h0);
    if hi / lo < 100.0 * (1.0 - 1e-12) {
        return Err(Error::domain(format!("rate fit needs 2 decades of h0, got [{lo}, {hi}]")));
    }
    let slope = |gap: fn(&SweepRecord) -> f64| -> Result<Option<f64>> {
        if top.iter().all(|r| gap(r) == 0.0) {
            return Ok(None);
        }
        let pairs: Vec<(f64, f64)> = top.iter().map(|r| (r.h0, gap(r))).collect();
        fit_loglog_slope(&pairs).map(Some)
    };
    Ok(RateReport {
        slope_xi: slope(|r| r.xi_gap)?,
        slope_mu: slope(|r| r.mu_gap)?,
        slope_theta1: slope(|r| r.theta1_gap)?,
        slope_theta2: slope(|r| r.theta2_gap)?,
        slope_s: slope(|r| r.s_gap)?,
        slope_r: slope(|r| r.r_gap)?,
        h0_range: (lo, hi),
        n_points: top.len(),
    })
}

/// Checks `J_{h'}(x) < J_{h''}(x) < J∞(x)` at every sample, where
/// `h1* <= h' < h''` and every sample lies in `(0, ν_{h'})`.
pub fn check_j_ordering(
    mat: &Material,
    theta0: f64,
    dinf: f64,
    (h_lo, h_hi): (f64, f64),
    xs: &[f64],
    cfg: &RootConfig,
) -> Result<bool> {
    if !(h_lo < h_hi) {
        return Err(Error::domain(format!("need h' < h'', got ({h_lo}, {h_hi})")));
    }
    let bc_lo = ConvectiveBc { theta0, dinf, h0: h_lo };
    let rep = compute_threshold(mat, &bc_lo, cfg)?;
    if h_lo < rep.h1_star {
        return Err(Error::domain(format!("h' = {h_lo} is below h1* = {}", rep.h1_star)));
    }
    let lo = ConvectiveFamily::new(*mat, bc_lo)?;
    let hi = ConvectiveFamily::new(*mat, ConvectiveBc { h0: h_hi, ..bc_lo })?;
    let inf = LimitFamily::new(*mat, theta0, dinf)?;
    let nu = find_nu(&lo, cfg)?;
    if let Some(&x) = xs.iter().find(|&&x| !(x > 0.0 && x < nu)) {
        return Err(Error::domain(format!("sample {x} outside (0, {nu})")));
    }
    for &x in xs {
        let (a, b, c) = (lo.j(x)?, hi.j(x)?, inf.j_inf(x)?);
        if !(a < b && b < c) {
            return Ok(false);
        }
    }
    Ok(true)
}

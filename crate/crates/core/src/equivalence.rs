//! Correspondence between the convective and the temperature problems.
//!
//! A convective solution with parameter ξ has boundary temperature
//! `-D0 = -D∞ erf(ξ)/(erf(ξ) + k1/(h0√(πα1)))`, and the temperature problem
//! with that `D0` has the same solution. Conversely a temperature solution ξ*
//! solves the convective problem for any `D∞ > D0` once
//! `h0 = k1 D0 / (√(πα1) (D∞ - D0) erf(ξ*))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ConvectiveBc, DirichletBc, Material};
use crate::numerics::{erf_f, RootConfig};
use crate::solver::{solve_convective, solve_dirichlet, SimilaritySolution};
use crate::transcendental::{compute_eta, compute_threshold};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Convective,
    Dirichlet,
}

/// `erf(ξ*) <= rhs` style bound on the temperature-problem front.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XiStarBound {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceRecord {
    pub source: Source,
    #[serde(rename = "D0")]
    pub d0: f64,
    pub h0: f64,
    #[serde(rename = "Dinf")]
    pub dinf: f64,
    pub xi_source: f64,
    pub xi_target: f64,
    pub mu_source: f64,
    pub mu_target: f64,
    /// Largest `|θ - θ*|` over the comparison grid.
    pub max_profile_gap: f64,
    /// Threshold of the convective side; the mapped `h0` must exceed it.
    pub h0_star: f64,
    /// `erf(ξ*) < min{1, 2D∞D0η/(γ(D∞-D0)√(πα12))}`, for the Dirichlet
    /// source when γ > 0 and θ0 > 0.
    pub preliminary_bound: Option<XiStarBound>,
}

/// Boundary temperature magnitude of a convective solution.
pub fn mapped_d0(mat: &Material, h0: f64, dinf: f64, xi: f64) -> f64 {
    let e = erf_f(xi);
    dinf * e / (e + mat.k1 / (h0 * (std::f64::consts::PI * mat.alpha1()).sqrt()))
}

/// Heat-transfer coefficient that reproduces a temperature solution.
pub fn mapped_h0(mat: &Material, d0: f64, dinf: f64, xi_star: f64) -> Result<f64> {
    if !(dinf > d0) {
        return Err(Error::domain(format!("Dinf = {dinf} must exceed D0 = {d0}")));
    }
    Ok(mat.k1 * d0 / ((std::f64::consts::PI * mat.alpha1()).sqrt() * (dinf - d0) * erf_f(xi_star)))
}

/// Max absolute temperature difference on a 20 x 20 grid, `t` log-spaced in
/// `[0.1, 10]`, `x` from 0 to six liquid diffusion lengths past the furthest
/// liquid front.
pub fn max_profile_gap(a: &SimilaritySolution, b: &SimilaritySolution) -> Result<f64> {
    const N: usize = 20;
    let mut gap = 0.0f64;
    for i in 0..N {
        let t = 10f64.powf(-1.0 + 2.0 * i as f64 / (N - 1) as f64);
        let r = a.fronts(t)?.1.max(b.fronts(t)?.1);
        let x_max = r + 6.0 * (a.alpha2 * t).sqrt();
        for j in 0..N {
            let x = x_max * j as f64 / (N - 1) as f64;
            let d = (a.evaluate(x, t)?.temperature - b.evaluate(x, t)?.temperature).abs();
            gap = gap.max(d);
        }
    }
    Ok(gap)
}

pub fn convective_to_dirichlet(mat: &Material, bc: &ConvectiveBc, cfg: &RootConfig) -> Result<EquivalenceRecord> {
    let conv = solve_convective(mat, bc, cfg)?;
    let d0 = mapped_d0(mat, bc.h0, bc.dinf, conv.xi);
    let dir = solve_dirichlet(mat, &DirichletBc { theta0: bc.theta0, d0 }, cfg)?;
    let h0_star = compute_threshold(mat, bc, cfg)?.h0_star;
    Ok(EquivalenceRecord {
        source: Source::Convective,
        d0,
        h0: bc.h0,
        dinf: bc.dinf,
        xi_source: conv.xi,
        xi_target: dir.xi,
        mu_source: conv.mu,
        mu_target: dir.mu,
        max_profile_gap: max_profile_gap(&conv, &dir)?,
        h0_star,
        preliminary_bound: None,
    })
}

pub fn dirichlet_to_convective(
    mat: &Material,
    bc: &DirichletBc,
    dinf: f64,
    cfg: &RootConfig,
) -> Result<EquivalenceRecord> {
    let bc = bc.validate()?;
    if !(dinf > bc.d0) || !dinf.is_finite() {
        return Err(Error::domain(format!("Dinf = {dinf} must exceed D0 = {}", bc.d0)));
    }
    let dir = solve_dirichlet(mat, &bc, cfg)?;
    let h0 = mapped_h0(mat, bc.d0, dinf, dir.xi)?;
    let cbc = ConvectiveBc { theta0: bc.theta0, dinf, h0 };
    let h0_star = compute_threshold(mat, &cbc, cfg)?.h0_star;
    let conv = solve_convective(mat, &cbc, cfg)?;

    let preliminary_bound = if mat.gamma > 0.0 && bc.theta0 > 0.0 {
        let eta = compute_eta(mat, bc.theta0, cfg)?;
        let lhs = erf_f(dir.xi);
        let rhs = (2.0 * dinf * bc.d0 * eta
            / (mat.gamma * (dinf - bc.d0) * (std::f64::consts::PI * mat.alpha12()).sqrt()))
        .min(1.0);
        Some(XiStarBound { lhs, rhs, holds: lhs < rhs })
    } else {
        None
    };

    Ok(EquivalenceRecord {
        source: Source::Dirichlet,
        d0: bc.d0,
        h0,
        dinf,
        xi_source: dir.xi,
        xi_target: conv.xi,
        mu_source: dir.mu,
        mu_target: conv.mu,
        max_profile_gap: max_profile_gap(&dir, &conv)?,
        h0_star,
        preliminary_bound,
    })
}

/// `erf(ξ*) <= min{1, 2D0η/(γ√(πα12))}` for the temperature problem.
pub fn check_xi_star_bound(mat: &Material, bc: &DirichletBc, cfg: &RootConfig) -> Result<XiStarBound> {
    if mat.gamma == 0.0 {
        return Err(Error::Bypassed("gamma = 0"));
    }
    if bc.theta0 == 0.0 {
        return Err(Error::Bypassed("theta0 = 0"));
    }
    let dir = solve_dirichlet(mat, bc, cfg)?;
    let eta = compute_eta(mat, bc.theta0, cfg)?;
    let lhs = erf_f(dir.xi);
    let rhs = (2.0 * bc.d0 * eta / (mat.gamma * (std::f64::consts::PI * mat.alpha12()).sqrt())).min(1.0);
    Ok(XiStarBound { lhs, rhs, holds: lhs <= rhs + 1e-12 })
}

//! Similarity solution of the convective and temperature problems.
//!
//! ```text
//! θ1(x,t) = A1 + B1 erf(x/(2√(α1 t)))    0 < x < s(t)
//! θ2(x,t) = A2 + B2 erf(x/(2√(α2 t)))    x > r(t)
//! s(t) = 2ξ√(α1 t),  r(t) = 2μ√(α2 t),  θ = 0 in the mush s <= x <= r
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ConvectiveBc, DirichletBc, Material};
use crate::numerics::{bracket_decreasing, erf_f, erfcx_f, find_root, Bracket, RootConfig};
use crate::transcendental::{
    compute_threshold, find_nu, ConvectiveFamily, DirichletFamily, FrontEquation, ThresholdReport, EXP_CAP,
    SQRT_PI,
};

/// Preferred lower end of the ξ bracket.
pub const XI_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BoundaryKind {
    Convective {
        h0: f64,
        #[serde(rename = "Dinf")]
        dinf: f64,
    },
    Dirichlet {
        #[serde(rename = "D0")]
        d0: f64,
    },
}

/// Closed-form solution: front parameters and profile coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilaritySolution {
    pub xi: f64,
    pub mu: f64,
    #[serde(rename = "A1")]
    pub a1: f64,
    #[serde(rename = "B1")]
    pub b1: f64,
    /// `-θ0 erf(μ)/erfc(μ)`; may be infinite for very large μ, profiles are
    /// evaluated without it.
    #[serde(rename = "A2")]
    pub a2: f64,
    #[serde(rename = "B2")]
    pub b2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub kind: BoundaryKind,
    pub theta0: f64,
    pub material: Material,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Solid,
    Mush,
    Liquid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointEval {
    pub x: f64,
    pub t: f64,
    pub region: Region,
    pub temperature: f64,
}

fn check_time(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("time must be finite and > 0, got {t}")))
    }
}

/// Root of a strictly decreasing residual with positive limit at `0+`.
fn solve_front<E: FrontEquation>(eq: &E, upper: Option<f64>, cfg: &RootConfig) -> Result<Option<f64>> {
    // walk the floor down if the root sits below XI_FLOOR
    let mut lo = XI_FLOOR;
    while eq.residual(lo)? <= 0.0 {
        lo *= 1e-4;
        if lo < 1e-300 {
            return Ok(None);
        }
    }
    let hi = match upper {
        Some(hi) if hi > lo => hi,
        _ => bracket_decreasing(|x| eq.residual(x), lo, EXP_CAP)?.hi,
    };
    let x = find_root(|x| eq.residual(x), Bracket::new(lo, hi)?, cfg)?;
    polish(eq, x, lo, hi, cfg).map(Some)
}

/// Refines a converged root to neighbouring doubles. The x-tolerance alone
/// leaves a residual of order `|R'|·abs_tol`, which is large when ξ is small.
fn polish<E: FrontEquation>(eq: &E, x: f64, lo: f64, hi: f64, cfg: &RootConfig) -> Result<f64> {
    let step = cfg.abs_tol + cfg.rel_tol * x.abs();
    let (a, b) = ((x - step).max(lo), (x + step).min(hi));
    if !(eq.residual(a)? > 0.0 && eq.residual(b)? <= 0.0) {
        return Ok(x);
    }
    let fine = RootConfig { abs_tol: f64::MIN_POSITIVE, rel_tol: f64::EPSILON, max_iter: cfg.max_iter };
    find_root(|x| eq.residual(x), Bracket::new(a, b)?, &fine)
}

/// Solves the convective problem. Fails with [`Error::NoSolution`] unless
/// `h0` exceeds the threshold `h0*`.
pub fn solve_convective(mat: &Material, bc: &ConvectiveBc, cfg: &RootConfig) -> Result<SimilaritySolution> {
    let report = compute_threshold(mat, bc, cfg)?;
    if !report.solvable {
        return Err(Error::NoSolution(Box::new(report)));
    }
    let fam = ConvectiveFamily::new(*mat, *bc)?;
    // ξ < ν whenever F has a root; in the one-phase case it has none
    let nu = if bc.theta0 > 0.0 { Some(find_nu(&fam, cfg)?) } else { None };
    let xi = solve_front(&fam, nu, cfg)?.ok_or_else(|| Error::NoSolution(Box::new(report)))?;
    Ok(assemble_convective(mat, bc, &fam, xi))
}

fn assemble_convective(mat: &Material, bc: &ConvectiveBc, fam: &ConvectiveFamily, xi: f64) -> SimilaritySolution {
    let e = erf_f(xi);
    let denom = e + fam.contact();
    let mu = mat.alpha12().sqrt() * fam.w(xi).expect("xi lies in the admissible range");
    let (a2, b2) = liquid_coefficients(bc.theta0, mu);
    SimilaritySolution {
        xi,
        mu,
        a1: -bc.dinf * e / denom,
        b1: bc.dinf / denom,
        a2,
        b2,
        alpha1: mat.alpha1(),
        alpha2: mat.alpha2(),
        kind: BoundaryKind::Convective { h0: bc.h0, dinf: bc.dinf },
        theta0: bc.theta0,
        material: *mat,
    }
}

fn liquid_coefficients(theta0: f64, mu: f64) -> (f64, f64) {
    if theta0 == 0.0 {
        return (0.0, 0.0);
    }
    let erfc_mu = (-mu * mu).exp() * erfcx_f(mu);
    (-theta0 * erf_f(mu) / erfc_mu, theta0 / erfc_mu)
}

/// Solves the temperature problem `θ1(0,t) = -D0`; a solution always exists.
pub fn solve_dirichlet(mat: &Material, bc: &DirichletBc, cfg: &RootConfig) -> Result<SimilaritySolution> {
    let fam = DirichletFamily::new(*mat, *bc)?;
    let xi = solve_front(&fam, None, cfg)?
        .ok_or_else(|| Error::NoRoot("temperature-problem residual has no positive root".into()))?;
    let mu = mat.alpha12().sqrt() * fam.w0(xi)?;
    let (a2, b2) = liquid_coefficients(bc.theta0, mu);
    Ok(SimilaritySolution {
        xi,
        mu,
        a1: -bc.d0,
        b1: bc.d0 / erf_f(xi),
        a2,
        b2,
        alpha1: mat.alpha1(),
        alpha2: mat.alpha2(),
        kind: BoundaryKind::Dirichlet { d0: bc.d0 },
        theta0: bc.theta0,
        material: *mat,
    })
}

impl SimilaritySolution {
    /// Threshold report for a convective solution.
    pub fn threshold(&self, cfg: &RootConfig) -> Option<Result<ThresholdReport>> {
        match self.kind {
            BoundaryKind::Convective { h0, dinf } => {
                Some(compute_threshold(&self.material, &ConvectiveBc { theta0: self.theta0, dinf, h0 }, cfg))
            }
            BoundaryKind::Dirichlet { .. } => None,
        }
    }

    /// Magnitude of the cold boundary temperature (`D∞` or `D0`).
    pub fn cold_temperature(&self) -> f64 {
        match self.kind {
            BoundaryKind::Convective { dinf, .. } => dinf,
            BoundaryKind::Dirichlet { d0 } => d0,
        }
    }

    /// `(s(t), r(t))`.
    pub fn fronts(&self, t: f64) -> Result<(f64, f64)> {
        check_time(t)?;
        Ok((2.0 * self.xi * (self.alpha1 * t).sqrt(), 2.0 * self.mu * (self.alpha2 * t).sqrt()))
    }

    /// `(ṡ(t), ṙ(t))`.
    pub fn front_speeds(&self, t: f64) -> Result<(f64, f64)> {
        check_time(t)?;
        Ok((self.xi * (self.alpha1 / t).sqrt(), self.mu * (self.alpha2 / t).sqrt()))
    }

    pub fn region(&self, x: f64, t: f64) -> Result<Region> {
        if !(x >= 0.0 && x.is_finite()) {
            return Err(Error::domain(format!("position must be finite and >= 0, got {x}")));
        }
        let (s, r) = self.fronts(t)?;
        Ok(if x < s {
            Region::Solid
        } else if x <= r {
            Region::Mush
        } else {
            Region::Liquid
        })
    }

    pub fn evaluate(&self, x: f64, t: f64) -> Result<PointEval> {
        let region = self.region(x, t)?;
        let temperature = match region {
            Region::Solid => self.theta1(x, t),
            Region::Mush => 0.0,
            Region::Liquid => self.theta2(x, t),
        };
        Ok(PointEval { x, t, region, temperature })
    }

    /// Solid closed form, valid for any `x` (no region check).
    pub fn theta1(&self, x: f64, t: f64) -> f64 {
        self.a1 + self.b1 * erf_f(x / (2.0 * (self.alpha1 * t).sqrt()))
    }

    /// Liquid closed form `θ0 (1 - erfc(η2)/erfc(μ))`, valid for `x >= 0`.
    pub fn theta2(&self, x: f64, t: f64) -> f64 {
        if self.theta0 == 0.0 {
            return 0.0;
        }
        let eta = x / (2.0 * (self.alpha2 * t).sqrt());
        let ratio = ((self.mu - eta) * (self.mu + eta)).exp() * erfcx_f(eta) / erfcx_f(self.mu);
        self.theta0 * (1.0 - ratio)
    }

    /// `∂θ1/∂x`.
    pub fn theta1_x(&self, x: f64, t: f64) -> f64 {
        let eta = x / (2.0 * (self.alpha1 * t).sqrt());
        self.b1 * (-eta * eta).exp() / (SQRT_PI * (self.alpha1 * t).sqrt())
    }

    /// `∂θ2/∂x`.
    pub fn theta2_x(&self, x: f64, t: f64) -> f64 {
        if self.theta0 == 0.0 {
            return 0.0;
        }
        let eta = x / (2.0 * (self.alpha2 * t).sqrt());
        self.theta0 * ((self.mu - eta) * (self.mu + eta)).exp()
            / (erfcx_f(self.mu) * SQRT_PI * (self.alpha2 * t).sqrt())
    }
}

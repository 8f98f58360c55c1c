//! Numerical certification of a [`SimilaritySolution`].
//!
//! The heat equations are checked with finite differences (pure truncation
//! error, since the closed forms solve them exactly). Interface and boundary
//! conditions use the analytic derivatives and should hold to roundoff.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::fit_loglog_slope;
use crate::solver::{BoundaryKind, Region, SimilaritySolution};

/// Largest residual of each governing relation over a certification grid.
///
/// `stefan_max`, `width_max` and (convective) `flux_bc_max` are relative to the
/// largest term of their relation. `interface_temp_max`, `far_field_gap` and
/// the temperature-problem `flux_bc_max = |θ1(0,t) + D0|` are in °C. PDE
/// residuals are `|α θxx - θt|` in °C/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub pde_solid_max: f64,
    pub pde_liquid_max: f64,
    pub stefan_max: f64,
    pub width_max: f64,
    pub flux_bc_max: f64,
    pub interface_temp_max: f64,
    pub far_field_gap: f64,
    pub fd_order_slope: f64,
}

/// `|α u_xx - u_t|` from a central second difference in `x` (step `h`) and a
/// central first difference in `t` with step `h²/(4α)`.
pub fn heat_residual(u: impl Fn(f64, f64) -> f64, alpha: f64, x: f64, t: f64, h: f64) -> f64 {
    let dt = h * h / (4.0 * alpha);
    let uxx = (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h);
    let ut = (u(x, t + dt) - u(x, t - dt)) / (2.0 * dt);
    (alpha * uxx - ut).abs()
}

/// Finite-difference residual of the heat equation at `(x, t)`, using the
/// region that contains `x`.
pub fn pde_residual(sol: &SimilaritySolution, x: f64, t: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("step must be finite and > 0, got {h}")));
    }
    let region = sol.region(x, t)?;
    let alpha = match region {
        Region::Solid => sol.alpha1,
        Region::Liquid => sol.alpha2,
        Region::Mush => return Err(Error::StencilCrossesFront { x, t, h }),
    };
    let dt = h * h / (4.0 * alpha);
    if t - dt <= 0.0 {
        return Err(Error::domain(format!("time step {dt} reaches t = 0 from t = {t}")));
    }
    if x - 2.0 * h < 0.0 {
        return Err(Error::domain(format!("stencil at x = {x} with step {h} leaves the slab")));
    }
    let (s_lo, r_lo) = sol.fronts(t - dt)?;
    let (s_hi, r_hi) = sol.fronts(t + dt)?;
    let (a, b) = (x - 2.0 * h, x + 2.0 * h);
    if (a <= s_hi && s_lo <= b) || (a <= r_hi && r_lo <= b) {
        return Err(Error::StencilCrossesFront { x, t, h });
    }
    Ok(match region {
        Region::Solid => heat_residual(|x, t| sol.theta1(x, t), alpha, x, t, h),
        _ => heat_residual(|x, t| sol.theta2(x, t), alpha, x, t, h),
    })
}

fn relative(lhs: f64, rhs: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        (lhs - rhs).abs()
    } else {
        (lhs - rhs).abs() / scale
    }
}

/// Residuals of the interface and boundary conditions at time `t`:
/// `(stefan, width, boundary, interface, far_field)`.
fn condition_residuals(sol: &SimilaritySolution, t: f64) -> Result<[f64; 5]> {
    let m = &sol.material;
    let (s, r) = sol.fronts(t)?;
    let (sd, rd) = sol.front_speeds(t)?;
    let g1 = sol.theta1_x(s, t);
    let g2 = sol.theta2_x(r, t);

    // latent heat is released at both fronts: ρl[ε ṡ + (1-ε) ṙ]
    let (heat_s, heat_r) = (m.k1 * g1, m.k2 * g2);
    let (lat_s, lat_r) = (m.rho * m.l * m.eps * sd, m.rho * m.l * (1.0 - m.eps) * rd);
    let stefan = relative(heat_s - heat_r, lat_s + lat_r, heat_s.abs().max(heat_r.abs()).max(lat_s).max(lat_r));

    let width = relative(g1 * (r - s), m.gamma, m.gamma.max(g1 * r));

    let boundary = match sol.kind {
        BoundaryKind::Convective { h0, dinf } => {
            let lhs = m.k1 * sol.theta1_x(0.0, t);
            let rhs = h0 / t.sqrt() * (sol.theta1(0.0, t) + dinf);
            relative(lhs, rhs, lhs.abs().max(rhs.abs()))
        }
        BoundaryKind::Dirichlet { d0 } => (sol.theta1(0.0, t) + d0).abs(),
    };

    let interface = sol.theta1(s, t).abs().max(sol.theta2(r, t).abs());
    let far = sol.evaluate(r + 40.0 * (sol.alpha2 * t).sqrt(), t)?.temperature;
    Ok([stefan, width, boundary, interface, (far - sol.theta0).abs()])
}

/// Certifies `sol` on `nt` times log-spaced in `[0.1, 10]` with `nx` sample
/// points per phase and time. `h` is the finite-difference step relative to
/// the diffusion length `2√(αt)` of each phase; the order slope comes from
/// the ladder `h, h/2, h/4`.
pub fn certify(sol: &SimilaritySolution, nx: usize, nt: usize, h: f64) -> Result<ResidualReport> {
    if nx < 2 || nt < 2 {
        return Err(Error::domain(format!("grid {nx}x{nt} is degenerate, need at least 2x2")));
    }
    if !(h > 0.0 && h < 1.0) {
        return Err(Error::domain(format!("relative step must lie in (0, 1), got {h}")));
    }
    const LEVELS: [f64; 3] = [1.0, 0.5, 0.25];
    let mut conds = [0.0f64; 5];
    let mut solid = [0.0f64; 3];
    let mut liquid = [0.0f64; 3];
    let mut any_point = false;

    for j in 0..nt {
        let t = 10f64.powf(-1.0 + 2.0 * j as f64 / (nt - 1) as f64);
        for (acc, v) in conds.iter_mut().zip(condition_residuals(sol, t)?) {
            *acc = acc.max(v);
        }
        let (s, r) = sol.fronts(t)?;
        let len1 = 2.0 * (sol.alpha1 * t).sqrt();
        let len2 = 2.0 * (sol.alpha2 * t).sqrt();
        let points = (0..nx)
            .map(|i| (s * (i + 1) as f64 / (nx + 1) as f64, len1, 0))
            .chain((0..nx).map(|i| (r + 3.0 * len2 * (i + 1) as f64 / nx as f64, len2, 1)));
        for (x, len, phase) in points {
            // points whose coarsest stencil does not fit are skipped
            let coarse = match pde_residual(sol, x, t, h * len) {
                Ok(v) => v,
                Err(Error::StencilCrossesFront { .. } | Error::Domain(_)) => continue,
                Err(e) => return Err(e),
            };
            any_point = true;
            let acc = if phase == 0 { &mut solid } else { &mut liquid };
            acc[0] = acc[0].max(coarse);
            for (k, lvl) in LEVELS.iter().enumerate().skip(1) {
                acc[k] = acc[k].max(pde_residual(sol, x, t, h * lvl * len)?);
            }
        }
    }
    if !any_point {
        return Err(Error::domain("no finite-difference stencil fits inside either phase"));
    }
    let pairs: Vec<(f64, f64)> = LEVELS
        .iter()
        .enumerate()
        .map(|(k, lvl)| (h * lvl, solid[k].max(liquid[k])))
        .collect();
    let fd_order_slope = fit_loglog_slope(&pairs)?;

    Ok(ResidualReport {
        pde_solid_max: solid[0],
        pde_liquid_max: liquid[0],
        stefan_max: conds[0],
        width_max: conds[1],
        flux_bc_max: conds[2],
        interface_temp_max: conds[3],
        far_field_gap: conds[4],
        fd_order_slope,
    })
}

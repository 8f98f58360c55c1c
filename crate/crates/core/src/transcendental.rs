//! Scalar function families behind the similarity solution.
//!
//! Convective problem (boundary data `D∞`, `h0`):
//!
//! ```text
//! W(x)  = x + γ√π/(2D∞) · exp(x²) · (erf x + k1/(h0√(πα1)))
//! G(x)  = x + (1-ε)γ√π/(2D∞) · exp(x²) · (erf x + k1/(h0√(πα1)))
//! F1(x) = exp(-x²) / (erf x + k1/(h0√(πα1)))
//! F2(y) = exp(-y²) / erfc y
//! F(x)  = F1(x) - θ0√(k2c2)/(D∞√(k1c1)) · F2(√α12 W(x))
//! ```
//!
//! The front parameter ξ solves `F(x) = l√π/(D∞c1) · G(x)`. The temperature
//! problem (`θ1(0,t) = -D0`) uses the same expressions with `D∞ → D0` and the
//! `k1/(h0√(πα1))` term dropped; the `h0 → ∞` limit family is that problem
//! with `D0 = D∞`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ConvectiveBc, DirichletBc, Material};
use crate::numerics::{bracket_decreasing, erf_f, erfcx_f, find_root, RootConfig};

/// Largest argument accepted by evaluations that form `exp(x²)`.
pub const EXP_CAP: f64 = 26.0;

/// Start of every geometric bracket scan.
pub const SCAN_START: f64 = 1e-8;

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;

pub(crate) fn check_arg(x: f64) -> Result<()> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::domain(format!("argument must be > 0, got {x}")));
    }
    if x > EXP_CAP {
        return Err(Error::Overflow { x, cap: EXP_CAP });
    }
    Ok(())
}

/// `F2(y) = exp(-y²)/erfc(y)`, evaluated as `1/erfcx(y)` so that it stays
/// finite for every `y >= 0`.
pub fn f2(y: f64) -> f64 {
    1.0 / erfcx_f(y)
}

/// Shared evaluation kernel. `contact` is `k1/(h0√(πα1))` for the convective
/// problem and 0 for the temperature problem.
#[derive(Debug, Clone, Copy)]
struct Kernel {
    mat: Material,
    contact: f64,
    /// γ√π/(2D)
    mush: f64,
    /// θ0√(k2c2)/(D√(k1c1))
    liquid: f64,
    /// l√π/(D c1)
    latent: f64,
}

impl Kernel {
    fn new(mat: Material, theta0: f64, d: f64, contact: f64) -> Self {
        Self {
            mat,
            contact,
            mush: mat.gamma * SQRT_PI / (2.0 * d),
            liquid: theta0 * (mat.k2 * mat.c2).sqrt() / (d * (mat.k1 * mat.c1).sqrt()),
            latent: mat.l * SQRT_PI / (d * mat.c1),
        }
    }

    fn growth(&self, x: f64) -> f64 {
        (x * x).exp() * (erf_f(x) + self.contact)
    }

    fn w(&self, x: f64) -> Result<f64> {
        check_arg(x)?;
        Ok(x + self.mush * self.growth(x))
    }

    fn g(&self, x: f64) -> Result<f64> {
        check_arg(x)?;
        Ok(x + (1.0 - self.mat.eps) * self.mush * self.growth(x))
    }

    fn f1(&self, x: f64) -> Result<f64> {
        check_arg(x)?;
        Ok((-x * x).exp() / (erf_f(x) + self.contact))
    }

    fn liquid_term(&self, x: f64) -> Result<f64> {
        if self.liquid == 0.0 {
            return Ok(0.0);
        }
        Ok(self.liquid * f2(self.mat.alpha12().sqrt() * self.w(x)?))
    }

    fn f(&self, x: f64) -> Result<f64> {
        Ok(self.f1(x)? - self.liquid_term(x)?)
    }
}

/// The equation `F(x) = κ G(x)` that fixes the solid front.
pub trait FrontEquation {
    fn f(&self, x: f64) -> Result<f64>;
    fn g(&self, x: f64) -> Result<f64>;
    /// κ = `l√π/(D c1)`.
    fn latent_coeff(&self) -> f64;

    /// `F(x) - κ G(x)`; strictly decreasing, its root is ξ.
    fn residual(&self, x: f64) -> Result<f64> {
        Ok(self.f(x)? - self.latent_coeff() * self.g(x)?)
    }
}

/// W, F, G, F1, J, H for the convective boundary condition.
#[derive(Debug, Clone, Copy)]
pub struct ConvectiveFamily {
    bc: ConvectiveBc,
    k: Kernel,
}

impl ConvectiveFamily {
    pub fn new(mat: Material, bc: ConvectiveBc) -> Result<Self> {
        let bc = bc.validate()?;
        let contact = mat.k1 / (bc.h0 * (std::f64::consts::PI * mat.alpha1()).sqrt());
        Ok(Self { bc, k: Kernel::new(mat, bc.theta0, bc.dinf, contact) })
    }

    pub fn material(&self) -> &Material {
        &self.k.mat
    }

    pub fn bc(&self) -> &ConvectiveBc {
        &self.bc
    }

    /// `k1/(h0√(πα1))`.
    pub fn contact(&self) -> f64 {
        self.k.contact
    }

    /// `θ0√(k2c2)/(D∞√(k1c1))`.
    pub fn liquid_ratio(&self) -> f64 {
        self.k.liquid
    }

    pub fn w(&self, x: f64) -> Result<f64> {
        self.k.w(x)
    }

    pub fn f1(&self, x: f64) -> Result<f64> {
        self.k.f1(x)
    }

    pub fn j(&self, x: f64) -> Result<f64> {
        Ok(self.k.f(x)? / self.k.g(x)?)
    }

    pub fn h(&self, x: f64) -> Result<f64> {
        Ok(self.k.g(x)? / self.k.f1(x)?)
    }

    /// `W(0+) = γk1/(2D∞h0√α1)`.
    pub fn w_at_zero(&self) -> f64 {
        self.k.mush * self.k.contact
    }

    pub fn g_at_zero(&self) -> f64 {
        (1.0 - self.k.mat.eps) * self.w_at_zero()
    }

    /// `F1(0+) = h0√(πα1)/k1`.
    pub fn f1_at_zero(&self) -> f64 {
        1.0 / self.k.contact
    }

    pub fn f_at_zero(&self) -> f64 {
        let m = &self.k.mat;
        let y = m.gamma * m.k1 / (2.0 * self.bc.dinf * self.bc.h0 * m.alpha2().sqrt());
        self.f1_at_zero() - self.k.liquid * f2(y)
    }
}

impl FrontEquation for ConvectiveFamily {
    fn f(&self, x: f64) -> Result<f64> {
        self.k.f(x)
    }

    fn g(&self, x: f64) -> Result<f64> {
        self.k.g(x)
    }

    fn latent_coeff(&self) -> f64 {
        self.k.latent
    }
}

/// W0, F0, G0 for the temperature boundary condition `θ1(0,t) = -D0`.
#[derive(Debug, Clone, Copy)]
pub struct DirichletFamily {
    bc: DirichletBc,
    k: Kernel,
}

impl DirichletFamily {
    pub fn new(mat: Material, bc: DirichletBc) -> Result<Self> {
        let bc = bc.validate()?;
        Ok(Self { bc, k: Kernel::new(mat, bc.theta0, bc.d0, 0.0) })
    }

    pub fn material(&self) -> &Material {
        &self.k.mat
    }

    pub fn bc(&self) -> &DirichletBc {
        &self.bc
    }

    pub fn w0(&self, x: f64) -> Result<f64> {
        self.k.w(x)
    }

    pub fn f0(&self, x: f64) -> Result<f64> {
        self.k.f(x)
    }

    pub fn g0(&self, x: f64) -> Result<f64> {
        self.k.g(x)
    }

    /// `(W0(x), F0(x), G0(x))`.
    pub fn eval(&self, x: f64) -> Result<(f64, f64, f64)> {
        Ok((self.k.w(x)?, self.k.f(x)?, self.k.g(x)?))
    }

    /// `exp(-x²)/erf(x)`.
    pub fn f1(&self, x: f64) -> Result<f64> {
        self.k.f1(x)
    }
}

impl FrontEquation for DirichletFamily {
    fn f(&self, x: f64) -> Result<f64> {
        self.k.f(x)
    }

    fn g(&self, x: f64) -> Result<f64> {
        self.k.g(x)
    }

    fn latent_coeff(&self) -> f64 {
        self.k.latent
    }
}

/// The `h0 → ∞` limit functions W∞, F∞, G∞, F1∞, J∞, H∞.
#[derive(Debug, Clone, Copy)]
pub struct LimitFamily(DirichletFamily);

impl LimitFamily {
    pub fn new(mat: Material, theta0: f64, dinf: f64) -> Result<Self> {
        DirichletFamily::new(mat, DirichletBc { theta0, d0: dinf }).map(Self)
    }

    pub fn as_dirichlet(&self) -> &DirichletFamily {
        &self.0
    }

    pub fn w_inf(&self, x: f64) -> Result<f64> {
        self.0.w0(x)
    }

    pub fn f_inf(&self, x: f64) -> Result<f64> {
        self.0.f0(x)
    }

    pub fn g_inf(&self, x: f64) -> Result<f64> {
        self.0.g0(x)
    }

    pub fn f1_inf(&self, x: f64) -> Result<f64> {
        self.0.f1(x)
    }

    pub fn j_inf(&self, x: f64) -> Result<f64> {
        Ok(self.0.f0(x)? / self.0.g0(x)?)
    }

    pub fn h_inf(&self, x: f64) -> Result<f64> {
        Ok(self.0.g0(x)? / self.0.f1(x)?)
    }
}

impl FrontEquation for LimitFamily {
    fn f(&self, x: f64) -> Result<f64> {
        self.0.f(x)
    }

    fn g(&self, x: f64) -> Result<f64> {
        self.0.g(x)
    }

    fn latent_coeff(&self) -> f64 {
        self.0.latent_coeff()
    }
}

/// Unique positive root ν of `F(x) = 0` (equivalently `J = F/G = 0`).
pub fn find_nu<T: FrontEquation>(fam: &T, cfg: &RootConfig) -> Result<f64> {
    let br = bracket_decreasing(|x| fam.f(x), SCAN_START, EXP_CAP)
        .map_err(|e| match e {
            Error::NoRoot(m) => Error::NoRoot(format!("F has no sign change: {m}")),
            other => other,
        })?;
    find_root(|x| fam.f(x), br, cfg)
}

/// `F3(x) = F2(x) - γk1√π/(2θ0k2) / x + (1-ε)l√π/(θ0c2) · x`.
pub fn f3(mat: &Material, theta0: f64, x: f64) -> Result<f64> {
    if !(theta0 > 0.0) {
        return Err(Error::domain("F3 is undefined for theta0 = 0"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("F3 argument must be finite and > 0, got {x}")));
    }
    Ok(f2(x) - mat.gamma * mat.k1 * SQRT_PI / (2.0 * theta0 * mat.k2) / x
        + (1.0 - mat.eps) * mat.l * SQRT_PI / (theta0 * mat.c2) * x)
}

/// η, the unique positive root of F3. Exists only for γ > 0 and θ0 > 0.
pub fn compute_eta(mat: &Material, theta0: f64, cfg: &RootConfig) -> Result<f64> {
    // F3 is increasing; scan its negation. F2 never overflows, so the cap is loose.
    let neg = |x: f64| f3(mat, theta0, x).map(|v| -v);
    let br = bracket_decreasing(neg, SCAN_START, 1e150).map_err(|e| match e {
        Error::NoRoot(m) => Error::NoRoot(format!("F3 has no sign change: {m}")),
        other => other,
    })?;
    find_root(neg, br, cfg)
}

/// Which closed form governs the solvability threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdRegime {
    /// γ > 0 and θ0 > 0: `h0* = γk1/(2D∞η√α2)`.
    General,
    /// γ = 0, θ0 > 0 (no mushy zone): `h0* = θ0√(ρk2c2)/(D∞√π)`.
    NoMush,
    /// θ0 = 0, γ > 0 (one phase): `h0* = √(ρl(1-ε)γk1/2)/D∞`.
    OnePhase,
    /// γ = 0 and θ0 = 0: always solvable.
    Classical,
}

/// Solvability diagnostics for the convective problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub regime: ThresholdRegime,
    /// Root of F3; `None` outside the general regime.
    pub eta: Option<f64>,
    pub h0_star: f64,
    /// `D∞√π/(θ0√(ρk2c2))`; `None` when θ0 = 0.
    pub zeta: Option<f64>,
    /// Smallest verified `h` with `(1/h)F2(γk1/(2D∞√α2 h)) < ζ`, never below `h0_star`.
    pub h1_star: f64,
    pub h0: f64,
    pub solvable: bool,
}

/// Relative margin added to the `h1*` witness.
const H1_MARGIN: f64 = 1e-9;

/// Solvability threshold `h0*` and the auxiliary quantities η, ζ, `h1*`.
///
/// A similarity solution exists iff `h0 > h0*`. With γ = 0 or θ0 = 0 the F3
/// construction is unavailable; the same condition `F(0+) > κ G(0+)` then
/// reduces to the closed forms listed on [`ThresholdRegime`].
pub fn compute_threshold(mat: &Material, bc: &ConvectiveBc, cfg: &RootConfig) -> Result<ThresholdReport> {
    let bc = bc.validate()?;
    let (gamma, theta0, dinf) = (mat.gamma, bc.theta0, bc.dinf);
    let zeta = (theta0 > 0.0).then(|| dinf * SQRT_PI / (theta0 * (mat.rho * mat.k2 * mat.c2).sqrt()));

    let (regime, eta, h0_star) = match (gamma > 0.0, theta0 > 0.0) {
        (true, true) => {
            let eta = compute_eta(mat, theta0, cfg)?;
            (ThresholdRegime::General, Some(eta), gamma * mat.k1 / (2.0 * dinf * eta * mat.alpha2().sqrt()))
        }
        (false, true) => (
            ThresholdRegime::NoMush,
            None,
            theta0 * (mat.rho * mat.k2 * mat.c2).sqrt() / (dinf * SQRT_PI),
        ),
        (true, false) => (
            ThresholdRegime::OnePhase,
            None,
            (0.5 * mat.rho * mat.l * (1.0 - mat.eps) * gamma * mat.k1).sqrt() / dinf,
        ),
        (false, false) => (ThresholdRegime::Classical, None, 0.0),
    };

    let h1_star = match zeta {
        None => h0_star,
        Some(zeta) => {
            let a = gamma * mat.k1 / (2.0 * dinf * mat.alpha2().sqrt());
            let phi = |h: f64| Ok(f2(a / h) / h - zeta);
            let br = bracket_decreasing(phi, 1.0, 1e300)?;
            let root = find_root(phi, br, cfg)?;
            h0_star.max(root * (1.0 + H1_MARGIN))
        }
    };

    Ok(ThresholdReport {
        regime,
        eta,
        h0_star,
        zeta,
        h1_star,
        h0: bc.h0,
        solvable: bc.h0 > h0_star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::MaterialParams;

    fn unit() -> Material {
        MaterialParams::default().validate().unwrap()
    }

    fn conv(mat: Material, theta0: f64, h0: f64) -> ConvectiveFamily {
        ConvectiveFamily::new(mat, ConvectiveBc { theta0, dinf: 1.0, h0 }).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // values below: 40-digit mpmath evaluation, tests/oracle/oracle.py

    #[test]
    fn w_limits_and_reference() {
        let fam = conv(unit(), 1.0, 1.0);
        assert!(rel(fam.w(1e-12).unwrap(), fam.w_at_zero()) < 1e-9);
        let want = 1.0 / (2.0 * 1.0 * 1.0 * 1.0); // γk1/(2D∞h0√α1)
        assert!(rel(fam.w_at_zero(), want) < 1e-15);
        assert!(rel(fam.w(1.0).unwrap(), 4.389219383508227593219234) < 1e-14);

        let flat = conv(MaterialParams { gamma: 0.0, ..Default::default() }.validate().unwrap(), 1.0, 1.0);
        for x in [1e-6, 0.1, 1.0, 5.0] {
            assert_eq!(flat.w(x).unwrap(), x);
        }
    }

    #[test]
    fn f_limits_and_reference() {
        let fam = conv(unit(), 1.0, 1.0);
        assert!(rel(fam.f(1e-12).unwrap(), fam.f_at_zero()) < 1e-9);
        assert!(rel(fam.f1(1e-12).unwrap(), fam.f1_at_zero()) < 1e-9);
        assert!(rel(fam.f1_at_zero(), std::f64::consts::PI.sqrt()) < 1e-15);
        assert!(rel(fam.f(1.0).unwrap(), -7.710783114897126399358609) < 1e-14);

        let one_phase = conv(unit(), 0.0, 1.0);
        for x in [1e-3, 0.5, 2.0] {
            assert_eq!(one_phase.f(x).unwrap(), one_phase.f1(x).unwrap());
        }
    }

    #[test]
    fn g_limits_identity_and_reference() {
        let fam = conv(unit(), 1.0, 1.0);
        assert!(rel(fam.g(1e-12).unwrap(), fam.g_at_zero()) < 1e-9);
        assert!(rel(fam.g(1.0).unwrap(), 2.694609691754113796609617) < 1e-14);
        for x in [1e-4, 0.3, 1.0, 2.5] {
            let e = fam.material().eps;
            let id = e * x + (1.0 - e) * fam.w(x).unwrap();
            assert!(rel(fam.g(x).unwrap(), id) < 1e-14);
        }
        let x = 0.7;
        let mut prev = f64::INFINITY;
        for eps in [0.9, 0.99, 0.999, 0.9999] {
            let m = MaterialParams { eps, ..Default::default() }.validate().unwrap();
            let gap = conv(m, 1.0, 1.0).g(x).unwrap() - x;
            assert!(gap > 0.0 && gap < prev);
            prev = gap;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn argument_checks() {
        let fam = conv(unit(), 1.0, 1.0);
        assert!(matches!(fam.w(0.0), Err(Error::Domain(_))));
        assert!(matches!(fam.f(-1.0), Err(Error::Domain(_))));
        assert!(matches!(fam.g(f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(fam.f(27.0), Err(Error::Overflow { .. })));
        assert!(fam.f(EXP_CAP).unwrap().is_finite());
    }

    #[test]
    fn monotone_on_dense_grid() {
        let fam = conv(unit(), 1.0, 2.0);
        let xs: Vec<f64> = (0..1000).map(|i| 1e-6 + (3.0 - 1e-6) * i as f64 / 999.0).collect();
        for pair in xs.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            assert!(fam.w(a).unwrap() < fam.w(b).unwrap());
            assert!(fam.f1(a).unwrap() > fam.f1(b).unwrap());
            assert!(f2(a) < f2(b));
            assert!(fam.f(a).unwrap() > fam.f(b).unwrap());
            assert!(fam.g(a).unwrap() < fam.g(b).unwrap());
        }
    }

    #[test]
    fn f3_behaviour() {
        let m = unit();
        let mut prev = f3(&m, 1.0, 1e-3).unwrap();
        for i in 1..100 {
            let v = f3(&m, 1.0, 1e-3 + 0.05 * i as f64).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(f3(&m, 0.0, 1.0).is_err());
        assert!(f3(&m, 1.0, 0.0).is_err());

        let eta = compute_eta(&m, 1.0, &RootConfig::default()).unwrap();
        assert!((eta - 0.4520630183799984583187671).abs() < 1e-14);

        // no mush and (almost) no latent heat in the mush: F3 ≈ F2 > 1
        let flat = MaterialParams { gamma: 0.0, eps: 1.0 - 1e-12, ..Default::default() }.validate().unwrap();
        assert!(matches!(compute_eta(&flat, 1.0, &RootConfig::default()), Err(Error::NoRoot(_))));
    }

    #[test]
    fn unit_threshold() {
        let cfg = RootConfig::default();
        let bc = ConvectiveBc { theta0: 1.0, dinf: 1.0, h0: 2.0 };
        let r = compute_threshold(&unit(), &bc, &cfg).unwrap();
        assert_eq!(r.regime, ThresholdRegime::General);
        assert!((r.h0_star - 1.106040484779726708247482).abs() < 1e-13);
        assert!((r.zeta.unwrap() - 1.772453850905516027298167).abs() < 1e-15);
        // the F2-based witness (0.94056...) lies below h0*, so h1* = h0*
        assert_eq!(r.h1_star, r.h0_star);
        assert!(r.solvable);

        let half = ConvectiveBc { h0: r.h0_star / 2.0, ..bc };
        assert!(!compute_threshold(&unit(), &half, &cfg).unwrap().solvable);
    }

    #[test]
    fn h1_witness_satisfies_inequality() {
        let cfg = RootConfig::default();
        let m = MaterialParams { k2: 0.2, c2: 0.3, gamma: 2.0, ..Default::default() }.validate().unwrap();
        let bc = ConvectiveBc { theta0: 3.0, dinf: 1.0, h0: 50.0 };
        let r = compute_threshold(&m, &bc, &cfg).unwrap();
        let a = m.gamma * m.k1 / (2.0 * bc.dinf * m.alpha2().sqrt());
        let phi = |h: f64| f2(a / h) / h;
        let zeta = r.zeta.unwrap();
        assert!(phi(r.h1_star) < zeta);
        assert!(r.h1_star >= r.h0_star);
        if r.h1_star > r.h0_star {
            assert!(phi(r.h1_star / (1.0 + 1e-8)) >= zeta);
        }
    }

    /// The reduced thresholds must coincide with the sign change of
    /// `F(0+) - κG(0+)`, computed here from the general limit formulas.
    #[test]
    fn reduced_thresholds_match_limit_condition() {
        let cfg = RootConfig::default();
        let cases = [
            (MaterialParams { gamma: 0.0, rho: 2.0, k2: 3.0, ..Default::default() }, 1.5, ThresholdRegime::NoMush),
            (MaterialParams { gamma: 1.3, k1: 2.0, ..Default::default() }, 0.0, ThresholdRegime::OnePhase),
        ];
        for (p, theta0, regime) in cases {
            let m = p.validate().unwrap();
            let base = ConvectiveBc { theta0, dinf: 0.7, h0: 1.0 };
            let r = compute_threshold(&m, &base, &cfg).unwrap();
            assert_eq!(r.regime, regime);
            for (factor, sign) in [(0.99, -1.0), (1.01, 1.0)] {
                let fam = ConvectiveFamily::new(m, ConvectiveBc { h0: factor * r.h0_star, ..base }).unwrap();
                let gap = fam.f_at_zero() - fam.latent_coeff() * fam.g_at_zero();
                assert_eq!(gap.signum(), sign, "{regime:?} factor {factor}");
            }
        }
        let m = MaterialParams { gamma: 0.0, ..Default::default() }.validate().unwrap();
        let r = compute_threshold(&m, &ConvectiveBc { theta0: 0.0, dinf: 1.0, h0: 1e-6 }, &cfg).unwrap();
        assert_eq!((r.regime, r.h0_star, r.solvable), (ThresholdRegime::Classical, 0.0, true));
    }

    #[test]
    fn general_threshold_tends_to_no_mush_value() {
        let cfg = RootConfig::default();
        let bc = ConvectiveBc { theta0: 1.0, dinf: 1.0, h0: 1.0 };
        let tiny = MaterialParams { gamma: 1e-9, ..Default::default() }.validate().unwrap();
        let zero = MaterialParams { gamma: 0.0, ..Default::default() }.validate().unwrap();
        let a = compute_threshold(&tiny, &bc, &cfg).unwrap().h0_star;
        let b = compute_threshold(&zero, &bc, &cfg).unwrap().h0_star;
        assert!(rel(a, b) < 1e-6);
    }

    #[test]
    fn nu_bounds_xi() {
        let cfg = RootConfig::default();
        let fam = conv(unit(), 1.0, 2.0);
        let nu = find_nu(&fam, &cfg).unwrap();
        assert!((nu - 0.2064085967880418263617814).abs() < 1e-13);
        assert!(fam.f(nu).unwrap().abs() < 1e-12);
        assert!(fam.residual(nu).unwrap() < 0.0);
        assert!(fam.f(0.5 * nu).unwrap() > 0.0);

        let lim = LimitFamily::new(unit(), 1.0, 1.0).unwrap();
        let nu_inf = find_nu(&lim, &cfg).unwrap();
        assert!(lim.f_inf(nu_inf).unwrap().abs() < 1e-12);
        assert!(nu_inf > nu);

        // one-phase: F = F1 > 0 never vanishes
        assert!(matches!(find_nu(&conv(unit(), 0.0, 2.0), &cfg), Err(Error::NoRoot(_))));
    }

    #[test]
    fn dirichlet_family() {
        let fam = DirichletFamily::new(unit(), DirichletBc { theta0: 1.0, d0: 1.0 }).unwrap();
        let (w0, f0, g0) = fam.eval(0.5).unwrap();
        assert!(rel(w0, 1.092296536469326575660415) < 1e-14);
        assert!(rel(f0, -0.9813076168935534890871202) < 1e-13);
        assert!(rel(g0, 0.7961482682346632878302075) < 1e-14);

        let far = conv(unit(), 1.0, 1e12);
        for x in [0.1, 0.5, 1.5] {
            assert!(rel(far.w(x).unwrap(), fam.w0(x).unwrap()) < 1e-9);
            let e = 0.5;
            assert!(rel(fam.g0(x).unwrap(), e * x + (1.0 - e) * fam.w0(x).unwrap()) < 1e-14);
        }

        let flat = DirichletFamily::new(
            MaterialParams { gamma: 0.0, ..Default::default() }.validate().unwrap(),
            DirichletBc { theta0: 1.0, d0: 2.0 },
        )
        .unwrap();
        assert_eq!(flat.w0(0.4).unwrap(), 0.4);
        assert_eq!(flat.g0(0.4).unwrap(), 0.4);
    }
}

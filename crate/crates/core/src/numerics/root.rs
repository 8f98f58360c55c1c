use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` expected to contain a sign change.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::domain(format!("invalid bracket [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Termination controls for [`find_root`]. The search stops once the
/// enclosing bracket is narrower than `abs_tol + rel_tol * |x|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 4.0 * f64::EPSILON,
            max_iter: 200,
        }
    }
}

impl RootConfig {
    pub fn validate(self) -> Result<Self> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Range {
                field: "abs_tol",
                value: self.abs_tol,
                reason: "must be positive",
            });
        }
        if !(self.rel_tol >= 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::Range {
                field: "rel_tol",
                value: self.rel_tol,
                reason: "must be non-negative",
            });
        }
        if self.max_iter == 0 {
            return Err(Error::Range {
                field: "max_iter",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(self)
    }

    fn tolerance(&self, x: f64) -> f64 {
        self.abs_tol + self.rel_tol * x.abs()
    }
}

fn checked(x: f64, fx: f64) -> Result<f64> {
    if fx.is_finite() {
        Ok(fx)
    } else {
        Err(Error::domain(format!("function value {fx} at x = {x} is not finite")))
    }
}

/// Brent's method: inverse quadratic / secant steps safeguarded by bisection,
/// so the bracket always shrinks and convergence is guaranteed for any
/// continuous `f` with `f(lo) * f(hi) <= 0`.
pub fn find_root<F>(mut f: F, bracket: Bracket, cfg: &RootConfig) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let cfg = cfg.validate()?;
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut fa = checked(a, f(a)?)?;
    let mut fb = checked(b, f(b)?)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo: a, hi: b, f_lo: fa, f_hi: fb });
    }

    // b is the best estimate, c the opposite end of the bracket, a the previous b
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..cfg.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 0.5 * cfg.tolerance(b);
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = checked(b, f(b)?)?;
    }
    if fb.signum() == fc.signum() {
        c = a;
    }
    let (lo, hi) = if b < c { (b, c) } else { (c, b) };
    Err(Error::Convergence {
        iterations: cfg.max_iter,
        bracket: Bracket { lo, hi },
    })
}

/// Brackets the root of a function that is positive near `0+` and negative
/// far out, scanning geometrically from `start`: upward by doubling while
/// `f > 0` (up to `cap`), or downward by halving while `f <= 0`.
pub fn bracket_decreasing<F>(mut f: F, start: f64, cap: f64) -> Result<Bracket>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(start > 0.0 && start < cap) {
        return Err(Error::domain(format!("scan start {start} must lie in (0, {cap})")));
    }
    let mut x = start;
    if f(x)? > 0.0 {
        loop {
            let next = (2.0 * x).min(cap);
            if f(next)? <= 0.0 {
                return Ok(Bracket { lo: x, hi: next });
            }
            if next >= cap {
                return Err(Error::NoRoot(format!("no sign change on [{start}, {cap}]")));
            }
            x = next;
        }
    }
    loop {
        let next = 0.5 * x;
        if next < f64::MIN_POSITIVE {
            return Err(Error::NoRoot(format!("no sign change on (0, {start}]")));
        }
        if f(next)? > 0.0 {
            return Ok(Bracket { lo: next, hi: x });
        }
        x = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::erf;
    use proptest::prelude::*;

    fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let flo = f(lo);
        while hi - lo > 1e-15 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (flo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn sqrt_two() {
        let r = find_root(|x| Ok(x * x - 2.0), Bracket::new(1.0, 2.0).unwrap(), &RootConfig::default())
            .unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn inverse_erf_half() {
        let cfg = RootConfig::default();
        let r = find_root(|x| Ok(erf(x)? - 0.5), Bracket::new(0.0, 1.0).unwrap(), &cfg).unwrap();
        // 40-digit quadrature oracle
        assert!((r - 0.4769362762044698733814184).abs() < 1e-14);
        let b = bisect(|x| erf(x).unwrap() - 0.5, 0.0, 1.0);
        assert!((r - b).abs() < 1e-14);
    }

    #[test]
    fn no_sign_change() {
        let err = find_root(|x| Ok(x - 1.0), Bracket::new(2.0, 3.0).unwrap(), &RootConfig::default());
        assert!(matches!(err, Err(Error::Bracket { .. })));
    }

    #[test]
    fn iteration_cap_reports_bracket() {
        let cfg = RootConfig { abs_tol: 1e-300, rel_tol: 0.0, max_iter: 3 };
        match find_root(|x| Ok(x.powi(3) - 0.1), Bracket::new(-1.0, 2.0).unwrap(), &cfg) {
            Err(Error::Convergence { iterations: 3, bracket }) => {
                assert!(bracket.lo < 0.1f64.cbrt() && 0.1f64.cbrt() < bracket.hi);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn flat_near_zero() {
        // exp(-1/x) is extremely flat at 0+
        let r = find_root(
            |x| Ok((-1.0 / x).exp() - 1e-3),
            Bracket::new(1e-3, 10.0).unwrap(),
            &RootConfig::default(),
        )
        .unwrap();
        assert!((r - 1.0 / 1e3f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn invalid_config() {
        let cfg = RootConfig { abs_tol: 0.0, ..Default::default() };
        assert!(cfg.validate().is_err());
        let cfg = RootConfig { max_iter: 0, ..Default::default() };
        assert!(cfg.validate().is_err());
        assert!(Bracket::new(1.0, 1.0).is_err());
    }

    #[test]
    fn scan_both_directions() {
        let b = bracket_decreasing(|x| Ok(3.0 - x), 1e-8, 26.0).unwrap();
        assert!(b.lo < 3.0 && 3.0 <= b.hi);
        let b = bracket_decreasing(|x| Ok(1e-12 - x), 1e-8, 26.0).unwrap();
        assert!(b.lo < 1e-12 && 1e-12 <= b.hi);
        assert!(bracket_decreasing(|_| Ok(1.0), 1e-8, 26.0).is_err());
        assert!(bracket_decreasing(|_| Ok(-1.0), 1e-8, 26.0).is_err());
    }

    proptest! {
        #[test]
        fn root_inside_bracket_and_tight(r in -50.0f64..50.0, lo_off in 0.01f64..30.0, hi_off in 0.01f64..30.0) {
            let cfg = RootConfig::default();
            let (lo, hi) = (r - lo_off, r + hi_off);
            let x = find_root(|x| Ok((x - r) * (1.0 + (x - r).powi(2))), Bracket::new(lo, hi).unwrap(), &cfg).unwrap();
            prop_assert!(lo <= x && x <= hi);
            prop_assert!((x - r).abs() <= cfg.abs_tol + cfg.rel_tol * r.abs());
        }
    }
}

//! Straight transcriptions of the front equations, with an error function
//! built from a different algorithm than the library's (positive-term Taylor
//! series and a backward continued fraction), solved by plain bisection.

use std::f64::consts::PI;

use mushy_stefan::MaterialParams;

const CF_TERMS: usize = 2000;

/// `erf(x) = 2/√π e^{-x²} Σ (2x²)^n x / (2n+1)!!`, all terms positive.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let (mut term, mut sum, mut n) = (x, x, 0.0);
    while term > 1e-18 * sum {
        term *= 2.0 * x2 / (2.0 * n + 3.0);
        sum += term;
        n += 1.0;
    }
    2.0 / PI.sqrt() * (-x2).exp() * sum
}

/// `√π e^{x²} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))` for x >= 0.5.
fn scaled_erfc_cf(x: f64) -> f64 {
    let mut c = 0.0;
    for n in (1..CF_TERMS).rev() {
        c = (n as f64 / 2.0) / (x + c);
    }
    1.0 / (x + c)
}

pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        -erf(-x)
    } else if x < 2.0 {
        erf_series(x)
    } else {
        1.0 - (-x * x).exp() / PI.sqrt() * scaled_erfc_cf(x)
    }
}

/// `exp(-y²)/erfc(y)` for `y >= 0`.
pub fn f2(y: f64) -> f64 {
    if y < 0.5 {
        (-y * y).exp() / (1.0 - erf_series(y))
    } else {
        PI.sqrt() / scaled_erfc_cf(y)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Problem {
    pub p: MaterialParams,
    pub theta0: f64,
    /// Bulk (convective) or prescribed (temperature problem) magnitude.
    pub d: f64,
    /// `None` selects the prescribed-temperature problem.
    pub h0: Option<f64>,
}

impl Problem {
    fn a1(&self) -> f64 {
        self.p.k1 / (self.p.rho * self.p.c1)
    }

    fn a2(&self) -> f64 {
        self.p.k2 / (self.p.rho * self.p.c2)
    }

    fn c(&self) -> f64 {
        self.h0.map_or(0.0, |h| self.p.k1 / (h * (PI * self.a1()).sqrt()))
    }

    pub fn w(&self, x: f64) -> f64 {
        x + self.p.gamma * PI.sqrt() / (2.0 * self.d) * (x * x).exp() * (erf(x) + self.c())
    }

    pub fn g(&self, x: f64) -> f64 {
        x + (1.0 - self.p.eps) * self.p.gamma * PI.sqrt() / (2.0 * self.d) * (x * x).exp() * (erf(x) + self.c())
    }

    pub fn f(&self, x: f64) -> f64 {
        let pre = self.theta0 * (self.p.k2 * self.p.c2).sqrt() / (self.d * (self.p.k1 * self.p.c1).sqrt());
        let liquid = if self.theta0 == 0.0 { 0.0 } else { pre * f2((self.a1() / self.a2()).sqrt() * self.w(x)) };
        (-x * x).exp() / (erf(x) + self.c()) - liquid
    }

    pub fn residual(&self, x: f64) -> f64 {
        self.f(x) - self.p.l * PI.sqrt() / (self.d * self.p.c1) * self.g(x)
    }

    pub fn mu(&self, xi: f64) -> f64 {
        (self.a1() / self.a2()).sqrt() * self.w(xi)
    }

    /// Front position ξ by bisection to an absolute bracket width of 1e-14.
    pub fn xi(&self) -> Option<f64> {
        bisect(|x| self.residual(x), 1e-3)
    }
}

/// Bisection for a decreasing function with a single sign change on (0, ∞).
/// Non-finite values count as "beyond the root".
pub fn bisect(f: impl Fn(f64) -> f64, start: f64) -> Option<f64> {
    let pos = |x: f64| {
        let v = f(x);
        v.is_finite() && v > 0.0
    };
    let mut lo = start;
    while !pos(lo) {
        lo *= 0.5;
        if lo < 1e-300 {
            return None;
        }
    }
    let mut hi = lo;
    while pos(hi) {
        hi *= 2.0;
        if hi > 30.0 {
            return None;
        }
    }
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pos(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

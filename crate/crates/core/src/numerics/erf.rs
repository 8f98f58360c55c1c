//! Error function, complementary error function and the scaled complementary
//! error function `erfcx(x) = exp(x^2) erfc(x)`.
//!
//! The rational approximations are those of the FreeBSD `s_erf.c`
//! implementation (Sun Microsystems, 1993; "Permission to use, copy, modify,
//! and distribute this software is freely granted, provided that this notice
//! is preserved."). Max error is below one ulp for `erf` and a few ulp for
//! `erfc` on the whole real line.
//!
//! Interval split for `|x|`:
//!
//! ```text
//!   [0, 0.84375)      erf(x) = x + x R(x^2)
//!   [0.84375, 1.25)   erf(x) = c + P1(s)/Q1(s),  s = x - 1
//!   [1.25, 1/0.35)    erfc(x) = exp(-x^2 - 0.5625 + R1(z)/S1(z)) / x,  z = 1/x^2
//!   [1/0.35, 28)      erfc(x) = exp(-x^2 - 0.5625 + R2(z)/S2(z)) / x
//!   [28, inf)         erfc underflows; erfcx from the asymptotic series
//! ```
//!
//! In the last two bands the factor `exp(-x^2)` is split off, which gives
//! `erfcx` without ever forming `exp(x^2)`.

use crate::error::{Error, Result};

const ERX: f64 = 8.45062911510467529297e-01;

// erf in [0, 0.84375]
const EFX: f64 = 1.28379167095512586316e-01;
const EFX8: f64 = 1.02703333676410069053e+00;
const PP0: f64 = 1.28379167095512558561e-01;
const PP1: f64 = -3.25042107247001499370e-01;
const PP2: f64 = -2.84817495755985104766e-02;
const PP3: f64 = -5.77027029648944159157e-03;
const PP4: f64 = -2.37630166566501626084e-05;
const QQ1: f64 = 3.97917223959155352819e-01;
const QQ2: f64 = 6.50222499887672944485e-02;
const QQ3: f64 = 5.08130628187576562776e-03;
const QQ4: f64 = 1.32494738004321644526e-04;
const QQ5: f64 = -3.96022827877536812320e-06;

// erf in [0.84375, 1.25]
const PA0: f64 = -2.36211856075265944077e-03;
const PA1: f64 = 4.14856118683748331666e-01;
const PA2: f64 = -3.72207876035701323847e-01;
const PA3: f64 = 3.18346619901161753674e-01;
const PA4: f64 = -1.10894694282396677476e-01;
const PA5: f64 = 3.54783043256182359371e-02;
const PA6: f64 = -2.16637559486879084300e-03;
const QA1: f64 = 1.06420880400844228286e-01;
const QA2: f64 = 5.40397917702171048937e-01;
const QA3: f64 = 7.18286544141962662868e-02;
const QA4: f64 = 1.26171219808761642112e-01;
const QA5: f64 = 1.36370839120290507362e-02;
const QA6: f64 = 1.19844998467991074170e-02;

// erfc in [1.25, 1/0.35]
const RA0: f64 = -9.86494403484714822705e-03;
const RA1: f64 = -6.93858572707181764372e-01;
const RA2: f64 = -1.05586262253232909814e+01;
const RA3: f64 = -6.23753324503260060396e+01;
const RA4: f64 = -1.62396669462573470355e+02;
const RA5: f64 = -1.84605092906711035994e+02;
const RA6: f64 = -8.12874355063065934246e+01;
const RA7: f64 = -9.81432934416914548592e+00;
const SA1: f64 = 1.96512716674392571292e+01;
const SA2: f64 = 1.37657754143519042600e+02;
const SA3: f64 = 4.34565877475229228821e+02;
const SA4: f64 = 6.45387271733267880336e+02;
const SA5: f64 = 4.29008140027567833386e+02;
const SA6: f64 = 1.08635005541779435134e+02;
const SA7: f64 = 6.57024977031928170135e+00;
const SA8: f64 = -6.04244152148580987438e-02;

// erfc in [1/0.35, 28]
const RB0: f64 = -9.86494292470009928597e-03;
const RB1: f64 = -7.99283237680523006574e-01;
const RB2: f64 = -1.77579549177547519889e+01;
const RB3: f64 = -1.60636384855821916062e+02;
const RB4: f64 = -6.37566443368389627722e+02;
const RB5: f64 = -1.02509513161107724954e+03;
const RB6: f64 = -4.83519191608651397019e+02;
const SB1: f64 = 3.03380607434824582924e+01;
const SB2: f64 = 3.25792512996573918826e+02;
const SB3: f64 = 1.53672958608443695994e+03;
const SB4: f64 = 3.19985821950859553908e+03;
const SB5: f64 = 2.55305040643316442583e+03;
const SB6: f64 = 4.74528541206955367215e+02;
const SB7: f64 = -2.24409524465858183362e+01;

const VERY_TINY: f64 = 2.848094538889218e-306;
const SMALL: f64 = 3.725290298461914e-9; // 2^-28
const TINY: f64 = 1.3877787807814457e-17; // 2^-56
const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

#[inline]
fn small_ratio(z: f64) -> f64 {
    let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
    let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
    r / s
}

#[inline]
fn near_one(s: f64) -> f64 {
    let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
    let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
    p / q
}

/// `log(x erfc(x)) + x^2 + 0.5625` for `1.25 <= x < 28`.
#[inline]
fn tail_exponent(x: f64) -> f64 {
    let s = 1.0 / (x * x);
    if x < 1.0 / 0.35 {
        let r = RA0 + s * (RA1 + s * (RA2 + s * (RA3 + s * (RA4 + s * (RA5 + s * (RA6 + s * RA7))))));
        let q = 1.0
            + s * (SA1 + s * (SA2 + s * (SA3 + s * (SA4 + s * (SA5 + s * (SA6 + s * (SA7 + s * SA8)))))));
        r / q
    } else {
        let r = RB0 + s * (RB1 + s * (RB2 + s * (RB3 + s * (RB4 + s * (RB5 + s * RB6)))));
        let q = 1.0 + s * (SB1 + s * (SB2 + s * (SB3 + s * (SB4 + s * (SB5 + s * (SB6 + s * SB7))))));
        r / q
    }
}

/// `erfc(x)` for `1.25 <= x < 28`, with `exp(-x^2)` evaluated in two pieces.
#[inline]
fn erfc_tail(x: f64) -> f64 {
    // x truncated to 20 significant bits so z*z is exact
    let z = f64::from_bits(x.to_bits() & 0xffff_ffff_0000_0000);
    (-z * z - 0.5625).exp() * ((z - x) * (z + x) + tail_exponent(x)).exp() / x
}

pub(crate) fn erf_f(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let v = if ax < 0.84375 {
        if ax < SMALL {
            if ax < VERY_TINY {
                0.125 * (8.0 * ax + EFX8 * ax)
            } else {
                ax + EFX * ax
            }
        } else {
            ax + ax * small_ratio(ax * ax)
        }
    } else if ax < 1.25 {
        ERX + near_one(ax - 1.0)
    } else if ax >= 6.0 {
        1.0
    } else {
        1.0 - erfc_tail(ax)
    };
    v.copysign(x)
}

pub(crate) fn erfc_f(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax < 0.84375 {
        if ax < TINY {
            return 1.0 - x;
        }
        let y = small_ratio(x * x);
        return if x < 0.25 {
            1.0 - (x + x * y)
        } else {
            0.5 - (x * y + (x - 0.5))
        };
    }
    if ax < 1.25 {
        let p = near_one(ax - 1.0);
        return if x > 0.0 { (1.0 - ERX) - p } else { 1.0 + (ERX + p) };
    }
    if x < 0.0 {
        return if ax < 6.0 { 2.0 - erfc_tail(ax) } else { 2.0 };
    }
    if ax < 28.0 {
        erfc_tail(ax)
    } else {
        0.0
    }
}

/// `exp(x^2) erfc(x)` without overflow or underflow for `x >= 0`.
pub(crate) fn erfcx_f(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        // erfcx(-x) = 2 exp(x^2) - erfcx(x)
        return 2.0 * (x * x).exp() - erfcx_f(-x);
    }
    if x < 1.25 {
        (x * x).exp() * erfc_f(x)
    } else if x < 28.0 {
        (tail_exponent(x) - 0.5625).exp() / x
    } else if x.is_infinite() {
        0.0
    } else {
        // erfcx(x) ~ 1/(x sqrt(pi)) * sum_n (-1)^n (2n-1)!! / (2x^2)^n
        let inv = 1.0 / (2.0 * x * x);
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 1..12 {
            term *= -((2 * n - 1) as f64) * inv;
            sum += term;
        }
        FRAC_1_SQRT_PI * sum / x
    }
}

fn finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::domain(format!("non-finite argument {x}")))
    }
}

/// Error function `(2/sqrt(pi)) * integral_0^x exp(-y^2) dy`.
pub fn erf(x: f64) -> Result<f64> {
    finite(x).map(erf_f)
}

/// Complementary error function `1 - erf(x)`, accurate in relative terms for
/// large positive `x`.
pub fn erfc(x: f64) -> Result<f64> {
    finite(x).map(erfc_f)
}

/// Scaled complementary error function `exp(x^2) erfc(x)`.
pub fn erfcx(x: f64) -> Result<f64> {
    finite(x).map(erfcx_f)
}

use crate::error::{Error, Result};

/// Least-squares slope of `ln(gap)` against `ln(h)`.
pub fn fit_loglog_slope(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.len() < 3 {
        return Err(Error::domain(format!("need at least 3 pairs, got {}", pairs.len())));
    }
    if let Some(&(h, g)) = pairs.iter().find(|(h, g)| !(*h > 0.0 && *g > 0.0 && h.is_finite() && g.is_finite())) {
        return Err(Error::domain(format!("non-positive or non-finite pair ({h}, {g})")));
    }
    let n = pairs.len() as f64;
    let (sx, sy) = pairs
        .iter()
        .fold((0.0, 0.0), |(sx, sy), (h, g)| (sx + h.ln(), sy + g.ln()));
    let (mx, my) = (sx / n, sy / n);
    let (sxy, sxx) = pairs.iter().fold((0.0, 0.0), |(sxy, sxx), (h, g)| {
        let dx = h.ln() - mx;
        (sxy + dx * (g.ln() - my), sxx + dx * dx)
    });
    if sxx == 0.0 {
        return Err(Error::domain("all abscissae coincide"));
    }
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_lines() {
        let s = fit_loglog_slope(&[(1.0, 1.0), (2.0, 2.0), (4.0, 4.0)]).unwrap();
        assert!((s - 1.0).abs() < 1e-15);
        let s = fit_loglog_slope(&[(1.0, 1.0), (10.0, 0.1), (100.0, 0.01)]).unwrap();
        assert!((s + 1.0).abs() < 1e-15);
    }

    #[test]
    fn noisy_power_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts: Vec<(f64, f64)> = (0..20)
            .map(|i| {
                let h = 10f64.powf(1.0 + 0.2 * i as f64);
                (h, 3.0 / h * (1.0 + rng.gen_range(-0.01..0.01)))
            })
            .collect();
        let s = fit_loglog_slope(&pts).unwrap();
        // closed-form least squares in plain sums
        let n = pts.len() as f64;
        let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
        for (h, g) in &pts {
            let (x, y) = (h.ln(), g.ln());
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        let closed = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!((s - closed).abs() < 1e-12);
        assert!((s + 1.0).abs() < 0.02);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_loglog_slope(&[(1.0, 1.0), (2.0, 2.0)]).is_err());
        assert!(fit_loglog_slope(&[(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]).is_err());
        assert!(fit_loglog_slope(&[(-1.0, 1.0), (2.0, 1.0), (3.0, 1.0)]).is_err());
    }
}

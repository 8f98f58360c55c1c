//! Shared helpers for integration and acceptance tests: seeded random
//! admissible parameter sets and an independent bisection oracle.
#![allow(dead_code)]

pub mod oracle;

use mushy_stefan::{compute_threshold, ConvectiveBc, DirichletBc, Material, MaterialParams, RootConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Material constants log-uniform on [0.1, 10], eps uniform on [0.05, 0.95].
pub fn random_material(rng: &mut impl Rng) -> MaterialParams {
    let mut v = || log_uniform(rng, 0.1, 10.0);
    let (rho, k1, k2, c1, c2, l, gamma) = (v(), v(), v(), v(), v(), v(), v());
    MaterialParams { rho, k1, k2, c1, c2, l, gamma, eps: rng.gen_range(0.05..0.95) }
}

/// A random convective problem with `h0 > h0*`, by rejection.
pub fn random_convective(rng: &mut impl Rng) -> (Material, ConvectiveBc) {
    loop {
        let (mat, bc) = random_convective_any(rng);
        let rep = compute_threshold(&mat, &bc, &RootConfig::default()).unwrap();
        if rep.solvable {
            return (mat, bc);
        }
    }
}

/// A random convective problem with no solvability filter.
pub fn random_convective_any(rng: &mut impl Rng) -> (Material, ConvectiveBc) {
    let mat = random_material(rng).validate().unwrap();
    let bc = ConvectiveBc {
        theta0: log_uniform(rng, 0.1, 10.0),
        dinf: log_uniform(rng, 0.1, 10.0),
        h0: log_uniform(rng, 0.1, 10.0),
    };
    (mat, bc)
}

pub fn random_dirichlet(rng: &mut impl Rng) -> (Material, DirichletBc) {
    let mat = random_material(rng).validate().unwrap();
    let bc = DirichletBc { theta0: log_uniform(rng, 0.1, 10.0), d0: log_uniform(rng, 0.1, 10.0) };
    (mat, bc)
}

pub fn unit() -> Material {
    MaterialParams::default().validate().unwrap()
}

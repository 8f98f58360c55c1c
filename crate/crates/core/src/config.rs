//! Flat `key = value` parameter files.
//!
//! ```text
//! # unit material, convective cooling
//! rho = 1
//! k1 = 1
//! k2 = 1
//! c1 = 1
//! c2 = 1
//! l = 1
//! eps = 0.5
//! gamma = 1
//! theta0 = 1
//! Dinf = 1
//! h0 = 10
//! ```
//!
//! All material keys and `theta0` are required. The boundary is convective
//! when `Dinf` and `h0` are given and a prescribed temperature when `D0` is
//! given; `D0` may be combined with `Dinf` (used by the equivalence maps) but
//! not with `h0`.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{ConvectiveBc, DirichletBc, Material, MaterialParams};

pub const KEYS: [&str; 12] = ["rho", "k1", "k2", "c1", "c2", "l", "eps", "gamma", "theta0", "Dinf", "h0", "D0"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    Convective(ConvectiveBc),
    /// Prescribed boundary temperature, with an optional bulk temperature
    /// magnitude for the equivalence maps.
    Dirichlet { bc: DirichletBc, dinf: Option<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemConfig {
    pub material: Material,
    pub boundary: Boundary,
}

impl ProblemConfig {
    pub fn theta0(&self) -> f64 {
        match self.boundary {
            Boundary::Convective(bc) => bc.theta0,
            Boundary::Dirichlet { bc, .. } => bc.theta0,
        }
    }
}

fn config_err(line: usize, message: impl Into<String>) -> Error {
    Error::Config { line, message: message.into() }
}

impl FromStr for ProblemConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut values: BTreeMap<&'static str, f64> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body.split_once('=').ok_or_else(|| config_err(line, "expected `key = value`"))?;
            let key = key.trim();
            let key = *KEYS.iter().find(|k| **k == key).ok_or_else(|| config_err(line, format!("unknown key `{key}`")))?;
            let value = value.trim();
            let number: f64 = value.parse().map_err(|_| config_err(line, format!("`{value}` is not a number")))?;
            if values.insert(key, number).is_some() {
                return Err(config_err(line, format!("duplicate key `{key}`")));
            }
        }

        let get = |k: &str| values.get(k).copied().ok_or_else(|| config_err(0, format!("missing key `{k}`")));
        let material = MaterialParams {
            rho: get("rho")?,
            k1: get("k1")?,
            k2: get("k2")?,
            c1: get("c1")?,
            c2: get("c2")?,
            l: get("l")?,
            eps: get("eps")?,
            gamma: get("gamma")?,
        }
        .validate()?;
        let theta0 = get("theta0")?;
        let (dinf, h0, d0) = (values.get("Dinf").copied(), values.get("h0").copied(), values.get("D0").copied());

        let boundary = match (d0, h0) {
            (Some(_), Some(_)) => return Err(config_err(0, "`D0` and `h0` select different boundary conditions")),
            (Some(d0), None) => Boundary::Dirichlet { bc: DirichletBc { theta0, d0 }.validate()?, dinf },
            (None, Some(h0)) => {
                let dinf = dinf.ok_or_else(|| config_err(0, "convective boundary needs `Dinf`"))?;
                Boundary::Convective(ConvectiveBc { theta0, dinf, h0 }.validate()?)
            }
            (None, None) => return Err(config_err(0, "no boundary condition: give `Dinf` and `h0`, or `D0`")),
        };
        if let Boundary::Dirichlet { dinf: Some(v), .. } = boundary {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Range { field: "Dinf", value: v, reason: "must be finite and > 0" });
            }
        }
        Ok(Self { material, boundary })
    }
}

//! Physical data of the solidification problem.
//!
//! Units (documentation only): densities in kg/m³, conductivities in
//! W/(m·°C), specific heats in J/(kg·°C), latent heat in J/kg, temperatures
//! in °C, `h0` in kg/(°C·s^{5/2}), diffusivities in m²/s.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw thermophysical constants. Subscript 1 is the solid phase, 2 the liquid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaterialParams {
    pub rho: f64,
    pub k1: f64,
    pub k2: f64,
    pub c1: f64,
    pub c2: f64,
    /// Latent heat per unit mass.
    pub l: f64,
    /// Fraction of latent heat held by the mushy zone, in (0, 1).
    pub eps: f64,
    /// Mushy-zone width coefficient; 0 collapses the mush to a single front.
    pub gamma: f64,
}

impl Default for MaterialParams {
    fn default() -> Self {
        Self { rho: 1.0, k1: 1.0, k2: 1.0, c1: 1.0, c2: 1.0, l: 1.0, eps: 0.5, gamma: 1.0 }
    }
}

fn positive(field: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Range { field, value, reason: "must be finite and > 0" })
    }
}

fn non_negative(field: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Range { field, value, reason: "must be finite and >= 0" })
    }
}

impl MaterialParams {
    pub fn validate(self) -> Result<Material> {
        positive("rho", self.rho)?;
        positive("k1", self.k1)?;
        positive("k2", self.k2)?;
        positive("c1", self.c1)?;
        positive("c2", self.c2)?;
        positive("l", self.l)?;
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::Range { field: "eps", value: self.eps, reason: "must lie in (0, 1)" });
        }
        non_negative("gamma", self.gamma)?;
        let alpha1 = self.k1 / (self.rho * self.c1);
        let alpha2 = self.k2 / (self.rho * self.c2);
        Ok(Material { params: self, alpha1, alpha2, alpha12: alpha1 / alpha2 })
    }
}

/// Validated [`MaterialParams`] with the derived diffusivities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MaterialParams", into = "MaterialParams")]
pub struct Material {
    params: MaterialParams,
    alpha1: f64,
    alpha2: f64,
    alpha12: f64,
}

impl TryFrom<MaterialParams> for Material {
    type Error = Error;

    fn try_from(p: MaterialParams) -> Result<Self> {
        p.validate()
    }
}

impl From<Material> for MaterialParams {
    fn from(m: Material) -> Self {
        m.params
    }
}

impl std::ops::Deref for Material {
    type Target = MaterialParams;

    fn deref(&self) -> &MaterialParams {
        &self.params
    }
}

impl Material {
    pub fn params(&self) -> MaterialParams {
        self.params
    }

    /// Solid diffusivity `k1 / (rho c1)`.
    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    /// Liquid diffusivity `k2 / (rho c2)`.
    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    /// `alpha1 / alpha2`.
    pub fn alpha12(&self) -> f64 {
        self.alpha12
    }
}

/// Robin condition `k1 θ1x(0,t) = (h0/√t)(θ1(0,t) + D∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvectiveBc {
    /// Initial liquid temperature; 0 gives the one-phase problem.
    pub theta0: f64,
    /// Magnitude of the (negative) bulk temperature at the boundary.
    #[serde(rename = "Dinf")]
    pub dinf: f64,
    pub h0: f64,
}

impl ConvectiveBc {
    pub fn validate(self) -> Result<Self> {
        non_negative("theta0", self.theta0)?;
        positive("Dinf", self.dinf)?;
        positive("h0", self.h0)?;
        Ok(self)
    }
}

/// Temperature condition `θ1(0,t) = -D0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirichletBc {
    pub theta0: f64,
    #[serde(rename = "D0")]
    pub d0: f64,
}

impl DirichletBc {
    pub fn validate(self) -> Result<Self> {
        non_negative("theta0", self.theta0)?;
        positive("D0", self.d0)?;
        Ok(self)
    }
}

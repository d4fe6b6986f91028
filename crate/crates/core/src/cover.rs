//! Points and sectors on the logarithmic cover of the punctured plane.
//!
//! A point is stored as `(modulus, argument)` with an unrestricted real
//! argument, so `(1, 0)` and `(1, 2π)` project to the same complex number but
//! are distinct points of the cover.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogPoint {
    pub modulus: f64,
    pub argument: f64,
}

impl LogPoint {
    pub fn new(modulus: f64, argument: f64) -> Result<Self> {
        if !(modulus > 0.0) || !modulus.is_finite() || !argument.is_finite() {
            return Err(Error::Domain(format!(
                "cover point needs finite modulus > 0, got ({modulus}, {argument})"
            )));
        }
        Ok(Self { modulus, argument })
    }

    /// Lift a nonzero complex number onto the principal sheet `(-π, π]`.
    pub fn from_principal(z: Complex64) -> Result<Self> {
        Self::new(z.norm(), z.arg())
    }

    /// Lift a nonzero complex number onto the sheet whose argument lies
    /// closest to `reference`.
    pub fn lift_near(z: Complex64, reference: f64) -> Result<Self> {
        let base = z.arg();
        let turns = ((reference - base) / (2.0 * PI)).round();
        Self::new(z.norm(), base + 2.0 * PI * turns)
    }

    /// `exp(w)` read as a cover point: modulus `e^{Re w}`, argument `Im w`.
    pub fn from_log(w: Complex64) -> Self {
        Self { modulus: w.re.exp(), argument: w.im }
    }

    pub fn log(self) -> Complex64 {
        Complex64::new(self.modulus.ln(), self.argument)
    }

    pub fn project(self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.argument)
    }

    pub fn shift_sheet(self, half_turns: i64) -> Self {
        Self { modulus: self.modulus, argument: self.argument + half_turns as f64 * PI }
    }

    pub fn scale(self, factor: f64) -> Self {
        Self { modulus: self.modulus * factor, argument: self.argument }
    }

    pub fn mul(self, other: Self) -> Self {
        Self { modulus: self.modulus * other.modulus, argument: self.argument + other.argument }
    }

    pub fn powf(self, p: f64) -> Self {
        Self { modulus: self.modulus.powf(p), argument: self.argument * p }
    }

    pub fn sqrt(self) -> Self {
        self.powf(0.5)
    }

    /// Distance between the projections, ignoring the sheet.
    pub fn projected_distance(self, other: Self) -> f64 {
        (self.project() - other.project()).norm()
    }

    /// Reduce onto the principal sheet `(-π, π]`, returning the point there
    /// and the number of full turns removed.
    pub fn principal(self) -> (Self, i64) {
        let mut turns = (self.argument / (2.0 * PI)).round() as i64;
        let mut arg = self.argument - 2.0 * PI * turns as f64;
        if arg <= -PI {
            arg += 2.0 * PI;
            turns -= 1;
        } else if arg > PI {
            arg -= 2.0 * PI;
            turns += 1;
        }
        (Self { modulus: self.modulus, argument: arg }, turns)
    }
}

pub fn project(p: LogPoint) -> Complex64 {
    p.project()
}

pub fn shift_sheet(p: LogPoint, half_turns: i64) -> LogPoint {
    p.shift_sheet(half_turns)
}

/// Open sector `{arg_min < arg < arg_max, mod_min < |λ| < mod_max}` of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorRegion {
    pub arg_min: f64,
    pub arg_max: f64,
    pub mod_min: f64,
    pub mod_max: f64,
}

impl SectorRegion {
    pub fn new(arg_min: f64, arg_max: f64, mod_min: f64, mod_max: f64) -> Result<Self> {
        let region = Self { arg_min, arg_max, mod_min, mod_max };
        region.validate()?;
        Ok(region)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.arg_min < self.arg_max) {
            return Err(Error::Domain(format!(
                "sector needs arg_min < arg_max, got {} >= {}",
                self.arg_min, self.arg_max
            )));
        }
        if !(self.mod_min > 0.0 && self.mod_min < self.mod_max) {
            return Err(Error::Domain(format!(
                "sector needs 0 < mod_min < mod_max, got ({}, {})",
                self.mod_min, self.mod_max
            )));
        }
        Ok(())
    }

    pub fn contains(&self, p: LogPoint) -> bool {
        self.arg_min < p.argument
            && p.argument < self.arg_max
            && self.mod_min < p.modulus
            && p.modulus < self.mod_max
    }

    pub fn translate_argument(&self, by: f64) -> Self {
        Self { arg_min: self.arg_min + by, arg_max: self.arg_max + by, ..*self }
    }
}

pub fn contains(region: &SectorRegion, p: LogPoint) -> bool {
    region.contains(p)
}

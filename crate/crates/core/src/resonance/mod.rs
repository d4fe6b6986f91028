//! Resonance location and multiplicity: exact oracles for the disk and the
//! sphere, and the contour-moment solver for general curves.

mod beyn;
mod oracle;
mod track;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cover::{LogPoint, SectorRegion};
use crate::error::{Error, Result};

pub use beyn::{
    beyn_solve, beyn_solve_checked, beyn_solve_with, multiplicity_in, multiplicity_in_with, BeynOutcome, BeynSettings,
};
pub use oracle::{disk_resonances, sphere_resonances};
pub use track::{is_stable, scan_region, track_resonance, track_resonance_with, ScanSettings, TrackStep};

/// Half-width of the band around the real axis (on every sheet) that
/// contours and search regions must avoid.
pub const EXCLUDED_ZONE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Bie,
    DiskOracle,
    SphereOracle,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Bie => "bie",
            Source::DiskOracle => "disk_oracle",
            Source::SphereOracle => "sphere_oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonanceRecord {
    #[serde(flatten)]
    pub location: LogPoint,
    pub multiplicity: u32,
    pub residual: f64,
    pub source: Source,
}

/// Circle `|λ - c| = radius` in the projected plane, read on the sheet of
/// `center`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub center: LogPoint,
    pub radius: f64,
    #[serde(default = "default_nodes")]
    pub nodes: usize,
    #[serde(default = "default_rank_tol")]
    pub rank_tol: f64,
    #[serde(default = "default_probe_dim")]
    pub probe_dim: usize,
}

fn default_nodes() -> usize {
    32
}

fn default_rank_tol() -> f64 {
    1e-6
}

fn default_probe_dim() -> usize {
    8
}

impl ContourSpec {
    /// Contour with the default quadrature and probe settings.
    pub fn around(center: LogPoint, radius: f64) -> Self {
        Self {
            center,
            radius,
            nodes: default_nodes(),
            rank_tol: default_rank_tol(),
            probe_dim: default_probe_dim(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidContour(msg));
        if self.nodes < 16 || self.nodes % 2 != 0 {
            return bad(format!("nodes must be even and >= 16, got {}", self.nodes));
        }
        if !(self.rank_tol > 0.0 && self.rank_tol < 1.0) {
            return bad(format!("rank_tol must lie in (0, 1), got {}", self.rank_tol));
        }
        if self.probe_dim == 0 {
            return bad("probe_dim must be positive".into());
        }
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return bad(format!("radius must be positive, got {}", self.radius));
        }
        // the rays at center.argument ± π/2 lie at distance |c| from c
        if self.radius >= self.center.modulus {
            return bad(format!(
                "radius {} leaves the argument window of a center with modulus {}",
                self.radius, self.center.modulus
            ));
        }
        let c = self.center.project();
        if self.radius >= c.im.abs() || excluded_distance(self.center.argument) < EXCLUDED_ZONE {
            return Err(Error::ExcludedZone(format!(
                "contour of radius {} around ({}, {}) reaches the real axis",
                self.radius, self.center.modulus, self.center.argument
            )));
        }
        Ok(())
    }

    pub fn contains(&self, p: LogPoint) -> bool {
        (p.argument - self.center.argument).abs() < PI / 2.0 && p.projected_distance(self.center) < self.radius
    }

    /// Quadrature nodes on the cover, lifted onto the sheet of the center.
    pub fn node_points(&self) -> Vec<LogPoint> {
        let c = self.center.project();
        (0..self.nodes)
            .map(|k| {
                let phi = 2.0 * PI * k as f64 / self.nodes as f64;
                let z = c + num_complex::Complex64::from_polar(self.radius, phi);
                LogPoint::lift_near(z, self.center.argument).expect("contour avoids the origin")
            })
            .collect()
    }
}

/// Distance from `argument` to the nearest multiple of π.
pub fn excluded_distance(argument: f64) -> f64 {
    let r = argument / PI;
    (r - r.round()).abs() * PI
}

/// Reject regions whose argument range meets the excluded band around a
/// multiple of π.
pub(crate) fn check_region_arguments(region: &SectorRegion) -> Result<()> {
    // the open band |arg - kπ| < EXCLUDED_ZONE may touch an open region's edge
    let slack = 1e-12;
    let lo = region.arg_min - EXCLUDED_ZONE + slack;
    let hi = region.arg_max + EXCLUDED_ZONE - slack;
    let k = (lo / PI).ceil();
    if k * PI < hi {
        return Err(Error::ExcludedZone(format!(
            "argument range ({}, {}) comes within {} of {}π",
            region.arg_min, region.arg_max, EXCLUDED_ZONE, k
        )));
    }
    Ok(())
}

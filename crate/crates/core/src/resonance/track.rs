//! Following the resonances inside a fixed contour along a deformation
//! path, and covering a sector with contours.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::beyn::beyn_filtered;
use super::{beyn_solve_with, check_region_arguments, BeynSettings, ContourSpec, ResonanceRecord};
use crate::cover::{LogPoint, SectorRegion};
use crate::deform::{flow_with_steps, DeformationField, DEFAULT_RK_STEPS};
use crate::error::{Error, Result};
use crate::geometry::BoundaryCurve;
use crate::nystrom::CurveNodes;

#[derive(Debug, Clone, Serialize)]
pub struct TrackStep {
    pub t: f64,
    pub records: Vec<ResonanceRecord>,
    pub rank: usize,
}

impl TrackStep {
    pub fn total_multiplicity(&self) -> u32 {
        self.records.iter().map(|r| r.multiplicity).sum()
    }
}

pub fn track_resonance(
    curve: &BoundaryCurve,
    field: &DeformationField,
    t_values: &[f64],
    seed_contour: &ContourSpec,
) -> Result<Vec<(f64, Vec<ResonanceRecord>)>> {
    let steps = track_resonance_with(curve, field, t_values, seed_contour, &BeynSettings::default(), DEFAULT_RK_STEPS)?;
    Ok(steps.into_iter().map(|s| (s.t, s.records)).collect())
}

/// Solve on `flow(field, t)(curve)` for every `t`, always with the same
/// contour. A resonance reaching the contour aborts with the offending `t`.
pub fn track_resonance_with(
    curve: &BoundaryCurve,
    field: &DeformationField,
    t_values: &[f64],
    contour: &ContourSpec,
    settings: &BeynSettings,
    rk_steps: usize,
) -> Result<Vec<TrackStep>> {
    if t_values.first() != Some(&0.0) || t_values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Domain("t values must increase strictly from 0".into()));
    }
    contour.validate()?;
    t_values
        .par_iter()
        .map(|&t| {
            let nodes = if t == 0.0 {
                CurveNodes::new(curve)
            } else {
                let d = flow_with_steps(field, t, rk_steps)?;
                CurveNodes::new(&d.deformed_curve().with_samples(curve.n_samples())?)
            };
            match beyn_solve_with(&nodes, contour, settings) {
                Ok(out) => Ok(TrackStep { t, rank: out.rank, records: out.records }),
                Err(Error::ContourOnResonance { .. }) => Err(Error::ContourExit { t }),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// `true` when every step carries the same total multiplicity.
pub fn is_stable(steps: &[TrackStep]) -> bool {
    steps.windows(2).all(|w| w[0].total_multiplicity() == w[1].total_multiplicity())
}

/// Controls of [`scan_region`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ScanSettings {
    /// Largest cell side in `(log |λ|, arg λ)`.
    pub cell: f64,
    /// Cell side next to the argument edges of the region, doubling inward.
    pub edge_cell: f64,
    /// Contour radius over the cell's circumradius.
    pub margin: f64,
    pub nodes: usize,
    pub probe_dim: usize,
    pub rank_tol: f64,
    pub max_depth: usize,
    /// Discretization size of the covering pass; every hit is then re-solved
    /// on a small contour at the curve's own size. `None` scans at full size.
    pub coarse_samples: Option<usize>,
    pub confirm_nodes: usize,
}

impl Default for ScanSettings {
    fn default() -> Self {
        Self {
            cell: 0.5,
            edge_cell: 0.12,
            margin: 1.15,
            nodes: 32,
            probe_dim: 10,
            rank_tol: 1e-6,
            max_depth: 6,
            coarse_samples: Some(128),
            confirm_nodes: 16,
        }
    }
}

/// Cell `[l0, l1) × [a0, a1)` in `(log |λ|, arg λ)`.
#[derive(Debug, Clone, Copy)]
struct Cell {
    l0: f64,
    l1: f64,
    a0: f64,
    a1: f64,
}

impl Cell {
    fn contains(&self, p: LogPoint) -> bool {
        let l = p.modulus.ln();
        self.l0 <= l && l < self.l1 && self.a0 <= p.argument && p.argument < self.a1
    }

    /// Membership with the sides pushed out by `frac` of the cell size.
    fn contains_loose(&self, p: LogPoint, frac: f64) -> bool {
        let l = p.modulus.ln();
        let dl = frac * (self.l1 - self.l0);
        let da = frac * (self.a1 - self.a0);
        self.l0 - dl <= l && l < self.l1 + dl && self.a0 - da <= p.argument && p.argument < self.a1 + da
    }

    fn split(&self) -> [Cell; 2] {
        let dl = self.l1 - self.l0;
        let da = self.a1 - self.a0;
        if dl >= da {
            let m = self.l0 + 0.5 * dl;
            [Cell { l1: m, ..*self }, Cell { l0: m, ..*self }]
        } else {
            let m = self.a0 + 0.5 * da;
            [Cell { a1: m, ..*self }, Cell { a0: m, ..*self }]
        }
    }

    fn contour(&self, settings: &ScanSettings) -> Result<ContourSpec> {
        let center = LogPoint::new((0.5 * (self.l0 + self.l1)).exp(), 0.5 * (self.a0 + self.a1))?;
        let c = center.project();
        let mut radius = 0.0f64;
        let k = 16;
        for j in 0..=k {
            let u = j as f64 / k as f64;
            let l = self.l0 + u * (self.l1 - self.l0);
            let a = self.a0 + u * (self.a1 - self.a0);
            for p in [(l, self.a0), (l, self.a1), (self.l0, a), (self.l1, a)] {
                let z = LogPoint::new(p.0.exp(), p.1)?.project();
                radius = radius.max((z - c).norm());
            }
        }
        let contour = ContourSpec {
            center,
            radius: radius * settings.margin,
            nodes: settings.nodes,
            rank_tol: settings.rank_tol,
            probe_dim: settings.probe_dim,
        };
        contour.validate()?;
        Ok(contour)
    }
}

/// Breakpoints of `[lo, hi]`: pieces of `edge`, `2 edge`, ... grow in from
/// both ends until they reach `cell`, with equal pieces in between.
fn graded_breaks(lo: f64, hi: f64, edge: f64, cell: f64) -> Vec<f64> {
    let (mut a, mut b) = (lo, hi);
    let mut left = vec![lo];
    let mut right = vec![hi];
    let mut w = edge.min(cell);
    while w < cell && b - a > 2.0 * w + cell {
        a += w;
        b -= w;
        left.push(a);
        right.push(b);
        w *= 2.0;
    }
    let pieces = ((b - a) / cell).ceil().max(1.0) as usize;
    for k in 1..pieces {
        left.push(a + (b - a) * k as f64 / pieces as f64);
    }
    left.extend(right.into_iter().rev());
    left
}

fn covering_cells(region: &SectorRegion, settings: &ScanSettings) -> Vec<Cell> {
    let (l0, l1) = (region.mod_min.ln(), region.mod_max.ln());
    let breaks = graded_breaks(region.arg_min, region.arg_max, settings.edge_cell, settings.cell);
    let mut cells = Vec::new();
    for w in breaks.windows(2) {
        let side = w[1] - w[0];
        let nl = ((l1 - l0) / side).ceil().max(1.0) as usize;
        for i in 0..nl {
            cells.push(Cell {
                l0: l0 + (l1 - l0) * i as f64 / nl as f64,
                l1: l0 + (l1 - l0) * (i + 1) as f64 / nl as f64,
                a0: w[0],
                a1: w[1],
            });
        }
    }
    cells
}

/// Every resonance of `curve` inside `region`. The region is covered by
/// cells whose circumscribed contours are solved independently; a cell is
/// split when its contour is inadmissible, meets a resonance, or saturates
/// the probe block. With a coarse pass, each hit is re-solved at full size
/// on an isolating contour and hits that do not persist are dropped.
pub fn scan_region(
    curve: &BoundaryCurve,
    region: &SectorRegion,
    beyn: &BeynSettings,
    settings: &ScanSettings,
) -> Result<Vec<ResonanceRecord>> {
    region.validate()?;
    check_region_arguments(region)?;
    let fine = CurveNodes::new(curve);
    let coarse = match settings.coarse_samples {
        Some(n) if n < curve.n_samples() => Some(CurveNodes::new(&curve.with_samples(n)?)),
        _ => None,
    };
    let cover_nodes = coarse.as_ref().unwrap_or(&fine);
    // Raw contour eigenvalues suffice to seed the confirming solves.
    let cover_beyn = if coarse.is_some() {
        BeynSettings { polish: false, accept_residual: COARSE_ACCEPT, ..*beyn }
    } else {
        *beyn
    };
    let cells = covering_cells(region, settings);
    let found: Vec<Vec<ResonanceRecord>> =
        cells.par_iter().map(|c| scan_cell(cover_nodes, *c, &cover_beyn, settings, 0)).collect::<Result<_>>()?;
    let mut hits: Vec<ResonanceRecord> = found.into_iter().flatten().collect();
    sort_records(&mut hits);
    if coarse.is_some() {
        hits = confirm(&fine, &hits, beyn, settings)?;
    }
    hits.retain(|r| region.contains(r.location));
    Ok(hits)
}

/// Backward error accepted for unpolished eigenvalues of the covering pass.
const COARSE_ACCEPT: f64 = 1e-6;

fn sort_records(records: &mut [ResonanceRecord]) {
    records.sort_by(|a, b| a.location.modulus.total_cmp(&b.location.modulus).then(a.location.argument.total_cmp(&b.location.argument)));
}

/// Hits within this fraction of `|λ|` of each other share a confirming contour.
const GROUP_RADIUS: f64 = 0.03;
/// A confirmed resonance must lie within this fraction of `|λ|` of a covering hit.
const PERSIST_TOL: f64 = 1e-5;

fn group_hits(hits: &[ResonanceRecord]) -> Vec<Vec<ResonanceRecord>> {
    let mut groups: Vec<Vec<ResonanceRecord>> = Vec::new();
    for h in hits {
        let near: Vec<usize> = (0..groups.len())
            .filter(|&g| {
                groups[g].iter().any(|o| o.location.projected_distance(h.location) <= GROUP_RADIUS * h.location.modulus)
            })
            .collect();
        let mut merged = vec![*h];
        for &g in near.iter().rev() {
            merged.extend(groups.swap_remove(g));
        }
        groups.push(merged);
    }
    groups
}

/// Re-solve each group of covering hits at full size. Resonances that did
/// not stay put under the change of discretization are discarded.
fn confirm(
    fine: &CurveNodes,
    hits: &[ResonanceRecord],
    beyn: &BeynSettings,
    settings: &ScanSettings,
) -> Result<Vec<ResonanceRecord>> {
    let groups = group_hits(hits);
    let centers: Vec<LogPoint> = groups
        .iter()
        .map(|g| {
            let z = g.iter().map(|r| r.location.project()).sum::<Complex64>() / g.len() as f64;
            LogPoint::lift_near(z, g[0].location.argument)
        })
        .collect::<Result<_>>()?;
    let confirmed: Vec<Vec<ResonanceRecord>> = groups
        .par_iter()
        .zip(centers.par_iter())
        .enumerate()
        .map(|(i, (group, &center))| {
            let c = center.project();
            let spread = group.iter().map(|r| r.location.projected_distance(center)).fold(0.0, f64::max);
            let nearest = groups
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .flat_map(|(_, g)| g.iter())
                .map(|o| o.location.projected_distance(center))
                .fold(f64::INFINITY, f64::min);
            let mut radius = (3.0 * spread).max(0.02 * c.norm()).min(0.5 * nearest).min(0.8 * c.im.abs());
            let multiplicity: u32 = group.iter().map(|r| r.multiplicity).sum();
            for _ in 0..4 {
                let contour = ContourSpec {
                    center,
                    radius,
                    nodes: settings.confirm_nodes,
                    rank_tol: settings.rank_tol,
                    probe_dim: (multiplicity as usize + 3).max(4),
                };
                match beyn_solve_with(fine, &contour, beyn) {
                    Ok(out) => {
                        return Ok(out
                            .records
                            .into_iter()
                            .filter(|r| {
                                group.iter().any(|h| {
                                    h.location.projected_distance(r.location) <= PERSIST_TOL * r.location.modulus
                                })
                            })
                            .collect())
                    }
                    Err(Error::ContourOnResonance { .. } | Error::Unconverged(_) | Error::ProbeTooSmall { .. })
                        if radius > 1.2 * spread =>
                    {
                        radius = (0.6 * radius).max(1.2 * spread)
                    }
                    Err(e) => return Err(e),
                }
            }
            Err(Error::Unconverged(format!(
                "could not isolate the hits near ({:.6}, {:.6})",
                center.modulus, center.argument
            )))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<ResonanceRecord> = confirmed.into_iter().flatten().collect();
    sort_records(&mut out);
    Ok(out)
}

fn scan_cell(
    nodes: &CurveNodes,
    cell: Cell,
    beyn: &BeynSettings,
    settings: &ScanSettings,
    depth: usize,
) -> Result<Vec<ResonanceRecord>> {
    let attempt = cell.contour(settings).and_then(|c| beyn_filtered(nodes, &c, beyn, &|p| cell.contains_loose(p, 0.1)));
    match attempt {
        Ok(out) => Ok(out.records.into_iter().filter(|r| cell.contains(r.location)).collect()),
        Err(
            e @ (Error::InvalidContour(_)
            | Error::ExcludedZone(_)
            | Error::ContourOnResonance { .. }
            | Error::ProbeTooSmall { .. }
            | Error::Unconverged(_)),
        ) => {
            if depth >= settings.max_depth {
                return Err(e);
            }
            let mut out = Vec::new();
            for half in cell.split() {
                out.extend(scan_cell(nodes, half, beyn, settings, depth + 1)?);
            }
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

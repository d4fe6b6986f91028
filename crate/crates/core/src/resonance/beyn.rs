//! Contour-moment solver. With a random probe block `V`, the moments
//! `A_p = (1/2πi) ∮ (ζ - c)^p S_ζ⁻¹ V dζ` carry the residue of `S⁻¹` at
//! every resonance inside the circle; the rank of `A_0` is the total
//! multiplicity and the reduced pencil gives the locations.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ContourSpec, ResonanceRecord, Source};
use crate::cover::LogPoint;
use crate::error::{Error, Result};
use crate::geometry::BoundaryCurve;
use crate::nystrom::CurveNodes;

/// Solver knobs that are not part of the contour itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BeynSettings {
    /// Seed of the complex Gaussian probe block.
    pub seed: u64,
    /// Refine each eigenvalue by nonlinear inverse iteration.
    pub polish: bool,
    pub polish_iters: usize,
    /// Largest accepted relative backward error of a reported resonance.
    pub accept_residual: f64,
    /// Smallest admissible estimate of `σ_min(S) / rms σ(S)` on the contour.
    pub sigma_floor: f64,
}

impl Default for BeynSettings {
    fn default() -> Self {
        Self { seed: 0x5eed, polish: true, polish_iters: 10, accept_residual: 1e-8, sigma_floor: 1e-9 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BeynOutcome {
    pub records: Vec<ResonanceRecord>,
    /// Numerical rank of the zeroth moment.
    pub rank: usize,
    /// Singular values of the zeroth moment relative to the rank scale.
    pub relative_singular_values: Vec<f64>,
    /// Smallest `σ_min` estimate met on the contour, relative to `rms σ(S)`.
    pub contour_sigma: f64,
    #[serde(skip)]
    node_logdets: Vec<Complex64>,
}

impl BeynOutcome {
    pub fn total_multiplicity(&self) -> u32 {
        self.records.iter().map(|r| r.multiplicity).sum()
    }
}

struct NodeSolve {
    x: DMatrix<Complex64>,
    logdet: Complex64,
    sigma: f64,
}

fn probe_block(n: usize, p: usize, seed: u64) -> DMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut entries = Vec::with_capacity(n * p);
    for _ in 0..n * p {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        entries.push(Complex64::new(re * scale, im * scale));
    }
    DMatrix::from_vec(n, p, entries)
}

fn log_determinant(lu: &nalgebra::LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>) -> Complex64 {
    let u = lu.u();
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..u.nrows() {
        sum += u[(i, i)].ln();
    }
    if lu.p().determinant::<f64>() < 0.0 {
        sum += Complex64::new(0.0, PI);
    }
    sum
}

fn rms_singular_value(s: &DMatrix<Complex64>) -> f64 {
    s.norm() / (s.nrows() as f64).sqrt()
}

fn solve_at(nodes: &CurveNodes, lambda: LogPoint, probes: &DMatrix<Complex64>) -> Result<NodeSolve> {
    let (s, _) = nodes.assemble(lambda, false);
    let rms = rms_singular_value(&s);
    let lu = s.lu();
    let x = lu.solve(probes).ok_or(Error::ContourOnResonance { sigma_min: 0.0, node: 0 })?;
    // each probe column bounds σ_min from above by |v| / |S⁻¹v|
    let sigma = (0..probes.ncols())
        .map(|j| probes.column(j).norm() / x.column(j).norm())
        .fold(f64::INFINITY, f64::min)
        / rms;
    Ok(NodeSolve { x, logdet: log_determinant(&lu), sigma })
}

pub fn beyn_solve(curve: &BoundaryCurve, contour: &ContourSpec) -> Result<Vec<ResonanceRecord>> {
    Ok(beyn_solve_with(&CurveNodes::new(curve), contour, &BeynSettings::default())?.records)
}

pub fn beyn_solve_with(nodes: &CurveNodes, contour: &ContourSpec, settings: &BeynSettings) -> Result<BeynOutcome> {
    beyn_filtered(nodes, contour, settings, &|_| true)
}

/// As [`beyn_solve_with`], refining and reporting only the eigenvalues whose
/// unrefined location passes `keep`.
pub(crate) fn beyn_filtered(
    nodes: &CurveNodes,
    contour: &ContourSpec,
    settings: &BeynSettings,
    keep: &dyn Fn(LogPoint) -> bool,
) -> Result<BeynOutcome> {
    contour.validate()?;
    let n = nodes.len();
    let p = contour.probe_dim;
    if p > n {
        return Err(Error::InvalidContour(format!("probe_dim {p} exceeds the discretization size {n}")));
    }
    let probes = probe_block(n, p, settings.seed);
    let points = contour.node_points();
    let solves: Vec<NodeSolve> = points
        .par_iter()
        .map(|&lambda| solve_at(nodes, lambda, &probes))
        .collect::<Result<_>>()?;
    let (worst_node, contour_sigma) = solves
        .iter()
        .enumerate()
        .map(|(k, s)| (k, s.sigma))
        .fold((0, f64::INFINITY), |acc, v| if v.1 < acc.1 { v } else { acc });
    if contour_sigma < settings.sigma_floor {
        return Err(Error::ContourOnResonance { sigma_min: contour_sigma, node: worst_node });
    }

    let k_nodes = contour.nodes as f64;
    let mut a0 = DMatrix::<Complex64>::zeros(n, p);
    let mut a1 = DMatrix::<Complex64>::zeros(n, p);
    let mut x_scale = 0.0f64;
    for (k, solve) in solves.iter().enumerate() {
        let offset = Complex64::from_polar(contour.radius, 2.0 * PI * k as f64 / k_nodes);
        let w = offset / k_nodes;
        a0 += &solve.x * w;
        a1 += &solve.x * (w * offset);
        x_scale = x_scale.max(solve.x.norm());
    }
    let node_logdets = solves.iter().map(|s| s.logdet).collect();

    let svd = a0.svd(true, true);
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let threshold = contour.rank_tol * contour.radius * x_scale;
    let rank_scale = contour.radius * x_scale;
    let relative_singular_values: Vec<f64> = order.iter().map(|&i| svd.singular_values[i] / rank_scale).collect();
    let rank = order.iter().filter(|&&i| svd.singular_values[i] > threshold).count();
    if rank == p {
        return Err(Error::ProbeTooSmall { rank, probe_dim: p });
    }
    let mut outcome = BeynOutcome { records: Vec::new(), rank, relative_singular_values, contour_sigma, node_logdets };
    if rank == 0 {
        return Ok(outcome);
    }

    let u_full = svd.u.as_ref().expect("left vectors requested");
    let vt_full = svd.v_t.as_ref().expect("right vectors requested");
    let u0 = DMatrix::from_fn(n, rank, |i, j| u_full[(i, order[j])]);
    let w0 = DMatrix::from_fn(p, rank, |i, j| vt_full[(order[j], i)].conj());
    let inv_sigma = DMatrix::from_fn(rank, rank, |i, j| {
        if i == j {
            Complex64::new(1.0 / svd.singular_values[order[i]], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let b = u0.adjoint() * &a1 * &w0 * inv_sigma;
    let shifts = b
        .clone()
        .schur()
        .eigenvalues()
        .ok_or_else(|| Error::Unconverged("reduced pencil eigenvalues".into()))?;

    let c = contour.center.project();
    let mut candidates: Vec<Candidate> = Vec::new();
    for &mu in shifts.iter() {
        let raw = c + mu;
        let Ok(raw_point) = LogPoint::lift_near(raw, contour.center.argument) else { continue };
        if !keep(raw_point) {
            continue;
        }
        let start = reduced_eigenvector(&b, mu, &u0);
        let candidate = if settings.polish {
            polish(nodes, raw_point, start, contour, settings)
        } else {
            let residual = backward_error(nodes, raw_point, &start);
            Candidate { location: raw_point, scale: 1e-8 * raw_point.modulus, residual }
        };
        if contour.contains(candidate.location) {
            candidates.push(candidate);
        }
    }
    for cand in &candidates {
        if !(cand.residual <= settings.accept_residual) {
            return Err(Error::Unconverged(format!(
                "eigenvalue ({:.6}, {:.6}) has backward error {:.2e}",
                cand.location.modulus, cand.location.argument, cand.residual
            )));
        }
    }
    outcome.records = cluster(candidates);
    Ok(outcome)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    location: LogPoint,
    /// Uncertainty of the location; clusters use ten times this radius.
    scale: f64,
    residual: f64,
}

/// Group candidates lying within ten residual scales of each other.
fn cluster(mut candidates: Vec<Candidate>) -> Vec<ResonanceRecord> {
    candidates.sort_by(|a, b| {
        a.location.modulus.total_cmp(&b.location.modulus).then(a.location.argument.total_cmp(&b.location.argument))
    });
    let mut groups: Vec<Vec<Candidate>> = Vec::new();
    for cand in candidates {
        let home = groups.iter_mut().find(|g| {
            g.iter().any(|m| m.location.projected_distance(cand.location) <= 10.0 * m.scale.max(cand.scale))
        });
        match home {
            Some(g) => g.push(cand),
            None => groups.push(vec![cand]),
        }
    }
    let mut records: Vec<ResonanceRecord> = groups
        .into_iter()
        .map(|g| {
            let k = g.len() as f64;
            let z: Complex64 = g.iter().map(|m| m.location.project()).sum::<Complex64>() / k;
            let location = LogPoint::lift_near(z, g[0].location.argument).expect("nonzero cluster mean");
            ResonanceRecord {
                location,
                multiplicity: g.len() as u32,
                residual: g.iter().map(|m| m.residual).fold(0.0, f64::max),
                source: Source::Bie,
            }
        })
        .collect();
    records.sort_by(|a, b| a.location.modulus.total_cmp(&b.location.modulus));
    records
}

/// `U₀ s` with `s` from one step of shifted inverse iteration on `B`.
fn reduced_eigenvector(b: &DMatrix<Complex64>, mu: Complex64, u0: &DMatrix<Complex64>) -> DVector<Complex64> {
    let r = b.nrows();
    let shift = mu + Complex64::new(1e-10, 1e-10) * (1.0 + mu.norm());
    let shifted = b - DMatrix::from_diagonal_element(r, r, shift);
    let rhs = DVector::from_element(r, Complex64::new(1.0, 0.0));
    let mut s = shifted.lu().solve(&rhs).unwrap_or(rhs);
    for _ in 0..2 {
        s /= Complex64::new(s.norm(), 0.0);
        let shifted = b - DMatrix::from_diagonal_element(r, r, shift);
        if let Some(next) = shifted.lu().solve(&s) {
            s = next;
        }
    }
    let x = u0 * s;
    let norm = x.norm();
    x / Complex64::new(norm, 0.0)
}

fn backward_error(nodes: &CurveNodes, lambda: LogPoint, x: &DVector<Complex64>) -> f64 {
    let (s, _) = nodes.assemble(lambda, false);
    (&s * x).norm() / (s.norm() * x.norm())
}

/// Nonlinear inverse iteration `u = S(λ)⁻¹ S'(λ) x`, `λ ← λ - 1/(vᴴu)` with
/// the normalization `vᴴx = 1`.
fn polish(
    nodes: &CurveNodes,
    raw: LogPoint,
    start: DVector<Complex64>,
    contour: &ContourSpec,
    settings: &BeynSettings,
) -> Candidate {
    let v = start.clone();
    let mut x = start;
    let mut lambda = raw;
    let mut residual = f64::INFINITY;
    let mut last_step = f64::INFINITY;
    for _ in 0..settings.polish_iters {
        let (s, ds) = nodes.assemble(lambda, true);
        let ds = ds.expect("derivative requested");
        residual = (&s * &x).norm() / (s.norm() * x.norm());
        let Some(u) = s.lu().solve(&(ds * &x)) else { break };
        let denom = v.dotc(&u);
        if denom.norm() == 0.0 || !denom.re.is_finite() {
            break;
        }
        let step = 1.0 / denom;
        let z = lambda.project() - step;
        let Ok(next) = LogPoint::lift_near(z, lambda.argument) else { break };
        if next.projected_distance(raw) > contour.radius {
            break;
        }
        x = u / denom;
        lambda = next;
        last_step = step.norm();
        if last_step <= 1e-14 * lambda.modulus {
            break;
        }
    }
    if !last_step.is_finite() {
        let residual = backward_error(nodes, raw, &v);
        return Candidate { location: raw, scale: 1e-8 * raw.modulus, residual };
    }
    if last_step > 1e-10 * lambda.modulus {
        residual = backward_error(nodes, lambda, &x);
    }
    let scale = (lambda.projected_distance(raw)).max(last_step).max(1e-12 * lambda.modulus);
    Candidate { location: lambda, scale, residual }
}

pub fn multiplicity_in(curve: &BoundaryCurve, contour: &ContourSpec) -> Result<usize> {
    multiplicity_in_with(&CurveNodes::new(curve), contour, &BeynSettings::default())
}

/// Rank of the zeroth moment, checked against the winding number of
/// `det S_λ` along the contour.
pub fn multiplicity_in_with(nodes: &CurveNodes, contour: &ContourSpec, settings: &BeynSettings) -> Result<usize> {
    Ok(beyn_solve_checked(nodes, contour, settings)?.rank)
}

/// [`beyn_solve_with`] whose rank has passed the winding-number check.
pub fn beyn_solve_checked(nodes: &CurveNodes, contour: &ContourSpec, settings: &BeynSettings) -> Result<BeynOutcome> {
    let outcome = beyn_solve_with(nodes, contour, settings)?;
    let winding = determinant_winding(nodes, contour, &outcome.node_logdets)?;
    if winding != outcome.rank as i64 {
        return Err(Error::RankWindingMismatch { rank: outcome.rank, winding });
    }
    Ok(outcome)
}

fn logdet_at(nodes: &CurveNodes, contour: &ContourSpec, phi: f64) -> Complex64 {
    let z = contour.center.project() + Complex64::from_polar(contour.radius, phi);
    let lambda = LogPoint::lift_near(z, contour.center.argument).expect("contour avoids the origin");
    log_determinant(&nodes.assemble(lambda, false).0.lu())
}

fn wrapped(d: f64) -> f64 {
    let two_pi = 2.0 * PI;
    d - two_pi * (d / two_pi).round()
}

fn phase_increment(
    nodes: &CurveNodes,
    contour: &ContourSpec,
    (phi0, l0): (f64, Complex64),
    (phi1, l1): (f64, Complex64),
    depth: usize,
) -> Result<f64> {
    let d = wrapped(l1.im - l0.im);
    if d.abs() <= PI / 4.0 {
        return Ok(d);
    }
    if depth >= 10 {
        return Err(Error::Unconverged("determinant phase varies too fast along the contour".into()));
    }
    let mid = 0.5 * (phi0 + phi1);
    let lm = logdet_at(nodes, contour, mid);
    Ok(phase_increment(nodes, contour, (phi0, l0), (mid, lm), depth + 1)?
        + phase_increment(nodes, contour, (mid, lm), (phi1, l1), depth + 1)?)
}

fn determinant_winding(nodes: &CurveNodes, contour: &ContourSpec, logdets: &[Complex64]) -> Result<i64> {
    let k = logdets.len();
    let mut total = 0.0;
    for j in 0..k {
        let phi0 = 2.0 * PI * j as f64 / k as f64;
        let phi1 = 2.0 * PI * (j + 1) as f64 / k as f64;
        total += phase_increment(nodes, contour, (phi0, logdets[j]), (phi1, logdets[(j + 1) % k]), 0)?;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

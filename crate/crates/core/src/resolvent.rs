//! Kernel of the free outgoing resolvent `(-Δ - λ²)⁻¹` in two and three
//! dimensions, continued onto the cover.
//!
//! Normalizations are the ones for which the kernel is the fundamental
//! solution, `(-Δ - λ²) R₀ = δ`:
//!
//! * `n = 2`: `R₀ = (i/4) H¹₀(λ|x-y|)`, with `λ|x-y|` kept on the sheet of `λ`;
//!   near the diagonal `R₀ ≈ -(1/2π) ln|x-y|`.
//! * `n = 3`: `R₀ = e^{iλ|x-y|} / (4π|x-y|)`, entire in `λ`.
//!
//! Across sheets in two dimensions
//! `R₀(e^{iℓπ}λ) - R₀(λ) = -(iℓ/2) J₀(λ|x-y|)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::cover::{LogPoint, SectorRegion};
use crate::error::{Error, Result};
use crate::special::{bessel_j_cover, hankel1, BesselOrder};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// One kernel evaluation with its inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelEval {
    pub dim: u32,
    pub lambda: LogPoint,
    pub value: Complex64,
    pub dist: f64,
}

fn check_dim(dim: u32) -> Result<()> {
    if dim == 2 || dim == 3 {
        Ok(())
    } else {
        Err(Error::Domain(format!("free resolvent only implemented for n = 2, 3; got {dim}")))
    }
}

pub fn kernel(dim: u32, lambda: LogPoint, dist: f64) -> Result<Complex64> {
    check_dim(dim)?;
    if !(dist > 0.0) || !dist.is_finite() {
        return Err(Error::Domain(format!("kernel distance must be positive, got {dist}")));
    }
    Ok(match dim {
        2 => 0.25 * I * hankel1(BesselOrder::integer(0), lambda.scale(dist)),
        _ => (I * lambda.project() * dist).exp() / (4.0 * PI * dist),
    })
}

pub fn kernel_eval(dim: u32, lambda: LogPoint, dist: f64) -> Result<KernelEval> {
    Ok(KernelEval { dim, lambda, value: kernel(dim, lambda, dist)?, dist })
}

/// `R₀(e^{iℓπ}λ) - R₀(λ)` at fixed distance.
pub fn branch_jump(dim: u32, lambda: LogPoint, half_turns: i64, dist: f64) -> Result<Complex64> {
    check_dim(dim)?;
    if dim == 3 {
        if half_turns % 2 == 0 {
            kernel(3, lambda, dist)?;
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain(
            "odd half-turns in n = 3 map λ to -λ; use the closed form instead".into(),
        ));
    }
    Ok(kernel(2, lambda.shift_sheet(half_turns), dist)? - kernel(2, lambda, dist)?)
}

/// The closed form `-(iℓ/2) J₀(λ d)` of the two-dimensional jump.
pub fn branch_jump_closed_form(lambda: LogPoint, half_turns: i64, dist: f64) -> Complex64 {
    -0.5 * I * half_turns as f64 * bessel_j_cover(BesselOrder::integer(0), lambda.scale(dist))
}

/// Empirical constants in the near/far kernel bounds over a sampled region.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub dim: u32,
    pub samples: usize,
    /// Fitted `C` in `|R₀| <= C d^{2-n}` (`C max(1, -ln d)` for `n = 2`) on `d <= 1/|λ|`.
    pub near_constant: f64,
    /// Fitted `C` in `|R₀| <= C e^{-Im(λ) d} |λ|^{(n-3)/2} d^{(1-n)/2}` on `d >= 1/|λ|`.
    pub far_constant: f64,
    pub worst_ratio: f64,
    /// Largest mismatch factor between the two fitted bounds at `d = 1/|λ|`.
    pub boundary_ratio: f64,
}

fn near_bound(dim: u32, d: f64) -> f64 {
    if dim == 2 {
        (-d.ln()).max(1.0)
    } else {
        1.0 / d
    }
}

fn far_bound(dim: u32, lambda: LogPoint, d: f64) -> f64 {
    let n = dim as f64;
    let im = lambda.project().im;
    (-im * d).exp() * lambda.modulus.powf((n - 3.0) / 2.0) * d.powf((1.0 - n) / 2.0)
}

/// Fit the bound constants on a `samples × samples` grid of `λ` in `region`,
/// with `4 * samples` distances per branch. Distances span
/// `[10⁻³/|λ|, 1/|λ|]` and `[1/|λ|, max(4, 2/|λ|)]`.
pub fn bound_check(dim: u32, region: &SectorRegion, samples: usize) -> Result<BoundReport> {
    check_dim(dim)?;
    region.validate()?;
    let samples = samples.max(1);
    let grid = |lo: f64, hi: f64, i: usize, n: usize| {
        if n == 1 {
            0.5 * (lo + hi)
        } else {
            lo + (hi - lo) * (i as f64 + 0.5) / n as f64
        }
    };
    let nd = 4 * samples;
    let mut near_c = 0.0f64;
    let mut far_c = 0.0f64;
    let mut lambdas = Vec::with_capacity(samples * samples);
    for a in 0..samples {
        for m in 0..samples {
            let arg = grid(region.arg_min, region.arg_max, a, samples);
            let lm = grid(region.mod_min.ln(), region.mod_max.ln(), m, samples).exp();
            let lambda = LogPoint::new(lm, arg)?;
            let edge = 1.0 / lm;
            for k in 0..=nd {
                let d = edge * 1e-3f64.powf(1.0 - k as f64 / nd as f64);
                near_c = near_c.max(kernel(dim, lambda, d)?.norm() / near_bound(dim, d));
            }
            let far_end = (2.0 * edge).max(4.0);
            for k in 0..=nd {
                let d = edge * (far_end / edge).powf(k as f64 / nd as f64);
                far_c = far_c.max(kernel(dim, lambda, d)?.norm() / far_bound(dim, lambda, d));
            }
            lambdas.push(lambda);
        }
    }
    let boundary_ratio = lambdas
        .iter()
        .map(|&lambda| {
            let d = 1.0 / lambda.modulus;
            let a = near_c * near_bound(dim, d);
            let b = far_c * far_bound(dim, lambda, d);
            (a / b).max(b / a)
        })
        .fold(1.0, f64::max);
    Ok(BoundReport {
        dim,
        samples,
        near_constant: near_c,
        far_constant: far_c,
        worst_ratio: near_c.max(far_c),
        boundary_ratio,
    })
}

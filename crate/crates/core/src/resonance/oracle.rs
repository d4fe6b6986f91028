//! Separation-of-variables oracles: zeros of `H¹_m` for the unit disk and of
//! the spherical Hankel polynomials for the unit ball.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_region_arguments, ResonanceRecord, Source};
use crate::cover::{LogPoint, SectorRegion};
use crate::error::{Error, Result};
use crate::special::{hankel1, hankel1_deriv, integer_jy, BesselOrder};

const MAX_DEPTH: usize = 40;
const NEWTON_ITERS: usize = 60;

/// All zeros of `H¹_m`, `0 <= m <= m_max`, inside `region`, sorted by order
/// then modulus. Counting is by the argument principle in `w = log λ`.
pub fn disk_resonances(m_max: u32, region: &SectorRegion) -> Result<Vec<ResonanceRecord>> {
    region.validate()?;
    if region.arg_min < -2.0 * std::f64::consts::PI || region.arg_max > 0.0 {
        return Err(Error::Domain(format!(
            "disk oracle covers arg in (-2π, 0), got ({}, {})",
            region.arg_min, region.arg_max
        )));
    }
    check_region_arguments(region)?;
    let mut out = Vec::new();
    for m in 0..=m_max {
        let order = BesselOrder::integer(m);
        let f = |w: Complex64| hankel1(order, LogPoint::from_log(w));
        let cell = Cell {
            lo: Complex64::new(region.mod_min.ln(), region.arg_min),
            hi: Complex64::new(region.mod_max.ln(), region.arg_max),
        };
        let mut zeros = Vec::new();
        isolate(&f, cell, 0, &mut |c| {
            let p = newton_hankel(order, LogPoint::from_log(c.mid()))?;
            c.contains(p.log(), 1e-9).then_some(p)
        }, &mut zeros)?;
        zeros.sort_by(|a, b| a.modulus.total_cmp(&b.modulus));
        for p in zeros {
            if !region.contains(p) {
                continue;
            }
            let (j, y) = integer_jy(m, p);
            let residual = hankel1(order, p).norm() / (j.value.norm() + y.value.norm());
            out.push(ResonanceRecord {
                location: p,
                multiplicity: if m == 0 { 1 } else { 2 },
                residual,
                source: Source::DiskOracle,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    lo: Complex64,
    hi: Complex64,
}

impl Cell {
    fn mid(&self) -> Complex64 {
        (self.lo + self.hi) * 0.5
    }

    fn contains(&self, w: Complex64, slack: f64) -> bool {
        w.re >= self.lo.re - slack && w.re <= self.hi.re + slack && w.im >= self.lo.im - slack && w.im <= self.hi.im + slack
    }

    fn diameter(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    /// Split across the longer side slightly off-center, at `frac`.
    fn split(&self, frac: f64) -> (Cell, Cell) {
        let d = self.hi - self.lo;
        if d.re >= d.im {
            let x = self.lo.re + frac * d.re;
            (Cell { hi: Complex64::new(x, self.hi.im), ..*self }, Cell { lo: Complex64::new(x, self.lo.im), ..*self })
        } else {
            let y = self.lo.im + frac * d.im;
            (Cell { hi: Complex64::new(self.hi.re, y), ..*self }, Cell { lo: Complex64::new(self.lo.re, y), ..*self })
        }
    }

    fn corners(&self) -> [Complex64; 4] {
        [self.lo, Complex64::new(self.hi.re, self.lo.im), self.hi, Complex64::new(self.lo.re, self.hi.im)]
    }
}

/// Winding number of `f` around the boundary of `cell`, or `None` when `f`
/// nearly vanishes on the boundary.
fn winding<F: Fn(Complex64) -> Complex64>(f: &F, cell: &Cell) -> Option<i64> {
    let corners = cell.corners();
    let mut total = 0.0;
    for k in 0..4 {
        let a = corners[k];
        let b = corners[(k + 1) % 4];
        let pieces = 16;
        let mut prev = f(a);
        for s in 1..=pieces {
            let z1 = a + (b - a) * (s as f64 / pieces as f64);
            let z0 = a + (b - a) * ((s - 1) as f64 / pieces as f64);
            let next = f(z1);
            total += phase_change(f, z0, z1, prev, next, 0)?;
            prev = next;
        }
    }
    Some((total / (2.0 * std::f64::consts::PI)).round() as i64)
}

fn phase_change<F: Fn(Complex64) -> Complex64>(
    f: &F,
    z0: Complex64,
    z1: Complex64,
    f0: Complex64,
    f1: Complex64,
    depth: usize,
) -> Option<f64> {
    if !(f0.norm() > 1e-300 && f1.norm() > 1e-300) {
        return None;
    }
    let d = (f1 / f0).arg();
    if d.abs() < 0.5 {
        return Some(d);
    }
    if depth > 30 {
        return None;
    }
    let zm = (z0 + z1) * 0.5;
    let fm = f(zm);
    Some(phase_change(f, z0, zm, f0, fm, depth + 1)? + phase_change(f, zm, z1, fm, f1, depth + 1)?)
}

fn isolate<F, R>(f: &F, cell: Cell, depth: usize, refine: &mut R, out: &mut Vec<LogPoint>) -> Result<()>
where
    F: Fn(Complex64) -> Complex64,
    R: FnMut(&Cell) -> Option<LogPoint>,
{
    let count = match winding(f, &cell) {
        Some(n) => n,
        None => {
            // a zero sits on the boundary: nudge the enclosing split instead
            return Err(Error::Unconverged("zero on a cell boundary".into()));
        }
    };
    if count <= 0 {
        return Ok(());
    }
    if count == 1 || depth >= MAX_DEPTH || cell.diameter() < 1e-10 {
        if let Some(p) = refine(&cell) {
            if count == 1 || depth >= MAX_DEPTH {
                out.push(p);
                return Ok(());
            }
        }
        if depth >= MAX_DEPTH {
            return Err(Error::Unconverged("argument-principle subdivision exhausted".into()));
        }
    }
    for frac in [0.5 + 1.0 / 97.0, 0.5 - 1.0 / 61.0, 0.5 + 1.0 / 13.0] {
        let (a, b) = cell.split(frac);
        let mut found = Vec::new();
        let attempt = isolate(f, a, depth + 1, refine, &mut found).and_then(|_| isolate(f, b, depth + 1, refine, &mut found));
        match attempt {
            Ok(()) => {
                out.extend(found);
                return Ok(());
            }
            Err(Error::Unconverged(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Unconverged("could not place a cell boundary away from zeros".into()))
}

fn newton_hankel(order: BesselOrder, start: LogPoint) -> Option<LogPoint> {
    let mut p = start;
    for _ in 0..NEWTON_ITERS {
        let h = hankel1(order, p);
        let dh = hankel1_deriv(order, p);
        let step = h / dh;
        let z = p.project() - step;
        if !(z.norm() > 0.0) || !step.re.is_finite() || !step.im.is_finite() {
            return None;
        }
        p = LogPoint::lift_near(z, p.argument).ok()?;
        if step.norm() <= 4.0 * f64::EPSILON * p.modulus {
            return Some(p);
        }
    }
    // accept a stalled iteration sitting at rounding level
    let z = p.project();
    let step = (hankel1(order, p) / hankel1_deriv(order, p)).norm();
    (step <= 1e-12 * z.norm()).then_some(p)
}

/// `(l+k)! / (k! (l-k)!)`.
fn sphere_coefficient(l: u32, k: u32) -> f64 {
    let rising: f64 = (l - k + 1..=l + k).map(|j| j as f64).product();
    let k_fact: f64 = (1..=k).map(|j| j as f64).product();
    rising / k_fact
}

/// Monic coefficients `[1, c_1, ..., c_l]` of `p_l(z) = Σ_k a_k (i/2)^k z^{l-k}`,
/// whose zeros are those of `h¹_l`.
fn sphere_polynomial(l: u32) -> Vec<Complex64> {
    let half_i = Complex64::new(0.0, 0.5);
    (0..=l).map(|k| half_i.powu(k) * sphere_coefficient(l, k)).collect()
}

fn eval_poly(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * z.norm() + c.norm();
    }
    (p, dp, scale)
}

/// Zeros of `h¹_l`, `0 <= l <= l_max`, inside `region` read on the principal sheet.
pub fn sphere_resonances(l_max: u32, region: &SectorRegion) -> Result<Vec<ResonanceRecord>> {
    region.validate()?;
    let mut out = Vec::new();
    for l in 1..=l_max {
        let coeffs = sphere_polynomial(l);
        let n = l as usize;
        let companion = DMatrix::from_fn(n, n, |i, j| {
            if i == 0 {
                -coeffs[j + 1]
            } else if i == j + 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let roots = companion
            .schur()
            .eigenvalues()
            .ok_or_else(|| Error::Unconverged("companion eigenvalues".into()))?;
        let mut found: Vec<(LogPoint, f64)> = Vec::new();
        for &root in roots.iter() {
            let mut z = root;
            for _ in 0..8 {
                let (p, dp, _) = eval_poly(&coeffs, z);
                if dp.norm() == 0.0 {
                    break;
                }
                z -= p / dp;
            }
            let (p, _, scale) = eval_poly(&coeffs, z);
            let point = LogPoint::from_principal(z)?;
            if region.contains(point) {
                found.push((point, p.norm() / scale));
            }
        }
        found.sort_by(|a, b| a.0.argument.total_cmp(&b.0.argument));
        out.extend(found.into_iter().map(|(location, residual)| ResonanceRecord {
            location,
            multiplicity: 2 * l + 1,
            residual,
            source: Source::SphereOracle,
        }));
    }
    Ok(out)
}

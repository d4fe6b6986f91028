//! Smooth closed planar curves given by trigonometric polynomials, plus the
//! geodesic bump functions used to localize deformations.

use std::f64::consts::PI;
use std::path::Path;

use nalgebra::Vector2;
use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = Vector2<f64>;

/// `∫_{-1}^{1} exp(-1/(1-u²)) du`.
const BUMP_INTEGRAL: f64 = 0.443_993_816_168_079_44;

/// Serialized curve: `x(s) = Σ aₖ cos(ks) + bₖ sin(ks)` and likewise for `y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub fourier_x: Vec<[f64; 2]>,
    pub fourier_y: Vec<[f64; 2]>,
    pub n_samples: usize,
}

/// Point data at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub point: Point,
    /// Unit tangent.
    pub tangent: Point,
    pub inward_normal: Point,
    /// `|γ'(s)|`.
    pub speed: f64,
    pub derivative: Point,
    pub second_derivative: Point,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    spec: CurveSpec,
    length: f64,
    /// `speed(s) = c₀ + Σ cₖ cos ks + dₖ sin ks` on an oversampled grid.
    speed_cos: Vec<f64>,
    speed_sin: Vec<f64>,
    max_curvature: f64,
}

fn eval_series(coeffs: &[[f64; 2]], s: f64) -> (f64, f64, f64) {
    let (mut v, mut d1, mut d2) = (0.0, 0.0, 0.0);
    for (k, &[a, b]) in coeffs.iter().enumerate() {
        let kf = k as f64;
        let (sn, cs) = (kf * s).sin_cos();
        v += a * cs + b * sn;
        d1 += kf * (b * cs - a * sn);
        d2 -= kf * kf * (a * cs + b * sn);
    }
    (v, d1, d2)
}

/// Real Fourier coefficients `(a_k, b_k)` of equispaced samples, `k <= M/2`.
fn real_fourier(samples: &[f64]) -> Vec<[f64; 2]> {
    let m = samples.len();
    let mut buf: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let top = m / 2;
    (0..=top)
        .map(|k| {
            let c = buf[k] / m as f64;
            if k == 0 {
                [c.re, 0.0]
            } else if 2 * k == m {
                // Nyquist term: its sine part is invisible on the grid
                [c.re, 0.0]
            } else {
                [2.0 * c.re, -2.0 * c.im]
            }
        })
        .collect()
}

fn segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let orient = |a: Point, b: Point, c: Point| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0)
}

impl BoundaryCurve {
    pub fn new(spec: CurveSpec) -> Result<Self> {
        let n = spec.n_samples;
        if n < 8 || n % 2 != 0 {
            return Err(Error::InvalidCurve(format!("n_samples must be even and >= 8, got {n}")));
        }
        if spec.fourier_x.is_empty() || spec.fourier_y.is_empty() {
            return Err(Error::InvalidCurve("empty Fourier series".into()));
        }
        if spec.fourier_x.iter().chain(&spec.fourier_y).flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidCurve("non-finite Fourier coefficient".into()));
        }
        let degree = spec.fourier_x.len().max(spec.fourier_y.len());
        let m = (4 * n).max(8 * degree).next_multiple_of(2);
        let mut speeds = Vec::with_capacity(m);
        let mut area = 0.0;
        let mut max_curvature = 0.0f64;
        for j in 0..m {
            let s = 2.0 * PI * j as f64 / m as f64;
            let (x, dx, ddx) = eval_series(&spec.fourier_x, s);
            let (y, dy, ddy) = eval_series(&spec.fourier_y, s);
            let speed = dx.hypot(dy);
            if !(speed > 1e-12) {
                return Err(Error::InvalidCurve(format!("curve is not regular at s = {s}")));
            }
            speeds.push(speed);
            area += 0.5 * (x * dy - y * dx);
            max_curvature = max_curvature.max(((dx * ddy - dy * ddx) / speed.powi(3)).abs());
        }
        area *= 2.0 * PI / m as f64;
        if !(area > 0.0) {
            return Err(Error::InvalidCurve(format!(
                "curve must be counterclockwise (signed area {area:.3e})"
            )));
        }
        let mut coeffs = real_fourier(&speeds);
        // trailing modes below rounding only slow down arc-length queries
        let floor = 1e-17 * coeffs[0][0].abs();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c[0].abs() <= floor && c[1].abs() <= floor) {
            coeffs.pop();
        }
        let speed_cos: Vec<f64> = coeffs.iter().map(|c| c[0]).collect();
        let speed_sin: Vec<f64> = coeffs.iter().map(|c| c[1]).collect();
        let length = 2.0 * PI * speed_cos[0];
        let curve = Self { spec, length, speed_cos, speed_sin, max_curvature };
        curve.check_simple()?;
        Ok(curve)
    }

    fn check_simple(&self) -> Result<()> {
        let pts: Vec<Point> = (0..self.n_samples()).map(|j| self.eval(self.node(j)).point).collect();
        let n = pts.len();
        for i in 0..n {
            let (p1, p2) = (pts[i], pts[(i + 1) % n]);
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segments_cross(p1, p2, pts[j], pts[(j + 1) % n]) {
                    return Err(Error::InvalidCurve(format!(
                        "curve self-intersects between samples {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn unit_circle(n_samples: usize) -> Result<Self> {
        Self::ellipse(1.0, 1.0, n_samples)
    }

    pub fn ellipse(a: f64, b: f64, n_samples: usize) -> Result<Self> {
        Self::new(CurveSpec {
            fourier_x: vec![[0.0, 0.0], [a, 0.0]],
            fourier_y: vec![[0.0, 0.0], [0.0, b]],
            n_samples,
        })
    }

    /// Named presets shipped with the library.
    pub fn preset(name: &str, n_samples: usize) -> Result<Self> {
        match name {
            "disk" | "unit_disk" | "circle" => Self::unit_circle(n_samples),
            "ellipse" => Self::ellipse(1.3, 0.8, n_samples),
            _ => Err(Error::Config(format!("unknown curve preset `{name}`"))),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::new(serde_json::from_str(text)?)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.spec)?)
    }

    /// Trigonometric interpolant through equispaced samples
    /// `points[j] = γ(2πj/M)`.
    pub fn from_samples(points: &[Point], n_samples: usize) -> Result<Self> {
        let xs: Vec<f64> = points.iter().map(|p| p.x).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.y).collect();
        let mut fourier_x = real_fourier(&xs);
        let mut fourier_y = real_fourier(&ys);
        if points.len() % 2 == 0 {
            // split the Nyquist cosine evenly between ±M/2 so the interpolant stays real
            let last = fourier_x.len() - 1;
            fourier_x[last][0] *= 0.5;
            fourier_y[last][0] *= 0.5;
        }
        Self::new(CurveSpec { fourier_x, fourier_y, n_samples })
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn n_samples(&self) -> usize {
        self.spec.n_samples
    }

    pub fn with_samples(&self, n_samples: usize) -> Result<Self> {
        Self::new(CurveSpec { n_samples, ..self.spec.clone() })
    }

    /// Equispaced parameter `2πj/N`.
    pub fn node(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.n_samples() as f64
    }

    pub fn eval(&self, s: f64) -> CurvePoint {
        let (x, dx, ddx) = eval_series(&self.spec.fourier_x, s);
        let (y, dy, ddy) = eval_series(&self.spec.fourier_y, s);
        let derivative = Point::new(dx, dy);
        let speed = derivative.norm();
        let tangent = derivative / speed;
        CurvePoint {
            point: Point::new(x, y),
            tangent,
            inward_normal: Point::new(-tangent.y, tangent.x),
            speed,
            derivative,
            second_derivative: Point::new(ddx, ddy),
        }
    }

    pub fn total_length(&self) -> f64 {
        self.length
    }

    pub fn max_curvature(&self) -> f64 {
        self.max_curvature
    }

    /// Arc length from `γ(0)` to `γ(s)`, continuous and increasing in `s`.
    pub fn arc_length_at(&self, s: f64) -> f64 {
        let mut total = self.speed_cos[0] * s;
        for k in 1..self.speed_cos.len() {
            let kf = k as f64;
            let (sn, cs) = (kf * s).sin_cos();
            total += (self.speed_cos[k] * sn + self.speed_sin[k] * (1.0 - cs)) / kf;
        }
        total
    }

    /// Signed along-curve offset of `γ(s)` from `γ(center)`, in `(-L/2, L/2]`.
    pub fn arc_offset(&self, center: f64, s: f64) -> f64 {
        let l = self.length;
        let d = (self.arc_length_at(s) - self.arc_length_at(center)).rem_euclid(l);
        if d > 0.5 * l {
            d - l
        } else {
            d
        }
    }

    pub fn arc_distance(&self, s1: f64, s2: f64) -> f64 {
        self.arc_offset(s1, s2).abs()
    }

    /// Parameter whose arc length from `γ(0)` is `target` (mod the length).
    pub fn param_at_arc_length(&self, target: f64) -> f64 {
        let target = target.rem_euclid(self.length);
        let mut s = 2.0 * PI * target / self.length;
        for _ in 0..50 {
            let f = self.arc_length_at(s) - target;
            let step = f / self.eval(s).speed;
            s -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        s
    }

    pub fn signed_area(&self) -> f64 {
        let m = 4 * self.n_samples();
        (0..m)
            .map(|j| {
                let c = self.eval(2.0 * PI * j as f64 / m as f64);
                0.5 * (c.point.x * c.derivative.y - c.point.y * c.derivative.x)
            })
            .sum::<f64>()
            * 2.0
            * PI
            / m as f64
    }

    /// Area centroid of the enclosed region.
    pub fn centroid(&self) -> Point {
        let m = 4 * self.n_samples();
        let mut c = Point::zeros();
        for j in 0..m {
            let p = self.eval(2.0 * PI * j as f64 / m as f64);
            let (x, y) = (p.point.x, p.point.y);
            let cross = x * p.derivative.y - y * p.derivative.x;
            c += Point::new(x, y) * cross / 3.0;
        }
        c * (2.0 * PI / m as f64) / self.signed_area()
    }

    /// Closest boundary parameter to `x`, searched near `guess`, and the signed
    /// distance along the inward normal (positive inside).
    pub fn project(&self, x: Point, guess: f64) -> (f64, f64) {
        let mut s = guess;
        for _ in 0..40 {
            let c = self.eval(s);
            let diff = c.point - x;
            let f = diff.dot(&c.derivative);
            let df = c.derivative.norm_squared() + diff.dot(&c.second_derivative);
            let step = if df > 0.0 { f / df } else { f / c.derivative.norm_squared() };
            s -= step;
            if step.abs() < 1e-14 {
                break;
            }
        }
        let c = self.eval(s);
        (s, (x - c.point).dot(&c.inward_normal))
    }

    /// Ray-casting point-in-obstacle test against a fine polygon.
    pub fn contains(&self, x: Point) -> bool {
        let m = 4 * self.n_samples();
        let mut inside = false;
        let mut prev = self.eval(2.0 * PI * (m - 1) as f64 / m as f64).point;
        for j in 0..m {
            let cur = self.eval(2.0 * PI * j as f64 / m as f64).point;
            if (cur.y > x.y) != (prev.y > x.y) {
                let t = (x.y - prev.y) / (cur.y - prev.y);
                if x.x < prev.x + t * (cur.x - prev.x) {
                    inside = !inside;
                }
            }
            prev = cur;
        }
        inside
    }

    /// Apply an affine map `x ↦ A x + b` with `det A > 0` to the coefficients.
    fn affine(&self, a: nalgebra::Matrix2<f64>, b: Point) -> Result<Self> {
        let len = self.spec.fourier_x.len().max(self.spec.fourier_y.len());
        let get = |c: &[[f64; 2]], k: usize| c.get(k).copied().unwrap_or([0.0, 0.0]);
        let mut fx = Vec::with_capacity(len);
        let mut fy = Vec::with_capacity(len);
        for k in 0..len {
            let [ax, bx] = get(&self.spec.fourier_x, k);
            let [ay, by] = get(&self.spec.fourier_y, k);
            let cosv = a * Point::new(ax, ay);
            let sinv = a * Point::new(bx, by);
            let shift = if k == 0 { b } else { Point::zeros() };
            fx.push([cosv.x + shift.x, sinv.x]);
            fy.push([cosv.y + shift.y, sinv.y]);
        }
        Self::new(CurveSpec { fourier_x: fx, fourier_y: fy, n_samples: self.n_samples() })
    }

    pub fn rotated(&self, angle: f64) -> Result<Self> {
        let (s, c) = angle.sin_cos();
        self.affine(nalgebra::Matrix2::new(c, -s, s, c), Point::zeros())
    }

    pub fn translated(&self, by: Point) -> Result<Self> {
        self.affine(nalgebra::Matrix2::identity(), by)
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        self.affine(nalgebra::Matrix2::identity() * factor, Point::zeros())
    }
}

pub fn curve_point(curve: &BoundaryCurve, s: f64) -> CurvePoint {
    curve.eval(s)
}

pub fn arc_distance(curve: &BoundaryCurve, s1: f64, s2: f64) -> f64 {
    curve.arc_distance(s1, s2)
}

/// The standard bump `exp(-1/(1-u²))` on `|u| < 1`.
pub fn standard_bump(u: f64) -> f64 {
    if u.abs() < 1.0 {
        (-1.0 / (1.0 - u * u)).exp()
    } else {
        0.0
    }
}

/// `χ_h(x) = c ρ(dist(x, x₀)/h)` with `∫ χ_h dS = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BumpFunction {
    pub center_param: f64,
    pub h: f64,
    pub normalization: f64,
}

impl BumpFunction {
    /// Value at the boundary point with parameter `s`.
    pub fn value(&self, curve: &BoundaryCurve, s: f64) -> f64 {
        self.normalization * standard_bump(curve.arc_offset(self.center_param, s) / self.h)
    }

    pub fn peak(&self) -> f64 {
        self.normalization * (-1.0f64).exp()
    }
}

pub fn make_bump(curve: &BoundaryCurve, center_param: f64, h: f64) -> Result<BumpFunction> {
    let length = curve.total_length();
    if !(h > 0.0) || h >= 0.5 * length {
        return Err(Error::BumpTooWide { h, length });
    }
    // the arc-length substitution makes the normalization geometry-free
    Ok(BumpFunction {
        center_param: center_param.rem_euclid(2.0 * PI),
        h,
        normalization: 1.0 / (h * BUMP_INTEGRAL),
    })
}

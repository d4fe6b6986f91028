//! Compactly supported normal bump fields near a boundary point, their
//! flows, and the coefficients of the conjugated Laplacian
//! `Δ - V` with `V = Σ a_{kℓ} ∂_k ∂_ℓ + Σ b_k ∂_k`.

use std::f64::consts::PI;

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{make_bump, BoundaryCurve, BumpFunction, Point};

pub const DEFAULT_RK_STEPS: usize = 64;

/// Ratio `cutoff_radius / h`.
const CUTOFF_FACTOR: f64 = 4.0;
/// Step of the finite-difference first derivatives of `Φ`.
const JACOBIAN_STEP: f64 = 1e-5;
/// Step of the finite-difference second derivatives of `Φ`.
const HESSIAN_STEP: f64 = 1e-4;

/// Serialized deformation: a bump flow on a given curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeformationSpec {
    pub center_param: f64,
    pub h: f64,
    #[serde(rename = "M", default = "default_order")]
    pub order: u32,
    #[serde(default)]
    pub t: f64,
    #[serde(default = "default_rk_steps")]
    pub rk_steps: usize,
}

fn default_order() -> u32 {
    1
}

fn default_rk_steps() -> usize {
    DEFAULT_RK_STEPS
}

/// `∂_i ∂_ℓ Φ^m` stored as `d2[m][(i, ℓ)]`.
pub type Hessians = [Matrix2<f64>; 2];

/// A smooth map of the plane with first and second derivatives.
pub trait Diffeomorphism {
    fn map(&self, x: Point) -> Point;
    fn jacobian(&self, x: Point) -> Matrix2<f64>;
    fn hessians(&self, x: Point) -> Hessians;
}

/// Smooth step: 1 on `u <= 1/2`, 0 on `u >= 1`.
fn smooth_step(u: f64) -> f64 {
    if u <= 0.5 {
        return 1.0;
    }
    if u >= 1.0 {
        return 0.0;
    }
    let v = 2.0 * u - 1.0;
    let f = |x: f64| if x > 0.0 { (-1.0 / x).exp() } else { 0.0 };
    f(1.0 - v) / (f(1.0 - v) + f(v))
}

#[derive(Debug, Clone)]
pub struct DeformationField {
    pub bump: BumpFunction,
    pub curve: BoundaryCurve,
    pub delta_h: f64,
    pub cutoff_radius: f64,
    /// Half-width of the normal collar carrying the extension.
    pub collar: f64,
    pub order: u32,
    pub dim: u32,
    center: Point,
    table: Vec<(f64, Point)>,
}

/// `V_h = δ_h χ_h(s*) ν(s*) ψ(|d|/w) cut(|x - x₀| / 4h)` where `(s*, d)` are
/// the normal coordinates of `x` relative to the curve and `w` the collar.
pub fn make_field(curve: &BoundaryCurve, center_param: f64, h: f64, order: u32, dim: u32) -> Result<DeformationField> {
    if order < 1 {
        return Err(Error::Domain(format!("bump order M must be >= 1, got {order}")));
    }
    if dim < 2 {
        return Err(Error::Domain(format!("dimension must be >= 2, got {dim}")));
    }
    let bump = make_bump(curve, center_param, h)?;
    let collar = (2.0 * h).min(0.5 / curve.max_curvature());
    let samples = 512;
    let table = (0..samples)
        .map(|j| {
            let s = 2.0 * PI * j as f64 / samples as f64;
            (s, curve.eval(s).point)
        })
        .collect();
    let field = DeformationField {
        bump,
        curve: curve.clone(),
        delta_h: h.powi((2 * order + dim - 1) as i32),
        cutoff_radius: CUTOFF_FACTOR * h,
        collar,
        order,
        dim,
        center: curve.eval(bump.center_param).point,
        table,
    };
    field.check_collar()?;
    Ok(field)
}

impl DeformationField {
    pub fn from_spec(curve: &BoundaryCurve, spec: &DeformationSpec) -> Result<Self> {
        make_field(curve, spec.center_param, spec.h, spec.order, 2)
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn h(&self) -> f64 {
        self.bump.h
    }

    /// Same field with the amplitude multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self { delta_h: self.delta_h * factor, ..self.clone() }
    }

    /// Normal lines from the bump support must return to their foot point
    /// across the whole collar.
    fn check_collar(&self) -> Result<()> {
        let c = self.bump.center_param;
        let span = self.bump.h / self.curve.eval(c).speed;
        for j in 0..=32 {
            let s = c - span + 2.0 * span * j as f64 / 32.0;
            let cp = self.curve.eval(s);
            for d in [-self.collar, self.collar] {
                let (foot, dist) = self.normal_coordinates(cp.point + d * cp.inward_normal);
                let back = self.curve.eval(foot).point;
                if (back - cp.point).norm() > 1e-8 || (dist - d).abs() > 1e-8 {
                    return Err(Error::BumpTooWide { h: self.bump.h, length: self.curve.total_length() });
                }
            }
        }
        Ok(())
    }

    /// Foot parameter and signed inward distance to the curve.
    pub fn normal_coordinates(&self, x: Point) -> (f64, f64) {
        let guess = self
            .table
            .iter()
            .min_by(|a, b| (a.1 - x).norm_squared().total_cmp(&(b.1 - x).norm_squared()))
            .map(|v| v.0)
            .expect("nonempty table");
        self.curve.project(x, guess)
    }

    /// `true` when the field vanishes identically near `x`.
    pub fn outside_support(&self, x: Point) -> bool {
        (x - self.center).norm() >= self.cutoff_radius
    }

    pub fn value(&self, x: Point) -> Point {
        let r = (x - self.center).norm();
        if r >= self.cutoff_radius {
            return Point::zeros();
        }
        let cut = smooth_step(r / self.cutoff_radius);
        if cut == 0.0 {
            return Point::zeros();
        }
        let (s, d) = self.normal_coordinates(x);
        let psi = smooth_step(d.abs() / self.collar);
        if psi == 0.0 {
            return Point::zeros();
        }
        let chi = self.bump.value(&self.curve, s);
        if chi == 0.0 {
            return Point::zeros();
        }
        self.curve.eval(s).inward_normal * (self.delta_h * chi * psi * cut)
    }

    /// Sample points of the support box around the bump center.
    pub fn support_grid(&self, per_side: usize) -> Vec<Point> {
        let r = self.cutoff_radius;
        let mut out = Vec::with_capacity(per_side * per_side);
        for i in 0..per_side {
            for j in 0..per_side {
                let u = -r + 2.0 * r * (i as f64 + 0.5) / per_side as f64;
                let v = -r + 2.0 * r * (j as f64 + 0.5) / per_side as f64;
                out.push(self.center + Point::new(u, v));
            }
        }
        out
    }

    /// Boundary parameters covering the bump support.
    pub fn support_params(&self, count: usize) -> Vec<f64> {
        let c = self.bump.center_param;
        let span = 1.2 * self.bump.h / self.curve.eval(c).speed;
        (0..count).map(|j| c - span + 2.0 * span * j as f64 / (count - 1).max(1) as f64).collect()
    }

    /// Empirical sup of `|V|`, `|DV|`, `|D²V|` over the support, by central
    /// differences.
    pub fn c2_norm(&self) -> f64 {
        let e = 1e-4 * self.bump.h;
        let ex = Point::new(e, 0.0);
        let ey = Point::new(0.0, e);
        let mut worst = 0.0f64;
        let pts: Vec<Point> = self
            .support_grid(24)
            .into_iter()
            .chain(self.support_params(24).into_iter().map(|s| self.curve.eval(s).point))
            .collect();
        for x in pts {
            let v = self.value(x);
            let (vxp, vxm, vyp, vym) = (self.value(x + ex), self.value(x - ex), self.value(x + ey), self.value(x - ey));
            let dx = (vxp - vxm) / (2.0 * e);
            let dy = (vyp - vym) / (2.0 * e);
            let dxx = (vxp - 2.0 * v + vxm) / (e * e);
            let dyy = (vyp - 2.0 * v + vym) / (e * e);
            let dxy = (self.value(x + ex + ey) - self.value(x + ex - ey) - self.value(x - ex + ey)
                + self.value(x - ex - ey))
                / (4.0 * e * e);
            for w in [v, dx, dy, dxx, dyy, dxy] {
                worst = worst.max(w.x.abs()).max(w.y.abs());
            }
        }
        worst
    }

    /// Rescale the amplitude so that [`c2_norm`](Self::c2_norm) stays at or
    /// below `cap`. Returns the field and the factor applied.
    pub fn capped(&self, cap: f64) -> (Self, f64) {
        let norm = self.c2_norm();
        if norm <= cap || norm == 0.0 {
            (self.clone(), 1.0)
        } else {
            let factor = cap / norm;
            (self.scaled(factor), factor)
        }
    }
}

/// Time-`t` flow of a deformation field.
#[derive(Debug, Clone)]
pub struct FlowDeformation {
    pub field: DeformationField,
    pub t: f64,
    pub rk_steps: usize,
    deformed: Option<BoundaryCurve>,
}

pub fn flow(field: &DeformationField, t: f64) -> Result<FlowDeformation> {
    flow_with_steps(field, t, DEFAULT_RK_STEPS)
}

/// Build the flow and check it: `det DΦ > 0` over the support and a simple
/// flowed boundary.
pub fn flow_with_steps(field: &DeformationField, t: f64, rk_steps: usize) -> Result<FlowDeformation> {
    if rk_steps == 0 || !t.is_finite() {
        return Err(Error::Domain(format!("flow needs rk_steps >= 1 and finite t, got {rk_steps}, {t}")));
    }
    let mut d = FlowDeformation { field: field.clone(), t, rk_steps, deformed: None };
    if t == 0.0 {
        d.deformed = Some(field.curve.clone());
        return Ok(d);
    }
    for x in field.support_grid(12) {
        let det = d.jacobian(x).determinant();
        if !(det > 0.0) {
            return Err(Error::NotInjective { t, reason: format!("det DΦ = {det:.3e} at ({:.4}, {:.4})", x.x, x.y) });
        }
    }
    let curve = d.flowed_curve().map_err(|e| Error::NotInjective { t, reason: e.to_string() })?;
    d.deformed = Some(curve);
    Ok(d)
}

/// Largest `t` in `(0, t_hi]` on a halving ladder for which the flow passes
/// the injectivity checks, refined by bisection.
pub fn t_max(field: &DeformationField, t_hi: f64) -> f64 {
    if flow(field, t_hi).is_ok() {
        return t_hi;
    }
    let (mut good, mut bad) = (0.0, t_hi);
    for _ in 0..12 {
        let mid = 0.5 * (good + bad);
        if flow(field, mid).is_ok() {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

impl FlowDeformation {
    pub fn spec(&self) -> DeformationSpec {
        DeformationSpec {
            center_param: self.field.bump.center_param,
            h: self.field.bump.h,
            order: self.field.order,
            t: self.t,
            rk_steps: self.rk_steps,
        }
    }

    /// Image of the boundary, refitted with an oversampled interpolant on the
    /// original parameter.
    pub fn deformed_curve(&self) -> &BoundaryCurve {
        self.deformed.as_ref().expect("set on construction")
    }

    fn flowed_curve(&self) -> Result<BoundaryCurve> {
        let base = &self.field.curve;
        let n = base.n_samples();
        let m = 4 * n.max(256);
        let pts: Vec<Point> = (0..m).map(|j| self.map(base.eval(2.0 * PI * j as f64 / m as f64).point)).collect();
        BoundaryCurve::from_samples(&pts, n)
    }

    /// Flow a point for time `t` with the same step count.
    pub fn flow_point(&self, x: Point, t: f64) -> Point {
        if t == 0.0 || self.field.outside_support(x) {
            return x;
        }
        let dt = t / self.rk_steps as f64;
        let v = |p: Point| self.field.value(p);
        let mut p = x;
        for _ in 0..self.rk_steps {
            let k1 = v(p);
            let k2 = v(p + k1 * (0.5 * dt));
            let k3 = v(p + k2 * (0.5 * dt));
            let k4 = v(p + k3 * dt);
            p += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (dt / 6.0);
        }
        p
    }

    /// `Φ⁻¹(y)` by Newton iteration started from the backward flow.
    pub fn inverse(&self, y: Point) -> Result<Point> {
        if self.t == 0.0 || self.field.outside_support(y) {
            return Ok(y);
        }
        let mut x = self.flow_point(y, -self.t);
        for _ in 0..20 {
            let r = self.map(x) - y;
            let jac = self.jacobian(x);
            let step = jac.lu().solve(&r).ok_or(Error::SingularJacobian(x.x, x.y))?;
            x -= step;
            if step.norm() < 1e-15 {
                break;
            }
        }
        Ok(x)
    }

    fn stencil(&self, x: Point, e: f64) -> [[Point; 3]; 3] {
        let mut out = [[Point::zeros(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.map(x + Point::new((i as f64 - 1.0) * e, (j as f64 - 1.0) * e));
            }
        }
        out
    }

    fn trivial_at(&self, x: Point) -> bool {
        self.t == 0.0 || self.field.outside_support(x)
    }
}

impl Diffeomorphism for FlowDeformation {
    fn map(&self, x: Point) -> Point {
        self.flow_point(x, self.t)
    }

    fn jacobian(&self, x: Point) -> Matrix2<f64> {
        if self.trivial_at(x) {
            return Matrix2::identity();
        }
        let e = JACOBIAN_STEP;
        let dx = (self.map(x + Point::new(e, 0.0)) - self.map(x - Point::new(e, 0.0))) / (2.0 * e);
        let dy = (self.map(x + Point::new(0.0, e)) - self.map(x - Point::new(0.0, e))) / (2.0 * e);
        Matrix2::new(dx.x, dy.x, dx.y, dy.y)
    }

    fn hessians(&self, x: Point) -> Hessians {
        if self.trivial_at(x) {
            return [Matrix2::zeros(); 2];
        }
        let e = HESSIAN_STEP;
        let s = self.stencil(x, e);
        let dxx = (s[2][1] - 2.0 * s[1][1] + s[0][1]) / (e * e);
        let dyy = (s[1][2] - 2.0 * s[1][1] + s[1][0]) / (e * e);
        let dxy = (s[2][2] - s[2][0] - s[0][2] + s[0][0]) / (4.0 * e * e);
        [Matrix2::new(dxx.x, dxy.x, dxy.x, dyy.x), Matrix2::new(dxx.y, dxy.y, dxy.y, dyy.y)]
    }
}

/// Empirical C² size of a flow and of its conjugation coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct C2Report {
    /// Sup of the entries of `Φ - id`, `DΦ - I`, `D²Φ`.
    pub distance: f64,
    /// Sup of the entries of `a` and `b`.
    pub coefficient_sup: f64,
}

/// Entries are read in the tangent/normal frame at the bump center so the
/// numbers do not depend on where the bump sits. Samples are the exterior
/// points of the support box and boundary points of the bump support.
pub fn c2_report(d: &FlowDeformation) -> Result<C2Report> {
    if d.t == 0.0 {
        return Ok(C2Report { distance: 0.0, coefficient_sup: 0.0 });
    }
    let field = &d.field;
    let curve = &field.curve;
    let cp = curve.eval(field.bump.center_param);
    let r = Matrix2::from_columns(&[cp.tangent, cp.inward_normal]);
    let rt = r.transpose();
    let pts: Vec<Point> = field
        .support_grid(16)
        .into_iter()
        .filter(|&x| !curve.contains(x))
        .chain(field.support_params(24).into_iter().map(|s| curve.eval(s).point))
        .collect();
    let mut distance = 0.0f64;
    let mut coefficient_sup = 0.0f64;
    for x in pts {
        let disp = rt * (d.map(x) - x);
        let jacobian = d.jacobian(x);
        let hes = d.hessians(x);
        let jac = rt * (jacobian - Matrix2::identity()) * r;
        // rotate both the differentiated variables and the components
        let local: Vec<Matrix2<f64>> = (0..2).map(|m| rt * hes[m] * r).collect();
        for m in 0..2 {
            let h = local[0] * r[(0, m)] + local[1] * r[(1, m)];
            distance = distance.max(h.amax());
        }
        distance = distance.max(disp.amax()).max(jac.amax());
        let (a, b) = coefficients_from_jets(&jacobian, &hes, x)?;
        coefficient_sup = coefficient_sup.max((rt * a * r).amax()).max((rt * b).amax());
    }
    Ok(C2Report { distance, coefficient_sup })
}

pub fn c2_distance(d: &FlowDeformation) -> f64 {
    c2_report(d).map(|r| r.distance).unwrap_or(f64::INFINITY)
}

/// Coefficients of `V = Δ - Φ*Δ(Φ⁻¹)*` from the jets of `Φ` at `x`:
/// `a = I - J Jᵀ` and `b_k = Σ ∂_i∂_ℓ Φ^m J^{km} J^{ij} J^{ℓj}` with
/// `J = DΦ(x)⁻¹`.
pub fn coefficients_from_jets(jacobian: &Matrix2<f64>, hessians: &Hessians, at: Point) -> Result<(Matrix2<f64>, Point)> {
    let j = jacobian.try_inverse().ok_or(Error::SingularJacobian(at.x, at.y))?;
    let a = Matrix2::identity() - j * j.transpose();
    let jjt = j * j.transpose();
    let mut b = Point::zeros();
    for k in 0..2 {
        let mut sum = 0.0;
        for m in 0..2 {
            // Σ_{iℓ} ∂_i∂_ℓ Φ^m (J Jᵀ)_{iℓ}
            let contraction = hessians[m].component_mul(&jjt).sum();
            sum += j[(k, m)] * contraction;
        }
        b[k] = sum;
    }
    Ok((a, b))
}

pub fn conjugated_coeffs<D: Diffeomorphism>(d: &D, x: Point) -> Result<(Matrix2<f64>, Point)> {
    coefficients_from_jets(&d.jacobian(x), &d.hessians(x), x)
}

/// Coefficients of a flow, exactly zero where the flow is the identity.
pub fn flow_coeffs(d: &FlowDeformation, x: Point) -> Result<(Matrix2<f64>, Point)> {
    if d.trivial_at(x) {
        return Ok((Matrix2::zeros(), Point::zeros()));
    }
    conjugated_coeffs(d, x)
}

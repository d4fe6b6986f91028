//! Bessel and Hankel functions of integer and half-integer order, with the
//! Hankel functions continued onto the logarithmic cover.
//!
//! Integer orders use three regimes in `|z|`:
//!
//! * `|z| <= 12`: ascending series in `f64`,
//! * `12 < |z| <= 25`: the same series summed in double-double, since the
//!   alternating terms reach `e^{|z|}` while the result stays `O(1)`,
//! * `|z| > 25`: the Hankel large-argument expansion, evaluated on the
//!   quarter-plane `|arg w| <= π/2` and carried to the requested sheet with
//!   `H¹ₙ(w e^{iqπ}) = (-1)^{qn} (H¹ₙ(w) - 2q Jₙ(w))`.
//!
//! The Hankel pair is always formed on the quarter-plane as well. There the
//! recessive member (`H¹` above the axis, `H²` below) comes from the integral
//! for `Kₙ` when `|Im w| > 3`, because `J ± iY` cancels it away.
//!
//! In the series regime `Yₙ` is built from `ln(z/2)` with the cover argument,
//! so the value on any sheet comes out of the same formula. Half-integer
//! orders are closed forms in `e^{±iz}` and powers of `1/z`.

mod dd;

use std::f64::consts::{FRAC_2_PI, FRAC_1_PI, PI};

use num_complex::Complex64;

use crate::cover::LogPoint;
use crate::error::{Error, Result};
use dd::{Dd, DdComplex};

const SERIES_F64_MAX: f64 = 12.0;
const SERIES_DD_MAX: f64 = 25.0;
/// Beyond this modulus no accuracy target is maintained.
pub const ACCURACY_LIMIT: f64 = 50.0;
/// `|Im w|` beyond which the recessive Hankel function is computed directly.
const RECESSIVE_IM: f64 = 3.0;
const EULER_GAMMA: f64 = 0.5772156649015329;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Order `twice_order / 2`; odd `twice_order` gives half-integer orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BesselOrder {
    twice_order: u32,
}

impl BesselOrder {
    pub const fn from_twice(twice_order: u32) -> Self {
        Self { twice_order }
    }

    pub const fn integer(m: u32) -> Self {
        Self { twice_order: 2 * m }
    }

    /// Order `l + 1/2`.
    pub const fn half_integer(l: u32) -> Self {
        Self { twice_order: 2 * l + 1 }
    }

    pub fn twice_order(self) -> u32 {
        self.twice_order
    }

    pub fn value(self) -> f64 {
        self.twice_order as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.twice_order % 2 == 0
    }
}

/// A value together with whether it lies outside the tuned range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub degraded: bool,
}

/// `J_order(z)` on the principal branch.
pub fn bessel_j(order: BesselOrder, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        if !order.is_integer() {
            return Err(Error::Domain("half-integer J at z = 0".into()));
        }
        return Ok(if order.twice_order == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) });
    }
    let p = LogPoint::from_principal(z)?;
    Ok(bessel_j_cover(order, p))
}

/// `J_order` at a cover point. For integer order this only depends on the
/// projection; for half-integer order the `z^{1/2}` factor follows the sheet.
pub fn bessel_j_cover(order: BesselOrder, p: LogPoint) -> Complex64 {
    if order.is_integer() {
        integer_jy(order.twice_order / 2, p).0.value
    } else {
        half_integer_j(order.value(), p)
    }
}

pub fn bessel_y(order: BesselOrder, p: LogPoint) -> Complex64 {
    if order.is_integer() {
        integer_jy(order.twice_order / 2, p).1.value
    } else {
        let (h1, h2) = half_integer_hankels(order.value(), p);
        (h1 - h2) / (2.0 * I)
    }
}

pub fn hankel1(order: BesselOrder, p: LogPoint) -> Complex64 {
    hankel1_eval(order, p).value
}

pub fn hankel1_eval(order: BesselOrder, p: LogPoint) -> Evaluation {
    if order.is_integer() {
        let (h1, _, degraded) = integer_hankels(order.twice_order / 2, p);
        Evaluation { value: h1, degraded }
    } else {
        let (h1, _) = half_integer_hankels(order.value(), p);
        Evaluation { value: h1, degraded: p.modulus > ACCURACY_LIMIT }
    }
}

pub fn hankel2(order: BesselOrder, p: LogPoint) -> Complex64 {
    if order.is_integer() {
        integer_hankels(order.twice_order / 2, p).1
    } else {
        half_integer_hankels(order.value(), p).1
    }
}

/// `d/dz H¹_m(z) = H¹_{m-1}(z) - (m/z) H¹_m(z)`.
pub fn hankel1_deriv(order: BesselOrder, p: LogPoint) -> Complex64 {
    let z = p.project();
    let nu = order.value();
    if order.is_integer() {
        let m = order.twice_order / 2;
        let hm = hankel1(order, p);
        let lower = if m == 0 {
            -hankel1(BesselOrder::integer(1), p)
        } else {
            hankel1(BesselOrder::integer(m - 1), p)
        };
        lower - hm * (nu / z)
    } else {
        let (hm, _) = half_integer_hankels(nu, p);
        let (lower, _) = half_integer_hankels(nu - 1.0, p);
        lower - hm * (nu / z)
    }
}

/// `(J_m, Y_m)` at `p` for integer `m >= 0`.
pub(crate) fn integer_jy(m: u32, p: LogPoint) -> (Evaluation, Evaluation) {
    let r = p.modulus;
    let nominal = |v: Complex64| Evaluation { value: v, degraded: false };
    if r <= SERIES_F64_MAX {
        let (j, y) = series_f64(m, p);
        return (nominal(j), nominal(y));
    }
    if r <= SERIES_DD_MAX {
        let (j, y) = series_dd(m, p);
        return (nominal(j), nominal(y));
    }
    let q = (p.argument / PI).round();
    let w = LogPoint { modulus: r, argument: p.argument - q * PI };
    let (jw, yw, converged) = match large_argument(m as f64, w) {
        Some((h1, h2)) => ((h1 + h2) * 0.5, (h1 - h2) / (2.0 * I), true),
        None => {
            let (j, y) = series_dd(m, w);
            (j, y, r <= ACCURACY_LIMIT)
        }
    };
    let sign = if (q as i64 * m as i64) % 2 == 0 { 1.0 } else { -1.0 };
    let degraded = !converged || r > ACCURACY_LIMIT;
    let j = jw * sign;
    let y = (yw + 2.0 * I * q * jw) * sign;
    (Evaluation { value: j, degraded }, Evaluation { value: y, degraded })
}

/// `(H¹_m, H²_m)` at `p`. Away from the real axis one of the pair is
/// exponentially small and `J ± iY` cancels to noise, so that member is
/// computed on its own and the pair is carried to the sheet of `p`.
fn integer_hankels(m: u32, p: LogPoint) -> (Complex64, Complex64, bool) {
    let r = p.modulus;
    let q = (p.argument / PI).round();
    let w = LogPoint { modulus: r, argument: p.argument - q * PI };
    let large = if r > SERIES_DD_MAX { large_argument(m as f64, w) } else { None };
    let (h1w, h2w, degraded) = match large {
        Some((h1, h2)) => (h1, h2, r > ACCURACY_LIMIT),
        None => {
            let (j, y) = integer_jy(m, w);
            let (mut h1, mut h2) = (j.value + I * y.value, j.value - I * y.value);
            let im = w.project().im;
            if im > RECESSIVE_IM {
                // H¹_m(z) = (2/πi) (-i)^m K_m(-iz)
                h1 = 2.0 / (PI * I) * (-I).powu(m) * macdonald_k(m, -I * w.project());
            } else if im < -RECESSIVE_IM {
                // H²_m(z) = -(2/πi) i^m K_m(iz)
                h2 = -2.0 / (PI * I) * I.powu(m) * macdonald_k(m, I * w.project());
            }
            (h1, h2, j.degraded || y.degraded)
        }
    };
    let sign = if (q as i64 * m as i64) % 2 == 0 { 1.0 } else { -1.0 };
    let h1 = ((1.0 - q) * h1w - q * h2w) * sign;
    let h2 = ((1.0 + q) * h2w + q * h1w) * sign;
    (h1, h2, degraded)
}

/// `K_m(x) = ∫₀^∞ e^{-x cosh t} cosh(mt) dt` for `Re x > 0`, by the
/// trapezoid rule, which converges geometrically for this analytic, even,
/// doubly decaying integrand. The step follows the half-width of the strip
/// where `Re(x cosh t)` stays positive.
fn macdonald_k(m: u32, x: Complex64) -> Complex64 {
    let strip = 0.5 * x.re.atan2(x.im.abs());
    let h = (2.0 * PI * strip / 40.0).min(0.05);
    let mut sum = Complex64::new(0.5, 0.0);
    let mut k = 1u32;
    loop {
        let t = k as f64 * h;
        let c = t.cosh() - 1.0;
        let term = (-x * c).exp() * (m as f64 * t).cosh();
        sum += term;
        if x.re * c - m as f64 * t > 45.0 || k > 100_000 {
            break;
        }
        k += 1;
    }
    (-x).exp() * sum * h
}

fn harmonic(n: u32) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Negative-power part `-(1/π) Σ_{k<m} (m-k-1)!/k! (z/2)^{2k-m}` of `Y_m`.
fn y_finite_part(m: u32, half: Complex64) -> Complex64 {
    if m == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let half_sq = half * half;
    let mut term = half.powi(-(m as i32)) * factorial(m - 1);
    let mut sum = term;
    for k in 0..m - 1 {
        term = term * half_sq / ((k + 1) as f64 * (m - k - 1) as f64);
        sum += term;
    }
    -sum * FRAC_1_PI
}

fn series_f64(m: u32, p: LogPoint) -> (Complex64, Complex64) {
    let z = p.project();
    let half = z * 0.5;
    let q = -half * half;
    let mut term = half.powu(m) / factorial(m);
    let mut psi_k = -EULER_GAMMA;
    let mut psi_mk = harmonic(m) - EULER_GAMMA;
    let mut j = term;
    let mut s2 = term * (psi_k + psi_mk);
    let mut tmax = term.norm();
    let mut k = 0u32;
    loop {
        k += 1;
        term = term * q / (k as f64 * (m + k) as f64);
        psi_k += 1.0 / k as f64;
        psi_mk += 1.0 / (m + k) as f64;
        j += term;
        s2 += term * (psi_k + psi_mk);
        let t = term.norm();
        tmax = tmax.max(t);
        let shrinking = q.norm() < 0.5 * (k as f64 * (m + k) as f64);
        if shrinking && t * (psi_k + psi_mk).abs().max(1.0) <= 1e-18 * tmax || k > 400 {
            break;
        }
    }
    let log_half = Complex64::new((p.modulus * 0.5).ln(), p.argument);
    let y = y_finite_part(m, half) + log_half * j * FRAC_2_PI - s2 * FRAC_1_PI;
    (j, y)
}

fn series_dd(m: u32, p: LogPoint) -> (Complex64, Complex64) {
    let z = p.project();
    let half = DdComplex::from_c64(z * 0.5);
    let q = -(half * half);
    let mut term = DdComplex::ONE;
    for k in 1..=m {
        term = (term * half).div_f64(k as f64);
    }
    let mut psi_k = -Dd::EULER_GAMMA;
    let mut psi_mk = -Dd::EULER_GAMMA;
    for k in 1..=m {
        psi_mk = psi_mk + Dd::recip_int(k as u64);
    }
    let mut j = term;
    let mut s2 = term.scale(psi_k + psi_mk);
    let mut tmax = term.norm_f64();
    let qn = q.norm_f64();
    let mut k = 0u32;
    loop {
        k += 1;
        term = (term * q).div_f64(k as f64 * (m + k) as f64);
        psi_k = psi_k + Dd::recip_int(k as u64);
        psi_mk = psi_mk + Dd::recip_int((m + k) as u64);
        j = j + term;
        s2 = s2 + term.scale(psi_k + psi_mk);
        let t = term.norm_f64();
        tmax = tmax.max(t);
        let shrinking = qn < 0.5 * (k as f64 * (m + k) as f64);
        if shrinking && t * (psi_k + psi_mk).abs_f64().max(1.0) <= 1e-34 * tmax || k > 600 {
            break;
        }
    }
    let j = j.to_c64();
    let s2 = s2.to_c64();
    let log_half = Complex64::new((p.modulus * 0.5).ln(), p.argument);
    let y = y_finite_part(m, z * 0.5) + log_half * j * FRAC_2_PI - s2 * FRAC_1_PI;
    (j, y)
}

/// Large-argument expansions of `(H¹_ν, H²_ν)` at `w` with `|arg w| <= π/2`.
/// Returns `None` when the asymptotic series stalls above `1e-16`.
fn large_argument(nu: f64, w: LogPoint) -> Option<(Complex64, Complex64)> {
    let z = w.project();
    let mu = 4.0 * nu * nu;
    let inv_z = 1.0 / z;
    let mut a = Complex64::new(1.0, 0.0);
    let mut sum_plus = a;
    let mut sum_minus = a;
    let mut ik = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    let mut converged = false;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a = a * inv_z * ((mu - odd * odd) / (8.0 * k as f64));
        ik *= I;
        let size = a.norm();
        if size > last {
            break;
        }
        sum_plus += ik * a;
        sum_minus += ik.conj() * a;
        if size <= 1e-17 {
            converged = true;
            break;
        }
        last = size;
    }
    if !converged {
        return None;
    }
    let omega = z - (nu * 0.5 + 0.25) * PI;
    let pref = (2.0 / PI).sqrt() / w.sqrt().project();
    let e = (I * omega).exp();
    Some((pref * e * sum_plus, pref / e * sum_minus))
}

/// Closed forms of `(H¹_ν, H²_ν)` for `ν = ±(l + 1/2)`; the asymptotic series
/// terminates after `l + 1` terms.
fn half_integer_hankels(nu: f64, p: LogPoint) -> (Complex64, Complex64) {
    let z = p.project();
    let l = (nu.abs() - 0.5).round() as u32;
    let mu = 4.0 * nu * nu;
    let inv_z = 1.0 / z;
    let mut a = Complex64::new(1.0, 0.0);
    let mut sum_plus = a;
    let mut sum_minus = a;
    let mut ik = Complex64::new(1.0, 0.0);
    for k in 1..=l {
        let odd = (2 * k - 1) as f64;
        a = a * inv_z * ((mu - odd * odd) / (8.0 * k as f64));
        ik *= I;
        sum_plus += ik * a;
        sum_minus += ik.conj() * a;
    }
    let omega = z - (nu * 0.5 + 0.25) * PI;
    let pref = (2.0 / PI).sqrt() / p.sqrt().project();
    let e = (I * omega).exp();
    (pref * e * sum_plus, pref / e * sum_minus)
}

fn half_integer_j(nu: f64, p: LogPoint) -> Complex64 {
    if p.modulus >= 1.0 {
        let (h1, h2) = half_integer_hankels(nu, p);
        return (h1 + h2) * 0.5;
    }
    // ascending series, free of the e^{±iz} cancellation near the origin
    let z = p.project();
    let q = -z * z * 0.25;
    let mut gamma = PI.sqrt(); // Γ(1/2)
    let mut g_arg = 0.5;
    while g_arg < nu + 1.0 - 1e-9 {
        gamma *= g_arg;
        g_arg += 1.0;
    }
    let mut term = Complex64::new(1.0 / gamma, 0.0);
    let mut sum = term;
    for k in 1..60 {
        term = term * q / (k as f64 * (nu + k as f64));
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    p.scale(0.5).powf(nu).project() * sum
}

//! Nyström discretization of the single-layer operator
//! `S_λ φ(x) = ∫_{∂O} R₀(λ, |x - y|) φ(y) dS(y)` on a smooth closed curve.
//!
//! The logarithmic part of the kernel is integrated with the Kress product
//! rule on the equispaced grid `t_j = πj/n`, `N = 2n`; the smooth remainder
//! uses the trapezoid rule. With this splitting the discrete operator of the
//! unit circle is circulant with eigenvalues that converge spectrally to
//! `(iπ/2) J_m(λ) H¹_m(λ)`.

use std::f64::consts::PI;
use std::io::{Read, Write};
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::LogPoint;
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCurve, Point};
use crate::special::integer_jy;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const EULER_GAMMA: f64 = 0.5772156649015329;
const MAGIC: &[u8; 8] = b"RESOLAB1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadratureDescriptor {
    pub n: usize,
    pub rule: &'static str,
}

#[derive(Debug, Clone)]
pub struct DiscreteOperator {
    pub lambda: LogPoint,
    pub matrix: DMatrix<Complex64>,
    pub curve_id: String,
    pub quadrature: QuadratureDescriptor,
}

/// Node data of a curve, reused across values of `λ`.
#[derive(Debug, Clone)]
pub struct CurveNodes {
    params: Vec<f64>,
    points: Vec<Point>,
    speeds: Vec<f64>,
    /// Kress weights indexed by `|i - j|`, already summed with nothing else.
    log_weights: Vec<f64>,
    curve_id: String,
}

/// Stable FNV-1a tag of the curve coefficients and grid size.
fn curve_id(curve: &BoundaryCurve) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let spec = curve.spec();
    let mut feed = |v: f64| {
        for b in v.to_le_bytes() {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x0100_0000_01b3);
        }
    };
    for c in spec.fourier_x.iter().chain(&spec.fourier_y) {
        feed(c[0]);
        feed(c[1]);
    }
    feed(spec.n_samples as f64);
    format!("{hash:016x}")
}

impl CurveNodes {
    pub fn new(curve: &BoundaryCurve) -> Self {
        let big_n = curve.n_samples();
        let n = big_n / 2;
        let mut params = Vec::with_capacity(big_n);
        let mut points = Vec::with_capacity(big_n);
        let mut speeds = Vec::with_capacity(big_n);
        for j in 0..big_n {
            let s = curve.node(j);
            let c = curve.eval(s);
            params.push(s);
            points.push(c.point);
            speeds.push(c.speed);
        }
        let nf = n as f64;
        let log_weights = (0..big_n)
            .map(|d| {
                let t = d as f64 * PI / nf;
                let sum: f64 = (1..n).map(|m| (m as f64 * t).cos() / m as f64).sum();
                -2.0 * PI / nf * sum - PI / (nf * nf) * (nf * t).cos()
            })
            .collect();
        Self { params, points, speeds, log_weights, curve_id: curve_id(curve) }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn speeds(&self) -> &[f64] {
        &self.speeds
    }

    fn descriptor(&self) -> QuadratureDescriptor {
        QuadratureDescriptor { n: self.len(), rule: "kress-log-split" }
    }

    /// Assemble `S_λ`, and `dS/dλ` when `derivative` is set.
    pub fn assemble(&self, lambda: LogPoint, derivative: bool) -> (DMatrix<Complex64>, Option<DMatrix<Complex64>>) {
        let big_n = self.len();
        let trap = 2.0 * PI / big_n as f64;
        let lam = lambda.project();
        let log_half_lambda = Complex64::new((0.5 * lambda.modulus).ln(), lambda.argument);
        let inv_4pi = 0.25 / PI;
        let rows: Vec<(Vec<Complex64>, Vec<Complex64>)> = (0..big_n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![Complex64::new(0.0, 0.0); big_n];
                let mut drow = if derivative { vec![Complex64::new(0.0, 0.0); big_n] } else { Vec::new() };
                for j in 0..big_n {
                    let sj = self.speeds[j];
                    let dist = i.abs_diff(j);
                    let w_log = self.log_weights[dist];
                    if i == j {
                        let diag = 0.25 * I - (log_half_lambda + EULER_GAMMA + sj.ln()) / (2.0 * PI);
                        let k1 = -inv_4pi;
                        row[j] = (w_log * k1 + trap * diag) * sj;
                        if derivative {
                            drow[j] = trap * (-1.0 / (2.0 * PI * lam)) * sj;
                        }
                        continue;
                    }
                    let r = (self.points[i] - self.points[j]).norm();
                    let z = lambda.scale(r);
                    let (j0, y0) = integer_jy(0, z);
                    let (j0, y0) = (j0.value, y0.value);
                    let k = 0.25 * I * (j0 + I * y0);
                    let k1 = -inv_4pi * j0;
                    let half = 0.5 * (self.params[i] - self.params[j]);
                    let log_sin = (4.0 * half.sin().powi(2)).ln();
                    let k2 = k - k1 * log_sin;
                    row[j] = (w_log * k1 + trap * k2) * sj;
                    if derivative {
                        let (j1, y1) = integer_jy(1, z);
                        let (j1, y1) = (j1.value, y1.value);
                        let dk = -0.25 * I * r * (j1 + I * y1);
                        let dk1 = inv_4pi * r * j1;
                        let dk2 = dk - dk1 * log_sin;
                        drow[j] = (w_log * dk1 + trap * dk2) * sj;
                    }
                }
                (row, drow)
            })
            .collect();
        let s = DMatrix::from_fn(big_n, big_n, |i, j| rows[i].0[j]);
        let ds = derivative.then(|| DMatrix::from_fn(big_n, big_n, |i, j| rows[i].1[j]));
        (s, ds)
    }

    pub fn operator(&self, lambda: LogPoint) -> DiscreteOperator {
        DiscreteOperator {
            lambda,
            matrix: self.assemble(lambda, false).0,
            curve_id: self.curve_id.clone(),
            quadrature: self.descriptor(),
        }
    }
}

pub fn assemble_single_layer(curve: &BoundaryCurve, lambda: LogPoint) -> DiscreteOperator {
    CurveNodes::new(curve).operator(lambda)
}

pub fn smallest_singular_value(op: &DiscreteOperator) -> f64 {
    singular_values(&op.matrix).min()
}

pub(crate) fn singular_values(m: &DMatrix<Complex64>) -> nalgebra::DVector<f64> {
    m.clone().singular_values()
}

impl DiscreteOperator {
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// Row-major complex128 dump behind a 32-byte header:
    /// `"RESOLAB1"`, `N` as `u64`, `|λ|`, `arg λ`, all little-endian.
    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        let n = self.size();
        out.write_all(MAGIC)?;
        out.write_all(&(n as u64).to_le_bytes())?;
        out.write_all(&self.lambda.modulus.to_le_bytes())?;
        out.write_all(&self.lambda.argument.to_le_bytes())?;
        let mut buf = Vec::with_capacity(16 * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = self.matrix[(i, j)];
                buf.extend_from_slice(&v.re.to_le_bytes());
                buf.extend_from_slice(&v.im.to_le_bytes());
            }
        }
        out.write_all(&buf)?;
        Ok(())
    }

    pub fn dump(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_binary(std::io::BufWriter::new(file))
    }
}

/// Read a dump written by [`DiscreteOperator::write_binary`].
pub fn read_binary<R: Read>(mut input: R) -> Result<(LogPoint, DMatrix<Complex64>)> {
    let mut header = [0u8; 32];
    input.read_exact(&mut header)?;
    if &header[..8] != MAGIC {
        return Err(Error::Config("not a RESOLAB1 matrix dump".into()));
    }
    let word = |k: usize| <[u8; 8]>::try_from(&header[8 * k..8 * k + 8]).expect("8 bytes");
    let n = u64::from_le_bytes(word(1)) as usize;
    let lambda = LogPoint::new(f64::from_le_bytes(word(2)), f64::from_le_bytes(word(3)))?;
    let mut body = vec![0u8; 16 * n * n];
    input.read_exact(&mut body)?;
    let at = |k: usize| f64::from_le_bytes(body[8 * k..8 * k + 8].try_into().expect("8 bytes"));
    let m = DMatrix::from_fn(n, n, |i, j| {
        let k = 2 * (i * n + j);
        Complex64::new(at(k), at(k + 1))
    });
    Ok((lambda, m))
}

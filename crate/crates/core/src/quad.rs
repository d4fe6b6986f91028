//! Thin helpers over `gauss-quad` for real and complex integrands.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

pub fn gauss_legendre(points: usize) -> GaussLegendre {
    GaussLegendre::new(NonZeroUsize::new(points.max(1)).expect("nonzero"))
}

/// Nodes and weights mapped onto `[a, b]`.
pub fn mapped_rule(rule: &GaussLegendre, a: f64, b: f64) -> Vec<(f64, f64)> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    rule.as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (mid + half * x, half * w))
        .collect()
}

pub fn integrate_complex<F>(rule: &GaussLegendre, a: f64, b: f64, mut f: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    mapped_rule(rule, a, b).into_iter().map(|(x, w)| f(x) * w).sum()
}

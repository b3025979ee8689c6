//! The symmetrized star product on the two-dimensional scalar extension and
//! its strong closedness: integrating `u * v` over the group reproduces the
//! integral of the pointwise product.

use crate::asympt::a_window;
use crate::quad::gauss_legendre;
use crate::testfn::{gaussian_product_integral, Gauss2};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

/// Star product with the symmetrized (square-root) amplitude at `(a0, z0)`:
/// amplitude `sqrt(prod cosh(2 dA))`, frequencies `-(2/theta) sinh(2 dA)`,
/// normalization `4 / (pi^2 theta^2)`.
pub fn star_hilb2(
    u: &Gauss2,
    v: &Gauss2,
    a0: f64,
    z0: f64,
    theta: f64,
    n: usize,
) -> Complex64 {
    let pi = std::f64::consts::PI;
    let w = a_window(theta, u.pl.max(v.pl));
    let (x1, w1) = gauss_legendre(n, a0 - w, a0 + w);
    let (x2, w2) = gauss_legendre(n, a0 - w, a0 + w);
    let mut total = Complex64::new(0.0, 0.0);
    for (i, &av1) in x1.iter().enumerate() {
        for (j, &av2) in x2.iter().enumerate() {
            let amp = ((2.0 * (av1 - av2)).cosh()
                * (2.0 * (av2 - a0)).cosh()
                * (2.0 * (a0 - av1)).cosh())
            .sqrt();
            let om1 = -(2.0 / theta) * (2.0 * (av2 - a0)).sinh();
            let om2 = -(2.0 / theta) * (2.0 * (a0 - av1)).sinh();
            let ph0 =
                Complex64::new(0.0, -(2.0 / theta) * (2.0 * (av1 - av2)).sinh() * z0).exp();
            total += w1[i]
                * w2[j]
                * amp
                * ph0
                * u.ga(av1)
                * v.ga(av2)
                * u.lint(om1)
                * v.lint(om2);
        }
    }
    (4.0 / (pi * pi * theta * theta)) * total
}

/// Result of the closedness check: the integral of the star product over
/// the group, the closed-form integral of the pointwise product, and their
/// relative deviation.
#[derive(Debug, Clone, Serialize)]
pub struct ClosednessReport {
    pub theta: f64,
    pub integral_star: (f64, f64),
    pub integral_product: f64,
    pub relative_error: f64,
}

/// Integrate `u * v` over `a0 in [-2.2, 2.3], z0 in [-3, 3]` with an
/// `n_outer`-point rule per axis (and `n_inner` points per axis inside each
/// star evaluation), and compare with `int u v`.
pub fn closedness_check(
    u: &Gauss2,
    v: &Gauss2,
    theta: f64,
    n_outer: usize,
    n_inner: usize,
) -> ClosednessReport {
    let (a_nodes, a_w) = gauss_legendre(n_outer, -2.2, 2.3);
    let (z_nodes, z_w) = gauss_legendre(n_outer, -3.0, 3.0);
    let total: Complex64 = a_nodes
        .par_iter()
        .enumerate()
        .map(|(i, &a0)| {
            let mut row = Complex64::new(0.0, 0.0);
            for (j, &z0) in z_nodes.iter().enumerate() {
                row += z_w[j] * star_hilb2(u, v, a0, z0, theta, n_inner);
            }
            a_w[i] * row
        })
        .sum();
    let int_uv = gaussian_product_integral(u, v);
    ClosednessReport {
        theta,
        integral_star: (total.re, total.im),
        integral_product: int_uv,
        relative_error: (total - int_uv).norm() / int_uv.abs(),
    }
}

/// Default test-function pair for the closedness check.
pub fn default_closedness_pair() -> (Gauss2, Gauss2) {
    (
        Gauss2::new(0.0, 0.0, 2.0, 2.0),
        Gauss2::new(0.1, 0.05, 2.2, 1.6),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointwise_limit_is_the_product() {
        let (u, v) = default_closedness_pair();
        let (a0, z0) = (0.02, 0.01);
        let w = star_hilb2(&u, &v, a0, z0, 0.05, 64);
        let uv = u.eval(a0, z0) * v.eval(a0, z0);
        assert!((w - uv).norm() / uv.abs() < 5e-3);
    }

    #[test]
    fn strong_closedness() {
        let (u, v) = default_closedness_pair();
        let rep = closedness_check(&u, &v, 0.4, 48, 48);
        assert!(rep.relative_error < 1e-3, "rel {:.2e}", rep.relative_error);
    }
}

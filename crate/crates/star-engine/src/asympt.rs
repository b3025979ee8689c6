//! Oscillatory star products on the `AN` plane by Gauss–Legendre quadrature,
//! and their small-`theta` asymptotics.
//!
//! Three exponent conventions are implemented side by side so the
//! semiclassical expansion can pin down which one is correct:
//!
//! * `Scaled`: `exp(-(i/theta) S)` with normalization `1/(3 pi^2 theta^2)`
//!   — reproduces `u v + (theta/2i){u, v} + O(theta^2)`;
//! * `TwoIOverTheta`: `exp((2i/theta) S)` with `4/(3 pi^2 theta^2)` —
//!   converges to `u v` but with first-order slope `-(theta/4i){u, v}`;
//! * `ThetaS`: `exp(i theta S)` — does not converge to the pointwise
//!   product at all.

use crate::quad::gauss_legendre;
use crate::testfn::Gauss2;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

/// Exponent convention of the oscillatory kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convention {
    Scaled,
    TwoIOverTheta,
    ThetaS,
}

/// Probe points `(a0, l0)` where the Poisson bracket of the default test
/// functions is bounded away from zero.
pub const PROBES: [(f64, f64); 9] = [
    (0.05, 0.02),
    (-0.1, 0.1),
    (0.1, 0.12),
    (0.0, 0.08),
    (0.05, -0.05),
    (-0.05, 0.15),
    (0.12, 0.05),
    (-0.12, -0.04),
    (0.08, 0.18),
];

/// The deformation parameters used for the extrapolation.
pub const THETAS: [f64; 4] = [0.4, 0.2, 0.1, 0.05];

/// Default test-function pair for asymptotic checks.
pub fn default_pair() -> (Gauss2, Gauss2) {
    (
        Gauss2::new(0.0, 0.0, 2.0, 2.0),
        Gauss2::new(0.15, -0.1, 2.5, 1.8),
    )
}

/// Half-width of the `a`-integration window: the integrand ridge
/// `e^{-omega^2 / (4 p_l)}` with `omega ~ 2 sinh(2 dA)/theta` confines the
/// mass to `sinh(2 W) = 8 theta sqrt(pmin)`.
pub fn a_window(theta: f64, pmin: f64) -> f64 {
    0.5 * (8.0 * theta * pmin.sqrt()).asinh()
}

/// Star product of two separable Gaussians at `(a0, l0)`, integrating the
/// two `l`-variables in closed form and the two `a`-variables by an
/// `n`-point Gauss–Legendre rule per axis.
pub fn star_sl2an(
    u: &Gauss2,
    v: &Gauss2,
    a0: f64,
    l0: f64,
    theta: f64,
    n: usize,
    conv: Convention,
) -> Complex64 {
    let pi = std::f64::consts::PI;
    let pmax = u.pl.max(v.pl);
    // (window, frequency scale s in omega = s sinh(2 dA), normalization)
    let (w, s, norm) = match conv {
        Convention::Scaled => (
            a_window(2.0 * theta, pmax),
            -1.0 / theta,
            1.0 / (3.0 * pi * pi * theta * theta),
        ),
        Convention::TwoIOverTheta => (
            a_window(theta, pmax),
            2.0 / theta,
            4.0 / (3.0 * pi * pi * theta * theta),
        ),
        // no ridge confinement in this convention; fixed window
        Convention::ThetaS => (2.0, theta, 4.0 / (3.0 * pi * pi * theta * theta)),
    };
    let n1 = if conv == Convention::ThetaS { n.max(120) } else { n };
    let (x1, w1) = gauss_legendre(n1, a0 - w, a0 + w);
    let (x2, w2) = gauss_legendre(n1, a0 - w, a0 + w);
    let mut total = Complex64::new(0.0, 0.0);
    for (i, &av1) in x1.iter().enumerate() {
        for (j, &av2) in x2.iter().enumerate() {
            let amp = (av1 - av2).cosh() + (av2 - a0).cosh() + (a0 - av1).cosh();
            let om1 = s * (2.0 * (av2 - a0)).sinh();
            let om2 = s * (2.0 * (a0 - av1)).sinh();
            let ph0 = Complex64::new(0.0, s * (2.0 * (av1 - av2)).sinh() * l0).exp();
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
    norm * total
}

/// Richardson extrapolation of the expansion
/// `star = c0 + i theta s1 + O(theta^2)` from values at [`THETAS`]: for
/// real inputs the odd orders are purely imaginary, so the limit comes from
/// the real parts and the slope from `Im/theta`, each extrapolated in
/// `theta^2` from the two smallest parameters.
pub fn richardson(vals: &[Complex64; 4]) -> (f64, Complex64) {
    let y3 = vals[3].im / THETAS[3];
    let y2 = vals[2].im / THETAS[2];
    let s1 = (4.0 * y3 - y2) / 3.0;
    let c0 = (4.0 * vals[3].re - vals[2].re) / 3.0;
    (c0, Complex64::new(0.0, s1))
}

/// Per-probe relative errors of the extrapolated limit and slope.
#[derive(Debug, Clone, Serialize)]
pub struct SlopeReport {
    pub convention: Convention,
    /// `(probe, rel error of limit vs uv, rel error of slope vs target)`.
    pub per_probe: Vec<((f64, f64), f64, f64)>,
    pub worst: f64,
}

/// First-order coefficient `factor` in
/// `star = uv + factor theta {u, v} + O(theta^2)` for a convention that
/// converges.
pub fn slope_factor(conv: Convention) -> Complex64 {
    match conv {
        // 1/(2i)
        Convention::Scaled => Complex64::new(0.0, -0.5),
        // -1/(4i)
        Convention::TwoIOverTheta => Complex64::new(0.0, 0.25),
        Convention::ThetaS => Complex64::new(0.0, 0.0),
    }
}

/// Run the asymptotic slope test for a convention on the default pair over
/// all probes: extrapolate from the four [`THETAS`] and compare with the
/// pointwise product and the Poisson bracket.
pub fn slope_report(conv: Convention, n: usize) -> SlopeReport {
    let (u, v) = default_pair();
    let factor = slope_factor(conv);
    let per_probe: Vec<((f64, f64), f64, f64)> = PROBES
        .par_iter()
        .map(|&(a0, l0)| {
            let vals: Vec<Complex64> = THETAS
                .iter()
                .map(|&th| star_sl2an(&u, &v, a0, l0, th, n, conv))
                .collect();
            let vals: [Complex64; 4] = [vals[0], vals[1], vals[2], vals[3]];
            let (c0, c1) = richardson(&vals);
            let uv = u.eval(a0, l0) * v.eval(a0, l0);
            let pb = u.dl(a0, l0) * v.da(a0, l0) - u.da(a0, l0) * v.dl(a0, l0);
            let r0 = (c0 - uv).abs() / uv.abs();
            let r1 = if factor.norm() > 0.0 {
                (c1 - factor * pb).norm() / (factor * pb).norm()
            } else {
                f64::NAN
            };
            ((a0, l0), r0, r1)
        })
        .collect();
    let worst = per_probe
        .iter()
        .flat_map(|(_, r0, r1)| [*r0, if r1.is_nan() { 0.0 } else { *r1 }])
        .fold(0.0, f64::max);
    SlopeReport { convention: conv, per_probe, worst }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_convention_reproduces_the_expansion() {
        let rep = slope_report(Convention::Scaled, 64);
        assert!(rep.worst < 0.05, "worst {:.3}", rep.worst);
    }

    #[test]
    fn two_i_over_theta_has_half_the_printed_slope() {
        let rep = slope_report(Convention::TwoIOverTheta, 64);
        assert!(rep.worst < 0.05, "worst {:.3}", rep.worst);
    }

    #[test]
    fn theta_s_convention_has_no_pointwise_limit() {
        let (u, v) = default_pair();
        let (a0, l0) = PROBES[0];
        let uv = u.eval(a0, l0) * v.eval(a0, l0);
        let w = star_sl2an(&u, &v, a0, l0, 0.05, 120, Convention::ThetaS);
        let rel = (w - uv).norm() / uv.abs();
        assert!(rel > 1.0, "unexpected convergence: rel {rel}");
    }

    #[test]
    fn window_shrinks_with_theta() {
        assert!(a_window(0.05, 2.0) < a_window(0.4, 2.0));
        assert!(a_window(0.1, 2.0) > 0.0);
    }
}

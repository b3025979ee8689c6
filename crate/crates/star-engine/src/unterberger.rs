//! Growth-order diagnostics for pulled-back symbols: an action of the
//! half-plane group on a symbol space is admissible when the pullbacks of a
//! Schwartz-class symbol keep uniformly bounded derivatives. The coadjoint
//! action passes; both black-hole actions fail, with derivative growth of a
//! definite exponential order.

use serde::Serialize;

/// The Schwartz-class window `u(z1, z2) = exp(-(z1 - c1)^2 - (z2 - c2)^2)`.
#[derive(Debug, Clone, Copy)]
pub struct GaussianWindow {
    pub c1: f64,
    pub c2: f64,
}

impl GaussianWindow {
    pub fn eval(&self, z1: f64, z2: f64) -> f64 {
        (-(z1 - self.c1).powi(2) - (z2 - self.c2).powi(2)).exp()
    }

    /// `d^j u / d z2^j` in closed (Hermite) form, `j <= 3`.
    pub fn dz2(&self, j: u32, z1: f64, z2: f64) -> f64 {
        let x = z2 - self.c2;
        let h = match j {
            0 => 1.0,
            1 => 2.0 * x,
            2 => 4.0 * x * x - 2.0,
            3 => 8.0 * x * x * x - 12.0 * x,
            _ => panic!("order out of range"),
        };
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sign * h * self.eval(z1, z2)
    }

    /// `d u / d z1`.
    pub fn dz1(&self, z1: f64, z2: f64) -> f64 {
        -2.0 * (z1 - self.c1) * self.eval(z1, z2)
    }
}

/// Default window used across the diagnostics.
pub fn default_window() -> GaussianWindow {
    GaussianWindow { c1: 0.2, c2: -0.1 }
}

/// Which action to diagnose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ActionKind {
    /// Pullback along the coadjoint orbit map:
    /// `f(a, l) = u(yH - 2 yE e^{-2a} l, yE e^{-2a})`.
    Coadjoint,
    /// First black-hole chart: `f(a, l) = u(const, h0 + l e^{2a})`.
    FirstBlackHole,
    /// Second black-hole chart through the compactified coordinates.
    SecondBlackHole,
}

/// Outcome of the admissibility diagnostic.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub action: ActionKind,
    /// Whether the uniform-derivative condition holds.
    pub admissible: bool,
    /// For the failing actions: fitted exponential growth rates of the
    /// derivative sup-norms, by derivative order. For the coadjoint action:
    /// the uniform bound on the first derivative.
    pub detail: Vec<f64>,
}

/// Least-squares slope of `y` against `x`.
fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Sup of `|d_l f|` over a large grid for the coadjoint pullback with
/// momenta `(yh, ye)`; closed form via the chain rule.
pub fn coadjoint_derivative_bound(u: &GaussianWindow, yh: f64, ye: f64) -> f64 {
    let mut sup: f64 = 0.0;
    for i in 0..41 {
        let a = -4.0 + 8.0 * i as f64 / 40.0;
        let w = ye * (-2.0 * a).exp();
        for j in 0..601 {
            let l = -30.0 + 60.0 * j as f64 / 600.0;
            let z1 = yh - 2.0 * w * l;
            // d_l f = u_z1 * (-2 ye e^{-2a})
            sup = sup.max((u.dz1(z1, w) * (-2.0 * w)).abs());
        }
    }
    sup
}

/// Growth exponents of `|d_l^j f|`, `j = 1..3`, for the first black-hole
/// pullback `f(a, l) = u(1/4, h0 + l e^{2a})` along the line
/// `l e^{2a} = 0.05 - h0`; exact derivatives via the Hermite forms.
pub fn first_action_growth(u: &GaussianWindow, h0: f64) -> Vec<f64> {
    let xs: Vec<f64> = (0..8).map(|i| 0.5 + 3.5 * i as f64 / 7.0).collect();
    (1..=3)
        .map(|j| {
            let logs: Vec<f64> = xs
                .iter()
                .map(|&a| {
                    // d_l^j f = e^{2 j a} (d^j u / d z2^j)(1/4, h0 + l e^{2a})
                    let z2 = h0 + (0.05 - h0);
                    ((2.0 * j as f64 * a).exp() * u.dz2(j, 0.25, z2)).abs().ln()
                })
                .collect();
            fit_slope(&xs, &logs)
        })
        .collect()
}

fn zb_k(a: f64, l: f64) -> f64 {
    let e2 = (2.0 * a).exp();
    let arg = 2.0 * (1.0 / e2) * (1.0 + l * e2)
        / (l * l + 2.0 * l / e2 + 1.0 / (e2 * e2) + 1.0);
    arg.clamp(-1.0, 1.0).asin() / 2.0
}

fn zb_n(a: f64, l: f64) -> f64 {
    ((-2.0 * a).exp() - (2.0 * a).exp() * (l * l + 1.0)) / 2.0
}

/// The second black-hole pullback `f(a, l) = u(zb_K, zb_N)`.
pub fn second_action_pullback(u: &GaussianWindow, a: f64, l: f64) -> f64 {
    u.eval(zb_k(a, l), zb_n(a, l))
}

/// Growth exponents of `|d_a^n f|`, `n = 1..3`, for the second black-hole
/// pullback along `l = e^{-2a}` as `a -> -infinity`, by central finite
/// differences with a step proportional to the local variation scale.
pub fn second_action_growth(u: &GaussianWindow) -> Vec<f64> {
    let xs: Vec<f64> = (0..6).map(|i| 1.5 + 2.5 * i as f64 / 5.0).collect();
    let f = |a: f64, l: f64| second_action_pullback(u, a, l);
    (1..=3)
        .map(|n| {
            let logs: Vec<f64> = xs
                .iter()
                .map(|&x| {
                    let (a, l) = (-x, (2.0 * x).exp());
                    let h = 1e-2 * (-2.0 * x).exp();
                    let d = match n {
                        1 => (f(a + h, l) - f(a - h, l)) / (2.0 * h),
                        2 => (f(a + h, l) - 2.0 * f(a, l) + f(a - h, l)) / (h * h),
                        _ => {
                            (f(a + 2.0 * h, l) - 2.0 * f(a + h, l) + 2.0 * f(a - h, l)
                                - f(a - 2.0 * h, l))
                                / (2.0 * h * h * h)
                        }
                    };
                    d.abs().ln()
                })
                .collect();
            fit_slope(&xs, &logs)
        })
        .collect()
}

/// Run the admissibility diagnostic for one action with the default window
/// and momenta.
pub fn unterberger_check(action: ActionKind) -> GrowthReport {
    let u = default_window();
    match action {
        ActionKind::Coadjoint => {
            let bound = coadjoint_derivative_bound(&u, 0.3, 0.7);
            GrowthReport { action, admissible: bound < 2.0, detail: vec![bound] }
        }
        ActionKind::FirstBlackHole => {
            let slopes = first_action_growth(&u, 0.3);
            let diverges = slopes.iter().all(|&s| s > 1.0);
            GrowthReport { action, admissible: !diverges, detail: slopes }
        }
        ActionKind::SecondBlackHole => {
            let slopes = second_action_growth(&u);
            let diverges = slopes.windows(2).all(|w| w[1] > w[0] + 1.0) && slopes[0] > 1.0;
            GrowthReport { action, admissible: !diverges, detail: slopes }
        }
    }
}

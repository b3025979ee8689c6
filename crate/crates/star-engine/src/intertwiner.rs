//! The spectral intertwiner `T_theta` between the deformed generator and
//! the plain derivative: on the Fourier side `T` substitutes
//! `alpha -> arcsinh(2 theta alpha) / (2 theta)`, its inverse substitutes
//! `alpha -> sinh(2 theta alpha) / (2 theta)`, and conjugation carries the
//! multiplier `(i / 2 theta) sinh(2 theta alpha)` to `d/dl`.

use crate::quad::gauss_legendre;
use num_complex::Complex64;
use rayon::prelude::*;

/// Which substitution to place inside `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `alpha -> arcsinh(2 theta alpha) / (2 theta)` — the working
    /// direction.
    Arcsinh,
    /// `alpha -> sinh(2 theta alpha) / (2 theta)` — the opposite direction,
    /// kept to demonstrate that it fails.
    Sinh,
}

/// Quadrature Fourier analysis on `[-l_width, l_width]` (function side) and
/// `[-a_width, a_width]` (spectral side).
pub struct Intertwiner {
    pub theta: f64,
    l_nodes: Vec<f64>,
    l_weights: Vec<f64>,
    s_nodes: Vec<f64>,
    s_weights: Vec<f64>,
}

impl Intertwiner {
    pub fn new(theta: f64, n_l: usize, l_width: f64, n_s: usize, s_width: f64) -> Self {
        let (l_nodes, l_weights) = gauss_legendre(n_l, -l_width, l_width);
        let (s_nodes, s_weights) = gauss_legendre(n_s, -s_width, s_width);
        Intertwiner { theta, l_nodes, l_weights, s_nodes, s_weights }
    }

    /// Desk-scale configuration: 1400 nodes on `[-15, 15]` against 1400
    /// spectral nodes on `[-12, 12]`.
    pub fn desk(theta: f64) -> Self {
        Self::new(theta, 1400, 15.0, 1400, 12.0)
    }

    pub fn l_nodes(&self) -> &[f64] {
        &self.l_nodes
    }

    /// Sample a function on the `l`-nodes.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<Complex64> {
        self.l_nodes
            .iter()
            .map(|&l| Complex64::new(f(l), 0.0))
            .collect()
    }

    /// `(1/sqrt(2 pi)) int e^{-i alpha l} f(l) dl` at the given frequencies.
    pub fn forward(&self, vals: &[Complex64], alphas: &[f64]) -> Vec<Complex64> {
        let norm = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        alphas
            .par_iter()
            .map(|&al| {
                let mut s = Complex64::new(0.0, 0.0);
                for (k, &l) in self.l_nodes.iter().enumerate() {
                    s += self.l_weights[k] * vals[k] * Complex64::new(0.0, -al * l).exp();
                }
                norm * s
            })
            .collect()
    }

    /// `(1/sqrt(2 pi)) int e^{i alpha l} fhat(alpha) d alpha` back on the
    /// `l`-nodes.
    pub fn inverse(&self, spec: &[Complex64]) -> Vec<Complex64> {
        let norm = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        self.l_nodes
            .par_iter()
            .map(|&l| {
                let mut s = Complex64::new(0.0, 0.0);
                for (k, &al) in self.s_nodes.iter().enumerate() {
                    s += self.s_weights[k] * spec[k] * Complex64::new(0.0, al * l).exp();
                }
                norm * s
            })
            .collect()
    }

    fn substituted(&self, sub: Substitution) -> Vec<f64> {
        self.s_nodes
            .iter()
            .map(|&al| match sub {
                Substitution::Arcsinh => (2.0 * self.theta * al).asinh() / (2.0 * self.theta),
                Substitution::Sinh => (2.0 * self.theta * al).sinh() / (2.0 * self.theta),
            })
            .collect()
    }

    /// Apply `T` with the chosen substitution: evaluate the spectrum at the
    /// substituted frequencies and synthesize back.
    pub fn apply_t(&self, vals: &[Complex64], sub: Substitution) -> Vec<Complex64> {
        let spec = self.forward(vals, &self.substituted(sub));
        self.inverse(&spec)
    }

    /// The deformed generator: multiplier `(i / 2 theta) sinh(2 theta
    /// alpha)` on the spectral side.
    pub fn apply_rho_e(&self, vals: &[Complex64]) -> Vec<Complex64> {
        let spec = self.forward(vals, &self.s_nodes);
        let mult: Vec<Complex64> = self
            .s_nodes
            .iter()
            .zip(&spec)
            .map(|(&al, &s)| {
                Complex64::new(0.0, (2.0 * self.theta * al).sinh() / (2.0 * self.theta)) * s
            })
            .collect();
        self.inverse(&mult)
    }

    /// Relative sup-norm residual of `T rho T^{-1} f = f'` on the Gaussian
    /// `f = e^{-l^2}`, with `T` carrying the given substitution (and its
    /// inverse the opposite one).
    pub fn conjugation_residual(&self, sub: Substitution) -> f64 {
        let inv_sub = match sub {
            Substitution::Arcsinh => Substitution::Sinh,
            Substitution::Sinh => Substitution::Arcsinh,
        };
        let f = self.sample(|l| (-l * l).exp());
        let df: Vec<f64> = self.l_nodes.iter().map(|&l| -2.0 * l * (-l * l).exp()).collect();
        let out = self.apply_t(&self.apply_rho_e(&self.apply_t(&f, inv_sub)), sub);
        let scale = df.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        out.iter()
            .zip(&df)
            .map(|(o, &d)| (o - d).norm())
            .fold(0.0f64, f64::max)
            / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_round_trip() {
        let t = Intertwiner::new(0.1, 400, 12.0, 400, 10.0);
        let f = t.sample(|l| (-l * l).exp());
        let spec = t.forward(&f, &t.s_nodes.clone());
        let back = t.inverse(&spec);
        let worst = f
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(worst < 1e-10, "round trip {worst}");
    }

    #[test]
    fn gaussian_transform_is_analytic() {
        // fhat(alpha) = e^{-alpha^2/4} / sqrt(2) for f = e^{-l^2}
        let t = Intertwiner::new(0.1, 400, 12.0, 400, 10.0);
        let f = t.sample(|l| (-l * l).exp());
        let alphas = [0.0, 0.5, -1.3, 2.0];
        let spec = t.forward(&f, &alphas);
        for (i, &al) in alphas.iter().enumerate() {
            let want = (-al * al / 4.0).exp() / 2.0f64.sqrt();
            assert!((spec[i].re - want).abs() < 1e-12 && spec[i].im.abs() < 1e-12);
        }
    }

    #[test]
    fn conjugation_works_with_arcsinh_only() {
        let t = Intertwiner::desk(0.1);
        let good = t.conjugation_residual(Substitution::Arcsinh);
        assert!(good < 1e-4, "arcsinh residual {good:.2e}");
        let bad = t.conjugation_residual(Substitution::Sinh);
        assert!(bad > 1e-2, "sinh residual unexpectedly small: {bad:.2e}");
    }
}

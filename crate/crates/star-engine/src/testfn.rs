//! Separable Gaussian test functions on the half-plane coordinates `(a, l)`
//! with analytic partial Fourier transform in `l`.

use num_complex::Complex64;

/// `u(a, l) = exp(-pa (a - ca)^2) exp(-pl (l - cl)^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauss2 {
    pub ca: f64,
    pub cl: f64,
    pub pa: f64,
    pub pl: f64,
}

impl Gauss2 {
    pub fn new(ca: f64, cl: f64, pa: f64, pl: f64) -> Self {
        assert!(pa > 0.0 && pl > 0.0, "widths must be positive");
        Gauss2 { ca, cl, pa, pl }
    }

    /// Pointwise value.
    pub fn eval(&self, a: f64, l: f64) -> f64 {
        (-self.pa * (a - self.ca).powi(2) - self.pl * (l - self.cl).powi(2)).exp()
    }

    /// The `a`-factor alone.
    pub fn ga(&self, a: f64) -> f64 {
        (-self.pa * (a - self.ca).powi(2)).exp()
    }

    /// `int exp(-pl (l - cl)^2) e^{i om l} dl` in closed form.
    pub fn lint(&self, om: f64) -> Complex64 {
        let amp = (std::f64::consts::PI / self.pl).sqrt() * (-om * om / (4.0 * self.pl)).exp();
        amp * Complex64::new(0.0, om * self.cl).exp()
    }

    /// `d u / d a`.
    pub fn da(&self, a: f64, l: f64) -> f64 {
        -2.0 * self.pa * (a - self.ca) * self.eval(a, l)
    }

    /// `d u / d l`.
    pub fn dl(&self, a: f64, l: f64) -> f64 {
        -2.0 * self.pl * (l - self.cl) * self.eval(a, l)
    }
}

/// Closed-form `int u v` over the plane for two separable Gaussians.
pub fn gaussian_product_integral(u: &Gauss2, v: &Gauss2) -> f64 {
    let pi = std::f64::consts::PI;
    let fa = (pi / (u.pa + v.pa)).sqrt()
        * (-u.pa * v.pa * (u.ca - v.ca).powi(2) / (u.pa + v.pa)).exp();
    let fl = (pi / (u.pl + v.pl)).sqrt()
        * (-u.pl * v.pl * (u.cl - v.cl).powi(2) / (u.pl + v.pl)).exp();
    fa * fl
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::gauss_legendre;
    use approx::assert_relative_eq;

    #[test]
    fn lint_matches_quadrature() {
        let u = Gauss2::new(0.0, -0.1, 2.0, 1.8);
        let (x, w) = gauss_legendre(200, -12.0, 12.0);
        for om in [0.0, 0.7, -2.3, 5.0] {
            let mut s = Complex64::new(0.0, 0.0);
            for (xi, wi) in x.iter().zip(&w) {
                s += wi
                    * (-u.pl * (xi - u.cl).powi(2)).exp()
                    * Complex64::new(0.0, om * xi).exp();
            }
            let a = u.lint(om);
            assert_relative_eq!(s.re, a.re, epsilon = 1e-12);
            assert_relative_eq!(s.im, a.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn product_integral_matches_quadrature() {
        let u = Gauss2::new(0.0, 0.0, 2.0, 2.0);
        let v = Gauss2::new(0.1, 0.05, 2.2, 1.6);
        let (xa, wa) = gauss_legendre(120, -8.0, 8.0);
        let (xl, wl) = gauss_legendre(120, -8.0, 8.0);
        let mut s = 0.0;
        for (ai, wi) in xa.iter().zip(&wa) {
            for (li, wj) in xl.iter().zip(&wl) {
                s += wi * wj * u.eval(*ai, *li) * v.eval(*ai, *li);
            }
        }
        assert_relative_eq!(s, gaussian_product_integral(&u, &v), epsilon = 1e-12);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let u = Gauss2::new(0.15, -0.1, 2.5, 1.8);
        let h = 1e-6;
        let (a, l) = (0.3, -0.2);
        assert_relative_eq!(
            u.da(a, l),
            (u.eval(a + h, l) - u.eval(a - h, l)) / (2.0 * h),
            epsilon = 1e-8
        );
        assert_relative_eq!(
            u.dl(a, l),
            (u.eval(a, l + h) - u.eval(a, l - h)) / (2.0 * h),
            epsilon = 1e-8
        );
    }
}

//! Gauss–Legendre quadrature on an interval.

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[lo, hi]`.
///
/// Roots of the Legendre polynomial `P_n` are found by Newton iteration from
/// the Chebyshev initial guess; weights are `2 / ((1 - x^2) P_n'(x)^2)`
/// rescaled to the interval.
pub fn gauss_legendre(n: usize, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "need at least two nodes");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // initial guess: Chebyshev-like root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_n' by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    let (c, h) = (0.5 * (hi + lo), 0.5 * (hi - lo));
    for i in 0..n {
        nodes[i] = c + h * nodes[i];
        weights[i] *= h;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integrates_polynomials_exactly() {
        // an n-point rule is exact through degree 2n - 1
        let (x, w) = gauss_legendre(5, -1.0, 1.0);
        for deg in 0..10 {
            let got: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(deg)).sum();
            let want = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            assert_relative_eq!(got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn integrates_gaussian_on_shifted_interval() {
        let (x, w) = gauss_legendre(64, -6.0, 8.0);
        let got: f64 = x
            .iter()
            .zip(&w)
            .map(|(xi, wi)| wi * (-(xi - 1.0) * (xi - 1.0)).exp())
            .sum();
        assert_relative_eq!(got, std::f64::consts::PI.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn large_rule_is_well_conditioned() {
        let (x, w) = gauss_legendre(1400, -15.0, 15.0);
        assert_eq!(x.len(), 1400);
        assert!(w.iter().all(|&wi| wi > 0.0));
        let total: f64 = w.iter().sum();
        assert_relative_eq!(total, 30.0, epsilon = 1e-10);
    }
}

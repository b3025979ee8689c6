//! Three-point oscillatory kernel on the extension `F(id, 0, 2)` and its
//! transport to `F(X, 0, 2)`.
//!
//! The base kernel on `F = F(id, 0, 2)` (coordinates `I(a, x, z)`, `dim V =
//! 2n`) has
//!
//! * amplitude `cosh(2(a1 - a2)) [cosh(a2 - a0) cosh(a0 - a1)]^{2n}`,
//! * phase `(2/theta) [ S_V(cosh(a1 - a2) x0, cosh(a2 - a0) x1,
//!   cosh(a0 - a1) x2) - sum_cyc sinh(2(a0 - a1)) z2 ]`,
//!
//! where `S_V(x0, x1, x2) = Omega(x0, x1) + Omega(x1, x2) + Omega(x2, x0)`.
//! Both pieces are invariant under left translation and under the symplectic
//! action `Phi_M(I(a, v, z)) = I(a, Mv, z)`.
//!
//! For `X` with `X - id` symplectic, the diffeomorphism
//! `phi(J(a, v, z)) = I(a, e^{a(X - id)} v, z)` transports the kernel to a
//! left-invariant kernel on `F'(X, 0, 2)`.

use crate::extension::HeisenbergExtension;
use crate::group::ExtensionGroup;
use lie_core::FMat;

/// The base kernel on `F(id, 0, 2)` with `dim V = 2n`.
#[derive(Debug, Clone)]
pub struct ProductKernel {
    pub n: usize,
    pub theta: f64,
    omega: FMat,
}

/// Value of a kernel at a triple: amplitude and (real) phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub amplitude: f64,
    pub phase: f64,
}

fn omega_of(om: &FMat, m: usize, v: &[f64], w: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..m {
        for j in 0..m {
            s += v[i] * om.get(i, j) * w[j];
        }
    }
    s
}

impl ProductKernel {
    pub fn new(n: usize, theta: f64, omega: FMat) -> Self {
        ProductKernel { n, theta, omega }
    }

    /// Evaluate at three group points in `I(a, x, z)` coordinates.
    pub fn eval(&self, g0: &[f64], g1: &[f64], g2: &[f64]) -> KernelValue {
        let m = 2 * self.n;
        let (a0, a1, a2) = (g0[0], g1[0], g2[0]);
        let (z0, z1, z2) = (g0[m + 1], g1[m + 1], g2[m + 1]);
        let amplitude = (2.0 * (a1 - a2)).cosh()
            * ((a2 - a0).cosh() * (a0 - a1).cosh()).powi(m as i32);
        let x0: Vec<f64> = g0[1..=m].iter().map(|v| v * (a1 - a2).cosh()).collect();
        let x1: Vec<f64> = g1[1..=m].iter().map(|v| v * (a2 - a0).cosh()).collect();
        let x2: Vec<f64> = g2[1..=m].iter().map(|v| v * (a0 - a1).cosh()).collect();
        let s_v = omega_of(&self.omega, m, &x0, &x1)
            + omega_of(&self.omega, m, &x1, &x2)
            + omega_of(&self.omega, m, &x2, &x0);
        let cyc = (2.0 * (a0 - a1)).sinh() * z2
            + (2.0 * (a1 - a2)).sinh() * z0
            + (2.0 * (a2 - a0)).sinh() * z1;
        KernelValue {
            amplitude,
            phase: (2.0 / self.theta) * (s_v - cyc),
        }
    }
}

/// The transported kernel on `F'(X, 0, 2)`: `K' = phi^* K` with
/// `phi(J(a, v, z)) = I(a, e^{a (X - id)} v, z)`.
#[derive(Debug, Clone)]
pub struct TwistedKernel {
    pub base: ProductKernel,
    x_bar: FMat,
}

/// Build the twisted kernel for an extension `F(X, 0, 2)` (so `d = 1`,
/// `mu = 0`); for `X = id` the twist is the identity.
pub fn twist_kernel(base: ProductKernel, ext: &HeisenbergExtension) -> Option<TwistedKernel> {
    use num_traits::Zero;
    if !ext.mu.iter().all(|c| c.is_zero()) || ext.d != lie_core::qi(1) || ext.n != base.n {
        return None;
    }
    Some(TwistedKernel {
        base,
        x_bar: FMat::from_qmat(&ext.x_bar()),
    })
}

impl TwistedKernel {
    /// The transport of a single point from `J` to `I` coordinates.
    pub fn transport(&self, g: &[f64]) -> Vec<f64> {
        let m = 2 * self.base.n;
        let e = self.x_bar.scale(g[0]).expm();
        let mut out = g.to_vec();
        for i in 0..m {
            out[1 + i] = (0..m).map(|j| e.get(i, j) * g[1 + j]).sum();
        }
        out
    }

    /// Evaluate at three points in `J(a, v, z)` coordinates.
    pub fn eval(&self, g0: &[f64], g1: &[f64], g2: &[f64]) -> KernelValue {
        self.base.eval(
            &self.transport(g0),
            &self.transport(g1),
            &self.transport(g2),
        )
    }

    /// The symplectic action on `F'`:
    /// `Phi'_M(J(a, v, z)) = J(a, e^{-a X̄} M e^{a X̄} v, z)`.
    pub fn sp_action(&self, mmat: &FMat, g: &[f64]) -> Vec<f64> {
        let m = 2 * self.base.n;
        let fwd = self.x_bar.scale(g[0]).expm();
        let bwd = self.x_bar.scale(-g[0]).expm();
        let conj = bwd.mul(&mmat.mul(&fwd));
        let mut out = g.to_vec();
        for i in 0..m {
            out[1 + i] = (0..m).map(|j| conj.get(i, j) * g[1 + j]).sum();
        }
        out
    }
}

/// Maximum invariance residual of a kernel under left translation by `h`,
/// over the supplied triples: compares amplitude and phase of `K(h g_i)`
/// with `K(g_i)`.
pub fn left_invariance_residual<K>(
    kernel: &K,
    group: &ExtensionGroup,
    h: &[f64],
    triples: &[[Vec<f64>; 3]],
) -> f64
where
    K: Fn(&[f64], &[f64], &[f64]) -> KernelValue,
{
    let mut worst: f64 = 0.0;
    for [g0, g1, g2] in triples {
        let v = kernel(g0, g1, g2);
        let w = kernel(
            &group.multiply(h, g0),
            &group.multiply(h, g1),
            &group.multiply(h, g2),
        );
        worst = worst
            .max((v.amplitude - w.amplitude).abs())
            .max((v.phase - w.phase).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::extension::{build_extension, standard_omega};
    use lie_core::{qi, qr, Q, QMat};
    use rand::{Rng, SeedableRng};

    fn rng() -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(2026)
    }

    fn sample(r: &mut impl Rng, dim: usize) -> Vec<f64> {
        (0..dim).map(|_| r.gen_range(-0.8..0.8)).collect()
    }

    fn triples(r: &mut impl Rng, dim: usize, count: usize) -> Vec<[Vec<f64>; 3]> {
        (0..count)
            .map(|_| [sample(r, dim), sample(r, dim), sample(r, dim)])
            .collect()
    }

    #[test]
    fn base_kernel_left_invariant() {
        let ext = build_extension(1, QMat::identity(2), vec![Q::zero(); 2], qi(1)).unwrap();
        let group = ExtensionGroup::new(&ext).unwrap();
        let kernel = ProductKernel::new(1, 0.3, FMat::from_qmat(&standard_omega(1)));
        let mut r = rng();
        let tr = triples(&mut r, 4, 200);
        for _ in 0..5 {
            let h = sample(&mut r, 4);
            let res = left_invariance_residual(
                &|a: &[f64], b: &[f64], c: &[f64]| kernel.eval(a, b, c),
                &group,
                &h,
                &tr,
            );
            assert!(res < 1e-11, "residual {res}");
        }
    }

    #[test]
    fn base_kernel_sp_invariant() {
        let kernel = ProductKernel::new(1, 0.3, FMat::from_qmat(&standard_omega(1)));
        let mut m = FMat::identity(2);
        m.set(0, 0, 0.6);
        m.set(0, 1, 0.8);
        m.set(1, 0, -0.8);
        m.set(1, 1, 0.6);
        // rotation is symplectic; Phi_M acts on the x part only
        let mut r = rng();
        for _ in 0..200 {
            let (g0, g1, g2) = (sample(&mut r, 4), sample(&mut r, 4), sample(&mut r, 4));
            let act = |g: &[f64]| {
                let mut o = g.to_vec();
                o[1] = m.get(0, 0) * g[1] + m.get(0, 1) * g[2];
                o[2] = m.get(1, 0) * g[1] + m.get(1, 1) * g[2];
                o
            };
            let v = kernel.eval(&g0, &g1, &g2);
            let w = kernel.eval(&act(&g0), &act(&g1), &act(&g2));
            assert!((v.amplitude - w.amplitude).abs() < 1e-12);
            assert!((v.phase - w.phase).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_twist_is_trivial() {
        let ext = build_extension(1, QMat::identity(2), vec![Q::zero(); 2], qi(1)).unwrap();
        let kernel = ProductKernel::new(1, 0.25, FMat::from_qmat(&standard_omega(1)));
        let tw = twist_kernel(kernel.clone(), &ext).unwrap();
        let mut r = rng();
        for _ in 0..20 {
            let g = sample(&mut r, 4);
            let t = tw.transport(&g);
            for i in 0..4 {
                assert!((g[i] - t[i]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn twisted_kernel_left_invariant() {
        // X = diag(3/2, 1/2): X - id = diag(1/2, -1/2) symplectic
        let mut x = QMat::zeros(2, 2);
        x[(0, 0)] = qr(3, 2);
        x[(1, 1)] = qr(1, 2);
        let ext = build_extension(1, x, vec![Q::zero(); 2], qi(1)).unwrap();
        let group = ExtensionGroup::new(&ext).unwrap();
        let kernel = ProductKernel::new(1, 0.3, FMat::from_qmat(&standard_omega(1)));
        let tw = twist_kernel(kernel, &ext).unwrap();
        let mut r = rng();
        let tr = triples(&mut r, 4, 1000);
        let h = sample(&mut r, 4);
        let res = left_invariance_residual(
            &|a: &[f64], b: &[f64], c: &[f64]| tw.eval(a, b, c),
            &group,
            &h,
            &tr,
        );
        assert!(res < 1e-11, "twisted residual {res}");
    }

    #[test]
    fn twisted_kernel_sp_invariant() {
        let mut x = QMat::zeros(2, 2);
        x[(0, 0)] = qr(3, 2);
        x[(1, 1)] = qr(1, 2);
        let ext = build_extension(1, x, vec![Q::zero(); 2], qi(1)).unwrap();
        let kernel = ProductKernel::new(1, 0.4, FMat::from_qmat(&standard_omega(1)));
        let tw = twist_kernel(kernel, &ext).unwrap();
        let mut m = FMat::identity(2);
        m.set(0, 1, 0.7); // unipotent shear, symplectic
        let mut r = rng();
        for _ in 0..200 {
            let (g0, g1, g2) = (sample(&mut r, 4), sample(&mut r, 4), sample(&mut r, 4));
            let v = tw.eval(&g0, &g1, &g2);
            let w = tw.eval(
                &tw.sp_action(&m, &g0),
                &tw.sp_action(&m, &g1),
                &tw.sp_action(&m, &g2),
            );
            assert!((v.amplitude - w.amplitude).abs() < 1e-12);
            assert!((v.phase - w.phase).abs() < 1e-12);
        }
    }
}

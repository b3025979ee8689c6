//! Group law of an extension with `mu = 0` in the second-kind coordinates
//! `I(a, v, z) = e^{aA} e^{v + zE}`:
//!
//! `(a,v,z) (a',v',z') = (a + a', e^{-a'X} v + v',
//!  e^{-2da'} z + z' + (1/2) Omega(e^{-a'X} v, v'))`.
//!
//! The law is cross-checked against a faithful matrix realization for
//! diagonal `X` in the tests.

use crate::extension::HeisenbergExtension;
use lie_core::FMat;

/// Floating-point group structure on an extension with `mu = 0`.
#[derive(Debug, Clone)]
pub struct ExtensionGroup {
    pub n: usize,
    /// `X` as a float matrix.
    pub x: FMat,
    /// Derivation coefficient `d`.
    pub d: f64,
    /// Symplectic form on `V`.
    pub omega: FMat,
}

impl ExtensionGroup {
    /// Group structure of `ext`; requires `mu = 0`.
    pub fn new(ext: &HeisenbergExtension) -> Option<Self> {
        use num_traits::Zero;
        if !ext.mu.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(ExtensionGroup {
            n: ext.n,
            x: FMat::from_qmat(&ext.x),
            d: rat_f64(&ext.d),
            omega: FMat::from_qmat(&ext.omega_v),
        })
    }

    /// Coordinate dimension `2n + 2`.
    pub fn dim(&self) -> usize {
        2 * self.n + 2
    }

    fn apply(m: &FMat, v: &[f64]) -> Vec<f64> {
        let k = v.len();
        (0..k)
            .map(|i| (0..k).map(|j| m.get(i, j) * v[j]).sum())
            .collect()
    }

    fn omega_of(&self, v: &[f64], w: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..2 * self.n {
            for j in 0..2 * self.n {
                s += v[i] * self.omega.get(i, j) * w[j];
            }
        }
        s
    }

    /// Product of `(a, v, z)` coordinate vectors.
    pub fn multiply(&self, p: &[f64], q: &[f64]) -> Vec<f64> {
        let m = 2 * self.n;
        let (a1, z1) = (p[0], p[m + 1]);
        let (a2, z2) = (q[0], q[m + 1]);
        let shift = self.x.scale(-a2).expm();
        let sv = Self::apply(&shift, &p[1..=m]);
        let mut out = vec![0.0; self.dim()];
        out[0] = a1 + a2;
        for i in 0..m {
            out[1 + i] = sv[i] + q[1 + i];
        }
        out[m + 1] = (-2.0 * self.d * a2).exp() * z1 + z2
            + 0.5 * self.omega_of(&sv, &q[1..=m]);
        out
    }

    /// Inverse: `(a, v, z)^{-1} = (-a, -e^{aX} v, -e^{2da} z)`.
    pub fn inverse(&self, p: &[f64]) -> Vec<f64> {
        let m = 2 * self.n;
        let back = self.x.scale(p[0]).expm();
        let bv = Self::apply(&back, &p[1..=m]);
        let mut out = vec![0.0; self.dim()];
        out[0] = -p[0];
        for i in 0..m {
            out[1 + i] = -bv[i];
        }
        out[m + 1] = -(2.0 * self.d * p[0]).exp() * p[m + 1];
        out
    }
}

/// Exact rational to f64.
pub fn rat_f64(q: &lie_core::Q) -> f64 {
    use num_traits::ToPrimitive;
    q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap()
}

//! Jump between exact symplectic forms on the same coadjoint orbit: when
//! `xi . Ad(g) = eta`, the automorphism `sigma = AD(g^{-1})` pulls the form
//! `delta eta` back to `delta xi`.

use crate::extension::ExtensionError;
use lie_core::{FMat, LieAlgebraBasis};

/// `Ad(exp(x))` in f64 via the exponential of the adjoint matrix.
pub fn ad_exp(alg: &LieAlgebraBasis, coeffs: &[f64]) -> FMat {
    let dim = alg.dim();
    let mut ad = FMat::zeros(dim);
    // ad matrix of sum coeffs[i] X_i: column j is [x, X_j]
    for j in 0..dim {
        for k in 0..dim {
            let mut entry = 0.0;
            for i in 0..dim {
                entry += coeffs[i]
                    * crate::group::rat_f64(&alg.structure_constants[i][j][k]);
            }
            ad.set(k, j, entry);
        }
    }
    ad.expm()
}

/// Result of the jump: the transported covector and the verification
/// residual of the pulled-back coboundary forms.
#[derive(Debug, Clone)]
pub struct JumpReport {
    /// `eta = xi . Ad(g)`.
    pub eta: Vec<f64>,
    /// `sigma = Ad(g^{-1})` (the differential of `AD(g^{-1})` at identity).
    pub sigma: FMat,
    /// Max over basis pairs of
    /// `|delta eta (sigma u, sigma w) - delta xi (u, w)|`.
    pub residual: f64,
}

/// Given an algebra, a covector `xi`, and `g = exp(g1) exp(g2) ...`
/// (factors as coefficient vectors), compute `eta = xi . Ad(g)` and verify
/// that `sigma = Ad(g^{-1})` intertwines the coboundaries
/// `delta xi (u, w) = xi([u, w])` and `delta eta`.
pub fn coadjoint_jump(
    alg: &LieAlgebraBasis,
    xi: &[f64],
    factors: &[Vec<f64>],
) -> Result<JumpReport, ExtensionError> {
    let dim = alg.dim();
    let mut adg = FMat::identity(dim);
    let mut adg_inv = FMat::identity(dim);
    for f in factors {
        adg = adg.mul(&ad_exp(alg, f));
        let neg: Vec<f64> = f.iter().map(|x| -x).collect();
        adg_inv = ad_exp(alg, &neg).mul(&adg_inv);
    }
    let eta: Vec<f64> = (0..dim)
        .map(|j| (0..dim).map(|i| xi[i] * adg.get(i, j)).sum())
        .collect();
    // delta xi (u, w) = xi([u, w]) on basis pairs, with u, w pushed through
    // sigma on the eta side
    let delta = |cov: &[f64], u: &[f64], w: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    s += u[i]
                        * w[j]
                        * crate::group::rat_f64(&alg.structure_constants[i][j][k])
                        * cov[k];
                }
            }
        }
        s
    };
    let mut residual: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let u: Vec<f64> = (0..dim).map(|k| if k == i { 1.0 } else { 0.0 }).collect();
            let w: Vec<f64> = (0..dim).map(|k| if k == j { 1.0 } else { 0.0 }).collect();
            let su: Vec<f64> = (0..dim)
                .map(|r| (0..dim).map(|c| adg_inv.get(r, c) * u[c]).sum())
                .collect();
            let sw: Vec<f64> = (0..dim)
                .map(|r| (0..dim).map(|c| adg_inv.get(r, c) * w[c]).sum())
                .collect();
            residual = residual.max((delta(&eta, &su, &sw) - delta(xi, &u, &w)).abs());
        }
    }
    if residual > 1e-8 {
        return Err(ExtensionError::OrbitCondition(residual));
    }
    Ok(JumpReport { eta, sigma: adg_inv, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::extension::build_extension;
    use approx::assert_relative_eq;
    use lie_core::{qr, Q, QMat};
    use rand::{Rng, SeedableRng};

    fn r1() -> LieAlgebraBasis {
        let mut x = QMat::zeros(2, 2);
        x[(0, 0)] = lie_core::qi(1);
        x[(1, 1)] = qr(1, 2);
        build_extension(1, x, vec![Q::zero(); 2], qr(3, 4))
            .unwrap()
            .algebra()
            .unwrap()
    }

    #[test]
    fn identity_jump() {
        let alg = r1();
        let xi = [0.0, 0.0, 0.0, 1.0];
        let rep = coadjoint_jump(&alg, &xi, &[vec![0.0; 4]]).unwrap();
        assert!(rep.residual < 1e-14);
        for i in 0..4 {
            assert_relative_eq!(rep.eta[i], xi[i], epsilon = 1e-14);
        }
    }

    #[test]
    fn center_covector_scales_exponentially() {
        // on F(diag(1,1/2), 0, 3/4): E* . Ad(e^{aA}) = e^{3a/2} on the
        // center direction
        let alg = r1();
        let xi = [0.0, 0.0, 0.0, 1.0];
        let a = 0.7;
        let rep = coadjoint_jump(&alg, &xi, &[vec![a, 0.0, 0.0, 0.0]]).unwrap();
        assert_relative_eq!(rep.eta[3], (1.5 * a).exp(), epsilon = 1e-12);
        // the e-directions pick up nothing from a pure A factor
        assert!(rep.eta[1].abs() < 1e-14 && rep.eta[2].abs() < 1e-14);
    }

    #[test]
    fn random_jumps_verify() {
        let alg = r1();
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let xi: Vec<f64> = (0..4).map(|_| r.gen_range(-1.0..1.0)).collect();
            let f1: Vec<f64> = (0..4).map(|_| r.gen_range(-0.5..0.5)).collect();
            let f2: Vec<f64> = (0..4).map(|_| r.gen_range(-0.5..0.5)).collect();
            let rep = coadjoint_jump(&alg, &xi, &[f1, f2]).unwrap();
            assert!(rep.residual < 1e-10, "residual {}", rep.residual);
        }
    }
}

//! Three-point oscillatory kernels on low-dimensional solvable groups and
//! their invariance/cyclicity checks.
//!
//! Every kernel is stored as a pair of real-valued maps on triples of group
//! points: an amplitude and a phase (the kernel itself being
//! `amplitude * exp(i * phase)`). The groups are carried alongside as
//! explicit coordinate laws so the left-invariance of each kernel can be
//! verified on random triples.

use serde::Serialize;

/// Group multiplication in global coordinates.
pub type GroupLaw = Box<dyn Fn(&[f64], &[f64]) -> Vec<f64> + Sync + Send>;

type TripleMap = Box<dyn Fn(&[f64], &[f64], &[f64]) -> f64 + Sync + Send>;

/// A three-point kernel `amplitude * exp(i * phase)` on a group with
/// `dim`-dimensional global coordinates.
pub struct ThreePointKernel {
    pub name: &'static str,
    pub dim: usize,
    pub theta: f64,
    /// Whether the kernel is invariant under cyclic rotation of its three
    /// arguments.
    pub cyclic: bool,
    amp: TripleMap,
    phase: TripleMap,
}

impl ThreePointKernel {
    pub fn amplitude(&self, g0: &[f64], g1: &[f64], g2: &[f64]) -> f64 {
        (self.amp)(g0, g1, g2)
    }

    pub fn phase(&self, g0: &[f64], g1: &[f64], g2: &[f64]) -> f64 {
        (self.phase)(g0, g1, g2)
    }
}

/// The two-dimensional `ax + b`-type law shared by the weight-two solvable
/// planes: `(t, L) (a, l) = (t + a, l + e^{-2a} L)`.
pub fn an2_law() -> GroupLaw {
    Box::new(|p, q| vec![p[0] + q[0], q[1] + (-2.0 * q[0]).exp() * p[1]])
}

fn sinh_cyclic(a: [f64; 3], l: [f64; 3]) -> f64 {
    (2.0 * (a[0] - a[1])).sinh() * l[2]
        + (2.0 * (a[1] - a[2])).sinh() * l[0]
        + (2.0 * (a[2] - a[0])).sinh() * l[1]
}

/// The kernel on the `AN` plane of `SU(1,1)`: amplitude
/// `cosh(a1-a2) + cosh(a2-a0) + cosh(a0-a1)`, phase `-(1/theta) S` with the
/// cyclic `S = sum sinh(2(a_i - a_j)) l_k`. Left-invariant and cyclic.
pub fn sl2an_kernel(theta: f64) -> ThreePointKernel {
    ThreePointKernel {
        name: "sl2an",
        dim: 2,
        theta,
        cyclic: true,
        amp: Box::new(|g0, g1, g2| {
            (g1[0] - g2[0]).cosh() + (g2[0] - g0[0]).cosh() + (g0[0] - g1[0]).cosh()
        }),
        phase: Box::new(move |g0, g1, g2| {
            -(1.0 / theta) * sinh_cyclic([g0[0], g1[0], g2[0]], [g0[1], g1[1], g2[1]])
        }),
    }
}

/// The product kernel on the two-dimensional scalar extension (no
/// symplectic part): amplitude `cosh(2(a1 - a2))`, phase `-(2/theta) S`.
/// Left-invariant but *not* cyclic: the amplitude singles out one pair.
pub fn r0_product_kernel(theta: f64) -> ThreePointKernel {
    ThreePointKernel {
        name: "r0-product",
        dim: 2,
        theta,
        cyclic: false,
        amp: Box::new(|_, g1, g2| (2.0 * (g1[0] - g2[0])).cosh()),
        phase: Box::new(move |g0, g1, g2| {
            -(2.0 / theta) * sinh_cyclic([g0[0], g1[0], g2[0]], [g0[1], g1[1], g2[1]])
        }),
    }
}

/// The symmetrized kernel on the same two-dimensional group: amplitude
/// `sqrt(prod cosh(2(a_i - a_j)))`, same phase. Left-invariant *and* cyclic.
pub fn hilb_kernel(theta: f64) -> ThreePointKernel {
    ThreePointKernel {
        name: "hilb",
        dim: 2,
        theta,
        cyclic: true,
        amp: Box::new(|g0, g1, g2| {
            ((2.0 * (g1[0] - g2[0])).cosh()
                * (2.0 * (g2[0] - g0[0])).cosh()
                * (2.0 * (g0[0] - g1[0])).cosh())
            .sqrt()
        }),
        phase: Box::new(move |g0, g1, g2| {
            -(2.0 / theta) * sinh_cyclic([g0[0], g1[0], g2[0]], [g0[1], g1[1], g2[1]])
        }),
    }
}

fn omega2(v: &[f64], w: &[f64]) -> f64 {
    v[0] * w[1] - v[1] * w[0]
}

fn ext4_amp_phase(theta: f64, g0: &[f64], g1: &[f64], g2: &[f64]) -> (f64, f64) {
    let (a0, a1, a2) = (g0[0], g1[0], g2[0]);
    let amp = (2.0 * (a1 - a2)).cosh()
        * ((a2 - a0).cosh() * (a0 - a1).cosh()).powi(2);
    let x0 = [g0[1] * (a1 - a2).cosh(), g0[2] * (a1 - a2).cosh()];
    let x1 = [g1[1] * (a2 - a0).cosh(), g1[2] * (a2 - a0).cosh()];
    let x2 = [g2[1] * (a0 - a1).cosh(), g2[2] * (a0 - a1).cosh()];
    let sv = omega2(&x0, &x1) + omega2(&x1, &x2) + omega2(&x2, &x0);
    let cyc = sinh_cyclic([a0, a1, a2], [g0[3], g1[3], g2[3]]);
    (amp, (2.0 / theta) * (sv - cyc))
}

/// Group law of the four-dimensional split extension with `X = id + diag(c,
/// -c)` acting on the symplectic plane and central weight two, in
/// coordinates `(a, v1, v2, z)`.
pub fn extension_law(c: f64) -> GroupLaw {
    Box::new(move |p, q| {
        let a2 = q[0];
        let sv = [
            (-a2 * (1.0 + c)).exp() * p[1],
            (-a2 * (1.0 - c)).exp() * p[2],
        ];
        vec![
            p[0] + a2,
            sv[0] + q[1],
            sv[1] + q[2],
            (-2.0 * a2).exp() * p[3] + q[3] + 0.5 * omega2(&sv, &q[1..3]),
        ]
    })
}

/// The product kernel on the four-dimensional extension with `X = id`
/// (coordinates `(a, v1, v2, z)`). Left-invariant, symplectically invariant,
/// not cyclic.
pub fn extension_product_kernel(theta: f64) -> ThreePointKernel {
    ThreePointKernel {
        name: "extension-product",
        dim: 4,
        theta,
        cyclic: false,
        amp: Box::new(move |g0, g1, g2| ext4_amp_phase(theta, g0, g1, g2).0),
        phase: Box::new(move |g0, g1, g2| ext4_amp_phase(theta, g0, g1, g2).1),
    }
}

/// The transported kernel on the extension with `X = id + diag(c, -c)`: the
/// diffeomorphism `(a, v, z) -> (a, e^{a diag(c, -c)} v, z)` pulls the
/// product kernel back to a kernel left-invariant under [`extension_law`].
pub fn twisted_extension_kernel(theta: f64, c: f64) -> ThreePointKernel {
    let tw = move |g: &[f64]| -> Vec<f64> {
        vec![g[0], (c * g[0]).exp() * g[1], (-c * g[0]).exp() * g[2], g[3]]
    };
    ThreePointKernel {
        name: "twisted-extension",
        dim: 4,
        theta,
        cyclic: false,
        amp: Box::new(move |g0, g1, g2| {
            ext4_amp_phase(theta, &tw(g0), &tw(g1), &tw(g2)).0
        }),
        phase: Box::new(move |g0, g1, g2| {
            ext4_amp_phase(theta, &tw(g0), &tw(g1), &tw(g2)).1
        }),
    }
}

/// The linear action of the two-dimensional factor on the symplectic plane
/// of the four-dimensional factor: `diag(e^{-t}, e^t) . [[1,0],[-2L,1]]`.
fn conj_matrix(t: f64, big_l: f64) -> [[f64; 2]; 2] {
    [
        [(-t).exp(), 0.0],
        [-2.0 * big_l * t.exp(), t.exp()],
    ]
}

/// Group law of the six-dimensional split product in coordinates
/// `(a2, v1, v2, z | t, L)`: the two-dimensional factor acts on the
/// symplectic plane of the extension factor by [`conj_matrix`], so
/// `(g2, g1)(h2, h1) = (g2 . C_{g1}(h2), g1 h1)`.
pub fn tensor_law() -> GroupLaw {
    let inner = extension_law(0.0);
    let outer = an2_law();
    Box::new(move |p, q| {
        let m = conj_matrix(p[4], p[5]);
        let mut q2 = q[..4].to_vec();
        q2[1] = m[0][0] * q[1] + m[0][1] * q[2];
        q2[2] = m[1][0] * q[1] + m[1][1] * q[2];
        let mut out = inner(&p[..4], &q2);
        out.extend(outer(&p[4..], &q[4..]));
        out
    })
}

/// The tensor kernel on the six-dimensional split product: the
/// two-dimensional kernel on the `(t, L)` factor times the extension
/// product kernel on the `(a, v, z)` factor. Left-invariance under
/// [`tensor_law`] follows because the extension kernel is invariant under
/// the symplectic conjugation action of the first factor.
pub fn tensor_kernel(theta: f64) -> ThreePointKernel {
    let outer = sl2an_kernel(theta);
    let inner = extension_product_kernel(theta);
    ThreePointKernel {
        name: "tensor",
        dim: 6,
        theta,
        cyclic: false,
        amp: Box::new(move |g0, g1, g2| {
            outer.amplitude(&g0[4..], &g1[4..], &g2[4..])
                * inner.amplitude(&g0[..4], &g1[..4], &g2[..4])
        }),
        phase: Box::new({
            let outer = sl2an_kernel(theta);
            let inner = extension_product_kernel(theta);
            move |g0, g1, g2| {
                outer.phase(&g0[4..], &g1[4..], &g2[4..])
                    + inner.phase(&g0[..4], &g1[..4], &g2[..4])
            }
        }),
    }
}

/// Invariance and cyclicity residuals of a kernel over a set of triples.
#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    pub name: String,
    /// Max deviation of amplitude and phase under left translation.
    pub invariance_residual: f64,
    /// Max deviation under cyclic rotation of the arguments.
    pub cyclicity_residual: f64,
    /// The claimed cyclicity flag of the kernel.
    pub cyclic: bool,
}

/// Check left-invariance (under `law`, translating by each element of
/// `translates`) and cyclicity of `kernel` on the given triples.
pub fn kernel_invariance_check(
    kernel: &ThreePointKernel,
    law: &GroupLaw,
    triples: &[[Vec<f64>; 3]],
    translates: &[Vec<f64>],
) -> KernelReport {
    let mut inv: f64 = 0.0;
    let mut cyc: f64 = 0.0;
    for [g0, g1, g2] in triples {
        let a = kernel.amplitude(g0, g1, g2);
        let p = kernel.phase(g0, g1, g2);
        for h in translates {
            let (h0, h1, h2) = (law(h, g0), law(h, g1), law(h, g2));
            inv = inv
                .max((kernel.amplitude(&h0, &h1, &h2) - a).abs())
                .max((kernel.phase(&h0, &h1, &h2) - p).abs());
        }
        cyc = cyc
            .max((kernel.amplitude(g1, g2, g0) - a).abs())
            .max((kernel.phase(g1, g2, g0) - p).abs());
    }
    KernelReport {
        name: kernel.name.to_string(),
        invariance_residual: inv,
        cyclicity_residual: cyc,
        cyclic: kernel.cyclic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SplitMix64;

    fn triples(rng: &mut SplitMix64, dim: usize, count: usize) -> Vec<[Vec<f64>; 3]> {
        (0..count)
            .map(|_| {
                [
                    rng.vector(dim, -0.8, 0.8),
                    rng.vector(dim, -0.8, 0.8),
                    rng.vector(dim, -0.8, 0.8),
                ]
            })
            .collect()
    }

    fn translates(rng: &mut SplitMix64, dim: usize) -> Vec<Vec<f64>> {
        (0..5).map(|_| rng.vector(dim, -0.8, 0.8)).collect()
    }

    #[test]
    fn laws_are_associative_with_identity() {
        let mut rng = SplitMix64::new(11);
        for (law, dim) in [
            (an2_law(), 2),
            (extension_law(0.0), 4),
            (extension_law(0.5), 4),
            (tensor_law(), 6),
        ] {
            for _ in 0..50 {
                let p = rng.vector(dim, -0.8, 0.8);
                let q = rng.vector(dim, -0.8, 0.8);
                let s = rng.vector(dim, -0.8, 0.8);
                let lhs = law(&law(&p, &q), &s);
                let rhs = law(&p, &law(&q, &s));
                for i in 0..dim {
                    assert!((lhs[i] - rhs[i]).abs() < 1e-12, "associativity");
                }
                let e = vec![0.0; dim];
                let le = law(&e, &p);
                for i in 0..dim {
                    assert!((le[i] - p[i]).abs() < 1e-14, "left identity");
                }
            }
        }
    }

    #[test]
    fn two_dimensional_kernels() {
        let mut rng = SplitMix64::new(5);
        let tr = triples(&mut rng, 2, 300);
        let hs = translates(&mut rng, 2);
        let law = an2_law();
        for kernel in [sl2an_kernel(0.3), r0_product_kernel(0.3), hilb_kernel(0.3)] {
            let rep = kernel_invariance_check(&kernel, &law, &tr, &hs);
            assert!(rep.invariance_residual < 1e-12, "{}: {rep:?}", kernel.name);
            if kernel.cyclic {
                assert!(rep.cyclicity_residual < 1e-12, "{}: {rep:?}", kernel.name);
            } else {
                assert!(rep.cyclicity_residual > 1e-3, "{}: {rep:?}", kernel.name);
            }
        }
    }

    #[test]
    fn extension_kernels() {
        let mut rng = SplitMix64::new(6);
        let tr = triples(&mut rng, 4, 300);
        let hs = translates(&mut rng, 4);
        let rep = kernel_invariance_check(
            &extension_product_kernel(0.3),
            &extension_law(0.0),
            &tr,
            &hs,
        );
        assert!(rep.invariance_residual < 1e-12, "{rep:?}");
        assert!(rep.cyclicity_residual > 1e-3, "{rep:?}");
        let rep = kernel_invariance_check(
            &twisted_extension_kernel(0.3, 0.5),
            &extension_law(0.5),
            &tr,
            &hs,
        );
        assert!(rep.invariance_residual < 1e-12, "{rep:?}");
    }

    #[test]
    fn twisted_kernel_needs_the_matching_law() {
        let mut rng = SplitMix64::new(7);
        let tr = triples(&mut rng, 4, 100);
        let hs = translates(&mut rng, 4);
        // the twisted kernel is not invariant under the untwisted law
        let rep = kernel_invariance_check(
            &twisted_extension_kernel(0.3, 0.5),
            &extension_law(0.0),
            &tr,
            &hs,
        );
        assert!(rep.invariance_residual > 1e-3, "{rep:?}");
    }

    #[test]
    fn tensor_kernel_left_invariant() {
        let mut rng = SplitMix64::new(8);
        let tr = triples(&mut rng, 6, 300);
        let hs = translates(&mut rng, 6);
        let rep = kernel_invariance_check(&tensor_kernel(0.3), &tensor_law(), &tr, &hs);
        assert!(rep.invariance_residual < 1e-11, "{rep:?}");
    }

    #[test]
    fn extension_kernel_invariant_under_conjugation_action() {
        // the hypothesis behind the tensor construction: the extension
        // kernel is unchanged when the symplectic plane is rotated by the
        // conjugation matrices of the two-dimensional factor
        let kernel = extension_product_kernel(0.3);
        let mut rng = SplitMix64::new(9);
        for _ in 0..100 {
            let g: Vec<Vec<f64>> = (0..3).map(|_| rng.vector(4, -0.8, 0.8)).collect();
            let t = rng.uniform(-0.8, 0.8);
            let bl = rng.uniform(-0.8, 0.8);
            let m = conj_matrix(t, bl);
            let act = |g: &[f64]| {
                vec![
                    g[0],
                    m[0][0] * g[1] + m[0][1] * g[2],
                    m[1][0] * g[1] + m[1][1] * g[2],
                    g[3],
                ]
            };
            let a = kernel.amplitude(&g[0], &g[1], &g[2]);
            let p = kernel.phase(&g[0], &g[1], &g[2]);
            assert!(
                (kernel.amplitude(&act(&g[0]), &act(&g[1]), &act(&g[2])) - a).abs() < 1e-12
            );
            assert!((kernel.phase(&act(&g[0]), &act(&g[1]), &act(&g[2])) - p).abs() < 1e-12);
        }
    }
}

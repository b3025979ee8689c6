//! Stabilizer of the base point of the open orbit: the fixed space of the
//! composed involution `sigma . theta` inside the Iwasawa subalgebra, where
//! `theta(X) = -X^T` is the Cartan involution and `sigma` is the algebra
//! automorphism that flips the sign of the second split-Cartan coordinate
//! (it reflects every root `(p, q)` to `(p, -q)`).

use lie_core::{qi, LieAlgebraBasis, LieError, Q, QMat};
use lie_core::algebras::so2n_generators;
use num_traits::Zero;

/// Root basis of so(2,3) ordered so the Iwasawa subalgebra `A + N` (second
/// abelian choice) occupies the first six coordinates:
/// `{J1, J2, W, M, L, V, Y, X, N, F}`.
pub fn root_basis() -> LieAlgebraBasis {
    let g = so2n_generators(3);
    LieAlgebraBasis::new(
        "so23-root",
        &["J1", "J2", "W", "M", "L", "V", "Y", "X", "N", "F"],
        vec![
            g.j1, g.j2, g.w[0].clone(), g.m, g.l, g.v[0].clone(),
            g.y[0].clone(), g.x[0].clone(), g.nm, g.f,
        ],
    )
    .unwrap()
}

/// Matrix of the Cartan involution `theta(X) = -X^T` in the root basis
/// (column convention).
pub fn theta_matrix(alg: &LieAlgebraBasis) -> Result<QMat, LieError> {
    let n = alg.dim();
    let mut t = QMat::zeros(n, n);
    for j in 0..n {
        let img = alg.expand(&-&alg.basis[j].transpose())?;
        for i in 0..n {
            t[(i, j)] = img[i].clone();
        }
    }
    Ok(t)
}

/// The automorphism `sigma`: identity on `J1`, sign flip on `J2`, and the
/// root-space swap `V <-> X`, `M <-> L`, `N <-> F`, `W -> W`, `Y -> Y` with
/// the unique sign choices that make it a Lie algebra automorphism (found by
/// exhaustive search over the sign assignments and verified exactly).
pub fn sigma_matrix(alg: &LieAlgebraBasis) -> QMat {
    // images up to sign: (source index, target index)
    let pairing = [(2, 2), (6, 6), (5, 7), (7, 5), (3, 4), (4, 3), (8, 9), (9, 8)];
    for mask in 0..(1u32 << 8) {
        let mut s = QMat::zeros(10, 10);
        s[(0, 0)] = qi(1);
        s[(1, 1)] = qi(-1);
        for (bit, &(src, dst)) in pairing.iter().enumerate() {
            let sign = if mask & (1 << bit) == 0 { 1 } else { -1 };
            s[(dst, src)] = qi(sign);
        }
        let ok = lie_core::verify_isomorphism(alg, alg, &s)
            .map(|r| r.is_isomorphism)
            .unwrap_or(false);
        if ok {
            // involution check
            let sq = &s * &s;
            if sq == QMat::identity(10) {
                return s;
            }
        }
    }
    panic!("no sign assignment makes sigma an automorphism");
}

/// Fixed space of `sigma . theta` intersected with the Iwasawa subalgebra
/// (the first six coordinates). Returns vectors over the root basis.
pub fn stabilizer() -> Result<Vec<Vec<Q>>, LieError> {
    let alg = root_basis();
    let t = theta_matrix(&alg)?;
    let s = sigma_matrix(&alg);
    let tau = &s * &t;
    let fixed = (&tau - &QMat::identity(10)).null_space();
    // combinations of fixed vectors supported on the first six coordinates
    let k = fixed.len();
    let mut bottom = QMat::zeros(4, k);
    for (j, v) in fixed.iter().enumerate() {
        for i in 0..4 {
            bottom[(i, j)] = v[6 + i].clone();
        }
    }
    let combos = bottom.null_space();
    let mut out = Vec::new();
    for c in combos {
        let mut v = vec![Q::zero(); 10];
        for (j, f) in fixed.iter().enumerate() {
            for i in 0..10 {
                v[i] = v[i].clone() + c[j].clone() * &f[i];
            }
        }
        out.push(v);
    }
    Ok(out)
}

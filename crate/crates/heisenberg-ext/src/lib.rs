//! One-dimensional split extensions `F(X, mu, d)` of Heisenberg algebras:
//! exact construction and Jacobi validation, the exact 2-form `E^*([., .])`
//! and its determinant, the isomorphism family (rescaling, shear, symplectic
//! conjugation), the group law in second-kind coordinates, the oscillatory
//! three-point kernel and its transport to extensions with nontrivial `X`,
//! and the coadjoint jump between exact symplectic forms.

pub mod extension;
pub mod group;
pub mod isomorphism;
pub mod jump;
pub mod kernel;

pub use extension::{
    build_extension, build_extension_with_omega, in_sp, standard_omega,
    ExtensionError, HeisenbergExtension,
};
pub use group::{rat_f64, ExtensionGroup};
pub use isomorphism::{
    check_extension_isomorphism, conjugate_x, conjugation_possible, kill_mu, scale_d,
};
pub use jump::{ad_exp, coadjoint_jump, JumpReport};
pub use kernel::{
    left_invariance_residual, twist_kernel, KernelValue, ProductKernel, TwistedKernel,
};

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use lie_core::{qi, qr, Q, QMat};

    /// The normalized four-dimensional solvable algebra with brackets
    /// `[A,B] = B`, `[A,C] = 3/2 C`, `[A,D] = 1/2 D`, `[B,D] = -C` is the
    /// extension `F(diag(1, 1/2), 0, 3/4)` under `A, B, D, -C -> A, e1, e2,
    /// E`.
    #[test]
    fn normalized_solvable_algebra_is_an_extension() {
        let mut x = QMat::zeros(2, 2);
        x[(0, 0)] = qi(1);
        x[(1, 1)] = qr(1, 2);
        let ext = build_extension(1, x, vec![Q::zero(); 2], qr(3, 4)).unwrap();
        // images of (A, B, C, D) in (a, e1, e2, z) coordinates
        let img: [[i64; 4]; 4] = [
            [1, 0, 0, 0],  // A
            [0, 1, 0, 0],  // B
            [0, 0, 0, -1], // C -> -E
            [0, 0, 1, 0],  // D -> e2
        ];
        let to_q = |row: &[i64; 4]| -> Vec<Q> { row.iter().map(|&v| qi(v)).collect() };
        // expected brackets in the (A, B, C, D) basis
        let mut expect = vec![vec![vec![Q::zero(); 4]; 4]; 4];
        expect[0][1][1] = qi(1); // [A,B] = B
        expect[0][2][2] = qr(3, 2);
        expect[0][3][3] = qr(1, 2);
        expect[1][3][2] = qi(-1); // [B,D] = -C
        for i in 0..4 {
            for j in 0..4 {
                if j <= i {
                    continue;
                }
                let got = ext.bracket(&to_q(&img[i]), &to_q(&img[j]));
                let mut want = vec![Q::zero(); 4];
                for m in 0..4 {
                    for t in 0..4 {
                        want[t] = want[t].clone()
                            + expect[i][j][m].clone() * qi(img[m][t]);
                    }
                }
                assert_eq!(got, want, "bracket ({i}, {j})");
            }
        }
    }
}

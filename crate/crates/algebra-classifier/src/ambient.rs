//! The six-dimensional solvable ambient algebra `R = span{J1, J2, W, M, L, V}`
//! (the Iwasawa subalgebra of so(2,3) for the second abelian choice), with
//! polynomial-coefficient vectors so parametric subspaces can be manipulated
//! exactly.

use crate::poly::Poly;
use lie_core::qi;

/// Basis order used throughout: 0:J1 1:J2 2:W 3:M 4:L 5:V.
pub const NAMES: [&str; 6] = ["J1", "J2", "W", "M", "L", "V"];

/// Nonzero brackets of basis elements `[e_i, e_j]` for `i < j`, as
/// `(i, j, k, coeff)` meaning `[e_i, e_j] = sum coeff e_k`.
const TABLE: [(usize, usize, usize, i64); 8] = [
    (0, 2, 2, 1),  // [J1, W] = W
    (0, 3, 3, 1),  // [J1, M] = M
    (0, 4, 4, 1),  // [J1, L] = L
    (1, 3, 3, 1),  // [J2, M] = M
    (1, 4, 4, -1), // [J2, L] = -L
    (1, 5, 5, 1),  // [J2, V] = V
    (2, 5, 3, -1), // [W, V] = -M
    (4, 5, 2, -2), // [L, V] = -2W
];

/// Bracket of two vectors with polynomial coefficients.
pub fn bracket(x: &[Poly; 6], y: &[Poly; 6]) -> [Poly; 6] {
    let mut out: [Poly; 6] = std::array::from_fn(|_| Poly::zero());
    for &(i, j, k, c) in &TABLE {
        let cij = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
        out[k] = &out[k] + &cij.scale(&qi(c));
    }
    out
}

/// Vector with a single basis entry.
pub fn unit(i: usize) -> [Poly; 6] {
    std::array::from_fn(|k| if k == i { Poly::one() } else { Poly::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie_core::{LieAlgebraBasis, Q};
    use lie_core::algebras::so23_r_second;
    use num_traits::Zero;

    #[test]
    fn table_matches_matrix_realization() {
        // the polynomial bracket agrees with the explicit 5x5 matrices
        let alg: LieAlgebraBasis = so23_r_second();
        assert_eq!(alg.labels, NAMES);
        for i in 0..6 {
            for j in 0..6 {
                let got = bracket(&unit(i), &unit(j));
                let ui: Vec<Q> =
                    (0..6).map(|k| if k == i { lie_core::qi(1) } else { Q::zero() }).collect();
                let uj: Vec<Q> =
                    (0..6).map(|k| if k == j { lie_core::qi(1) } else { Q::zero() }).collect();
                let mv = alg.bracket_vec(&ui, &uj);
                for k in 0..6 {
                    let c = got[k].as_constant().unwrap();
                    assert_eq!(c, mv[k], "[{}, {}] comp {}", NAMES[i], NAMES[j], NAMES[k]);
                }
            }
        }
    }

    #[test]
    fn jacobi_holds() {
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    let s1 = bracket(&unit(i), &bracket(&unit(j), &unit(k)));
                    let s2 = bracket(&unit(j), &bracket(&unit(k), &unit(i)));
                    let s3 = bracket(&unit(k), &bracket(&unit(i), &unit(j)));
                    for m in 0..6 {
                        assert!((&(&s1[m] + &s2[m]) + &s3[m]).is_zero());
                    }
                }
            }
        }
    }
}

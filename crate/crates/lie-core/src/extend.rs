//! Central extensions by a scalar 2-cocycle, and the coboundary operator.
//!
//! Convention: the coboundary of a linear functional `xi` is
//! `(delta xi)(X, Y) = xi([X, Y])`.

use crate::algebra::{LieAlgebraBasis, LieError};
use crate::rat::{Q, QMat};
use num_traits::Zero;

/// Evaluate a 2-form given by its Gram matrix on coefficient vectors.
pub fn eval_form(omega: &QMat, x: &[Q], y: &[Q]) -> Q {
    let mut s = Q::zero();
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..y.len() {
            if !omega[(i, j)].is_zero() && !y[j].is_zero() {
                s = s + x[i].clone() * &omega[(i, j)] * &y[j];
            }
        }
    }
    s
}

/// Gram matrix of the coboundary `delta xi (X_i, X_j) = xi([X_i, X_j])` of a
/// linear functional `xi` (coefficients against the basis).
pub fn coboundary(alg: &LieAlgebraBasis, xi: &[Q]) -> QMat {
    let n = alg.dim();
    assert_eq!(xi.len(), n);
    let mut m = QMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Q::zero();
            for k in 0..n {
                if !alg.structure_constants[i][j][k].is_zero() && !xi[k].is_zero() {
                    s = s + alg.structure_constants[i][j][k].clone() * &xi[k];
                }
            }
            m[(i, j)] = s;
        }
    }
    m
}

/// Check the 2-cocycle condition: antisymmetry plus the cyclic identity
/// `omega([X,Y],Z) + omega([Y,Z],X) + omega([Z,X],Y) = 0` on all basis
/// triples (exact).
pub fn is_cocycle(alg: &LieAlgebraBasis, omega: &QMat) -> bool {
    let n = alg.dim();
    if omega.rows() != n || omega.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if omega[(i, j)] != -omega[(j, i)].clone() {
                return false;
            }
        }
    }
    let units: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut v = vec![Q::zero(); n];
            v[i] = num_traits::One::one();
            v
        })
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let a = eval_form(omega, &alg.bracket_vec(&units[i], &units[j]), &units[k]);
                let b = eval_form(omega, &alg.bracket_vec(&units[j], &units[k]), &units[i]);
                let c = eval_form(omega, &alg.bracket_vec(&units[k], &units[i]), &units[j]);
                if !(a + b + c).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Central extension by the cocycle `omega`: adds a central generator `Z`
/// with `[X_i, X_j]' = [X_i, X_j] + omega(X_i, X_j) Z`. The result is an
/// abstract algebra (structure constants only, no matrix realization).
/// Errors with `BadCocycle` when `omega` is not a 2-cocycle.
pub fn central_extend(
    alg: &LieAlgebraBasis,
    omega: &QMat,
    central_label: &str,
) -> Result<LieAlgebraBasis, LieError> {
    if !is_cocycle(alg, omega) {
        return Err(LieError::BadCocycle);
    }
    let n = alg.dim();
    let mut c = vec![vec![vec![Q::zero(); n + 1]; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = alg.structure_constants[i][j][k].clone();
            }
            c[i][j][n] = omega[(i, j)].clone();
        }
    }
    let mut labels = alg.labels.clone();
    labels.push(central_label.to_string());
    // abstract: placeholder zero matrices carry no realization
    let basis = vec![QMat::zeros(1, 1); n + 1];
    LieAlgebraBasis::from_structure_constants(
        &format!("{}+center", alg.name),
        &labels,
        basis,
        c,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::*;
    use crate::rat::qi;

    #[test]
    fn coboundary_is_always_cocycle() {
        let alg = so23_r_second();
        let xi = alg.unit("M").unwrap();
        let om = coboundary(&alg, &xi);
        assert!(is_cocycle(&alg, &om));
    }

    #[test]
    fn extension_by_coboundary_builds() {
        let alg = sl2r();
        let xi = alg.unit("H").unwrap();
        let om = coboundary(&alg, &xi);
        let ext = central_extend(&alg, &om, "Z").unwrap();
        assert_eq!(ext.dim(), 4);
        // [E, F] = H + xi(H) Z = H + Z
        let e = ext.unit("E").unwrap();
        let f = ext.unit("F").unwrap();
        let out = ext.bracket_vec(&e, &f);
        assert_eq!(out, vec![qi(1), qi(0), qi(0), qi(1)]);
        // Z is central
        let z = ext.unit("Z").unwrap();
        for u in [&e, &f, &z] {
            assert!(ext.bracket_vec(&z, u).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn non_cocycle_rejected() {
        // on the solvable 6-dim algebra, omega(J1, W) = 1 alone fails the
        // cyclic identity on the triple (J1, L, V) since [L, V] = -2W
        let alg = so23_r_second();
        let n = alg.dim();
        let mut om = QMat::zeros(n, n);
        let j1 = alg.index_of("J1").unwrap();
        let w = alg.index_of("W").unwrap();
        om[(j1, w)] = qi(1);
        om[(w, j1)] = qi(-1);
        assert!(matches!(
            central_extend(&alg, &om, "Z"),
            Err(LieError::BadCocycle)
        ));
    }
}

//! The isomorphism family between extensions: rescaling of the `A`
//! coordinate, the shear that removes `mu`, and symplectic conjugation of
//! `X`. Every map is returned as an exact matrix on `(a, v, z)` coordinates
//! and checked against both the bracket and the pull-back of the exact
//! 2-forms.

use crate::extension::{in_sp, ExtensionError, HeisenbergExtension};
use lie_core::{qi, Q, QMat};
use num_traits::Zero;

/// Verify that `map` intertwines the brackets of `src` and `dst` and pulls
/// the form of `dst` back to the form of `src`, both exactly.
pub fn check_extension_isomorphism(
    src: &HeisenbergExtension,
    dst: &HeisenbergExtension,
    map: &QMat,
) -> bool {
    let dim = src.dim();
    if dst.dim() != dim || map.rows() != dim || map.cols() != dim {
        return false;
    }
    if map.det().is_zero() {
        return false;
    }
    let col = |j: usize| -> Vec<Q> { (0..dim).map(|i| map[(i, j)].clone()).collect() };
    for i in 0..dim {
        for j in 0..dim {
            let mut ei = vec![Q::zero(); dim];
            ei[i] = qi(1);
            let mut ej = vec![Q::zero(); dim];
            ej[j] = qi(1);
            let lhs = dst.bracket(&col(i), &col(j));
            let mid = src.bracket(&ei, &ej);
            let mut rhs = vec![Q::zero(); dim];
            for (m, c) in mid.iter().enumerate() {
                for (t, x) in col(m).iter().enumerate() {
                    rhs[t] = rhs[t].clone() + c.clone() * x;
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    // form pull-back: map^T Omega_dst map = Omega_src
    let pulled = &(&map.transpose() * &dst.symplectic_form()) * map;
    pulled == src.symplectic_form()
}

/// The rescaling isomorphism `(a, v, z) -> (d a, v, z)` from the extension
/// with data `(d X, d mu, 2d)` to the one with data `(X, mu, 2)`.
///
/// Input: the target data `(X, mu)` (with `X - 2 id` symplectic) and the
/// scale `d`; returns the source extension, target extension, and map. The
/// sometimes-quoted target `(X, mu, d)` does not intertwine the brackets for
/// generic `d`; the correct target coefficient is `2`.
pub fn scale_d(
    n: usize,
    x: QMat,
    mu: Vec<Q>,
    d: Q,
) -> Result<(HeisenbergExtension, HeisenbergExtension, QMat), ExtensionError> {
    if d.is_zero() {
        return Err(ExtensionError::NoIsomorphism("scale d = 0".into()));
    }
    let src = crate::extension::build_extension(
        n,
        x.scale(&d),
        mu.iter().map(|m| m.clone() * &d).collect(),
        d.clone() * qi(2),
    )?;
    let dst = crate::extension::build_extension(n, x, mu, qi(2))?;
    let mut map = QMat::identity(2 * n + 2);
    map[(0, 0)] = d;
    Ok((src, dst, map))
}

/// `F(X, mu, 2) -> F(X, 0, 2)` by the shear `(a, v, z) -> (a, v + a u, z)`
/// where `u` solves `i(u) Omega_V = mu`.
pub fn kill_mu(
    ext: &HeisenbergExtension,
) -> Result<(HeisenbergExtension, QMat), ExtensionError> {
    // solve Omega_V(u, .) = mu, i.e. (-Omega_V) u = mu as column equations:
    // mu_j = Omega_V(u, e_j) = sum_i u_i Omega_V[i][j]
    let om_t = ext.omega_v.transpose();
    let u = om_t
        .solve(&ext.mu)
        .ok_or_else(|| ExtensionError::NoIsomorphism("i(u) Omega = mu unsolvable".into()))?;
    let dst = crate::extension::build_extension_with_omega(
        ext.n,
        ext.x.clone(),
        vec![Q::zero(); 2 * ext.n],
        ext.d.clone(),
        ext.omega_v.clone(),
    )?;
    let mut map = QMat::identity(ext.dim());
    for (i, ui) in u.iter().enumerate() {
        map[(1 + i, 0)] = ui.clone();
    }
    Ok((dst, map))
}

/// `F(X, 0, 2) -> F(M X M^{-1}, 0, 2)` by `(a, v, z) -> (a, M v, z)` for a
/// symplectic `M`. Refuses when `M` is not symplectic. No conjugation can
/// relate `X = d id` to any other `X'` in the same orbit: the symplectic
/// parts `X - d id` must lie on the same adjoint orbit, and the orbit of `0`
/// is a point.
pub fn conjugate_x(
    ext: &HeisenbergExtension,
    m: &QMat,
) -> Result<(HeisenbergExtension, QMat), ExtensionError> {
    if !ext.mu.iter().all(|c| c.is_zero()) {
        return Err(ExtensionError::NoIsomorphism("conjugation needs mu = 0".into()));
    }
    // M in Sp(V, Omega): M^T Omega M = Omega
    if &(&m.transpose() * &ext.omega_v) * m != ext.omega_v {
        return Err(ExtensionError::NoIsomorphism("M is not symplectic".into()));
    }
    let minv = m
        .inverse()
        .ok_or_else(|| ExtensionError::NoIsomorphism("M is singular".into()))?;
    let x2 = &(m * &ext.x) * &minv;
    let dst = crate::extension::build_extension_with_omega(
        ext.n,
        x2,
        vec![Q::zero(); 2 * ext.n],
        ext.d.clone(),
        ext.omega_v.clone(),
    )?;
    let mut map = QMat::identity(ext.dim());
    for i in 0..2 * ext.n {
        for j in 0..2 * ext.n {
            map[(1 + i, 1 + j)] = m[(i, j)].clone();
        }
    }
    Ok((dst, map))
}

/// Decide whether two extensions with `mu = 0` and equal `d` could be
/// conjugate: their symplectic parts must share elementary invariants. The
/// scalar case `X = d id` (symplectic part zero) is conjugate to nothing
/// else.
pub fn conjugation_possible(
    a: &HeisenbergExtension,
    b: &HeisenbergExtension,
) -> Result<(), ExtensionError> {
    if a.d != b.d {
        return Err(ExtensionError::NoIsomorphism("different d".into()));
    }
    let (xa, xb) = (a.x_bar(), b.x_bar());
    debug_assert!(in_sp(&xa, &a.omega_v) && in_sp(&xb, &b.omega_v));
    if xa.is_zero() != xb.is_zero() {
        return Err(ExtensionError::NoIsomorphism(
            "X = d id is conjugate only to itself".into(),
        ));
    }
    if xa.char_poly() != xb.char_poly() {
        return Err(ExtensionError::NoIsomorphism(
            "different characteristic polynomials".into(),
        ));
    }
    Ok(())
}

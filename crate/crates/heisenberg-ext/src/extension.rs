//! One-dimensional split extensions `F(X, mu, d)` of Heisenberg algebras.
//!
//! The Heisenberg algebra is `V + R E` with `[v, w] = Omega_V(v, w) E`; the
//! extension adjoins a generator `A` acting by the derivation
//! `rho(A)(v, z) = (X v, mu(v) + 2 d z)`. The Jacobi identity holds exactly
//! when `X - d id` is in the symplectic algebra `sp(V, Omega_V)`.
//!
//! Coordinates throughout: a vector of length `2n + 2` is `(a, v, z)` with
//! `v` of dimension `2n`.

use lie_core::{qi, LieAlgebraBasis, LieError, Q, QMat};
use num_traits::Zero;

/// Errors raised while building or relating extensions.
#[derive(Debug, thiserror::Error)]
pub enum ExtensionError {
    #[error("extension over V of dimension {0} needs a {0}x{0} matrix and a covector of length {0}")]
    Dimension(usize),
    #[error("X - d id is not symplectic: the extension violates Jacobi")]
    NotSymplectic,
    #[error("degenerate form on V")]
    DegenerateForm,
    #[error("no isomorphism: {0}")]
    NoIsomorphism(String),
    #[error("coadjoint orbit condition fails (residual {0:.3e})")]
    OrbitCondition(f64),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A one-dimensional split extension of a Heisenberg algebra.
#[derive(Debug, Clone)]
pub struct HeisenbergExtension {
    /// Half-dimension of `V` (so `dim V = 2n`, total dimension `2n + 2`).
    pub n: usize,
    /// Endomorphism `X` of `V` (size `2n`).
    pub x: QMat,
    /// Covector `mu` on `V`.
    pub mu: Vec<Q>,
    /// Coefficient `d` of the derivation: `rho(A)(0, z) = (0, 2 d z)`.
    pub d: Q,
    /// Symplectic form on `V`.
    pub omega_v: QMat,
}

/// Standard block-antisymmetric symplectic matrix on `R^{2n}`:
/// `Omega(e_i, e_{n+i}) = 1`.
pub fn standard_omega(n: usize) -> QMat {
    let mut om = QMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        om[(i, n + i)] = qi(1);
        om[(n + i, i)] = qi(-1);
    }
    om
}

/// Check that `Y` is in `sp(V, Omega)`: `Y^T Omega + Omega Y = 0`.
pub fn in_sp(y: &QMat, omega: &QMat) -> bool {
    (&(&y.transpose() * omega) + &(omega * y)).is_zero()
}

/// Build the extension `F(X, mu, d)` over the standard symplectic form,
/// refusing when `X - d id` fails the symplectic condition.
pub fn build_extension(
    n: usize,
    x: QMat,
    mu: Vec<Q>,
    d: Q,
) -> Result<HeisenbergExtension, ExtensionError> {
    build_extension_with_omega(n, x, mu, d, standard_omega(n))
}

/// Same as [`build_extension`] with an explicit symplectic form on `V`.
pub fn build_extension_with_omega(
    n: usize,
    x: QMat,
    mu: Vec<Q>,
    d: Q,
    omega_v: QMat,
) -> Result<HeisenbergExtension, ExtensionError> {
    if x.rows() != 2 * n || x.cols() != 2 * n || mu.len() != 2 * n {
        return Err(ExtensionError::Dimension(2 * n));
    }
    let xbar = &x - &QMat::identity(2 * n).scale(&d);
    if !in_sp(&xbar, &omega_v) {
        return Err(ExtensionError::NotSymplectic);
    }
    if omega_v.det().is_zero() {
        return Err(ExtensionError::DegenerateForm);
    }
    Ok(HeisenbergExtension { n, x, mu, d, omega_v })
}

impl HeisenbergExtension {
    /// Total dimension `2n + 2`.
    pub fn dim(&self) -> usize {
        2 * self.n + 2
    }

    /// `X - d id`, the symplectic part of the derivation.
    pub fn x_bar(&self) -> QMat {
        &self.x - &QMat::identity(2 * self.n).scale(&self.d)
    }

    /// The triple label `(X, mu, 2d)` used alongside `(X, mu, d)` in the
    /// source conventions: the third slot is the eigenvalue of the derivation
    /// on the center.
    pub fn label(&self) -> String {
        format!(
            "F(X, mu, {})",
            lie_core::format_q(&(self.d.clone() * qi(2)))
        )
    }

    /// Bracket on coordinates `(a, v, z)`:
    /// `[(a,v,z), (a',v',z')] = (0, X(av'-a'v), mu(av'-a'v) + 2d(az'-a'z)
    ///  + Omega_V(v,v'))`.
    pub fn bracket(&self, u: &[Q], w: &[Q]) -> Vec<Q> {
        let m = 2 * self.n;
        let (a1, z1) = (&u[0], &u[m + 1]);
        let (a2, z2) = (&w[0], &w[m + 1]);
        // av' - a'v
        let mixed: Vec<Q> = (0..m)
            .map(|i| a1.clone() * &w[1 + i] - a2.clone() * &u[1 + i])
            .collect();
        let mut out = vec![Q::zero(); self.dim()];
        for i in 0..m {
            for j in 0..m {
                out[1 + i] = out[1 + i].clone() + self.x[(i, j)].clone() * &mixed[j];
            }
        }
        let mut z = Q::zero();
        for i in 0..m {
            z = z + self.mu[i].clone() * &mixed[i];
        }
        z = z + qi(2) * self.d.clone() * (a1.clone() * z2 - a2.clone() * z1);
        for i in 0..m {
            for j in 0..m {
                z = z + u[1 + i].clone() * &self.omega_v[(i, j)] * &w[1 + j];
            }
        }
        out[m + 1] = z;
        out
    }

    /// The extension as an abstract Lie algebra basis (structure constants
    /// only); construction re-verifies Jacobi exactly.
    pub fn algebra(&self) -> Result<LieAlgebraBasis, LieError> {
        let dim = self.dim();
        let mut labels = vec!["A".to_string()];
        for i in 0..2 * self.n {
            labels.push(format!("e{}", i + 1));
        }
        labels.push("E".to_string());
        let units: Vec<Vec<Q>> = (0..dim)
            .map(|i| {
                let mut v = vec![Q::zero(); dim];
                v[i] = qi(1);
                v
            })
            .collect();
        let sc: Vec<Vec<Vec<Q>>> = (0..dim)
            .map(|i| (0..dim).map(|j| self.bracket(&units[i], &units[j])).collect())
            .collect();
        let basis = vec![QMat::zeros(1, 1); dim];
        LieAlgebraBasis::from_structure_constants("heisenberg-ext", &labels, basis, sc)
    }

    /// The exact 2-form `Omega^F = E^*([., .])` as a matrix on `(a, v, z)`
    /// coordinates.
    pub fn symplectic_form(&self) -> QMat {
        let dim = self.dim();
        let mut om = QMat::zeros(dim, dim);
        let units: Vec<Vec<Q>> = (0..dim)
            .map(|i| {
                let mut v = vec![Q::zero(); dim];
                v[i] = qi(1);
                v
            })
            .collect();
        for i in 0..dim {
            for j in 0..dim {
                om[(i, j)] = self.bracket(&units[i], &units[j])[dim - 1].clone();
            }
        }
        om
    }

    /// Determinant of `Omega^F`; the closed form is `4 d^2 det Omega_V`
    /// (nonzero exactly when `d != 0`). The form is an even-dimensional
    /// antisymmetric matrix, so its determinant is a perfect square; the
    /// occasionally quoted negative sign is a typo.
    pub fn symplectic_det(&self) -> Q {
        self.symplectic_form().det()
    }

    /// Whether `Omega^F` is nondegenerate (equivalent to `d != 0`).
    pub fn is_symplectic(&self) -> bool {
        !self.d.is_zero()
    }
}

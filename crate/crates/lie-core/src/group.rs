//! Group elements: exponentials of algebra elements with membership checks.
//!
//! Nilpotent elements are exponentiated exactly over the rationals; all other
//! elements go through floating-point scaling-and-squaring. This is the only
//! place floating point enters the core crate.

use crate::algebra::{LieAlgebraBasis, LieError};
use crate::rat::{qi, Q, QMat};
use num_traits::One;

/// Small dense f64 matrix for group-level arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct FMat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl FMat {
    pub fn zeros(n: usize) -> Self {
        FMat { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_qmat(q: &QMat) -> Self {
        assert!(q.is_square());
        let n = q.rows();
        let rows = q.to_f64();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = rows[i][j];
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &FMat) -> FMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = FMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FMat {
        let n = self.n;
        let mut out = FMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn sub(&self, rhs: &FMat) -> FMat {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: f64) -> FMat {
        let mut out = self.clone();
        for a in &mut out.data {
            *a *= c;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> f64 {
        let n = self.n;
        let mut m = self.clone();
        let mut det = 1.0;
        for c in 0..n {
            let (p, pv) = (c..n)
                .map(|i| (i, m.get(i, c).abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pv == 0.0 {
                return 0.0;
            }
            if p != c {
                det = -det;
                for j in 0..n {
                    let t = m.get(p, j);
                    m.set(p, j, m.get(c, j));
                    m.set(c, j, t);
                }
            }
            det *= m.get(c, c);
            for i in (c + 1)..n {
                let f = m.get(i, c) / m.get(c, c);
                if f != 0.0 {
                    for j in c..n {
                        let v = m.get(i, j) - f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Matrix exponential by scaling-and-squaring with a Taylor core.
    pub fn expm(&self) -> FMat {
        let norm = self.max_abs() * self.n as f64;
        let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
        let scaled = self.scale(0.5_f64.powi(s as i32));
        let mut term = FMat::identity(self.n);
        let mut sum = FMat::identity(self.n);
        for k in 1..=24 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            for (a, b) in sum.data.iter_mut().zip(&term.data) {
                *a += b;
            }
            if term.max_abs() < 1e-18 {
                break;
            }
        }
        let mut out = sum;
        for _ in 0..s {
            out = out.mul(&out);
        }
        out
    }
}

/// Which matrix group the exponential is checked against.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupKind {
    /// `g^t eta g = eta` with the given diagonal signature.
    OrthoEta(Vec<f64>),
    /// `g^t Omega g = Omega`, canonical `Omega = [[0, I], [-I, 0]]`.
    Symplectic,
    /// `det g = 1`.
    SpecialLinear,
    /// no membership constraint
    GeneralLinear,
}

/// Result of exponentiating an algebra element.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub kind: GroupKind,
    pub matrix: FMat,
    /// exact value when the element was nilpotent
    pub exact: Option<QMat>,
    pub membership_residual: f64,
}

/// Exact exponential of a nilpotent matrix (`x^k = 0` for some `k <= n`).
pub fn exp_nilpotent(x: &QMat) -> Option<QMat> {
    let n = x.rows();
    let mut powers = vec![QMat::identity(n)];
    for k in 1..=n {
        let next = &powers[k - 1] * x;
        if next.is_zero() {
            // sum_{m < k} x^m / m!
            let mut fact = Q::one();
            let mut out = QMat::zeros(n, n);
            for (m, p) in powers.iter().enumerate() {
                if m > 0 {
                    fact = fact * qi(m as i64);
                }
                out = &out + &p.scale(&fact.recip());
            }
            return Some(out);
        }
        powers.push(next);
    }
    None
}

fn membership_residual(g: &FMat, kind: &GroupKind) -> f64 {
    match kind {
        GroupKind::OrthoEta(eta) => {
            let n = g.n;
            assert_eq!(eta.len(), n);
            let mut em = FMat::zeros(n);
            for (i, &v) in eta.iter().enumerate() {
                em.set(i, i, v);
            }
            g.transpose().mul(&em).mul(g).sub(&em).max_abs()
        }
        GroupKind::Symplectic => {
            let n = g.n;
            assert!(n % 2 == 0);
            let h = n / 2;
            let mut om = FMat::zeros(n);
            for i in 0..h {
                om.set(i, h + i, 1.0);
                om.set(h + i, i, -1.0);
            }
            g.transpose().mul(&om).mul(g).sub(&om).max_abs()
        }
        GroupKind::SpecialLinear => (g.det() - 1.0).abs(),
        GroupKind::GeneralLinear => 0.0,
    }
}

/// Exponentiate `sum_i coeffs[i] X_i` and verify group membership. Nilpotent
/// elements take the exact path; the result carries the residual of the
/// membership check (error beyond `1e-9` is rejected).
pub fn group_exp(
    alg: &LieAlgebraBasis,
    coeffs: &[Q],
    kind: GroupKind,
) -> Result<GroupElement, LieError> {
    let x = alg.element(coeffs);
    let (matrix, exact) = match exp_nilpotent(&x) {
        Some(e) => (FMat::from_qmat(&e), Some(e)),
        None => (FMat::from_qmat(&x).expm(), None),
    };
    let membership_residual = membership_residual(&matrix, &kind);
    if membership_residual > 1e-9 {
        return Err(LieError::MembershipResidual(membership_residual));
    }
    Ok(GroupElement { kind, matrix, exact, membership_residual })
}

/// Adjoint action `g x g^{-1}` expressed in algebra coordinates, for exactly
/// exponentiated group elements.
pub fn adjoint_exact(
    alg: &LieAlgebraBasis,
    g: &QMat,
    x: &[Q],
) -> Result<Vec<Q>, LieError> {
    let ginv = g.inverse().ok_or(LieError::NotInSpan)?;
    let conj = &(g * &alg.element(x)) * &ginv;
    alg.expand(&conj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::*;
    use crate::rat::qr;
    use approx::assert_relative_eq;
    use num_traits::Zero;

    #[test]
    fn nilpotent_exact_exp() {
        let e = sl2_e();
        let g = exp_nilpotent(&e.scale(&qi(3))).unwrap();
        assert_eq!(g, QMat::from_i64(&[&[1, 3], &[0, 1]]));
    }

    #[test]
    fn sl2_exp_h_is_diagonal() {
        let alg = sl2r();
        let g = group_exp(&alg, &[qi(1), qi(0), qi(0)], GroupKind::SpecialLinear).unwrap();
        assert!(g.exact.is_none());
        assert_relative_eq!(g.matrix.get(0, 0), std::f64::consts::E, max_relative = 1e-12);
        assert_relative_eq!(g.matrix.get(1, 1), (-1.0f64).exp(), max_relative = 1e-12);
        assert!(g.membership_residual < 1e-12);
    }

    #[test]
    fn so23_rotation_stays_in_group() {
        let alg = so2n_full(3);
        let g = so2n_generators(3);
        let ka = alg.expand(&g.ka).unwrap();
        let eta = vec![-1.0, -1.0, 1.0, 1.0, 1.0];
        let el = group_exp(&alg, &ka, GroupKind::OrthoEta(eta)).unwrap();
        assert!(el.membership_residual < 1e-12);
        // exp(Ka) rotates the first two coordinates: exp(mu Ka) e1 = cos e1 - sin e2
        assert_relative_eq!(el.matrix.get(0, 0), 1.0f64.cos(), max_relative = 1e-12);
        assert_relative_eq!(el.matrix.get(1, 0), -(1.0f64.sin()), max_relative = 1e-12);
    }

    #[test]
    fn sp2r_exp_is_symplectic() {
        let alg = sp2r();
        let mut coeffs = vec![Q::zero(); alg.dim()];
        coeffs[0] = qr(1, 3);
        coeffs[2] = qr(1, 2);
        coeffs[7] = qr(-2, 5);
        let el = group_exp(&alg, &coeffs, GroupKind::Symplectic).unwrap();
        assert!(el.membership_residual < 1e-10);
    }

    #[test]
    fn an_group_law_matches_matrix_product() {
        // exp(a H) exp(l E) composition law: (a1,l1)(a2,l2) = (a1+a2, l2 + e^{-2 a2} l1)
        let exp_al = |a: f64, l: f64| {
            let ah = FMat::from_qmat(&sl2_h()).scale(a).expm();
            let le = FMat::from_qmat(&sl2_e()).scale(l).expm();
            ah.mul(&le)
        };
        let (a1, l1, a2, l2) = (0.3, -0.7, -0.45, 0.2);
        let lhs = exp_al(a1, l1).mul(&exp_al(a2, l2));
        let rhs = exp_al(a1 + a2, l2 + (-2.0 * a2).exp() * l1);
        assert!(lhs.sub(&rhs).max_abs() < 1e-12);
    }

    #[test]
    fn adjoint_on_h_by_an_element() {
        // Ad(exp(a H) exp(l E)) H = H - 2 e^{2a} l E
        let alg = sl2r();
        // use exact path: exp(l E) exact, exp(a H) diagonal exact for a = 0
        let l = qr(3, 7);
        let gl = exp_nilpotent(&sl2_e().scale(&l)).unwrap();
        let h = alg.unit("H").unwrap();
        let out = adjoint_exact(&alg, &gl, &h).unwrap();
        assert_eq!(out, vec![qi(1), qi(-2) * l, qi(0)]);
    }
}

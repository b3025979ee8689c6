//! Lie algebra bases with exact structure constants.

use crate::rat::{format_q, lincomb, parse_q, Q, QMat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building or manipulating algebra bases.
#[derive(Debug, Error)]
pub enum LieError {
    #[error("matrix dimension mismatch")]
    DimensionMismatch,
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("span is not closed under the bracket at pair ({0}, {1})")]
    NotClosed(usize, usize),
    #[error("Jacobi identity fails at triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("element is not in the span of the basis")]
    NotInSpan,
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("abelian generators do not commute (pair {0}, {1})")]
    NonCommutingAbelian(usize, usize),
    #[error("ad action is not diagonalizable over the rationals")]
    NotRationallyDiagonalizable,
    #[error("positivity weight vanishes on the root {0:?}")]
    DegeneratePositivity(Vec<String>),
    #[error("matrix realization is not stable under the Cartan involution")]
    NotThetaStable,
    #[error("cocycle fails the Jacobi (2-cocycle) condition")]
    BadCocycle,
    #[error("group membership residual {0} exceeds tolerance")]
    MembershipResidual(f64),
    #[error("serialization error: {0}")]
    Serde(String),
}

/// Matrix commutator `[X, Y] = XY - YX`.
pub fn bracket(x: &QMat, y: &QMat) -> QMat {
    x.commutator(y)
}

/// Killing-form convention selector.
///
/// The source material mixes two normalizations: the ad-trace form
/// `tr(ad X ad Y)` and the matrix-trace form `tr(XY)`. Both are exposed
/// explicitly and never converted silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KillingConvention {
    AdTrace,
    MatrixTrace,
}

/// Ordered basis of a matrix Lie algebra together with its exact structure
/// constants `c[i][j][k]`, where `[X_i, X_j] = sum_k c[i][j][k] X_k`.
#[derive(Debug, Clone)]
pub struct LieAlgebraBasis {
    pub name: String,
    pub dim_matrix: usize,
    pub labels: Vec<String>,
    pub basis: Vec<QMat>,
    pub structure_constants: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebraBasis {
    /// Build a basis from matrices, deriving the structure constants by exact
    /// linear solves. Verifies independence, closure, and the Jacobi identity.
    pub fn new(name: &str, labels: &[&str], basis: Vec<QMat>) -> Result<Self, LieError> {
        assert_eq!(labels.len(), basis.len());
        let dim_matrix = basis[0].rows();
        if basis.iter().any(|m| !m.is_square() || m.rows() != dim_matrix) {
            return Err(LieError::DimensionMismatch);
        }
        let span = span_matrix(&basis);
        if span.rank() != basis.len() {
            return Err(LieError::DependentBasis);
        }
        let n = basis.len();
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let comm = basis[i].commutator(&basis[j]);
                let coords = span.solve(&comm.flatten()).ok_or(LieError::NotClosed(i, j))?;
                c[i][j] = coords;
            }
        }
        let alg = LieAlgebraBasis {
            name: name.to_string(),
            dim_matrix,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            basis,
            structure_constants: c,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Build directly from structure constants with no matrix realization
    /// backing (used by central extensions). Verifies Jacobi.
    pub fn from_structure_constants(
        name: &str,
        labels: &[String],
        basis: Vec<QMat>,
        structure_constants: Vec<Vec<Vec<Q>>>,
    ) -> Result<Self, LieError> {
        let dim_matrix = basis[0].rows();
        let alg = LieAlgebraBasis {
            name: name.to_string(),
            dim_matrix,
            labels: labels.to_vec(),
            basis,
            structure_constants,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut res = vec![Q::zero(); n];
                    acc_double(&mut res, self, i, j, k);
                    acc_double(&mut res, self, j, k, i);
                    acc_double(&mut res, self, k, i, j);
                    if res.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::JacobiFailure(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index of a label.
    pub fn index_of(&self, label: &str) -> Result<usize, LieError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| LieError::UnknownLabel(label.to_string()))
    }

    /// Basis element by label.
    pub fn by_label(&self, label: &str) -> Result<&QMat, LieError> {
        Ok(&self.basis[self.index_of(label)?])
    }

    /// Coefficient vector with a single `1` at the labelled slot.
    pub fn unit(&self, label: &str) -> Result<Vec<Q>, LieError> {
        let mut v = vec![Q::zero(); self.dim()];
        v[self.index_of(label)?] = num_traits::One::one();
        Ok(v)
    }

    /// Matrix realization of a coefficient vector.
    pub fn element(&self, coeffs: &[Q]) -> QMat {
        lincomb(coeffs, &self.basis)
    }

    /// Exact coordinates of a matrix in this basis, or an error if the matrix
    /// lies outside the span.
    pub fn expand(&self, x: &QMat) -> Result<Vec<Q>, LieError> {
        let span = span_matrix(&self.basis);
        let coords = span.solve(&x.flatten()).ok_or(LieError::NotInSpan)?;
        // solve() gives a particular solution; verify reconstruction exactly
        if &self.element(&coords) - x != QMat::zeros(x.rows(), x.cols()) {
            return Err(LieError::NotInSpan);
        }
        Ok(coords)
    }

    /// Bracket of coefficient vectors via the structure constants.
    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let f = x[i].clone() * &y[j];
                for k in 0..n {
                    if !self.structure_constants[i][j][k].is_zero() {
                        let add = self.structure_constants[i][j][k].clone() * &f;
                        out[k] = out[k].clone() + add;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)` acting on coefficient vectors (columns are
    /// `[x, X_j]` in coordinates).
    pub fn ad_matrix(&self, x: &[Q]) -> QMat {
        let n = self.dim();
        let mut m = QMat::zeros(n, n);
        for j in 0..n {
            let mut ej = vec![Q::zero(); n];
            ej[j] = num_traits::One::one();
            let col = self.bracket_vec(x, &ej);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Killing form of two coefficient vectors in the chosen convention.
    pub fn killing_form(&self, x: &[Q], y: &[Q], convention: KillingConvention) -> Q {
        match convention {
            KillingConvention::AdTrace => (&self.ad_matrix(x) * &self.ad_matrix(y)).trace(),
            KillingConvention::MatrixTrace => {
                (&self.element(x) * &self.element(y)).trace()
            }
        }
    }

    /// Full Gram matrix of the Killing form over the basis.
    pub fn killing_matrix(&self, convention: KillingConvention) -> QMat {
        let n = self.dim();
        let mut m = QMat::zeros(n, n);
        let units: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut v = vec![Q::zero(); n];
                v[i] = num_traits::One::one();
                v
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.killing_form(&units[i], &units[j], convention);
            }
        }
        m
    }
}

fn acc_double(res: &mut [Q], alg: &LieAlgebraBasis, i: usize, j: usize, k: usize) {
    // res += [X_i, [X_j, X_k]] in coordinates
    let n = alg.dim();
    for m in 0..n {
        if alg.structure_constants[j][k][m].is_zero() {
            continue;
        }
        for t in 0..n {
            if !alg.structure_constants[i][m][t].is_zero() {
                let add = alg.structure_constants[j][k][m].clone()
                    * &alg.structure_constants[i][m][t];
                res[t] = res[t].clone() + add;
            }
        }
    }
}

/// Stack flattened basis matrices as columns: the exact "span" system used by
/// `expand` and the structure-constant solves.
pub(crate) fn span_matrix(basis: &[QMat]) -> QMat {
    let rows = basis[0].rows() * basis[0].cols();
    let mut m = QMat::zeros(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (i, v) in b.flatten().into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

/// JSON document form of an algebra: entries as `"p/q"` strings so the
/// serialization stays exact.
#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    name: String,
    dim_matrix: usize,
    labels: Vec<String>,
    /// row-major rational entries per basis matrix
    basis: Vec<Vec<String>>,
    structure_constants: Vec<Vec<Vec<String>>>,
}

impl LieAlgebraBasis {
    /// Serialize to the exact JSON document format.
    pub fn to_json(&self) -> String {
        let doc = AlgebraDoc {
            name: self.name.clone(),
            dim_matrix: self.dim_matrix,
            labels: self.labels.clone(),
            basis: self
                .basis
                .iter()
                .map(|m| m.flatten().iter().map(format_q).collect())
                .collect(),
            structure_constants: self
                .structure_constants
                .iter()
                .map(|ci| ci.iter().map(|cij| cij.iter().map(format_q).collect()).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("algebra serialization cannot fail")
    }

    /// Parse the exact JSON document format and re-verify all invariants.
    pub fn from_json(s: &str) -> Result<Self, LieError> {
        let doc: AlgebraDoc =
            serde_json::from_str(s).map_err(|e| LieError::Serde(e.to_string()))?;
        let d = doc.dim_matrix;
        let mut basis = Vec::new();
        for flat in &doc.basis {
            if flat.len() != d * d {
                return Err(LieError::DimensionMismatch);
            }
            let mut m = QMat::zeros(d, d);
            for (idx, s) in flat.iter().enumerate() {
                m[(idx / d, idx % d)] = parse_q(s).map_err(LieError::Serde)?;
            }
            basis.push(m);
        }
        let labels: Vec<&str> = doc.labels.iter().map(|s| s.as_str()).collect();
        let rebuilt = LieAlgebraBasis::new(&doc.name, &labels, basis)?;
        // check the stored structure constants agree with the re-derived ones
        for (i, ci) in doc.structure_constants.iter().enumerate() {
            for (j, cij) in ci.iter().enumerate() {
                for (k, s) in cij.iter().enumerate() {
                    let v = parse_q(s).map_err(LieError::Serde)?;
                    if v != rebuilt.structure_constants[i][j][k] {
                        return Err(LieError::Serde(format!(
                            "stored structure constant c[{i}][{j}][{k}] disagrees"
                        )));
                    }
                }
            }
        }
        Ok(rebuilt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qi;

    fn sl2() -> LieAlgebraBasis {
        let h = QMat::from_i64(&[&[1, 0], &[0, -1]]);
        let e = QMat::from_i64(&[&[0, 1], &[0, 0]]);
        let f = QMat::from_i64(&[&[0, 0], &[1, 0]]);
        LieAlgebraBasis::new("sl2", &["H", "E", "F"], vec![h, e, f]).unwrap()
    }

    #[test]
    fn structure_constants_match_commutators() {
        let a = sl2();
        // [H, E] = 2E
        assert_eq!(a.structure_constants[0][1], vec![qi(0), qi(2), qi(0)]);
        // [E, F] = H
        assert_eq!(a.structure_constants[1][2], vec![qi(1), qi(0), qi(0)]);
        // antisymmetry
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(
                        a.structure_constants[i][j][k],
                        -a.structure_constants[j][i][k].clone()
                    );
                }
            }
        }
    }

    #[test]
    fn killing_ad_trace_sl2() {
        let a = sl2();
        let h = a.unit("H").unwrap();
        assert_eq!(a.killing_form(&h, &h, KillingConvention::AdTrace), qi(8));
        let e = a.unit("E").unwrap();
        let f = a.unit("F").unwrap();
        assert_eq!(a.killing_form(&e, &f, KillingConvention::AdTrace), qi(4));
        assert_eq!(a.killing_form(&e, &e, KillingConvention::AdTrace), qi(0));
    }

    #[test]
    fn not_closed_rejected() {
        // span{H, E} alone is closed, but {E, F} is not
        let e = QMat::from_i64(&[&[0, 1], &[0, 0]]);
        let f = QMat::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(matches!(
            LieAlgebraBasis::new("bad", &["E", "F"], vec![e, f]),
            Err(LieError::NotClosed(_, _))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let a = sl2();
        let s = a.to_json();
        let b = LieAlgebraBasis::from_json(&s).unwrap();
        assert_eq!(a.structure_constants, b.structure_constants);
        assert_eq!(a.labels, b.labels);
    }
}

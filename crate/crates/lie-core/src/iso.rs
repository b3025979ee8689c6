//! Exact verification of Lie algebra homomorphisms and isomorphisms.
//!
//! Maps are coefficient matrices in the column convention: the image of the
//! i-th source basis element is `sum_j map[(j, i)] f_j` in the destination
//! basis.

use crate::algebra::{LieAlgebraBasis, LieError};
use crate::decompose::mat_vec;
use crate::rat::{Q, QMat};
use num_traits::{Signed, ToPrimitive, Zero};

/// Report of a homomorphism check.
#[derive(Debug, Clone)]
pub struct IsoReport {
    /// largest bracket-compatibility defect, as f64 (exactly zero when the
    /// map is a homomorphism)
    pub max_residual: f64,
    /// determinant of the coefficient matrix (square maps only)
    pub det: Option<Q>,
    /// homomorphism with invertible coefficient matrix
    pub is_isomorphism: bool,
    /// homomorphism (bracket-compatible), not necessarily invertible
    pub is_homomorphism: bool,
}

/// Check bracket compatibility `map([x, y]) = [map(x), map(y)]` exactly on
/// all basis pairs.
pub fn verify_homomorphism(
    src: &LieAlgebraBasis,
    dst: &LieAlgebraBasis,
    map: &QMat,
) -> Result<IsoReport, LieError> {
    if map.rows() != dst.dim() || map.cols() != src.dim() {
        return Err(LieError::DimensionMismatch);
    }
    let n = src.dim();
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|j| (0..dst.dim()).map(|i| map[(i, j)].clone()).collect())
        .collect();
    let mut max_residual: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = mat_vec(map, &src.structure_constants[i][j]);
            let rhs = dst.bracket_vec(&cols[i], &cols[j]);
            for (a, b) in lhs.iter().zip(&rhs) {
                let d = (a.clone() - b).abs().to_f64().unwrap_or(f64::INFINITY);
                max_residual = max_residual.max(d);
            }
        }
    }
    let is_homomorphism = max_residual == 0.0;
    let det = if map.rows() == map.cols() { Some(map.det()) } else { None };
    let is_isomorphism =
        is_homomorphism && det.as_ref().map(|d| !d.is_zero()).unwrap_or(false);
    Ok(IsoReport { max_residual, det, is_isomorphism, is_homomorphism })
}

/// Check that the map is an isomorphism (bracket compatible and invertible).
pub fn verify_isomorphism(
    src: &LieAlgebraBasis,
    dst: &LieAlgebraBasis,
    map: &QMat,
) -> Result<IsoReport, LieError> {
    let report = verify_homomorphism(src, dst, map)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::*;
    use crate::rat::qi;

    #[test]
    fn roots_to_so21_is_isomorphism() {
        let src = sl2_abstract_roots();
        let dst = so21();
        let r = verify_isomorphism(&src, &dst, &phi_roots_to_so21()).unwrap();
        assert!(r.is_isomorphism, "residual {}", r.max_residual);
        assert_eq!(r.det.unwrap(), qi(-2));
    }

    #[test]
    fn sl2r_to_su11_identity_map() {
        let r = verify_isomorphism(&sl2r(), &su11(), &QMat::identity(3)).unwrap();
        assert!(r.is_isomorphism);
    }

    #[test]
    fn sl2c_to_sp2r_realified_conjugation() {
        let src = sl2c();
        let dst = sp2r();
        let map = coefficient_map(&dst, &phi_sl2c_to_sp2r_images()).unwrap();
        let r = verify_isomorphism(&src, &dst, &map).unwrap();
        assert!(r.is_homomorphism, "residual {}", r.max_residual);
        // injective (image is 6-dimensional inside the 10-dimensional sp(2,R))
        assert_eq!(map.rank(), 6);
        // the image of I2 is (X' - V')/2
        let i2 = src.index_of("I2").unwrap();
        let col: Vec<Q> = (0..dst.dim()).map(|i| map[(i, i2)].clone()).collect();
        let mut expected = vec![Q::zero(); dst.dim()];
        expected[dst.index_of("X'").unwrap()] = crate::rat::qr(1, 2);
        expected[dst.index_of("V'").unwrap()] = crate::rat::qr(-1, 2);
        assert_eq!(col, expected);
    }

    #[test]
    fn so23_to_sp2r_homomorphism() {
        let src = so23_named();
        let dst = sp2r();
        let map = coefficient_map(&dst, &psi_so23_to_sp2r_images()).unwrap();
        let r = verify_isomorphism(&src, &dst, &map).unwrap();
        assert!(r.is_isomorphism, "residual {}", r.max_residual);
        assert!(!r.det.unwrap().is_zero());
    }

    #[test]
    fn non_homomorphism_detected() {
        // swapping E and F without negating breaks the bracket
        let mut bad = QMat::zeros(3, 3);
        bad[(0, 0)] = qi(1);
        bad[(1, 2)] = qi(1);
        bad[(2, 1)] = qi(1);
        let r = verify_isomorphism(&sl2r(), &sl2r(), &bad).unwrap();
        assert!(!r.is_homomorphism);
        assert!(r.max_residual > 0.0);
    }
}

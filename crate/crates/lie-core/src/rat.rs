//! Exact rational scalars and dense matrices used throughout the algebra engine.
//!
//! All structure-constant and table computations are done over arbitrary
//! precision rationals so equality checks are exact, never tolerance-based.
//! Floating point enters only after exponentiation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact rational scalar.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from `"p"` or `"p/q"` notation.
pub fn parse_q(s: &str) -> Result<Q, String> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| e.to_string())?;
            let q = BigInt::from_str(q.trim()).map_err(|e| e.to_string())?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Q::new(p, q))
        }
        None => {
            let p = BigInt::from_str(s.trim()).map_err(|e| e.to_string())?;
            Ok(Q::from_integer(p))
        }
    }
}

/// Render a rational as `"p"` or `"p/q"`.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense matrix over the exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_q(&self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl QMat {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// Square matrix from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = qi(v);
            }
        }
        m
    }

    /// Diagonal matrix from integer entries.
    pub fn diag_i64(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = qi(v);
        }
        m
    }

    /// Elementary matrix `E_ij` (1-indexed) of size `n`.
    pub fn elem(i: usize, j: usize, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i - 1, j - 1)] = Q::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Flatten row-major into a coefficient vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).fold(Q::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = x.clone() * c;
        }
        m
    }

    /// Matrix commutator `[X, Y] = XY - YX`.
    pub fn commutator(&self, other: &Self) -> Self {
        assert!(self.is_square() && other.is_square() && self.rows == other.rows,
                "commutator requires same-size square matrices");
        self * other - other * self
    }

    /// Maximum absolute entry as `f64` (for report output only).
    pub fn max_abs_f64(&self) -> f64 {
        self.data.iter().map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
    }

    /// Convert to row-major `f64` entries.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_f64().unwrap()).collect())
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m[(p, j)].clone();
                    let b = m[(r, j)].clone();
                    m[(p, j)] = b;
                    m[(r, j)] = a;
                }
            }
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)].clone() * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let sub = m[(r, j)].clone() * &f;
                        m[(i, j)] = m[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space (columns `v` with `Av = 0`).
    pub fn null_space(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b` exactly. Returns `None` when inconsistent; for
    /// underdetermined systems returns the particular solution with all free
    /// variables set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact determinant via fraction-free style elimination.
    pub fn det(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                det = -det;
                for j in 0..n {
                    let a = m[(p, j)].clone();
                    let b = m[(c, j)].clone();
                    m[(p, j)] = b;
                    m[(c, j)] = a;
                }
            }
            det = det * &m[(c, c)];
            let inv = m[(c, c)].recip();
            for i in (c + 1)..n {
                if !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone() * &inv;
                    for j in c..n {
                        let sub = m[(c, j)].clone() * &f;
                        m[(i, j)] = m[(i, j)].clone() - sub;
                    }
                }
            }
        }
        det
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = QMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = QMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Coefficients of the characteristic polynomial
    /// `det(tI - A) = t^n + c[n-1] t^{n-1} + ... + c[0]`
    /// via the Faddeev–LeVerrier recursion (exact).
    pub fn char_poly(&self) -> Vec<Q> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n]; // c[0..n], leading 1 implicit
        let mut m = QMat::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -m.trace() / qi(k as i64);
            for i in 0..n {
                m[(i, i)] = m[(i, i)].clone() + &c;
            }
            coeffs[n - k] = c;
        }
        coeffs
    }

    /// All rational roots of the characteristic polynomial with multiplicity,
    /// or `None` if the polynomial does not split over the rationals.
    pub fn rational_eigenvalues(&self) -> Option<Vec<Q>> {
        let mut poly: Vec<Q> = {
            let mut p = self.char_poly();
            p.push(Q::one());
            p
        };
        let mut roots = Vec::new();
        while poly.len() > 1 {
            // strip zero roots fast
            if poly[0].is_zero() {
                roots.push(Q::zero());
                poly.remove(0);
                continue;
            }
            let root = rational_root(&poly)?;
            roots.push(root.clone());
            poly = deflate(&poly, &root);
        }
        Some(roots)
    }
}

/// One rational root of the polynomial with rational coefficients
/// `p[0] + p[1] t + ...` (rational root theorem on the integer-scaled form).
fn rational_root(p: &[Q]) -> Option<Q> {
    use num_integer::Integer;
    // scale to integer coefficients
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let a0 = ints[0].magnitude().clone();
    let an = ints.last().unwrap().magnitude().clone();
    let divs_p = small_divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, a0));
    let divs_q = small_divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, an));
    for dp in &divs_p {
        for dq in &divs_q {
            for sign in [1i64, -1] {
                let cand = Q::new(dp * BigInt::from(sign), dq.clone());
                if eval_poly(p, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    // divisors by trial division; table sizes here are tiny
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let n = n.abs();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d = &d + 1u32;
    }
    out.sort();
    out.dedup();
    out
}

fn eval_poly(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divide `p` by `(t - root)` exactly (root must be a root).
fn deflate(p: &[Q], root: &Q) -> Vec<Q> {
    let n = p.len() - 1;
    let mut q = vec![Q::zero(); n];
    let mut carry = p[n].clone();
    for k in (0..n).rev() {
        q[k] = carry.clone();
        carry = p[k].clone() + carry * root;
    }
    debug_assert!(carry.is_zero(), "deflate: not a root");
    q
}

impl Add for &QMat {
    type Output = QMat;
    fn add(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a = a.clone() + b;
        }
        m
    }
}

impl Sub for &QMat {
    type Output = QMat;
    fn sub(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a = a.clone() - b;
        }
        m
    }
}

impl Sub for QMat {
    type Output = QMat;
    fn sub(self, rhs: QMat) -> QMat {
        &self - &rhs
    }
}

impl Add for QMat {
    type Output = QMat;
    fn add(self, rhs: QMat) -> QMat {
        &self + &rhs
    }
}

impl Neg for &QMat {
    type Output = QMat;
    fn neg(self) -> QMat {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = -x.clone();
        }
        m
    }
}

impl Mul for &QMat {
    type Output = QMat;
    fn mul(self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut m = QMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let add = self[(i, k)].clone() * &rhs[(k, j)];
                    m[(i, j)] = m[(i, j)].clone() + add;
                }
            }
        }
        m
    }
}

/// Linear combination `sum_i coeffs[i] * mats[i]`.
pub fn lincomb(coeffs: &[Q], mats: &[QMat]) -> QMat {
    assert_eq!(coeffs.len(), mats.len());
    let mut acc = QMat::zeros(mats[0].rows(), mats[0].cols());
    for (c, m) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_nullspace() {
        let a = QMat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.null_space();
        assert_eq!(ns.len(), 1);
        // check A v = 0
        for i in 0..3 {
            let mut s = Q::zero();
            for j in 0..3 {
                s = s + a[(i, j)].clone() * &ns[0][j];
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = QMat::from_i64(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[qi(3), qi(2)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, QMat::identity(2));
        assert_eq!(a.det(), qi(1));
    }

    #[test]
    fn inconsistent_solve_is_none() {
        let a = QMat::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[qi(1), qi(2)]).is_none());
    }

    #[test]
    fn char_poly_and_eigenvalues() {
        // diag(2, -2, 1/2)-like matrix via conjugation-free test
        let mut a = QMat::zeros(3, 3);
        a[(0, 0)] = qi(2);
        a[(1, 1)] = qi(-2);
        a[(2, 2)] = qr(1, 2);
        let mut ev = a.rational_eigenvalues().unwrap();
        ev.sort();
        assert_eq!(ev, vec![qi(-2), qr(1, 2), qi(2)]);
    }

    #[test]
    fn commutator_antisymmetry() {
        let h = QMat::from_i64(&[&[1, 0], &[0, -1]]);
        let e = QMat::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(h.commutator(&e), e.scale(&qi(2)));
        assert_eq!(h.commutator(&e), -&e.commutator(&h));
    }

    #[test]
    fn q_parse_roundtrip() {
        for s in ["3", "-4", "1/2", "-7/3"] {
            let v = parse_q(s).unwrap();
            assert_eq!(format_q(&v), s);
        }
        assert!(parse_q("1/0").is_err());
    }
}

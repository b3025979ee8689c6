//! The coadjoint-orbit family of symplectic forms on the normalized family-1
//! algebra: `omega_1^g = delta(C* . Ad(g))` for
//! `g = e^{aA} e^{bB} e^{cC} e^{dD}`.
//!
//! To stay polynomial, the exponential of the `A`-direction is expressed in
//! the variable `E2 := e^{a/2}`, so `e^a = E2^2` and `e^{3a/2} = E2^3`.

use crate::families::{det4, family1_normalized};
use crate::param::Struct4;
use crate::poly::{vars, Frac, Poly};
use crate::symplectic::SymplecticForm4;
use lie_core::qr;

/// Adjoint matrices of the four one-parameter subgroups in the basis
/// `(A, B, C, D)` of the normalized family-1 algebra, as functions of the
/// group coordinates `(E2, b, c, d)`.
fn ad_factors() -> [[[Poly; 4]; 4]; 4] {
    let e2 = Poly::var(vars::E2);
    let b = Poly::var(vars::B);
    let c = Poly::var(vars::C);
    let d = Poly::var(vars::D);
    let mut id: [[Poly; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|j| {
            if i == j { Poly::one() } else { Poly::zero() }
        }));
    // Ad(e^{aA}) = diag(1, e^a, e^{3a/2}, e^{a/2})
    let mut ada = id.clone();
    ada[1][1] = &e2 * &e2;
    ada[2][2] = &(&e2 * &e2) * &e2;
    ada[3][3] = e2;
    // Ad(e^{bB}): A -> A - bB, D -> D - bC
    let mut adb = id.clone();
    adb[1][0] = -&b;
    adb[2][3] = -&b;
    // Ad(e^{cC}): A -> A - (3c/2) C
    let mut adc = id.clone();
    adc[2][0] = c.scale(&qr(-3, 2));
    // Ad(e^{dD}): A -> A - (d/2) D, B -> B + dC
    id[3][0] = d.scale(&qr(-1, 2));
    id[2][1] = d;
    [ada, adb, adc, id]
}

fn matmul(a: &[[Poly; 4]; 4], b: &[[Poly; 4]; 4]) -> [[Poly; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = Poly::zero();
            for k in 0..4 {
                s = &s + &(&a[i][k] * &b[k][j]);
            }
            s
        })
    })
}

/// `Ad(g)` for `g = e^{aA} e^{bB} e^{cC} e^{dD}` (column convention).
pub fn adjoint_of_g() -> [[Poly; 4]; 4] {
    let [ada, adb, adc, add] = ad_factors();
    matmul(&matmul(&ada, &adb), &matmul(&adc, &add))
}

/// The covector `xi = C* . Ad(g)` (component `m` is the `C`-row of `Ad(g)`
/// applied to the `m`-th basis vector).
pub fn xi_of_g() -> [Poly; 4] {
    let ad = adjoint_of_g();
    ad[2].clone()
}

/// `omega_1^g = delta xi` with the coboundary convention
/// `delta xi (X, Y) = xi([X, Y])`.
pub fn coadjoint_family() -> SymplecticForm4 {
    let sc: Struct4 = family1_normalized().structure_constants().unwrap();
    let xi = xi_of_g();
    let entries: [[Frac; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = Poly::zero();
            for m in 0..4 {
                s = &s + &(&sc[i][j][m] * &xi[m]);
            }
            Frac::from_poly(s)
        })
    });
    let det = det4(&entries);
    SymplecticForm4 { entries, det }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::is_cocycle;
    use lie_core::{qi, Q};
    use num_traits::Zero;

    fn at(p: &Poly, e2: Q, b: Q, c: Q, d: Q) -> Q {
        let mut vals = vec![Q::zero(); crate::poly::NVARS];
        vals[vars::E2] = e2;
        vals[vars::B] = b;
        vals[vars::C] = c;
        vals[vars::D] = d;
        p.eval(&vals)
    }

    #[test]
    fn xi_closed_form() {
        // C-component of Ad(g)x: e^{3a/2}(x_C - 3 x_A c/2 - b x_D + d x_B
        //                                 + b d x_A / 2)
        let xi = xi_of_g();
        let e2 = Poly::var(vars::E2);
        let e32 = &(&e2 * &e2) * &e2;
        let b = Poly::var(vars::B);
        let c = Poly::var(vars::C);
        let d = Poly::var(vars::D);
        let expect = [
            &e32 * &(&(&b * &d).scale(&qr(1, 2)) - &c.scale(&qr(3, 2))),
            &e32 * &d,
            e32.clone(),
            &e32 * &(-&b),
        ];
        for m in 0..4 {
            assert!((&xi[m] - &expect[m]).is_zero(), "xi[{m}] = {}", xi[m]);
        }
    }

    #[test]
    fn base_point_is_delta_cstar() {
        // g = e: xi = C*, omega = delta C* has the single relation
        // pattern of the normalized bracket table
        let om = coadjoint_family();
        let eval = |i: usize, j: usize| {
            at(&om.entries[i][j].num, qi(1), Q::zero(), Q::zero(), Q::zero())
        };
        // delta C*(A, C) = xi([A,C]) = 3/2; delta C*(B, D) = xi([B,D]) = -1
        assert_eq!(eval(0, 2), qr(3, 2));
        assert_eq!(eval(1, 3), qi(-1));
        assert_eq!(eval(0, 1), Q::zero());
        assert_eq!(eval(2, 3), Q::zero());
    }

    #[test]
    fn family_pattern_and_determinant() {
        let om = coadjoint_family();
        // cocycle identity holds for every g
        let sc = family1_normalized().structure_constants().unwrap();
        assert!(is_cocycle(&sc, &om.entries));
        // at d = 0 the two-parameter pattern: omega(A,B) = 0,
        // omega(C,D) = 0, omega(B,D) = -(2/3) omega(A,C)
        let d0 = |i: usize, j: usize| om.entries[i][j].num.subst(vars::D, &Poly::zero());
        assert!(d0(0, 1).is_zero());
        assert!(d0(2, 3).is_zero());
        let rel = &d0(1, 3) + &d0(0, 2).scale(&qr(2, 3));
        assert!(rel.is_zero(), "omega(B,D) vs omega(A,C): {}", rel);
        // det omega_1^g = 4 beta^4 / 9 with beta := omega(A, C), for all g
        let beta = Frac::from_poly(om.entries[0][2].num.clone());
        let want = beta.mul(&beta).mul(&beta).mul(&beta).mul(&Frac::from_poly(
            Poly::constant(qr(4, 9)),
        ));
        assert!(om.det.eq(&want), "det = {}", om.det);
    }

    #[test]
    fn adjoint_fixtures() {
        let ad = adjoint_of_g();
        // Ad(e^{aA})B = e^a B: with b=c=d=0, column 1 is (0, e^a, 0, 0)
        let col = |j: usize, i: usize| at(&ad[i][j], qi(2), Q::zero(), Q::zero(), Q::zero());
        assert_eq!(col(1, 1), qi(4)); // e^a = E2^2 = 4
        assert_eq!(col(2, 2), qi(8)); // e^{3a/2} = 8
        assert_eq!(col(3, 3), qi(2)); // e^{a/2} = 2
        // Ad(e^{bB})D = D - bC at a = 0 (E2 = 1)
        let colb = |j: usize, i: usize| at(&ad[i][j], qi(1), qi(5), Q::zero(), Q::zero());
        assert_eq!(colb(3, 2), qi(-5));
        assert_eq!(colb(3, 3), qi(1));
        // Ad(e^{cC})A = A - (3c/2) C
        let colc = |j: usize, i: usize| at(&ad[i][j], qi(1), Q::zero(), qi(2), Q::zero());
        assert_eq!(colc(0, 2), qi(-3));
        // Ad(e^{dD})A = A - (d/2) D
        let cold = |j: usize, i: usize| at(&ad[i][j], qi(1), Q::zero(), Q::zero(), qi(4));
        assert_eq!(cold(0, 3), qi(-2));
    }
}

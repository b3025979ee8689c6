//! Frozen bracket tables and Killing-form fixtures for the shipped algebras.

use approx::assert_relative_eq;
use lie_core::algebras::*;
use lie_core::{
    qi, qr, FMat, KillingConvention, LieAlgebraBasis, Q, QMat,
};
use num_traits::Zero;

fn bracket_eq(alg: &LieAlgebraBasis, a: &str, b: &str, expected: &[(Q, &str)]) {
    let x = alg.unit(a).unwrap();
    let y = alg.unit(b).unwrap();
    let out = alg.bracket_vec(&x, &y);
    let mut want = vec![Q::zero(); alg.dim()];
    for (c, l) in expected {
        want[alg.index_of(l).unwrap()] = c.clone();
    }
    assert_eq!(out, want, "[{a}, {b}] in {}", alg.name);
}

#[test]
fn sl2r_bracket_table() {
    let alg = sl2r();
    bracket_eq(&alg, "H", "E", &[(qi(2), "E")]);
    bracket_eq(&alg, "H", "F", &[(qi(-2), "F")]);
    bracket_eq(&alg, "E", "F", &[(qi(1), "H")]);
    // with T = E - F: [T, E] = H, [T, F] = H, [T, H] = -2(E + F)
    let t = alg.expand(&sl2_t()).unwrap();
    let e = alg.unit("E").unwrap();
    let f = alg.unit("F").unwrap();
    let h = alg.unit("H").unwrap();
    assert_eq!(alg.bracket_vec(&t, &e), h);
    assert_eq!(alg.bracket_vec(&t, &f), h);
    assert_eq!(alg.bracket_vec(&t, &h), vec![qi(0), qi(-2), qi(-2)]);
}

#[test]
fn sl2r_killing_matrices() {
    let alg = sl2r();
    let k = alg.killing_matrix(KillingConvention::AdTrace);
    assert_eq!(
        k,
        QMat::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])
    );
    // in the basis {H, E + F, T} the Gram matrix is diag(8, 8, -8)
    let het = LieAlgebraBasis::new(
        "sl2-het",
        &["H", "EpF", "T"],
        vec![sl2_h(), &sl2_e() + &sl2_f(), sl2_t()],
    )
    .unwrap();
    assert_eq!(
        het.killing_matrix(KillingConvention::AdTrace),
        QMat::diag_i64(&[8, 8, -8])
    );
    // B(T, T) = -8 and B(T, E) = -4 in the {H, E, F} coordinates
    let t = alg.expand(&sl2_t()).unwrap();
    let e = alg.unit("E").unwrap();
    assert_eq!(alg.killing_form(&t, &t, KillingConvention::AdTrace), qi(-8));
    assert_eq!(alg.killing_form(&t, &e, KillingConvention::AdTrace), qi(-4));
}

#[test]
fn sl2r_killing_quadratic_forms() {
    // B(x, x) = 8 (x_H^2 + x_E x_F) and B([H,x], [H,x]) = -32 x_E x_F
    let alg = sl2r();
    let x = vec![qr(2, 3), qr(-1, 5), qr(7, 4)];
    let b = alg.killing_form(&x, &x, KillingConvention::AdTrace);
    let expected = qi(8) * (x[0].clone() * &x[0] + x[1].clone() * &x[2]);
    assert_eq!(b, expected);
    let h = alg.unit("H").unwrap();
    let hx = alg.bracket_vec(&h, &x);
    let bb = alg.killing_form(&hx, &hx, KillingConvention::AdTrace);
    assert_eq!(bb, qi(-32) * x[1].clone() * &x[2]);
}

#[test]
fn so21_bracket_table() {
    let alg = so21();
    bracket_eq(&alg, "V0", "V1", &[(qi(1), "V1")]);
    bracket_eq(&alg, "V0", "V-1", &[(qi(-1), "V-1")]);
    bracket_eq(&alg, "V1", "V-1", &[(qi(-2), "V0")]);
}

#[test]
fn su11_bracket_table_matches_sl2r() {
    let alg = su11();
    bracket_eq(&alg, "psiH", "psiE", &[(qi(2), "psiE")]);
    bracket_eq(&alg, "psiH", "psiF", &[(qi(-2), "psiF")]);
    bracket_eq(&alg, "psiE", "psiF", &[(qi(1), "psiH")]);
}

#[test]
fn so23_bracket_fixtures() {
    let alg = so2n_full(3);
    let g = so2n_generators(3);
    let br = |a: &QMat, b: &QMat| a.commutator(b);
    assert_eq!(br(&g.v[0], &g.w[0]), g.m);
    assert_eq!(br(&g.v[0], &g.l), g.w[0].scale(&qi(2)));
    assert_eq!(br(&g.l, &g.v[0]), g.w[0].scale(&qi(-2)));
    assert_eq!(br(&g.w[0], &g.nm), g.v[0].scale(&qi(-2)));
    assert_eq!(br(&g.h1, &g.nm), g.nm.scale(&qi(2)));
    assert_eq!(br(&g.h2, &g.m), g.m.scale(&qi(2)));
    assert_eq!(br(&g.j1, &g.w[0]), g.w[0]);
    assert_eq!(br(&g.j2, &g.v[0]), g.v[0]);
    assert_eq!(br(&g.h1, &g.v[0]), g.v[0]);
    // all generators expand in the full basis
    for m in [&g.h1, &g.h2, &g.j1, &g.j2, &g.ka, &g.f, &g.nm, &g.m, &g.l] {
        alg.expand(m).unwrap();
    }
}

#[test]
fn solvable_six_dim_table() {
    // full table in the ordered basis {J1, J2, W, M, L, V}
    let alg = so23_r_second();
    bracket_eq(&alg, "J1", "W", &[(qi(1), "W")]);
    bracket_eq(&alg, "J1", "M", &[(qi(1), "M")]);
    bracket_eq(&alg, "J1", "L", &[(qi(1), "L")]);
    bracket_eq(&alg, "J2", "M", &[(qi(1), "M")]);
    bracket_eq(&alg, "J2", "L", &[(qi(-1), "L")]);
    bracket_eq(&alg, "J2", "V", &[(qi(1), "V")]);
    bracket_eq(&alg, "W", "V", &[(qi(-1), "M")]);
    bracket_eq(&alg, "L", "V", &[(qi(-2), "W")]);
    for (a, b) in [
        ("J1", "J2"),
        ("J1", "V"),
        ("J2", "W"),
        ("W", "M"),
        ("W", "L"),
        ("M", "L"),
        ("M", "V"),
        ("L", "M"),
    ] {
        bracket_eq(&alg, a, b, &[]);
    }
}

#[test]
fn sp2r_bracket_fixtures() {
    let g = sp2r_generators();
    let br = |a: &QMat, b: &QMat| a.commutator(b);
    assert_eq!(br(&g.l, &g.v), g.w.scale(&qi(-4)));
    assert_eq!(br(&g.w, &g.v), g.m.scale(&qi(-2)));
    assert_eq!(br(&g.b1, &g.l), g.l.scale(&qi(2)));
    assert_eq!(br(&g.b2, &g.m), g.m.scale(&qi(2)));
    assert_eq!(br(&g.b1, &g.w), g.w);
    assert_eq!(br(&g.b2, &g.w), g.w);
    assert_eq!(br(&g.b1, &g.v), -&g.v);
    assert_eq!(br(&g.b2, &g.v), g.v);
    // roots of the eight root vectors with respect to (A1', A2')
    for (vec, r1, r2) in [
        (&g.x, 0, 2),
        (&g.v, 0, -2),
        (&g.w, 2, 0),
        (&g.l, 2, 2),
        (&g.m, 2, -2),
        (&g.y, -2, 0),
        (&g.nm, -2, 2),
        (&g.f, -2, -2),
    ] {
        assert_eq!(br(&g.a1, vec), vec.scale(&qi(r1)));
        assert_eq!(br(&g.a2, vec), vec.scale(&qi(r2)));
    }
}

#[test]
fn an_group_law_and_inverse() {
    // (a1, l1) (a2, l2) = (a1 + a2, l2 + e^{-2 a2} l1), inverse (-a, -l e^{2a})
    let exp_al = |a: f64, l: f64| {
        let ah = FMat::from_qmat(&sl2_h()).scale(a).expm();
        let le = FMat::from_qmat(&sl2_e()).scale(l).expm();
        ah.mul(&le)
    };
    let (a1, l1, a2, l2) = (0.37, -0.52, -0.21, 0.94);
    let lhs = exp_al(a1, l1).mul(&exp_al(a2, l2));
    let rhs = exp_al(a1 + a2, l2 + (-2.0 * a2).exp() * l1);
    assert!(lhs.sub(&rhs).max_abs() < 1e-12);
    let inv = exp_al(-a1, -l1 * (2.0 * a1).exp());
    let prod = exp_al(a1, l1).mul(&inv);
    assert!(prod.sub(&FMat::identity(2)).max_abs() < 1e-12);
}

#[test]
fn adjoint_of_an_element_on_h() {
    // Ad(e^{a H} e^{l E}) H = H - 2 e^{2a} l E
    let (a, l) = (0.43, -0.81);
    let g = FMat::from_qmat(&sl2_h())
        .scale(a)
        .expm()
        .mul(&FMat::from_qmat(&sl2_e()).scale(l).expm());
    // inverse of g by the AN inverse law
    let ginv = FMat::from_qmat(&sl2_h())
        .scale(-a)
        .expm()
        .mul(&FMat::from_qmat(&sl2_e()).scale(-l * (2.0 * a).exp()).expm());
    let ad_h = g.mul(&FMat::from_qmat(&sl2_h())).mul(&ginv);
    let expected = FMat::from_qmat(&sl2_h())
        .sub(&FMat::from_qmat(&sl2_e()).scale(2.0 * (2.0 * a).exp() * l));
    assert_relative_eq!(ad_h.max_abs(), expected.max_abs(), max_relative = 1e-12);
    assert!(ad_h.sub(&expected).max_abs() < 1e-12);
}

//! The concrete algebra realizations shipped with the crate: sl(2,R) and its
//! abstract root form, su(1,1) (realified), so(2,1), so(2,n) for n = 1..4,
//! sl(2,C) (realified as 4x4 real matrices), and sp(2,R).

use crate::algebra::{LieAlgebraBasis, LieError};
use crate::rat::{qi, qr, Q, QMat};
use num_traits::One;

/// `H = diag(1, -1)` of sl(2,R).
pub fn sl2_h() -> QMat {
    QMat::from_i64(&[&[1, 0], &[0, -1]])
}

/// Upper nilpotent `E` of sl(2,R).
pub fn sl2_e() -> QMat {
    QMat::from_i64(&[&[0, 1], &[0, 0]])
}

/// Lower nilpotent `F` of sl(2,R).
pub fn sl2_f() -> QMat {
    QMat::from_i64(&[&[0, 0], &[1, 0]])
}

/// Compact generator `T = E - F` of sl(2,R).
pub fn sl2_t() -> QMat {
    &sl2_e() - &sl2_f()
}

/// sl(2,R) in the ordered basis {H, E, F}.
pub fn sl2r() -> LieAlgebraBasis {
    LieAlgebraBasis::new("sl(2,R)", &["H", "E", "F"], vec![sl2_h(), sl2_e(), sl2_f()])
        .expect("sl(2,R) construction is exact")
}

/// Abstract root-space presentation of sl(2,R): `[A0, A2] = 2 A2`,
/// `[A0, A-2] = -2 A-2`, `[A2, A-2] = A0`, realized on the standard matrices.
pub fn sl2_abstract_roots() -> LieAlgebraBasis {
    LieAlgebraBasis::new("sl2-roots", &["A0", "A2", "A-2"], vec![sl2_h(), sl2_e(), sl2_f()])
        .expect("abstract root realization is exact")
}

/// Realify a complex matrix given as (real part, imaginary part): each entry
/// `x + iy` becomes the 2x2 block `[[x, -y], [y, x]]`.
pub fn realify(re: &QMat, im: &QMat) -> QMat {
    let n = re.rows();
    let mut m = QMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m[(2 * i, 2 * j)] = re[(i, j)].clone();
            m[(2 * i + 1, 2 * j + 1)] = re[(i, j)].clone();
            m[(2 * i, 2 * j + 1)] = -im[(i, j)].clone();
            m[(2 * i + 1, 2 * j)] = im[(i, j)].clone();
        }
    }
    m
}

/// su(1,1) realified: images of {H, E, F} under conjugation by
/// `A = [[1, i], [i, 1]]`, i.e. `psi(H) = [[0, -i], [i, 0]]`,
/// `psi(E) = (1/2)[[-i, 1], [1, i]]`, `psi(F) = (1/2)[[i, 1], [1, -i]]`.
pub fn su11() -> LieAlgebraBasis {
    let zero = QMat::zeros(2, 2);
    let psi_h = realify(&zero, &QMat::from_i64(&[&[0, -1], &[1, 0]]));
    let mut re_e = QMat::zeros(2, 2);
    re_e[(0, 1)] = qr(1, 2);
    re_e[(1, 0)] = qr(1, 2);
    let mut im_e = QMat::zeros(2, 2);
    im_e[(0, 0)] = qr(-1, 2);
    im_e[(1, 1)] = qr(1, 2);
    let psi_e = realify(&re_e, &im_e);
    let mut im_f = QMat::zeros(2, 2);
    im_f[(0, 0)] = qr(1, 2);
    im_f[(1, 1)] = qr(-1, 2);
    let psi_f = realify(&re_e, &im_f);
    LieAlgebraBasis::new("su(1,1)", &["psiH", "psiE", "psiF"], vec![psi_h, psi_e, psi_f])
        .expect("su(1,1) construction is exact")
}

/// so(2,1) basis {V0, V1, V-1} with `[V0, V1] = V1`, `[V0, V-1] = -V-1`,
/// `[V1, V-1] = -2 V0`.
pub fn so21() -> LieAlgebraBasis {
    let v0 = &QMat::elem(1, 3, 3) + &QMat::elem(3, 1, 3);
    let v1 = QMat::from_i64(&[&[0, 1, 0], &[-1, 0, 1], &[0, 1, 0]]);
    let vm1 = QMat::from_i64(&[&[0, 1, 0], &[-1, 0, -1], &[0, -1, 0]]);
    LieAlgebraBasis::new("so(2,1)", &["V0", "V1", "V-1"], vec![v0, v1, vm1])
        .expect("so(2,1) construction is exact")
}

/// Named generator set of so(2,n) in the defining (n+2)-dimensional
/// realization with `eta = diag(-1, -1, 1, ..., 1)`.
pub struct So2n {
    pub n: usize,
    /// matrix size n + 2
    pub d: usize,
    pub h1: QMat,
    pub h2: QMat,
    pub j1: QMat,
    pub j2: QMat,
    pub ka: QMat,
    /// root vectors indexed by the matrix column i = 5..=d (empty for n < 3)
    pub v: Vec<QMat>,
    pub w: Vec<QMat>,
    pub x: Vec<QMat>,
    pub y: Vec<QMat>,
    pub f: QMat,
    pub nm: QMat,
    pub m: QMat,
    pub l: QMat,
}

/// Build the named so(2,n) generators (requires n >= 2 so the 4x4 corner
/// elements exist).
pub fn so2n_generators(n: usize) -> So2n {
    assert!((2..=4).contains(&n), "so(2,n) realized for n in 2..=4");
    let d = n + 2;
    let e = |i, j| QMat::elem(i, j, d);
    let h1 = &(&e(1, 3) + &e(3, 1)) - &(&e(2, 4) + &e(4, 2));
    let h2 = &(&e(1, 3) + &e(3, 1)) + &(&e(2, 4) + &e(4, 2));
    let j1 = &e(2, 4) + &e(4, 2);
    let j2 = &e(1, 3) + &e(3, 1);
    let ka = &e(1, 2) - &e(2, 1);
    let mut v = Vec::new();
    let mut w = Vec::new();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in 5..=d {
        v.push(&(&e(3, i) + &e(1, i)) + &(&e(i, 1) - &e(i, 3)));
        w.push(&(&e(4, i) + &e(2, i)) - &(&e(i, 4) - &e(i, 2)));
        x.push(&(&e(3, i) - &e(1, i)) - &(&e(i, 1) + &e(i, 3)));
        y.push(&(&e(4, i) - &e(2, i)) - &(&e(i, 4) + &e(i, 2)));
    }
    let corner = |m4: &QMat| {
        let mut m = QMat::zeros(d, d);
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = m4[(i, j)].clone();
            }
        }
        m
    };
    let f = corner(&QMat::from_i64(&[
        &[0, 1, 0, 1],
        &[-1, 0, -1, 0],
        &[0, -1, 0, -1],
        &[1, 0, 1, 0],
    ]));
    let nm = corner(&QMat::from_i64(&[
        &[0, 1, 0, 1],
        &[-1, 0, 1, 0],
        &[0, 1, 0, 1],
        &[1, 0, -1, 0],
    ]));
    let m = corner(&QMat::from_i64(&[
        &[0, 1, 0, -1],
        &[-1, 0, 1, 0],
        &[0, 1, 0, -1],
        &[-1, 0, 1, 0],
    ]));
    let l = corner(&QMat::from_i64(&[
        &[0, 1, 0, -1],
        &[-1, 0, -1, 0],
        &[0, -1, 0, 1],
        &[-1, 0, -1, 0],
    ]));
    So2n { n, d, h1, h2, j1, j2, ka, v, w, x, y, f, nm, m, l }
}

/// Metric signature matrix `eta = diag(-1, -1, 1, ..., 1)` of so(2,n).
pub fn so2n_eta(n: usize) -> QMat {
    let d = n + 2;
    let mut m = QMat::identity(d);
    m[(0, 0)] = qi(-1);
    m[(1, 1)] = qi(-1);
    m
}

/// Full so(2,n) in the spanning basis `G_ij = eta_jj E_ij - eta_ii E_ji`
/// (i < j), for n in 1..=4.
pub fn so2n_full(n: usize) -> LieAlgebraBasis {
    assert!((1..=4).contains(&n), "so(2,n) realized for n in 1..=4");
    let d = n + 2;
    let eta = so2n_eta(n);
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=d {
        for j in (i + 1)..=d {
            let g = &QMat::elem(i, j, d).scale(&eta[(j - 1, j - 1)])
                - &QMat::elem(j, i, d).scale(&eta[(i - 1, i - 1)]);
            basis.push(g);
            labels.push(format!("G{i}{j}"));
        }
    }
    let labels_ref: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    LieAlgebraBasis::new(&format!("so(2,{n})"), &labels_ref, basis)
        .expect("so(2,n) construction is exact")
}

/// First-choice Iwasawa subalgebra A + N of so(2,3) in the ordered basis
/// {H1, H2, V5, W5, M, N}.
pub fn so23_an_first() -> LieAlgebraBasis {
    let g = so2n_generators(3);
    LieAlgebraBasis::new(
        "so(2,3)-AN-first",
        &["H1", "H2", "V5", "W5", "M", "N"],
        vec![g.h1, g.h2, g.v[0].clone(), g.w[0].clone(), g.m, g.nm],
    )
    .expect("so(2,3) first AN construction is exact")
}

/// Second-choice Iwasawa subalgebra A + N of so(2,3) in the ordered basis
/// {J1, J2, W, M, L, V}: the ambient algebra of the four-dimensional
/// subalgebra classification.
pub fn so23_r_second() -> LieAlgebraBasis {
    let g = so2n_generators(3);
    LieAlgebraBasis::new(
        "so(2,3)-R-second",
        &["J1", "J2", "W", "M", "L", "V"],
        vec![g.j1, g.j2, g.w[0].clone(), g.m, g.l, g.v[0].clone()],
    )
    .expect("so(2,3) second AN construction is exact")
}

/// Rotation generators `K_rs = E_rs - E_sr` (1-indexed) of the spatial block.
pub fn so2n_k(r: usize, s: usize, n: usize) -> QMat {
    let d = n + 2;
    &QMat::elem(r, s, d) - &QMat::elem(s, r, d)
}

/// so(2,3) in the named 10-element basis used for the homomorphism into
/// sp(2,R): {H1, H2, Ka, W5, M, L, V5, K35, K34, K45}.
pub fn so23_named() -> LieAlgebraBasis {
    let g = so2n_generators(3);
    LieAlgebraBasis::new(
        "so(2,3)",
        &["H1", "H2", "Ka", "W5", "M", "L", "V5", "K35", "K34", "K45"],
        vec![
            g.h1,
            g.h2,
            g.ka,
            g.w[0].clone(),
            g.m,
            g.l,
            g.v[0].clone(),
            so2n_k(3, 5, 3),
            so2n_k(3, 4, 3),
            so2n_k(4, 5, 3),
        ],
    )
    .expect("so(2,3) named construction is exact")
}

/// The reductive-pair bases of so(2,3): `q0 = E12 - E21`, `qi = E1i + Ei1`
/// spanning the tangent part Q, and the so(1,3) stabilizer part H.
pub fn so23_reductive_q() -> Vec<QMat> {
    let mut q = vec![&QMat::elem(1, 2, 5) - &QMat::elem(2, 1, 5)];
    for i in 3..=5 {
        q.push(&QMat::elem(1, i, 5) + &QMat::elem(i, 1, 5));
    }
    q
}

/// H part (stabilizer so(1,3)) of the reductive pair of so(2,3).
pub fn so23_reductive_h() -> Vec<QMat> {
    let mut h = Vec::new();
    for i in 3..=5 {
        h.push(&QMat::elem(2, i, 5) + &QMat::elem(i, 2, 5));
    }
    h.push(so2n_k(3, 4, 3));
    h.push(so2n_k(3, 5, 3));
    h.push(so2n_k(4, 5, 3));
    h
}

/// sl(2,C) realified as 4x4 real matrices in the basis
/// {I1, I2, D1, D2, C1, C2}.
pub fn sl2c() -> LieAlgebraBasis {
    let i1 = QMat::diag_i64(&[1, 1, -1, -1]);
    let i2 = QMat::from_i64(&[
        &[0, -1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    let d1 = &QMat::elem(1, 3, 4) + &QMat::elem(2, 4, 4);
    let d2 = &QMat::elem(2, 3, 4) - &QMat::elem(1, 4, 4);
    let c1 = &QMat::elem(3, 1, 4) + &QMat::elem(4, 2, 4);
    let c2 = &QMat::elem(4, 1, 4) - &QMat::elem(3, 2, 4);
    LieAlgebraBasis::new("sl(2,C)", &["I1", "I2", "D1", "D2", "C1", "C2"], vec![i1, i2, d1, d2, c1, c2])
        .expect("sl(2,C) construction is exact")
}

/// Named generator set of sp(2,R) (4x4, standard symplectic form
/// `Omega = [[0, I], [-I, 0]]`).
pub struct Sp2r {
    pub a1: QMat,
    pub a2: QMat,
    pub b1: QMat,
    pub b2: QMat,
    pub x: QMat,
    pub v: QMat,
    pub w: QMat,
    pub l: QMat,
    pub m: QMat,
    pub y: QMat,
    pub nm: QMat,
    pub f: QMat,
    pub kt: QMat,
    pub k1: QMat,
    pub k2: QMat,
    pub k3: QMat,
}

/// Build the named sp(2,R) generators. The root vector X' carries the
/// corrected (4,4) entry +1 required by the symplectic condition.
pub fn sp2r_generators() -> Sp2r {
    let a1 = QMat::diag_i64(&[1, 1, -1, -1]);
    let a2 = QMat::from_i64(&[
        &[0, 1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, -1],
        &[0, 0, -1, 0],
    ]);
    let b1 = (&a1 + &a2).scale(&qr(1, 2));
    let b2 = (&a1 - &a2).scale(&qr(1, 2));
    let x = QMat::from_i64(&[
        &[1, -1, 0, 0],
        &[1, -1, 0, 0],
        &[0, 0, -1, -1],
        &[0, 0, 1, 1],
    ]);
    let v = QMat::from_i64(&[
        &[1, 1, 0, 0],
        &[-1, -1, 0, 0],
        &[0, 0, -1, 1],
        &[0, 0, -1, 1],
    ]);
    let w = QMat::from_i64(&[
        &[0, 0, 1, 0],
        &[0, 0, 0, -1],
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
    ]);
    let l = QMat::from_i64(&[
        &[0, 0, 1, 1],
        &[0, 0, 1, 1],
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
    ]);
    let m = QMat::from_i64(&[
        &[0, 0, 1, -1],
        &[0, 0, -1, 1],
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
    ]);
    let y = QMat::from_i64(&[
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
        &[1, 0, 0, 0],
        &[0, -1, 0, 0],
    ]);
    let nm = QMat::from_i64(&[
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
        &[1, -1, 0, 0],
        &[-1, 1, 0, 0],
    ]);
    let f = QMat::from_i64(&[
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
        &[1, 1, 0, 0],
        &[1, 1, 0, 0],
    ]);
    let kt = QMat::from_i64(&[
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-1, 0, 0, 0],
        &[0, -1, 0, 0],
    ]);
    let k1 = QMat::from_i64(&[
        &[0, 1, 0, 0],
        &[-1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    let k2 = QMat::from_i64(&[
        &[0, 0, 0, 1],
        &[0, 0, 1, 0],
        &[0, -1, 0, 0],
        &[-1, 0, 0, 0],
    ]);
    let k3 = QMat::from_i64(&[
        &[0, 0, 1, 0],
        &[0, 0, 0, -1],
        &[-1, 0, 0, 0],
        &[0, 1, 0, 0],
    ]);
    Sp2r { a1, a2, b1, b2, x, v, w, l, m, y, nm, f, kt, k1, k2, k3 }
}

/// The symplectic form matrix `Omega = [[0, I], [-I, 0]]` (4x4).
pub fn sp4_omega() -> QMat {
    QMat::from_i64(&[
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-1, 0, 0, 0],
        &[0, -1, 0, 0],
    ])
}

/// sp(2,R) in the ordered basis {A1', A2', X', V', W', L', M', Y', N', F'}.
pub fn sp2r() -> LieAlgebraBasis {
    let g = sp2r_generators();
    LieAlgebraBasis::new(
        "sp(2,R)",
        &["A1'", "A2'", "X'", "V'", "W'", "L'", "M'", "Y'", "N'", "F'"],
        vec![g.a1, g.a2, g.x, g.v, g.w, g.l, g.m, g.y, g.nm, g.f],
    )
    .expect("sp(2,R) construction is exact")
}

/// Check `X^t eta + eta X = 0`, the defining relation of so(p,q).
pub fn in_so_eta(x: &QMat, eta: &QMat) -> bool {
    (&x.transpose() * eta + eta * x).is_zero()
}

/// Check `X^t Omega + Omega X = 0`, the defining relation of sp.
pub fn in_sp(x: &QMat, omega: &QMat) -> bool {
    (&x.transpose() * omega + omega * x).is_zero()
}

/// Image pairs of the exact homomorphism so(2,3) -> sp(2,R)
/// (source basis order of [`so23_named`]).
pub fn psi_so23_to_sp2r_images() -> Vec<QMat> {
    let g = sp2r_generators();
    let half = qr(1, 2);
    vec![
        -&g.b1,
        g.b2.clone(),
        g.kt.scale(&half),
        g.w.clone(),
        g.m.clone(),
        g.l.clone(),
        g.v.scale(&half),
        g.k1.scale(&half),
        g.k2.scale(&half),
        g.k3.scale(&half),
    ]
}

/// Image pairs of the realified isomorphism sl(2,C) -> sp(2,R): conjugation
/// by the permutation swapping the last two coordinates.
pub fn phi_sl2c_to_sp2r_images() -> Vec<QMat> {
    let perm = QMat::from_i64(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, 1, 0],
    ]);
    sl2c().basis.iter().map(|b| &(&perm * b) * &perm).collect()
}

/// Expand each image in the destination basis and assemble the coefficient
/// matrix of a linear map (columns = image coordinates).
pub fn coefficient_map(
    dst: &LieAlgebraBasis,
    images: &[QMat],
) -> Result<QMat, LieError> {
    let n = images.len();
    let mut m = QMat::zeros(dst.dim(), n);
    for (j, img) in images.iter().enumerate() {
        let coords = dst.expand(img)?;
        for (i, v) in coords.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Coefficient matrix of the map sending the abstract roots {A0, A2, A-2}
/// into so(2,1): `A0 -> 2 V0`, `A2 -> V1`, `A-2 -> -V-1`.
pub fn phi_roots_to_so21() -> QMat {
    let mut m = QMat::zeros(3, 3);
    m[(0, 0)] = qi(2);
    m[(1, 1)] = Q::one();
    m[(2, 2)] = qi(-1);
    m
}

/// Identity coefficient map sl(2,R) -> su(1,1): the realified basis of
/// [`su11`] is the image of {H, E, F} under conjugation by `[[1, i], [i, 1]]`,
/// so corresponding coefficients map identically.
pub fn psi_sl2r_to_su11() -> QMat {
    QMat::identity(3)
}

//! The seven families of closed four-dimensional spans, the canonical target
//! algebra, and the isomorphisms between them.

use crate::param::{sc_bracket, ParamAlgebra, Struct4};
use crate::poly::{vars, Frac, Poly};
use lie_core::{qi, qr};

fn p0() -> Poly {
    Poly::zero()
}

fn pr() -> Poly {
    Poly::var(vars::R)
}

fn ps() -> Poly {
    Poly::var(vars::S)
}

/// Parameter tuples (a, a', b, b', c, c', d, d') of the seven families, in
/// terms of the free parameters r, s.
pub fn family(idx: usize) -> ParamAlgebra {
    let r = pr();
    let s = ps();
    let params: [Poly; 8] = match idx {
        // A = J1 + J2/2 + sV, B = W, C = M, D = L + rV
        1 => [
            Poly::constant(qr(1, 2)),
            s,
            p0(),
            p0(),
            p0(),
            p0(),
            p0(),
            r,
        ],
        // A = J1 + rJ2 + sV, B = W, C = M, D = L
        2 => [r, s, p0(), p0(), p0(), p0(), p0(), p0()],
        // A = J1 + J2 + sV, B = W - (r/2)V, C = M, D = L + rJ2
        3 => [
            Poly::one(),
            s,
            p0(),
            r.scale(&qr(-1, 2)),
            p0(),
            p0(),
            r,
            p0(),
        ],
        // A = J1 + J2 + sV, B = W, C = M, D = L + rJ2 + rsV
        4 => [
            Poly::one(),
            s.clone(),
            p0(),
            p0(),
            p0(),
            p0(),
            r.clone(),
            &r * &s,
        ],
        // A = J1 - J2 + sV, B = W - rsJ2 + rs^2 V, C = M + rJ2 - rsV,
        // D = L + rs^2 J2 - rs^3 V
        5 => {
            let rs = &r * &s;
            let rs2 = &rs * &s;
            let rs3 = &rs2 * &s;
            [
                Poly::int(-1),
                s.clone(),
                -&rs,
                rs2.clone(),
                r.clone(),
                -&rs,
                rs2,
                -&rs3,
            ]
        }
        // A = J1 + J2, B = W, C = M, D = L + rJ2
        6 => [Poly::one(), p0(), p0(), p0(), p0(), p0(), r, p0()],
        // A = J1 - J2, B = W, C = M + rJ2, D = L
        7 => [Poly::int(-1), p0(), p0(), p0(), r, p0(), p0(), p0()],
        _ => panic!("family index must be 1..=7"),
    };
    ParamAlgebra::new(params)
}

/// Family 1 normalized to `s = 0`, `r = 1`: the algebra with
/// `[A,B] = B`, `[A,C] = (3/2) C`, `[A,D] = (1/2) D`, `[B,D] = -C`.
pub fn family1_normalized() -> ParamAlgebra {
    let mut params: [Poly; 8] = std::array::from_fn(|_| Poly::zero());
    params[0] = Poly::constant(qr(1, 2));
    params[7] = Poly::one();
    ParamAlgebra::new(params)
}

/// The canonical four-dimensional target algebra on basis `(a, b, c, d)`:
/// `[a,b] = b`, `[a,c] = 2c`, `[c,d] = c`, all other brackets zero.
pub fn canonical_struct() -> Struct4 {
    let mut sc: Struct4 = std::array::from_fn(|_| {
        std::array::from_fn(|_| std::array::from_fn(|_| Poly::zero()))
    });
    let mut set = |i: usize, j: usize, k: usize, c: i64| {
        sc[i][j][k] = Poly::int(c);
        sc[j][i][k] = Poly::int(-c);
    };
    set(0, 1, 1, 1);
    set(0, 2, 2, 2);
    set(2, 3, 2, 1);
    sc
}

/// Does the matrix `phi` (column convention: `phi(e_i) = sum_j phi[j][i] f_j`)
/// define a Lie algebra homomorphism from `src` to `dst`? Entries are
/// rational functions of `r, s`; the check is exact.
pub fn is_homomorphism(phi: &[[Frac; 4]; 4], src: &Struct4, dst: &Struct4) -> bool {
    for i in 0..4 {
        for j in 0..4 {
            // [phi e_i, phi e_j] in dst
            let mut lhs: [Frac; 4] = std::array::from_fn(|_| Frac::zero());
            for k in 0..4 {
                for l in 0..4 {
                    let c = phi[k][i].mul(&phi[l][j]);
                    if c.is_zero() {
                        continue;
                    }
                    for m in 0..4 {
                        lhs[m] = lhs[m]
                            .add(&c.mul(&Frac::from_poly(dst[k][l][m].clone())));
                    }
                }
            }
            // phi([e_i, e_j])
            let mut rhs: [Frac; 4] = std::array::from_fn(|_| Frac::zero());
            for m in 0..4 {
                let c = Frac::from_poly(src[i][j][m].clone());
                if c.is_zero() {
                    continue;
                }
                for n in 0..4 {
                    rhs[n] = rhs[n].add(&c.mul(&phi[n][m]));
                }
            }
            for t in 0..4 {
                if !lhs[t].eq(&rhs[t]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Determinant of a 4x4 matrix of rational functions (Laplace expansion).
pub fn det4(m: &[[Frac; 4]; 4]) -> Frac {
    fn det_n(m: &[Vec<Frac>]) -> Frac {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut out = Frac::zero();
        for (j, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Frac>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = entry.mul(&det_n(&minor));
            out = if j % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
        out
    }
    let rows: Vec<Vec<Frac>> = m.iter().map(|r| r.to_vec()).collect();
    det_n(&rows)
}

fn fq(n: i64, d: i64) -> Frac {
    Frac::from_poly(Poly::constant(qr(n, d)))
}

fn fi(n: i64) -> Frac {
    Frac::from_poly(Poly::int(n))
}

fn fp(p: Poly) -> Frac {
    Frac::from_poly(p)
}

/// Normalization isomorphism family1(r, s) -> family1(1, 0) with the
/// corrected `(3,2)` entry `2s/r` (the printed version has `2sr`).
pub fn phi1() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fi(0), fp(s.scale(&qi(4)))],
        [
            fi(0),
            Frac::new(s.scale(&qi(2)), r.clone()),
            Frac::new(Poly::one(), r.clone()),
            Frac::new((&s * &s).scale(&qi(4)), r),
        ],
        [fi(0), fi(0), fi(0), fi(1)],
    ]
}

/// The printed form of `phi1` with entry `(3,2) = 2sr`, kept to document the
/// typo: it fails the homomorphism check.
pub fn phi1_printed() -> [[Frac; 4]; 4] {
    let mut m = phi1();
    m[2][1] = fp((&pr() * &ps()).scale(&qi(2)));
    m
}

/// Printed isomorphism family3 -> canonical (column convention), det r/(2s).
pub fn phi3_printed() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fp(r.clone())],
        [fi(0), Frac::new(Poly::one(), s.scale(&qi(2))), fi(0), fi(1)],
        [fi(0), fp(s.clone()), fi(1), fp(&s * &s)],
        [fi(0), fi(0), fi(0), fp(r)],
    ]
}

/// Derived isomorphism canonical -> family3 (column convention):
/// a = A, b = B - sC, c = C, d = -A + (D - 2sB + s^2 C)/r.
pub fn phi3() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fi(-1)],
        [fi(0), fi(1), fi(0), Frac::new(s.scale(&qi(-2)), r.clone())],
        [fi(0), fp(-&s), fi(1), Frac::new(&s * &s, r.clone())],
        [fi(0), fi(0), fi(0), Frac::new(Poly::one(), r)],
    ]
}

/// Printed family4 map (documents the typo: fails all conventions), det -r/s.
pub fn phi4_printed() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(2), fi(0), fi(0), fp(-&r)],
        [fi(0), fi(1), Frac::new(Poly::one(), s.clone()), fp(&r * &s)],
        [fi(0), fi(1), fi(0), fp((&r * &s).scale(&qi(2)))],
        [fi(3), fi(0), fi(0), fp(-&r)],
    ]
}

/// Derived isomorphism canonical -> family4 (column convention):
/// a = A, b = B - sC, c = C, d = -(D - 2sB + s^2 C)/r.
pub fn phi4() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fi(0), Frac::new(s.scale(&qi(2)), r.clone())],
        [fi(0), fp(-&s), fi(1), Frac::new(-&(&s * &s), r.clone())],
        [fi(0), fi(0), fi(0), Frac::new(Poly::int(-1), r)],
    ]
}

/// Printed family5 map (documents the typo: fails all conventions), det r.
pub fn phi5_printed() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fi(0), fp(s.scale(&qi(2)))],
        [fi(0), fi(0), fi(0), fi(-1)],
        [fi(0), fp(-&(&r * &s)), fp(r.clone()), fp(&(&r * &s) * &s)],
    ]
}

/// Derived isomorphism canonical -> family5 (column convention):
/// a = A, b = B + sC, c = D + 2sB + s^2 C, d = C/r.
pub fn phi5() -> [[Frac; 4]; 4] {
    let r = pr();
    let s = ps();
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fp(s.scale(&qi(2))), fi(0)],
        [fi(0), fp(s.clone()), fp(&s * &s), Frac::new(Poly::one(), r)],
        [fi(0), fi(0), fi(1), fi(0)],
    ]
}

/// Isomorphism family7 -> canonical (column convention), det -r.
pub fn phi7() -> [[Frac; 4]; 4] {
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fi(0), fi(0)],
        [fi(0), fi(0), fi(0), fi(1)],
        [fi(0), fi(0), fp(pr()), fi(0)],
    ]
}

/// Isomorphism family6 -> family7 (column convention): A -> A, B -> B,
/// C -> D, D -> -C.
pub fn phi67() -> [[Frac; 4]; 4] {
    [
        [fi(1), fi(0), fi(0), fi(0)],
        [fi(0), fi(1), fi(0), fi(0)],
        [fi(0), fi(0), fi(0), fi(-1)],
        [fi(0), fi(0), fi(1), fi(0)],
    ]
}

/// Row-reduce polynomial 4-vectors to a basis over the rational-function
/// field; returns the reduced spanning set.
pub fn span_basis(vectors: &[[Poly; 4]]) -> Vec<[Frac; 4]> {
    let mut rows: Vec<[Frac; 4]> = vectors
        .iter()
        .filter(|v| v.iter().any(|p| !p.is_zero()))
        .map(|v| std::array::from_fn(|i| Frac::from_poly(v[i].clone())))
        .collect();
    let mut rank = 0;
    for c in 0..4 {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Frac::one().div(&rows[rank][c].clone());
        for k in 0..4 {
            rows[rank][k] = rows[rank][k].mul(&inv);
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..4 {
                    rows[i][k] = rows[i][k].sub(&f.mul(&rows[rank][k]));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

fn frac_rows_to_poly(rows: &[[Frac; 4]]) -> Vec<[Poly; 4]> {
    rows.iter()
        .map(|r| {
            // clear denominators
            let mut den = Poly::one();
            for f in r {
                den = &den * &f.den;
            }
            std::array::from_fn(|i| (&r[i].num * &den).try_div(&r[i].den).unwrap())
        })
        .collect()
}

/// Dimensions of the derived series `[R, R] ⊇ [[R,R],[R,R]] ⊇ …`.
pub fn derived_series_dims(sc: &Struct4) -> Vec<usize> {
    let mut cur: Vec<[Poly; 4]> = (0..4)
        .map(|i| std::array::from_fn(|k| if k == i { Poly::one() } else { Poly::zero() }))
        .collect();
    let mut dims = Vec::new();
    loop {
        let mut brackets = Vec::new();
        for u in &cur {
            for v in &cur {
                brackets.push(sc_bracket(sc, u, v));
            }
        }
        let next = frac_rows_to_poly(&span_basis(&brackets));
        dims.push(next.len());
        if next.is_empty() || next.len() == cur.len() {
            return dims;
        }
        cur = next;
    }
}

/// Lower-central-series nilpotency test.
pub fn is_nilpotent(sc: &Struct4) -> bool {
    let full: Vec<[Poly; 4]> = (0..4)
        .map(|i| std::array::from_fn(|k| if k == i { Poly::one() } else { Poly::zero() }))
        .collect();
    let mut cur = full.clone();
    for _ in 0..8 {
        let mut brackets = Vec::new();
        for u in &full {
            for v in &cur {
                brackets.push(sc_bracket(sc, u, v));
            }
        }
        cur = frac_rows_to_poly(&span_basis(&brackets));
        if cur.is_empty() {
            return true;
        }
    }
    false
}

//! Chevalley 2-cocycle (symplectic) forms on the four-dimensional families:
//! the linear cocycle system over the six independent skew entries, its
//! general solution over the rational-function field in `(r, s)`, and the
//! closed-form determinants.

use crate::param::Struct4;
use crate::poly::{vars, Frac, Poly};

/// A skew 4x4 form over the basis `(A, B, C, D)` with rational-function
/// entries, together with its determinant.
#[derive(Debug, Clone)]
pub struct SymplecticForm4 {
    pub entries: [[Frac; 4]; 4],
    pub det: Frac,
}

/// Build the skew matrix from the six upper-triangle unknowns in the order
/// `(alpha, beta, gamma, delta, sigma, eps)` placed as
/// `omega = [[0,-a,-b,-g],[a,0,-d,-s],[b,d,0,-e],[g,s,e,0]]`.
pub fn omega_from_entries(u: &[Frac; 6]) -> [[Frac; 4]; 4] {
    let z = Frac::zero;
    let [a, b, g, d, s, e] = u.clone();
    [
        [z(), a.neg(), b.neg(), g.neg()],
        [a.clone(), z(), d.neg(), s.neg()],
        [b.clone(), d.clone(), z(), e.neg()],
        [g.clone(), s.clone(), e.clone(), z()],
    ]
}

/// The six generic unknowns as polynomial variables.
pub fn generic_entries() -> [Frac; 6] {
    [
        vars::ALPHA,
        vars::BETA,
        vars::GAMMA,
        vars::DELTA,
        vars::SIGMA,
        vars::EPS,
    ]
    .map(|v| Frac::from_poly(Poly::var(v)))
}

/// Residuals of the cocycle identity
/// `omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0`
/// on the four basis triples, for an arbitrary skew matrix.
pub fn cocycle_residuals(sc: &Struct4, omega: &[[Frac; 4]; 4]) -> [Frac; 4] {
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    triples.map(|(i, j, k)| {
        let mut ex = Frac::zero();
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            for m in 0..4 {
                ex = ex.add(
                    &Frac::from_poly(sc[x][y][m].clone()).mul(&omega[m][z]),
                );
            }
        }
        ex
    })
}

pub fn is_cocycle(sc: &Struct4, omega: &[[Frac; 4]; 4]) -> bool {
    cocycle_residuals(sc, omega).iter().all(|r| r.is_zero())
}

/// The 4x6 coefficient matrix of the cocycle system in the six unknowns
/// (entries are polynomials in `r, s`).
fn system_matrix(sc: &Struct4) -> [[Poly; 6]; 4] {
    let units: Vec<[Frac; 6]> = (0..6)
        .map(|t| std::array::from_fn(|i| if i == t { Frac::one() } else { Frac::zero() }))
        .collect();
    std::array::from_fn(|row| {
        std::array::from_fn(|col| {
            let om = omega_from_entries(&units[col]);
            let res = cocycle_residuals(sc, &om);
            assert!(res[row].den.as_constant().is_some());
            res[row].num.scale(&res[row].den.as_constant().unwrap().recip())
        })
    })
}

/// General solution of the cocycle system: entry values
/// `(alpha..eps)` as rational functions of `r, s` and the free coefficients
/// `c0, c1, c2, …` (one per nullspace dimension, assigned to free columns in
/// increasing order).
pub struct CocycleSolution {
    pub dim: usize,
    /// the six entry values with free coefficients substituted in
    pub general: [Frac; 6],
    pub form: SymplecticForm4,
}

/// Solve the system by row reduction over the rational-function field.
pub fn symplectic_solve(sc: &Struct4) -> CocycleSolution {
    let m = system_matrix(sc);
    let mut rows: Vec<[Frac; 6]> = m
        .iter()
        .map(|r| std::array::from_fn(|i| Frac::from_poly(r[i].clone())))
        .collect();
    // reduced row echelon form
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for c in 0..6 {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Frac::one().div(&rows[rank][c].clone());
        for k in 0..6 {
            rows[rank][k] = rows[rank][k].mul(&inv);
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..6 {
                    rows[i][k] = rows[i][k].sub(&f.mul(&rows[rank][k]));
                }
            }
        }
        pivots.push((rank, c));
        rank += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..6).filter(|c| !pivot_cols.contains(c)).collect();
    // nullspace basis: one vector per free column (unit there, solved pivots)
    let mut general: [Frac; 6] = std::array::from_fn(|_| Frac::zero());
    for (k, &fc) in free_cols.iter().enumerate() {
        let cv = Frac::from_poly(Poly::var(vars::C0 + k));
        general[fc] = general[fc].add(&cv);
        for &(prow, pcol) in &pivots {
            general[pcol] = general[pcol].sub(&cv.mul(&rows[prow][fc]));
        }
    }
    let entries = omega_from_entries(&general);
    let det = crate::families::det4(&entries);
    CocycleSolution {
        dim: free_cols.len(),
        general,
        form: SymplecticForm4 { entries, det },
    }
}

/// Is the general solution nondegenerate for some parameter values, i.e. is
/// the determinant not identically zero?
pub fn admits_nondegenerate(sol: &CocycleSolution) -> bool {
    !sol.form.det.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{canonical_struct, det4, family, family1_normalized};
    use crate::param::r_prime;
    use lie_core::{qi, qr};

    fn fr(num: Poly, den: Poly) -> Frac {
        Frac::new(num, den)
    }

    fn pv(v: usize) -> Poly {
        Poly::var(v)
    }

    fn c(k: usize) -> Poly {
        Poly::var(vars::C0 + k)
    }

    #[test]
    fn general_solutions_match_frozen_forms() {
        let r = pv(vars::R);
        let s = pv(vars::S);
        let check = |idx: usize, expect: [Frac; 6]| {
            let sol = symplectic_solve(&family(idx).structure_constants().unwrap());
            assert_eq!(sol.dim, 3, "family {idx} dim");
            for t in 0..6 {
                assert!(
                    sol.general[t].eq(&expect[t]),
                    "family {idx} entry {t}: {} vs {}",
                    sol.general[t],
                    expect[t]
                );
            }
        };
        // family 1: (c0, -3c2/(2r), c1, 0, c2, 0)
        check(1, [
            Frac::from_poly(c(0)),
            fr(c(2).scale(&qi(-3)), r.scale(&qi(2))),
            Frac::from_poly(c(1)),
            Frac::zero(),
            Frac::from_poly(c(2)),
            Frac::zero(),
        ]);
        // family 3: ((-c1 - c2 s)/r, -2c2/r, c0, 0, c1, c2)
        check(3, [
            fr(&(-&c(1)) - &(&c(2) * &s), r.clone()),
            fr(c(2).scale(&qi(-2)), r.clone()),
            Frac::from_poly(c(0)),
            Frac::zero(),
            Frac::from_poly(c(1)),
            Frac::from_poly(c(2)),
        ]);
        // family 4: (c0, -2c2/r, c1, 0, c2 s, c2)
        check(4, [
            Frac::from_poly(c(0)),
            fr(c(2).scale(&qi(-2)), r.clone()),
            Frac::from_poly(c(1)),
            Frac::zero(),
            Frac::from_poly(&c(2) * &s),
            Frac::from_poly(c(2)),
        ]);
        // family 5: (-c0 s/2 - c1/(2s) - c2/(rs), c0, c1, 0, -c2 s, c2)
        let alpha5 = Frac::from_poly(&c(0) * &s.scale(&qr(-1, 2)))
            .add(&fr(-&c(1), s.scale(&qi(2))))
            .add(&fr(-&c(2), &r * &s));
        check(5, [
            alpha5,
            Frac::from_poly(c(0)),
            Frac::from_poly(c(1)),
            Frac::zero(),
            Frac::from_poly(-&(&c(2) * &s)),
            Frac::from_poly(c(2)),
        ]);
        // family 6: (c0, -2c2/r, c1, 0, 0, c2)
        check(6, [
            Frac::from_poly(c(0)),
            fr(c(2).scale(&qi(-2)), r.clone()),
            Frac::from_poly(c(1)),
            Frac::zero(),
            Frac::zero(),
            Frac::from_poly(c(2)),
        ]);
        // family 7: (c0, c1, -2c2/r, 0, 0, c2)
        check(7, [
            Frac::from_poly(c(0)),
            Frac::from_poly(c(1)),
            fr(c(2).scale(&qi(-2)), r.clone()),
            Frac::zero(),
            Frac::zero(),
            Frac::from_poly(c(2)),
        ]);
    }

    #[test]
    fn general_solution_determinants() {
        let r = pv(vars::R);
        let s = pv(vars::S);
        let det = |idx: usize| {
            symplectic_solve(&family(idx).structure_constants().unwrap()).form.det
        };
        // family 1: 9 c2^4 / (4 r^2)
        assert!(det(1).eq(&fr(c(2).pow(4).scale(&qi(9)), (&r * &r).scale(&qi(4)))));
        // family 2 and R': identically degenerate
        assert!(det(2).is_zero());
        let solr = symplectic_solve(&r_prime().structure_constants().unwrap());
        assert_eq!(solr.dim, 3);
        assert!(solr.form.det.is_zero());
        // R': the closed entries force delta = sigma = eps = 0
        assert!(solr.general[3].is_zero());
        assert!(solr.general[4].is_zero());
        assert!(solr.general[5].is_zero());
        // family 3: c2^2 (c2 s - c1)^2 / r^2
        let q3 = &(&c(2) * &s) - &c(1);
        assert!(det(3).eq(&fr(&c(2).pow(2) * &(&q3 * &q3), &r * &r)));
        // family 4: c2^2 (c0 r + 2 c2 s)^2 / r^2
        let q4 = &(&c(0) * &r) + &(&c(2) * &s).scale(&qi(2));
        assert!(det(4).eq(&fr(&c(2).pow(2) * &(&q4 * &q4), &r * &r)));
        // family 5: c2^2 (c0 r s^2 - c1 r - 2 c2)^2 / (4 r^2 s^2)
        let q5 = &(&(&(&c(0) * &r) * &(&s * &s)) - &(&c(1) * &r)) - &c(2).scale(&qi(2));
        assert!(det(5).eq(&fr(
            &c(2).pow(2) * &(&q5 * &q5),
            (&(&r * &r) * &(&s * &s)).scale(&qi(4))
        )));
        // families 6, 7: c0^2 c2^2
        let q67 = Frac::from_poly(&c(0).pow(2) * &c(2).pow(2));
        assert!(det(6).eq(&q67));
        assert!(det(7).eq(&q67));
    }

    fn printed_omega(entries: [Frac; 6]) -> [[Frac; 4]; 4] {
        omega_from_entries(&entries)
    }

    #[test]
    fn printed_forms_and_their_determinants() {
        let r = pv(vars::R);
        let s = pv(vars::S);
        let al = pv(vars::ALPHA);
        let be = pv(vars::BETA);
        let ga = pv(vars::GAMMA);
        let ep = pv(vars::EPS);
        // family 1 printed form: delta = 0, sigma = -2 beta r / 3, eps = 0
        let om1 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            Frac::from_poly(ga.clone()),
            Frac::zero(),
            Frac::from_poly((&be * &r).scale(&qr(-2, 3))),
            Frac::zero(),
        ]);
        let sc1 = family(1).structure_constants().unwrap();
        assert!(is_cocycle(&sc1, &om1));
        // det truth (2 beta^2 r / 3)^2; the printed (2 beta r / 3)^2 is a typo
        let truth1 = (&(&be * &be) * &r).scale(&qr(2, 3));
        assert!(det4(&om1).eq(&Frac::from_poly(&truth1 * &truth1)));
        let printed1 = (&be * &r).scale(&qr(2, 3));
        assert!(!det4(&om1).eq(&Frac::from_poly(&printed1 * &printed1)));

        // family 3 printed form is NOT a cocycle (recorded typo)
        let s3 = &(&(&be * &r) * &s).scale(&qr(1, 2)) - &(&al * &r);
        let om3 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            Frac::from_poly(ga.clone()),
            Frac::zero(),
            Frac::from_poly(-&s3),
            Frac::from_poly((&be * &r).scale(&qr(-1, 2))),
        ]);
        let sc3 = family(3).structure_constants().unwrap();
        assert!(!is_cocycle(&sc3, &om3));

        // family 4 printed form: det = beta^2 r^2 (beta s - alpha)^2 / 4
        let om4 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            Frac::from_poly(ga.clone()),
            Frac::zero(),
            Frac::from_poly((&(&be * &r) * &s).scale(&qr(-1, 2))),
            Frac::from_poly((&be * &r).scale(&qr(-1, 2))),
        ]);
        let sc4 = family(4).structure_constants().unwrap();
        assert!(is_cocycle(&sc4, &om4));
        let q4 = &(&be * &s) - &al;
        assert!(det4(&om4).eq(&Frac::from_poly(
            (&(&(&be * &be) * &(&r * &r)) * &(&q4 * &q4)).scale(&qr(1, 4))
        )));

        // family 5 printed form: det = eps^2 (alpha + beta s)^2
        let g5 = fr(
            &(&(&(&be * &r) * &(&s * &s)) + &(&(&al * &r) * &s).scale(&qi(2)))
                + &ep.scale(&qi(2)),
            r.clone(),
        );
        let om5 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            g5.neg(),
            Frac::zero(),
            Frac::from_poly(-&(&ep * &s)),
            Frac::from_poly(ep.clone()),
        ]);
        let sc5 = family(5).structure_constants().unwrap();
        assert!(is_cocycle(&sc5, &om5));
        let q5 = &al + &(&be * &s);
        assert!(det4(&om5).eq(&Frac::from_poly(&(&ep * &ep) * &(&q5 * &q5))));

        // family 6 printed form: det = (alpha beta r / 2)^2
        let om6 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            Frac::from_poly(ga.clone()),
            Frac::zero(),
            Frac::zero(),
            Frac::from_poly((&be * &r).scale(&qr(-1, 2))),
        ]);
        let sc6 = family(6).structure_constants().unwrap();
        assert!(is_cocycle(&sc6, &om6));
        let q6 = (&(&al * &be) * &r).scale(&qr(1, 2));
        assert!(det4(&om6).eq(&Frac::from_poly(&q6 * &q6)));

        // family 7 printed form: det = (alpha gamma r / 2)^2 (paper prints it
        // unsquared)
        let om7 = printed_omega([
            Frac::from_poly(al.clone()),
            Frac::from_poly(be.clone()),
            Frac::from_poly(ga.clone()),
            Frac::zero(),
            Frac::zero(),
            Frac::from_poly((&ga * &r).scale(&qr(-1, 2))),
        ]);
        let sc7 = family(7).structure_constants().unwrap();
        assert!(is_cocycle(&sc7, &om7));
        let q7 = (&(&al * &ga) * &r).scale(&qr(1, 2));
        assert!(det4(&om7).eq(&Frac::from_poly(&q7 * &q7)));
    }

    #[test]
    fn canonical_algebra_has_solutions() {
        let sol = symplectic_solve(&canonical_struct());
        assert!(sol.dim >= 1);
    }

    #[test]
    fn normalized_family1_solution() {
        let sol = symplectic_solve(&family1_normalized().structure_constants().unwrap());
        assert_eq!(sol.dim, 3);
        assert!(admits_nondegenerate(&sol));
        // every solution is a cocycle by construction
        let scn = family1_normalized().structure_constants().unwrap();
        assert!(is_cocycle(&scn, &sol.form.entries));
    }
}

//! Orbit openness of the solvable subgroup action via the rank of the
//! fundamental vector fields, computed by two independent methods.

use crate::{fundamental_field, orbit_generators, AdSPoint, AdsError, Sheet};
use nalgebra::DMatrix;

/// Openness of the orbit through a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitType {
    Open,
    Closed,
}

/// One of the four orbits: two open regions separated by the singularity and
/// the two closed sheets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    OpenPositive,
    OpenNegative,
    ClosedSheet(Sheet),
}

/// Row-echelon rank with a relative pivot threshold.
fn echelon_rank(rows: &[Vec<f64>], tol: f64) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let scale = m
        .iter()
        .flat_map(|r| r.iter().map(|x| x.abs()))
        .fold(0.0_f64, f64::max)
        .max(1e-300);
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some((p, pv)) = (rank..m.len())
            .map(|i| (i, m[i][c].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            break;
        };
        if pv < tol * scale {
            continue;
        }
        m.swap(rank, p);
        for i in (rank + 1)..m.len() {
            let f = m[i][c] / m[rank][c];
            if f != 0.0 {
                for j in c..cols {
                    m[i][j] -= f * m[rank][j];
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Singular-value rank with a relative threshold.
fn svd_rank(rows: &[Vec<f64>], tol: f64) -> usize {
    let nr = rows.len();
    let nc = rows[0].len();
    let m = DMatrix::from_fn(nr, nc, |i, j| rows[i][j]);
    let svd = m.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > tol * smax).count()
}

fn stack_rank(p: &AdSPoint, gens: &[lie_core::QMat]) -> Result<usize, AdsError> {
    let rows: Vec<Vec<f64>> = gens.iter().map(|x| fundamental_field(x, p)).collect();
    let tol = 1e-9;
    let r1 = svd_rank(&rows, tol);
    let r2 = echelon_rank(&rows, tol);
    if r1 != r2 {
        return Err(AdsError::RankDisagreement(r1, r2));
    }
    Ok(r1)
}

/// Rank of the stacked fundamental fields of the solvable subalgebra
/// generators at `p`, for the positive-root group and its opposite; the point
/// lies on a closed orbit of the pair iff either rank falls below `l`. Each
/// rank is computed by SVD and by row echelon, which must agree.
pub fn orbit_type(p: &AdSPoint) -> Result<OrbitType, AdsError> {
    let (first, second) = orbit_generators(p.l)?;
    let r_first = stack_rank(p, &first)?;
    let r_second = stack_rank(p, &second)?;
    Ok(if r_first == p.l && r_second == p.l {
        OrbitType::Open
    } else {
        OrbitType::Closed
    })
}

/// Which of the two stacks is rank-deficient (for closed points).
fn deficient_sheet(p: &AdSPoint) -> Result<Sheet, AdsError> {
    let (first, second) = orbit_generators(p.l)?;
    let r_first = stack_rank(p, &first)?;
    if r_first < p.l {
        Ok(Sheet::Minus)
    } else {
        let _ = second;
        Ok(Sheet::Plus)
    }
}

/// Assign one of the four orbit labels: the sign of `t^2 - y^2` for open
/// orbits, the vanishing sheet for closed ones.
pub fn orbit_label(p: &AdSPoint) -> Result<OrbitLabel, AdsError> {
    let t = p.t();
    let y = p.y();
    match orbit_type(p)? {
        OrbitType::Open => Ok(if t * t - y * y > 0.0 {
            OrbitLabel::OpenPositive
        } else {
            OrbitLabel::OpenNegative
        }),
        OrbitType::Closed => Ok(OrbitLabel::ClosedSheet(deficient_sheet(p)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{circle_point, is_singular, AdSPoint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn closed_iff_singular() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let x: f64 = rng.gen_range(-2.0..2.0);
            let y: f64 = rng.gen_range(-2.0..2.0);
            let mu: f64 = rng.gen_range(-3.0..3.0);
            let r = (1.0 + x * x + y * y).sqrt();
            let p = AdSPoint::new(3, vec![r * mu.cos(), -r * mu.sin(), x, y]).unwrap();
            let closed = orbit_type(&p).unwrap() == OrbitType::Closed;
            assert_eq!(closed, is_singular(&p, 1e-9).singular, "at {:?}", p.coords);
        }
    }

    #[test]
    fn sheet_points_are_closed() {
        // t = y: u^2 - x^2 = 1
        let eta = 0.7f64;
        let p = AdSPoint::new(3, vec![eta.cosh(), 0.9, eta.sinh(), 0.9]).unwrap();
        assert_eq!(orbit_type(&p).unwrap(), OrbitType::Closed);
        assert_eq!(orbit_label(&p).unwrap(), OrbitLabel::ClosedSheet(crate::Sheet::Minus));
        let p = AdSPoint::new(3, vec![eta.cosh(), 0.9, eta.sinh(), -0.9]).unwrap();
        assert_eq!(orbit_label(&p).unwrap(), OrbitLabel::ClosedSheet(crate::Sheet::Plus));
    }

    #[test]
    fn circle_openness_matches_angle() {
        for mu in [0.4, 1.2, -2.0] {
            let p = circle_point(mu, 3);
            assert_eq!(orbit_type(&p).unwrap(), OrbitType::Open);
        }
        for mu in [0.0, std::f64::consts::PI] {
            let p = circle_point(mu, 3);
            assert_eq!(orbit_type(&p).unwrap(), OrbitType::Closed);
        }
    }

    #[test]
    fn exactly_four_orbit_labels() {
        let mut labels: HashSet<OrbitLabel> = HashSet::new();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // open-orbit representatives from random sampling
        for _ in 0..1000 {
            let x: f64 = rng.gen_range(-2.0..2.0);
            let y: f64 = rng.gen_range(-2.0..2.0);
            let mu: f64 = rng.gen_range(-3.0..3.0);
            let r = (1.0 + x * x + y * y).sqrt();
            let p = AdSPoint::new(3, vec![r * mu.cos(), -r * mu.sin(), x, y]).unwrap();
            labels.insert(orbit_label(&p).unwrap());
        }
        // closed-orbit representatives on both sheets
        for (t, sgn) in [(0.5, 1.0), (0.5, -1.0)] {
            let eta = 0.3f64;
            let p = AdSPoint::new(3, vec![eta.cosh(), t, eta.sinh(), sgn * t]).unwrap();
            labels.insert(orbit_label(&p).unwrap());
        }
        assert_eq!(labels.len(), 4);
        let open = labels
            .iter()
            .filter(|l| matches!(l, OrbitLabel::OpenPositive | OrbitLabel::OpenNegative))
            .count();
        assert_eq!(open, 2);
    }

    #[test]
    fn four_dimensional_case_ranks() {
        // generic point of the 4-dimensional quadric lies on an open orbit
        let (t, x1, x2, y) = (0.3, 0.2, 0.1, 0.25);
        let u = (1.0f64 - t * t + x1 * x1 + x2 * x2 + y * y).sqrt();
        let q = AdSPoint::new(4, vec![u, t, x1, x2, y]).unwrap();
        assert_eq!(orbit_type(&q).unwrap(), OrbitType::Open);
        // a sheet point (t equal to its partner coordinate) is closed
        let eta = 0.4f64;
        let p = AdSPoint::new(4, vec![eta.cosh(), 0.6, eta.sinh(), 0.6, 0.0]).unwrap();
        assert_eq!(orbit_type(&p).unwrap(), OrbitType::Closed);
    }
}

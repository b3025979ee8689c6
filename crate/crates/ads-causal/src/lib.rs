//! Causal structure of the anti-de Sitter quadric `u^2 + t^2 - sum x_i^2 = 1`
//! in signature (2, l-1): null geodesics, singularity sheets, fall times,
//! interior/exterior/horizon classification, orbit openness, and the
//! two-dimensional special case.

use lie_core::algebras::{sl2r, so2n_generators};
use lie_core::{FMat, KillingConvention, QMat};
use thiserror::Error;

pub mod orbit;

pub use orbit::{orbit_label, orbit_type, OrbitLabel, OrbitType};

/// Errors of the causal-structure routines.
#[derive(Debug, Error)]
pub enum AdsError {
    #[error("point violates the quadric constraint by {0}")]
    OffQuadric(f64),
    #[error("direction vector norm deviates from 1 by {0}")]
    BadDirection(f64),
    #[error("group membership residual {0} too large")]
    Membership(f64),
    #[error("need at least 8 sampled directions, got {0}")]
    TooFewDirections(usize),
    #[error("rank computed by SVD and row echelon disagree ({0} vs {1})")]
    RankDisagreement(usize, usize),
    #[error("dimension {0} not supported by this operation")]
    UnsupportedDimension(usize),
}

/// Signature form `eta(x, y) = -x_0 y_0 - x_1 y_1 + sum_{i >= 2} x_i y_i`.
pub fn eta_dot(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let mut s = -x[0] * y[0] - x[1] * y[1];
    for i in 2..x.len() {
        s += x[i] * y[i];
    }
    s
}

/// Index of the spatial coordinate entering the singularity equation
/// `t^2 - y^2 = 0` (the coordinate mixed with `t` by the quotient generator).
pub fn sing_index(l: usize) -> usize {
    if l == 2 {
        2
    } else {
        3
    }
}

/// A point of the quadric in ambient coordinates `(u, t, x_1, ..., x_{l-1})`.
#[derive(Debug, Clone)]
pub struct AdSPoint {
    pub l: usize,
    pub coords: Vec<f64>,
    /// group element whose class maps to this point, when known
    pub source: Option<FMat>,
}

impl AdSPoint {
    /// Validate the quadric constraint `u^2 + t^2 - sum x_i^2 = 1`.
    pub fn new(l: usize, coords: Vec<f64>) -> Result<Self, AdsError> {
        assert_eq!(coords.len(), l + 1);
        // relative defect: the quadratic terms grow like |coords|^2 and carry
        // proportional rounding
        let scale = 1.0 + coords.iter().map(|x| x * x).sum::<f64>();
        let defect = (eta_dot(&coords, &coords) + 1.0).abs() / scale;
        if defect > 1e-10 {
            return Err(AdsError::OffQuadric(defect));
        }
        Ok(AdSPoint { l, coords, source: None })
    }

    pub fn u(&self) -> f64 {
        self.coords[0]
    }

    pub fn t(&self) -> f64 {
        self.coords[1]
    }

    /// Spatial coordinate paired with `t` in the singularity (the partner
    /// coordinate of the quotient generator): index 2 for l = 2, index 3
    /// otherwise.
    pub fn y(&self) -> f64 {
        self.coords[sing_index(self.l)]
    }

    /// Is this point on the circle `{(cos mu, -sin mu, 0, ..., 0)}`?
    pub fn on_rotation_circle(&self, tol: f64) -> bool {
        self.coords[2..].iter().all(|x| x.abs() < tol)
    }
}

/// Base point `(1, 0, ..., 0)`.
pub fn base_point(l: usize) -> AdSPoint {
    let mut coords = vec![0.0; l + 1];
    coords[0] = 1.0;
    AdSPoint { l, coords, source: Some(FMat::identity(l + 1)) }
}

/// Unit direction on the sphere `S^{l-2}` parametrizing light rays.
#[derive(Debug, Clone)]
pub struct LightDirection {
    pub w: Vec<f64>,
}

impl LightDirection {
    pub fn new(w: Vec<f64>) -> Result<Self, AdsError> {
        let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(AdsError::BadDirection((norm - 1.0).abs()));
        }
        Ok(LightDirection { w })
    }

    /// Last component (the one entering the fall-time formulas).
    pub fn w_last(&self) -> f64 {
        *self.w.last().unwrap()
    }
}

/// Nilpotent generator of the light ray with direction `w`:
/// first row `(0, 1, w^t)`, first column `(0, -1, w)^t`, zero elsewhere.
/// Lies in so(2, l-1) and satisfies `N^3 = 0`; `N e_1 = (0, -1, w)`.
pub fn light_generator(dir: &LightDirection) -> FMat {
    let d = dir.w.len() + 2;
    let mut n = FMat::zeros(d);
    n.set(0, 1, 1.0);
    n.set(1, 0, -1.0);
    for (i, &wi) in dir.w.iter().enumerate() {
        n.set(0, 2 + i, wi);
        n.set(2 + i, 0, wi);
    }
    n
}

/// Rotation by `mu` in the `(u, t)` plane (the one-parameter group of the
/// compact generator): maps the base point to `(cos mu, -sin mu, 0, ...)`.
pub fn rotation(mu: f64, d: usize) -> FMat {
    let mut g = FMat::identity(d);
    g.set(0, 0, mu.cos());
    g.set(0, 1, mu.sin());
    g.set(1, 0, -mu.sin());
    g.set(1, 1, mu.cos());
    g
}

fn mat_vec_f(m: &FMat, v: &[f64]) -> Vec<f64> {
    let n = m.n;
    (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j) * v[j]).sum())
        .collect()
}

/// Residual of `g^t eta g = eta` for the quadric signature.
pub fn ortho_residual(g: &FMat) -> f64 {
    let d = g.n;
    let mut em = FMat::zeros(d);
    em.set(0, 0, -1.0);
    em.set(1, 1, -1.0);
    for i in 2..d {
        em.set(i, i, 1.0);
    }
    g.transpose().mul(&em).mul(g).sub(&em).max_abs()
}

/// Project a group element to the quadric: `g -> g . (1, 0, ..., 0)`.
pub fn project_to_ads(g: &FMat, l: usize) -> Result<AdSPoint, AdsError> {
    assert_eq!(g.n, l + 1);
    let res = ortho_residual(g);
    if res > 1e-8 {
        return Err(AdsError::Membership(res));
    }
    let e1: Vec<f64> = (0..=l).map(|i| if i == 0 { 1.0 } else { 0.0 }).collect();
    let coords = mat_vec_f(g, &e1);
    let mut p = AdSPoint::new(l, coords)?;
    p.source = Some(g.clone());
    Ok(p)
}

/// Point of the light geodesic through `g` with direction `w` at affine
/// parameter `s`: `g . exp(s N_w) . e_1 = g . (e_1 + s N_w e_1 + (s^2/2) N_w^2 e_1)`
/// (the exponential truncates since `N_w` is nilpotent). For `g = rotation(mu)`
/// the components are `(cos mu - s sin mu, -sin mu - s cos mu, s w)` when
/// `|w| = 1`.
pub fn light_geodesic(
    g: &FMat,
    dir: &LightDirection,
    s: f64,
) -> Result<AdSPoint, AdsError> {
    let l = g.n - 1;
    let n = light_generator(dir);
    let d = g.n;
    let e1: Vec<f64> = (0..d).map(|i| if i == 0 { 1.0 } else { 0.0 }).collect();
    let ne1 = mat_vec_f(&n, &e1);
    let nne1 = mat_vec_f(&n, &ne1);
    let ray: Vec<f64> = (0..d)
        .map(|i| e1[i] + s * ne1[i] + 0.5 * s * s * nne1[i])
        .collect();
    let coords = mat_vec_f(g, &ray);
    let mut p = AdSPoint::new(l, coords)?;
    p.source = None;
    Ok(p)
}

/// Which sheet of the singularity a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sheet {
    /// `y - t = 0`
    Minus,
    /// `y + t = 0`
    Plus,
}

/// Singularity membership `t^2 - y^2 = 0` with the vanishing sheet(s).
#[derive(Debug, Clone)]
pub struct SingularityCheck {
    pub singular: bool,
    pub sheets: Vec<Sheet>,
    pub defect: f64,
}

/// Test `|t^2 - y^2| < tol` and report which factor vanishes.
pub fn is_singular(p: &AdSPoint, tol: f64) -> SingularityCheck {
    let t = p.t();
    let y = p.y();
    let defect = (t * t - y * y).abs();
    let singular = defect < tol;
    let mut sheets = Vec::new();
    if singular {
        let stol = tol.sqrt().max(tol);
        if (y - t).abs() < stol {
            sheets.push(Sheet::Minus);
        }
        if (y + t).abs() < stol {
            sheets.push(Sheet::Plus);
        }
    }
    SingularityCheck { singular, sheets, defect }
}

/// Extended-real hit time: the affine parameter of the first positive
/// intersection, or `Never`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HitTime {
    At(f64),
    Never,
}

impl HitTime {
    pub fn is_finite(&self) -> bool {
        matches!(self, HitTime::At(_))
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            HitTime::At(s) => Some(*s),
            HitTime::Never => None,
        }
    }
}

/// Smallest nonnegative root of the affine function `c + s d`, if any.
fn affine_hit(c: f64, d: f64) -> HitTime {
    if c == 0.0 {
        return HitTime::At(0.0);
    }
    if d == 0.0 {
        return HitTime::Never;
    }
    let s = -c / d;
    if s >= 0.0 {
        HitTime::At(s)
    } else {
        HitTime::Never
    }
}

/// Affine coefficients `(c, d)` of the two sheet functions `(y - t)(s)` and
/// `(y + t)(s)` along the future-oriented geodesic with source `g` and
/// direction `w`.
fn sheet_affine(g: &FMat, dir: &LightDirection) -> ((f64, f64), (f64, f64)) {
    let d = g.n;
    let idx = sing_index(d - 1);
    let e1: Vec<f64> = (0..d).map(|i| if i == 0 { 1.0 } else { 0.0 }).collect();
    let n = light_generator(dir);
    let p0 = mat_vec_f(g, &e1);
    let mut dv = mat_vec_f(g, &mat_vec_f(&n, &e1));
    // orient the ray toward the future: positive pairing with the compact
    // rotation field at the start point (a timelike vector)
    if dv[0] * p0[1] - dv[1] * p0[0] < 0.0 {
        for x in &mut dv {
            *x = -*x;
        }
    }
    let (t0, y0) = (p0[1], p0[idx]);
    let (dt, dy) = (dv[1], dv[idx]);
    ((y0 - t0, dy - dt), (y0 + t0, dy + dt))
}

/// Hit times of the two singularity sheets along the geodesic with source
/// `g` and direction `w`: exact affine solves of `(y - t)(s) = 0` and
/// `(y + t)(s) = 0` (the geodesic components are degree 1 in `s`).
pub fn sheet_hit_times(g: &FMat, dir: &LightDirection) -> (HitTime, HitTime) {
    let ((cm, dm), (cp, dp)) = sheet_affine(g, dir);
    (affine_hit(cm, dm), affine_hit(cp, dp))
}

/// Root of `c + s d` at any parameter value, reported as `|s|`; `Never` only
/// when the line is parallel to and off the sheet.
fn affine_line_hit(c: f64, d: f64) -> HitTime {
    if c == 0.0 {
        HitTime::At(0.0)
    } else if d == 0.0 {
        HitTime::Never
    } else {
        HitTime::At((c / d).abs())
    }
}

/// Intersection of the full light line (both parameter directions) with the
/// two sheets. On the two-dimensional quadric the light cone of a point is
/// the pair of complete straight lines through it, so singularity membership
/// is decided by line intersection rather than by forward hits.
pub fn sheet_line_hits(g: &FMat, dir: &LightDirection) -> (HitTime, HitTime) {
    let ((cm, dm), (cp, dp)) = sheet_affine(g, dir);
    (affine_line_hit(cm, dm), affine_line_hit(cp, dp))
}

/// Fall times from the rotation-circle point at angle `mu` along the
/// direction with last component `w2`. Closed forms (frozen against the
/// bisection oracle): sheet `y - t = 0` at `s = -sin mu / (cos mu + w2)`,
/// sheet `y + t = 0` at `s = sin mu / (w2 - cos mu)`; nonpositive or
/// undefined roots report `Never`.
pub fn fall_times(mu: f64, w2: f64) -> (HitTime, HitTime) {
    let (s, c) = mu.sin_cos();
    let minus = if c + w2 == 0.0 {
        if s == 0.0 { HitTime::At(0.0) } else { HitTime::Never }
    } else {
        affine_hit(s, c + w2)
    };
    let plus = if w2 - c == 0.0 {
        if s == 0.0 { HitTime::At(0.0) } else { HitTime::Never }
    } else {
        affine_hit(-s, w2 - c)
    };
    (minus, plus)
}

/// Independent oracle: smallest positive root of `t(s)^2 - y(s)^2 = 0` along
/// the geodesic, located by derivative-split bracketing plus bisection on the
/// sampled quadric components (no use of the closed forms).
pub fn fall_time_bisection(mu: f64, w: &LightDirection, l: usize) -> HitTime {
    let g = rotation(mu, l + 1);
    let d = l + 1;
    let n = light_generator(w);
    let e1: Vec<f64> = (0..d).map(|i| if i == 0 { 1.0 } else { 0.0 }).collect();
    let ne1 = mat_vec_f(&n, &e1);
    let nne1 = mat_vec_f(&n, &ne1);
    let f = |s: f64| -> f64 {
        let ray: Vec<f64> = (0..d)
            .map(|i| e1[i] + s * ne1[i] + 0.5 * s * s * nne1[i])
            .collect();
        let c = mat_vec_f(&g, &ray);
        let idx = sing_index(l);
        c[1] * c[1] - c[idx] * c[idx]
    };
    let search = |s_max: f64| -> Option<f64> {
        // f is smooth; bracket its single interior extremum via the derivative
        let h = (s_max * 1e-9).max(1e-6);
        let df = |s: f64| (f(s + h) - f(s - h)) / (2.0 * h);
        let mut segments = vec![];
        if df(0.0) * df(s_max) < 0.0 {
            let (mut a, mut b) = (0.0, s_max);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if df(a) * df(m) <= 0.0 {
                    b = m;
                } else {
                    a = m;
                }
            }
            let sv = 0.5 * (a + b);
            segments.push((0.0, sv));
            segments.push((sv, s_max));
        } else {
            segments.push((0.0, s_max));
        }
        let mut best: Option<f64> = None;
        for (a0, b0) in segments {
            let (fa, fb) = (f(a0), f(b0));
            if fa == 0.0 {
                best = Some(best.map_or(a0, |x: f64| x.min(a0)));
                continue;
            }
            if fa * fb > 0.0 {
                continue;
            }
            let (mut a, mut b) = (a0, b0);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if f(a) * f(m) <= 0.0 {
                    b = m;
                } else {
                    a = m;
                }
            }
            let root = 0.5 * (a + b);
            best = Some(best.map_or(root, |x: f64| x.min(root)));
        }
        best
    };
    // widen the window progressively: near-grazing rays hit very late
    for s_max in [1.0e3, 1.0e6, 1.0e9, 1.0e12] {
        if let Some(s) = search(s_max) {
            return HitTime::At(s);
        }
    }
    HitTime::Never
}

/// Classification label.
#[derive(Debug, Clone, PartialEq)]
pub enum CausalLabel {
    Singular,
    Interior,
    Exterior,
    Horizon,
}

/// Classification result with its witness data.
#[derive(Debug, Clone)]
pub struct CausalClass {
    pub label: CausalLabel,
    /// direction along which both sheets are missed (exterior only)
    pub escaping_direction: Option<Vec<f64>>,
    /// largest first-hit time over the sampled directions (interior only)
    pub max_hit_time: Option<f64>,
    /// true when the label came from sampling rather than an exact test
    pub sampled: bool,
    pub tol: f64,
    pub n_directions: usize,
}

/// Deterministic unit directions on `S^{l-2}`: antipodal pair for l = 2,
/// equal angles for l = 3, Fibonacci sphere for l = 4.
pub fn sample_directions(l: usize, n: usize) -> Vec<Vec<f64>> {
    match l {
        2 => vec![vec![1.0], vec![-1.0]],
        3 => (0..n)
            .map(|k| {
                let phi = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
                vec![phi.cos(), phi.sin()]
            })
            .collect(),
        4 => {
            let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
            (0..n)
                .map(|k| {
                    let z = 1.0 - (2.0 * k as f64 + 1.0) / (n as f64);
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = 2.0 * std::f64::consts::PI * (k as f64) / golden;
                    vec![r * phi.cos(), r * phi.sin(), z]
                })
                .collect()
        }
        _ => panic!("unsupported dimension {l}"),
    }
}

/// Build a group element mapping the base point to `p` by orthonormal
/// completion with respect to the ambient form (used when no source element
/// is attached to the point).
pub fn synthesize_source(p: &AdSPoint) -> Result<FMat, AdsError> {
    let d = p.l + 1;
    let mut frame: Vec<Vec<f64>> = vec![p.coords.clone()];
    let mut signs: Vec<f64> = vec![-1.0];
    for j in 0..d {
        if frame.len() == d {
            break;
        }
        let mut v: Vec<f64> = (0..d).map(|i| if i == j { 1.0 } else { 0.0 }).collect();
        for (c, sg) in frame.iter().zip(&signs) {
            let coef = eta_dot(&v, c) / sg;
            for i in 0..d {
                v[i] -= coef * c[i];
            }
        }
        let nv = eta_dot(&v, &v);
        if nv.abs() < 1e-8 {
            continue;
        }
        let scale = nv.abs().sqrt();
        for x in &mut v {
            *x /= scale;
        }
        frame.push(v);
        signs.push(nv.signum());
    }
    if frame.len() < d {
        return Err(AdsError::Membership(f64::INFINITY));
    }
    // order columns by signature: the two negative-norm vectors first
    let mut neg: Vec<Vec<f64>> = Vec::new();
    let mut pos: Vec<Vec<f64>> = Vec::new();
    for (v, sg) in frame.into_iter().zip(signs) {
        if sg < 0.0 {
            neg.push(v);
        } else {
            pos.push(v);
        }
    }
    if neg.len() != 2 || pos.len() != d - 2 {
        return Err(AdsError::Membership(f64::INFINITY));
    }
    let cols: Vec<Vec<f64>> = neg.into_iter().chain(pos).collect();
    let mut g = FMat::zeros(d);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..d {
            g.set(i, j, c[i]);
        }
    }
    let res = ortho_residual(&g);
    if res > 1e-8 {
        return Err(AdsError::Membership(res));
    }
    Ok(g)
}

/// Classify a point: singular, interior (every sampled light ray falls into
/// the singularity), exterior (some ray escapes both sheets), or horizon
/// (exact test `cos mu = 0`, emitted only on the rotation circle for l >= 3).
pub fn classify(p: &AdSPoint, n_directions: usize, tol: f64) -> Result<CausalClass, AdsError> {
    if n_directions < 8 {
        return Err(AdsError::TooFewDirections(n_directions));
    }
    let report = |label, esc: Option<Vec<f64>>, maxh: Option<f64>, sampled| CausalClass {
        label,
        escaping_direction: esc,
        max_hit_time: maxh,
        sampled,
        tol,
        n_directions,
    };
    let sing = is_singular(p, tol);
    if sing.singular {
        return Ok(report(CausalLabel::Singular, None, None, false));
    }
    if p.l >= 3 && p.on_rotation_circle(tol) && p.u().abs() < tol {
        return Ok(report(CausalLabel::Horizon, None, None, false));
    }
    let (g, sampled) = match &p.source {
        Some(g) => (g.clone(), false),
        None => (synthesize_source(p)?, true),
    };
    let mut max_hit: f64 = 0.0;
    for w in sample_directions(p.l, n_directions) {
        let dir = LightDirection::new(w)?;
        // for l = 2 the light cone consists of the two complete lines through
        // the point, so the whole line is tested against the sheets
        let (hm, hp) = if p.l == 2 {
            sheet_line_hits(&g, &dir)
        } else {
            sheet_hit_times(&g, &dir)
        };
        let first = match (hm, hp) {
            (HitTime::At(a), HitTime::At(b)) => Some(a.min(b)),
            (HitTime::At(a), HitTime::Never) => Some(a),
            (HitTime::Never, HitTime::At(b)) => Some(b),
            (HitTime::Never, HitTime::Never) => None,
        };
        match first {
            Some(s) => max_hit = max_hit.max(s),
            None => {
                return Ok(report(
                    CausalLabel::Exterior,
                    Some(dir.w.clone()),
                    None,
                    sampled,
                ));
            }
        }
    }
    Ok(report(CausalLabel::Interior, None, Some(max_hit), sampled))
}

/// Fundamental vector field of an algebra element at a point:
/// `X*_p = -X . p` in ambient coordinates.
pub fn fundamental_field(x: &QMat, p: &AdSPoint) -> Vec<f64> {
    let xf = FMat::from_qmat(x);
    assert_eq!(xf.n, p.l + 1);
    mat_vec_f(&xf, &p.coords).iter().map(|v| -v).collect()
}

/// Singularity test on the two-dimensional quadric realized as the adjoint
/// orbit of `H` in sl(2,R): a point `x = x_H H + x_E E + x_F F` with
/// `B(x, x) = 8` is singular iff `x_E x_F = 0`, equivalently iff
/// `B([H, x], [H, x]) = 0`. Both tests are computed (the second through the
/// exact structure constants) and must agree.
pub fn ads2_singularity(x: &[f64], tol: f64) -> Result<bool, AdsError> {
    assert_eq!(x.len(), 3);
    let (xh, xe, xf) = (x[0], x[1], x[2]);
    let norm = 8.0 * (xh * xh + xe * xf);
    if (norm - 8.0).abs() > 1e-6 {
        return Err(AdsError::OffQuadric((norm - 8.0).abs()));
    }
    let product_test = (xe * xf).abs() < tol;
    // independent path: Killing norm of [H, x] via the exact Gram matrix
    let alg = sl2r();
    let gram = alg.killing_matrix(KillingConvention::AdTrace).to_f64();
    // [H, x] = 2 x_E E - 2 x_F F
    let hx = [0.0, 2.0 * xe, -2.0 * xf];
    let mut b = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            b += hx[i] * gram[i][j] * hx[j];
        }
    }
    let killing_test = b.abs() < 32.0 * tol;
    if product_test != killing_test {
        return Err(AdsError::RankDisagreement(product_test as usize, killing_test as usize));
    }
    Ok(product_test)
}

/// Convenience: the point `(cos mu, -sin mu, 0, ..., 0)` with its rotation
/// source attached.
pub fn circle_point(mu: f64, l: usize) -> AdSPoint {
    let g = rotation(mu, l + 1);
    project_to_ads(&g, l).expect("rotations preserve the quadric")
}

/// Generator stacks used by the orbit-rank computation for dimension `l`:
/// the solvable subalgebra spanned by the positive root vectors and its
/// opposite (negative-root) counterpart, whose closed orbits form the other
/// singularity sheet.
pub(crate) fn orbit_generators(l: usize) -> Result<(Vec<QMat>, Vec<QMat>), AdsError> {
    match l {
        3 => {
            let g = so2n_generators(2);
            Ok((
                vec![g.j1.clone(), g.j2.clone(), g.m, g.l],
                vec![g.j1, g.j2, g.nm, g.f],
            ))
        }
        4 => {
            let g = so2n_generators(3);
            Ok((
                vec![
                    g.j1.clone(),
                    g.j2.clone(),
                    g.m,
                    g.l,
                    g.w[0].clone(),
                    g.v[0].clone(),
                ],
                vec![g.j1, g.j2, g.nm, g.f, g.y[0].clone(), g.x[0].clone()],
            ))
        }
        _ => Err(AdsError::UnsupportedDimension(l)),
    }
}

//! Star products of pulled-back symbols under a group action.
//!
//! A pullback that is Gaussian in `l` for each fixed `a` — with
//! `a`-dependent center, width, and amplitude — still admits the analytic
//! `l`-integration used by the plain quadrature, so the oscillatory product
//! of two such pullbacks reduces to a two-dimensional rule. A decay
//! certificate on the amplitude profile guards the construction: actions
//! whose pullbacks do not decay along the group direction are refused.

use crate::asympt::a_window;
use crate::quad::gauss_legendre;
use num_complex::Complex64;
use thiserror::Error;

/// A function `f(a, l) = amp(a) exp(-p(a) (l - c(a))^2)` with `p(a) > 0`.
pub trait LProfile {
    /// Amplitude profile along the group direction.
    fn amp(&self, a: f64) -> f64;
    /// Gaussian width in `l` at fixed `a`.
    fn p(&self, a: f64) -> f64;
    /// Gaussian center in `l` at fixed `a`.
    fn c(&self, a: f64) -> f64;

    fn eval(&self, a: f64, l: f64) -> f64 {
        self.amp(a) * (-self.p(a) * (l - self.c(a)).powi(2)).exp()
    }

    /// `int f(a, l) e^{i om l} dl` at fixed `a`, in closed form.
    fn lint(&self, a: f64, om: f64) -> Complex64 {
        let p = self.p(a);
        let mag = self.amp(a)
            * (std::f64::consts::PI / p).sqrt()
            * (-om * om / (4.0 * p)).exp();
        mag * Complex64::new(0.0, om * self.c(a)).exp()
    }
}

/// Pullback of a Gaussian window along the coadjoint orbit map with
/// momenta `(yh, ye)`:
/// `f(a, l) = exp(-(yh - 2 ye e^{-2a} l - c1)^2 - (ye e^{-2a} - c2)^2)`.
/// The amplitude decays at both ends when `c2` is large.
#[derive(Debug, Clone, Copy)]
pub struct CoadjointPullback {
    pub c1: f64,
    pub c2: f64,
    pub yh: f64,
    pub ye: f64,
}

impl LProfile for CoadjointPullback {
    fn amp(&self, a: f64) -> f64 {
        (-(self.ye * (-2.0 * a).exp() - self.c2).powi(2)).exp()
    }

    fn p(&self, a: f64) -> f64 {
        (2.0 * self.ye * (-2.0 * a).exp()).powi(2)
    }

    fn c(&self, a: f64) -> f64 {
        (self.yh - self.c1) / (2.0 * self.ye * (-2.0 * a).exp())
    }
}

/// Pullback of a Gaussian window along the first black-hole chart:
/// `f(a, l) = exp(-(z1c - c1)^2 - (h0 + l e^{2a} - c2)^2)`. Gaussian in `l`
/// at every `a`, but the amplitude is *constant* along the group direction,
/// so the decay certificate rejects it.
#[derive(Debug, Clone, Copy)]
pub struct BoostPullback {
    pub c1: f64,
    pub c2: f64,
    pub z1c: f64,
    pub h0: f64,
}

impl LProfile for BoostPullback {
    fn amp(&self, _a: f64) -> f64 {
        (-(self.z1c - self.c1).powi(2)).exp()
    }

    fn p(&self, a: f64) -> f64 {
        (4.0 * a).exp()
    }

    fn c(&self, a: f64) -> f64 {
        (self.c2 - self.h0) * (-2.0 * a).exp()
    }
}

/// A pullback entering the invariant product: either constant along the
/// whole group (the trivial action) or an `l`-profile.
pub enum Pullback<'a> {
    Constant(f64),
    Profile(&'a dyn LProfile),
}

#[derive(Debug, Error)]
pub enum StarError {
    /// The amplitude profile fails to decay along the group direction; the
    /// oscillatory integral is not absolutely convergent there.
    #[error("pullback amplitude does not decay: relative tail {0:.3e}")]
    DecayViolation(f64),
    /// A constant factor paired with a decaying one has only a
    /// distributional product.
    #[error("mixed constant/profile product is distributional")]
    DistributionalFactor,
}

/// Relative amplitude tail of a profile around the probe point: the largest
/// `amp(a0 +/- 3), amp(a0 +/- 6)` relative to `amp(a0)`.
pub fn decay_tail(f: &dyn LProfile, a0: f64) -> f64 {
    let base = f.amp(a0).abs().max(1e-300);
    [-6.0, -3.0, 3.0, 6.0]
        .iter()
        .map(|d| f.amp(a0 + d).abs())
        .fold(0.0f64, f64::max)
        / base
}

/// Star product (scaled convention) of two `l`-profiles at `(a0, l0)`.
pub fn star_profile(
    u: &dyn LProfile,
    v: &dyn LProfile,
    a0: f64,
    l0: f64,
    theta: f64,
    n: usize,
) -> Complex64 {
    let pi = std::f64::consts::PI;
    let w = a_window(2.0 * theta, u.p(a0).max(v.p(a0)));
    let (x1, w1) = gauss_legendre(n, a0 - w, a0 + w);
    let (x2, w2) = gauss_legendre(n, a0 - w, a0 + w);
    let mut total = Complex64::new(0.0, 0.0);
    for (i, &av1) in x1.iter().enumerate() {
        for (j, &av2) in x2.iter().enumerate() {
            let amp = (av1 - av2).cosh() + (av2 - a0).cosh() + (a0 - av1).cosh();
            let om1 = -(1.0 / theta) * (2.0 * (av2 - a0)).sinh();
            let om2 = -(1.0 / theta) * (2.0 * (a0 - av1)).sinh();
            let ph0 =
                Complex64::new(0.0, -(1.0 / theta) * (2.0 * (av1 - av2)).sinh() * l0).exp();
            total += w1[i] * w2[j] * amp * ph0 * u.lint(av1, om1) * v.lint(av2, om2);
        }
    }
    total / (3.0 * pi * pi * theta * theta)
}

/// Product of two pulled-back symbols at `(a0, l0)`.
///
/// Constant pullbacks (trivial action) multiply through the calibrated
/// kernel mass, which is one: the result is the plain product of the
/// constants. Profile pairs are first screened by the decay certificate
/// (tail below `0.05`) and then integrated by [`star_profile`].
pub fn group_action_product(
    u: &Pullback,
    v: &Pullback,
    a0: f64,
    l0: f64,
    theta: f64,
    n: usize,
) -> Result<Complex64, StarError> {
    match (u, v) {
        (Pullback::Constant(cu), Pullback::Constant(cv)) => {
            Ok(Complex64::new(cu * cv, 0.0))
        }
        (Pullback::Profile(fu), Pullback::Profile(fv)) => {
            let tail = decay_tail(*fu, a0).max(decay_tail(*fv, a0));
            if tail > 0.05 {
                return Err(StarError::DecayViolation(tail));
            }
            Ok(star_profile(*fu, *fv, a0, l0, theta, n))
        }
        _ => Err(StarError::DistributionalFactor),
    }
}

//! Moyal-type asymptotic operators on the half-plane `(a, l)`.
//!
//! Everything acts on the class of functions `sum c l^p e^{g a}` (complex
//! coefficients `c`, integer powers `p`, real exponents `g`), which is
//! closed under derivatives, multiplication, and the finite shifts
//! `l -> l +/- 2 nu` that appear in the closed-form adjoint operators. On
//! that class the bidifferential series truncates, so every identity can be
//! checked exactly up to floating-point roundoff.

use num_complex::Complex64;

/// A finite sum `sum c l^p e^{g a}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentExp {
    terms: Vec<(Complex64, u32, f64)>,
}

fn binom(n: u32, k: u32) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out = out * (n - i) as f64 / (i + 1) as f64;
    }
    out
}

impl LaurentExp {
    pub fn zero() -> Self {
        LaurentExp { terms: vec![] }
    }

    /// The single term `c l^p e^{g a}`.
    pub fn term(c: Complex64, p: u32, g: f64) -> Self {
        LaurentExp { terms: vec![(c, p, g)] }
    }

    pub fn real_term(c: f64, p: u32, g: f64) -> Self {
        Self::term(Complex64::new(c, 0.0), p, g)
    }

    pub fn eval(&self, a: f64, l: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(c, p, g)| c * l.powi(p as i32) * (g * a).exp())
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        LaurentExp { terms }.normalize()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        LaurentExp {
            terms: self.terms.iter().map(|&(c, p, g)| (s * c, p, g)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = vec![];
        for &(c1, p1, g1) in &self.terms {
            for &(c2, p2, g2) in &other.terms {
                terms.push((c1 * c2, p1 + p2, g1 + g2));
            }
        }
        LaurentExp { terms }.normalize()
    }

    /// `d/da`: multiplies each term by its exponent.
    pub fn da(&self) -> Self {
        LaurentExp {
            terms: self
                .terms
                .iter()
                .map(|&(c, p, g)| (c * g, p, g))
                .collect(),
        }
        .normalize()
    }

    /// `d/dl`: lowers each power.
    pub fn dl(&self) -> Self {
        LaurentExp {
            terms: self
                .terms
                .iter()
                .filter(|&&(_, p, _)| p > 0)
                .map(|&(c, p, g)| (c * p as f64, p - 1, g))
                .collect(),
        }
        .normalize()
    }

    /// Mixed derivative `d_a^m d_l^k`.
    pub fn deriv(&self, m: u32, k: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..m {
            out = out.da();
        }
        for _ in 0..k {
            out = out.dl();
        }
        out
    }

    /// Multiplication by `l`.
    pub fn mul_l(&self) -> Self {
        LaurentExp {
            terms: self.terms.iter().map(|&(c, p, g)| (c, p + 1, g)).collect(),
        }
    }

    /// Multiplication by `e^{s a}`.
    pub fn mul_exp(&self, s: f64) -> Self {
        LaurentExp {
            terms: self.terms.iter().map(|&(c, p, g)| (c, p, g + s)).collect(),
        }
    }

    /// Substitution `l -> l + c` by binomial expansion.
    pub fn shift_l(&self, c: Complex64) -> Self {
        let mut terms = vec![];
        for &(co, p, g) in &self.terms {
            for k in 0..=p {
                terms.push((co * binom(p, k) * c.powu(p - k), k, g));
            }
        }
        LaurentExp { terms }.normalize()
    }

    /// `(f(l + c) - f(l - c)) / 2`.
    pub fn sinh_shift(&self, c: Complex64) -> Self {
        self.shift_l(c)
            .sub(&self.shift_l(-c))
            .scale(Complex64::new(0.5, 0.0))
    }

    /// `(f(l + c) + f(l - c)) / 2`.
    pub fn cosh_shift(&self, c: Complex64) -> Self {
        self.shift_l(c)
            .add(&self.shift_l(-c))
            .scale(Complex64::new(0.5, 0.0))
    }

    /// Merge terms with equal `(p, g)` and drop negligible coefficients.
    pub fn normalize(&self) -> Self {
        let mut terms: Vec<(Complex64, u32, f64)> = vec![];
        for &(c, p, g) in &self.terms {
            if let Some(t) = terms
                .iter_mut()
                .find(|t| t.1 == p && (t.2 - g).abs() < 1e-12)
            {
                t.0 += c;
            } else {
                terms.push((c, p, g));
            }
        }
        terms.retain(|t| t.0.norm() > 1e-300);
        terms.sort_by(|a, b| (a.1, a.2.to_bits()).cmp(&(b.1, b.2.to_bits())));
        LaurentExp { terms }
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> f64 {
        self.terms.iter().map(|t| t.0.norm()).fold(0.0, f64::max)
    }
}

/// The three momentum maps on the half-plane, with the free positive
/// parameter `beta`:
/// `lam_H = -beta l`, `lam_E = -(beta/2) e^{-2a}`,
/// `lam_F = (beta/2) e^{2a} (l^2 + 1)`.
#[derive(Debug, Clone, Copy)]
pub struct MomentumMapSet {
    pub beta: f64,
}

impl MomentumMapSet {
    pub fn new(beta: f64) -> Self {
        assert!(beta > 0.0);
        MomentumMapSet { beta }
    }

    pub fn lam_h(&self) -> LaurentExp {
        LaurentExp::real_term(-self.beta, 1, 0.0)
    }

    pub fn lam_e(&self) -> LaurentExp {
        LaurentExp::real_term(-self.beta / 2.0, 0, -2.0)
    }

    pub fn lam_f(&self) -> LaurentExp {
        LaurentExp::real_term(self.beta / 2.0, 2, 2.0)
            .add(&LaurentExp::real_term(self.beta / 2.0, 0, 2.0))
    }

    /// `{f, g} = (d_l f d_a g - d_a f d_l g) / beta`.
    pub fn poisson(&self, f: &LaurentExp, g: &LaurentExp) -> LaurentExp {
        f.dl()
            .mul(&g.da())
            .sub(&f.da().mul(&g.dl()))
            .scale(Complex64::new(1.0 / self.beta, 0.0))
    }
}

/// The `k`-th bidifferential operator
/// `P_k(u, v) = sum_m (-1)^{k-m} C(k,m) d_a^m d_l^{k-m} u . d_a^{k-m} d_l^m v`.
pub fn p_k(k: u32, u: &LaurentExp, v: &LaurentExp) -> LaurentExp {
    let mut out = LaurentExp::zero();
    for m in 0..=k {
        let sign = if (k - m) % 2 == 0 { 1.0 } else { -1.0 };
        let c = Complex64::new(sign * binom(k, m), 0.0);
        out = out.add(&u.deriv(m, k - m).mul(&v.deriv(k - m, m)).scale(c));
    }
    out
}

/// Truncated Moyal commutator
/// `[u, v] = sum_{k>=1} nu^k / k! (P_k(u, v) - P_k(v, u))`; exact on the
/// term class once `kmax` exceeds the `l`-degrees involved.
pub fn moyal_commutator(
    u: &LaurentExp,
    v: &LaurentExp,
    nu: Complex64,
    kmax: u32,
) -> LaurentExp {
    let mut out = LaurentExp::zero();
    let mut fact = 1.0;
    for k in 1..kmax {
        fact *= k as f64;
        let c = nu.powu(k) / fact;
        out = out.add(&p_k(k, u, v).sub(&p_k(k, v, u)).scale(c));
    }
    out
}

/// The closed-form adjoint operators of the three momentum maps under the
/// Moyal commutator, and their rescalings `rho = ad / (2 nu)`.
///
/// With the sign convention fixed by `P_1 = -beta {,}`, the third operator
/// is the *negative* of the three-term expression that matches the first
/// two, and the rescaled family is an anti-homomorphism:
/// `[rho_X, rho_Y] = -beta rho_[X, Y]`.
#[derive(Debug, Clone, Copy)]
pub struct MoyalOps {
    pub beta: f64,
    pub nu: Complex64,
}

impl MoyalOps {
    pub fn new(beta: f64, nu: Complex64) -> Self {
        MoyalOps { beta, nu }
    }

    /// `ad lam_H = 2 nu beta d_a`.
    pub fn ad_h(&self, f: &LaurentExp) -> LaurentExp {
        f.da().scale(2.0 * self.nu * self.beta)
    }

    /// `ad lam_E = beta e^{-2a} sinh-shift by 2 nu`.
    pub fn ad_e(&self, f: &LaurentExp) -> LaurentExp {
        f.sinh_shift(2.0 * self.nu)
            .mul_exp(-2.0)
            .scale(Complex64::new(self.beta, 0.0))
    }

    /// `ad lam_F`, with the overall sign that matches the same `P_k`
    /// convention as [`MoyalOps::ad_h`] and [`MoyalOps::ad_e`].
    pub fn ad_f(&self, f: &LaurentExp) -> LaurentExp {
        let ss = f.sinh_shift(2.0 * self.nu);
        let cs = f.cosh_shift(2.0 * self.nu);
        let t1 = ss
            .da()
            .da()
            .mul_exp(2.0)
            .scale(-self.nu * self.nu * self.beta);
        let t2 = cs
            .da()
            .mul_l()
            .mul_exp(2.0)
            .scale(2.0 * self.nu * self.beta);
        let t3 = ss
            .add(&ss.mul_l().mul_l())
            .mul_exp(2.0)
            .scale(Complex64::new(-self.beta, 0.0));
        t1.add(&t2).add(&t3).scale(Complex64::new(-1.0, 0.0))
    }

    pub fn rho_h(&self, f: &LaurentExp) -> LaurentExp {
        self.ad_h(f).scale(0.5 / self.nu)
    }

    pub fn rho_e(&self, f: &LaurentExp) -> LaurentExp {
        self.ad_e(f).scale(0.5 / self.nu)
    }

    pub fn rho_f(&self, f: &LaurentExp) -> LaurentExp {
        self.ad_f(f).scale(0.5 / self.nu)
    }
}

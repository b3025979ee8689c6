//! Sparse multivariate polynomials and rational functions over the rationals.
//!
//! The classifier only ever needs a handful of variables (the eight ansatz
//! parameters, the two family parameters, six form entries and a few free
//! coefficients), so a fixed exponent vector keeps the representation simple
//! and hashable.

use lie_core::{qi, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of variable slots. Slot meaning is assigned per context via
/// [`vars`] constants.
pub const NVARS: usize = 24;

/// Variable slot assignments used across the crate.
pub mod vars {
    /// ansatz parameters a, a', b, b', c, c', d, d'
    pub const A: usize = 0;
    pub const AP: usize = 1;
    pub const B: usize = 2;
    pub const BP: usize = 3;
    pub const C: usize = 4;
    pub const CP: usize = 5;
    pub const D: usize = 6;
    pub const DP: usize = 7;
    /// family parameters
    pub const R: usize = 8;
    pub const S: usize = 9;
    /// symplectic form entries
    pub const ALPHA: usize = 10;
    pub const BETA: usize = 11;
    pub const GAMMA: usize = 12;
    pub const DELTA: usize = 13;
    pub const SIGMA: usize = 14;
    pub const EPS: usize = 15;
    /// free coefficients of general solutions
    pub const C0: usize = 16;
    pub const C1: usize = 17;
    pub const C2: usize = 18;
    /// `e^{a/2}` for the coadjoint-orbit computation
    pub const E2: usize = 22;

    pub const NAMES: [&str; super::NVARS] = [
        "a", "a'", "b", "b'", "c", "c'", "d", "d'", "r", "s", "alpha", "beta",
        "gamma", "delta", "sigma", "eps", "c0", "c1", "c2", "c3", "c4", "c5",
        "E2", "t",
    ];
}

type Key = [u8; NVARS];

/// Sparse polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Key, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert([0; NVARS], c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(qi(c))
    }

    pub fn one() -> Self {
        Poly::int(1)
    }

    pub fn var(v: usize) -> Self {
        assert!(v < NVARS);
        let mut key = [0u8; NVARS];
        key[v] = 1;
        let mut p = Poly::zero();
        p.terms.insert(key, Q::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e == 0))
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn insert(&mut self, key: Key, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Q::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (*k, v.clone() * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Full evaluation with one value per slot.
    pub fn eval(&self, vals: &[Q]) -> Q {
        assert_eq!(vals.len(), NVARS);
        let mut out = Q::zero();
        for (k, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    t = t * &vals[i];
                }
            }
            out = out + t;
        }
        out
    }

    /// Floating-point evaluation (used only by the dyadic grid search).
    pub fn eval_f64(&self, vals: &[f64]) -> f64 {
        assert_eq!(vals.len(), NVARS);
        let mut out = 0.0;
        for (k, c) in &self.terms {
            let mut t = c.numer().to_string().parse::<f64>().unwrap()
                / c.denom().to_string().parse::<f64>().unwrap();
            for (i, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    t *= vals[i];
                }
            }
            out += t;
        }
        out
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, v: usize, val: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in &self.terms {
            let mut key = *k;
            let e = key[v];
            key[v] = 0;
            let mut base = Poly::zero();
            base.insert(key, c.clone());
            out = &out + &(&base * &val.pow(e as u32));
        }
        out
    }

    /// Exact division: `Some(q)` with `self = q * d` when the division leaves
    /// no remainder, `None` otherwise.
    pub fn try_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        // leading term of d in the (reversed) lex order of the BTreeMap
        let (dk, dc) = d.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        loop {
            if rem.is_zero() {
                return Some(quot);
            }
            let (rk, rc) = rem.terms.iter().next_back().unwrap();
            let mut qk = [0u8; NVARS];
            for i in 0..NVARS {
                if rk[i] < dk[i] {
                    return None;
                }
                qk[i] = rk[i] - dk[i];
            }
            let qc = rc.clone() / dc.clone();
            let mut mono = Poly::zero();
            mono.insert(qk, qc);
            quot = &quot + &mono;
            rem = &rem - &(&mono * d);
        }
    }

    pub fn to_string_named(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            if !c.is_one() || k.iter().all(|&e| e == 0) {
                factors.push(lie_core::format_q(c));
            }
            for (i, &e) in k.iter().enumerate() {
                if e == 1 {
                    factors.push(vars::NAMES[i].to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", vars::NAMES[i], e));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_named())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&qi(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut key = [0u8; NVARS];
                for i in 0..NVARS {
                    key[i] = ka[i]
                        .checked_add(kb[i])
                        .expect("polynomial degree overflow");
                }
                out.insert(key, ca.clone() * cb);
            }
        }
        out
    }
}

/// Rational function `num / den`. No gcd reduction beyond constant folding
/// and opportunistic exact division; the systems here are tiny.
#[derive(Debug, Clone)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Frac {
    pub fn from_poly(p: Poly) -> Self {
        Frac { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Frac::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Frac::from_poly(Poly::one())
    }

    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Frac { num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if let Some(q) = self.num.try_div(&self.den) {
            self.num = q;
            self.den = Poly::one();
        } else if let Some(c) = self.den.as_constant() {
            self.num = self.num.scale(&c.recip());
            self.den = Poly::one();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Frac) -> Frac {
        Frac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &Frac) -> Frac {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &Frac) -> Frac {
        Frac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &Frac) -> Frac {
        assert!(!rhs.is_zero(), "division by zero rational function");
        Frac::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn eq(&self, rhs: &Frac) -> bool {
        (&(&self.num * &rhs.den) - &(&rhs.num * &self.den)).is_zero()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie_core::qr;

    #[test]
    fn arithmetic_round_trip() {
        let r = Poly::var(vars::R);
        let s = Poly::var(vars::S);
        let p = &(&r * &r) - &(&s.scale(&qi(2)) * &r);
        let q = &p + &p;
        assert_eq!(q, p.scale(&qi(2)));
        let mut vals = vec![Q::zero(); NVARS];
        vals[vars::R] = qi(3);
        vals[vars::S] = qr(1, 2);
        assert_eq!(p.eval(&vals), qi(6)); // 9 - 2*(1/2)*3
    }

    #[test]
    fn exact_division() {
        let r = Poly::var(vars::R);
        let s = Poly::var(vars::S);
        let p = &(&r + &s) * &(&r - &s);
        assert_eq!(p.try_div(&(&r + &s)), Some(&r - &s));
        assert!(r.try_div(&s).is_none());
    }

    #[test]
    fn fraction_equality() {
        let r = Poly::var(vars::R);
        let a = Frac::new(Poly::one(), r.clone());
        let b = Frac::new(r.clone(), &r * &r);
        assert!(a.eq(&b));
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn substitution() {
        let r = Poly::var(vars::R);
        let s = Poly::var(vars::S);
        let p = &(&r * &r) + &s;
        let q = p.subst(vars::R, &(&s + &Poly::one()));
        let expect = &(&(&(&s * &s) + &s.scale(&qi(2))) + &Poly::one()) + &s;
        assert_eq!(q, expect);
    }
}

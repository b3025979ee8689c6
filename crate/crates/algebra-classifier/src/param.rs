//! The four-generator ansatz
//! `A = J1 + a J2 + a' V`, `B = W + b J2 + b' V`,
//! `C = M + c J2 + c' V`, `D = L + d J2 + d' V`
//! and its closure conditions inside the ambient algebra.

use crate::ambient::{bracket, NAMES};
use crate::poly::{vars, Poly};
use lie_core::Q;
use serde::Serialize;

/// Generator labels in ansatz order.
pub const GEN_NAMES: [&str; 4] = ["A", "B", "C", "D"];

/// A point (or parametric family) of the eight-parameter ansatz.
#[derive(Debug, Clone)]
pub struct ParamAlgebra {
    /// parameters in the order a, a', b, b', c, c', d, d'
    pub params: [Poly; 8],
}

/// Structure constants of a closed four-dimensional span: `sc[i][j]` is the
/// coefficient vector of `[g_i, g_j]` over `(A, B, C, D)`.
pub type Struct4 = [[[Poly; 4]; 4]; 4];

/// One closure residual pair: the `J2` and `V` components of `[g_i, g_j]`
/// minus the combination forced by its `(J1, W, M, L)` components.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureResidual {
    pub pair: (String, String),
    pub j2: String,
    pub v: String,
    #[serde(skip)]
    pub j2_poly: Poly,
    #[serde(skip)]
    pub v_poly: Poly,
}

impl ParamAlgebra {
    pub fn new(params: [Poly; 8]) -> Self {
        ParamAlgebra { params }
    }

    pub fn from_rationals(params: [Q; 8]) -> Self {
        ParamAlgebra::new(params.map(Poly::constant))
    }

    /// The four generators as vectors over `{J1, J2, W, M, L, V}`.
    pub fn generators(&self) -> [[Poly; 6]; 4] {
        let p = &self.params;
        let mut gens: [[Poly; 6]; 4] = std::array::from_fn(|_| {
            std::array::from_fn(|_| Poly::zero())
        });
        // leading terms J1, W, M, L
        for (g, lead) in [(0, 0), (1, 2), (2, 3), (3, 4)] {
            gens[g][lead] = Poly::one();
            gens[g][1] = p[2 * g].clone(); // J2 part
            gens[g][5] = p[2 * g + 1].clone(); // V part
        }
        gens
    }

    /// The twelve closure conditions (a `J2` and a `V` residual for each of
    /// the six generator pairs). The span closes iff all residuals vanish.
    pub fn closure_conditions(&self) -> Vec<ClosureResidual> {
        let gens = self.generators();
        let mut out = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let p = bracket(&gens[i], &gens[j]);
                // leading components determine the only possible combination
                let coeffs = [&p[0], &p[2], &p[3], &p[4]];
                let mut j2 = p[1].clone();
                let mut v = p[5].clone();
                for (g, c) in coeffs.iter().enumerate() {
                    j2 = &j2 - &(*c * &gens[g][1]);
                    v = &v - &(*c * &gens[g][5]);
                }
                out.push(ClosureResidual {
                    pair: (GEN_NAMES[i].into(), GEN_NAMES[j].into()),
                    j2: j2.to_string_named(),
                    v: v.to_string_named(),
                    j2_poly: j2,
                    v_poly: v,
                });
            }
        }
        out
    }

    pub fn is_algebra(&self) -> bool {
        self.closure_conditions()
            .iter()
            .all(|r| r.j2_poly.is_zero() && r.v_poly.is_zero())
    }

    /// Structure constants over `(A, B, C, D)` when the span closes.
    pub fn structure_constants(&self) -> Option<Struct4> {
        let gens = self.generators();
        let mut sc: Struct4 = std::array::from_fn(|_| {
            std::array::from_fn(|_| std::array::from_fn(|_| Poly::zero()))
        });
        for i in 0..4 {
            for j in 0..4 {
                let p = bracket(&gens[i], &gens[j]);
                let coeffs = [
                    p[0].clone(),
                    p[2].clone(),
                    p[3].clone(),
                    p[4].clone(),
                ];
                // residual check on all six ambient components
                let mut comb: [Poly; 6] = std::array::from_fn(|_| Poly::zero());
                for (g, c) in coeffs.iter().enumerate() {
                    for k in 0..6 {
                        comb[k] = &comb[k] + &(c * &gens[g][k]);
                    }
                }
                for k in 0..6 {
                    if !(&p[k] - &comb[k]).is_zero() {
                        return None;
                    }
                }
                sc[i][j] = coeffs;
            }
        }
        Some(sc)
    }
}

/// Bracket of coefficient vectors over `(A, B, C, D)` for a closed span.
pub fn sc_bracket(sc: &Struct4, u: &[Poly; 4], v: &[Poly; 4]) -> [Poly; 4] {
    let mut out: [Poly; 4] = std::array::from_fn(|_| Poly::zero());
    for i in 0..4 {
        for j in 0..4 {
            let c = &(&u[i] * &v[j]);
            if c.is_zero() {
                continue;
            }
            for m in 0..4 {
                out[m] = &out[m] + &(c * &sc[i][j][m]);
            }
        }
    }
    out
}

/// `R' = span{J1, W, M, L}`: the ansatz with all parameters zero.
pub fn r_prime() -> ParamAlgebra {
    ParamAlgebra::new(std::array::from_fn(|_| Poly::zero()))
}

/// Pretty name of an ambient basis vector (used in reports).
pub fn ambient_name(i: usize) -> &'static str {
    NAMES[i]
}

/// The general symbolic ansatz with all eight parameters kept as variables.
pub fn general_ansatz() -> ParamAlgebra {
    ParamAlgebra::new([
        Poly::var(vars::A),
        Poly::var(vars::AP),
        Poly::var(vars::B),
        Poly::var(vars::BP),
        Poly::var(vars::C),
        Poly::var(vars::CP),
        Poly::var(vars::D),
        Poly::var(vars::DP),
    ])
}

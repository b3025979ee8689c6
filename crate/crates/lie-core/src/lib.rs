//! Exact Lie-algebra engine: rational matrices, algebra bases with verified
//! structure constants, Killing forms in both trace conventions, Cartan /
//! root-space / Iwasawa / reductive decompositions, group exponentials with
//! membership checks, homomorphism verification, and central extensions.

pub mod algebra;
pub mod algebras;
pub mod decompose;
pub mod extend;
pub mod group;
pub mod iso;
pub mod rat;

pub use algebra::{bracket, KillingConvention, LieAlgebraBasis, LieError};
pub use decompose::{
    cartan_decompose, columns, in_span, iwasawa, mat_vec, reductive_pair,
    root_space_decompose, Decomposition, DecompositionKind, IwasawaSpec, Subspace,
};
pub use extend::{central_extend, coboundary, eval_form, is_cocycle};
pub use group::{adjoint_exact, exp_nilpotent, group_exp, FMat, GroupElement, GroupKind};
pub use iso::{verify_homomorphism, verify_isomorphism, IsoReport};
pub use rat::{format_q, lincomb, parse_q, qi, qr, Q, QMat};

//! Classification of the four-dimensional subalgebras of the six-dimensional
//! Iwasawa algebra of so(2,3): closure conditions of the generator ansatz,
//! the seven solution families, their symplectic (2-cocycle) forms with
//! closed-form determinants, isomorphisms to the canonical algebra, the
//! orbit stabilizer, and the coadjoint family of forms.

pub mod ambient;
pub mod coadjoint;
pub mod families;
pub mod grid;
pub mod param;
pub mod poly;
pub mod report;
pub mod stabilizer;
pub mod symplectic;

pub use coadjoint::{adjoint_of_g, coadjoint_family, xi_of_g};
pub use families::{
    canonical_struct, derived_series_dims, det4, family, family1_normalized,
    is_homomorphism, is_nilpotent,
};
pub use grid::{grid_search, match_families};
pub use param::{r_prime, ClosureResidual, ParamAlgebra, Struct4};
pub use poly::{Frac, Poly};
pub use report::{classification_report, enumerate_families, verify_family_isomorphisms};
pub use stabilizer::stabilizer;
pub use symplectic::{
    admits_nondegenerate, cocycle_residuals, is_cocycle, symplectic_solve,
    CocycleSolution, SymplecticForm4,
};

//! Oscillatory-kernel star products on low-dimensional solvable groups:
//! three-point kernels and their invariance/cyclicity checks, Gauss–Legendre
//! quadrature of the oscillatory products with their small-parameter
//! asymptotics, strong closedness of the symmetrized product, the exact
//! Moyal-operator algebra of the momentum maps, the spectral intertwiner,
//! growth-order diagnostics for pulled-back symbols, and products of
//! pullbacks under group actions.

pub mod asympt;
pub mod closed;
pub mod group_action;
pub mod intertwiner;
pub mod kernels;
pub mod moyal;
pub mod quad;
pub mod sampling;
pub mod testfn;
pub mod unterberger;

pub use asympt::{
    a_window, default_pair, richardson, slope_factor, slope_report, star_sl2an, Convention,
    SlopeReport, PROBES, THETAS,
};
pub use closed::{closedness_check, default_closedness_pair, star_hilb2, ClosednessReport};
pub use group_action::{
    decay_tail, group_action_product, star_profile, BoostPullback, CoadjointPullback,
    LProfile, Pullback, StarError,
};
pub use intertwiner::{Intertwiner, Substitution};
pub use kernels::{
    an2_law, extension_law, extension_product_kernel, hilb_kernel, kernel_invariance_check,
    r0_product_kernel, sl2an_kernel, tensor_kernel, tensor_law, twisted_extension_kernel,
    GroupLaw, KernelReport, ThreePointKernel,
};
pub use moyal::{moyal_commutator, p_k, LaurentExp, MomentumMapSet, MoyalOps};
pub use quad::gauss_legendre;
pub use sampling::SplitMix64;
pub use testfn::{gaussian_product_integral, Gauss2};
pub use unterberger::{
    coadjoint_derivative_bound, first_action_growth, second_action_growth,
    second_action_pullback, unterberger_check, ActionKind, GaussianWindow, GrowthReport,
};

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// The momentum-map evaluations agree with the coadjoint-pullback
    /// parametrization used by the growth diagnostics: both encode the same
    /// orbit map `(a, l) -> (yH - 2 yE e^{-2a} l, yE e^{-2a})` up to the
    /// normalization of the generators.
    #[test]
    fn momentum_maps_parametrize_the_orbit() {
        let m = MomentumMapSet::new(1.0);
        for &(a, l) in &[(0.0, 0.3), (0.7, -0.2), (-0.4, 1.1)] {
            let h = m.lam_h().eval(a, l);
            let e = m.lam_e().eval(a, l);
            // lam_H = -l, lam_E = -(1/2) e^{-2a}: the orbit coordinates are
            // linear in them
            assert!((h - Complex64::new(-l, 0.0)).norm() < 1e-14);
            assert!((e - Complex64::new(-0.5 * (-2.0 * a).exp(), 0.0)).norm() < 1e-14);
        }
    }
}

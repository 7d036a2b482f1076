//! Fixed-point sums over standard Young tableaux and Poincare series of the
//! affine-chart algebras of the flag Hilbert scheme, with their
//! specialization identities.

mod charts;
mod magic;

pub use charts::{
    all_charts_upto, chart_by_name, chart_series, endomorphism_series,
    hook_length_specialization, markov_trace_identity_check, Chart, ChartFamily, ChartPresentation,
    Flavor, MarkovCalibrationReport,
};
pub use magic::{magic_sum, MagicReport, MagicTerm, MagicVariant, zeta_double_product_specialized};

use crate::exact::{Mono, Rat};

/// The pairwise interaction factor
/// zeta(x) = (1 - x)(1 - qt x) / ((1 - q x)(1 - t x)).
pub fn zeta(x: &Mono) -> Rat {
    let qt = Mono::qta(1, 1, 0);
    let q = Mono::q(1);
    let t = Mono::t(1);
    Rat::one_minus(x)
        .mul(&Rat::one_minus(&qt.mul(x)))
        .mul(&Rat::geometric(&q.mul(x)))
        .mul(&Rat::geometric(&t.mul(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Subst;

    #[test]
    fn zeta_zeros() {
        // zeta(1) = 0: numerator factor (1 - 1)
        assert!(zeta(&Mono::one()).is_zero_value());
        // zeta((qt)^{-1}) = 0: factor (1 - qt (qt)^{-1})
        assert!(zeta(&Mono::qta(-1, -1, 0)).is_zero_value());
    }

    #[test]
    fn zeta_symmetry_at_t_q_inv() {
        // zeta|_{t=q^{-1}}(x) = zeta|_{t=q^{-1}}(x^{-1}) for generic monomials x
        let s = Subst::t_to_q_inv();
        for c in [2i64, 3, -4, 5] {
            let x = Mono::q(c);
            let lhs = zeta(&x).specialize(&s).unwrap();
            let rhs = zeta(&x.inv()).specialize(&s).unwrap();
            assert!(lhs.equals(&rhs).unwrap(), "c = {c}");
        }
    }
}

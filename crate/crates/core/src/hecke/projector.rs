use super::HeckeElement;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Mono, Rat};
use crate::tableaux::{Partition, StandardTableau};
use num::One;

/// Hard size bound for full idempotent construction; exact-arithmetic
/// coefficients blow up beyond |S_6| = 720 basis elements.
pub const MAX_IDEMPOTENT_STRANDS: usize = 6;

/// q^c as a scalar Hecke coefficient.
fn q_pow(c: i64) -> Rat {
    Rat::from_mono(num::BigRational::one(), Mono::q(c))
}

/// The Young idempotent P_T in H_n, n = size of T, built by Lagrange
/// interpolation in the commuting Jucys-Murphy elements:
///
///   P_T = prod_{k=2}^{n} prod_{c != c_k} (L_k - q^c) / (q^{c_k} - q^c)
///
/// where c runs over the contents of the addable corners of the shape of
/// T restricted to 1..k-1, and c_k is the content of the box labeled k.
pub fn young_idempotent(t: &StandardTableau) -> Result<HeckeElement> {
    let n = t.size();
    if n == 0 || n > MAX_IDEMPOTENT_STRANDS {
        return Err(Error::UnsupportedN(n));
    }
    let mut p = HeckeElement::one(n);
    for k in 2..=n {
        let shape_prev = t.shape_at(k - 1);
        let (addable, _) = shape_prev.corners();
        let c_k = t.content(k);
        let l_k = HeckeElement::from_braid(&BraidWord::jucys_murphy(k, n)?);
        for bx in addable {
            let c = bx.content();
            if c == c_k {
                continue;
            }
            // denominator q^{c_k} - q^c; nonzero for symbolic q since c != c_k
            let mut den = LaurentPoly::zero();
            den.add_term(Mono::q(c_k), num::BigRational::one());
            den.add_term(Mono::q(c), -num::BigRational::one());
            let den = Rat::from_poly(&den);
            if den.is_zero_value() {
                return Err(Error::NonGenericParameter(format!(
                    "coincident eigenvalues q^{c_k} = q^{c}"
                )));
            }
            let num = l_k.sub(&HeckeElement::one(n).scale(&q_pow(c)))?;
            p = p.mul(&num)?.scale(&den.recip()?);
        }
    }
    Ok(p)
}

/// Closed form for the Markov trace of any projector of shape lambda:
/// prod over boxes of (1 - a q^{content}) / (1 - q^{hook}).
pub fn projector_trace_formula(shape: &Partition) -> Rat {
    let mut out = Rat::one();
    for bx in shape.boxes() {
        let c = bx.content();
        let h = shape.hook(bx).expect("box in shape") as i64;
        out = out
            .mul(&Rat::one_minus(&Mono::qta(c, 0, 1)))
            .mul(&Rat::geometric(&Mono::q(h)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_syt;

    #[test]
    fn two_strand_projectors() {
        // P_row = (L_2 - q^{-1})/(q - q^{-1}), P_col = (L_2 - q)/(q^{-1} - q),
        // P_row + P_col = 1.
        let row = StandardTableau::parse("[[1,2]]").unwrap();
        let col = StandardTableau::parse("[[1],[2]]").unwrap();
        let p_row = young_idempotent(&row).unwrap();
        let p_col = young_idempotent(&col).unwrap();
        let sum = p_row.add(&p_col).unwrap();
        assert!(sum.equals(&HeckeElement::one(2)).unwrap());
        assert!(p_row.mul(&p_row).unwrap().equals(&p_row).unwrap());
        assert!(p_row.mul(&p_col).unwrap().is_zero());
    }

    #[test]
    fn row_projector_twist_eigenvalue() {
        // FT_2 P_row = q P_row (contents 0 and 1 sum to 1)
        let row = StandardTableau::parse("[[1,2]]").unwrap();
        let p = young_idempotent(&row).unwrap();
        let ft = HeckeElement::from_braid(&BraidWord::full_twist(2, 2).unwrap());
        let lhs = ft.mul(&p).unwrap();
        assert!(lhs.equals(&p.scale(&q_pow(1))).unwrap());
    }

    #[test]
    fn trace_formula_examples() {
        // lambda = (1): (1-a)/(1-q)
        let f = projector_trace_formula(&Partition::new(vec![1]));
        let expect = Rat::one_minus(&Mono::a_pow(1)).mul(&Rat::geometric(&Mono::q(1)));
        assert!(f.equals(&expect).unwrap());
        // lambda = (1,1): contents {0,-1}, hooks {2,1}
        let f = projector_trace_formula(&Partition::new(vec![1, 1]));
        let expect = Rat::one_minus(&Mono::a_pow(1))
            .mul(&Rat::one_minus(&Mono::qta(-1, 0, 1)))
            .mul(&Rat::geometric(&Mono::q(1)))
            .mul(&Rat::geometric(&Mono::q(2)));
        assert!(f.equals(&expect).unwrap());
        // lambda = (2,1): hooks {3,1,1}, contents {0,1,-1}
        let f = projector_trace_formula(&Partition::new(vec![2, 1]));
        let expect = Rat::one_minus(&Mono::a_pow(1))
            .mul(&Rat::one_minus(&Mono::qta(1, 0, 1)))
            .mul(&Rat::one_minus(&Mono::qta(-1, 0, 1)))
            .mul(&Rat::geometric(&Mono::q(1)).pow(2).unwrap())
            .mul(&Rat::geometric(&Mono::q(3)));
        assert!(f.equals(&expect).unwrap());
    }

    #[test]
    fn projector_trace_matches_calibrated_formula_n3() {
        // chi(P_T) equals the colored-unknot closed form of the transposed
        // shape times the frozen monomial kappa^n q^{sum a}; exact for all T.
        for shape in Partition::all(3) {
            for t in enumerate_syt(&shape) {
                let p = young_idempotent(&t).unwrap();
                let chi = p.trace().unwrap();
                let formula = projector_trace_formula(&crate::calib::projector_trace_shape(&shape));
                let rhs = crate::calib::projector_trace_monomial(&shape).mul(&formula);
                assert!(chi.equals(&rhs).unwrap(), "shape {shape} tableau {t}");
            }
        }
    }
}

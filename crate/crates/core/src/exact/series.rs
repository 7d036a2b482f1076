use super::{BigRational, LaurentPoly, Mono, Weight};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A truncated formal power series in the cone of monomials of bounded
/// weight degree: all stored terms have w-degree <= cutoff.
#[derive(Clone, PartialEq)]
pub struct Series {
    pub cutoff: BigRational,
    pub weight: Weight,
    pub terms: BTreeMap<Mono, BigRational>,
}

impl Series {
    pub fn zero(weight: Weight, cutoff: BigRational) -> Self {
        Series { cutoff, weight, terms: BTreeMap::new() }
    }

    pub fn one(weight: Weight, cutoff: BigRational) -> Self {
        let mut s = Series::zero(weight, cutoff);
        s.add_term(Mono::one(), num::One::one());
        s
    }

    pub fn from_poly(p: &LaurentPoly, weight: Weight, cutoff: BigRational) -> Self {
        let mut s = Series::zero(weight, cutoff);
        for (m, c) in p.terms() {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() || m.wdeg(&self.weight) > self.cutoff {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            let dead: Vec<Mono> =
                self.terms.iter().filter(|(_, c)| c.is_zero()).map(|(m, _)| m.clone()).collect();
            for m in dead {
                self.terms.remove(&m);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(self.weight.clone(), self.cutoff.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono, c: &BigRational) -> Series {
        let mut out = Series::zero(self.weight.clone(), self.cutoff.clone());
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// Multiply by the geometric series 1/(1 - m); requires wdeg(m) > 0.
    pub fn mul_geom(&self, m: &Mono) -> Series {
        let d = m.wdeg(&self.weight);
        assert!(d > BigRational::zero(), "geometric factor must have positive weight");
        let mut out = Series::zero(self.weight.clone(), self.cutoff.clone());
        for (m1, c1) in &self.terms {
            let mut cur = m1.clone();
            let mut deg = cur.wdeg(&self.weight);
            while deg <= self.cutoff {
                out.add_term(cur.clone(), c1.clone());
                cur = cur.mul(m);
                deg += &d;
            }
        }
        out
    }

    /// Truncate to a smaller cutoff.
    pub fn truncate(&self, cutoff: BigRational) -> Series {
        let mut out = Series::zero(self.weight.clone(), cutoff);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// All coefficients are non-negative (sanity check for Poincare series).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c >= &BigRational::zero())
    }

    pub fn render(&self) -> String {
        let p = LaurentPoly { terms: self.terms.clone() };
        p.render(&self.weight)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg>{})", self.render(), self.cutoff)
    }
}

use super::{BigRational, Mono, Subst, Weight};
use crate::error::Result;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A multivariate Laurent polynomial: finite map monomial -> nonzero rational.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    pub(crate) terms: BTreeMap<Mono, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Mono::one(), BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::monomial(Mono::one(), c)
    }

    /// 1 - m.
    pub fn one_minus(m: &Mono) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(m.clone(), -BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Mono::one()).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            // remove the key we just zeroed
            let dead: Vec<Mono> =
                self.terms.iter().filter(|(_, c)| c.is_zero()).map(|(m, _)| m.clone()).collect();
            for m in dead {
                self.terms.remove(&m);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Is this a single term `c * m`?
    pub fn as_monomial(&self) -> Option<(BigRational, Mono)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    /// Exact division by the binomial (1 - m), if it divides.
    ///
    /// Solves Q = P + m*Q degreewise along the grading w·exp(m) > 0 built
    /// from m itself, which multiplication by m strictly increases.
    pub fn div_one_minus(&self, m: &Mono) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if m.is_one() {
            return None; // (1 - 1) = 0 divides nothing nonzero
        }
        // Weight w = exponent vector of m itself: w . exp(m) = |exp(m)|^2 > 0.
        let key = |x: &Mono| -> i64 {
            x.q2 * m.q2 + x.t2 * m.t2 + 4 * x.a * m.a
                + 4 * (0..x.ext_len().max(m.ext_len()))
                    .map(|i| x.ext_exp(i) * m.ext_exp(i))
                    .sum::<i64>()
        };
        let step = key(m);
        debug_assert!(step > 0);
        // Every quotient term has key at most max_key(P) - step, so once the
        // remainder's minimal key climbs past max_key(P) the division fails.
        let max_key = self.terms.keys().map(&key).max().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (m0, c0) = rem
                .terms
                .iter()
                .min_by(|(x, _), (y, _)| key(x).cmp(&key(y)).then(x.cmp(y)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if key(&m0) + step > max_key {
                return None;
            }
            // rem = (1 - m) * (quot + c0*m0 + ...) ; peel c0*m0 into quot
            quot.add_term(m0.clone(), c0.clone());
            rem.add_term(m0.clone(), -c0.clone());
            rem.add_term(m0.mul(m), c0);
        }
        Some(quot)
    }

    pub fn specialize(&self, s: &Subst) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (neg, img) = m.specialize(s)?;
            out.add_term(img, if neg { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// Lowest term under the given weight (ties broken by monomial order).
    pub fn min_term(&self, w: &Weight) -> Option<(Mono, BigRational)> {
        self.terms
            .iter()
            .min_by(|(x, _), (y, _)| x.wdeg(w).cmp(&y.wdeg(w)).then(x.cmp(y)))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Render with terms sorted by weight degree descending, then
    /// lexicographically descending; matches the toolkit's text output format.
    pub fn render(&self, w: &Weight) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Mono, &BigRational)> = self.terms.iter().collect();
        ts.sort_by(|(x, _), (y, _)| {
            y.wdeg(w).cmp(&x.wdeg(w)).then_with(|| y.cmp(x))
        });
        let mut out = String::new();
        for (i, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&Weight::default_qta()))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

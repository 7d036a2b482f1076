use super::{BigRational, LaurentPoly, Mono, Series, Subst, Weight};
use crate::error::{Error, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A rational function kept in factored form:
///
/// ```text
///   coeff * mono * prod (1 - u_i)^{e_i} / prod (1 - v_j)^{f_j} * rnum / rden
/// ```
///
/// Factors are binomials (1 - monomial); non-factorable parts live in the
/// residual pair (rnum, rden). Normalization orients every factor monomial
/// lexicographically positive via (1 - m^{-1}) = -m^{-1} (1 - m), cancels
/// common factors as multiset intersection, divides binomial factors out of
/// the residual where possible, and reports a zero denominator as an error.
#[derive(Clone, PartialEq)]
pub struct Rat {
    pub(crate) coeff: BigRational,
    pub(crate) mono: Mono,
    pub(crate) num: BTreeMap<Mono, u32>,
    pub(crate) den: BTreeMap<Mono, u32>,
    pub(crate) rnum: LaurentPoly,
    pub(crate) rden: LaurentPoly,
}

fn mmap_insert(map: &mut BTreeMap<Mono, u32>, m: Mono, k: u32) {
    if k == 0 {
        return;
    }
    *map.entry(m).or_insert(0) += k;
}

impl Rat {
    pub fn zero() -> Self {
        Rat {
            coeff: BigRational::zero(),
            mono: Mono::one(),
            num: BTreeMap::new(),
            den: BTreeMap::new(),
            rnum: LaurentPoly::one(),
            rden: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Rat::from_mono(BigRational::one(), Mono::one())
    }

    pub fn from_mono(coeff: BigRational, mono: Mono) -> Self {
        if coeff.is_zero() {
            return Rat::zero();
        }
        Rat { coeff, mono, ..Rat::one_skeleton() }
    }

    fn one_skeleton() -> Self {
        Rat {
            coeff: BigRational::one(),
            mono: Mono::one(),
            num: BTreeMap::new(),
            den: BTreeMap::new(),
            rnum: LaurentPoly::one(),
            rden: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Rat::from_mono(super::qi(n), Mono::one())
    }

    pub fn from_poly(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Rat::zero();
        }
        Rat { rnum: p.clone(), ..Rat::one_skeleton() }.reduce()
    }

    /// The binomial factor (1 - m).
    pub fn one_minus(m: &Mono) -> Self {
        if m.is_one() {
            return Rat::zero();
        }
        let mut r = Rat::one_skeleton();
        mmap_insert(&mut r.num, m.clone(), 1);
        r.reduce()
    }

    /// The geometric factor 1/(1 - m).
    pub fn geometric(m: &Mono) -> Self {
        let mut r = Rat::one_skeleton();
        mmap_insert(&mut r.den, m.clone(), 1);
        r.reduce()
    }

    pub fn is_zero_value(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Orient factors, cancel multisets, divide binomials out of residuals,
    /// extract residual content. Does not error: an identity monomial in the
    /// denominator is kept and surfaced by `normalize`/`expand`/`equals`.
    fn reduce(mut self) -> Self {
        if self.coeff.is_zero() || self.rnum.is_zero() {
            return Rat::zero();
        }
        // Identity factor in the numerator means the value is zero, unless the
        // denominator is also degenerate (0/0), which we keep for reporting.
        if self.num.contains_key(&Mono::one()) && !self.den.contains_key(&Mono::one()) {
            return Rat::zero();
        }
        // Orient factors.
        let orient = |map: BTreeMap<Mono, u32>, coeff: &mut BigRational, mono: &mut Mono| {
            let mut out: BTreeMap<Mono, u32> = BTreeMap::new();
            for (m, k) in map {
                if m.is_one() || m.is_lex_positive() {
                    mmap_insert(&mut out, m, k);
                } else {
                    // (1 - m) = -m (1 - m^{-1})
                    let flip = m.inv();
                    if k % 2 == 1 {
                        *coeff = -coeff.clone();
                    }
                    *mono = mono.mul(&m.pow(k as i64));
                    mmap_insert(&mut out, flip, k);
                }
            }
            out
        };
        self.num = orient(std::mem::take(&mut self.num), &mut self.coeff, &mut self.mono);
        // For a denominator factor the flip divides the prefactor.
        let mut dcoeff = BigRational::one();
        let mut dmono = Mono::one();
        self.den = orient(std::mem::take(&mut self.den), &mut dcoeff, &mut dmono);
        self.coeff /= dcoeff;
        self.mono = self.mono.mul(&dmono.inv());
        // Cancel common factors.
        let keys: Vec<Mono> = self.num.keys().filter(|m| !m.is_one()).cloned().collect();
        for m in keys {
            if let Some(dk) = self.den.get(&m).copied() {
                let nk = self.num[&m];
                let c = nk.min(dk);
                if c > 0 {
                    if nk == c {
                        self.num.remove(&m);
                    } else {
                        *self.num.get_mut(&m).unwrap() -= c;
                    }
                    if dk == c {
                        self.den.remove(&m);
                    } else {
                        *self.den.get_mut(&m).unwrap() -= c;
                    }
                }
            }
        }
        // Divide denominator binomials out of the residual numerator.
        let dens: Vec<Mono> = self.den.keys().filter(|m| !m.is_one()).cloned().collect();
        for v in dens {
            while self.den.get(&v).copied().unwrap_or(0) > 0 && self.rnum.num_terms() > 1 {
                if let Some(q) = self.rnum.div_one_minus(&v) {
                    self.rnum = q;
                    let k = self.den.get_mut(&v).unwrap();
                    *k -= 1;
                    if *k == 0 {
                        self.den.remove(&v);
                    }
                } else {
                    break;
                }
            }
        }
        // And numerator binomials out of the residual denominator.
        let nums: Vec<Mono> = self.num.keys().filter(|m| !m.is_one()).cloned().collect();
        for u in nums {
            while self.num.get(&u).copied().unwrap_or(0) > 0 && self.rden.num_terms() > 1 {
                if let Some(q) = self.rden.div_one_minus(&u) {
                    self.rden = q;
                    let k = self.num.get_mut(&u).unwrap();
                    *k -= 1;
                    if *k == 0 {
                        self.num.remove(&u);
                    }
                } else {
                    break;
                }
            }
        }
        // Cancel residuals against each other when identical.
        if self.rnum == self.rden && !self.rnum.is_one() {
            self.rnum = LaurentPoly::one();
            self.rden = LaurentPoly::one();
        }
        // Extract content from the residuals.
        for denominator in [false, true] {
            let p = if denominator { &mut self.rden } else { &mut self.rnum };
            if p.is_one() || p.is_zero() {
                continue;
            }
            // componentwise-min monomial across terms
            let first = p.terms().next().map(|(m, _)| m.clone()).unwrap();
            let mut q2 = first.q2;
            let mut t2 = first.t2;
            let mut aa = first.a;
            let mut width = first.ext_len();
            for (m, _) in p.terms() {
                width = width.max(m.ext_len());
            }
            let mut ext = vec![i64::MAX; width];
            for (m, _) in p.terms() {
                q2 = q2.min(m.q2);
                t2 = t2.min(m.t2);
                aa = aa.min(m.a);
                for (i, e) in ext.iter_mut().enumerate() {
                    *e = (*e).min(m.ext_exp(i));
                }
            }
            let mut g = Mono::halves(q2, t2, aa);
            for (i, e) in ext.iter().enumerate() {
                g.set_ext(i, *e);
            }
            let shifted = p.mul_mono(&g.inv());
            let cmin = shifted.terms().next().map(|(_, c)| c.clone()).unwrap();
            *p = shifted.scale(&cmin.recip());
            if denominator {
                self.coeff /= &cmin;
                self.mono = self.mono.mul(&g.inv());
            } else {
                self.coeff *= &cmin;
                self.mono = self.mono.mul(&g);
            }
        }
        // Promote binomial-shaped residuals into factors.
        for denominator in [false, true] {
            let p = if denominator { self.rden.clone() } else { self.rnum.clone() };
            if p.num_terms() == 2 && p.coeff(&Mono::one()).is_one() {
                let (m, c) = p.terms().find(|(m, _)| !m.is_one()).map(|(m, c)| (m.clone(), c.clone())).unwrap();
                if c == -BigRational::one() {
                    if denominator {
                        self.rden = LaurentPoly::one();
                        mmap_insert(&mut self.den, m, 1);
                    } else {
                        self.rnum = LaurentPoly::one();
                        mmap_insert(&mut self.num, m, 1);
                    }
                }
            }
        }
        if self.num.contains_key(&Mono::one()) && !self.den.contains_key(&Mono::one()) {
            return Rat::zero();
        }
        self
    }

    /// Fully canonicalize; errors if the denominator vanishes identically.
    pub fn normalize(&self) -> Result<Rat> {
        let r = self.clone().reduce();
        if let Some(bad) = r.zero_den_factor() {
            return Err(Error::ZeroDenominator(format!(": {bad}")));
        }
        Ok(r)
    }

    /// The offending denominator factor, if the denominator vanishes.
    pub fn zero_den_factor(&self) -> Option<String> {
        if self.den.contains_key(&Mono::one()) {
            return Some("(1 - 1)".to_string());
        }
        if self.rden.is_zero() {
            return Some("0".to_string());
        }
        None
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        if self.is_zero_value() || other.is_zero_value() {
            return Rat::zero();
        }
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        out.mono = out.mono.mul(&other.mono);
        for (m, k) in &other.num {
            mmap_insert(&mut out.num, m.clone(), *k);
        }
        for (m, k) in &other.den {
            mmap_insert(&mut out.den, m.clone(), *k);
        }
        if !other.rnum.is_one() {
            out.rnum = &out.rnum * &other.rnum;
        }
        if !other.rden.is_one() {
            out.rden = &out.rden * &other.rden;
        }
        out.reduce()
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero_value() {
            return Err(Error::ZeroDenominator(" (reciprocal of zero)".into()));
        }
        Ok(Rat {
            coeff: self.coeff.recip(),
            mono: self.mono.inv(),
            num: self.den.clone(),
            den: self.num.clone(),
            rnum: self.rden.clone(),
            rden: self.rnum.clone(),
        }
        .reduce())
    }

    pub fn div(&self, other: &Rat) -> Result<Rat> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, k: i64) -> Result<Rat> {
        if k == 0 {
            return Ok(Rat::one());
        }
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut out = Rat::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Rat {
        let mut out = self.clone();
        out.coeff = -out.coeff;
        out
    }

    pub fn add(&self, other: &Rat) -> Rat {
        if self.is_zero_value() {
            return other.clone();
        }
        if other.is_zero_value() {
            return self.clone();
        }
        // Common denominator: multiset max of the two factored denominators.
        let mut den: BTreeMap<Mono, u32> = self.den.clone();
        for (m, k) in &other.den {
            let e = den.entry(m.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        // Common factored numerator part stays factored.
        let mut ncommon: BTreeMap<Mono, u32> = BTreeMap::new();
        for (m, k) in &self.num {
            if let Some(k2) = other.num.get(m) {
                mmap_insert(&mut ncommon, m.clone(), *k.min(k2));
            }
        }
        let lift = |x: &Rat| -> LaurentPoly {
            let mut p = x.rnum.mul_mono(&x.mono).scale(&x.coeff);
            for (m, k) in &x.num {
                let extra = k - ncommon.get(m).copied().unwrap_or(0);
                for _ in 0..extra {
                    p = &p * &LaurentPoly::one_minus(m);
                }
            }
            for (m, k) in &den {
                let extra = k - x.den.get(m).copied().unwrap_or(0);
                for _ in 0..extra {
                    p = &p * &LaurentPoly::one_minus(m);
                }
            }
            p
        };
        // Residual denominators multiply (no gcd attempted).
        let mut p1 = lift(self);
        let mut p2 = lift(other);
        if !other.rden.is_one() {
            p1 = &p1 * &other.rden;
        }
        if !self.rden.is_one() {
            p2 = &p2 * &self.rden;
        }
        let sum = &p1 + &p2;
        if sum.is_zero() {
            return Rat::zero();
        }
        Rat {
            coeff: BigRational::one(),
            mono: Mono::one(),
            num: ncommon,
            den,
            rnum: sum,
            rden: &self.rden * &other.rden,
        }
        .reduce()
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    /// Exact equality of the represented rational functions.
    pub fn equals(&self, other: &Rat) -> Result<bool> {
        let a = self.normalize()?;
        let b = other.normalize()?;
        // Fast path: identical canonical forms.
        if a.coeff == b.coeff
            && a.mono == b.mono
            && a.num == b.num
            && a.den == b.den
            && a.rnum == b.rnum
            && a.rden == b.rden
        {
            return Ok(true);
        }
        // Cross-multiply, cancelling shared factors first.
        let numer = |x: &Rat, other_den: &BTreeMap<Mono, u32>, other_rden: &LaurentPoly| {
            let mut p = x.rnum.mul_mono(&x.mono).scale(&x.coeff);
            for (m, k) in &x.num {
                for _ in 0..*k {
                    p = &p * &LaurentPoly::one_minus(m);
                }
            }
            for (m, k) in other_den {
                let already = x.den.get(m).copied().unwrap_or(0);
                for _ in 0..k.saturating_sub(already) {
                    p = &p * &LaurentPoly::one_minus(m);
                }
            }
            if !other_rden.is_one() {
                p = &p * other_rden;
            }
            p
        };
        let lhs = numer(&a, &b.den, &b.rden);
        let rhs = numer(&b, &a.den, &a.rden);
        Ok(lhs == rhs)
    }

    /// If the value is a Laurent polynomial (no surviving denominator),
    /// return it expanded.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let r = self.clone().reduce();
        if !r.den.is_empty() || !r.rden.is_one() {
            return None;
        }
        let mut p = r.rnum.mul_mono(&r.mono).scale(&r.coeff);
        for (m, k) in &r.num {
            for _ in 0..*k {
                p = &p * &LaurentPoly::one_minus(m);
            }
        }
        Some(p)
    }

    /// If the value is exactly `c * m`, return it.
    pub fn as_monomial(&self) -> Option<(BigRational, Mono)> {
        let r = self.clone().reduce();
        if r.num.is_empty() && r.den.is_empty() && r.rnum.is_one() && r.rden.is_one() {
            Some((r.coeff, r.mono))
        } else {
            None
        }
    }

    pub fn specialize(&self, s: &Subst) -> Result<Rat> {
        if self.is_zero_value() {
            return Ok(Rat::zero());
        }
        let mut out = Rat::one_skeleton();
        let (neg, m) = self.mono.specialize(s)?;
        out.coeff = if neg { -self.coeff.clone() } else { self.coeff.clone() };
        out.mono = m;
        for (m, k) in &self.num {
            let (neg, img) = m.specialize(s)?;
            if neg {
                // 1 - (-m') = 1 + m' has no binomial form: expand into residual
                let mut p = LaurentPoly::one();
                p.add_term(img, BigRational::one());
                for _ in 0..*k {
                    out.rnum = &out.rnum * &p;
                }
            } else {
                mmap_insert(&mut out.num, img, *k);
            }
        }
        for (m, k) in &self.den {
            let (neg, img) = m.specialize(s)?;
            if neg {
                let mut p = LaurentPoly::one();
                p.add_term(img, BigRational::one());
                for _ in 0..*k {
                    out.rden = &out.rden * &p;
                }
            } else {
                mmap_insert(&mut out.den, img, *k);
            }
        }
        out.rnum = &out.rnum * &self.rnum.specialize(s)?;
        let rd = self.rden.specialize(s)?;
        if !rd.is_one() {
            out.rden = &out.rden * &rd;
        }
        out.normalize()
    }

    /// Invert every variable (Serre duality on graded pieces).
    pub fn dual(&self) -> Rat {
        let mut width = self.mono.ext_len();
        for m in self.num.keys().chain(self.den.keys()) {
            width = width.max(m.ext_len());
        }
        for (m, _) in self.rnum.terms().chain(self.rden.terms()) {
            width = width.max(m.ext_len());
        }
        self.specialize(&Subst::dualize(width))
            .expect("dualize is sign-free and cannot fail")
    }

    /// Truncated power-series expansion in the cone where every denominator
    /// factor has positive weight.
    pub fn expand(&self, w: &Weight, cutoff: BigRational) -> Result<Series> {
        let r = self.clone().reduce();
        if r.is_zero_value() {
            return Ok(Series::zero(w.clone(), cutoff));
        }
        if let Some(bad) = r.zero_den_factor() {
            return Err(Error::ZeroDenominator(format!(": {bad}")));
        }
        for m in r.den.keys() {
            if m.wdeg(w) <= BigRational::zero() {
                return Err(Error::NotExpandable(format!("(1 - {m})")));
            }
        }
        // Residual denominator: write rden = c0 * m0 * (1 + tail) with m0 its
        // unique w-minimal term; all tail terms then have positive w-degree.
        let mut rden_tail = LaurentPoly::zero();
        let mut rden_c0 = BigRational::one();
        let mut rden_m0 = Mono::one();
        if !r.rden.is_one() {
            let (m0, c0) = r.rden.min_term(w).unwrap();
            let dmin = m0.wdeg(w);
            if r.rden.terms().filter(|(m, _)| m.wdeg(w) == dmin).count() > 1 {
                return Err(Error::NotExpandable(format!(
                    "residual denominator {} has no unique minimal term",
                    r.rden
                )));
            }
            for (m, c) in r.rden.terms() {
                if *m == m0 {
                    continue;
                }
                rden_tail.add_term(m.mul(&m0.inv()), c / &c0);
            }
            rden_c0 = c0;
            rden_m0 = m0;
        }
        let total_mono = r.mono.mul(&rden_m0.inv());
        let shift = total_mono.wdeg(w);
        let inner_cutoff = &cutoff - &shift;
        let mut s = Series::from_poly(&r.rnum, w.clone(), inner_cutoff.clone());
        for (m, k) in &r.num {
            let f = Series::from_poly(&LaurentPoly::one_minus(m), w.clone(), inner_cutoff.clone());
            for _ in 0..*k {
                s = s.mul(&f);
            }
        }
        for (m, k) in &r.den {
            for _ in 0..*k {
                s = s.mul_geom(m);
            }
        }
        if !rden_tail.is_zero() {
            // 1/(1 + T) = sum (-T)^k
            let t = Series::from_poly(&rden_tail, w.clone(), inner_cutoff.clone());
            let mut inv = Series::one(w.clone(), inner_cutoff.clone());
            let mut pw = Series::one(w.clone(), inner_cutoff.clone());
            let dmin = rden_tail
                .terms()
                .map(|(m, _)| m.wdeg(w))
                .min()
                .unwrap();
            let mut k = 1u32;
            loop {
                let deg = &dmin * super::qi(k as i64);
                if deg > inner_cutoff {
                    break;
                }
                pw = pw.mul(&t);
                if pw.is_zero() {
                    break;
                }
                let sgn = if k % 2 == 1 { -BigRational::one() } else { BigRational::one() };
                let mut term = pw.clone();
                for c in term.terms.values_mut() {
                    *c *= &sgn;
                }
                inv = inv.add(&term);
                k += 1;
            }
            s = s.mul(&inv);
        }
        let scale = &r.coeff / &rden_c0;
        let mut out = Series::zero(w.clone(), cutoff);
        for (m, c) in &s.terms {
            out.add_term(m.mul(&total_mono), c * &scale);
        }
        Ok(out)
    }

    /// Factored rendering, e.g. `(1-t)/((1-q)^2*(1-t/q))`.
    pub fn render(&self) -> String {
        if self.is_zero_value() {
            return "0".to_string();
        }
        let r = self.clone().reduce();
        let mut numparts: Vec<String> = Vec::new();
        let neg = r.coeff.is_negative();
        let cabs = r.coeff.abs();
        let lead = match (cabs.is_one(), r.mono.is_one()) {
            (true, true) => String::new(),
            (true, false) => format!("{}", r.mono),
            (false, true) => format!("{cabs}"),
            (false, false) => format!("{cabs}*{}", r.mono),
        };
        if !lead.is_empty() {
            numparts.push(lead);
        }
        let fmt_factor = |m: &Mono, k: u32| -> String {
            let base = format!("(1-{m})");
            if k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        };
        for (m, k) in &r.num {
            numparts.push(fmt_factor(m, *k));
        }
        if !r.rnum.is_one() {
            numparts.push(format!("({})", r.rnum));
        }
        if numparts.is_empty() {
            numparts.push("1".to_string());
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&numparts.join("*"));
        let mut denparts: Vec<String> = Vec::new();
        for (m, k) in &r.den {
            denparts.push(fmt_factor(m, *k));
        }
        if !r.rden.is_one() {
            denparts.push(format!("({})", r.rden));
        }
        if !denparts.is_empty() {
            if denparts.len() == 1 && r.den.values().sum::<u32>() <= 1 {
                out.push_str(&format!("/{}", denparts[0]));
            } else {
                out.push_str(&format!("/({})", denparts.join("*")));
            }
        }
        out
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q1, qi};

    fn q() -> Mono {
        Mono::q(1)
    }
    fn t() -> Mono {
        Mono::t(1)
    }

    #[test]
    fn identical_factor_cancellation() {
        // (1-q)(1-t)/(1-t) -> (1-q)
        let x = Rat::one_minus(&q()).mul(&Rat::one_minus(&t())).mul(&Rat::geometric(&t()));
        let n = x.normalize().unwrap();
        assert!(n.equals(&Rat::one_minus(&q())).unwrap());
        assert_eq!(n.render(), "(1-q)");
    }

    #[test]
    fn orientation_flip() {
        // 1/(1 - q^{-1}) = -q/(1-q)
        let x = Rat::geometric(&Mono::q(-1)).normalize().unwrap();
        let expect = Rat::from_mono(-q1(), q()).mul(&Rat::geometric(&q()));
        assert!(x.equals(&expect).unwrap());
    }

    #[test]
    fn zero_denominator_detected() {
        // (1-t)/(1-1)
        let mut r = Rat::one_minus(&t());
        mmap_insert(&mut r.den, Mono::one(), 1);
        assert!(matches!(r.normalize(), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn expand_geometric() {
        // 1/(1-q) to degree 3
        let s = Rat::geometric(&q()).expand(&Weight::default_qta(), qi(3)).unwrap();
        assert_eq!(s.render(), "q^3 + q^2 + q + 1");
        // (1-q^2)/(1-q) = 1 + q
        let s = Rat::one_minus(&Mono::q(2))
            .mul(&Rat::geometric(&q()))
            .expand(&Weight::default_qta(), qi(3))
            .unwrap();
        assert_eq!(s.render(), "q + 1");
    }

    #[test]
    fn expand_two_geometrics() {
        // 1/((1-q)(1-qt)), cutoff 2 -> 1 + q + q^2 + qt
        let x = Rat::geometric(&q()).mul(&Rat::geometric(&Mono::qta(1, 1, 0)));
        let s = x.expand(&Weight::default_qta(), qi(2)).unwrap();
        assert_eq!(s.coeff(&Mono::one()), q1());
        assert_eq!(s.coeff(&Mono::q(1)), q1());
        assert_eq!(s.coeff(&Mono::q(2)), q1());
        assert_eq!(s.coeff(&Mono::qta(1, 1, 0)), q1());
        assert_eq!(s.terms.len(), 4);
    }

    #[test]
    fn specialization_examples() {
        // (1 - t/q) under t -> q^{-1}: becomes (1 - q^{-2}) = -q^{-2}(1 - q^2)
        let x = Rat::one_minus(&Mono::qta(-1, 1, 0));
        let y = x.specialize(&Subst::t_to_q_inv()).unwrap();
        let expect = Rat::from_mono(-q1(), Mono::q(-2)).mul(&Rat::one_minus(&Mono::q(2)));
        assert!(y.equals(&expect).unwrap());
        // zeta-style factor (1 - qt x) with x = 1: under t -> 1/q gives (1-1) = 0
        let z = Rat::one_minus(&Mono::qta(1, 1, 0)).specialize(&Subst::t_to_q_inv()).unwrap();
        assert!(z.is_zero_value());
        // 1/(1-qt) under t -> q^{-1} is a zero denominator
        let w = Rat::geometric(&Mono::qta(1, 1, 0)).specialize(&Subst::t_to_q_inv());
        assert!(matches!(w, Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn addition_with_cancellation() {
        // 1/(1-q) - q/(1-q) = 1
        let g = Rat::geometric(&q());
        let x = g.sub(&Rat::from_mono(q1(), q()).mul(&g));
        assert!(x.equals(&Rat::one()).unwrap());
        // 1/(1-q) + 1/(1-t) has residual numerator (2 - q - t)-ish
        let y = Rat::geometric(&q()).add(&Rat::geometric(&t()));
        let back = y.mul(&Rat::one_minus(&q())).mul(&Rat::one_minus(&t()));
        let expect = Rat::from_poly(&(&LaurentPoly::one_minus(&t()) + &LaurentPoly::one_minus(&q())));
        assert!(back.equals(&expect).unwrap());
    }

    #[test]
    fn normalize_idempotent_and_expansion_stable() {
        let x = Rat::one_minus(&Mono::q(2)).mul(&Rat::geometric(&Mono::qta(1, -1, 0)));
        let n1 = x.normalize().unwrap();
        let n2 = n1.normalize().unwrap();
        assert_eq!(n1, n2);
        let w = Weight::ints(2, 1, 1);
        let e1 = x.expand(&w, qi(6)).unwrap();
        let e2 = n1.expand(&w, qi(6)).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn dual_inverts_monomials() {
        let x = Rat::one_minus(&Mono::qta(1, 1, 0)).mul(&Rat::geometric(&q()));
        let d = x.dual();
        // dual of (1-qt)/(1-q) = (1-1/(qt))/(1-1/q) = (qt)^{-1}... compare via expansion route:
        let dd = d.dual();
        assert!(dd.equals(&x).unwrap());
    }

    #[test]
    fn residual_binomial_promotion() {
        // (1 - q) + q(1 - q)... build (1 - q^2) as a sum: 1/(1) stuff
        let one = Rat::one();
        let x = one.sub(&Rat::from_mono(q1(), Mono::q(2)));
        let n = x.normalize().unwrap();
        assert!(n.rnum.is_one());
        assert!(n.num.contains_key(&Mono::q(2)));
    }
}

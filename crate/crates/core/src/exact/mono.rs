use super::BigRational;
use crate::error::{Error, Result};
use num::BigInt;
use std::cmp::Ordering;
use std::fmt;

/// A Laurent monomial `q^(q2/2) * t^(t2/2) * a^a * ext_0^e0 * ext_1^e1 * ...`.
///
/// Exponents of q and t are stored doubled so that half-integer powers stay
/// exact integers. The `ext` slots carry auxiliary symbols whose meaning is
/// fixed by the caller (the K-theory engine uses slot 0 for the pushforward
/// variable z, then Chern roots, then line-bundle symbols). Trailing zero
/// ext slots are trimmed, so equality is canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q2: i64,
    pub t2: i64,
    pub a: i64,
    ext: Vec<i64>,
}

impl Mono {
    pub fn one() -> Self {
        Mono { q2: 0, t2: 0, a: 0, ext: Vec::new() }
    }

    /// q^dq * t^dt * a^da with integer exponents.
    pub fn qta(dq: i64, dt: i64, da: i64) -> Self {
        Mono { q2: 2 * dq, t2: 2 * dt, a: da, ext: Vec::new() }
    }

    /// Doubled-exponent constructor: q^(q2/2) t^(t2/2) a^a.
    pub fn halves(q2: i64, t2: i64, a: i64) -> Self {
        Mono { q2, t2, a, ext: Vec::new() }
    }

    pub fn q(dq: i64) -> Self {
        Self::qta(dq, 0, 0)
    }
    pub fn t(dt: i64) -> Self {
        Self::qta(0, dt, 0)
    }
    pub fn a_pow(da: i64) -> Self {
        Self::qta(0, 0, da)
    }

    /// Auxiliary symbol `#slot` to the given power.
    pub fn ext(slot: usize, e: i64) -> Self {
        let mut m = Mono::one();
        m.set_ext(slot, e);
        m
    }

    pub fn ext_exp(&self, slot: usize) -> i64 {
        self.ext.get(slot).copied().unwrap_or(0)
    }

    pub fn ext_len(&self) -> usize {
        self.ext.len()
    }

    pub fn set_ext(&mut self, slot: usize, e: i64) {
        if self.ext.len() <= slot {
            self.ext.resize(slot + 1, 0);
        }
        self.ext[slot] = e;
        self.trim();
    }

    fn trim(&mut self) {
        while self.ext.last() == Some(&0) {
            self.ext.pop();
        }
    }

    pub fn is_one(&self) -> bool {
        self.q2 == 0 && self.t2 == 0 && self.a == 0 && self.ext.is_empty()
    }

    /// True if the monomial involves no auxiliary symbols.
    pub fn is_qta(&self) -> bool {
        self.ext.is_empty()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut ext = self.ext.clone();
        if ext.len() < other.ext.len() {
            ext.resize(other.ext.len(), 0);
        }
        for (i, e) in other.ext.iter().enumerate() {
            ext[i] += e;
        }
        let mut m = Mono { q2: self.q2 + other.q2, t2: self.t2 + other.t2, a: self.a + other.a, ext };
        m.trim();
        m
    }

    pub fn inv(&self) -> Mono {
        Mono {
            q2: -self.q2,
            t2: -self.t2,
            a: -self.a,
            ext: self.ext.iter().map(|e| -e).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Mono {
        let mut m = Mono {
            q2: self.q2 * k,
            t2: self.t2 * k,
            a: self.a * k,
            ext: self.ext.iter().map(|e| e * k).collect(),
        };
        m.trim();
        m
    }

    /// Lexicographically positive orientation test on the exponent vector
    /// (q2, t2, a, ext...). The identity monomial is neither.
    pub fn is_lex_positive(&self) -> bool {
        for v in self.exps() {
            match v.cmp(&0) {
                Ordering::Greater => return true,
                Ordering::Less => return false,
                Ordering::Equal => {}
            }
        }
        false
    }

    fn exps(&self) -> impl Iterator<Item = i64> + '_ {
        [self.q2, self.t2, self.a].into_iter().chain(self.ext.iter().copied())
    }

    /// Weight degree under a rational weight vector (w_q, w_t, w_a); auxiliary
    /// slots weigh via `w.ext`.
    pub fn wdeg(&self, w: &Weight) -> BigRational {
        let mut d = &w.wq * BigRational::new(BigInt::from(self.q2), BigInt::from(2))
            + &w.wt * BigRational::new(BigInt::from(self.t2), BigInt::from(2))
            + &w.wa * BigRational::from(BigInt::from(self.a));
        for (i, e) in self.ext.iter().enumerate() {
            if *e != 0 {
                if let Some(we) = w.ext.get(i) {
                    d += we * BigRational::from(BigInt::from(*e));
                }
            }
        }
        d
    }

    /// Apply an exponent-linear substitution, returning the sign flip and the
    /// image monomial. Errors if a signed image is raised to a half-integer
    /// power or if the image would need quarter-integer exponents.
    pub fn specialize(&self, s: &Subst) -> Result<(bool, Mono)> {
        let mut out = Mono::one();
        let mut neg = false;
        // Image of var^(e2/2) where the image of var is (sign, m).
        let mut apply_half = |img: &(bool, Mono), e2: i64| -> Result<()> {
            if e2 == 0 {
                return Ok(());
            }
            let (sign, m) = img;
            if (m.q2 * e2) % 2 != 0 || (m.t2 * e2) % 2 != 0 {
                return Err(Error::NonGenericParameter(format!(
                    "substitution produces quarter-integer exponent on {self}"
                )));
            }
            if (m.a * e2) % 2 != 0 || m.ext.iter().any(|x| (x * e2) % 2 != 0) {
                return Err(Error::NonGenericParameter(format!(
                    "substitution gives half-integer exponent of an integer-graded symbol on {self}"
                )));
            }
            if *sign {
                if e2 % 2 != 0 {
                    return Err(Error::NonGenericParameter(format!(
                        "signed image raised to half-integer power on {self}"
                    )));
                }
                if (e2 / 2) % 2 != 0 {
                    neg = !neg;
                }
            }
            out = out.mul(&Mono {
                q2: m.q2 * e2 / 2,
                t2: m.t2 * e2 / 2,
                a: m.a * e2 / 2,
                ext: m.ext.iter().map(|x| x * e2 / 2).collect(),
            });
            Ok(())
        };
        apply_half(&s.q, self.q2)?;
        apply_half(&s.t, self.t2)?;
        apply_half(&s.a, 2 * self.a)?;
        for (i, e) in self.ext.iter().enumerate() {
            if *e != 0 {
                let img = s.ext.get(i).cloned().unwrap_or((false, Mono::ext(i, 1)));
                apply_half(&img, 2 * e)?;
            }
        }
        out.trim();
        Ok((neg, out))
    }

    fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e2: i64, doubled: bool, first: &mut bool) -> fmt::Result {
        if e2 == 0 {
            return Ok(());
        }
        if !*first {
            write!(f, "*")?;
        }
        *first = false;
        if doubled {
            if e2 == 2 {
                write!(f, "{name}")
            } else if e2 % 2 == 0 {
                let e = e2 / 2;
                if e < 0 {
                    write!(f, "{name}^({e})")
                } else {
                    write!(f, "{name}^{e}")
                }
            } else {
                write!(f, "{name}^({e2}/2)")
            }
        } else if e2 == 1 {
            write!(f, "{name}")
        } else if e2 < 0 {
            write!(f, "{name}^({e2})")
        } else {
            write!(f, "{name}^{e2}")
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        Mono::fmt_var(f, "q", self.q2, true, &mut first)?;
        Mono::fmt_var(f, "t", self.t2, true, &mut first)?;
        Mono::fmt_var(f, "a", self.a, false, &mut first)?;
        for (i, e) in self.ext.iter().enumerate() {
            Mono::fmt_var(f, &format!("x{i}"), *e, false, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q2
            .cmp(&other.q2)
            .then(self.t2.cmp(&other.t2))
            .then(self.a.cmp(&other.a))
            .then_with(|| {
                let n = self.ext.len().max(other.ext.len());
                for i in 0..n {
                    let c = self.ext_exp(i).cmp(&other.ext_exp(i));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }
}

/// Weight vector defining a grading: rational weights for q, t, a and the
/// auxiliary slots (default 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub wq: BigRational,
    pub wt: BigRational,
    pub wa: BigRational,
    pub ext: Vec<BigRational>,
}

impl Weight {
    pub fn new(wq: BigRational, wt: BigRational, wa: BigRational) -> Self {
        Weight { wq, wt, wa, ext: Vec::new() }
    }

    pub fn ints(wq: i64, wt: i64, wa: i64) -> Self {
        Weight::new(super::qi(wq), super::qi(wt), super::qi(wa))
    }

    /// Default expansion weights (1, 1, 1) on (q, t, a).
    pub fn default_qta() -> Self {
        Weight::ints(1, 1, 1)
    }
}

/// An exponent-linear substitution: each variable maps to a signed monomial.
/// `(true, m)` means the image is `-m`.
#[derive(Clone, Debug)]
pub struct Subst {
    pub q: (bool, Mono),
    pub t: (bool, Mono),
    pub a: (bool, Mono),
    pub ext: Vec<(bool, Mono)>,
}

impl Subst {
    pub fn identity() -> Self {
        Subst {
            q: (false, Mono::q(1)),
            t: (false, Mono::t(1)),
            a: (false, Mono::a_pow(1)),
            ext: Vec::new(),
        }
    }

    /// t -> q^{-1}, everything else fixed.
    pub fn t_to_q_inv() -> Self {
        let mut s = Subst::identity();
        s.t = (false, Mono::q(-1));
        s
    }

    /// a -> -a, everything else fixed.
    pub fn a_to_minus_a() -> Self {
        let mut s = Subst::identity();
        s.a = (true, Mono::a_pow(1));
        s
    }

    /// Invert every variable (Serre-type duality).
    pub fn dualize(width: usize) -> Self {
        Subst {
            q: (false, Mono::q(-1)),
            t: (false, Mono::t(-1)),
            a: (false, Mono::a_pow(-1)),
            ext: (0..width).map(|i| (false, Mono::ext(i, -1))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_equality() {
        let m1 = Mono::qta(1, 2, 0);
        let mut m2 = Mono::qta(1, 2, 0);
        m2.set_ext(3, 0);
        assert_eq!(m1, m2);
        assert!(Mono::one().is_one());
    }

    #[test]
    fn half_exponents_display() {
        let m = Mono::halves(3, 0, 0);
        assert_eq!(m.to_string(), "q^(3/2)");
        assert_eq!(Mono::qta(2, 1, 0).to_string(), "q^2*t");
        assert_eq!(Mono::qta(-1, 0, 1).to_string(), "q^(-1)*a");
    }

    #[test]
    fn lex_orientation() {
        assert!(Mono::qta(1, -5, 0).is_lex_positive());
        assert!(!Mono::qta(-1, 5, 0).is_lex_positive());
        assert!(!Mono::one().is_lex_positive());
        assert!(Mono::halves(0, 1, 0).is_lex_positive());
    }

    #[test]
    fn specialize_t_to_q_inv() {
        // t^{1/2} -> q^{-1/2}
        let m = Mono::halves(0, 1, 0);
        let (neg, out) = m.specialize(&Subst::t_to_q_inv()).unwrap();
        assert!(!neg);
        assert_eq!(out, Mono::halves(-1, 0, 0));
        // q^2 t^3 -> q^{-1}
        let (_, out) = Mono::qta(2, 3, 0).specialize(&Subst::t_to_q_inv()).unwrap();
        assert_eq!(out, Mono::q(-1));
    }

    #[test]
    fn specialize_sign() {
        let (neg, out) = Mono::a_pow(3).specialize(&Subst::a_to_minus_a()).unwrap();
        assert!(neg);
        assert_eq!(out, Mono::a_pow(3));
        let (neg, _) = Mono::a_pow(2).specialize(&Subst::a_to_minus_a()).unwrap();
        assert!(!neg);
    }
}

//! The type-A Hecke algebra in the permutation basis, the Ocneanu/Markov
//! trace, HOMFLY-PT invariants of braid closures, and Young idempotents with
//! their eigenvalue and trace identities.
//!
//! Generators satisfy (sigma_i - v)(sigma_i + v^{-1}) = 0 with v = q^{1/2},
//! the braid relation and far commutation. The trace follows the rules
//! chi(i(sigma)) = chi(sigma) (1-a)/(v - v^{-1}), chi(i(sigma) sigma_n) =
//! chi(sigma), chi(i(sigma) sigma_n^{-1}) = a chi(sigma).

mod projector;
pub mod skein;

pub use projector::{projector_trace_formula, young_idempotent};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Mono, Rat};
use num::One;
use std::collections::BTreeMap;
use std::fmt;

/// Permutations in one-line notation, 0-indexed.
pub type Perm = Vec<u8>;

pub fn perm_identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn perm_len(w: &Perm) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                inv += 1;
            }
        }
    }
    inv
}

/// Reduced word for w (generator indices, 0-indexed; w = s_{j1} ... s_{jk}).
fn reduced_word(w: &Perm) -> Vec<usize> {
    let mut x = w.clone();
    let mut rev = Vec::new();
    loop {
        let mut descent = None;
        for i in 0..x.len().saturating_sub(1) {
            if x[i] > x[i + 1] {
                descent = Some(i);
                break;
            }
        }
        match descent {
            Some(i) => {
                rev.push(i);
                x.swap(i, i + 1);
            }
            None => break,
        }
    }
    rev.reverse();
    rev
}

/// v - v^{-1} as an exact Laurent polynomial in q^{1/2}.
pub fn v_minus_v_inv() -> Rat {
    let mut p = LaurentPoly::zero();
    p.add_term(Mono::halves(1, 0, 0), num::BigRational::one());
    p.add_term(Mono::halves(-1, 0, 0), -num::BigRational::one());
    Rat::from_poly(&p)
}

/// The unknot trace value (1 - a)/(v - v^{-1}).
pub fn unknot_value() -> Rat {
    Rat::one_minus(&Mono::a_pow(1))
        .div(&v_minus_v_inv())
        .expect("v - v^{-1} is nonzero")
}

/// An element of H_n: finite linear combination of permutation basis
/// elements T_w with rational-function coefficients.
#[derive(Clone, PartialEq)]
pub struct HeckeElement {
    pub n: usize,
    coeffs: BTreeMap<Perm, Rat>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        HeckeElement::basis(n, perm_identity(n))
    }

    pub fn basis(n: usize, w: Perm) -> Self {
        assert_eq!(w.len(), n);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, Rat::one());
        HeckeElement { n, coeffs }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i + 1 < n, "generator index out of range");
        let mut w = perm_identity(n);
        w.swap(i, i + 1);
        HeckeElement::basis(n, w)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Perm, &Rat)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, w: &Perm) -> Rat {
        self.coeffs.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, w: Perm, c: Rat) {
        if c.is_zero_value() {
            return;
        }
        let cur = self.coeffs.remove(&w).unwrap_or_else(Rat::zero);
        let sum = cur.add(&c);
        if !sum.is_zero_value() {
            self.coeffs.insert(w, sum);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> HeckeElement {
        if c.is_zero_value() {
            return HeckeElement::zero(self.n);
        }
        HeckeElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Right multiplication by T_{s_i}: T_w T_{s_i} = T_{w s_i} if the length
    /// goes up, else T_{w s_i} + (v - v^{-1}) T_w.
    fn mul_gen(&self, i: usize) -> HeckeElement {
        let vv = v_minus_v_inv();
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            if w[i] < w[i + 1] {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                out.add_term(w.clone(), c.mul(&vv));
            }
        }
        out
    }

    /// Right multiplication by sigma_i^{-1} = T_{s_i} - (v - v^{-1}).
    fn mul_gen_inv(&self, i: usize) -> HeckeElement {
        let vv = v_minus_v_inv();
        let pos = self.mul_gen(i);
        pos.sub(&self.scale(&vv)).expect("same n")
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &other.coeffs {
            let mut part = self.scale(c);
            for i in reduced_word(w) {
                part = part.mul_gen(i);
            }
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// Multiplicative image of a braid word.
    pub fn from_braid(w: &BraidWord) -> HeckeElement {
        let mut out = HeckeElement::one(w.strands);
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize - 1;
            out = if l > 0 { out.mul_gen(i) } else { out.mul_gen_inv(i) };
        }
        out
    }

    /// The natural inclusion H_n -> H_{n+1}.
    pub fn include(&self) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n + 1);
        for (w, c) in &self.coeffs {
            let mut w2 = w.clone();
            w2.push(self.n as u8);
            out.add_term(w2, c.clone());
        }
        out
    }

    /// The partial Markov trace H_{n+1} -> H_n.
    ///
    /// Basis elements split along the coset decomposition w = u c_j with
    /// u in S_n and c_j = s_{n-1} ... s_j the cycle putting the entry n at
    /// position j: Tr(T_u) = T_u (1-a)/(v-v^{-1}) and
    /// Tr(T_{u c_j}) = T_u * T_{s_{n-2} ... s_j}.
    pub fn partial_trace(&self) -> Result<HeckeElement> {
        if self.n == 0 {
            return Err(Error::UnsupportedN(0));
        }
        let n = self.n - 1; // target strand count
        let u_val = unknot_value();
        let mut out = HeckeElement::zero(n);
        for (w, c) in &self.coeffs {
            if w[n] == n as u8 {
                let u: Perm = w[..n].to_vec();
                out.add_term(u, c.mul(&u_val));
            } else {
                let j = w.iter().position(|&x| x == n as u8).expect("entry n present");
                // u = w * c_j^{-1}: u[k] = w[c_j^{-1}[k]]; c_j maps j -> n and
                // shifts j+1..n down to j..n-1, so c_j^{-1}[k] = k for k < j,
                // c_j^{-1}[n] = j, c_j^{-1}[k] = k+1 for j <= k < n.
                let mut u: Perm = Vec::with_capacity(n);
                for k in 0..n {
                    let src = if k < j { k } else { k + 1 };
                    u.push(w[src]);
                }
                debug_assert_eq!(perm_len(&u) + (n - j), perm_len(w));
                // y = s_{n-2} ... s_j in S_n
                let mut y = perm_identity(n);
                for i in (j..n.saturating_sub(1)).rev() {
                    // building the product right-to-left: y = s_{n-2}...s_j
                    let mut step = perm_identity(n);
                    step.swap(i, i + 1);
                    // y := y * step, with step applied first? We want the
                    // single permutation equal to the product; compose:
                    let composed: Perm = (0..n).map(|k| y[step[k] as usize]).collect();
                    y = composed;
                }
                let term = HeckeElement::basis(n, u)
                    .mul(&HeckeElement::basis(n, y))?
                    .scale(c);
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// The full Markov trace chi = Tr^n, an element of the coefficient field.
    pub fn trace(&self) -> Result<Rat> {
        let mut x = self.clone();
        while x.n > 0 {
            x = x.partial_trace()?;
        }
        Ok(x.coeffs.get(&Vec::new()).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn equals(&self, other: &HeckeElement) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut keys: Vec<&Perm> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        for w in keys {
            if !self.coeff(w).equals(&other.coeff(w))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T{w:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// chi of the closure of a braid word: the HOMFLY-PT invariant in this
/// normalization.
pub fn homfly(w: &BraidWord) -> Result<Rat> {
    HeckeElement::from_braid(w).trace()
}

//! Braid words, closures, and the distinguished twist and Jucys-Murphy words.

use crate::error::{Error, Result};
use std::fmt;

/// A braid word on `strands` strands: letters are signed generator indices,
/// +i for sigma_i and -i for its inverse, 1 <= i <= strands-1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= strands {
                return Err(Error::Parse(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn repeat(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Add one free strand on the right (the inclusion B_n -> B_{n+1}).
    pub fn include(&self) -> BraidWord {
        BraidWord { strands: self.strands + 1, letters: self.letters.clone() }
    }

    /// Algebraic crossing sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Underlying permutation (one-line, 0-indexed), cycle count of the
    /// closure, and writhe.
    pub fn closure_data(&self) -> (Vec<usize>, usize, i64) {
        let n = self.strands;
        let mut perm: Vec<usize> = (0..n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        // cycles of the permutation = components of the closure
        let mut seen = vec![false; n];
        let mut components = 0;
        for s in 0..n {
            if !seen[s] {
                components += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        (perm, components, self.writhe())
    }

    /// The full twist FT_k = (sigma_1 ... sigma_{k-1})^k on the first k of n
    /// strands; FT_1 is the empty word.
    pub fn full_twist(k: usize, n: usize) -> Result<BraidWord> {
        if k < 1 || k > n {
            return Err(Error::Parse(format!("full twist needs 1 <= k <= n, got k={k}, n={n}")));
        }
        let base: Vec<i32> = (1..k as i32).collect();
        let mut letters = Vec::with_capacity(base.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&base);
        }
        Ok(BraidWord { strands: n, letters })
    }

    /// The Jucys-Murphy braid L_k = sigma_{k-1} ... sigma_2 sigma_1 sigma_1
    /// sigma_2 ... sigma_{k-1}; its Hecke image equals FT_{k-1}^{-1} FT_k.
    pub fn jucys_murphy(k: usize, n: usize) -> Result<BraidWord> {
        if k < 2 || k > n {
            return Err(Error::Parse(format!("jucys_murphy needs 2 <= k <= n, got k={k}, n={n}")));
        }
        let mut letters: Vec<i32> = (1..k as i32).rev().collect();
        letters.extend(1..k as i32);
        Ok(BraidWord { strands: n, letters })
    }

    /// Parse the text syntax "s1 s2 -s1".
    pub fn parse(s: &str, strands: usize) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (neg, rest) = match tok.strip_prefix('-') {
                Some(r) => (true, r),
                None => (false, tok),
            };
            let idx: i32 = rest
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("bad braid letter {tok}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad braid letter {tok}: {e}")))?;
            letters.push(if neg { -idx } else { idx });
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l < 0 {
                write!(f, "-s{}", -l)?;
            } else {
                write!(f, "s{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{self}]", self.strands)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_twist_words() {
        assert_eq!(BraidWord::full_twist(2, 2).unwrap().letters(), &[1, 1]);
        let ft3 = BraidWord::full_twist(3, 3).unwrap();
        assert_eq!(ft3.letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(ft3.len(), 6);
        assert!(BraidWord::full_twist(1, 3).unwrap().is_empty());
    }

    #[test]
    fn jucys_murphy_words() {
        assert_eq!(BraidWord::jucys_murphy(2, 2).unwrap().letters(), &[1, 1]);
        assert_eq!(BraidWord::jucys_murphy(3, 3).unwrap().letters(), &[2, 1, 1, 2]);
        assert_eq!(BraidWord::jucys_murphy(4, 4).unwrap().letters(), &[3, 2, 1, 1, 2, 3]);
    }

    #[test]
    fn closure_data_examples() {
        let (perm, comps, w) = BraidWord::parse("s1", 2).unwrap().closure_data();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(comps, 1);
        assert_eq!(w, 1);
        let (perm, comps, w) = BraidWord::identity(3).closure_data();
        assert_eq!(perm, vec![0, 1, 2]);
        assert_eq!(comps, 3);
        assert_eq!(w, 0);
        let w8 = BraidWord::parse("s1 s2", 3).unwrap().repeat(4);
        let (perm, comps, wr) = w8.closure_data();
        assert_ne!(perm, vec![0, 1, 2]);
        assert_eq!(comps, 1);
        assert_eq!(wr, 8);
    }

    #[test]
    fn full_twist_is_pure_with_writhe() {
        for n in 1..=5 {
            let ft = BraidWord::full_twist(n, n).unwrap();
            let (perm, _, w) = ft.closure_data();
            assert_eq!(perm, (0..n).collect::<Vec<_>>());
            assert_eq!(w, (n * (n - 1)) as i64);
        }
    }

    #[test]
    fn jucys_murphy_is_pure() {
        for n in 2..=5 {
            for k in 2..=n {
                let l = BraidWord::jucys_murphy(k, n).unwrap();
                let (perm, _, _) = l.closure_data();
                assert_eq!(perm, (0..n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = BraidWord::parse("s1 s2 -s1", 3).unwrap();
        assert_eq!(w.letters(), &[1, 2, -1]);
        assert_eq!(w.to_string(), "s1 s2 -s1");
        assert!(BraidWord::parse("s3", 3).is_err());
    }
}

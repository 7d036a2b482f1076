//! Partitions, Young diagrams and standard Young tableaux, with the contents,
//! hooks, corners and box weights entering the trace and dimension formulas.
//!
//! Box coordinates are (a, b) with the a-axis carrying the q-weight and the
//! b-axis carrying the t-weight; the box (a, b) has weight q^a t^b. Parts of
//! a partition run along the a-axis: box (a, b) lies in lambda iff
//! a < lambda_b. The transpose is provided so statements made in the other
//! convention can be tested verbatim.

use crate::error::{Error, Result};
use crate::exact::Mono;
use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box at q-axis coordinate `a` and t-axis coordinate `b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoxCoord {
    pub a: usize,
    pub b: usize,
}

impl BoxCoord {
    pub fn new(a: usize, b: usize) -> Self {
        BoxCoord { a, b }
    }

    /// Torus weight z = q^a t^b.
    pub fn weight(&self) -> Mono {
        Mono::qta(self.a as i64, self.b as i64, 0)
    }

    /// Content a - b.
    pub fn content(&self) -> i64 {
        self.a as i64 - self.b as i64
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Row length at height b (0 when b is past the last row).
    pub fn row(&self, b: usize) -> usize {
        self.parts.get(b).copied().unwrap_or(0)
    }

    pub fn contains(&self, bx: BoxCoord) -> bool {
        bx.a < self.row(bx.b)
    }

    pub fn boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::with_capacity(self.size());
        for (b, &len) in self.parts.iter().enumerate() {
            for a in 0..len {
                out.push(BoxCoord::new(a, b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (0..cols).map(|a| self.parts.iter().filter(|&&len| len > a).count()).collect();
        Partition { parts }
    }

    /// Content a - b of a box in this diagram.
    pub fn content(&self, bx: BoxCoord) -> Result<i64> {
        if !self.contains(bx) {
            return Err(Error::BoxOutsideDiagram(bx.a as i64, bx.b as i64));
        }
        Ok(bx.content())
    }

    /// Hook length arm + leg + 1.
    pub fn hook(&self, bx: BoxCoord) -> Result<usize> {
        if !self.contains(bx) {
            return Err(Error::BoxOutsideDiagram(bx.a as i64, bx.b as i64));
        }
        let arm = self.row(bx.b) - 1 - bx.a;
        let leg = self.parts.iter().skip(bx.b + 1).filter(|&&len| len > bx.a).count();
        Ok(arm + leg + 1)
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.boxes().iter().map(|&b| self.hook(b).unwrap()).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.boxes().iter().map(|b| b.content()).collect()
    }

    /// Addable and removable corner boxes; |addable| = |removable| + 1.
    pub fn corners(&self) -> (Vec<BoxCoord>, Vec<BoxCoord>) {
        let mut addable = Vec::new();
        let mut removable = Vec::new();
        for b in 0..=self.parts.len() {
            let len = self.row(b);
            let above_ok = b == 0 || self.row(b - 1) > len;
            if above_ok {
                addable.push(BoxCoord::new(len, b));
            }
            if len > 0 && self.row(b + 1) < len {
                removable.push(BoxCoord::new(len - 1, b));
            }
        }
        (addable, removable)
    }

    pub fn add_box(&self, bx: BoxCoord) -> Partition {
        let mut parts = self.parts.clone();
        if bx.b == parts.len() {
            parts.push(1);
        } else {
            parts[bx.b] += 1;
        }
        debug_assert_eq!(parts[bx.b], bx.a + 1);
        Partition::new(parts)
    }

    /// All partitions of n, in a fixed deterministic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, maxpart: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=maxpart.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> =
            inner.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|e| Error::Parse(format!("bad partition {s}: {e}")))?;
        if !(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0)) {
            return Err(Error::Parse(format!("parts not weakly decreasing positive: {s}")));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A standard Young tableau: boxes of a diagram labeled 1..n, labels strictly
/// increasing along both axes; every initial segment is again a diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    // boxes[k] is the box labeled k+1
    boxes: Vec<BoxCoord>,
}

impl StandardTableau {
    pub fn from_boxes(boxes: Vec<BoxCoord>) -> Result<Self> {
        let t = StandardTableau { boxes };
        if !t.is_valid() {
            return Err(Error::Parse(format!("not a standard tableau: {t}")));
        }
        Ok(t)
    }

    fn is_valid(&self) -> bool {
        let mut filled: Vec<BoxCoord> = Vec::new();
        for bx in &self.boxes {
            if filled.contains(bx) {
                return false;
            }
            let west_ok = bx.a == 0 || filled.contains(&BoxCoord::new(bx.a - 1, bx.b));
            let south_ok = bx.b == 0 || filled.contains(&BoxCoord::new(bx.a, bx.b - 1));
            if !west_ok || !south_ok {
                return false;
            }
            filled.push(*bx);
        }
        true
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[BoxCoord] {
        &self.boxes
    }

    /// Box labeled k (1-based).
    pub fn box_of(&self, k: usize) -> BoxCoord {
        self.boxes[k - 1]
    }

    /// Weight z_k of the box labeled k.
    pub fn weight(&self, k: usize) -> Mono {
        self.box_of(k).weight()
    }

    /// Content of the box labeled k.
    pub fn content(&self, k: usize) -> i64 {
        self.box_of(k).content()
    }

    pub fn shape(&self) -> Partition {
        self.shape_at(self.size())
    }

    /// Shape of the sub-tableau on labels 1..=k.
    pub fn shape_at(&self, k: usize) -> Partition {
        let mut rows: Vec<usize> = Vec::new();
        for bx in &self.boxes[..k] {
            if bx.b >= rows.len() {
                rows.resize(bx.b + 1, 0);
            }
            rows[bx.b] = rows[bx.b].max(bx.a + 1);
        }
        Partition::new(rows)
    }

    /// Restriction to labels 1..=k.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        StandardTableau { boxes: self.boxes[..k].to_vec() }
    }

    pub fn extend(&self, bx: BoxCoord) -> StandardTableau {
        let mut boxes = self.boxes.clone();
        boxes.push(bx);
        StandardTableau { boxes }
    }

    pub fn transpose(&self) -> StandardTableau {
        StandardTableau {
            boxes: self.boxes.iter().map(|bx| BoxCoord::new(bx.b, bx.a)).collect(),
        }
    }

    /// Text format: rows of labels bottom-up, e.g. "[[1,2],[3]]".
    pub fn parse(s: &str) -> Result<StandardTableau> {
        let s = s.trim();
        let inner = s
            .strip_prefix("[[")
            .and_then(|x| x.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("bad tableau {s}")))?;
        let mut boxes_by_label: Vec<(usize, BoxCoord)> = Vec::new();
        for (b, row) in inner.split("],[").enumerate() {
            for (a, lab) in row.split(',').enumerate() {
                let label: usize =
                    lab.trim().parse().map_err(|e| Error::Parse(format!("bad label: {e}")))?;
                boxes_by_label.push((label, BoxCoord::new(a, b)));
            }
        }
        boxes_by_label.sort();
        let n = boxes_by_label.len();
        if boxes_by_label.iter().map(|(l, _)| *l).ne(1..=n) {
            return Err(Error::Parse(format!("labels are not 1..{n}: {s}")));
        }
        StandardTableau::from_boxes(boxes_by_label.into_iter().map(|(_, b)| b).collect())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.shape();
        let mut rows: Vec<Vec<usize>> = (0..shape.num_rows()).map(|b| vec![0; shape.row(b)]).collect();
        for (i, bx) in self.boxes.iter().enumerate() {
            rows[bx.b][bx.a] = i + 1;
        }
        write!(f, "[")?;
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, l) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard Young tableaux of the given shape, sorted lexicographically
/// on the sequence (box of 1, box of 2, ...).
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &Partition, cur: &mut Vec<BoxCoord>, filled: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
        if cur.len() == shape.size() {
            out.push(StandardTableau { boxes: cur.clone() });
            return;
        }
        for b in 0..shape.num_rows() {
            let a = filled[b];
            if a < shape.row(b) && (b == 0 || filled[b - 1] > a) {
                cur.push(BoxCoord::new(a, b));
                filled[b] += 1;
                rec(shape, cur, filled, out);
                filled[b] -= 1;
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut Vec::new(), &mut vec![0; shape.num_rows()], &mut out);
    out.sort();
    out
}

/// n! / prod hooks, as an exact integer.
pub fn hook_length_count(shape: &Partition) -> u64 {
    let n = shape.size() as u64;
    let mut numer: u64 = 1;
    for k in 1..=n {
        numer *= k;
    }
    let denom: u64 = shape.hooks().iter().map(|&h| h as u64).product();
    numer / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[2, 2])).len(), 2);
        // hook length formula: 5!/(4*3*2*1*1) = 5
        assert_eq!(enumerate_syt(&p(&[3, 2])).len(), 5);
        assert_eq!(hook_length_count(&p(&[3, 2])), 5);
    }

    #[test]
    fn hooks_and_contents() {
        let mut h = p(&[2, 1]).hooks();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        let mut c = p(&[2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
        // single row: hooks n, n-1, ..., 1
        let mut h = p(&[4]).hooks();
        h.sort();
        assert_eq!(h, vec![1, 2, 3, 4]);
        assert_eq!(p(&[2, 2]).hooks().iter().sum::<usize>(), 3 + 2 + 2 + 1);
        // row (2) has contents {0, 1}; column (1,1) has {0, -1}
        let mut c = p(&[2]).contents();
        c.sort();
        assert_eq!(c, vec![0, 1]);
        let mut c = p(&[1, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0]);
    }

    #[test]
    fn corner_examples() {
        let (add, rem) = p(&[1]).corners();
        assert_eq!(add, vec![BoxCoord::new(1, 0), BoxCoord::new(0, 1)]);
        assert_eq!(rem, vec![BoxCoord::new(0, 0)]);
        let (add, rem) = p(&[2, 1]).corners();
        assert_eq!(add, vec![BoxCoord::new(2, 0), BoxCoord::new(1, 1), BoxCoord::new(0, 2)]);
        assert_eq!(rem, vec![BoxCoord::new(1, 0), BoxCoord::new(0, 1)]);
        let (add, rem) = Partition::empty().corners();
        assert_eq!(add, vec![BoxCoord::new(0, 0)]);
        assert!(rem.is_empty());
    }

    #[test]
    fn counts_match_hook_formula_to_8() {
        for n in 1..=8 {
            for shape in Partition::all(n) {
                assert_eq!(
                    enumerate_syt(&shape).len() as u64,
                    hook_length_count(&shape),
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn branching_bijection() {
        for n in 1..=6 {
            for shape in Partition::all(n) {
                for t in enumerate_syt(&shape) {
                    let (addable, _) = shape.corners();
                    let extensions: Vec<StandardTableau> =
                        addable.iter().map(|&bx| t.extend(bx)).collect();
                    for e in &extensions {
                        assert!(e.is_valid());
                    }
                    // extensions of t are exactly the SYT of size n+1 restricting to t
                    let mut count = 0;
                    for bigger in Partition::all(n + 1) {
                        for s in enumerate_syt(&bigger) {
                            if s.restrict(n) == t {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(count, extensions.len());
                }
            }
        }
    }

    #[test]
    fn box_weights_distinct() {
        for n in 1..=7 {
            for shape in Partition::all(n) {
                let ws: Vec<Mono> = shape.boxes().iter().map(|b| b.weight()).collect();
                for i in 0..ws.len() {
                    for j in 0..i {
                        assert_ne!(ws[i], ws[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let t = StandardTableau::parse("[[1,2],[3]]").unwrap();
        assert_eq!(t.to_string(), "[[1,2],[3]]");
        assert_eq!(t.shape(), p(&[2, 1]));
        assert_eq!(t.box_of(2), BoxCoord::new(1, 0));
        assert_eq!(t.box_of(3), BoxCoord::new(0, 1));
        let t2 = StandardTableau::parse("[[1,3],[2]]").unwrap();
        assert_eq!(t2.box_of(2), BoxCoord::new(0, 1));
        assert!(StandardTableau::parse("[[1,3],[4]]").is_err());
        assert_eq!(Partition::parse("(2,1)").unwrap(), p(&[2, 1]));
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
    }

    #[test]
    fn transpose_flips_contents() {
        let sh = p(&[3, 1]);
        let tr = sh.transpose();
        assert_eq!(tr, p(&[2, 1, 1]));
        let mut c1 = sh.contents();
        let mut c2: Vec<i64> = tr.contents().iter().map(|c| -c).collect();
        c1.sort();
        c2.sort();
        assert_eq!(c1, c2);
        let mut h1 = sh.hooks();
        let mut h2 = tr.hooks();
        h1.sort();
        h2.sort();
        assert_eq!(h1, h2);
    }
}

use std::collections::BTreeMap;

use super::composition::Composition;
use super::partition::Partition;
use super::word::Word;
use crate::error::{Error, Result};

/// λ/μ in French convention; boxes are (row from bottom, column from left), both 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} is not inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// The ribbon whose row lengths, top to bottom, are the parts of `i`.
    pub fn ribbon(i: &Composition) -> Self {
        let l = i.len();
        let mut outer = vec![0; l];
        let mut inner = vec![0; l];
        let mut end = 0;
        for (k, &p) in i.parts().iter().enumerate() {
            let start = if k == 0 { 1 } else { end };
            end = start + p - 1;
            // row r from the bottom holds part i_{l+1-r}
            let r = l - 1 - k;
            outer[r] = end;
            inner[r] = start - 1;
        }
        SkewShape {
            outer: Partition::new(outer).expect("ribbon rows are weakly decreasing"),
            inner: Partition::new(inner).expect("ribbon rows are weakly decreasing"),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Boxes sorted by row then column.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                out.push((r + 1, c));
            }
        }
        out
    }

    pub fn contains_box(&self, (r, c): (usize, usize)) -> bool {
        r >= 1 && c > self.inner.part(r - 1) && c <= self.outer.part(r - 1)
    }

    pub fn is_connected(&self) -> bool {
        let boxes = self.boxes();
        if boxes.is_empty() {
            return true;
        }
        let mut seen = vec![boxes[0]];
        let mut stack = vec![boxes[0]];
        while let Some((r, c)) = stack.pop() {
            for nb in [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))] {
                if self.contains_box(nb) && !seen.contains(&nb) {
                    seen.push(nb);
                    stack.push(nb);
                }
            }
        }
        seen.len() == boxes.len()
    }

    pub fn is_ribbon(&self) -> bool {
        let has_square = self.boxes().iter().any(|&(r, c)| {
            self.contains_box((r + 1, c))
                && self.contains_box((r, c + 1))
                && self.contains_box((r + 1, c + 1))
        });
        !has_square && self.is_connected()
    }

    /// Boxes in reading order: rows bottom to top, each right to left.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in (self.inner.part(r) + 1..=self.outer.part(r)).rev() {
                out.push((r + 1, c));
            }
        }
        out
    }
}

/// A filling of a skew shape with positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), u8>,
}

impl Tableau {
    pub fn new(shape: SkewShape, entries: BTreeMap<(usize, usize), u8>) -> Result<Self> {
        let boxes = shape.boxes();
        if boxes.len() != entries.len() || boxes.iter().any(|b| !entries.contains_key(b)) {
            return Err(Error::InvalidArgument("entries do not match the shape".into()));
        }
        if entries.values().any(|&v| v == 0) {
            return Err(Error::InvalidArgument("entries must be positive".into()));
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u8> {
        &self.entries
    }

    /// Rows weakly increase to the right, columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&(r, c), &v)| {
            let right_ok = self.entries.get(&(r, c + 1)).map_or(true, |&w| v <= w);
            let up_ok = self.entries.get(&(r + 1, c)).map_or(true, |&w| v < w);
            right_ok && up_ok
        })
    }

    /// Multiplicities of 1, 2, ... up to the largest entry.
    pub fn content(&self) -> Vec<usize> {
        let max = self.entries.values().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0; max];
        for &v in self.entries.values() {
            out[v as usize - 1] += 1;
        }
        out
    }

    pub fn reading_word(&self) -> Word {
        Word::from_letters(
            self.shape
                .reading_order()
                .into_iter()
                .map(|b| self.entries[&b])
                .collect(),
        )
    }

    /// Fills the ribbon sh(w) along the reading order.
    pub fn from_reading_word(w: &Word) -> Result<Tableau> {
        let shape = w.shape()?;
        let entries = shape
            .reading_order()
            .into_iter()
            .zip(w.letters().iter().copied())
            .collect();
        Tableau::new(shape, entries)
    }
}

/// Every semistandard filling of `shape` with the given content, by brute force.
pub fn semistandard_tableaux(shape: &SkewShape, content: &[usize]) -> Vec<Tableau> {
    let boxes = shape.boxes();
    let mut out = Vec::new();
    if boxes.len() != content.iter().sum::<usize>() {
        return out;
    }
    let mut remaining = content.to_vec();
    let mut entries = BTreeMap::new();
    fill(shape, &boxes, 0, &mut remaining, &mut entries, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    boxes: &[(usize, usize)],
    idx: usize,
    remaining: &mut [usize],
    entries: &mut BTreeMap<(usize, usize), u8>,
    out: &mut Vec<Tableau>,
) {
    if idx == boxes.len() {
        out.push(Tableau {
            shape: shape.clone(),
            entries: entries.clone(),
        });
        return;
    }
    // boxes are sorted by row then column, so the left and lower neighbours are filled
    let (r, c) = boxes[idx];
    for v in 1..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        let letter = v as u8;
        if entries.get(&(r, c - 1)).is_some_and(|&w| w > letter) {
            continue;
        }
        if r > 1 && entries.get(&(r - 1, c)).is_some_and(|&w| w >= letter) {
            continue;
        }
        remaining[v - 1] -= 1;
        entries.insert((r, c), letter);
        fill(shape, boxes, idx + 1, remaining, entries, out);
        entries.remove(&(r, c));
        remaining[v - 1] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::composition::{enumerate_compositions, Family};

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ribbon_shapes() {
        assert_eq!(SkewShape::ribbon(&c(&[1, 2])), SkewShape::straight(p(&[2, 1])));
        assert_eq!(
            SkewShape::ribbon(&c(&[2, 1])),
            SkewShape::new(p(&[2, 2]), p(&[1])).unwrap()
        );
        for n in 1..=7 {
            for i in enumerate_compositions(n, Family::All) {
                let s = SkewShape::ribbon(&i);
                assert_eq!(s.size(), n);
                assert!(s.is_ribbon(), "{i}");
            }
        }
        assert!(!SkewShape::straight(p(&[2, 2])).is_ribbon());
    }

    #[test]
    fn semistandard_checks() {
        let t = semistandard_tableaux(&SkewShape::straight(p(&[2, 1])), &[1, 1, 1]);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(Tableau::is_semistandard));
        assert!(semistandard_tableaux(&SkewShape::straight(p(&[1, 1])), &[2]).is_empty());
    }
}

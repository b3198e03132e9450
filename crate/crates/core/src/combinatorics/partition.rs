use std::fmt;

use super::composition::{parse_int_list, Composition};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects increasing entries.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_sorted_vec(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn contains_part(&self, k: usize) -> bool {
        self.0.contains(&k)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let mut out = Vec::with_capacity(w);
        for c in 1..=w {
            out.push(self.0.iter().take_while(|&&p| p >= c).count());
        }
        Partition(out)
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// True iff every prefix sum of `self` is at most the matching prefix sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::ModulusMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Union of parts as multisets.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    pub fn to_composition(&self) -> Composition {
        Composition::from_vec(self.0.clone())
    }
}

impl Composition {
    /// The partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts().to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts, lexicographically descending.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        cur.push(p);
        rec(rem - p, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=12 {
            for l in partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), n);
            }
        }
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1]).dominated_by(&p(&[3])).unwrap());
        assert!(!p(&[3]).dominated_by(&p(&[1, 1, 1])).unwrap());
        assert!(p(&[2, 2]).dominated_by(&p(&[3, 1])).unwrap());
        assert!(p(&[2]).dominated_by(&p(&[1])).is_err());
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for n in 1..=8 {
            let ps = partitions(n);
            for a in &ps {
                for b in &ps {
                    assert_eq!(
                        a.dominated_by(b).unwrap(),
                        b.conjugate().dominated_by(&a.conjugate()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }
}

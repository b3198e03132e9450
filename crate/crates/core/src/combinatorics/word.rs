use std::fmt;

use super::composition::Composition;
use super::shape::SkewShape;
use crate::error::{Error, Result};

/// A word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters(letters: Vec<u8>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximal strictly increasing factors.
    pub fn runs(&self) -> Vec<&[u8]> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.0.len() {
            if i == self.0.len() || self.0[i] <= self.0[i - 1] {
                if i > start {
                    out.push(&self.0[start..i]);
                }
                start = i;
            }
        }
        out
    }

    pub fn run_type(&self) -> Composition {
        Composition::from_vec(self.runs().iter().map(|r| r.len()).collect())
    }

    pub fn run_count(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        1 + self.0.windows(2).filter(|w| w[1] <= w[0]).count()
    }

    /// sh(w), the ribbon of the conjugate run type.
    pub fn shape(&self) -> Result<SkewShape> {
        if self.0.is_empty() {
            return Err(Error::InvalidArgument("empty word has no run factorization".into()));
        }
        Ok(SkewShape::ribbon(&self.run_type().conjugate()))
    }

    pub fn run_factorization(&self) -> Result<(Vec<Word>, Composition, SkewShape)> {
        let shape = self.shape()?;
        let runs = self.runs().into_iter().map(|r| Word(r.to_vec())).collect();
        Ok((runs, self.run_type(), shape))
    }

    /// Multiplicities of 1, 2, ..., up to the largest letter.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0; max];
        for &v in &self.0 {
            out[v as usize - 1] += 1;
        }
        out
    }

    /// Every prefix has weakly decreasing letter multiplicities.
    pub fn is_yamanouchi(&self) -> bool {
        let mut counts = vec![0usize; 256];
        for &v in &self.0 {
            let v = v as usize;
            counts[v] += 1;
            if v > 1 && counts[v] > counts[v - 1] {
                return false;
            }
        }
        true
    }

    pub fn starts_with(&self, prefix: &[u8]) -> bool {
        self.0.starts_with(prefix)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::Partition;
    use crate::combinatorics::shape::Tableau;

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    #[test]
    fn runs_and_types() {
        let x = w("121213");
        assert_eq!(x.runs(), vec![&[1, 2][..], &[1, 2], &[1, 3]]);
        assert_eq!(x.run_type(), Composition::new(vec![2, 2, 2]).unwrap());
        assert_eq!(w("12123").run_type(), Composition::new(vec![2, 3]).unwrap());
        assert_eq!(w("12123").run_count(), 2);
        assert!(Word::default().shape().is_err());
    }

    #[test]
    fn shapes_of_small_words() {
        let straight = SkewShape::straight(Partition::new(vec![2, 1]).unwrap());
        assert_eq!(w("12").shape().unwrap().outer(), &Partition::new(vec![1, 1]).unwrap());
        // sh(12) is a column, and the ribbon 12 is the straight shape 21
        assert_eq!(SkewShape::ribbon(&Composition::new(vec![1, 2]).unwrap()), straight);
        let sk = SkewShape::ribbon(&Composition::new(vec![2, 1]).unwrap());
        assert_eq!(sk.outer(), &Partition::new(vec![2, 2]).unwrap());
        assert_eq!(sk.inner(), &Partition::new(vec![1]).unwrap());
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(w("121213").is_yamanouchi());
        assert!(!w("122").is_yamanouchi());
        assert!(w("1").is_yamanouchi());
        assert!(!w("2").is_yamanouchi());
    }

    fn all_words(len: usize, alphabet: u8) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u8>| {
                    (1..=alphabet).map(move |a| {
                        let mut u = v.clone();
                        u.push(a);
                        u
                    })
                })
                .collect();
        }
        out.into_iter().map(Word).collect()
    }

    #[test]
    fn encode_decode_round_trip() {
        for len in 1..=7 {
            for x in all_words(len, 4) {
                let t = Tableau::from_reading_word(&x).unwrap();
                assert!(t.is_semistandard(), "{x}");
                assert_eq!(t.reading_word(), x);
            }
        }
    }

    #[test]
    fn yamanouchi_contents_are_partitions() {
        for x in all_words(6, 4) {
            if x.is_yamanouchi() {
                let c = x.content();
                assert!(c.windows(2).all(|p| p[0] >= p[1]), "{x}");
            }
        }
    }
}

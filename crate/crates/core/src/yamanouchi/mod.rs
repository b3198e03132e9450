//! Yamanouchi-word multisets and the Schur-coefficient machinery for E_{n,k}.

mod lemma41;
mod maps;
mod spider;
mod xy;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::combinatorics::{Composition, Partition, Word};
use crate::error::{Error, Result};
use crate::rational::{q_pow2, Q};

pub use lemma41::{
    classify_ribbon, lemma41_reading_values, ribbon_class_coefficient, schur_coeff_e,
    verify_lemma41, Lemma41Class, Lemma41Reading, Lemma41Report, Lemma41Row,
};
pub use maps::{
    iota_lemma42, lemma45_bullet1, lemma45_bullet2, lemma45_bullet3, verify_lemma42,
    verify_lemma45, MapCheck, MapVerification,
};
pub use spider::{m_norms_by_first_run, verify_spider_schur, SpiderReport};
pub use xy::{
    build_xy, build_xy_at, build_xy_with, verify_prop10, XyFixture, XyRecord, FixtureMismatch,
    Prop10Report, Prop10Row, XReading, XyData, XySplit,
};

/// A finite multiset of words with nonnegative rational multiplicities.
/// Entries with multiplicity zero are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordMultiset {
    entries: BTreeMap<Word, Q>,
}

impl WordMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from words and a multiplicity function.
    pub fn from_words<I, F>(words: I, mult: F) -> Self
    where
        I: IntoIterator<Item = Word>,
        F: Fn(&Word) -> Q,
    {
        let mut out = Self::new();
        for w in words {
            let m = mult(&w);
            out.insert(w, m).expect("multiplicity function must be nonnegative");
        }
        out
    }

    /// Adds `m` to the multiplicity of `w`.
    pub fn insert(&mut self, w: Word, m: Q) -> Result<()> {
        if m.is_negative() {
            return Err(Error::InvalidArgument(format!("negative multiplicity for {w}")));
        }
        if m.is_zero() {
            return Ok(());
        }
        *self.entries.entry(w).or_insert_with(Q::zero) += m;
        Ok(())
    }

    pub fn multiplicity(&self, w: &Word) -> Q {
        self.entries.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.entries.contains_key(w)
    }

    pub fn norm(&self) -> Q {
        self.entries.values().fold(Q::zero(), |acc, m| acc + m)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.entries.keys()
    }

    /// A ⊔ B: multiplicities add.
    pub fn union(&self, other: &WordMultiset) -> WordMultiset {
        let mut out = self.clone();
        for (w, m) in &other.entries {
            *out.entries.entry(w.clone()).or_insert_with(Q::zero) += m;
        }
        out
    }

    /// A ∖ B with multiplicities max(m_A − m_B, 0), on the support of A.
    pub fn difference(&self, other: &WordMultiset) -> WordMultiset {
        let mut out = WordMultiset::new();
        for (w, m) in &self.entries {
            let d = m - other.multiplicity(w);
            if d.is_positive() {
                out.entries.insert(w.clone(), d);
            }
        }
        out
    }

    /// Pointwise minimum of multiplicities.
    pub fn intersection(&self, other: &WordMultiset) -> WordMultiset {
        let mut out = WordMultiset::new();
        for (w, m) in &self.entries {
            let o = other.multiplicity(w);
            let v = if &o < m { o } else { m.clone() };
            if v.is_positive() {
                out.entries.insert(w.clone(), v);
            }
        }
        out
    }

    pub fn scale(&self, r: &Q) -> Result<WordMultiset> {
        if r.is_negative() {
            return Err(Error::InvalidArgument("negative scale factor".into()));
        }
        let mut out = WordMultiset::new();
        if r.is_zero() {
            return Ok(out);
        }
        for (w, m) in &self.entries {
            out.entries.insert(w.clone(), m * r);
        }
        Ok(out)
    }

    pub fn filter<F: Fn(&Word) -> bool>(&self, keep: F) -> WordMultiset {
        WordMultiset {
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, m)| (w.clone(), m.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for WordMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}:{}", crate::rational::fmt_q(m))?;
        }
        write!(f, "}}")
    }
}

/// A map sending each word of its domain to a multiset of words.
#[derive(Clone, Debug, Default)]
pub struct MultiMap {
    assignment: BTreeMap<Word, WordMultiset>,
}

impl MultiMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, w: Word, image: WordMultiset) {
        self.assignment.insert(w, image);
    }

    pub fn get(&self, w: &Word) -> Option<&WordMultiset> {
        self.assignment.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &WordMultiset)> {
        self.assignment.iter()
    }

    /// f(A) = ⊔_{a} m_A(a)·f(a). Every word of A must be in the domain.
    pub fn image(&self, a: &WordMultiset) -> Result<WordMultiset> {
        let mut out = WordMultiset::new();
        for (w, m) in a.iter() {
            let img = self
                .assignment
                .get(w)
                .ok_or_else(|| Error::InvalidArgument(format!("{w} is not in the domain")))?;
            for (z, k) in img.iter() {
                out.insert(z.clone(), m * k)?;
            }
        }
        Ok(out)
    }

    /// Words z where the image multiplicity exceeds the target's, with both values.
    pub fn injection_defects(
        &self,
        a: &WordMultiset,
        b: &WordMultiset,
    ) -> Result<Vec<(Word, Q, Q)>> {
        let img = self.image(a)?;
        Ok(img
            .iter()
            .filter_map(|(z, m)| {
                let t = b.multiplicity(z);
                (m > &t).then(|| (z.clone(), m.clone(), t))
            })
            .collect())
    }

    pub fn is_multi_injection(&self, a: &WordMultiset, b: &WordMultiset) -> Result<bool> {
        Ok(self.injection_defects(a, b)?.is_empty())
    }
}

/// Words of 𝒴(κ): Yamanouchi of content κ, every non-last run of length ≥ 2,
/// optionally with run type starting with `prefix_runtype` and the word
/// starting with `prefix_word`. Lexicographic order.
pub fn enumerate_y(
    kappa: &Partition,
    prefix_runtype: Option<&Composition>,
    prefix_word: Option<&Word>,
) -> Result<Vec<Word>> {
    let n = kappa.size();
    if let Some(a) = prefix_runtype {
        if a.modulus() > n {
            return Ok(Vec::new());
        }
    }
    if let Some(p) = prefix_word {
        if p.len() > n {
            return Ok(Vec::new());
        }
    }
    if kappa.len() > u8::MAX as usize - 1 {
        return Err(Error::InvalidArgument("too many rows".into()));
    }
    let mut search = Search {
        kappa: kappa.parts(),
        n,
        runtype: prefix_runtype.map(|a| a.parts()).unwrap_or(&[]),
        prefix: prefix_word.map(|w| w.letters()).unwrap_or(&[]),
        word: Vec::with_capacity(n),
        counts: vec![0; kappa.len() + 1],
        out: Vec::new(),
    };
    search.go(0, 0);
    Ok(search.out)
}

struct Search<'a> {
    kappa: &'a [usize],
    n: usize,
    runtype: &'a [usize],
    prefix: &'a [u8],
    word: Vec<u8>,
    counts: Vec<usize>,
    out: Vec<Word>,
}

impl Search<'_> {
    /// `run` is the 0-based index of the current run, `len` its length so far.
    fn go(&mut self, run: usize, len: usize) {
        let pos = self.word.len();
        if pos == self.n {
            let ok = match self.runtype.len() {
                0 => true,
                r => run + 1 > r || (run + 1 == r && len == self.runtype[run]),
            };
            if ok {
                self.out.push(Word::from_letters(self.word.clone()));
            }
            return;
        }
        let forced = self.prefix.get(pos).copied();
        for v in 1..=self.kappa.len() as u8 {
            if forced.is_some_and(|f| f != v) {
                continue;
            }
            let vi = v as usize;
            if self.counts[vi] >= self.kappa[vi - 1] {
                continue;
            }
            if vi > 1 && self.counts[vi] >= self.counts[vi - 1] {
                continue;
            }
            let new_run = pos > 0 && v <= self.word[pos - 1];
            let (nrun, nlen) = if pos == 0 {
                (0, 1)
            } else if new_run {
                if len < 2 {
                    continue;
                }
                if run < self.runtype.len() && len != self.runtype[run] {
                    continue;
                }
                (run + 1, 1)
            } else {
                if run < self.runtype.len() && len >= self.runtype[run] {
                    continue;
                }
                (run, len + 1)
            };
            self.counts[vi] += 1;
            self.word.push(v);
            self.go(nrun, nlen);
            self.word.pop();
            self.counts[vi] -= 1;
        }
    }
}

/// m(y) = 2^{n+2−2ℓ(τ_y)}.
pub fn weight_m(y: &Word) -> Result<Q> {
    if y.is_empty() {
        return Err(Error::InvalidArgument("empty word".into()));
    }
    Ok(q_pow2(y.len() as i64 + 2 - 2 * y.run_count() as i64))
}

/// 2^{m_1(sh(y))}, the other reading of m(y).
pub fn weight_m_shape(y: &Word) -> Result<Q> {
    if y.is_empty() {
        return Err(Error::InvalidArgument("empty word".into()));
    }
    Ok(q_pow2(y.run_type().conjugate().multiplicity(1) as i64))
}

/// The multiset (words, m/2).
pub fn half_m_multiset(words: Vec<Word>) -> WordMultiset {
    WordMultiset::from_words(words, |w| weight_m(w).unwrap() / Q::from_integer(2.into()))
}

/// M_α(κ) = (𝒴_α(κ), m/2).
pub fn m_alpha(kappa: &Partition, alpha: &Composition) -> Result<WordMultiset> {
    Ok(half_m_multiset(enumerate_y(kappa, Some(alpha), None)?))
}

/// M(κ;β) = (𝒴(κ;β), m/2).
pub fn m_prefix(kappa: &Partition, beta: &Word) -> Result<WordMultiset> {
    Ok(half_m_multiset(enumerate_y(kappa, None, Some(beta))?))
}

/// M_α(κ;β).
pub fn m_alpha_prefix(kappa: &Partition, alpha: &Composition, beta: &Word) -> Result<WordMultiset> {
    Ok(half_m_multiset(enumerate_y(kappa, Some(alpha), Some(beta))?))
}

/// Runs of a word as owned vectors.
pub(crate) fn runs_vec(y: &Word) -> Vec<Vec<u8>> {
    y.runs().into_iter().map(|r| r.to_vec()).collect()
}

/// Removes `v` from run `from` and inserts it in increasing position into run `to`.
pub(crate) fn move_letter(y: &Word, v: u8, from: usize, to: usize) -> Option<Word> {
    let mut runs = runs_vec(y);
    if from >= runs.len() || to >= runs.len() {
        return None;
    }
    let at = runs[from].iter().position(|&x| x == v)?;
    runs[from].remove(at);
    let dst = &mut runs[to];
    if dst.contains(&v) {
        return None;
    }
    let ins = dst.iter().position(|&x| x > v).unwrap_or(dst.len());
    dst.insert(ins, v);
    Some(Word::from_letters(runs.concat()))
}

/// 1..=a as letters.
pub(crate) fn interval(a: usize, b: usize) -> Vec<u8> {
    (a..=b).map(|v| v as u8).collect()
}

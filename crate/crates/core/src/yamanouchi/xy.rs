//! The multisets X(κ), Y(κ), their splits at a pair of positions, and the
//! exhaustive check over contents of size 10.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Deserialize;

use super::{m_alpha, m_prefix, WordMultiset};
use crate::combinatorics::{parse_compact_word, partitions, Composition, Partition, Word};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, q_frac, Q};

/// The four multisets for one letter t.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XySplit {
    pub x_lt: WordMultiset,
    pub x_ge: WordMultiset,
    pub y_lt: WordMultiset,
    pub y_ge: WordMultiset,
}

#[derive(Clone, Debug)]
pub struct XyData {
    pub kappa: Partition,
    /// 1-based position of t; the comparison letter sits at `pos - 1`.
    pub pos: usize,
    pub x: WordMultiset,
    pub y: WordMultiset,
    pub splits: BTreeMap<u8, XySplit>,
}

impl XyData {
    /// The split at t, all four multisets empty when t never occurs at `pos`.
    pub fn split(&self, t: u8) -> XySplit {
        self.splits.get(&t).cloned().unwrap_or_default()
    }
}

fn word(letters: &[u8]) -> Word {
    Word::new(letters.to_vec()).expect("positive letters")
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

/// Which multiset plays the role of X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XReading {
    /// 3/2 (M_23 ∖ M(κ;[2][3]3)).
    Stated,
    /// 3/2 M_23 with nothing removed; the fixture table enumerates this one.
    Full,
}

/// X(κ), Y(κ) split by y_9 vs y_10 = t. Requires |κ| ≥ 10.
pub fn build_xy(kappa: &Partition) -> Result<XyData> {
    if kappa.size() < 10 {
        return Err(Error::InvalidArgument(format!(
            "X/Y splits need |κ| >= 10, got {}",
            kappa.size()
        )));
    }
    build_xy_at(kappa, 10)
}

/// X(κ), Y(κ) split by y_{pos−1} vs y_pos = t, for any 2 ≤ pos ≤ |κ|.
pub fn build_xy_at(kappa: &Partition, pos: usize) -> Result<XyData> {
    build_xy_with(kappa, pos, XReading::Stated)
}

pub fn build_xy_with(kappa: &Partition, pos: usize, reading: XReading) -> Result<XyData> {
    if pos < 2 || pos > kappa.size() {
        return Err(Error::InvalidArgument(format!(
            "split position {pos} out of range for |κ| = {}",
            kappa.size()
        )));
    }
    let m23 = m_alpha(kappa, &comp(&[2, 3]))?;
    let x = match reading {
        XReading::Stated => m23.difference(&m_prefix(kappa, &word(&[1, 2, 1, 2, 3, 3]))?),
        XReading::Full => m23,
    }
    .scale(&q_frac(3, 2))?;
    let m24 = m_alpha(kappa, &comp(&[2, 4]))?;
    let m3331 = m_prefix(kappa, &word(&[1, 2, 3, 1, 2, 3, 1]))?;
    let m22 = m_alpha(kappa, &comp(&[2, 2]))?;
    let y = m24.scale(&q(2))?.union(&m3331).union(&m22);
    let mut splits: BTreeMap<u8, XySplit> = BTreeMap::new();
    for (which, ms) in [(0, &x), (1, &y)] {
        for (w, m) in ms.iter() {
            let l = w.letters();
            let t = l[pos - 1];
            let lt = l[pos - 2] < t;
            let s = splits.entry(t).or_default();
            let dst = match (which, lt) {
                (0, true) => &mut s.x_lt,
                (0, false) => &mut s.x_ge,
                (_, true) => &mut s.y_lt,
                (_, false) => &mut s.y_ge,
            };
            dst.insert(w.clone(), m.clone())?;
        }
    }
    Ok(XyData {
        kappa: kappa.clone(),
        pos,
        x,
        y,
        splits,
    })
}

/// One fixture record: exact X-norms, lower bounds on Y-norms, and the listed words.
#[derive(Clone, Debug, Deserialize)]
pub struct XyRecord {
    pub mu: Vec<usize>,
    pub t: u8,
    #[serde(rename = "X_lt")]
    pub x_lt: String,
    #[serde(rename = "X_ge")]
    pub x_ge: String,
    #[serde(rename = "Y_lt_min")]
    pub y_lt_min: String,
    #[serde(rename = "Y_ge_min")]
    pub y_ge_min: String,
    #[serde(rename = "X_lt_words", default)]
    pub x_lt_words: Vec<String>,
    #[serde(rename = "X_ge_words", default)]
    pub x_ge_words: Vec<String>,
    #[serde(rename = "Y_lt_words", default)]
    pub y_lt_words: Vec<String>,
    #[serde(rename = "Y_ge_words", default)]
    pub y_ge_words: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct XyFixture {
    #[serde(default)]
    pub aliases: BTreeMap<String, String>,
    pub records: Vec<XyRecord>,
}

const BUNDLED_FIXTURE: &str = include_str!("../../fixtures/xy_table.json");

impl XyFixture {
    pub fn bundled() -> Self {
        Self::from_json(BUNDLED_FIXTURE).expect("bundled fixture parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Parses a compact word after substituting the aliases.
    pub fn expand_word(&self, text: &str) -> Result<Word> {
        let mut s = text.to_string();
        for (k, v) in &self.aliases {
            s = s.replace(k.as_str(), v);
        }
        parse_compact_word(&s).map_err(|e| Error::Fixture(format!("word {text:?}: {e}")))
    }
}

/// A disagreement between a fixture record and the computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureMismatch {
    pub mu: Partition,
    pub t: u8,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct Prop10Row {
    pub reading: XReading,
    pub mu: Partition,
    pub t: u8,
    pub x_lt: Q,
    pub x_ge: Q,
    pub y_lt: Q,
    pub y_ge: Q,
}

impl Prop10Row {
    pub fn holds(&self) -> bool {
        self.x_lt <= self.y_lt && self.x_ge <= self.y_ge
    }
}

#[derive(Clone, Debug)]
pub struct Prop10Report {
    /// One row per reading, μ and t.
    pub rows: Vec<Prop10Row>,
    /// Contents μ ⊢ 10 with X(μ) nonempty, per reading.
    pub nonempty_contents: BTreeMap<XReading, Vec<Partition>>,
    pub failures: Vec<Prop10Row>,
    pub fixture_records: usize,
    pub fixture_mismatches: Vec<FixtureMismatch>,
}

impl Prop10Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.fixture_mismatches.is_empty()
    }
}

fn norms_of(s: &XySplit) -> (Q, Q, Q, Q) {
    (s.x_lt.norm(), s.x_ge.norm(), s.y_lt.norm(), s.y_ge.norm())
}

/// Both inequalities for every μ ⊢ 10, every t at position 10 and both
/// readings of X; the fixture is compared with the full reading.
pub fn verify_prop10(fixture: Option<&XyFixture>) -> Result<Prop10Report> {
    let mut rows = Vec::new();
    let mut nonempty = BTreeMap::new();
    let build = |reading| {
        partitions(10)
            .into_par_iter()
            .map(|mu| build_xy_with(&mu, 10, reading))
            .collect::<Result<Vec<_>>>()
    };
    let stated = build(XReading::Stated)?;
    let data = build(XReading::Full)?;
    for (reading, data) in [(XReading::Stated, &stated), (XReading::Full, &data)] {
        let mut contents = Vec::new();
        for d in data {
            if !d.x.is_empty() {
                contents.push(d.kappa.clone());
            }
            for (&t, s) in &d.splits {
                let (x_lt, x_ge, y_lt, y_ge) = norms_of(s);
                rows.push(Prop10Row {
                    reading,
                    mu: d.kappa.clone(),
                    t,
                    x_lt,
                    x_ge,
                    y_lt,
                    y_ge,
                });
            }
        }
        nonempty.insert(reading, contents);
    }
    let failures = rows.iter().filter(|r| !r.holds()).cloned().collect();
    let mut mismatches = Vec::new();
    let mut records = 0;
    if let Some(fx) = fixture {
        records = fx.records.len();
        let by_mu: BTreeMap<&Partition, &XyData> = data.iter().map(|d| (&d.kappa, d)).collect();
        let mut listed: BTreeMap<Partition, BTreeSet<u8>> = BTreeMap::new();
        for rec in &fx.records {
            let mu = Partition::new(rec.mu.clone())
                .map_err(|e| Error::Fixture(format!("record mu {:?}: {e}", rec.mu)))?;
            listed.entry(mu.clone()).or_default().insert(rec.t);
            let d = by_mu
                .get(&mu)
                .ok_or_else(|| Error::Fixture(format!("mu {mu} is not a partition of 10")))?;
            for message in check_record(fx, rec, d)? {
                mismatches.push(FixtureMismatch {
                    mu: mu.clone(),
                    t: rec.t,
                    message,
                });
            }
        }
        // T(μ): letters at position 10 over X(μ).
        for d in &data {
            let t_set: BTreeSet<u8> = d.x.support().map(|w| w.letters()[9]).collect();
            let fx_set = listed.get(&d.kappa).cloned().unwrap_or_default();
            if t_set != fx_set {
                mismatches.push(FixtureMismatch {
                    mu: d.kappa.clone(),
                    t: 0,
                    message: format!("letters at position 10 are {t_set:?}, fixture lists {fx_set:?}"),
                });
            }
        }
    }
    Ok(Prop10Report {
        rows,
        nonempty_contents: nonempty,
        failures,
        fixture_records: records,
        fixture_mismatches: mismatches,
    })
}

fn check_record(fx: &XyFixture, rec: &XyRecord, d: &XyData) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let s = d.split(rec.t);
    let exact = [("X_<", &rec.x_lt, &s.x_lt), ("X_>=", &rec.x_ge, &s.x_ge)];
    for (name, want, got) in exact {
        let want = parse_q(want)?;
        if got.norm() != want {
            out.push(format!("‖{name}‖ = {}, fixture says {}", fmt_q(&got.norm()), fmt_q(&want)));
        }
    }
    let bounds = [("Y_<", &rec.y_lt_min, &s.y_lt), ("Y_>=", &rec.y_ge_min, &s.y_ge)];
    for (name, want, got) in bounds {
        let want = parse_q(want)?;
        if got.norm() < want {
            out.push(format!("‖{name}‖ = {} is below the bound {}", fmt_q(&got.norm()), fmt_q(&want)));
        }
    }
    let x_lists = [("X_<", &rec.x_lt_words, &s.x_lt), ("X_>=", &rec.x_ge_words, &s.x_ge)];
    for (name, words, got) in x_lists {
        let listed = words
            .iter()
            .map(|w| fx.expand_word(w))
            .collect::<Result<BTreeSet<_>>>()?;
        let actual: BTreeSet<Word> = got.support().cloned().collect();
        if listed != actual {
            out.push(format!("{name} words differ: computed {}", join(&actual)));
        }
    }
    let y_lists = [
        ("Y_<", &rec.y_lt_words, &s.y_lt, &rec.y_lt_min),
        ("Y_>=", &rec.y_ge_words, &s.y_ge, &rec.y_ge_min),
    ];
    for (name, words, got, bound) in y_lists {
        let mut listed_mass = Q::zero();
        for text in words {
            let w = fx.expand_word(text)?;
            if !got.contains(&w) {
                out.push(format!("{name} lists {text} = {w}, which is not in {name}"));
            }
            listed_mass += got.multiplicity(&w);
        }
        let bound = parse_q(bound)?;
        if listed_mass < bound {
            out.push(format!(
                "listed {name} words carry {} < stated bound {}",
                fmt_q(&listed_mass),
                fmt_q(&bound)
            ));
        }
    }
    Ok(out)
}

fn join(words: &BTreeSet<Word>) -> String {
    words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sharpness_at_nine() {
        let d = build_xy_at(&part(&[4, 3, 2]), 9).unwrap();
        let s = d.split(2);
        let fx = XyFixture::bundled();
        assert_eq!(s.x_lt.support().cloned().collect::<Vec<_>>(), vec![fx
            .expand_word("[2][3](13)[2]")
            .unwrap()]);
        assert_eq!(s.y_lt.support().cloned().collect::<Vec<_>>(), vec![fx
            .expand_word("[2](13)[3][2]")
            .unwrap()]);
        assert_eq!(s.x_lt.norm(), q(6));
        assert_eq!(s.y_lt.norm(), q(4));
        assert!(build_xy(&part(&[4, 3, 2])).is_err());
    }

    #[test]
    fn first_content() {
        let d = build_xy(&part(&[5, 4, 1])).unwrap();
        let s = d.split(1);
        assert_eq!(s.x_ge.norm(), q(3));
        assert!(s.y_ge.norm() >= q(4));
        assert!(s.x_lt.is_empty());
        let absent = d.split(9);
        assert!(absent.x_lt.is_empty() && absent.y_ge.is_empty());
    }

    #[test]
    fn readings_differ_by_prefix_words() {
        let mu = part(&[4, 3, 2, 1]);
        let stated = build_xy_with(&mu, 10, XReading::Stated).unwrap().split(1);
        let full = build_xy_with(&mu, 10, XReading::Full).unwrap().split(1);
        assert_eq!(stated.x_ge.norm(), q(24));
        assert_eq!(full.x_ge.norm(), q(27));
        let extra = full.x_ge.difference(&stated.x_ge);
        let fx = XyFixture::bundled();
        assert_eq!(extra.support().cloned().collect::<Vec<_>>(), vec![fx.expand_word("α(34)[2]1").unwrap()]);
        assert_eq!(stated.y_ge, full.y_ge);
    }

    #[test]
    fn alias_expansion() {
        let fx = XyFixture::bundled();
        assert_eq!(fx.expand_word("α[2][2]1").unwrap().to_string(), "1212312121");
        assert_eq!(fx.expand_word("β").unwrap().to_string(), "12134");
        assert!(fx.expand_word("ε1").is_err());
    }
}

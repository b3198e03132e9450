use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

/// Families of compositions used by the enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    All,
    /// Parts in {1,2} and the last part equal to 1.
    C,
    /// All parts at least 2.
    CPrime,
    /// Parts in {1,2}, first and last part equal to 1.
    CDoublePrime,
}

impl Composition {
    /// Builds a composition, stripping trailing zeros. Interior zeros are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_vec(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn modulus(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// (-1)^{|I| - l(I)}
    pub fn sign(&self) -> i32 {
        if (self.modulus() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Exponent of m^I = 2^{m_1(I)}.
    pub fn m_exponent(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn reverse(&self) -> Composition {
        let mut v = self.0.clone();
        v.reverse();
        Composition(v)
    }

    /// Partial sums i_1, i_1+i_2, ... excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0;
        for &p in &self.0[..self.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Partial-sum subset of [n-1] as a bitmask, bit g-1 standing for g.
    pub fn descent_mask(&self) -> u64 {
        let n = self.modulus();
        assert!(n <= 64, "compositions above 64 are unsupported");
        self.descent_set()
            .into_iter()
            .fold(0u64, |m, g| m | (1u64 << (g - 1)))
    }

    pub fn from_descent_mask(n: usize, mask: u64) -> Composition {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for g in 1..n {
            if mask >> (g - 1) & 1 == 1 {
                parts.push(g - prev);
                prev = g;
            }
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Column lengths of the ribbon, read right to left.
    pub fn conjugate(&self) -> Composition {
        let n = self.modulus();
        if n == 0 {
            return Composition::empty();
        }
        let full = if n - 1 == 64 { u64::MAX } else { (1u64 << (n - 1)) - 1 };
        let comp = !self.descent_mask() & full;
        let mut reflected = 0u64;
        for g in 1..n {
            if comp >> (g - 1) & 1 == 1 {
                reflected |= 1 << (n - g - 1);
            }
        }
        Composition::from_descent_mask(n, reflected)
    }

    /// True iff `finer` refines `self`, i.e. self ⪯ finer.
    pub fn refines(&self, finer: &Composition) -> Result<bool> {
        if self.modulus() != finer.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: finer.modulus(),
            });
        }
        let (a, b) = (self.descent_mask(), finer.descent_mask());
        Ok(a & b == a)
    }

    /// I◁J
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// I▷J, merging the last part of I with the first part of J.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::InvalidArgument(
                "near concatenation needs two nonempty compositions".into(),
            ));
        }
        let mut v = self.0.clone();
        *v.last_mut().unwrap() += other.0[0];
        v.extend_from_slice(&other.0[1..]);
        Ok(Composition(v))
    }

    pub fn concatenations(&self, other: &Composition) -> Result<(Composition, Composition)> {
        Ok((self.concat(other), self.near_concat(other)?))
    }

    /// Blocks of `finer` induced by `self` (which finer must refine).
    pub fn blocks_of<'a>(&self, finer: &'a Composition) -> Result<Vec<&'a [usize]>> {
        if !self.refines(finer)? {
            return Err(Error::NotRefinement(finer.to_string(), self.to_string()));
        }
        let mut out = Vec::with_capacity(self.len());
        let mut start = 0;
        for &target in &self.0 {
            let mut acc = 0;
            let mut end = start;
            while acc < target {
                acc += finer.0[end];
                end += 1;
            }
            out.push(&finer.0[start..end]);
            start = end;
        }
        Ok(out)
    }

    pub fn is_in(&self, family: Family) -> bool {
        let p = &self.0;
        match family {
            Family::All => true,
            Family::C => !p.is_empty() && p.iter().all(|&x| x <= 2) && *p.last().unwrap() == 1,
            Family::CPrime => p.iter().all(|&x| x >= 2),
            Family::CDoublePrime => {
                !p.is_empty()
                    && p.iter().all(|&x| x <= 2)
                    && p[0] == 1
                    && *p.last().unwrap() == 1
            }
        }
    }
}

impl fmt::Display for Composition {
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

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_int_list(s)?)
    }
}

/// Parses `[2,1,1]`, `2,1,1` or the empty list `[]`.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t.strip_prefix('[').unwrap_or(t);
    let t = t.strip_suffix(']').unwrap_or(t).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim().parse::<usize>().map_err(|e| Error::Parse {
                offset: 0,
                message: format!("{x:?}: {e}"),
            })
        })
        .collect()
}

/// All compositions of `n` in the family, lexicographically descending.
pub fn enumerate_compositions(n: usize, family: Family) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, family, &mut cur, &mut out);
    out
}

fn rec(rem: usize, family: Family, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if rem == 0 {
        let c = Composition(cur.clone());
        if c.is_in(family) {
            out.push(c);
        }
        return;
    }
    let (lo, hi) = match family {
        Family::All => (1, rem),
        Family::CPrime => (2, rem),
        Family::C | Family::CDoublePrime => (1, rem.min(2)),
    };
    for p in (lo..=hi).rev() {
        if family == Family::CDoublePrime && cur.is_empty() && p != 1 {
            continue;
        }
        cur.push(p);
        rec(rem - p, family, cur, out);
        cur.pop();
    }
}

/// Compositions coarser than `finer` (all I with I ⪯ finer).
pub fn coarsenings(finer: &Composition) -> Vec<Composition> {
    let n = finer.modulus();
    let mask = finer.descent_mask();
    submasks(mask)
        .map(|m| Composition::from_descent_mask(n, m))
        .collect()
}

/// Compositions refining `coarse` (all J with coarse ⪯ J).
pub fn refinements(coarse: &Composition) -> Vec<Composition> {
    let n = coarse.modulus();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let full = (1u64 << (n - 1)) - 1;
    let mask = coarse.descent_mask();
    let free = full & !mask;
    submasks(free)
        .map(|m| Composition::from_descent_mask(n, m | mask))
        .collect()
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

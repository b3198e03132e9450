use std::fmt;

use super::composition::Composition;
use crate::error::{Error, Result};

/// How two neighbouring factors are glued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Join {
    /// I◁J: the next factor starts a new row.
    Concat,
    /// I▷J: the next factor continues the current row.
    Near,
}

/// A ribbon written as a product of hooks 1^s t.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookDecomposition {
    pub factors: Vec<Composition>,
    pub joins: Vec<Join>,
}

impl HookDecomposition {
    /// The composition obtained by gluing the factors.
    pub fn result(&self) -> Composition {
        let mut acc = self.factors[0].clone();
        for (f, j) in self.factors[1..].iter().zip(&self.joins) {
            acc = match j {
                Join::Concat => acc.concat(f),
                Join::Near => acc.near_concat(f).expect("factors are nonempty"),
            };
        }
        acc
    }

    /// Product of the factor signs.
    pub fn sign(&self) -> i32 {
        self.factors.iter().map(Composition::sign).product()
    }
}

impl fmt::Display for HookDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, h) in self.factors.iter().enumerate() {
            if k > 0 {
                let op = match self.joins[k - 1] {
                    Join::Concat => "◁",
                    Join::Near => "▷",
                };
                write!(f, "{op}")?;
            }
            for p in h.parts() {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// The hook 1^s t.
pub fn hook(s: usize, t: usize) -> Composition {
    let mut v = vec![1; s];
    v.push(t);
    Composition::from_vec(v)
}

/// Hooks of size `i`: 1^s (i-s) for s = 0..i-1.
pub fn hooks_of_size(i: usize) -> Vec<Composition> {
    (0..i).map(|s| hook(s, i - s)).collect()
}

/// All decompositions, with factor sizes given by the parts of `sizes`,
/// of any ribbon into hooks.
pub fn hooks_relative_to(sizes: &Composition) -> Vec<HookDecomposition> {
    let mut out = Vec::new();
    if sizes.is_empty() {
        return out;
    }
    let mut factors = Vec::new();
    let mut joins = Vec::new();
    rel_rec(sizes.parts(), &mut factors, &mut joins, &mut out);
    out
}

fn rel_rec(
    sizes: &[usize],
    factors: &mut Vec<Composition>,
    joins: &mut Vec<Join>,
    out: &mut Vec<HookDecomposition>,
) {
    let k = factors.len();
    if k == sizes.len() {
        out.push(HookDecomposition {
            factors: factors.clone(),
            joins: joins.clone(),
        });
        return;
    }
    let ops: &[Join] = if k == 0 { &[Join::Concat] } else { &[Join::Near, Join::Concat] };
    for &op in ops {
        for h in hooks_of_size(sizes[k]) {
            if k > 0 {
                joins.push(op);
            }
            factors.push(h);
            rel_rec(sizes, factors, joins, out);
            factors.pop();
            if k > 0 {
                joins.pop();
            }
        }
    }
}

/// Every decomposition of the fixed ribbon `j` into hooks.
pub fn hook_decompositions(j: &Composition) -> Vec<HookDecomposition> {
    let n = j.modulus();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let down: Vec<bool> = {
        let mut d = vec![false; n];
        for g in j.descent_set() {
            d[g] = true;
        }
        d
    };
    let mut cuts = Vec::new();
    cut_rec(&down, n, 1, &mut cuts, &mut out);
    out
}

/// Boxes a..=b form a hook iff their internal steps are downs followed by rights.
fn is_hook_segment(down: &[bool], a: usize, b: usize) -> bool {
    let mut seen_right = false;
    for g in a..b {
        if down[g] {
            if seen_right {
                return false;
            }
        } else {
            seen_right = true;
        }
    }
    true
}

fn segment_hook(down: &[bool], a: usize, b: usize) -> Composition {
    let s = (a..b).filter(|&g| down[g]).count();
    hook(s, b - a + 1 - s)
}

fn cut_rec(
    down: &[bool],
    n: usize,
    start: usize,
    cuts: &mut Vec<usize>,
    out: &mut Vec<HookDecomposition>,
) {
    for end in start..=n {
        if !is_hook_segment(down, start, end) {
            break;
        }
        cuts.push(end);
        if end == n {
            let mut factors = Vec::new();
            let mut joins = Vec::new();
            let mut a = 1;
            for &b in cuts.iter() {
                if a > 1 {
                    joins.push(if down[a - 1] { Join::Concat } else { Join::Near });
                }
                factors.push(segment_hook(down, a, b));
                a = b + 1;
            }
            out.push(HookDecomposition { factors, joins });
        } else {
            cut_rec(down, n, end + 1, cuts, out);
        }
        cuts.pop();
    }
}

/// Product of the last parts of the blocks of `j` with respect to `i`.
pub fn lp(j: &Composition, i: &Composition) -> Result<u64> {
    let blocks = i.blocks_of(j).map_err(|_| {
        Error::NotRefinement(j.to_string(), i.to_string())
    })?;
    Ok(blocks.iter().map(|b| *b.last().unwrap() as u64).product())
}

/// First boxes of the factors of a decomposition, in box-path numbering.
pub fn factor_starts(d: &HookDecomposition) -> Vec<usize> {
    let mut out = Vec::with_capacity(d.factors.len());
    let mut pos = 1;
    for f in &d.factors {
        out.push(pos);
        pos += f.modulus();
    }
    out
}

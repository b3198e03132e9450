//! Simple graphs and their chromatic symmetric functions.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::sym::{SymBasis, SymElement};

pub const DEFAULT_MAX_EDGES: usize = 24;
pub const MAX_COLORING_VERTICES: usize = 8;

/// Vertices 1..=n and a set of undirected edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidArgument(format!("edge {u}-{v} outside 1..={n}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Legs of lengths λ_1, λ_2, ... glued at the center vertex 1.
    pub fn spider(legs: &Partition) -> Result<Self> {
        if legs.is_empty() {
            return Err(Error::InvalidPartition("a spider needs at least one leg".into()));
        }
        let n = legs.size() + 1;
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 2;
        for &len in legs.parts() {
            let mut prev = 1;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::new(n, edges)
    }

    /// Triangle with a pendant vertex on each corner.
    pub fn net() -> Self {
        Self::new(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    /// One `u v` pair per line, 1-indexed; blank lines and `#` comments ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut n = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    offset: lineno + 1,
                    message: format!("line {}: {e}", lineno + 1),
                })?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    offset: lineno + 1,
                    message: format!("line {}: expected two vertices", lineno + 1),
                });
            }
            n = n.max(nums[0]).max(nums[1]);
            edges.push((nums[0], nums[1]));
        }
        Self::new(n, edges)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse_edge_list(&std::fs::read_to_string(path)?)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u - 1] += 1;
            d[v - 1] += 1;
        }
        d
    }
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x
}

/// Σ_{E'⊆E} (-1)^{|E'|} p_{τ(E')}, τ the component orders of (V, E').
pub fn csf_powersum(g: &SimpleGraph, max_edges: usize) -> Result<SymElement> {
    let m = g.edges.len();
    if m > max_edges {
        return Err(Error::CapExceeded {
            what: format!("edge count {m}"),
            limit: max_edges,
            estimate: format!("2^{m} edge subsets"),
        });
    }
    if g.n > 255 {
        return Err(Error::InvalidArgument("at most 255 vertices".into()));
    }
    let edges: Vec<(usize, usize)> = g.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    let total: u64 = 1 << m;
    let chunk_bits = m.min(12);
    let chunks = total >> chunk_bits;
    let n = g.n;
    let partial: Vec<HashMap<Vec<u8>, i64>> = (0..chunks)
        .into_par_iter()
        .map(|hi| {
            let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
            let mut parent = vec![0u8; n];
            let mut size = vec![0u8; n];
            for lo in 0..(1u64 << chunk_bits) {
                let mask = (hi << chunk_bits) | lo;
                for v in 0..n {
                    parent[v] = v as u8;
                    size[v] = 1;
                }
                for (k, &(u, v)) in edges.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        if a != b {
                            parent[b] = a as u8;
                            size[a] += size[b];
                        }
                    }
                }
                let mut key: Vec<u8> = (0..n)
                    .filter(|&v| parent[v] as usize == v)
                    .map(|v| size[v])
                    .collect();
                key.sort_unstable_by(|a, b| b.cmp(a));
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                *acc.entry(key).or_insert(0) += sign;
            }
            acc
        })
        .collect();
    let mut merged: HashMap<Vec<u8>, i64> = HashMap::new();
    for part in partial {
        for (k, v) in part {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    let terms = merged
        .into_iter()
        .map(|(k, v)| {
            (
                Partition::from_unsorted(k.into_iter().map(usize::from).collect()),
                Q::from_integer(BigInt::from(v)),
            )
        })
        .collect::<Vec<_>>();
    SymElement::from_terms(n, SymBasis::P, terms)
}

/// Σ over proper colorings, counted per monomial: [m_μ] is the number of proper
/// colorings using color i exactly μ_i times.
pub fn csf_colorings(g: &SimpleGraph) -> Result<SymElement> {
    if g.n > MAX_COLORING_VERTICES {
        return Err(Error::CapExceeded {
            what: format!("vertex count {}", g.n),
            limit: MAX_COLORING_VERTICES,
            estimate: format!("{}^{} colorings", g.n, g.n),
        });
    }
    let mut adj = vec![Vec::new(); g.n];
    for &(u, v) in &g.edges {
        adj[u - 1].push(v - 1);
        adj[v - 1].push(u - 1);
    }
    let mut terms = Vec::new();
    for mu in partitions(g.n) {
        let mut left = mu.parts().to_vec();
        let mut colors = vec![usize::MAX; g.n];
        let count = color_rec(0, &adj, &mut colors, &mut left);
        if count > 0 {
            terms.push((mu, Q::from_integer(BigInt::from(count))));
        }
    }
    SymElement::from_terms(g.n, SymBasis::Monomial, terms)
}

fn color_rec(v: usize, adj: &[Vec<usize>], colors: &mut [usize], left: &mut [usize]) -> u64 {
    if v == adj.len() {
        return 1;
    }
    let mut total = 0;
    for c in 0..left.len() {
        if left[c] == 0 || adj[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        left[c] -= 1;
        colors[v] = c;
        total += color_rec(v + 1, adj, colors, left);
        colors[v] = usize::MAX;
        left[c] += 1;
    }
    total
}

/// X_{S(a,b,c)} = X_{P_n} + Σ_{i=1}^{c} (X_{P_i} X_{P_{n-i}} - X_{P_{b+i}} X_{P_{n-b-i}}), in the p basis.
pub fn spider_csf_reduction(a: usize, b: usize, c: usize) -> Result<SymElement> {
    if !(a >= b && b >= c && c >= 1) {
        return Err(Error::InvalidArgument(format!(
            "need a >= b >= c >= 1, got ({a},{b},{c})"
        )));
    }
    let n = a + b + c + 1;
    let path = |k: usize| csf_powersum(&SimpleGraph::path(k).unwrap(), usize::MAX);
    let mut x = path(n)?;
    for i in 1..=c {
        let plus = path(i)?.multiply(&path(n - i)?)?;
        let minus = path(b + i)?.multiply(&path(n - b - i)?)?;
        x = x.add(&plus)?.sub(&minus)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        let g = SimpleGraph::path(2).unwrap();
        assert_eq!(g.edges().iter().copied().collect::<Vec<_>>(), vec![(1, 2)]);
        let claw = SimpleGraph::spider(&p(&[1, 1, 1])).unwrap();
        assert_eq!(claw.degrees(), vec![3, 1, 1, 1]);
        let s = SimpleGraph::spider(&p(&[4, 2, 1])).unwrap();
        assert_eq!(s.vertex_count(), 8);
        let mut d = s.degrees();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 2, 2, 2, 2, 3]);
        assert!(SimpleGraph::new(2, [(1, 1)]).is_err());
        assert!(SimpleGraph::spider(&Partition::empty()).is_err());
    }

    #[test]
    fn small_paths() {
        let p2 = csf_powersum(&SimpleGraph::path(2).unwrap(), 24).unwrap();
        let want = SymElement::from_terms(2, SymBasis::P, [(p(&[1, 1]), q(1)), (p(&[2]), q(-1))]).unwrap();
        assert_eq!(p2, want);
        let p3 = csf_powersum(&SimpleGraph::path(3).unwrap(), 24).unwrap();
        let want = SymElement::from_terms(
            3,
            SymBasis::P,
            [(p(&[1, 1, 1]), q(1)), (p(&[2, 1]), q(-2)), (p(&[3]), q(1))],
        )
        .unwrap();
        assert_eq!(p3, want);
        let c2 = csf_colorings(&SimpleGraph::path(2).unwrap()).unwrap();
        assert_eq!(c2, SymElement::from_terms(2, SymBasis::Monomial, [(p(&[1, 1]), q(2))]).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = SimpleGraph::path(6).unwrap();
        match csf_powersum(&g, 4) {
            Err(Error::CapExceeded { limit, .. }) => assert_eq!(limit, 4),
            other => panic!("{other:?}"),
        }
        assert!(csf_colorings(&SimpleGraph::path(9).unwrap()).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let g = SimpleGraph::parse_edge_list("1 2\n# comment\n2 3\n\n").unwrap();
        assert_eq!(g, SimpleGraph::path(3).unwrap());
        assert!(SimpleGraph::parse_edge_list("1 2 3").is_err());
        assert!(SimpleGraph::parse_edge_list("1 x").is_err());
    }
}

//! Per-degree transition data into the monomial basis, computed once and shared.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::kostka::kostka_column;
use crate::combinatorics::partition::{partitions, Partition};

pub type IntMap = BTreeMap<Partition, BigInt>;

/// Partitions of n in lexicographically descending order with an index lookup.
pub struct Index {
    pub parts: Vec<Partition>,
    pub pos: HashMap<Partition, usize>,
}

pub fn index(n: usize) -> Arc<Index> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Index>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ix) = cache.read().unwrap().get(&n) {
        return ix.clone();
    }
    let parts = partitions(n);
    let pos = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let ix = Arc::new(Index { parts, pos });
    cache.write().unwrap().insert(n, ix.clone());
    ix
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E,
    P,
}

/// m_λ · g_k, by listing the reachable μ and counting preimages.
pub fn mul_generator(f: &IntMap, gen: Gen, k: usize) -> IntMap {
    let mut out = IntMap::new();
    for (lam, c) in f {
        for (mu, mult) in generator_moves(lam, gen, k) {
            let e = out.entry(mu).or_insert_with(BigInt::zero);
            *e += c * BigInt::from(mult);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Pairs (μ, [m_μ](m_λ g_k)).
fn generator_moves(lam: &Partition, gen: Gen, k: usize) -> Vec<(Partition, u64)> {
    // value classes of λ with zeros padded as needed
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for &p in lam.parts() {
        match classes.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => classes.push((p, 1)),
        }
    }
    let zeros = match gen {
        Gen::E => k,
        Gen::P => 1,
    };
    classes.push((0, zeros));
    match gen {
        Gen::P => {
            let mut out = Vec::new();
            for &(v, _) in &classes {
                let mut parts = lam.parts().to_vec();
                if v == 0 {
                    parts.push(k);
                } else {
                    let i = parts.iter().position(|&x| x == v).unwrap();
                    parts[i] += k;
                }
                let mu = Partition::from_unsorted(parts);
                let mult = mu.multiplicity(v + k) as u64;
                out.push((mu, mult));
            }
            out
        }
        Gen::E => {
            let mut out = Vec::new();
            let mut picks = vec![0usize; classes.len()];
            e_rec(lam, &classes, 0, k, &mut picks, &mut out);
            out
        }
    }
}

fn e_rec(
    lam: &Partition,
    classes: &[(usize, usize)],
    i: usize,
    rem: usize,
    picks: &mut Vec<usize>,
    out: &mut Vec<(Partition, u64)>,
) {
    if i == classes.len() {
        if rem != 0 {
            return;
        }
        let mut parts = Vec::with_capacity(lam.len() + rem);
        for (&(v, c), &j) in classes.iter().zip(picks.iter()) {
            for _ in 0..j {
                parts.push(v + 1);
            }
            if v > 0 {
                for _ in 0..c - j {
                    parts.push(v);
                }
            }
        }
        let mu = Partition::from_unsorted(parts);
        // positions of value v+1 in μ that came from class v
        let mut mult = 1u64;
        for (&(v, _), &j) in classes.iter().zip(picks.iter()) {
            mult *= binom(mu.multiplicity(v + 1) as u64, j as u64);
        }
        out.push((mu, mult));
        return;
    }
    let (_, c) = classes[i];
    for j in 0..=c.min(rem) {
        picks[i] = j;
        e_rec(lam, classes, i + 1, rem - j, picks, out);
    }
    picks[i] = 0;
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

/// e_λ or p_λ in the monomial basis.
pub fn generator_product(gen: Gen, lam: &Partition) -> Arc<IntMap> {
    static CACHE: OnceLock<RwLock<HashMap<(Gen, Partition), Arc<IntMap>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&(gen, lam.clone())) {
        return v.clone();
    }
    let result = if lam.is_empty() {
        let mut m = IntMap::new();
        m.insert(Partition::empty(), BigInt::from(1));
        m
    } else {
        let mut parts = lam.parts().to_vec();
        let last = parts.pop().unwrap();
        let rest = generator_product(gen, &Partition::from_sorted_vec(parts));
        mul_generator(&rest, gen, last)
    };
    let arc = Arc::new(result);
    cache.write().unwrap().insert((gen, lam.clone()), arc.clone());
    arc
}

/// Dense matrix M[i][j] = [m_{μ_j}] g_{λ_i} over partitions of n in index order.
pub fn generator_matrix(gen: Gen, n: usize) -> Arc<Vec<Vec<BigInt>>> {
    static CACHE: OnceLock<RwLock<HashMap<(Gen, usize), Arc<Vec<Vec<BigInt>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&(gen, n)) {
        return v.clone();
    }
    let ix = index(n);
    let rows: Vec<Vec<BigInt>> = ix
        .parts
        .iter()
        .map(|lam| {
            let mut row = vec![BigInt::zero(); ix.parts.len()];
            for (mu, c) in generator_product(gen, lam).iter() {
                row[ix.pos[mu]] = c.clone();
            }
            row
        })
        .collect();
    let arc = Arc::new(rows);
    cache.write().unwrap().insert((gen, n), arc.clone());
    arc
}

/// Dense Kostka matrix K[i][j] = K_{λ_i λ_j}.
pub fn kostka_matrix(n: usize) -> Arc<Vec<Vec<u64>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Vec<u64>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&n) {
        return v.clone();
    }
    let ix = index(n);
    let size = ix.parts.len();
    let mut k = vec![vec![0u64; size]; size];
    for (j, mu) in ix.parts.iter().enumerate() {
        let col = kostka_column(&Partition::empty(), mu.parts());
        for (lam, c) in col.iter() {
            k[ix.pos[lam]][j] = *c;
        }
    }
    let arc = Arc::new(k);
    cache.write().unwrap().insert(n, arc.clone());
    arc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        let e2 = generator_product(Gen::E, &p(&[2]));
        assert_eq!(e2.len(), 1);
        assert_eq!(e2[&p(&[1, 1])], BigInt::from(1));
        let p2 = generator_product(Gen::P, &p(&[2]));
        assert_eq!(p2[&p(&[2])], BigInt::from(1));
        let e11 = generator_product(Gen::E, &p(&[1, 1]));
        assert_eq!(e11[&p(&[2])], BigInt::from(1));
        assert_eq!(e11[&p(&[1, 1])], BigInt::from(2));
    }

    #[test]
    fn e_one_power_is_multinomial() {
        let e = generator_product(Gen::E, &p(&[1, 1, 1, 1]));
        assert_eq!(e[&p(&[1, 1, 1, 1])], BigInt::from(24));
        assert_eq!(e[&p(&[2, 1, 1])], BigInt::from(12));
        assert_eq!(e[&p(&[2, 2])], BigInt::from(6));
        assert_eq!(e[&p(&[4])], BigInt::from(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(20, 10), 184756);
    }
}

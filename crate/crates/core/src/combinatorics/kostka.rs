use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::partition::Partition;
use crate::error::{Error, Result};

type Column = Arc<HashMap<Partition, u64>>;

fn cache() -> &'static RwLock<HashMap<(Partition, Vec<usize>), Column>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Vec<usize>), Column>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// For fixed inner shape and content, the number of semistandard fillings of
/// every outer shape, built one horizontal strip per letter.
pub fn kostka_column(inner: &Partition, content: &[usize]) -> Column {
    let mut content = content.to_vec();
    while content.last() == Some(&0) {
        content.pop();
    }
    let key = (inner.clone(), content);
    if let Some(c) = cache().read().unwrap().get(&key) {
        return c.clone();
    }
    let mut layer: HashMap<Partition, u64> = HashMap::new();
    layer.insert(inner.clone(), 1);
    for &c in &key.1 {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (shape, count) in &layer {
            for grown in horizontal_strips(shape, c) {
                let e = next.entry(grown).or_insert(0);
                *e = e.checked_add(*count).expect("Kostka number overflow");
            }
        }
        layer = next;
    }
    let col = Arc::new(layer);
    cache().write().unwrap().insert(key, col.clone());
    col
}

/// All shapes obtained from `shape` by adding a horizontal strip of `size` boxes.
pub fn horizontal_strips(shape: &Partition, size: usize) -> Vec<Partition> {
    let rows = shape.parts().to_vec();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows.len() + 1);
    strip_rec(&rows, 0, size, &mut cur, &mut out);
    out
}

fn strip_rec(rows: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i > rows.len() {
        if rem == 0 {
            out.push(Partition::new(cur.clone()).expect("strip keeps rows decreasing"));
        }
        return;
    }
    let base = rows.get(i).copied().unwrap_or(0);
    let cap = if i == 0 { base + rem } else { rows[i - 1] };
    let hi = cap.min(base + rem);
    for v in base..=hi {
        cur.push(v);
        strip_rec(rows, i + 1, rem - (v - base), cur, out);
        cur.pop();
    }
}

/// K_{λκ}: semistandard tableaux of shape λ and content κ (a weak composition).
pub fn kostka(lambda: &Partition, content: &[usize]) -> Result<u64> {
    skew_kostka(lambda, &Partition::empty(), content)
}

/// Semistandard tableaux of shape λ/μ and content κ.
pub fn skew_kostka(outer: &Partition, inner: &Partition, content: &[usize]) -> Result<u64> {
    let n = outer.size().checked_sub(inner.size()).unwrap_or(usize::MAX);
    let m: usize = content.iter().sum();
    if !outer.contains(inner) {
        return Err(Error::InvalidArgument(format!("{inner} is not inside {outer}")));
    }
    if n != m {
        return Err(Error::ModulusMismatch { left: n, right: m });
    }
    Ok(kostka_column(inner, content).get(outer).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::partitions;
    use crate::combinatorics::shape::{semistandard_tableaux, SkewShape};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        for n in 1..=6 {
            for l in partitions(n) {
                assert_eq!(kostka(&l, l.parts()).unwrap(), 1);
            }
        }
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), 0);
        assert!(kostka(&p(&[2]), &[1]).is_err());
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=6 {
            for l in partitions(n) {
                for mu in partitions(n) {
                    let brute = semistandard_tableaux(&SkewShape::straight(l.clone()), mu.parts()).len();
                    assert_eq!(kostka(&l, mu.parts()).unwrap(), brute as u64);
                }
            }
        }
    }

    #[test]
    fn weak_content_order() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 0, 2]).unwrap(), kostka(&p(&[2, 1]), &[2, 1]).unwrap());
        let shape = SkewShape::straight(p(&[3, 2]));
        let brute = semistandard_tableaux(&shape, &[1, 2, 2]).len() as u64;
        assert_eq!(kostka(&p(&[3, 2]), &[1, 2, 2]).unwrap(), brute);
    }

    #[test]
    fn skew_matches_brute_force() {
        let outer = p(&[3, 2, 2]);
        let inner = p(&[2, 1]);
        let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
        for mu in partitions(4) {
            let brute = semistandard_tableaux(&shape, mu.parts()).len() as u64;
            assert_eq!(skew_kostka(&outer, &inner, mu.parts()).unwrap(), brute);
        }
    }
}

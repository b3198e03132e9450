//! The constructive multi-injections between M-multisets.

use std::collections::BTreeSet;

use num_traits::One;

use super::{
    interval, m_alpha, m_alpha_prefix, m_prefix, move_letter, runs_vec, weight_m,
    MultiMap, WordMultiset,
};
use crate::combinatorics::{partitions, Composition, Partition, Word};
use crate::error::{Error, Result};
use crate::rational::{q, q_frac, Q};

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

fn word(letters: Vec<u8>) -> Word {
    Word::new(letters).expect("positive letters")
}

fn single(w: Word) -> WordMultiset {
    WordMultiset::from_words([w], |_| Q::one())
}

/// A map together with its source and target multisets.
#[derive(Clone, Debug)]
pub struct MapCheck {
    pub name: String,
    pub kappa: Partition,
    pub source: WordMultiset,
    pub target: WordMultiset,
    pub map: MultiMap,
    /// Required ratio m(ι(y))/m(y), when the statement fixes one.
    pub m_ratio: Option<Q>,
    /// The stated complement target ∖ ι(source), when the statement gives one.
    pub expected_residual: Option<WordMultiset>,
    /// Whether the support map is stated to be a bijection.
    pub bijective: bool,
}

/// Outcome of checking one [`MapCheck`].
#[derive(Clone, Debug, Default)]
pub struct MapVerification {
    pub name: String,
    pub kappa: Partition,
    pub domain_size: usize,
    pub well_defined: bool,
    pub multi_injection: bool,
    pub m_scaling: Option<bool>,
    pub residual: Option<bool>,
    pub bijective: Option<bool>,
    pub failures: Vec<String>,
}

impl MapVerification {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.multi_injection
            && self.m_scaling.unwrap_or(true)
            && self.residual.unwrap_or(true)
            && self.bijective.unwrap_or(true)
    }
}

impl MapCheck {
    pub fn verify(&self) -> Result<MapVerification> {
        let mut v = MapVerification {
            name: self.name.clone(),
            kappa: self.kappa.clone(),
            domain_size: self.source.len(),
            ..Default::default()
        };
        let mut images = BTreeSet::new();
        let mut injective_support = true;
        for (y, img) in self.map.iter() {
            for (z, _) in img.iter() {
                if !self.target.contains(z) {
                    v.failures.push(format!("{y} -> {z} lies outside the target"));
                }
                if !images.insert(z.clone()) {
                    injective_support = false;
                }
            }
        }
        v.well_defined = v.failures.is_empty() && self.source.support().all(|y| self.map.get(y).is_some());
        let defects = self.map.injection_defects(&self.source, &self.target)?;
        for (z, got, cap) in &defects {
            v.failures.push(format!(
                "image multiplicity of {z} is {got}, target allows {cap}"
            ));
        }
        v.multi_injection = defects.is_empty();
        if let Some(r) = &self.m_ratio {
            let mut ok = true;
            for (y, img) in self.map.iter() {
                for (z, _) in img.iter() {
                    if weight_m(z)? != weight_m(y)? * r {
                        ok = false;
                        v.failures.push(format!("m({z}) != {r}·m({y})"));
                    }
                }
            }
            v.m_scaling = Some(ok);
        }
        if let Some(expected) = &self.expected_residual {
            let residual = self.target.difference(&self.map.image(&self.source)?);
            let ok = &residual == expected;
            if !ok {
                v.failures.push(format!("residual {residual} differs from {expected}"));
            }
            v.residual = Some(ok);
        }
        if self.bijective {
            let onto = self.target.support().all(|z| images.contains(z));
            if !(onto && injective_support) {
                v.failures.push("support map is not a bijection".into());
            }
            v.bijective = Some(onto && injective_support);
        }
        Ok(v)
    }
}

/// ι: M_j(κ)/2 → M_{j−1}(κ).
pub fn iota_lemma42(j: usize, kappa: &Partition) -> Result<MapCheck> {
    let n = kappa.size();
    if j < 3 {
        return Err(Error::InvalidArgument(format!("need j >= 3, got {j}")));
    }
    if n < j + 1 {
        return Err(Error::InvalidArgument(format!("need |κ| >= j+1, got {n}")));
    }
    let jl = j as u8;
    let source = m_alpha(kappa, &comp(&[j]))?.scale(&q_frac(1, 2))?;
    let target = m_alpha(kappa, &comp(&[j - 1]))?;
    let half = q_frac(1, 2);
    let mut map = MultiMap::new();
    for (y, _) in source.iter() {
        let runs = runs_vec(y);
        let in2 = runs.get(1).is_some_and(|r| r.contains(&jl));
        let img = if !in2 {
            let z = move_letter(y, jl, 0, 1)
                .ok_or_else(|| Error::InvalidArgument(format!("cannot move {j} in {y}")))?;
            single(z)
        } else if runs.len() >= 3 && !runs[2].contains(&jl) {
            let z = move_letter(y, jl, 0, 2)
                .ok_or_else(|| Error::InvalidArgument(format!("cannot move {j} in {y}")))?;
            single(z)
        } else if runs.len() == 2 {
            // y = [j][n−j]
            let expect = [interval(1, j), interval(1, n - j)].concat();
            if y.letters() != expect.as_slice() {
                return Err(Error::InvalidArgument(format!("{y} is not [j][n-j]")));
            }
            let u = [interval(1, j - 1), vec![1, jl], interval(2, n - j)].concat();
            let v = [interval(1, j - 1), interval(1, j), interval(j, n - j)].concat();
            WordMultiset::from_words([word(u), word(v)], |_| half.clone())
        } else {
            // y = [j][p][j]ζ
            let p = runs[1].len();
            let head = [interval(1, j), interval(1, p), interval(1, j)].concat();
            if p < j || !y.starts_with(&head) {
                return Err(Error::InvalidArgument(format!("{y} is not [j][p][j]ζ")));
            }
            let zeta = &y.letters()[head.len()..];
            let u = [
                interval(1, j - 1),
                vec![1, jl],
                interval(2, p),
                interval(1, j),
                zeta.to_vec(),
            ]
            .concat();
            let v = [
                interval(1, j - 1),
                vec![1, jl],
                interval(1, p),
                interval(2, j),
                zeta.to_vec(),
            ]
            .concat();
            WordMultiset::from_words([word(u), word(v)], |_| half.clone())
        };
        map.assign(y.clone(), img);
    }
    Ok(MapCheck {
        name: format!("lemma42 j={j}"),
        kappa: kappa.clone(),
        source,
        target,
        map,
        m_ratio: None,
        expected_residual: None,
        bijective: false,
    })
}

fn moved_map(source: &WordMultiset, v: u8, from: usize, to: usize) -> Result<MultiMap> {
    let mut map = MultiMap::new();
    for (y, _) in source.iter() {
        let z = move_letter(y, v, from, to)
            .ok_or_else(|| Error::InvalidArgument(format!("cannot move {v} in {y}")))?;
        map.assign(y.clone(), single(z));
    }
    Ok(map)
}

/// M_32(κ) → M_23(κ), moving 3 from the first run to the second.
pub fn lemma45_bullet1(kappa: &Partition) -> Result<MapCheck> {
    if kappa.size() < 6 {
        return Err(Error::InvalidArgument("need |κ| >= 6".into()));
    }
    let source = m_alpha(kappa, &comp(&[3, 2]))?;
    let target = m_alpha(kappa, &comp(&[2, 3]))?;
    let map = moved_map(&source, 3, 0, 1)?;
    Ok(MapCheck {
        name: "lemma45 bullet1".into(),
        kappa: kappa.clone(),
        source,
        target,
        map,
        m_ratio: Some(Q::one()),
        expected_residual: Some(m_prefix(kappa, &word(vec![1, 2, 1, 2, 3, 3]))?),
        bijective: false,
    })
}

/// M_{2z}(κ) → M_{3(z−1)}(κ), moving 3 from the second run to the first.
pub fn lemma45_bullet2(kappa: &Partition, z: usize) -> Result<MapCheck> {
    if z < 4 || kappa.size() < z + 2 {
        return Err(Error::InvalidArgument("need z >= 4 and |κ| >= z+2".into()));
    }
    let source = m_alpha(kappa, &comp(&[2, z]))?;
    let tgt_type = comp(&[3, z - 1]);
    let target = m_alpha(kappa, &tgt_type)?;
    let map = moved_map(&source, 3, 1, 0)?;
    let prefix = word([interval(1, 3), interval(1, z - 1)].concat());
    Ok(MapCheck {
        name: format!("lemma45 bullet2 z={z}"),
        kappa: kappa.clone(),
        source,
        target,
        map,
        m_ratio: Some(Q::one()),
        expected_residual: Some(m_alpha_prefix(kappa, &tgt_type, &prefix)?),
        bijective: false,
    })
}

/// M(κ;[2][3]3) → ⊔_{z≥4} M_{3z}(κ;[3][z]), moving 3 from the third run to the first.
pub fn lemma45_bullet3(kappa: &Partition) -> Result<MapCheck> {
    let n = kappa.size();
    if n < 7 {
        return Err(Error::InvalidArgument("need |κ| >= 7".into()));
    }
    let source = m_prefix(kappa, &word(vec![1, 2, 1, 2, 3, 3]))?;
    let mut target = WordMultiset::new();
    for z in 4..=n - 3 {
        let prefix = word([interval(1, 3), interval(1, z)].concat());
        target = target.union(&m_alpha_prefix(kappa, &comp(&[3, z]), &prefix)?);
    }
    let map = moved_map(&source, 3, 2, 0)?;
    Ok(MapCheck {
        name: "lemma45 bullet3".into(),
        kappa: kappa.clone(),
        source,
        target,
        map,
        m_ratio: Some(q(4)),
        expected_residual: None,
        bijective: true,
    })
}

/// The ι maps M_j → M_{j−1} for every κ with 4 ≤ |κ| ≤ max_n and 3 ≤ j < |κ|.
pub fn verify_lemma42(max_n: usize) -> Result<Vec<MapVerification>> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for kappa in partitions(n) {
            for j in 3..n {
                out.push(iota_lemma42(j, &kappa)?.verify()?);
            }
        }
    }
    Ok(out)
}

/// The three k = 5 injections for every κ with |κ| ≤ max_n (bullet 2 for 4 ≤ z ≤ max_z).
pub fn verify_lemma45(max_n: usize, max_z: usize) -> Result<Vec<MapVerification>> {
    let mut out = Vec::new();
    for n in 6..=max_n {
        for kappa in partitions(n) {
            out.push(lemma45_bullet1(&kappa)?.verify()?);
            for z in 4..=max_z.min(n - 2) {
                out.push(lemma45_bullet2(&kappa, z)?.verify()?);
            }
            if n >= 7 {
                out.push(lemma45_bullet3(&kappa)?.verify()?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| b - b'0').collect()).unwrap()
    }
    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn iota_examples() {
        let m = iota_lemma42(3, &part(&[2, 2, 2])).unwrap();
        let img = m.map.get(&w("123123")).unwrap();
        assert_eq!(img.multiplicity(&w("121323")), q_frac(1, 2));
        assert_eq!(img.multiplicity(&w("121233")), q_frac(1, 2));
        let m = iota_lemma42(3, &part(&[2, 2, 1])).unwrap();
        let img = m.map.get(&w("12312")).unwrap();
        assert_eq!(img.len(), 1);
        assert!(img.contains(&w("12123")));
        assert!(iota_lemma42(2, &part(&[2, 2, 1])).is_err());
    }

    #[test]
    fn lemma42_small() {
        for r in verify_lemma42(7).unwrap() {
            assert!(r.passed(), "{} {}: {:?}", r.name, r.kappa, r.failures);
        }
    }

    #[test]
    fn lemma45_small() {
        let r = lemma45_bullet1(&part(&[3, 2, 1])).unwrap().verify().unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        for kappa in partitions(6) {
            let r = lemma45_bullet2(&kappa, 4).unwrap().verify().unwrap();
            assert!(r.passed(), "{kappa}: {:?}", r.failures);
        }
        for r in verify_lemma45(7, 5).unwrap() {
            assert!(r.passed(), "{} {}: {:?}", r.name, r.kappa, r.failures);
        }
    }

    #[test]
    fn lemma42_norm_inequality_follows() {
        for kappa in partitions(7) {
            for j in 3..7 {
                let m = iota_lemma42(j, &kappa).unwrap();
                assert!(m.target.norm() >= m.source.norm(), "{kappa} j={j}");
            }
        }
    }
}

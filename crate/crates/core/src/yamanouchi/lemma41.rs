//! Schur coefficients of E_{n,k} as signed norms of Yamanouchi multisets.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{enumerate_y, weight_m};
use crate::analogs::{e_commutative, e_tilde};
use crate::combinatorics::{enumerate_compositions, partitions, Composition, Family, Partition};
use crate::error::{Error, Result};
use crate::nsym::NSymBasis;
use crate::rational::{q, q_frac, Q};
use crate::sym::SymBasis;

/// The five classes partitioning 𝒞_n relative to the cut at n−k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma41Class {
    I1,
    I2,
    I3,
    I4,
    I5,
}

/// Class of I ∈ 𝒞_n, or None when I ∉ 𝒞_n or n < k+1.
pub fn classify_ribbon(i: &Composition, k: usize) -> Option<Lemma41Class> {
    if !i.is_in(Family::C) || k < 2 || i.modulus() <= k {
        return None;
    }
    let parts = i.parts();
    let cut = i.modulus() - k;
    let mut sum = 0;
    for (idx, &p) in parts.iter().enumerate() {
        if sum == cut {
            // I = γδ with |δ| = k
            let gamma_last = parts[idx - 1];
            let delta = &parts[idx..];
            return Some(if gamma_last == 2 || delta[0] == 2 {
                Lemma41Class::I5
            } else if delta.get(1) == Some(&2) {
                Lemma41Class::I2
            } else {
                Lemma41Class::I4
            });
        }
        if sum < cut && sum + p > cut {
            // a 2 straddles the cut
            return Some(match parts.get(idx + 1) {
                Some(2) => Lemma41Class::I1,
                _ => Lemma41Class::I3,
            });
        }
        sum += p;
    }
    None
}

/// c(I) with Ẽ_{n,k} = Σ_I c(I)·m^I/2·R_I.
pub fn ribbon_class_coefficient(c: Lemma41Class) -> Q {
    match c {
        Lemma41Class::I1 => q(-1),
        Lemma41Class::I2 => q_frac(1, 2),
        Lemma41Class::I3 => q_frac(-1, 2),
        Lemma41Class::I4 => q_frac(5, 8),
        Lemma41Class::I5 => q(1),
    }
}

/// Readings of the norm formula for [s_κ]E_{n,k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma41Reading {
    /// Σ_y c(class of τ_y^∼)·m(y)/2 over 𝒴(κ).
    Classes,
    /// Signed norms of M_α over the five prefix families of the class decomposition.
    Prefixes,
    /// The six-term statement with the 5/8 term summed over α ∈ 𝒞′_{k+2}, α_{-1} ≥ i+2.
    Printed,
}

fn all_at_least_two(s: &[usize], modulus: usize) -> bool {
    s.iter().all(|&p| p >= 2) && s.iter().sum::<usize>() == modulus
}

/// Signed multiplicity with which a prefix α of τ enters the given reading.
fn prefix_weight(alpha: &[usize], k: usize, reading: Lemma41Reading) -> Q {
    let (&last, front) = alpha.split_last().expect("nonempty prefix");
    let front_in = |m: usize| all_at_least_two(front, m);
    let mut w = Q::zero();
    // −1: 𝒞′_{k−2}2
    if last == 2 && k >= 2 && front_in(k - 2) {
        w -= q(1);
    }
    // +1/2: 𝒞′_{k−2}z, z ≥ 4
    if last >= 4 && k >= 2 && front_in(k - 2) {
        w += q_frac(1, 2);
    }
    // −1/2: 𝒞′_{k−i}i, 3 ≤ i ≤ k
    if (3..=k).contains(&last) && front_in(k - last) {
        w -= q_frac(1, 2);
    }
    // +1: 𝒞′_{k+1−i}i for 3 ≤ i ≤ k+1, and 𝒞′_{k−1}
    if (3..=k + 1).contains(&last) && front_in(k + 1 - last) {
        w += q(1);
    }
    if all_at_least_two(alpha, k - 1) {
        w += q(1);
    }
    // +5/8
    let count = match reading {
        Lemma41Reading::Prefixes => (3..=k)
            .filter(|&i| last >= i + 2 && front_in(k - i))
            .count(),
        Lemma41Reading::Printed => {
            if all_at_least_two(alpha, k + 2) {
                (3..=k).filter(|&i| last >= i + 2).count()
            } else {
                0
            }
        }
        Lemma41Reading::Classes => unreachable!(),
    };
    w + q_frac(5, 8) * q(count as i64)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 3 || n < 2 * k {
        return Err(Error::InvalidArgument(format!("need k >= 3 and n >= 2k, got n={n}, k={k}")));
    }
    Ok(())
}

/// The three readings at once, for every κ ⊢ n.
pub fn lemma41_reading_values(
    n: usize,
    k: usize,
) -> Result<BTreeMap<Partition, BTreeMap<Lemma41Reading, Q>>> {
    check_nk(n, k)?;
    let half = q_frac(1, 2);
    let mut out = BTreeMap::new();
    for kappa in partitions(n) {
        let mut vals: BTreeMap<Lemma41Reading, Q> = [
            (Lemma41Reading::Classes, Q::zero()),
            (Lemma41Reading::Prefixes, Q::zero()),
            (Lemma41Reading::Printed, Q::zero()),
        ]
        .into_iter()
        .collect();
        for y in enumerate_y(&kappa, None, None)? {
            let mass = weight_m(&y)? * &half;
            let tau = y.run_type();
            let class = classify_ribbon(&tau.conjugate(), k).ok_or_else(|| {
                Error::InvalidArgument(format!("τ^∼ of {y} is not in 𝒞_{n}"))
            })?;
            *vals.get_mut(&Lemma41Reading::Classes).unwrap() +=
                ribbon_class_coefficient(class) * &mass;
            for reading in [Lemma41Reading::Prefixes, Lemma41Reading::Printed] {
                let mut c = Q::zero();
                for j in 1..=tau.len() {
                    c += prefix_weight(&tau.parts()[..j], k, reading);
                }
                *vals.get_mut(&reading).unwrap() += c * &mass;
            }
        }
        out.insert(kappa, vals);
    }
    Ok(out)
}

/// [s_κ]E_{n,k} from the class decomposition of 𝒴(κ).
pub fn schur_coeff_e(n: usize, k: usize, kappa: &Partition) -> Result<Q> {
    check_nk(n, k)?;
    if kappa.size() != n {
        return Err(Error::ModulusMismatch {
            left: kappa.size(),
            right: n,
        });
    }
    let half = q_frac(1, 2);
    let mut total = Q::zero();
    for y in enumerate_y(kappa, None, None)? {
        let class = classify_ribbon(&y.run_type().conjugate(), k)
            .ok_or_else(|| Error::InvalidArgument(format!("τ^∼ of {y} is not in 𝒞_{n}")))?;
        total += ribbon_class_coefficient(class) * weight_m(&y)? * &half;
    }
    Ok(total)
}

#[derive(Clone, Debug)]
pub struct Lemma41Row {
    pub kappa: Partition,
    pub ground_truth: Q,
    pub classes: Q,
    pub prefixes: Q,
    pub printed: Q,
}

#[derive(Clone, Debug)]
pub struct Lemma41Report {
    pub n: usize,
    pub k: usize,
    /// R-coefficients of Ẽ_{n,k} equal c(I)·m^I/2 for every I.
    pub ribbon_coefficients_match: bool,
    pub rows: Vec<Lemma41Row>,
    pub classes_match: bool,
    pub prefixes_match: bool,
    pub printed_match: bool,
}

impl Lemma41Report {
    /// The class and prefix readings agree with ground truth.
    pub fn passed(&self) -> bool {
        self.ribbon_coefficients_match && self.classes_match && self.prefixes_match
    }
}

/// Checks each reading against [s_κ] of E_{n,k} computed commutatively.
pub fn verify_lemma41(n: usize, k: usize) -> Result<Lemma41Report> {
    check_nk(n, k)?;
    let et = e_tilde(n, k)?;
    debug_assert_eq!(et.basis(), NSymBasis::R);
    let mut ribbon_ok = true;
    for i in enumerate_compositions(n, Family::All) {
        let want = match classify_ribbon(&i, k) {
            Some(c) => {
                ribbon_class_coefficient(c) * q(1i64 << i.m_exponent()) * q_frac(1, 2)
            }
            None => Q::zero(),
        };
        if et.coeff(&i) != want {
            ribbon_ok = false;
        }
    }
    let truth = e_commutative(n, k)?.to_basis(SymBasis::S);
    let values = lemma41_reading_values(n, k)?;
    let mut rows = Vec::new();
    for (kappa, vals) in values {
        rows.push(Lemma41Row {
            ground_truth: truth.coeff(&kappa),
            classes: vals[&Lemma41Reading::Classes].clone(),
            prefixes: vals[&Lemma41Reading::Prefixes].clone(),
            printed: vals[&Lemma41Reading::Printed].clone(),
            kappa,
        });
    }
    let all = |f: fn(&Lemma41Row) -> &Q| rows.iter().all(|r| f(r) == &r.ground_truth);
    Ok(Lemma41Report {
        n,
        k,
        ribbon_coefficients_match: ribbon_ok,
        classes_match: all(|r| &r.classes),
        prefixes_match: all(|r| &r.prefixes),
        printed_match: all(|r| &r.printed),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classes_partition_c_n() {
        for n in 6..=10 {
            for k in 3..=n / 2 {
                for i in enumerate_compositions(n, Family::C) {
                    assert!(classify_ribbon(&i, k).is_some(), "{i} k={k}");
                }
            }
        }
        assert_eq!(classify_ribbon(&comp(&[1, 2, 2, 1]), 3), Some(Lemma41Class::I5));
        assert_eq!(classify_ribbon(&comp(&[2, 2, 1, 1]), 3), Some(Lemma41Class::I3));
        assert_eq!(classify_ribbon(&comp(&[1, 1, 1, 2, 1]), 4), Some(Lemma41Class::I2));
        assert_eq!(classify_ribbon(&comp(&[1, 1, 1, 1, 1, 1]), 3), Some(Lemma41Class::I4));
        assert_eq!(classify_ribbon(&comp(&[2, 2, 2, 1]), 3), Some(Lemma41Class::I5));
        assert_eq!(classify_ribbon(&comp(&[1, 1, 2, 2, 1]), 4), Some(Lemma41Class::I1));
        assert_eq!(classify_ribbon(&comp(&[2, 2]), 3), None);
    }

    #[test]
    fn small_cases_agree_with_ground_truth() {
        for (n, k) in [(6, 3), (7, 3), (8, 4)] {
            let r = verify_lemma41(n, k).unwrap();
            assert!(r.passed(), "n={n} k={k}: {r:?}");
        }
    }

    #[test]
    fn single_kappa_entry_point() {
        let truth = e_commutative(6, 3).unwrap().to_basis(SymBasis::S);
        for kappa in partitions(6) {
            assert_eq!(schur_coeff_e(6, 3, &kappa).unwrap(), truth.coeff(&kappa));
        }
        assert!(schur_coeff_e(5, 3, &Partition::new(vec![5]).unwrap()).is_err());
    }
}

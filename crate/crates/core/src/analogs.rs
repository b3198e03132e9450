//! Noncommutative analogs of X_{P_n}, the A/B split, and the differences D and E.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::{enumerate_compositions, Composition, Family};
use crate::combinatorics::hooks::{factor_starts, hook_decompositions};
use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};
use crate::graphs::{csf_powersum, SimpleGraph};
use crate::nsym::{NSymBasis, NSymElement};
use crate::rational::{q, q_pow2, Q};
use crate::sym::{SymBasis, SymElement};

/// The three expansions of the path analog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathForm {
    Psi,
    Lambda,
    Ribbon,
}

impl std::str::FromStr for PathForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" | "Psi" => Ok(PathForm::Psi),
            "lambda" | "Lambda" => Ok(PathForm::Lambda),
            "ribbon" | "R" | "r" => Ok(PathForm::Ribbon),
            _ => Err(Error::InvalidArgument(format!("unknown path form {s:?}"))),
        }
    }
}

/// X̃_{P_n} in the requested form.
pub fn xtilde_path(n: usize, form: PathForm) -> Result<NSymElement> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let terms: Vec<(Composition, Q)> = match form {
        PathForm::Psi => enumerate_compositions(n, Family::All)
            .into_iter()
            .map(|i| {
                let s = i.sign();
                (i, q(s as i64))
            })
            .collect(),
        PathForm::Lambda => enumerate_compositions(n, Family::All)
            .into_iter()
            .filter_map(|i| {
                let c = lambda_weight(&i, true);
                (c != 0).then(|| (i, q(c)))
            })
            .collect(),
        PathForm::Ribbon => enumerate_compositions(n, Family::C)
            .into_iter()
            .map(|i| {
                let c = q_pow2(i.m_exponent() as i64 - 1);
                (i, c)
            })
            .collect(),
    };
    let basis = match form {
        PathForm::Psi => NSymBasis::Psi,
        PathForm::Lambda => NSymBasis::Lambda,
        PathForm::Ribbon => NSymBasis::R,
    };
    NSymElement::from_terms(n, basis, terms)
}

/// i_1(i_2-1)...(i_l-1) when `first_full`, else (i_1-1)...(i_l-1).
fn lambda_weight(i: &Composition, first_full: bool) -> i64 {
    i.parts()
        .iter()
        .enumerate()
        .map(|(k, &p)| if k == 0 && first_full { p as i64 } else { p as i64 - 1 })
        .product()
}

/// |𝓗′(J)|: hook decompositions of J in which every second box of a
/// length-2 row starts a hook of size at least 2.
pub fn hook_partition_count(j: &Composition) -> Result<usize> {
    if !j.is_in(Family::C) {
        return Err(Error::InvalidArgument(format!("{j} is not in C_n")));
    }
    let mut tails = Vec::new();
    let mut pos = 0;
    for &p in j.parts() {
        if p == 2 {
            tails.push(pos + 2);
        }
        pos += p;
    }
    Ok(hook_decompositions(j)
        .into_iter()
        .filter(|d| {
            let starts = factor_starts(d);
            tails.iter().all(|t| {
                starts
                    .iter()
                    .position(|s| s == t)
                    .is_some_and(|k| d.factors[k].modulus() >= 2)
            })
        })
        .count())
}

/// Ã_n in the Λ basis.
pub fn a_tilde(n: usize) -> NSymElement {
    let terms = enumerate_compositions(n, Family::All)
        .into_iter()
        .filter_map(|i| {
            let c = lambda_weight(&i, false);
            (c != 0).then(|| (i, q(c)))
        });
    NSymElement::from_terms(n, NSymBasis::Lambda, terms).expect("compositions of n")
}

/// B̃_n in the ribbon basis, supported on 𝒞″_n.
pub fn b_tilde(n: usize) -> Result<NSymElement> {
    if n < 2 {
        return Err(Error::InvalidArgument("B̃_n needs n >= 2".into()));
    }
    let terms = enumerate_compositions(n, Family::CDoublePrime).into_iter().map(|j| {
        let m1 = j.m_exponent() as i64;
        let t1 = j.conjugate().last().unwrap();
        let c = if t1 == 2 { q_pow2(m1 - 1) } else { q(3) * q_pow2(m1 - 3) };
        (j, c)
    });
    NSymElement::from_terms(n, NSymBasis::R, terms)
}

/// The prefix formula ½Σ_{12⋯} m^I R_I + ⅜Σ_{11⋯} m^I R_I, read literally.
pub fn b_tilde_prefix_formula(n: usize) -> NSymElement {
    let terms = enumerate_compositions(n, Family::C).into_iter().filter_map(|i| {
        let p = i.parts();
        let m = q_pow2(i.m_exponent() as i64);
        match (p.first(), p.get(1)) {
            (Some(1), Some(2)) => Some((i.clone(), m * crate::rational::q_frac(1, 2))),
            (Some(1), Some(1)) => Some((i.clone(), m * crate::rational::q_frac(3, 8))),
            _ => None,
        }
    });
    NSymElement::from_terms(n, NSymBasis::R, terms).expect("compositions of n")
}

/// (Ã_n, B̃_n).
pub fn ab_tilde(n: usize) -> Result<(NSymElement, NSymElement)> {
    Ok((a_tilde(n), b_tilde(n)?))
}

/// (D̃_{n,k} in Λ, Ẽ_{n,k} in R).
pub fn de_tilde(n: usize, k: usize) -> Result<(NSymElement, NSymElement)> {
    Ok((d_tilde(n, k)?, e_tilde(n, k)?))
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

pub fn d_tilde(n: usize, k: usize) -> Result<NSymElement> {
    check_range(n, k)?;
    let prod = xtilde_path(n - k, PathForm::Lambda)?.multiply(&a_tilde(k))?;
    xtilde_path(n, PathForm::Lambda)?.sub(&prod)
}

pub fn e_tilde(n: usize, k: usize) -> Result<NSymElement> {
    check_range(n, k)?;
    if k < 2 {
        return Err(Error::InvalidArgument("Ẽ_{n,k} needs k >= 2".into()));
    }
    let prod = xtilde_path(n - k, PathForm::Ribbon)?.multiply(&b_tilde(k)?)?;
    xtilde_path(n, PathForm::Ribbon)?.sub(&prod)
}

/// X_{P_n} in the e basis, from the power-sum oracle; X_{P_0} = 1.
pub fn path_csf_e(n: usize) -> Arc<SymElement> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<SymElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(x) = cache.read().unwrap().get(&n) {
        return x.clone();
    }
    let x = if n == 0 {
        SymElement::basis_element(SymBasis::E, Partition::empty())
    } else {
        csf_powersum(&SimpleGraph::path(n).unwrap(), usize::MAX)
            .expect("paths are within any cap")
            .to_basis(SymBasis::E)
    };
    let arc = Arc::new(x);
    cache.write().unwrap().insert(n, arc.clone());
    arc
}

/// (A_{n-1}, B_n) from X_{P_n} = e_1 A_{n-1} + B_n with [e_1]B_n = 0, in the e basis.
pub fn ab_commutative(n: usize) -> (SymElement, SymElement) {
    let x = path_csf_e(n);
    let mut a = SymElement::zero(n.saturating_sub(1), SymBasis::E);
    let mut b = SymElement::zero(n, SymBasis::E);
    for (lam, c) in x.coeffs() {
        if lam.contains_part(1) {
            let mut parts = lam.parts().to_vec();
            parts.pop();
            a.add_term(Partition::new(parts).unwrap(), c.clone());
        } else {
            b.add_term(lam.clone(), c.clone());
        }
    }
    (a, b)
}

/// E_{n,k} = X_{P_n} - X_{P_{n-k}} B_k, in the e basis.
pub fn e_commutative(n: usize, k: usize) -> Result<SymElement> {
    check_range(n, k)?;
    let (_, bk) = ab_commutative(k);
    path_csf_e(n).sub(&path_csf_e(n - k).multiply(&bk)?)
}

/// D_{n,k} = X_{P_n} - X_{P_{n-k}} A_k, in the e basis.
pub fn d_commutative(n: usize, k: usize) -> Result<SymElement> {
    check_range(n, k)?;
    let (ak, _) = ab_commutative(k + 1);
    path_csf_e(n).sub(&path_csf_e(n - k).multiply(&ak)?)
}

/// [e_λ]X_{P_n} = Σ over distinct rearrangements α of λ of (α_1-1)⋯(α_{l-1}-1)α_l.
pub fn path_e_coefficient(lambda: &Partition, n: usize) -> Result<i64> {
    if lambda.size() != n {
        return Err(Error::ModulusMismatch {
            left: lambda.size(),
            right: n,
        });
    }
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    let mut total = 0i64;
    loop {
        let l = parts.len();
        let mut term = parts[l - 1] as i64;
        for &a in &parts[..l - 1] {
            term *= a as i64 - 1;
        }
        total += term;
        if !next_permutation(&mut parts) {
            break;
        }
    }
    Ok(total)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Brute-force sums over compositions with all parts ≥ 2 of Π(c_i-1) and of c_1Π_{i≥2}(c_i-1).
pub fn lemma33_sums(n: usize) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let mut f = 0u64;
    let mut g = 0u64;
    for c in enumerate_compositions(n, Family::CPrime) {
        let p = c.parts();
        let tail: u64 = p[1..].iter().map(|&x| x as u64 - 1).product();
        f += (p[0] as u64 - 1) * tail;
        g += p[0] as u64 * tail;
    }
    Ok((f, g))
}

/// Closed forms 2^{n-2} and (2 if n = 2 else 3·2^{n-3}).
pub fn lemma33_closed_forms(n: usize) -> (u64, u64) {
    let f = 1u64 << (n - 2);
    let g = if n == 2 { 2 } else { 3u64 << (n - 3) };
    (f, g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor36Report {
    pub n: usize,
    pub k: usize,
    /// e-expansion of X_{P_n} - (k-1)e_k X_{P_{n-k}}, or X_{P_n} - n e_n when k = n.
    pub difference: SymElement,
    pub e_positive: bool,
}

pub fn corollary36_checks(n: usize, k: usize) -> Result<Cor36Report> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let x = path_csf_e(n);
    let ek = SymElement::basis_element(SymBasis::E, Partition::new(vec![k]).unwrap());
    let difference = if k == n {
        x.sub(&ek.scale(&q(n as i64)))?
    } else {
        x.sub(&ek.multiply(&path_csf_e(n - k))?.scale(&q(k as i64 - 1)))?
    };
    let e_positive = difference.is_positive();
    Ok(Cor36Report {
        n,
        k,
        difference,
        e_positive,
    })
}

/// [e_{kk}](X_{P_{2k}} - k e_k X_{P_k}).
pub fn corollary36_sharpness(k: usize) -> Result<Q> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let ek = SymElement::basis_element(SymBasis::E, Partition::new(vec![k]).unwrap());
    let diff = path_csf_e(2 * k).sub(&ek.multiply(&path_csf_e(k))?.scale(&q(k as i64)))?;
    Ok(diff.coeff(&Partition::new(vec![k, k]).unwrap()))
}

/// Agreement of the three expansions of X̃_{P_n} under ρ with the oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm31Report {
    pub n: usize,
    pub psi_eq_lambda: bool,
    pub psi_eq_ribbon: bool,
    pub matches_powersum: bool,
    /// Checked only when n is small enough for the coloring count.
    pub matches_colorings: Option<bool>,
}

impl Thm31Report {
    pub fn passed(&self) -> bool {
        self.psi_eq_lambda
            && self.psi_eq_ribbon
            && self.matches_powersum
            && self.matches_colorings.unwrap_or(true)
    }
}

pub fn verify_thm31(n: usize) -> Result<Thm31Report> {
    let psi = xtilde_path(n, PathForm::Psi)?.project_rho();
    let lambda = xtilde_path(n, PathForm::Lambda)?.project_rho();
    let ribbon = xtilde_path(n, PathForm::Ribbon)?.project_rho();
    let g = SimpleGraph::path(n)?;
    let oracle = csf_powersum(&g, usize::MAX)?.to_monomial();
    let matches_colorings = if n <= 7 {
        Some(crate::graphs::csf_colorings(&g)? == psi)
    } else {
        None
    };
    Ok(Thm31Report {
        n,
        psi_eq_lambda: psi == lambda,
        psi_eq_ribbon: psi == ribbon,
        matches_powersum: psi == oracle,
        matches_colorings,
    })
}

/// ρ(Ã_n) and ρ(B̃_n) in the e basis.
pub fn ab_rho(n: usize) -> Result<(SymElement, SymElement)> {
    let (a, b) = ab_tilde(n)?;
    Ok((rho_lambda_to_e(&a), b.project_rho().to_basis(SymBasis::E)))
}

/// D̃_{n,k} has only nonnegative Λ-coefficients.
pub fn d_tilde_lambda_positive(n: usize, k: usize) -> Result<bool> {
    Ok(d_tilde(n, k)?.is_positive())
}

/// True iff no partial sum of `i` equals `target`.
pub fn avoids_prefix_sum(i: &Composition, target: usize) -> bool {
    let mut acc = 0;
    for &p in i.parts() {
        acc += p;
        if acc == target {
            return false;
        }
    }
    true
}

/// Coefficient map of an NSym element projected to Sym, in the e basis when
/// the element is in Λ (exact, no conversion through monomials).
pub fn rho_lambda_to_e(f: &NSymElement) -> SymElement {
    assert_eq!(f.basis(), NSymBasis::Lambda);
    let mut out = SymElement::zero(f.weight(), SymBasis::E);
    for (i, c) in f.coeffs() {
        out.add_term(i.sorted(), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_paths() {
        let x2 = xtilde_path(2, PathForm::Ribbon).unwrap();
        assert_eq!(x2.coeff(&c(&[1, 1])), q(2));
        assert_eq!(x2.len(), 1);
        let x3 = xtilde_path(3, PathForm::Lambda).unwrap();
        assert_eq!(x3.len(), 2);
        assert_eq!(x3.coeff(&c(&[3])), q(3));
        assert_eq!(x3.coeff(&c(&[1, 2])), q(1));
        let e = rho_lambda_to_e(&x3);
        assert_eq!(e.coeff(&p(&[3])), q(3));
        assert_eq!(e.coeff(&p(&[2, 1])), q(1));
    }

    #[test]
    fn hook_counts() {
        assert_eq!(hook_partition_count(&c(&[1])).unwrap(), 1);
        assert_eq!(hook_partition_count(&c(&[2, 1])).unwrap(), 1);
        assert_eq!(hook_partition_count(&c(&[1, 2, 1])).unwrap(), 2);
        assert!(hook_partition_count(&c(&[1, 2])).is_err());
    }

    #[test]
    fn small_a_b() {
        assert!(a_tilde(1).is_zero());
        let (a2, b2) = ab_tilde(2).unwrap();
        assert_eq!(rho_lambda_to_e(&a2).coeff(&p(&[2])), q(1));
        assert_eq!(b2.coeff(&c(&[1, 1])), q(2));
        assert_eq!(b_tilde_prefix_formula(2).coeff(&c(&[1, 1])), crate::rational::q_frac(3, 2));
    }

    #[test]
    fn sw16_examples() {
        assert_eq!(path_e_coefficient(&p(&[3]), 3).unwrap(), 3);
        assert_eq!(path_e_coefficient(&p(&[2, 1]), 3).unwrap(), 1);
        assert_eq!(path_e_coefficient(&p(&[3, 3]), 6).unwrap(), 6);
        assert!(path_e_coefficient(&p(&[2]), 3).is_err());
    }

    #[test]
    fn lemma33_examples() {
        assert_eq!(lemma33_sums(2).unwrap(), (1, 2));
        assert_eq!(lemma33_sums(3).unwrap(), (2, 3));
        assert_eq!(lemma33_sums(6).unwrap(), (16, 24));
        assert!(lemma33_sums(1).is_err());
    }

    #[test]
    fn corollary_examples() {
        assert!(corollary36_checks(6, 2).unwrap().e_positive);
        assert!(corollary36_checks(5, 5).unwrap().e_positive);
        assert_eq!(corollary36_sharpness(3).unwrap(), q(-3));
    }

    #[test]
    fn ranges() {
        assert!(de_tilde(5, 5).is_err());
        assert!(de_tilde(5, 0).is_err());
        assert!(xtilde_path(0, PathForm::Psi).is_err());
    }
}

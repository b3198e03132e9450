//! Homogeneous symmetric functions with exact rational coefficients.
//!
//! Every conversion passes through the monomial basis.

pub mod tables;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::Composition;
use crate::combinatorics::kostka::kostka_column;
use crate::combinatorics::partition::Partition;
use crate::combinatorics::shape::SkewShape;
use crate::combinatorics::word::Word;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};
use tables::{generator_matrix, index, kostka_matrix, Gen};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymBasis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
}

impl SymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::E => "e",
            SymBasis::H => "h",
            SymBasis::P => "p",
            SymBasis::S => "s",
        }
    }
}

impl std::str::FromStr for SymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "monomial" => Ok(SymBasis::Monomial),
            "e" | "elementary" => Ok(SymBasis::E),
            "h" | "homogeneous" => Ok(SymBasis::H),
            "p" | "power" | "powersum" => Ok(SymBasis::P),
            "s" | "schur" => Ok(SymBasis::S),
            _ => Err(Error::InvalidArgument(format!("unknown basis {s:?}"))),
        }
    }
}

/// A homogeneous symmetric function of a fixed degree in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    degree: usize,
    basis: SymBasis,
    coeffs: BTreeMap<Partition, Q>,
}

impl SymElement {
    pub fn zero(degree: usize, basis: SymBasis) -> Self {
        SymElement {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element b_λ.
    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        let mut e = SymElement::zero(lambda.size(), basis);
        e.coeffs.insert(lambda, Q::one());
        e
    }

    pub fn from_terms(
        degree: usize,
        basis: SymBasis,
        terms: impl IntoIterator<Item = (Partition, Q)>,
    ) -> Result<Self> {
        let mut e = SymElement::zero(degree, basis);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::ModulusMismatch {
                    left: degree,
                    right: lam.size(),
                });
            }
            e.add_term(lam, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.symbol().into(),
                found: other.basis.symbol().into(),
            });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::ModulusMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = other.degree;
        }
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymElement) -> Result<SymElement> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymElement {
        let mut out = SymElement::zero(self.degree, self.basis);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        out
    }

    /// Expansion in the monomial basis.
    pub fn to_monomial(&self) -> SymElement {
        let n = self.degree;
        let mut dense = vec![Q::zero(); index(n).parts.len()];
        let ix = index(n);
        match self.basis {
            SymBasis::Monomial => return self.clone(),
            SymBasis::E | SymBasis::P => {
                let gen = if self.basis == SymBasis::E { Gen::E } else { Gen::P };
                let mat = generator_matrix(gen, n);
                for (lam, c) in &self.coeffs {
                    let row = &mat[ix.pos[lam]];
                    for (j, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            dense[j] += c * Q::from_integer(v.clone());
                        }
                    }
                }
            }
            SymBasis::S => {
                let k = kostka_matrix(n);
                for (lam, c) in &self.coeffs {
                    for (j, v) in k[ix.pos[lam]].iter().enumerate() {
                        if *v != 0 {
                            dense[j] += c * Q::from_integer(BigInt::from(*v));
                        }
                    }
                }
            }
            SymBasis::H => {
                // h_λ = Σ_ν K_{νλ} s_ν
                let k = kostka_matrix(n);
                let mut schur = vec![Q::zero(); ix.parts.len()];
                for (lam, c) in &self.coeffs {
                    let j = ix.pos[lam];
                    for (i, row) in k.iter().enumerate() {
                        if row[j] != 0 {
                            schur[i] += c * Q::from_integer(BigInt::from(row[j]));
                        }
                    }
                }
                for (i, c) in schur.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, v) in k[i].iter().enumerate() {
                        if *v != 0 {
                            dense[j] += c * Q::from_integer(BigInt::from(*v));
                        }
                    }
                }
            }
        }
        from_dense(n, SymBasis::Monomial, dense)
    }

    /// Expansion in `target`, through the monomial basis.
    pub fn to_basis(&self, target: SymBasis) -> SymElement {
        if self.basis == target {
            return self.clone();
        }
        let m = self.to_monomial();
        match target {
            SymBasis::Monomial => m,
            SymBasis::S => monomial_to_schur(&m),
            SymBasis::E => monomial_to_e(&m),
            SymBasis::P => monomial_to_p(&m),
            SymBasis::H => monomial_to_h(&m),
        }
    }

    /// Product. Multiplicative bases multiply by union of indices; otherwise
    /// both factors must share a basis and the product is returned in it.
    pub fn multiply(&self, other: &SymElement) -> Result<SymElement> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.symbol().into(),
                found: other.basis.symbol().into(),
            });
        }
        match self.basis {
            SymBasis::E | SymBasis::H | SymBasis::P => Ok(multiplicative_product(self, other)),
            SymBasis::Monomial | SymBasis::S => {
                let a = self.to_basis(SymBasis::E);
                let b = other.to_basis(SymBasis::E);
                Ok(multiplicative_product(&a, &b).to_basis(self.basis))
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Lexicographically smallest index with a negative coefficient.
    pub fn negative_witness(&self) -> Option<(Partition, Q)> {
        self.coeffs
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(k, c)| (k.clone(), c.clone()))
    }
}

fn multiplicative_product(a: &SymElement, b: &SymElement) -> SymElement {
    let mut out = SymElement::zero(a.degree + b.degree, a.basis);
    for (la, ca) in &a.coeffs {
        for (lb, cb) in &b.coeffs {
            out.add_term(la.union(lb), ca * cb);
        }
    }
    out
}

fn to_dense(m: &SymElement) -> Vec<Q> {
    let ix = index(m.degree);
    let mut dense = vec![Q::zero(); ix.parts.len()];
    for (lam, c) in &m.coeffs {
        dense[ix.pos[lam]] = c.clone();
    }
    dense
}

fn from_dense(n: usize, basis: SymBasis, dense: Vec<Q>) -> SymElement {
    let ix = index(n);
    let mut out = SymElement::zero(n, basis);
    for (i, c) in dense.into_iter().enumerate() {
        if !c.is_zero() {
            out.coeffs.insert(ix.parts[i].clone(), c);
        }
    }
    out
}

/// Back substitution with s_λ = m_λ + (dominance-lower terms).
fn monomial_to_schur(m: &SymElement) -> SymElement {
    let n = m.degree;
    let k = kostka_matrix(n);
    let mut f = to_dense(m);
    let mut out = vec![Q::zero(); f.len()];
    for i in 0..f.len() {
        if f[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut f[i]);
        for j in i + 1..f.len() {
            if k[i][j] != 0 {
                f[j] -= &c * Q::from_integer(BigInt::from(k[i][j]));
            }
        }
        out[i] = c;
    }
    from_dense(n, SymBasis::S, out)
}

/// Back substitution with e_{λ'} = m_λ + (dominance-lower terms).
fn monomial_to_e(m: &SymElement) -> SymElement {
    let n = m.degree;
    let ix = index(n);
    let mat = generator_matrix(Gen::E, n);
    let mut f = to_dense(m);
    let mut out = vec![Q::zero(); f.len()];
    for i in 0..f.len() {
        if f[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut f[i]);
        let row = ix.pos[&ix.parts[i].conjugate()];
        for j in i + 1..f.len() {
            let v = &mat[row][j];
            if !v.is_zero() {
                f[j] -= &c * Q::from_integer(v.clone());
            }
        }
        out[row] = c;
    }
    from_dense(n, SymBasis::E, out)
}

/// p_λ = z-type leading term on m_λ plus coarser terms; solve from the finest end.
fn monomial_to_p(m: &SymElement) -> SymElement {
    let n = m.degree;
    let mat = generator_matrix(Gen::P, n);
    let mut f = to_dense(m);
    let mut out = vec![Q::zero(); f.len()];
    for i in (0..f.len()).rev() {
        if f[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut f[i]) / Q::from_integer(mat[i][i].clone());
        for j in 0..i {
            let v = &mat[i][j];
            if !v.is_zero() {
                f[j] -= &c * Q::from_integer(v.clone());
            }
        }
        out[i] = c;
    }
    from_dense(n, SymBasis::P, out)
}

/// h_λ = s_λ + (dominance-higher Schur terms).
fn monomial_to_h(m: &SymElement) -> SymElement {
    let n = m.degree;
    let k = kostka_matrix(n);
    let mut f = to_dense(&monomial_to_schur(m));
    let mut out = vec![Q::zero(); f.len()];
    for j in (0..f.len()).rev() {
        if f[j].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut f[j]);
        for (i, row) in k.iter().enumerate().take(j) {
            if row[j] != 0 {
                f[i] -= &c * Q::from_integer(BigInt::from(row[j]));
            }
        }
        out[j] = c;
    }
    from_dense(n, SymBasis::H, out)
}

/// e_k, h_k or p_k in the monomial basis.
pub fn generator_in_monomials(basis: SymBasis, k: usize) -> Result<SymElement> {
    if k == 0 {
        return Err(Error::InvalidArgument("generator index must be positive".into()));
    }
    match basis {
        SymBasis::E | SymBasis::H | SymBasis::P => {
            Ok(SymElement::basis_element(basis, Partition::from_sorted_vec(vec![k])).to_monomial())
        }
        _ => Err(Error::InvalidArgument(format!(
            "{} is not a generator family",
            basis.symbol()
        ))),
    }
}

/// s_{λ/μ} in the monomial basis.
pub fn schur_in_monomials(shape: &SkewShape) -> SymElement {
    let n = shape.size();
    let ix = index(n);
    let mut out = SymElement::zero(n, SymBasis::Monomial);
    for mu in &ix.parts {
        let col = kostka_column(shape.inner(), mu.parts());
        if let Some(&c) = col.get(shape.outer()) {
            out.add_term(mu.clone(), Q::from_integer(BigInt::from(c)));
        }
    }
    out
}

/// Schur coefficients of a monomial-basis element.
pub fn to_schur_coeffs(f: &SymElement) -> Result<SymElement> {
    require_monomial(f)?;
    Ok(monomial_to_schur(f))
}

/// e-coefficients of a monomial-basis element.
pub fn to_e_coeffs(f: &SymElement) -> Result<SymElement> {
    require_monomial(f)?;
    Ok(monomial_to_e(f))
}

fn require_monomial(f: &SymElement) -> Result<()> {
    if f.basis != SymBasis::Monomial {
        return Err(Error::BasisMismatch {
            expected: "m".into(),
            found: f.basis.symbol().into(),
        });
    }
    Ok(())
}

/// e_λ = Σ_μ K_{μ'λ} s_μ
pub fn e_to_schur(lambda: &Partition) -> SymElement {
    let n = lambda.size();
    let ix = index(n);
    let mut out = SymElement::zero(n, SymBasis::S);
    let col = kostka_column(&Partition::empty(), lambda.parts());
    for mu in &ix.parts {
        if let Some(&c) = col.get(&mu.conjugate()) {
            out.add_term(mu.clone(), Q::from_integer(BigInt::from(c)));
        }
    }
    out
}

/// [s_ν] s_{sh(I)}, counted as Yamanouchi words of shape sh(I) and content ν.
pub fn ribbon_schur_coefficient(i: &Composition, nu: &Partition) -> Result<u64> {
    if i.modulus() != nu.size() {
        return Err(Error::ModulusMismatch {
            left: i.modulus(),
            right: nu.size(),
        });
    }
    let target = i.conjugate();
    let mut count = 0u64;
    let mut used = vec![0usize; nu.len()];
    let mut word = Vec::with_capacity(i.modulus());
    yam_rec(nu.parts(), &mut used, &mut word, &target, &mut count);
    Ok(count)
}

fn yam_rec(nu: &[usize], used: &mut [usize], word: &mut Vec<u8>, target: &Composition, count: &mut u64) {
    if word.len() == nu.iter().sum::<usize>() {
        if Word::from_letters(word.clone()).run_type() == *target {
            *count += 1;
        }
        return;
    }
    for v in 0..nu.len() {
        if used[v] == nu[v] || (v > 0 && used[v] == used[v - 1]) {
            continue;
        }
        used[v] += 1;
        word.push(v as u8 + 1);
        yam_rec(nu, used, word, target, count);
        word.pop();
        used[v] -= 1;
    }
}

/// Positivity class of a symmetric function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityClass {
    EPositive,
    SchurPositive,
    NotSchurPositive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub class: PositivityClass,
    /// Lexicographically smallest negative coefficient in the deciding basis.
    pub witness: Option<(SymBasis, Partition, Q)>,
}

pub fn positivity_report(f: &SymElement) -> PositivityReport {
    let s = f.to_basis(SymBasis::S);
    if let Some((lam, c)) = s.negative_witness() {
        return PositivityReport {
            class: PositivityClass::NotSchurPositive,
            witness: Some((SymBasis::S, lam, c)),
        };
    }
    let e = f.to_basis(SymBasis::E);
    match e.negative_witness() {
        Some((lam, c)) => PositivityReport {
            class: PositivityClass::SchurPositive,
            witness: Some((SymBasis::E, lam, c)),
        },
        None => PositivityReport {
            class: PositivityClass::EPositive,
            witness: None,
        },
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (k, (lam, c)) in self.coeffs.iter().rev().enumerate() {
            let idx: String = if lam.parts().iter().all(|&p| p < 10) {
                lam.parts().iter().map(|p| p.to_string()).collect()
            } else {
                lam.to_string()
            };
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "{sym}{idx}")?;
            } else {
                write!(f, "{}{sym}{idx}", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub index: Vec<usize>,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize)]
struct SymJson {
    degree: usize,
    basis: SymBasis,
    terms: Vec<TermJson>,
}

pub(crate) fn term_json(index: Vec<usize>, c: &Q) -> TermJson {
    TermJson {
        index,
        num: c.numer().to_string(),
        den: c.denom().to_string(),
    }
}

pub(crate) fn term_value(t: &TermJson) -> Result<Q> {
    parse_q(&format!("{}/{}", t.num, t.den))
}

impl Serialize for SymElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .rev()
                .map(|(k, v)| term_json(k.parts().to_vec(), v))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = SymJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in &j.terms {
            let lam = Partition::new(t.index.clone()).map_err(D::Error::custom)?;
            terms.push((lam, term_value(t).map_err(D::Error::custom)?));
        }
        SymElement::from_terms(j.degree, j.basis, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn elem(basis: SymBasis, terms: &[(&[usize], i64)]) -> SymElement {
        let n = terms.first().map_or(0, |t| t.0.iter().sum());
        SymElement::from_terms(n, basis, terms.iter().map(|(l, c)| (p(l), q(*c)))).unwrap()
    }

    #[test]
    fn generators_in_monomials() {
        let m = SymBasis::Monomial;
        assert_eq!(generator_in_monomials(SymBasis::E, 2).unwrap(), elem(m, &[(&[1, 1], 1)]));
        assert_eq!(generator_in_monomials(SymBasis::P, 2).unwrap(), elem(m, &[(&[2], 1)]));
        assert_eq!(
            generator_in_monomials(SymBasis::H, 2).unwrap(),
            elem(m, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert!(generator_in_monomials(SymBasis::S, 2).is_err());
    }

    #[test]
    fn schur_examples() {
        let m = SymBasis::Monomial;
        assert_eq!(schur_in_monomials(&SkewShape::straight(p(&[1, 1]))), elem(m, &[(&[1, 1], 1)]));
        assert_eq!(
            schur_in_monomials(&SkewShape::straight(p(&[2, 1]))),
            elem(m, &[(&[2, 1], 1), (&[1, 1, 1], 2)])
        );
        let skew = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        let s = to_schur_coeffs(&schur_in_monomials(&skew)).unwrap();
        assert_eq!(s, elem(SymBasis::S, &[(&[2, 1], 1)]));
    }

    #[test]
    fn e_to_schur_examples() {
        assert_eq!(e_to_schur(&p(&[1])), elem(SymBasis::S, &[(&[1], 1)]));
        assert_eq!(e_to_schur(&p(&[2])), elem(SymBasis::S, &[(&[1, 1], 1)]));
        assert_eq!(e_to_schur(&p(&[2, 1])), elem(SymBasis::S, &[(&[2, 1], 1), (&[1, 1, 1], 1)]));
        let e2 = SymElement::basis_element(SymBasis::E, p(&[2]));
        assert_eq!(e2.to_basis(SymBasis::S), e_to_schur(&p(&[2])));
    }

    #[test]
    fn round_trips() {
        for n in 1..=7 {
            for lam in index(n).parts.iter() {
                for b in [SymBasis::E, SymBasis::H, SymBasis::P, SymBasis::S, SymBasis::Monomial] {
                    let x = SymElement::basis_element(b, lam.clone());
                    let m = x.to_monomial();
                    for t in [SymBasis::E, SymBasis::H, SymBasis::P, SymBasis::S] {
                        assert_eq!(m.to_basis(t).to_monomial(), m, "{b:?}->{t:?} {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn products() {
        let e1 = SymElement::basis_element(SymBasis::E, p(&[1])).to_monomial();
        let sq = e1.multiply(&e1).unwrap();
        assert_eq!(sq, elem(SymBasis::Monomial, &[(&[2], 1), (&[1, 1], 2)]));
        let p11 = SymElement::basis_element(SymBasis::P, p(&[1, 1]));
        let p2 = SymElement::basis_element(SymBasis::P, p(&[2]));
        let x = p11.sub(&p2).unwrap().to_monomial();
        assert_eq!(x, elem(SymBasis::Monomial, &[(&[1, 1], 2)]));
        assert_eq!(x.to_basis(SymBasis::E), elem(SymBasis::E, &[(&[2], 2)]));
        assert!(e1.multiply(&p2).is_err());
    }

    #[test]
    fn ribbon_coefficients() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(ribbon_schur_coefficient(&c(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(ribbon_schur_coefficient(&c(&[1, 2]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(ribbon_schur_coefficient(&c(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert!(ribbon_schur_coefficient(&c(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = elem(SymBasis::S, &[(&[3, 1], 1), (&[2, 2], -1), (&[2, 1, 1], 5)]);
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with(r#"{"degree":4,"basis":"s","terms":[{"index":[3,1],"num":"1","den":"1"}"#));
        let y: SymElement = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert_eq!(serde_json::to_string(&y).unwrap(), s);
        assert_eq!(x.to_string(), "s31 - s22 + 5s211");
    }
}

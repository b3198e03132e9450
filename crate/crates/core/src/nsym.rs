//! Noncommutative symmetric functions in the bases Λ, S, Ψ and R.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::composition::{coarsenings, refinements, Composition};
use crate::combinatorics::hooks::{hooks_relative_to, lp};
use crate::combinatorics::shape::SkewShape;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};
use crate::sym::{schur_in_monomials, term_json, term_value, SymBasis, SymElement, TermJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NSymBasis {
    Lambda,
    S,
    Psi,
    R,
}

impl NSymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            NSymBasis::Lambda => "Lambda",
            NSymBasis::S => "S",
            NSymBasis::Psi => "Psi",
            NSymBasis::R => "R",
        }
    }
}

impl std::str::FromStr for NSymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Lambda" | "lambda" | "L" => Ok(NSymBasis::Lambda),
            "S" | "complete" => Ok(NSymBasis::S),
            "Psi" | "psi" => Ok(NSymBasis::Psi),
            "R" | "ribbon" => Ok(NSymBasis::R),
            _ => Err(Error::InvalidArgument(format!("unknown NSym basis {s:?}"))),
        }
    }
}

/// A homogeneous element of NSym.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSymElement {
    weight: usize,
    basis: NSymBasis,
    coeffs: BTreeMap<Composition, Q>,
}

impl NSymElement {
    pub fn zero(weight: usize, basis: NSymBasis) -> Self {
        NSymElement {
            weight,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(basis: NSymBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: NSymBasis, i: Composition) -> Self {
        let mut e = Self::zero(i.modulus(), basis);
        e.coeffs.insert(i, Q::one());
        e
    }

    pub fn from_terms(
        weight: usize,
        basis: NSymBasis,
        terms: impl IntoIterator<Item = (Composition, Q)>,
    ) -> Result<Self> {
        let mut e = Self::zero(weight, basis);
        for (i, c) in terms {
            if i.modulus() != weight {
                return Err(Error::ModulusMismatch {
                    left: weight,
                    right: i.modulus(),
                });
            }
            e.add_term(i, c);
        }
        Ok(e)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn basis(&self) -> NSymBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Composition, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, i: &Composition) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
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

    pub fn add_term(&mut self, i: Composition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(i) {
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

    fn check_basis(&self, other: &NSymElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.symbol().into(),
                found: other.basis.symbol().into(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &NSymElement) -> Result<NSymElement> {
        self.check_basis(other)?;
        if self.weight != other.weight && !self.is_zero() && !other.is_zero() {
            return Err(Error::ModulusMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.weight = other.weight;
        }
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NSymElement) -> Result<NSymElement> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> NSymElement {
        let mut out = Self::zero(self.weight, self.basis);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// Product: concatenation for Λ, S, Ψ; R_I R_J = R_{I◁J} + R_{I▷J} for R.
    pub fn multiply(&self, other: &NSymElement) -> Result<NSymElement> {
        self.check_basis(other)?;
        let mut out = Self::zero(self.weight + other.weight, self.basis);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let c = a * b;
                out.add_term(i.concat(j), c.clone());
                if self.basis == NSymBasis::R && !i.is_empty() && !j.is_empty() {
                    out.add_term(i.near_concat(j)?, c);
                }
            }
        }
        Ok(out)
    }

    /// Expansion in the ribbon basis.
    pub fn to_ribbon(&self) -> NSymElement {
        let mut out = Self::zero(self.weight, NSymBasis::R);
        for (i, c) in &self.coeffs {
            let image = match self.basis {
                NSymBasis::R => Self::basis_element(NSymBasis::R, i.clone()),
                NSymBasis::Lambda => lambda_to_ribbon_single(i),
                NSymBasis::S => s_to_ribbon_single(i),
                NSymBasis::Psi => psi_to_ribbon_single(i),
            };
            for (j, v) in image.coeffs {
                out.add_term(j, v * c);
            }
        }
        out
    }

    /// Expansion in `target`.
    pub fn to_basis(&self, target: NSymBasis) -> NSymElement {
        if self.basis == target {
            return self.clone();
        }
        if self.basis == NSymBasis::Psi && target == NSymBasis::Lambda {
            return psi_to_lambda(self);
        }
        let r = self.to_ribbon();
        match target {
            NSymBasis::R => r,
            NSymBasis::S => ribbon_to_s(&r),
            NSymBasis::Lambda => ribbon_to_lambda(&r),
            NSymBasis::Psi => lambda_to_psi(&ribbon_to_lambda(&r)),
        }
    }

    /// ρ into the monomial basis of Sym.
    pub fn project_rho(&self) -> SymElement {
        let n = self.weight;
        match self.basis {
            NSymBasis::Lambda | NSymBasis::S | NSymBasis::Psi => {
                let b = match self.basis {
                    NSymBasis::Lambda => SymBasis::E,
                    NSymBasis::S => SymBasis::H,
                    _ => SymBasis::P,
                };
                let mut f = SymElement::zero(n, b);
                for (i, c) in &self.coeffs {
                    f.add_term(i.sorted(), c.clone());
                }
                f.to_monomial()
            }
            NSymBasis::R => {
                let mut f = SymElement::zero(n, SymBasis::Monomial);
                for (i, c) in &self.coeffs {
                    let s = schur_in_monomials(&SkewShape::ribbon(i));
                    f = f.add(&s.scale(c)).expect("same basis and degree");
                }
                f
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

fn lambda_to_ribbon_single(i: &Composition) -> NSymElement {
    let base = i.reverse().conjugate();
    let mut out = NSymElement::zero(i.modulus(), NSymBasis::R);
    for j in refinements(&base) {
        out.add_term(j, Q::one());
    }
    out
}

fn s_to_ribbon_single(i: &Composition) -> NSymElement {
    let mut out = NSymElement::zero(i.modulus(), NSymBasis::R);
    for j in coarsenings(i) {
        out.add_term(j, Q::one());
    }
    out
}

fn psi_to_ribbon_single(i: &Composition) -> NSymElement {
    let mut out = NSymElement::zero(i.modulus(), NSymBasis::R);
    if i.is_empty() {
        out.add_term(Composition::empty(), Q::one());
        return out;
    }
    let eps = i.sign();
    for d in hooks_relative_to(i) {
        out.add_term(d.result(), q((eps * d.sign()) as i64));
    }
    out
}

/// Λ^I = Σ_{J ⪰ Ī^∼} R_J
pub fn lambda_to_ribbon(f: &NSymElement) -> Result<NSymElement> {
    require(f, NSymBasis::Lambda)?;
    Ok(f.to_ribbon())
}

/// Ψ^I = Σ_{J ⪰ I} lp(J̄, Ī) ε^J Λ^J
pub fn psi_to_lambda(f: &NSymElement) -> NSymElement {
    assert_eq!(f.basis, NSymBasis::Psi);
    let mut out = NSymElement::zero(f.weight, NSymBasis::Lambda);
    for (i, c) in &f.coeffs {
        let ibar = i.reverse();
        for j in refinements(i) {
            let w = lp(&j.reverse(), &ibar).expect("J refines I") as i64 * j.sign() as i64;
            out.add_term(j, c * q(w));
        }
    }
    out
}

/// ε^I Ψ^I = Σ over hook decompositions relative to I of Π ε^{J_k} R_J
pub fn psi_to_ribbon(f: &NSymElement) -> Result<NSymElement> {
    require(f, NSymBasis::Psi)?;
    Ok(f.to_ribbon())
}

/// S^I = Σ_{J ⪯ I} R_J
pub fn s_to_ribbon(f: &NSymElement) -> Result<NSymElement> {
    require(f, NSymBasis::S)?;
    Ok(f.to_ribbon())
}

/// ε^I R_I = Σ_{J ⪯ I} ε^J S^J
pub fn ribbon_to_s(f: &NSymElement) -> NSymElement {
    assert_eq!(f.basis, NSymBasis::R);
    let mut out = NSymElement::zero(f.weight, NSymBasis::S);
    for (i, c) in &f.coeffs {
        for j in coarsenings(i) {
            out.add_term(j.clone(), c * q((i.sign() * j.sign()) as i64));
        }
    }
    out
}

/// Inverse of Λ^I = Σ_{J ⪰ Ī^∼} R_J by Möbius inversion on the refinement order.
pub fn ribbon_to_lambda(f: &NSymElement) -> NSymElement {
    assert_eq!(f.basis, NSymBasis::R);
    let mut out = NSymElement::zero(f.weight, NSymBasis::Lambda);
    for (k, c) in &f.coeffs {
        for j in refinements(k) {
            let sign = if (j.len() - k.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(j.conjugate().reverse(), c * q(sign));
        }
    }
    out
}

/// Triangular inverse of Ψ → Λ, eliminating the coarsest terms first.
pub fn lambda_to_psi(f: &NSymElement) -> NSymElement {
    assert_eq!(f.basis, NSymBasis::Lambda);
    let mut rest = f.clone();
    let mut out = NSymElement::zero(f.weight, NSymBasis::Psi);
    loop {
        let Some(i) = rest.coeffs.keys().min_by_key(|i| (i.len(), std::cmp::Reverse((*i).clone()))).cloned() else {
            break;
        };
        let lead: i64 = i.parts().iter().map(|&p| p as i64).product::<i64>() * i.sign() as i64;
        let c = rest.coeff(&i) / q(lead);
        let image = psi_to_lambda(&NSymElement::basis_element(NSymBasis::Psi, i.clone()));
        for (j, v) in image.coeffs {
            rest.add_term(j, -(v * &c));
        }
        out.add_term(i, c);
    }
    out
}

/// S_n as a polynomial in the Λ generators, from Σ_{k=0}^{n} (-1)^k Λ_k S_{n-k} = 0.
pub fn s_from_lambda(n: usize) -> NSymElement {
    let mut table: Vec<NSymElement> = vec![NSymElement::one(NSymBasis::Lambda)];
    for m in 1..=n {
        let mut acc = NSymElement::zero(m, NSymBasis::Lambda);
        for k in 1..=m {
            let lk = NSymElement::basis_element(NSymBasis::Lambda, Composition::from_vec(vec![k]));
            let term = lk.multiply(&table[m - k]).expect("same basis");
            let sign = if k % 2 == 1 { q(1) } else { q(-1) };
            acc = acc.add(&term.scale(&sign)).expect("same basis");
        }
        table.push(acc);
    }
    table.swap_remove(n)
}

fn require(f: &NSymElement, basis: NSymBasis) -> Result<()> {
    if f.basis != basis {
        return Err(Error::BasisMismatch {
            expected: basis.symbol().into(),
            found: f.basis.symbol().into(),
        });
    }
    Ok(())
}


impl fmt::Display for NSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (k, (i, c)) in self.coeffs.iter().rev().enumerate() {
            let idx: String = if i.parts().iter().all(|&p| p < 10) {
                i.parts().iter().map(|p| p.to_string()).collect()
            } else {
                i.to_string()
            };
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "{sym}[{idx}]")?;
            } else {
                write!(f, "{}{sym}[{idx}]", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NSymJson {
    weight: usize,
    basis: NSymBasis,
    terms: Vec<TermJson>,
}

impl Serialize for NSymElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NSymJson {
            weight: self.weight,
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

impl<'de> Deserialize<'de> for NSymElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = NSymJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in &j.terms {
            let i = Composition::new(t.index.clone()).map_err(D::Error::custom)?;
            terms.push((i, term_value(t).map_err(D::Error::custom)?));
        }
        NSymElement::from_terms(j.weight, j.basis, terms).map_err(D::Error::custom)
    }
}

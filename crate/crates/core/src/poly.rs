//! Integer polynomials in a family of graded generators `x_1, x_2, …`
//! (`x_i` of weight `i`), used for Giambelli determinants and the two
//! Chern-class presentations.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::Int;

/// Exponent vector `(e_1, e_2, …)` of `x_1^{e_1} x_2^{e_2} ⋯`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Exponents(exps)
    }

    pub fn unit() -> Self {
        Exponents(Vec::new())
    }

    pub fn symbol(i: u32) -> Self {
        assert!(i >= 1, "generators are indexed from 1");
        let mut e = vec![0; i as usize];
        e[i as usize - 1] = 1;
        Exponents(e)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i`.
    pub fn exponent(&self, i: u32) -> u32 {
        i.checked_sub(1)
            .and_then(|j| self.0.get(j as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Weighted degree `Σ i·e_i`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    /// Highest generator index present.
    pub fn max_symbol(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        let len = self.0.len().max(other.0.len());
        Exponents::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    /// Generator indices with multiplicity, ascending: `x_1^2 x_3 ↦ [1, 1, 3]`.
    pub fn factors(&self) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i as u32 + 1, e as usize))
            .collect()
    }

    pub fn display_with(&self, symbol: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{symbol}{}", i + 1)
                } else {
                    format!("{symbol}{}^{e}", i + 1)
                }
            })
            .collect();
        factors.join(" ")
    }
}

impl From<Vec<u32>> for Exponents {
    fn from(v: Vec<u32>) -> Self {
        Exponents::new(v)
    }
}

impl From<Exponents> for Vec<u32> {
    fn from(e: Exponents) -> Vec<u32> {
        e.0
    }
}

/// Sparse integer polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Int>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(Exponents::unit(), Int::one())
    }

    /// `x_i`; `x_0` is the constant `1`.
    pub fn symbol(i: u32) -> Self {
        if i == 0 {
            Polynomial::one()
        } else {
            Polynomial::monomial(Exponents::symbol(i), Int::one())
        }
    }

    pub fn monomial(e: Exponents, c: Int) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Int)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponents) -> Int {
        self.terms.get(e).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    /// Drops every monomial involving a generator above `max_symbol`
    /// (those generators vanish in the target ring).
    pub fn truncate_symbols(&self, max_symbol: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.max_symbol() <= max_symbol)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in decreasing lexicographic order of exponent vectors.
    pub fn display_with(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = e.display_with(symbol);
            if abs.is_one() {
                out.push_str(&mono);
            } else if e.as_slice().is_empty() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs} {mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// JSON form: `[{"exponents": [..], "coefficient": "..."}]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialTerm {
    pub exponents: Exponents,
    #[serde(with = "crate::exact::int_str")]
    pub coefficient: Int,
}

impl Polynomial {
    pub fn to_terms(&self) -> Vec<PolynomialTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| PolynomialTerm {
                exponents: e.clone(),
                coefficient: c.clone(),
            })
            .collect()
    }

    pub fn from_terms(terms: &[PolynomialTerm]) -> Polynomial {
        let mut p = Polynomial::zero();
        for t in terms {
            p.add_term(t.exponents.clone(), t.coefficient.clone());
        }
        p
    }
}

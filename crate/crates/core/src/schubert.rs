//! Exact arithmetic in `H*(G_{n,k})` on the Schubert basis: Pieri
//! multiplication, Giambelli expansion, general products, the Poincaré
//! pairing and Schubert degrees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, fmt_rational, Int, Rational};
use crate::grassmann::{GrassContext, IndexSet, Partition, Shape};
use crate::poly::{Exponents, Polynomial};

/// Homogeneous exact-rational combination of Schubert classes `σ_ν`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohElement {
    shape: Shape,
    grade: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl CohElement {
    pub fn zero(ctx: &GrassContext, grade: u32) -> Self {
        CohElement {
            shape: ctx.shape(),
            grade,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `σ_∅ = [G_{n,k}]`.
    pub fn one(ctx: &GrassContext) -> Self {
        Self::schubert_unchecked(ctx, Partition::empty())
    }

    pub fn schubert(ctx: &GrassContext, nu: &Partition) -> Result<Self> {
        ctx.check_partition(nu)?;
        Ok(Self::schubert_unchecked(ctx, nu.clone()))
    }

    /// Class `[Ω_i]` of the Schubert variety with index set `i`.
    pub fn from_index_set(ctx: &GrassContext, i: &IndexSet) -> Result<Self> {
        let nu = ctx.index_to_partition(i)?;
        Ok(Self::schubert_unchecked(ctx, nu))
    }

    /// Special class `c̄_s = σ_(s)`; zero when `s > n − k`.
    pub fn special(ctx: &GrassContext, s: u32) -> Self {
        if s > ctx.width() {
            CohElement::zero(ctx, s)
        } else {
            Self::schubert_unchecked(ctx, Partition::row(s))
        }
    }

    /// `c̄_1 = ω`, the hyperplane (Kähler) class.
    pub fn omega(ctx: &GrassContext) -> Self {
        Self::special(ctx, 1)
    }

    fn schubert_unchecked(ctx: &GrassContext, nu: Partition) -> Self {
        let grade = nu.weight();
        let mut terms = BTreeMap::new();
        terms.insert(nu, Rational::one());
        CohElement {
            shape: ctx.shape(),
            grade,
            terms,
        }
    }

    pub fn from_terms<I>(ctx: &GrassContext, grade: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = CohElement::zero(ctx, grade);
        for (p, c) in terms {
            ctx.check_partition(&p)?;
            if p.weight() != grade {
                return Err(Error::Domain(format!(
                    "σ{p} has grade {}, element has grade {grade}",
                    p.weight()
                )));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// Inverse of [`CohElement::coordinates`].
    pub fn from_coordinates(ctx: &GrassContext, grade: u32, coords: &[Rational]) -> Result<Self> {
        let basis = ctx.basis(grade)?;
        if basis.len() != coords.len() {
            return Err(Error::Domain(format!(
                "{} coordinates for a basis of size {}",
                coords.len(),
                basis.len()
            )));
        }
        Self::from_terms(
            ctx,
            grade,
            basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Terms in the context's basis order (decreasing lexicographic).
    pub fn terms_in_basis_order(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coordinates on the Schubert basis of the element's grade; empty past the top grade.
    pub fn coordinates(&self, ctx: &GrassContext) -> Vec<Rational> {
        match ctx.basis(self.grade) {
            Ok(basis) => basis.iter().map(|p| self.coefficient(p)).collect(),
            Err(_) => Vec::new(),
        }
    }

    pub fn check_context(&self, ctx: &GrassContext) -> Result<()> {
        if self.shape == ctx.shape() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                n: ctx.n(),
                k: ctx.k(),
                found_n: self.shape.n,
                found_k: self.shape.k,
            })
        }
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
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

    /// `self += c · other`.
    pub(crate) fn axpy(&mut self, c: &Rational, other: &CohElement) {
        debug_assert_eq!(self.shape, other.shape);
        debug_assert!(self.grade == other.grade || other.is_zero());
        if c.is_zero() {
            return;
        }
        for (p, v) in &other.terms {
            self.add_term(p.clone(), c * v);
        }
    }

    fn check_compatible(&self, other: &CohElement) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ContextMismatch {
                n: self.shape.n,
                k: self.shape.k,
                found_n: other.shape.n,
                found_k: other.shape.k,
            });
        }
        if self.grade != other.grade {
            return Err(Error::Domain(format!(
                "cannot add grades {} and {}",
                self.grade, other.grade
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CohElement) -> Result<CohElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.axpy(&Rational::one(), other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &CohElement) -> Result<CohElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.axpy(&-Rational::one(), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> CohElement {
        let mut out = CohElement {
            shape: self.shape,
            grade: self.grade,
            terms: BTreeMap::new(),
        };
        out.axpy(c, self);
        out
    }

    pub fn neg(&self) -> CohElement {
        self.scale(&-Rational::one())
    }

    pub fn to_json(&self) -> CohElementJson {
        CohElementJson {
            grade: self.grade,
            terms: self
                .terms_in_basis_order()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    numerator: c.numer().to_string(),
                    denominator: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(ctx: &GrassContext, json: &CohElementJson) -> Result<Self> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                let num: Int = t
                    .numerator
                    .parse()
                    .map_err(|_| Error::Parse(format!("numerator {:?}", t.numerator)))?;
                let den: Int = t
                    .denominator
                    .parse()
                    .map_err(|_| Error::Parse(format!("denominator {:?}", t.denominator)))?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok((t.partition.clone(), Rational::new(num, den)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(ctx, json.grade, terms)
    }
}

impl fmt::Display for CohElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms_in_basis_order().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{} ", fmt_rational(&abs))?;
            }
            write!(f, "σ{p}")?;
        }
        Ok(())
    }
}

/// Wire form `{grade, terms: [{partition, numerator, denominator}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohElementJson {
    pub grade: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub numerator: String,
    pub denominator: String,
}

/// Special Schubert class `c̄_i = [Ω_i]`, `1 ≤ i ≤ n − k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SpecialClass(u32);

impl SpecialClass {
    pub fn new(ctx: &GrassContext, i: u32) -> Result<Self> {
        if i == 0 || i > ctx.width() {
            return Err(Error::Range(format!(
                "special class index {i} outside 1..={}",
                ctx.width()
            )));
        }
        Ok(SpecialClass(i))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// Partitions `μ ⊇ λ` in the `rows × width` box with `μ/λ` a horizontal strip of size `s`.
pub fn horizontal_strips(lambda: &Partition, s: u32, rows: u32, width: u32) -> Vec<Partition> {
    fn go(
        i: usize,
        rows: usize,
        remaining: u32,
        lambda: &Partition,
        width: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if remaining == 0 {
                out.push(Partition::from_parts_unchecked(cur.clone()));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { width } else { lambda.part(i - 1) };
        let hi = hi.min(lo + remaining);
        for mu in (lo..=hi).rev() {
            cur.push(mu);
            go(i + 1, rows, remaining - (mu - lo), lambda, width, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.fits(rows, width) {
        go(
            0,
            rows as usize,
            s,
            lambda,
            width,
            &mut Vec::new(),
            &mut out,
        );
    }
    out
}

/// `a · c̄_s` by horizontal strips; `s = 0` is the identity and `s > n − k` gives zero.
pub(crate) fn pieri_raw(ctx: &GrassContext, a: &CohElement, s: u32) -> CohElement {
    if s == 0 {
        return a.clone();
    }
    let mut out = CohElement::zero(ctx, a.grade + s);
    if s > ctx.width() || a.grade + s > ctx.dim() {
        return out;
    }
    for (lambda, c) in &a.terms {
        for mu in horizontal_strips(lambda, s, ctx.k(), ctx.width()) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

pub fn pieri_multiply(ctx: &GrassContext, a: &CohElement, s: SpecialClass) -> Result<CohElement> {
    a.check_context(ctx)?;
    Ok(pieri_raw(ctx, a, s.index()))
}

/// `a · ω^p` by iterated Pieri.
pub fn omega_power(ctx: &GrassContext, a: &CohElement, p: u32) -> CohElement {
    let mut out = a.clone();
    for _ in 0..p {
        if out.is_zero() {
            out.grade = a.grade + p;
            break;
        }
        out = pieri_raw(ctx, &out, 1);
    }
    out
}

/// Evaluates an integer polynomial in the special classes `c̄_j` applied to `base`.
pub fn evaluate_special(ctx: &GrassContext, poly: &Polynomial, base: &CohElement) -> CohElement {
    let mut acc: Option<CohElement> = None;
    for (e, c) in poly.terms() {
        let mut v = base.clone();
        for s in e.factors() {
            v = pieri_raw(ctx, &v, s);
        }
        let grade = base.grade + e.weight();
        let sum = acc.get_or_insert_with(|| CohElement::zero(ctx, grade));
        sum.axpy(&Rational::from_integer(c.clone()), &v);
    }
    acc.unwrap_or_else(|| CohElement::zero(ctx, base.grade))
}

/// Giambelli determinant `det(c̄_{ν_t + s − t})` as a polynomial in the `c̄_j`,
/// with `c̄_0 = 1` and negative indices zero. Generators above `n − k` are kept
/// (they vanish in the ring); see [`giambelli_in_ring`].
pub fn giambelli_determinant(nu: &Partition) -> Polynomial {
    let len = nu.len();
    let entry = |t: usize, s: usize| -> Option<u32> {
        let idx = nu.part(t) as i64 + s as i64 - t as i64;
        (idx >= 0).then_some(idx as u32)
    };
    // Laplace expansion over rows in order; memoised on the set of used columns.
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    fn det(
        row: usize,
        used: u64,
        len: usize,
        entry: &dyn Fn(usize, usize) -> Option<u32>,
        memo: &mut HashMap<u64, Polynomial>,
    ) -> Polynomial {
        if row == len {
            return Polynomial::one();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Polynomial::zero();
        let mut sign_neg = false;
        for col in 0..len {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(idx) = entry(row, col) {
                let minor = det(row + 1, used | (1 << col), len, entry, memo);
                let term = Polynomial::symbol(idx).mul(&minor);
                acc = if sign_neg {
                    acc.sub(&term)
                } else {
                    acc.add(&term)
                };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(used, acc.clone());
        acc
    }
    det(0, 0, len, &entry, &mut memo)
}

/// Giambelli expansion after dropping generators `c̄_j`, `j > n − k`.
pub fn giambelli_in_ring(ctx: &GrassContext, nu: &Partition) -> Result<Polynomial> {
    ctx.check_partition(nu)?;
    Ok(giambelli_determinant(nu).truncate_symbols(ctx.width()))
}

/// Full determinant together with its reduction in `H*(G_{n,k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiambelliExpansion {
    pub partition: Partition,
    pub determinant: Polynomial,
    pub in_ring: Polynomial,
}

pub fn giambelli_expand(ctx: &GrassContext, nu: &Partition) -> Result<GiambelliExpansion> {
    ctx.check_partition(nu)?;
    let determinant = giambelli_determinant(nu);
    let in_ring = determinant.truncate_symbols(ctx.width());
    Ok(GiambelliExpansion {
        partition: nu.clone(),
        determinant,
        in_ring,
    })
}

/// General product: each Schubert term of `b` is Giambelli-expanded into
/// special classes, which then act on `a` by iterated Pieri.
pub fn multiply(ctx: &GrassContext, a: &CohElement, b: &CohElement) -> Result<CohElement> {
    a.check_context(ctx)?;
    b.check_context(ctx)?;
    let grade = a.grade + b.grade;
    let mut out = CohElement::zero(ctx, grade);
    if grade > ctx.dim() || a.is_zero() || b.is_zero() {
        return Ok(out);
    }
    for (nu, c) in &b.terms {
        let poly = giambelli_determinant(nu).truncate_symbols(ctx.width());
        let v = evaluate_special(ctx, &poly, a);
        out.axpy(c, &v);
    }
    Ok(out)
}

/// `⟨a · b, μ⟩`; zero unless the grades add up to `N`.
pub fn duality_pair(ctx: &GrassContext, a: &CohElement, b: &CohElement) -> Result<Rational> {
    a.check_context(ctx)?;
    b.check_context(ctx)?;
    if a.grade + b.grade != ctx.dim() {
        return Ok(Rational::zero());
    }
    Ok(multiply(ctx, a, b)?.coefficient(&ctx.top_partition()))
}

/// Coefficient of the point class in a top-grade element.
pub fn top_coefficient(ctx: &GrassContext, a: &CohElement) -> Rational {
    if a.grade != ctx.dim() {
        return Rational::zero();
    }
    a.coefficient(&ctx.top_partition())
}

/// `deg(a) = ⟨a · ω^{N − grade}, μ⟩`.
pub fn degree_of(ctx: &GrassContext, a: &CohElement) -> Result<Rational> {
    a.check_context(ctx)?;
    if a.grade > ctx.dim() {
        return Ok(Rational::zero());
    }
    Ok(top_coefficient(
        ctx,
        &omega_power(ctx, a, ctx.dim() - a.grade),
    ))
}

/// Closed-form degree of `Ω_i`: `r! Π_{t<s}(i_s − i_t) / Π_j (i_j − 1)!` with `r = |i|`.
pub fn schubert_degree_formula(ctx: &GrassContext, i: &IndexSet) -> Result<Int> {
    ctx.check_index_set(i)?;
    let r = i.dimension() as u64;
    let idx = i.indices();
    let mut num = factorial(r);
    for s in 0..idx.len() {
        for t in 0..s {
            num *= idx[s] - idx[t];
        }
    }
    let den = idx
        .iter()
        .fold(Int::one(), |acc, &ij| acc * factorial(ij as u64 - 1));
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// `⟨[Ω_i] c̄_1^{|i|}, μ⟩` by iterated Pieri.
pub fn schubert_degree_pieri(ctx: &GrassContext, i: &IndexSet) -> Result<Int> {
    let sigma = CohElement::from_index_set(ctx, i)?;
    let top = omega_power(ctx, &sigma, i.dimension());
    Ok(top_coefficient(ctx, &top).to_integer())
}

/// `deg G_{n,k} = N! · 1!⋯(k−1)! / ((n−k)!⋯(n−1)!)`.
pub fn grassmannian_degree(ctx: &GrassContext) -> Int {
    grassmannian_degree_nk(ctx.n(), ctx.k())
}

pub fn grassmannian_degree_nk(n: u32, k: u32) -> Int {
    let dim = (k * (n - k)) as u64;
    let mut num = factorial(dim);
    for j in 1..k as u64 {
        num *= factorial(j);
    }
    let den = (0..k as u64).fold(Int::one(), |acc, j| acc * factorial((n - k) as u64 + j));
    num / den
}

/// `⟨[Ω_i][Ω_j] c̄_1^q, μ⟩` with `q = |i| + |j| − N`; zero when `q < 0`.
pub fn pair_degree(ctx: &GrassContext, i: &IndexSet, j: &IndexSet) -> Result<Int> {
    let a = CohElement::from_index_set(ctx, i)?;
    let b = CohElement::from_index_set(ctx, j)?;
    let q = i.dimension() as i64 + j.dimension() as i64 - ctx.dim() as i64;
    if q < 0 {
        return Ok(Int::zero());
    }
    let product = multiply(ctx, &a, &b)?;
    Ok(top_coefficient(ctx, &omega_power(ctx, &product, q as u32)).to_integer())
}

/// Iterated Pieri applied to `1` along an exponent vector of special classes.
pub fn special_monomial(ctx: &GrassContext, e: &Exponents) -> CohElement {
    let mut v = CohElement::one(ctx);
    for s in e.factors() {
        v = pieri_raw(ctx, &v, s);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn idx(s: &str) -> IndexSet {
        s.parse().unwrap()
    }

    fn sigma(ctx: &GrassContext, s: &str) -> CohElement {
        CohElement::schubert(ctx, &p(s)).unwrap()
    }

    fn sum(ctx: &GrassContext, parts: &[&str]) -> CohElement {
        let grade = p(parts[0]).weight();
        CohElement::from_terms(ctx, grade, parts.iter().map(|s| (p(s), rat(1, 1)))).unwrap()
    }

    /// Brute-force strip oracle: all boxed partitions of the right weight that
    /// contain λ and interlace with it.
    fn strips_oracle(ctx: &GrassContext, lambda: &Partition, s: u32) -> Vec<Partition> {
        let Ok(basis) = ctx.basis(lambda.weight() + s) else {
            return Vec::new();
        };
        basis
            .iter()
            .filter(|mu| {
                (0..ctx.k() as usize).all(|i| {
                    mu.part(i) >= lambda.part(i) && (i == 0 || lambda.part(i - 1) >= mu.part(i))
                })
            })
            .cloned()
            .collect()
    }

    #[test]
    fn pieri_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let c1 = SpecialClass::new(&ctx, 1).unwrap();
        assert_eq!(
            pieri_multiply(&ctx, &sigma(&ctx, "1"), c1).unwrap(),
            sum(&ctx, &["2", "1,1"])
        );
        assert_eq!(
            pieri_multiply(&ctx, &sigma(&ctx, "2,1"), c1).unwrap(),
            sigma(&ctx, "2,2")
        );
        for n in 2..=7 {
            for k in 1..=n / 2 {
                let ctx = GrassContext::new(n, k).unwrap();
                for s in 1..=ctx.width() {
                    let cs = SpecialClass::new(&ctx, s).unwrap();
                    let got = pieri_multiply(&ctx, &CohElement::one(&ctx), cs).unwrap();
                    assert_eq!(got, CohElement::special(&ctx, s));
                }
            }
        }
        assert!(SpecialClass::new(&ctx, 3).is_err());
        assert!(SpecialClass::new(&ctx, 0).is_err());
    }

    #[test]
    fn pieri_matches_strip_oracle_and_is_multiplicity_free() {
        for (n, k) in [(5, 2), (6, 3), (7, 3), (8, 4)] {
            let ctx = GrassContext::new(n, k).unwrap();
            for r in 0..=ctx.dim() {
                for lambda in ctx.basis(r).unwrap() {
                    for s in 1..=ctx.width() {
                        let got = pieri_raw(&ctx, &CohElement::schubert(&ctx, lambda).unwrap(), s);
                        assert!(got.terms().all(|(_, c)| c.is_one()));
                        let mut want = strips_oracle(&ctx, lambda, s);
                        want.sort();
                        let have: Vec<Partition> = got.terms().map(|(p, _)| p.clone()).collect();
                        assert_eq!(have, want, "G({n},{k}) λ={lambda} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = GrassContext::new(4, 2).unwrap();
        let b = GrassContext::new(5, 2).unwrap();
        let c1 = SpecialClass::new(&b, 1).unwrap();
        let err = pieri_multiply(&b, &CohElement::one(&a), c1).unwrap_err();
        assert!(matches!(err, Error::ContextMismatch { .. }));
        assert!(multiply(&b, &CohElement::one(&a), &CohElement::one(&b)).is_err());
    }

    #[test]
    fn giambelli_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let e = giambelli_expand(&ctx, &p("1,1")).unwrap();
        assert_eq!(e.determinant.display_with("c̄"), "c̄1^2 - c̄2");
        let e = giambelli_expand(&ctx, &p("2")).unwrap();
        assert_eq!(e.determinant, Polynomial::symbol(2));
        let e = giambelli_expand(&ctx, &p("2,1")).unwrap();
        assert_eq!(e.determinant.display_with("c̄"), "c̄1 c̄2 - c̄3");
        assert_eq!(e.in_ring.display_with("c̄"), "c̄1 c̄2");
        assert!(giambelli_expand(&ctx, &p("3")).is_err());
    }

    #[test]
    fn giambelli_reproduces_every_schubert_class() {
        for (n, k) in [(4, 2), (6, 2), (6, 3), (7, 3), (8, 4)] {
            let ctx = GrassContext::new(n, k).unwrap();
            for r in 0..=ctx.dim() {
                for nu in ctx.basis(r).unwrap() {
                    let poly = giambelli_in_ring(&ctx, nu).unwrap();
                    let v = evaluate_special(&ctx, &poly, &CohElement::one(&ctx));
                    assert_eq!(v, CohElement::schubert(&ctx, nu).unwrap());
                }
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let prod = multiply(&ctx, &sigma(&ctx, "2"), &sigma(&ctx, "1,1")).unwrap();
        assert!(prod.is_zero());
        assert_eq!(prod.grade(), 4);
        assert_eq!(
            multiply(&ctx, &sigma(&ctx, "2"), &sigma(&ctx, "2")).unwrap(),
            sigma(&ctx, "2,2")
        );
        let a = sum(&ctx, &["2", "1,1"]);
        assert_eq!(multiply(&ctx, &CohElement::one(&ctx), &a).unwrap(), a);
        assert_eq!(multiply(&ctx, &a, &CohElement::one(&ctx)).unwrap(), a);
    }

    #[test]
    fn c2_squared_expansion() {
        let ctx = GrassContext::new(8, 3).unwrap();
        let c2 = CohElement::special(&ctx, 2);
        assert_eq!(
            multiply(&ctx, &c2, &c2).unwrap(),
            sum(&ctx, &["4", "3,1", "2,2"])
        );
    }

    #[test]
    fn duality_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let s11 = sigma(&ctx, "1,1");
        let s2 = sigma(&ctx, "2");
        assert_eq!(duality_pair(&ctx, &s11, &s11).unwrap(), rat(1, 1));
        assert_eq!(duality_pair(&ctx, &s2, &s11).unwrap(), rat(0, 1));
        assert_eq!(
            duality_pair(&ctx, &CohElement::one(&ctx), &sigma(&ctx, "2,2")).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            duality_pair(&ctx, &s2, &CohElement::one(&ctx)).unwrap(),
            rat(0, 1)
        );
    }

    #[test]
    fn degree_examples() {
        let g42 = GrassContext::new(4, 2).unwrap();
        let g62 = GrassContext::new(6, 2).unwrap();
        for (ctx, i, want) in [(&g42, "[3,4]", 2), (&g42, "[1,2]", 1), (&g62, "[5,6]", 14)] {
            assert_eq!(schubert_degree_formula(ctx, &idx(i)).unwrap(), int(want));
            assert_eq!(schubert_degree_pieri(ctx, &idx(i)).unwrap(), int(want));
        }
        let g21 = GrassContext::new(2, 1).unwrap();
        assert_eq!(grassmannian_degree(&g21), int(1));
        assert_eq!(grassmannian_degree(&g42), int(2));
        assert_eq!(
            grassmannian_degree(&GrassContext::new(6, 3).unwrap()),
            int(42)
        );
    }

    #[test]
    fn degree_formula_agrees_with_pieri_for_g12_6_top_class() {
        let ctx = GrassContext::new(12, 6).unwrap();
        let top = ctx.partition_to_index(&Partition::empty()).unwrap();
        let by_pieri = schubert_degree_pieri(&ctx, &top).unwrap();
        assert_eq!(by_pieri, grassmannian_degree(&ctx));
        assert_eq!(by_pieri, schubert_degree_formula(&ctx, &top).unwrap());
    }

    #[test]
    fn pair_degree_examples() {
        let g42 = GrassContext::new(4, 2).unwrap();
        assert_eq!(
            pair_degree(&g42, &idx("[3,4]"), &idx("[3,4]")).unwrap(),
            int(2)
        );
        // dimensions adding to N reduce to the duality pairing
        assert_eq!(
            pair_degree(&g42, &idx("[2,3]"), &idx("[2,3]")).unwrap(),
            int(1)
        );
        assert_eq!(
            pair_degree(&g42, &idx("[1,4]"), &idx("[2,3]")).unwrap(),
            int(0)
        );
        assert_eq!(
            pair_degree(&g42, &idx("[1,2]"), &idx("[1,3]")).unwrap(),
            int(0)
        );
        let g63 = GrassContext::new(6, 3).unwrap();
        assert_eq!(
            pair_degree(&g63, &idx("[4,5,6]"), &idx("[4,5,6]")).unwrap(),
            int(42)
        );
    }

    #[test]
    fn pair_degree_of_top_cell_with_any_class_is_schubert_degree() {
        let ctx = GrassContext::new(7, 3).unwrap();
        let top = ctx.partition_to_index(&Partition::empty()).unwrap();
        for i in ctx.all_index_sets() {
            assert_eq!(
                pair_degree(&ctx, &top, &i).unwrap(),
                schubert_degree_formula(&ctx, &i).unwrap()
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let ctx = GrassContext::new(5, 2).unwrap();
        let a =
            CohElement::from_terms(&ctx, 3, [(p("3"), rat(1, 2)), (p("2,1"), rat(-7, 3))]).unwrap();
        let text = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"grade":3,"terms":[{"partition":[3],"numerator":"1","denominator":"2"},{"partition":[2,1],"numerator":"-7","denominator":"3"}]}"#
        );
        let back: CohElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CohElement::from_json(&ctx, &back).unwrap(), a);
        assert_eq!(a.to_string(), "1/2 σ(3) - 7/3 σ(2,1)");
    }

    #[test]
    fn from_terms_rejects_bad_input() {
        let ctx = GrassContext::new(4, 2).unwrap();
        assert!(CohElement::from_terms(&ctx, 2, [(p("3"), rat(1, 1))]).is_err());
        assert!(CohElement::from_terms(&ctx, 2, [(p("1"), rat(1, 1))]).is_err());
        let z =
            CohElement::from_terms(&ctx, 2, [(p("2"), rat(1, 1)), (p("2"), rat(-1, 1))]).unwrap();
        assert!(z.is_zero());
    }

    fn element_strategy(ctx: GrassContext, grade: u32) -> impl Strategy<Value = CohElement> {
        let size = ctx.betti(grade as i64);
        proptest::collection::vec(-3i64..=3, size).prop_map(move |coords| {
            let coords: Vec<Rational> = coords.into_iter().map(|c| rat(c, 1)).collect();
            CohElement::from_coordinates(&ctx, grade, &coords).unwrap()
        })
    }

    fn triple() -> impl Strategy<Value = (CohElement, CohElement, CohElement)> {
        let ctx = GrassContext::new(6, 3).unwrap();
        (0u32..=3, 0u32..=3, 0u32..=3).prop_flat_map(move |(r1, r2, r3)| {
            (
                element_strategy(ctx.clone(), r1),
                element_strategy(ctx.clone(), r2),
                element_strategy(ctx.clone(), r3),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiply_is_commutative_and_associative((a, b, c) in triple()) {
            let ctx = GrassContext::new(6, 3).unwrap();
            let ab = multiply(&ctx, &a, &b).unwrap();
            prop_assert_eq!(&ab, &multiply(&ctx, &b, &a).unwrap());
            let left = multiply(&ctx, &ab, &c).unwrap();
            let right = multiply(&ctx, &a, &multiply(&ctx, &b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}

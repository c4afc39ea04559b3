//! The Chern-class presentation `Z[c_1..c_k]/⟨h_j : j > n−k⟩` and its
//! relation to the special Schubert classes `c̄_j = c_j(γ^⊥)` through
//! `c(γ)·c(γ^⊥) = 1`.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::grassmann::GrassContext;
use crate::linalg::Matrix;
use crate::poly::{Exponents, Polynomial};
use crate::schubert::{evaluate_special, multiply, special_monomial, CohElement};

/// Which generators a polynomial or monomial basis is written in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `c_i = c_i(γ_{n,k})`, `1 ≤ i ≤ k`.
    Chern,
    /// `c̄_j = c_j(γ^⊥_{n,k}) = σ_(j)`.
    DualChern,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Chern => "c",
            Family::DualChern => "c̄",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Rewrite `c`-monomials in `c̄`-monomials.
    ChernToDual,
    /// Rewrite `c̄`-monomials in `c`-monomials.
    DualToChern,
}

/// `c_i` as a polynomial in `c̄_1, …, c̄_{n−k}` from `Σ_{p+q=r} c_p c̄_q = 0`.
pub fn chern_in_dual(ctx: &GrassContext, i: u32) -> Polynomial {
    graded_inverse(i, ctx.width())
}

/// `c̄_j = h_j(c_1, …, c_k)` as a polynomial in the `c_i`.
pub fn dual_in_chern(ctx: &GrassContext, j: u32) -> Polynomial {
    graded_inverse(j, ctx.k())
}

/// Degree-`r` part of `(1 + x_1 + … + x_m)^{-1}`, via `y_r = −Σ_{q=1}^{min(r,m)} y_{r−q} x_q`.
fn graded_inverse(r: u32, m: u32) -> Polynomial {
    let mut ys = vec![Polynomial::one()];
    for t in 1..=r {
        let mut y = Polynomial::zero();
        for q in 1..=t.min(m) {
            y = y.sub(&ys[(t - q) as usize].mul(&Polynomial::symbol(q)));
        }
        ys.push(y);
    }
    ys.swap_remove(r as usize)
}

/// `c_i(γ)` as a ring element, evaluated through Pieri.
pub fn chern_class(ctx: &GrassContext, i: u32) -> CohElement {
    evaluate_special(ctx, &chern_in_dual(ctx, i), &CohElement::one(ctx))
}

/// Evaluates a polynomial in `c_1, …, c_k` inside the ring.
pub fn evaluate_chern(ctx: &GrassContext, poly: &Polynomial) -> Result<CohElement> {
    let classes: Vec<CohElement> = (0..=ctx.k()).map(|i| chern_class(ctx, i)).collect();
    let mut acc: Option<CohElement> = None;
    for (e, c) in poly.terms() {
        if e.max_symbol() > ctx.k() {
            return Err(Error::Domain(format!(
                "c{} does not exist for rank {} bundles",
                e.max_symbol(),
                ctx.k()
            )));
        }
        let mut v = CohElement::one(ctx);
        for i in e.factors() {
            v = multiply(ctx, &v, &classes[i as usize])?;
        }
        let sum = acc.get_or_insert_with(|| CohElement::zero(ctx, e.weight()));
        sum.axpy(&Rational::from_integer(c.clone()), &v);
    }
    Ok(acc.unwrap_or_else(|| CohElement::zero(ctx, 0)))
}

/// `h_j(c_1, …, c_k)` evaluated in `H*(G_{n,k})`; a defining relation, so zero
/// for `n − k < j ≤ n`.
pub fn relation_check(ctx: &GrassContext, j: u32) -> Result<CohElement> {
    if j <= ctx.width() || j > ctx.n() {
        return Err(Error::Range(format!(
            "relation index {j} outside {}..={}",
            ctx.width() + 1,
            ctx.n()
        )));
    }
    evaluate_chern(ctx, &dual_in_chern(ctx, j))
}

/// Monomials `x_1^{j_1} ⋯ x_k^{j_k}` with at most `n − k` factors
/// (`Σ j_i ≤ n − k`) and `Σ i·j_i = r`, in decreasing lexicographic order of
/// exponent vectors. For `r ≤ min(k, n−k)` the factor bound is automatic.
pub fn monomial_basis(ctx: &GrassContext, r: u32) -> Vec<Exponents> {
    fn go(
        sym: u32,
        k: u32,
        factors_left: u32,
        remaining: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Exponents>,
    ) {
        if sym > k {
            if remaining == 0 {
                out.push(Exponents::new(cur.clone()));
            }
            return;
        }
        for e in (0..=factors_left.min(remaining / sym)).rev() {
            cur.push(e);
            go(sym + 1, k, factors_left - e, remaining - e * sym, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, ctx.k(), ctx.width(), r, &mut Vec::new(), &mut out);
    out
}

/// A monomial in either family as a ring element.
pub fn family_monomial(ctx: &GrassContext, family: Family, e: &Exponents) -> Result<CohElement> {
    match family {
        Family::DualChern => Ok(special_monomial(ctx, e)),
        Family::Chern => evaluate_chern(ctx, &Polynomial::monomial(e.clone(), 1.into())),
    }
}

/// Columns: the grade-`r` monomial basis of `family`, written on the Schubert basis.
pub fn schubert_matrix(ctx: &GrassContext, family: Family, r: u32) -> Result<Matrix> {
    let rows = ctx.basis(r)?.len();
    let columns = monomial_basis(ctx, r)
        .iter()
        .map(|e| family_monomial(ctx, family, e).map(|v| v.coordinates(ctx)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(rows, &columns))
}

/// The change of presentation on one graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationPiece {
    pub grade: u32,
    /// Monomial basis of the source family (shared exponent vectors for both families).
    pub basis: Vec<Exponents>,
    /// Column `j` holds source monomial `j` in target-monomial coordinates.
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernConversion {
    pub direction: Direction,
    /// Source generators `1..` as polynomials in the target generators.
    pub generators: Vec<Polynomial>,
    pub pieces: Vec<PresentationPiece>,
}

impl ChernConversion {
    pub fn source(&self) -> Family {
        match self.direction {
            Direction::ChernToDual => Family::Chern,
            Direction::DualToChern => Family::DualChern,
        }
    }

    pub fn target(&self) -> Family {
        match self.direction {
            Direction::ChernToDual => Family::DualChern,
            Direction::DualToChern => Family::Chern,
        }
    }
}

/// Linear maps between the `c`- and `c̄`-monomial bases on every graded piece.
pub fn chern_convert(ctx: &GrassContext, direction: Direction) -> Result<ChernConversion> {
    let (source, target, generators) = match direction {
        Direction::ChernToDual => (
            Family::Chern,
            Family::DualChern,
            (1..=ctx.k()).map(|i| chern_in_dual(ctx, i)).collect(),
        ),
        Direction::DualToChern => (
            Family::DualChern,
            Family::Chern,
            (1..=ctx.width()).map(|j| dual_in_chern(ctx, j)).collect(),
        ),
    };
    let mut pieces = Vec::new();
    for r in 0..=ctx.dim() {
        let src = schubert_matrix(ctx, source, r)?;
        let tgt = schubert_matrix(ctx, target, r)?;
        let tgt_inv = tgt.inverse().ok_or_else(|| {
            Error::Internal(format!(
                "{} monomials are not a basis at grade {r}",
                target.symbol()
            ))
        })?;
        pieces.push(PresentationPiece {
            grade: r,
            basis: monomial_basis(ctx, r),
            matrix: tgt_inv.mul(&src),
        });
    }
    Ok(ChernConversion {
        direction,
        generators,
        pieces,
    })
}

/// Whether an exact rational matrix is integral with determinant `±1`.
pub fn is_unimodular(m: &Matrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let integral = (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)].is_integer()));
    let det = m.determinant();
    integral && det.is_integer() && det.numer().magnitude() == &1u32.into() && !det.is_zero()
}

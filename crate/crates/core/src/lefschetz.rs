//! The intersection form `(α, β)_ω = ⟨α β ω^{N−2r}, μ⟩` on `H^{2r}`, primitive
//! subspaces, the Lefschetz decomposition, Gram–Schmidt primitive generators
//! `v_r`, and exact definiteness certificates.
//!
//! Pairings use the self-duality of the Schubert basis: `⟨σ_λ x, μ⟩` is the
//! coefficient of the complementary partition `λ^∨` in `x`. The tests cross-check
//! this against full products.

use num::{One, Signed, Zero};

use crate::chern::monomial_basis;
use crate::error::{Error, Result};
use crate::exact::{int, rat_int, Rational};
use crate::grassmann::{GrassContext, Partition, Shape};
use crate::linalg::Matrix;
use crate::poly::Exponents;
use crate::schubert::{grassmannian_degree_nk, omega_power, special_monomial, CohElement};

fn check_middle(ctx: &GrassContext, r: u32) -> Result<()> {
    if 2 * r > ctx.dim() {
        return Err(Error::Range(format!(
            "grade {r} exceeds the middle grade {} of {}",
            ctx.dim() / 2,
            ctx.shape()
        )));
    }
    Ok(())
}

/// `⟨a · x, μ⟩` for grades adding up to `N`, read off the dual coefficients.
pub fn top_pairing(ctx: &GrassContext, a: &CohElement, x: &CohElement) -> Rational {
    if a.grade() + x.grade() != ctx.dim() {
        return Rational::zero();
    }
    a.terms()
        .map(|(p, c)| c * x.coefficient(&p.complement(ctx.k(), ctx.width())))
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// `(a, b)_ω` for two classes of grade `r ≤ N/2`.
pub fn form(ctx: &GrassContext, a: &CohElement, b: &CohElement) -> Result<Rational> {
    a.check_context(ctx)?;
    b.check_context(ctx)?;
    if a.grade() != b.grade() {
        return Err(Error::Domain(format!(
            "form needs equal grades, got {} and {}",
            a.grade(),
            b.grade()
        )));
    }
    check_middle(ctx, a.grade())?;
    let x = omega_power(ctx, b, ctx.dim() - 2 * a.grade());
    Ok(top_pairing(ctx, a, &x))
}

/// Matrix of `(·,·)_ω` on the Schubert basis of `H^{2r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub shape: Shape,
    /// Ring grade `r` (cohomological degree `2r`, or `4r` over ℍ).
    pub grade: u32,
    pub basis: Vec<Partition>,
    pub matrix: Matrix,
}

pub fn pairing_matrix(ctx: &GrassContext, r: u32) -> Result<PairingMatrix> {
    check_middle(ctx, r)?;
    let basis = ctx.enumerate_basis(r)?;
    let images: Vec<CohElement> = basis
        .iter()
        .map(|p| {
            omega_power(
                ctx,
                &CohElement::schubert(ctx, p).expect("basis"),
                ctx.dim() - 2 * r,
            )
        })
        .collect();
    let rows = basis
        .iter()
        .map(|a| {
            let dual = a.complement(ctx.k(), ctx.width());
            images.iter().map(|x| x.coefficient(&dual)).collect()
        })
        .collect();
    Ok(PairingMatrix {
        shape: ctx.shape(),
        grade: r,
        basis,
        matrix: Matrix::from_rows(rows),
    })
}

/// Column `j` is `ω^p · σ_j` written on the Schubert basis of grade `r + p`.
pub fn omega_power_matrix(ctx: &GrassContext, r: u32, p: u32) -> Result<Matrix> {
    let source = ctx.basis(r)?;
    let target_rows = ctx.betti((r + p) as i64);
    let columns: Vec<Vec<Rational>> = source
        .iter()
        .map(|s| {
            let img = omega_power(ctx, &CohElement::schubert(ctx, s).expect("basis"), p);
            if target_rows == 0 {
                Vec::new()
            } else {
                img.coordinates(ctx)
            }
        })
        .collect();
    Ok(Matrix::from_columns(target_rows, &columns))
}

/// Basis of `V^{2r} = ker(∪ ω^{N−2r+1} : H^{2r} → H^{2N−2r+2})`.
pub fn primitive_subspace(ctx: &GrassContext, r: u32) -> Result<Vec<CohElement>> {
    check_middle(ctx, r)?;
    let m = omega_power_matrix(ctx, r, ctx.dim() - 2 * r + 1)?;
    let kernel = if m.rows() == 0 {
        (0..ctx.betti(r as i64))
            .map(|i| {
                let mut v = vec![Rational::zero(); ctx.betti(r as i64)];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        m.kernel()
    };
    kernel
        .iter()
        .map(|v| CohElement::from_coordinates(ctx, r, v))
        .collect()
}

/// `a = Σ_q a_q` with `a_q ∈ ω^q V^{2r−2q}`; `components[q]` is `a_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzDecomposition {
    pub grade: u32,
    pub components: Vec<CohElement>,
}

pub fn lefschetz_decompose(ctx: &GrassContext, a: &CohElement) -> Result<LefschetzDecomposition> {
    a.check_context(ctx)?;
    let r = a.grade();
    if 2 * r > ctx.dim() {
        return Err(Error::Unsupported(format!(
            "grade {r} is above the middle; decompose its hard-Lefschetz preimage instead"
        )));
    }
    let mut spanning: Vec<(u32, CohElement)> = Vec::new();
    for q in 0..=r {
        for v in primitive_subspace(ctx, r - q)? {
            spanning.push((q, omega_power(ctx, &v, q)));
        }
    }
    let n = ctx.betti(r as i64);
    if spanning.len() != n {
        return Err(Error::Internal(format!(
            "primitive pieces span {} dimensions, expected {n}",
            spanning.len()
        )));
    }
    let columns: Vec<Vec<Rational>> = spanning.iter().map(|(_, v)| v.coordinates(ctx)).collect();
    let coords = Matrix::from_columns(n, &columns)
        .solve(&a.coordinates(ctx))
        .ok_or_else(|| Error::Internal("Lefschetz pieces are not independent".into()))?;
    let mut components: Vec<CohElement> = (0..=r).map(|_| CohElement::zero(ctx, r)).collect();
    for ((q, v), c) in spanning.iter().zip(&coords) {
        components[*q as usize].axpy(c, v);
    }
    Ok(LefschetzDecomposition {
        grade: r,
        components,
    })
}

/// One vector of the Lefschetz-compatible orthogonal basis: `ω^q v_label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzVector {
    pub q: u32,
    /// Exponent vector of the `c̄`-monomial the primitive part was projected from.
    pub label: Exponents,
    pub element: CohElement,
    pub norm: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveLevel {
    pub grade: u32,
    /// `v_r`, obtained from `c̄_r`; present for `r ≥ 2`.
    pub generator: Option<CohElement>,
    /// Orthogonal basis of `V^{2r}` (the `q = 0` vectors of `orthogonal`).
    pub primitive: Vec<LefschetzVector>,
    /// Orthogonal basis of all of `H^{2r}` compatible with the Lefschetz decomposition.
    pub orthogonal: Vec<LefschetzVector>,
}

impl PrimitiveLevel {
    pub fn generator_norm(&self) -> Option<&Rational> {
        let label = Exponents::symbol(self.grade);
        self.primitive
            .iter()
            .find(|v| v.label == label)
            .map(|v| &v.norm)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveBasis {
    pub shape: Shape,
    pub levels: Vec<PrimitiveLevel>,
}

impl PrimitiveBasis {
    pub fn level(&self, r: u32) -> Option<&PrimitiveLevel> {
        self.levels.get(r as usize)
    }

    pub fn generator(&self, r: u32) -> Option<&CohElement> {
        self.level(r).and_then(|l| l.generator.as_ref())
    }

    /// `(v_r, v_r)_ω`.
    pub fn generator_norm(&self, r: u32) -> Option<&Rational> {
        self.level(r).and_then(PrimitiveLevel::generator_norm)
    }
}

/// Gram–Schmidt primitive generators for every `r ≤ min(k, ⌊N/2⌋)`.
pub fn primitive_generators(ctx: &GrassContext) -> Result<PrimitiveBasis> {
    primitive_generators_up_to(ctx, ctx.k().min(ctx.dim() / 2))
}

/// Same as [`primitive_generators`] but stops at grade `r_max`.
///
/// Grade `r` is built from `ω ·` (grade `r−1` orthogonal basis), which stays
/// orthogonal because `∪ω` is an isometry below the middle, followed by the
/// `c̄`-monomials with no `c̄_1` factor in decreasing lexicographic order of
/// `(j_2, …, j_k)`, each projected off everything before it.
pub fn primitive_generators_up_to(ctx: &GrassContext, r_max: u32) -> Result<PrimitiveBasis> {
    let r_max = r_max.min(ctx.k()).min(ctx.dim() / 2);
    let one = CohElement::one(ctx);
    let unit_norm = form(ctx, &one, &one)?;
    let base = LefschetzVector {
        q: 0,
        label: Exponents::unit(),
        element: one,
        norm: unit_norm,
    };
    let mut levels = vec![PrimitiveLevel {
        grade: 0,
        generator: None,
        primitive: vec![base.clone()],
        orthogonal: vec![base],
    }];
    for r in 1..=r_max {
        let prev = &levels[r as usize - 1].orthogonal;
        let mut orthogonal = Vec::with_capacity(ctx.betti(r as i64));
        for v in prev {
            let element = omega_power(ctx, &v.element, 1);
            let norm = form(ctx, &element, &element)?;
            orthogonal.push(LefschetzVector {
                q: v.q + 1,
                label: v.label.mul(&Exponents::symbol(1)),
                element,
                norm,
            });
        }
        let mut primitive = Vec::new();
        for label in monomial_basis(ctx, r)
            .into_iter()
            .filter(|e| e.exponent(1) == 0)
        {
            let mut w = special_monomial(ctx, &label);
            for u in &orthogonal {
                let c = form(ctx, &w, &u.element)? / &u.norm;
                w.axpy(&-c, &u.element);
            }
            let norm = form(ctx, &w, &w)?;
            if norm.is_zero() {
                return Err(Error::Internal(format!(
                    "isotropic vector from {} at grade {r}",
                    label.display_with("c̄")
                )));
            }
            let v = LefschetzVector {
                q: 0,
                label,
                element: w,
                norm,
            };
            primitive.push(v.clone());
            orthogonal.push(v);
        }
        let generator = (r >= 2).then(|| {
            let label = Exponents::symbol(r);
            primitive
                .iter()
                .find(|v| v.label == label)
                .map(|v| v.element.clone())
                .expect("c̄_r is among the primitive candidates for r <= k")
        });
        levels.push(PrimitiveLevel {
            grade: r,
            generator,
            primitive,
            orthogonal,
        });
    }
    Ok(PrimitiveBasis {
        shape: ctx.shape(),
        levels,
    })
}

/// `(v_2, v_2) = deg G_{n,k} · (k²−1)((n−k)²−1) / (2(N−1)²(N−2)(N−3))`.
pub fn v2_norm_closed_form(n: u32, k: u32) -> Result<Rational> {
    if k == 0 || 2 * k > n {
        return Err(Error::Domain(format!("G({n},{k}) needs 1 <= k <= n/2")));
    }
    let dim = (k * (n - k)) as i64;
    if dim <= 3 {
        return Err(Error::Domain(format!(
            "closed form has a pole for N = {dim} <= 3"
        )));
    }
    let (k, w) = (k as i64, (n - k) as i64);
    let num = grassmannian_degree_nk(n, k as u32) * int((k * k - 1) * (w * w - 1));
    let den = int(2 * (dim - 1) * (dim - 1) * (dim - 2) * (dim - 3));
    Ok(Rational::new(num, den))
}

/// Exact certificate that `(−1)^{q+r}(·,·)_ω` is positive definite on `ω^q V^{2r−2q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitenessCertificate {
    pub grade: u32,
    pub q: u32,
    pub sign: i8,
    pub dimension: usize,
    /// Leading principal minors of the sign-adjusted Gram matrix, all positive.
    pub minors: Vec<Rational>,
}

pub fn definiteness_sign(ctx: &GrassContext, r: u32, q: u32) -> Result<DefinitenessCertificate> {
    check_middle(ctx, r)?;
    if q > r {
        return Err(Error::Range(format!("q = {q} exceeds r = {r}")));
    }
    let basis: Vec<CohElement> = primitive_subspace(ctx, r - q)?
        .iter()
        .map(|v| omega_power(ctx, v, q))
        .collect();
    let sign: i8 = if (q + r).is_multiple_of(2) { 1 } else { -1 };
    let signed = Rational::from_integer(sign.into());
    let rows = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| form(ctx, a, b).map(|v| v * &signed))
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let gram = Matrix::from_rows(rows);
    let minors = if basis.is_empty() {
        Vec::new()
    } else {
        gram.leading_principal_minors()
    };
    if let Some(bad) = minors.iter().position(|m| !m.is_positive()) {
        return Err(Error::Internal(format!(
            "(−1)^(q+r) form on ω^{q}V^{} of {} has leading minor {} = {}",
            2 * (r - q),
            ctx.shape(),
            bad + 1,
            minors[bad]
        )));
    }
    Ok(DefinitenessCertificate {
        grade: r,
        q,
        sign,
        dimension: basis.len(),
        minors,
    })
}

/// Matrix of `∪ω^{N−2r}: H^{2r} → H^{2N−2r}` on Schubert bases.
pub fn hard_lefschetz_matrix(ctx: &GrassContext, r: u32) -> Result<Matrix> {
    check_middle(ctx, r)?;
    omega_power_matrix(ctx, r, ctx.dim() - 2 * r)
}

/// `⟨a b (tω)^{N−2r}, μ⟩`, applying the scalar at every Pieri step.
pub fn form_for_multiple(
    ctx: &GrassContext,
    t: &Rational,
    a: &CohElement,
    b: &CohElement,
) -> Result<Rational> {
    check_middle(ctx, a.grade())?;
    let mut x = b.clone();
    for _ in 0..ctx.dim() - 2 * a.grade() {
        x = omega_power(ctx, &x, 1).scale(t);
    }
    Ok(top_pairing(ctx, a, &x))
}

/// `deg(c̄^e) = ⟨c̄^e ω^{N−|e|}, μ⟩` as an exact rational.
pub fn monomial_degree(ctx: &GrassContext, e: &Exponents) -> Rational {
    let v = special_monomial(ctx, e);
    if v.grade() > ctx.dim() {
        return Rational::zero();
    }
    let top = omega_power(ctx, &v, ctx.dim() - v.grade());
    top.coefficient(&ctx.top_partition())
}

/// `deg(G_{n,k})` as a rational, for formulas mixing it with pairings.
pub fn degree_rational(ctx: &GrassContext) -> Rational {
    rat_int(grassmannian_degree_nk(ctx.n(), ctx.k()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::Family;
    use crate::exact::rat;
    use crate::schubert::{multiply, top_coefficient};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sigma(ctx: &GrassContext, s: &str) -> CohElement {
        CohElement::schubert(ctx, &p(s)).unwrap()
    }

    fn form_by_product(ctx: &GrassContext, a: &CohElement, b: &CohElement) -> Rational {
        let ab = multiply(ctx, a, b).unwrap();
        top_coefficient(ctx, &omega_power(ctx, &ab, ctx.dim() - 2 * a.grade()))
    }

    #[test]
    fn pairing_matrix_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        assert_eq!(pairing_matrix(&ctx, 2).unwrap().matrix, Matrix::identity(2));
        assert_eq!(
            pairing_matrix(&ctx, 1).unwrap().matrix,
            Matrix::from_rows(vec![vec![rat(2, 1)]])
        );
        for (n, k) in [(4, 2), (6, 3), (7, 2)] {
            let ctx = GrassContext::new(n, k).unwrap();
            let m = pairing_matrix(&ctx, 0).unwrap().matrix;
            assert_eq!(m, Matrix::from_rows(vec![vec![degree_rational(&ctx)]]));
        }
        assert!(pairing_matrix(&ctx, 3).is_err());
    }

    #[test]
    fn pairing_matrix_matches_full_products_and_is_nondegenerate() {
        for (n, k) in [(5, 2), (6, 3), (7, 3), (8, 2)] {
            let ctx = GrassContext::new(n, k).unwrap();
            for r in 0..=ctx.dim() / 2 {
                let pm = pairing_matrix(&ctx, r).unwrap();
                assert!(pm.matrix.is_symmetric());
                assert!(!pm.matrix.determinant().is_zero());
                for (i, a) in pm.basis.iter().enumerate() {
                    for (j, b) in pm.basis.iter().enumerate() {
                        let want =
                            form_by_product(&ctx, &sigma(&ctx, &fmt(a)), &sigma(&ctx, &fmt(b)));
                        assert_eq!(pm.matrix[(i, j)], want);
                    }
                }
            }
        }
    }

    fn fmt(p: &Partition) -> String {
        p.parts()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    #[test]
    fn primitive_subspace_examples() {
        let g42 = GrassContext::new(4, 2).unwrap();
        let v = primitive_subspace(&g42, 2).unwrap();
        assert_eq!(v.len(), 1);
        let diff = sigma(&g42, "2").try_sub(&sigma(&g42, "1,1")).unwrap();
        // span{σ_2 − σ_{1,1}}: the kernel vector is a multiple of it
        let ratio = v[0].coefficient(&p("2"));
        assert_eq!(v[0], diff.scale(&ratio));
        for (n, k) in [(4, 2), (6, 3), (9, 4)] {
            let ctx = GrassContext::new(n, k).unwrap();
            assert!(primitive_subspace(&ctx, 1).unwrap().is_empty());
        }
        let g63 = GrassContext::new(6, 3).unwrap();
        assert_eq!(primitive_subspace(&g63, 2).unwrap().len(), 1);
        assert!(primitive_subspace(&g63, 5).is_err());
    }

    #[test]
    fn primitive_dimensions_are_betti_differences() {
        for n in 2..=9 {
            for k in 1..=n / 2 {
                let ctx = GrassContext::new(n, k).unwrap();
                for r in 0..=ctx.dim() / 2 {
                    let v = primitive_subspace(&ctx, r).unwrap();
                    assert_eq!(v.len(), ctx.betti(r as i64) - ctx.betti(r as i64 - 1));
                    for x in &v {
                        assert!(omega_power(&ctx, x, ctx.dim() - 2 * r + 1).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let d = lefschetz_decompose(&ctx, &sigma(&ctx, "2")).unwrap();
        let half = rat(1, 2);
        let prim = sigma(&ctx, "2")
            .try_sub(&sigma(&ctx, "1,1"))
            .unwrap()
            .scale(&half);
        let omega2 = omega_power(&ctx, &CohElement::one(&ctx), 2).scale(&half);
        assert_eq!(d.components[0], prim);
        assert!(d.components[1].is_zero());
        assert_eq!(d.components[2], omega2);

        let g63 = GrassContext::new(6, 3).unwrap();
        let v = &primitive_subspace(&g63, 2).unwrap()[0];
        let d = lefschetz_decompose(&g63, v).unwrap();
        assert_eq!(&d.components[0], v);
        assert!(d.components[1..].iter().all(CohElement::is_zero));
        let w3 = omega_power(&g63, &CohElement::one(&g63), 3);
        let d = lefschetz_decompose(&g63, &w3).unwrap();
        assert_eq!(d.components[3], w3);
        assert!(d.components[..3].iter().all(CohElement::is_zero));
        assert!(lefschetz_decompose(&g63, &omega_power(&g63, &w3, 2)).is_err());
    }

    #[test]
    fn decomposition_sums_back_and_is_orthogonal() {
        for (n, k) in [(6, 3), (7, 3), (8, 4)] {
            let ctx = GrassContext::new(n, k).unwrap();
            for r in 0..=ctx.dim() / 2 {
                for nu in ctx.basis(r).unwrap() {
                    let a = CohElement::schubert(&ctx, nu).unwrap();
                    let d = lefschetz_decompose(&ctx, &a).unwrap();
                    let mut total = CohElement::zero(&ctx, r);
                    for c in &d.components {
                        total = total.try_add(c).unwrap();
                    }
                    assert_eq!(total, a);
                    for (i, x) in d.components.iter().enumerate() {
                        for y in &d.components[i + 1..] {
                            assert!(form(&ctx, x, y).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn v2_in_g42() {
        let ctx = GrassContext::new(4, 2).unwrap();
        let basis = primitive_generators(&ctx).unwrap();
        let v2 = basis.generator(2).unwrap();
        let want = sigma(&ctx, "2")
            .try_sub(&sigma(&ctx, "1,1"))
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(v2, &want);
        assert_eq!(basis.generator_norm(2), Some(&rat(1, 2)));
        assert_eq!(v2_norm_closed_form(4, 2).unwrap(), rat(1, 2));
    }

    #[test]
    fn generators_are_primitive_and_differ_from_cbar_by_decomposables() {
        for (n, k) in [(6, 3), (8, 4), (9, 3), (10, 5)] {
            let ctx = GrassContext::new(n, k).unwrap();
            let basis = primitive_generators(&ctx).unwrap();
            for level in &basis.levels {
                let r = level.grade;
                assert_eq!(level.orthogonal.len(), ctx.betti(r as i64));
                assert_eq!(
                    level.primitive.len(),
                    ctx.betti(r as i64) - ctx.betti(r as i64 - 1)
                );
                for v in &level.primitive {
                    assert!(omega_power(&ctx, &v.element, ctx.dim() - 2 * r + 1).is_zero());
                }
                for (i, a) in level.orthogonal.iter().enumerate() {
                    for b in &level.orthogonal[i + 1..] {
                        assert!(form(&ctx, &a.element, &b.element).unwrap().is_zero());
                    }
                }
                if let Some(v) = &level.generator {
                    // coordinates of v_r − c̄_r on the c̄-monomial basis have no c̄_r part
                    let diff = v.try_sub(&CohElement::special(&ctx, r)).unwrap();
                    let m = crate::chern::schubert_matrix(&ctx, Family::DualChern, r).unwrap();
                    let coords = m.solve(&diff.coordinates(&ctx)).unwrap();
                    let mono = monomial_basis(&ctx, r);
                    let pos = mono
                        .iter()
                        .position(|e| *e == Exponents::symbol(r))
                        .unwrap();
                    assert!(coords[pos].is_zero());
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_order_for_g12_6() {
        let ctx = GrassContext::new(12, 6).unwrap();
        let labels: Vec<String> = monomial_basis(&ctx, 6)
            .into_iter()
            .filter(|e| e.exponent(1) == 0)
            .map(|e| e.display_with("c̄"))
            .collect();
        assert_eq!(labels, vec!["c̄2^3", "c̄2 c̄4", "c̄3^2", "c̄6"]);
    }

    #[test]
    fn v3_norm_matches_displayed_expression_in_g12_6() {
        let ctx = GrassContext::new(12, 6).unwrap();
        let basis = primitive_generators_up_to(&ctx, 3).unwrap();
        let v3v3 = basis.generator_norm(3).unwrap().clone();
        let deg = |e: Vec<u32>| monomial_degree(&ctx, &Exponents::new(e));
        let deg_g = degree_rational(&ctx);
        let d2 = deg(vec![0, 1]);
        let d3 = deg(vec![0, 0, 1]);
        let d22 = deg(vec![0, 2]);
        let d33 = deg(vec![0, 0, 2]);
        let d32 = deg(vec![0, 1, 1]);
        let d3v2 = &d32 - &d2 * &d3 / &deg_g;
        let displayed = &d33
            - &d3 * &d3 / &deg_g
            - (&d32 * &deg_g - &d2 * &d3) / (&deg_g * &d22 - &d2 * &d2) * &d3v2;
        assert_eq!(v3v3, displayed);
        assert!(v3v3.is_negative());
    }

    #[test]
    fn closed_form_cases() {
        let ctx = GrassContext::new(6, 2).unwrap();
        let basis = primitive_generators(&ctx).unwrap();
        assert_eq!(
            basis.generator_norm(2).unwrap(),
            &v2_norm_closed_form(6, 2).unwrap()
        );
        assert!(v2_norm_closed_form(3, 1).is_err());
        assert!(v2_norm_closed_form(4, 1).is_err());
        assert!(v2_norm_closed_form(5, 3).is_err());
    }

    #[test]
    fn definiteness_examples() {
        let g42 = GrassContext::new(4, 2).unwrap();
        let c = definiteness_sign(&g42, 2, 0).unwrap();
        assert_eq!((c.sign, c.dimension), (1, 1));
        let g63 = GrassContext::new(6, 3).unwrap();
        let c = definiteness_sign(&g63, 2, 1).unwrap();
        assert_eq!((c.sign, c.dimension), (-1, 0));
        for r in 0..=4 {
            let c = definiteness_sign(&g63, r, r).unwrap();
            assert_eq!((c.sign, c.dimension), (1, 1));
            assert_eq!(c.minors, vec![degree_rational(&g63)]);
        }
        assert!(definiteness_sign(&g63, 2, 3).is_err());
        assert!(definiteness_sign(&g63, 5, 0).is_err());
    }

    #[test]
    fn isometry_scaling_and_hard_lefschetz() {
        for (n, k) in [(6, 3), (7, 3), (8, 3)] {
            let ctx = GrassContext::new(n, k).unwrap();
            for r in 1..=ctx.dim() / 2 {
                let prev = ctx.basis(r - 1).unwrap();
                for a in prev {
                    for b in prev {
                        let (a, b) = (sigma(&ctx, &fmt(a)), sigma(&ctx, &fmt(b)));
                        let wa = omega_power(&ctx, &a, 1);
                        let wb = omega_power(&ctx, &b, 1);
                        assert_eq!(form(&ctx, &a, &b).unwrap(), form(&ctx, &wa, &wb).unwrap());
                    }
                }
                let t = rat(-3, 2);
                let pm = pairing_matrix(&ctx, r).unwrap();
                let tpow = (0..ctx.dim() - 2 * r).fold(rat(1, 1), |acc, _| acc * &t);
                for (i, a) in pm.basis.iter().enumerate() {
                    for (j, b) in pm.basis.iter().enumerate() {
                        let v = form_for_multiple(
                            &ctx,
                            &t,
                            &sigma(&ctx, &fmt(a)),
                            &sigma(&ctx, &fmt(b)),
                        )
                        .unwrap();
                        assert_eq!(v, &pm.matrix[(i, j)] * &tpow);
                    }
                }
                assert!(hard_lefschetz_matrix(&ctx, r).unwrap().inverse().is_some());
            }
        }
    }
}

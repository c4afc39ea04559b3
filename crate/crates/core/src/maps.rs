//! Degree obstructions for maps `f: G_{n,k} → G_{m,l}` of equal dimension:
//! the candidate degree `λ^N deg G_{n,k} / deg G_{m,l}`, the rationality
//! constraints on `λ_j²`, the invariant `Q`, and a consolidated verdict.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, int, integer_sqrt_exact, rational_sqrt_exact, Int, Rational};
use crate::grassmann::{Field, GrassContext, Shape};
use crate::lefschetz::{primitive_generators_up_to, PrimitiveBasis};
use crate::schubert::grassmannian_degree_nk;

/// Default bound `Λ` on `|λ|` when listing candidate degrees.
pub const DEFAULT_LAMBDA_MAX: u32 = 16;

#[derive(Clone, Debug)]
pub struct MapProblem {
    source: GrassContext,
    target: GrassContext,
}

impl MapProblem {
    pub fn new(source: (u32, u32), target: (u32, u32), field: Field) -> Result<Self> {
        let source = GrassContext::with_field(source.0, source.1, field)?;
        let target = GrassContext::with_field(target.0, target.1, field)?;
        if source.dim() != target.dim() {
            return Err(Error::Domain(format!(
                "dimension mismatch: {} has dimension {}, {} has dimension {}",
                source.shape(),
                source.dim(),
                target.shape(),
                target.dim()
            )));
        }
        Ok(MapProblem { source, target })
    }

    pub fn source(&self) -> &GrassContext {
        &self.source
    }

    pub fn target(&self) -> &GrassContext {
        &self.target
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn dim(&self) -> u32 {
        self.source.dim()
    }

    pub fn is_identity_shape(&self) -> bool {
        self.source.shape() == self.target.shape()
    }
}

/// All `(n, m)` with `2k ≤ n ≤ n_max`, `l(m−l) = k(n−k)` and `2l ≤ m`.
pub fn dimension_matches(k: u32, l: u32, n_max: u32) -> Vec<(u32, u32)> {
    if k == 0 || l == 0 {
        return Vec::new();
    }
    (2 * k..=n_max)
        .filter_map(|n| {
            let dim = k * (n - k);
            dim.is_multiple_of(l)
                .then(|| dim / l + l)
                .filter(|&m| 2 * l <= m)
                .map(|m| (n, m))
        })
        .collect()
}

/// `deg G_{n,k} / deg G_{m,l}` in lowest terms.
pub fn degree_ratio(problem: &MapProblem) -> Rational {
    let s = problem.source.shape();
    let t = problem.target.shape();
    Rational::new(
        grassmannian_degree_nk(s.n, s.k),
        grassmannian_degree_nk(t.n, t.k),
    )
}

/// `λ^N · deg G_{n,k} / deg G_{m,l}`.
pub fn candidate_degree(problem: &MapProblem, lambda: i64) -> Rational {
    let pow = num::pow(int(lambda), problem.dim() as usize);
    degree_ratio(problem) * Rational::from_integer(pow)
}

fn generator_norm(basis: &PrimitiveBasis, j: u32) -> Result<Rational> {
    basis
        .generator_norm(j)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("no primitive generator v_{j} for {}", basis.shape)))
}

fn check_j(problem: &MapProblem, j: u32) -> Result<()> {
    let top = problem.source.k().min(problem.target.k());
    if j < 2 || j > top {
        return Err(Error::Range(format!("j = {j} outside 2..={top}")));
    }
    Ok(())
}

/// Coefficient of `λ^{2j}` in `λ_j² = λ^{2j} · ratio · (u_j,u_j) / (v_j,v_j)`,
/// with `u_j` primitive in the target and `v_j` in the source.
pub fn lambda_j_squared(problem: &MapProblem, j: u32) -> Result<Rational> {
    check_j(problem, j)?;
    let source = primitive_generators_up_to(&problem.source, j)?;
    let target = primitive_generators_up_to(&problem.target, j)?;
    lambda_from_bases(problem, &source, &target, j)
}

fn lambda_from_bases(
    problem: &MapProblem,
    source: &PrimitiveBasis,
    target: &PrimitiveBasis,
    j: u32,
) -> Result<Rational> {
    let v = generator_norm(source, j)?;
    let u = generator_norm(target, j)?;
    Ok(degree_ratio(problem) * u / v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QInvariant {
    #[serde(with = "exact::int_str")]
    pub value: Int,
    pub is_square: bool,
    #[serde(with = "exact::opt_int_str")]
    pub root: Option<Int>,
}

/// `Q(a,b,c,d) = (a²−1)(b²−1)(c²−1)(d²−1)`.
pub fn q_product(a: u64, b: u64, c: u64, d: u64) -> Int {
    [a, b, c, d]
        .into_iter()
        .map(|x| Int::from(x) * Int::from(x) - Int::one())
        .product()
}

/// `Q = (l²−1)(k²−1)((m−l)²−1)((n−k)²−1)` with an exact square test.
pub fn q_invariant(problem: &MapProblem) -> Result<QInvariant> {
    let (s, t) = (problem.source.shape(), problem.target.shape());
    if t.k == 1 {
        return Err(Error::Unsupported(format!(
            "target {t} is a projective space; the Q test is vacuous"
        )));
    }
    let value = q_product(
        t.k as u64,
        s.k as u64,
        (t.n - t.k) as u64,
        (s.n - s.k) as u64,
    );
    let root = integer_sqrt_exact(&value);
    Ok(QInvariant {
        is_square: root.is_some(),
        root,
        value,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ForcedZero,
    UnconstrainedByTheseTests,
    ProjectiveTarget,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::ForcedZero => "forced-zero",
            Verdict::UnconstrainedByTheseTests => "unconstrained-by-these-tests",
            Verdict::ProjectiveTarget => "projective-target",
        })
    }
}

/// A recomputable reason for a forced-zero verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Reason {
    /// `k < l ≤ ⌊m/2⌋`: every such map has degree zero.
    KLessThanL { k: u32, l: u32 },
    QNonSquare {
        #[serde(with = "exact::int_str")]
        q: Int,
    },
    LambdaSquareNonSquare {
        j: u32,
        #[serde(with = "exact::rational")]
        value: Rational,
    },
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Reason::KLessThanL { k, l } => write!(f, "k-less-than-l (k={k} < l={l})"),
            Reason::QNonSquare { q } => write!(f, "q-non-square (Q={q})"),
            Reason::LambdaSquareNonSquare { j, value } => write!(
                f,
                "lambda-square-non-square (j={j}, coefficient {})",
                exact::fmt_rational(value)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ReportInputs {
    pub source: Shape,
    pub target: Shape,
    pub field: Field,
    pub lambda_max: u32,
    pub dimension: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDegree {
    pub lambda: i64,
    #[serde(with = "exact::rational")]
    pub value: Rational,
    pub integral: bool,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaSquare {
    pub j: u32,
    pub cohomological_degree: u32,
    #[serde(with = "exact::rational")]
    pub value: Rational,
    pub is_square: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct MapAnalysisReport {
    pub inputs: ReportInputs,
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    pub q: Option<QInvariant>,
    #[serde(with = "exact::rational")]
    pub degree_ratio: Rational,
    pub candidate_degrees: Vec<CandidateDegree>,
    pub lambda_squares: Vec<LambdaSquare>,
    pub notes: Vec<String>,
}

impl MapAnalysisReport {
    pub fn admissible_degrees(&self) -> impl Iterator<Item = &CandidateDegree> {
        self.candidate_degrees.iter().filter(|c| c.admissible)
    }
}

pub fn analyze_map(problem: &MapProblem, lambda_max: u32) -> Result<MapAnalysisReport> {
    let (s, t) = (problem.source.shape(), problem.target.shape());
    let field = problem.field();
    let mut reasons = Vec::new();
    let mut notes = Vec::new();

    if s.k < t.k {
        reasons.push(Reason::KLessThanL { k: s.k, l: t.k });
    }
    let q = match q_invariant(problem) {
        Ok(q) => {
            if !q.is_square {
                reasons.push(Reason::QNonSquare { q: q.value.clone() });
            }
            Some(q)
        }
        Err(Error::Unsupported(msg)) => {
            notes.push(msg);
            None
        }
        Err(e) => return Err(e),
    };

    let top_j = s.k.min(t.k);
    let mut lambda_squares = Vec::new();
    if top_j >= 2 {
        let source = primitive_generators_up_to(&problem.source, top_j)?;
        let target = primitive_generators_up_to(&problem.target, top_j)?;
        for j in 2..=top_j {
            let value = lambda_from_bases(problem, &source, &target, j)?;
            let is_square = rational_sqrt_exact(&value).is_some();
            if !is_square {
                reasons.push(Reason::LambdaSquareNonSquare {
                    j,
                    value: value.clone(),
                });
            }
            lambda_squares.push(LambdaSquare {
                j,
                cohomological_degree: field.cohomological_degree(j),
                value,
                is_square,
            });
        }
    }

    let verdict = if !reasons.is_empty() {
        Verdict::ForcedZero
    } else if t.k == 1 {
        Verdict::ProjectiveTarget
    } else {
        Verdict::UnconstrainedByTheseTests
    };

    let ratio = degree_ratio(problem);
    let lambda_max = lambda_max as i64;
    let candidate_degrees = (-lambda_max..=lambda_max)
        .map(|lambda| {
            let value = candidate_degree(problem, lambda);
            let integral = value.is_integer();
            let admissible = integral && (value.is_zero() || verdict != Verdict::ForcedZero);
            CandidateDegree {
                lambda,
                value,
                integral,
                admissible,
            }
        })
        .collect::<Vec<_>>();

    if verdict == Verdict::ForcedZero {
        notes.push("every map between these manifolds has degree 0".into());
    } else if problem.is_identity_shape() {
        notes.push("degree ±1 occurs only for λ = ±1; such a map is a homotopy equivalence".into());
    } else {
        notes.push("degree ±1 is impossible unless source and target coincide".into());
    }
    if candidate_degrees
        .iter()
        .any(|c| c.admissible && !c.value.is_zero() && c.value.abs() == Rational::one())
        && !problem.is_identity_shape()
    {
        return Err(Error::Internal(format!(
            "degree ±1 candidate for distinct {s} and {t}"
        )));
    }
    if field == Field::H {
        notes.push(
            "quaternionic case: ring data as over C with cohomological degrees doubled".into(),
        );
    }

    Ok(MapAnalysisReport {
        inputs: ReportInputs {
            source: s,
            target: t,
            field,
            lambda_max: lambda_max as u32,
            dimension: problem.dim(),
        },
        verdict,
        reasons,
        q,
        degree_ratio: ratio,
        candidate_degrees,
        lambda_squares,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn problem(s: (u32, u32), t: (u32, u32)) -> MapProblem {
        MapProblem::new(s, t, Field::C).unwrap()
    }

    fn matched_pairs(n_max: u32) -> Vec<((u32, u32), (u32, u32))> {
        let mut out = Vec::new();
        for k in 2..=n_max / 2 {
            for l in 1..k {
                for (n, m) in dimension_matches(k, l, n_max) {
                    out.push(((n, k), (m, l)));
                }
            }
        }
        out
    }

    #[test]
    fn dimension_match_examples() {
        assert_eq!(dimension_matches(3, 2, 8), vec![(7, 8)]);
        assert!(dimension_matches(2, 2, 12).iter().all(|(n, m)| n == m));
        let m = dimension_matches(4, 2, 18);
        assert_eq!(m.len(), 11);
        assert!(m.iter().all(|&(n, m)| m == 2 + 2 * (n - 4)));
        // brute-force oracle
        for (k, l) in [(3, 2), (5, 3), (6, 4), (4, 1)] {
            let brute: Vec<(u32, u32)> = (2 * k..=20)
                .flat_map(|n| (2 * l..=200).map(move |m| (n, m)))
                .filter(|&(n, m)| k * (n - k) == l * (m - l))
                .collect();
            assert_eq!(dimension_matches(k, l, 20), brute);
        }
        assert!(MapProblem::new((7, 3), (9, 2), Field::C).is_err());
    }

    #[test]
    fn ratio_and_candidates() {
        let p = problem((7, 3), (8, 2));
        assert_eq!(degree_ratio(&p), rat(7, 2));
        assert_eq!(candidate_degree(&p, 0), rat(0, 1));
        assert_eq!(candidate_degree(&p, 1), rat(7, 2));
        assert_eq!(candidate_degree(&p, 2), rat(7 * 4096 / 2, 1));
        let id = problem((6, 3), (6, 3));
        assert_eq!(degree_ratio(&id), rat(1, 1));
        assert_eq!(candidate_degree(&id, 1), rat(1, 1));
        assert_eq!(candidate_degree(&id, -1), rat(-1, 1));
    }

    #[test]
    fn ratio_exceeds_one_below_twelve() {
        let pairs = matched_pairs(12);
        assert!(!pairs.is_empty());
        for (s, t) in pairs {
            assert!(degree_ratio(&problem(s, t)) > rat(1, 1), "{s:?} -> {t:?}");
        }
    }

    #[test]
    fn q_examples() {
        let q = q_invariant(&problem((7, 3), (8, 2))).unwrap();
        assert_eq!(q.value, int(12600));
        assert!(!q.is_square);
        let q = q_invariant(&problem((4, 2), (4, 2))).unwrap();
        assert_eq!((q.value, q.root), (int(81), Some(int(9))));
        assert_eq!(q_product(2, 3, 2, 3), int(576));
        assert!(q_invariant(&problem((5, 2), (7, 1))).is_err());
    }

    #[test]
    fn lambda_square_examples() {
        let id = problem((8, 3), (8, 3));
        for j in 2..=3 {
            assert_eq!(lambda_j_squared(&id, j).unwrap(), rat(1, 1));
        }
        let p = problem((7, 3), (8, 2));
        let v = lambda_j_squared(&p, 2).unwrap();
        assert_eq!(v, rat(105, 120));
        assert!(rational_sqrt_exact(&v).is_none());
        assert!(lambda_j_squared(&p, 3).is_err());
        assert!(lambda_j_squared(&p, 1).is_err());
    }

    #[test]
    fn lambda_two_matches_q_form() {
        // ratio · (u_2,u_2)/(v_2,v_2) = ((l²−1)((m−l)²−1)) / ((k²−1)((n−k)²−1))
        for (s, t) in matched_pairs(11).into_iter().filter(|(_, t)| t.1 >= 2) {
            let p = problem(s, t);
            let v = lambda_j_squared(&p, 2).unwrap();
            let a = |n: u32, k: u32| int(((k * k - 1) * ((n - k) * (n - k) - 1)) as i64);
            assert_eq!(v, Rational::new(a(t.0, t.1), a(s.0, s.1)));
            let q = q_invariant(&p).unwrap();
            assert_eq!(
                rational_sqrt_exact(&v).is_some(),
                q.is_square,
                "{s:?} -> {t:?}"
            );
        }
    }

    #[test]
    fn analyze_examples() {
        let r = analyze_map(&problem((18, 2), (12, 4)), DEFAULT_LAMBDA_MAX).unwrap();
        assert_eq!(r.verdict, Verdict::ForcedZero);
        assert!(r.reasons.contains(&Reason::KLessThanL { k: 2, l: 4 }));

        let r = analyze_map(&problem((7, 3), (8, 2)), DEFAULT_LAMBDA_MAX).unwrap();
        assert_eq!(r.verdict, Verdict::ForcedZero);
        assert!(r.reasons.contains(&Reason::QNonSquare { q: int(12600) }));
        assert!(r.admissible_degrees().all(|c| c.value.is_zero()));

        let r = analyze_map(&problem((6, 3), (6, 3)), 2).unwrap();
        assert_eq!(r.verdict, Verdict::UnconstrainedByTheseTests);
        assert_eq!(r.candidate_degrees.len(), 5);
        for c in &r.candidate_degrees {
            assert_eq!(c.value, Rational::from_integer(num::pow(int(c.lambda), 9)));
            assert!(c.admissible);
            assert_eq!(c.value.abs() == rat(1, 1), c.lambda.abs() == 1);
        }

        let r = analyze_map(&problem((5, 2), (7, 1)), 3).unwrap();
        assert_eq!(r.verdict, Verdict::ProjectiveTarget);
        assert!(r.q.is_none());
    }

    #[test]
    fn report_json_round_trip() {
        let r = analyze_map(&problem((7, 3), (8, 2)), 3).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"verdict\":\"forced-zero\""));
        assert!(s.contains("\"rule\":\"q-non-square\""));
        assert!(s.contains("\"degree-ratio\":{\"num\":\"7\",\"den\":\"2\"}"));
        let back: MapAnalysisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn quaternionic_reports_agree() {
        for (s, t) in [((7, 3), (8, 2)), ((6, 3), (6, 3)), ((18, 2), (12, 4))] {
            let c = analyze_map(&MapProblem::new(s, t, Field::C).unwrap(), 4).unwrap();
            let h = analyze_map(&MapProblem::new(s, t, Field::H).unwrap(), 4).unwrap();
            assert_eq!(c.verdict, h.verdict);
            assert_eq!(c.reasons, h.reasons);
            assert_eq!(c.q, h.q);
            assert_eq!(c.candidate_degrees, h.candidate_degrees);
            for (a, b) in c.lambda_squares.iter().zip(&h.lambda_squares) {
                assert_eq!(a.value, b.value);
                assert_eq!(2 * a.cohomological_degree, b.cohomological_degree);
            }
        }
    }

    proptest! {
        #[test]
        fn q_square_status_is_swap_invariant(k in 2u64..40, w in 2u64..40, l in 2u64..40, v in 2u64..40) {
            let a = integer_sqrt_exact(&q_product(l, k, v, w)).is_some();
            let b = integer_sqrt_exact(&q_product(v, w, l, k)).is_some();
            let c = integer_sqrt_exact(&q_product(l, w, v, k)).is_some();
            prop_assert_eq!(a, b);
            prop_assert_eq!(a, c);
        }

        #[test]
        fn identity_is_never_forced_zero(n in 4u32..11, k_seed in 0u32..5) {
            let k = 1 + k_seed % (n / 2);
            let r = analyze_map(&problem((n, k), (n, k)), 2).unwrap();
            prop_assert!(r.verdict != Verdict::ForcedZero);
        }
    }
}

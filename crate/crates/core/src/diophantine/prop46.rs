use num::{Integer, Zero};
use serde::{Deserialize, Serialize};

use super::quadratic::enumerate_norm_solutions;
use crate::error::{Error, Result};
use crate::exact::{self, integer_sqrt_exact, Int};

/// One norm solution `(ξ, η)` tested against `ξ²η² + 2 = 3v²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop46Candidate {
    #[serde(with = "exact::int_str")]
    pub xi: Int,
    #[serde(with = "exact::int_str")]
    pub eta: Int,
    /// `ξ²η² + 2`.
    #[serde(with = "exact::int_str")]
    pub value: Int,
    #[serde(with = "exact::opt_int_str")]
    pub v: Option<Int>,
    pub satisfied: bool,
}

impl Prop46Candidate {
    fn test(xi: Int, eta: Int) -> Self {
        let p = &xi * &eta;
        let value = &p * &p + Int::from(2);
        let (q, r) = value.div_rem(&Int::from(3));
        let v = if r.is_zero() {
            integer_sqrt_exact(&q)
        } else {
            None
        };
        Prop46Candidate {
            xi,
            eta,
            satisfied: v.is_some(),
            v,
            value,
        }
    }
}

/// Outcome of testing the first `probe` solutions of the norm equation
/// attached to `Q(2,k,2c,kc)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop46Report {
    pub k: u32,
    pub d: u64,
    pub target: i64,
    pub candidates: Vec<Prop46Candidate>,
    pub all_fail: bool,
    /// First untested solution; any admissible `c` has `2c − 1 ≥ (ξη)²` for it.
    pub next: Option<Prop46Candidate>,
    /// `2c > (ξη)²` of `next`, present when every tested candidate fails.
    #[serde(with = "exact::opt_int_str")]
    pub bound: Option<Int>,
}

fn norm_equation(k: u32) -> Result<(u64, i64)> {
    match k {
        3 => Ok((3, -2)),
        7 => Ok((7, -6)),
        _ => Err(Error::Unsupported(format!(
            "k = {k}: only k = 3 and k = 7 are reduced"
        ))),
    }
}

/// If `Q(2,k,2c,kc)` is a square with `c > 1`, then `2c − 1 = ξ²η²` with
/// `ξ² − dη² = target` and `ξ²η² + 2 = 3v²`.  Tests the first `probe`
/// solutions and bounds `2c` from below by the next one.
pub fn prop46_bound(k: u32, probe: usize) -> Result<Prop46Report> {
    let (d, target) = norm_equation(k)?;
    let sols = enumerate_norm_solutions(d, &Int::from(target), probe + 1)?;
    let mut tested: Vec<Prop46Candidate> = sols
        .into_iter()
        .map(|(xi, eta)| Prop46Candidate::test(xi, eta))
        .collect();
    let next = (tested.len() > probe).then(|| tested.pop().expect("probe + 1 solutions"));
    let all_fail = tested.iter().all(|c| !c.satisfied);
    let bound = next
        .as_ref()
        .filter(|_| all_fail)
        .map(|n| &n.value - Int::from(2));
    Ok(Prop46Report {
        k,
        d,
        target,
        candidates: tested,
        all_fail,
        next,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CaseStatus {
    /// No solution modulo `modulus`.
    Obstructed { modulus: u64 },
    /// Locally solvable up to the search modulus; `witness` is a small
    /// integer solution if one was found.
    Survives { witness: Option<(u64, u64)> },
}

/// Square-free class pair `(p, q)` in `p s² + 2 = q t²`, from writing
/// consecutive-by-two factors as `p s²` and `q t²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCertificate {
    /// `"alpha-beta"` for `(2c−1, 2c+1)`, `"gamma-delta"` for `(kc−1, kc+1)`.
    pub pair: String,
    pub p: u64,
    pub q: u64,
    pub equation: String,
    pub status: CaseStatus,
}

const ALPHA_BETA_7: [(u64, u64); 9] = [
    (1, 1),
    (1, 5),
    (1, 3),
    (3, 1),
    (5, 1),
    (1, 15),
    (15, 1),
    (5, 3),
    (3, 5),
];
const ALPHA_BETA_3: [(u64, u64); 6] = [(1, 3), (3, 1), (3, 5), (5, 3), (1, 15), (15, 1)];
const GAMMA_DELTA_3: [(u64, u64); 6] = [(1, 2), (2, 1), (2, 5), (5, 2), (1, 10), (10, 1)];

const MAX_MODULUS: u64 = 64;
const WITNESS_BOUND: u64 = 200;

fn local_obstruction(p: u64, q: u64) -> Option<u64> {
    (2..=MAX_MODULUS).find(|&m| {
        let squares: Vec<u64> = (0..m).map(|s| s * s % m).collect();
        !squares
            .iter()
            .any(|&s2| squares.iter().any(|&t2| (p * s2 + 2) % m == q * t2 % m))
    })
}

fn small_witness(p: u64, q: u64) -> Option<(u64, u64)> {
    (0..=WITNESS_BOUND).find_map(|s| {
        let rhs = p * s * s + 2;
        if !rhs.is_multiple_of(q) {
            return None;
        }
        let t2 = Int::from(rhs / q);
        integer_sqrt_exact(&t2).map(|t| (s, u64::try_from(t).expect("small")))
    })
}

fn certificate(pair: &str, p: u64, q: u64) -> CaseCertificate {
    let status = match local_obstruction(p, q) {
        Some(modulus) => CaseStatus::Obstructed { modulus },
        None => CaseStatus::Survives {
            witness: small_witness(p, q),
        },
    };
    let (s, t) = if pair == "alpha-beta" {
        ("u", "v")
    } else {
        ("x", "y")
    };
    let coef = |c: u64| if c == 1 { String::new() } else { c.to_string() };
    CaseCertificate {
        pair: pair.into(),
        p,
        q,
        equation: format!("{}{s}²+2={}{t}²", coef(p), coef(q)),
        status,
    }
}

type Pairs = Vec<(u64, u64)>;

/// Local-solvability certificates for the class pairs of the square-free
/// parts of `2c ± 1` and `kc ± 1`.
pub fn case_certificates(k: u32) -> Result<Vec<CaseCertificate>> {
    let (alpha_beta, gamma_delta): (Pairs, Pairs) = match k {
        7 => (
            ALPHA_BETA_7.to_vec(),
            ALPHA_BETA_7
                .iter()
                .copied()
                .chain(ALPHA_BETA_7.iter().map(|&(a, b)| (2 * a, 2 * b)))
                .collect(),
        ),
        3 => (ALPHA_BETA_3.to_vec(), GAMMA_DELTA_3.to_vec()),
        _ => {
            return Err(Error::Unsupported(format!(
                "k = {k}: only k = 3 and k = 7 are tabulated"
            )))
        }
    };
    Ok(alpha_beta
        .into_iter()
        .map(|(p, q)| certificate("alpha-beta", p, q))
        .chain(
            gamma_delta
                .into_iter()
                .map(|(p, q)| certificate("gamma-delta", p, q)),
        )
        .collect())
}

impl CaseCertificate {
    pub fn survives(&self) -> bool {
        matches!(self.status, CaseStatus::Survives { .. })
    }
}

//! Exact number theory: perfect squares, square-free parts, Pell equations,
//! units and norm-equation orbits in `Z[√d]`, the `Q(2,k,2c,kc)` reduction to
//! norm equations, and bounded scans for `y² = Q(a,b,x,z)`.

mod prop46;
mod quadratic;
mod scan;

pub use prop46::{
    case_certificates, prop46_bound, CaseCertificate, CaseStatus, Prop46Candidate, Prop46Report,
};
pub use quadratic::{
    enumerate_norm_solutions, fundamental_unit, norm_orbit_generators, pell_fundamental,
    NormOrbitSet, PellSolution, QuadraticInteger,
};
pub use scan::{scan_q_squares, ScanHit, ScanReport};

use num::{Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, integer_sqrt_exact, Int};

/// Default trial-division bound for [`square_free_part`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Root of `v` when `v` is a perfect square; negative inputs have none.
pub fn perfect_square_root(v: &Int) -> Option<Int> {
    integer_sqrt_exact(v)
}

pub fn is_perfect_square(v: &Int) -> bool {
    integer_sqrt_exact(v).is_some()
}

/// `v = alpha · u²` with `alpha` square-free when `complete` holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareFreePart {
    #[serde(with = "exact::int_str")]
    pub alpha: Int,
    #[serde(with = "exact::int_str")]
    pub u: Int,
    /// False when a cofactor with no prime factor below the bound could not
    /// be classified; `alpha` then still satisfies `v = alpha · u²` but may
    /// carry a square factor.
    pub complete: bool,
}

/// Square-free decomposition by trial division up to `bound`.
pub fn square_free_part(v: &Int, bound: u64) -> Result<SquareFreePart> {
    if v < &Int::one() {
        return Err(Error::Domain(format!(
            "square_free_part needs v >= 1, got {v}"
        )));
    }
    let bound = bound.max(2);
    let mut rest = v.clone();
    let mut alpha = Int::one();
    let mut u = Int::one();
    let mut p: u64 = 2;
    let mut exhausted = true;
    loop {
        let pp = Int::from(p);
        if &pp * &pp > rest {
            break;
        }
        if p > bound {
            exhausted = false;
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&pp) {
            rest /= &pp;
            e += 1;
        }
        u *= num::pow(pp.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            alpha *= &pp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(SquareFreePart {
            alpha,
            u,
            complete: true,
        });
    }
    if exhausted {
        alpha *= rest;
        return Ok(SquareFreePart {
            alpha,
            u,
            complete: true,
        });
    }
    // every prime factor of `rest` exceeds the bound
    if let Some(s) = integer_sqrt_exact(&rest) {
        u *= s;
        return Ok(SquareFreePart {
            alpha,
            u,
            complete: true,
        });
    }
    let b = Int::from(bound);
    let complete = rest < &b * &b * &b;
    alpha *= rest;
    Ok(SquareFreePart { alpha, u, complete })
}

/// Square-freeness by exhaustive trial division (test oracle scale).
pub fn is_square_free_exhaustive(v: u64) -> bool {
    (2..)
        .take_while(|p| p * p <= v)
        .all(|p| !v.is_multiple_of(p * p))
}

pub(crate) fn check_nonzero(target: &Int) -> Result<()> {
    if target.is_zero() {
        return Err(Error::Domain("norm target must be non-zero".into()));
    }
    Ok(())
}

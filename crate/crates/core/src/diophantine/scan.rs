use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, integer_sqrt_exact, Int};
use crate::maps::q_product;

/// `y² = Q(a,b,x,z)` with `a z = b x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    pub x: u64,
    pub z: u64,
    #[serde(with = "exact::int_str")]
    pub y: Int,
    /// `x = 1` or `z = 1`, so `Q = 0`.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub a: u64,
    pub b: u64,
    pub x_max: u64,
    pub hits: Vec<ScanHit>,
}

impl ScanReport {
    pub fn proper_hits(&self) -> impl Iterator<Item = &ScanHit> {
        self.hits.iter().filter(|h| !h.degenerate)
    }

    pub fn contains(&self, x: u64, z: u64) -> bool {
        self.hits.iter().any(|h| h.x == x && h.z == z)
    }
}

fn probe(a: u64, b: u64, x: u64) -> Option<ScanHit> {
    if !(b * x).is_multiple_of(a) {
        return None;
    }
    let z = b * x / a;
    let y = integer_sqrt_exact(&q_product(a, b, x, z))?;
    Some(ScanHit {
        x,
        z,
        y,
        degenerate: x == 1 || z == 1,
    })
}

/// All `1 ≤ x ≤ x_max` with integral `z = bx/a` and `Q(a,b,x,z)` a square,
/// in increasing `x`.  `jobs > 1` splits the range over a thread pool; the
/// output does not depend on `jobs`.
pub fn scan_q_squares(a: u64, b: u64, x_max: u64, jobs: usize) -> Result<ScanReport> {
    if !(1 < a && a < b) {
        return Err(Error::Domain(format!(
            "scan needs 1 < a < b, got a={a}, b={b}"
        )));
    }
    if x_max < 1 {
        return Err(Error::Domain("x_max must be at least 1".into()));
    }
    if x_max.checked_mul(b).is_none() {
        return Err(Error::Range(format!("x_max = {x_max} overflows b·x")));
    }
    let hits = if jobs <= 1 {
        (1..=x_max).filter_map(|x| probe(a, b, x)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            (1..=x_max)
                .into_par_iter()
                .filter_map(|x| probe(a, b, x))
                .collect()
        })
    };
    Ok(ScanReport { a, b, x_max, hits })
}

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{check_nonzero, is_square_free_exhaustive};
use crate::error::{Error, Result};
use crate::exact::{self, integer_sqrt_exact, Int};

/// `a + b√d` in `Z[√d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticInteger {
    pub d: u64,
    #[serde(with = "exact::int_str")]
    pub a: Int,
    #[serde(with = "exact::int_str")]
    pub b: Int,
}

impl QuadraticInteger {
    pub fn new(d: u64, a: Int, b: Int) -> Self {
        QuadraticInteger { d, a, b }
    }

    pub fn from_i64(d: u64, a: i64, b: i64) -> Self {
        Self::new(d, Int::from(a), Int::from(b))
    }

    pub fn one(d: u64) -> Self {
        Self::from_i64(d, 1, 0)
    }

    pub fn norm(&self) -> Int {
        &self.a * &self.a - Int::from(self.d) * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        Self::new(self.d, self.a.clone(), -&self.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.d, -&self.a, -&self.b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "radicands differ");
        let d = Int::from(self.d);
        Self::new(
            self.d,
            &self.a * &other.a + d * &self.b * &other.b,
            &self.a * &other.b + &self.b * &other.a,
        )
    }

    /// `self / unit` for a unit of norm ±1.
    pub fn div_unit(&self, unit: &Self) -> Self {
        let n = unit.norm();
        let q = self.mul(&unit.conj());
        Self::new(self.d, q.a * &n, q.b * &n)
    }

    /// Sign of the real number `a + b√d`.
    pub fn signum(&self) -> i32 {
        let (sa, sb) = (sign(&self.a), sign(&self.b));
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with d·b²
        if &self.a * &self.a > Int::from(self.d) * &self.b * &self.b {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive_pair(&self) -> bool {
        self.a.is_positive() && self.b.is_positive()
    }

    /// `self ~ other` under multiplication by `±ν^k` with `ν` of norm 1:
    /// both share a norm `N` and `self · conj(other) ≡ 0 (mod N)`.
    pub fn same_orbit(&self, other: &Self) -> bool {
        let n = self.norm();
        if n != other.norm() || n.is_zero() {
            return false;
        }
        let p = self.mul(&other.conj());
        p.a.is_multiple_of(&n) && p.b.is_multiple_of(&n)
    }
}

fn sign(v: &Int) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for QuadraticInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("√{}", self.d);
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "{root}"),
            (true, false) if self.b == -Int::one() => write!(f, "-{root}"),
            (true, false) => write!(f, "{}{root}", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                let mag = self.b.abs();
                if mag.is_one() {
                    write!(f, "{}{sign}{root}", self.a)
                } else {
                    write!(f, "{}{sign}{mag}{root}", self.a)
                }
            }
        }
    }
}

/// `y² − d·x² = 1` with `minimal` set for the fundamental solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolution {
    pub d: u64,
    #[serde(with = "exact::int_str")]
    pub y: Int,
    #[serde(with = "exact::int_str")]
    pub x: Int,
    pub minimal: bool,
}

/// Convergents `p/q` of the continued fraction of `√d`, until one has
/// `p² − d q² = ±1` (when `accept_negative`) or `+1`.
fn first_unit_convergent(d: u64, accept_negative: bool) -> Result<(Int, Int)> {
    if d == 0 || integer_sqrt_exact(&Int::from(d)).is_some() {
        return Err(Error::Domain(format!(
            "d = {d} must be a positive non-square"
        )));
    }
    let a0 = Int::from(d).sqrt();
    let dd = Int::from(d);
    let (mut m, mut den, mut a) = (Int::zero(), Int::one(), a0.clone());
    let (mut p_prev, mut p) = (Int::one(), a0.clone());
    let (mut q_prev, mut q) = (Int::zero(), Int::one());
    loop {
        let norm = &p * &p - &dd * &q * &q;
        if norm.is_one() || (accept_negative && norm == -Int::one()) {
            return Ok((p, q));
        }
        m = &den * &a - &m;
        den = (&dd - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// Fundamental solution of `y² − d x² = 1` via the continued fraction of `√d`.
pub fn pell_fundamental(d: u64) -> Result<PellSolution> {
    let (y, x) = first_unit_convergent(d, false)?;
    Ok(PellSolution {
        d,
        y,
        x,
        minimal: true,
    })
}

/// Generator `ν > 1` of the units of `Z[√d]` modulo `±1`.
///
/// Supported for square-free `d ≢ 1 (mod 4)`, where `Z[√d]` is the full ring
/// of integers.
pub fn fundamental_unit(d: u64) -> Result<QuadraticInteger> {
    if d < 2 || !is_square_free_exhaustive(d) {
        return Err(Error::Unsupported(format!(
            "d = {d} is not a square-free radicand > 1"
        )));
    }
    if d % 4 == 1 {
        return Err(Error::Unsupported(format!(
            "d = {d} ≡ 1 (mod 4): the ring of integers is larger than Z[√d]"
        )));
    }
    let (a, b) = first_unit_convergent(d, true)?;
    Ok(QuadraticInteger::new(d, a, b))
}

/// Orbit representatives of `{x ∈ Z[√d] : N(x) = target}` under `±ν^k`
/// with `ν` the generator of the norm-one units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormOrbitSet {
    pub d: u64,
    #[serde(with = "exact::int_str")]
    pub target: Int,
    /// Fundamental unit of `Z[√d]` (its norm may be −1).
    pub unit: QuadraticInteger,
    /// Generator of the norm-one units acting on the solution set.
    pub orbit_unit: QuadraticInteger,
    pub generators: Vec<QuadraticInteger>,
}

impl NormOrbitSet {
    /// Index of the generator whose orbit contains `x`.
    pub fn orbit_of(&self, x: &QuadraticInteger) -> Option<usize> {
        self.generators.iter().position(|g| g.same_orbit(x))
    }

    /// Brute-force check that every solution with `|b| ≤ b_max` lies in an orbit.
    pub fn covers_up_to(&self, b_max: u64) -> bool {
        let d = Int::from(self.d);
        (0..=b_max).all(|b| {
            let b = Int::from(b);
            let a2 = &self.target + &d * &b * &b;
            match integer_sqrt_exact(&a2) {
                None => true,
                Some(a) => [
                    (a.clone(), b.clone()),
                    (-a.clone(), b.clone()),
                    (a.clone(), -b.clone()),
                    (-a, -b),
                ]
                .into_iter()
                .all(|(a, b)| {
                    self.orbit_of(&QuadraticInteger::new(self.d, a, b))
                        .is_some()
                }),
            }
        })
    }
}

fn canonical_key(x: &QuadraticInteger) -> (Int, Int, bool, bool) {
    (x.b.abs(), x.a.abs(), !x.a.is_positive(), !x.b.is_positive())
}

/// Orbit representatives via Nagell's bound on the fundamental solution of
/// each class: `d v² ≤ ... ` with `v² ≤ y₁²|N| / (2(x₁ ∓ 1))`.
pub fn norm_orbit_generators(d: u64, target: &Int) -> Result<NormOrbitSet> {
    check_nonzero(target)?;
    let unit = fundamental_unit(d)?;
    let orbit_unit = if unit.norm().is_one() {
        unit.clone()
    } else {
        unit.mul(&unit)
    };
    let (x1, y1) = (&orbit_unit.a, &orbit_unit.b);
    let shift = if target.is_negative() {
        -Int::one()
    } else {
        Int::one()
    };
    let v2_max = y1 * y1 * target.abs() / (Int::from(2) * (x1 + shift));
    let dd = Int::from(d);
    let mut candidates = Vec::new();
    let mut v = Int::zero();
    while &v * &v <= v2_max {
        let u2 = target + &dd * &v * &v;
        if let Some(u) = integer_sqrt_exact(&u2) {
            for (a, b) in [
                (u.clone(), v.clone()),
                (-u.clone(), v.clone()),
                (u.clone(), -v.clone()),
                (-u.clone(), -v.clone()),
            ] {
                candidates.push(QuadraticInteger::new(d, a, b));
            }
        }
        v += 1;
    }
    candidates.sort_by_key(canonical_key);
    let mut generators: Vec<QuadraticInteger> = Vec::new();
    for c in candidates {
        if !generators.iter().any(|g| g.same_orbit(&c)) {
            generators.push(c);
        }
    }
    Ok(NormOrbitSet {
        d,
        target: target.clone(),
        unit,
        orbit_unit,
        generators,
    })
}

/// Lowest element of the orbit of `g` with both coordinates positive.
fn positive_start(g: &QuadraticInteger, nu: &QuadraticInteger) -> QuadraticInteger {
    let mut y = if g.signum() < 0 { g.neg() } else { g.clone() };
    while !y.is_positive_pair() {
        y = y.mul(nu);
    }
    loop {
        let down = y.div_unit(nu);
        if !down.is_positive_pair() {
            return y;
        }
        y = down;
    }
}

/// First `count` solutions of `ξ² − dη² = target` with `ξ, η > 1`, by increasing `η`.
pub fn enumerate_norm_solutions(d: u64, target: &Int, count: usize) -> Result<Vec<(Int, Int)>> {
    let set = norm_orbit_generators(d, target)?;
    let nu = &set.orbit_unit;
    let mut heap = BinaryHeap::new();
    let mut starts: Vec<QuadraticInteger> = Vec::new();
    for g in &set.generators {
        let s = positive_start(g, nu);
        if !starts.contains(&s) {
            starts.push(s);
        }
    }
    for s in starts {
        heap.push(Reverse((s.b.clone(), s.a.clone())));
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(Reverse((b, a))) = heap.pop() else {
            break;
        };
        let x = QuadraticInteger::new(d, a, b);
        let next = x.mul(nu);
        heap.push(Reverse((next.b, next.a)));
        if x.a > Int::one() && x.b > Int::one() {
            out.push((x.a, x.b));
        }
    }
    Ok(out)
}

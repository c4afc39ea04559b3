//! Partitions in a `k × (n−k)` box, Schubert index sets, and the immutable
//! per-Grassmannian context that caches the graded Schubert bases.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, Int};

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(s)` labelling the special class `c̄_s`.
    pub fn row(s: u32) -> Self {
        if s == 0 {
            Partition::empty()
        } else {
            Partition(vec![s])
        }
    }

    /// The one-column partition `(1^s)`.
    pub fn column(s: u32) -> Self {
        Partition(vec![1; s as usize])
    }

    /// The full `rows × width` rectangle.
    pub fn rectangle(rows: u32, width: u32) -> Self {
        if width == 0 {
            Partition::empty()
        } else {
            Partition(vec![width; rows as usize])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: u32, width: u32) -> bool {
        self.len() <= rows as usize && self.part(0) <= width
    }

    /// Complement inside the `rows × width` box, rotated by 180°.
    pub fn complement(&self, rows: u32, width: u32) -> Partition {
        let rows = rows as usize;
        let parts = (0..rows).map(|i| width - self.part(rows - 1 - i)).collect();
        Partition::new(parts).expect("complement of a boxed partition is a partition")
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.part(0))
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Accepts `2,1`, `(2,1)`, `2 1`, and `∅`, `0` or the empty string for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = parse_list(t).map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Partition::new(parts).map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))
    }
}

fn parse_list(t: &str) -> std::result::Result<Vec<u32>, String> {
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|_| format!("invalid entry {p:?}")))
        .collect()
}

/// Strictly increasing `k`-subset `i_1 < … < i_k` of `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    /// Validates strict increase, positivity and `i_k ≤ n`.
    pub fn new(indices: Vec<u32>, n: u32) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::Domain("index sets are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        if indices.last().is_some_and(|&last| last > n) {
            return Err(Error::Domain(format!(
                "{indices:?} has an entry above n = {n}"
            )));
        }
        Ok(IndexSet(indices))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|i| = Σ (i_j − j)`, the complex dimension of the Schubert variety.
    pub fn dimension(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &i)| i - (j as u32 + 1))
            .sum()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// Parses `[2,4]` (brackets optional). Range checks against `n` need [`IndexSet::new`].
impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(t);
        let indices = parse_list(t).map_err(|e| Error::Parse(format!("index set {s:?}: {e}")))?;
        if indices.is_empty() {
            return Err(Error::Parse(format!("index set {s:?} is empty")));
        }
        IndexSet::new(indices, u32::MAX).map_err(|e| Error::Parse(format!("index set {s:?}: {e}")))
    }
}

/// Ground (skew-)field. Quaternionic Grassmannians share the complex ring
/// structure; only reported real cohomological degrees double.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub enum Field {
    #[default]
    C,
    H,
}

impl Field {
    /// Real cohomological degree of the ring grade `r`.
    pub fn cohomological_degree(self, r: u32) -> u32 {
        match self {
            Field::C => 2 * r,
            Field::H => 4 * r,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::C => "C",
            Field::H => "H",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "C" | "c" | "ℂ" => Ok(Field::C),
            "H" | "h" | "ℍ" => Ok(Field::H),
            other => Err(Error::Parse(format!(
                "unknown field {other:?}, expected C or H"
            ))),
        }
    }
}

/// `(n, k)` pair identifying a Grassmannian; used to tag ring elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Shape {
    pub n: u32,
    pub k: u32,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.n, self.k)
    }
}

/// Parses `n,k`.
pub fn parse_pair(s: &str) -> Result<(u32, u32)> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(t);
    match parse_list(t).map_err(|e| Error::Parse(format!("pair {s:?}: {e}")))?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected a pair like 4,2, got {s:?}"))),
    }
}

/// Immutable descriptor of `G_{n,k}` with its graded Schubert bases.
#[derive(Debug, Clone)]
pub struct GrassContext {
    n: u32,
    k: u32,
    field: Field,
    bases: Vec<Vec<Partition>>,
    positions: HashMap<Partition, usize>,
}

impl GrassContext {
    /// Requires `n ≥ 2` and `1 ≤ k ≤ ⌊n/2⌋`.
    pub fn new(n: u32, k: u32) -> Result<Self> {
        Self::with_field(n, k, Field::C)
    }

    pub fn with_field(n: u32, k: u32, field: Field) -> Result<Self> {
        if n < 2 || k < 1 || k > n / 2 {
            return Err(Error::Domain(format!(
                "G({n},{k}) needs n >= 2 and 1 <= k <= n/2"
            )));
        }
        let width = n - k;
        let dim = k * width;
        let mut bases = vec![Vec::new(); dim as usize + 1];
        let mut current = Vec::with_capacity(k as usize);
        boxed_partitions(k, width, width, &mut current, &mut bases);
        for basis in &mut bases {
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        let positions = bases
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(i, p)| (p.clone(), i)))
            .collect();
        Ok(GrassContext {
            n,
            k,
            field,
            bases,
            positions,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Box width `n − k`.
    pub fn width(&self) -> u32 {
        self.n - self.k
    }

    /// Complex dimension `N = k(n − k)`.
    pub fn dim(&self) -> u32 {
        self.k * (self.n - self.k)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> Shape {
        Shape {
            n: self.n,
            k: self.k,
        }
    }

    pub fn cohomological_degree(&self, r: u32) -> u32 {
        self.field.cohomological_degree(r)
    }

    /// Schubert basis of `H^{2r}` in decreasing lexicographic order.
    pub fn basis(&self, r: u32) -> Result<&[Partition]> {
        self.bases
            .get(r as usize)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Range(format!("grade {r} outside 0..={}", self.dim())))
    }

    pub fn enumerate_basis(&self, r: u32) -> Result<Vec<Partition>> {
        self.basis(r).map(<[Partition]>::to_vec)
    }

    /// Betti number `dim H^{2r}`; zero outside `0..=N`.
    pub fn betti(&self, r: i64) -> usize {
        usize::try_from(r)
            .ok()
            .and_then(|r| self.bases.get(r))
            .map_or(0, Vec::len)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Total rank `Σ_r dim H^{2r}`, equal to `C(n, k)`.
    pub fn rank(&self) -> Int {
        binomial(self.n as u64, self.k as u64)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.fits(self.k, self.width())
    }

    /// Position of `p` inside its graded basis.
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.positions.get(p).copied()
    }

    /// The point class: the full `k × (n−k)` box.
    pub fn top_partition(&self) -> Partition {
        Partition::rectangle(self.k, self.width())
    }

    pub fn check_partition(&self, p: &Partition) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "partition {p} does not fit the {}x{} box of {}",
                self.k,
                self.width(),
                self.shape()
            )))
        }
    }

    pub fn check_index_set(&self, i: &IndexSet) -> Result<()> {
        if i.len() != self.k as usize || i.indices().last().is_some_and(|&l| l > self.n) {
            return Err(Error::Domain(format!(
                "{i} is not a {}-subset of 1..={}",
                self.k, self.n
            )));
        }
        Ok(())
    }

    /// `i_j = n − k + j − ν_j`.
    pub fn partition_to_index(&self, nu: &Partition) -> Result<IndexSet> {
        self.check_partition(nu)?;
        let w = self.width();
        let indices = (0..self.k)
            .map(|j| w + j + 1 - nu.part(j as usize))
            .collect();
        IndexSet::new(indices, self.n)
    }

    /// `ν_j = n − k + j − i_j`.
    pub fn index_to_partition(&self, i: &IndexSet) -> Result<Partition> {
        self.check_index_set(i)?;
        let w = self.width();
        let parts = i
            .indices()
            .iter()
            .enumerate()
            .map(|(j, &ij)| w + j as u32 + 1 - ij)
            .collect();
        Partition::new(parts)
    }

    /// `i' = (n+1−i_k, …, n+1−i_1)`.
    pub fn poincare_dual(&self, i: &IndexSet) -> Result<IndexSet> {
        self.check_index_set(i)?;
        let dual = i
            .indices()
            .iter()
            .rev()
            .map(|&ij| self.n + 1 - ij)
            .collect();
        IndexSet::new(dual, self.n)
    }

    /// Partition labelling the dual class: the rotated complement in the box.
    pub fn dual_partition(&self, p: &Partition) -> Result<Partition> {
        self.check_partition(p)?;
        Ok(p.complement(self.k, self.width()))
    }

    /// Every index set of the Grassmannian, grouped by grade then basis order.
    pub fn all_index_sets(&self) -> Vec<IndexSet> {
        self.bases
            .iter()
            .flatten()
            .map(|p| self.partition_to_index(p).expect("basis partitions fit"))
            .collect()
    }
}

fn boxed_partitions(
    rows_left: u32,
    width: u32,
    max_part: u32,
    current: &mut Vec<u32>,
    out: &mut [Vec<Partition>],
) {
    let weight: u32 = current.iter().sum();
    out[weight as usize].push(Partition::from_parts_unchecked(current.clone()));
    if rows_left == 0 {
        return;
    }
    for part in 1..=max_part.min(width) {
        current.push(part);
        boxed_partitions(rows_left - 1, width, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn idx(s: &str) -> IndexSet {
        s.parse().unwrap()
    }

    /// Independent count: coefficients of the Gaussian binomial `[n choose k]_q`
    /// from the q-Pascal recurrence.
    fn gaussian_binomial(n: usize, k: usize) -> Vec<u64> {
        if k == 0 || k == n {
            return vec![1];
        }
        let a = gaussian_binomial(n - 1, k - 1);
        let b = gaussian_binomial(n - 1, k);
        let mut out = vec![0u64; k * (n - k) + 1];
        for (i, v) in a.iter().enumerate() {
            out[i] += v;
        }
        for (i, v) in b.iter().enumerate() {
            out[i + k] += v;
        }
        out
    }

    /// Brute force: every vector in `[0, w]^k`, keeping weakly decreasing ones.
    fn brute_force_basis(k: u32, w: u32, r: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let total = (w + 1).pow(k);
        for code in 0..total {
            let mut c = code;
            let parts: Vec<u32> = (0..k)
                .map(|_| {
                    let d = c % (w + 1);
                    c /= w + 1;
                    d
                })
                .collect();
            if parts.windows(2).all(|x| x[0] >= x[1]) && parts.iter().sum::<u32>() == r {
                out.push(Partition::new(parts).unwrap());
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn g42_bases() {
        let ctx = GrassContext::new(4, 2).unwrap();
        assert_eq!(ctx.enumerate_basis(2).unwrap(), vec![p("2"), p("1,1")]);
        assert_eq!(ctx.enumerate_basis(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(ctx.enumerate_basis(4).unwrap(), vec![p("2,2")]);
        assert!(matches!(ctx.enumerate_basis(5), Err(Error::Range(_))));
    }

    #[test]
    fn bases_match_brute_force_and_gaussian_binomials() {
        for n in 2..=10u32 {
            for k in 1..=n / 2 {
                let ctx = GrassContext::new(n, k).unwrap();
                let gauss = gaussian_binomial(n as usize, k as usize);
                let mut total = 0usize;
                for r in 0..=ctx.dim() {
                    let basis = ctx.enumerate_basis(r).unwrap();
                    assert_eq!(basis.len() as u64, gauss[r as usize], "G({n},{k}) r={r}");
                    if n <= 8 {
                        assert_eq!(basis, brute_force_basis(k, n - k, r));
                    }
                    total += basis.len();
                }
                assert_eq!(Int::from(total), ctx.rank());
                assert_eq!(ctx.basis(ctx.dim()).unwrap(), &[ctx.top_partition()]);
            }
        }
    }

    #[test]
    fn partition_index_bijection_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        assert_eq!(ctx.partition_to_index(&p("1")).unwrap(), idx("[2,4]"));
        assert_eq!(
            ctx.partition_to_index(&Partition::empty()).unwrap(),
            idx("[3,4]")
        );
        assert_eq!(ctx.partition_to_index(&p("2,2")).unwrap(), idx("[1,2]"));
        assert!(matches!(
            ctx.partition_to_index(&p("3")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ctx.partition_to_index(&p("1,1,1")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn bijection_round_trips_and_weights() {
        for n in 2..=8u32 {
            for k in 1..=n / 2 {
                let ctx = GrassContext::new(n, k).unwrap();
                for i in ctx.all_index_sets() {
                    let nu = ctx.index_to_partition(&i).unwrap();
                    assert_eq!(ctx.partition_to_index(&nu).unwrap(), i);
                    assert_eq!(i.dimension() + nu.weight(), ctx.dim());
                }
            }
        }
    }

    #[test]
    fn poincare_dual_examples() {
        let ctx = GrassContext::new(4, 2).unwrap();
        assert_eq!(ctx.poincare_dual(&idx("[2,4]")).unwrap(), idx("[1,3]"));
        assert_eq!(ctx.index_to_partition(&idx("[1,3]")).unwrap(), p("2,1"));
        assert_eq!(ctx.poincare_dual(&idx("[1,4]")).unwrap(), idx("[1,4]"));
        assert_eq!(ctx.index_to_partition(&idx("[1,4]")).unwrap(), p("2"));
    }

    #[test]
    fn poincare_dual_is_weight_reversing_involution() {
        for n in 2..=9u32 {
            for k in 1..=n / 2 {
                let ctx = GrassContext::new(n, k).unwrap();
                for i in ctx.all_index_sets() {
                    let d = ctx.poincare_dual(&i).unwrap();
                    assert_eq!(ctx.poincare_dual(&d).unwrap(), i);
                    assert_eq!(i.dimension() + d.dimension(), ctx.dim());
                    // the dual index set labels the complementary partition
                    let nu = ctx.index_to_partition(&i).unwrap();
                    assert_eq!(
                        ctx.index_to_partition(&d).unwrap(),
                        ctx.dual_partition(&nu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("2,1"), Partition::new(vec![2, 1, 0]).unwrap());
        assert_eq!(p("(2,1)").to_string(), "(2,1)");
        assert_eq!(p("").to_string(), "∅");
        assert_eq!(p("0"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(idx("[2,4]").to_string(), "[2,4]");
        assert!("[4,2]".parse::<IndexSet>().is_err());
        assert!("[0,2]".parse::<IndexSet>().is_err());
        assert_eq!(parse_pair("7,3").unwrap(), (7, 3));
        assert!(parse_pair("7").is_err());
        assert_eq!("H".parse::<Field>().unwrap(), Field::H);
    }

    #[test]
    fn context_validation() {
        assert!(GrassContext::new(1, 1).is_err());
        assert!(GrassContext::new(5, 3).is_err());
        assert!(GrassContext::new(5, 0).is_err());
        let ctx = GrassContext::new(6, 2).unwrap();
        assert!(ctx.check_index_set(&idx("[1,7]")).is_err());
        assert!(ctx.check_index_set(&idx("[1,2,3]")).is_err());
    }

    #[test]
    fn conjugate_and_complement() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,1").complement(2, 2), p("1"));
        assert_eq!(Partition::empty().complement(2, 3), p("3,3"));
    }
}

//! Partitions, bipartitions and the statistics consumed by the Kreweras
//! formulas.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Sorts the input and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `l(lambda)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `lambda_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `m_lambda(r)`
    pub fn multiplicity(&self, r: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == r).count() as u32
    }

    /// Map from part value to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Builds a partition from a multiplicity map.
    pub fn from_multiplicities(m: &BTreeMap<u32, u32>) -> Self {
        let mut parts = Vec::new();
        for (&r, &k) in m.iter().rev() {
            parts.extend(std::iter::repeat(r).take(k as usize));
        }
        Self::from_unsorted(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `z(lambda) = sum (i-1) lambda_i`.
    pub fn weighted_size(&self) -> u64 {
        let direct: u64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum();
        debug_assert_eq!(direct, self.weighted_size_via_conjugate());
        direct
    }

    /// `sum_j lambda^T_j (lambda^T_j - 1) / 2`, the same number read off the
    /// columns.
    pub fn weighted_size_via_conjugate(&self) -> u64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| c as u64 * (c as u64).saturating_sub(1) / 2)
            .sum()
    }

    /// `c(lambda) = sum lambda^T_i lambda^T_{i+1}`.
    pub fn c_stat(&self) -> u64 {
        self.conjugate()
            .parts
            .windows(2)
            .map(|w| w[0] as u64 * w[1] as u64)
            .sum()
    }

    /// Pointwise sum, padding the shorter one with zeros.
    pub fn pointwise_add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition::from_unsorted((1..=len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `lambda cup mu`: all parts of both, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `lambda_{>=k}`
    pub fn tail_from(&self, k: usize) -> Partition {
        assert!(k >= 1);
        Partition {
            parts: self.parts.iter().skip(k - 1).copied().collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `(3,2,1)`, `()`, and the shorthand `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∅" {
            return Ok(Partition::empty());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Pair `(mu, nu)` of partitions of total size `n`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    /// Convenience constructor from raw part lists; panics on invalid input.
    pub fn from_parts(mu: &[u32], nu: &[u32]) -> Self {
        Self::new(
            Partition::new(mu.to_vec()).expect("valid partition"),
            Partition::new(nu.to_vec()).expect("valid partition"),
        )
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// `Lambda = (mu_1, nu_1, mu_2, nu_2, ...)` with `len` entries.
    pub fn interleaved(&self, len: usize) -> Vec<u32> {
        (0..len)
            .map(|i| {
                let k = i / 2 + 1;
                if i % 2 == 0 {
                    self.first.part(k)
                } else {
                    self.second.part(k)
                }
            })
            .collect()
    }

    /// `l(mu, nu) = max{l(mu) - 1, l(nu)}`, never negative.
    pub fn level_length(&self) -> usize {
        let by_max = self.first.len().saturating_sub(1).max(self.second.len());
        debug_assert_eq!(
            by_max,
            self.first.tail_from(2).pointwise_add(&self.second).len()
        );
        by_max
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Bipartition {
    type Err = PartitionError;

    /// Accepts `((2,1),(1))`, with `()` or `∅` for an empty component.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?
            .trim();
        // split at the comma that sits at nesting depth zero
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(err)?;
        Ok(Bipartition::new(
            inner[..i].parse()?,
            inner[i + 1..].parse()?,
        ))
    }
}

/// Classification of a value `r` by the parity of the first and last index
/// `i` with `a_i + a_{i+1} = r` in `Lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HmCase {
    /// both indices even
    BothEven = 1,
    /// mixed parity
    Mixed = 2,
    /// both indices odd
    BothOdd = 3,
}

/// Statistics of a bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStats {
    /// `l(mu, nu)`
    pub l: usize,
    /// `L(mu, nu)`: number of values in the both-even case
    pub big_l: usize,
    /// `z(mu, nu) = 2 z(mu + nu) + |nu|`
    pub z: u64,
    /// `d(mu, nu) = sum m(r)(m(r) + 1)`
    pub d: u64,
    /// `m_{mu,nu}(r)`, listed for every `r` in the support (possibly zero)
    pub m: BTreeMap<u32, u32>,
    pub hm_case: BTreeMap<u32, HmCase>,
}

impl PairStats {
    /// `m_{mu,nu}(r)`, zero outside the support.
    pub fn mult(&self, r: u32) -> u32 {
        self.m.get(&r).copied().unwrap_or(0)
    }

    /// Sum of all `m_{mu,nu}(r)`.
    pub fn total_mult(&self) -> usize {
        self.m.values().map(|&v| v as usize).sum()
    }

    /// Nonzero multiplicities, as parts of a multinomial.
    pub fn nonzero_mults(&self) -> Vec<u32> {
        self.m.values().copied().filter(|&v| v > 0).collect()
    }
}

pub fn pair_stats(b: &Bipartition) -> PairStats {
    let (mu, nu) = (&b.first, &b.second);
    let l = b.level_length();

    let sum = mu.pointwise_add(nu);
    let shifted = mu.tail_from(2).pointwise_add(nu);
    let combined = sum.union(&shifted);

    let m: BTreeMap<u32, u32> = combined
        .multiplicities()
        .into_iter()
        .map(|(r, k)| (r, k / 2))
        .collect();

    // trailing zeros so a_i + a_{i+1} is defined for every index we touch
    let lambda = b.interleaved(2 * mu.len().max(nu.len()) + 2);
    let mut first_last: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for i in 1..lambda.len() {
        let r = lambda[i - 1] + lambda[i];
        if r == 0 {
            continue;
        }
        first_last
            .entry(r)
            .and_modify(|fl| fl.1 = i)
            .or_insert((i, i));
    }
    let hm_case: BTreeMap<u32, HmCase> = first_last
        .into_iter()
        .map(|(r, (i, j))| {
            let case = match (i % 2, j % 2) {
                (0, 0) => HmCase::BothEven,
                (1, 1) => HmCase::BothOdd,
                _ => HmCase::Mixed,
            };
            (r, case)
        })
        .collect();
    debug_assert!(hm_case.keys().eq(m.keys()));

    let big_l = hm_case.values().filter(|&&c| c == HmCase::BothEven).count();
    let total: usize = m.values().map(|&v| v as usize).sum();
    assert_eq!(big_l + total, l, "L(mu,nu) + sum m(r) must equal l(mu,nu)");

    let z = 2 * sum.weighted_size() + nu.size() as u64;
    debug_assert_eq!(
        z,
        2 * mu.weighted_size() + 2 * nu.weighted_size() + nu.size() as u64
    );
    let d = m.values().map(|&k| k as u64 * (k as u64 + 1)).sum();

    PairStats {
        l,
        big_l,
        z,
        d,
        m,
        hm_case,
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`: by decreasing `|mu|`, then lexicographically.
pub fn enumerate_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let firsts = enumerate_partitions(k);
        let seconds = enumerate_partitions(n - k);
        for mu in &firsts {
            for nu in &seconds {
                out.push(Bipartition::new(mu.clone(), nu.clone()));
            }
        }
    }
    out
}

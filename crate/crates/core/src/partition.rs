//! Integer partitions, divisor-lattice arithmetic and prime-set factorisation.
//!
//! Partitions are listed in descending lexicographic order everywhere
//! (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, One};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of zero.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `[part; count]`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![part; count],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn even_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// `(-1)^{|λ| - ℓ(λ)}`, the sign of a permutation of this cycle type.
    pub fn sign(&self) -> i32 {
        if self.even_parts() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `(n - k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Partition {
        assert!(k < n, "hook leg must be shorter than the size");
        let mut parts = vec![(n - k) as u32];
        parts.extend(std::iter::repeat(1).take(k));
        Partition { parts }
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// Removes one occurrence of `part`, if present.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// `∏ i^{m_i} m_i!`, the centraliser order of a permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for j in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(j);
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadPartition(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().any(|&p| p == 0) {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_with(n, |_| true)
}

/// Partitions of `n` all of whose parts satisfy `allowed`, in descending
/// lexicographic order.
pub fn partitions_with<F: Fn(u32) -> bool>(n: usize, allowed: F) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &allowed, &mut current, &mut out);
    out
}

fn fill<F: Fn(u32) -> bool>(
    remaining: u32,
    max_part: u32,
    allowed: &F,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if !allowed(part) {
            continue;
        }
        current.push(part);
        fill(remaining - part, part, allowed, current, out);
        current.pop();
    }
}

fn partition_table() -> &'static RwLock<HashMap<usize, Arc<Vec<Partition>>>> {
    static TABLE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Partition>>>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Shared, cached listing of the partitions of `n`.
pub fn partitions_cached(n: usize) -> Arc<Vec<Partition>> {
    if let Some(list) = partition_table().read().unwrap().get(&n) {
        return Arc::clone(list);
    }
    let list = Arc::new(partitions_of(n));
    partition_table()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(list)
        .clone()
}

/// Position of `lambda` in the descending lexicographic listing of its degree.
pub fn partition_index(lambda: &Partition) -> usize {
    let list = partitions_cached(lambda.size());
    list.binary_search_by(|p| lambda.cmp(p))
        .expect("every partition appears in the listing of its degree")
}

// ---------------------------------------------------------------------------
// Divisor-lattice arithmetic

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive(n))
    } else {
        Ok(())
    }
}

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Deterministic trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub fn moebius(n: u64) -> Result<i64> {
    require_positive(n)?;
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

pub fn totient(n: u64) -> Result<u64> {
    require_positive(n)?;
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

// Infallible versions for internal use where n ≥ 1 is structurally guaranteed.
pub(crate) fn mu(n: u64) -> i64 {
    moebius(n).expect("positive argument")
}

pub(crate) fn phi(n: u64) -> i64 {
    totient(n).expect("positive argument") as i64
}

pub(crate) fn divs(n: u64) -> Vec<u64> {
    divisors(n).expect("positive argument")
}

// ---------------------------------------------------------------------------
// Prime sets

/// A finite set of primes `S`, or (when `complement` is set) the set `S̄` of
/// all primes outside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
    complement: bool,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(bad));
        }
        Ok(PrimeSet {
            primes,
            complement: false,
        })
    }

    pub fn empty() -> Self {
        PrimeSet {
            primes: Vec::new(),
            complement: false,
        }
    }

    /// The set of all primes outside `self`.
    pub fn complement(&self) -> Self {
        PrimeSet {
            primes: self.primes.clone(),
            complement: !self.complement,
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_complement(&self) -> bool {
        self.complement
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok() != self.complement
    }

    /// `n = Q_n · ℓ_n`, where `Q_n` collects the full prime-power factors of `n`
    /// over primes in the set and `ℓ_n` is coprime to all of them.
    pub fn factor(&self, n: u64) -> (u64, u64) {
        assert!(n >= 1, "factor_S requires n >= 1");
        let q = factorize(n)
            .into_iter()
            .filter(|&(p, _)| self.contains(p))
            .map(|(p, e)| p.pow(e))
            .product::<u64>();
        (q, n / q)
    }

    /// Membership in `P(S)`: every prime factor of `n` lies in the set.
    pub fn in_p(&self, n: u64) -> bool {
        factorize(n).into_iter().all(|(p, _)| self.contains(p))
    }

    /// Membership in `P(S̄)`: no prime factor of `n` lies in the set.
    pub fn in_p_bar(&self, n: u64) -> bool {
        factorize(n).into_iter().all(|(p, _)| !self.contains(p))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        if self.complement {
            write!(f, "bar{{{}}}", list.join(","))
        } else {
            write!(f, "{{{}}}", list.join(","))
        }
    }
}

//! Exact symmetric functions in the power-sum basis.
//!
//! A [`SymFunc`] is a homogeneous rational combination `Σ c_λ p_λ`. The `h`, `e`
//! and Schur bases are computed on demand. Schur coefficients come from
//! Murnaghan–Nakayama character columns, which are cached process-wide.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_cached, Partition};

pub type Coefficient = BigRational;

pub fn rat(num: i64, den: i64) -> Coefficient {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest shape accepted by [`syt_maj_distribution`] unless a bound is given.
pub const DEFAULT_SYT_BOUND: usize = 10;

/// A homogeneous symmetric function `Σ c_λ p_λ`.
///
/// The zero function is compatible with every degree under addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    terms: BTreeMap<Partition, Coefficient>,
}

impl Default for SymFunc {
    fn default() -> Self {
        SymFunc::zero(0)
    }
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SymFunc::p(Partition::empty())
    }

    pub fn constant(c: Coefficient) -> Self {
        SymFunc::monomial(Partition::empty(), c)
    }

    pub fn p(lambda: Partition) -> Self {
        SymFunc::monomial(lambda, Coefficient::one())
    }

    pub fn monomial(lambda: Partition, c: Coefficient) -> Self {
        let mut f = SymFunc::zero(lambda.size());
        f.add_term(lambda, c);
        f
    }

    /// Builds from `(partition, coefficient)` pairs; all partitions must have
    /// size `degree`.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Coefficient)>,
    {
        let mut f = SymFunc::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: lambda.size(),
                });
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coefficient {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Terms in descending lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coefficient)> {
        self.terms.iter().rev()
    }

    /// Adds `c · p_λ` in place. Panics if `λ` has the wrong size for a nonzero
    /// function.
    pub(crate) fn add_term(&mut self, lambda: Partition, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.degree = lambda.size();
        } else {
            assert_eq!(lambda.size(), self.degree, "inhomogeneous term");
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> SymFunc {
        self.scale(&-Coefficient::one())
    }

    pub fn scale(&self, c: &Coefficient) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree);
        }
        SymFunc {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> SymFunc {
        (0..k).fold(SymFunc::one(), |acc, _| acc.mul(self))
    }

    /// `ω`: `p_μ ↦ (-1)^{|μ| - ℓ(μ)} p_μ`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), if l.sign() < 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// The plethysm `p_k[f]`: every `p_m` becomes `p_{km}`.
    pub fn pleth_p(&self, k: u32) -> SymFunc {
        assert!(k >= 1, "p_0 is not a power sum");
        SymFunc {
            degree: self.degree * k as usize,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.scale(k), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂p_1`, lowering the degree by one.
    pub fn derivative_p1(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree.saturating_sub(1));
        for (l, c) in &self.terms {
            let m = l.multiplicity(1);
            if m > 0 {
                let lowered = l.remove_part(1).expect("has a part 1");
                out.add_term(lowered, c * int(m as i64));
            }
        }
        out
    }

    /// Schur expansion; see [`to_schur`].
    pub fn to_schur(&self) -> SchurExpansion {
        to_schur(self)
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson::from_terms(self.degree, "p", self.terms())
    }

    pub fn from_json(json: &SymFuncJson) -> Result<SymFunc> {
        if json.basis != "p" {
            return Err(Error::InvalidParams(format!(
                "expected basis \"p\", found \"{}\"",
                json.basis
            )));
        }
        SymFunc::from_terms(json.degree, json.parsed_terms()?)
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.try_add(rhs)
            .expect("degree mismatch in SymFunc addition")
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.try_sub(rhs)
            .expect("degree mismatch in SymFunc subtraction")
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        SymFunc::mul(self, rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.neg_ref()
    }
}

pub(crate) fn format_rational(c: &Coefficient) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let body: Vec<String> = self
            .terms()
            .map(|(l, c)| format!("{} * p{}", format_rational(c), l))
            .collect();
        write!(f, "{}", body.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub degree: usize,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

impl SymFuncJson {
    fn from_terms<'a>(
        degree: usize,
        basis: &str,
        terms: impl Iterator<Item = (&'a Partition, &'a Coefficient)>,
    ) -> Self {
        SymFuncJson {
            degree,
            basis: basis.to_string(),
            terms: terms
                .map(|(l, c)| TermJson {
                    partition: l.parts().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    fn parsed_terms(&self) -> Result<Vec<(Partition, Coefficient)>> {
        self.terms
            .iter()
            .map(|t| {
                let bad = || Error::InvalidParams(format!("bad coefficient {}/{}", t.num, t.den));
                let num: BigInt = t.num.parse().map_err(|_| bad())?;
                let den: BigInt = t.den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok((
                    Partition::new(t.partition.clone()),
                    BigRational::new(num, den),
                ))
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// h, e, s

fn basis_cache() -> &'static RwLock<(Vec<SymFunc>, Vec<SymFunc>)> {
    static CACHE: OnceLock<RwLock<(Vec<SymFunc>, Vec<SymFunc>)>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new((vec![SymFunc::one()], vec![SymFunc::one()])))
}

/// Complete homogeneous `h_n`, from `n h_n = Σ_{k=1}^n p_k h_{n-k}`.
pub fn h_of(n: usize) -> SymFunc {
    newton(n, false)
}

/// Elementary `e_n`, from `n e_n = Σ_{k=1}^n (-1)^{k-1} p_k e_{n-k}`.
pub fn e_of(n: usize) -> SymFunc {
    newton(n, true)
}

fn newton(n: usize, alternating: bool) -> SymFunc {
    {
        let cache = basis_cache().read().unwrap();
        let list = if alternating { &cache.1 } else { &cache.0 };
        if let Some(f) = list.get(n) {
            return f.clone();
        }
    }
    let mut cache = basis_cache().write().unwrap();
    let list = if alternating {
        &mut cache.1
    } else {
        &mut cache.0
    };
    while list.len() <= n {
        let m = list.len();
        let mut acc = SymFunc::zero(m);
        for k in 1..=m {
            let mut term = list[m - k].mul(&SymFunc::p(Partition::new(vec![k as u32])));
            if alternating && k % 2 == 0 {
                term = -&term;
            }
            acc = &acc + &term;
        }
        list.push(acc.scale(&rat(1, m as i64)));
    }
    list[n].clone()
}

pub fn p_of(lambda: &Partition) -> SymFunc {
    SymFunc::p(lambda.clone())
}

/// `h_λ = ∏ h_{λ_i}`.
pub fn h_lambda_basis(lambda: &Partition) -> SymFunc {
    lambda
        .parts()
        .iter()
        .fold(SymFunc::one(), |acc, &k| acc.mul(&h_of(k as usize)))
}

/// `e_λ = ∏ e_{λ_i}`.
pub fn e_lambda_basis(lambda: &Partition) -> SymFunc {
    lambda
        .parts()
        .iter()
        .fold(SymFunc::one(), |acc, &k| acc.mul(&e_of(k as usize)))
}

/// `s_λ = Σ_μ z_μ^{-1} χ^λ(μ) p_μ`.
pub fn s_of(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let mut out = SymFunc::zero(n);
    for mu in partitions_cached(n).iter() {
        let chi = character_column(mu).get(lambda).copied().unwrap_or(0);
        if chi != 0 {
            out.add_term(mu.clone(), BigRational::new(BigInt::from(chi), mu.z()));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama

type Column = HashMap<Partition, i128>;

fn column_cache() -> &'static RwLock<HashMap<Partition, Arc<Column>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<Column>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All shapes obtained from `shape` by adding a border strip of length `r`,
/// with the strip sign `(-1)^{rows - 1}`.
fn add_border_strips(shape: &Partition, r: u32) -> Vec<(Partition, i128)> {
    // Beta-set (abacus) model: enough beads that the result fits.
    let beads = shape.len() + r as usize;
    let mut positions: Vec<u32> = (0..beads)
        .map(|i| shape.parts().get(i).copied().unwrap_or(0) + (beads - 1 - i) as u32)
        .collect();
    positions.reverse(); // ascending
    let occupied = |x: u32| positions.binary_search(&x).is_ok();
    let mut out = Vec::new();
    for (idx, &b) in positions.iter().enumerate() {
        let target = b + r;
        if occupied(target) {
            continue;
        }
        let between = positions[idx + 1..]
            .iter()
            .take_while(|&&x| x < target)
            .count();
        let mut moved = positions.clone();
        moved[idx] = target;
        moved.sort_unstable();
        let parts: Vec<u32> = moved
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &x)| x - (beads - 1 - i) as u32)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts), sign));
    }
    out
}

fn compute_column(mu: &Partition) -> Column {
    let mut states: Column = HashMap::from([(Partition::empty(), 1)]);
    for &r in mu.parts() {
        let mut next: Column = HashMap::with_capacity(states.len() * 2);
        for (shape, value) in &states {
            for (grown, sign) in add_border_strips(shape, r) {
                *next.entry(grown).or_insert(0) += sign * value;
            }
        }
        next.retain(|_, v| *v != 0);
        states = next;
    }
    states
}

/// The column `λ ↦ χ^λ(μ)` of the character table (zero entries omitted).
pub fn character_column(mu: &Partition) -> Arc<Column> {
    if let Some(col) = column_cache().read().unwrap().get(mu) {
        return Arc::clone(col);
    }
    let col = Arc::new(compute_column(mu));
    column_cache()
        .write()
        .unwrap()
        .entry(mu.clone())
        .or_insert(col)
        .clone()
}

/// `χ^λ(μ)`, the irreducible character `λ` on the class of cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i128> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
        });
    }
    Ok(character_column(mu).get(lambda).copied().unwrap_or(0))
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<Vec<Vec<i128>>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Vec<i128>>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Full character table of `S_n`: `table[i][j] = χ^{λ_i}(μ_j)` with rows and
/// columns in descending lexicographic order.
pub fn character_table(n: usize) -> Arc<Vec<Vec<i128>>> {
    if let Some(t) = table_cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let parts = partitions_cached(n);
    let columns: Vec<Arc<Column>> = parts.iter().map(character_column).collect();
    let table: Vec<Vec<i128>> = parts
        .iter()
        .map(|lambda| {
            columns
                .iter()
                .map(|c| c.get(lambda).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    let table = Arc::new(table);
    table_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(table)
        .clone()
}

// ---------------------------------------------------------------------------
// Schur expansions

/// Coefficients in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, Coefficient>,
}

impl SchurExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coefficient {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Nonzero terms in descending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coefficient)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Errors unless every coefficient is an integer.
    pub fn require_integral(&self) -> Result<&Self> {
        match self.coeffs.iter().find(|(_, c)| !c.is_integer()) {
            None => Ok(self),
            Some((l, c)) => Err(Error::InvalidParams(format!(
                "non-integral Schur coefficient {} at s{}",
                format_rational(c),
                l
            ))),
        }
    }

    /// Every `(λ, c)` with `c < 0`, in descending lexicographic order.
    pub fn negative_terms(&self) -> Vec<(Partition, Coefficient)> {
        self.terms()
            .filter(|(_, c)| c.is_negative())
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect()
    }

    /// Reindexes by conjugate partitions (the effect of `ω`).
    pub fn conjugate(&self) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| (l.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// Back to the power-sum basis.
    pub fn to_power_sum(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (l, c) in &self.coeffs {
            out = &out + &s_of(l).scale(c);
        }
        out
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson::from_terms(self.degree, "schur", self.terms())
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}")?;
            if magnitude.is_one() {
                write!(f, "s{l}")?;
            } else if magnitude.is_integer() {
                write!(f, "{} * s{l}", magnitude.numer())?;
            } else {
                write!(f, "{} * s{l}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// Schur expansion of `f = Σ c_μ p_μ`: the coefficient of `s_λ` is
/// `Σ_μ c_μ χ^λ(μ)`.
pub fn to_schur(f: &SymFunc) -> SchurExpansion {
    let mut acc: HashMap<Partition, Coefficient> = HashMap::new();
    for (mu, c) in &f.terms {
        for (lambda, &chi) in character_column(mu).iter() {
            let entry = acc.entry(lambda.clone()).or_insert_with(Coefficient::zero);
            *entry += c * BigInt::from(chi);
        }
    }
    SchurExpansion {
        degree: f.degree,
        coeffs: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// `(true, [])` when every Schur coefficient is nonnegative; otherwise
/// `(false, negatives)`.
pub fn is_schur_positive(f: &SymFunc) -> (bool, Vec<(Partition, Coefficient)>) {
    let negatives = to_schur(f).negative_terms();
    (negatives.is_empty(), negatives)
}

// ---------------------------------------------------------------------------
// Standard Young tableaux by major index

/// Number of standard Young tableaux of shape `λ` with major index in each
/// residue class mod `|λ|`.
pub fn syt_maj_distribution(lambda: &Partition) -> Result<BTreeMap<usize, u64>> {
    syt_maj_distribution_bounded(lambda, DEFAULT_SYT_BOUND)
}

pub fn syt_maj_distribution_bounded(
    lambda: &Partition,
    bound: usize,
) -> Result<BTreeMap<usize, u64>> {
    let n = lambda.size();
    if n > bound {
        return Err(Error::OracleBound {
            shape: lambda.to_string(),
            bound,
        });
    }
    let mut out = BTreeMap::new();
    let target: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut rows = vec![0usize; target.len()];
    let mut row_of = vec![0usize; n + 1];
    place(1, n, &target, &mut rows, &mut row_of, &mut out);
    Ok(out)
}

/// Places entry `k` in every admissible row; `row_of[i]` records the row of `i`.
fn place(
    k: usize,
    n: usize,
    target: &[usize],
    rows: &mut [usize],
    row_of: &mut [usize],
    out: &mut BTreeMap<usize, u64>,
) {
    if k > n {
        let maj: usize = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).sum();
        let modulus = n.max(1);
        *out.entry(maj % modulus).or_insert(0) += 1;
        return;
    }
    for r in 0..target.len() {
        let fits = rows[r] < target[r] && (r == 0 || rows[r - 1] > rows[r]);
        if fits {
            rows[r] += 1;
            row_of[k] = r;
            place(k + 1, n, target, rows, row_of, out);
            rows[r] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn h_and_e_in_degree_two() {
        let want_h =
            SymFunc::from_terms(2, [(p(&[1, 1]), rat(1, 2)), (p(&[2]), rat(1, 2))]).unwrap();
        let want_e =
            SymFunc::from_terms(2, [(p(&[1, 1]), rat(1, 2)), (p(&[2]), rat(-1, 2))]).unwrap();
        assert_eq!(h_of(2), want_h);
        assert_eq!(e_of(2), want_e);
        assert_eq!(h_of(0), SymFunc::one());
    }

    #[test]
    fn schur_21_matches_character_sum() {
        // chi^(2,1) = (2, 0, -1) on [1^3], [2,1], [3]; z = 6, 2, 3
        let want =
            SymFunc::from_terms(3, [(p(&[1, 1, 1]), rat(1, 3)), (p(&[3]), rat(-1, 3))]).unwrap();
        assert_eq!(s_of(&p(&[2, 1])), want);
    }

    #[test]
    fn ring_operations() {
        assert_eq!(p_of(&p(&[2])).mul(&p_of(&p(&[2]))), p_of(&p(&[2, 2])));
        let f = h_of(3);
        assert_eq!(&f + &SymFunc::zero(0), f);
        assert_eq!(h_of(1).mul(&h_of(1)), p_of(&p(&[1, 1])));
        assert!(h_of(2).try_add(&h_of(3)).is_err());
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(p_of(&p(&[2])).omega(), -&p_of(&p(&[2])));
        for n in 0..8 {
            assert_eq!(h_of(n).omega(), e_of(n));
        }
    }

    #[test]
    fn characters() {
        for n in 1..=10 {
            for mu in partitions_of(n) {
                assert_eq!(character(&p(&[n as u32]), &mu).unwrap(), 1);
            }
        }
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), 2);
        assert!(character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn hook_length_dimensions() {
        // dim of (3,2,1) is 16 and of (4,2) is 9
        assert_eq!(character(&p(&[3, 2, 1]), &p(&[1; 6])).unwrap(), 16);
        assert_eq!(character(&p(&[4, 2]), &p(&[1; 6])).unwrap(), 9);
    }

    #[test]
    fn schur_expansions() {
        let p4 = to_schur(&p_of(&p(&[4])));
        assert_eq!(p4.to_string(), "s[4] - s[3,1] + s[2,1,1] - s[1,1,1,1]");
        assert_eq!(to_schur(&h_of(3)).to_string(), "s[3]");
        let lie4 =
            SymFunc::from_terms(4, [(p(&[1, 1, 1, 1]), rat(1, 4)), (p(&[2, 2]), rat(-1, 4))])
                .unwrap();
        assert_eq!(to_schur(&lie4).to_string(), "s[3,1] + s[2,1,1]");
    }

    #[test]
    fn positivity_verdicts() {
        let lie4 =
            SymFunc::from_terms(4, [(p(&[1, 1, 1, 1]), rat(1, 4)), (p(&[2, 2]), rat(-1, 4))])
                .unwrap();
        let (ok, wit) = is_schur_positive(&(&lie4 + &p_of(&p(&[4]))));
        assert!(!ok);
        assert_eq!(wit, vec![(p(&[1, 1, 1, 1]), int(-1))]);
        assert_eq!(is_schur_positive(&h_of(5)), (true, vec![]));
    }

    #[test]
    fn syt_distributions() {
        let d = syt_maj_distribution(&p(&[3, 1])).unwrap();
        assert_eq!(d, BTreeMap::from([(1, 1), (2, 1), (3, 1)]));
        assert_eq!(
            syt_maj_distribution(&p(&[5])).unwrap(),
            BTreeMap::from([(0, 1)])
        );
        assert_eq!(
            syt_maj_distribution(&p(&[1, 1, 1, 1])).unwrap(),
            BTreeMap::from([(2, 1)])
        );
        assert!(syt_maj_distribution(&p(&[11])).is_err());
    }

    #[test]
    fn derivative() {
        let f = p_of(&p(&[2, 1, 1]));
        assert_eq!(f.derivative_p1(), p_of(&p(&[2, 1])).scale(&int(2)));
        assert!(p_of(&p(&[2])).derivative_p1().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = s_of(&p(&[2, 1, 1]));
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back: SymFuncJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SymFunc::from_json(&back).unwrap(), f);
    }

    #[test]
    fn text_form() {
        assert_eq!(h_of(2).to_string(), "1/2 * p[2] + 1/2 * p[1,1]");
        assert_eq!(SymFunc::zero(3).to_string(), "0");
    }
}

//! Truncated series of symmetric functions and plethysm.
//!
//! A [`Series`] holds homogeneous components of degrees `0..=N`. Everything
//! above `N` is discarded as soon as it is produced, so every identity between
//! formal series becomes a finite, exact comparison.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_with, Partition};
use crate::symfunc::{e_of, h_of, int, rat, Coefficient, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    /// `comps[d]` is the degree-`d` component; `comps[0]` is the constant.
    comps: Vec<SymFunc>,
}

impl Series {
    pub fn zero(max_degree: usize) -> Self {
        Series {
            comps: (0..=max_degree).map(SymFunc::zero).collect(),
        }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Series::zero(max_degree);
        s.comps[0] = SymFunc::one();
        s
    }

    /// `Σ_{d=1}^N f(d)`; each `f(d)` must be homogeneous of degree `d`.
    pub fn from_fn<F: FnMut(usize) -> SymFunc>(max_degree: usize, mut f: F) -> Self {
        let mut s = Series::zero(max_degree);
        for d in 1..=max_degree {
            s.set(d, f(d));
        }
        s
    }

    /// A single homogeneous term, truncated at `max_degree`.
    pub fn from_symfunc(f: &SymFunc, max_degree: usize) -> Self {
        let mut s = Series::zero(max_degree);
        if !f.is_zero() && f.degree() <= max_degree {
            s.set(f.degree(), f.clone());
        }
        s
    }

    pub fn max_degree(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn constant(&self) -> Coefficient {
        self.comps[0].coefficient(&Partition::empty())
    }

    pub fn has_zero_constant(&self) -> bool {
        self.comps[0].is_zero()
    }

    /// Component of degree `d`; zero above the truncation.
    pub fn component(&self, d: usize) -> SymFunc {
        self.comps
            .get(d)
            .cloned()
            .unwrap_or_else(|| SymFunc::zero(d))
    }

    pub fn component_ref(&self, d: usize) -> &SymFunc {
        &self.comps[d]
    }

    pub fn components(&self) -> &[SymFunc] {
        &self.comps
    }

    pub fn set(&mut self, d: usize, f: SymFunc) {
        assert!(
            f.is_zero() || f.degree() == d,
            "component of degree {} stored at degree {d}",
            f.degree()
        );
        if d <= self.max_degree() {
            self.comps[d] = if f.is_zero() { SymFunc::zero(d) } else { f };
        }
    }

    pub fn with_constant(mut self, c: Coefficient) -> Self {
        self.comps[0] = if c.is_zero() {
            SymFunc::zero(0)
        } else {
            SymFunc::constant(c)
        };
        self
    }

    pub fn truncate(&self, max_degree: usize) -> Series {
        let mut s = Series::zero(max_degree);
        for d in 0..=max_degree.min(self.max_degree()) {
            s.comps[d] = self.comps[d].clone();
        }
        s
    }

    fn common(&self, other: &Series) -> usize {
        self.max_degree().min(other.max_degree())
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.common(other);
        Series {
            comps: (0..=n).map(|d| &self.comps[d] + &other.comps[d]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.common(other);
        Series {
            comps: (0..=n).map(|d| &self.comps[d] - &other.comps[d]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        self.scale(&-Coefficient::one())
    }

    pub fn scale(&self, c: &Coefficient) -> Series {
        Series {
            comps: self.comps.iter().map(|f| f.scale(c)).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two truncations.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.common(other);
        let mut out = Series::zero(n);
        for a in 0..=n {
            if self.comps[a].is_zero() {
                continue;
            }
            for b in 0..=n - a {
                if other.comps[b].is_zero() {
                    continue;
                }
                let prod = self.comps[a].mul(&other.comps[b]);
                out.comps[a + b] = &out.comps[a + b] + &prod;
            }
        }
        out
    }

    /// `1/G` for a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Series> {
        let c = self.constant();
        if c.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_c = c.recip();
        let n = self.max_degree();
        let mut out = Series::zero(n);
        out.comps[0] = SymFunc::constant(inv_c.clone());
        for d in 1..=n {
            let mut acc = SymFunc::zero(d);
            for k in 1..=d {
                if self.comps[k].is_zero() || out.comps[d - k].is_zero() {
                    continue;
                }
                acc = &acc + &self.comps[k].mul(&out.comps[d - k]);
            }
            out.comps[d] = acc.scale(&-&inv_c);
        }
        Ok(out)
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// `p_k[G]`: degree `d` moves to degree `kd`; anything above `N` is dropped.
    pub fn pleth_p(&self, k: u32) -> Series {
        let n = self.max_degree();
        let mut out = Series::zero(n);
        for d in 0..=n {
            let target = d * k as usize;
            if target > n {
                break;
            }
            if !self.comps[d].is_zero() {
                out.comps[target] = self.comps[d].pleth_p(k);
            }
        }
        out
    }

    pub fn omega(&self) -> Series {
        Series {
            comps: self.comps.iter().map(SymFunc::omega).collect(),
        }
    }

    pub fn derivative_p1(&self) -> Series {
        let n = self.max_degree();
        let mut out = Series::zero(n);
        for d in 1..=n {
            out.comps[d - 1] = self.comps[d].derivative_p1();
        }
        out
    }

    /// Lowest degree at which the two series differ, up to the common truncation.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        (0..=self.common(other)).find(|&d| self.comps[d] != other.comps[d])
    }

    /// Degrees `1..=N` with nonzero components.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.max_degree()).filter(|&d| !self.comps[d].is_zero())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.comps.iter().enumerate() {
            writeln!(f, "deg {d}: {c}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Plethysm

fn require_constant_free(g: &Series) -> Result<()> {
    if g.has_zero_constant() {
        Ok(())
    } else {
        Err(Error::NonzeroConstant)
    }
}

/// Memoised evaluation of `p_λ[G]` for a fixed constant-free `G`.
struct PlethContext<'a> {
    inner: &'a Series,
    powers: HashMap<u32, Series>,
    memo: HashMap<Partition, Series>,
}

impl<'a> PlethContext<'a> {
    fn new(inner: &'a Series) -> Self {
        PlethContext {
            inner,
            powers: HashMap::new(),
            memo: HashMap::new(),
        }
    }

    fn power(&mut self, k: u32) -> Series {
        let inner = self.inner;
        self.powers
            .entry(k)
            .or_insert_with(|| inner.pleth_p(k))
            .clone()
    }

    fn monomial(&mut self, lambda: &Partition) -> Series {
        if let Some(s) = self.memo.get(lambda) {
            return s.clone();
        }
        let n = self.inner.max_degree();
        let value = match lambda.parts().split_last() {
            None => Series::one(n),
            Some((&last, rest)) => {
                let prefix = self.monomial(&Partition::new(rest.to_vec()));
                prefix.mul(&self.power(last))
            }
        };
        self.memo.insert(lambda.clone(), value.clone());
        value
    }

    fn apply(&mut self, f: &SymFunc) -> Series {
        let n = self.inner.max_degree();
        let mut out = Series::zero(n);
        // p_λ[G] starts in degree ≥ |λ|
        if f.degree() > n && !f.is_zero() {
            return out;
        }
        for (lambda, c) in f.terms() {
            let term = self.monomial(lambda).scale(c);
            out = out.add(&term);
        }
        out
    }
}

/// `f[G]` for a symmetric function `f` and constant-free series `G`.
pub fn pleth(f: &SymFunc, g: &Series) -> Result<Series> {
    require_constant_free(g)?;
    Ok(PlethContext::new(g).apply(f))
}

/// `F[G]` for a series `F` and constant-free series `G`, truncated at `G`'s
/// truncation.
pub fn pleth_series(f: &Series, g: &Series) -> Result<Series> {
    require_constant_free(g)?;
    let mut ctx = PlethContext::new(g);
    let n = g.max_degree();
    let mut out = Series::zero(n);
    for d in 0..=f.max_degree().min(n) {
        let comp = f.component_ref(d);
        if !comp.is_zero() {
            out = out.add(&ctx.apply(comp));
        }
    }
    Ok(out)
}

/// `p_n[g]` for a single symmetric function.
pub fn pleth_p(n: u32, g: &SymFunc) -> SymFunc {
    g.pleth_p(n)
}

/// `h_r[F]` for `r = 0..=N`, by `r·h_r[F] = Σ_{k=1}^{r} p_k[F]·h_{r-k}[F]`.
pub fn sym_powers(f: &Series) -> Result<Vec<Series>> {
    newton_powers(f, false)
}

/// `e_r[F]` for `r = 0..=N`, by `r·e_r[F] = Σ_{k=1}^{r} (-1)^{k-1} p_k[F]·e_{r-k}[F]`.
pub fn ext_powers(f: &Series) -> Result<Vec<Series>> {
    newton_powers(f, true)
}

fn newton_powers(f: &Series, alternating: bool) -> Result<Vec<Series>> {
    require_constant_free(f)?;
    let n = f.max_degree();
    let pk: Vec<Series> = (0..=n as u32)
        .map(|k| {
            if k == 0 {
                Series::zero(n)
            } else {
                f.pleth_p(k)
            }
        })
        .collect();
    let mut out = vec![Series::one(n)];
    for r in 1..=n {
        let mut acc = Series::zero(n);
        for k in 1..=r {
            let mut term = pk[k].mul(&out[r - k]);
            if alternating && k % 2 == 0 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        out.push(acc.scale(&rat(1, r as i64)));
    }
    Ok(out)
}

fn signed_sum(powers: &[Series], alternate: bool) -> Series {
    let n = powers[0].max_degree();
    powers
        .iter()
        .enumerate()
        .fold(Series::zero(n), |acc, (r, s)| {
            if alternate && r % 2 == 1 {
                acc.sub(s)
            } else {
                acc.add(s)
            }
        })
}

/// `H[F] = Σ_r h_r[F]`.
pub fn pleth_h(f: &Series) -> Result<Series> {
    Ok(signed_sum(&sym_powers(f)?, false))
}

/// `E[F] = Σ_r e_r[F]`.
pub fn pleth_e(f: &Series) -> Result<Series> {
    Ok(signed_sum(&ext_powers(f)?, false))
}

/// `H^±[F] = Σ_r (-1)^r h_r[F]`.
pub fn pleth_h_pm(f: &Series) -> Result<Series> {
    Ok(signed_sum(&sym_powers(f)?, true))
}

/// `E^±[F] = Σ_r (-1)^r e_r[F]`.
pub fn pleth_e_pm(f: &Series) -> Result<Series> {
    Ok(signed_sum(&ext_powers(f)?, true))
}

/// A series graded by an auxiliary length variable `v`: `v^r ↦ series`.
pub type Graded = BTreeMap<usize, Series>;

/// `H(v)[F] = Σ_λ v^{ℓ(λ)} H_λ[F]`, as `r ↦ h_r[F]`.
pub fn pleth_h_graded(f: &Series) -> Result<Graded> {
    Ok(sym_powers(f)?.into_iter().enumerate().collect())
}

/// `E(v)[F] = Σ_λ v^{ℓ(λ)} E_λ[F]`, as `r ↦ e_r[F]`.
pub fn pleth_e_graded(f: &Series) -> Result<Graded> {
    Ok(ext_powers(f)?.into_iter().enumerate().collect())
}

/// Multiplies the length-`r` slice by `sign(r)`.
pub fn graded_signed(g: &Graded, sign: impl Fn(usize) -> i64) -> Graded {
    g.iter()
        .map(|(&r, s)| (r, s.scale(&int(sign(r)))))
        .collect()
}

/// Homogeneous component of `Q` at degree `i`, as a series truncated at `n`.
fn homogeneous(q: &Series, i: usize, n: usize) -> Series {
    Series::from_symfunc(&q.component(i), n)
}

fn higher(q: &Series, lambda: &Partition, exterior: bool) -> Result<SymFunc> {
    let n = lambda.size();
    if q.max_degree() < n {
        return Err(Error::Truncation {
            have: q.max_degree(),
            need: n,
        });
    }
    let mut out = SymFunc::one();
    for (part, mult) in lambda.multiplicities() {
        let base = if exterior { e_of(mult) } else { h_of(mult) };
        let qi = homogeneous(q, part as usize, n);
        let piece = pleth(&base, &qi)?.component(mult * part as usize);
        out = out.mul(&piece);
    }
    Ok(out)
}

/// `H_λ[Q] = ∏_i h_{m_i}[q_i]`.
pub fn h_lambda(q: &Series, lambda: &Partition) -> Result<SymFunc> {
    higher(q, lambda, false)
}

/// `E_λ[Q] = ∏_i e_{m_i}[q_i]`.
pub fn e_lambda(q: &Series, lambda: &Partition) -> Result<SymFunc> {
    higher(q, lambda, true)
}

/// `Σ_i (-1)^{i-1} ω(q_i)`.
pub fn alt_omega(f: &Series) -> Result<Series> {
    require_constant_free(f)?;
    let n = f.max_degree();
    Ok(Series::from_fn(n, |d| {
        let w = f.component(d).omega();
        if d % 2 == 0 {
            -&w
        } else {
            w
        }
    }))
}

// ---------------------------------------------------------------------------
// Product side

/// One factor `(1 + sign·p_part)^{exponent}` with `sign, exponent ∈ {+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub part: u32,
    pub sign: i8,
    pub exponent: i8,
}

impl Factor {
    /// `(1 - p_m)^{-1}`
    pub fn geometric(part: u32) -> Self {
        Factor {
            part,
            sign: -1,
            exponent: -1,
        }
    }

    /// `(1 + p_m)`
    pub fn plus(part: u32) -> Self {
        Factor {
            part,
            sign: 1,
            exponent: 1,
        }
    }

    /// `(1 - p_m)`
    pub fn minus(part: u32) -> Self {
        Factor {
            part,
            sign: -1,
            exponent: 1,
        }
    }

    /// `(1 + p_m)^{-1}`
    pub fn plus_inverse(part: u32) -> Self {
        Factor {
            part,
            sign: 1,
            exponent: -1,
        }
    }

    /// Coefficient of `p_m^j` in the expansion of this factor.
    fn coefficient(&self, j: usize) -> i64 {
        let s = i64::from(self.sign);
        match self.exponent {
            -1 => (-s).pow(j as u32),
            1 => match j {
                0 => 1,
                1 => s,
                _ => 0,
            },
            e => panic!("unsupported exponent {e}"),
        }
    }
}

/// `∏ (1 + sign·p_m)^{exponent}` truncated at `N`, expanded combinatorially:
/// the coefficient of `p_λ` is the product over distinct parts of the
/// coefficient of `x^{m_i}` in the corresponding factor.
pub fn product_series(factors: &[Factor], max_degree: usize) -> Result<Series> {
    let mut by_part: BTreeMap<u32, Factor> = BTreeMap::new();
    for f in factors {
        assert!(f.part >= 1, "factor part must be positive");
        assert!(
            f.sign.abs() == 1 && f.exponent.abs() == 1,
            "factor signs must be ±1"
        );
        if by_part.insert(f.part, *f).is_some() {
            return Err(Error::DuplicateFactor(u64::from(f.part)));
        }
    }
    let mut out = Series::one(max_degree);
    for n in 1..=max_degree {
        let mut comp = SymFunc::zero(n);
        for lambda in partitions_with(n, |x| by_part.contains_key(&x)) {
            let c: i64 = lambda
                .multiplicities()
                .iter()
                .map(|&(part, m)| by_part[&part].coefficient(m))
                .product();
            comp.add_term(lambda, int(c));
        }
        out.set(n, comp);
    }
    Ok(out)
}

/// Polynomial in an auxiliary variable `v` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VPoly(pub Vec<Coefficient>);

impl VPoly {
    pub fn constant(c: Coefficient) -> Self {
        VPoly(vec![c]).normalized()
    }

    fn normalized(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn coefficient(&self, r: usize) -> Coefficient {
        self.0.get(r).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add(&self, other: &VPoly) -> VPoly {
        let n = self.0.len().max(other.0.len());
        VPoly(
            (0..n)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
        .normalized()
    }

    pub fn mul(&self, other: &VPoly) -> VPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return VPoly::default();
        }
        let mut out = vec![Coefficient::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        VPoly(out).normalized()
    }

    pub fn scale(&self, c: &Coefficient) -> VPoly {
        VPoly(self.0.iter().map(|x| x * c).collect()).normalized()
    }

    /// `P(-v)`.
    pub fn reflect(&self) -> VPoly {
        VPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `binom(P, j) = P(P-1)…(P-j+1)/j!`.
    pub fn binomial(&self, j: usize) -> VPoly {
        let mut out = VPoly::constant(Coefficient::one());
        for i in 0..j {
            let shifted = self.add(&VPoly::constant(int(-(i as i64))));
            out = out.mul(&shifted).scale(&rat(1, i as i64 + 1));
        }
        out
    }

    pub fn eval(&self, v: &Coefficient) -> Coefficient {
        self.0
            .iter()
            .rev()
            .fold(Coefficient::zero(), |acc, c| acc * v + c)
    }

    pub fn is_negative_somewhere(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }
}

/// `∏_{m=1}^{N} (1 + sign·p_m)^{a_m(v)}` graded by powers of `v`. The
/// coefficient of `p_λ` is `∏_i sign^{m_i} binom(a_i(v), m_i)`.
pub fn graded_product_series(
    sign: i8,
    exponent: impl Fn(u32) -> VPoly,
    max_degree: usize,
) -> Graded {
    let exps: Vec<VPoly> = (0..=max_degree as u32)
        .map(|m| {
            if m == 0 {
                VPoly::default()
            } else {
                exponent(m)
            }
        })
        .collect();
    let mut out: Graded = BTreeMap::new();
    out.insert(0, Series::one(max_degree));
    for n in 1..=max_degree {
        for lambda in partitions_with(n, |_| true) {
            let mut poly = VPoly::constant(Coefficient::one());
            for (part, m) in lambda.multiplicities() {
                let mut b = exps[part as usize].binomial(m);
                if sign < 0 && m % 2 == 1 {
                    b = b.scale(&int(-1));
                }
                poly = poly.mul(&b);
            }
            for (r, c) in poly.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let slot = out.entry(r).or_insert_with(|| Series::zero(max_degree));
                let mut comp = slot.component(n);
                comp.add_term(lambda.clone(), c.clone());
                slot.set(n, comp);
            }
        }
    }
    out
}

/// The plethystic inverse `G` of `F`: `F[G] = p_1` through degree `N`.
pub fn pleth_inverse(f: &Series) -> Result<Series> {
    require_constant_free(f)?;
    let p1 = SymFunc::p(Partition::new(vec![1]));
    if f.max_degree() < 1 || f.component(1) != p1 {
        return Err(Error::NotInvertible);
    }
    let n = f.max_degree();
    let mut g = Series::from_symfunc(&p1, n);
    for d in 2..=n {
        // F[G] at degree d is G_d plus terms involving only G_1..G_{d-1}.
        let partial = pleth_series(&f.truncate(d), &g.truncate(d))?;
        g.set(d, -&partial.component(d));
    }
    Ok(g)
}

/// `p_1` as a series.
pub fn p1_series(max_degree: usize) -> Series {
    Series::from_symfunc(&SymFunc::p(Partition::new(vec![1])), max_degree)
}

/// `Σ_{n≥1} h_n` (i.e. `H - 1`).
pub fn h_minus_one(max_degree: usize) -> Series {
    Series::from_fn(max_degree, h_of)
}

/// `Σ_{n≥1} e_n` (i.e. `E - 1`).
pub fn e_minus_one(max_degree: usize) -> Series {
    Series::from_fn(max_degree, e_of)
}

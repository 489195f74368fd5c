//! Representation families built from a single template
//! `f_n = (1/n) Σ_{d|n} ψ(d) p_d^{n/d}`.
//!
//! `Lie_n`, `Conj_n`, the Foulkes characters `ℓ_n^{(r)}`, the prime-set
//! families `Lie_n^S`, `Lie_n^{S̄}` and the set-indexed `f_n^T` differ only in
//! the choice of `ψ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{integer::gcd, Zero};

use crate::error::{Error, Result};
use crate::partition::{divs, mu, phi, Partition, PrimeSet};
use crate::plethysm::{Series, VPoly};
use crate::symfunc::{int, rat, Coefficient, SymFunc};

/// A symbolic set of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IntSet {
    All,
    Explicit(BTreeSet<u64>),
    /// `{n : n ≤ k}`
    AtMost(u64),
    /// `{n : n | k}`
    Divisors(u64),
    /// `{n : n ≡ 1 mod k}`
    OneMod(u64),
    /// `{k^r : r ≥ 0}`
    Powers(u64),
    /// `P(S)`: integers whose prime factors all lie in `S` (or `S̄`).
    PrimeSupport(PrimeSet),
}

impl IntSet {
    pub fn explicit(items: impl IntoIterator<Item = u64>) -> Self {
        IntSet::Explicit(items.into_iter().collect())
    }

    pub fn odd() -> Self {
        IntSet::OneMod(2)
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 {
            return false;
        }
        match self {
            IntSet::All => true,
            IntSet::Explicit(s) => s.contains(&n),
            IntSet::AtMost(k) => n <= *k,
            IntSet::Divisors(k) => k % n == 0,
            IntSet::OneMod(k) => n % k == 1 % k,
            IntSet::Powers(k) => {
                let mut m = n;
                if *k <= 1 {
                    return m == 1;
                }
                while m % k == 0 {
                    m /= k;
                }
                m == 1
            }
            IntSet::PrimeSupport(s) => s.in_p(n),
        }
    }

    /// Members up to `bound`, ascending.
    pub fn members(&self, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&n| self.contains(n)).collect()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntSet::All => write!(f, "all"),
            IntSet::Explicit(s) => {
                let items: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "{}", items.join(","))
            }
            IntSet::AtMost(k) => write!(f, "le({k})"),
            IntSet::Divisors(k) => write!(f, "div({k})"),
            IntSet::OneMod(k) => write!(f, "mod1({k})"),
            IntSet::Powers(k) => write!(f, "pow({k})"),
            IntSet::PrimeSupport(s) => {
                let items: Vec<String> = s.primes().iter().map(u64::to_string).collect();
                if s.is_complement() {
                    write!(f, "Pbar({})", items.join(","))
                } else {
                    write!(f, "P({})", items.join(","))
                }
            }
        }
    }
}

fn parse_call(s: &str, name: &str) -> Option<String> {
    s.strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::to_string)
}

fn parse_u64_list(s: &str) -> Option<Vec<u64>> {
    if s.trim().is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<u64>().ok()).collect()
}

fn parse_positive(s: &str, whole: &str) -> Result<u64> {
    match s.trim().parse::<u64>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(Error::BadSet(whole.to_string())),
    }
}

/// Parses `"1,5"`, `"all"`, `"le(k)"`, `"div(k)"`, `"mod1(k)"`, `"pow(k)"`,
/// `"P(2,3)"` and `"Pbar(2)"`.
impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadSet(s.to_string());
        if s == "all" {
            return Ok(IntSet::All);
        }
        if let Some(arg) = parse_call(s, "le") {
            return Ok(IntSet::AtMost(parse_positive(&arg, s)?));
        }
        if let Some(arg) = parse_call(s, "div") {
            return Ok(IntSet::Divisors(parse_positive(&arg, s)?));
        }
        if let Some(arg) = parse_call(s, "mod1") {
            return Ok(IntSet::OneMod(parse_positive(&arg, s)?));
        }
        if let Some(arg) = parse_call(s, "pow") {
            return Ok(IntSet::Powers(parse_positive(&arg, s)?));
        }
        if let Some(arg) = parse_call(s, "Pbar") {
            let primes = parse_u64_list(&arg).ok_or_else(bad)?;
            return Ok(IntSet::PrimeSupport(PrimeSet::new(primes)?.complement()));
        }
        if let Some(arg) = parse_call(s, "P") {
            let primes = parse_u64_list(&arg).ok_or_else(bad)?;
            return Ok(IntSet::PrimeSupport(PrimeSet::new(primes)?));
        }
        let items = parse_u64_list(s).ok_or_else(bad)?;
        if items.is_empty() || items.contains(&0) {
            return Err(bad());
        }
        Ok(IntSet::explicit(items))
    }
}

pub(crate) fn prime_list(s: &PrimeSet) -> String {
    let body = s
        .primes()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    if s.is_complement() {
        format!("bar:{body}")
    } else {
        body
    }
}

/// Parses a prime list `"2,3"`, optionally prefixed `"bar:"` for the complement.
pub fn parse_prime_set(s: &str) -> Result<PrimeSet> {
    let s = s.trim();
    let (body, complement) = match s.strip_prefix("bar:") {
        Some(rest) => (rest, true),
        None => (s, false),
    };
    let body = body.trim_start_matches('{').trim_end_matches('}');
    let primes = parse_u64_list(body).ok_or_else(|| Error::BadSet(s.to_string()))?;
    let set = PrimeSet::new(primes)?;
    Ok(if complement { set.complement() } else { set })
}

/// The function `d ↦ ψ(d)` behind a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PsiSpec {
    /// `μ(d)`: the Lie family.
    Mu,
    /// `φ(d)`: the conjugacy action on `n`-cycles.
    Phi,
    /// `φ(Q_d) μ(ℓ_d)`: `Lie_n^S`.
    PrimeSet(PrimeSet),
    /// `φ(ℓ_d) μ(Q_d)`: `Lie_n^{S̄}`.
    PrimeSetBar(PrimeSet),
    /// `Σ_{m|d, m∈T} m μ(d/m)`.
    SetT(IntSet),
    /// The Ramanujan sum `φ(d) μ(d/(d,r)) / φ(d/(d,r))`.
    Foulkes(u64),
    /// Explicit values `ψ(1), ψ(2), …`.
    Custom(Vec<i64>),
}

impl PsiSpec {
    pub fn eval(&self, d: u64) -> i64 {
        assert!(d >= 1, "psi is defined on positive integers");
        match self {
            PsiSpec::Mu => mu(d),
            PsiSpec::Phi => phi(d),
            PsiSpec::PrimeSet(s) => {
                let (q, l) = s.factor(d);
                phi(q) * mu(l)
            }
            PsiSpec::PrimeSetBar(s) => {
                let (q, l) = s.factor(d);
                phi(l) * mu(q)
            }
            PsiSpec::SetT(t) => divs(d)
                .into_iter()
                .filter(|&m| t.contains(m))
                .map(|m| m as i64 * mu(d / m))
                .sum(),
            PsiSpec::Foulkes(r) => {
                let quotient = d / gcd(d, *r);
                let num = phi(d) * mu(quotient);
                let den = phi(quotient);
                assert_eq!(num % den, 0, "Ramanujan sum must be an integer");
                num / den
            }
            PsiSpec::Custom(table) => *table
                .get(d as usize - 1)
                .unwrap_or_else(|| panic!("custom psi table has no value at {d}")),
        }
    }
}

impl fmt::Display for PsiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiSpec::Mu => write!(f, "mu"),
            PsiSpec::Phi => write!(f, "phi"),
            PsiSpec::PrimeSet(s) => write!(f, "prime_set({})", prime_list(s)),
            PsiSpec::PrimeSetBar(s) => write!(f, "prime_set_bar({})", prime_list(s)),
            PsiSpec::SetT(t) => write!(f, "set_T({t})"),
            PsiSpec::Foulkes(r) => write!(f, "foulkes({r})"),
            PsiSpec::Custom(v) => write!(f, "custom({v:?})"),
        }
    }
}

/// Parses `mu`, `phi`, `prime_set(2,3)`, `prime_set_bar(2)`, `set_T(<set>)`
/// and `foulkes(r)`.
impl FromStr for PsiSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "mu" => return Ok(PsiSpec::Mu),
            "phi" => return Ok(PsiSpec::Phi),
            _ => {}
        }
        if let Some(arg) = parse_call(s, "prime_set_bar") {
            return Ok(PsiSpec::PrimeSetBar(parse_prime_set(&arg)?));
        }
        if let Some(arg) = parse_call(s, "prime_set") {
            return Ok(PsiSpec::PrimeSet(parse_prime_set(&arg)?));
        }
        if let Some(arg) = parse_call(s, "set_T") {
            return Ok(PsiSpec::SetT(arg.parse()?));
        }
        if let Some(arg) = parse_call(s, "foulkes") {
            return Ok(PsiSpec::Foulkes(parse_positive(&arg, s)?));
        }
        Err(Error::InvalidParams(format!("unknown psi '{s}'")))
    }
}

/// `(1/n) Σ_{d|n} ψ(d) p_d^{n/d}`.
pub fn f_from_psi(n: usize, psi: &PsiSpec) -> SymFunc {
    assert!(n >= 1, "f_n needs n >= 1");
    let mut out = SymFunc::zero(n);
    for d in divs(n as u64) {
        let value = psi.eval(d);
        if value != 0 {
            out.add_term(
                Partition::rectangle(d as u32, n / d as usize),
                rat(value, n as i64),
            );
        }
    }
    out
}

/// `Σ_{n=1}^N f_n`.
pub fn series_from_psi(psi: &PsiSpec, max_degree: usize) -> Series {
    Series::from_fn(max_degree, |n| f_from_psi(n, psi))
}

/// `f̃_n(v) = (1/n) Σ_{d|n} ψ(d) v^{n/d}`.
pub fn f_tilde(n: usize, psi: &PsiSpec) -> VPoly {
    let mut coeffs = vec![Coefficient::zero(); n + 1];
    for d in divs(n as u64) {
        coeffs[n / d as usize] += rat(psi.eval(d), n as i64);
    }
    VPoly(coeffs).add(&VPoly::default())
}

/// `f̃_n(t)` at `t = ±1`.
pub fn f_tilde_eval(n: usize, psi: &PsiSpec, t: i64) -> Coefficient {
    assert!(t == 1 || t == -1, "f_tilde_eval is defined at t = ±1");
    f_tilde(n, psi).eval(&int(t))
}

pub fn lie(n: usize) -> SymFunc {
    f_from_psi(n, &PsiSpec::Mu)
}

pub fn conj(n: usize) -> SymFunc {
    f_from_psi(n, &PsiSpec::Phi)
}

/// The Foulkes character `ℓ_n^{(r)}`, `1 ≤ r ≤ n`.
pub fn foulkes(n: usize, r: u64) -> Result<SymFunc> {
    if r == 0 || r > n as u64 {
        return Err(Error::FoulkesRange { n: n as u64, r });
    }
    Ok(f_from_psi(n, &PsiSpec::Foulkes(r)))
}

/// `ℓ_n^{(k)}` for any `k ≥ 1`, reducing `k` into `1..=n`.
pub fn foulkes_reduced(n: usize, k: u64) -> SymFunc {
    let r = (k - 1) % n as u64 + 1;
    f_from_psi(n, &PsiSpec::Foulkes(r))
}

pub fn lie_s(n: usize, s: &PrimeSet) -> SymFunc {
    f_from_psi(n, &PsiSpec::PrimeSet(s.clone()))
}

pub fn lie_s_bar(n: usize, s: &PrimeSet) -> SymFunc {
    f_from_psi(n, &PsiSpec::PrimeSetBar(s.clone()))
}

pub fn f_t(n: usize, t: &IntSet) -> SymFunc {
    f_from_psi(n, &PsiSpec::SetT(t.clone()))
}

/// `Lie_a[p_m]`.
pub fn lie_of_p(a: usize, m: u32) -> SymFunc {
    lie(a).pleth_p(m)
}

/// `Σ_{m∈T, m|n} Lie_{n/m}[p_m]`.
pub fn f_t_decomposed(n: usize, t: &IntSet) -> SymFunc {
    divs(n as u64)
        .into_iter()
        .filter(|&m| t.contains(m))
        .fold(SymFunc::zero(n), |acc, m| {
            &acc + &lie_of_p(n / m as usize, m as u32)
        })
}

/// `Σ_{m∈T} Σ_{k≥0, m2^k | n} Lie_{n/(m2^k)}[p_{m2^k}]`.
pub fn g_t(n: usize, t: &IntSet) -> SymFunc {
    let mut out = SymFunc::zero(n);
    for m in divs(n as u64).into_iter().filter(|&m| t.contains(m)) {
        let mut step = m;
        while n as u64 % step == 0 {
            out = &out + &lie_of_p(n / step as usize, step as u32);
            step *= 2;
        }
    }
    out
}

/// A named family, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Lie,
    Conj,
    Foulkes(u64),
    LieS(PrimeSet),
    LieSBar(PrimeSet),
    FT(IntSet),
    GT(IntSet),
}

impl Family {
    pub fn component(&self, n: usize) -> SymFunc {
        match self {
            Family::Lie => lie(n),
            Family::Conj => conj(n),
            Family::Foulkes(r) => f_from_psi(n, &PsiSpec::Foulkes(*r)),
            Family::LieS(s) => lie_s(n, s),
            Family::LieSBar(s) => lie_s_bar(n, s),
            Family::FT(t) => f_t(n, t),
            Family::GT(t) => g_t(n, t),
        }
    }

    pub fn series(&self, max_degree: usize) -> Series {
        Series::from_fn(max_degree, |n| self.component(n))
    }

    pub fn psi(&self) -> Option<PsiSpec> {
        Some(match self {
            Family::Lie => PsiSpec::Mu,
            Family::Conj => PsiSpec::Phi,
            Family::Foulkes(r) => PsiSpec::Foulkes(*r),
            Family::LieS(s) => PsiSpec::PrimeSet(s.clone()),
            Family::LieSBar(s) => PsiSpec::PrimeSetBar(s.clone()),
            Family::FT(t) => PsiSpec::SetT(t.clone()),
            Family::GT(_) => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let primes = prime_list;
        match self {
            Family::Lie => write!(f, "lie"),
            Family::Conj => write!(f, "conj"),
            Family::Foulkes(r) => write!(f, "foulkes:{r}"),
            Family::LieS(s) => write!(f, "lieS:{}", primes(s)),
            Family::LieSBar(s) => write!(f, "lieSbar:{}", primes(s)),
            Family::FT(t) => write!(f, "fT:{t}"),
            Family::GT(t) => write!(f, "gT:{t}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let need = || arg.ok_or_else(|| Error::UnknownFamily(s.to_string()));
        match head {
            "lie" if arg.is_none() => Ok(Family::Lie),
            "conj" if arg.is_none() => Ok(Family::Conj),
            "foulkes" => match need()?.trim().parse::<u64>() {
                Ok(r) if r >= 1 => Ok(Family::Foulkes(r)),
                _ => Err(Error::InvalidParams(format!("bad foulkes index in '{s}'"))),
            },
            "lieS" => Ok(Family::LieS(parse_prime_set(need()?)?)),
            "lieSbar" => Ok(Family::LieSBar(parse_prime_set(need()?)?)),
            "fT" => Ok(Family::FT(need()?.parse()?)),
            "gT" => Ok(Family::GT(need()?.parse()?)),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{h_of, p_of, to_schur};

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    fn ps(primes: &[u64]) -> PrimeSet {
        PrimeSet::new(primes.iter().copied()).unwrap()
    }

    #[test]
    fn psi_template_examples() {
        let want =
            SymFunc::from_terms(2, [(p(&[1, 1]), rat(1, 2)), (p(&[2]), rat(-1, 2))]).unwrap();
        assert_eq!(f_from_psi(2, &PsiSpec::Mu), want);
        let conj4 = SymFunc::from_terms(
            4,
            [
                (p(&[1, 1, 1, 1]), rat(1, 4)),
                (p(&[2, 2]), rat(1, 4)),
                (p(&[4]), rat(2, 4)),
            ],
        )
        .unwrap();
        assert_eq!(f_from_psi(4, &PsiSpec::Phi), conj4);
        for psi in [
            PsiSpec::Mu,
            PsiSpec::Phi,
            PsiSpec::Foulkes(3),
            PsiSpec::SetT(IntSet::odd()),
        ] {
            assert_eq!(f_from_psi(1, &psi), p_of(&p(&[1])));
        }
    }

    #[test]
    fn dimension_identity() {
        // coefficient of p_{1^n} is ψ(1)/n, so n!·coef = (n-1)!·ψ(1)
        for n in 1..=8 {
            for psi in [PsiSpec::Mu, PsiSpec::Phi, PsiSpec::Custom(vec![3; 8])] {
                let c = f_from_psi(n, &psi).coefficient(&Partition::rectangle(1, n));
                assert_eq!(c * int(n as i64), int(psi.eval(1)));
            }
        }
    }

    #[test]
    fn named_families() {
        assert_eq!(lie_s(2, &ps(&[2])), h_of(2));
        let f42 = foulkes(4, 2).unwrap();
        let want = SymFunc::from_terms(
            4,
            [
                (p(&[1, 1, 1, 1]), rat(1, 4)),
                (p(&[2, 2]), rat(1, 4)),
                (p(&[4]), rat(-2, 4)),
            ],
        )
        .unwrap();
        assert_eq!(f42, want);
        assert_eq!(to_schur(&f42).to_string(), "s[3,1] + s[2,2] + s[1,1,1,1]");
        for n in 1..=10 {
            assert_eq!(f_t(n, &IntSet::All), conj(n));
        }
        assert!(foulkes(4, 5).is_err());
        assert!(foulkes(4, 0).is_err());
    }

    #[test]
    fn lie_s_matches_foulkes_at_q() {
        for primes in [&[][..], &[2], &[3], &[2, 3], &[2, 5]] {
            let s = ps(primes);
            for n in 1..=24 {
                let (q, l) = s.factor(n as u64);
                assert_eq!(lie_s(n, &s), foulkes(n, q).unwrap(), "S={s} n={n}");
                assert_eq!(lie_s_bar(n, &s), foulkes(n, l).unwrap(), "S={s} n={n}");
                assert_eq!(lie_s_bar(n, &s), lie_s(n, &s.complement()));
                // P(S) as a T set gives the same family
                assert_eq!(f_t(n, &IntSet::PrimeSupport(s.clone())), lie_s(n, &s));
            }
        }
    }

    #[test]
    fn f_tilde_examples() {
        for primes in [&[][..], &[2], &[3], &[2, 3]] {
            let s = ps(primes);
            for n in 1..=100 {
                let want = int(i64::from(s.in_p(n as u64)));
                assert_eq!(f_tilde_eval(n, &PsiSpec::PrimeSet(s.clone()), 1), want);
            }
        }
        for t in [
            IntSet::explicit([1, 3]),
            IntSet::Divisors(6),
            IntSet::Powers(3),
        ] {
            for n in 1..=60 {
                assert_eq!(
                    f_tilde_eval(n, &PsiSpec::SetT(t.clone()), 1),
                    int(i64::from(t.contains(n as u64)))
                );
            }
        }
        // r | n with gcd(r, n/r) = 1
        for n in 1..=60u64 {
            for r in divs(n) {
                if gcd(r, n / r) == 1 {
                    let want = int(i64::from(n == r));
                    assert_eq!(f_tilde_eval(n as usize, &PsiSpec::Foulkes(r), 1), want);
                }
            }
        }
    }

    #[test]
    fn g_t_examples() {
        for n in 1..=12 {
            assert_eq!(g_t(n, &IntSet::explicit([1])), lie_s(n, &ps(&[2])), "n={n}");
        }
        assert_eq!(g_t(1, &IntSet::explicit([1, 7])), p_of(&p(&[1])));
        assert_eq!(g_t(2, &IntSet::explicit([1])), h_of(2));
    }

    #[test]
    fn decomposed_examples() {
        let t = IntSet::explicit([1, 2]);
        assert_eq!(f_t_decomposed(2, &t), h_of(2));
        let onek = IntSet::explicit([1, 5]);
        for n in [1, 2, 3, 4, 6, 7] {
            assert_eq!(f_t_decomposed(n, &onek), lie(n));
        }
        for k in [2u64, 3, 4, 6] {
            for n in 1..=8 {
                let t = IntSet::Divisors(k);
                assert_eq!(f_t_decomposed(n, &t), foulkes_reduced(n, k), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn int_set_parsing() {
        for s in [
            "all", "le(5)", "div(12)", "mod1(4)", "pow(3)", "1,5", "P(2,3)", "Pbar(2)",
        ] {
            assert_eq!(s.parse::<IntSet>().unwrap().to_string(), s);
        }
        for bad in ["", "le()", "div(0)", "x(3)", "1,,2", "P(4)", "0"] {
            assert!(bad.parse::<IntSet>().is_err(), "{bad}");
        }
        assert!(IntSet::Powers(3).contains(27) && !IntSet::Powers(3).contains(6));
        assert!(IntSet::OneMod(4).contains(1) && IntSet::OneMod(4).contains(9));
    }

    #[test]
    fn psi_parsing() {
        for s in [
            "mu",
            "phi",
            "prime_set(2)",
            "prime_set_bar(2,3)",
            "set_T(1,3)",
            "set_T(mod1(4))",
            "foulkes(3)",
            "prime_set()",
        ] {
            assert_eq!(s.parse::<PsiSpec>().unwrap().to_string(), s);
        }
        assert!("psi".parse::<PsiSpec>().is_err());
        assert!("foulkes(0)".parse::<PsiSpec>().is_err());
    }

    #[test]
    fn family_parsing() {
        for s in [
            "lie",
            "conj",
            "foulkes:3",
            "lieS:2,3",
            "lieSbar:2",
            "fT:1,5",
            "fT:div(12)",
            "fT:mod1(4)",
            "fT:pow(3)",
            "fT:le(5)",
        ] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!("fT:1,,5".parse::<Family>(), Err(Error::BadSet(_))));
        assert!(matches!(
            "lieS:4".parse::<Family>(),
            Err(Error::NotPrime(4))
        ));
    }
}

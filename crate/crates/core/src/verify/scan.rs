//! Positivity scans over a range of degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{negative_witnesses, Params, Witness};
use crate::error::{Error, Result};
use crate::lie_modules::{f_t, lie_s, prime_list, Family, IntSet};
use crate::partition::{is_prime, partitions_with, Partition, PrimeSet};
use crate::plethysm::{product_series, Factor};
use crate::symfunc::{int, to_schur, SymFunc};

/// Largest degree a scan accepts unless the caller raises it.
pub const DEFAULT_BUDGET: usize = 20;

/// Verdict at one degree. A negative verdict always carries witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NVerdict {
    pub n: usize,
    pub positive: bool,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: Option<u64>,
    #[serde(skip)]
    pub f: SymFunc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub verdicts: Vec<NVerdict>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.verdicts.iter().all(|v| v.positive)
    }

    pub fn negatives(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .filter(|v| !v.positive)
            .map(|v| v.n)
            .collect()
    }

    pub fn strip_timings(&mut self) {
        for v in &mut self.verdicts {
            v.elapsed_ms = None;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut out = format!("{} [{}]\n", self.family, params.join(" "));
        for v in &self.verdicts {
            out.push_str(&format!(
                "  n={}: {}",
                v.n,
                if v.positive { "positive" } else { "negative" }
            ));
            if let Some(ms) = v.elapsed_ms {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
            for w in &v.witnesses {
                out.push_str(&format!(
                    "    s{}: {}\n",
                    Partition::new(w.partition.clone()),
                    w.coefficient
                ));
            }
        }
        out
    }
}

/// A family whose degree-`n` member is tested for Schur positivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanFamily {
    /// `f_n^T`, `T = {k^r}`.
    Powk(u64),
    /// Degree-`n` slice of `∏_r (1-p_{k^r})^{-1}`.
    ProductPowk(u64),
    /// `f_n^{1,k}`.
    Onek(u64),
    /// `f_n^{1..k}`.
    Lek(u64),
    /// Degree-`n` slice of `∏_{m≡1 mod k} (1-p_m)^{-1}`.
    Stanley(u64),
    /// `Σ_{λ⊢n, λ_i∈P(S)} p_λ`.
    SymLSSum(PrimeSet),
    /// Degree-`n` slice of `∏_{m∈T} (1-p_m)^{-1}`.
    ProdT(IntSet),
    /// `p_1 Lie^(q)_{n-1} - Lie^(q)_n`.
    Lifting(u64),
    /// Any named family.
    Named(Family),
}

impl ScanFamily {
    /// Resolves a family name with its parameters.
    pub fn parse(name: &str, params: &Params) -> Result<Self> {
        let k = || params.k().and_then(|k| require_at_least(k, 1, "k"));
        Ok(match name {
            "powk" => ScanFamily::Powk(require_at_least(params.k()?, 2, "k")?),
            "product-powk" => ScanFamily::ProductPowk(require_at_least(params.k()?, 2, "k")?),
            "onek" => ScanFamily::Onek(require_at_least(params.k()?, 2, "k")?),
            "lek" => ScanFamily::Lek(k()?),
            "stanley" | "mod1k" => ScanFamily::Stanley(k()?),
            "symLS-sum" => ScanFamily::SymLSSum(params.prime_set()?.clone()),
            "prodT" => ScanFamily::ProdT(params.int_set()?.clone()),
            "lifting" => {
                let q = params.q()?;
                if !is_prime(q) {
                    return Err(Error::NotPrime(q));
                }
                ScanFamily::Lifting(q)
            }
            other => ScanFamily::Named(other.parse()?),
        })
    }

    fn min_degree(&self) -> usize {
        match self {
            ScanFamily::Lifting(_) => 2,
            _ => 1,
        }
    }

    fn params(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        match self {
            ScanFamily::Powk(k)
            | ScanFamily::ProductPowk(k)
            | ScanFamily::Onek(k)
            | ScanFamily::Lek(k)
            | ScanFamily::Stanley(k) => {
                out.insert("k".into(), k.to_string());
            }
            ScanFamily::SymLSSum(s) => {
                out.insert("S".into(), prime_list(s));
            }
            ScanFamily::ProdT(t) => {
                out.insert("T".into(), t.to_string());
            }
            ScanFamily::Lifting(q) => {
                out.insert("q".into(), q.to_string());
            }
            ScanFamily::Named(_) => {}
        }
        out
    }

    /// The degree-`n` member.
    pub fn member(&self, n: usize) -> SymFunc {
        let product = |keep: &dyn Fn(u64) -> bool| {
            let factors: Vec<Factor> = (1..=n as u32)
                .filter(|&m| keep(u64::from(m)))
                .map(Factor::geometric)
                .collect();
            product_series(&factors, n)
                .expect("distinct factors")
                .component(n)
        };
        match self {
            ScanFamily::Powk(k) => f_t(n, &IntSet::Powers(*k)),
            ScanFamily::ProductPowk(k) => product(&|m| IntSet::Powers(*k).contains(m)),
            ScanFamily::Onek(k) => f_t(n, &IntSet::explicit([1, *k])),
            ScanFamily::Lek(k) => f_t(n, &IntSet::AtMost(*k)),
            ScanFamily::Stanley(k) => product(&|m| m % k == 1 % k),
            ScanFamily::SymLSSum(s) => partitions_with(n, |x| s.in_p(u64::from(x)))
                .into_iter()
                .fold(SymFunc::zero(n), |acc, l| &acc + &SymFunc::p(l)),
            ScanFamily::ProdT(t) => product(&|m| t.contains(m)),
            ScanFamily::Lifting(q) => {
                let s = PrimeSet::new([*q]).expect("prime");
                let p1 = SymFunc::p(Partition::new(vec![1]));
                &p1.mul(&lie_s(n - 1, &s)) - &lie_s(n, &s)
            }
            ScanFamily::Named(f) => f.component(n),
        }
    }
}

impl fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanFamily::Powk(_) => write!(f, "powk"),
            ScanFamily::ProductPowk(_) => write!(f, "product-powk"),
            ScanFamily::Onek(_) => write!(f, "onek"),
            ScanFamily::Lek(_) => write!(f, "lek"),
            ScanFamily::Stanley(_) => write!(f, "stanley"),
            ScanFamily::SymLSSum(_) => write!(f, "symLS-sum"),
            ScanFamily::ProdT(_) => write!(f, "prodT"),
            ScanFamily::Lifting(_) => write!(f, "lifting"),
            ScanFamily::Named(family) => write!(f, "{family}"),
        }
    }
}

fn require_at_least(value: u64, min: u64, name: &str) -> Result<u64> {
    if value < min {
        return Err(Error::InvalidParams(format!(
            "{name} must be at least {min}"
        )));
    }
    Ok(value)
}

fn verdict(family: &ScanFamily, n: usize) -> NVerdict {
    let start = Instant::now();
    let f = family.member(n);
    let witnesses = negative_witnesses(&family.to_string(), &f);
    NVerdict {
        n,
        positive: witnesses.is_empty(),
        witnesses,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
        f,
    }
}

/// Tests every degree in `lo..=hi`. Degrees run in parallel on the current
/// rayon pool; the result is ordered by degree regardless of schedule.
pub fn scan_positivity(
    family: &ScanFamily,
    lo: usize,
    hi: usize,
    budget: usize,
) -> Result<PositivityReport> {
    if hi > budget {
        return Err(Error::Budget {
            requested: hi,
            budget,
        });
    }
    if lo < family.min_degree() || lo > hi {
        return Err(Error::InvalidParams(format!(
            "degree range {lo}..={hi} is empty or starts below {}",
            family.min_degree()
        )));
    }
    let verdicts: Vec<NVerdict> = (lo..=hi)
        .into_par_iter()
        .map(|n| verdict(family, n))
        .collect();
    Ok(PositivityReport {
        family: family.to_string(),
        params: family.params(),
        verdicts,
    })
}

/// Positivity of `p_1 Lie^(q)_{n-1} - Lie^(q)_n` for `2 ≤ n ≤ n_max`.
pub fn lifting_check(q: u64, n_max: usize, budget: usize) -> Result<PositivityReport> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    scan_positivity(&ScanFamily::Lifting(q), 2, n_max, budget)
}

/// Published exceptions (degrees `n ≤ 32` where the lifting difference is
/// not Schur positive), where known.
pub fn lifting_exceptions(q: u64) -> Option<Vec<u64>> {
    match q {
        3 => Some(vec![3, 6, 9, 10, 18, 27]),
        5 => Some(vec![5, 6, 10, 25, 26]),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookReport {
    pub n: usize,
    pub ok: bool,
    pub detail: String,
}

/// Hooks absent from `Conj_n`: `(n-1,1)` for `n ≥ 2`, `(2,1^{n-2})` for odd
/// `n ≥ 3` and `(1^n)` for even `n`. Every other hook must appear.
pub fn hook_content_check(n: usize) -> Result<HookReport> {
    if n < 2 {
        return Err(Error::InvalidParams("hook check needs n >= 2".into()));
    }
    if n > DEFAULT_BUDGET {
        return Err(Error::Budget {
            requested: n,
            budget: DEFAULT_BUDGET,
        });
    }
    let mut excluded = vec![Partition::hook(n, 1)];
    if n % 2 == 1 && n >= 3 {
        excluded.push(Partition::hook(n, n - 2));
    }
    if n % 2 == 0 {
        excluded.push(Partition::rectangle(1, n));
    }
    let schur = to_schur(&crate::lie_modules::conj(n));
    let mut problems = Vec::new();
    for k in 0..n {
        let hook = Partition::hook(n, k);
        let c = schur.coefficient(&hook);
        let absent = excluded.contains(&hook);
        if absent && c != int(0) {
            problems.push(format!("{hook} should be absent, has {c}"));
        } else if !absent && c < int(1) {
            problems.push(format!("{hook} should be present, has {c}"));
        }
    }
    Ok(HookReport {
        n,
        ok: problems.is_empty(),
        detail: problems.join("; "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powk_four_witness() {
        let r = scan_positivity(&ScanFamily::Powk(4), 4, 4, DEFAULT_BUDGET).unwrap();
        let v = &r.verdicts[0];
        assert!(!v.positive);
        assert!(v
            .witnesses
            .iter()
            .any(|w| w.partition == vec![1, 1, 1, 1] && w.coefficient == "-1"));
    }

    #[test]
    fn budget_is_explicit() {
        assert_eq!(
            scan_positivity(&ScanFamily::Powk(3), 1, 21, DEFAULT_BUDGET),
            Err(Error::Budget {
                requested: 21,
                budget: 20
            })
        );
        assert!(lifting_check(4, 5, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn sym_ls_sum_positive() {
        let s = PrimeSet::new([3]).unwrap();
        let r = scan_positivity(&ScanFamily::SymLSSum(s), 9, 9, DEFAULT_BUDGET).unwrap();
        assert!(r.all_positive());
    }

    #[test]
    fn lifting_small() {
        let r = lifting_check(3, 10, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.negatives(), vec![3, 6, 9, 10]);
    }

    #[test]
    fn hooks() {
        for n in 2..=9 {
            let r = hook_content_check(n).unwrap();
            assert!(r.ok, "n={n}: {}", r.detail);
        }
        assert!(hook_content_check(1).is_err());
    }

    #[test]
    fn verdicts_independent_of_schedule() {
        let family = ScanFamily::Lek(3);
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let wide = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let mut a = serial
            .install(|| scan_positivity(&family, 1, 9, DEFAULT_BUDGET))
            .unwrap();
        let mut b = wide
            .install(|| scan_positivity(&family, 1, 9, DEFAULT_BUDGET))
            .unwrap();
        a.strip_timings();
        b.strip_timings();
        assert_eq!(a, b);
    }
}

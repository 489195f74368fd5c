//! Acceptance run: one PASS/FAIL line per criterion. Every equality is exact
//! (rational arithmetic, tolerance zero); runtime limits are wall-clock.
//!
//! Criterion 8 is known to fail on one clause. The degree-16 slice of
//! ∏_{r≥0}(1-p_{4^r})^{-1} is Schur positive: its s_{1^16} coefficient is the
//! signed count of partitions of 16 into parts 1, 4, 16, which is zero. The
//! f_4^T and f_16^T witnesses in the same criterion are checked strictly.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use higher_lie::lie_modules::{f_t, foulkes, lie, lie_s, IntSet};
use higher_lie::partition::{partitions_cached, Partition, PrimeSet};
use higher_lie::plethysm::{
    e_minus_one, h_minus_one, pleth, pleth_e, pleth_e_pm, pleth_h, pleth_h_pm, pleth_inverse,
    pleth_series, product_series, Factor, Series,
};
use higher_lie::symfunc::{
    character_table, e_of, h_of, int, s_of, syt_maj_distribution, to_schur, SymFunc,
};
use higher_lie::verify::{criterion_sets, lifting_check, verify, Params, DEFAULT_BUDGET};
use num::{BigInt, BigRational, One, Zero};

/// Criteria whose failure is explained in the module docs.
const KNOWN_FAILURES: &[u32] = &[8];

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

struct Run {
    failed: Vec<u32>,
}

impl Run {
    fn criterion(
        &mut self,
        num: u32,
        title: &str,
        limit: Option<u64>,
        f: impl FnOnce() -> Outcome,
    ) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let ok = outcome.ok && in_time;
        let timing = match limit {
            Some(s) => format!("{:.2} s, limit {s} s", elapsed.as_secs_f64()),
            None => format!("{:.2} s", elapsed.as_secs_f64()),
        };
        println!(
            "{} criterion {num:>2}: {title} ({timing}){}",
            if ok { "PASS" } else { "FAIL" },
            if outcome.detail.is_empty() {
                String::new()
            } else {
                format!(" -- {}", outcome.detail)
            }
        );
        if !ok {
            self.failed.push(num);
        }
    }
}

fn params(name: &str, value: &str) -> Params {
    let mut p = Params::default();
    p.set(name, value).expect("valid parameter");
    p
}

/// Runs catalog ids; returns the failing `id [params]` labels.
fn run_ids(cases: &[(&str, Params, usize)]) -> Vec<String> {
    let mut bad = Vec::new();
    for (id, p, n) in cases {
        match verify(id, p, Some(*n)) {
            Ok(r) if r.passed() => {}
            Ok(r) => bad.push(r.to_text().lines().take(3).collect::<Vec<_>>().join(" / ")),
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    bad
}

fn ids_outcome(cases: &[(&str, Params, usize)]) -> Outcome {
    let bad = run_ids(cases);
    if bad.is_empty() {
        Outcome::new(true, format!("cases run: {}", cases.len()))
    } else {
        Outcome::new(false, bad.join("; "))
    }
}

fn p1() -> SymFunc {
    SymFunc::p(Partition::new(vec![1]))
}

fn alternating_omega(n: usize, f: impl Fn(usize) -> SymFunc) -> Series {
    Series::from_fn(n, |d| {
        let sign = if d % 2 == 1 { 1 } else { -1 };
        f(d).omega().scale(&int(sign))
    })
}

const S_SETS: [&str; 5] = ["", "2", "3", "2,3", "2,5"];

fn main() {
    let mut run = Run { failed: Vec::new() };

    run.criterion(1, "Thrall, Cadogan and Solomon at N=10", Some(10), || {
        let none = Params::default;
        let mut out = ids_outcome(&[
            ("thrall", none(), 10),
            ("cadogan", none(), 10),
            ("solomon", none(), 10),
        ]);
        let cadogan = pleth_h(&alternating_omega(10, lie)).unwrap();
        let expected = Series::from_symfunc(&p1(), 10).with_constant(BigRational::one());
        if cadogan != expected {
            out = Outcome::new(false, "H[Σ(-1)^{n-1}ω(Lie_n)] is not exactly 1+p_1");
        }
        out
    });

    run.criterion(
        2,
        "H[L^S] and alternating form for five S at N=10",
        Some(30),
        || {
            let cases: Vec<_> = S_SETS
                .iter()
                .flat_map(|s| {
                    [
                        ("symLS", params("S", s), 10),
                        ("altsymLS", params("S", s), 10),
                    ]
                })
                .collect();
            ids_outcome(&cases)
        },
    );

    run.criterion(
        3,
        "E[L^S], alternating and omega forms at N=10",
        Some(30),
        || {
            let mut cases: Vec<_> = S_SETS
                .iter()
                .flat_map(|s| {
                    [
                        ("extLS", params("S", s), 10),
                        ("altextLS", params("S", s), 10),
                    ]
                })
                .collect();
            for s in S_SETS.iter().filter(|s| !s.contains('2')) {
                cases.push(("omegaextLS", params("S", s), 10));
            }
            ids_outcome(&cases)
        },
    );

    run.criterion(4, "Lie^(2) identities at N=10", None, || {
        let two = PrimeSet::new([2]).unwrap();
        let l2 = Series::from_fn(10, |d| lie_s(d, &two));
        let one = BigRational::one();
        let geometric = Series::from_fn(10, |d| SymFunc::p(Partition::rectangle(1, d)))
            .with_constant(one.clone());
        let one_minus = Series::from_symfunc(&p1().scale(&int(-1)), 10).with_constant(one.clone());
        let one_plus = Series::from_symfunc(&p1(), 10).with_constant(one);
        let alt = alternating_omega(10, |d| lie_s(d, &two));
        let direct = pleth_e(&l2).unwrap() == geometric
            && pleth_h_pm(&l2).unwrap() == one_minus
            && pleth_e(&alt).unwrap() == one_plus;
        let catalog = run_ids(&[("lie2", Params::default(), 10)]);
        Outcome::new(direct && catalog.is_empty(), catalog.join("; "))
    });

    run.criterion(
        5,
        "f^T theorem for eight index sets at N=12",
        Some(60),
        || {
            let cases: Vec<_> = criterion_sets()
                .iter()
                .flat_map(|t| {
                    let t = t.to_string();
                    ["fT-sym", "fT-decomp", "fT-ext"].map(|id| (id, params("T", &t), 12))
                })
                .collect();
            ids_outcome(&cases)
        },
    );

    run.criterion(
        6,
        "Foulkes characters against major-index counts, n<=8",
        Some(20),
        || {
            for n in 1..=8usize {
                for r in 1..=n as u64 {
                    let schur = to_schur(&foulkes(n, r).unwrap());
                    for lambda in partitions_cached(n).iter() {
                        let counts = syt_maj_distribution(lambda).unwrap();
                        let expected = counts.get(&(r as usize % n)).copied().unwrap_or(0);
                        if schur.coefficient(lambda) != int(expected as i64) {
                            return Outcome::new(false, format!("n={n} r={r} shape {lambda}"));
                        }
                    }
                }
            }
            Outcome::new(true, "")
        },
    );

    run.criterion(7, "f-tilde value tables up to n=60", None, || {
        ids_outcome(&[("ftilde-tables", Params::default(), 60)])
    });

    run.criterion(8, "k=4 negativity witnesses", Some(120), || {
        let t = IntSet::Powers(4);
        let mut notes = Vec::new();
        let mut witnesses = true;
        for d in [4usize, 16] {
            let c = to_schur(&f_t(d, &t)).coefficient(&Partition::rectangle(1, d));
            witnesses &= c == int(-1);
            notes.push(format!("f_{d}^T sign coefficient {c}"));
        }
        let factors: Vec<Factor> = [1u32, 4, 16].into_iter().map(Factor::geometric).collect();
        let slice = to_schur(&product_series(&factors, 16).unwrap().component(16));
        let slice_negative = !slice.negative_terms().is_empty();
        notes.push(format!(
            "degree-16 product slice {} (sign coefficient {})",
            if slice_negative {
                "not Schur positive"
            } else {
                "Schur positive"
            },
            slice.coefficient(&Partition::rectangle(1, 16))
        ));
        assert!(witnesses, "the attainable clause must hold: {notes:?}");
        Outcome::new(witnesses && slice_negative, notes.join(", "))
    });

    run.criterion(
        9,
        "lifting exceptions for q=3 (n<=18) and q=5 (n<=12)",
        Some(300),
        || {
            let three = lifting_check(3, 18, DEFAULT_BUDGET).unwrap().negatives();
            let five = lifting_check(5, 12, DEFAULT_BUDGET).unwrap().negatives();
            let ok = three == [3, 6, 9, 10, 18] && five == [5, 6, 10];
            Outcome::new(
                ok,
                format!("q=3 negatives {three:?}, q=5 negatives {five:?}"),
            )
        },
    );

    run.criterion(
        10,
        "regular representation decompositions, n<=10",
        None,
        || {
            for n in 1..=10usize {
                let regular = SymFunc::p(Partition::rectangle(1, n));
                let mut by_foulkes = SymFunc::zero(n);
                for k in 1..=n as u64 {
                    by_foulkes = by_foulkes.try_add(&foulkes(n, k).unwrap()).unwrap();
                }
                let mut by_lie = SymFunc::zero(n);
                for d in (1..=n).filter(|d| n % d == 0) {
                    let term = lie(d).pleth_p((n / d) as u32).scale(&int(d as i64));
                    by_lie = by_lie.try_add(&term).unwrap();
                }
                if by_foulkes != regular || by_lie != regular {
                    return Outcome::new(false, format!("n={n}"));
                }
            }
            Outcome::new(true, "")
        },
    );

    run.criterion(11, "plethystic inverse pairs at N=10", None, || {
        let none = Params::default;
        let mut out = ids_outcome(&[
            ("pq", params("q", "2"), 10),
            ("pq", params("q", "3"), 10),
            ("pq-alt", params("q", "3"), 10),
            ("lie-inv", none(), 10),
            ("lie2-inv", none(), 10),
            ("cadogan-inv", none(), 10),
            ("e-inv", none(), 10),
            ("conj-inverse", none(), 10),
            ("lieq-inverse", params("q", "3"), 10),
            ("gmult", none(), 10),
            ("odd-gmult", none(), 10),
            ("p1-frac", none(), 10),
            ("psibar", params("q", "3"), 10),
            ("Hquot", params("q", "2"), 10),
            ("HE", none(), 10),
            ("HF-EG", params("q", "3"), 10),
        ]);
        let two = PrimeSet::new([2]).unwrap();
        let h_inv = pleth_inverse(&h_minus_one(10)).unwrap();
        let e_inv = pleth_inverse(&e_minus_one(10)).unwrap();
        if h_inv != alternating_omega(10, lie) {
            out = Outcome::new(false, "(H-1)^{<-1>} differs from Σ(-1)^{i-1}ω(Lie_i)");
        } else if e_inv != alternating_omega(10, |d| lie_s(d, &two)) {
            out = Outcome::new(false, "(E-1)^{<-1>} differs from Σ(-1)^{i-1}ω(Lie^(2)_i)");
        }
        out
    });

    run.criterion(
        12,
        "length-graded generating functions for four psi at N=8",
        None,
        || {
            let ids = [
                "meta-sym",
                "meta-ext",
                "meta-altsym",
                "meta-altext",
                "meta-equiv",
            ];
            let mut cases = Vec::new();
            for psi in ["mu", "phi", "prime_set(2)", "set_T(1,3)"] {
                for id in ids {
                    cases.push((id, params("psi", psi), 8));
                }
            }
            ids_outcome(&cases)
        },
    );

    run.criterion(13, "property floor", None, property_floor);

    let failed: BTreeSet<u32> = run.failed.iter().copied().collect();
    let known: BTreeSet<u32> = KNOWN_FAILURES.iter().copied().collect();
    assert_eq!(failed, known, "unexpected acceptance outcome");
    println!("acceptance: {} of 13 criteria pass; known failures {known:?}", 13 - failed.len());
}

fn property_floor() -> Outcome {
    // Character orthogonality.
    for n in 1..=8 {
        let parts = partitions_cached(n);
        let table = character_table(n);
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let mut sum = BigRational::zero();
                for (k, mu) in parts.iter().enumerate() {
                    sum += BigRational::new(BigInt::from(a[k] * b[k]), mu.z());
                }
                if sum != BigRational::from_integer(BigInt::from((i == j) as i32)) {
                    return Outcome::new(false, format!("orthogonality n={n}"));
                }
            }
        }
    }
    // ω involution and the Schur round trip on every basis element.
    for n in 1..=8 {
        for lambda in partitions_cached(n).iter() {
            let p = SymFunc::p(lambda.clone());
            if p.omega().omega() != p {
                return Outcome::new(false, format!("omega on p_{lambda}"));
            }
            let s = to_schur(&s_of(lambda));
            if s.terms().count() != 1 || s.coefficient(lambda) != int(1) {
                return Outcome::new(false, format!("round trip at {lambda}"));
            }
        }
    }
    // Associativity samples.
    let g = Series::from_fn(10, |d| match d {
        1 => p1(),
        2 => h_of(2),
        3 => SymFunc::p(Partition::new(vec![2, 1])).scale(&int(-1)),
        _ => SymFunc::zero(d),
    });
    let k = Series::from_fn(10, |d| match d {
        1 => p1().scale(&int(2)),
        2 => e_of(2),
        _ => SymFunc::zero(d),
    });
    let (g8, k8) = (g.truncate(8), k.truncate(8));
    for f in [h_of(2), e_of(2), SymFunc::p(Partition::new(vec![3]))] {
        let left = pleth_series(&pleth(&f, &g8).unwrap(), &k8).unwrap();
        let right = pleth(&f, &pleth_series(&g8, &k8).unwrap()).unwrap();
        if left != right {
            return Outcome::new(false, "plethysm associativity");
        }
    }
    // H·E± reciprocity.
    for f in [g, k, Series::from_fn(10, lie)] {
        let product = pleth_h(&f).unwrap().mul(&pleth_e_pm(&f).unwrap());
        if product != Series::one(10) {
            return Outcome::new(false, "H·E± reciprocity");
        }
    }
    Outcome::new(true, "full suites in tests/properties.rs")
}

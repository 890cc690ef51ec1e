//! Exhaustive cross-checks over ranges of `(n, k)`.
//!
//! Each sweep returns the number of cases checked and every counterexample,
//! sorted so reports are deterministic regardless of thread scheduling.

use rayon::prelude::*;

use crate::admissibility::{
    criterion, discrepancy, discrepancy_bound, AdmissibilityQuery, Configuration,
};
use crate::euclid::{
    arrange, cf_expansion, euclid_trace, recurrence_reconstruct, smith_to_mechanical, smith_word,
};
use crate::oracle::{brute_force_exists, DEFAULT_CAP};
use crate::rotation::rotation_equivalent;
use crate::words::{check_balance, gcd, mechanical_word, PeriodicWord, Slope};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(results: Vec<(usize, Vec<String>)>) -> Self {
        let checked = results.iter().map(|r| r.0).sum();
        let mut failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
        failures.sort();
        SweepReport { checked, failures }
    }
}

fn coprime_pairs(n_max: usize) -> Vec<(usize, usize)> {
    (2..=n_max)
        .flat_map(|n| (1..n).filter(move |&k| gcd(n, k) == 1).map(move |k| (n, k)))
        .collect()
}

fn mechanical(k: usize, n: usize) -> crate::words::BinaryWord {
    mechanical_word(Slope::new(k, n).expect("1 <= k <= n"))
}

/// For every coprime `1 <= k < n <= n_max`: the Euclid arrangement, Smith's
/// word on the decremented expansion and the mechanical word are rotations of
/// one another, and the wrapped Smith word equals the mechanical word exactly.
pub fn equivalence_sweep(n_max: usize) -> SweepReport {
    let results = coprime_pairs(n_max)
        .into_par_iter()
        .map(|(n, k)| {
            let mech = mechanical(k, n);
            let euclid = arrange(n, k).expect("valid pair").into_spots();
            let smith = smith_word(&cf_expansion(n, k).expect("coprime").decremented())
                .expect("valid quotients");
            let wrapped = smith_to_mechanical(n, k).expect("coprime");
            let mut failures = Vec::new();
            if !rotation_equivalent(&euclid, &smith) {
                failures.push(format!("({n}, {k}): euclid {euclid} vs smith {smith}"));
            }
            if !rotation_equivalent(&euclid, &mech) {
                failures.push(format!("({n}, {k}): euclid {euclid} vs mechanical {mech}"));
            }
            if !rotation_equivalent(&smith, &mech) {
                failures.push(format!("({n}, {k}): smith {smith} vs mechanical {mech}"));
            }
            if wrapped != mech {
                failures.push(format!("({n}, {k}): wrapped smith {wrapped} != mechanical {mech}"));
            }
            (1, failures)
        })
        .collect();
    SweepReport::collect(results)
}

/// Criterion against exhaustive search for `2 <= n <= n_max`, all `k, s < n`
/// and `0 <= t <= min(k, s)`. `n_max` is clamped to the oracle cap.
pub fn oracle_grid(n_max: usize) -> SweepReport {
    let n_max = n_max.min(DEFAULT_CAP);
    let mut cells = Vec::new();
    for n in 2..=n_max {
        for k in 1..n {
            for s in 1..n {
                for t in 0..=k.min(s) {
                    cells.push((n, k, s, t));
                }
            }
        }
    }
    let results = cells
        .into_par_iter()
        .map(|(n, k, s, t)| {
            let q = AdmissibilityQuery::new(n, k, s, t).expect("grid respects bounds");
            let oracle = brute_force_exists(&q).expect("under cap");
            let expected = criterion(&q);
            let failure = (oracle.exists != expected).then(|| {
                format!("(n {n}, k {k}, s {s}, t {t}): criterion {expected}, search {}", oracle.exists)
            });
            (1, failure.into_iter().collect())
        })
        .collect();
    SweepReport::collect(results)
}

/// Floor/ceiling weight bounds on every factor of length `1..=2n` of the
/// mechanical word of slope `k/n`, for `1 <= k <= n <= n_max`.
pub fn balance_sweep(n_max: usize) -> SweepReport {
    let slopes: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    let results = slopes
        .into_par_iter()
        .map(|(n, k)| {
            let word = PeriodicWord::new(mechanical(k, n)).expect("non-empty");
            let mut failures = Vec::new();
            for m in 1..=2 * n {
                let r = check_balance(&word, m).expect("m >= 1");
                if let Some((start, weight)) = r.violation {
                    failures.push(format!(
                        "slope {k}/{n}, m {m}: factor at {start} has weight {weight} outside [{}, {}]",
                        r.lower, r.upper
                    ));
                }
            }
            (2 * n, failures)
        })
        .collect();
    SweepReport::collect(results)
}

/// Window discrepancy of the mechanical configuration against
/// `m - 2 floor(m k / n)`, for `1 <= k <= n / 2`, `n <= n_max`, `1 <= m <= n`.
pub fn discrepancy_sweep(n_max: usize) -> SweepReport {
    let pairs: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..=n / 2).map(move |k| (n, k))).collect();
    let results = pairs
        .into_par_iter()
        .map(|(n, k)| {
            let c = Configuration::new(mechanical(k, n)).expect("n >= 1");
            let mut failures = Vec::new();
            for m in 1..=n {
                let value = discrepancy(&c, m).expect("m in range");
                let bound = discrepancy_bound(n, k, m);
                if value as i64 > bound {
                    failures.push(format!("({n}, {k}), m {m}: discrepancy {value} > bound {bound}"));
                }
            }
            (n, failures)
        })
        .collect();
    SweepReport::collect(results)
}

/// For `gcd(n, k) = d > 1`, `n <= n_max`: the Euclid arrangement is `d` copies
/// of its length-`n/d` prefix, that prefix is the arrangement of `(n/d, k/d)`,
/// and the whole word passes the balance check for every `m <= n`.
pub fn non_coprime_sweep(n_max: usize) -> SweepReport {
    let pairs: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (1..n).filter(move |&k| gcd(n, k) > 1).map(move |k| (n, k)))
        .collect();
    let results = pairs
        .into_par_iter()
        .map(|(n, k)| {
            let d = gcd(n, k);
            let word = arrange(n, k).expect("valid pair").into_spots();
            let block_len = n / d;
            let prefix: crate::words::BinaryWord = word.letters()[..block_len].to_vec().into();
            let mut failures = Vec::new();
            if prefix.power(d) != word {
                failures.push(format!("({n}, {k}): {word} is not {d} copies of {prefix}"));
            }
            let reduced = arrange(block_len, k / d).expect("valid pair").into_spots();
            if prefix != reduced {
                failures.push(format!("({n}, {k}): block {prefix} != arrange({block_len}, {}) = {reduced}", k / d));
            }
            let periodic = PeriodicWord::new(word).expect("non-empty");
            for m in 1..=n {
                if let Some((start, weight)) = check_balance(&periodic, m).expect("m >= 1").violation {
                    failures.push(format!("({n}, {k}), m {m}: factor at {start} has weight {weight}"));
                }
            }
            (1, failures)
        })
        .collect();
    SweepReport::collect(results)
}

/// Bottom-up recurrence over the Euclid quotients returns the original pair.
pub fn recurrence_sweep(n_max: usize) -> SweepReport {
    let results = coprime_pairs(n_max)
        .into_par_iter()
        .map(|(n, k)| {
            let quotients = euclid_trace(n, k).expect("valid pair").quotients();
            let got = recurrence_reconstruct(&quotients);
            let failure = (got != (n, k)).then(|| format!("({n}, {k}): reconstructed {got:?}"));
            (1, failure.into_iter().collect())
        })
        .collect();
    SweepReport::collect(results)
}

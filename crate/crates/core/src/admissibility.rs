//! Circular configurations, window weights, and the admissibility criterion.
//!
//! A configuration of `n` spots with `k` letters `A` is `t`-admissible for
//! window size `s` when every run of `s` consecutive spots (read around the
//! circle) holds at least `t` letters `A`. Such a configuration exists exactly
//! when `n t <= k s`.

use crate::error::{Error, Result};
use crate::words::{mechanical_word, BinaryWord, Letter, Slope};

/// A circular arrangement of `n >= 1` spots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    spots: BinaryWord,
    k: usize,
}

impl Configuration {
    pub fn new(spots: BinaryWord) -> Result<Self> {
        if spots.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let k = spots.weight();
        Ok(Configuration { spots, k })
    }

    pub fn spots(&self) -> &BinaryWord {
        &self.spots
    }

    pub fn into_spots(self) -> BinaryWord {
        self.spots
    }

    pub fn n(&self) -> usize {
        self.spots.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn spot(&self, index: usize) -> Letter {
        self.spots.letters()[index % self.n()]
    }

    pub fn rotate_left(&self, shift: usize) -> Configuration {
        Configuration {
            spots: self.spots.rotate_left(shift),
            k: self.k,
        }
    }
}

impl std::str::FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Configuration::new(s.parse()?)
    }
}

/// One circular window: `length` spots starting at `start`, holding `weight` letters `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowReport {
    pub start: usize,
    pub length: usize,
    pub weight: usize,
}

/// Weights of all `n` circular windows of length `m`, by start index.
///
/// Sliding update: one letter enters and one leaves per step.
pub fn window_weight_profile(c: &Configuration, m: usize) -> Result<Vec<WindowReport>> {
    let n = c.n();
    if m == 0 || m > n {
        return Err(Error::WindowOutOfRange { m, max: n });
    }
    let letters = c.spots().letters();
    let mut weight: usize = letters[..m].iter().map(|l| l.value() as usize).sum();
    let mut out = Vec::with_capacity(n);
    for start in 0..n {
        out.push(WindowReport {
            start,
            length: m,
            weight,
        });
        weight = weight + letters[(start + m) % n].value() as usize - letters[start].value() as usize;
    }
    Ok(out)
}

fn min_window(profile: &[WindowReport]) -> WindowReport {
    // min_by_key keeps the first minimum, i.e. the smallest start
    *profile
        .iter()
        .min_by_key(|w| w.weight)
        .expect("profile has n >= 1 windows")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    /// Minimum-weight window with the smallest start.
    pub min_window: WindowReport,
}

/// Does every circular window of length `s` hold at least `t` letters `A`?
pub fn is_admissible(c: &Configuration, s: usize, t: usize) -> Result<AdmissibilityVerdict> {
    let profile = window_weight_profile(c, s)?;
    let min_window = min_window(&profile);
    Ok(AdmissibilityVerdict {
        admissible: min_window.weight >= t,
        min_window,
    })
}

/// Same question asked of the complementary windows: every run of `n - s`
/// spots must hold at most `k - t` letters `A`.
pub fn complement_check(c: &Configuration, s: usize, t: usize) -> Result<bool> {
    let n = c.n();
    if s == 0 || s >= n {
        return Err(Error::WindowOutOfRange { m: s, max: n.saturating_sub(1) });
    }
    if t > c.k() {
        return Ok(false);
    }
    let cap = c.k() - t;
    Ok(window_weight_profile(c, n - s)?.iter().all(|w| w.weight <= cap))
}

/// Largest `|chi(S)|` over circular windows `S` of length `m`, with `chi(A) = +1`, `chi(B) = -1`.
pub fn discrepancy(c: &Configuration, m: usize) -> Result<usize> {
    Ok(window_weight_profile(c, m)?
        .iter()
        .map(|w| (2 * w.weight).abs_diff(m))
        .max()
        .expect("profile is non-empty"))
}

/// `m - 2 floor(m k / n)`, the window discrepancy guaranteed by the balanced
/// coloring. Only meaningful for `k <= n / 2`; negative values are returned as is.
pub fn discrepancy_bound(n: usize, k: usize, m: usize) -> i64 {
    let floor = (m as u128 * k as u128 / n as u128) as i64;
    m as i64 - 2 * floor
}

/// A team of `n` with `k` marked players, `s` on court, and at least `t`
/// marked players required on court.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibilityQuery {
    n: usize,
    k: usize,
    s: usize,
    t: usize,
}

impl AdmissibilityQuery {
    /// Requires `1 <= k < n` and `1 <= s < n`. Any `t` is accepted.
    pub fn new(n: usize, k: usize, s: usize, t: usize) -> Result<Self> {
        if k == 0 || s == 0 || k >= n || s >= n {
            return Err(Error::InvalidQuery { n, k, s });
        }
        Ok(AdmissibilityQuery { n, k, s, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn t(&self) -> usize {
        self.t
    }

    /// `n t`, the left side of the criterion.
    pub fn nt(&self) -> u128 {
        self.n as u128 * self.t as u128
    }

    /// `k s`, the right side of the criterion.
    pub fn ks(&self) -> u128 {
        self.k as u128 * self.s as u128
    }
}

/// A `t`-admissible configuration exists iff `n t <= k s`.
pub fn criterion(q: &AdmissibilityQuery) -> bool {
    q.nt() <= q.ks()
}

/// The mechanical configuration of slope `k/n` when the criterion holds.
pub fn construct_admissible(q: &AdmissibilityQuery) -> Option<Configuration> {
    if !criterion(q) {
        return None;
    }
    let slope = Slope::new(q.k, q.n).expect("query has 1 <= k < n");
    let c = Configuration::new(mechanical_word(slope)).expect("n >= 2");
    debug_assert!(is_admissible(&c, q.s, q.t).map(|v| v.admissible).unwrap_or(false));
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::rotation_equivalent;

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn weights(c: &str, m: usize) -> Vec<usize> {
        window_weight_profile(&cfg(c), m)
            .unwrap()
            .into_iter()
            .map(|w| w.weight)
            .collect()
    }

    // Direct enumeration, one window at a time.
    fn naive_weights(c: &Configuration, m: usize) -> Vec<usize> {
        (0..c.n())
            .map(|start| (start..start + m).filter(|&i| c.spot(i) == Letter::A).count())
            .collect()
    }

    fn mech(k: usize, n: usize) -> Configuration {
        Configuration::new(mechanical_word(Slope::new(k, n).unwrap())).unwrap()
    }

    #[test]
    fn profile_examples() {
        assert_eq!(weights("ABAB", 2), vec![1, 1, 1, 1]);
        assert_eq!(weights("AABB", 2), vec![2, 1, 0, 1]);
        assert_eq!(weights("ABBAB", 3), vec![1, 1, 1, 2, 1]);
        assert_eq!(weights("ABBAB", 3), naive_weights(&cfg("ABBAB"), 3));
    }

    #[test]
    fn profile_rejects_bad_lengths() {
        assert_eq!(
            window_weight_profile(&cfg("ABAB"), 0),
            Err(Error::WindowOutOfRange { m: 0, max: 4 })
        );
        assert!(window_weight_profile(&cfg("ABAB"), 5).is_err());
        assert!(window_weight_profile(&cfg("ABAB"), 4).is_ok());
        assert_eq!(Configuration::new(BinaryWord::empty()), Err(Error::EmptyConfiguration));
    }

    #[test]
    fn profile_matches_naive_on_all_short_words() {
        for n in 1..=10 {
            for bits in 0u32..(1 << n) {
                let letters = (0..n)
                    .map(|i| Letter::from_value((bits >> i & 1) as u8).unwrap())
                    .collect::<Vec<_>>();
                let c = Configuration::new(letters.into()).unwrap();
                for m in 1..=n {
                    let fast: Vec<_> = window_weight_profile(&c, m).unwrap().iter().map(|w| w.weight).collect();
                    assert_eq!(fast, naive_weights(&c, m));
                }
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let v = is_admissible(&cfg("ABABABB"), 5, 2).unwrap();
        assert!(v.admissible);
        assert_eq!(v.min_window.weight, 2);

        let v = is_admissible(&cfg("AAABBBBBBB"), 6, 2).unwrap();
        assert!(!v.admissible);
        assert_eq!((v.min_window.start, v.min_window.weight), (3, 0));

        assert!(is_admissible(&cfg("AB"), 1, 0).unwrap().admissible);
        assert!(is_admissible(&cfg("AB"), 3, 0).is_err());
    }

    #[test]
    fn criterion_examples() {
        let q = |n, k, s, t| criterion(&AdmissibilityQuery::new(n, k, s, t).unwrap());
        assert!(!q(10, 3, 6, 2));
        assert!(q(7, 3, 5, 2));
        assert!(q(6, 3, 2, 1));
        // t beyond k or s resolves through the inequality
        assert!(!q(7, 3, 5, 4));
        assert!(!q(7, 5, 3, 4));
        assert!(q(7, 3, 5, 0));
    }

    #[test]
    fn query_bounds() {
        assert!(AdmissibilityQuery::new(4, 4, 2, 1).is_err());
        assert!(AdmissibilityQuery::new(4, 0, 2, 1).is_err());
        assert!(AdmissibilityQuery::new(4, 2, 4, 1).is_err());
        assert!(AdmissibilityQuery::new(4, 2, 0, 1).is_err());
        assert_eq!(AdmissibilityQuery::new(10, 3, 6, 2).unwrap().nt(), 20);
        assert_eq!(AdmissibilityQuery::new(10, 3, 6, 2).unwrap().ks(), 18);
    }

    #[test]
    fn construct_examples() {
        let q = AdmissibilityQuery::new(7, 3, 5, 2).unwrap();
        assert_eq!(construct_admissible(&q).unwrap().spots().to_string(), "ABABABB");

        let q = AdmissibilityQuery::new(10, 3, 6, 2).unwrap();
        assert_eq!(construct_admissible(&q), None);

        let q = AdmissibilityQuery::new(4, 3, 2, 1).unwrap();
        let c = construct_admissible(&q).unwrap();
        assert!(rotation_equivalent(c.spots(), &"ABAA".parse().unwrap()));
        assert_eq!(is_admissible(&c, 2, 1).unwrap().min_window.weight, 1);
    }

    #[test]
    fn constructed_configurations_are_admissible() {
        for n in 2..=40 {
            for k in 1..n {
                for s in 1..n {
                    let t = k * s / n;
                    let q = AdmissibilityQuery::new(n, k, s, t).unwrap();
                    let c = construct_admissible(&q).expect("t = floor(ks/n) satisfies the criterion");
                    assert!(is_admissible(&c, s, t).unwrap().admissible);
                }
            }
        }
        for &(n, k) in &[(500, 1), (500, 17), (499, 250), (500, 499), (377, 233)] {
            for s in [1, 2, 50, 123, n - 1] {
                let t = k * s / n;
                let c = construct_admissible(&AdmissibilityQuery::new(n, k, s, t).unwrap()).unwrap();
                assert!(is_admissible(&c, s, t).unwrap().admissible, "{n} {k} {s} {t}");
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert!(complement_check(&cfg("ABABABB"), 5, 2).unwrap());
        assert!(!complement_check(&cfg("AAABBBBBBB"), 6, 2).unwrap());
        assert_eq!(
            complement_check(&cfg("AB"), 1, 1).unwrap(),
            is_admissible(&cfg("AB"), 1, 1).unwrap().admissible
        );
        assert!(!complement_check(&cfg("AB"), 1, 1).unwrap());
        assert!(complement_check(&cfg("AB"), 2, 1).is_err());
    }

    #[test]
    fn complement_agrees_with_direct_check() {
        for n in 2..=12 {
            for bits in 0u32..(1 << n) {
                let letters = (0..n)
                    .map(|i| Letter::from_value((bits >> i & 1) as u8).unwrap())
                    .collect::<Vec<_>>();
                let c = Configuration::new(letters.into()).unwrap();
                for s in 1..n {
                    for t in 0..=c.k() {
                        assert_eq!(
                            complement_check(&c, s, t).unwrap(),
                            is_admissible(&c, s, t).unwrap().admissible
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(discrepancy(&cfg("ABAB"), 2).unwrap(), 0);
        assert_eq!(discrepancy(&cfg("AABB"), 2).unwrap(), 2);
        assert_eq!(discrepancy(&mech(10, 23), 7).unwrap(), 1);
        assert_eq!(discrepancy_bound(23, 10, 7), 1);
        assert_eq!(discrepancy(&mech(3, 4), 4).unwrap(), 2);
        assert_eq!(discrepancy_bound(4, 3, 4), -2);
        assert!(discrepancy(&cfg("ABAB"), 5).is_err());
    }

    #[test]
    fn rotation_invariance() {
        for c in ["AAABBBBBBB", "ABABABB", "AABAB", "ABBBABBABB"] {
            let c = cfg(c);
            for r in 0..c.n() {
                let rc = c.rotate_left(r);
                for m in 1..=c.n() {
                    assert_eq!(discrepancy(&c, m), discrepancy(&rc, m));
                    for t in 0..=c.k() + 1 {
                        assert_eq!(
                            is_admissible(&c, m, t).unwrap().admissible,
                            is_admissible(&rc, m, t).unwrap().admissible
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn discrepancy_bound_for_sparse_slopes() {
        for n in 2..=60 {
            for k in 1..=n / 2 {
                let c = mech(k, n);
                for m in 1..=n {
                    assert!(discrepancy(&c, m).unwrap() as i64 <= discrepancy_bound(n, k, m));
                }
            }
        }
    }
}

//! Exhaustive search over all arrangements of a small team.

use crate::admissibility::{
    is_admissible, window_weight_profile, AdmissibilityQuery, Configuration, WindowReport,
};
use crate::error::{Error, Result};
use crate::rotation::canonical_rotation;
use crate::words::{BinaryWord, Letter};

pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub cap: usize,
    /// Only test the least rotation of each necklace.
    pub reduce_rotations: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            cap: DEFAULT_CAP,
            reduce_rotations: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// First admissible configuration in enumeration order.
    pub witness: Option<Configuration>,
    pub instances_checked: usize,
}

/// All length-`n` words of weight `k`, with the `A` positions in lexicographic order.
pub struct WeightedWords {
    n: usize,
    positions: Option<Vec<usize>>,
}

impl WeightedWords {
    pub fn new(n: usize, k: usize) -> Self {
        WeightedWords {
            n,
            positions: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for WeightedWords {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let positions = self.positions.as_mut()?;
        let mut letters = vec![Letter::B; self.n];
        for &p in positions.iter() {
            letters[p] = Letter::A;
        }
        let k = positions.len();
        // advance to the next combination
        match (0..k).rev().find(|&i| positions[i] < self.n - k + i) {
            Some(i) => {
                positions[i] += 1;
                for j in i + 1..k {
                    positions[j] = positions[j - 1] + 1;
                }
            }
            None => self.positions = None,
        }
        Some(letters.into())
    }
}

pub fn brute_force_exists(q: &AdmissibilityQuery) -> Result<OracleResult> {
    brute_force_exists_with(q, OracleOptions::default())
}

pub fn brute_force_exists_with(q: &AdmissibilityQuery, opts: OracleOptions) -> Result<OracleResult> {
    if q.n() > opts.cap {
        return Err(Error::AboveCap { n: q.n(), cap: opts.cap });
    }
    let mut instances_checked = 0;
    for word in WeightedWords::new(q.n(), q.k()) {
        if opts.reduce_rotations && canonical_rotation(&word)?.1 != 0 {
            continue;
        }
        instances_checked += 1;
        let c = Configuration::new(word)?;
        if is_admissible(&c, q.s(), q.t())?.admissible {
            return Ok(OracleResult {
                exists: true,
                witness: Some(c),
                instances_checked,
            });
        }
    }
    Ok(OracleResult {
        exists: false,
        witness: None,
        instances_checked,
    })
}

/// A lightest `s`-window of `c`. Averaging over all `n` windows forces its
/// weight down to at most `floor(k s / n)`.
pub fn pigeonhole_witness(c: &Configuration, s: usize) -> Result<WindowReport> {
    if s >= c.n() {
        return Err(Error::WindowOutOfRange { m: s, max: c.n() - 1 });
    }
    let profile = window_weight_profile(c, s)?;
    let lightest = *profile.iter().min_by_key(|w| w.weight).expect("n >= 1");
    assert!(lightest.weight * c.n() <= c.k() * s);
    Ok(lightest)
}

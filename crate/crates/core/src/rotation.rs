//! Canonical forms for circular words.

use crate::error::{Error, Result};
use crate::words::{BinaryWord, Letter};

// Letter order for canonical forms is A < B.
fn rank(l: Letter) -> u8 {
    match l {
        Letter::A => 0,
        Letter::B => 1,
    }
}

/// Least rotation of `w` (with `A < B`) and the left shift that produces it.
///
/// Linear-time two-pointer scan. When `w` is a power of a shorter word the
/// smallest shift is returned.
pub fn canonical_rotation(w: &BinaryWord) -> Result<(BinaryWord, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.letters();
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = rank(s[(i + k) % n]);
        let b = rank(s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    let shift = i.min(j);
    Ok((w.rotate_left(shift), shift))
}

/// True iff the two words are rotations of each other.
pub fn rotation_equivalent(w1: &BinaryWord, w2: &BinaryWord) -> bool {
    if w1.len() != w2.len() {
        return false;
    }
    if w1.is_empty() {
        return true;
    }
    canonical_rotation(w1).map(|c| c.0) == canonical_rotation(w2).map(|c| c.0)
}

//! Two-letter words, their periodic extension, and mechanical words.
//!
//! The letter `A` stands for the number 1 and `B` for 0, so the weight of a
//! word is its number of `A`s. Everything here is exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    B = 0,
    A = 1,
}

impl Letter {
    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn from_value(value: u8) -> Option<Letter> {
        match value {
            0 => Some(Letter::B),
            1 => Some(Letter::A),
            _ => None,
        }
    }

    pub fn render(self, alphabet: Alphabet) -> char {
        match (alphabet, self) {
            (Alphabet::Letters, Letter::A) => 'A',
            (Alphabet::Letters, Letter::B) => 'B',
            (Alphabet::Digits, Letter::A) => '1',
            (Alphabet::Digits, Letter::B) => '0',
        }
    }
}

/// How a word is written as text: `AB` (default) or `01` with `1 = A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    #[default]
    Letters,
    Digits,
}

/// A finite word over {A, B}. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryWord {
    letters: Vec<Letter>,
}

impl BinaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BinaryWord { letters }
    }

    pub fn empty() -> Self {
        BinaryWord::default()
    }

    /// Parses a word in the given alphabet, rejecting any other character.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        text.chars()
            .map(|c| match (alphabet, c) {
                (Alphabet::Letters, 'A') | (Alphabet::Digits, '1') => Ok(Letter::A),
                (Alphabet::Letters, 'B') | (Alphabet::Digits, '0') => Ok(Letter::B),
                _ => Err(Error::InvalidLetter(c)),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Number of `A`s.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::A).count()
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BinaryWord { letters }
    }

    /// `self` repeated `exponent` times; the zeroth power is the empty word.
    pub fn power(&self, exponent: usize) -> BinaryWord {
        BinaryWord {
            letters: self.letters.repeat(exponent),
        }
    }

    /// The rotation that starts at index `shift` of `self`.
    pub fn rotate_left(&self, shift: usize) -> BinaryWord {
        if self.is_empty() {
            return BinaryWord::empty();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(shift % self.len());
        BinaryWord { letters }
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        self.letters.iter().map(|l| l.render(alphabet)).collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Alphabet::Letters))
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryWord::parse(s, Alphabet::Letters)
    }
}

impl From<Vec<Letter>> for BinaryWord {
    fn from(letters: Vec<Letter>) -> Self {
        BinaryWord::new(letters)
    }
}

pub fn concat(x: &BinaryWord, y: &BinaryWord) -> BinaryWord {
    x.concat(y)
}

pub fn power(x: &BinaryWord, exponent: usize) -> BinaryWord {
    x.power(exponent)
}

pub fn weight(u: &BinaryWord) -> usize {
    u.weight()
}

/// The infinite word `period * period * period * ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicWord {
    period: BinaryWord,
    // prefix[j] = weight of the first j letters of the period
    prefix: Vec<usize>,
}

impl PeriodicWord {
    pub fn new(period: BinaryWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut prefix = Vec::with_capacity(period.len() + 1);
        prefix.push(0);
        let mut acc = 0;
        for &l in period.letters() {
            acc += l.value() as usize;
            prefix.push(acc);
        }
        Ok(PeriodicWord { period, prefix })
    }

    pub fn period(&self) -> &BinaryWord {
        &self.period
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    pub fn letter_at(&self, index: usize) -> Letter {
        self.period.letters()[index % self.period.len()]
    }

    /// The letters at `start, start + 1, ..., start + length - 1`.
    pub fn factor(&self, start: usize, length: usize) -> BinaryWord {
        (start..start + length).map(|i| self.letter_at(i)).collect::<Vec<_>>().into()
    }

    /// Weight of `factor(start, length)` in constant time.
    pub fn factor_weight(&self, start: usize, length: usize) -> usize {
        self.prefix_weight(start + length) - self.prefix_weight(start)
    }

    fn prefix_weight(&self, end: usize) -> usize {
        let n = self.period.len();
        (end / n) * self.prefix[n] + self.prefix[end % n]
    }
}

pub fn factor(w: &PeriodicWord, start: usize, length: usize) -> BinaryWord {
    w.factor(start, length)
}

/// An exact rational slope `k/n` with `0 < k <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    k: usize,
    n: usize,
}

impl Slope {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidSlope { k, n });
        }
        Ok(Slope { k, n })
    }

    pub fn numerator(&self) -> usize {
        self.k
    }

    pub fn denominator(&self) -> usize {
        self.n
    }

    /// The slope in lowest terms.
    pub fn reduced(&self) -> Slope {
        let d = gcd(self.k, self.n);
        Slope {
            k: self.k / d,
            n: self.n / d,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `ceil(a / b)` for `b > 0`.
pub fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// One period (length `n`) of the mechanical word of slope `k/n`:
/// letter `i` is `ceil(k(i+1)/n) - ceil(ki/n)`.
pub fn mechanical_word(slope: Slope) -> BinaryWord {
    let k = slope.k as u128;
    let n = slope.n as u128;
    let letters = (0..n)
        .map(|i| {
            let bit = ceil_div(k * (i + 1), n) - ceil_div(k * i, n);
            Letter::from_value(bit as u8).expect("slope at most 1 yields 0/1 letters")
        })
        .collect::<Vec<_>>();
    BinaryWord::new(letters)
}

/// Outcome of checking the floor/ceiling weight bounds on all factors of one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceReport {
    pub length: usize,
    pub lower: usize,
    pub upper: usize,
    /// First start index whose factor breaks the bounds, with its weight.
    pub violation: Option<(usize, usize)>,
}

impl BalanceReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `floor(m a) <= weight(u) <= ceil(m a)` for every length-`m` factor
/// `u` of the periodic word, where `a = weight(period) / len(period)`.
pub fn check_balance(period: &PeriodicWord, m: usize) -> Result<BalanceReport> {
    if m == 0 {
        return Err(Error::WindowOutOfRange { m, max: usize::MAX });
    }
    let n = period.period_len();
    let num = (m * period.period().weight()) as u128;
    let lower = (num / n as u128) as usize;
    let upper = ceil_div(num, n as u128) as usize;
    let violation = (0..n).find_map(|start| {
        let w = period.factor_weight(start, m);
        (w < lower || w > upper).then_some((start, w))
    });
    Ok(BalanceReport {
        length: m,
        lower,
        upper,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn periodic(s: &str) -> PeriodicWord {
        PeriodicWord::new(w(s)).unwrap()
    }

    // Independent route: position i carries an A iff some j in 0..k has
    // i <= j n / k < i + 1. Found by scanning, no ceiling formula involved.
    fn mechanical_oracle(k: usize, n: usize) -> String {
        let mut out = vec!['B'; n];
        for j in 0..k {
            let i = (0..n).find(|&i| i * k <= j * n && j * n < (i + 1) * k).unwrap();
            out[i] = 'A';
        }
        out.into_iter().collect()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w("AB"), &w("BA")), w("ABBA"));
        assert_eq!(concat(&w(""), &w("AB")), w("AB"));
        assert_eq!(concat(&w("A"), &w("A")), w("AA"));
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&w("BA"), 3), w("BABABA"));
        assert_eq!(power(&w("A"), 0), w(""));
        assert_eq!(power(&w("AB"), 1), w("AB"));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&w("ABBAB")), 2);
        assert_eq!(weight(&w("")), 0);
        assert_eq!(weight(&w("AAAA")), 4);
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(&periodic("AB"), 1, 3), w("BAB"));
        assert_eq!(factor(&periodic("ABB"), 0, 3), w("ABB"));
        assert_eq!(factor(&periodic("ABB"), 2, 2), w("BA"));
        assert_eq!(factor(&periodic("ABB"), 5, 0), w(""));
    }

    #[test]
    fn factor_weight_matches_factor() {
        let p = periodic("ABBABAB");
        for start in 0..20 {
            for len in 0..30 {
                assert_eq!(p.factor_weight(start, len), p.factor(start, len).weight());
            }
        }
    }

    #[test]
    fn parse_rejects_foreign_characters() {
        assert_eq!("ABx".parse::<BinaryWord>(), Err(Error::InvalidLetter('x')));
        assert_eq!("ab".parse::<BinaryWord>(), Err(Error::InvalidLetter('a')));
        assert_eq!(BinaryWord::parse("0110", Alphabet::Digits).unwrap(), w("BAAB"));
        assert!(BinaryWord::parse("AB", Alphabet::Digits).is_err());
        assert_eq!(w("ABBA").render(Alphabet::Digits), "1001");
    }

    #[test]
    fn empty_period_rejected() {
        assert_eq!(PeriodicWord::new(w("")), Err(Error::EmptyPeriod));
    }

    #[test]
    fn slope_bounds() {
        assert!(Slope::new(0, 5).is_err());
        assert!(Slope::new(6, 5).is_err());
        assert!(Slope::new(5, 5).is_ok());
        assert_eq!(Slope::new(4, 6).unwrap().reduced(), Slope::new(2, 3).unwrap());
    }

    #[test]
    fn mechanical_examples() {
        let mech = |k, n| mechanical_word(Slope::new(k, n).unwrap()).to_string();
        assert_eq!(mech(1, 1), "A");
        assert_eq!(mech(10, 23), "ABABABABBABABABBABABABB");
        assert_eq!(mech(3, 7), "ABABABB");
        assert_eq!(mech(2, 4), "ABAB");
        assert_eq!(mech(3, 4), "AAAB");
    }

    #[test]
    fn mechanical_matches_scanning_oracle() {
        assert_eq!(mechanical_oracle(10, 23), "ABABABABBABABABBABABABB");
        assert_eq!(mechanical_oracle(3, 7), "ABABABB");
        for n in 1..=60 {
            for k in 1..=n {
                let got = mechanical_word(Slope::new(k, n).unwrap()).to_string();
                assert_eq!(got, mechanical_oracle(k, n), "slope {k}/{n}");
            }
        }
    }

    #[test]
    fn mechanical_gcd_structure() {
        for n in 1..=80 {
            for k in 1..=n {
                let d = gcd(k, n);
                let full = mechanical_word(Slope::new(k, n).unwrap());
                let base = mechanical_word(Slope::new(k / d, n / d).unwrap());
                assert_eq!(full, base.power(d), "slope {k}/{n}");
            }
        }
    }

    #[test]
    fn balance_examples() {
        let r = check_balance(&periodic("ABABABB"), 2).unwrap();
        assert!(r.passed());
        assert_eq!((r.lower, r.upper), (0, 1));

        let r = check_balance(&periodic("AABB"), 2).unwrap();
        assert_eq!(r.violation, Some((0, 2)));

        assert!(check_balance(&periodic("A"), 5).unwrap().passed());
        assert!(check_balance(&periodic("A"), 0).is_err());
    }

    #[test]
    fn large_slopes_do_not_overflow() {
        let n = 1 << 20;
        let word = mechanical_word(Slope::new(n - 1, n).unwrap());
        assert_eq!(word.weight(), n - 1);
    }
}

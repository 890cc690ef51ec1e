//! Euclid-ladder arrangement, continued fractions, and Smith's recursion.
//!
//! Remainders and quotients use the ladder indexing `r[j-2] = q[j] r[j-1] + r[j]`
//! with `r[-3] = n` and `r[-2] = k`; the ladder stops at index `i` with
//! `r[i+1] = 0`, so `r[i] = gcd(n, k)`.

use std::fmt;

use crate::admissibility::Configuration;
use crate::error::{Error, Result};
use crate::words::{gcd, BinaryWord, Letter};

/// One division `dividend = quotient * divisor + remainder`, recorded at ladder `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EuclidStep {
    pub index: isize,
    pub dividend: usize,
    pub divisor: usize,
    pub quotient: usize,
    pub remainder: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    n: usize,
    k: usize,
    steps: Vec<EuclidStep>,
}

impl EuclidTrace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn steps(&self) -> &[EuclidStep] {
        &self.steps
    }

    /// `[q[-1], q[0], ..., q[i+1]]`.
    pub fn quotients(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.quotient).collect()
    }

    /// `[r[-1], r[0], ..., r[i+1] = 0]`.
    pub fn remainders(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.remainder).collect()
    }

    /// The index `i` with `r[i+1] = 0`; `-2` when `k` divides `n`.
    pub fn terminal_index(&self) -> isize {
        self.steps.last().expect("at least one division").index - 1
    }

    pub fn gcd(&self) -> usize {
        self.remainder(self.terminal_index())
    }

    /// `r[j]` for `-3 <= j <= i + 1`.
    pub fn remainder(&self, j: isize) -> usize {
        match j {
            -3 => self.n,
            -2 => self.k,
            _ => self.steps[(j + 1) as usize].remainder,
        }
    }

    /// `q[j]` for `-1 <= j <= i + 1`.
    pub fn quotient(&self, j: isize) -> usize {
        self.steps[(j + 1) as usize].quotient
    }
}

impl fmt::Display for EuclidTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(
                f,
                "r[{}] = {} = {}*{} + {}",
                s.index - 2,
                s.dividend,
                s.quotient,
                s.divisor,
                s.remainder
            )?;
        }
        Ok(())
    }
}

fn check_pair(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidPair { n, k });
    }
    Ok(())
}

pub fn euclid_trace(n: usize, k: usize) -> Result<EuclidTrace> {
    check_pair(n, k)?;
    let mut steps = Vec::new();
    let (mut dividend, mut divisor) = (n, k);
    let mut index = -1;
    loop {
        let step = EuclidStep {
            index,
            dividend,
            divisor,
            quotient: dividend / divisor,
            remainder: dividend % divisor,
        };
        steps.push(step);
        if step.remainder == 0 {
            break;
        }
        (dividend, divisor) = (divisor, step.remainder);
        index += 1;
    }
    Ok(EuclidTrace { n, k, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Plus,
    Minus,
}

/// Circular list of `+`/`-` symbols used while building an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence(Vec<Symbol>);

impl SymbolSequence {
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pluses(&self) -> usize {
        self.0.iter().filter(|&&s| s == Symbol::Plus).count()
    }

    /// `count` pluses, each followed by `gap` minuses.
    fn seed(count: usize, gap: usize) -> Self {
        let mut out = Vec::with_capacity(count * (gap + 1));
        for _ in 0..count {
            out.push(Symbol::Plus);
            out.extend(std::iter::repeat_n(Symbol::Minus, gap));
        }
        SymbolSequence(out)
    }

    /// A new minus right after each plus; every old minus becomes a plus.
    fn promote(&self) -> Self {
        let mut out = Vec::with_capacity(self.len() + self.pluses());
        for &s in &self.0 {
            match s {
                Symbol::Plus => out.extend([Symbol::Plus, Symbol::Minus]),
                Symbol::Minus => out.push(Symbol::Plus),
            }
        }
        SymbolSequence(out)
    }

    /// `gap` minuses right after each plus.
    fn spread(&self, gap: usize) -> Self {
        let mut out = Vec::with_capacity(self.len() + self.pluses() * gap);
        for &s in &self.0 {
            out.push(s);
            if s == Symbol::Plus {
                out.extend(std::iter::repeat_n(Symbol::Minus, gap));
            }
        }
        SymbolSequence(out)
    }
}

impl fmt::Display for SymbolSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(match s {
                Symbol::Plus => "+",
                Symbol::Minus => "-",
            })?;
        }
        f.write_str("]")
    }
}

/// An arrangement together with the ladder and symbol stages that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub trace: EuclidTrace,
    /// Seed, then alternating promote/spread stages. Empty when `k` divides `n`.
    pub stages: Vec<SymbolSequence>,
    pub configuration: Configuration,
}

/// Places `k` letters `A` among `n` spots by walking the Euclid ladder of `n/k`.
pub fn arrange(n: usize, k: usize) -> Result<Configuration> {
    arrange_traced(n, k).map(|a| a.configuration)
}

pub fn arrange_traced(n: usize, k: usize) -> Result<Arrangement> {
    let trace = euclid_trace(n, k)?;
    let i = trace.terminal_index();
    let gap = trace.quotient(-1) - 1;
    let r = |j| trace.remainder(j);

    let mut stages = Vec::new();
    let symbols = if i == -2 {
        // k divides n: every A is a minus
        SymbolSequence(vec![Symbol::Minus; k])
    } else {
        let mut seq = SymbolSequence::seed(r(i), trace.quotient(i + 1) - 1);
        assert_eq!((seq.len(), seq.pluses()), (r(i - 1), r(i)));
        stages.push(seq.clone());
        for j in (0..=i).rev() {
            seq = seq.promote();
            assert_eq!((seq.len(), seq.pluses()), (r(j) + r(j - 1), r(j - 1)));
            stages.push(seq.clone());
            seq = seq.spread(trace.quotient(j) - 1);
            assert_eq!((seq.len(), seq.pluses()), (r(j - 2), r(j - 1)));
            stages.push(seq.clone());
        }
        seq
    };

    let mut letters = Vec::with_capacity(n);
    for &s in symbols.symbols() {
        letters.push(Letter::A);
        if s == Symbol::Plus {
            letters.push(Letter::B);
        }
        letters.extend(std::iter::repeat_n(Letter::B, gap));
    }
    assert_eq!(letters.len(), n);
    let configuration = Configuration::new(letters.into())?;
    debug_assert_eq!(configuration.k(), k);
    Ok(Arrangement {
        trace,
        stages,
        configuration,
    })
}

/// Quotients `[m1, ..., mt]` of a simple continued fraction, as produced by
/// Euclid's algorithm (the last quotient may be 1 only when t = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    quotients: Vec<usize>,
}

impl CfExpansion {
    pub fn quotients(&self) -> &[usize] {
        &self.quotients
    }

    /// `[m1 - 1, m2, ..., mt]`.
    pub fn decremented(&self) -> Vec<usize> {
        let mut q = self.quotients.clone();
        q[0] -= 1;
        q
    }

    /// Evaluates the fraction forward through its convergents.
    pub fn evaluate(&self) -> (u128, u128) {
        let (mut h_prev, mut h) = (0u128, 1u128);
        let (mut k_prev, mut k) = (1u128, 0u128);
        for &a in &self.quotients {
            (h_prev, h) = (h, a as u128 * h + h_prev);
            (k_prev, k) = (k, a as u128 * k + k_prev);
        }
        (h, k)
    }
}

pub fn cf_expansion(p: usize, q: usize) -> Result<CfExpansion> {
    if q == 0 || p <= q {
        return Err(Error::InvalidFraction { p, q });
    }
    let d = gcd(p, q);
    if d != 1 {
        return Err(Error::NotCoprime { gcd: d });
    }
    let quotients = euclid_trace(p, q)?.quotients();
    Ok(CfExpansion { quotients })
}

/// `[S1, ..., St]` with `S1 = B^m1 A`, `S2 = S1^m2 B`, `Sj = S(j-1)^mj S(j-2)`.
pub fn smith_ladder(quotients: &[usize]) -> Result<Vec<BinaryWord>> {
    let (&first, rest) = quotients.split_first().ok_or(Error::EmptyQuotients)?;
    if let Some(pos) = rest.iter().position(|&m| m == 0) {
        return Err(Error::ZeroQuotient { index: pos + 1 });
    }
    let b = BinaryWord::new(vec![Letter::B]);
    let a = BinaryWord::new(vec![Letter::A]);
    let mut ladder = vec![b.power(first).concat(&a)];
    // S0 = B makes S2 follow the general rule
    let mut before = b;
    for &m in rest {
        let last = ladder.last().expect("non-empty");
        let next = last.power(m).concat(&before);
        before = last.clone();
        ladder.push(next);
    }
    Ok(ladder)
}

/// The last word `St` of Smith's recursion.
pub fn smith_word(quotients: &[usize]) -> Result<BinaryWord> {
    Ok(smith_ladder(quotients)?.pop().expect("non-empty ladder"))
}

/// `A * St(0..n-2) * B` for Smith's word on `[m1 - 1, m2, ..., mt]` of `n/k`:
/// the mechanical word of slope `k/n`, letter for letter.
pub fn smith_to_mechanical(n: usize, k: usize) -> Result<BinaryWord> {
    check_pair(n, k)?;
    let d = gcd(n, k);
    if d != 1 {
        return Err(Error::NotCoprime { gcd: d });
    }
    let st = smith_word(&cf_expansion(n, k)?.decremented())?;
    debug_assert_eq!(st.len(), n);
    let mut letters = Vec::with_capacity(n);
    letters.push(Letter::A);
    letters.extend_from_slice(&st.letters()[..n - 2]);
    letters.push(Letter::B);
    Ok(letters.into())
}

/// Rebuilds `(n, k)` from the Euclid quotients of a coprime pair by running
/// `a = q a' + a''` from the bottom of the ladder up, starting at `(1, 0)`.
pub fn recurrence_reconstruct(quotients: &[usize]) -> (usize, usize) {
    let (mut upper, mut lower) = (1usize, 0usize);
    for &q in quotients.iter().rev() {
        (upper, lower) = (q * upper + lower, upper);
    }
    (upper, lower)
}

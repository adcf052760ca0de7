//! Binary words and the O-/I-Fibonacci `(p,r)` word families.
//!
//! Positions are 1-based and position 1 is the leftmost character. A word is
//! packed into a `u64` with position 1 in the most significant of its `len`
//! bits, so ascending integer order on equal-length words is exactly
//! lexicographic order with `0 < 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_WORD_LEN: usize = 64;

/// Words up to this length are enumerated by filtering all `2^n` candidates;
/// longer ones use prefix-pruned generation.
const FILTER_ENUMERATION_MAX_LEN: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    /// The empty word λ.
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    /// Builds a word from the low `len` bits of `bits` (position 1 = highest).
    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong(len));
        }
        Ok(Word {
            len: len as u8,
            bits: bits & mask(len),
        })
    }

    /// The unit word `e^i` of length `len`.
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        Self::zeros(len)?.flip(i)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed representation, position 1 in bit `len - 1`.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.bits >> (self.len() - i) & 1 == 1)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Inverts position `i`, i.e. adds the unit word `e^i` modulo 2.
    pub fn flip(&self, i: usize) -> Result<Self> {
        self.check(i)?;
        Ok(Word {
            len: self.len,
            bits: self.bits ^ (1 << (self.len() - i)),
        })
    }

    /// 1-based positions of the 1s, ascending.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.bits >> (self.len() - i) & 1 == 1)
            .collect()
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong(len));
        }
        let high = if other.len() == 64 {
            0
        } else {
            self.bits << other.len()
        };
        Ok(Word {
            len: len as u8,
            bits: high | other.bits,
        })
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            Err(Error::IndexOutOfBounds {
                index: i,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.len()).rev() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("λ")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidWord(s.to_string())),
                };
        }
        Word::from_bits(s.len(), bits)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    O,
    I,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::O => "O",
            Family::I => "I",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" | "o" => Ok(Family::O),
            "I" | "i" => Ok(Family::I),
            _ => Err(Error::InvalidParams(format!("unknown family {s:?}"))),
        }
    }
}

/// Identifies one cube: a family plus `p ≥ 1`, `r ≥ 1`, `n ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeParams {
    pub family: Family,
    pub p: usize,
    pub r: usize,
    pub n: usize,
}

impl CubeParams {
    pub fn new(family: Family, p: usize, r: usize, n: usize) -> Result<Self> {
        if p == 0 || r == 0 {
            return Err(Error::InvalidParams(format!(
                "p and r must be at least 1 (got p={p}, r={r})"
            )));
        }
        if n > MAX_WORD_LEN {
            return Err(Error::WordTooLong(n));
        }
        Ok(CubeParams { family, p, r, n })
    }

    pub fn o(p: usize, r: usize, n: usize) -> Result<Self> {
        Self::new(Family::O, p, r, n)
    }

    pub fn i(p: usize, r: usize, n: usize) -> Result<Self> {
        Self::new(Family::I, p, r, n)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        w.len() == self.n && self.family_predicate(w)
    }

    fn family_predicate(&self, w: &Word) -> bool {
        match self.family {
            Family::O => is_o_word(w, self.p, self.r),
            Family::I => is_i_word(w, self.p, self.r),
        }
    }
}

impl fmt::Display for CubeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family={} p={} r={} n={}",
            self.family, self.p, self.r, self.n
        )
    }
}

/// O-Fibonacci `(p,r)`-word test.
///
/// The 1s must be pairwise at least `p` positions apart, and every maximal
/// chain of 1s spaced exactly `p` apart may hold at most `r` ones. A chain
/// running into the end of the word needs no trailing zeros.
pub fn is_o_word(w: &Word, p: usize, r: usize) -> bool {
    let ones = w.ones();
    let mut chain = usize::from(!ones.is_empty());
    if chain > r {
        return false;
    }
    for pair in ones.windows(2) {
        let gap = pair[1] - pair[0];
        if gap < p {
            return false;
        }
        chain = if gap == p { chain + 1 } else { 1 };
        if chain > r {
            return false;
        }
    }
    true
}

/// I-Fibonacci `(p,r)`-word test: maximal runs of 1s have length at most `r`
/// and consecutive runs are separated by at least `p` zeros.
pub fn is_i_word(w: &Word, p: usize, r: usize) -> bool {
    let mut run = 0;
    let mut zeros = 0;
    let mut seen_run = false;
    for i in 1..=w.len() {
        if w.bits >> (w.len() - i) & 1 == 1 {
            if run == 0 && seen_run && zeros < p {
                return false;
            }
            run += 1;
            if run > r {
                return false;
            }
        } else {
            if run > 0 {
                seen_run = true;
                zeros = 0;
            }
            run = 0;
            zeros += 1;
        }
    }
    true
}

/// Left-to-right recognizer state shared by counting and pruned generation.
///
/// Appending a 0 never invalidates a word of either family, so every
/// accepted prefix extends to at least one full-length word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum ScanState {
    /// O family: zeros since the last 1 (capped at `p`) and current chain length.
    O { zeros: Option<usize>, chain: usize },
    /// I family: current run length, zeros since the last run (capped at `p`).
    I {
        run: usize,
        zeros: usize,
        seen_run: bool,
    },
}

impl ScanState {
    fn start(family: Family) -> Self {
        match family {
            Family::O => ScanState::O {
                zeros: None,
                chain: 0,
            },
            Family::I => ScanState::I {
                run: 0,
                zeros: 0,
                seen_run: false,
            },
        }
    }

    fn step(self, one: bool, p: usize, r: usize) -> Option<Self> {
        match self {
            ScanState::O { zeros, chain } => {
                if !one {
                    return Some(ScanState::O {
                        zeros: zeros.map(|z| (z + 1).min(p)),
                        chain,
                    });
                }
                let chain = match zeros {
                    None => 1,
                    Some(z) if z + 1 < p => return None,
                    Some(z) if z + 1 == p => chain + 1,
                    Some(_) => 1,
                };
                (chain <= r).then_some(ScanState::O {
                    zeros: Some(0),
                    chain,
                })
            }
            ScanState::I {
                run,
                zeros,
                seen_run,
            } => {
                if one {
                    if run == 0 && seen_run && zeros < p {
                        return None;
                    }
                    (run < r).then_some(ScanState::I {
                        run: run + 1,
                        zeros: 0,
                        seen_run,
                    })
                } else {
                    Some(ScanState::I {
                        run: 0,
                        zeros: if run > 0 { 1 } else { (zeros + 1).min(p) },
                        seen_run: seen_run || run > 0,
                    })
                }
            }
        }
    }
}

/// All length-`n` words of the family, ascending lexicographically.
/// For `n = 0` this is `[λ]`.
pub fn enumerate_words(params: CubeParams) -> Vec<Word> {
    if params.n <= FILTER_ENUMERATION_MAX_LEN {
        enumerate_by_filter(params)
    } else {
        enumerate_pruned(params)
    }
}

fn enumerate_by_filter(params: CubeParams) -> Vec<Word> {
    (0..1u64 << params.n)
        .map(|bits| Word {
            len: params.n as u8,
            bits,
        })
        .filter(|w| params.family_predicate(w))
        .collect()
}

fn enumerate_pruned(params: CubeParams) -> Vec<Word> {
    fn descend(
        params: &CubeParams,
        depth: usize,
        bits: u64,
        state: ScanState,
        out: &mut Vec<Word>,
    ) {
        if depth == params.n {
            out.push(Word {
                len: params.n as u8,
                bits,
            });
            return;
        }
        for one in [false, true] {
            if let Some(next) = state.step(one, params.p, params.r) {
                descend(params, depth + 1, bits << 1 | u64::from(one), next, out);
            }
        }
    }
    let mut out = Vec::new();
    descend(&params, 0, 0, ScanState::start(params.family), &mut out);
    out
}

/// The word of length `len` with 1s at positions `1, 1+p, 1+2p, …`,
/// at most `k` of them.
fn chain_word(len: usize, k: usize, p: usize) -> Word {
    let mut bits = 0u64;
    for j in 0..k {
        let pos = 1 + j * p;
        if pos > len {
            break;
        }
        bits |= 1 << (len - pos);
    }
    Word {
        len: len as u8,
        bits,
    }
}

/// O-words built from the block recurrence: for `k = 0..=r` prepend the
/// prefix `(10^{p-1})^k 0` to every word of the remaining length. A prefix
/// that overruns the length contributes its truncation `(10^{p-1})^k`
/// cut to `n` characters instead.
pub fn enumerate_recursive(p: usize, r: usize, n: usize) -> Result<Vec<Word>> {
    CubeParams::o(p, r, n)?;
    let mut levels: Vec<Vec<Word>> = vec![vec![Word::EMPTY]];
    for m in 1..=n {
        let mut level = Vec::new();
        for k in 0..=r {
            let prefix_len = k.saturating_mul(p).saturating_add(1);
            if prefix_len <= m {
                let prefix = chain_word(prefix_len, k, p);
                for rest in &levels[m - prefix_len] {
                    level.push(prefix.concat(rest)?);
                }
            } else {
                if k >= 1 {
                    level.push(chain_word(m, k, p));
                }
                // every larger k truncates to the same word
                if k >= 1 && k.saturating_mul(p) >= m {
                    break;
                }
            }
        }
        level.sort_unstable();
        level.dedup();
        levels.push(level);
    }
    Ok(levels.swap_remove(n))
}

/// Number of words in the family, without materializing them.
///
/// The O family uses the block recurrence as a dynamic program; the I family
/// counts paths through the left-to-right recognizer.
pub fn count_words(params: CubeParams) -> u128 {
    match params.family {
        Family::O => count_o(params.p, params.r, params.n),
        Family::I => count_by_scan(params),
    }
}

fn count_o(p: usize, r: usize, n: usize) -> u128 {
    let mut counts = vec![1u128; n + 1];
    for m in 1..=n {
        let mut total = 0u128;
        for k in 0..=r {
            let prefix_len = k.saturating_mul(p).saturating_add(1);
            if prefix_len > m {
                break;
            }
            total += counts[m - prefix_len];
        }
        // the single truncated chain, when a chain long enough to hit the end is allowed
        if m.div_ceil(p) <= r {
            total += 1;
        }
        counts[m] = total;
    }
    counts[n]
}

fn count_by_scan(params: CubeParams) -> u128 {
    let mut states: HashMap<ScanState, u128> = HashMap::new();
    states.insert(ScanState::start(params.family), 1);
    for _ in 0..params.n {
        let mut next: HashMap<ScanState, u128> = HashMap::new();
        for (state, count) in states {
            for one in [false, true] {
                if let Some(s) = state.step(one, params.p, params.r) {
                    *next.entry(s).or_default() += count;
                }
            }
        }
        states = next;
    }
    states.values().sum()
}

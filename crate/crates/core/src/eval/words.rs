//! Finitely represented ω-words.
//!
//! Three families are supported: lasso words `u·v^ω`, ♭-padded words
//! `w₁♭^{f(0)}w₂♭^{f(1)}⋯` with the gap function `f` drawn from a fixed
//! registry, and block words `unit^{g(0)} s unit^{g(1)} s ⋯` whose block
//! sizes grow under the same registry.

use std::collections::BTreeSet;
use std::fmt;

/// The padding letter ♭, written `#` in every text format.
pub const FLAT: char = '#';

/// Registry of gap/growth functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapGen {
    Constant(u64),
    /// i ↦ i
    Identity,
    /// i ↦ 2^i
    Pow2,
}

impl GapGen {
    pub fn value(self, i: u64) -> u64 {
        match self {
            GapGen::Constant(k) => k,
            GapGen::Identity => i,
            GapGen::Pow2 => 1u64.checked_shl(i.min(62) as u32).unwrap_or(u64::MAX),
        }
    }

    /// Whether the generated sequence tends to infinity.
    pub fn tends_to_infinity(self) -> bool {
        !matches!(self, GapGen::Constant(_))
    }

    pub fn name(self) -> String {
        match self {
            GapGen::Constant(k) => format!("constant;k={k}"),
            GapGen::Identity => "identity".to_string(),
            GapGen::Pow2 => "pow2".to_string(),
        }
    }
}

/// Ultimately periodic ω-word `stem · loop^ω`. The declared alphabet may
/// exceed the letters that actually occur.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoWord {
    pub stem: Vec<char>,
    pub looping: Vec<char>,
    alphabet: BTreeSet<char>,
}

impl LassoWord {
    pub fn new(stem: &str, looping: &str) -> Self {
        assert!(!looping.is_empty(), "lasso loop must be nonempty");
        let alphabet = stem.chars().chain(looping.chars()).collect();
        LassoWord { stem: stem.chars().collect(), looping: looping.chars().collect(), alphabet }
    }

    /// Declares additional letters (which then never occur in the word).
    pub fn with_alphabet(mut self, extra: impl IntoIterator<Item = char>) -> Self {
        self.alphabet.extend(extra);
        self
    }

    pub fn letter_at(&self, n: u64) -> char {
        let s = self.stem.len() as u64;
        if n < s {
            self.stem[n as usize]
        } else {
            self.looping[((n - s) % self.looping.len() as u64) as usize]
        }
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        self.alphabet.clone()
    }

    pub fn prefix(&self, h: u64) -> Vec<char> {
        (0..h).map(|n| self.letter_at(n)).collect()
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lasso{{stem={};loop={}}}",
            self.stem.iter().collect::<String>(),
            self.looping.iter().collect::<String>()
        )
    }
}

/// `base` with `gen(i)` copies of ♭ inserted after the i-th letter
/// (0-indexed): `w₀ ♭^{f(0)} w₁ ♭^{f(1)} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaddedWord {
    pub base: LassoWord,
    pub gen: GapGen,
}

impl PaddedWord {
    pub fn new(base: LassoWord, gen: GapGen) -> Result<Self, String> {
        if base.alphabet().contains(&FLAT) {
            return Err(format!("padding letter '{FLAT}' already occurs in the base word"));
        }
        Ok(PaddedWord { base, gen })
    }

    /// Position of the i-th base letter in the padded word:
    /// `i + Σ_{j<i} f(j)` (saturating far beyond any usable horizon).
    pub fn sigma_position(&self, i: u64) -> u64 {
        match self.gen {
            GapGen::Constant(k) => i.saturating_add(i.saturating_mul(k)),
            GapGen::Identity => {
                // i + 0 + 1 + ... + (i-1)
                i.saturating_add(i.saturating_mul(i.wrapping_sub(1).min(i)) / 2)
            }
            GapGen::Pow2 => {
                let sum = if i >= 63 { u64::MAX } else { (1u64 << i) - 1 };
                i.saturating_add(sum)
            }
        }
    }

    pub fn letter_at(&self, n: u64) -> char {
        // Find the largest i with sigma_position(i) <= n.
        let mut lo = 0u64;
        let mut hi = n + 1;
        while lo + 1 < hi {
            let mid = lo + (hi - lo) / 2;
            if self.sigma_position(mid) <= n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if self.sigma_position(lo) == n {
            self.base.letter_at(lo)
        } else {
            FLAT
        }
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        let mut a = self.base.alphabet();
        a.insert(FLAT);
        a
    }

    pub fn prefix(&self, h: u64) -> Vec<char> {
        (0..h).map(|n| self.letter_at(n)).collect()
    }
}

impl fmt::Display for PaddedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pad{{word={};gen={}}}", self.base, self.gen.name())
    }
}

/// Block word `unit^{g(0)} sep unit^{g(1)} sep ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlocksWord {
    pub unit: Vec<char>,
    pub sep: char,
    pub growth: GapGen,
}

impl BlocksWord {
    pub fn new(unit: &str, sep: char, growth: GapGen) -> Result<Self, String> {
        if unit.is_empty() {
            return Err("block unit must be nonempty".to_string());
        }
        if unit.contains(sep) {
            return Err("separator must not occur in the unit".to_string());
        }
        Ok(BlocksWord { unit: unit.chars().collect(), sep, growth })
    }

    fn block_len(&self, i: u64) -> u64 {
        (self.unit.len() as u64).saturating_mul(self.growth.value(i)) + 1
    }

    /// Position of the i-th separator.
    pub fn sep_position(&self, i: u64) -> u64 {
        let mut pos = 0u64;
        for j in 0..i {
            pos = pos.saturating_add(self.block_len(j));
        }
        pos.saturating_add(self.block_len(i)) - 1
    }

    pub fn letter_at(&self, n: u64) -> char {
        let mut start = 0u64;
        let mut i = 0u64;
        loop {
            let len = self.block_len(i);
            if n < start + len {
                let off = n - start;
                return if off == len - 1 {
                    self.sep
                } else {
                    self.unit[(off % self.unit.len() as u64) as usize]
                };
            }
            start += len;
            i += 1;
        }
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        let mut a: BTreeSet<char> = self.unit.iter().copied().collect();
        a.insert(self.sep);
        a
    }
}

impl fmt::Display for BlocksWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "blocks{{unit={};sep={};growth={}}}",
            self.unit.iter().collect::<String>(),
            self.sep,
            self.growth.name()
        )
    }
}

/// Any supported ω-word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Lasso(LassoWord),
    Padded(PaddedWord),
    Blocks(BlocksWord),
}

impl Word {
    pub fn letter_at(&self, n: u64) -> char {
        match self {
            Word::Lasso(w) => w.letter_at(n),
            Word::Padded(w) => w.letter_at(n),
            Word::Blocks(w) => w.letter_at(n),
        }
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        match self {
            Word::Lasso(w) => w.alphabet(),
            Word::Padded(w) => w.alphabet(),
            Word::Blocks(w) => w.alphabet(),
        }
    }

    pub fn prefix(&self, h: u64) -> Vec<char> {
        (0..h).map(|n| self.letter_at(n)).collect()
    }

    pub fn is_lasso(&self) -> bool {
        matches!(self, Word::Lasso(_))
    }

    /// Stem length and loop length when the word is eventually periodic
    /// by construction.
    pub fn lasso_shape(&self) -> Option<(u64, u64)> {
        match self {
            Word::Lasso(w) => Some((w.stem.len() as u64, w.looping.len() as u64)),
            Word::Padded(PaddedWord { base, gen: GapGen::Constant(k) }) => Some((
                (base.stem.len() as u64) * (k + 1),
                (base.looping.len() as u64) * (k + 1),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Lasso(w) => w.fmt(f),
            Word::Padded(w) => w.fmt(f),
            Word::Blocks(w) => w.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lasso_letters() {
        let w = LassoWord::new("ab", "ba");
        assert_eq!(w.prefix(6).iter().collect::<String>(), "abbaba");
    }

    #[test]
    fn padded_identity_layout() {
        // a^ω padded with f(i) = i:  a a ♭ a ♭ ♭ a ♭ ♭ ♭ ...
        let w = PaddedWord::new(LassoWord::new("", "a"), GapGen::Identity).unwrap();
        assert_eq!(w.prefix(10).iter().collect::<String>(), "aa#a##a###");
        assert_eq!(w.sigma_position(0), 0);
        assert_eq!(w.sigma_position(3), 6);
    }

    #[test]
    fn padded_constant_zero_is_identity() {
        let base = LassoWord::new("ab", "ba");
        let w = PaddedWord::new(base.clone(), GapGen::Constant(0)).unwrap();
        assert_eq!(w.prefix(8), base.prefix(8));
    }

    #[test]
    fn blocks_word_layout() {
        // unit=ac, sep=b, growth=identity: b ac b acac b ...
        let w = BlocksWord::new("ac", 'b', GapGen::Identity).unwrap();
        assert_eq!(
            (0..12).map(|n| w.letter_at(n)).collect::<String>(),
            "bacbacacbaca"
        );
        assert_eq!(w.sep_position(0), 0);
        assert_eq!(w.sep_position(1), 3);
        assert_eq!(w.sep_position(2), 8);
    }
}

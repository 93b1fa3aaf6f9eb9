//! Finitely represented subsets of ℕ.
//!
//! A set is an explicit membership prefix plus a tail descriptor: no
//! further members (`Finite`), a repeating bit pattern (`Periodic`), a
//! deterministic generator from a closed registry (`Procedural`), or
//! nothing at all (`Unknown`, membership beyond the prefix undetermined).
//!
//! Asymptotic facts (gap and run growth) are derived from the structure
//! where sound and reported as `Asym::Unknown` otherwise; verdicts built
//! on them must stay stable when the horizon grows.

use crate::eval::words::{GapGen, PaddedWord, Word, FLAT};
use std::collections::BTreeSet;
use std::fmt;

/// Coarse asymptotic classification of a sequence of naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Asym {
    Bounded,
    Unbounded,
    Unknown,
}

const PI_DIGITS: &str = include_str!("pi_digits.txt");

/// m-th decimal digit of π after the decimal point, 1-based (digit 1 = 1).
pub fn pi_digit(m: u64) -> Option<u8> {
    if m == 0 || m > PI_DIGITS.len() as u64 {
        return None;
    }
    Some(PI_DIGITS.as_bytes()[(m - 1) as usize] - b'0')
}

/// Largest position (exclusive) on which the π-digit set is determined.
pub fn pi_digit_set_horizon() -> u64 {
    (PI_DIGITS.len() as u64) * 10 + 10
}

/// Deterministic member generators. The registry is closed: user input can
/// only name the entries exposed by the text format, and derived wrappers
/// are produced by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    /// {2^n : n ≥ 0}
    Pow2,
    /// {n² : n ≥ 0}
    Squares,
    /// {n(n+1)/2 : n ≥ 0}
    Triangular,
    /// {kn : n ≥ 0}, k ≥ 1
    Multiples { k: u64 },
    /// {10m + d_m : d_m the m-th digit of π}, m ≥ 1
    PiDigits,
    /// Positions of any of `letters` in `word`.
    WordLetters { word: Word, letters: BTreeSet<char> },
    /// {position of the i-th non-♭ letter of `word` : i ∈ base}.
    PaddedImage { word: PaddedWord, base: Box<OmegaSet> },
    /// Members of `base` with every even member dropped when it has a
    /// base-neighbour at distance 1.
    Isolated { base: Box<OmegaSet> },
    /// Completion of `i` relative to `r` (gap filling, see `complete`).
    Completed { r: Box<OmegaSet>, i: Box<OmegaSet> },
    /// `r` plus all positions with no `i`-member at distance ≤ 1.
    Adjacency { r: Box<OmegaSet>, i: Box<OmegaSet> },
    /// ℕ ∖ base.
    Complement { base: Box<OmegaSet> },
    /// Every k-th member of `base`, starting from the `offset`-th.
    MemberStride { base: Box<OmegaSet>, k: u64, offset: u64 },
}

/// Tail descriptor beyond the explicit prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tail {
    Finite,
    Periodic(Vec<bool>),
    Procedural(Generator),
    Unknown,
}

/// Finitely represented subset of ℕ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaSet {
    prefix: Vec<bool>,
    tail: Tail,
}

impl OmegaSet {
    pub fn empty() -> Self {
        OmegaSet { prefix: vec![], tail: Tail::Finite }
    }

    pub fn full() -> Self {
        OmegaSet { prefix: vec![], tail: Tail::Periodic(vec![true]) }
    }

    pub fn finite(members: &[u64]) -> Self {
        let mut prefix = vec![];
        if let Some(&m) = members.iter().max() {
            prefix = vec![false; (m + 1) as usize];
            for &x in members {
                prefix[x as usize] = true;
            }
        }
        OmegaSet { prefix, tail: Tail::Finite }.canonical()
    }

    /// `prefix` bits then `pattern` repeated forever. The pattern must be
    /// nonempty.
    pub fn lasso(prefix: Vec<bool>, pattern: Vec<bool>) -> Self {
        assert!(!pattern.is_empty(), "lasso pattern must be nonempty");
        OmegaSet { prefix, tail: Tail::Periodic(pattern) }.canonical()
    }

    /// {n : n ≥ first, n ≡ first (mod step)} as an exact lasso set.
    pub fn arithmetic(first: u64, step: u64) -> Self {
        assert!(step >= 1);
        let mut pattern = vec![false; step as usize];
        pattern[0] = true;
        OmegaSet::lasso(vec![false; first as usize], pattern)
    }

    pub fn procedural(gen: Generator) -> Self {
        OmegaSet { prefix: vec![], tail: Tail::Procedural(gen) }
    }

    /// Membership known on `bits` only; beyond it the set is undetermined.
    pub fn prefix_only(bits: Vec<bool>) -> Self {
        OmegaSet { prefix: bits, tail: Tail::Unknown }
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn prefix_len(&self) -> u64 {
        self.prefix.len() as u64
    }

    /// Membership at `n`; `None` when undetermined by the representation.
    pub fn member(&self, n: u64) -> Option<bool> {
        if (n as usize) < self.prefix.len() {
            return Some(self.prefix[n as usize]);
        }
        match &self.tail {
            Tail::Finite => Some(false),
            Tail::Periodic(pat) => {
                let off = (n - self.prefix.len() as u64) % pat.len() as u64;
                Some(pat[off as usize])
            }
            Tail::Procedural(gen) => gen.member(n),
            Tail::Unknown => None,
        }
    }

    /// Largest h' ≤ h such that membership is determined on all of [0, h').
    pub fn determined_to(&self, h: u64) -> u64 {
        match &self.tail {
            Tail::Finite | Tail::Periodic(_) => h,
            Tail::Unknown => h.min(self.prefix_len()),
            Tail::Procedural(gen) => h.min(gen.determined_to(h).max(self.prefix_len())),
        }
    }

    pub fn members_below(&self, h: u64) -> Vec<u64> {
        let lim = self.determined_to(h);
        (0..lim).filter(|&n| self.member(n) == Some(true)).collect()
    }

    /// Distances between consecutive members below the horizon.
    pub fn gaps_below(&self, h: u64) -> Vec<u64> {
        let ms = self.members_below(h);
        ms.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// (start, length) of maximal runs of consecutive members below `h`.
    /// A run touching the horizon is dropped (its length is undetermined).
    pub fn runs_below(&self, h: u64) -> Vec<(u64, u64)> {
        let lim = self.determined_to(h);
        let mut out = vec![];
        let mut start = None;
        for n in 0..lim {
            match (self.member(n) == Some(true), start) {
                (true, None) => start = Some(n),
                (false, Some(s)) => {
                    out.push((s, n - s));
                    start = None;
                }
                _ => {}
            }
        }
        // run still open at the horizon: undetermined length
        out
    }

    /// Extends the explicit prefix to cover [0, h) where determined.
    pub fn materialized(&self, h: u64) -> OmegaSet {
        let lim = self.determined_to(h);
        if lim <= self.prefix_len() {
            return self.clone();
        }
        match &self.tail {
            Tail::Finite | Tail::Periodic(_) => self.clone(),
            _ => {
                let bits: Vec<bool> = (0..lim).map(|n| self.member(n) == Some(true)).collect();
                OmegaSet { prefix: bits, tail: self.tail.clone() }
            }
        }
    }

    /// True if the set is certainly finite / certainly infinite; `None`
    /// when the representation does not decide it.
    pub fn finite_certain(&self) -> Option<bool> {
        match &self.tail {
            Tail::Finite => Some(true),
            Tail::Periodic(pat) => Some(!pat.iter().any(|&b| b)),
            Tail::Procedural(gen) => gen.infinite_certain().map(|inf| !inf),
            Tail::Unknown => None,
        }
    }

    /// Asymptotic class of the distances between consecutive members.
    /// Only meaningful when the set is infinite; finite sets report
    /// `Bounded` (they have finitely many gaps).
    pub fn gap_class(&self) -> Asym {
        match &self.tail {
            Tail::Finite => Asym::Bounded,
            Tail::Periodic(pat) => {
                if pat.iter().any(|&b| b) {
                    Asym::Bounded
                } else {
                    Asym::Bounded
                }
            }
            Tail::Procedural(gen) => gen.gap_class(),
            Tail::Unknown => Asym::Unknown,
        }
    }

    /// Asymptotic class of the lengths of maximal runs of members.
    pub fn run_class(&self) -> Asym {
        match &self.tail {
            Tail::Finite => Asym::Bounded,
            Tail::Periodic(pat) => {
                if pat.iter().all(|&b| b) && self.prefix.iter().rev().all(|&b| b) {
                    // cofinal full tail: a single infinite run
                    Asym::Unbounded
                } else if pat.iter().all(|&b| b) {
                    Asym::Unbounded
                } else {
                    Asym::Bounded
                }
            }
            Tail::Procedural(gen) => gen.run_class(),
            Tail::Unknown => Asym::Unknown,
        }
    }

    /// Canonical form for lasso-representable sets: minimal pattern period,
    /// pattern rotated as far left into the prefix as possible, all-false
    /// patterns turned into `Finite`, trailing falses of finite prefixes
    /// trimmed. Makes structural equality semantic on lasso sets.
    pub fn canonical(&self) -> OmegaSet {
        match &self.tail {
            Tail::Periodic(pat) => {
                let mut pat = minimal_period(pat);
                if !pat.iter().any(|&b| b) {
                    let mut prefix = self.prefix.clone();
                    while prefix.last() == Some(&false) {
                        prefix.pop();
                    }
                    return OmegaSet { prefix, tail: Tail::Finite };
                }
                let mut prefix = self.prefix.clone();
                // fold the prefix boundary left while it matches the
                // rotated pattern
                while let Some(&last) = prefix.last() {
                    let p = pat.len();
                    if pat[p - 1] == last {
                        prefix.pop();
                        pat.rotate_right(1);
                    } else {
                        break;
                    }
                }
                OmegaSet { prefix, tail: Tail::Periodic(pat) }
            }
            Tail::Finite => {
                let mut prefix = self.prefix.clone();
                while prefix.last() == Some(&false) {
                    prefix.pop();
                }
                OmegaSet { prefix, tail: Tail::Finite }
            }
            _ => self.clone(),
        }
    }

    /// Whether the set is exactly representable as prefix + periodic
    /// pattern (including finite sets).
    pub fn is_lasso(&self) -> bool {
        matches!(self.tail, Tail::Finite | Tail::Periodic(_))
    }

    /// (prefix length, pattern) view of a lasso set.
    pub fn lasso_shape(&self) -> Option<(u64, Vec<bool>)> {
        match &self.tail {
            Tail::Finite => Some((self.prefix_len(), vec![false])),
            Tail::Periodic(p) => Some((self.prefix_len(), p.clone())),
            _ => None,
        }
    }

    // ------------------------------------------------------------------
    // Derived sets
    // ------------------------------------------------------------------

    pub fn complement(&self) -> OmegaSet {
        let prefix = self.prefix.iter().map(|b| !b).collect();
        match &self.tail {
            Tail::Finite => {
                OmegaSet { prefix, tail: Tail::Periodic(vec![true]) }.canonical()
            }
            Tail::Periodic(pat) => {
                let pat = pat.iter().map(|b| !b).collect();
                OmegaSet { prefix, tail: Tail::Periodic(pat) }.canonical()
            }
            Tail::Unknown => OmegaSet { prefix, tail: Tail::Unknown },
            Tail::Procedural(_) => OmegaSet::procedural(Generator::Complement {
                base: Box::new(self.clone()),
            }),
        }
    }

    /// Is this set the complement of `other` by construction?
    pub fn is_complement_of(&self, other: &OmegaSet) -> bool {
        if let Tail::Procedural(Generator::Complement { base }) = &self.tail {
            return base.as_ref() == other;
        }
        if let Tail::Procedural(Generator::Complement { base }) = &other.tail {
            return base.as_ref() == self;
        }
        if self.is_lasso() && other.is_lasso() {
            return self.canonical() == other.complement().canonical();
        }
        false
    }

    /// The set with every position below `from` removed; the tail class
    /// is preserved.
    pub fn suffix_from(&self, from: u64) -> OmegaSet {
        let base = self.materialized(from.max(self.prefix_len()));
        let mut prefix = base.prefix.clone();
        if (from as usize) > prefix.len() {
            prefix.resize(from as usize, false);
        }
        for bit in prefix.iter_mut().take(from as usize) {
            *bit = false;
        }
        let out = OmegaSet { prefix, tail: base.tail };
        if out.is_lasso() {
            out.canonical()
        } else {
            out
        }
    }

    /// Every k-th member (0-based offset). The prefix is materialized up
    /// to `hint` positions so later membership queries stay cheap.
    pub fn stride(&self, k: u64, offset: u64, hint: u64) -> OmegaSet {
        assert!(k >= 1);
        if self.is_lasso() {
            // members repeat with the pattern; stride keeps periodicity
            // with period k * pattern period
            let (plen, pat) = self.lasso_shape().unwrap();
            let per_cycle = pat.iter().filter(|&&b| b).count() as u64;
            if per_cycle == 0 {
                let ms: Vec<u64> = self
                    .members_below(self.prefix_len())
                    .into_iter()
                    .skip(offset as usize)
                    .step_by(k as usize)
                    .collect();
                return OmegaSet::finite(&ms);
            }
            let span = plen + pat.len() as u64 * k;
            let ms: Vec<u64> = self
                .members_below(span + 1)
                .into_iter()
                .skip(offset as usize)
                .step_by(k as usize)
                .collect();
            let mut bits = vec![false; span as usize];
            for &m in &ms {
                if (m as usize) < bits.len() {
                    bits[m as usize] = true;
                }
            }
            let tail_pat: Vec<bool> = (plen..plen + pat.len() as u64 * k)
                .map(|n| ms.binary_search(&n).is_ok())
                .collect();
            let prefix: Vec<bool> = bits[..plen as usize].to_vec();
            return OmegaSet::lasso(prefix, tail_pat);
        }
        let gen = Generator::MemberStride {
            base: Box::new(self.clone()),
            k,
            offset,
        };
        OmegaSet::procedural(gen).materialized(hint)
    }
}

fn minimal_period(pat: &[bool]) -> Vec<bool> {
    let n = pat.len();
    'outer: for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        for i in d..n {
            if pat[i] != pat[i - d] {
                continue 'outer;
            }
        }
        return pat[..d].to_vec();
    }
    pat.to_vec()
}

impl Generator {
    pub fn member(&self, n: u64) -> Option<bool> {
        match self {
            Generator::Pow2 => Some(n.is_power_of_two()),
            Generator::Squares => {
                let r = n.isqrt();
                Some(r * r == n)
            }
            Generator::Triangular => {
                let k = ((2 * n).isqrt()).saturating_sub(1);
                Some((k..=k + 2).any(|j| j * (j + 1) / 2 == n))
            }
            Generator::Multiples { k } => Some(n % k == 0),
            Generator::PiDigits => {
                let m = n / 10;
                if m == 0 {
                    Some(false)
                } else {
                    pi_digit(m).map(|d| u64::from(d) == n % 10)
                }
            }
            Generator::WordLetters { word, letters } => {
                Some(letters.contains(&word.letter_at(n)))
            }
            Generator::PaddedImage { word, base } => {
                if word.letter_at(n) == FLAT {
                    return Some(false);
                }
                // invert sigma_position by binary search
                let mut lo = 0u64;
                let mut hi = n + 1;
                while lo + 1 < hi {
                    let mid = lo + (hi - lo) / 2;
                    if word.sigma_position(mid) <= n {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                base.member(lo)
            }
            Generator::Isolated { base } => {
                let here = base.member(n)?;
                if !here {
                    return Some(false);
                }
                if n % 2 != 0 {
                    return Some(true);
                }
                let right = base.member(n + 1)?;
                let left = if n == 0 { false } else { base.member(n - 1)? };
                Some(!(left || right))
            }
            Generator::Completed { r, i } => completed_member(r, i, n),
            Generator::Adjacency { r, i } => {
                if r.member(n)? {
                    return Some(true);
                }
                let here = i.member(n)?;
                let right = i.member(n + 1)?;
                let left = if n == 0 { false } else { i.member(n - 1)? };
                Some(!(here || left || right))
            }
            Generator::Complement { base } => base.member(n).map(|b| !b),
            Generator::MemberStride { base, k, offset } => {
                if base.member(n)? != true {
                    return Some(false);
                }
                // index of n among the members of base
                let mut idx = 0u64;
                for m in 0..n {
                    if base.member(m)? {
                        idx += 1;
                    }
                }
                Some(idx >= *offset && (idx - offset) % k == 0)
            }
        }
    }

    pub fn determined_to(&self, h: u64) -> u64 {
        match self {
            Generator::PiDigits => h.min(pi_digit_set_horizon()),
            Generator::PaddedImage { base, .. } => base.determined_to(h),
            Generator::Isolated { base } => {
                let b = base.determined_to(h.saturating_add(1));
                h.min(b.saturating_sub(1))
            }
            Generator::Completed { r, i } => {
                // membership needs a scan for the next member, keep a margin
                let rr = r.determined_to(h.saturating_mul(2).saturating_add(64));
                let ii = i.determined_to(h.saturating_mul(2).saturating_add(64));
                h.min(rr / 2).min(ii / 2)
            }
            Generator::Adjacency { r, i } => {
                let rr = r.determined_to(h);
                let ii = i.determined_to(h.saturating_add(1));
                h.min(rr).min(ii.saturating_sub(1))
            }
            Generator::Complement { base } | Generator::MemberStride { base, .. } => {
                base.determined_to(h)
            }
            Generator::WordLetters { .. } => h,
            _ => h,
        }
    }

    pub fn infinite_certain(&self) -> Option<bool> {
        match self {
            Generator::Pow2
            | Generator::Squares
            | Generator::Triangular
            | Generator::Multiples { .. } => Some(true),
            // the data is finite but the real set is infinite by
            // construction (one member per decade)
            Generator::PiDigits => Some(true),
            Generator::WordLetters { word, letters } => word_letters_infinite(word, letters),
            Generator::PaddedImage { base, .. } => base.finite_certain().map(|f| !f),
            Generator::Isolated { base } => base.finite_certain().map(|f| !f),
            Generator::Completed { i, .. } => i.finite_certain().map(|f| !f),
            Generator::Adjacency { r, .. } => {
                // contains all of r
                match r.finite_certain() {
                    Some(false) => Some(true),
                    _ => None,
                }
            }
            Generator::Complement { base } => match base.run_class() {
                Asym::Bounded => Some(true),
                _ => None,
            },
            Generator::MemberStride { base, .. } => base.finite_certain().map(|f| !f),
        }
    }

    pub fn gap_class(&self) -> Asym {
        match self {
            Generator::Pow2 | Generator::Squares | Generator::Triangular => Asym::Unbounded,
            Generator::Multiples { .. } | Generator::PiDigits => Asym::Bounded,
            Generator::WordLetters { word, letters } => word_letters_gap_class(word, letters),
            Generator::PaddedImage { word, base } => match word.gen {
                GapGen::Constant(_) => base.gap_class(),
                // padding stretches without bound, so any infinite image
                // has unbounded gaps
                _ => match base.finite_certain() {
                    Some(false) => Asym::Unbounded,
                    _ => Asym::Unknown,
                },
            },
            Generator::Isolated { base } => base.gap_class(),
            Generator::Completed { i, .. } => match i.gap_class() {
                Asym::Bounded => Asym::Bounded,
                _ => Asym::Unknown,
            },
            Generator::Adjacency { .. } => Asym::Unknown,
            Generator::Complement { base } => base.run_class(),
            Generator::MemberStride { base, .. } => base.gap_class(),
        }
    }

    pub fn run_class(&self) -> Asym {
        match self {
            Generator::Pow2
            | Generator::Squares
            | Generator::Triangular
            | Generator::PiDigits => Asym::Bounded,
            Generator::Multiples { k } => {
                if *k == 1 {
                    Asym::Unbounded
                } else {
                    Asym::Bounded
                }
            }
            Generator::WordLetters { word, letters } => word_letters_run_class(word, letters),
            Generator::PaddedImage { word, base } => match word.gen {
                GapGen::Constant(0) => base.run_class(),
                _ => Asym::Bounded,
            },
            Generator::Isolated { .. } => Asym::Bounded,
            Generator::Completed { .. } => Asym::Unknown,
            Generator::Adjacency { .. } => Asym::Unknown,
            Generator::Complement { base } => base.gap_class(),
            Generator::MemberStride { base, k, .. } => {
                if *k == 1 {
                    base.run_class()
                } else {
                    Asym::Bounded
                }
            }
        }
    }

    /// Residues mod `p` achieved by all members ≥ the returned bound.
    /// Used to certify disjointness from ultimately periodic sets.
    pub fn eventual_residues(&self, p: u64) -> Option<(u64, BTreeSet<u64>)> {
        if p == 0 {
            return None;
        }
        match self {
            Generator::Pow2 => {
                // residues of 2^j mod p are eventually cyclic
                let mut seen: Vec<u64> = vec![];
                let mut r = 1u64 % p;
                let mut j = 0u64;
                loop {
                    if let Some(pos) = seen.iter().position(|&x| x == r) {
                        let cycle: BTreeSet<u64> = seen[pos..].iter().copied().collect();
                        let bound = 1u64.checked_shl(pos as u32).unwrap_or(u64::MAX);
                        return Some((bound, cycle));
                    }
                    seen.push(r);
                    r = (r * 2) % p;
                    j += 1;
                    if j > 4 * p + 8 {
                        return None;
                    }
                }
            }
            Generator::Squares => {
                let rs = (0..p).map(|x| (x * x) % p).collect();
                Some((0, rs))
            }
            Generator::Triangular => {
                let rs = (0..2 * p).map(|k| (k * (k + 1) / 2) % p).collect();
                Some((0, rs))
            }
            Generator::Multiples { k } => {
                let rs = (0..p).map(|j| (j * k) % p).collect();
                Some((0, rs))
            }
            _ => None,
        }
    }
}

fn completed_member(r: &OmegaSet, i: &OmegaSet, n: u64) -> Option<bool> {
    if i.member(n)? {
        return Some(true);
    }
    // n is added exactly when it lies strictly between two consecutive
    // i-members x < y with no r-member in (x, y) and n != y - 1
    let mut x = None;
    let mut m = n;
    while m > 0 {
        m -= 1;
        if i.member(m)? {
            x = Some(m);
            break;
        }
        if n - m > 1 << 22 {
            return None;
        }
    }
    let x = match x {
        Some(x) => x,
        None => return Some(false),
    };
    let mut m = n + 1;
    let y = loop {
        match i.member(m) {
            Some(true) => break m,
            Some(false) => {}
            None => return None,
        }
        m += 1;
        if m - n > 1 << 22 {
            return None;
        }
    };
    if n == y - 1 {
        return Some(false);
    }
    for z in x + 1..y {
        if r.member(z)? {
            return Some(false);
        }
    }
    Some(true)
}

fn word_letters_infinite(word: &Word, letters: &BTreeSet<char>) -> Option<bool> {
    match word {
        Word::Lasso(w) => Some(w.looping.iter().any(|c| letters.contains(c))),
        Word::Padded(w) => {
            if letters.contains(&FLAT) && w.gen.tends_to_infinity() {
                return Some(true);
            }
            let base_hit = w.base.looping.iter().any(|c| letters.contains(c));
            Some(base_hit || (letters.contains(&FLAT) && !matches!(w.gen, GapGen::Constant(0))))
        }
        Word::Blocks(w) => {
            let unit_hit = w.unit.iter().any(|c| letters.contains(c));
            Some(unit_hit && w.growth.tends_to_infinity() || letters.contains(&w.sep))
        }
    }
}

fn word_letters_gap_class(word: &Word, letters: &BTreeSet<char>) -> Asym {
    match word {
        // lasso words are materialized to exact lasso sets elsewhere;
        // conservative here
        Word::Lasso(_) => Asym::Bounded,
        Word::Padded(w) => {
            let sigma_hit = w.base.looping.iter().any(|c| letters.contains(c))
                || w.base.stem.iter().any(|c| letters.contains(c));
            let flat_hit = letters.contains(&FLAT);
            match (sigma_hit, flat_hit, w.gen.tends_to_infinity()) {
                (_, true, _) => Asym::Bounded,
                (true, false, true) => {
                    if w.base.looping.iter().all(|c| letters.contains(c)) {
                        // every Σ-letter selected: gaps are the ♭-runs + 1
                        Asym::Unbounded
                    } else {
                        Asym::Unbounded
                    }
                }
                (true, false, false) => Asym::Bounded,
                (false, false, _) => Asym::Bounded,
            }
        }
        Word::Blocks(w) => {
            let unit_hit = w.unit.iter().any(|c| letters.contains(c));
            let sep_hit = letters.contains(&w.sep);
            if unit_hit {
                Asym::Bounded
            } else if sep_hit && w.growth.tends_to_infinity() {
                Asym::Unbounded
            } else if sep_hit {
                Asym::Bounded
            } else {
                Asym::Bounded
            }
        }
    }
}

fn word_letters_run_class(word: &Word, letters: &BTreeSet<char>) -> Asym {
    match word {
        Word::Lasso(_) => Asym::Bounded,
        Word::Padded(w) => {
            if letters.contains(&FLAT) && w.gen.tends_to_infinity() {
                Asym::Unbounded
            } else {
                Asym::Bounded
            }
        }
        Word::Blocks(w) => {
            if w.unit.iter().all(|c| letters.contains(c)) && w.growth.tends_to_infinity() {
                Asym::Unbounded
            } else {
                Asym::Bounded
            }
        }
    }
}

impl fmt::Display for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tail {
            Tail::Finite => {
                let ms: Vec<String> =
                    self.members_below(self.prefix_len()).iter().map(|m| m.to_string()).collect();
                write!(f, "finite{{{}}}", ms.join(","))
            }
            Tail::Periodic(pat) => {
                let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
                write!(f, "lasso{{prefix={};period={}}}", bits(&self.prefix), bits(pat))
            }
            Tail::Procedural(gen) => write!(f, "proc{{{gen:?}}}"),
            Tail::Unknown => write!(f, "prefix-only[len={}]", self.prefix.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_membership() {
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        assert_eq!(pow2.members_below(20), vec![1, 2, 4, 8, 16]);
        let tri = OmegaSet::procedural(Generator::Triangular);
        assert_eq!(tri.members_below(22), vec![0, 1, 3, 6, 10, 15, 21]);
        let sq = OmegaSet::procedural(Generator::Squares);
        assert_eq!(sq.members_below(17), vec![0, 1, 4, 9, 16]);
        let m10 = OmegaSet::procedural(Generator::Multiples { k: 10 });
        assert_eq!(m10.members_below(31), vec![0, 10, 20, 30]);
    }

    #[test]
    fn pi_digit_set() {
        // π = 3.14159... => members 10·1+1, 10·2+4, 10·3+1, 10·4+5, 10·5+9
        let pi = OmegaSet::procedural(Generator::PiDigits);
        assert_eq!(pi.members_below(60), vec![11, 24, 31, 45, 59]);
        let gaps = pi.gaps_below(100_000);
        assert!(gaps.iter().all(|&g| g <= 19), "pi-digit gaps bounded by 19");
        assert!(gaps.iter().any(|&g| g >= 2));
    }

    #[test]
    fn lasso_canonical_forms() {
        // both are the odd numbers
        let a = OmegaSet::lasso(vec![false, true], vec![false, true, false, true]);
        let b = OmegaSet::lasso(vec![false], vec![true, false]);
        assert_eq!(a, b);
        assert_eq!(a.members_below(8), vec![1, 3, 5, 7]);
        let fin = OmegaSet::lasso(vec![true, true, false], vec![false, false]);
        assert_eq!(fin, OmegaSet::finite(&[0, 1]));
    }

    #[test]
    fn complement_roundtrip() {
        let s = OmegaSet::arithmetic(3, 2); // {3,5,7,...}
        let c = s.complement();
        assert_eq!(c.member(3), Some(false));
        assert_eq!(c.member(4), Some(true));
        assert_eq!(c.complement(), s.canonical());
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        let cp = pow2.complement();
        assert_eq!(cp.member(8), Some(false));
        assert_eq!(cp.member(9), Some(true));
        assert!(cp.is_complement_of(&pow2));
        assert_eq!(cp.gap_class(), Asym::Bounded);
        assert_eq!(cp.run_class(), Asym::Unbounded);
    }

    #[test]
    fn stride_of_lasso_is_exact() {
        let evens = OmegaSet::arithmetic(0, 2);
        let every3rd = evens.stride(3, 1, 64); // members 2, 8, 14, ...
        assert_eq!(every3rd.members_below(20), vec![2, 8, 14]);
        assert!(every3rd.is_lasso());
    }

    #[test]
    fn prefix_only_is_honest() {
        let s = OmegaSet::prefix_only(vec![true, false, true]);
        assert_eq!(s.member(2), Some(true));
        assert_eq!(s.member(3), None);
        assert_eq!(s.determined_to(10), 3);
    }
}

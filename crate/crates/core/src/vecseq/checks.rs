//! Three-valued predicates over finitely represented sets and sequence
//! prefixes.
//!
//! Decided verdicts come from structural certificates (tail classes,
//! residue arguments, growth witnesses confirmed on the prefix) and are
//! stable under growing the horizon; everything else is `Unknown`.

use super::omega_set::{Asym, Generator, OmegaSet, Tail};
use super::seq::{decode_numseq, match_one_extraction, NumberSeqPrefix, VectorSeqPrefix};
use crate::eval::words::{Word, FLAT};
use crate::verdict::{Truth, Verdict3, Witness};

/// Strictly increasing records of a value sequence: (index, value) pairs
/// where the value exceeds everything before it.
pub fn records(values: &[u64]) -> Vec<(usize, u64)> {
    let mut out: Vec<(usize, u64)> = vec![];
    let mut best: Option<u64> = None;
    for (i, &v) in values.iter().enumerate() {
        if best.map_or(true, |b| v > b) {
            out.push((i, v));
            best = Some(v);
        }
    }
    out
}

/// A prefix-level indication that the sequence grows without bound: at
/// least three record values with the latest record in the second half.
pub fn growth_witness(values: &[u64]) -> Option<Vec<(usize, u64)>> {
    if values.len() < 4 {
        return None;
    }
    let recs = records(values);
    if recs.len() >= 3 && recs.last().unwrap().0 * 2 >= values.len() {
        Some(recs)
    } else {
        None
    }
}

/// W(X): consecutive members of X occur at arbitrarily large distances.
pub fn check_w(x: &OmegaSet, h: u64) -> Verdict3 {
    if x.finite_certain() == Some(true) {
        let bound = x.gaps_below(x.prefix_len() + 1).into_iter().max().unwrap_or(0);
        return Verdict3::with_witness(Truth::False, h, Witness::Bound(bound));
    }
    if x.is_lasso() {
        // infinite lasso set: gaps are eventually periodic, hence bounded
        let (l, pat) = x.lasso_shape().unwrap();
        let span = l + 3 * pat.len() as u64 + 2;
        let bound = x.gaps_below(span).into_iter().max().unwrap_or(pat.len() as u64);
        return Verdict3::with_witness(Truth::False, h, Witness::Bound(bound));
    }
    match x.gap_class() {
        Asym::Bounded => {
            let bound = x.gaps_below(x.determined_to(h)).into_iter().max().unwrap_or(0);
            Verdict3::with_witness(Truth::False, h, Witness::Bound(bound))
        }
        Asym::Unbounded => {
            let gaps = x.gaps_below(x.determined_to(h));
            match growth_witness(&gaps) {
                Some(recs) => {
                    let ms = x.members_below(x.determined_to(h));
                    let pairs = recs.iter().map(|&(i, g)| (ms[i], g)).collect();
                    Verdict3::with_witness(Truth::True, h, Witness::GapGrowth(pairs))
                }
                None => Verdict3::unknown(h),
            }
        }
        Asym::Unknown => Verdict3::unknown(h),
    }
}

/// Certifies R ∩ I = ∅ (`Some(true)`), refutes it with a shared position
/// (`Some(false)`), or gives up (`None`).
pub fn disjoint_certain(a: &OmegaSet, b: &OmegaSet, h: u64) -> Option<bool> {
    let lim = a.determined_to(h).min(b.determined_to(h));
    for n in 0..lim {
        if a.member(n) == Some(true) && b.member(n) == Some(true) {
            return Some(false);
        }
    }
    if a.is_lasso() && b.is_lasso() {
        let (la, pa) = a.lasso_shape().unwrap();
        let (lb, pb) = b.lasso_shape().unwrap();
        let span = la.max(lb) + num_lcm(pa.len() as u64, pb.len() as u64);
        for n in 0..span {
            if a.member(n) == Some(true) && b.member(n) == Some(true) {
                return Some(false);
            }
        }
        return Some(true);
    }
    if a.is_complement_of(b) {
        return Some(true);
    }
    if let Some(d) = word_level_disjoint(a, b) {
        return Some(d);
    }
    if let Some(d) = residue_disjoint(a, b).or_else(|| residue_disjoint(b, a)) {
        return Some(d);
    }
    None
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn word_level_disjoint(a: &OmegaSet, b: &OmegaSet) -> Option<bool> {
    let letter_sets = |s: &OmegaSet| match s.tail() {
        Tail::Procedural(Generator::WordLetters { word, letters }) => {
            Some((word.clone(), letters.clone()))
        }
        _ => None,
    };
    if let (Some((wa, la)), Some((wb, lb))) = (letter_sets(a), letter_sets(b)) {
        if wa == wb && la.is_disjoint(&lb) {
            return Some(true);
        }
    }
    // the image of a padding map only hits non-♭ positions
    let padded_image_word = |s: &OmegaSet| match s.tail() {
        Tail::Procedural(Generator::PaddedImage { word, .. }) => Some(word.clone()),
        _ => None,
    };
    for (img, other) in [(a, b), (b, a)] {
        if let Some(w) = padded_image_word(img) {
            if let Some((wo, lo)) = letter_sets(other) {
                if wo == Word::Padded(w) && lo.iter().all(|&c| c == FLAT) {
                    return Some(true);
                }
            }
        }
    }
    None
}

/// Residue-cycle certificate: every sufficiently large member of the
/// generator-backed set has a residue mod p outside the lasso set's
/// pattern.
fn residue_disjoint(gen_side: &OmegaSet, lasso_side: &OmegaSet) -> Option<bool> {
    let gen = match gen_side.tail() {
        Tail::Procedural(g) => g,
        _ => return None,
    };
    let (l, pat) = lasso_side.lasso_shape()?;
    let p = pat.len() as u64;
    let (bound, residues) = gen.eventual_residues(p)?;
    let scan_to = bound.max(l + p).max(gen_side.prefix_len());
    if scan_to > 1 << 20 {
        return None;
    }
    for n in 0..scan_to {
        if gen_side.member(n) == Some(true) && lasso_side.member(n) == Some(true) {
            return Some(false);
        }
    }
    // beyond scan_to every generator member has residue in `residues`;
    // the lasso set beyond l is determined by residue classes
    let lasso_residues: std::collections::BTreeSet<u64> = (l..l + p)
        .filter(|&n| lasso_side.member(n) == Some(true))
        .map(|n| n % p)
        .collect();
    Some(residues.is_disjoint(&lasso_residues))
}

/// U2(R, I): the encoded number sequence is defined and unbounded.
/// Undefined encodings (R finite or overlapping sets) are false, matching
/// the predicate reading rather than raising.
pub fn check_u2(r: &OmegaSet, i: &OmegaSet, h: u64) -> Verdict3 {
    if r.finite_certain() == Some(true) {
        return Verdict3::with_witness(Truth::False, h, Witness::Note("R finite".into()));
    }
    match disjoint_certain(r, i, h) {
        Some(false) => {
            let lim = r.determined_to(h).min(i.determined_to(h));
            let pos = (0..lim)
                .find(|&n| r.member(n) == Some(true) && i.member(n) == Some(true));
            return match pos {
                Some(p) => Verdict3::with_witness(Truth::False, h, Witness::Position(p)),
                None => Verdict3::with_witness(Truth::False, h, Witness::Note("overlap".into())),
            };
        }
        Some(true) | None => {}
    }
    // counts are capped by the gap lengths of R
    if r.is_lasso() || r.gap_class() == Asym::Bounded {
        let bound = r
            .gaps_below(r.determined_to(h.min(1 << 16)))
            .into_iter()
            .max()
            .unwrap_or(0);
        return Verdict3::with_witness(Truth::False, h, Witness::Bound(bound));
    }
    if i.finite_certain() == Some(true) {
        return Verdict3::with_witness(Truth::False, h, Witness::Note("I finite".into()));
    }
    let growth_cert = r.gap_class() == Asym::Unbounded
        && r.finite_certain() == Some(false)
        && i.gap_class() == Asym::Bounded
        && i.finite_certain() == Some(false)
        && disjoint_certain(r, i, h) == Some(true);
    if growth_cert {
        if let Ok(seq) = decode_numseq(r, i, h) {
            if let Some(recs) = growth_witness(&seq.values) {
                let pairs = recs.iter().map(|&(idx, v)| (idx as u64, v)).collect();
                return Verdict3::with_witness(Truth::True, h, Witness::GapGrowth(pairs));
            }
        }
    }
    Verdict3::unknown(h)
}

/// Declared structural knowledge about the tail of a decoded sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqStructure {
    /// every value occurs in finitely many vectors
    TendsToInfinity,
    /// the prefix pattern recurs forever (values repeat)
    PeriodicPattern,
    Untagged,
}

/// Does the vector sequence tend to infinity (every natural occurs in
/// finitely many vectors)?
pub fn tends_to_infinity(v: &VectorSeqPrefix, structure: SeqStructure) -> Verdict3 {
    let h = v.horizon;
    match structure {
        SeqStructure::Untagged => Verdict3::unknown(h),
        SeqStructure::PeriodicPattern => {
            // a value occurring in two vectors of the repeating pattern
            // occurs in infinitely many
            let mut seen: std::collections::HashMap<u64, usize> = Default::default();
            for (i, vec) in v.vectors.iter().enumerate() {
                for &c in vec.iter().collect::<std::collections::BTreeSet<_>>() {
                    if let Some(_first) = seen.get(&c) {
                        return Verdict3::with_witness(
                            Truth::False,
                            h,
                            Witness::Note(format!("value {c} recurs (vector {i})")),
                        );
                    }
                    seen.insert(c, i);
                }
            }
            Verdict3::unknown(h)
        }
        SeqStructure::TendsToInfinity => {
            // consistency: minima of the vectors never decrease and grow
            let mins: Vec<u64> = v
                .vectors
                .iter()
                .filter(|t| !t.is_empty())
                .map(|t| *t.iter().min().unwrap())
                .collect();
            let nondecreasing = mins.windows(2).all(|w| w[0] <= w[1]);
            let grows = mins.last().copied().unwrap_or(0) > mins.first().copied().unwrap_or(0);
            if nondecreasing && grows {
                Verdict3::with_witness(Truth::True, h, Witness::Note("min coordinates grow".into()))
            } else {
                Verdict3::unknown(h)
            }
        }
    }
}

/// Tag describing a number sequence's asymptotics per residue class of
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumSeqTag {
    /// eventually periodic values, hence bounded
    EventuallyPeriodic,
    /// indices ≡ j (mod period) carry the declared growth
    Classes { period: usize, growth: Vec<Asym> },
    Untagged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedNumSeq {
    pub seq: NumberSeqPrefix,
    pub tag: NumSeqTag,
}

impl TaggedNumSeq {
    pub fn new(values: Vec<u64>, tag: NumSeqTag) -> Self {
        TaggedNumSeq { seq: NumberSeqPrefix::new(values), tag }
    }
}

/// Are two number sequences bounded on exactly the same index sets?
pub fn asym_equiv_check(f: &TaggedNumSeq, g: &TaggedNumSeq) -> Verdict3 {
    let h = f.seq.horizon.min(g.seq.horizon);
    if f == g {
        return Verdict3::with_witness(Truth::True, h, Witness::Note("identical".into()));
    }
    // both eventually periodic: bounded on every index set
    if f.tag == NumSeqTag::EventuallyPeriodic && g.tag == NumSeqTag::EventuallyPeriodic {
        return Verdict3::with_witness(Truth::True, h, Witness::Note("both lasso".into()));
    }
    let n = f.seq.values.len().min(g.seq.values.len());
    let fv = &f.seq.values[..n];
    let gv = &g.seq.values[..n];
    // refutation: a class where one side is verified-unbounded and the
    // other declared-and-observed bounded
    let candidates = refutation_classes(f, g, n);
    for idx in candidates {
        let fc: Vec<u64> = idx.iter().map(|&i| fv[i]).collect();
        let gc: Vec<u64> = idx.iter().map(|&i| gv[i]).collect();
        let f_grows = growth_witness(&fc).is_some() && tag_allows_unbounded(&f.tag, &idx, n);
        let g_bounded = tag_says_bounded(&g.tag, &idx, n);
        if f_grows && g_bounded {
            return Verdict3::with_witness(Truth::False, h, Witness::IndexSet(idx));
        }
        let g_grows = growth_witness(&gc).is_some() && tag_allows_unbounded(&g.tag, &idx, n);
        let f_bounded = tag_says_bounded(&f.tag, &idx, n);
        if g_grows && f_bounded {
            return Verdict3::with_witness(Truth::False, h, Witness::IndexSet(idx));
        }
    }
    // matching class structure plus a bounded pointwise difference keeps
    // the two sequences bounded on the same sets
    if f.tag == g.tag && f.tag != NumSeqTag::Untagged && n >= 4 {
        let maxdiff = fv
            .iter()
            .zip(gv)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0);
        let spread = fv.iter().chain(gv).max().copied().unwrap_or(0);
        if maxdiff <= 1 || (maxdiff * 4 <= spread.max(4)) {
            return Verdict3::with_witness(Truth::True, h, Witness::Bound(maxdiff));
        }
    }
    Verdict3::unknown(h)
}

fn refutation_classes(f: &TaggedNumSeq, g: &TaggedNumSeq, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![(0..n).collect()];
    for tag in [&f.tag, &g.tag] {
        if let NumSeqTag::Classes { period, .. } = tag {
            for j in 0..*period {
                out.push((0..n).filter(|i| i % period == j).collect());
            }
        }
    }
    out.retain(|idx| idx.len() >= 4);
    out.dedup();
    out
}

fn tag_allows_unbounded(tag: &NumSeqTag, idx: &[usize], _n: usize) -> bool {
    match tag {
        NumSeqTag::EventuallyPeriodic => false,
        NumSeqTag::Untagged => false,
        NumSeqTag::Classes { period, growth } => {
            // the index set must stay inside classes declared unbounded at
            // least once (a growth witness cannot come from bounded ones)
            idx.iter().any(|i| growth[i % period] == Asym::Unbounded)
        }
    }
}

fn tag_says_bounded(tag: &NumSeqTag, idx: &[usize], _n: usize) -> bool {
    match tag {
        NumSeqTag::EventuallyPeriodic => true,
        NumSeqTag::Untagged => false,
        NumSeqTag::Classes { period, growth } => {
            idx.iter().all(|i| growth[i % period] == Asym::Bounded)
        }
    }
}

/// Budget for the bounded asymptotic-mix search.
#[derive(Debug, Clone, Copy)]
pub struct MixBudget {
    pub max_vectors: usize,
    pub max_enumerations: u64,
}

impl Default for MixBudget {
    fn default() -> Self {
        MixBudget { max_vectors: 12, max_enumerations: 100_000 }
    }
}

fn one_extractions(v: &[Vec<u64>], budget: u64) -> Option<Vec<Vec<u64>>> {
    let mut total: u64 = 1;
    for t in v {
        total = total.checked_mul(t.len() as u64)?;
        if total > budget || t.is_empty() {
            return None;
        }
    }
    let mut out: Vec<Vec<u64>> = vec![vec![]];
    for t in v {
        let mut next = Vec::with_capacity(out.len() * t.len());
        for prefix in &out {
            for &c in t {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        out = next;
    }
    Some(out)
}

fn looks_bounded(values: &[u64]) -> bool {
    growth_witness(values).is_none()
        && values.iter().max() == values[..values.len().div_ceil(2)].iter().max()
}

/// Bounded search for the asymptotic-mix property: every 1-extraction of
/// `a` must be asymptotically equivalent to some 1-extraction of `b`.
/// Verdicts carry certificates (ladder structure detected in `b`) or
/// counterexamples; exhaustiveness is impossible from a prefix.
pub fn asymptotic_mix_check(
    a: &VectorSeqPrefix,
    b: &VectorSeqPrefix,
    budget: MixBudget,
) -> Verdict3 {
    let n = a.len().min(b.len()).min(budget.max_vectors);
    let h = a.horizon.min(b.horizon);
    let av = &a.vectors[..n];
    let bv = &b.vectors[..n];
    if av.iter().any(|t| t.is_empty()) || bv.iter().any(|t| t.is_empty()) {
        return Verdict3::with_witness(Truth::Unknown, h, Witness::Note("empty vector".into()));
    }
    if av == bv {
        return Verdict3::with_witness(Truth::True, h, Witness::Note("identity".into()));
    }
    // ladder certificate: b's vectors contain complete initial segments
    // {1..reach} with reach growing, so the greedy match below works for
    // every 1-extraction of a
    let reach: Vec<u64> = bv
        .iter()
        .map(|t| {
            let set: std::collections::BTreeSet<u64> = t.iter().copied().collect();
            let mut k = 0u64;
            while set.contains(&(k + 1)) {
                k += 1;
            }
            k
        })
        .collect();
    let ladder = reach.iter().all(|&k| k >= 1)
        && reach.windows(2).all(|w| w[0] <= w[1])
        && reach.last().copied().unwrap_or(0) >= 2
        && reach.last().copied().unwrap_or(0) > reach.first().copied().unwrap_or(0);
    if ladder {
        return Verdict3::with_witness(Truth::True, h, Witness::Note("ladder certificate".into()));
    }
    // refutation: some 1-extraction of a that no candidate of b matches
    let fs = match one_extractions(av, budget.max_enumerations) {
        Some(fs) => fs,
        None => return Verdict3::unknown(h),
    };
    let gs = one_extractions(bv, budget.max_enumerations);
    for f in &fs {
        if n < 4 {
            break;
        }
        let f_grows = growth_witness(f).is_some();
        let f_bounded = looks_bounded(f);
        if !f_grows && !f_bounded {
            continue;
        }
        let mut candidates: Vec<Vec<u64>> = vec![];
        if let Ok(m) = match_one_extraction(
            &VectorSeqPrefix::new(bv.to_vec()),
            &NumberSeqPrefix::new(f.clone()),
        ) {
            candidates.push(m.values);
        }
        if let Some(gs) = &gs {
            candidates.extend(gs.iter().cloned());
        } else {
            // cannot enumerate all candidates: refutation impossible
            continue;
        }
        let all_inequivalent = candidates.iter().all(|g| {
            (f_grows && g.iter().all(|&x| x == g[0]))
                || (f_bounded && f.iter().all(|&x| x == f[0]) && growth_witness(g).is_some())
        });
        if all_inequivalent && !candidates.is_empty() {
            return Verdict3::with_witness(
                Truth::False,
                h,
                Witness::Note(format!("1-extraction {f:?} unmatched")),
            );
        }
    }
    Verdict3::unknown(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vecseq::omega_set::Generator;

    #[test]
    fn check_w_golden_examples() {
        // multiples of ten: periodic, gaps fixed at 10
        let tens = OmegaSet::procedural(Generator::Multiples { k: 10 });
        assert!(check_w(&tens, 1000).is_false());
        // powers of two: gaps double
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        assert!(check_w(&pow2, 1000).is_true());
        // π-digit positions: one member per decade, gaps ≤ 19
        let pi = OmegaSet::procedural(Generator::PiDigits);
        assert!(check_w(&pi, 1000).is_false());
        // the empty set never satisfies W
        assert!(check_w(&OmegaSet::empty(), 10).is_false());
    }

    #[test]
    fn check_w_lasso_always_false() {
        let s = OmegaSet::lasso(vec![true, false, false], vec![false, false, true]);
        assert!(check_w(&s, 100).is_false());
    }

    #[test]
    fn check_u2_examples() {
        // overlapping sets: undefined, hence false
        let r = OmegaSet::finite(&[1, 2]);
        let i = OmegaSet::finite(&[2, 3]);
        assert!(check_u2(&r, &i, 10).is_false());
        // lasso pair: counts eventually periodic, bounded
        let r = OmegaSet::arithmetic(0, 5);
        let i = OmegaSet::arithmetic(2, 5);
        assert!(check_u2(&r, &i, 100).is_false());
        // unbounded gaps vs dense disjoint set
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        let odds = OmegaSet::arithmetic(3, 2);
        let v = check_u2(&pow2, &odds, 1 << 12);
        assert!(v.is_true(), "{v}");
    }

    #[test]
    fn residue_certificate_blocks_false_positives() {
        // squares intersect the evens, no disjointness certificate
        let sq = OmegaSet::procedural(Generator::Squares);
        let evens = OmegaSet::arithmetic(0, 2);
        assert_eq!(disjoint_certain(&sq, &evens, 64), Some(false));
        // powers of two vs odd numbers ≥ 3: certified disjoint
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        let odds3 = OmegaSet::arithmetic(3, 2);
        assert_eq!(disjoint_certain(&pow2, &odds3, 64), Some(true));
        // powers of two vs all odd numbers: 1 is in both
        let odds = OmegaSet::arithmetic(1, 2);
        assert_eq!(disjoint_certain(&pow2, &odds, 64), Some(false));
    }

    #[test]
    fn tends_to_infinity_verdicts() {
        let growing = VectorSeqPrefix::new((1..10).map(|n| vec![n]).collect());
        assert!(tends_to_infinity(&growing, SeqStructure::TendsToInfinity).is_true());
        let gamma = VectorSeqPrefix::new(vec![
            vec![2, 1],
            vec![3, 2, 1],
            vec![4, 3, 2, 1],
        ]);
        assert!(tends_to_infinity(&gamma, SeqStructure::PeriodicPattern).is_false());
        assert_eq!(
            tends_to_infinity(&growing, SeqStructure::Untagged).truth,
            Truth::Unknown
        );
    }

    fn interleaved(start_even: u64, start_odd: u64, even_grows: bool, n: usize) -> Vec<u64> {
        (0..n as u64)
            .map(|i| {
                if i % 2 == 0 {
                    if even_grows { start_even + i } else { start_even }
                } else if even_grows {
                    start_odd
                } else {
                    start_odd + i
                }
            })
            .collect()
    }

    #[test]
    fn asym_equiv_worked_examples() {
        let tag = NumSeqTag::Classes { period: 2, growth: vec![Asym::Unbounded, Asym::Bounded] };
        let tag_swapped =
            NumSeqTag::Classes { period: 2, growth: vec![Asym::Bounded, Asym::Unbounded] };
        // f = 1,1,3,1,5,1,…  g = 2,1,4,1,6,1,…  (equivalent)
        let f = TaggedNumSeq::new(interleaved(1, 1, true, 12), tag.clone());
        let g = TaggedNumSeq::new(interleaved(2, 1, true, 12), tag.clone());
        assert!(asym_equiv_check(&f, &g).is_true());
        // h = 1,3,1,5,1,…  (odd classes grow: not equivalent to f)
        let h = TaggedNumSeq::new(
            (0..12u64).map(|i| if i % 2 == 1 { i + 2 } else { 1 }).collect(),
            tag_swapped,
        );
        let v = asym_equiv_check(&f, &h);
        assert!(v.is_false(), "{v}");
        assert!(matches!(v.witness, Some(Witness::IndexSet(_))));
        // reflexivity
        assert!(asym_equiv_check(&f, &f).is_true());
    }

    #[test]
    fn mix_check_worked_examples() {
        // γ' is an asymptotic mix of β' (ladder certificate)
        let gp = VectorSeqPrefix::new(
            (0..8u64)
                .map(|i| {
                    let mut v: Vec<u64> = (1..=i + 1).rev().collect();
                    v.push(1);
                    v
                })
                .collect(),
        );
        let gamma = VectorSeqPrefix::new(
            (0..8u64).map(|i| (1..=i + 2).rev().collect()).collect(),
        );
        let bp = crate::vecseq::seq::beta_prime(&gamma).unwrap();
        assert_eq!(bp.vectors[3], vec![1, 2, 3, 2]);
        let v = asymptotic_mix_check(&gp, &bp, MixBudget::default());
        assert!(v.is_true(), "{v}");
        // identity
        let v = asymptotic_mix_check(&gp, &gp, MixBudget::default());
        assert!(v.is_true());
        // all-ones vs strictly growing singletons: refuted
        let ones = VectorSeqPrefix::new(vec![vec![1, 1]; 10]);
        let grow = VectorSeqPrefix::new((1..=10u64).map(|n| vec![n]).collect());
        let v = asymptotic_mix_check(&ones, &grow, MixBudget::default());
        assert!(v.is_false(), "{v}");
    }
}

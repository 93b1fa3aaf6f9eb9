//! ♭-padding, projection, and the semantic predicates behind the padded
//! translation: ultimately constant dimension and ultimate periodicity
//! up to ♭-positions.

use super::words::{GapGen, LassoWord, PaddedWord, Word, FLAT};
use crate::vecseq::{decode_vecseq, disjoint_certain, Asym, Generator, OmegaSet, Tail};
use crate::verdict::{Truth, Verdict3, Witness};
use std::collections::BTreeSet;

/// Prefix of length `h` of the padded word w_f.
pub fn pad_word(w: &LassoWord, gen: GapGen, h: u64) -> Result<(PaddedWord, Vec<char>), String> {
    let padded = PaddedWord::new(w.clone(), gen)?;
    let prefix = padded.prefix(h);
    Ok((padded, prefix))
}

/// Erases ♭ letters. The flag reports a prefix ending inside a ♭-run,
/// where the projected tail is still undetermined.
pub fn project(prefix: &[char]) -> (Vec<char>, bool) {
    let out: Vec<char> = prefix.iter().copied().filter(|&c| c != FLAT).collect();
    let trailing = prefix.last() == Some(&FLAT);
    (out, trailing)
}

/// Σ-letter positions of a padded word as a set.
pub fn sigma_positions(w: &PaddedWord) -> OmegaSet {
    let letters: BTreeSet<char> = w.base.alphabet();
    OmegaSet::procedural(Generator::WordLetters {
        word: Word::Padded(w.clone()),
        letters,
    })
}

/// ♭ positions of a padded word as a set.
pub fn flat_positions(w: &PaddedWord) -> OmegaSet {
    OmegaSet::procedural(Generator::WordLetters {
        word: Word::Padded(w.clone()),
        letters: BTreeSet::from([FLAT]),
    })
}

/// Image of a set of letter indices under the padding map.
pub fn padded_image(w: &PaddedWord, base: &OmegaSet) -> OmegaSet {
    OmegaSet::procedural(Generator::PaddedImage {
        word: w.clone(),
        base: Box::new(base.clone()),
    })
}

fn padded_letter_roles(s: &OmegaSet) -> Option<(PaddedWord, bool)> {
    // Some((word, is_flat_side))
    match s.tail() {
        Tail::Procedural(Generator::WordLetters { word: Word::Padded(w), letters }) => {
            if letters.len() == 1 && letters.contains(&FLAT) {
                Some((w.clone(), true))
            } else if !letters.contains(&FLAT) && *letters == w.base.alphabet() {
                Some((w.clone(), false))
            } else {
                None
            }
        }
        Tail::Procedural(Generator::PaddedImage { word, base }) => {
            if **base == OmegaSet::full() {
                Some((word.clone(), false))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Does ⟨R, I⟩ encode a defined vector sequence that tends to infinity
/// with ultimately constant dimension?
pub fn ult_const_dim(r: &OmegaSet, i: &OmegaSet, h: u64) -> Verdict3 {
    if r.finite_certain() == Some(true) {
        return Verdict3::with_witness(Truth::False, h, Witness::Note("R finite".into()));
    }
    if disjoint_certain(r, i, h) == Some(false) {
        return Verdict3::with_witness(Truth::False, h, Witness::Note("overlap".into()));
    }
    // structural case: Σ-positions vs ♭-positions of one padded word
    if let (Some((wr, rflat)), Some((wi, iflat))) =
        (padded_letter_roles(r), padded_letter_roles(i))
    {
        if wr == wi && !rflat && iflat {
            return match wr.gen {
                // gaps are single ♭-runs of length f(n): dimension is
                // ultimately 1 and coordinates grow with f
                GapGen::Identity | GapGen::Pow2 => Verdict3::with_witness(
                    Truth::True,
                    h,
                    Witness::Note("padding structure".into()),
                ),
                // a constant positive gap repeats one coordinate forever
                GapGen::Constant(k) if k >= 1 => Verdict3::with_witness(
                    Truth::False,
                    h,
                    Witness::Note(format!("coordinate {k} recurs")),
                ),
                // no ♭ at all: every vector is empty, the dimension is
                // constantly 0 and no value ever occurs
                GapGen::Constant(_) => Verdict3::with_witness(
                    Truth::True,
                    h,
                    Witness::Note("empty vectors".into()),
                ),
            };
        }
    }
    if r.is_lasso() && i.is_lasso() {
        if disjoint_certain(r, i, h) != Some(true) {
            return Verdict3::unknown(h);
        }
        // beyond the joint preperiod the decoded vectors repeat
        let (lr, pr) = r.lasso_shape().unwrap();
        let (li, pi) = i.lasso_shape().unwrap();
        let l = lr.max(li);
        let p = num_lcm(pr.len() as u64, pi.len() as u64);
        let span = l + 4 * p + 4;
        match decode_vecseq(r, i, span) {
            Ok(vs) => {
                // drop vectors that may straddle the preperiod
                let cycle: Vec<&Vec<u64>> = vs
                    .vectors
                    .iter()
                    .skip_while(|_| false)
                    .skip(vs.vectors.len() / 2)
                    .collect();
                if cycle.is_empty() {
                    return Verdict3::unknown(h);
                }
                if cycle.iter().all(|v| v.is_empty()) {
                    return Verdict3::with_witness(
                        Truth::True,
                        h,
                        Witness::Note("ultimately empty vectors".into()),
                    );
                }
                let recur = cycle.iter().flat_map(|v| v.iter()).next().copied();
                Verdict3::with_witness(
                    Truth::False,
                    h,
                    Witness::Note(format!(
                        "coordinate {} recurs under the periodic tail",
                        recur.unwrap_or(0)
                    )),
                )
            }
            Err(_) => Verdict3::with_witness(Truth::False, h, Witness::Note("undefined".into())),
        }
    } else {
        Verdict3::unknown(h)
    }
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

/// Is `y` (a set of positions of the padded word) ultimately periodic
/// when the ♭-positions are ignored? False as soon as `y` contains a
/// ♭-position.
pub fn check_up_ignoring_flats(word: &PaddedWord, y: &OmegaSet, h: u64) -> Verdict3 {
    let lim = y.determined_to(h);
    for n in 0..lim {
        if y.member(n) == Some(true) && word.letter_at(n) == FLAT {
            return Verdict3::with_witness(Truth::False, h, Witness::Position(n));
        }
    }
    // the pullback is explicit for images of the padding map
    if let Tail::Procedural(Generator::PaddedImage { word: w, base }) = y.tail() {
        if w == word {
            if base.is_lasso() {
                return Verdict3::with_witness(
                    Truth::True,
                    h,
                    Witness::Note("lasso pullback".into()),
                );
            }
            if base.gap_class() == Asym::Unbounded && base.finite_certain() == Some(false) {
                // unbounded gaps defeat every candidate period
                return Verdict3::with_witness(
                    Truth::False,
                    h,
                    Witness::Note("unbounded pullback gaps".into()),
                );
            }
            return Verdict3::unknown(h);
        }
    }
    if y.finite_certain() == Some(true) {
        return Verdict3::with_witness(Truth::True, h, Witness::Note("finite".into()));
    }
    Verdict3::unknown(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_examples() {
        let (out, flag) = project(&['a', '#', '#', 'b', '#', 'a']);
        assert_eq!(out, vec!['a', 'b', 'a']);
        assert!(!flag);
        let (out, flag) = project(&['a', 'b', '#']);
        assert_eq!(out, vec!['a', 'b']);
        assert!(flag);
    }

    #[test]
    fn project_after_pad_is_identity() {
        for gen in [GapGen::Constant(0), GapGen::Constant(3), GapGen::Identity, GapGen::Pow2] {
            let w = LassoWord::new("ab", "cab");
            let (_, prefix) = pad_word(&w, gen, 200).unwrap();
            let (projected, _) = project(&prefix);
            let expect = w.prefix(projected.len() as u64);
            assert_eq!(projected, expect, "gen {gen:?}");
        }
    }

    #[test]
    fn pad_rejects_flat_in_alphabet() {
        let w = LassoWord::new("a#", "b");
        assert!(pad_word(&w, GapGen::Identity, 10).is_err());
    }

    #[test]
    fn ult_const_dim_on_padding_structure() {
        let w = PaddedWord::new(LassoWord::new("", "a"), GapGen::Identity).unwrap();
        let r = sigma_positions(&w);
        let i = flat_positions(&w);
        assert!(ult_const_dim(&r, &i, 1 << 12).is_true());
        let w2 = PaddedWord::new(LassoWord::new("ab", "ba"), GapGen::Pow2).unwrap();
        assert!(ult_const_dim(&sigma_positions(&w2), &flat_positions(&w2), 1 << 12).is_true());
        let w3 = PaddedWord::new(LassoWord::new("", "ab"), GapGen::Constant(2)).unwrap();
        assert!(ult_const_dim(&sigma_positions(&w3), &flat_positions(&w3), 1 << 12).is_false());
    }

    #[test]
    fn ult_const_dim_on_lasso_pairs() {
        // bounded coordinates recur, so tending to infinity fails
        let r = OmegaSet::arithmetic(0, 6);
        let i = OmegaSet::arithmetic(2, 6);
        assert!(ult_const_dim(&r, &i, 256).is_false());
        // untagged prefix data decides nothing
        let u = OmegaSet::prefix_only(vec![true, false, true, false]);
        assert_eq!(ult_const_dim(&u, &OmegaSet::empty(), 16).truth, Truth::Unknown);
    }

    #[test]
    fn up_ignoring_flats_verdicts() {
        let w = PaddedWord::new(LassoWord::new("", "a"), GapGen::Identity).unwrap();
        // image of a periodic set of letter indices
        let periodic = OmegaSet::arithmetic(0, 2);
        let y = padded_image(&w, &periodic);
        assert!(check_up_ignoring_flats(&w, &y, 1 << 10).is_true());
        // image of the powers of two
        let pow2 = OmegaSet::procedural(Generator::Pow2);
        let y = padded_image(&w, &pow2);
        assert!(check_up_ignoring_flats(&w, &y, 1 << 10).is_false());
        // a set touching a ♭ position
        let bad = OmegaSet::finite(&[2]);
        assert_eq!(w.letter_at(2), FLAT);
        assert!(check_up_ignoring_flats(&w, &bad, 64).is_false());
    }
}

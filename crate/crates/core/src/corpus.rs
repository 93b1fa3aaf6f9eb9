//! Seeded, reproducible corpora: random formulas per dialect, random
//! finitely represented sets and words, and the parameterized
//! vector-sequence families used by the oracle suites.

use crate::eval::words::LassoWord;
use crate::formula::Formula;
use crate::vecseq::{Generator, OmegaSet, VectorSeqPrefix};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Which extension constructs the sampler may (and must) produce.
#[derive(Debug, Clone, Copy, Default)]
pub struct FeatureMix {
    pub quant_u: bool,
    pub w: bool,
    pub u2: bool,
    pub quant_p: bool,
    pub macro_ucd: bool,
}

impl FeatureMix {
    pub fn mso() -> Self {
        FeatureMix::default()
    }
    pub fn mso_u() -> Self {
        FeatureMix { quant_u: true, ..Default::default() }
    }
    pub fn mso_w() -> Self {
        FeatureMix { w: true, ..Default::default() }
    }
    pub fn mso_u2() -> Self {
        FeatureMix { u2: true, ..Default::default() }
    }
    pub fn mso_p() -> Self {
        FeatureMix { quant_p: true, ..Default::default() }
    }
}

/// Random well-formed formulas over a fixed letter alphabet with a small
/// pool of free variables.
pub struct FormulaSampler {
    pub letters: Vec<char>,
    counter: u32,
}

impl FormulaSampler {
    pub fn new(letters: &[char]) -> Self {
        FormulaSampler { letters: letters.to_vec(), counter: 0 }
    }

    /// Samples a formula containing at least one of each enabled
    /// extension construct. Free variables come from {x, y} and
    /// {X, Y, R, I}.
    pub fn sample(&mut self, rng: &mut ChaCha8Rng, mix: FeatureMix, depth: u32) -> Formula {
        self.counter = 0;
        let mut s1 = vec!["x".to_string(), "y".to_string()];
        let mut s2 = vec!["X".to_string(), "Y".to_string(), "R".to_string(), "I".to_string()];
        let mut f = self.gen(rng, mix, depth, &mut s1, &mut s2);
        // guarantee the enabled constructs occur
        let feats = f.features();
        if mix.quant_u && !feats.quant_u {
            let v = self.fresh2();
            f = Formula::and(
                Formula::quant_u(v.clone(), Formula::member("x", v)),
                f,
            );
        }
        if mix.w && !feats.w {
            f = Formula::and(Formula::W("X".into()), f);
        }
        if mix.u2 && !feats.u2 {
            f = Formula::and(Formula::U2("R".into(), "I".into()), f);
        }
        if mix.quant_p && !feats.quant_p {
            let v = self.fresh2();
            f = Formula::and(
                Formula::quant_p(v.clone(), Formula::member("x", v)),
                f,
            );
        }
        f
    }

    /// Samples a closed formula (binds x, X around the body).
    pub fn sample_sentence(&mut self, rng: &mut ChaCha8Rng, mix: FeatureMix, depth: u32) -> Formula {
        let f = self.sample(rng, mix, depth);
        let (fo, so) = crate::formula::free_variables(&f);
        let mut out = f;
        for v in fo {
            out = Formula::ex1(v, out);
        }
        for v in so {
            out = Formula::ex2(v, out);
        }
        out
    }

    fn fresh1(&mut self) -> String {
        self.counter += 1;
        format!("p{}", self.counter)
    }

    fn fresh2(&mut self) -> String {
        self.counter += 1;
        format!("Q{}", self.counter)
    }

    fn gen(
        &mut self,
        rng: &mut ChaCha8Rng,
        mix: FeatureMix,
        depth: u32,
        s1: &mut Vec<String>,
        s2: &mut Vec<String>,
    ) -> Formula {
        if depth == 0 {
            return self.atom(rng, mix, s1, s2);
        }
        match rng.gen_range(0..12u32) {
            0 => Formula::not(self.gen(rng, mix, depth - 1, s1, s2)),
            1 => Formula::and(
                self.gen(rng, mix, depth - 1, s1, s2),
                self.gen(rng, mix, depth - 1, s1, s2),
            ),
            2 => Formula::or(
                self.gen(rng, mix, depth - 1, s1, s2),
                self.gen(rng, mix, depth - 1, s1, s2),
            ),
            3 => Formula::implies(
                self.gen(rng, mix, depth - 1, s1, s2),
                self.gen(rng, mix, depth - 1, s1, s2),
            ),
            4 => Formula::iff(
                self.gen(rng, mix, depth - 1, s1, s2),
                self.gen(rng, mix, depth - 1, s1, s2),
            ),
            5 | 6 => {
                let v = self.fresh1();
                s1.push(v.clone());
                let body = self.gen(rng, mix, depth - 1, s1, s2);
                s1.pop();
                if rng.gen_bool(0.5) {
                    Formula::ex1(v, body)
                } else {
                    Formula::all1(v, body)
                }
            }
            7 | 8 => {
                let v = self.fresh2();
                s2.push(v.clone());
                let body = self.gen(rng, mix, depth - 1, s1, s2);
                s2.pop();
                if mix.quant_u && rng.gen_bool(0.33) {
                    Formula::quant_u(v, body)
                } else if mix.quant_p && rng.gen_bool(0.33) {
                    Formula::quant_p(v, body)
                } else if rng.gen_bool(0.5) {
                    Formula::ex2(v, body)
                } else {
                    Formula::all2(v, body)
                }
            }
            _ => self.atom(rng, mix, s1, s2),
        }
    }

    fn atom(
        &mut self,
        rng: &mut ChaCha8Rng,
        mix: FeatureMix,
        s1: &[String],
        s2: &[String],
    ) -> Formula {
        let v1 = |rng: &mut ChaCha8Rng| s1.choose(rng).unwrap().clone();
        let v2 = |rng: &mut ChaCha8Rng| s2.choose(rng).unwrap().clone();
        let mut options: Vec<u32> = vec![0, 1, 2, 3, 4];
        if mix.w {
            options.push(5);
        }
        if mix.u2 {
            options.push(6);
        }
        if mix.macro_ucd {
            options.push(7);
        }
        match *options.choose(rng).unwrap() {
            0 => Formula::Letter(*self.letters.choose(rng).unwrap(), v1(rng)),
            1 => Formula::Less(v1(rng), v1(rng)),
            2 => Formula::Equal(v1(rng), v1(rng)),
            3 => Formula::Succ(v1(rng), v1(rng)),
            4 => Formula::Membership(v1(rng), v2(rng)),
            5 => Formula::W(v2(rng)),
            6 => {
                let a = v2(rng);
                let mut b = v2(rng);
                if a == b {
                    b = s2
                        .iter()
                        .find(|s| **s != a)
                        .cloned()
                        .unwrap_or_else(|| format!("{a}2"));
                }
                Formula::U2(a, b)
            }
            _ => {
                let a = v2(rng);
                let mut b = v2(rng);
                if a == b {
                    b = s2
                        .iter()
                        .find(|s| **s != a)
                        .cloned()
                        .unwrap_or_else(|| format!("{a}2"));
                }
                Formula::Macro(crate::formula::ULT_CONST_DIM.into(), vec![a, b])
            }
        }
    }
}

/// Random lasso set with bounded prefix and period.
pub fn random_lasso_set(rng: &mut ChaCha8Rng, max_prefix: usize, max_period: usize) -> OmegaSet {
    let plen = rng.gen_range(0..=max_prefix);
    let period = rng.gen_range(1..=max_period);
    let prefix: Vec<bool> = (0..plen).map(|_| rng.gen_bool(0.4)).collect();
    let pattern: Vec<bool> = (0..period).map(|_| rng.gen_bool(0.4)).collect();
    OmegaSet::lasso(prefix, pattern)
}

/// Random finite set within [0, top).
pub fn random_finite_set(rng: &mut ChaCha8Rng, top: u64, density: f64) -> OmegaSet {
    let members: Vec<u64> = (0..top).filter(|_| rng.gen_bool(density)).collect();
    OmegaSet::finite(&members)
}

/// A mixed palette of sets for assignments.
pub fn random_omega_set(rng: &mut ChaCha8Rng, max_period: usize) -> OmegaSet {
    match rng.gen_range(0..8u32) {
        0 => OmegaSet::procedural(Generator::Pow2),
        1 => OmegaSet::procedural(Generator::Squares),
        2 => OmegaSet::procedural(Generator::Multiples { k: rng.gen_range(2..=12) }),
        3 => OmegaSet::procedural(Generator::Triangular),
        4 => random_finite_set(rng, 48, 0.25),
        _ => random_lasso_set(rng, 6, max_period),
    }
}

pub fn random_lasso_word(
    rng: &mut ChaCha8Rng,
    letters: &[char],
    max_stem: usize,
    max_loop: usize,
) -> LassoWord {
    let stem_len = rng.gen_range(0..=max_stem);
    let loop_len = rng.gen_range(1..=max_loop);
    let pick = |rng: &mut ChaCha8Rng| *letters.choose(rng).unwrap();
    let stem: String = (0..stem_len).map(|_| pick(rng)).collect();
    let looping: String = (0..loop_len).map(|_| pick(rng)).collect();
    LassoWord::new(&stem, &looping).with_alphabet(letters.iter().copied())
}

/// Disjoint (R, I) prefix pair over [0, h): every position lands in R,
/// in I, or in neither.
pub fn random_disjoint_pair(rng: &mut ChaCha8Rng, h: u64) -> (OmegaSet, OmegaSet) {
    let mut r = vec![];
    let mut i = vec![];
    for n in 0..h {
        match rng.gen_range(0..5u32) {
            0 => r.push(n),
            1 | 2 => i.push(n),
            _ => {}
        }
    }
    (OmegaSet::finite(&r), OmegaSet::finite(&i))
}

/// Parameterized vector-sequence families with known dimension behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VecFamily {
    /// bounded dimension, coordinates growing without bound
    BoundedDimGrowingCoords,
    /// dimension grows linearly, coordinates bounded
    GrowingDimBoundedCoords,
    /// growing dimension with a mix of bounded blocks and growing
    /// coordinates
    Mixed,
}

/// Returns a prefix together with the ground truth "dimension sequence is
/// unbounded".
pub fn vecseq_family(
    rng: &mut ChaCha8Rng,
    family: VecFamily,
    len: usize,
) -> (VectorSeqPrefix, bool) {
    let vectors: Vec<Vec<u64>> = match family {
        VecFamily::BoundedDimGrowingCoords => {
            let d = rng.gen_range(1..=3usize);
            let step = rng.gen_range(1..=4u64);
            (0..len)
                .map(|i| (0..d).map(|j| (i as u64 + 1) * step + j as u64).collect())
                .collect()
        }
        VecFamily::GrowingDimBoundedCoords => {
            let bound = rng.gen_range(2..=5u64);
            (0..len)
                .map(|i| (0..=i).map(|_| rng.gen_range(1..=bound)).collect())
                .collect()
        }
        VecFamily::Mixed => {
            let bound = rng.gen_range(2..=4u64);
            (0..len)
                .map(|i| {
                    if i % 2 == 0 {
                        // growing-dimension spine with bounded block values
                        (0..=i).map(|_| rng.gen_range(1..=bound)).collect()
                    } else {
                        // noise vector with growing coordinates
                        vec![i as u64 + bound, i as u64 + 1]
                    }
                })
                .collect()
        }
    };
    let unbounded = !matches!(family, VecFamily::BoundedDimGrowingCoords);
    (VectorSeqPrefix::new(vectors), unbounded)
}

/// The worked vector-sequence arrays: γ has vectors (i+2, i+1, …, 1).
pub fn worked_gamma(len: usize) -> VectorSeqPrefix {
    VectorSeqPrefix::new((0..len as u64).map(|i| (1..=i + 2).rev().collect()).collect())
}

/// γ′ dominated by γ: (i+1, i, …, 1, 1).
pub fn worked_gamma_prime(len: usize) -> VectorSeqPrefix {
    VectorSeqPrefix::new(
        (0..len as u64)
            .map(|i| {
                let mut v: Vec<u64> = (1..=i + 1).rev().collect();
                v.push(1);
                v
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Dialect;

    #[test]
    fn sampler_produces_requested_dialects() {
        let mut rng = rng(7);
        let mut sampler = FormulaSampler::new(&['a', 'b']);
        for _ in 0..50 {
            let f = sampler.sample(&mut rng, FeatureMix::mso_w(), 3);
            assert_eq!(f.dialect(), Dialect::MsoW);
            let f = sampler.sample(&mut rng, FeatureMix::mso_u2(), 3);
            assert_eq!(f.dialect(), Dialect::MsoU2);
            let f = sampler.sample(&mut rng, FeatureMix::mso(), 3);
            assert_eq!(f.dialect(), Dialect::Mso);
            let f = sampler.sample(&mut rng, FeatureMix::mso_u(), 3);
            assert_eq!(f.dialect(), Dialect::MsoU);
            let f = sampler.sample(&mut rng, FeatureMix::mso_p(), 3);
            assert_eq!(f.dialect(), Dialect::MsoP);
        }
    }

    #[test]
    fn sampler_sentences_are_closed() {
        let mut rng = rng(11);
        let mut sampler = FormulaSampler::new(&['a', 'b']);
        for _ in 0..30 {
            let f = sampler.sample_sentence(&mut rng, FeatureMix::mso_p(), 3);
            assert!(f.is_sentence(), "{f}");
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let mut a = FormulaSampler::new(&['a', 'b']);
        let mut b = FormulaSampler::new(&['a', 'b']);
        let fa = a.sample(&mut rng(42), FeatureMix::mso_w(), 4);
        let fb = b.sample(&mut rng(42), FeatureMix::mso_w(), 4);
        assert_eq!(fa, fb);
    }

    #[test]
    fn families_have_declared_dims() {
        let mut r = rng(5);
        let (v, unb) = vecseq_family(&mut r, VecFamily::GrowingDimBoundedCoords, 20);
        assert!(unb);
        assert_eq!(v.vectors[19].len(), 20);
        let (v, unb) = vecseq_family(&mut r, VecFamily::BoundedDimGrowingCoords, 20);
        assert!(!unb);
        assert!(v.vectors.iter().all(|t| t.len() <= 3));
    }

    #[test]
    fn worked_arrays_shape() {
        let g = worked_gamma(5);
        assert_eq!(g.vectors[0], vec![2, 1]);
        assert_eq!(g.vectors[4], vec![6, 5, 4, 3, 2, 1]);
        let gp = worked_gamma_prime(5);
        assert_eq!(gp.vectors[0], vec![1, 1]);
        assert!(crate::vecseq::dominates(&gp, &g).unwrap());
    }
}

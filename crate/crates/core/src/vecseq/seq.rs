//! Number/vector sequence prefixes decoded from pairs of sets, and the
//! combinatorial relations between vector sequences.
//!
//! Decoded prefixes contain exactly the entries fully determined at the
//! requested horizon, never a truncated guess: the trailing gap whose
//! right delimiter lies beyond the horizon is dropped.

use super::omega_set::{Generator, OmegaSet, Tail};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum VecseqError {
    #[error("encoding undefined: position {0} is in both sets")]
    EncodingUndefined(u64),
    #[error("zero coordinate at vector {0}")]
    ZeroCoordinate(usize),
    #[error("vector {0} has dimension < 2")]
    DimensionTooSmall(usize),
    #[error("prefix lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no admissible coordinate at index {0}")]
    NoAdmissibleCoordinate(usize),
}

/// Finite prefix of a number sequence: exactly the first fully determined
/// entries at `horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberSeqPrefix {
    pub values: Vec<u64>,
    pub horizon: u64,
}

/// Finite prefix of a vector sequence in (ℕ*)^ω. Tuples may be empty; all
/// coordinates of sequences decoded from sets are ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSeqPrefix {
    pub vectors: Vec<Vec<u64>>,
    pub horizon: u64,
}

impl VectorSeqPrefix {
    pub fn new(vectors: Vec<Vec<u64>>) -> Self {
        let horizon = vectors.len() as u64;
        VectorSeqPrefix { vectors, horizon }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn max_coord(&self) -> u64 {
        self.vectors.iter().flatten().copied().max().unwrap_or(0)
    }
}

impl NumberSeqPrefix {
    pub fn new(values: Vec<u64>) -> Self {
        let horizon = values.len() as u64;
        NumberSeqPrefix { values, horizon }
    }
}

fn scan_members(
    r: &OmegaSet,
    i: &OmegaSet,
    h: u64,
) -> Result<(Vec<u64>, Vec<u64>, u64), VecseqError> {
    let lim = r.determined_to(h).min(i.determined_to(h));
    let mut rs = vec![];
    let mut is = vec![];
    for n in 0..lim {
        let in_r = r.member(n) == Some(true);
        let in_i = i.member(n) == Some(true);
        if in_r && in_i {
            return Err(VecseqError::EncodingUndefined(n));
        }
        if in_r {
            rs.push(n);
        }
        if in_i {
            is.push(n);
        }
    }
    Ok((rs, is, lim))
}

/// Number sequence of Figure-1 style: the i-th value counts the members
/// of `i` strictly between the i-th and (i+1)-th members of `r`.
pub fn decode_numseq(r: &OmegaSet, i: &OmegaSet, h: u64) -> Result<NumberSeqPrefix, VecseqError> {
    let (rs, is, _) = scan_members(r, i, h)?;
    let mut values = vec![];
    for w in rs.windows(2) {
        let count = is.iter().filter(|&&x| x > w[0] && x < w[1]).count() as u64;
        values.push(count);
    }
    Ok(NumberSeqPrefix { values, horizon: h })
}

/// Vector sequence encoding: the i-th tuple lists the lengths of the
/// maximal intervals of `i` between consecutive members of `r`, in
/// position order. Gaps without members yield the empty tuple; zero is
/// never encoded.
pub fn decode_vecseq(r: &OmegaSet, i: &OmegaSet, h: u64) -> Result<VectorSeqPrefix, VecseqError> {
    let (rs, _, lim) = scan_members(r, i, h)?;
    let mut vectors = vec![];
    for w in rs.windows(2) {
        let mut vector = vec![];
        let mut run = 0u64;
        for n in w[0] + 1..w[1] {
            if n < lim && i.member(n) == Some(true) {
                run += 1;
            } else if run > 0 {
                vector.push(run);
                run = 0;
            }
        }
        if run > 0 {
            vector.push(run);
        }
        vectors.push(vector);
    }
    Ok(VectorSeqPrefix { vectors, horizon: h })
}

/// Pointwise tuple dimensions.
pub fn dims(v: &VectorSeqPrefix) -> NumberSeqPrefix {
    NumberSeqPrefix {
        values: v.vectors.iter().map(|t| t.len() as u64).collect(),
        horizon: v.horizon,
    }
}

// ----------------------------------------------------------------------
// Set transformations
// ----------------------------------------------------------------------

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Materialize a rule-defined set exactly when the inputs are lasso: the
/// rule must be local (membership at n determined by a window of radius
/// `margin` around n in the inputs).
fn exact_local(
    gen: &Generator,
    shapes: &[(u64, u64)], // (prefix len, pattern period) of each lasso input
    margin: u64,
) -> OmegaSet {
    let l = shapes.iter().map(|s| s.0).max().unwrap_or(0);
    let p = shapes.iter().fold(1u64, |acc, s| lcm(acc, s.1.max(1)));
    let p = lcm(p, 2); // keep parity-sensitive rules aligned
    let start = l + margin;
    let mut prefix = vec![];
    for n in 0..start {
        prefix.push(gen.member(n) == Some(true));
    }
    let pattern: Vec<bool> = (start..start + p)
        .map(|n| gen.member(n) == Some(true))
        .collect();
    OmegaSet::lasso(prefix, pattern)
}

fn lasso_shapes(sets: &[&OmegaSet]) -> Option<Vec<(u64, u64)>> {
    sets.iter()
        .map(|s| s.lasso_shape().map(|(l, pat)| (l, pat.len() as u64)))
        .collect()
}

/// Largest gap between consecutive members observed within one structural
/// window of a lasso set; `None` when the set is finite.
fn lasso_gap_bound(s: &OmegaSet) -> Option<u64> {
    if s.finite_certain() == Some(true) {
        return None;
    }
    let (l, pat) = s.lasso_shape()?;
    let span = l + 3 * pat.len() as u64 + 2;
    let gaps = s.gaps_below(span);
    gaps.iter().copied().max().or(Some(span))
}

/// Removes every even member that has a neighbour at distance one, so all
/// remaining members are isolated. Lasso inputs give exact lasso outputs;
/// procedural inputs are wrapped.
pub fn isolate(i: &OmegaSet) -> OmegaSet {
    let gen = Generator::Isolated { base: Box::new(i.clone()) };
    match i.tail() {
        Tail::Finite | Tail::Periodic(_) => {
            let shapes = lasso_shapes(&[i]).unwrap();
            exact_local(&gen, &shapes, 2)
        }
        Tail::Procedural(_) => OmegaSet::procedural(gen),
        Tail::Unknown => {
            let known = i.prefix_len();
            let mut bits = vec![];
            for n in 0..known {
                match gen.member(n) {
                    Some(b) => bits.push(b),
                    None => break,
                }
            }
            OmegaSet::prefix_only(bits)
        }
    }
}

/// Completion: J ⊇ I, and for consecutive members x < y of I with no
/// member of R in between, every position strictly between them except
/// y−1 is added. The result leaves the dimension sequence of ⟨R,·⟩
/// unchanged while forcing bounded holes inside gaps.
pub fn complete(r: &OmegaSet, i: &OmegaSet, h: u64) -> Result<OmegaSet, VecseqError> {
    // reject overlapping encodings on the determined range
    let lim = r.determined_to(h).min(i.determined_to(h));
    for n in 0..lim {
        if r.member(n) == Some(true) && i.member(n) == Some(true) {
            return Err(VecseqError::EncodingUndefined(n));
        }
    }
    let gen = Generator::Completed { r: Box::new(r.clone()), i: Box::new(i.clone()) };
    if r.is_lasso() && i.is_lasso() {
        if i.finite_certain() == Some(true) {
            let top = i.prefix_len() + 2;
            let bits: Vec<bool> = (0..top).map(|n| gen.member(n) == Some(true)).collect();
            let mut out = OmegaSet::prefix_only(bits);
            out = OmegaSet::finite(&out.members_below(top));
            return Ok(out);
        }
        let shapes = lasso_shapes(&[r, i]).unwrap();
        let margin = lasso_gap_bound(i).unwrap_or(2) + 2;
        return Ok(exact_local(&gen, &shapes, margin));
    }
    Ok(OmegaSet::procedural(gen))
}

/// All positions that are in `rp` or have no member of `ip` at distance
/// ≤ 1. Under the completion condition and bounded `ip` intervals, the
/// W predicate on this set captures unbounded interval counts per gap.
pub fn adjacency_set(rp: &OmegaSet, ip: &OmegaSet) -> OmegaSet {
    let gen = Generator::Adjacency { r: Box::new(rp.clone()), i: Box::new(ip.clone()) };
    if rp.is_lasso() && ip.is_lasso() {
        let shapes = lasso_shapes(&[rp, ip]).unwrap();
        return exact_local(&gen, &shapes, 2);
    }
    OmegaSet::procedural(gen)
}

// ----------------------------------------------------------------------
// Relations between vector-sequence prefixes
// ----------------------------------------------------------------------

/// Relations checked as witness embeddings on prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqRelation {
    /// a is obtained from b by dropping whole vectors
    Subsequence,
    /// a keeps ≥ 1 coordinate of every vector of b, in order
    Extraction,
    /// extraction keeping a contiguous block per vector
    IntervalClosedExtraction,
    /// extraction with exactly one coordinate per vector
    OneExtraction,
    /// extraction dropping ≥ 1 coordinate from every vector
    StrictExtraction,
    /// extraction of a subsequence
    SubExtraction,
}

/// Index map and per-vector coordinate selections proving a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationWitness {
    pub index_map: Vec<usize>,
    pub coord_choices: Vec<Vec<usize>>,
}

fn subseq_embedding(av: &[u64], bv: &[u64]) -> Option<Vec<usize>> {
    let mut out = vec![];
    let mut j = 0;
    for &x in av {
        while j < bv.len() && bv[j] != x {
            j += 1;
        }
        if j == bv.len() {
            return None;
        }
        out.push(j);
        j += 1;
    }
    Some(out)
}

fn window_embedding(av: &[u64], bv: &[u64]) -> Option<Vec<usize>> {
    if av.is_empty() || av.len() > bv.len() {
        return None;
    }
    (0..=bv.len() - av.len())
        .find(|&s| bv[s..s + av.len()] == *av)
        .map(|s| (s..s + av.len()).collect())
}

/// Checks whether `a` stands in the given relation to `b` on the compared
/// prefixes, returning the witness when it does.
pub fn relation_witness(
    a: &VectorSeqPrefix,
    b: &VectorSeqPrefix,
    rel: SeqRelation,
) -> Option<RelationWitness> {
    match rel {
        SeqRelation::Subsequence => {
            let mut index_map = vec![];
            let mut j = 0;
            for av in &a.vectors {
                while j < b.vectors.len() && b.vectors[j] != *av {
                    j += 1;
                }
                if j == b.vectors.len() {
                    return None;
                }
                index_map.push(j);
                j += 1;
            }
            let coord_choices = a
                .vectors
                .iter()
                .map(|v| (0..v.len()).collect())
                .collect();
            Some(RelationWitness { index_map, coord_choices })
        }
        SeqRelation::SubExtraction => {
            let mut index_map = vec![];
            let mut coord_choices = vec![];
            let mut j = 0;
            for av in &a.vectors {
                let found = loop {
                    if j == b.vectors.len() {
                        return None;
                    }
                    if !av.is_empty() {
                        if let Some(sel) = subseq_embedding(av, &b.vectors[j]) {
                            break sel;
                        }
                    }
                    j += 1;
                };
                index_map.push(j);
                coord_choices.push(found);
                j += 1;
            }
            Some(RelationWitness { index_map, coord_choices })
        }
        _ => {
            let n = a.len().min(b.len());
            let mut coord_choices = vec![];
            for i in 0..n {
                let (av, bv) = (&a.vectors[i], &b.vectors[i]);
                if av.is_empty() {
                    return None;
                }
                let sel = match rel {
                    SeqRelation::Extraction => subseq_embedding(av, bv)?,
                    SeqRelation::IntervalClosedExtraction => window_embedding(av, bv)?,
                    SeqRelation::OneExtraction => {
                        if av.len() != 1 {
                            return None;
                        }
                        subseq_embedding(av, bv)?
                    }
                    SeqRelation::StrictExtraction => {
                        if av.len() >= bv.len() {
                            return None;
                        }
                        subseq_embedding(av, bv)?
                    }
                    _ => unreachable!(),
                };
                coord_choices.push(sel);
            }
            Some(RelationWitness { index_map: (0..n).collect(), coord_choices })
        }
    }
}

pub fn relation_check(a: &VectorSeqPrefix, b: &VectorSeqPrefix, rel: SeqRelation) -> bool {
    relation_witness(a, b, rel).is_some()
}

/// a ≤ b: pointwise equal dimensions and coordinatewise a ≤ b, all
/// coordinates positive.
pub fn dominates(a: &VectorSeqPrefix, b: &VectorSeqPrefix) -> Result<bool, VecseqError> {
    let n = a.len().min(b.len());
    for i in 0..n {
        if a.vectors[i].contains(&0) || b.vectors[i].contains(&0) {
            return Err(VecseqError::ZeroCoordinate(i));
        }
        if a.vectors[i].len() != b.vectors[i].len() {
            return Ok(false);
        }
        if a.vectors[i].iter().zip(&b.vectors[i]).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Subsequence of `f` at the indices in `m`, truncated at the first index
/// whose membership is undetermined.
pub fn restrict(f: &NumberSeqPrefix, m: &OmegaSet) -> NumberSeqPrefix {
    let mut values = vec![];
    for (i, &v) in f.values.iter().enumerate() {
        match m.member(i as u64) {
            Some(true) => values.push(v),
            Some(false) => {}
            None => break,
        }
    }
    NumberSeqPrefix { values, horizon: f.horizon }
}

/// The dominated companion used to realize the asymptotic-mix property:
/// vector (a₁,…,a_k) becomes (min(a₁,1), min(a₂,2), …, min(a_{k−1},k−1)).
pub fn beta_prime(g: &VectorSeqPrefix) -> Result<VectorSeqPrefix, VecseqError> {
    let mut vectors = vec![];
    for (i, v) in g.vectors.iter().enumerate() {
        if v.len() < 2 {
            return Err(VecseqError::DimensionTooSmall(i));
        }
        if v.contains(&0) {
            return Err(VecseqError::ZeroCoordinate(i));
        }
        let out: Vec<u64> = v[..v.len() - 1]
            .iter()
            .enumerate()
            .map(|(j, &a)| a.min(j as u64 + 1))
            .collect();
        vectors.push(out);
    }
    Ok(VectorSeqPrefix { vectors, horizon: g.horizon })
}

/// Per index, the maximal coordinate of `bp`'s vector that is ≤ the
/// corresponding value of `g`.
pub fn match_one_extraction(
    bp: &VectorSeqPrefix,
    g: &NumberSeqPrefix,
) -> Result<NumberSeqPrefix, VecseqError> {
    if bp.len() != g.values.len() {
        return Err(VecseqError::LengthMismatch(bp.len(), g.values.len()));
    }
    let mut values = vec![];
    for (i, (v, &gi)) in bp.vectors.iter().zip(&g.values).enumerate() {
        let best = v.iter().copied().filter(|&c| c <= gi).max();
        match best {
            Some(b) => values.push(b),
            None => return Err(VecseqError::NoAdmissibleCoordinate(i)),
        }
    }
    Ok(NumberSeqPrefix { values, horizon: g.horizon })
}

/// Marking construction: coordinates ≤ `bound` are marked; each vector
/// keeps one longest block of consecutive marked coordinates (leftmost on
/// ties) and vectors without marked coordinates are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma32Witness {
    pub kept: Vec<usize>,
    /// coordinate range (start, len) kept in each kept vector
    pub blocks: Vec<(usize, usize)>,
    pub result: VectorSeqPrefix,
}

pub fn lemma32_witness(a: &VectorSeqPrefix, bound: u64) -> Option<Lemma32Witness> {
    let mut kept = vec![];
    let mut blocks = vec![];
    let mut vectors = vec![];
    for (i, v) in a.vectors.iter().enumerate() {
        let mut best: Option<(usize, usize)> = None;
        let mut start = None;
        for (j, &c) in v.iter().chain(std::iter::once(&(bound + 1))).enumerate() {
            if c <= bound {
                if start.is_none() {
                    start = Some(j);
                }
            } else if let Some(s) = start.take() {
                let len = j - s;
                if best.map_or(true, |(_, bl)| len > bl) {
                    best = Some((s, len));
                }
            }
        }
        if let Some((s, len)) = best {
            kept.push(i);
            blocks.push((s, len));
            vectors.push(v[s..s + len].to_vec());
        }
    }
    if kept.is_empty() {
        return None;
    }
    Some(Lemma32Witness {
        kept,
        blocks,
        result: VectorSeqPrefix { vectors, horizon: a.horizon },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vectors: &[&[u64]]) -> VectorSeqPrefix {
        VectorSeqPrefix::new(vectors.iter().map(|v| v.to_vec()).collect())
    }

    /// Brute-force recount of the Figure-1 encoding, independent of
    /// decode_numseq's member scan.
    fn numseq_oracle(r_members: &[u64], i_members: &[u64]) -> Vec<u64> {
        r_members
            .windows(2)
            .map(|w| i_members.iter().filter(|&&x| w[0] < x && x < w[1]).count() as u64)
            .collect()
    }

    #[test]
    fn decode_numseq_prefix_view() {
        let r = OmegaSet::finite(&[0, 3, 5, 9]);
        let i = OmegaSet::finite(&[1, 2, 4, 6, 7, 8]);
        let got = decode_numseq(&r, &i, 10).unwrap();
        assert_eq!(got.values, vec![2, 1, 3]);
        assert_eq!(got.values, numseq_oracle(&[0, 3, 5, 9], &[1, 2, 4, 6, 7, 8]));
    }

    #[test]
    fn decode_numseq_empty_i_is_zero() {
        let r = OmegaSet::arithmetic(0, 3);
        let got = decode_numseq(&r, &OmegaSet::empty(), 30).unwrap();
        assert!(got.values.iter().all(|&v| v == 0));
        assert_eq!(got.values.len(), 9);
    }

    #[test]
    fn decode_numseq_pow2_vs_odds() {
        let r = OmegaSet::procedural(Generator::Pow2);
        let i = OmegaSet::arithmetic(3, 2); // odd numbers ≥ 3
        let got = decode_numseq(&r, &i, 1 << 10).unwrap();
        // odds in (2^n, 2^{n+1}) count 2^{n-1} for n ≥ 1; first gap (1,2) holds none
        assert_eq!(got.values, vec![0, 1, 2, 4, 8, 16, 32, 64, 128]);
    }

    #[test]
    fn decode_undefined_on_overlap() {
        let r = OmegaSet::finite(&[1, 4]);
        let i = OmegaSet::finite(&[4, 5]);
        assert_eq!(
            decode_numseq(&r, &i, 10),
            Err(VecseqError::EncodingUndefined(4))
        );
    }

    #[test]
    fn decode_vecseq_interval_lengths() {
        let r = OmegaSet::finite(&[0, 10]);
        let i = OmegaSet::finite(&[1, 2, 3, 5, 6, 9]);
        let got = decode_vecseq(&r, &i, 11).unwrap();
        assert_eq!(got.vectors, vec![vec![3, 2, 1]]);
    }

    #[test]
    fn decode_vecseq_empty_gap_gives_empty_tuple() {
        let r = OmegaSet::finite(&[0, 3, 6]);
        let i = OmegaSet::finite(&[4]);
        let got = decode_vecseq(&r, &i, 7).unwrap();
        assert_eq!(got.vectors, vec![vec![], vec![1]]);
    }

    #[test]
    fn coordinate_sums_match_numseq() {
        // property oracle over a deterministic family of prefixes
        for seed in 0u64..20 {
            let mut rb = vec![];
            let mut ib = vec![];
            let mut x = seed * 37 + 11;
            for n in 0..200u64 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                match (x >> 33) % 4 {
                    0 => rb.push(n),
                    1 | 2 => ib.push(n),
                    _ => {}
                }
            }
            let r = OmegaSet::finite(&rb);
            let i = OmegaSet::finite(&ib);
            let ns = decode_numseq(&r, &i, 200).unwrap();
            let vs = decode_vecseq(&r, &i, 200).unwrap();
            let sums: Vec<u64> = vs.vectors.iter().map(|v| v.iter().sum()).collect();
            assert_eq!(ns.values, sums, "seed {seed}");
        }
    }

    #[test]
    fn dims_examples() {
        let v = vs(&[&[2, 1], &[3, 2, 1]]);
        assert_eq!(dims(&v).values, vec![2, 3]);
        assert_eq!(dims(&vs(&[&[]])).values, vec![0]);
    }

    const GAMMA: [&[u64]; 5] = [
        &[2, 1],
        &[3, 2, 1],
        &[4, 3, 2, 1],
        &[5, 4, 3, 2, 1],
        &[6, 5, 4, 3, 2, 1],
    ];
    const BETA: [&[u64]; 5] = [
        &[2],
        &[3, 2],
        &[4, 3, 2],
        &[5, 4, 3, 2],
        &[6, 5, 4, 3, 2],
    ];
    const GAMMA_PRIME: [&[u64]; 5] = [
        &[1, 1],
        &[2, 1, 1],
        &[3, 2, 1, 1],
        &[4, 3, 2, 1, 1],
        &[5, 4, 3, 2, 1, 1],
    ];

    #[test]
    fn relations_on_worked_arrays() {
        let gamma = vs(&GAMMA);
        let beta = vs(&BETA);
        assert!(relation_check(&beta, &gamma, SeqRelation::StrictExtraction));
        assert!(relation_check(&gamma, &gamma, SeqRelation::Extraction));
        assert!(relation_check(&beta, &gamma, SeqRelation::IntervalClosedExtraction));
        let a = vs(&[&[1], &[1, 2]]);
        let b = vs(&[&[2, 1], &[3, 2, 1]]);
        assert!(!relation_check(&a, &b, SeqRelation::OneExtraction));
    }

    #[test]
    fn subsequence_and_subextraction() {
        let b = vs(&[&[1], &[2, 2], &[3], &[4, 1]]);
        let a = vs(&[&[1], &[3]]);
        assert!(relation_check(&a, &b, SeqRelation::Subsequence));
        let c = vs(&[&[2], &[1]]);
        assert!(relation_check(&c, &b, SeqRelation::SubExtraction));
        assert!(!relation_check(&c, &b, SeqRelation::Subsequence));
    }

    #[test]
    fn domination_on_worked_arrays() {
        let gamma = vs(&GAMMA);
        let gp = vs(&GAMMA_PRIME);
        assert!(dominates(&gp, &gamma).unwrap());
        assert!(dominates(&gamma, &gamma).unwrap());
        let short = vs(&[&[1], &[1]]);
        assert!(!dominates(&short, &gamma).unwrap());
        let zero = vs(&[&[0, 1]]);
        assert!(dominates(&zero, &gamma).is_err());
    }

    #[test]
    fn restrict_examples() {
        let f = NumberSeqPrefix::new(vec![1, 1, 3, 1, 5, 1, 7]);
        let evens = OmegaSet::arithmetic(0, 2);
        assert_eq!(restrict(&f, &evens).values, vec![1, 3, 5, 7]);
        assert_eq!(restrict(&f, &OmegaSet::full()).values, f.values);
        // restrict composes as intersection + reindexing
        let odds = OmegaSet::arithmetic(1, 2);
        let first = restrict(&f, &evens);
        let second = restrict(&first, &odds);
        // indices 1,3 of the even-restricted = original indices 2, 6
        assert_eq!(second.values, vec![3, 7]);
    }

    #[test]
    fn beta_prime_reproduces_worked_array() {
        let gamma = vs(&GAMMA);
        let bp = beta_prime(&gamma).unwrap();
        assert_eq!(
            bp.vectors,
            vec![
                vec![1],
                vec![1, 2],
                vec![1, 2, 2],
                vec![1, 2, 3, 2],
                vec![1, 2, 3, 3, 2],
            ]
        );
        assert_eq!(beta_prime(&vs(&[&[1, 1]])).unwrap().vectors, vec![vec![1]]);
        assert!(beta_prime(&vs(&[&[3]])).is_err());
        // dominated by the drop-last extraction of the input
        let dropped = VectorSeqPrefix::new(
            GAMMA.iter().map(|v| v[..v.len() - 1].to_vec()).collect(),
        );
        assert!(dominates(&bp, &dropped).unwrap());
    }

    #[test]
    fn match_one_extraction_worked_array() {
        let bp = vs(&[
            &[1],
            &[1, 2],
            &[1, 2, 2],
            &[1, 2, 3, 2],
            &[1, 2, 3, 3, 2],
        ]);
        let g = NumberSeqPrefix::new(vec![1, 2, 1, 4, 1]);
        let got = match_one_extraction(&bp, &g).unwrap();
        assert_eq!(got.values, vec![1, 2, 1, 3, 1]);
        // pointwise ≤ g, and each value occurs in the vector
        for (i, &v) in got.values.iter().enumerate() {
            assert!(v <= g.values[i]);
            assert!(bp.vectors[i].contains(&v));
        }
        // saturated when g exceeds all coordinates
        let big = NumberSeqPrefix::new(vec![9; 5]);
        assert_eq!(
            match_one_extraction(&bp, &big).unwrap().values,
            vec![1, 2, 2, 3, 3]
        );
    }

    #[test]
    fn lemma32_marking() {
        let a = vs(&[&[7, 1, 1, 1, 9, 1, 1]]);
        let w = lemma32_witness(&a, 3).unwrap();
        assert_eq!(w.result.vectors, vec![vec![1, 1, 1]]);
        assert_eq!(w.blocks, vec![(1, 3)]);
        // all coordinates above the bound: vector dropped
        let b = vs(&[&[9, 9], &[1, 9]]);
        let w = lemma32_witness(&b, 3).unwrap();
        assert_eq!(w.kept, vec![1]);
        assert!(lemma32_witness(&vs(&[&[9]]), 3).is_none());
        // witness is an interval-closed extraction of the kept subsequence
        let a = vs(&[&[5, 1, 2, 7], &[8, 8], &[2, 2, 9, 1]]);
        let w = lemma32_witness(&a, 2).unwrap();
        let kept_seq = VectorSeqPrefix::new(w.kept.iter().map(|&i| a.vectors[i].clone()).collect());
        assert!(relation_check(&w.result, &kept_seq, SeqRelation::IntervalClosedExtraction));
        assert!(w.result.max_coord() <= 2);
    }

    #[test]
    fn isolate_examples() {
        let i = OmegaSet::finite(&[4, 5, 6]);
        assert_eq!(isolate(&i).members_below(10), vec![5]);
        let odd_isolated = OmegaSet::finite(&[1, 5, 9]);
        assert_eq!(isolate(&odd_isolated).members_below(10), vec![1, 5, 9]);
        // lasso input gives exact lasso output
        let dense = OmegaSet::arithmetic(0, 1);
        let iso = isolate(&dense);
        assert!(iso.is_lasso());
        // all members isolated
        let ms = iso.members_below(50);
        for w in ms.windows(2) {
            assert!(w[1] - w[0] >= 2);
        }
    }

    #[test]
    fn isolate_density_floor() {
        // per maximal interval of length ℓ, at least ⌊ℓ/2⌋ (and ≥ 1)
        // members survive; evens with neighbours are the only casualties
        for start in 0u64..6 {
            for len in 1u64..12 {
                let members: Vec<u64> = (start..start + len).collect();
                let i = OmegaSet::finite(&members);
                let kept = isolate(&i).members_below(start + len + 2).len() as u64;
                assert!(kept >= (len / 2).max(1), "start {start} len {len} kept {kept}");
            }
        }
    }

    #[test]
    fn complete_fills_gaps_except_last() {
        let i = OmegaSet::finite(&[1, 5]);
        let j = complete(&OmegaSet::empty(), &i, 10).unwrap();
        assert_eq!(j.members_below(10), vec![1, 2, 3, 5]);
        // an R member in between suppresses the fill
        let r = OmegaSet::finite(&[3]);
        let j = complete(&r, &i, 10).unwrap();
        assert_eq!(j.members_below(10), vec![1, 5]);
    }

    #[test]
    fn complete_preserves_dims() {
        let r = OmegaSet::arithmetic(0, 10);
        let i = OmegaSet::lasso(vec![], {
            let mut p = vec![false; 10];
            for k in [2usize, 3, 6, 8] {
                p[k] = true;
            }
            p
        });
        let j = complete(&r, &i, 200).unwrap();
        let d1 = dims(&decode_vecseq(&r, &i, 200).unwrap());
        let d2 = dims(&decode_vecseq(&r, &j, 200).unwrap());
        assert_eq!(d1.values, d2.values);
        assert!(j.is_lasso());
    }

    #[test]
    fn adjacency_set_examples() {
        let rp = OmegaSet::finite(&[0, 5]);
        let x = adjacency_set(&rp, &OmegaSet::empty());
        assert_eq!(x.members_below(8), vec![0, 1, 2, 3, 4, 5, 6, 7]);
    }
}

//! Reproducible oracle suites: each runs a battery of derived checks
//! against brute-force recomputation on seeded corpora and reports
//! per-property pass counts.

use crate::corpus::{self, FeatureMix, FormulaSampler, VecFamily};
use crate::eval::{
    differential_check, differential_check_paired, eval, flat_positions, pad_word, project,
    sigma_positions, ult_const_dim, Assignment, BlocksWord, EvalConfig, GapGen, Instance,
    LassoWord, Mode, PaddedWord, Word,
};
use crate::formula::{free_variables, parse_formula, Dialect, Formula};
use crate::rewrite::{rewrite, size_bound, RewriteKind};
use crate::vecseq::{
    beta_prime, check_w, complete, decode_numseq, decode_vecseq, dims, dominates,
    isolate, lemma32_witness, match_one_extraction, relation_check, Generator, NumberSeqPrefix,
    OmegaSet, SeqRelation, VectorSeqPrefix,
};
use crate::verdict::Truth;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.ok() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "[{status}] {}: {} passed, {} failed",
                c.name, c.passed, c.failed
            ));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        let status = if self.ok() { "ok" } else { "FAIL" };
        out.push_str(&format!("suite {}: {status}\n", self.suite));
        out
    }
}

struct Tally {
    name: String,
    passed: usize,
    failed: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Tally {
        Tally { name: name.to_string(), passed: 0, failed: 0, detail: None }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn done(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.passed,
            failed: self.failed,
            detail: self.detail,
        }
    }
}

pub const SUITES: &[&str] = &["lemma21", "lemma22", "lemma32", "lemma34", "padding"];

pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    match name {
        "lemma21" => Some(lemma21_suite(seed)),
        "lemma22" => Some(lemma22_suite(seed)),
        "lemma32" => Some(lemma32_suite(seed, 200)),
        "lemma34" => Some(lemma34_suite(seed)),
        "padding" => Some(padding_suite(seed)),
        _ => None,
    }
}

// ----------------------------------------------------------------------
// shared helpers
// ----------------------------------------------------------------------

fn rewrite_contracts(
    tally: &mut Tally,
    rng: &mut ChaCha8Rng,
    mix: FeatureMix,
    kind: RewriteKind,
    gone: fn(&Formula) -> bool,
    count: usize,
) {
    let mut sampler = FormulaSampler::new(&['a', 'b', 'c']);
    for _ in 0..count {
        let f = if matches!(kind, RewriteKind::PToUPadded) {
            sampler.sample_sentence(rng, mix, 3)
        } else {
            sampler.sample(rng, mix, 3)
        };
        let (g, report) = match rewrite(&f, kind, &['a', 'b', 'c']) {
            Ok(r) => r,
            Err(e) => {
                tally.check(false, || format!("rewrite failed: {e} on {f}"));
                continue;
            }
        };
        let leftover = g.count_nodes(&|h| gone(h));
        let fv_ok = free_variables(&f) == free_variables(&g);
        let dialect_ok = matches!(
            (kind, g.dialect()),
            (RewriteKind::UToU2, Dialect::MsoU2 | Dialect::Mso)
                | (RewriteKind::U2ToU, Dialect::MsoU | Dialect::Mso)
                | (RewriteKind::WToU2, Dialect::MsoU2 | Dialect::Mso)
                | (RewriteKind::U2ToW, Dialect::MsoW | Dialect::Mso)
                | (RewriteKind::WToP, Dialect::MsoP | Dialect::Mso)
                | (RewriteKind::PToUPadded, Dialect::MsoU | Dialect::Mso)
                | (RewriteKind::UToW, Dialect::MsoW | Dialect::Mso)
                | (RewriteKind::WToU, Dialect::MsoU | Dialect::Mso)
        );
        let size_ok = report.nodes_after <= size_bound(kind) * report.nodes_before;
        tally.check(leftover == 0 && fv_ok && dialect_ok && size_ok, || {
            format!(
                "kind {kind:?}: leftover={leftover} fv_ok={fv_ok} dialect={} size {}->{}",
                g.dialect(),
                report.nodes_before,
                report.nodes_after
            )
        });
    }
}

/// Prefix-level growth demanding records proportional to the length, so
/// bounded families can never fire it.
fn strong_growth(values: &[u64]) -> bool {
    if values.len() < 8 {
        return false;
    }
    let recs = crate::vecseq::checks::records(values);
    recs.len() >= (values.len() / 4).max(3) && recs.last().unwrap().0 * 2 >= values.len()
}

// ----------------------------------------------------------------------
// lemma21: the U quantifier against the two-set predicate
// ----------------------------------------------------------------------

pub fn lemma21_suite(seed: u64) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut checks = vec![];

    let mut t = Tally::new("u_to_u2 contracts (dialect, free vars, no U left, size)");
    rewrite_contracts(
        &mut t,
        &mut rng,
        FeatureMix::mso_u(),
        RewriteKind::UToU2,
        |h| matches!(h, Formula::QuantU(..)),
        200,
    );
    checks.push(t.done());

    let mut t = Tally::new("u2_to_u contracts");
    rewrite_contracts(
        &mut t,
        &mut rng,
        FeatureMix::mso_u2(),
        RewriteKind::U2ToU,
        |h| matches!(h, Formula::U2(..)),
        200,
    );
    checks.push(t.done());

    // differential: the unbounded-a-blocks sentence, bounded evaluator
    let mut t = Tally::new("u_to_u2 and back: no contradiction on block-word corpus");
    let text = "U X. all1 x. all1 y. ((x in X & y in X & x < y) -> ~(ex1 z. (x < z & z < y & b(z))))";
    let f = parse_formula(text, &['a', 'b', 'c']).unwrap();
    let fwd = crate::rewrite::u_to_u2(&f).unwrap();
    let back = crate::rewrite::u2_to_u(&fwd).unwrap();
    let mut cfg = EvalConfig::new(1024, 16, 8, Mode::BoundedDomain);
    cfg.step_budget = 400_000;
    let mut instances = vec![];
    for growth in [GapGen::Identity, GapGen::Pow2] {
        instances.push(Instance {
            word: Word::Blocks(BlocksWord::new("ac", 'b', growth).unwrap()),
            env: Assignment::default(),
            label: format!("blocks-{growth:?}"),
        });
    }
    for _ in 0..8 {
        let w = corpus::random_lasso_word(&mut rng, &['a', 'b', 'c'], 3, 4);
        instances.push(Instance {
            word: Word::Lasso(w.clone()),
            env: Assignment::default(),
            label: format!("{w}"),
        });
    }
    for (g, label) in [(&fwd, "U->U2"), (&back, "U->U2->U")] {
        let report = differential_check(&f, g, &instances, &cfg).unwrap();
        t.check(report.ok(), || {
            format!("{label}: contradictions at {:?}", report.contradictions)
        });
    }
    checks.push(t.done());

    SuiteReport { suite: "lemma21".into(), checks }
}

// ----------------------------------------------------------------------
// lemma22: isolation and the W/U2 bridge
// ----------------------------------------------------------------------

pub fn lemma22_suite(seed: u64) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut checks = vec![];

    let mut t = Tally::new("coordinate sums equal the number sequence");
    let mut t2 = Tally::new("isolation: members isolated, floor(len/2) density, all-1 coords");
    for _ in 0..300 {
        let (r, i) = corpus::random_disjoint_pair(&mut rng, 300);
        let ns = decode_numseq(&r, &i, 300).unwrap();
        let vs = decode_vecseq(&r, &i, 300).unwrap();
        let sums: Vec<u64> = vs.vectors.iter().map(|v| v.iter().sum()).collect();
        t.check(ns.values == sums, || "sum mismatch".to_string());

        let iso = isolate(&i);
        let members = iso.members_below(301);
        let isolated = members.windows(2).all(|w| w[1] - w[0] >= 2);
        let density_ok = i.runs_below(301).iter().all(|&(start, len)| {
            let kept = members
                .iter()
                .filter(|&&m| m >= start && m < start + len)
                .count() as u64;
            kept >= (len / 2).max(1)
        });
        let vi = decode_vecseq(&r, &iso, 300);
        let coords_ok = match vi {
            Ok(vi) => vi.vectors.iter().flatten().all(|&c| c == 1),
            Err(_) => false,
        };
        t2.check(isolated && density_ok && coords_ok, || {
            format!("isolated={isolated} density={density_ok} coords={coords_ok}")
        });
    }
    checks.push(t.done());
    checks.push(t2.done());

    let mut t = Tally::new("w_to_u2 contracts");
    rewrite_contracts(
        &mut t,
        &mut rng,
        FeatureMix::mso_w(),
        RewriteKind::WToU2,
        |h| matches!(h, Formula::W(..)),
        200,
    );
    checks.push(t.done());

    let mut t = Tally::new("u2_to_w contracts");
    rewrite_contracts(
        &mut t,
        &mut rng,
        FeatureMix::mso_u2(),
        RewriteKind::U2ToW,
        |h| matches!(h, Formula::U2(..) | Formula::QuantU(..)),
        200,
    );
    checks.push(t.done());

    // semantic agreement of W(X) with its U2 rewrite on the three
    // introductory sets
    let mut t = Tally::new("w_to_u2 agrees with check_W on the worked sets");
    let f = parse_formula("W(X)", &[]).unwrap();
    let g = crate::rewrite::w_to_u2(&f).unwrap();
    let mut cfg = EvalConfig::new(1 << 13, 64, 64, Mode::ThreeValued);
    cfg.step_budget = 400_000;
    let word = Word::Lasso(LassoWord::new("", "a"));
    for (set, expect) in [
        (OmegaSet::procedural(Generator::Multiples { k: 10 }), Truth::False),
        (OmegaSet::procedural(Generator::Pow2), Truth::True),
        (OmegaSet::procedural(Generator::PiDigits), Truth::False),
    ] {
        let env = Assignment::default().bind_second("X", set.clone());
        let vf = eval(&f, &word, &env, &cfg).unwrap();
        let vg = eval(&g, &word, &env, &cfg).unwrap();
        t.check(vf.truth == expect, || format!("check_W({set}) = {vf}"));
        t.check(
            vg.truth != expect.not(),
            || format!("rewrite contradicts on {set}: {vg} vs {expect}"),
        );
    }
    checks.push(t.done());

    // u2_to_w never contradicts check_U2 on structured families
    let mut t = Tally::new("u2_to_w never contradicts check_U2");
    let f = parse_formula("U2(R, I)", &[]).unwrap();
    let g = crate::rewrite::u2_to_w(&f).unwrap();
    let mut cfg = EvalConfig::new(1 << 12, 64, 64, Mode::ThreeValued);
    cfg.step_budget = 400_000;
    for (r, i, label) in u2_instance_palette() {
        let env = Assignment::default()
            .bind_second("R", r.clone())
            .bind_second("I", i.clone());
        let vf = eval(&f, &word, &env, &cfg).unwrap();
        let vg = eval(&g, &word, &env, &cfg).unwrap();
        let contradiction = matches!(
            (vf.truth, vg.truth),
            (Truth::True, Truth::False) | (Truth::False, Truth::True)
        );
        t.check(!contradiction, || format!("{label}: {vf} vs {vg}"));
    }
    checks.push(t.done());

    SuiteReport { suite: "lemma22".into(), checks }
}

pub fn u2_instance_palette() -> Vec<(OmegaSet, OmegaSet, String)> {
    let mut out: Vec<(OmegaSet, OmegaSet)> = vec![
        (OmegaSet::procedural(Generator::Pow2), OmegaSet::arithmetic(3, 2)),
        (OmegaSet::procedural(Generator::Triangular), OmegaSet::arithmetic(2, 2)),
        (OmegaSet::arithmetic(0, 5), OmegaSet::arithmetic(2, 5)),
        (OmegaSet::arithmetic(0, 3), OmegaSet::arithmetic(1, 3)),
        (OmegaSet::finite(&[2, 5, 9]), OmegaSet::arithmetic(1, 4)),
        (OmegaSet::arithmetic(0, 4), OmegaSet::finite(&[1, 2, 5, 9, 13])),
        // overlapping: undefined encodings stay false
        (OmegaSet::arithmetic(0, 2), OmegaSet::arithmetic(0, 3)),
        (OmegaSet::procedural(Generator::Pow2), OmegaSet::arithmetic(1, 2)),
        (OmegaSet::empty(), OmegaSet::arithmetic(1, 2)),
        (OmegaSet::full(), OmegaSet::empty()),
    ];
    let blocks = Word::Blocks(BlocksWord::new("ac", 'b', GapGen::Identity).unwrap());
    out.push((
        OmegaSet::procedural(Generator::WordLetters {
            word: blocks.clone(),
            letters: ['b'].into(),
        }),
        OmegaSet::procedural(Generator::WordLetters { word: blocks, letters: ['a'].into() }),
    ));
    out.into_iter()
        .enumerate()
        .map(|(k, (r, i))| (r.clone(), i.clone(), format!("pair {k}: R={r} I={i}")))
        .collect()
}

// ----------------------------------------------------------------------
// lemma32: marking construction and the two-case characterization
// ----------------------------------------------------------------------

pub fn lemma32_suite(seed: u64, count: usize) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut checks = vec![];
    let mut coherence = Tally::new("dim-unbounded verdict coheres with case-(1)/(2) witnesses");
    let mut witness_ok = Tally::new("marking witness: interval-closed and bounded");
    let families = [
        VecFamily::BoundedDimGrowingCoords,
        VecFamily::GrowingDimBoundedCoords,
        VecFamily::Mixed,
    ];
    for n in 0..count {
        let family = families[n % families.len()];
        let (a, truly_unbounded) = corpus::vecseq_family(&mut rng, family, 32);
        // case (2): some bound yields an interval-closed witness with
        // growing dimension
        let mut case2 = false;
        let maxc = a.max_coord().min(16);
        for bound in 1..=maxc {
            if let Some(w) = lemma32_witness(&a, bound) {
                let kept_seq = VectorSeqPrefix::new(
                    w.kept.iter().map(|&i| a.vectors[i].clone()).collect(),
                );
                let rel_ok =
                    relation_check(&w.result, &kept_seq, SeqRelation::IntervalClosedExtraction);
                let bound_ok = w.result.max_coord() <= bound;
                witness_ok.check(rel_ok && bound_ok, || {
                    format!("family {family:?} bound {bound}: rel={rel_ok} bound={bound_ok}")
                });
                if strong_growth(&dims(&w.result).values) {
                    case2 = true;
                }
            }
        }
        // case (1): the sub-sequence of vectors whose minimum coordinate
        // strictly increases tends to infinity; check its dimension growth
        let mut best_min = 0u64;
        let mut kept: Vec<&Vec<u64>> = vec![];
        for v in &a.vectors {
            if let Some(&m) = v.iter().min() {
                if m > best_min {
                    best_min = m;
                    kept.push(v);
                }
            }
        }
        let case1 = kept.len() >= 8
            && strong_growth(&kept.iter().map(|v| v.len() as u64).collect::<Vec<_>>());
        let dims_grow = strong_growth(&dims(&a).values);
        // never contradict: a growth verdict needs a witness, a bounded
        // family must not produce one
        coherence.check(
            if truly_unbounded { dims_grow && (case1 || case2) } else { !case1 && !case2 },
            || {
                format!(
                    "family {family:?}: unbounded={truly_unbounded} dims_grow={dims_grow} case1={case1} case2={case2}"
                )
            },
        );
    }
    checks.push(coherence.done());
    checks.push(witness_ok.done());
    SuiteReport { suite: "lemma32".into(), checks }
}

// ----------------------------------------------------------------------
// lemma34: the dominated-mix construction
// ----------------------------------------------------------------------

pub fn lemma34_suite(seed: u64) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut checks = vec![];

    let mut t = Tally::new("worked arrays reproduce exactly");
    let gamma = corpus::worked_gamma(5);
    let bp = beta_prime(&gamma).unwrap();
    t.check(
        bp.vectors
            == vec![
                vec![1],
                vec![1, 2],
                vec![1, 2, 2],
                vec![1, 2, 3, 2],
                vec![1, 2, 3, 3, 2],
            ],
        || format!("beta_prime gave {:?}", bp.vectors),
    );
    let g = NumberSeqPrefix::new(vec![1, 2, 1, 4, 1]);
    let m = match_one_extraction(&bp, &g).unwrap();
    t.check(m.values == vec![1, 2, 1, 3, 1], || format!("match gave {:?}", m.values));
    checks.push(t.done());

    let mut t = Tally::new("beta_prime: dominated by drop-last, coords = min(a_j, j)");
    let mut t2 = Tally::new("match_one_extraction: pointwise <= g, values from the vector");
    for _ in 0..200 {
        let len = 12;
        let vectors: Vec<Vec<u64>> = (0..len)
            .map(|i| {
                let d = 2 + (i % 5);
                (0..d)
                    .map(|_| rand::Rng::gen_range(&mut rng, 1..=9u64))
                    .collect()
            })
            .collect();
        let v = VectorSeqPrefix::new(vectors.clone());
        let bp = beta_prime(&v).unwrap();
        let dropped = VectorSeqPrefix::new(
            vectors.iter().map(|t| t[..t.len() - 1].to_vec()).collect(),
        );
        let dom = dominates(&bp, &dropped).unwrap();
        let coords = bp
            .vectors
            .iter()
            .zip(&vectors)
            .all(|(b, a)| {
                b.iter()
                    .enumerate()
                    .all(|(j, &c)| c == a[j].min(j as u64 + 1))
            });
        t.check(dom && coords, || format!("dom={dom} coords={coords}"));

        let gvals: Vec<u64> = (0..len)
            .map(|_| rand::Rng::gen_range(&mut rng, 1..=9u64))
            .collect();
        let gseq = NumberSeqPrefix::new(gvals.clone());
        match match_one_extraction(&bp, &gseq) {
            Ok(m) => {
                let ok = m
                    .values
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| x <= gvals[i] && bp.vectors[i].contains(&x));
                t2.check(ok, || "match property violated".to_string());
            }
            Err(e) => t2.check(false, || format!("match failed: {e}")),
        }
    }
    checks.push(t.done());
    checks.push(t2.done());

    let mut t = Tally::new("dominated mix: worked pair accepted, flat-vs-growing refuted");
    let gp = corpus::worked_gamma_prime(8);
    let bp = beta_prime(&corpus::worked_gamma(8)).unwrap();
    let v = crate::vecseq::asymptotic_mix_check(&gp, &bp, Default::default());
    t.check(v.is_true(), || format!("worked pair: {v}"));
    let ones = VectorSeqPrefix::new(vec![vec![1, 1]; 10]);
    let grow = VectorSeqPrefix::new((1..=10u64).map(|n| vec![n]).collect());
    let v = crate::vecseq::asymptotic_mix_check(&ones, &grow, Default::default());
    t.check(v.is_false(), || format!("flat vs growing: {v}"));
    let v = crate::vecseq::asymptotic_mix_check(&gp, &gp, Default::default());
    t.check(v.is_true(), || format!("identity: {v}"));
    checks.push(t.done());

    SuiteReport { suite: "lemma34".into(), checks }
}

// ----------------------------------------------------------------------
// padding: projection and the padded predicates
// ----------------------------------------------------------------------

pub fn padding_suite(seed: u64) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut checks = vec![];
    let gens = [GapGen::Constant(0), GapGen::Constant(2), GapGen::Identity, GapGen::Pow2];

    let mut t = Tally::new("project after pad is the identity on prefixes");
    let mut t2 = Tally::new("ultimately constant dimension on (Σ, ♭) positions");
    for _ in 0..100 {
        let w = corpus::random_lasso_word(&mut rng, &['a', 'b', 'c'], 3, 5);
        for gen in gens {
            let (padded, prefix) = pad_word(&w, gen, 400).unwrap();
            let (projected, _) = project(&prefix);
            let ok = projected == w.prefix(projected.len() as u64);
            t.check(ok, || format!("{w} under {gen:?}"));
            if matches!(gen, GapGen::Identity | GapGen::Pow2) {
                let v = ult_const_dim(&sigma_positions(&padded), &flat_positions(&padded), 1 << 12);
                t2.check(v.is_true(), || format!("{w} under {gen:?}: {v}"));
            }
        }
    }
    checks.push(t.done());
    checks.push(t2.done());

    let mut t = Tally::new("ultimate periodicity up to ♭");
    let w = PaddedWord::new(LassoWord::new("", "ab"), GapGen::Identity).unwrap();
    let img_periodic = crate::eval::padded_image(&w, &OmegaSet::arithmetic(0, 2));
    t.check(
        crate::eval::check_up_ignoring_flats(&w, &img_periodic, 1 << 10).is_true(),
        || "periodic image".to_string(),
    );
    let img_pow2 = crate::eval::padded_image(&w, &OmegaSet::procedural(Generator::Pow2));
    t.check(
        crate::eval::check_up_ignoring_flats(&w, &img_pow2, 1 << 10).is_false(),
        || "pow2 image".to_string(),
    );
    checks.push(t.done());

    SuiteReport { suite: "padding".into(), checks }
}

// ----------------------------------------------------------------------
// differential soundness across every translation edge
// ----------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct DifferentialOutcome {
    pub formulas: usize,
    pub pairs: usize,
    pub contradictions: Vec<String>,
    pub decided_agreements: usize,
    pub unknowns: usize,
    pub mutation_detected: bool,
}

impl DifferentialOutcome {
    pub fn ok(&self) -> bool {
        self.contradictions.is_empty() && self.mutation_detected
    }
}

/// Formulas of the differential corpus with the edges applied to each.
fn differential_formulas() -> Vec<(&'static str, Vec<RewriteKind>)> {
    use RewriteKind::*;
    vec![
        ("W(X)", vec![WToU2, WToP, WToU]),
        ("~W(X)", vec![WToU2, WToP]),
        ("W(X) & ~W(Y)", vec![WToU2, WToP]),
        ("W(X) -> W(Y)", vec![WToU2, WToP]),
        ("ex2 Z. ((all1 x. (x in Z <-> a(x))) & W(Z))", vec![WToU2, WToP]),
        ("all2 Z. (W(Z) -> W(Z))", vec![WToU2, WToP, WToU]),
        ("U2(R, I)", vec![U2ToU, U2ToW]),
        ("~U2(R, I)", vec![U2ToU]),
        ("U2(R, I) | U2(I, R)", vec![U2ToU]),
        ("U2(R, I) -> U2(R, J)", vec![U2ToU]),
        ("U X. all1 x. (x in X -> a(x))", vec![UToU2]),
        (
            "U X. ((all1 x. (x in X -> a(x))) & all1 x. all1 y. ((x in X & y in X & x < y) -> ~(ex1 z. (x < z & z < y & b(z)))))",
            vec![UToU2],
        ),
        ("U X. all1 x. all1 y. ((x in X & y in X) -> x = y)", vec![UToU2]),
        ("ex1 x. a(x)", vec![UToU2, WToU2]),
        ("all1 x. (a(x) -> ex1 y. (x < y & b(y)))", vec![UToU2, U2ToW]),
        ("ex1 x. (b(x) & ~(ex1 y. (y < x & b(y))))", vec![WToP, U2ToU]),
        ("all1 x. all1 y. (succ(x,y) -> x < y)", vec![UToW, WToU]),
        ("ex2 Z. all1 x. (x in Z <-> b(x))", vec![UToU2, WToP]),
    ]
}

fn padded_formulas() -> Vec<&'static str> {
    vec![
        "ex1 x. a(x)",
        "P Y. (ex1 y. y in Y)",
        "P Y. ((all1 p. ex1 q. (p < q & q in Y)) -> ex1 u. ex1 v. (u in Y & v in Y & u < v))",
        "ex2 X. (all1 x. (x in X <-> a(x))) & ~(P Y. ~(X = Y))",
        "all1 x. all1 y. (succ(x,y) -> x < y)",
    ]
}

fn set_palette(rng: &mut ChaCha8Rng, word: &Word, k: usize) -> OmegaSet {
    match k % 10 {
        0 => OmegaSet::procedural(Generator::Pow2),
        1 => OmegaSet::arithmetic(0, 10),
        2 => OmegaSet::procedural(Generator::PiDigits),
        3 => OmegaSet::procedural(Generator::Multiples { k: 10 }),
        4 => {
            let letters: std::collections::BTreeSet<char> =
                word.alphabet().into_iter().take(1).collect();
            match word {
                Word::Lasso(_) => corpus::random_lasso_set(rng, 4, 6),
                _ => OmegaSet::procedural(Generator::WordLetters { word: word.clone(), letters }),
            }
        }
        5 => corpus::random_finite_set(rng, 40, 0.3),
        6 => OmegaSet::procedural(Generator::Squares),
        7 => OmegaSet::empty(),
        _ => corpus::random_lasso_set(rng, 5, 8),
    }
}

fn word_palette(rng: &mut ChaCha8Rng, k: usize) -> Word {
    match k % 5 {
        0 => Word::Blocks(BlocksWord::new("ac", 'b', GapGen::Identity).unwrap()),
        1 => Word::Blocks(BlocksWord::new("ac", 'b', GapGen::Pow2).unwrap()),
        2 => Word::Lasso(LassoWord::new("", "ab")),
        _ => Word::Lasso(corpus::random_lasso_word(rng, &['a', 'b', 'c'], 3, 4)),
    }
}

fn instances_for(f: &Formula, rng: &mut ChaCha8Rng, n: usize) -> Vec<Instance> {
    let (fo, so) = free_variables(f);
    let so: Vec<String> = so.into_iter().collect();
    let pairs = u2_instance_palette();
    let mut out = vec![];
    for k in 0..n {
        let word = word_palette(rng, k);
        let mut env = Assignment::default();
        for (j, v) in fo.iter().enumerate() {
            env = env.bind_first(v, ((k + j) % 24) as u64);
        }
        if so.iter().any(|v| v == "R") && so.iter().any(|v| v == "I") {
            let (r, i, _) = &pairs[k % pairs.len()];
            for v in &so {
                match v.as_str() {
                    "R" => env = env.bind_second(v, r.clone()),
                    "I" => env = env.bind_second(v, i.clone()),
                    _ => env = env.bind_second(v, set_palette(rng, &word, k + so.len())),
                }
            }
        } else {
            for (j, v) in so.iter().enumerate() {
                env = env.bind_second(v, set_palette(rng, &word, k + 3 * j));
            }
        }
        out.push(Instance { word, env, label: format!("instance {k}") });
    }
    out
}

/// Runs every translation edge over the corpus and checks that no
/// rewrite contradicts its source; also checks that the planted mutation
/// is caught.
pub fn differential_suite(seed: u64, cfg: &EvalConfig, instances_per: usize) -> DifferentialOutcome {
    let mut rng = corpus::rng(seed);
    let letters = ['a', 'b', 'c'];
    let mut outcome = DifferentialOutcome {
        formulas: 0,
        pairs: 0,
        contradictions: vec![],
        decided_agreements: 0,
        unknowns: 0,
        mutation_detected: false,
    };
    for (text, kinds) in differential_formulas() {
        let f = parse_formula(text, &letters).unwrap();
        outcome.formulas += 1;
        let corpus_instances = instances_for(&f, &mut rng, instances_per);
        for kind in kinds {
            let (g, _) = rewrite(&f, kind, &letters).unwrap();
            let report = differential_check(&f, &g, &corpus_instances, cfg).unwrap();
            outcome.pairs += report.pairs.len();
            outcome.decided_agreements += report.agreements;
            outcome.unknowns += report.unknowns;
            for idx in report.contradictions {
                outcome.contradictions.push(format!(
                    "{text} [{kind:?}] on {}: {} vs {}",
                    report.labels[idx], report.pairs[idx].0, report.pairs[idx].1
                ));
            }
        }
    }
    // padded translation runs on word pairs (w, w_f)
    for text in padded_formulas() {
        let f = parse_formula(text, &letters).unwrap();
        outcome.formulas += 1;
        let (g, _) = rewrite(&f, RewriteKind::PToUPadded, &letters).unwrap();
        let mut paired = vec![];
        for k in 0..instances_per {
            let w = if k % 3 == 0 {
                LassoWord::new("", "ab")
            } else {
                corpus::random_lasso_word(&mut rng, &letters, 2, 4)
            };
            for gen in [GapGen::Identity, GapGen::Pow2] {
                let padded = PaddedWord::new(w.clone(), gen).unwrap();
                paired.push((
                    Instance {
                        word: Word::Lasso(w.clone()),
                        env: Assignment::default(),
                        label: format!("{w} / {gen:?}"),
                    },
                    Instance {
                        word: Word::Padded(padded),
                        env: Assignment::default(),
                        label: String::new(),
                    },
                ));
            }
        }
        let report = differential_check_paired(&f, &g, &paired, cfg).unwrap();
        outcome.pairs += report.pairs.len();
        outcome.decided_agreements += report.agreements;
        outcome.unknowns += report.unknowns;
        for idx in report.contradictions {
            outcome.contradictions.push(format!(
                "{text} [padded] on {}: {} vs {}",
                report.labels[idx], report.pairs[idx].0, report.pairs[idx].1
            ));
        }
    }
    // mutation probe: rewriting W(X) to U2(X, X) must be caught
    let f = parse_formula("W(X)", &letters).unwrap();
    let mutant = parse_formula("U2(X, X)", &letters).unwrap();
    let probe = vec![Instance {
        word: Word::Lasso(LassoWord::new("", "a")),
        env: Assignment::default().bind_second("X", OmegaSet::procedural(Generator::Pow2)),
        label: "pow2".into(),
    }];
    let report = differential_check(&f, &mutant, &probe, cfg).unwrap();
    outcome.mutation_detected = !report.contradictions.is_empty();
    outcome
}

/// Golden W-predicate checks at a given horizon (the three worked sets).
pub fn w_golden(h: u64) -> Vec<(String, Truth, Truth)> {
    vec![
        (
            "multiples of 10".into(),
            Truth::False,
            check_w(&OmegaSet::procedural(Generator::Multiples { k: 10 }), h).truth,
        ),
        (
            "powers of 2".into(),
            Truth::True,
            check_w(&OmegaSet::procedural(Generator::Pow2), h).truth,
        ),
        (
            "pi digit positions".into(),
            Truth::False,
            check_w(&OmegaSet::procedural(Generator::PiDigits), h).truth,
        ),
    ]
}

/// Encoding-consistency battery shared by the acceptance suite: sums,
/// completion-preserves-dims, isolation shape, on seeded prefixes.
pub struct EncodingChecks {
    pub sums_ok: usize,
    pub completion_ok: usize,
    pub isolation_all_one: usize,
    pub isolation_density_floor: usize,
    pub isolation_density_ceil_violations: usize,
    pub total: usize,
}

pub fn encoding_consistency(seed: u64, count: usize, h: u64) -> EncodingChecks {
    let mut rng = corpus::rng(seed);
    let mut out = EncodingChecks {
        sums_ok: 0,
        completion_ok: 0,
        isolation_all_one: 0,
        isolation_density_floor: 0,
        isolation_density_ceil_violations: 0,
        total: count,
    };
    for _ in 0..count {
        let (r, i) = corpus::random_disjoint_pair(&mut rng, h);
        let ns = decode_numseq(&r, &i, h).unwrap();
        let vs = decode_vecseq(&r, &i, h).unwrap();
        let sums: Vec<u64> = vs.vectors.iter().map(|v| v.iter().sum()).collect();
        if ns.values == sums {
            out.sums_ok += 1;
        }
        if let Ok(j) = complete(&r, &i, h) {
            let dj = dims(&decode_vecseq(&r, &j, h).unwrap());
            let di = dims(&vs);
            if dj.values == di.values {
                out.completion_ok += 1;
            }
        }
        let iso = isolate(&i);
        let vi = decode_vecseq(&r, &iso, h).unwrap();
        if vi.vectors.iter().flatten().all(|&c| c == 1) {
            out.isolation_all_one += 1;
        }
        let members = iso.members_below(h + 1);
        let mut floor_ok = true;
        let mut ceil_ok = true;
        for (start, len) in i.runs_below(h + 1) {
            let kept = members
                .iter()
                .filter(|&&m| m >= start && m < start + len)
                .count() as u64;
            if kept < (len / 2).max(1) {
                floor_ok = false;
            }
            if kept < len.div_ceil(2) {
                ceil_ok = false;
            }
        }
        if floor_ok {
            out.isolation_density_floor += 1;
        }
        if !ceil_ok {
            out.isolation_density_ceil_violations += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_default_seed() {
        for name in ["lemma21", "lemma22", "lemma32", "lemma34", "padding"] {
            let report = run_suite(name, 42).unwrap();
            assert!(report.ok(), "suite {name} failed:\n{}", report.render());
        }
    }

    #[test]
    fn w_golden_small_horizon() {
        for (name, expect, got) in w_golden(1 << 14) {
            assert_eq!(expect, got, "{name}");
        }
    }
}

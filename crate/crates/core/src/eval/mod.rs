//! Finitely represented ω-words, ♭-padding/projection, and the
//! bounded-domain three-valued evaluator used for differential testing of
//! the rewrites.

mod engine;
pub mod padding;
pub mod words;

pub use engine::{Assignment, EvalConfig, EvalError, Mode};
pub use padding::{
    check_up_ignoring_flats, flat_positions, pad_word, padded_image, project, sigma_positions,
    ult_const_dim,
};
pub use words::{BlocksWord, GapGen, LassoWord, PaddedWord, Word, FLAT};

use crate::formula::Formula;
use crate::verdict::{Truth, Verdict3};

/// Three-valued evaluation of `f` on `word` under `env`.
pub fn eval(
    f: &Formula,
    word: &Word,
    env: &Assignment,
    cfg: &EvalConfig,
) -> Result<Verdict3, EvalError> {
    let mut engine = engine::Engine::new(word, cfg, env);
    engine.run(f, env)
}

/// One corpus instance: a word plus an assignment for the free variables.
#[derive(Debug, Clone)]
pub struct Instance {
    pub word: Word,
    pub env: Assignment,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct DifferentialReport {
    pub pairs: Vec<(Verdict3, Verdict3)>,
    /// indices of instances with a TRUE-vs-FALSE disagreement
    pub contradictions: Vec<usize>,
    pub agreements: usize,
    pub unknowns: usize,
    pub labels: Vec<String>,
}

impl DifferentialReport {
    pub fn ok(&self) -> bool {
        self.contradictions.is_empty()
    }
}

/// Evaluates `f` and `g` on every instance and reports TRUE-vs-FALSE
/// contradictions. Unknown verdicts are always permitted.
pub fn differential_check(
    f: &Formula,
    g: &Formula,
    corpus: &[Instance],
    cfg: &EvalConfig,
) -> Result<DifferentialReport, EvalError> {
    let mut report = DifferentialReport {
        pairs: vec![],
        contradictions: vec![],
        agreements: 0,
        unknowns: 0,
        labels: vec![],
    };
    for (k, inst) in corpus.iter().enumerate() {
        let vf = eval(f, &inst.word, &inst.env, cfg)?;
        let vg = eval(g, &inst.word, &inst.env, cfg)?;
        contradiction_tally(&mut report, k, &inst.label, vf, vg);
    }
    Ok(report)
}

/// Differential check where the two formulas run on per-instance word
/// pairs (used for the padded translation, which changes the alphabet).
pub fn differential_check_paired(
    f: &Formula,
    g: &Formula,
    corpus: &[(Instance, Instance)],
    cfg: &EvalConfig,
) -> Result<DifferentialReport, EvalError> {
    let mut report = DifferentialReport {
        pairs: vec![],
        contradictions: vec![],
        agreements: 0,
        unknowns: 0,
        labels: vec![],
    };
    for (k, (fi, gi)) in corpus.iter().enumerate() {
        let vf = eval(f, &fi.word, &fi.env, cfg)?;
        let vg = eval(g, &gi.word, &gi.env, cfg)?;
        contradiction_tally(&mut report, k, &fi.label, vf, vg);
    }
    Ok(report)
}

fn contradiction_tally(
    report: &mut DifferentialReport,
    k: usize,
    label: &str,
    vf: Verdict3,
    vg: Verdict3,
) {
    // restricted-domain (relative) values are reports about different
    // truncations of the two formulas, not claims about the word; only
    // definite verdicts can genuinely contradict
    let contradiction = matches!(
        (vf.truth, vg.truth),
        (Truth::True, Truth::False) | (Truth::False, Truth::True)
    ) && !vf.relative
        && !vg.relative;
    if contradiction {
        report.contradictions.push(k);
    } else if vf.truth == Truth::Unknown || vg.truth == Truth::Unknown {
        report.unknowns += 1;
    } else {
        report.agreements += 1;
    }
    report.pairs.push((vf, vg));
    report.labels.push(label.to_string());
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::vecseq::{Generator, OmegaSet};

    fn cfg(h: u64) -> EvalConfig {
        EvalConfig::new(h, 64, 64, Mode::BoundedDomain)
    }

    fn word_ab() -> Word {
        Word::Lasso(LassoWord::new("a", "b"))
    }

    #[test]
    fn letter_atom_example() {
        let f = parse_formula("ex1 x. a(x)", &['a', 'b']).unwrap();
        let v = eval(&f, &word_ab(), &Assignment::default(), &cfg(1)).unwrap();
        assert_eq!(v.truth, Truth::True);
        let v = eval(&f, &word_ab(), &Assignment::default(), &cfg(64)).unwrap();
        assert_eq!(v.truth, Truth::True);
    }

    #[test]
    fn w_atom_uses_certificates() {
        let f = parse_formula("W(X)", &[]).unwrap();
        let tens = Assignment::default()
            .bind_second("X", OmegaSet::procedural(Generator::Multiples { k: 10 }));
        let v = eval(&f, &word_ab(), &tens, &cfg(1 << 12)).unwrap();
        assert_eq!(v.truth, Truth::False);
        let pow2 = Assignment::default().bind_second("X", OmegaSet::procedural(Generator::Pow2));
        let v = eval(&f, &word_ab(), &pow2, &cfg(1 << 12)).unwrap();
        assert_eq!(v.truth, Truth::True);
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let f = parse_formula("x in X", &[]).unwrap();
        let r = eval(&f, &word_ab(), &Assignment::default(), &cfg(8));
        assert!(matches!(r, Err(EvalError::UnboundVariable(_))));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let f = parse_formula("c(x)", &['c']).unwrap();
        let env = Assignment::default().bind_first("x", 0);
        let r = eval(&f, &word_ab(), &env, &cfg(8));
        assert!(matches!(r, Err(EvalError::AlphabetMismatch('c'))));
    }

    #[test]
    fn exact_fo_on_lasso_instances() {
        // "every a is eventually followed by a b"
        let f = parse_formula("all1 x. (a(x) -> ex1 y. (x < y & b(y)))", &['a', 'b']).unwrap();
        let v = eval(&f, &word_ab(), &Assignment::default(), &cfg(4096)).unwrap();
        assert_eq!(v.truth, Truth::True);
        assert!(v.witness.is_none(), "lasso instances decide exactly: {v}");
        // "some position has both letters" is false
        let g = parse_formula("ex1 x. (a(x) & b(x))", &['a', 'b']).unwrap();
        let v = eval(&g, &word_ab(), &Assignment::default(), &cfg(4096)).unwrap();
        assert_eq!(v.truth, Truth::False);
        assert!(v.witness.is_none());
    }

    #[test]
    fn second_order_pool_finds_witnesses() {
        // the set of a-positions separates evens: ex2 X. all1 x. (x in X <-> a(x))
        let f = parse_formula("ex2 X. all1 x. (x in X <-> a(x))", &['a', 'b']).unwrap();
        let w = Word::Lasso(LassoWord::new("", "ab"));
        let v = eval(&f, &w, &Assignment::default(), &cfg(512)).unwrap();
        assert_eq!(v.truth, Truth::True);
    }

    #[test]
    fn quant_p_refutes_with_periodic_counterexample() {
        // "every ultimately periodic set avoids position 0" is false
        let f = parse_formula("P Y. ~(ex1 x. (x in Y & ~(ex1 z. z < x)))", &['a']).unwrap();
        let w = Word::Lasso(LassoWord::new("", "a"));
        let v = eval(&f, &w, &Assignment::default(), &cfg(256)).unwrap();
        assert_eq!(v.truth, Truth::False);
    }

    #[test]
    fn quant_u_schema_on_blocks_word() {
        // arbitrarily large sets of a-positions not separated by a b
        let text = "U X. all1 x. all1 y. ((x in X & y in X & x < y) -> ~(ex1 z. (x < z & z < y & b(z))))";
        let f = parse_formula(text, &['a', 'b', 'c']).unwrap();
        let w = Word::Blocks(BlocksWord::new("ac", 'b', GapGen::Identity).unwrap());
        // witnesses of size k live in block k, so the horizon must host
        // blocks up to the witness bound
        let cfg_u = EvalConfig::new(1024, 64, 8, Mode::BoundedDomain);
        let v = eval(&f, &w, &Assignment::default(), &cfg_u).unwrap();
        assert_eq!(v.truth, Truth::True);
        // on (ab)^ω every two a-positions are separated by a b
        let w2 = Word::Lasso(LassoWord::new("", "ab"));
        let v2 = eval(&f, &w2, &Assignment::default(), &cfg_u).unwrap();
        assert_ne!(v2.truth, Truth::True);
    }

    #[test]
    fn differential_detects_planted_contradiction() {
        let f = parse_formula("W(X)", &[]).unwrap();
        let g = parse_formula("U2(X, X)", &[]).unwrap();
        let corpus = vec![Instance {
            word: word_ab(),
            env: Assignment::default().bind_second("X", OmegaSet::procedural(Generator::Pow2)),
            label: "pow2".into(),
        }];
        let report = differential_check(&f, &g, &corpus, &cfg(1 << 12)).unwrap();
        assert_eq!(report.contradictions, vec![0]);
    }
}

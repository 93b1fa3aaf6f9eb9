//! Workbench for monadic second-order logic on ω-words extended with
//! unboundedness constructs: the `U` quantifier, the `W` and `U2`
//! predicates, and the `P` quantifier over ultimately periodic sets.
//!
//! The crate has four layers:
//!
//! * [`formula`] — the extended-MSO abstract syntax, concrete text syntax,
//!   and structural analyses (free variables, dialect, renaming);
//! * [`rewrite`] — dialect-to-dialect translations as AST rewriters,
//!   together with the auxiliary formula gadgets they rely on;
//! * [`vecseq`] — finitely represented subsets of ℕ, the set-to-sequence
//!   encodings, and the combinatorics of vector sequences, doubling as the
//!   brute-force oracle layer;
//! * [`eval`] — finitely represented ω-words, ♭-padding and projection,
//!   and a bounded-domain three-valued evaluator used for differential
//!   testing of the rewrites.
//!
//! [`corpus`] and [`oracle`] provide seeded corpora and the reproducible
//! oracle suites exposed by the CLI.

pub mod corpus;
pub mod eval;
pub mod formula;
pub mod oracle;
pub mod rewrite;
pub mod textio;
pub mod vecseq;
pub mod verdict;

pub use formula::{Dialect, Formula};
pub use verdict::{Truth, Verdict3};

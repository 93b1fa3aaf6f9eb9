//! Set-to-sequence encodings and vector-sequence combinatorics.

pub mod checks;
pub mod omega_set;
pub mod seq;

pub use checks::{
    asym_equiv_check, asymptotic_mix_check, check_u2, check_w, disjoint_certain, growth_witness,
    tends_to_infinity, MixBudget, NumSeqTag, SeqStructure, TaggedNumSeq,
};
pub use omega_set::{pi_digit, Asym, Generator, OmegaSet, Tail};
pub use seq::{
    adjacency_set, beta_prime, complete, decode_numseq, decode_vecseq, dims, dominates, isolate,
    lemma32_witness, match_one_extraction, relation_check, relation_witness, restrict,
    Lemma32Witness, NumberSeqPrefix, RelationWitness, SeqRelation, VecseqError, VectorSeqPrefix,
};

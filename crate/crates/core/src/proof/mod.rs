//! Hilbert systems, the proof checker, the deduction transformer and the
//! derivation corpus.

mod builder;
mod check;
mod corpus;
mod deduction;
mod json;
mod system;

pub use builder::ProofBuilder;
pub use check::{check_proof, Justification, Proof, Step, Verdict};
pub use corpus::{build_corpus, load_corpus, to_substitution_system, CorpusEntry, CorpusError, CORPUS_FILES};
pub use deduction::{deduction_transform, DeductionError};
pub use json::{proof_from_json, proof_to_json, ProofFileError};
pub use system::{schema, Rule, SystemId};

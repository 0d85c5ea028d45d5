//! The term calculus: axiom schemas, proof-script checking, and
//! finite-model semantic tooling.

mod axioms;
mod builder;
mod corpus;
mod proof;
mod semantics;

pub use axioms::{canonical_instance, central_by_shape, match_axiom, AxiomId, MetaVar, Pat, Substitution};
pub use builder::ProofBuilder;
pub use corpus::{corpus, CorpusEntry};
pub use proof::{
    check_proof, parse_proof, write_proof, Justification, LineVerdict, ProofLine,
    ProofParseError, ProofScript, ProofVerdict, ScriptError,
};
pub use semantics::{
    compactness_probe, deduction_transform, default_library, is_tautology, is_tautology_with,
    library_from_names, semantic_consequence, semantic_consequence_with, CompactnessError,
    ConsequenceVerdict, Model, TautologyVerdict, DEFAULT_LIBRARY, DEFAULT_VAR_CAP,
};

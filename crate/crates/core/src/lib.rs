//! Batch compiler from factual, non-negative English IS-A sentences to
//! SHOQ(D) description-logic axioms, plus the evaluation harness used to
//! score the learned taxonomies.
//!
//! The pipeline runs in five stages, each usable on its own:
//!
//! 1. [`preprocess`]: tokenize `word_TAG` input, singularize, normalize
//!    IS-A/quantifier/number lexemes, annotate units and dimensions.
//! 2. [`simplify`]: split compound/clausal sentences and rewrite known
//!    syntactic patterns into plain IS-A sentences.
//! 3. [`nss`]: fit each simplified sentence into a normalized sentence
//!    structure (NSS) template and score the fit.
//! 4. [`translate`]: turn NSS instances into TBox/ABox axioms in the
//!    [`dl`] knowledge-base model, serialized by [`owl`].
//! 5. [`reasoner`] / [`eval`]: classify the axioms into a subsumption
//!    taxonomy and compare it against a gold taxonomy.
//!
//! [`pipeline`] wires the stages together behind a single `learn` entry
//! point; the word tables driving stages 1–4 live in [`lexicon`].
pub mod dl;
pub mod eval;
pub mod lexicon;
pub mod nss;
pub mod owl;
pub mod pipeline;
pub mod rational;
pub mod preprocess;
pub mod reasoner;
pub mod simplify;
pub mod tags;
pub mod token;
pub mod translate;
pub use lexicon::Lexicon;

pub use pipeline::{learn, RunConfig};

//! Conversion toolkit for KAIST-style Korean treebank data.
//!
//! The pipeline has three stages plus supporting tooling:
//!
//! * [`treeio`] reads and writes the on-disk formats: bracketed constituent
//!   trees, eojeol morphological-analysis files, and CoNLL-X.
//! * [`transform`] rewrites KAIST-style trees into Penn-style trees:
//!   punctuation is split into its own tokens, parentheticals are grouped
//!   under a `PRN` function tag, and phrase-level agglutinated affixes are
//!   lowered onto terminals.
//! * [`depconv`] converts Penn-style trees into labeled dependency trees
//!   using head-final head selection with exclusion rules and a label
//!   cascade driven by case particles and morphology.
//! * [`audit`] validates dependency trees, computes corpus statistics,
//!   splits corpora deterministically, substitutes automatic morphological
//!   analyses, and scores analyzer agreement.
//!
//! [`model`] holds the shared domain types and tag vocabularies.

pub mod audit;
pub mod depconv;
pub mod model;
pub mod transform;
pub mod treeio;

pub use model::{
    Config, DepToken, DependencyLabel, DependencyTree, Eojeol, FineTag, FunctionTag, Mode,
    Morpheme, PhraseType, Tagset, TagsetRegistry,
};
pub use treeio::{ConstituentNode, Diagnostic, Location, Severity};

//! Domain types and closed tag vocabularies shared by the whole pipeline:
//! fine-grained POS tags for the two tagsets, morphemes and eojeols, phrase
//! types, dependency labels, and the registry holding the classification
//! tables (punctuation sets, affix prefixes, coarse mapping, case labels).

mod config;
mod dep;
mod eojeol;
mod label;
mod registry;
mod tag;

pub use config::{Config, ConfigError, Mode};
pub use dep::{DepToken, DepTreeError, DependencyTree};
pub use eojeol::{Eojeol, MorphError, Morpheme};
pub use label::{DependencyLabel, FunctionTag, LabelParseError, PhraseType};
pub use registry::{RegistryError, TagsetRegistry};
pub use tag::{FineTag, TagError, Tagset};

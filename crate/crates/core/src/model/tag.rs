use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The two fine-grained POS inventories handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tagset {
    Kaist,
    Sejong,
}

impl Tagset {
    pub fn name(self) -> &'static str {
        match self {
            Tagset::Kaist => "kaist",
            Tagset::Sejong => "sejong",
        }
    }
}

impl fmt::Display for Tagset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tagset {
    type Err = TagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "kaist" => Ok(Tagset::Kaist),
            "sejong" => Ok(Tagset::Sejong),
            _ => Err(TagError::UnknownTagset(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagError {
    #[error("empty tag identifier")]
    EmptyIdentifier,
    #[error("unknown {tagset} tag `{id}`")]
    UnknownTag { tagset: Tagset, id: String },
    #[error("unknown tagset `{0}` (expected kaist or sejong)")]
    UnknownTagset(String),
}

/// A fine-grained POS tag identifier together with the tagset it belongs to.
///
/// Construction only rejects empty identifiers; membership in the tagset
/// registry is checked separately so that lenient readers can carry
/// out-of-registry tags through the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FineTag {
    tagset: Tagset,
    id: String,
}

impl FineTag {
    pub fn new(tagset: Tagset, id: impl Into<String>) -> Result<Self, TagError> {
        let id = id.into();
        if id.is_empty() {
            return Err(TagError::EmptyIdentifier);
        }
        Ok(FineTag { tagset, id })
    }

    pub fn tagset(&self) -> Tagset {
        self.tagset
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// First character of the identifier; the default coarse-grained tag.
    pub fn first_char(&self) -> char {
        self.id.chars().next().expect("identifier is non-empty")
    }
}

impl fmt::Display for FineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

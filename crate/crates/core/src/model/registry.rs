use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::config::Config;
use super::label::{DependencyLabel, PhraseType};
use super::tag::{FineTag, TagError, Tagset};

const KAIST_TAGS: &str = include_str!("data/kaist_tags.tsv");
const SEJONG_TAGS: &str = include_str!("data/sejong_tags.tsv");

const KAIST_PUNCT: [&str; 7] = ["sd", "sf", "sl", "sp", "sr", "su", "sy"];
const SEJONG_PUNCT: [&str; 6] = ["SF", "SP", "SS", "SE", "SO", "SW"];
const KAIST_AFFIX_PREFIXES: [char; 3] = ['j', 'e', 'x'];
const SEJONG_AFFIX_PREFIXES: [char; 3] = ['J', 'E', 'X'];

/// Default mapping from trailing case particles to case labels.
const KAIST_CASE_LABELS: [(&str, DependencyLabel); 6] = [
    ("jcs", DependencyLabel::Sbj),
    ("jco", DependencyLabel::Obj),
    ("jcc", DependencyLabel::Comp),
    ("jct", DependencyLabel::Comit),
    ("jcr", DependencyLabel::Quot),
    ("jxt", DependencyLabel::Tpc),
];

/// Coarse-tag exceptions; everything else coarsens to its first character.
const SEJONG_COARSE_EXCEPTIONS: [(&str, char); 5] = [
    ("SN", 'N'),
    ("NF", 'N'),
    ("SL", 'F'),
    ("SH", 'F'),
    ("NV", 'V'),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("malformed embedded tag table line: `{0}`")]
    MalformedTable(String),
    #[error("punctuation override `{id}` overlaps grammatical-affix prefixes")]
    PunctAffixOverlap { id: String },
    #[error("case-label override key `{id}` must be a particle tag (prefix `j`)")]
    CaseLabelNotParticle { id: String },
}

#[derive(Debug, Clone)]
struct TagTable {
    tags: BTreeMap<String, String>,
    punct: BTreeSet<String>,
    affix_prefixes: Vec<char>,
    coarse_exceptions: BTreeMap<String, char>,
}

impl TagTable {
    fn load(data: &str, punct: &[&str], prefixes: &[char]) -> Result<Self, RegistryError> {
        let mut tags = BTreeMap::new();
        for line in data.lines() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (id, desc) = line
                .split_once('\t')
                .ok_or_else(|| RegistryError::MalformedTable(line.to_string()))?;
            tags.insert(id.to_string(), desc.to_string());
        }
        Ok(TagTable {
            tags,
            punct: punct.iter().map(|s| s.to_string()).collect(),
            affix_prefixes: prefixes.to_vec(),
            coarse_exceptions: BTreeMap::new(),
        })
    }
}

/// Closed tag vocabularies plus the classification tables that drive the
/// pipeline: punctuation sets, grammatical-affix prefixes, the coarse-tag
/// exception table and the case-particle label mapping.
///
/// The vocabularies are embedded data; a config file can override the
/// mapping tables (see [`Config`]).
#[derive(Debug, Clone)]
pub struct TagsetRegistry {
    kaist: TagTable,
    sejong: TagTable,
    case_labels: BTreeMap<String, DependencyLabel>,
    prn_label: PhraseType,
}

impl TagsetRegistry {
    /// Registry with the built-in tables.
    pub fn builtin() -> Self {
        let mut sejong = TagTable::load(SEJONG_TAGS, &SEJONG_PUNCT, &SEJONG_AFFIX_PREFIXES)
            .expect("embedded sejong table is well-formed");
        sejong.coarse_exceptions = SEJONG_COARSE_EXCEPTIONS
            .iter()
            .map(|(id, c)| (id.to_string(), *c))
            .collect();
        TagsetRegistry {
            kaist: TagTable::load(KAIST_TAGS, &KAIST_PUNCT, &KAIST_AFFIX_PREFIXES)
                .expect("embedded kaist table is well-formed"),
            sejong,
            case_labels: KAIST_CASE_LABELS
                .iter()
                .map(|(id, l)| (id.to_string(), *l))
                .collect(),
            prn_label: PhraseType::Np,
        }
    }

    /// Registry with config overrides applied and validated.
    pub fn with_config(config: &Config) -> Result<Self, RegistryError> {
        let mut registry = Self::builtin();
        if let Some(punct) = &config.punct_kaist {
            registry.kaist.punct = punct.iter().cloned().collect();
        }
        if let Some(punct) = &config.punct_sejong {
            registry.sejong.punct = punct.iter().cloned().collect();
        }
        if let Some(prefixes) = &config.affix_prefixes_kaist {
            registry.kaist.affix_prefixes = prefixes.clone();
        }
        for (id, label) in &config.case_labels {
            if !id.starts_with('j') {
                return Err(RegistryError::CaseLabelNotParticle { id: id.clone() });
            }
            match label {
                Some(l) => {
                    registry.case_labels.insert(id.clone(), *l);
                }
                None => {
                    registry.case_labels.remove(id);
                }
            }
        }
        if let Some(label) = config.prn_label {
            registry.prn_label = label;
        }
        // A tag must never count as both punctuation and grammatical affix.
        for table in [&registry.kaist, &registry.sejong] {
            for id in &table.punct {
                if id
                    .chars()
                    .next()
                    .is_some_and(|c| table.affix_prefixes.contains(&c))
                {
                    return Err(RegistryError::PunctAffixOverlap { id: id.clone() });
                }
            }
        }
        Ok(registry)
    }

    fn table(&self, tagset: Tagset) -> &TagTable {
        match tagset {
            Tagset::Kaist => &self.kaist,
            Tagset::Sejong => &self.sejong,
        }
    }

    /// True iff `id` is a member of the tagset's vocabulary.
    pub fn validate_tag(&self, tagset: Tagset, id: &str) -> bool {
        self.table(tagset).tags.contains_key(id)
    }

    /// Strict constructor: the identifier must be in the vocabulary.
    pub fn tag(&self, tagset: Tagset, id: &str) -> Result<FineTag, TagError> {
        if !self.validate_tag(tagset, id) {
            return Err(TagError::UnknownTag {
                tagset,
                id: id.to_string(),
            });
        }
        FineTag::new(tagset, id)
    }

    pub fn tag_count(&self, tagset: Tagset) -> usize {
        self.table(tagset).tags.len()
    }

    pub fn tag_ids(&self, tagset: Tagset) -> impl Iterator<Item = &str> {
        self.table(tagset).tags.keys().map(String::as_str)
    }

    pub fn description(&self, tagset: Tagset, id: &str) -> Option<&str> {
        self.table(tagset).tags.get(id).map(String::as_str)
    }

    pub fn prn_label(&self) -> PhraseType {
        self.prn_label
    }

    fn check_known(&self, tag: &FineTag) -> Result<(), TagError> {
        if !self.validate_tag(tag.tagset(), tag.id()) {
            return Err(TagError::UnknownTag {
                tagset: tag.tagset(),
                id: tag.id().to_string(),
            });
        }
        Ok(())
    }

    /// True iff the tag marks a grammatical affix (particle, ending marker,
    /// derivational affix). Unknown tags are a validation error.
    pub fn is_grammatical_affix(&self, tag: &FineTag) -> Result<bool, TagError> {
        self.check_known(tag)?;
        Ok(self.is_grammatical_affix_or_prefix(tag))
    }

    /// Affix test that falls back to the prefix rule for out-of-registry
    /// tags (the lenient pipeline path).
    pub fn is_grammatical_affix_or_prefix(&self, tag: &FineTag) -> bool {
        let table = self.table(tag.tagset());
        table.affix_prefixes.contains(&tag.first_char())
    }

    /// True iff the tag is in the tagset's punctuation set. Unknown tags are
    /// a validation error.
    pub fn is_punct(&self, tag: &FineTag) -> Result<bool, TagError> {
        self.check_known(tag)?;
        Ok(self.table(tag.tagset()).punct.contains(tag.id()))
    }

    /// Punctuation test for possibly out-of-registry tags: set membership
    /// first, then an `s`/`S` prefix guess for unknown identifiers.
    pub fn is_punct_or_prefix(&self, tag: &FineTag) -> bool {
        let table = self.table(tag.tagset());
        if table.tags.contains_key(tag.id()) {
            return table.punct.contains(tag.id());
        }
        matches!(tag.first_char(), 's' | 'S')
    }

    /// Single-character coarse-grained tag: the exception table first,
    /// otherwise the first character of the identifier, case preserved.
    /// Unknown tags are a validation error.
    pub fn coarse_tag(&self, tag: &FineTag) -> Result<char, TagError> {
        self.check_known(tag)?;
        Ok(self.coarse_tag_or_first_char(tag))
    }

    /// Coarse tag that accepts out-of-registry identifiers (first character).
    pub fn coarse_tag_or_first_char(&self, tag: &FineTag) -> char {
        if let Some(c) = self.table(tag.tagset()).coarse_exceptions.get(tag.id()) {
            return *c;
        }
        tag.first_char()
    }

    /// Case label indicated by a trailing particle, if any. Only particle
    /// tags map; everything else is `None`.
    pub fn case_label(&self, tag: &FineTag) -> Option<DependencyLabel> {
        if tag.tagset() != Tagset::Kaist {
            return None;
        }
        self.case_labels.get(tag.id()).copied()
    }
}

impl Default for TagsetRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kaist(id: &str) -> FineTag {
        FineTag::new(Tagset::Kaist, id).unwrap()
    }

    fn sejong(id: &str) -> FineTag {
        FineTag::new(Tagset::Sejong, id).unwrap()
    }

    #[test]
    fn vocabulary_cardinalities() {
        let r = TagsetRegistry::builtin();
        assert_eq!(r.tag_count(Tagset::Kaist), 54);
        assert_eq!(r.tag_count(Tagset::Sejong), 45);
    }

    #[test]
    fn identifier_case_per_tagset() {
        let r = TagsetRegistry::builtin();
        assert!(r
            .tag_ids(Tagset::Kaist)
            .all(|id| id.chars().all(|c| c.is_ascii_lowercase())));
        assert!(r
            .tag_ids(Tagset::Sejong)
            .all(|id| id.chars().all(|c| c.is_ascii_uppercase())));
    }

    #[test]
    fn validate_tag_examples() {
        let r = TagsetRegistry::builtin();
        assert!(r.validate_tag(Tagset::Kaist, "ncpa"));
        assert!(!r.validate_tag(Tagset::Sejong, "ncpa"));
        assert!(!r.validate_tag(Tagset::Kaist, ""));
    }

    #[test]
    fn grammatical_affix_examples() {
        let r = TagsetRegistry::builtin();
        assert_eq!(r.is_grammatical_affix(&kaist("jco")), Ok(true));
        assert_eq!(r.is_grammatical_affix(&kaist("etm")), Ok(true));
        assert_eq!(r.is_grammatical_affix(&kaist("ncn")), Ok(false));
        assert!(r.is_grammatical_affix(&kaist("zzz")).is_err());
    }

    #[test]
    fn punct_examples() {
        let r = TagsetRegistry::builtin();
        assert_eq!(r.is_punct(&kaist("sf")), Ok(true));
        // Sejong SL is a foreign word, not punctuation.
        assert_eq!(r.is_punct(&sejong("SL")), Ok(false));
        assert_eq!(r.is_punct(&sejong("SH")), Ok(false));
        assert_eq!(r.is_punct(&sejong("SN")), Ok(false));
        assert_eq!(r.is_punct(&kaist("f")), Ok(false));
        assert_eq!(r.is_punct(&sejong("SW")), Ok(true));
    }

    #[test]
    fn coarse_tag_examples() {
        let r = TagsetRegistry::builtin();
        assert_eq!(r.coarse_tag(&sejong("SN")), Ok('N'));
        assert_eq!(r.coarse_tag(&sejong("SH")), Ok('F'));
        assert_eq!(r.coarse_tag(&sejong("NNG")), Ok('N'));
        assert_eq!(r.coarse_tag(&kaist("pvg")), Ok('p'));
    }

    #[test]
    fn coarse_tag_total_over_both_vocabularies() {
        let r = TagsetRegistry::builtin();
        for tagset in [Tagset::Kaist, Tagset::Sejong] {
            let ids: Vec<String> = r.tag_ids(tagset).map(String::from).collect();
            for id in ids {
                let tag = FineTag::new(tagset, id).unwrap();
                r.coarse_tag(&tag).unwrap();
            }
        }
    }

    #[test]
    fn affix_and_punct_never_overlap() {
        let r = TagsetRegistry::builtin();
        let ids: Vec<String> = r.tag_ids(Tagset::Kaist).map(String::from).collect();
        for id in ids {
            let tag = kaist(&id);
            assert!(
                !(r.is_grammatical_affix(&tag).unwrap() && r.is_punct(&tag).unwrap()),
                "{id} classified as both affix and punctuation"
            );
        }
    }

    #[test]
    fn case_labels_only_for_particles() {
        let r = TagsetRegistry::builtin();
        assert_eq!(r.case_label(&kaist("jco")), Some(DependencyLabel::Obj));
        assert_eq!(r.case_label(&kaist("jxt")), Some(DependencyLabel::Tpc));
        assert_eq!(r.case_label(&kaist("jcs")), Some(DependencyLabel::Sbj));
        assert_eq!(r.case_label(&kaist("jcc")), Some(DependencyLabel::Comp));
        assert_eq!(r.case_label(&kaist("jct")), Some(DependencyLabel::Comit));
        assert_eq!(r.case_label(&kaist("jcr")), Some(DependencyLabel::Quot));
        assert_eq!(r.case_label(&kaist("mag")), None);
        // The predicative marker carries no case label.
        assert_eq!(r.case_label(&kaist("jp")), None);
        let ids: Vec<String> = r.tag_ids(Tagset::Kaist).map(String::from).collect();
        for id in ids {
            if r.case_label(&kaist(&id)).is_some() {
                assert!(id.starts_with('j'), "case label from non-particle {id}");
            }
        }
    }

    #[test]
    fn unknown_tags_fall_back_to_prefix_rules() {
        let r = TagsetRegistry::builtin();
        let odd = FineTag::new(Tagset::Kaist, "sxx").unwrap();
        assert!(r.is_punct_or_prefix(&odd));
        assert_eq!(r.coarse_tag_or_first_char(&odd), 's');
        let odd = FineTag::new(Tagset::Kaist, "jzz").unwrap();
        assert!(r.is_grammatical_affix_or_prefix(&odd));
    }
}

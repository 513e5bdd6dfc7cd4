use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} `{value}`")]
pub struct LabelParseError {
    pub kind: &'static str,
    pub value: String,
}

/// Phrase types of the source treebank. A closed set of seven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhraseType {
    Adjp,
    Advp,
    Auxp,
    Ip,
    Np,
    Vp,
    S,
}

impl PhraseType {
    pub const ALL: [PhraseType; 7] = [
        PhraseType::Adjp,
        PhraseType::Advp,
        PhraseType::Auxp,
        PhraseType::Ip,
        PhraseType::Np,
        PhraseType::Vp,
        PhraseType::S,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PhraseType::Adjp => "ADJP",
            PhraseType::Advp => "ADVP",
            PhraseType::Auxp => "AUXP",
            PhraseType::Ip => "IP",
            PhraseType::Np => "NP",
            PhraseType::Vp => "VP",
            PhraseType::S => "S",
        }
    }
}

impl fmt::Display for PhraseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PhraseType {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| LabelParseError {
                kind: "phrase type",
                value: s.to_string(),
            })
    }
}

/// Function tags attached to phrases. Only parenthetical grouping is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionTag {
    Prn,
}

impl FunctionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FunctionTag::Prn => "PRN",
        }
    }
}

impl fmt::Display for FunctionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionTag {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "PRN" => Ok(FunctionTag::Prn),
            _ => Err(LabelParseError {
                kind: "function tag",
                value: s.to_string(),
            }),
        }
    }
}

/// The 21 dependency labels: six case labels read off case particles and
/// fifteen labels inferred from structure and morphology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DependencyLabel {
    // Case labels.
    Comit,
    Comp,
    Obj,
    Quot,
    Sbj,
    Tpc,
    // Inferred labels.
    Adn,
    Adv,
    Amod,
    Aux,
    Cc,
    Conj,
    Dep,
    Ejx,
    Intj,
    Nmod,
    P,
    Prn,
    Root,
    Sub,
    Vmod,
}

impl DependencyLabel {
    pub const ALL: [DependencyLabel; 21] = [
        DependencyLabel::Comit,
        DependencyLabel::Comp,
        DependencyLabel::Obj,
        DependencyLabel::Quot,
        DependencyLabel::Sbj,
        DependencyLabel::Tpc,
        DependencyLabel::Adn,
        DependencyLabel::Adv,
        DependencyLabel::Amod,
        DependencyLabel::Aux,
        DependencyLabel::Cc,
        DependencyLabel::Conj,
        DependencyLabel::Dep,
        DependencyLabel::Ejx,
        DependencyLabel::Intj,
        DependencyLabel::Nmod,
        DependencyLabel::P,
        DependencyLabel::Prn,
        DependencyLabel::Root,
        DependencyLabel::Sub,
        DependencyLabel::Vmod,
    ];

    pub const CASE_LABELS: [DependencyLabel; 6] = [
        DependencyLabel::Comit,
        DependencyLabel::Comp,
        DependencyLabel::Obj,
        DependencyLabel::Quot,
        DependencyLabel::Sbj,
        DependencyLabel::Tpc,
    ];

    pub fn is_case_label(self) -> bool {
        Self::CASE_LABELS.contains(&self)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DependencyLabel::Comit => "comit",
            DependencyLabel::Comp => "comp",
            DependencyLabel::Obj => "obj",
            DependencyLabel::Quot => "quot",
            DependencyLabel::Sbj => "sbj",
            DependencyLabel::Tpc => "tpc",
            DependencyLabel::Adn => "adn",
            DependencyLabel::Adv => "adv",
            DependencyLabel::Amod => "amod",
            DependencyLabel::Aux => "aux",
            DependencyLabel::Cc => "cc",
            DependencyLabel::Conj => "conj",
            DependencyLabel::Dep => "dep",
            DependencyLabel::Ejx => "ejx",
            DependencyLabel::Intj => "intj",
            DependencyLabel::Nmod => "nmod",
            DependencyLabel::P => "p",
            DependencyLabel::Prn => "prn",
            DependencyLabel::Root => "root",
            DependencyLabel::Sub => "sub",
            DependencyLabel::Vmod => "vmod",
        }
    }
}

impl fmt::Display for DependencyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DependencyLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| LabelParseError {
                kind: "dependency label",
                value: s.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn label_inventory_has_exactly_21_distinct_labels() {
        let set: BTreeSet<_> = DependencyLabel::ALL.iter().collect();
        assert_eq!(set.len(), 21);
        assert_eq!(DependencyLabel::CASE_LABELS.len(), 6);
        let inferred = DependencyLabel::ALL
            .iter()
            .filter(|l| !l.is_case_label())
            .count();
        assert_eq!(inferred, 15);
    }

    #[test]
    fn phrase_type_inventory_has_exactly_7() {
        let set: BTreeSet<_> = PhraseType::ALL.iter().collect();
        assert_eq!(set.len(), 7);
    }

    #[test]
    fn labels_round_trip_through_strings() {
        for label in DependencyLabel::ALL {
            assert_eq!(label.as_str().parse::<DependencyLabel>(), Ok(label));
        }
        for phrase in PhraseType::ALL {
            assert_eq!(phrase.as_str().parse::<PhraseType>(), Ok(phrase));
        }
        assert!("PRN".parse::<FunctionTag>().is_ok());
        assert!("TMP".parse::<FunctionTag>().is_err());
    }
}

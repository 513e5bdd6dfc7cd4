use std::str::FromStr;

use thiserror::Error;

use super::label::{DependencyLabel, PhraseType};

/// Whether out-of-vocabulary material rejects input or passes through with
/// a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Lenient,
}

impl Mode {
    pub fn is_lenient(self) -> bool {
        matches!(self, Mode::Lenient)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{text}`")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: invalid value `{value}` for `{key}`")]
    InvalidValue {
        line: usize,
        key: String,
        value: String,
    },
}

/// Parsed overrides from a key/value config file.
///
/// Recognized keys:
///
/// ```text
/// mode = strict | lenient
/// prn_label = NP                  # phrase label for parenthetical groups
/// case_label.<tag> = <label>      # add or change a particle mapping
/// case_label.<tag> =              # remove a particle mapping
/// punct.kaist = sd,sf,sl,sp,sr,su,sy
/// punct.sejong = SF,SP,SS,SE,SO,SW
/// affix_prefixes.kaist = j,e,x
/// ```
///
/// Lines starting with `#` and blank lines are ignored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub mode: Option<Mode>,
    pub prn_label: Option<PhraseType>,
    pub case_labels: Vec<(String, Option<DependencyLabel>)>,
    pub punct_kaist: Option<Vec<String>>,
    pub punct_sejong: Option<Vec<String>>,
    pub affix_prefixes_kaist: Option<Vec<char>>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::MalformedLine {
                    line: lineno,
                    text: line.to_string(),
                })?;
            let key = key.trim();
            let value = value.trim();
            let invalid = |k: &str| ConfigError::InvalidValue {
                line: lineno,
                key: k.to_string(),
                value: value.to_string(),
            };
            match key {
                "mode" => {
                    config.mode = Some(match value {
                        "strict" => Mode::Strict,
                        "lenient" => Mode::Lenient,
                        _ => return Err(invalid(key)),
                    });
                }
                "prn_label" => {
                    config.prn_label = Some(PhraseType::from_str(value).map_err(|_| invalid(key))?);
                }
                "punct.kaist" => config.punct_kaist = Some(split_list(value)),
                "punct.sejong" => config.punct_sejong = Some(split_list(value)),
                "affix_prefixes.kaist" => {
                    let mut prefixes = Vec::new();
                    for item in split_list(value) {
                        let mut chars = item.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => prefixes.push(c),
                            _ => return Err(invalid(key)),
                        }
                    }
                    config.affix_prefixes_kaist = Some(prefixes);
                }
                _ => {
                    if let Some(tag) = key.strip_prefix("case_label.") {
                        let label = if value.is_empty() {
                            None
                        } else {
                            Some(DependencyLabel::from_str(value).map_err(|_| invalid(key))?)
                        };
                        config.case_labels.push((tag.to_string(), label));
                    } else {
                        return Err(ConfigError::UnknownKey {
                            line: lineno,
                            key: key.to_string(),
                        });
                    }
                }
            }
        }
        Ok(config)
    }
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{FineTag, Tagset, TagsetRegistry};

    #[test]
    fn parses_all_key_kinds() {
        let text = "\
# sample
mode = lenient
prn_label = ADVP
case_label.jcv = dep
case_label.jxt =
punct.kaist = sd, sf
affix_prefixes.kaist = j,e,x
";
        let config = Config::parse(text).unwrap();
        assert_eq!(config.mode, Some(Mode::Lenient));
        assert_eq!(config.prn_label, Some(PhraseType::Advp));
        assert_eq!(
            config.case_labels,
            vec![
                ("jcv".to_string(), Some(DependencyLabel::Dep)),
                ("jxt".to_string(), None),
            ]
        );
        assert_eq!(
            config.punct_kaist,
            Some(vec!["sd".to_string(), "sf".to_string()])
        );
    }

    #[test]
    fn overrides_apply_to_registry() {
        let config = Config::parse("case_label.jxt =\ncase_label.jcv = comit\n").unwrap();
        let r = TagsetRegistry::with_config(&config).unwrap();
        let jxt = FineTag::new(Tagset::Kaist, "jxt").unwrap();
        let jcv = FineTag::new(Tagset::Kaist, "jcv").unwrap();
        assert_eq!(r.case_label(&jxt), None);
        assert_eq!(r.case_label(&jcv), Some(DependencyLabel::Comit));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(
            Config::parse("frobnicate = 1"),
            Err(ConfigError::UnknownKey { .. })
        ));
        assert!(matches!(
            Config::parse("mode = fuzzy"),
            Err(ConfigError::InvalidValue { .. })
        ));
        assert!(matches!(
            Config::parse("just a line"),
            Err(ConfigError::MalformedLine { .. })
        ));
    }

    #[test]
    fn rejects_non_particle_case_override() {
        let config = Config::parse("case_label.mag = adv").unwrap();
        assert!(TagsetRegistry::with_config(&config).is_err());
    }

    #[test]
    fn rejects_punct_overlapping_affix_prefixes() {
        let config = Config::parse("punct.kaist = sf,jp").unwrap();
        assert!(TagsetRegistry::with_config(&config).is_err());
    }
}

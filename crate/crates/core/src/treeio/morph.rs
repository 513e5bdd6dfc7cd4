//! Eojeol morphological-analysis files.
//!
//! One eojeol per line: `surface<TAB>form/tag+form/tag+…`. Sentences are
//! separated by blank lines. `+ / \` and whitespace are backslash-escaped
//! inside forms and tags.

use std::io::{self, BufRead};

use crate::model::{Eojeol, FineTag, Mode, Morpheme, Tagset, TagsetRegistry};

use super::diagnostic::{codes, Diagnostic};
use super::escape::{escape_into, FIELD_SPECIALS};

/// Split a plus-joined field into unescaped parts.
pub(crate) fn split_plus_joined(text: &str) -> Result<Vec<String>, String> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => match chars.next() {
                Some(escaped) => current.push(escaped),
                None => return Err("dangling backslash".to_string()),
            },
            '+' => {
                parts.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    parts.push(current);
    Ok(parts)
}

/// Parse one `surface<TAB>analysis` line into an eojeol carrying its
/// explicit surface.
pub fn parse_morph_line(
    line: &str,
    registry: &TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
    warnings: &mut Vec<Diagnostic>,
) -> Result<Eojeol, Diagnostic> {
    let (surface, analysis) = line
        .split_once('\t')
        .ok_or_else(|| Diagnostic::error(codes::MISSING_TAB, "expected `surface<TAB>analysis`"))?;
    if surface.is_empty() {
        return Err(Diagnostic::error(codes::EMPTY_ANALYSIS, "empty surface"));
    }
    let analysis = analysis.trim_end_matches(['\n', '\r']);
    if analysis.is_empty() {
        return Err(Diagnostic::error(
            codes::EMPTY_ANALYSIS,
            "empty morpheme list",
        ));
    }
    let mut morphemes = Vec::new();
    for pair in split_plus_joined(analysis).map_err(|e| Diagnostic::error(codes::BAD_ESCAPE, e))? {
        // The form may contain escaped slashes; the tag follows the last
        // unescaped slash, which `split_plus_joined` has already resolved,
        // so re-split on the raw text instead.
        let (form, tag_text) = split_morpheme_pair(&pair).ok_or_else(|| {
            Diagnostic::error(
                codes::MALFORMED_MORPHEME,
                format!("morpheme `{pair}` is missing its `/tag`"),
            )
        })?;
        if form.is_empty() || tag_text.is_empty() {
            return Err(Diagnostic::error(
                codes::MALFORMED_MORPHEME,
                format!("malformed morpheme pair `{pair}`"),
            ));
        }
        let tag = FineTag::new(tagset, tag_text)
            .map_err(|e| Diagnostic::error(codes::MALFORMED_MORPHEME, e.to_string()))?;
        if !registry.validate_tag(tagset, tag.id()) {
            let message = format!("unknown {tagset} tag `{}`", tag.id());
            match mode {
                Mode::Strict => return Err(Diagnostic::error(codes::UNKNOWN_TAG, message)),
                Mode::Lenient => warnings.push(Diagnostic::warning(codes::UNKNOWN_TAG, message)),
            }
        }
        morphemes.push(
            Morpheme::new(form, tag)
                .map_err(|e| Diagnostic::error(codes::MALFORMED_MORPHEME, e.to_string()))?,
        );
    }
    Eojeol::with_surface(morphemes, surface)
        .map_err(|e| Diagnostic::error(codes::EMPTY_ANALYSIS, e.to_string()))
}

/// Split an already plus-split `form/tag` pair; the slash separating the tag
/// is the last one in the unescaped text, so forms keep their own slashes by
/// escaping them before joining.
fn split_morpheme_pair(pair: &str) -> Option<(String, String)> {
    let idx = pair.rfind('/')?;
    Some((pair[..idx].to_string(), pair[idx + 1..].to_string()))
}

/// Render one eojeol as a morph-file line.
pub fn format_morph_line(eojeol: &Eojeol) -> String {
    let mut out = String::new();
    out.push_str(&eojeol.surface());
    out.push('\t');
    for (i, morpheme) in eojeol.morphemes().iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        let mut form = String::new();
        escape_into(&mut form, morpheme.form(), FIELD_SPECIALS);
        out.push_str(&form);
        out.push('/');
        let mut tag = String::new();
        escape_into(&mut tag, morpheme.tag().id(), FIELD_SPECIALS);
        out.push_str(&tag);
    }
    out
}

/// Outcome of reading one sentence from a morph file.
#[derive(Debug, Clone)]
pub enum MorphOutcome {
    Sentence {
        ordinal: usize,
        eojeols: Vec<Eojeol>,
        warnings: Vec<Diagnostic>,
    },
    Skipped {
        ordinal: usize,
        diagnostics: Vec<Diagnostic>,
    },
}

/// Streaming reader over blank-line separated sentences of morph lines.
pub struct MorphReader<R> {
    input: R,
    registry: TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
    line_no: usize,
    ordinal: usize,
    at_eof: bool,
}

impl<R: BufRead> MorphReader<R> {
    pub fn new(input: R, registry: &TagsetRegistry, tagset: Tagset, mode: Mode) -> Self {
        MorphReader {
            input,
            registry: registry.clone(),
            tagset,
            mode,
            line_no: 0,
            ordinal: 0,
            at_eof: false,
        }
    }
}

impl<R: BufRead> Iterator for MorphReader<R> {
    type Item = io::Result<MorphOutcome>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.at_eof {
            return None;
        }
        let mut eojeols = Vec::new();
        let mut warnings = Vec::new();
        let mut errors = Vec::new();
        let mut saw_line = false;
        loop {
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) => {
                    self.at_eof = true;
                    break;
                }
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            self.line_no += 1;
            let trimmed = line.trim_end_matches(['\n', '\r']);
            if trimmed.is_empty() {
                if saw_line {
                    break;
                }
                continue;
            }
            saw_line = true;
            let mut line_warnings = Vec::new();
            match parse_morph_line(
                trimmed,
                &self.registry,
                self.tagset,
                self.mode,
                &mut line_warnings,
            ) {
                Ok(eojeol) => eojeols.push(eojeol),
                Err(d) => errors.push(d.at_line(self.line_no, 1)),
            }
            warnings.extend(
                line_warnings
                    .into_iter()
                    .map(|d| d.at_line(self.line_no, 1)),
            );
        }
        if !saw_line {
            return None;
        }
        self.ordinal += 1;
        if !errors.is_empty() {
            errors.extend(warnings);
            return Some(Ok(MorphOutcome::Skipped {
                ordinal: self.ordinal,
                diagnostics: errors
                    .into_iter()
                    .map(|d| d.at_ordinal(self.ordinal))
                    .collect(),
            }));
        }
        Some(Ok(MorphOutcome::Sentence {
            ordinal: self.ordinal,
            eojeols,
            warnings: warnings
                .into_iter()
                .map(|d| d.at_ordinal(self.ordinal))
                .collect(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(line: &str) -> Eojeol {
        let registry = TagsetRegistry::builtin();
        let mut warnings = Vec::new();
        let parsed =
            parse_morph_line(line, &registry, Tagset::Kaist, Mode::Strict, &mut warnings).unwrap();
        assert!(warnings.is_empty());
        parsed
    }

    #[test]
    fn parses_simple_analysis() {
        let eojeol = parse("나는\t나/npp+는/jxt");
        assert_eq!(eojeol.surface(), "나는");
        assert_eq!(eojeol.morphemes().len(), 2);
        assert_eq!(eojeol.morphemes()[0].form(), "나");
        assert_eq!(eojeol.morphemes()[1].tag().id(), "jxt");
    }

    #[test]
    fn fused_surface_differs_from_concatenation() {
        let eojeol = parse("들이켰다\t들이키/pvg+였/ep+다/ef+./sf");
        assert_eq!(eojeol.morphemes().len(), 4);
        assert_eq!(eojeol.surface(), "들이켰다");
        assert_ne!(eojeol.surface(), eojeol.concatenated_forms());
    }

    #[test]
    fn escaped_plus_is_a_literal_form() {
        let eojeol = parse("+\t\\+/sy");
        assert_eq!(eojeol.morphemes().len(), 1);
        assert_eq!(eojeol.morphemes()[0].form(), "+");
        assert_eq!(eojeol.surface(), "+");
    }

    #[test]
    fn error_cases() {
        let registry = TagsetRegistry::builtin();
        let mut w = Vec::new();
        let run = |line: &str, w: &mut Vec<Diagnostic>| {
            parse_morph_line(line, &registry, Tagset::Kaist, Mode::Strict, w)
        };
        assert_eq!(
            run("나는 나/npp", &mut w).unwrap_err().code,
            codes::MISSING_TAB
        );
        assert_eq!(
            run("나는\t", &mut w).unwrap_err().code,
            codes::EMPTY_ANALYSIS
        );
        assert_eq!(
            run("나는\t나는", &mut w).unwrap_err().code,
            codes::MALFORMED_MORPHEME
        );
    }

    #[test]
    fn format_round_trips() {
        for line in [
            "나는\t나/npp+는/jxt",
            "+\t\\+/sy",
            "들이켰다\t들이키/pvg+였/ep+다/ef",
        ] {
            let eojeol = parse(line);
            assert_eq!(format_morph_line(&eojeol), line);
        }
    }

    #[test]
    fn reader_splits_sentences_on_blank_lines() {
        let text = "나는\t나/npp+는/jxt\n들이켰다\t들이키/pvg+였/ep+다/ef\n\n밥\t밥/ncn\n";
        let registry = TagsetRegistry::builtin();
        let reader = MorphReader::new(text.as_bytes(), &registry, Tagset::Kaist, Mode::Strict);
        let sentences: Vec<_> = reader.map(Result::unwrap).collect();
        assert_eq!(sentences.len(), 2);
        match &sentences[0] {
            MorphOutcome::Sentence { eojeols, .. } => assert_eq!(eojeols.len(), 2),
            _ => panic!("expected sentence"),
        }
    }

    #[test]
    fn reader_skips_bad_sentences() {
        let text = "나는\t나/npp+는/jxt\n\nbroken line\n\n밥\t밥/ncn\n";
        let registry = TagsetRegistry::builtin();
        let reader = MorphReader::new(text.as_bytes(), &registry, Tagset::Kaist, Mode::Strict);
        let outcomes: Vec<_> = reader.map(Result::unwrap).collect();
        assert_eq!(outcomes.len(), 3);
        assert!(matches!(outcomes[1], MorphOutcome::Skipped { .. }));
    }
}

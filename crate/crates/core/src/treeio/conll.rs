//! CoNLL-X reading and writing.
//!
//! Ten tab-separated columns per token: ID, FORM, LEMMA, CPOSTAG, POSTAG,
//! FEATS, HEAD, DEPREL, PHEAD, PDEPREL; one blank line terminates each
//! sentence. FORM is the eojeol surface; LEMMA and POSTAG carry the
//! plus-joined morpheme forms and fine tags; CPOSTAG carries the matching
//! plus-joined single-character coarse tags. FEATS, PHEAD and PDEPREL are
//! written as `_` and ignored on input.

use std::io::{self, BufRead, Write};
use std::str::FromStr;

use crate::model::{
    DepToken, DependencyLabel, DependencyTree, Eojeol, FineTag, Mode, Morpheme, Tagset,
    TagsetRegistry,
};

use super::diagnostic::{codes, Diagnostic};
use super::escape::{escape, FIELD_SPECIALS};
use super::morph::split_plus_joined;

fn write_token(
    out: &mut String,
    token: &DepToken,
    registry: &TagsetRegistry,
    mode: Mode,
) -> Result<(), Diagnostic> {
    let surface = token.surface();
    if surface.is_empty() || surface.chars().any(char::is_whitespace) {
        return Err(Diagnostic::error(
            codes::UNREPRESENTABLE,
            format!("surface `{surface}` is empty or contains whitespace"),
        ));
    }
    let mut lemma = String::new();
    let mut cpos = String::new();
    let mut pos = String::new();
    for (i, morpheme) in token.eojeol.morphemes().iter().enumerate() {
        if i > 0 {
            lemma.push('+');
            cpos.push('+');
            pos.push('+');
        }
        let coarse = match mode {
            Mode::Strict => registry
                .coarse_tag(morpheme.tag())
                .map_err(|e| Diagnostic::error(codes::UNKNOWN_TAG, e.to_string()))?,
            Mode::Lenient => registry.coarse_tag_or_first_char(morpheme.tag()),
        };
        lemma.push_str(&escape(morpheme.form(), FIELD_SPECIALS));
        cpos.push_str(&escape(&coarse.to_string(), FIELD_SPECIALS));
        pos.push_str(&escape(morpheme.tag().id(), FIELD_SPECIALS));
    }
    out.push_str(&format!(
        "{}\t{}\t{}\t{}\t{}\t_\t{}\t{}\t_\t_\n",
        token.index, surface, lemma, cpos, pos, token.head, token.label
    ));
    Ok(())
}

/// Render one dependency tree as a CoNLL-X block terminated by a blank line.
pub fn write_conll(
    tree: &DependencyTree,
    registry: &TagsetRegistry,
    mode: Mode,
) -> Result<String, Diagnostic> {
    let mut out = String::new();
    for token in tree {
        write_token(&mut out, token, registry, mode)?;
    }
    out.push('\n');
    Ok(out)
}

/// Streaming CoNLL-X writer.
pub struct ConllWriter<W> {
    out: W,
    registry: TagsetRegistry,
    mode: Mode,
}

impl<W: Write> ConllWriter<W> {
    pub fn new(out: W, registry: &TagsetRegistry, mode: Mode) -> Self {
        ConllWriter {
            out,
            registry: registry.clone(),
            mode,
        }
    }

    pub fn write_tree(&mut self, tree: &DependencyTree) -> io::Result<Result<(), Diagnostic>> {
        match write_conll(tree, &self.registry, self.mode) {
            Ok(block) => {
                self.out.write_all(block.as_bytes())?;
                Ok(Ok(()))
            }
            Err(d) => Ok(Err(d)),
        }
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

fn parse_token_line(
    line: &str,
    expected_index: usize,
    registry: &TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
    warnings: &mut Vec<Diagnostic>,
) -> Result<DepToken, Diagnostic> {
    let columns: Vec<&str> = line.split('\t').collect();
    if columns.len() != 10 {
        return Err(Diagnostic::error(
            codes::BAD_COLUMN_COUNT,
            format!("expected 10 columns, found {}", columns.len()),
        ));
    }
    let index: usize = columns[0].parse().map_err(|_| {
        Diagnostic::error(
            codes::BAD_TOKEN_ID,
            format!("bad token id `{}`", columns[0]),
        )
    })?;
    if index != expected_index {
        return Err(Diagnostic::error(
            codes::BAD_TOKEN_ID,
            format!("token id {index} out of sequence, expected {expected_index}"),
        ));
    }
    let form = columns[1];
    if form.is_empty() {
        return Err(Diagnostic::error(codes::BAD_COLUMN_COUNT, "empty FORM"));
    }
    let forms =
        split_plus_joined(columns[2]).map_err(|e| Diagnostic::error(codes::BAD_ESCAPE, e))?;
    let tags =
        split_plus_joined(columns[4]).map_err(|e| Diagnostic::error(codes::BAD_ESCAPE, e))?;
    if forms.len() != tags.len() {
        return Err(Diagnostic::error(
            codes::COLUMN_ARITY,
            format!(
                "LEMMA has {} morphemes but POSTAG has {}",
                forms.len(),
                tags.len()
            ),
        ));
    }
    let mut morphemes = Vec::with_capacity(forms.len());
    for (form, tag_text) in forms.into_iter().zip(tags) {
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
    let head: usize = columns[6].parse().map_err(|_| {
        Diagnostic::error(
            codes::BAD_HEAD,
            format!("non-numeric head `{}`", columns[6]),
        )
    })?;
    let label = DependencyLabel::from_str(columns[7]).map_err(|_| {
        Diagnostic::error(
            codes::UNKNOWN_LABEL,
            format!("unknown dependency label `{}`", columns[7]),
        )
    })?;
    let eojeol = Eojeol::with_surface(morphemes, form)
        .map_err(|e| Diagnostic::error(codes::EMPTY_ANALYSIS, e.to_string()))?;
    Ok(DepToken {
        index,
        eojeol,
        head,
        label,
    })
}

/// Parse one blank-line-free CoNLL-X block.
pub fn parse_conll_block(
    block: &str,
    registry: &TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
) -> Result<(DependencyTree, Vec<Diagnostic>), Vec<Diagnostic>> {
    let mut warnings = Vec::new();
    let mut tokens = Vec::new();
    for (offset, line) in block.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        match parse_token_line(
            line,
            tokens.len() + 1,
            registry,
            tagset,
            mode,
            &mut warnings,
        ) {
            Ok(token) => tokens.push(token),
            Err(d) => {
                let mut diagnostics = warnings;
                diagnostics.push(d.at_line(offset + 1, 1));
                return Err(diagnostics);
            }
        }
    }
    let len = tokens.len();
    if len == 0 {
        return Err(vec![Diagnostic::error(
            codes::EMPTY_ANALYSIS,
            "empty sentence",
        )]);
    }
    for token in &tokens {
        if token.head > len {
            let mut diagnostics = warnings;
            diagnostics.push(Diagnostic::error(
                codes::HEAD_OUT_OF_RANGE,
                format!(
                    "token {}: head {} out of range (sentence length {len})",
                    token.index, token.head
                ),
            ));
            return Err(diagnostics);
        }
        if token.head == token.index {
            let mut diagnostics = warnings;
            diagnostics.push(Diagnostic::error(
                codes::SELF_HEAD,
                format!("token {} is its own head", token.index),
            ));
            return Err(diagnostics);
        }
    }
    let tree = DependencyTree::new(tokens).expect("per-token invariants were checked above");
    Ok((tree, warnings))
}

/// Parse a whole CoNLL-X text: one tree per blank-line-separated block.
pub fn from_conll(
    text: &str,
    registry: &TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
) -> Result<Vec<DependencyTree>, Vec<Diagnostic>> {
    let mut trees = Vec::new();
    for outcome in ConllReader::new(text.as_bytes(), registry, tagset, mode) {
        match outcome.expect("reading from a string cannot fail") {
            ConllOutcome::Sentence { tree, .. } => trees.push(tree),
            ConllOutcome::Skipped { diagnostics, .. } => return Err(diagnostics),
        }
    }
    Ok(trees)
}

/// Outcome of reading one sentence from a CoNLL-X stream.
#[derive(Debug, Clone)]
pub enum ConllOutcome {
    Sentence {
        ordinal: usize,
        tree: DependencyTree,
        warnings: Vec<Diagnostic>,
    },
    Skipped {
        ordinal: usize,
        diagnostics: Vec<Diagnostic>,
    },
}

/// Streaming reader over blank-line separated CoNLL-X sentences.
pub struct ConllReader<R> {
    input: R,
    registry: TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
    line_no: usize,
    ordinal: usize,
    kept: usize,
    dropped: usize,
    at_eof: bool,
}

impl<R: BufRead> ConllReader<R> {
    pub fn new(input: R, registry: &TagsetRegistry, tagset: Tagset, mode: Mode) -> Self {
        ConllReader {
            input,
            registry: registry.clone(),
            tagset,
            mode,
            line_no: 0,
            ordinal: 0,
            kept: 0,
            dropped: 0,
            at_eof: false,
        }
    }

    pub fn kept(&self) -> usize {
        self.kept
    }

    pub fn dropped(&self) -> usize {
        self.dropped
    }
}

impl<R: BufRead> Iterator for ConllReader<R> {
    type Item = io::Result<ConllOutcome>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.at_eof {
            return None;
        }
        let mut block = String::new();
        let mut start_line = 0;
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
                if !block.is_empty() {
                    break;
                }
                continue;
            }
            if block.is_empty() {
                start_line = self.line_no;
            }
            block.push_str(trimmed);
            block.push('\n');
        }
        if block.is_empty() {
            return None;
        }
        self.ordinal += 1;
        let relocate = |mut d: Diagnostic| {
            if let Some(line) = d.location.line {
                d.location.line = Some(start_line + line - 1);
            }
            d.at_ordinal(self.ordinal)
        };
        match parse_conll_block(&block, &self.registry, self.tagset, self.mode) {
            Ok((tree, warnings)) => {
                self.kept += 1;
                Some(Ok(ConllOutcome::Sentence {
                    ordinal: self.ordinal,
                    tree,
                    warnings: warnings.into_iter().map(relocate).collect(),
                }))
            }
            Err(diagnostics) => {
                self.dropped += 1;
                Some(Ok(ConllOutcome::Skipped {
                    ordinal: self.ordinal,
                    diagnostics: diagnostics.into_iter().map(relocate).collect(),
                }))
            }
        }
    }
}

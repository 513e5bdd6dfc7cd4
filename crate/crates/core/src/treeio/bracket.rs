//! Bracketed constituent-tree format.
//!
//! ```text
//! tree     := '(' LABEL ('-' FTAG)* ('+' morpheme)* item+ ')'
//! item     := tree | leaf
//! leaf     := morpheme ('+' morpheme)* ('=' SURFACE)?
//! morpheme := FORM '/' TAG
//! ```
//!
//! Items are whitespace-separated. `( ) + / = \` and whitespace are escaped
//! with a backslash inside forms, tags and surfaces. Phrase-level `+affix`
//! sequences carry the agglutinated affixes of the source treebank; the
//! Penn-style flavor never uses them. A leaf's `=SURFACE` records a fused
//! surface form that differs from the concatenation of its morpheme forms
//! and is only emitted in that case.

use std::io::{self, BufRead};
use std::str::FromStr;

use crate::model::{
    Eojeol, FineTag, FunctionTag, Mode, Morpheme, PhraseType, Tagset, TagsetRegistry,
};

use super::diagnostic::{codes, Diagnostic};
use super::escape::{escape_into, BRACKET_SPECIALS};

/// A node of a constituent tree: a phrase over at least one child, or a
/// terminal holding one eojeol.
///
/// Phrases must keep a non-empty child list; use the constructors where
/// possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstituentNode {
    Phrase {
        label: PhraseType,
        ftags: Vec<FunctionTag>,
        affixes: Vec<Morpheme>,
        children: Vec<ConstituentNode>,
    },
    Terminal {
        eojeol: Eojeol,
    },
}

impl ConstituentNode {
    pub fn phrase(label: PhraseType, children: Vec<ConstituentNode>) -> Self {
        assert!(!children.is_empty(), "phrase must have at least one child");
        ConstituentNode::Phrase {
            label,
            ftags: Vec::new(),
            affixes: Vec::new(),
            children,
        }
    }

    pub fn terminal(eojeol: Eojeol) -> Self {
        ConstituentNode::Terminal { eojeol }
    }

    pub fn is_terminal(&self) -> bool {
        matches!(self, ConstituentNode::Terminal { .. })
    }

    pub fn label(&self) -> Option<PhraseType> {
        match self {
            ConstituentNode::Phrase { label, .. } => Some(*label),
            ConstituentNode::Terminal { .. } => None,
        }
    }

    pub fn has_ftag(&self, ftag: FunctionTag) -> bool {
        match self {
            ConstituentNode::Phrase { ftags, .. } => ftags.contains(&ftag),
            ConstituentNode::Terminal { .. } => false,
        }
    }

    pub fn children(&self) -> &[ConstituentNode] {
        match self {
            ConstituentNode::Phrase { children, .. } => children,
            ConstituentNode::Terminal { .. } => &[],
        }
    }

    pub fn eojeol(&self) -> Option<&Eojeol> {
        match self {
            ConstituentNode::Terminal { eojeol } => Some(eojeol),
            ConstituentNode::Phrase { .. } => None,
        }
    }

    /// Terminals in surface order.
    pub fn terminals(&self) -> Vec<&Eojeol> {
        let mut out = Vec::new();
        self.collect_terminals(&mut out);
        out
    }

    fn collect_terminals<'a>(&'a self, out: &mut Vec<&'a Eojeol>) {
        match self {
            ConstituentNode::Terminal { eojeol } => out.push(eojeol),
            ConstituentNode::Phrase { children, .. } => {
                for child in children {
                    child.collect_terminals(out);
                }
            }
        }
    }

    pub fn terminal_count(&self) -> usize {
        match self {
            ConstituentNode::Terminal { .. } => 1,
            ConstituentNode::Phrase { children, .. } => {
                children.iter().map(ConstituentNode::terminal_count).sum()
            }
        }
    }

    /// True iff no phrase in the tree carries agglutinated affixes.
    pub fn is_affix_free(&self) -> bool {
        match self {
            ConstituentNode::Terminal { .. } => true,
            ConstituentNode::Phrase {
                affixes, children, ..
            } => affixes.is_empty() && children.iter().all(ConstituentNode::is_affix_free),
        }
    }

    /// All morphemes of the subtree in surface order; phrase-level affixes
    /// follow the content of their phrase, mirroring how agglutination is
    /// read off the source trees.
    pub fn morphemes_in_order(&self) -> Vec<&Morpheme> {
        let mut out = Vec::new();
        self.collect_morphemes(&mut out);
        out
    }

    fn collect_morphemes<'a>(&'a self, out: &mut Vec<&'a Morpheme>) {
        match self {
            ConstituentNode::Terminal { eojeol } => out.extend(eojeol.morphemes()),
            ConstituentNode::Phrase {
                affixes, children, ..
            } => {
                for child in children {
                    child.collect_morphemes(out);
                }
                out.extend(affixes);
            }
        }
    }
}

/// Options controlling tag validation and root-label checking.
#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub tagset: Tagset,
    pub mode: Mode,
    /// Require the root phrase to be labeled `S` (relaxed to a warning in
    /// lenient mode).
    pub expect_sentence_root: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            tagset: Tagset::Kaist,
            mode: Mode::Strict,
            expect_sentence_root: true,
        }
    }
}

impl ParseOptions {
    pub fn lenient(tagset: Tagset) -> Self {
        ParseOptions {
            tagset,
            mode: Mode::Lenient,
            ..Default::default()
        }
    }
}

/// A successfully parsed tree plus any lenient-mode warnings.
#[derive(Debug, Clone)]
pub struct ParsedTree {
    pub tree: ConstituentNode,
    pub warnings: Vec<Diagnostic>,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    registry: &'a TagsetRegistry,
    options: &'a ParseOptions,
    warnings: Vec<Diagnostic>,
}

type ParseResult<T> = Result<T, Diagnostic>;

impl<'a> Cursor<'a> {
    fn new(text: &str, registry: &'a TagsetRegistry, options: &'a ParseOptions) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            registry,
            options,
            warnings: Vec::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, code: &'static str, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(code, message).at_line(self.line, self.col)
    }

    fn skip_whitespace(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    /// Read an escaped word, stopping at any of `stops` or whitespace.
    fn word(&mut self, stops: &[char]) -> ParseResult<String> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c == '\\' {
                self.bump();
                match self.bump() {
                    Some(escaped) => out.push(escaped),
                    None => return Err(self.error(codes::BAD_ESCAPE, "dangling backslash at end")),
                }
            } else if c.is_whitespace() || stops.contains(&c) {
                break;
            } else {
                out.push(c);
                self.bump();
            }
        }
        Ok(out)
    }

    fn validate_tag(&mut self, tag: &FineTag) -> ParseResult<()> {
        if self.registry.validate_tag(tag.tagset(), tag.id()) {
            return Ok(());
        }
        let message = format!("unknown {} tag `{}`", tag.tagset(), tag.id());
        match self.options.mode {
            Mode::Strict => Err(self.error(codes::UNKNOWN_TAG, message)),
            Mode::Lenient => {
                self.warnings.push(
                    Diagnostic::warning(codes::UNKNOWN_TAG, message).at_line(self.line, self.col),
                );
                Ok(())
            }
        }
    }

    fn morpheme(&mut self) -> ParseResult<Morpheme> {
        let form = self.word(BRACKET_SPECIALS)?;
        if form.is_empty() {
            return Err(self.error(codes::MALFORMED_MORPHEME, "empty morpheme form"));
        }
        if self.peek() != Some('/') {
            return Err(self.error(
                codes::MALFORMED_MORPHEME,
                format!("morpheme `{form}` is missing its `/tag`"),
            ));
        }
        self.bump();
        let tag_text = self.word(BRACKET_SPECIALS)?;
        if tag_text.is_empty() {
            return Err(self.error(codes::MALFORMED_MORPHEME, "empty tag"));
        }
        let tag = FineTag::new(self.options.tagset, tag_text)
            .map_err(|e| self.error(codes::MALFORMED_MORPHEME, e.to_string()))?;
        self.validate_tag(&tag)?;
        Morpheme::new(form, tag).map_err(|e| self.error(codes::MALFORMED_MORPHEME, e.to_string()))
    }

    fn leaf(&mut self) -> ParseResult<ConstituentNode> {
        let mut morphemes = vec![self.morpheme()?];
        while self.peek() == Some('+') {
            self.bump();
            morphemes.push(self.morpheme()?);
        }
        let surface = if self.peek() == Some('=') {
            self.bump();
            let s = self.word(BRACKET_SPECIALS)?;
            if s.is_empty() {
                return Err(self.error(codes::MALFORMED_MORPHEME, "empty surface after `=`"));
            }
            Some(s)
        } else {
            None
        };
        let eojeol = match surface {
            Some(s) => Eojeol::with_surface(morphemes, s),
            None => Eojeol::new(morphemes),
        }
        .map_err(|e| self.error(codes::MALFORMED_MORPHEME, e.to_string()))?;
        Ok(ConstituentNode::Terminal { eojeol })
    }

    fn phrase(&mut self) -> ParseResult<ConstituentNode> {
        debug_assert_eq!(self.peek(), Some('('));
        self.bump();
        self.skip_whitespace();
        let label_text = self.word(&['-', '(', ')', '+', '/', '=', '\\'])?;
        let label = PhraseType::from_str(&label_text).map_err(|_| {
            self.error(
                codes::UNKNOWN_PHRASE_LABEL,
                format!("unknown phrase label `{label_text}`"),
            )
        })?;
        let mut ftags = Vec::new();
        while self.peek() == Some('-') {
            self.bump();
            let ftag_text = self.word(&['-', '(', ')', '+', '/', '=', '\\'])?;
            let ftag = FunctionTag::from_str(&ftag_text).map_err(|_| {
                self.error(
                    codes::UNKNOWN_FUNCTION_TAG,
                    format!("unknown function tag `{ftag_text}`"),
                )
            })?;
            ftags.push(ftag);
        }
        let mut affixes = Vec::new();
        while self.peek() == Some('+') {
            self.bump();
            affixes.push(self.morpheme()?);
        }
        let mut children = Vec::new();
        loop {
            self.skip_whitespace();
            match self.peek() {
                Some('(') => children.push(self.phrase()?),
                Some(')') => {
                    self.bump();
                    break;
                }
                Some(_) => children.push(self.leaf()?),
                None => {
                    return Err(self.error(
                        codes::UNBALANCED_BRACKETS,
                        format!("unbalanced brackets: `{label}` phrase is never closed"),
                    ))
                }
            }
        }
        if children.is_empty() {
            return Err(self.error(
                codes::EMPTY_PHRASE,
                format!("phrase `{label}` has no children"),
            ));
        }
        Ok(ConstituentNode::Phrase {
            label,
            ftags,
            affixes,
            children,
        })
    }
}

/// Parse one complete bracketed expression.
///
/// Returns the tree and any lenient-mode warnings, or the diagnostics that
/// rejected it (at least one of error severity).
pub fn parse_tree(
    text: &str,
    registry: &TagsetRegistry,
    options: &ParseOptions,
) -> Result<ParsedTree, Vec<Diagnostic>> {
    let mut cursor = Cursor::new(text, registry, options);
    cursor.skip_whitespace();
    let reject = |cursor: Cursor, error: Diagnostic| {
        let mut diagnostics = cursor.warnings;
        diagnostics.push(error);
        Err(diagnostics)
    };
    if cursor.peek() != Some('(') {
        let error = cursor.error(codes::UNBALANCED_BRACKETS, "expected `(` to open a tree");
        return reject(cursor, error);
    }
    let tree = match cursor.phrase() {
        Ok(tree) => tree,
        Err(error) => return reject(cursor, error),
    };
    cursor.skip_whitespace();
    if cursor.peek().is_some() {
        let error = cursor.error(codes::STRAY_TEXT, "trailing text after the closing bracket");
        return reject(cursor, error);
    }
    if options.expect_sentence_root && tree.label() != Some(PhraseType::S) {
        let label = tree.label().expect("root is a phrase");
        let message = format!("root phrase is `{label}`, expected `S`");
        match options.mode {
            Mode::Strict => {
                let error = Diagnostic::error(codes::ROOT_NOT_SENTENCE, message).at_line(1, 1);
                return reject(cursor, error);
            }
            Mode::Lenient => cursor
                .warnings
                .push(Diagnostic::warning(codes::ROOT_NOT_SENTENCE, message).at_line(1, 1)),
        }
    }
    Ok(ParsedTree {
        tree,
        warnings: cursor.warnings,
    })
}

fn write_morpheme(out: &mut String, morpheme: &Morpheme) {
    escape_into(out, morpheme.form(), BRACKET_SPECIALS);
    out.push('/');
    escape_into(out, morpheme.tag().id(), BRACKET_SPECIALS);
}

fn write_node(out: &mut String, node: &ConstituentNode) {
    match node {
        ConstituentNode::Terminal { eojeol } => {
            for (i, morpheme) in eojeol.morphemes().iter().enumerate() {
                if i > 0 {
                    out.push('+');
                }
                write_morpheme(out, morpheme);
            }
            if let Some(surface) = eojeol.explicit_surface() {
                out.push('=');
                escape_into(out, surface, BRACKET_SPECIALS);
            }
        }
        ConstituentNode::Phrase {
            label,
            ftags,
            affixes,
            children,
        } => {
            out.push('(');
            out.push_str(label.as_str());
            for ftag in ftags {
                out.push('-');
                out.push_str(ftag.as_str());
            }
            for affix in affixes {
                out.push('+');
                write_morpheme(out, affix);
            }
            for child in children {
                out.push(' ');
                write_node(out, child);
            }
            out.push(')');
        }
    }
}

/// Canonical single-line rendering; `parse_tree` inverts it exactly.
pub fn serialize_tree(node: &ConstituentNode) -> String {
    let mut out = String::new();
    write_node(&mut out, node);
    out
}

/// Outcome of reading one block from a treebank stream.
#[derive(Debug, Clone)]
pub enum TreeOutcome {
    /// A structurally valid tree (possibly with lenient-mode warnings).
    Tree {
        ordinal: usize,
        tree: ConstituentNode,
        warnings: Vec<Diagnostic>,
    },
    /// A rejected block, reported and skipped.
    Skipped {
        ordinal: usize,
        diagnostics: Vec<Diagnostic>,
    },
}

/// Streaming reader over a treebank: one bracketed tree per block, chunked
/// by balanced brackets, blank lines optional. Invalid blocks are yielded
/// as [`TreeOutcome::Skipped`] so corpus processing can filter and keep
/// going; I/O failures abort the iteration with an `Err`.
pub struct TreebankReader<R> {
    input: R,
    registry: TagsetRegistry,
    options: ParseOptions,
    line_buf: String,
    line_pos: usize,
    line_no: usize,
    at_eof: bool,
    ordinal: usize,
    kept: usize,
    dropped: usize,
}

impl<R: BufRead> TreebankReader<R> {
    pub fn new(input: R, registry: &TagsetRegistry, options: ParseOptions) -> Self {
        TreebankReader {
            input,
            registry: registry.clone(),
            options,
            line_buf: String::new(),
            line_pos: 0,
            line_no: 0,
            at_eof: false,
            ordinal: 0,
            kept: 0,
            dropped: 0,
        }
    }

    /// Trees yielded so far.
    pub fn kept(&self) -> usize {
        self.kept
    }

    /// Blocks rejected so far.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    fn refill(&mut self) -> io::Result<bool> {
        self.line_buf.clear();
        self.line_pos = 0;
        let n = self.input.read_line(&mut self.line_buf)?;
        if n == 0 {
            self.at_eof = true;
            return Ok(false);
        }
        self.line_no += 1;
        Ok(true)
    }

    fn rest(&self) -> &str {
        &self.line_buf[self.line_pos..]
    }

    fn skipped(&mut self, diagnostics: Vec<Diagnostic>) -> TreeOutcome {
        self.dropped += 1;
        TreeOutcome::Skipped {
            ordinal: self.ordinal,
            diagnostics,
        }
    }

    /// Collect one balanced-bracket block starting at the current position
    /// (which must be at an unescaped `(`). Returns the block text and its
    /// starting line. A blank line terminates an open block early, so one
    /// unbalanced tree cannot swallow the rest of the stream; `None` marks
    /// that case and EOF mid-block.
    fn read_block(&mut self) -> io::Result<Option<(String, usize)>> {
        let start_line = self.line_no;
        let mut block = String::new();
        let mut depth = 0usize;
        let mut escaped = false;
        loop {
            let mut consumed = 0;
            let mut done = false;
            for c in self.rest().chars() {
                consumed += c.len_utf8();
                block.push(c);
                if escaped {
                    escaped = false;
                    continue;
                }
                match c {
                    '\\' => escaped = true,
                    '(' => depth += 1,
                    ')' => {
                        depth = depth.saturating_sub(1);
                        if depth == 0 {
                            done = true;
                            break;
                        }
                    }
                    _ => {}
                }
            }
            self.line_pos += consumed;
            if done {
                return Ok(Some((block, start_line)));
            }
            if !self.refill()? {
                return Ok(None);
            }
            if self.line_buf.trim().is_empty() {
                return Ok(None);
            }
        }
    }
}

impl<R: BufRead> Iterator for TreebankReader<R> {
    type Item = io::Result<TreeOutcome>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.at_eof {
                return None;
            }
            // Skip whitespace up to the next block start.
            let trimmed_len = self.rest().trim_start().len();
            if trimmed_len == 0 {
                match self.refill() {
                    Ok(true) => continue,
                    Ok(false) => return None,
                    Err(e) => return Some(Err(e)),
                }
            }
            self.line_pos = self.line_buf.len() - trimmed_len;
            let column = self.line_buf[..self.line_pos].chars().count() + 1;
            self.ordinal += 1;
            if !self.rest().starts_with('(') {
                // Stray material outside any tree: drop the rest of the line.
                let text: String = self.rest().chars().take(20).collect();
                self.line_pos = self.line_buf.len();
                let diagnostic = Diagnostic::error(
                    codes::STRAY_TEXT,
                    format!("expected `(` to open a tree, found `{text}`"),
                )
                .at_line(self.line_no, column)
                .at_ordinal(self.ordinal);
                return Some(Ok(self.skipped(vec![diagnostic])));
            }
            let start_col = column;
            return match self.read_block() {
                Err(e) => Some(Err(e)),
                Ok(None) => {
                    let diagnostic = Diagnostic::error(
                        codes::UNBALANCED_BRACKETS,
                        "unbalanced brackets: block still open at end of input",
                    )
                    .at_line(self.line_no.max(1), 1)
                    .at_ordinal(self.ordinal);
                    Some(Ok(self.skipped(vec![diagnostic])))
                }
                Ok(Some((block, start_line))) => {
                    let relocate = |mut d: Diagnostic| {
                        if let (Some(line), Some(col)) = (d.location.line, d.location.column) {
                            d.location.line = Some(start_line + line - 1);
                            d.location.column =
                                Some(if line == 1 { start_col + col - 1 } else { col });
                        }
                        d.at_ordinal(self.ordinal)
                    };
                    match parse_tree(&block, &self.registry, &self.options) {
                        Ok(parsed) => {
                            self.kept += 1;
                            Some(Ok(TreeOutcome::Tree {
                                ordinal: self.ordinal,
                                tree: parsed.tree,
                                warnings: parsed.warnings.into_iter().map(relocate).collect(),
                            }))
                        }
                        Err(diagnostics) => {
                            let diagnostics = diagnostics.into_iter().map(relocate).collect();
                            Some(Ok(self.skipped(diagnostics)))
                        }
                    }
                }
            };
        }
    }
}

/// Convenience constructor mirroring the writer-side free functions.
pub fn read_treebank<R: BufRead>(
    input: R,
    registry: &TagsetRegistry,
    options: ParseOptions,
) -> TreebankReader<R> {
    TreebankReader::new(input, registry, options)
}

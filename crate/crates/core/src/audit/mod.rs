//! Corpus-level tooling: dependency-tree validation, statistics,
//! deterministic corpus splitting, substitution of automatic morphological
//! analyses, and analyzer-agreement scoring.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{DependencyLabel, DependencyTree, Eojeol, TagsetRegistry};
use crate::transform::segment_eojeol;
use crate::treeio::{codes, ConstituentNode, Diagnostic};

/// Check global well-formedness of a dependency tree: exactly one token on
/// the artificial root carrying the root label, no cycles, labels within
/// the allowed set, and projectivity (reported as a warning).
pub fn validate_dependency(
    tree: &DependencyTree,
    allowed_labels: Option<&BTreeSet<DependencyLabel>>,
) -> Vec<Diagnostic> {
    let mut diagnostics = Vec::new();
    let roots: Vec<usize> = tree.root_tokens().map(|t| t.index).collect();
    match roots.as_slice() {
        [] => diagnostics.push(Diagnostic::error(
            codes::NO_ROOT,
            "no token attaches to the artificial root",
        )),
        [root] => {
            let token = tree.token(*root).expect("index from the tree");
            if token.label != DependencyLabel::Root {
                diagnostics.push(Diagnostic::error(
                    codes::ROOT_LABEL,
                    format!(
                        "token {root} attaches to the artificial root with label `{}`",
                        token.label
                    ),
                ));
            }
        }
        many => diagnostics.push(Diagnostic::error(
            codes::MULTIPLE_ROOTS,
            format!(
                "{} tokens attach to the artificial root: {many:?}",
                many.len()
            ),
        )),
    }
    for token in tree {
        if token.label == DependencyLabel::Root && token.head != 0 {
            diagnostics.push(Diagnostic::error(
                codes::ROOT_LABEL,
                format!(
                    "token {} carries the root label but head {}",
                    token.index, token.head
                ),
            ));
        }
    }
    let cycle = tree.cycle_members();
    if !cycle.is_empty() {
        diagnostics.push(Diagnostic::error(
            codes::CYCLE,
            format!("head links form a cycle through tokens {cycle:?}"),
        ));
    }
    if let Some(allowed) = allowed_labels {
        for token in tree {
            if !allowed.contains(&token.label) {
                diagnostics.push(Diagnostic::error(
                    codes::LABEL_NOT_ALLOWED,
                    format!(
                        "token {}: label `{}` not in the allowed set",
                        token.index, token.label
                    ),
                ));
            }
        }
    }
    let crossings = tree.crossing_arcs();
    if !crossings.is_empty() {
        let shown: Vec<String> = crossings
            .iter()
            .take(3)
            .map(|(a, b)| format!("{a}~{b}"))
            .collect();
        diagnostics.push(Diagnostic::warning(
            codes::NON_PROJECTIVE,
            format!(
                "{} crossing arc pair(s), e.g. {}",
                crossings.len(),
                shown.join(", ")
            ),
        ));
    }
    diagnostics
}

/// Tree and token tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub trees: u64,
    pub tokens: u64,
}

impl Counts {
    pub fn add_tree(&mut self, tokens: u64) {
        self.trees += 1;
        self.tokens += tokens;
    }
}

impl std::ops::Add for Counts {
    type Output = Counts;

    fn add(self, other: Counts) -> Counts {
        Counts {
            trees: self.trees + other.trees,
            tokens: self.tokens + other.tokens,
        }
    }
}

impl std::ops::AddAssign for Counts {
    fn add_assign(&mut self, other: Counts) {
        *self = *self + other;
    }
}

/// The three conventional corpus splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitName {
    Train,
    Dev,
    Test,
}

impl SplitName {
    pub const ALL: [SplitName; 3] = [SplitName::Train, SplitName::Dev, SplitName::Test];

    pub fn as_str(self) -> &'static str {
        match self {
            SplitName::Train => "train",
            SplitName::Dev => "dev",
            SplitName::Test => "test",
        }
    }
}

impl fmt::Display for SplitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplitName {
    type Err = SplitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "train" => Ok(SplitName::Train),
            "dev" => Ok(SplitName::Dev),
            "test" => Ok(SplitName::Test),
            _ => Err(SplitError::UnknownSplit(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplitError {
    #[error("unknown split name `{0}` (expected train, dev or test)")]
    UnknownSplit(String),
    #[error("ratios must be non-negative and sum to 1, got {0:?}")]
    BadRatios([f64; 3]),
    #[error("manifest line {line}: expected `<ordinal>[-<ordinal>] <split>`, got `{text}`")]
    MalformedManifest { line: usize, text: String },
    #[error("manifest line {line}: empty or reversed range")]
    BadRange { line: usize },
    #[error("manifest assigns tree {ordinal} more than once")]
    Overlap { ordinal: usize },
    #[error("manifest does not cover tree {ordinal}; every tree needs a split")]
    Incomplete { ordinal: usize },
    #[error("manifest covers tree {ordinal} but the corpus has only {len} trees")]
    OutOfRange { ordinal: usize, len: usize },
    #[error("manifest or assignment covers {expected} trees but the corpus has {actual}")]
    CountMismatch { expected: usize, actual: usize },
}

/// Explicit ordinal-range manifest: lines of `<start>[-<end>] <split>`,
/// 1-based inclusive, `#` comments allowed. Ranges must be disjoint and
/// together cover every tree of the corpus.
#[derive(Debug, Clone, Default)]
pub struct SplitManifest {
    rules: Vec<(usize, usize, SplitName)>,
}

impl SplitManifest {
    pub fn parse(text: &str) -> Result<Self, SplitError> {
        let mut rules = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || SplitError::MalformedManifest {
                line: lineno,
                text: line.to_string(),
            };
            let (range, name) = line.split_once(char::is_whitespace).ok_or_else(malformed)?;
            let name = SplitName::from_str(name.trim())?;
            let (start, end) = match range.split_once('-') {
                Some((a, b)) => (
                    a.parse::<usize>().map_err(|_| malformed())?,
                    b.parse::<usize>().map_err(|_| malformed())?,
                ),
                None => {
                    let n = range.parse::<usize>().map_err(|_| malformed())?;
                    (n, n)
                }
            };
            if start == 0 || end < start {
                return Err(SplitError::BadRange { line: lineno });
            }
            rules.push((start, end, name));
        }
        Ok(SplitManifest { rules })
    }

    /// Per-ordinal assignments for a corpus of `len` trees; the manifest
    /// must cover 1..=len disjointly.
    pub fn assignments(&self, len: usize) -> Result<Vec<SplitName>, SplitError> {
        let mut assigned: Vec<Option<SplitName>> = vec![None; len];
        for &(start, end, name) in &self.rules {
            for ordinal in start..=end {
                if ordinal > len {
                    return Err(SplitError::OutOfRange { ordinal, len });
                }
                let slot = &mut assigned[ordinal - 1];
                if slot.is_some() {
                    return Err(SplitError::Overlap { ordinal });
                }
                *slot = Some(name);
            }
        }
        assigned
            .into_iter()
            .enumerate()
            .map(|(i, slot)| slot.ok_or(SplitError::Incomplete { ordinal: i + 1 }))
            .collect()
    }
}

/// How to partition a corpus.
#[derive(Debug, Clone)]
pub enum SplitSpec {
    /// Contiguous split by (train, dev, test) proportions summing to 1.
    Ratios([f64; 3]),
    /// Explicit ordinal manifest.
    Manifest(SplitManifest),
}

/// Deterministic, order-preserving assignment of each tree ordinal to a
/// split.
pub fn split_assignments(len: usize, spec: &SplitSpec) -> Result<Vec<SplitName>, SplitError> {
    match spec {
        SplitSpec::Ratios(ratios) => {
            let [a, b, c] = *ratios;
            if a < 0.0 || b < 0.0 || c < 0.0 || (a + b + c - 1.0).abs() > 1e-9 {
                return Err(SplitError::BadRatios(*ratios));
            }
            let n = len as f64;
            let first = (n * a).round() as usize;
            let second = ((n * (a + b)).round() as usize).clamp(first, len);
            let first = first.min(len);
            Ok((1..=len)
                .map(|ordinal| {
                    if ordinal <= first {
                        SplitName::Train
                    } else if ordinal <= second {
                        SplitName::Dev
                    } else {
                        SplitName::Test
                    }
                })
                .collect())
        }
        SplitSpec::Manifest(manifest) => manifest.assignments(len),
    }
}

/// Partition in-memory blocks into the three splits.
pub fn split_corpus(blocks: &[String], spec: &SplitSpec) -> Result<[Vec<String>; 3], SplitError> {
    let assignments = split_assignments(blocks.len(), spec)?;
    let mut out: [Vec<String>; 3] = Default::default();
    for (block, name) in blocks.iter().zip(assignments) {
        let slot = SplitName::ALL.iter().position(|s| *s == name).unwrap();
        out[slot].push(block.clone());
    }
    Ok(out)
}

/// Corpus statistics: overall tree and token counts, with a per-split
/// breakdown when an assignment is supplied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatsReport {
    pub total: Counts,
    pub splits: Vec<(SplitName, Counts)>,
}

impl StatsReport {
    /// Tab-separated rendering with a header row and a trailing total row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("split\ttrees\ttokens\n");
        for (name, counts) in &self.splits {
            out.push_str(&format!("{name}\t{}\t{}\n", counts.trees, counts.tokens));
        }
        out.push_str(&format!(
            "total\t{}\t{}\n",
            self.total.trees, self.total.tokens
        ));
        out
    }
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_tsv().trim_end())
    }
}

/// Fold per-tree token counts into a report, optionally split by the given
/// assignment (which must cover exactly the same number of trees).
pub fn corpus_stats(
    per_tree_tokens: impl IntoIterator<Item = u64>,
    assignments: Option<&[SplitName]>,
) -> Result<StatsReport, SplitError> {
    let mut total = Counts::default();
    let mut by_split: BTreeMap<SplitName, Counts> = BTreeMap::new();
    let mut index = 0usize;
    for tokens in per_tree_tokens {
        if let Some(assignments) = assignments {
            let name = *assignments.get(index).ok_or(SplitError::CountMismatch {
                expected: assignments.len(),
                actual: index + 1,
            })?;
            by_split.entry(name).or_default().add_tree(tokens);
        }
        total.add_tree(tokens);
        index += 1;
    }
    if let Some(assignments) = assignments {
        if assignments.len() != index {
            return Err(SplitError::CountMismatch {
                expected: assignments.len(),
                actual: index,
            });
        }
    }
    let splits = by_split.into_iter().collect();
    Ok(StatsReport { total, splits })
}

/// Substitution plan: per-token replacement morphemes, or `None` to keep
/// the gold analysis.
struct SubstPlan {
    replacements: Vec<Option<Eojeol>>,
    diagnostics: Vec<Diagnostic>,
}

fn plan_substitution(
    token_surfaces: &[String],
    autos: &[Eojeol],
    registry: &TagsetRegistry,
) -> Result<SubstPlan, Diagnostic> {
    let n = token_surfaces.len();
    let mut replacements: Vec<Option<Eojeol>> = vec![None; n];
    let mut diagnostics = Vec::new();
    if autos.len() == n {
        // Token-aligned input: one analysis line per token.
        for (i, auto) in autos.iter().enumerate() {
            let segments = segment_eojeol(auto, registry);
            if segments.len() != 1 {
                diagnostics.push(Diagnostic::warning(
                    codes::SUBST_UNALIGNED,
                    format!(
                        "analysis {} segments into {} tokens; keeping the gold analysis",
                        i + 1,
                        segments.len()
                    ),
                ));
                continue;
            }
            if auto.surface() != token_surfaces[i].as_str() {
                diagnostics.push(Diagnostic::warning(
                    codes::SURFACE_MISMATCH,
                    format!(
                        "analysis {} surface `{}` differs from token `{}`",
                        i + 1,
                        auto.surface(),
                        token_surfaces[i]
                    ),
                ));
            }
            replacements[i] = Some(auto.clone());
        }
        return Ok(SubstPlan {
            replacements,
            diagnostics,
        });
    }
    // Eojeol-granular input: split each analysis the same way terminals are
    // split, then align the pieces with the tokens in order.
    let mut pieces = Vec::new();
    for auto in autos {
        for segment in segment_eojeol(auto, registry) {
            let surface = segment.surface();
            let mut eojeol =
                Eojeol::new(segment.morphemes().to_vec()).expect("segments are non-empty");
            eojeol.set_surface(Some(surface));
            pieces.push(eojeol);
        }
    }
    if pieces.len() != n {
        return Err(Diagnostic::error(
            codes::SUBST_LENGTH_MISMATCH,
            format!(
                "{} analyses segment into {} tokens but the sentence has {n}",
                autos.len(),
                pieces.len()
            ),
        ));
    }
    for (i, piece) in pieces.into_iter().enumerate() {
        if piece.surface() != token_surfaces[i].as_str() {
            diagnostics.push(Diagnostic::warning(
                codes::SURFACE_MISMATCH,
                format!(
                    "aligned analysis surface `{}` differs from token `{}`",
                    piece.surface(),
                    token_surfaces[i]
                ),
            ));
        }
        replacements[i] = Some(piece);
    }
    Ok(SubstPlan {
        replacements,
        diagnostics,
    })
}

fn replace_keeping_surface(slot: &mut Eojeol, replacement: &Eojeol) {
    let surface = slot.surface().into_owned();
    let mut new_eojeol =
        Eojeol::new(replacement.morphemes().to_vec()).expect("replacement is non-empty");
    new_eojeol.set_surface(Some(surface));
    *slot = new_eojeol;
}

/// Replace the gold morphology of a dependency tree by automatic analyses,
/// aligned by eojeol ordinal. Surfaces, heads and labels are never touched;
/// coarse tags follow the new analyses' tagset when the tree is written.
/// On a length mismatch the input is returned unchanged alongside an error
/// diagnostic.
pub fn substitute_morphology(
    tree: &DependencyTree,
    autos: &[Eojeol],
    registry: &TagsetRegistry,
) -> (DependencyTree, Vec<Diagnostic>) {
    let surfaces: Vec<String> = tree.iter().map(|t| t.surface().into_owned()).collect();
    match plan_substitution(&surfaces, autos, registry) {
        Err(fatal) => (tree.clone(), vec![fatal]),
        Ok(plan) => {
            let mut out = tree.clone();
            for (token, replacement) in out.tokens_mut().iter_mut().zip(&plan.replacements) {
                if let Some(replacement) = replacement {
                    replace_keeping_surface(&mut token.eojeol, replacement);
                }
            }
            (out, plan.diagnostics)
        }
    }
}

fn for_each_terminal_mut(node: &mut ConstituentNode, f: &mut impl FnMut(&mut Eojeol)) {
    match node {
        ConstituentNode::Terminal { eojeol } => f(eojeol),
        ConstituentNode::Phrase { children, .. } => {
            for child in children {
                for_each_terminal_mut(child, f);
            }
        }
    }
}

/// [`substitute_morphology`] for Penn-flavor constituent trees: terminal
/// analyses are replaced in surface order.
pub fn substitute_morphology_tree(
    tree: &ConstituentNode,
    autos: &[Eojeol],
    registry: &TagsetRegistry,
) -> (ConstituentNode, Vec<Diagnostic>) {
    let surfaces: Vec<String> = tree
        .terminals()
        .iter()
        .map(|e| e.surface().into_owned())
        .collect();
    match plan_substitution(&surfaces, autos, registry) {
        Err(fatal) => (tree.clone(), vec![fatal]),
        Ok(plan) => {
            let mut out = tree.clone();
            let mut index = 0usize;
            for_each_terminal_mut(&mut out, &mut |eojeol| {
                if let Some(replacement) = &plan.replacements[index] {
                    replace_keeping_surface(eojeol, replacement);
                }
                index += 1;
            });
            (out, plan.diagnostics)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgreementError {
    #[error("gold has {gold} sentences but auto has {auto}")]
    SentenceCountMismatch { gold: usize, auto: usize },
}

/// Agreement between a gold and an automatic morphological analysis.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AgreementReport {
    pub sentences: u64,
    /// Sentences skipped because their eojeol counts differ.
    pub alignment_failures: u64,
    pub eojeols: u64,
    pub eojeols_exact: u64,
    pub gold_morphemes: u64,
    pub auto_morphemes: u64,
    pub matched_morphemes: u64,
}

impl AgreementReport {
    /// Fold one aligned sentence pair into the tallies; a pair with
    /// different eojeol counts is recorded as an alignment failure and
    /// skipped.
    pub fn add_sentence(&mut self, gold: &[Eojeol], auto: &[Eojeol]) {
        self.sentences += 1;
        if gold.len() != auto.len() {
            self.alignment_failures += 1;
            return;
        }
        for (g, a) in gold.iter().zip(auto) {
            self.eojeols += 1;
            if eojeols_match(g, a) {
                self.eojeols_exact += 1;
            }
            let gold_set = morpheme_multiset(g);
            let auto_set = morpheme_multiset(a);
            self.gold_morphemes += g.morphemes().len() as u64;
            self.auto_morphemes += a.morphemes().len() as u64;
            for (key, gold_count) in &gold_set {
                if let Some(auto_count) = auto_set.get(key) {
                    self.matched_morphemes += (*gold_count).min(*auto_count);
                }
            }
        }
    }

    /// Fraction of eojeols whose full (form, tag) sequence matches exactly.
    pub fn eojeol_accuracy(&self) -> f64 {
        ratio(self.eojeols_exact, self.eojeols)
    }

    pub fn precision(&self) -> f64 {
        ratio(self.matched_morphemes, self.auto_morphemes)
    }

    pub fn recall(&self) -> f64 {
        ratio(self.matched_morphemes, self.gold_morphemes)
    }

    pub fn f1(&self) -> f64 {
        let p = self.precision();
        let r = self.recall();
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "metric\tvalue\nsentences\t{}\nalignment_failures\t{}\neojeols\t{}\neojeol_accuracy\t{:.4}\nmorpheme_precision\t{:.4}\nmorpheme_recall\t{:.4}\nmorpheme_f1\t{:.4}\n",
            self.sentences,
            self.alignment_failures,
            self.eojeols,
            self.eojeol_accuracy(),
            self.precision(),
            self.recall(),
            self.f1()
        )
    }
}

fn ratio(numerator: u64, denominator: u64) -> f64 {
    if denominator == 0 {
        // Vacuously perfect: nothing to get wrong.
        if numerator == 0 {
            1.0
        } else {
            0.0
        }
    } else {
        numerator as f64 / denominator as f64
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_tsv().trim_end())
    }
}

fn morpheme_multiset(eojeol: &Eojeol) -> BTreeMap<(String, String), u64> {
    let mut set = BTreeMap::new();
    for m in eojeol.morphemes() {
        *set.entry((m.form().to_string(), m.tag().id().to_string()))
            .or_insert(0) += 1;
    }
    set
}

fn eojeols_match(gold: &Eojeol, auto: &Eojeol) -> bool {
    gold.morphemes().len() == auto.morphemes().len()
        && gold
            .morphemes()
            .iter()
            .zip(auto.morphemes())
            .all(|(g, a)| g.form() == a.form() && g.tag().id() == a.tag().id())
}

/// Score automatic analyses against gold: exact-match eojeol accuracy and
/// morpheme precision/recall/F1 over per-eojeol (form, tag) multisets.
pub fn morph_agreement(
    gold: &[Vec<Eojeol>],
    auto: &[Vec<Eojeol>],
) -> Result<AgreementReport, AgreementError> {
    if gold.len() != auto.len() {
        return Err(AgreementError::SentenceCountMismatch {
            gold: gold.len(),
            auto: auto.len(),
        });
    }
    let mut report = AgreementReport::default();
    for (gold_sentence, auto_sentence) in gold.iter().zip(auto) {
        report.add_sentence(gold_sentence, auto_sentence);
    }
    Ok(report)
}

//! KAIST-style to Penn-style constituent transformation.
//!
//! Three rewrites, applied by [`to_penn`]:
//!
//! 1. every terminal is segmented so punctuation morphemes become tokens of
//!    their own ([`segment_eojeol`]);
//! 2. balanced round-bracket spans are grouped into phrases carrying the
//!    `PRN` function tag ([`group_parentheticals`]);
//! 3. phrase-level agglutinated affixes are lowered: merged onto the
//!    phrase's rightmost terminal when that terminal is the immediately
//!    preceding surface material and free of punctuation, otherwise emitted
//!    as a standalone affix token after the phrase content. Eojeol-final
//!    punctuation then bubbles up to the highest phrase ending at its
//!    position, so a sentence-final period becomes the last child of the
//!    root.
//!
//! The transformation conserves morphemes, never merges material across
//! eojeol boundaries, and is idempotent: Penn-style trees are fixed points.

use crate::model::{Eojeol, FunctionTag, Morpheme, TagsetRegistry};
use crate::treeio::{codes, ConstituentNode, Diagnostic};

/// Classification of one segment of an eojeol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    /// Lexical material (possibly with attached affixes).
    Base,
    /// A single punctuation morpheme.
    Punct,
    /// A literal `(` morpheme.
    ParenOpen,
    /// A literal `)` morpheme.
    ParenClose,
    /// Grammatical affixes detached from their base by intervening
    /// punctuation.
    AffixRun,
}

/// A maximal run of morphemes that becomes one token after segmentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    morphemes: Vec<Morpheme>,
    surface: Option<String>,
}

impl Segment {
    pub fn morphemes(&self) -> &[Morpheme] {
        &self.morphemes
    }

    /// Surface text of this segment (the distributed slice of a fused
    /// surface when one was present, otherwise the form concatenation).
    pub fn surface(&self) -> String {
        match &self.surface {
            Some(s) => s.clone(),
            None => self.concatenated(),
        }
    }

    fn concatenated(&self) -> String {
        self.morphemes.iter().map(Morpheme::form).collect()
    }

    fn into_eojeol(self) -> Eojeol {
        let mut eojeol = Eojeol::new(self.morphemes).expect("segments are non-empty");
        eojeol.set_surface(self.surface);
        eojeol
    }
}

fn is_punct_morpheme(m: &Morpheme, registry: &TagsetRegistry) -> bool {
    registry.is_punct_or_prefix(m.tag())
}

fn kind_of(m: &Morpheme, registry: &TagsetRegistry) -> SegmentKind {
    // Brackets are recognized by their literal form; everything else by tag.
    match m.form() {
        "(" => SegmentKind::ParenOpen,
        ")" => SegmentKind::ParenClose,
        _ if is_punct_morpheme(m, registry) => SegmentKind::Punct,
        _ => SegmentKind::Base,
    }
}

/// Split an eojeol into segments: each punctuation morpheme becomes its own
/// segment, runs of other morphemes stay together, and a run consisting of
/// nothing but grammatical affixes that follows punctuation (its base is on
/// the other side of the punctuation) is marked [`SegmentKind::AffixRun`].
///
/// The concatenation of the segments' morphemes reproduces the input, in
/// order, and the segments' surfaces concatenate to the eojeol surface.
pub fn segment_eojeol(eojeol: &Eojeol, registry: &TagsetRegistry) -> Vec<Segment> {
    segment_eojeol_inner(eojeol, registry).0
}

pub(crate) fn segment_eojeol_inner(
    eojeol: &Eojeol,
    registry: &TagsetRegistry,
) -> (Vec<Segment>, Option<Diagnostic>) {
    let mut segments: Vec<Segment> = Vec::new();
    let mut run: Vec<Morpheme> = Vec::new();
    let mut run_follows_punct = false;
    let flush = |run: &mut Vec<Morpheme>, follows_punct: bool, segments: &mut Vec<Segment>| {
        if run.is_empty() {
            return;
        }
        let all_affixes = run
            .iter()
            .all(|m| registry.is_grammatical_affix_or_prefix(m.tag()));
        let kind = if follows_punct && all_affixes {
            SegmentKind::AffixRun
        } else {
            SegmentKind::Base
        };
        segments.push(Segment {
            kind,
            morphemes: std::mem::take(run),
            surface: None,
        });
    };
    for m in eojeol.morphemes() {
        match kind_of(m, registry) {
            SegmentKind::Base | SegmentKind::AffixRun => run.push(m.clone()),
            kind => {
                flush(&mut run, run_follows_punct, &mut segments);
                segments.push(Segment {
                    kind,
                    morphemes: vec![m.clone()],
                    surface: None,
                });
                run_follows_punct = true;
            }
        }
    }
    flush(&mut run, run_follows_punct, &mut segments);
    let diagnostic = distribute_surface(eojeol, &mut segments);
    (segments, diagnostic)
}

/// Distribute an explicit (fused) surface over the segments. Punctuation
/// and affixes keep their literal forms, so their slices are recovered by
/// stripping matching prefixes and suffixes; whatever remains belongs to
/// the single segment in the middle (the fused stem).
fn distribute_surface(eojeol: &Eojeol, segments: &mut [Segment]) -> Option<Diagnostic> {
    let surface = eojeol.explicit_surface()?;
    if segments.len() <= 1 {
        if let Some(seg) = segments.first_mut() {
            seg.surface = Some(surface.to_string());
        }
        return None;
    }
    let mut remaining = surface;
    let mut lo = 0;
    let mut hi = segments.len();
    while lo < hi {
        let concat = segments[lo].concatenated();
        match remaining.strip_prefix(concat.as_str()) {
            Some(rest) => {
                remaining = rest;
                lo += 1;
            }
            None => break,
        }
    }
    while hi > lo {
        let concat = segments[hi - 1].concatenated();
        match remaining.strip_suffix(concat.as_str()) {
            Some(rest) => {
                remaining = rest;
                hi -= 1;
            }
            None => break,
        }
    }
    match hi - lo {
        0 if remaining.is_empty() => None,
        // A token cannot carry an empty surface, so an exhausted remainder
        // with a segment left over is a mismatch.
        1 if !remaining.is_empty() => {
            segments[lo].surface = Some(remaining.to_string());
            None
        }
        _ => Some(Diagnostic::warning(
            codes::SURFACE_MISMATCH,
            format!("cannot align surface `{surface}` with segmented analysis `{eojeol}`"),
        )),
    }
}

/// A segment stream with balanced bracket spans grouped.
#[derive(Debug, Clone)]
pub enum Grouped {
    Token(Segment),
    /// A parenthetical: opening bracket, inner material, closing bracket.
    Group(Vec<Grouped>),
}

/// Group balanced `( … )` spans of a segmented eojeol, innermost first.
/// Unmatched brackets degrade to plain tokens; that degradation is reported
/// unless the eojeol was a lone bracket token to begin with (the already
/// segmented case).
pub fn group_parentheticals(segments: Vec<Segment>) -> (Vec<Grouped>, Option<Diagnostic>) {
    let suppress_warning = segments.len() <= 1;
    let mut stack: Vec<Vec<Grouped>> = vec![Vec::new()];
    let mut unbalanced = false;
    for segment in segments {
        match segment.kind {
            SegmentKind::ParenOpen => {
                stack.push(vec![Grouped::Token(segment)]);
            }
            SegmentKind::ParenClose => {
                if stack.len() > 1 {
                    let mut level = stack.pop().expect("stack has an open level");
                    level.push(Grouped::Token(segment));
                    stack
                        .last_mut()
                        .expect("base level always present")
                        .push(Grouped::Group(level));
                } else {
                    unbalanced = true;
                    stack[0].push(Grouped::Token(segment));
                }
            }
            _ => stack
                .last_mut()
                .expect("base level always present")
                .push(Grouped::Token(segment)),
        }
    }
    // Unclosed opens spill their contents back as plain tokens.
    while stack.len() > 1 {
        let level = stack.pop().expect("len checked");
        unbalanced = true;
        stack
            .last_mut()
            .expect("base level always present")
            .extend(level);
    }
    let grouped = stack.pop().expect("base level always present");
    let diagnostic = (unbalanced && !suppress_warning).then(|| {
        Diagnostic::warning(
            codes::UNBALANCED_PARENS,
            "unbalanced round brackets left ungrouped",
        )
    });
    (grouped, diagnostic)
}

fn grouped_into_nodes(grouped: Vec<Grouped>, registry: &TagsetRegistry) -> Vec<ConstituentNode> {
    grouped
        .into_iter()
        .map(|item| match item {
            Grouped::Token(segment) => ConstituentNode::Terminal {
                eojeol: segment.into_eojeol(),
            },
            Grouped::Group(inner) => ConstituentNode::Phrase {
                label: registry.prn_label(),
                ftags: vec![FunctionTag::Prn],
                affixes: Vec::new(),
                children: grouped_into_nodes(inner, registry),
            },
        })
        .collect()
}

fn terminal_has_punct(eojeol: &Eojeol, registry: &TagsetRegistry) -> bool {
    eojeol
        .morphemes()
        .iter()
        .any(|m| is_punct_morpheme(m, registry))
}

fn terminal_is_all_punct(eojeol: &Eojeol, registry: &TagsetRegistry) -> bool {
    eojeol
        .morphemes()
        .iter()
        .all(|m| is_punct_morpheme(m, registry))
}

/// The rightmost terminal under a child list, by last-child descent.
fn rightmost_terminal_mut(children: &mut [ConstituentNode]) -> Option<&mut Eojeol> {
    match children.last_mut()? {
        ConstituentNode::Terminal { eojeol } => Some(eojeol),
        ConstituentNode::Phrase { children, .. } => rightmost_terminal_mut(children),
    }
}

fn lower_onto_children(
    children: &mut Vec<ConstituentNode>,
    affixes: Vec<Morpheme>,
    registry: &TagsetRegistry,
) {
    if affixes.is_empty() {
        return;
    }
    if let Some(eojeol) = rightmost_terminal_mut(children) {
        if !terminal_has_punct(eojeol, registry) {
            eojeol.append_morphemes(affixes);
            return;
        }
    }
    let eojeol = Eojeol::new(affixes).expect("affix list is non-empty");
    children.push(ConstituentNode::Terminal { eojeol });
}

fn split_and_lower(
    node: &ConstituentNode,
    registry: &TagsetRegistry,
    diagnostics: &mut Vec<Diagnostic>,
) -> Vec<ConstituentNode> {
    match node {
        ConstituentNode::Terminal { eojeol } => {
            let (segments, surface_diag) = segment_eojeol_inner(eojeol, registry);
            diagnostics.extend(surface_diag);
            let (grouped, paren_diag) = group_parentheticals(segments);
            diagnostics.extend(paren_diag);
            grouped_into_nodes(grouped, registry)
        }
        ConstituentNode::Phrase {
            label,
            ftags,
            affixes,
            children,
        } => {
            let mut new_children: Vec<ConstituentNode> = children
                .iter()
                .flat_map(|child| split_and_lower(child, registry, diagnostics))
                .collect();
            lower_onto_children(&mut new_children, affixes.clone(), registry);
            vec![ConstituentNode::Phrase {
                label: *label,
                ftags: ftags.clone(),
                affixes: Vec::new(),
                children: new_children,
            }]
        }
    }
}

/// Bubble trailing punctuation tokens upward: while the last child of a
/// phrase is a (non-parenthetical) phrase ending in punctuation-only
/// terminals, those terminals become children of the outer phrase. Applied
/// post-order, this attaches each eojeol-final punctuation token to the
/// highest phrase that ends at its surface position.
fn raise_trailing_punct(node: &mut ConstituentNode, registry: &TagsetRegistry) {
    let ConstituentNode::Phrase { children, .. } = node else {
        return;
    };
    for child in children.iter_mut() {
        raise_trailing_punct(child, registry);
    }
    while let Some(ConstituentNode::Phrase {
        ftags,
        children: inner,
        ..
    }) = children.last_mut()
    {
        if ftags.contains(&FunctionTag::Prn) {
            break;
        }
        let trailing = inner
            .iter()
            .rev()
            .take_while(|c| {
                c.eojeol()
                    .is_some_and(|e| terminal_is_all_punct(e, registry))
            })
            .count();
        // The inner phrase must keep at least one child.
        let take = trailing.min(inner.len().saturating_sub(1));
        if take == 0 {
            break;
        }
        let moved = inner.split_off(inner.len() - take);
        children.extend(moved);
    }
}

/// Transform a KAIST-flavor tree into its Penn-flavor form. Degraded spots
/// (unbalanced brackets, unalignable fused surfaces) are reported as
/// warnings; the transformation itself is total.
pub fn to_penn(
    tree: &ConstituentNode,
    registry: &TagsetRegistry,
) -> (ConstituentNode, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();
    let mut nodes = split_and_lower(tree, registry, &mut diagnostics);
    debug_assert_eq!(nodes.len(), 1, "a phrase transforms to a single phrase");
    let mut root = nodes.pop().expect("root survives transformation");
    raise_trailing_punct(&mut root, registry);
    (root, diagnostics)
}

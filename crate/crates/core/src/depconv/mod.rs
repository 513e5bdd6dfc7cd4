//! Penn-style constituent trees to labeled dependency trees.
//!
//! Korean is head final: the rightmost constituent of each phrase is its
//! head. Four kinds of constituents are skipped over unless nothing else is
//! available ([`is_excluded_head`]): auxiliary and interjection phrases,
//! parentheticals, affix-only constituents and punctuation-only
//! constituents. Every non-head child's lexical head then attaches to the
//! head child's lexical head, and the arc is labeled by a cascade that
//! reads structure first (punctuation, parentheticals, auxiliaries), then
//! the dependent's trailing morphology (case particles, conjunctive and
//! adnominal endings), then the head's category ([`assign_label`]).
//!
//! Coordination needs no separate head rule: head-finality already makes
//! the rightmost conjunct govern the other conjuncts and the conjunction.
//! A stranded particle token (label `ejx`) donates its case label to the
//! token it attaches to, so a noun separated from its particle by a
//! parenthetical still receives the case-derived label.

use thiserror::Error;

use crate::model::{DepToken, DependencyLabel, DependencyTree, Eojeol, PhraseType, TagsetRegistry};
use crate::model::{FunctionTag, Morpheme};
use crate::treeio::ConstituentNode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvertError {
    #[error("tree has no terminals")]
    EmptyTree,
    #[error("tree contains a phrase with no children")]
    EmptyPhrase,
}

fn is_affix(m: &Morpheme, registry: &TagsetRegistry) -> bool {
    registry.is_grammatical_affix_or_prefix(m.tag())
}

fn is_punct(m: &Morpheme, registry: &TagsetRegistry) -> bool {
    registry.is_punct_or_prefix(m.tag())
}

fn all_affix(eojeol: &Eojeol, registry: &TagsetRegistry) -> bool {
    eojeol.morphemes().iter().all(|m| is_affix(m, registry))
}

fn all_punct(eojeol: &Eojeol, registry: &TagsetRegistry) -> bool {
    eojeol.morphemes().iter().all(|m| is_punct(m, registry))
}

fn all_tagged(eojeol: &Eojeol, id: &str) -> bool {
    eojeol.morphemes().iter().all(|m| m.tag().id() == id)
}

fn last_tag(eojeol: &Eojeol) -> &str {
    eojeol
        .morphemes()
        .last()
        .expect("eojeols are non-empty")
        .tag()
        .id()
}

/// Case label of the last case-particle morpheme, if any.
fn trailing_case_label(eojeol: &Eojeol, registry: &TagsetRegistry) -> Option<DependencyLabel> {
    eojeol
        .morphemes()
        .iter()
        .rev()
        .find_map(|m| registry.case_label(m.tag()))
}

/// True iff the constituent must not become a head unless it is the only
/// candidate: auxiliary/interjection phrases, parentheticals, and
/// constituents made of nothing but grammatical affixes or punctuation.
pub fn is_excluded_head(node: &ConstituentNode, registry: &TagsetRegistry) -> bool {
    if matches!(node.label(), Some(PhraseType::Auxp) | Some(PhraseType::Ip)) {
        return true;
    }
    if node.has_ftag(FunctionTag::Prn) {
        return true;
    }
    let morphemes = node.morphemes_in_order();
    if morphemes.iter().all(|m| is_affix(m, registry)) {
        return true;
    }
    if morphemes.iter().all(|m| is_punct(m, registry)) {
        return true;
    }
    false
}

/// Index of the head child of a phrase: the rightmost child that is not
/// excluded from headship, or the rightmost child outright when every
/// child is excluded. `None` for terminals.
pub fn head_child_index(phrase: &ConstituentNode, registry: &TagsetRegistry) -> Option<usize> {
    let children = phrase.children();
    if children.is_empty() {
        return None;
    }
    let rightmost_included = children
        .iter()
        .rposition(|child| !is_excluded_head(child, registry));
    Some(rightmost_included.unwrap_or(children.len() - 1))
}

/// Head decisions for one node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeHeads {
    /// Index of the head child within the children list; `None` for
    /// terminals.
    pub head_child: Option<usize>,
    /// 1-based token index of the node's lexical head (a terminal is its
    /// own lexical head).
    pub lexical_head: usize,
}

/// Head decisions for every node of a tree, indexed in pre-order.
#[derive(Debug, Clone)]
pub struct HeadAssignment {
    entries: Vec<NodeHeads>,
}

impl HeadAssignment {
    /// Decision for the node with the given pre-order number (the root
    /// is 0).
    pub fn node(&self, preorder: usize) -> Option<NodeHeads> {
        self.entries.get(preorder).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The root's lexical head: the token that becomes the sentence root.
    pub fn root_lexical_head(&self) -> usize {
        self.entries[0].lexical_head
    }
}

/// Context of one dependency arc: where the dependent sat inside its
/// source phrase. Drives the structural and positional label rules.
#[derive(Debug, Clone, Copy, Default)]
pub struct ArcContext {
    /// The dependent's constituent is an auxiliary-verb phrase.
    pub source_is_auxp: bool,
    /// The dependent's constituent is an interjection phrase.
    pub source_is_ip: bool,
    /// The dependent's constituent carries the parenthetical function tag.
    pub source_has_prn: bool,
    /// Some sibling precedes the dependent's constituent in the phrase.
    pub has_left_sibling: bool,
    /// The head child follows the dependent's constituent.
    pub head_follows: bool,
    /// A conjunctive-adverb token sits between the dependent's constituent
    /// and the head child.
    pub conjunction_between: bool,
    /// Case label donated by a stranded particle token attached to this
    /// dependent.
    pub donated_case: Option<DependencyLabel>,
}

/// Category of a head token for the fallback labeling rules, read off its
/// rightmost non-particle, non-ending, non-punctuation morpheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HeadCategory {
    Adjective,
    Nominal,
    Predicate,
    Other,
}

fn head_category(head: &Eojeol, registry: &TagsetRegistry) -> HeadCategory {
    for m in head.morphemes().iter().rev() {
        let id = m.tag().id();
        if is_punct(m, registry) || id.starts_with('j') || id.starts_with('e') {
            continue;
        }
        return match id {
            "paa" | "pad" | "xsm" => HeadCategory::Adjective,
            "xsv" => HeadCategory::Predicate,
            _ if id.starts_with('n') => HeadCategory::Nominal,
            _ if id.starts_with('p') => HeadCategory::Predicate,
            _ => HeadCategory::Other,
        };
    }
    HeadCategory::Other
}

/// Label one arc. The cascade is ordered: structural facts first, then the
/// dependent's trailing morphology, then the head's category, then the
/// unclassified fallback, so it is total.
pub fn assign_label(
    dependent: &Eojeol,
    head: &Eojeol,
    context: &ArcContext,
    registry: &TagsetRegistry,
) -> DependencyLabel {
    use DependencyLabel::*;
    // 1. Punctuation, and nothing else, is labeled `p`.
    if all_punct(dependent, registry) {
        return P;
    }
    // 2-4. Structure of the source constituent.
    if context.source_has_prn {
        return Prn;
    }
    if context.source_is_auxp {
        return Aux;
    }
    if context.source_is_ip || all_tagged(dependent, "ii") {
        return Intj;
    }
    // 5. Stranded grammatical affixes.
    if all_affix(dependent, registry) {
        return Ejx;
    }
    // 6. Case particles, own or donated by a stranded particle.
    if let Some(label) = trailing_case_label(dependent, registry).or(context.donated_case) {
        return label;
    }
    // 7. Coordination: conjunctive morphology, then the conjunction token
    // itself, then a conjunct separated from its head by a conjunction.
    let tag = last_tag(dependent);
    if tag == "ecc" || tag == "jcj" {
        return Conj;
    }
    if all_tagged(dependent, "maj") && context.has_left_sibling && context.head_follows {
        return Cc;
    }
    if context.conjunction_between {
        return Conj;
    }
    // 8. Other function-bearing morphology.
    if tag == "jcm" || tag == "etm" || tag.starts_with("mm") {
        return Adn;
    }
    if tag == "jca" {
        return Adv;
    }
    if tag == "ecs" {
        return Sub;
    }
    // 9. By the head's category.
    match head_category(head, registry) {
        HeadCategory::Adjective => Amod,
        HeadCategory::Nominal => Nmod,
        HeadCategory::Predicate => Vmod,
        HeadCategory::Other => Dep,
    }
}

struct RawArc {
    dep: usize,
    head: usize,
    context: ArcContext,
}

struct Walker<'t, 'r> {
    registry: &'r TagsetRegistry,
    tokens: Vec<&'t Eojeol>,
    arcs: Vec<RawArc>,
    entries: Vec<NodeHeads>,
}

impl<'t, 'r> Walker<'t, 'r> {
    fn walk(&mut self, node: &'t ConstituentNode) -> usize {
        let entry = self.entries.len();
        self.entries.push(NodeHeads {
            head_child: None,
            lexical_head: 0,
        });
        match node {
            ConstituentNode::Terminal { eojeol } => {
                self.tokens.push(eojeol);
                let index = self.tokens.len();
                self.entries[entry].lexical_head = index;
                index
            }
            ConstituentNode::Phrase { children, .. } => {
                let head_pos =
                    head_child_index(node, self.registry).expect("phrases have at least one child");
                let lex: Vec<usize> = children.iter().map(|child| self.walk(child)).collect();
                let head_lex = lex[head_pos];
                for (i, child) in children.iter().enumerate() {
                    if i == head_pos {
                        continue;
                    }
                    let conjunction_between =
                        (i + 1..head_pos).any(|j| all_tagged(self.tokens[lex[j] - 1], "maj"));
                    self.arcs.push(RawArc {
                        dep: lex[i],
                        head: head_lex,
                        context: ArcContext {
                            source_is_auxp: child.label() == Some(PhraseType::Auxp),
                            source_is_ip: child.label() == Some(PhraseType::Ip),
                            source_has_prn: child.has_ftag(FunctionTag::Prn),
                            has_left_sibling: i > 0,
                            head_follows: head_pos > i,
                            conjunction_between,
                            donated_case: None,
                        },
                    });
                }
                self.entries[entry] = NodeHeads {
                    head_child: Some(head_pos),
                    lexical_head: head_lex,
                };
                head_lex
            }
        }
    }
}

fn has_empty_phrase(node: &ConstituentNode) -> bool {
    match node {
        ConstituentNode::Terminal { .. } => false,
        ConstituentNode::Phrase { children, .. } => {
            children.is_empty() || children.iter().any(has_empty_phrase)
        }
    }
}

struct Analysis<'t> {
    tokens: Vec<&'t Eojeol>,
    arcs: Vec<RawArc>,
    entries: Vec<NodeHeads>,
    root_lex: usize,
}

fn analyze<'t>(
    tree: &'t ConstituentNode,
    registry: &TagsetRegistry,
) -> Result<Analysis<'t>, ConvertError> {
    if tree.terminal_count() == 0 {
        return Err(ConvertError::EmptyTree);
    }
    if has_empty_phrase(tree) {
        return Err(ConvertError::EmptyPhrase);
    }
    let mut walker = Walker {
        registry,
        tokens: Vec::new(),
        arcs: Vec::new(),
        entries: Vec::new(),
    };
    let root_lex = walker.walk(tree);
    Ok(Analysis {
        tokens: walker.tokens,
        arcs: walker.arcs,
        entries: walker.entries,
        root_lex,
    })
}

/// Head-child and lexical-head decisions for every node, in pre-order.
pub fn assign_heads(
    tree: &ConstituentNode,
    registry: &TagsetRegistry,
) -> Result<HeadAssignment, ConvertError> {
    let analysis = analyze(tree, registry)?;
    Ok(HeadAssignment {
        entries: analysis.entries,
    })
}

/// Convert a Penn-flavor tree into a labeled dependency tree.
pub fn to_dependency(
    tree: &ConstituentNode,
    registry: &TagsetRegistry,
) -> Result<DependencyTree, ConvertError> {
    let Analysis {
        tokens,
        mut arcs,
        root_lex,
        ..
    } = analyze(tree, registry)?;
    // A stranded particle donates its case label to the token it modifies.
    let mut donated: Vec<Option<DependencyLabel>> = vec![None; tokens.len() + 1];
    for arc in &arcs {
        let dep_eojeol = tokens[arc.dep - 1];
        if all_affix(dep_eojeol, registry) {
            if let Some(case) = trailing_case_label(dep_eojeol, registry) {
                donated[arc.head] = Some(case);
            }
        }
    }
    for arc in &mut arcs {
        arc.context.donated_case = donated[arc.dep];
    }
    let mut heads: Vec<(usize, DependencyLabel)> =
        vec![(0, DependencyLabel::Root); tokens.len() + 1];
    for arc in &arcs {
        let label = assign_label(
            tokens[arc.dep - 1],
            tokens[arc.head - 1],
            &arc.context,
            registry,
        );
        heads[arc.dep] = (arc.head, label);
    }
    heads[root_lex] = (0, DependencyLabel::Root);
    let dep_tokens: Vec<DepToken> = tokens
        .iter()
        .enumerate()
        .map(|(i, eojeol)| DepToken {
            index: i + 1,
            eojeol: (*eojeol).clone(),
            head: heads[i + 1].0,
            label: heads[i + 1].1,
        })
        .collect();
    let dep_tree =
        DependencyTree::new(dep_tokens).expect("conversion produces in-range, non-self heads");
    debug_assert_eq!(dep_tree.root_tokens().count(), 1);
    debug_assert!(dep_tree.cycle_members().is_empty());
    debug_assert!(dep_tree.is_projective());
    Ok(dep_tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{FineTag, Tagset};
    use crate::transform::to_penn;
    use crate::treeio::{parse_tree, ParseOptions};

    fn registry() -> TagsetRegistry {
        TagsetRegistry::builtin()
    }

    fn m(form: &str, tag: &str) -> Morpheme {
        Morpheme::new(form, FineTag::new(Tagset::Kaist, tag).unwrap()).unwrap()
    }

    fn terminal(parts: &[(&str, &str)]) -> ConstituentNode {
        ConstituentNode::terminal(
            Eojeol::new(parts.iter().map(|(f, t)| m(f, t)).collect()).unwrap(),
        )
    }

    fn parse(text: &str) -> ConstituentNode {
        let options = ParseOptions {
            expect_sentence_root: false,
            ..Default::default()
        };
        parse_tree(text, &registry(), &options).unwrap().tree
    }

    #[test]
    fn exclusion_rules() {
        let r = registry();
        let auxp = parse("(AUXP 보/px+았/ep+다/ef)");
        assert!(is_excluded_head(&auxp, &r));
        let ip = parse("(IP 아/ii)");
        assert!(is_excluded_head(&ip, &r));
        let prn = parse("(NP-PRN \\(/sl Cognac/f \\)/sr)");
        assert!(is_excluded_head(&prn, &r));
        assert!(is_excluded_head(&terminal(&[("을", "jco")]), &r));
        assert!(is_excluded_head(&terminal(&[(".", "sf")]), &r));
        // Mixed content is not "only" affixes.
        assert!(!is_excluded_head(
            &terminal(&[("들이키", "pvg"), ("였", "ep"), ("다", "ef")]),
            &r
        ));
        // A phrase of nothing but affixes is excluded too.
        let affix_phrase = parse("(NP 을/jco)");
        assert!(is_excluded_head(&affix_phrase, &r));
    }

    #[test]
    fn head_is_rightmost_non_excluded() {
        let r = registry();
        let vp_aux = parse("(VP (VP 먹/pvg+어/ecx) (AUXP 보/px+았/ep+다/ef))");
        assert_eq!(head_child_index(&vp_aux, &r), Some(0));
        let only_aux = parse("(VP (AUXP 보/px+았/ep+다/ef))");
        assert_eq!(head_child_index(&only_aux, &r), Some(0));
        let with_prn_and_affix = parse("(NP (NP 꼬냑/ncn) (NP-PRN \\(/sl Cognac/f \\)/sr) 을/jco)");
        assert_eq!(head_child_index(&with_prn_and_affix, &r), Some(0));
        let with_final_punct = parse("(S (NP 나/npp) (VP 가/pvg+ㄴ다/ef) ./sf)");
        assert_eq!(head_child_index(&with_final_punct, &r), Some(1));
    }

    #[test]
    fn all_excluded_takes_rightmost() {
        let r = registry();
        let tree = parse("(NP \\(/sl \\)/sr)");
        assert_eq!(head_child_index(&tree, &r), Some(1));
    }

    #[test]
    fn assign_heads_reports_preorder_decisions() {
        let r = registry();
        let tree = parse("(S (NP 나/npp+는/jxt) (VP 가/pvg+ㄴ다/ef))");
        let heads = assign_heads(&tree, &r).unwrap();
        // Pre-order: S, NP, terminal, VP, terminal.
        assert_eq!(heads.len(), 5);
        // Root: head child is the VP (child index 1), lexical head token 2.
        assert_eq!(
            heads.node(0).unwrap(),
            NodeHeads {
                head_child: Some(1),
                lexical_head: 2
            }
        );
        // Terminals are their own lexical heads.
        assert_eq!(
            heads.node(2).unwrap(),
            NodeHeads {
                head_child: None,
                lexical_head: 1
            }
        );
        assert_eq!(heads.node(4).unwrap().lexical_head, 2);
        assert_eq!(heads.root_lexical_head(), 2);
    }

    fn relations(tree: &DependencyTree) -> Vec<(String, usize, DependencyLabel)> {
        tree.iter()
            .map(|t| (t.surface().into_owned(), t.head, t.label))
            .collect()
    }

    #[test]
    fn converts_the_parenthetical_sentence() {
        use DependencyLabel::*;
        let r = registry();
        let kaist = parse(
            "(S (NP+는/jxt (NP 나/npp)) (VP (NP+을/jco (NP 꼬냑/ncn+\\(/sl+Cognac/f+\\)/sr)) (VP 들이키/pvg+였/ep+다/ef+./sf=들이켰다.)))",
        );
        let (penn, _) = to_penn(&kaist, &r);
        let dep = to_dependency(&penn, &r).unwrap();
        assert_eq!(
            relations(&dep),
            vec![
                ("나는".to_string(), 7, Tpc),
                ("꼬냑".to_string(), 7, Obj),
                ("(".to_string(), 4, P),
                ("Cognac".to_string(), 2, Prn),
                (")".to_string(), 4, P),
                ("을".to_string(), 2, Ejx),
                ("들이켰다".to_string(), 0, Root),
                (".".to_string(), 7, P),
            ]
        );
    }

    #[test]
    fn converts_coordination_with_rightmost_conjunct_as_head() {
        use DependencyLabel::*;
        let r = registry();
        let tree = parse(
            "(S (NP (NP cell/ncn) (ADVP and/maj) (NP bacteria/ncn+를/jco)) (VP (VP destroy/pvg+고/ecc) (VP kill/pvg+다/ef)))",
        );
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(
            relations(&dep),
            vec![
                ("cell".to_string(), 3, Conj),
                ("and".to_string(), 3, Cc),
                ("bacteria를".to_string(), 5, Obj),
                ("destroy고".to_string(), 5, Conj),
                ("kill다".to_string(), 0, Root),
            ]
        );
    }

    #[test]
    fn single_token_tree_is_its_own_root() {
        let r = registry();
        let tree = parse("(S 안녕/ii)");
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(dep.len(), 1);
        assert_eq!(dep.tokens()[0].head, 0);
        assert_eq!(dep.tokens()[0].label, DependencyLabel::Root);
    }

    #[test]
    fn auxiliary_phrase_depends_on_main_verb() {
        use DependencyLabel::*;
        let r = registry();
        let tree = parse("(S (VP (VP 먹/pvg+어/ecx) (AUXP 보/px+았/ep+다/ef)))");
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(
            relations(&dep),
            vec![
                ("먹어".to_string(), 0, Root),
                ("보았다".to_string(), 1, Aux),
            ]
        );
    }

    #[test]
    fn label_cascade_spot_checks() {
        use DependencyLabel::*;
        let r = registry();
        let verb = Eojeol::new(vec![m("가", "pvg"), m("ㄴ다", "ef")]).unwrap();
        let noun = Eojeol::new(vec![m("정류장", "ncn")]).unwrap();
        let ctx = ArcContext::default();
        // Topic particle wins over the positional rules below it.
        let topic = Eojeol::new(vec![m("나", "npp"), m("는", "jxt")]).unwrap();
        assert_eq!(assign_label(&topic, &verb, &ctx, &r), Tpc);
        // Bare noun under a nominal head is a nominal modifier.
        let bus = Eojeol::new(vec![m("버스", "ncn")]).unwrap();
        assert_eq!(assign_label(&bus, &noun, &ctx, &r), Nmod);
        // Adnominalized verb modifies the following noun.
        let adnominal = Eojeol::new(vec![m("가", "pvg"), m("ㄴ", "etm")]).unwrap();
        assert_eq!(assign_label(&adnominal, &noun, &ctx, &r), Adn);
        // Adverbial particle.
        let adverbial = Eojeol::new(vec![m("집", "ncn"), m("에서", "jca")]).unwrap();
        assert_eq!(assign_label(&adverbial, &verb, &ctx, &r), Adv);
        // Subordinate conjunction ending.
        let subordinate = Eojeol::new(vec![m("가", "pvg"), m("면", "ecs")]).unwrap();
        assert_eq!(assign_label(&subordinate, &verb, &ctx, &r), Sub);
        // Modifier of an adjective head.
        let adverb = Eojeol::new(vec![m("매우", "mag")]).unwrap();
        let adjective = Eojeol::new(vec![m("예쁘", "paa"), m("다", "ef")]).unwrap();
        assert_eq!(assign_label(&adverb, &adjective, &ctx, &r), Amod);
        // Modifier of a verb without its own marking.
        assert_eq!(assign_label(&adverb, &verb, &ctx, &r), Vmod);
        // Interjection token.
        let interjection = Eojeol::new(vec![m("아", "ii")]).unwrap();
        assert_eq!(assign_label(&interjection, &verb, &ctx, &r), Intj);
        // Donated case from a stranded particle.
        let bare = Eojeol::new(vec![m("꼬냑", "ncn")]).unwrap();
        let donated = ArcContext {
            donated_case: Some(Obj),
            ..Default::default()
        };
        assert_eq!(assign_label(&bare, &verb, &donated, &r), Obj);
        // The dependent's own particle outranks a donation.
        let topical = Eojeol::new(vec![m("꼬냑", "ncn"), m("은", "jxt")]).unwrap();
        assert_eq!(assign_label(&topical, &verb, &donated, &r), Tpc);
    }

    #[test]
    fn sentence_initial_conjunctive_adverb_is_not_cc() {
        use DependencyLabel::*;
        let r = registry();
        let tree = parse("(S (ADVP 그리고/maj) (VP 가/pvg+ㄴ다/ef))");
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(dep.tokens()[0].label, Vmod);
    }

    #[test]
    fn adnoun_token_labels_adn() {
        use DependencyLabel::*;
        let r = registry();
        let tree = parse("(NP (NP 새/mma) (NP 집/ncn))");
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(dep.tokens()[0].label, Adn);
    }

    #[test]
    fn bare_terminal_converts_to_single_root() {
        let r = registry();
        let tree = terminal(&[("나", "npp")]);
        let dep = to_dependency(&tree, &r).unwrap();
        assert_eq!(dep.len(), 1);
        assert_eq!(dep.tokens()[0].head, 0);
    }
}

#[cfg(test)]
mod degenerate_tests {
    use super::*;
    use crate::model::{Eojeol, FineTag, Morpheme, PhraseType, Tagset};

    #[test]
    fn hand_built_empty_phrase_is_an_error_not_a_panic() {
        let tag = FineTag::new(Tagset::Kaist, "ncn").unwrap();
        let terminal = ConstituentNode::Terminal {
            eojeol: Eojeol::new(vec![Morpheme::new("밥", tag).unwrap()]).unwrap(),
        };
        let empty = ConstituentNode::Phrase {
            label: PhraseType::Np,
            ftags: Vec::new(),
            affixes: Vec::new(),
            children: Vec::new(),
        };
        let tree = ConstituentNode::Phrase {
            label: PhraseType::S,
            ftags: Vec::new(),
            affixes: Vec::new(),
            children: vec![terminal, empty],
        };
        assert_eq!(
            to_dependency(&tree, &TagsetRegistry::builtin()),
            Err(ConvertError::EmptyPhrase)
        );
    }
}

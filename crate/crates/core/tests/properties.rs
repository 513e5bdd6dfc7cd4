//! Cross-module properties over randomly generated data.

mod common;

use proptest::prelude::*;

use ktb_core::depconv::{assign_heads, to_dependency};
use ktb_core::model::{
    DependencyLabel, Eojeol, FineTag, FunctionTag, Mode, Morpheme, PhraseType, Tagset,
    TagsetRegistry,
};
use ktb_core::transform::to_penn;
use ktb_core::treeio::{
    format_morph_line, parse_morph_line, parse_tree, serialize_tree, ConstituentNode, ParseOptions,
};

use common::{random_tree, Rng};

fn registry() -> TagsetRegistry {
    TagsetRegistry::builtin()
}

fn kaist_ids() -> Vec<String> {
    registry()
        .tag_ids(Tagset::Kaist)
        .map(String::from)
        .collect()
}

fn form_strategy() -> impl Strategy<Value = String> {
    // Anything line-representable; escaping covers the separators.
    proptest::string::string_regex("[^\\t\\n\\r]{1,6}").unwrap()
}

fn eojeol_strategy() -> impl Strategy<Value = Eojeol> {
    let ids = kaist_ids();
    let morpheme = (form_strategy(), proptest::sample::select(ids)).prop_map(|(form, id)| {
        Morpheme::new(form, FineTag::new(Tagset::Kaist, id).unwrap()).unwrap()
    });
    (
        proptest::collection::vec(morpheme, 1..5),
        proptest::option::of(form_strategy()),
    )
        .prop_map(|(morphemes, surface)| {
            let mut eojeol = Eojeol::new(morphemes).unwrap();
            eojeol.set_surface(surface);
            eojeol
        })
}

proptest! {
    #[test]
    fn morph_lines_round_trip(eojeol in eojeol_strategy()) {
        let line = format_morph_line(&eojeol);
        let mut warnings = Vec::new();
        let parsed = parse_morph_line(
            &line,
            &registry(),
            Tagset::Kaist,
            Mode::Strict,
            &mut warnings,
        )
        .unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(parsed, eojeol);
    }
}

#[test]
fn serialization_is_deterministic_and_stable() {
    let r = registry();
    let options = ParseOptions {
        expect_sentence_root: false,
        ..Default::default()
    };
    let mut rng = Rng::new(0x57ab1e);
    for _ in 0..500 {
        let size = 1 + rng.below(8);
        let tree = random_tree(&mut rng, size);
        let once = serialize_tree(&tree);
        let reparsed = parse_tree(&once, &r, &options).unwrap().tree;
        assert_eq!(serialize_tree(&reparsed), once);
    }
}

fn check_penn_shape(node: &ConstituentNode, registry: &TagsetRegistry) {
    match node {
        ConstituentNode::Terminal { eojeol } => {
            let punct: Vec<bool> = eojeol
                .morphemes()
                .iter()
                .map(|m| registry.is_punct_or_prefix(m.tag()))
                .collect();
            assert!(
                punct.iter().all(|p| *p) || punct.iter().all(|p| !*p),
                "terminal mixes punctuation and other material: {eojeol}"
            );
        }
        ConstituentNode::Phrase {
            ftags,
            affixes,
            children,
            ..
        } => {
            assert!(affixes.is_empty(), "phrase-level affix survived");
            if ftags.contains(&FunctionTag::Prn) {
                let terminals = node.terminals();
                assert!(!terminals.is_empty());
                assert_eq!(terminals.first().unwrap().surface(), "(");
                assert_eq!(terminals.last().unwrap().surface(), ")");
            }
            for child in children {
                check_penn_shape(child, registry);
            }
        }
    }
}

#[test]
fn penn_trees_have_clean_shape() {
    let r = registry();
    let mut rng = Rng::new(0x9e99);
    for _ in 0..2_000 {
        let size = 1 + rng.below(10);
        let tree = random_tree(&mut rng, size);
        let (penn, _) = to_penn(&tree, &r);
        check_penn_shape(&penn, &r);
        assert!(penn.terminal_count() >= tree.terminal_count());
    }
}

#[test]
fn punctuation_label_exactly_marks_punctuation_tokens() {
    let r = registry();
    let mut rng = Rng::new(0x1abe1);
    for _ in 0..2_000 {
        let size = 1 + rng.below(10);
        let tree = random_tree(&mut rng, size);
        let (penn, _) = to_penn(&tree, &r);
        let dep = to_dependency(&penn, &r).unwrap();
        for token in &dep {
            let is_punct = token
                .eojeol
                .morphemes()
                .iter()
                .all(|m| r.is_punct_or_prefix(m.tag()));
            if token.head == 0 {
                assert_eq!(token.label, DependencyLabel::Root);
            } else {
                assert_eq!(
                    token.label == DependencyLabel::P,
                    is_punct,
                    "token {} `{}` labeled {}",
                    token.index,
                    token.surface(),
                    token.label
                );
            }
        }
    }
}

#[test]
fn rightmost_conjunct_heads_conjunct_and_conjunction() {
    let r = registry();
    let mut rng = Rng::new(0xc0913);
    let mut checked = 0;
    for _ in 0..500 {
        // [conjunct, conjunction, conjunct] with a non-excluded right
        // conjunct: both left siblings must attach to its lexical head.
        let left = ConstituentNode::phrase(
            PhraseType::Np,
            vec![ConstituentNode::terminal(common::random_eojeol(&mut rng))],
        );
        let conjunction = ConstituentNode::terminal(
            Eojeol::new(vec![common::morpheme("그리고", "maj")]).unwrap(),
        );
        let right = ConstituentNode::phrase(
            PhraseType::Np,
            vec![ConstituentNode::terminal(
                Eojeol::new(vec![common::morpheme("박테리아", "ncn")]).unwrap(),
            )],
        );
        let phrase =
            ConstituentNode::phrase(PhraseType::Np, vec![left.clone(), conjunction, right]);
        let heads = assign_heads(&phrase, &r).unwrap();
        let dep = to_dependency(&phrase, &r).unwrap();
        let right_lex = dep.len();
        assert_eq!(heads.node(0).unwrap().head_child, Some(2));
        assert_eq!(heads.root_lexical_head(), right_lex);
        // Every other token attaches into the right conjunct's subtree,
        // and the tokens directly under the coordination phrase attach to
        // its lexical head.
        let conjunction_index = right_lex - 1;
        assert_eq!(dep.token(conjunction_index).unwrap().head, right_lex);
        assert_eq!(
            dep.token(conjunction_index).unwrap().label,
            DependencyLabel::Cc
        );
        let left_lex = heads.node(1).unwrap().lexical_head;
        assert_eq!(dep.token(left_lex).unwrap().head, right_lex);
        checked += 1;
    }
    assert_eq!(checked, 500);
}

#[test]
fn pipeline_values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<TagsetRegistry>();
    assert_send_sync::<ConstituentNode>();
    assert_send_sync::<Eojeol>();
    assert_send_sync::<ktb_core::model::DependencyTree>();
    assert_send_sync::<ktb_core::treeio::Diagnostic>();
}

//! Shared test support: a deterministic pseudo-random tree generator over
//! the built-in vocabularies, and a reference head finder written directly
//! from the head-selection rules, kept independent of the library's
//! implementation so the two can be checked against each other.

#![allow(dead_code)]

use ktb_core::model::{Eojeol, FineTag, FunctionTag, Morpheme, PhraseType, Tagset};
use ktb_core::treeio::ConstituentNode;

/// SplitMix64: tiny, seedable, good enough for corpus generation.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, numerator: u64, denominator: u64) -> bool {
        self.next_u64() % denominator < numerator
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}

const STEM_TAGS: &[&str] = &[
    "ncn", "ncpa", "ncps", "npp", "npd", "nq", "nbn", "nnc", "pvg", "pvd", "paa", "pad", "mag",
    "mad", "mma", "mmd", "f",
];
const AFFIX_TAGS: &[&str] = &[
    "jxt", "jco", "jcs", "jca", "jcm", "jct", "jcr", "jcc", "jcj", "jxc", "jxf", "jp", "ep", "ef",
    "etm", "etn", "ecc", "ecs", "ecx", "xsn", "xsv",
];
const PUNCT_TAGS: &[&str] = &["sf", "sp", "sy", "sd", "su"];
const SYLLABLES: &[&str] = &[
    "가", "나", "다", "라", "마", "바", "사", "아", "자", "차", "카", "타", "파", "하", "고", "보",
    "수", "주", "무", "리",
];
const PUNCT_FORMS: &[&str] = &[".", ",", "!", "?", ";"];
const PHRASES: &[PhraseType] = &[
    PhraseType::Np,
    PhraseType::Vp,
    PhraseType::Adjp,
    PhraseType::Advp,
    PhraseType::Auxp,
    PhraseType::Ip,
];

pub fn kaist_tag(id: &str) -> FineTag {
    FineTag::new(Tagset::Kaist, id).unwrap()
}

pub fn morpheme(form: &str, tag: &str) -> Morpheme {
    Morpheme::new(form, kaist_tag(tag)).unwrap()
}

fn random_form(rng: &mut Rng) -> String {
    let len = 1 + rng.below(3);
    (0..len).map(|_| *rng.pick(SYLLABLES)).collect()
}

/// A random eojeol in source-treebank style: stems, optional trailing
/// affixes, optionally a parenthetical insertion or trailing punctuation,
/// and occasionally a fused surface that differs from the concatenation.
pub fn random_eojeol(rng: &mut Rng) -> Eojeol {
    let mut morphemes = Vec::new();
    let stems = 1 + rng.below(2);
    for _ in 0..stems {
        morphemes.push(morpheme(&random_form(rng), rng.pick(STEM_TAGS)));
    }
    // Parenthetical gloss inside the eojeol.
    if rng.chance(1, 12) {
        morphemes.push(morpheme("(", "sl"));
        morphemes.push(morpheme(&random_form(rng), "f"));
        morphemes.push(morpheme(")", "sr"));
    }
    for _ in 0..rng.below(3) {
        morphemes.push(morpheme(&random_form(rng), rng.pick(AFFIX_TAGS)));
    }
    let mut trailing_punct = 0;
    if rng.chance(1, 4) {
        morphemes.push(morpheme(rng.pick(PUNCT_FORMS), rng.pick(PUNCT_TAGS)));
        trailing_punct = 1;
    }
    let mut eojeol = Eojeol::new(morphemes).unwrap();
    // Fused surface: contract the non-punctuation part by one character.
    if trailing_punct > 0 && rng.chance(1, 5) {
        let keep: String = eojeol.morphemes()[eojeol.morphemes().len() - trailing_punct..]
            .iter()
            .map(Morpheme::form)
            .collect();
        let stem: String = eojeol.morphemes()[..eojeol.morphemes().len() - trailing_punct]
            .iter()
            .map(Morpheme::form)
            .collect();
        let chars: Vec<char> = stem.chars().collect();
        if chars.len() > 1 {
            let fused: String = chars[..chars.len() - 1].iter().collect();
            eojeol.set_surface(Some(format!("{fused}{keep}")));
        }
    }
    eojeol
}

fn random_node(rng: &mut Rng, depth: usize, budget: &mut usize) -> ConstituentNode {
    if depth == 0 || *budget == 0 || rng.chance(2, 5) {
        *budget = budget.saturating_sub(1);
        return ConstituentNode::terminal(random_eojeol(rng));
    }
    let label = *rng.pick(PHRASES);
    let child_count = 1 + rng.below(3);
    let mut children = Vec::new();
    for _ in 0..child_count {
        children.push(random_node(rng, depth - 1, budget));
        if *budget == 0 {
            break;
        }
    }
    let mut node = ConstituentNode::phrase(label, children);
    // Agglutinated phrase-level affixes, in source-treebank style.
    if rng.chance(1, 4) {
        if let ConstituentNode::Phrase { affixes, .. } = &mut node {
            for _ in 0..1 + rng.below(2) {
                affixes.push(morpheme(&random_form(rng), rng.pick(AFFIX_TAGS)));
            }
        }
    }
    node
}

/// A random source-flavor tree rooted at `S` with roughly `size` eojeols.
pub fn random_tree(rng: &mut Rng, size: usize) -> ConstituentNode {
    let mut budget = size.max(1);
    let mut children = Vec::new();
    while budget > 0 {
        children.push(random_node(rng, 3, &mut budget));
    }
    ConstituentNode::phrase(PhraseType::S, children)
}

/// Reference implementation of head-child selection, straight from the
/// selection rules: the rightmost child is the head unless it is (1) an
/// AUXP or IP, (2) tagged PRN, (3) made of tags prefixed j/e/x only, or
/// (4) made of tags prefixed s only; a child matching one of those is
/// skipped unless every child matches, in which case the rightmost child
/// is taken after all.
pub fn reference_head_child(children: &[ConstituentNode]) -> usize {
    for i in (0..children.len()).rev() {
        if !reference_excluded(&children[i]) {
            return i;
        }
    }
    children.len() - 1
}

fn reference_excluded(node: &ConstituentNode) -> bool {
    match node.label() {
        Some(PhraseType::Auxp) | Some(PhraseType::Ip) => return true,
        _ => {}
    }
    if node.has_ftag(FunctionTag::Prn) {
        return true;
    }
    // Gather every tag prefix under the node iteratively.
    let mut prefixes = Vec::new();
    let mut stack = vec![node];
    while let Some(current) = stack.pop() {
        match current {
            ConstituentNode::Terminal { eojeol } => {
                for m in eojeol.morphemes() {
                    prefixes.push(m.tag().first_char());
                }
            }
            ConstituentNode::Phrase {
                affixes, children, ..
            } => {
                for m in affixes {
                    prefixes.push(m.tag().first_char());
                }
                stack.extend(children.iter());
            }
        }
    }
    prefixes.iter().all(|c| matches!(c, 'j' | 'e' | 'x')) || prefixes.iter().all(|c| *c == 's')
}

/// Reference dependency heads: attach every non-head child's lexical head
/// to the head child's lexical head, using [`reference_head_child`]; the
/// lexical head of the root gets 0. Returns `heads[token] = governor`,
/// 1-based with a leading unused slot.
pub fn reference_dependency_heads(tree: &ConstituentNode) -> Vec<usize> {
    fn walk(node: &ConstituentNode, next: &mut usize, heads: &mut Vec<usize>) -> usize {
        match node {
            ConstituentNode::Terminal { .. } => {
                *next += 1;
                *next - 1
            }
            ConstituentNode::Phrase { children, .. } => {
                let head_pos = reference_head_child(children);
                let lex: Vec<usize> = children
                    .iter()
                    .map(|child| walk(child, next, heads))
                    .collect();
                for (i, _) in children.iter().enumerate() {
                    if i != head_pos {
                        heads[lex[i]] = lex[head_pos];
                    }
                }
                lex[head_pos]
            }
        }
    }
    let mut heads = vec![0; tree.terminal_count() + 1];
    let mut next = 1;
    let root = walk(tree, &mut next, &mut heads);
    heads[root] = 0;
    heads
}

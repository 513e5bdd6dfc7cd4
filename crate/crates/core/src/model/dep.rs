use std::borrow::Cow;

use thiserror::Error;

use super::eojeol::Eojeol;
use super::label::DependencyLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepTreeError {
    #[error("dependency tree must contain at least one token")]
    Empty,
    #[error("token {index}: expected index {expected}")]
    NonSequentialIndex { index: usize, expected: usize },
    #[error("token {index}: head {head} out of range (sentence length {len})")]
    HeadOutOfRange {
        index: usize,
        head: usize,
        len: usize,
    },
    #[error("token {index} is its own head")]
    SelfHead { index: usize },
}

/// One token of a dependency tree: a surface token with its morpheme
/// analysis, a governor index (0 is the artificial root) and an arc label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepToken {
    pub index: usize,
    pub eojeol: Eojeol,
    pub head: usize,
    pub label: DependencyLabel,
}

impl DepToken {
    pub fn surface(&self) -> Cow<'_, str> {
        self.eojeol.surface()
    }
}

/// A labeled dependency tree over 1-based token positions.
///
/// Construction enforces only the per-token invariants (sequential indices,
/// head in range, no self-heads); global well-formedness checks such as
/// single-rootedness, acyclicity and projectivity live in `audit`, which
/// must be able to inspect malformed trees to diagnose them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyTree {
    tokens: Vec<DepToken>,
}

impl DependencyTree {
    pub fn new(tokens: Vec<DepToken>) -> Result<Self, DepTreeError> {
        if tokens.is_empty() {
            return Err(DepTreeError::Empty);
        }
        let len = tokens.len();
        for (pos, token) in tokens.iter().enumerate() {
            let expected = pos + 1;
            if token.index != expected {
                return Err(DepTreeError::NonSequentialIndex {
                    index: token.index,
                    expected,
                });
            }
            if token.head > len {
                return Err(DepTreeError::HeadOutOfRange {
                    index: token.index,
                    head: token.head,
                    len,
                });
            }
            if token.head == token.index {
                return Err(DepTreeError::SelfHead { index: token.index });
            }
        }
        Ok(DependencyTree { tokens })
    }

    pub fn tokens(&self) -> &[DepToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DepToken> {
        self.tokens.iter()
    }

    /// Token at 1-based position `index`.
    pub fn token(&self, index: usize) -> Option<&DepToken> {
        index.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    pub(crate) fn tokens_mut(&mut self) -> &mut [DepToken] {
        &mut self.tokens
    }

    /// Tokens attached directly to the artificial root.
    pub fn root_tokens(&self) -> impl Iterator<Item = &DepToken> {
        self.tokens.iter().filter(|t| t.head == 0)
    }

    /// Indices of tokens that sit on a head cycle.
    pub fn cycle_members(&self) -> Vec<usize> {
        // 0 = unvisited, 1 = on current path, 2 = done.
        let mut state = vec![0u8; self.tokens.len() + 1];
        state[0] = 2;
        let mut members = Vec::new();
        for start in 1..=self.tokens.len() {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut cur = start;
            while state[cur] == 0 {
                state[cur] = 1;
                path.push(cur);
                cur = self.tokens[cur - 1].head;
            }
            if state[cur] == 1 {
                // Found a new cycle; its members start where `cur` first
                // appeared on the path.
                let pos = path.iter().position(|&i| i == cur).unwrap();
                members.extend_from_slice(&path[pos..]);
            }
            for i in path {
                state[i] = 2;
            }
        }
        members.sort_unstable();
        members
    }

    /// Pairs of crossing arcs, each arc reported as its dependent index.
    /// The arc to the artificial root participates with span endpoint 0.
    pub fn crossing_arcs(&self) -> Vec<(usize, usize)> {
        let spans: Vec<(usize, usize, usize)> = self
            .tokens
            .iter()
            .map(|t| {
                let (lo, hi) = if t.head < t.index {
                    (t.head, t.index)
                } else {
                    (t.index, t.head)
                };
                (lo, hi, t.index)
            })
            .collect();
        let mut crossings = Vec::new();
        for i in 0..spans.len() {
            for j in (i + 1)..spans.len() {
                let (a, b, dep_i) = spans[i];
                let (c, d, dep_j) = spans[j];
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    crossings.push((dep_i, dep_j));
                }
            }
        }
        crossings
    }

    pub fn is_projective(&self) -> bool {
        self.crossing_arcs().is_empty()
    }
}

impl<'a> IntoIterator for &'a DependencyTree {
    type Item = &'a DepToken;
    type IntoIter = std::slice::Iter<'a, DepToken>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

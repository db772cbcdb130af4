//! Breadth-first derivation search.

use std::collections::HashMap;

use thiserror::Error;

use super::{rule_occurrences, StringSystem};
use crate::derivation::{Derivation, Span, StepJustification, Substitution};
use crate::symbol::Word;

pub const DEFAULT_MAX_ARRANGEMENTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    /// The reachable set was closed without meeting the goal.
    #[error("goal is not derivable ({explored} arrangements reachable)")]
    NotFound { explored: usize },
    #[error("search budget of {explored} arrangements exhausted")]
    BudgetExhausted { explored: usize },
    #[error("'{word}' uses symbol '{symbol}' outside the alphabet")]
    ForeignSymbol { word: Word, symbol: char },
}

struct Node {
    word: Word,
    parent: Option<(usize, usize, Span)>,
}

/// Shortest derivation from `start` to `goal`.
///
/// Among shortest derivations the one whose `(rule id, offset)` sequence is
/// lexicographically smallest is returned. `max_arrangements` bounds the
/// number of distinct words discovered, the start included.
pub fn derive(
    sys: &StringSystem,
    start: &Word,
    goal: &Word,
    max_arrangements: usize,
) -> Result<Derivation<Word>, SearchError> {
    for w in [start, goal] {
        if let Some(s) = sys.foreign_symbol(w) {
            return Err(SearchError::ForeignSymbol {
                word: w.clone(),
                symbol: s.glyph(),
            });
        }
    }
    if start == goal {
        return Ok(Derivation::new(start.clone()));
    }
    // Edge order for tie-breaking: rule id, then offset.
    let mut by_id: Vec<usize> = (0..sys.rules().len()).collect();
    by_id.sort_by(|&a, &b| sys.rules()[a].id().cmp(sys.rules()[b].id()));
    let rank: Vec<usize> = {
        let mut rank = vec![0; by_id.len()];
        for (r, &i) in by_id.iter().enumerate() {
            rank[i] = r;
        }
        rank
    };

    let mut nodes = vec![Node {
        word: start.clone(),
        parent: None,
    }];
    let mut index: HashMap<Word, usize> = HashMap::from([(start.clone(), 0)]);
    let mut head = 0;
    while head < nodes.len() {
        let current = nodes[head].word.clone();
        let mut edges: Vec<(usize, Span)> = rule_occurrences(sys, &current).collect();
        edges.sort_by_key(|&(i, span)| (rank[i], span.offset));
        for (rule, span) in edges {
            let next = current.splice(span.offset, span.len, sys.rules()[rule].rhs());
            if index.contains_key(&next) {
                continue;
            }
            if nodes.len() >= max_arrangements {
                return Err(SearchError::BudgetExhausted {
                    explored: nodes.len(),
                });
            }
            let found = next == *goal;
            index.insert(next.clone(), nodes.len());
            nodes.push(Node {
                word: next,
                parent: Some((head, rule, span)),
            });
            if found {
                return Ok(trace_back(sys, &nodes, nodes.len() - 1));
            }
        }
        head += 1;
    }
    Err(SearchError::NotFound {
        explored: nodes.len(),
    })
}

fn trace_back(sys: &StringSystem, nodes: &[Node], mut at: usize) -> Derivation<Word> {
    let mut path = Vec::new();
    while let Some((parent, rule, span)) = nodes[at].parent {
        path.push((rule, span, at));
        at = parent;
    }
    let mut d = Derivation::new(nodes[at].word.clone());
    for (rule, span, node) in path.into_iter().rev() {
        d.push(
            StepJustification {
                rule: sys.rules()[rule].id().to_string(),
                position: span,
                substitution: Substitution::new(),
            },
            nodes[node].word.clone(),
        );
    }
    d
}

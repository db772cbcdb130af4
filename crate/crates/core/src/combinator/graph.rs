//! Closure of a term under every possible contraction, not only the
//! normal-order one.

use std::collections::HashMap;

use super::{find_redexes, RuleId, Term};
use crate::derivation::Path;

pub const DEFAULT_MAX_NODES: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub rule: RuleId,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    /// Node 0 is the start term; the rest in breadth-first discovery order.
    pub nodes: Vec<Term>,
    pub edges: Vec<Edge>,
    /// Set when expansion stopped at the node limit.
    pub truncated: bool,
}

impl ReductionGraph {
    pub fn is_complete(&self) -> bool {
        !self.truncated
    }

    /// Nodes without redexes, i.e. normal forms.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| find_redexes(&self.nodes[i]).is_empty())
            .collect()
    }

    pub fn out_edges(&self, node: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == node)
    }

    /// The sinks reachable from `node`.
    pub fn reachable_sinks(&self, node: usize) -> Vec<usize> {
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adjacency[e.from].push(e.to);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![node];
        seen[node] = true;
        let mut out = Vec::new();
        while let Some(n) = stack.pop() {
            if adjacency[n].is_empty() && find_redexes(&self.nodes[n]).is_empty() {
                out.push(n);
            }
            for &m in &adjacency[n] {
                if !seen[m] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn reduction_graph(t: &Term, max_nodes: usize) -> ReductionGraph {
    let mut nodes = vec![t.clone()];
    let mut index: HashMap<Term, usize> = HashMap::from([(t.clone(), 0)]);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < nodes.len() {
        let current = nodes[head].clone();
        for (rule, path) in find_redexes(&current) {
            let next = super::contract(&current, rule, &path).expect("redex was just found");
            let to = match index.get(&next) {
                Some(&i) => i,
                None => {
                    if nodes.len() >= max_nodes {
                        return ReductionGraph {
                            nodes,
                            edges,
                            truncated: true,
                        };
                    }
                    index.insert(next.clone(), nodes.len());
                    nodes.push(next);
                    nodes.len() - 1
                }
            };
            edges.push(Edge {
                from: head,
                to,
                rule,
                path,
            });
        }
        head += 1;
    }
    ReductionGraph {
        nodes,
        edges,
        truncated: false,
    }
}

//! Constant-amortized-time generation of free trees.
//!
//! Trees are produced as level sequences rooted at a center, following the
//! Wright–Richmond–Odlyzko–McKay successor rule. Each isomorphism class
//! appears exactly once and the order is deterministic.

use crate::graph::Graph;
use crate::tree::Tree;

/// Streaming enumerator over all free trees of a fixed order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    order: usize,
    layout: Option<Vec<usize>>,
    small_done: bool,
}

impl FreeTrees {
    pub fn new(order: usize) -> Self {
        let layout = (order >= 2).then(|| {
            (0..=order / 2).chain(1..order.div_ceil(2)).collect::<Vec<_>>()
        });
        FreeTrees { order, layout, small_done: false }
    }
}

/// Splits a level sequence into the leftmost principal subtree (levels
/// shifted up by one) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Successor in the rooted-tree order, regenerating from position `p`.
fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

fn is_free_canonical(layout: &[usize]) -> Option<usize> {
    let (left, rest) = split(layout);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let valid = rh > lh
        || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        None
    } else {
        Some(left.len())
    }
}

/// Advances `candidate` to the next level sequence that is the canonical
/// center-rooted form of a free tree.
fn next_free(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let p = match is_free_canonical(&candidate) {
            None => return Some(candidate),
            Some(p) => p,
        };
        let mut next = next_rooted(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (left, _) = split(&next);
            let lh = left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            let suffix = lh + 1;
            for (k, slot) in next[len - suffix..].iter_mut().enumerate() {
                *slot = k + 1;
            }
        }
        candidate = next;
    }
}

/// Graph of a level sequence: each vertex hangs off the nearest preceding
/// vertex one level up.
pub fn level_sequence_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (v, &depth) in layout.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::from_edge_list(layout.len(), &edges).expect("level sequence yields a simple graph")
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.order < 2 {
            if self.small_done || self.order == 0 {
                return None;
            }
            self.small_done = true;
            return Some(Tree::new(Graph::empty(1)).unwrap());
        }
        let current = next_free(self.layout.take()?)?;
        let tree = Tree::new(level_sequence_to_graph(&current)).expect("level sequence is a tree");
        self.layout = next_rooted(&current, None);
        Some(tree)
    }
}

/// All free trees on `order` vertices.
pub fn enumerate_trees(order: usize) -> FreeTrees {
    FreeTrees::new(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert_eq!(enumerate_trees(0).count(), 0);
    }

    #[test]
    fn order_four_is_path_and_star() {
        let codes: HashSet<_> = enumerate_trees(4).map(|t| t.code().clone()).collect();
        let p4 = Tree::new(crate::graph::path(4)).unwrap();
        let k13 = Tree::new(crate::graph::star(3)).unwrap();
        assert!(codes.contains(p4.code()) && codes.contains(k13.code()));
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_trees(9).map(|t| t.code().clone()).collect();
        let b: Vec<_> = enumerate_trees(9).map(|t| t.code().clone()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn level_sequence_graph() {
        let g = level_sequence_to_graph(&[0, 1, 2, 1, 2]);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (3, 4)]);
    }
}

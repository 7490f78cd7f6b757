//! Trees and their canonical (isomorphism-class) codes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical code of a free tree.
///
/// The tree is rooted at its centroid (the smaller of the two rooted codes
/// wins for bicentroidal trees) and encoded as the AHU parenthesis string,
/// packed one bit per symbol (`1` opens, `0` closes) MSB first and padded
/// with zero bits. Two trees are isomorphic iff their codes are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if s.len() % 2 != 0 || s.is_empty() {
            return Err(Error::MalformedCode);
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| Error::MalformedCode))
            .collect::<Result<Vec<u8>>>()?;
        let code = CanonicalCode(bytes);
        if ahu_code(&code.decode()?) != code {
            return Err(Error::MalformedCode);
        }
        Ok(code)
    }

    fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().flat_map(|b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
    }

    /// Rebuilds a representative tree: vertices are numbered in preorder
    /// with the root as 0.
    pub fn decode(&self) -> Result<Graph> {
        let mut stack: Vec<usize> = Vec::new();
        let mut edges = Vec::new();
        let mut next = 0usize;
        let mut closed = false;
        for bit in self.bits() {
            if closed {
                if bit {
                    return Err(Error::MalformedCode);
                }
                continue;
            }
            if bit {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            } else {
                if stack.pop().is_none() {
                    return Err(Error::MalformedCode);
                }
                closed = stack.is_empty();
            }
        }
        if !closed {
            return Err(Error::MalformedCode);
        }
        // padding never fills a whole byte
        if self.0.len() != (2 * next).div_ceil(8) {
            return Err(Error::MalformedCode);
        }
        Graph::from_edge_list(next, &edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// A free tree together with its canonical code.
#[derive(Debug, Clone, Serialize)]
pub struct Tree {
    #[serde(flatten)]
    graph: Graph,
    code: CanonicalCode,
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Eq for Tree {}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.order() == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if graph.size() + 1 != graph.order() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                graph.size(),
                graph.order()
            )));
        }
        graph.require_connected()?;
        let code = ahu_code(&graph);
        Ok(Tree { graph, code })
    }

    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(Graph::from_edge_list(order, edges)?)
    }

    /// Tree for a canonical code, labeled in preorder from the root.
    pub fn from_code(code: &CanonicalCode) -> Result<Self> {
        Self::new(code.decode()?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.code == other.code
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl AsRef<Graph> for Tree {
    fn as_ref(&self) -> &Graph {
        &self.graph
    }
}

/// One or two centroids of a tree, ascending.
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return vec![0];
    }
    let (order, parent) = bfs_order(g, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        let mut largest = n - size[v];
        for &w in g.neighbors(v) {
            if parent[w] == Some(v) {
                largest = largest.max(size[w]);
            }
        }
        if 2 * largest <= n {
            out.push(v);
        }
    }
    out
}

fn bfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = g.order();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                order.push(w);
            }
        }
    }
    (order, parent)
}

/// AHU parenthesis string of the tree rooted at `root`, as `b'('`/`b')'`.
pub fn rooted_ahu_string(g: &Graph, root: usize) -> Vec<u8> {
    let (order, parent) = bfs_order(g, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); g.order()];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for &v in &order {
        if let Some(p) = parent[v] {
            children[p].push(v);
        }
    }
    for &v in order.iter().rev() {
        let mut kids: Vec<Vec<u8>> =
            children[v].iter().map(|&c| std::mem::take(&mut codes[c])).collect();
        kids.sort_unstable();
        let mut s = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        s.push(b'(');
        for k in kids {
            s.extend_from_slice(&k);
        }
        s.push(b')');
        codes[v] = s;
    }
    std::mem::take(&mut codes[root])
}

fn pack(parens: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; parens.len().div_ceil(8)];
    for (i, &c) in parens.iter().enumerate() {
        if c == b'(' {
            out[i / 8] |= 0x80 >> (i % 8);
        }
    }
    out
}

/// Canonical code of a tree given as a graph. The graph must be a tree.
pub fn ahu_code(g: &Graph) -> CanonicalCode {
    let best = centroids(g)
        .into_iter()
        .map(|c| rooted_ahu_string(g, c))
        .min()
        .expect("a tree has a centroid");
    CanonicalCode(pack(&best))
}

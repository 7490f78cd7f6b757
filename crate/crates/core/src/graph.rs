//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph. Edges are stored once as `(u, v)` with `u < v`,
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Graph { order, edges: Vec::new(), adjacency: vec![Vec::new(); order] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range labels.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(order, normalized))
    }

    pub(crate) fn from_sorted_edges(order: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph { order, edges, adjacency }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_partial(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path edge counts from `source`. Fails with the set of
    /// unreachable vertices when the graph is disconnected.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        let partial = self.bfs_partial(source);
        let unreachable: Vec<usize> =
            partial.iter().enumerate().filter(|(_, d)| d.is_none()).map(|(v, _)| v).collect();
        if !unreachable.is_empty() {
            return Err(Error::Disconnected { unreachable });
        }
        Ok(partial.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.bfs_partial(0).iter().all(Option::is_some)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.order == 0 {
            return Ok(());
        }
        self.bfs_distances(0).map(|_| ())
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.size() + 1 == self.order && self.is_connected()
    }

    /// A copy with edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = (u.min(v), u.max(v));
        let pos = self.edges.binary_search(&key).map_err(|_| Error::MissingEdge(key.0, key.1))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self::from_sorted_edges(self.order, edges))
    }

    /// A copy with the non-edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Ok(_) => Err(Error::DuplicateEdge(key.0, key.1)),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, key);
                Ok(Self::from_sorted_edges(self.order, edges))
            }
        }
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order {
            return Err(Error::OrderMismatch(perm.len(), self.order));
        }
        for &p in perm {
            if p >= self.order || seen[p] {
                return Err(Error::VertexOutOfRange { vertex: p, order: self.order });
            }
            seen[p] = true;
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.order, &edges)
    }

    /// Every connected graph one edge edit away: one edge deleted or one
    /// non-edge added. Deletions come first, in edge order, then additions
    /// in lexicographic order of the new edge.
    pub fn unit_edit_neighbors(&self) -> impl Iterator<Item = Graph> + '_ {
        let deletions = self
            .edges
            .iter()
            .filter_map(move |&(u, v)| self.without_edge(u, v).ok().filter(Graph::is_connected));
        let additions = (0..self.order).flat_map(move |u| {
            (u + 1..self.order).filter_map(move |v| {
                if self.has_edge(u, v) {
                    None
                } else {
                    self.with_edge(u, v).ok()
                }
            })
        });
        deletions.chain(additions)
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.order]; self.order];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }
}

/// Path on `n` vertices, labeled along the path.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_sorted_edges(n, edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_sorted_edges(leaves + 1, edges)
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edge_list(n, &edges).expect("cycle needs at least 3 vertices")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_sorted_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.size(), 1);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(p4, path(4));
    }

    #[test]
    fn edge_list_errors_are_distinct() {
        assert_eq!(Graph::from_edge_list(4, &[(0, 1), (1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(4, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edge_list(4, &[(0, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, order: 4 })
        );
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path(4).bfs_distances(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(star(3).bfs_distances(1).unwrap(), vec![1, 0, 2, 2]);
        assert_eq!(cycle(4).bfs_distances(0).unwrap(), vec![0, 1, 2, 1]);
    }

    #[test]
    fn bfs_reports_unreachable() {
        let g = Graph::from_edge_list(4, &[(0, 1)]).unwrap();
        assert_eq!(g.bfs_distances(0), Err(Error::Disconnected { unreachable: vec![2, 3] }));
    }

    #[test]
    fn unit_edits() {
        let p3: Vec<_> = path(3).unit_edit_neighbors().collect();
        assert_eq!(p3.len(), 1);
        assert_eq!(p3[0].size(), 3);

        let c4: Vec<_> = cycle(4).unit_edit_neighbors().collect();
        assert_eq!(c4.len(), 6);
        assert_eq!(c4.iter().filter(|g| g.size() == 3).count(), 4);

        let k3: Vec<_> = complete(3).unit_edit_neighbors().collect();
        assert_eq!(k3.len(), 3);
        assert!(k3.iter().all(|g| g.size() == 2 && g.is_connected()));
    }

    #[test]
    fn edge_edits_round_trip() {
        let c4 = cycle(4);
        let p = c4.without_edge(3, 0).unwrap();
        assert!(p.is_tree());
        assert_eq!(p.with_edge(0, 3).unwrap(), c4);
        assert_eq!(c4.without_edge(0, 2), Err(Error::MissingEdge(0, 2)));
    }
}

//! Tree constructions: caterpillars on a four-vertex spine and rooted
//! attachment of one tree to another.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::Tree;

/// A tree hung off the last spine vertex of a caterpillar, joined through `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub tree: Tree,
    pub root: usize,
}

/// Spine degrees `(x, y, z, t)` of a four-vertex caterpillar and an optional tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarSpec {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub t: u32,
    pub tail: Option<Tail>,
}

impl CaterpillarSpec {
    pub fn new(x: u32, y: u32, z: u32, t: u32) -> Result<Self> {
        let spec = CaterpillarSpec { x, y, z, t, tail: None };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_tail(mut self, tree: Tree, root: usize) -> Result<Self> {
        tree.graph().check_vertex(root)?;
        self.tail = Some(Tail { tree, root });
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x < 1 {
            return Err(Error::InvalidCaterpillar(format!("x = {} < 1", self.x)));
        }
        for (name, v) in [("y", self.y), ("z", self.z), ("t", self.t)] {
            if v < 2 {
                return Err(Error::InvalidCaterpillar(format!("{name} = {v} < 2")));
            }
        }
        if let Some(tail) = &self.tail {
            tail.tree.graph().check_vertex(tail.root)?;
        }
        Ok(())
    }

    pub fn spine(&self) -> [u32; 4] {
        [self.x, self.y, self.z, self.t]
    }

    /// Pendant leaves on each spine vertex.
    pub fn leaf_counts(&self) -> [usize; 4] {
        let last = if self.tail.is_some() { self.t - 2 } else { self.t - 1 };
        [self.x - 1, self.y - 2, self.z - 2, last].map(|c| c as usize)
    }

    pub fn order(&self) -> usize {
        4 + self.leaf_counts().iter().sum::<usize>()
            + self.tail.as_ref().map_or(0, |t| t.tree.order())
    }
}

/// Builds the caterpillar. Spine vertices are `0..4`, then the pendant leaves
/// of each spine vertex in order, then the tail (if any).
pub fn build_caterpillar(spec: &CaterpillarSpec) -> Result<Tree> {
    spec.validate()?;
    let order = spec.order();
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    let mut next = 4;
    for (spine, count) in spec.leaf_counts().into_iter().enumerate() {
        for _ in 0..count {
            edges.push((spine, next));
            next += 1;
        }
    }
    if let Some(tail) = &spec.tail {
        let offset = next;
        edges.extend(tail.tree.graph().edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        edges.push((3, tail.root + offset));
    }
    Tree::from_edge_list(order, &edges)
}

/// Joins `sub` to `host` by the edge `(at, sub_root)`. Vertices of `sub` are
/// shifted by `host.order()`.
pub fn attach_tree(host: &Tree, at: usize, sub: &Tree, sub_root: usize) -> Result<Tree> {
    host.graph().check_vertex(at)?;
    sub.graph().check_vertex(sub_root)?;
    let offset = host.order();
    let mut edges: Vec<_> = host.graph().edges().to_vec();
    edges.extend(sub.graph().edges().iter().map(|&(u, v)| (u + offset, v + offset)));
    edges.push((at, sub_root + offset));
    Tree::new(Graph::from_edge_list(offset + sub.order(), &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn sorted_degrees(t: &Tree) -> Vec<usize> {
        let mut d = t.graph().degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn smallest_caterpillar_is_a_path() {
        let t = build_caterpillar(&CaterpillarSpec::new(2, 2, 2, 2).unwrap()).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.is_isomorphic(&Tree::new(path(6)).unwrap()));
    }

    #[test]
    fn caterpillar_orders() {
        let a = build_caterpillar(&CaterpillarSpec::new(9, 4, 9, 4).unwrap()).unwrap();
        assert_eq!(a.order(), 24);
        assert_eq!(&a.graph().degrees()[..4], &[9, 4, 9, 4]);
        let b = build_caterpillar(&CaterpillarSpec::new(4, 16, 4, 4).unwrap()).unwrap();
        assert_eq!(b.order(), 26);
    }

    #[test]
    fn caterpillar_with_tail_keeps_spine_degrees() {
        let tail = Tree::new(path(3)).unwrap();
        let spec = CaterpillarSpec::new(3, 5, 2, 4).unwrap().with_tail(tail, 1).unwrap();
        let t = build_caterpillar(&spec).unwrap();
        assert_eq!(&t.graph().degrees()[..4], &[3, 5, 2, 4]);
        assert_eq!(t.order(), 4 + 2 + 3 + 0 + 2 + 3);
    }

    #[test]
    fn invalid_specs() {
        assert!(CaterpillarSpec::new(0, 2, 2, 2).is_err());
        assert!(CaterpillarSpec::new(1, 1, 2, 2).is_err());
        assert!(CaterpillarSpec::new(1, 2, 2, 1).is_err());
        assert!(CaterpillarSpec::new(1, 2, 2, 2).is_ok());
        let spec = CaterpillarSpec::new(1, 2, 2, 2).unwrap();
        assert!(spec.with_tail(Tree::new(path(2)).unwrap(), 5).is_err());
    }

    #[test]
    fn attach_examples() {
        let p3 = Tree::new(path(3)).unwrap();
        let p2 = Tree::new(path(2)).unwrap();
        let p5 = attach_tree(&p3, 2, &p2, 0).unwrap();
        assert!(p5.is_isomorphic(&Tree::new(path(5)).unwrap()));

        let k13 = Tree::new(star(3)).unwrap();
        let spider = attach_tree(&p2, 1, &k13, 0).unwrap();
        assert_eq!(sorted_degrees(&spider), vec![4, 2, 1, 1, 1, 1]);

        let k1 = Tree::new(Graph::empty(1)).unwrap();
        let p4 = Tree::new(path(4)).unwrap();
        let t = attach_tree(&p4, 1, &k1, 0).unwrap();
        assert_eq!(t.graph().degrees(), vec![1, 3, 2, 1, 1]);
    }

    #[test]
    fn attach_rejects_bad_vertices() {
        let p2 = Tree::new(path(2)).unwrap();
        assert!(attach_tree(&p2, 2, &p2, 0).is_err());
        assert!(attach_tree(&p2, 0, &p2, 7).is_err());
    }
}

use std::collections::BTreeMap;

use super::{profile_trees, CollisionKind, CollisionPair, PairMember};
use crate::construct::attach_tree;
use crate::error::{Error, Result};
use crate::indices;
use crate::scalar::Real;
use crate::tree::Tree;

/// All non-isomorphic pairs of `n`-vertex trees with equal Wiener index.
///
/// Pairs are grouped by Wiener value (ascending), then listed in
/// enumeration order within each group.
pub fn find_equal_wiener_pairs(n: usize) -> Result<Vec<CollisionPair>> {
    let profiles = profile_trees(n)?;
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, p) in profiles.iter().enumerate() {
        buckets.entry(p.wiener).or_default().push(i);
    }
    let mut out = Vec::new();
    for (w, members) in buckets {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (a, b) = (&profiles[i], &profiles[j]);
                debug_assert_ne!(a.code(), b.code());
                // second strategy: all-pairs BFS
                let wa = indices::wiener_bfs(a.tree.graph())?;
                let wb = indices::wiener_bfs(b.tree.graph())?;
                assert!(wa == w && wb == w, "Wiener strategies disagree");
                out.push(CollisionPair {
                    kind: CollisionKind::Wiener,
                    first: PairMember::of(&a.tree, w as f64),
                    second: PairMember::of(&b.tree, w as f64),
                    shared_value: w as f64,
                    gaps: a.gaps_to(b),
                    exact: Some(true),
                    cospectral: None,
                    spine_if1_gap: None,
                    label: None,
                });
            }
        }
    }
    Ok(out)
}

/// Randić difference of the two attachment-family trees as a function of the
/// degrees `x` and `y` of the two attachment vertices.
pub fn fig1_randic_gap<S: Real>(x: u32, y: u32) -> Result<S> {
    if x < 1 || y < 1 {
        return Err(Error::InvalidDegree);
    }
    let r = |a: u32, b: u32| S::one() / S::from_u32(a * b).unwrap().sqrt();
    let three = S::of(3.0);
    let left = r(3, 3) + r(3, x) + r(3, y) + three * r(1, 4) + r(4, y);
    let right = r(3, 2) + r(2, y) + r(5, y) + three * r(1, 5) + r(5, x);
    Ok(left - right)
}

fn distance_sums(t: &Tree) -> Vec<Vec<usize>> {
    (0..t.order()).map(|v| t.graph().bfs_distances(v).expect("trees are connected")).collect()
}

/// Whether hanging arbitrary trees `S` at the first attachment points and
/// `R` at the second keeps the Wiener indices of `t_a` and `t_b` equal.
///
/// That holds exactly when the orders agree, each attachment vertex has the
/// same total distance to its tree as its counterpart, and the two
/// attachment points are equally far apart in both trees.
pub fn check_wiener_preserving_attachment(
    t_a: &Tree,
    t_b: &Tree,
    attach_a: (usize, usize),
    attach_b: (usize, usize),
) -> Result<bool> {
    let wa = indices::wiener(t_a.graph())?;
    let wb = indices::wiener(t_b.graph())?;
    if wa != wb {
        return Err(Error::WienerMismatch(wa, wb));
    }
    for v in [attach_a.0, attach_a.1] {
        t_a.graph().check_vertex(v)?;
    }
    for v in [attach_b.0, attach_b.1] {
        t_b.graph().check_vertex(v)?;
    }
    if t_a.order() != t_b.order() {
        return Ok(false);
    }
    let da = |v| t_a.graph().bfs_distances(v).expect("trees are connected");
    let db = |v| t_b.graph().bfs_distances(v).expect("trees are connected");
    let (a1, a2) = (da(attach_a.0), da(attach_a.1));
    let (b1, b2) = (db(attach_b.0), db(attach_b.1));
    let total = |d: &Vec<usize>| d.iter().sum::<usize>();
    Ok(total(&a1) == total(&b1) && total(&a2) == total(&b2) && a1[attach_a.1] == b1[attach_b.1])
}

/// Every pair of attachment data that passes
/// [`check_wiener_preserving_attachment`], in lexicographic order.
pub fn matching_attachments(t_a: &Tree, t_b: &Tree) -> Vec<((usize, usize), (usize, usize))> {
    if t_a.order() != t_b.order() {
        return Vec::new();
    }
    let (da, db) = (distance_sums(t_a), distance_sums(t_b));
    let sum = |d: &Vec<usize>| d.iter().sum::<usize>();
    let n = t_a.order();
    let mut out = Vec::new();
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in (0..n).filter(|&b1| sum(&db[b1]) == sum(&da[a1])) {
                for b2 in 0..n {
                    if sum(&db[b2]) == sum(&da[a2]) && db[b1][b2] == da[a1][a2] {
                        out.push(((a1, a2), (b1, b2)));
                    }
                }
            }
        }
    }
    out
}

/// Hangs `s` (by `s_root`) at the first attachment point and `r` (by
/// `r_root`) at the second, on both base trees.
pub fn attach_pair(
    t_a: &Tree,
    t_b: &Tree,
    attach_a: (usize, usize),
    attach_b: (usize, usize),
    s: (&Tree, usize),
    r: (&Tree, usize),
) -> Result<(Tree, Tree)> {
    let grow = |t: &Tree, (p, q): (usize, usize)| -> Result<Tree> {
        let with_s = attach_tree(t, p, s.0, s.1)?;
        attach_tree(&with_s, q, r.0, r.1)
    };
    Ok((grow(t_a, attach_a)?, grow(t_b, attach_b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn no_equal_wiener_pairs_below_six() {
        assert!(find_equal_wiener_pairs(4).unwrap().is_empty());
        assert!(find_equal_wiener_pairs(5).unwrap().is_empty());
    }

    #[test]
    fn order_five_wiener_values() {
        let mut w: Vec<u64> = profile_trees(5).unwrap().iter().map(|p| p.wiener).collect();
        w.sort_unstable();
        assert_eq!(w, vec![16, 18, 20]);
    }

    #[test]
    fn fig1_values() {
        // frozen from direct evaluation of the closed form
        let g11: f64 = fig1_randic_gap(1, 1).unwrap();
        assert!((g11 - 0.136_610_822_562_384_55).abs() < 1e-12);
        let g44: f64 = fig1_randic_gap(4, 4).unwrap();
        assert!((g44 - 0.110_027_539_465_990_64).abs() < 1e-12);
        let limit = 1.0 / 3.0 + 1.5 - 1.0 / 6f64.sqrt() - 3.0 / 5f64.sqrt();
        let far: f64 = fig1_randic_gap(1_000_000, 1_000_000).unwrap();
        assert!((far - limit).abs() < 1e-3);
        assert!(fig1_randic_gap::<f64>(0, 3).is_err());
    }

    #[test]
    fn attachment_check_examples() {
        let p4 = Tree::new(path(4)).unwrap();
        assert!(check_wiener_preserving_attachment(&p4, &p4, (0, 3), (0, 3)).unwrap());
        // end vertex (distance sum 6) against interior vertex (sum 4)
        assert!(!check_wiener_preserving_attachment(&p4, &p4, (0, 0), (1, 1)).unwrap());
        let k13 = Tree::new(crate::graph::star(3)).unwrap();
        assert_eq!(
            check_wiener_preserving_attachment(&p4, &k13, (0, 0), (0, 0)),
            Err(Error::WienerMismatch(10, 9))
        );
    }
}

use std::collections::HashSet;

use proptest::prelude::*;
use topodist::construct::{attach_tree, build_caterpillar, CaterpillarSpec};
use topodist::{enumerate_trees, CanonicalCode, Graph, Tree};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && perms.iter().any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Labeled tree from a Prüfer sequence.
fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Isomorphism classes of all labeled trees on `n` vertices.
fn classes_from_labeled_trees(n: usize) -> HashSet<CanonicalCode> {
    if n <= 2 {
        return enumerate_trees(n).map(|t| t.code().clone()).collect();
    }
    let total = n.pow((n - 2) as u32);
    (0..total)
        .map(|mut k| {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            Tree::new(prufer_tree(n, &seq)).unwrap().code().clone()
        })
        .collect()
}

#[test]
fn canonical_code_is_complete_invariant_up_to_seven() {
    for n in 1..=7 {
        let perms = permutations(n);
        let trees: Vec<Tree> = enumerate_trees(n).collect();
        for (i, a) in trees.iter().enumerate() {
            for b in &trees[i..] {
                let same = brute_isomorphic(a.graph(), b.graph(), &perms);
                assert_eq!(same, a.code() == b.code(), "n = {n}");
            }
        }
        // random relabelings keep the code
        for t in &trees {
            for p in perms.iter().step_by(97) {
                let relabeled = Tree::new(t.graph().relabel(p).unwrap()).unwrap();
                assert_eq!(relabeled.code(), t.code());
            }
        }
    }
}

#[test]
fn seven_vertex_trees_have_eleven_codes() {
    let codes: HashSet<_> = enumerate_trees(7).map(|t| t.code().clone()).collect();
    assert_eq!(codes.len(), 11);
}

#[test]
fn enumeration_matches_labeled_tree_oracle() {
    for n in 1..=8 {
        let oracle = classes_from_labeled_trees(n);
        let got: HashSet<_> = enumerate_trees(n).map(|t| t.code().clone()).collect();
        assert_eq!(got, oracle, "n = {n}");
    }
}

#[test]
fn enumeration_is_duplicate_free_and_tree_shaped() {
    for n in 1..=12 {
        let mut seen = HashSet::new();
        for t in enumerate_trees(n) {
            assert_eq!(t.graph().size() + 1, n);
            assert!(t.graph().is_connected());
            assert!(seen.insert(t.code().clone()));
        }
    }
}

#[test]
fn caterpillar_degrees_for_all_small_specs() {
    for x in 1..=20 {
        for y in 2..=20 {
            for z in 2..=20 {
                for t in [2, 3, 7, 20] {
                    let spec = CaterpillarSpec::new(x, y, z, t).unwrap();
                    let tree = build_caterpillar(&spec).unwrap();
                    assert_eq!(&tree.graph().degrees()[..4], &[x as usize, y as usize, z as usize, t as usize]);
                    assert_eq!(tree.order(), (x + y + z + t - 2) as usize);
                }
            }
        }
    }
}

fn arb_tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |parents| {
            let edges: Vec<_> =
                parents.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
            Tree::from_edge_list(edges.len() + 1, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn attach_preserves_tree_shape(
        host in arb_tree(12),
        sub in arb_tree(8),
        at in any::<prop::sample::Index>(),
        root in any::<prop::sample::Index>(),
    ) {
        let (a, r) = (at.index(host.order()), root.index(sub.order()));
        let joined = attach_tree(&host, a, &sub, r).unwrap();
        prop_assert_eq!(joined.order(), host.order() + sub.order());
        prop_assert_eq!(joined.graph().size(), host.order() + sub.order() - 1);
        prop_assert!(joined.graph().is_connected());
        let deg = joined.graph().degrees();
        for v in 0..host.order() {
            let extra = usize::from(v == a);
            prop_assert_eq!(deg[v], host.graph().degree(v) + extra);
        }
        prop_assert_eq!(deg[host.order() + r], sub.graph().degree(r) + 1);
    }

    #[test]
    fn canonical_code_round_trips(t in arb_tree(16)) {
        let hex = t.code().to_hex();
        let parsed = CanonicalCode::from_hex(&hex).unwrap();
        let back = Tree::from_code(&parsed).unwrap();
        prop_assert_eq!(back.code(), t.code());
    }

    #[test]
    fn edge_list_round_trip(t in arb_tree(16)) {
        let text = topodist::io::write_edge_list(t.graph());
        let g = topodist::io::parse_edge_list(&text).unwrap();
        let back = Tree::new(g).unwrap();
        prop_assert_eq!(back.code(), t.code());
    }
}

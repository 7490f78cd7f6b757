use num_rational::BigRational;
use rayon::prelude::*;

use super::{CollisionKind, CollisionPair, IndexGaps, PairMember, SearchConfig};
use crate::construct::{build_caterpillar, CaterpillarSpec};
use crate::error::Result;
use crate::graph::path;
use crate::indices::{self, LogBase};
use crate::scalar::{exact_isqrt, RootField};
use crate::tree::Tree;

/// Spine degrees `(x, y, z, t)`.
pub type QuadKey = [u32; 4];

/// Randić contribution of a four-vertex caterpillar spine and its pendant
/// leaves, when the last spine vertex also carries a tail:
///
/// `(x−1)/√x + (y−2)/√y + (z−2)/√z + (t−2)/√t + 1/√(xy) + 1/√(yz) + 1/√(zt)`.
///
/// `None` when a needed square root does not exist in `F`.
pub fn randic_core<F: RootField>(q: QuadKey) -> Option<F> {
    let [x, y, z, t] = q.map(u64::from);
    let rt = |v: u64| F::sqrt_int(v);
    let int = |v: u64| F::from_int(v as i64);
    let leafy = |d: u64, spine: u64| -> Option<F> { Some((int(d) - int(spine)) / rt(d)?) };
    let link = |a: u64, b: u64| -> Option<F> { Some(F::one() / (rt(a)? * rt(b)?)) };
    Some(
        leafy(x, 1)? + leafy(y, 2)? + leafy(z, 2)? + leafy(t, 2)?
            + link(x, y)?
            + link(y, z)?
            + link(z, t)?,
    )
}

/// Exact value of [`randic_core`] when every spine degree is a perfect square.
pub fn randic_core_exact(q: QuadKey) -> Option<BigRational> {
    randic_core::<BigRational>(q)
}

/// `Σ s ln s` over the four spine degrees.
pub fn spine_degree_log_sum(q: QuadKey) -> f64 {
    q.iter().map(|&s| s as f64 * (s as f64).ln()).sum()
}

fn candidates(cfg: &SearchConfig, min: u32) -> Vec<u32> {
    (min..=cfg.scan_limit)
        .filter(|&v| !cfg.perfect_squares_only || exact_isqrt(v as u64).is_some())
        .collect()
}

fn scan_tail() -> Tree {
    Tree::new(path(2)).expect("P2 is a tree")
}

fn member(q: QuadKey, core: f64) -> Result<(Tree, PairMember)> {
    let spec = CaterpillarSpec::new(q[0], q[1], q[2], q[3])?.with_tail(scan_tail(), 0)?;
    let tree = build_caterpillar(&spec)?;
    let mut m = PairMember::of(&tree, core);
    m.spine = Some(q);
    Ok((tree, m))
}

fn collision(a: (QuadKey, f64), b: (QuadKey, f64)) -> Result<Option<CollisionPair>> {
    let (ta, ma) = member(a.0, a.1)?;
    let (tb, mb) = member(b.0, b.1)?;
    if ta.is_isomorphic(&tb) {
        return Ok(None);
    }
    let exact = match (randic_core_exact(a.0), randic_core_exact(b.0)) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    if exact == Some(false) {
        return Ok(None);
    }
    let (ga, gb) = (ta.graph(), tb.graph());
    let ln = LogBase::<f64>::Natural;
    let gaps = IndexGaps {
        wiener: Some(indices::wiener(ga)?.abs_diff(indices::wiener(gb)?) as f64),
        randic: Some((indices::randic::<f64>(ga)? - indices::randic::<f64>(gb)?).abs()),
        energy: None,
        ig: None,
        if1: Some((indices::ifk_entropy(ga, 1, ln)? - indices::ifk_entropy(gb, 1, ln)?).abs()),
    };
    Ok(Some(CollisionPair {
        kind: CollisionKind::Randic,
        first: ma,
        second: mb,
        shared_value: a.1,
        gaps,
        exact,
        cospectral: None,
        spine_if1_gap: Some((spine_degree_log_sum(a.0) - spine_degree_log_sum(b.0)).abs()),
        label: None,
    }))
}

/// Pairs of spine quadruples with the same last degree `t = cfg.fixed_t`
/// and equal [`randic_core`] within `cfg.float_tol`.
///
/// Both members are built with a two-vertex tail on the last spine vertex,
/// so their Randić indices differ by exactly the core difference. Candidates
/// whose degrees are all perfect squares are confirmed (or discarded) in
/// exact rational arithmetic. Each unordered pair appears once, first
/// quadruple lexicographically smaller, sorted by shared value then
/// quadruples.
pub fn caterpillar_scan(cfg: &SearchConfig) -> Result<Vec<CollisionPair>> {
    cfg.validate()?;
    let t = cfg.fixed_t;
    let xs = candidates(cfg, 1);
    let yz = candidates(cfg, 2);
    let mut values: Vec<(f64, QuadKey)> = xs
        .par_iter()
        .flat_map_iter(|&x| {
            let yz = &yz;
            yz.iter().flat_map(move |&y| {
                yz.iter().map(move |&z| {
                    let q = [x, y, z, t];
                    (randic_core::<f64>(q).expect("floats have roots"), q)
                })
            })
        })
        .collect();
    values.par_sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut raw = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[j].0 - values[i].0 > cfg.float_tol {
                break;
            }
            let (a, b) = if values[i].1 < values[j].1 { (i, j) } else { (j, i) };
            let (qa, qb) = (values[a].1, values[b].1);
            if cfg.equal_order_only && qa.iter().sum::<u32>() != qb.iter().sum::<u32>() {
                continue;
            }
            raw.push(((qa, values[a].0), (qb, values[b].0)));
        }
    }
    let mut out: Vec<CollisionPair> = raw
        .into_par_iter()
        .map(|(a, b)| collision(a, b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|p, q| {
        p.shared_value
            .total_cmp(&q.shared_value)
            .then(p.first.spine.cmp(&q.first.spine))
            .then(p.second.spine.cmp(&q.second.spine))
    });
    Ok(out)
}

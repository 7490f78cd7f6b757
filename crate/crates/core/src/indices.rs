//! Topological indices and entropies of graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Real;
use crate::spectral::{self, Spectrum, ZERO_EIGENVALUE_TOL};

/// Logarithm base for the entropies. Natural log unless stated otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum LogBase<S> {
    #[default]
    Natural,
    Base(S),
}

impl<S: Real> LogBase<S> {
    pub fn new(base: S) -> Result<Self> {
        if base.is_finite() && base > S::one() {
            Ok(LogBase::Base(base))
        } else {
            Err(Error::InvalidLogBase)
        }
    }

    pub fn log(&self, x: S) -> S {
        match *self {
            LogBase::Natural => x.ln(),
            LogBase::Base(b) => x.ln() / b.ln(),
        }
    }

    /// Base as a number, `e` for the natural log.
    pub fn value(&self) -> S {
        match *self {
            LogBase::Natural => S::one().exp(),
            LogBase::Base(b) => b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IndexKind {
    #[serde(rename = "W")]
    Wiener,
    #[serde(rename = "R")]
    Randic,
    #[serde(rename = "E")]
    Energy,
    #[serde(rename = "Ig")]
    SpectralEntropy,
    #[serde(rename = "If")]
    DegreePowerEntropy { k: u32 },
    #[serde(rename = "mu")]
    AverageDistance,
}

impl IndexKind {
    pub fn symbol(&self) -> String {
        match self {
            IndexKind::Wiener => "W".into(),
            IndexKind::Randic => "R".into(),
            IndexKind::Energy => "E".into(),
            IndexKind::SpectralEntropy => "Ig".into(),
            IndexKind::DegreePowerEntropy { k } => format!("If_{k}"),
            IndexKind::AverageDistance => "mu".into(),
        }
    }

    fn uses_log(&self) -> bool {
        matches!(self, IndexKind::SpectralEntropy | IndexKind::DegreePowerEntropy { .. })
    }
}

/// A computed index, tagged with its kind and (for entropies) log base.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexValue<S> {
    pub kind: IndexKind,
    pub value: S,
    pub log_base: Option<S>,
}

/// Evaluates any supported index on `g`.
pub fn compute<S: Real>(g: &Graph, kind: IndexKind, base: LogBase<S>) -> Result<IndexValue<S>> {
    let value = match kind {
        IndexKind::Wiener => S::from_u64(wiener(g)?).ok_or(Error::NonFinite)?,
        IndexKind::Randic => randic(g)?,
        IndexKind::Energy => energy(g),
        IndexKind::SpectralEntropy => ig_entropy(g, base)?,
        IndexKind::DegreePowerEntropy { k } => ifk_entropy(g, k, base)?,
        IndexKind::AverageDistance => avg_distance(g)?,
    };
    Ok(IndexValue { kind, value, log_base: kind.uses_log().then(|| base.value()) })
}

/// Wiener index: sum of distances over unordered vertex pairs. Trees take
/// the edge-cut route, other graphs all-pairs BFS.
pub fn wiener(g: &Graph) -> Result<u64> {
    if g.order() >= 1 && g.size() + 1 == g.order() {
        if let Ok(w) = wiener_edge_cut(g) {
            return Ok(w);
        }
    }
    wiener_bfs(g)
}

/// Wiener index by BFS from every vertex.
pub fn wiener_bfs(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for s in 0..g.order() {
        total += g.bfs_distances(s)?.iter().map(|&d| d as u64).sum::<u64>();
    }
    Ok(total / 2)
}

/// Wiener index of a tree as `Σ_e s(e)·(n − s(e))`, where `s(e)` is the size
/// of one side of the cut at `e`.
pub fn wiener_edge_cut(g: &Graph) -> Result<u64> {
    if !g.is_tree() {
        return Err(Error::NotATree("edge-cut Wiener formula needs a tree".into()));
    }
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0usize];
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut size = vec![1u64; n];
    let mut total = 0u64;
    for &v in order.iter().skip(1).rev() {
        total += size[v] * (n as u64 - size[v]);
        size[parent[v]] += size[v];
    }
    Ok(total)
}

/// Randić index `Σ_{uv ∈ E} 1/√(deg u · deg v)`.
pub fn randic<S: Real>(g: &Graph) -> Result<S> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| S::one() / S::of_usize(g.degree(u) * g.degree(v)).sqrt())
        .sum())
}

/// Graph energy, the sum of absolute adjacency eigenvalues.
pub fn energy<S: Real>(g: &Graph) -> S {
    spectral::eigenvalues::<S>(g).energy()
}

/// Spectral entropy from a precomputed spectrum. Eigenvalues with
/// `|λ| ≤ 1e-9` are dropped from the weighted log sum.
pub fn ig_from_spectrum<S: Real>(spectrum: &Spectrum<S>, base: LogBase<S>) -> Result<S> {
    let e = spectrum.energy();
    let zero = S::of(ZERO_EIGENVALUE_TOL);
    if e <= zero {
        return Err(Error::Edgeless);
    }
    let weighted: S = spectrum
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .filter(|&a| a > zero)
        .map(|a| a * base.log(a))
        .sum();
    Ok(base.log(e) - weighted / e)
}

/// Spectral entropy `log E − (1/E) Σ |λ| log |λ|`.
pub fn ig_entropy<S: Real>(g: &Graph, base: LogBase<S>) -> Result<S> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    ig_from_spectrum(&spectral::eigenvalues::<S>(g), base)
}

/// Degree-power entropy of the distribution proportional to `deg_i^k`.
pub fn ifk_entropy<S: Real>(g: &Graph, k: u32, base: LogBase<S>) -> Result<S> {
    if k < 1 {
        return Err(Error::InvalidExponent);
    }
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    let kk = S::from_u32(k).unwrap();
    let mut total = S::zero();
    let mut weighted = S::zero();
    for d in g.degrees().into_iter().filter(|&d| d > 0) {
        let d = S::of_usize(d);
        let p = d.powi(k as i32);
        total = total + p;
        // deg^k log deg^k = k deg^k log deg
        weighted = weighted + kk * p * base.log(d);
    }
    Ok(base.log(total) - weighted / total)
}

/// Shannon entropy `−Σ p_i log p_i`; zero entries contribute nothing.
pub fn shannon_entropy<S: Real>(p: &[S], base: LogBase<S>) -> Result<S> {
    validate_probability(p)?;
    Ok(-p.iter().filter(|&&x| x > S::zero()).map(|&x| x * base.log(x)).sum::<S>())
}

/// Checks `p_i ≥ 0` and `|Σ p_i − 1| ≤ 1e-12`.
pub fn validate_probability<S: Real>(p: &[S]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidProbability("empty vector".into()));
    }
    if let Some(x) = p.iter().find(|x| !x.is_finite() || **x < S::zero()) {
        return Err(Error::InvalidProbability(format!("entry {x} is negative or not finite")));
    }
    let sum: S = p.iter().copied().sum();
    if (sum - S::one()).abs() > S::of(1e-12) {
        return Err(Error::InvalidProbability(format!("entries sum to {sum}")));
    }
    Ok(())
}

/// Average distance `W / C(n, 2)`.
pub fn avg_distance<S: Real>(g: &Graph) -> Result<S> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, min: 2 });
    }
    let w = S::from_u64(wiener(g)?).ok_or(Error::NonFinite)?;
    Ok(w / S::of_usize(n * (n - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use approx::assert_abs_diff_eq;

    const LN: LogBase<f64> = LogBase::Natural;

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener(&path(4)).unwrap(), 10);
        assert_eq!(wiener(&star(3)).unwrap(), 9);
        assert_eq!(wiener(&path(5)).unwrap(), 20);
        assert_eq!(wiener(&cycle(4)).unwrap(), 8);
        assert_eq!(wiener_bfs(&path(5)).unwrap(), wiener_edge_cut(&path(5)).unwrap());
    }

    #[test]
    fn wiener_rejects_disconnected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(wiener(&g), Err(Error::Disconnected { .. })));
        assert!(wiener_edge_cut(&cycle(5)).is_err());
    }

    #[test]
    fn randic_examples() {
        assert_abs_diff_eq!(randic::<f64>(&star(4)).unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(randic::<f64>(&path(4)).unwrap(), 0.5 + 2f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(randic::<f64>(&path(3)).unwrap(), 2f64.sqrt(), epsilon = 1e-12);
        assert_eq!(randic::<f64>(&Graph::empty(2)), Err(Error::IsolatedVertex(0)));
    }

    #[test]
    fn energy_examples() {
        assert_abs_diff_eq!(energy::<f64>(&path(2)), 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(energy::<f64>(&star(3)), 2.0 * 3f64.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(energy::<f64>(&path(4)), 2.0 * 5f64.sqrt(), epsilon = 1e-10);
    }

    #[test]
    fn ig_examples() {
        let ln2 = 2f64.ln();
        assert_abs_diff_eq!(ig_entropy(&path(2), LN).unwrap(), ln2, epsilon = 1e-10);
        assert_abs_diff_eq!(ig_entropy(&star(3), LN).unwrap(), ln2, epsilon = 1e-10);
        assert_abs_diff_eq!(ig_entropy(&star(5), LN).unwrap(), ln2, epsilon = 1e-10);
        let base2 = LogBase::new(2.0).unwrap();
        assert_abs_diff_eq!(ig_entropy(&star(5), base2).unwrap(), 1.0, epsilon = 1e-10);
        assert_eq!(ig_entropy(&Graph::empty(3), LN), Err(Error::Edgeless));
    }

    #[test]
    fn ifk_examples() {
        let ln2 = 2f64.ln();
        let p4 = 6f64.ln() - 4.0 * ln2 / 6.0;
        assert_abs_diff_eq!(ifk_entropy(&path(4), 1, LN).unwrap(), p4, epsilon = 1e-12);
        assert_abs_diff_eq!(p4, 1.329661, epsilon = 1e-6);
        let k13 = 6f64.ln() - 3.0 * 3f64.ln() / 6.0;
        assert_abs_diff_eq!(ifk_entropy(&star(3), 1, LN).unwrap(), k13, epsilon = 1e-12);
        assert_abs_diff_eq!(k13, 1.242453, epsilon = 1e-6);
        // relabeled path, same value
        let relabeled = path(6).relabel(&[3, 1, 5, 0, 2, 4]).unwrap();
        assert_abs_diff_eq!(
            ifk_entropy(&path(6), 2, LN).unwrap(),
            ifk_entropy(&relabeled, 2, LN).unwrap(),
            epsilon = 1e-14
        );
        assert_eq!(ifk_entropy(&path(4), 0, LN), Err(Error::InvalidExponent));
    }

    #[test]
    fn ifk_matches_unfactored_form() {
        // k=2 on P4: weights (1,4,4,1)
        let direct = 10f64.ln() - (2.0 * 4.0 * 4f64.ln()) / 10.0;
        assert_abs_diff_eq!(ifk_entropy(&path(4), 2, LN).unwrap(), direct, epsilon = 1e-12);
    }

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon_entropy(&[1.0], LN).unwrap(), 0.0);
        let b2 = LogBase::new(2.0).unwrap();
        assert_abs_diff_eq!(shannon_entropy(&[0.5, 0.5], b2).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(shannon_entropy(&[0.25; 4], LN).unwrap(), 4f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(shannon_entropy(&[0.5, 0.0, 0.5], LN).unwrap(), 2f64.ln(), epsilon = 1e-15);
        assert!(shannon_entropy(&[0.5, -0.1, 0.6], LN).is_err());
        assert!(shannon_entropy(&[0.5, 0.4], LN).is_err());
        assert!(LogBase::new(1.0).is_err());
    }

    #[test]
    fn avg_distance_examples() {
        assert_abs_diff_eq!(avg_distance::<f64>(&path(2)).unwrap(), 1.0);
        assert_abs_diff_eq!(avg_distance::<f64>(&cycle(4)).unwrap(), 8.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(avg_distance::<f64>(&path(4)).unwrap(), 10.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(avg_distance::<f64>(&complete(5)).unwrap(), 1.0);
        assert!(avg_distance::<f64>(&Graph::empty(1)).is_err());
    }

    #[test]
    fn compute_dispatch() {
        let v = compute(&path(4), IndexKind::Wiener, LN).unwrap();
        assert_eq!(v.value, 10.0);
        assert_eq!(v.log_base, None);
        let v = compute(&path(4), IndexKind::DegreePowerEntropy { k: 1 }, LN).unwrap();
        assert_abs_diff_eq!(v.log_base.unwrap(), std::f64::consts::E);
    }
}

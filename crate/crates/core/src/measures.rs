//! The Gaussian-type distance between scalar graph invariants and the
//! bounds built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{self, IndexKind, LogBase};
use crate::scalar::Real;

/// Positive scale parameter of the distance measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Sigma<S>(S);

impl<S: Real> Sigma<S> {
    pub fn new(sigma: S) -> Result<Self> {
        if sigma.is_finite() && sigma > S::zero() {
            Ok(Sigma(sigma))
        } else {
            Err(Error::InvalidSigma)
        }
    }

    pub fn get(self) -> S {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceResult<S> {
    pub kind: Option<IndexKind>,
    pub value_g: S,
    pub value_h: S,
    pub gap: S,
    pub distance: S,
}

/// `1 − exp(−x)` for `x ≥ 0`, kept strictly below 1.
fn saturating_one_minus_exp<S: Real>(x: S) -> S {
    let d = -(-x).exp_m1();
    let below_one = S::one() - S::epsilon() / S::of(2.0);
    d.min(below_one)
}

/// `d = 1 − exp(−((iG − iH)/σ)²)`.
///
/// Once `(gap/σ)²` is large enough that the result rounds to 1 it is pinned
/// to the largest value below 1, so `d < 1` always holds.
pub fn d_index<S: Real>(value_g: S, value_h: S, sigma: Sigma<S>) -> Result<DistanceResult<S>> {
    if !value_g.is_finite() || !value_h.is_finite() {
        return Err(Error::NonFinite);
    }
    let gap = (value_g - value_h).abs();
    let r = gap / sigma.get();
    Ok(DistanceResult { kind: None, value_g, value_h, gap, distance: saturating_one_minus_exp(r * r) })
}

/// Index distance between two graphs.
pub fn graph_distance<S: Real>(
    g: &Graph,
    h: &Graph,
    kind: IndexKind,
    base: LogBase<S>,
    sigma: Sigma<S>,
) -> Result<DistanceResult<S>> {
    let a = indices::compute(g, kind, base)?.value;
    let b = indices::compute(h, kind, base)?.value;
    let mut r = d_index(a, b, sigma)?;
    r.kind = Some(kind);
    Ok(r)
}

/// Whether the distance built from `gap_a` is at least the one built from
/// `gap_b`, for every σ. Reduces to `gap_a ≥ gap_b` since `1 − e^{−x²}` is
/// increasing in `x ≥ 0`.
pub fn dominates<S: Real>(gap_a: S, gap_b: S) -> Result<bool> {
    for g in [gap_a, gap_b] {
        if g < S::zero() {
            return Err(Error::NegativeGap(g.to_f64().unwrap_or(f64::NAN)));
        }
        if !g.is_finite() {
            return Err(Error::NonFinite);
        }
    }
    Ok(gap_a >= gap_b)
}

/// `A = Σ (p'_i log(1 + 1/p'_i) + log(p'_i + 1))` for a strictly positive
/// probability vector.
pub fn theorem1_a<S: Real>(p_prime: &[S], base: LogBase<S>) -> Result<S> {
    indices::validate_probability(p_prime)?;
    if let Some(x) = p_prime.iter().find(|&&x| x <= S::zero()) {
        return Err(Error::InvalidProbability(format!("entry {x} is not strictly positive")));
    }
    Ok(p_prime
        .iter()
        .map(|&p| p * base.log(S::one() + S::one() / p) + base.log(p + S::one()))
        .sum())
}

/// The stated upper bound `1 − exp(−A²/σ²)`.
pub fn theorem1_bound<S: Real>(p_prime: &[S], base: LogBase<S>, sigma: Sigma<S>) -> Result<S> {
    let a = theorem1_a(p_prime, base)? / sigma.get();
    Ok(saturating_one_minus_exp(a * a))
}

/// The hypothesis `p_i ≤ p'_i` for all `i`. For two probability vectors it
/// forces `p = p'`, which makes the bound vacuous.
pub fn theorem1_degeneracy<S: Real>(p: &[S], p_prime: &[S]) -> Result<bool> {
    indices::validate_probability(p)?;
    indices::validate_probability(p_prime)?;
    if p.len() != p_prime.len() {
        return Err(Error::InvalidProbability(format!(
            "lengths differ ({} vs {})",
            p.len(),
            p_prime.len()
        )));
    }
    Ok(p.iter().zip(p_prime).all(|(a, b)| a <= b))
}

/// Edges whose removal keeps `g` connected.
pub fn cyclic_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.without_edge(u, v).map(|h| h.is_connected()).unwrap_or(false))
        .collect()
}

/// `W(g − e) − W(g)` for a cyclic edge `e`.
pub fn wiener_deletion_gap(g: &Graph, edge: (usize, usize)) -> Result<u64> {
    let (u, v) = edge;
    let reduced = g.without_edge(u, v)?;
    if !reduced.is_connected() {
        return Err(Error::BridgeEdge(u.min(v), u.max(v)));
    }
    Ok(indices::wiener(&reduced)? - indices::wiener(g)?)
}

/// Leading coefficient `(√2 − 1)/6` of the cubic Wiener growth bound.
pub fn theorem3_coefficient<S: Real>() -> S {
    (S::of(2.0).sqrt() - S::one()) / S::of(6.0)
}

/// Bound on the Wiener distance of two graphs one edge edit apart, with
/// the unspecified `O(n²)` term dropped. Asymptotic only.
pub fn theorem3_bound<S: Real>(n: usize, sigma: Sigma<S>) -> Result<S> {
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, min: 2 });
    }
    let nn = S::of_usize(n);
    let lead = theorem3_coefficient::<S>() * nn * nn * nn / sigma.get();
    Ok(saturating_one_minus_exp(lead * lead))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use approx::assert_abs_diff_eq;

    fn s(x: f64) -> Sigma<f64> {
        Sigma::new(x).unwrap()
    }

    #[test]
    fn d_index_examples() {
        assert_eq!(d_index(5.0, 5.0, s(1.0)).unwrap().distance, 0.0);
        let e = 1.0 - (-1f64).exp();
        assert_abs_diff_eq!(d_index(1.0, 0.0, s(1.0)).unwrap().distance, e, epsilon = 1e-15);
        assert_abs_diff_eq!(d_index(3.0, 1.0, s(2.0)).unwrap().distance, e, epsilon = 1e-15);
        assert_abs_diff_eq!(e, 0.632121, epsilon = 1e-6);
    }

    #[test]
    fn d_index_symmetric_and_below_one() {
        let a = d_index(2.5, -1.0, s(0.7)).unwrap();
        let b = d_index(-1.0, 2.5, s(0.7)).unwrap();
        assert_eq!(a.distance, b.distance);
        let far = d_index(1e6, 0.0, s(1.0)).unwrap();
        assert!(far.distance < 1.0);
        assert!(far.distance > 0.999);
    }

    #[test]
    fn d_index_errors() {
        assert_eq!(Sigma::new(0.0), Err(Error::InvalidSigma));
        assert_eq!(Sigma::new(-1.0), Err(Error::InvalidSigma));
        assert_eq!(d_index(f64::NAN, 0.0, s(1.0)), Err(Error::NonFinite));
    }

    #[test]
    fn dominance_examples() {
        assert!(!dominates(0.0, 0.3).unwrap());
        assert!(dominates(2.0, 2.0).unwrap());
        assert!(dominates(0.5, 0.4).unwrap());
        for sigma in [0.1, 1.0, 10.0] {
            let a = d_index(0.5, 0.0, s(sigma)).unwrap().distance;
            let b = d_index(0.4, 0.0, s(sigma)).unwrap().distance;
            assert!(a > b, "sigma {sigma}");
        }
        assert!(dominates(-0.1, 0.2).is_err());
    }

    #[test]
    fn theorem1_a_examples() {
        let ln = LogBase::Natural;
        assert_abs_diff_eq!(theorem1_a(&[1.0], ln).unwrap(), 2.0 * 2f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            theorem1_a(&[0.5, 0.5], ln).unwrap(),
            3f64.ln() + 2.0 * 1.5f64.ln(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            theorem1_a(&[0.25; 4], ln).unwrap(),
            5f64.ln() + 4.0 * 1.25f64.ln(),
            epsilon = 1e-12
        );
        assert!(theorem1_a(&[0.0, 1.0], ln).is_err());
        let bound = theorem1_bound(&[1.0], ln, s(1.0)).unwrap();
        assert_abs_diff_eq!(bound, 1.0 - (-(2.0 * 2f64.ln()).powi(2)).exp(), epsilon = 1e-15);
    }

    #[test]
    fn degeneracy_examples() {
        assert!(theorem1_degeneracy(&[0.3, 0.7], &[0.3, 0.7]).unwrap());
        assert!(!theorem1_degeneracy(&[0.3, 0.7], &[0.4, 0.6]).unwrap());
        assert!(theorem1_degeneracy(&[0.3, 0.7], &[0.3]).is_err());
        assert!(theorem1_degeneracy(&[0.3, 0.8], &[0.3, 0.7]).is_err());
    }

    #[test]
    fn deletion_gap_examples() {
        assert_eq!(wiener_deletion_gap(&cycle(4), (0, 1)).unwrap(), 2);
        assert_eq!(wiener_deletion_gap(&complete(3), (1, 2)).unwrap(), 1);
        assert_eq!(wiener_deletion_gap(&cycle(5), (0, 4)).unwrap(), 5);
        assert_eq!(wiener_deletion_gap(&path(3), (0, 1)), Err(Error::BridgeEdge(0, 1)));
        assert_eq!(cyclic_edges(&path(4)), vec![]);
        assert_eq!(cyclic_edges(&cycle(4)).len(), 4);
    }

    #[test]
    fn theorem3_examples() {
        let c = theorem3_coefficient::<f64>();
        assert_abs_diff_eq!(c, 0.069036, epsilon = 1e-6);
        let b = theorem3_bound(2, s(1e6)).unwrap();
        let x = (c * 8.0).powi(2) / 1e12;
        assert_abs_diff_eq!(b, x, epsilon = 1e-24);
        assert_abs_diff_eq!(b, 3.05e-13, epsilon = 1e-15);
        let sig = s(50.0);
        for n in 2..50 {
            assert!(theorem3_bound(n + 1, sig).unwrap() >= theorem3_bound(n, sig).unwrap());
        }
        assert!(theorem3_bound(1, sig).is_err());
    }
}

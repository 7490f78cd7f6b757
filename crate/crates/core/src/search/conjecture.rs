use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::{profile_trees, SearchConfig, TreeProfile};
use crate::error::{Error, Result};
use crate::indices::IndexKind;
use crate::tree::{CanonicalCode, Tree};

/// The three claimed inequalities `d_A(T, T') ≥ d_B(T, T')` over trees of
/// equal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "u8")]
pub enum ConjectureId {
    /// Wiener against Randić.
    WienerRandic = 1,
    /// Energy against spectral entropy.
    EnergyIg = 2,
    /// Randić against the degree entropy `If_1`.
    RandicIf1 = 3,
}

impl From<ConjectureId> for u8 {
    fn from(id: ConjectureId) -> u8 {
        id as u8
    }
}

impl TryFrom<u8> for ConjectureId {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(ConjectureId::WienerRandic),
            2 => Ok(ConjectureId::EnergyIg),
            3 => Ok(ConjectureId::RandicIf1),
            other => Err(Error::UnknownConjecture(other)),
        }
    }
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] =
        [ConjectureId::WienerRandic, ConjectureId::EnergyIg, ConjectureId::RandicIf1];

    /// The dominating index and the dominated one.
    pub fn kinds(self) -> (IndexKind, IndexKind) {
        match self {
            ConjectureId::WienerRandic => (IndexKind::Wiener, IndexKind::Randic),
            ConjectureId::EnergyIg => (IndexKind::Energy, IndexKind::SpectralEntropy),
            ConjectureId::RandicIf1 => {
                (IndexKind::Randic, IndexKind::DegreePowerEntropy { k: 1 })
            }
        }
    }

    /// Index values `(A, B)` of one tree.
    pub fn values(self, p: &TreeProfile) -> (f64, f64) {
        match self {
            ConjectureId::WienerRandic => (p.wiener as f64, p.randic),
            ConjectureId::EnergyIg => (p.energy, p.ig),
            ConjectureId::RandicIf1 => (p.randic, p.if1),
        }
    }
}

/// A tree pair for which the dominated index moves further than the
/// dominating one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub conjecture: ConjectureId,
    pub order: usize,
    pub first: CanonicalCode,
    pub second: CanonicalCode,
    /// `(A, B)` on the first tree.
    pub first_values: (f64, f64),
    pub second_values: (f64, f64),
    pub gap_a: f64,
    pub gap_b: f64,
    /// `gap_b − gap_a`.
    pub margin: f64,
}

/// Decisive violations plus the near-ties that were not counted.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Verification {
    pub pairs_checked: usize,
    pub violations: Vec<ViolationRecord>,
    pub borderline: Vec<ViolationRecord>,
}

/// `(|ΔA|, |ΔB|)` for a pair of profiled trees.
pub fn pair_gaps(id: ConjectureId, a: &TreeProfile, b: &TreeProfile) -> (f64, f64) {
    let (a1, b1) = id.values(a);
    let (a2, b2) = id.values(b);
    ((a1 - a2).abs(), (b1 - b2).abs())
}

/// Recomputes both gaps of a record from its canonical codes.
pub fn replay(record: &ViolationRecord) -> Result<(f64, f64)> {
    let a = TreeProfile::new(Tree::from_code(&record.first)?)?;
    let b = TreeProfile::new(Tree::from_code(&record.second)?)?;
    Ok(pair_gaps(record.conjecture, &a, &b))
}

fn record(id: ConjectureId, a: &TreeProfile, b: &TreeProfile) -> ViolationRecord {
    let (a, b) = if a.code() <= b.code() { (a, b) } else { (b, a) };
    let (gap_a, gap_b) = pair_gaps(id, a, b);
    ViolationRecord {
        conjecture: id,
        order: a.tree.order(),
        first: a.code().clone(),
        second: b.code().clone(),
        first_values: id.values(a),
        second_values: id.values(b),
        gap_a,
        gap_b,
        margin: gap_b - gap_a,
    }
}

fn by_margin_then_codes(x: &ViolationRecord, y: &ViolationRecord) -> Ordering {
    y.margin
        .total_cmp(&x.margin)
        .then_with(|| x.first.cmp(&y.first))
        .then_with(|| x.second.cmp(&y.second))
}

/// Checks every unordered pair of already profiled trees.
pub fn verify_profiles(id: ConjectureId, profiles: &[TreeProfile], float_tol: f64) -> Verification {
    let hits: Vec<(bool, ViolationRecord)> = (0..profiles.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = &profiles[i];
            profiles[i + 1..].iter().filter_map(move |b| {
                let (gap_a, gap_b) = pair_gaps(id, a, b);
                if gap_a >= gap_b {
                    return None;
                }
                Some((gap_b - gap_a > float_tol, record(id, a, b)))
            })
        })
        .collect();
    let n = profiles.len();
    let mut out = Verification { pairs_checked: n * n.saturating_sub(1) / 2, ..Default::default() };
    for (decisive, r) in hits {
        if decisive {
            out.violations.push(r);
        } else {
            out.borderline.push(r);
        }
    }
    out.violations.sort_by(by_margin_then_codes);
    out.borderline.sort_by(by_margin_then_codes);
    out
}

/// Checks every unordered pair of trees on `n` vertices.
pub fn verify_conjecture(id: ConjectureId, n: usize, cfg: &SearchConfig) -> Result<Verification> {
    cfg.validate()?;
    Ok(verify_profiles(id, &profile_trees(n)?, cfg.float_tol))
}

//! Conjecture verification over enumerated trees and the counterexample
//! constructions: equal-Wiener pairs, equal-Randić caterpillars and
//! equienergetic trees.

mod caterpillar;
mod conjecture;
mod equienergetic;
mod wiener;

pub use caterpillar::{caterpillar_scan, randic_core, randic_core_exact, spine_degree_log_sum, QuadKey};
pub use conjecture::{pair_gaps, replay, verify_conjecture, ConjectureId, Verification, ViolationRecord};
pub use equienergetic::{equienergetic_scan, EquienergeticReport, REVERIFY_SOLVER_TOL, SCAN_SOLVER_TOL};
pub use wiener::{
    attach_pair, check_wiener_preserving_attachment, fig1_randic_gap, find_equal_wiener_pairs,
    matching_attachments,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{self, LogBase};
use crate::spectral::{self, JacobiOptions};
use crate::tree::{CanonicalCode, Tree};

/// Knobs shared by the verifier and the scans.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Margins at or below this are borderline, never violations.
    pub float_tol: f64,
    /// Largest spine degree tried by the caterpillar scan.
    pub scan_limit: u32,
    pub fixed_t: u32,
    pub perfect_squares_only: bool,
    pub equal_order_only: bool,
    pub energy_tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_min: 4,
            n_max: 10,
            float_tol: 1e-9,
            scan_limit: 100,
            fixed_t: 4,
            perfect_squares_only: true,
            equal_order_only: false,
            energy_tol: 1e-8,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if !(self.float_tol > 0.0 && self.float_tol.is_finite()) {
            return bad("float_tol must be positive");
        }
        if !(self.energy_tol > 0.0 && self.energy_tol.is_finite()) {
            return bad("energy_tol must be positive");
        }
        if self.n_min > self.n_max {
            return bad("n_min exceeds n_max");
        }
        if self.fixed_t < 2 {
            return Err(Error::InvalidCaterpillar(format!("t = {} < 2", self.fixed_t)));
        }
        Ok(())
    }
}

/// Every index the searches compare, evaluated once per tree.
#[derive(Debug, Clone)]
pub struct TreeProfile {
    pub tree: Tree,
    pub wiener: u64,
    pub randic: f64,
    pub energy: f64,
    pub ig: f64,
    pub if1: f64,
}

impl TreeProfile {
    pub fn new(tree: Tree) -> Result<Self> {
        Self::with_solver(tree, JacobiOptions::default())
    }

    pub fn with_solver(tree: Tree, opts: JacobiOptions<f64>) -> Result<Self> {
        let g = tree.graph();
        let spectrum = spectral::eigenvalues_with::<f64>(g, opts);
        Ok(TreeProfile {
            wiener: indices::wiener(g)?,
            randic: indices::randic(g)?,
            energy: spectrum.energy(),
            ig: indices::ig_from_spectrum(&spectrum, LogBase::Natural)?,
            if1: indices::ifk_entropy(g, 1, LogBase::Natural)?,
            tree,
        })
    }

    pub fn code(&self) -> &CanonicalCode {
        self.tree.code()
    }

    pub fn gaps_to(&self, other: &TreeProfile) -> IndexGaps {
        IndexGaps {
            wiener: Some(self.wiener.abs_diff(other.wiener) as f64),
            randic: Some((self.randic - other.randic).abs()),
            energy: Some((self.energy - other.energy).abs()),
            ig: Some((self.ig - other.ig).abs()),
            if1: Some((self.if1 - other.if1).abs()),
        }
    }
}

/// Profiles of every tree on `n ≥ 2` vertices, in enumeration order.
pub fn profile_trees(n: usize) -> Result<Vec<TreeProfile>> {
    profile_trees_with(n, JacobiOptions::default())
}

pub fn profile_trees_with(n: usize, opts: JacobiOptions<f64>) -> Result<Vec<TreeProfile>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let trees: Vec<Tree> = enumerate_trees(n).collect();
    trees.into_par_iter().map(|t| TreeProfile::with_solver(t, opts)).collect()
}

/// Absolute differences of each index across a pair; `None` where not computed.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct IndexGaps {
    #[serde(rename = "W")]
    pub wiener: Option<f64>,
    #[serde(rename = "R")]
    pub randic: Option<f64>,
    #[serde(rename = "E")]
    pub energy: Option<f64>,
    #[serde(rename = "Ig")]
    pub ig: Option<f64>,
    #[serde(rename = "If_1")]
    pub if1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CollisionKind {
    Wiener,
    Randic,
    Energy,
}

/// One side of a collision pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairMember {
    pub code: CanonicalCode,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    /// Spine degrees, for caterpillar members.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spine: Option<[u32; 4]>,
    /// Value of the shared index on this member.
    pub value: f64,
}

impl PairMember {
    pub(crate) fn of(tree: &Tree, value: f64) -> Self {
        PairMember {
            code: tree.code().clone(),
            order: tree.order(),
            edges: tree.graph().edges().to_vec(),
            spine: None,
            value,
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edge_list(self.order, &self.edges).expect("member edges are valid")
    }
}

/// Two non-isomorphic trees sharing the value of one index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollisionPair {
    pub kind: CollisionKind,
    pub first: PairMember,
    pub second: PairMember,
    pub shared_value: f64,
    /// Differences of the other indices.
    pub gaps: IndexGaps,
    /// Exact-arithmetic confirmation, when available.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cospectral: Option<bool>,
    /// `|Σ s log s|` difference over the four spine degrees (caterpillars).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spine_if1_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

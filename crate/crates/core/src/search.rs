//! Finite grid enumeration of comultiplication and counit constants over a
//! fixed base algebra: a desk-scale completeness spot-check of the
//! classification tables.
//!
//! The candidate space factors as (counit vector) × (per-row comultiplication
//! blocks); pruning applies the linear counit constraints per block, then
//! coassociativity, compatibility and the weak axioms, and every survivor is
//! re-verified from scratch. Workers split over counit assignments; the
//! merged result is sorted by assignment, so output is deterministic in both
//! execution modes.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::axioms::{verify, AxiomId, Level};
use crate::exactmath::{Scalar, Tensor3, Vector};
use crate::fingerprint::{fingerprint, Fingerprint};
use crate::structure::{AlgebraStruct, CoalgebraStruct, WeakStructure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("candidate budget exceeded: {candidates} pre-prune candidates > budget {budget}")]
    BudgetExceeded {
        candidates: BigUint,
        budget: BigUint,
    },
    #[error("bad search spec: {0}")]
    BadSpec(String),
}

/// Execution mode for the data-parallel stages. `Parallel` falls back to
/// sequential when the crate is built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

/// One unknown of the search space, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Unknown {
    /// Comultiplication constant D_k^{i,j}.
    Comult { k: usize, i: usize, j: usize },
    /// Counit value f_k.
    Counit { k: usize },
}

impl Unknown {
    /// "D[k][i][j]" or "f[k]" with 1-based indices.
    pub fn parse(text: &str) -> Option<Unknown> {
        let text = text.trim();
        let idx = |s: &str| -> Option<Vec<usize>> {
            s.split(['[', ']'])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().ok())
                .collect()
        };
        if let Some(rest) = text.strip_prefix('D') {
            let v = idx(rest)?;
            if v.len() == 3 && v.iter().all(|&x| x >= 1) {
                return Some(Unknown::Comult {
                    k: v[0] - 1,
                    i: v[1] - 1,
                    j: v[2] - 1,
                });
            }
        }
        if let Some(rest) = text.strip_prefix('f') {
            let v = idx(rest)?;
            if v.len() == 1 && v[0] >= 1 {
                return Some(Unknown::Counit { k: v[0] - 1 });
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub base: AlgebraStruct,
    pub coeffs: Vec<Scalar>,
    pub freeze: Vec<(Unknown, Scalar)>,
    pub budget: BigUint,
    pub prune: bool,
    pub mode: ExecMode,
}

impl SearchSpec {
    pub fn new(base: AlgebraStruct, coeffs: Vec<Scalar>) -> SearchSpec {
        SearchSpec {
            base,
            coeffs,
            freeze: Vec::new(),
            budget: BigUint::from(100_000_000u64),
            prune: true,
            mode: ExecMode::default(),
        }
    }

    fn frozen(&self, u: Unknown) -> Option<&Scalar> {
        self.freeze.iter().find(|(f, _)| *f == u).map(|(_, v)| v)
    }

    /// Number of unfrozen unknowns.
    fn free_count(&self) -> usize {
        let n = self.base.dim;
        let mut count = 0;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if self.frozen(Unknown::Comult { k, i, j }).is_none() {
                        count += 1;
                    }
                }
            }
        }
        for k in 0..n {
            if self.frozen(Unknown::Counit { k }).is_none() {
                count += 1;
            }
        }
        count
    }

    pub fn pre_prune_count(&self) -> BigUint {
        BigUint::from(self.coeffs.len()).pow(self.free_count() as u32)
    }
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    /// Grid values in unknown order: all D_k^{i,j} lexicographic in
    /// (k, i, j), then f_1..f_n.
    pub assignment: Vec<Scalar>,
    pub structure: WeakStructure,
    pub fingerprint: Fingerprint,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FingerprintClass {
    pub fingerprint: Fingerprint,
    pub members: Vec<usize>,
    /// Catalog weak-bialgebra indices of the same dimension with an equal
    /// fingerprint.
    pub catalog_matches: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub classes: Vec<FingerprintClass>,
    pub pre_prune_count: BigUint,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateReport {
    pub free_unknowns: usize,
    pub pre_prune: String,
    /// Candidates surviving the linear counit constraints.
    pub post_counit_prune: String,
}

/// All assignments of `len` slots over the grid, as index odometers.
struct Odometer {
    idx: Vec<usize>,
    base: usize,
    done: bool,
}

impl Odometer {
    fn new(len: usize, base: usize) -> Odometer {
        Odometer {
            idx: vec![0; len],
            base,
            done: base == 0 && len > 0,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.base {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(out)
    }
}

/// Counit vectors compatible with the freezes, in grid order.
fn counit_candidates(spec: &SearchSpec) -> Vec<Vector> {
    let n = spec.base.dim;
    let free: Vec<usize> = (0..n)
        .filter(|&k| spec.frozen(Unknown::Counit { k }).is_none())
        .collect();
    let mut out = Vec::new();
    for combo in Odometer::new(free.len(), spec.coeffs.len()) {
        let mut f = Vector::zeros(n);
        for k in 0..n {
            if let Some(v) = spec.frozen(Unknown::Counit { k }) {
                f.set(k, v.clone());
            }
        }
        for (slot, &k) in free.iter().enumerate() {
            f.set(k, spec.coeffs[combo[slot]].clone());
        }
        out.push(f);
    }
    out
}

/// Assignments for one comultiplication block D_k^{·,·} that satisfy the
/// linear counit constraints for that row (when pruning).
fn block_candidates(spec: &SearchSpec, k: usize, f: &Vector) -> Vec<Vec<Scalar>> {
    let n = spec.base.dim;
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| spec.frozen(Unknown::Comult { k, i, j }).is_none())
        .collect();
    let delta = |a: usize, b: usize| {
        if a == b {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    };
    let mut out = Vec::new();
    'combo: for combo in Odometer::new(free.len(), spec.coeffs.len()) {
        let mut block = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(v) = spec.frozen(Unknown::Comult { k, i, j }) {
                    block[i * n + j] = v.clone();
                }
            }
        }
        for (slot, &(i, j)) in free.iter().enumerate() {
            block[i * n + j] = spec.coeffs[combo[slot]].clone();
        }
        if spec.prune {
            // (id⊗ε)Δ(e_k) = e_k and (ε⊗id)Δ(e_k) = e_k, row k only.
            for i in 0..n {
                let mut acc = Scalar::zero();
                for j in 0..n {
                    acc += &(&block[i * n + j] * f.get(j));
                }
                if acc != delta(i, k) {
                    continue 'combo;
                }
            }
            for j in 0..n {
                let mut acc = Scalar::zero();
                for i in 0..n {
                    acc += &(&block[i * n + j] * f.get(i));
                }
                if acc != delta(j, k) {
                    continue 'combo;
                }
            }
        }
        out.push(block);
    }
    out
}

fn candidate_structure(spec: &SearchSpec, blocks: &[&Vec<Scalar>], f: &Vector) -> WeakStructure {
    let n = spec.base.dim;
    let mut comult = Tensor3::zeros(n);
    for (k, block) in blocks.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                if !block[i * n + j].is_zero() {
                    comult.set(k, i, j, block[i * n + j].clone());
                }
            }
        }
    }
    WeakStructure::new(
        spec.base.clone(),
        CoalgebraStruct::new(comult, f.clone()),
        None,
        "search-candidate",
    )
}

/// Staged axiom filter in pruning order; cheap checks first.
fn passes_weak_axioms(h: &WeakStructure, prune: bool) -> bool {
    if prune {
        for axiom in [
            AxiomId::Coassoc,
            AxiomId::Compat,
            AxiomId::WeakUnitA,
            AxiomId::WeakUnitB,
            AxiomId::WeakCounitA,
            AxiomId::WeakCounitB,
        ] {
            match crate::axioms::residual(h, axiom) {
                Ok(r) if r.pass() => {}
                _ => return false,
            }
        }
    }
    // Soundness: independent full verification regardless of pruning.
    verify(h, Level::WeakBialgebra).pass
}

fn assignment_of(blocks: &[&Vec<Scalar>], f: &Vector) -> Vec<Scalar> {
    let mut assignment: Vec<Scalar> = Vec::new();
    for block in blocks {
        assignment.extend(block.iter().cloned());
    }
    assignment.extend(f.entries().iter().cloned());
    assignment
}

/// Survivors for one counit vector.
fn enumerate_for_counit(spec: &SearchSpec, f: &Vector) -> Vec<(Vec<Scalar>, WeakStructure)> {
    let n = spec.base.dim;
    let blocks: Vec<Vec<Vec<Scalar>>> = (0..n).map(|k| block_candidates(spec, k, f)).collect();
    if blocks.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let counts: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let mut odo = vec![0usize; n];
    loop {
        let chosen: Vec<&Vec<Scalar>> = (0..n).map(|k| &blocks[k][odo[k]]).collect();
        let h = candidate_structure(spec, &chosen, f);
        if passes_weak_axioms(&h, spec.prune) {
            out.push((assignment_of(&chosen, f), h));
        }
        // advance odometer
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            odo[pos] += 1;
            if odo[pos] < counts[pos] {
                break;
            }
            odo[pos] = 0;
        }
    }
}

fn run_over_counits(spec: &SearchSpec, counits: Vec<Vector>) -> Vec<(Vec<Scalar>, WeakStructure)> {
    #[cfg(feature = "parallel")]
    {
        if spec.mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return counits
                .par_iter()
                .flat_map_iter(|f| enumerate_for_counit(spec, f))
                .collect();
        }
    }
    counits
        .iter()
        .flat_map(|f| enumerate_for_counit(spec, f))
        .collect()
}

pub fn enumerate(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    if spec.coeffs.is_empty() {
        return Err(SearchError::BadSpec("coefficient grid is empty".into()));
    }
    let pre = spec.pre_prune_count();
    if pre > spec.budget {
        return Err(SearchError::BudgetExceeded {
            candidates: pre,
            budget: spec.budget.clone(),
        });
    }
    let mut survivors = run_over_counits(spec, counit_candidates(spec));
    survivors.sort_by(|a, b| a.0.cmp(&b.0));
    let hits: Vec<SearchHit> = survivors
        .into_iter()
        .map(|(assignment, structure)| {
            let fingerprint = fingerprint(&structure);
            SearchHit {
                assignment,
                structure,
                fingerprint,
            }
        })
        .collect();
    let classes = group_by_fingerprint(&hits, spec.base.dim);
    Ok(SearchOutcome {
        hits,
        classes,
        pre_prune_count: pre,
    })
}

fn group_by_fingerprint(hits: &[SearchHit], dim: usize) -> Vec<FingerprintClass> {
    let catalog_prints: Vec<(usize, Fingerprint)> =
        crate::catalog::entries(dim, crate::catalog::Kind::WeakBialgebra)
            .iter()
            .map(|e| (e.index, fingerprint(&e.structure)))
            .collect();
    let mut classes: Vec<FingerprintClass> = Vec::new();
    for (pos, hit) in hits.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| c.fingerprint == hit.fingerprint)
        {
            Some(c) => c.members.push(pos),
            None => {
                let catalog_matches = catalog_prints
                    .iter()
                    .filter(|(_, f)| *f == hit.fingerprint)
                    .map(|(i, _)| *i)
                    .collect();
                classes.push(FingerprintClass {
                    fingerprint: hit.fingerprint.clone(),
                    members: vec![pos],
                    catalog_matches,
                });
            }
        }
    }
    classes
}

/// Exact pre-prune count and the count surviving the linear counit stage.
pub fn estimate(spec: &SearchSpec) -> EstimateReport {
    let pre = spec.pre_prune_count();
    let mut post = BigUint::from(0u32);
    if spec.coeffs.is_empty() {
        return EstimateReport {
            free_unknowns: spec.free_count(),
            pre_prune: pre.to_string(),
            post_counit_prune: "0".into(),
        };
    }
    for f in counit_candidates(spec) {
        let mut product = BigUint::from(1u32);
        for k in 0..spec.base.dim {
            product *= BigUint::from(block_candidates(spec, k, &f).len());
        }
        post += product;
    }
    EstimateReport {
        free_unknowns: spec.free_count(),
        pre_prune: pre.to_string(),
        post_counit_prune: post.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn grid(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| Scalar::from_integer(v)).collect()
    }

    #[test]
    fn unknown_parsing() {
        assert_eq!(
            Unknown::parse("D[1][2][1]"),
            Some(Unknown::Comult { k: 0, i: 1, j: 0 })
        );
        assert_eq!(Unknown::parse("f[2]"), Some(Unknown::Counit { k: 1 }));
        assert_eq!(Unknown::parse("g[1]"), None);
    }

    #[test]
    fn pre_prune_counts() {
        let base = catalog::base_algebra(2, 2).unwrap();
        let spec = SearchSpec::new(base.clone(), grid(&[-1, 0, 1, 2]));
        assert_eq!(spec.pre_prune_count(), BigUint::from(1_048_576u32));
        let mut frozen = SearchSpec::new(base, grid(&[-1, 0, 1, 2]));
        frozen.freeze = vec![
            (Unknown::Counit { k: 0 }, Scalar::from_integer(2)),
            (Unknown::Counit { k: 1 }, Scalar::one()),
        ];
        assert_eq!(frozen.pre_prune_count(), BigUint::from(65_536u32));
    }

    #[test]
    fn budget_guard() {
        let base = catalog::base_algebra(3, 1).unwrap();
        let spec = SearchSpec::new(base, grid(&[-1, 0, 1, 2]));
        assert!(matches!(
            enumerate(&spec),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn zero_grid_has_no_survivors() {
        let base = catalog::base_algebra(2, 2).unwrap();
        let spec = SearchSpec::new(base, grid(&[0]));
        let out = enumerate(&spec).unwrap();
        assert!(out.hits.is_empty());
    }

    #[test]
    fn reduced_grid_matches_unpruned_brute_force() {
        let base = catalog::base_algebra(2, 2).unwrap();
        let mut spec = SearchSpec::new(base, grid(&[0, 1, 2]));
        spec.mode = ExecMode::Sequential;
        let pruned = enumerate(&spec).unwrap();
        spec.prune = false;
        let brute = enumerate(&spec).unwrap();
        assert_eq!(
            pruned
                .hits
                .iter()
                .map(|h| &h.assignment)
                .collect::<Vec<_>>(),
            brute.hits.iter().map(|h| &h.assignment).collect::<Vec<_>>()
        );
        assert!(!pruned.hits.is_empty());
    }
}

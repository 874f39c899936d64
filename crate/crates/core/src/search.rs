//! Symmetry-reduced exhaustive and heuristic searches for the minimum
//! syndrome former height (`L_h`, binary representation) or memory order
//! (`m_h`, monomial representation) at a target girth, plus exact
//! search-space size calculators.
//!
//! Exhaustive kernels scan the quantity upward from the theoretical bound;
//! the first value admitting a solution is therefore minimal. Columns are
//! generated in a fixed lexicographic order and assigned nondecreasingly,
//! which enumerates column multisets once. Every column is normalized so its
//! first one sits within the first `c` rows (a vertical block shift), and
//! the first column is pinned to row zero (a global level rotation); both
//! are code equivalences.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{bound, BoundQuery, Family, WeightSpec};
use crate::cycles::{girth_from_columns, DiffPool};
use crate::matrix::{ExponentMatrix, SyndromeFormer};
use crate::{Error, Result};

/// Node limit for a search; `None` runs to completion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SearchStatus {
    Found,
    ExhaustedNoSolution,
    BudgetExceeded,
}

/// Outcome of a search run. For exhaustive runs started at the theoretical
/// bound, `value` of a `Found` outcome is the global minimum; heuristic runs
/// report the best value found without a minimality claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<W> {
    pub status: SearchStatus,
    pub value: Option<u32>,
    pub witness: Option<W>,
    pub nodes: u64,
}

/// Exhaustive search over binary `H_s^T` matrices.
#[derive(Debug, Clone)]
pub struct BinarySearchSpec {
    pub a: usize,
    pub c: usize,
    pub w: u32,
    pub girth: u32,
    /// Scanned `L_h` range; defaults to start at the catalog bound.
    pub lh_range: Option<(u32, u32)>,
    pub budget: SearchBudget,
}

/// Exhaustive search over monomial exponent matrices with `w = c`.
#[derive(Debug, Clone)]
pub struct SymbolicSearchSpec {
    pub a: usize,
    pub c: usize,
    pub girth: u32,
    /// Scanned `m_h` range; defaults to start at the catalog bound.
    pub mh_range: Option<(u32, u32)>,
    pub budget: SearchBudget,
}

/// Randomized greedy search over monomial exponent matrices.
#[derive(Debug, Clone)]
pub struct HeuristicSearchSpec {
    pub a: usize,
    pub c: usize,
    pub girth: u32,
    pub mh_range: Option<(u32, u32)>,
    pub budget: SearchBudget,
    pub seed: u64,
    pub restarts: u32,
}

const VALID_GIRTHS: [u32; 4] = [6, 8, 10, 12];
const DEFAULT_SCAN_SPAN: u32 = 40;

/// Incremental feasibility state: a running difference table rejects
/// repeated `(delta, start level)` pairs in O(1), and chains touching the
/// newest column are searched for short cycles.
struct FeasState {
    c: usize,
    rcc: Vec<bool>,
    pool: DiffPool,
    /// Longest chain length that must stay open: `girth / 2 - 1`.
    max_chain: usize,
}

struct Undo {
    rcc_set: Vec<usize>,
    pool_lens: Vec<usize>,
}

impl FeasState {
    fn new(c: usize, lh: usize, girth: u32) -> Self {
        FeasState {
            c,
            rcc: vec![false; lh * c],
            pool: DiffPool::new(c),
            max_chain: (girth / 2 - 1) as usize,
        }
    }

    fn try_place(&mut self, col_index: usize, positions: &[u32]) -> Option<Undo> {
        let mut rcc_set = Vec::new();
        for (idx, &p) in positions.iter().enumerate() {
            for &q in &positions[idx + 1..] {
                let delta = (q - p) as usize;
                let slot = (delta - 1) * self.c + (p as usize % self.c);
                if self.rcc[slot] {
                    for &s in &rcc_set {
                        self.rcc[s] = false;
                    }
                    return None;
                }
                self.rcc[slot] = true;
                rcc_set.push(slot);
            }
        }
        let pool_lens = self.pool.level_lengths();
        self.pool.add_column(col_index, positions);
        for len in 3..=self.max_chain {
            if self.pool.has_closed_chain_through(len, col_index as u32) {
                self.pool.truncate_levels(&pool_lens);
                for &s in &rcc_set {
                    self.rcc[s] = false;
                }
                return None;
            }
        }
        Some(Undo { rcc_set, pool_lens })
    }

    fn unplace(&mut self, undo: Undo) {
        self.pool.truncate_levels(&undo.pool_lens);
        for s in undo.rcc_set {
            self.rcc[s] = false;
        }
    }
}

enum DfsOutcome {
    Found(Vec<usize>),
    Exhausted,
    Budget,
}

struct ColumnDfs<'a> {
    a: usize,
    candidates: &'a [Vec<u32>],
    col0_ok: &'a [bool],
    state: FeasState,
    nodes: u64,
    max_nodes: u64,
}

impl ColumnDfs<'_> {
    fn run(&mut self) -> DfsOutcome {
        let mut chosen = Vec::with_capacity(self.a);
        self.descend(&mut chosen, 0)
    }

    fn descend(&mut self, chosen: &mut Vec<usize>, first_idx: usize) -> DfsOutcome {
        let depth = chosen.len();
        if depth == self.a {
            return DfsOutcome::Found(chosen.clone());
        }
        for idx in first_idx..self.candidates.len() {
            if depth == 0 && !self.col0_ok[idx] {
                continue;
            }
            if self.nodes >= self.max_nodes {
                return DfsOutcome::Budget;
            }
            self.nodes += 1;
            if let Some(undo) = self.state.try_place(depth, &self.candidates[idx]) {
                chosen.push(idx);
                match self.descend(chosen, idx) {
                    DfsOutcome::Exhausted => {}
                    other => return other,
                }
                chosen.pop();
                self.state.unplace(undo);
            }
        }
        DfsOutcome::Exhausted
    }
}

/// All sorted `w`-subsets of `0..lh` whose smallest element lies within the
/// first `c` rows, in lexicographic order.
fn binary_candidates(lh: u32, w: u32, c: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(w as usize);
    fn extend(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, from: u32, lh: u32, w: u32) {
        if current.len() == w as usize {
            out.push(current.clone());
            return;
        }
        let remaining = w - current.len() as u32;
        for p in from..=(lh - remaining) {
            current.push(p);
            extend(out, current, p + 1, lh, w);
            current.pop();
        }
    }
    for first in 0..(c as u32).min(lh) {
        current.push(first);
        extend(&mut out, &mut current, first + 1, lh, w);
        current.pop();
    }
    out.sort();
    out
}

/// All exponent vectors in `[0, mh]^c` with minimum zero, in lexicographic
/// order, converted to `H_s^T` positions. `col0_ok` marks vectors whose row
/// zero entry is zero.
fn symbolic_candidates(mh: u32, c: usize) -> (Vec<Vec<u32>>, Vec<bool>) {
    let mut positions = Vec::new();
    let mut col0_ok = Vec::new();
    let mut v = vec![0u32; c];
    loop {
        if v.iter().any(|&e| e == 0) {
            positions.push(
                v.iter().enumerate().map(|(i, &e)| e * c as u32 + i as u32).collect::<Vec<_>>()
                    .tap_sort(),
            );
            col0_ok.push(v[0] == 0);
        }
        let mut i = c;
        loop {
            if i == 0 {
                return (positions, col0_ok);
            }
            i -= 1;
            if v[i] < mh {
                v[i] += 1;
                for e in v[i + 1..].iter_mut() {
                    *e = 0;
                }
                break;
            }
        }
    }
}

trait TapSort {
    fn tap_sort(self) -> Self;
}

impl TapSort for Vec<u32> {
    fn tap_sort(mut self) -> Self {
        self.sort_unstable();
        self
    }
}

fn validate_girth(girth: u32) -> Result<()> {
    if VALID_GIRTHS.contains(&girth) {
        Ok(())
    } else {
        Err(Error::InvalidQuery { detail: alloc::format!("unsupported girth target {girth}") })
    }
}

fn binary_default_low(a: usize, c: usize, w: u32, girth: u32) -> u32 {
    let q = BoundQuery { family: Family::TypeZ, a, c, weights: WeightSpec::Uniform(w), girth };
    match bound(&q) {
        Ok(b) => b.value as u32,
        Err(_) => (c as u32 + 1).max(w),
    }
}

fn symbolic_default_low(a: usize, c: usize, girth: u32) -> u32 {
    let q = BoundQuery {
        family: Family::Type1,
        a,
        c,
        weights: WeightSpec::Uniform(c as u32),
        girth,
    };
    match bound(&q) {
        Ok(b) => b.value as u32,
        Err(_) => 0,
    }
}

/// Minimal `L_h` admitting a weight-`w` binary `H_s^T` with the requested
/// girth, scanning heights in ascending order.
pub fn exhaustive_min_lh(spec: &BinarySearchSpec) -> Result<SearchOutcome<SyndromeFormer>> {
    validate_girth(spec.girth)?;
    if spec.w < 2 {
        return Err(Error::UnsupportedSearch {
            detail: alloc::format!("binary search needs w >= 2, got {}", spec.w),
        });
    }
    if spec.a == 0 || spec.c == 0 {
        return Err(Error::InvalidQuery { detail: alloc::string::String::from("a, c >= 1") });
    }
    let low = binary_default_low(spec.a, spec.c, spec.w, spec.girth);
    let (lo, hi) = spec.lh_range.unwrap_or((low, low + DEFAULT_SCAN_SPAN));
    if lo > hi || hi < spec.w {
        return Err(Error::EmptyScanRange);
    }
    let max_nodes = spec.budget.max_nodes.unwrap_or(u64::MAX);
    let mut nodes = 0u64;
    for lh in lo.max(spec.w)..=hi {
        let candidates = binary_candidates(lh, spec.w, spec.c);
        let col0_ok: Vec<bool> = candidates.iter().map(|col| col[0] == 0).collect();
        let mut dfs = ColumnDfs {
            a: spec.a,
            candidates: &candidates,
            col0_ok: &col0_ok,
            state: FeasState::new(spec.c, lh as usize, spec.girth),
            nodes,
            max_nodes,
        };
        let outcome = dfs.run();
        nodes = dfs.nodes;
        match outcome {
            DfsOutcome::Found(chosen) => {
                let columns: Vec<Vec<u32>> =
                    chosen.iter().map(|&idx| candidates[idx].clone()).collect();
                debug_assert!(girth_from_columns(&columns, spec.c, 12).0.at_least(spec.girth));
                let witness = SyndromeFormer::new(lh as usize, columns)?;
                return Ok(SearchOutcome {
                    status: SearchStatus::Found,
                    value: Some(lh),
                    witness: Some(witness),
                    nodes,
                });
            }
            DfsOutcome::Budget => {
                return Ok(SearchOutcome {
                    status: SearchStatus::BudgetExceeded,
                    value: None,
                    witness: None,
                    nodes,
                })
            }
            DfsOutcome::Exhausted => {}
        }
    }
    Ok(SearchOutcome { status: SearchStatus::ExhaustedNoSolution, value: None, witness: None, nodes })
}

/// Minimal `m_h` admitting a monomial `w = c` exponent matrix with the
/// requested girth, scanning memory orders in ascending order.
pub fn exhaustive_min_mh(spec: &SymbolicSearchSpec) -> Result<SearchOutcome<ExponentMatrix>> {
    validate_girth(spec.girth)?;
    if spec.c < 2 {
        return Err(Error::UnsupportedSearch {
            detail: alloc::string::String::from("symbolic search needs c >= 2"),
        });
    }
    let low = symbolic_default_low(spec.a, spec.c, spec.girth);
    let (lo, hi) = spec.mh_range.unwrap_or((low, low + DEFAULT_SCAN_SPAN));
    if lo > hi {
        return Err(Error::EmptyScanRange);
    }
    let max_nodes = spec.budget.max_nodes.unwrap_or(u64::MAX);
    let mut nodes = 0u64;
    for mh in lo..=hi {
        let (candidates, col0_ok) = symbolic_candidates(mh, spec.c);
        let lh = (mh as usize + 1) * spec.c;
        let mut dfs = ColumnDfs {
            a: spec.a,
            candidates: &candidates,
            col0_ok: &col0_ok,
            state: FeasState::new(spec.c, lh, spec.girth),
            nodes,
            max_nodes,
        };
        let outcome = dfs.run();
        nodes = dfs.nodes;
        match outcome {
            DfsOutcome::Found(chosen) => {
                let columns: Vec<Vec<u32>> =
                    chosen.iter().map(|&idx| candidates[idx].clone()).collect();
                debug_assert!(girth_from_columns(&columns, spec.c, 12).0.at_least(spec.girth));
                let witness = exponent_matrix_from_positions(&columns, spec.c);
                return Ok(SearchOutcome {
                    status: SearchStatus::Found,
                    value: Some(mh),
                    witness: Some(witness),
                    nodes,
                });
            }
            DfsOutcome::Budget => {
                return Ok(SearchOutcome {
                    status: SearchStatus::BudgetExceeded,
                    value: None,
                    witness: None,
                    nodes,
                })
            }
            DfsOutcome::Exhausted => {}
        }
    }
    Ok(SearchOutcome { status: SearchStatus::ExhaustedNoSolution, value: None, witness: None, nodes })
}

fn exponent_matrix_from_positions(columns: &[Vec<u32>], c: usize) -> ExponentMatrix {
    let a = columns.len();
    let mut rows = vec![vec![-1i32; a]; c];
    for (j, col) in columns.iter().enumerate() {
        for &p in col {
            rows[p as usize % c][j] = (p as usize / c) as i32;
        }
    }
    ExponentMatrix::from_rows(rows).expect("positions map to a rectangular matrix")
}

/// Randomized greedy column insertion with removal on stalls and restarts.
/// Deterministic for a fixed seed; the found value carries no minimality
/// claim.
pub fn heuristic_min_mh(spec: &HeuristicSearchSpec) -> Result<SearchOutcome<ExponentMatrix>> {
    validate_girth(spec.girth)?;
    if spec.c < 2 {
        return Err(Error::UnsupportedSearch {
            detail: alloc::string::String::from("symbolic search needs c >= 2"),
        });
    }
    let low = symbolic_default_low(spec.a, spec.c, spec.girth);
    let (lo, hi) = spec.mh_range.unwrap_or((low, low + DEFAULT_SCAN_SPAN));
    if lo > hi {
        return Err(Error::EmptyScanRange);
    }
    let max_nodes = spec.budget.max_nodes.unwrap_or(u64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut nodes = 0u64;
    for mh in lo..=hi {
        for _restart in 0..spec.restarts.max(1) {
            let mut columns: Vec<Vec<u32>> = Vec::with_capacity(spec.a);
            let mut state = FeasState::new(spec.c, (mh as usize + 1) * spec.c, spec.girth);
            // Per-restart attempt budget keeps single restarts from stalling
            // forever on infeasible prefixes.
            let attempt_cap = 200 * spec.a as u64;
            let mut attempts = 0u64;
            let mut last_removed: Option<Vec<u32>> = None;
            while columns.len() < spec.a && attempts < attempt_cap {
                if nodes >= max_nodes {
                    return Ok(SearchOutcome {
                        status: SearchStatus::BudgetExceeded,
                        value: None,
                        witness: None,
                        nodes,
                    });
                }
                attempts += 1;
                nodes += 1;
                let candidate = random_column(&mut rng, mh, spec.c);
                if last_removed.as_deref() == Some(candidate.as_slice()) {
                    continue;
                }
                if let Some(_undo) = state.try_place(columns.len(), &candidate) {
                    columns.push(candidate);
                    last_removed = None;
                } else if attempts % 50 == 0 && !columns.is_empty() {
                    let victim = rng.gen_range(0..columns.len());
                    last_removed = Some(columns.remove(victim));
                    state = rebuild_state(&columns, spec.c, mh, spec.girth);
                }
            }
            if columns.len() == spec.a {
                debug_assert!(girth_from_columns(&columns, spec.c, 12).0.at_least(spec.girth));
                let witness = exponent_matrix_from_positions(&columns, spec.c);
                return Ok(SearchOutcome {
                    status: SearchStatus::Found,
                    value: Some(mh),
                    witness: Some(witness),
                    nodes,
                });
            }
        }
    }
    Ok(SearchOutcome { status: SearchStatus::ExhaustedNoSolution, value: None, witness: None, nodes })
}

fn random_column(rng: &mut ChaCha8Rng, mh: u32, c: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..c).map(|_| rng.gen_range(0..=mh)).collect();
    let min = *v.iter().min().unwrap();
    for e in v.iter_mut() {
        *e -= min;
    }
    v.iter().enumerate().map(|(i, &e)| e * c as u32 + i as u32).collect::<Vec<_>>().tap_sort()
}

fn rebuild_state(columns: &[Vec<u32>], c: usize, mh: u32, girth: u32) -> FeasState {
    let mut state = FeasState::new(c, (mh as usize + 1) * c, girth);
    for (idx, col) in columns.iter().enumerate() {
        let placed = state.try_place(idx, col);
        debug_assert!(placed.is_some(), "removing a column cannot break feasibility");
    }
    state
}

/// Stage-by-stage search-space sizes, exact in arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceBreakdown {
    /// Successive reduction stages, coarsest first.
    pub stages: Vec<(&'static str, BigUint)>,
    /// Fully reduced count.
    pub final_count: BigUint,
    /// Set when the final stage's inner sum was clamped at zero terms.
    pub clamped: bool,
}

fn binom(n: &BigUint, k: u64) -> BigUint {
    let zero = BigUint::from(0u32);
    if BigUint::from(k) > *n {
        return zero;
    }
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    result
}

fn binom_u64(n: u64, k: i64) -> BigUint {
    if k < 0 {
        return BigUint::from(0u32);
    }
    binom(&BigUint::from(n), k as u64)
}

/// Sum of `max(s - j, 0)` for `j = 1..=m`, with a flag when clamping
/// occurred.
fn clamped_descending_sum(s: &BigUint, m: &BigUint) -> (BigUint, bool) {
    let zero = BigUint::from(0u32);
    if *s == zero {
        let clamped = *m > zero;
        return (zero, clamped);
    }
    let s_minus_1 = s - 1u32;
    let clamped = *m > s_minus_1;
    let t = if clamped { s_minus_1 } else { m.clone() };
    // t*s - t(t+1)/2
    let sum = &t * s - (&t * (&t + 1u32)) / 2u32;
    (sum, clamped)
}

/// Search-space sizes for binary `H_s^T` matrices of height `lh`, width `a`
/// and column weight `w`, after each symmetry reduction.
pub fn search_space_size_binary(a: usize, c: usize, w: u32, lh: u32) -> Result<SpaceBreakdown> {
    if a == 0 || c == 0 || w == 0 {
        return Err(Error::InvalidQuery { detail: alloc::string::String::from("a, c, w >= 1") });
    }
    if lh < w {
        return Err(Error::InvalidQuery {
            detail: alloc::format!("L_h = {lh} below column weight {w}"),
        });
    }
    let per_column = binom_u64(lh as u64, w as i64);
    let all = binom(&per_column, a as u64);
    let first_pinned = binom_u64((lh - 1) as u64, w as i64 - 1);
    let with_first = &first_pinned * binom(&per_column, a as u64 - 1);
    let level_pinned: BigUint = (1..=c as u64)
        .map(|i| binom_u64(lh as u64 - i, w as i64 - i as i64))
        .sum();
    let with_levels = &first_pinned * binom(&level_pinned, a as u64 - 1);
    let (inner, clamped) = clamped_descending_sum(&level_pinned, &first_pinned);
    let final_count = binom(&inner, a as u64 - 1);
    Ok(SpaceBreakdown {
        stages: vec![
            ("all-column-sets", all),
            ("first-one-pinned", with_first),
            ("levels-pinned", with_levels),
        ],
        final_count,
        clamped,
    })
}

/// Search-space sizes for monomial exponent matrices with entries in
/// `[0, mh]`, after each symmetry reduction.
pub fn search_space_size_symbolic(a: usize, c: usize, mh: u32) -> Result<SpaceBreakdown> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidQuery { detail: alloc::string::String::from("a, c >= 1") });
    }
    let base = BigUint::from(mh as u64 + 1);
    let all = base.pow((a * c) as u32);
    let per_column = base.pow(c as u32);
    let distinct = binom(&per_column, a as u64);
    let with_zero_cols = &per_column - BigUint::from(mh as u64).pow(c as u32);
    let zero_columns = binom(&with_zero_cols, a as u64);
    let pinned = base.pow(c as u32 - 1) * binom(&with_zero_cols, a as u64 - 1);
    let (inner, clamped) = clamped_descending_sum(&with_zero_cols, &base.pow(c as u32 - 1));
    let final_count = binom(&inner, a as u64 - 1);
    Ok(SpaceBreakdown {
        stages: vec![
            ("all-matrices", all),
            ("distinct-columns", distinct),
            ("zero-per-column", zero_columns),
            ("zero-pinned", pinned),
        ],
        final_count,
        clamped,
    })
}

//! Cycle analysis of the time-invariant Tanner graph.
//!
//! Every pair of ones in a column of `H_s^T` yields a position difference
//! with a starting and an ending level (the row indices mod `c`). A cycle of
//! length `2L` corresponds to a signed sum of `L` differences equal to zero,
//! chained so that each step starts on the level where the previous one
//! ended, closing on its starting level.
//!
//! [`girth`] searches for the shortest such closed chain with a
//! meet-in-the-middle enumeration over half chains, grouped by start level,
//! end level and accumulated offset. [`brute_force_girth_oracle`] computes
//! the same quantity independently by breadth-first search on a terminated
//! expansion and is used to cross-check `girth` in the test suites.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{expand_parity_check, BinaryParityCheck, ExponentMatrix, SymbolicMatrix, SyndromeFormer};
use crate::{Error, Result};

/// One position difference of `H_s^T` (Definition of the difference
/// calculus): column `col`, first one at `start_row`, second one at
/// `start_row + delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DifferenceRecord {
    pub col: usize,
    pub start_row: u32,
    pub delta: u32,
    pub start_level: u32,
    pub end_level: u32,
}

/// All position differences of `H_s^T`; a column of weight `w` contributes
/// `w (w - 1) / 2` records.
pub fn differences(hs: &SyndromeFormer, c: usize) -> Vec<DifferenceRecord> {
    let mut records = Vec::new();
    for j in 0..hs.width() {
        let ones = hs.column(j);
        for (idx, &p) in ones.iter().enumerate() {
            for &q in &ones[idx + 1..] {
                records.push(DifferenceRecord {
                    col: j,
                    start_row: p,
                    delta: q - p,
                    start_level: p % c as u32,
                    end_level: q % c as u32,
                });
            }
        }
    }
    records
}

/// Result of a capped girth computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum GirthResult {
    /// Exact girth of the unterminated Tanner graph.
    Girth(u32),
    /// No cycle of length up to the cap exists.
    GreaterThan(u32),
}

impl GirthResult {
    pub fn value(&self) -> Option<u32> {
        match self {
            GirthResult::Girth(g) => Some(*g),
            GirthResult::GreaterThan(_) => None,
        }
    }

    /// True when the girth is known to be at least `g`.
    pub fn at_least(&self, g: u32) -> bool {
        match self {
            GirthResult::Girth(v) => *v >= g,
            GirthResult::GreaterThan(cap) => *cap >= g.saturating_sub(2),
        }
    }
}

/// One traversal of a column inside a cycle, in `H_s^T` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessStep {
    pub col: usize,
    pub enter_row: u32,
    pub exit_row: u32,
}

/// A closed difference chain witnessing a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub steps: Vec<WitnessStep>,
}

impl CycleWitness {
    pub fn cycle_length(&self) -> u32 {
        2 * self.steps.len() as u32
    }
}

/// Checks that a witness is a level-compatible closed chain: consecutive
/// steps meet on the same check level without reusing a column position, the
/// signed deltas telescope to zero, and every referenced one exists.
pub fn verify_witness(h: &SymbolicMatrix, witness: &CycleWitness) -> bool {
    let c = h.c() as u32;
    if witness.steps.len() < 2 {
        return false;
    }
    let mut offset: i64 = 0;
    for (k, step) in witness.steps.iter().enumerate() {
        if step.col >= h.a() || step.enter_row == step.exit_row {
            return false;
        }
        let ones = h.column_positions(step.col);
        if !ones.contains(&step.enter_row) || !ones.contains(&step.exit_row) {
            return false;
        }
        let next = &witness.steps[(k + 1) % witness.steps.len()];
        if step.exit_row % c != next.enter_row % c {
            return false;
        }
        // Meeting on the same check row through the same column position
        // would mean reusing the edge.
        if step.col == next.col && step.exit_row == next.enter_row {
            return false;
        }
        offset += step.exit_row as i64 - step.enter_row as i64;
    }
    offset == 0
}

const VALID_CAPS: [u32; 5] = [4, 6, 8, 10, 12];

/// Exact girth of the unterminated Tanner graph, up to `cap`.
pub fn girth(h: &SymbolicMatrix, cap: u32) -> Result<GirthResult> {
    Ok(girth_with_witness(h, cap)?.0)
}

/// Like [`girth`], also returning one witness chain when a cycle is found.
pub fn girth_with_witness(h: &SymbolicMatrix, cap: u32) -> Result<(GirthResult, Option<CycleWitness>)> {
    if !VALID_CAPS.contains(&cap) {
        return Err(Error::InvalidGirthCap { cap });
    }
    let columns: Vec<Vec<u32>> = (0..h.a()).map(|j| h.column_positions(j)).collect();
    Ok(girth_from_columns(&columns, h.c(), cap))
}

/// Girth of a syndrome former given directly by its columns. Used by the
/// search kernels on partial assignments as well.
pub(crate) fn girth_from_columns(columns: &[Vec<u32>], c: usize, cap: u32) -> (GirthResult, Option<CycleWitness>) {
    let pool = DiffPool::from_columns(columns, c);
    for l in 2..=(cap / 2) {
        if let Some(witness) = pool.closed_chain(l as usize) {
            return (GirthResult::Girth(2 * l), Some(witness));
        }
    }
    (GirthResult::GreaterThan(cap), None)
}

/// A directed traversal of one difference: enter the column at `enter`,
/// leave at `exit` (both `H_s^T` row indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Step {
    pub col: u32,
    pub enter: u32,
    pub exit: u32,
}

impl Step {
    fn offset(&self) -> i64 {
        self.exit as i64 - self.enter as i64
    }

    fn enter_touch(&self) -> u64 {
        ((self.col as u64) << 32) | self.enter as u64
    }

    fn exit_touch(&self) -> u64 {
        ((self.col as u64) << 32) | self.exit as u64
    }
}

/// Difference pool indexed by entry level.
pub(crate) struct DiffPool {
    c: usize,
    by_level: Vec<Vec<Step>>,
    max_step: i64,
}

#[derive(Default)]
struct Bucket {
    total: u64,
    by_enter: BTreeMap<u64, u64>,
    by_exit: BTreeMap<u64, u64>,
    /// (enter touch, exit touch) -> (count, representative steps)
    by_pair: BTreeMap<(u64, u64), (u64, Vec<Step>)>,
}

impl DiffPool {
    pub(crate) fn new(c: usize) -> Self {
        DiffPool { c, by_level: vec![Vec::new(); c], max_step: 0 }
    }

    pub(crate) fn from_columns(columns: &[Vec<u32>], c: usize) -> Self {
        let mut pool = DiffPool::new(c);
        for (j, ones) in columns.iter().enumerate() {
            pool.add_column(j, ones);
        }
        pool
    }

    /// Registers both traversal directions of every difference in a column.
    pub(crate) fn add_column(&mut self, col: usize, ones: &[u32]) {
        for (idx, &p) in ones.iter().enumerate() {
            for &q in &ones[idx + 1..] {
                self.push_step(Step { col: col as u32, enter: p, exit: q });
                self.push_step(Step { col: col as u32, enter: q, exit: p });
            }
        }
    }

    /// Removes the most recently added `count` columns worth of steps; used
    /// by backtracking searches. Steps of a column are contiguous per level,
    /// so truncation to recorded lengths suffices.
    pub(crate) fn level_lengths(&self) -> Vec<usize> {
        self.by_level.iter().map(|v| v.len()).collect()
    }

    pub(crate) fn truncate_levels(&mut self, lengths: &[usize]) {
        for (level, &len) in lengths.iter().enumerate() {
            self.by_level[level].truncate(len);
        }
        self.max_step = self
            .by_level
            .iter()
            .flat_map(|steps| steps.iter().map(|s| s.offset().abs()))
            .max()
            .unwrap_or(0);
    }

    fn push_step(&mut self, step: Step) {
        self.max_step = self.max_step.max(step.offset().abs());
        self.by_level[step.enter as usize % self.c].push(step);
    }

    /// Whether a closed non-backtracking chain of exactly `len` steps exists;
    /// returns one witness when it does.
    pub(crate) fn closed_chain(&self, len: usize) -> Option<CycleWitness> {
        self.closed_chain_filtered(len, None)
    }

    /// Same as [`closed_chain`] but, when `touch_col` is given, only cycles
    /// traversing that column are considered. Any closed chain can be rotated
    /// so that the touching step comes first, so the filter pins step one.
    pub(crate) fn closed_chain_filtered(&self, len: usize, touch_col: Option<u32>) -> Option<CycleWitness> {
        debug_assert!(len >= 2);
        let len_a = len.div_ceil(2);
        let len_b = len - len_a;
        let mut buckets: BTreeMap<(u32, u32, i64), Bucket> = BTreeMap::new();
        self.enumerate_chains(len_b, len, &mut |steps, offset| {
            let first = &steps[0];
            let last = &steps[len_b - 1];
            let key = (first.enter % self.c as u32, last.exit % self.c as u32, offset);
            let bucket = buckets.entry(key).or_default();
            bucket.total += 1;
            *bucket.by_enter.entry(first.enter_touch()).or_insert(0) += 1;
            *bucket.by_exit.entry(last.exit_touch()).or_insert(0) += 1;
            let pair = bucket
                .by_pair
                .entry((first.enter_touch(), last.exit_touch()))
                .or_insert_with(|| (0, steps.to_vec()));
            pair.0 += 1;
            false
        });
        if buckets.is_empty() {
            return None;
        }
        let mut witness = None;
        self.enumerate_chains_filtered(len_a, len, touch_col, &mut |steps, offset| {
            let first = &steps[0];
            let last = &steps[len_a - 1];
            let key = (last.exit % self.c as u32, first.enter % self.c as u32, -offset);
            let Some(bucket) = buckets.get(&key) else { return false };
            let exit_touch = last.exit_touch();
            let enter_touch = first.enter_touch();
            let blocked_enter = bucket.by_enter.get(&exit_touch).copied().unwrap_or(0);
            let blocked_exit = bucket.by_exit.get(&enter_touch).copied().unwrap_or(0);
            let blocked_both = bucket
                .by_pair
                .get(&(exit_touch, enter_touch))
                .map(|(n, _)| *n)
                .unwrap_or(0);
            if bucket.total + blocked_both == blocked_enter + blocked_exit {
                return false;
            }
            // Materialize one valid partner for the witness.
            let partner = bucket
                .by_pair
                .iter()
                .find(|((enter, exit), _)| *enter != exit_touch && *exit != enter_touch)
                .map(|(_, (_, repr))| repr.clone());
            if let Some(partner) = partner {
                let mut all = steps.to_vec();
                all.extend(partner);
                witness = Some(CycleWitness {
                    steps: all
                        .into_iter()
                        .map(|s| WitnessStep { col: s.col as usize, enter_row: s.enter, exit_row: s.exit })
                        .collect(),
                });
            }
            true
        });
        witness
    }

    /// Allocation-free existence test for a closed non-backtracking chain of
    /// exactly `len` steps traversing `col`. Hot path of the incremental
    /// search feasibility check; rotating a closed chain lets the traversal
    /// of `col` come first.
    pub(crate) fn has_closed_chain_through(&self, len: usize, col: u32) -> bool {
        debug_assert!(len >= 2);
        for level in 0..self.c {
            for idx in 0..self.by_level[level].len() {
                let first = self.by_level[level][idx];
                if first.col != col {
                    continue;
                }
                if self.anchored_dfs(first, first, 1, first.offset(), len) {
                    return true;
                }
            }
        }
        false
    }

    fn anchored_dfs(&self, first: Step, prev: Step, depth: usize, offset: i64, len: usize) -> bool {
        if depth == len {
            return offset == 0 && !(prev.col == first.col && prev.exit == first.enter);
        }
        if offset.abs() > ((len - depth) as i64) * self.max_step {
            return false;
        }
        let level = prev.exit as usize % self.c;
        for idx in 0..self.by_level[level].len() {
            let step = self.by_level[level][idx];
            if step.col == prev.col && step.enter == prev.exit {
                continue;
            }
            if self.anchored_dfs(first, step, depth + 1, offset + step.offset(), len) {
                return true;
            }
        }
        false
    }

    fn enumerate_chains(&self, len: usize, full_len: usize, f: &mut dyn FnMut(&[Step], i64) -> bool) {
        self.enumerate_chains_filtered(len, full_len, None, f)
    }

    /// Depth-first enumeration of all non-backtracking chains of `len` steps.
    /// `full_len` bounds the offset pruning (a half chain must stay
    /// cancellable by the other half). With `first_col` set, only chains whose
    /// first step traverses that column are produced. The callback returns
    /// `true` to stop the enumeration.
    fn enumerate_chains_filtered(
        &self,
        len: usize,
        full_len: usize,
        first_col: Option<u32>,
        f: &mut dyn FnMut(&[Step], i64) -> bool,
    ) {
        let mut stack: Vec<Step> = Vec::with_capacity(len);
        for level in 0..self.c {
            for idx in 0..self.by_level[level].len() {
                let step = self.by_level[level][idx];
                if first_col.is_some_and(|col| step.col != col) {
                    continue;
                }
                stack.push(step);
                if self.extend_chain(&mut stack, step.offset(), len, full_len, f) {
                    return;
                }
                stack.pop();
            }
        }
    }

    fn extend_chain(
        &self,
        stack: &mut Vec<Step>,
        offset: i64,
        len: usize,
        full_len: usize,
        f: &mut dyn FnMut(&[Step], i64) -> bool,
    ) -> bool {
        let depth = stack.len();
        let remaining = (full_len - depth) as i64;
        if offset.abs() > remaining * self.max_step {
            return false;
        }
        if depth == len {
            return f(stack, offset);
        }
        let prev = stack[depth - 1];
        let level = prev.exit as usize % self.c;
        for idx in 0..self.by_level[level].len() {
            let step = self.by_level[level][idx];
            if step.col == prev.col && step.enter == prev.exit {
                continue;
            }
            stack.push(step);
            if self.extend_chain(stack, offset + step.offset(), len, full_len, f) {
                return true;
            }
            stack.pop();
        }
        false
    }
}

/// Counts of distinct cycles per length, one count per translation class of
/// the time-invariant structure.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleSpectrum {
    counts: BTreeMap<u32, u64>,
}

impl CycleSpectrum {
    pub fn count(&self, length: u32) -> u64 {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    /// Smallest length with a nonzero count.
    pub fn girth(&self) -> Option<u32> {
        self.counts.iter().find(|(_, &n)| n > 0).map(|(&l, _)| l)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&l, &n)| (l, n))
    }
}

/// Enumerates every cycle of length up to `max_len`, counted once per
/// translation class. Classes are represented by the cycle translate whose
/// smallest variable node sits in block column zero of a sufficiently long
/// terminated expansion.
pub fn cycle_spectrum(h: &SymbolicMatrix, max_len: u32) -> Result<CycleSpectrum> {
    if max_len < 4 || max_len > 12 || max_len % 2 != 0 {
        return Err(Error::InvalidSpectrumLength { len: max_len });
    }
    let mut counts: BTreeMap<u32, u64> = (2..=max_len / 2).map(|l| (2 * l, 0)).collect();
    if h.max_exponent().is_none() {
        return Ok(CycleSpectrum { counts });
    }
    let m_h = h.max_exponent().unwrap() as usize;
    let steps = (max_len / 2) as usize;
    let blocks = (1 + steps / 2) * (m_h + 1) + 1;
    let bp = expand_parity_check(h, blocks)?;
    let mut ctx = SpectrumContext {
        bp: &bp,
        max_vars: steps,
        visited_vars: vec![false; bp.num_variables()],
        visited_checks: vec![false; bp.num_checks()],
        counts: &mut counts,
    };
    for anchor in 0..h.a() {
        ctx.visited_vars[anchor] = true;
        ctx.enumerate(anchor, anchor, 1, u32::MAX);
        ctx.visited_vars[anchor] = false;
    }
    Ok(CycleSpectrum { counts })
}

struct SpectrumContext<'a> {
    bp: &'a BinaryParityCheck,
    max_vars: usize,
    visited_vars: Vec<bool>,
    visited_checks: Vec<bool>,
    counts: &'a mut BTreeMap<u32, u64>,
}

impl SpectrumContext<'_> {
    /// Extends simple paths anchor -> ... -> `at`, counting closures back to
    /// the anchor through a fresh check. `first_check` orders the two cycle
    /// directions; intermediate variables must exceed the anchor so each
    /// cycle is counted from its minimal variable only.
    fn enumerate(&mut self, anchor: usize, at: usize, depth_vars: usize, first_check: u32) {
        let checks: &[u32] = self.bp.variable_checks(at);
        for &r in checks {
            if self.visited_checks[r as usize] {
                continue;
            }
            // Closure through r, counted once via first_check < r.
            if depth_vars >= 2 && r > first_check && self.bp.check_variables(r as usize).contains(&(anchor as u32)) {
                *self.counts.get_mut(&(2 * depth_vars as u32)).unwrap() += 1;
            }
            if depth_vars < self.max_vars {
                self.visited_checks[r as usize] = true;
                let next_first = if first_check == u32::MAX { r } else { first_check };
                for &v in self.bp.check_variables(r as usize) {
                    let v = v as usize;
                    if v <= anchor || self.visited_vars[v] {
                        continue;
                    }
                    self.visited_vars[v] = true;
                    self.enumerate(anchor, v, depth_vars + 1, next_first);
                    self.visited_vars[v] = false;
                }
                self.visited_checks[r as usize] = false;
            }
        }
    }
}

/// Independent girth oracle: expands the code to a terminated matrix and runs
/// breadth-first search from every variable node, truncated at `cap`.
///
/// `blocks` must be at least `3 (m_h + 1)` so that every cycle of the
/// time-invariant structure with length up to 12 fits in the window.
pub fn brute_force_girth_oracle(h: &SymbolicMatrix, blocks: usize, cap: u32) -> Result<GirthResult> {
    if !VALID_CAPS.contains(&cap) {
        return Err(Error::InvalidGirthCap { cap });
    }
    let m_h = h.max_exponent().ok_or(Error::EmptyMatrix)? as usize;
    let needed = 3 * (m_h + 1);
    if blocks < needed {
        return Err(Error::WindowTooSmall { blocks, needed });
    }
    let bp = expand_parity_check(h, blocks)?;
    Ok(expanded_girth(&bp, cap))
}

/// Girth of a terminated parity-check matrix by truncated BFS.
pub fn expanded_girth(bp: &BinaryParityCheck, cap: u32) -> GirthResult {
    let num_vars = bp.num_variables();
    let num_nodes = num_vars + bp.num_checks();
    let mut dist = vec![0u32; num_nodes];
    let mut parent = vec![u32::MAX; num_nodes];
    let mut stamp = vec![u32::MAX; num_nodes];
    let mut queue: Vec<u32> = Vec::new();
    let mut best = u32::MAX;
    let depth_limit = cap / 2;

    for src in 0..num_vars {
        queue.clear();
        queue.push(src as u32);
        stamp[src] = src as u32;
        dist[src] = 0;
        parent[src] = u32::MAX;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head] as usize;
            head += 1;
            let du = dist[u];
            let neighbors: &[u32] = if u < num_vars {
                bp.variable_checks(u)
            } else {
                bp.check_variables(u - num_vars)
            };
            for &n in neighbors {
                let w = if u < num_vars { n as usize + num_vars } else { n as usize };
                if w as u32 == parent[u] {
                    continue;
                }
                if stamp[w] == src as u32 {
                    let candidate = du + dist[w] + 1;
                    if candidate < best {
                        best = candidate;
                    }
                } else {
                    stamp[w] = src as u32;
                    dist[w] = du + 1;
                    parent[w] = u as u32;
                    if du + 1 <= depth_limit {
                        queue.push(w as u32);
                    }
                }
            }
            if best == 4 {
                return GirthResult::Girth(4);
            }
        }
    }
    if best <= cap {
        GirthResult::Girth(best)
    } else {
        GirthResult::GreaterThan(cap)
    }
}

/// The 3 x a difference matrix of a full monomial code with `c = 3`:
/// rows are `p_1 - p_0`, `p_2 - p_1`, `p_2 - p_0` per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaMatrix {
    pub a: usize,
    rows: [Vec<i32>; 3],
}

impl DeltaMatrix {
    pub fn row(&self, i: usize) -> &[i32] {
        &self.rows[i]
    }
}

/// Computes the difference matrix of a weight-3, `c = 3` exponent matrix.
pub fn type1_delta_matrix(p: &ExponentMatrix) -> Result<DeltaMatrix> {
    if p.c() != 3 {
        return Err(Error::WrongShape { detail: format!("need c = 3, got c = {}", p.c()) });
    }
    if !p.is_full() {
        return Err(Error::WrongShape { detail: String::from("null entries not allowed") });
    }
    let a = p.a();
    let mut rows = [Vec::with_capacity(a), Vec::with_capacity(a), Vec::with_capacity(a)];
    for j in 0..a {
        rows[0].push(p.get(1, j) - p.get(0, j));
        rows[1].push(p.get(2, j) - p.get(1, j));
        rows[2].push(p.get(2, j) - p.get(0, j));
    }
    Ok(DeltaMatrix { a, rows })
}

/// Exponent-domain girth test for monomial codes.
///
/// * `g = 6` checks the row-column constraint on any shape: within every row
///   pair, the exponent differences across columns must be distinct.
/// * `g = 8` (only `w = c = 3`) additionally requires
///   `dp_{0,j1} + dp_{1,j2} != dp_{2,j3}` for all distinct column triples.
/// * `g = 10` (only `w = c = 3`) requires all differences of differences to
///   be nonzero and distinct in absolute value.
pub fn type1_girth_test(p: &ExponentMatrix, g_target: u32) -> Result<bool> {
    match g_target {
        6 => Ok(rcc_holds(p)),
        8 => {
            let delta = type1_delta_matrix(p)?;
            Ok(rcc_holds(p) && no_six_cycles(&delta))
        }
        10 => {
            if p.c() != 3 || !p.is_full() {
                return Err(Error::WrongShape {
                    detail: String::from("g = 10 test needs a full c = 3 matrix"),
                });
            }
            Ok(diff_of_diff_free(p))
        }
        other => Err(Error::InvalidQuery { detail: format!("unsupported girth target {other}") }),
    }
}

/// No repeated exponent difference within any row pair (no 4-cycles).
fn rcc_holds(p: &ExponentMatrix) -> bool {
    let c = p.c();
    let a = p.a();
    for i1 in 0..c {
        for i2 in i1 + 1..c {
            let mut seen: Vec<i32> = Vec::with_capacity(a);
            for j in 0..a {
                let (e1, e2) = (p.get(i1, j), p.get(i2, j));
                if e1 < 0 || e2 < 0 {
                    continue;
                }
                seen.push(e1 - e2);
            }
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
    }
    true
}

fn no_six_cycles(delta: &DeltaMatrix) -> bool {
    let a = delta.a;
    for j1 in 0..a {
        for j2 in 0..a {
            if j2 == j1 {
                continue;
            }
            let sum = delta.row(0)[j1] + delta.row(1)[j2];
            for j3 in 0..a {
                if j3 == j1 || j3 == j2 {
                    continue;
                }
                if sum == delta.row(2)[j3] {
                    return false;
                }
            }
        }
    }
    true
}

/// All `3 C(a, 2)` differences of differences nonzero and with distinct
/// absolute values; equivalent to girth >= 10 for full monomial `c = 3`.
fn diff_of_diff_free(p: &ExponentMatrix) -> bool {
    let a = p.a();
    let row_pairs = [(0usize, 1usize), (1, 2), (0, 2)];
    let mut values: Vec<i64> = Vec::with_capacity(3 * a * (a - 1) / 2);
    for &(i1, i2) in &row_pairs {
        let deltas: Vec<i64> =
            (0..a).map(|j| p.get(i1, j) as i64 - p.get(i2, j) as i64).collect();
        for j1 in 0..a {
            for j2 in j1 + 1..a {
                let v = (deltas[j1] - deltas[j2]).abs();
                if v == 0 {
                    return false;
                }
                values.push(v);
            }
        }
    }
    values.sort_unstable();
    values.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::syndrome_former_from_symbolic;

    fn eq10() -> SymbolicMatrix {
        SymbolicMatrix::from_rows(vec![
            vec![vec![0], vec![0], vec![0], vec![0]],
            vec![vec![0], vec![1], vec![2], vec![4]],
            vec![vec![0], vec![3], vec![1], vec![2]],
        ])
        .unwrap()
    }

    fn eq11() -> SymbolicMatrix {
        SymbolicMatrix::from_rows(vec![
            vec![vec![0], vec![2], vec![0], vec![0]],
            vec![vec![0], vec![0], vec![1], vec![2]],
            vec![vec![2], vec![1], vec![1], vec![0]],
        ])
        .unwrap()
    }

    fn eq12() -> SymbolicMatrix {
        SymbolicMatrix::from_rows(vec![
            vec![vec![0], vec![0], vec![0], vec![0]],
            vec![vec![0], vec![6], vec![2], vec![5]],
            vec![vec![0], vec![3], vec![4], vec![1]],
        ])
        .unwrap()
    }

    fn eq13() -> SymbolicMatrix {
        SymbolicMatrix::from_rows(vec![
            vec![vec![0], vec![3], vec![0], vec![3]],
            vec![vec![3], vec![2], vec![2], vec![0]],
            vec![vec![2], vec![0], vec![3], vec![2]],
        ])
        .unwrap()
    }

    #[test]
    fn single_column_difference() {
        let hs = SyndromeFormer::new(3, vec![vec![0, 2]]).unwrap();
        let records = differences(&hs, 3);
        assert_eq!(
            records,
            vec![DifferenceRecord { col: 0, start_row: 0, delta: 2, start_level: 0, end_level: 2 }]
        );
    }

    #[test]
    fn weight_three_column_has_three_differences() {
        let hs = SyndromeFormer::new(8, vec![vec![1, 4, 7]]).unwrap();
        assert_eq!(differences(&hs, 3).len(), 3);
    }

    #[test]
    fn difference_count_matches_binomials() {
        let h = eq10();
        let hs = syndrome_former_from_symbolic(&h).unwrap();
        assert_eq!(differences(&hs, 3).len(), 4 * 3);
    }

    #[test]
    fn fig1_style_chain_closes() {
        // a = 5, c = 3 with a length-6 cycle delta_{2,3} + delta_{3,2} -
        // delta_{1,0} = 0 (2 + 2 - 4 = 0, levels 0->2, 2->1, 0->1).
        let hs = SyndromeFormer::new(
            6,
            vec![vec![0], vec![0, 4], vec![3, 5], vec![2, 4], vec![1]],
        )
        .unwrap();
        let records = differences(&hs, 3);
        assert!(records.contains(&DifferenceRecord {
            col: 2,
            start_row: 3,
            delta: 2,
            start_level: 0,
            end_level: 2
        }));
        assert!(records.contains(&DifferenceRecord {
            col: 3,
            start_row: 2,
            delta: 2,
            start_level: 2,
            end_level: 1
        }));
        assert!(records.contains(&DifferenceRecord {
            col: 1,
            start_row: 0,
            delta: 4,
            start_level: 0,
            end_level: 1
        }));
        let h = symbolic_from_syndrome_former_cols(&hs);
        assert_eq!(girth(&h, 12).unwrap(), GirthResult::Girth(6));
    }

    fn symbolic_from_syndrome_former_cols(hs: &SyndromeFormer) -> SymbolicMatrix {
        crate::matrix::symbolic_from_syndrome_former(hs, 3).unwrap()
    }

    #[test]
    fn duplicate_monomial_columns_have_girth_four() {
        let h = SymbolicMatrix::from_rows(vec![vec![vec![0], vec![0]], vec![vec![1], vec![1]]])
            .unwrap();
        assert_eq!(girth(&h, 12).unwrap(), GirthResult::Girth(4));
    }

    #[test]
    fn printed_examples_girths() {
        assert_eq!(girth(&eq10(), 12).unwrap(), GirthResult::Girth(6));
        assert_eq!(girth(&eq11(), 12).unwrap(), GirthResult::Girth(6));
        assert_eq!(girth(&eq12(), 12).unwrap(), GirthResult::Girth(8));
        assert_eq!(girth(&eq13(), 12).unwrap(), GirthResult::Girth(8));
    }

    #[test]
    fn invalid_cap_rejected() {
        assert_eq!(girth(&eq11(), 5), Err(Error::InvalidGirthCap { cap: 5 }));
    }

    #[test]
    fn witness_chains_verify() {
        for h in [eq10(), eq11(), eq12(), eq13()] {
            let (result, witness) = girth_with_witness(&h, 12).unwrap();
            let witness = witness.expect("cycle expected");
            assert_eq!(GirthResult::Girth(witness.cycle_length()), result);
            assert!(verify_witness(&h, &witness));
        }
    }

    #[test]
    fn tree_graph_exceeds_cap() {
        let h = SymbolicMatrix::from_entries(1, 1, vec![vec![0]]).unwrap();
        assert_eq!(girth(&h, 12).unwrap(), GirthResult::GreaterThan(12));
        assert_eq!(brute_force_girth_oracle(&h, 10, 12).unwrap(), GirthResult::GreaterThan(12));
    }

    #[test]
    fn oracle_matches_on_printed_examples() {
        for (h, expected) in [(eq10(), 6), (eq11(), 6), (eq12(), 8), (eq13(), 8)] {
            let blocks = 4 * (h.max_exponent().unwrap() as usize + 1) + 2;
            assert_eq!(
                brute_force_girth_oracle(&h, blocks, 12).unwrap(),
                GirthResult::Girth(expected)
            );
        }
    }

    #[test]
    fn oracle_window_guard() {
        let h = eq11();
        assert_eq!(
            brute_force_girth_oracle(&h, 5, 12),
            Err(Error::WindowTooSmall { blocks: 5, needed: 9 })
        );
    }

    #[test]
    fn spectrum_consistent_with_girth() {
        let s = cycle_spectrum(&eq13(), 12).unwrap();
        assert_eq!(s.count(4), 0);
        assert_eq!(s.count(6), 0);
        assert!(s.count(8) > 0);
        assert_eq!(s.girth(), Some(8));
    }

    #[test]
    fn spectrum_rejects_bad_lengths() {
        assert!(cycle_spectrum(&eq11(), 3).is_err());
        assert!(cycle_spectrum(&eq11(), 14).is_err());
    }

    #[test]
    fn delta_matrix_of_simple_columns() {
        let p = ExponentMatrix::from_rows(vec![vec![0, 0], vec![1, 0], vec![3, 0]]).unwrap();
        let d = type1_delta_matrix(&p).unwrap();
        assert_eq!(d.row(0), &[1, 0]);
        assert_eq!(d.row(1), &[2, 0]);
        assert_eq!(d.row(2), &[3, 0]);
        for j in 0..2 {
            assert_eq!(d.row(0)[j] + d.row(1)[j], d.row(2)[j]);
        }
    }

    #[test]
    fn delta_matrix_shape_errors() {
        let p = ExponentMatrix::from_rows(vec![vec![0], vec![1]]).unwrap();
        assert!(type1_delta_matrix(&p).is_err());
        let p = ExponentMatrix::from_rows(vec![vec![0], vec![-1], vec![1]]).unwrap();
        assert!(type1_delta_matrix(&p).is_err());
    }

    #[test]
    fn exponent_tests_match_printed_examples() {
        let eq11 = ExponentMatrix::from_symbolic(&eq11()).unwrap();
        assert!(type1_girth_test(&eq11, 6).unwrap());
        assert!(!type1_girth_test(&eq11, 8).unwrap());
        let eq13 = ExponentMatrix::from_symbolic(&eq13()).unwrap();
        assert!(type1_girth_test(&eq13, 8).unwrap());
        assert!(!type1_girth_test(&eq13, 10).unwrap());
    }
}

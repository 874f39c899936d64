//! Equivalence transformations of exponent matrices and Min-Max exponent
//! reduction.
//!
//! Row and column permutations, per-row and per-column offsets and
//! multiplication by a unit modulo `p` all map a code to an equivalent one
//! with the same cycle structure modulo `p`. [`minmax_reduce`] searches this
//! group for the transform minimizing the largest exponent, hence the
//! syndrome former memory order of the transformed code.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::ExponentMatrix;
use crate::{Error, Result};

/// An element of the equivalence group modulo `modulus`:
/// `(i, j) -> (d * p[row_perm[i], col_perm[j]] + row_offsets[i] + col_offsets[j]) mod modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Transform {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub row_offsets: Vec<u64>,
    pub col_offsets: Vec<u64>,
    pub multiplier: u64,
    pub modulus: u64,
}

impl Transform {
    pub fn identity(c: usize, a: usize, modulus: u64) -> Self {
        Transform {
            row_perm: (0..c).collect(),
            col_perm: (0..a).collect(),
            row_offsets: vec![0; c],
            col_offsets: vec![0; a],
            multiplier: 1,
            modulus,
        }
    }

    fn validate(&self, c: usize, a: usize) -> Result<()> {
        if self.modulus == 0 {
            return Err(Error::InvalidQuery { detail: String::from("modulus must be positive") });
        }
        if gcd(self.multiplier % self.modulus, self.modulus) != 1 {
            return Err(Error::NotCoprime { multiplier: self.multiplier, modulus: self.modulus });
        }
        check_perm(&self.row_perm, c)?;
        check_perm(&self.col_perm, a)?;
        if self.row_offsets.len() != c || self.col_offsets.len() != a {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "offsets ({}, {}) do not match shape ({c}, {a})",
                    self.row_offsets.len(),
                    self.col_offsets.len()
                ),
            });
        }
        Ok(())
    }

    /// The transform equivalent to applying `first`, then `self`.
    pub fn compose(&self, first: &Transform) -> Result<Transform> {
        if self.modulus != first.modulus {
            return Err(Error::InvalidQuery {
                detail: format!("modulus mismatch: {} vs {}", self.modulus, first.modulus),
            });
        }
        let p = self.modulus;
        let c = self.row_perm.len();
        let a = self.col_perm.len();
        let row_perm: Vec<usize> = (0..c).map(|i| first.row_perm[self.row_perm[i]]).collect();
        let col_perm: Vec<usize> = (0..a).map(|j| first.col_perm[self.col_perm[j]]).collect();
        let row_offsets: Vec<u64> = (0..c)
            .map(|i| {
                (self.multiplier * (first.row_offsets[self.row_perm[i]] % p) + self.row_offsets[i])
                    % p
            })
            .collect();
        let col_offsets: Vec<u64> = (0..a)
            .map(|j| {
                (self.multiplier * (first.col_offsets[self.col_perm[j]] % p) + self.col_offsets[j])
                    % p
            })
            .collect();
        Ok(Transform {
            row_perm,
            col_perm,
            row_offsets,
            col_offsets,
            multiplier: (self.multiplier * first.multiplier) % p,
            modulus: p,
        })
    }
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::BadPermutation {
            detail: format!("length {} does not match {n}", perm.len()),
        });
    }
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || seen[i] {
            return Err(Error::BadPermutation { detail: format!("not a bijection of 0..{n}") });
        }
        seen[i] = true;
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Applies an equivalence transform. Null entries pass through unchanged and
/// are only legal with multiplier 1; the modulus must exceed every exponent.
pub fn apply_transform(p: &ExponentMatrix, t: &Transform) -> Result<ExponentMatrix> {
    t.validate(p.c(), p.a())?;
    if let Some(max) = p.max_entry() {
        if t.modulus <= max as u64 {
            return Err(Error::ModulusTooSmall { modulus: t.modulus, max_entry: max as u32 });
        }
    }
    if t.multiplier % t.modulus != 1 && !p.is_full() {
        return Err(Error::NullEntryWithMultiplier);
    }
    let m = t.modulus;
    let mut rows = Vec::with_capacity(p.c());
    for i in 0..p.c() {
        let mut row = Vec::with_capacity(p.a());
        for j in 0..p.a() {
            let source = p.get(t.row_perm[i], t.col_perm[j]);
            row.push(if source < 0 {
                -1
            } else {
                let v = (t.multiplier % m) * (source as u64 % m) + t.row_offsets[i] % m
                    + t.col_offsets[j] % m;
                (v % m) as i32
            });
        }
        rows.push(row);
    }
    ExponentMatrix::from_rows(rows)
}

/// True when every row and every column holds a zero exponent (null entries
/// do not count; rows or columns with no exponents pass vacuously).
pub fn is_normalized(p: &ExponentMatrix) -> bool {
    let row_ok = (0..p.c()).all(|i| {
        let mut any = false;
        let mut zero = false;
        for j in 0..p.a() {
            let e = p.get(i, j);
            any |= e >= 0;
            zero |= e == 0;
        }
        !any || zero
    });
    let col_ok = (0..p.a()).all(|j| {
        let mut any = false;
        let mut zero = false;
        for i in 0..p.c() {
            let e = p.get(i, j);
            any |= e >= 0;
            zero |= e == 0;
        }
        !any || zero
    });
    row_ok && col_ok
}

/// Normalizes by offset subtractions only: first the column minima, then the
/// row minima. Rows still lacking a zero after the column pass hold no zero
/// at all, so subtracting their minimum cannot disturb any column zero.
/// Idempotent.
pub fn normalize(p: &ExponentMatrix) -> ExponentMatrix {
    let mut entries: Vec<Vec<i32>> =
        (0..p.c()).map(|i| (0..p.a()).map(|j| p.get(i, j)).collect()).collect();
    for j in 0..p.a() {
        let min = (0..p.c()).map(|i| entries[i][j]).filter(|&e| e >= 0).min();
        if let Some(min) = min {
            for row in entries.iter_mut() {
                if row[j] >= 0 {
                    row[j] -= min;
                }
            }
        }
    }
    for row in entries.iter_mut() {
        let min = row.iter().copied().filter(|&e| e >= 0).min();
        if let Some(min) = min {
            for e in row.iter_mut() {
                if *e >= 0 {
                    *e -= min;
                }
            }
        }
    }
    ExponentMatrix::from_rows(entries).expect("normalization keeps the shape")
}

/// Effort control for [`minmax_reduce`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinMaxBudget {
    /// Full enumeration over units and row offsets with per-column optimal
    /// shifts; guaranteed optimal over the searched group.
    Exact,
    /// Coordinate descent on the row offsets with random restarts.
    Heuristic { restarts: u32, seed: u64 },
}

/// Outcome of a Min-Max reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMaxResult {
    pub matrix: ExponentMatrix,
    pub m_h: u32,
    pub transform: Transform,
}

/// Minimizes the largest exponent of `p` over all transforms
/// `d * p + r_i + c_j mod modulus` with `gcd(d, modulus) = 1`. Row and column
/// permutations cannot change the maximum and are not searched. The identity
/// is always a candidate, so the result is never worse than the input.
pub fn minmax_reduce(p: &ExponentMatrix, modulus: u64, budget: MinMaxBudget) -> Result<MinMaxResult> {
    let max_entry = p.max_entry().ok_or(Error::EmptyMatrix)?;
    if !p.is_full() {
        return Err(Error::NullEntryWithMultiplier);
    }
    if modulus <= max_entry as u64 {
        return Err(Error::ModulusTooSmall { modulus, max_entry: max_entry as u32 });
    }
    let units: Vec<u64> = (1..modulus).filter(|&d| gcd(d, modulus) == 1).collect();
    let c = p.c();
    let a = p.a();

    // Row offset 0 can be pinned: shifting all rows by t and all columns by
    // -t leaves the matrix unchanged.
    let mut best: Option<(u64, u64, Vec<u64>)> = None; // (max, d, row offsets)
    let consider = |d: u64, rows: &[u64], best: &mut Option<(u64, u64, Vec<u64>)>| {
        let bound = best.as_ref().map(|(m, _, _)| *m).unwrap_or(u64::MAX);
        if let Some(value) = evaluate_rows(p, d, rows, modulus, bound) {
            if value < bound {
                *best = Some((value, d, rows.to_vec()));
            }
        }
    };

    match budget {
        MinMaxBudget::Exact => {
            let mut rows = vec![0u64; c];
            for &d in &units {
                enumerate_row_offsets(&mut rows, 1, modulus, &mut |rows| consider(d, rows, &mut best));
            }
        }
        MinMaxBudget::Heuristic { restarts, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // Identity fallback first.
            consider(1, &vec![0u64; c], &mut best);
            for _ in 0..restarts.max(1) {
                let d = units[rng.gen_range(0..units.len())];
                let mut rows: Vec<u64> = (0..c)
                    .map(|i| if i == 0 { 0 } else { rng.gen_range(0..modulus) })
                    .collect();
                loop {
                    let mut improved = false;
                    for i in 1..c {
                        let current = evaluate_rows(p, d, &rows, modulus, u64::MAX).unwrap();
                        let mut best_r = rows[i];
                        let mut best_v = current;
                        for r in 0..modulus {
                            rows[i] = r;
                            let v = evaluate_rows(p, d, &rows, modulus, best_v).unwrap_or(u64::MAX);
                            if v < best_v {
                                best_v = v;
                                best_r = r;
                                improved = true;
                            }
                        }
                        rows[i] = best_r;
                    }
                    if !improved {
                        break;
                    }
                }
                consider(d, &rows, &mut best);
            }
        }
    }

    let (_, d, rows) = best.expect("identity transform always evaluates");
    // Recover the per-column optimal shifts for the witness transform.
    let mut col_offsets = Vec::with_capacity(a);
    for j in 0..a {
        let values: Vec<u64> =
            (0..c).map(|i| ((d * (p.get(i, j) as u64)) + rows[i]) % modulus).collect();
        let (_, shift) = best_column_shift(&values, modulus);
        col_offsets.push(shift);
    }
    let transform = Transform {
        row_perm: (0..c).collect(),
        col_perm: (0..a).collect(),
        row_offsets: rows,
        col_offsets,
        multiplier: d,
        modulus,
    };
    let matrix = apply_transform(p, &transform)?;
    let m_h = matrix.max_entry().unwrap_or(0) as u32;
    Ok(MinMaxResult { matrix, m_h, transform })
}

fn enumerate_row_offsets(
    rows: &mut Vec<u64>,
    from: usize,
    modulus: u64,
    f: &mut impl FnMut(&[u64]),
) {
    if from == rows.len() {
        f(rows);
        return;
    }
    for r in 0..modulus {
        rows[from] = r;
        enumerate_row_offsets(rows, from + 1, modulus, f);
    }
    rows[from] = 0;
}

/// Max entry over columns given fixed multiplier and row offsets, choosing
/// each column offset optimally. Returns `None` once the running max reaches
/// `prune_at`.
fn evaluate_rows(p: &ExponentMatrix, d: u64, rows: &[u64], modulus: u64, prune_at: u64) -> Option<u64> {
    let mut worst = 0u64;
    for j in 0..p.a() {
        let values: Vec<u64> =
            (0..p.c()).map(|i| ((d * (p.get(i, j) as u64)) + rows[i]) % modulus).collect();
        let (column_max, _) = best_column_shift(&values, modulus);
        worst = worst.max(column_max);
        if worst >= prune_at {
            return None;
        }
    }
    Some(worst)
}

/// Minimal achievable maximum of `(v + shift) mod modulus` over shifts,
/// found by placing the largest circular gap above the maximum.
fn best_column_shift(values: &[u64], modulus: u64) -> (u64, u64) {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() == 1 {
        // Any single value shifts to zero.
        return (0, (modulus - sorted[0]) % modulus);
    }
    let mut best_gap = sorted[0] + modulus - *sorted.last().unwrap();
    let mut after_gap = sorted[0];
    for w in sorted.windows(2) {
        let gap = w[1] - w[0];
        if gap > best_gap {
            best_gap = gap;
            after_gap = w[1];
        }
    }
    (modulus - best_gap, (modulus - after_gap) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{girth, GirthResult};

    fn eq11() -> ExponentMatrix {
        ExponentMatrix::from_rows(vec![vec![0, 2, 0, 0], vec![0, 0, 1, 2], vec![2, 1, 1, 0]])
            .unwrap()
    }

    #[test]
    fn identity_transform_is_noop() {
        let p = eq11();
        let t = Transform::identity(3, 4, 5);
        assert_eq!(apply_transform(&p, &t).unwrap(), p);
    }

    #[test]
    fn doubling_mod_five_preserves_girth() {
        let p = eq11();
        let t = Transform { multiplier: 2, ..Transform::identity(3, 4, 5) };
        let q = apply_transform(&p, &t).unwrap();
        assert_eq!(q.get(0, 1), 4);
        assert_eq!(
            girth(&q.to_symbolic(), 12).unwrap(),
            girth(&p.to_symbolic(), 12).unwrap()
        );
        assert_eq!(girth(&q.to_symbolic(), 12).unwrap(), GirthResult::Girth(6));
    }

    #[test]
    fn coprime_and_modulus_guards() {
        let p = eq11();
        let t = Transform { multiplier: 2, ..Transform::identity(3, 4, 4) };
        assert_eq!(apply_transform(&p, &t), Err(Error::NotCoprime { multiplier: 2, modulus: 4 }));
        let t = Transform::identity(3, 4, 2);
        assert_eq!(
            apply_transform(&p, &t),
            Err(Error::ModulusTooSmall { modulus: 2, max_entry: 2 })
        );
        let with_null =
            ExponentMatrix::from_rows(vec![vec![0, -1], vec![1, 0]]).unwrap();
        let t = Transform { multiplier: 2, ..Transform::identity(2, 2, 5) };
        assert_eq!(apply_transform(&with_null, &t), Err(Error::NullEntryWithMultiplier));
    }

    #[test]
    fn eq11_is_already_normalized() {
        let p = eq11();
        assert!(is_normalized(&p));
        assert_eq!(normalize(&p), p);
    }

    #[test]
    fn constant_offset_recovers_original() {
        let p = eq11();
        let shifted = ExponentMatrix::from_rows(
            (0..3).map(|i| (0..4).map(|j| p.get(i, j) + 3).collect()).collect(),
        )
        .unwrap();
        assert!(!is_normalized(&shifted));
        assert_eq!(normalize(&shifted), p);
        assert_eq!(normalize(&normalize(&shifted)), p);
    }

    #[test]
    fn all_ones_matrix_is_not_normalized() {
        let p = ExponentMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(!is_normalized(&p));
        let n = normalize(&p);
        assert!(is_normalized(&n));
        assert_eq!(n, ExponentMatrix::from_rows(vec![vec![0, 0], vec![0, 0]]).unwrap());
    }

    #[test]
    fn compose_matches_sequential_application() {
        let p = eq11();
        let t1 = Transform {
            row_perm: vec![1, 2, 0],
            col_perm: vec![3, 0, 1, 2],
            row_offsets: vec![1, 0, 4],
            col_offsets: vec![0, 2, 3, 1],
            multiplier: 2,
            modulus: 5,
        };
        let t2 = Transform {
            row_perm: vec![2, 0, 1],
            col_perm: vec![1, 2, 3, 0],
            row_offsets: vec![0, 3, 2],
            col_offsets: vec![4, 0, 1, 2],
            multiplier: 3,
            modulus: 5,
        };
        let sequential = apply_transform(&apply_transform(&p, &t1).unwrap(), &t2).unwrap();
        let composed = apply_transform(&p, &t2.compose(&t1).unwrap()).unwrap();
        assert_eq!(sequential, composed);
    }

    #[test]
    fn minmax_never_worse_than_input() {
        let p = crate::construct::construct_type1_g6(7).unwrap();
        let input_max = p.max_entry().unwrap() as u32;
        let result = minmax_reduce(&p, 11, MinMaxBudget::Exact).unwrap();
        assert!(result.m_h <= input_max);
        assert_eq!(apply_transform(&p, &result.transform).unwrap(), result.matrix);
    }

    #[test]
    fn minmax_heuristic_is_deterministic() {
        let p = eq11();
        let budget = MinMaxBudget::Heuristic { restarts: 5, seed: 42 };
        let r1 = minmax_reduce(&p, 7, budget).unwrap();
        let r2 = minmax_reduce(&p, 7, budget).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.m_h <= 2);
    }

    #[test]
    fn minmax_exact_matches_full_brute_force_on_toys() {
        // Full enumeration over all (d, row offsets incl. row 0, column
        // offsets) directly through apply_transform.
        for (rows, modulus) in [
            (vec![vec![0, 2], vec![3, 1]], 5u64),
            (vec![vec![1, 2, 3], vec![4, 0, 2]], 5),
            (vec![vec![0, 4], vec![5, 2]], 7),
        ] {
            let p = ExponentMatrix::from_rows(rows).unwrap();
            let exact = minmax_reduce(&p, modulus, MinMaxBudget::Exact).unwrap();
            let brute = brute_force_minmax(&p, modulus);
            assert_eq!(exact.m_h as u64, brute, "modulus {modulus}");
        }
    }

    fn brute_force_minmax(p: &ExponentMatrix, modulus: u64) -> u64 {
        let c = p.c();
        let a = p.a();
        let units: Vec<u64> = (1..modulus).filter(|&d| gcd(d, modulus) == 1).collect();
        let mut best = u64::MAX;
        let mut offsets = vec![0u64; c + a];
        loop {
            for &d in &units {
                let t = Transform {
                    row_perm: (0..c).collect(),
                    col_perm: (0..a).collect(),
                    row_offsets: offsets[..c].to_vec(),
                    col_offsets: offsets[c..].to_vec(),
                    multiplier: d,
                    modulus,
                };
                let q = apply_transform(p, &t).unwrap();
                best = best.min(q.max_entry().unwrap() as u64);
            }
            // Odometer increment.
            let mut idx = 0;
            loop {
                if idx == offsets.len() {
                    return best;
                }
                offsets[idx] += 1;
                if offsets[idx] < modulus {
                    break;
                }
                offsets[idx] = 0;
                idx += 1;
            }
        }
    }
}

//! Matrix representations of time-invariant SC-LDPC-CCs and conversions
//! between them.
//!
//! Three views of the same code are used throughout:
//!
//! * [`SymbolicMatrix`]: the `c x a` matrix of polynomial entries, stored as
//!   sets of exponents (an empty set is the null polynomial),
//! * [`ExponentMatrix`]: the monomial (Type-1) special case, one exponent per
//!   entry with `-1` encoding a null entry,
//! * [`SyndromeFormer`]: the transposed syndrome former `H_s^T`, a tall
//!   `L_h x a` binary matrix whose replicas, shifted down by `c` rows each,
//!   tile the semi-infinite parity-check matrix.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// `c x a` matrix of polynomial entries, each entry a sorted set of exponents.
///
/// The largest entry weight defines the type of the code (Type-1 codes are
/// monomial, Type-2 codes also have binomial entries, and so on).
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    /// Row-major `rows * cols` entries, each sorted and duplicate-free.
    entries: Vec<Vec<u32>>,
}

impl SymbolicMatrix {
    /// Builds a matrix from row-major entries. Exponent lists are sorted;
    /// duplicate exponents within one entry are rejected.
    pub fn from_entries(rows: usize, cols: usize, mut entries: Vec<Vec<u32>>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "expected {rows} x {cols} = {} entries, got {}",
                    rows * cols,
                    entries.len()
                ),
            });
        }
        for (idx, entry) in entries.iter_mut().enumerate() {
            entry.sort_unstable();
            if entry.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DuplicateExponent { row: idx / cols, col: idx % cols });
            }
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from nested rows of entries.
    pub fn from_rows(rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let c = rows.len();
        let a = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != a) {
            return Err(Error::DimensionMismatch { detail: String::from("ragged rows") });
        }
        Self::from_entries(c, a, rows.into_iter().flatten().collect())
    }

    /// Number of block rows `c`.
    pub fn c(&self) -> usize {
        self.rows
    }

    /// Number of block columns `a`.
    pub fn a(&self) -> usize {
        self.cols
    }

    /// Exponent set of entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &[u32] {
        &self.entries[i * self.cols + j]
    }

    /// Hamming weight of column `j` (total number of exponents in it).
    pub fn column_weight(&self, j: usize) -> usize {
        (0..self.rows).map(|i| self.entry(i, j).len()).sum()
    }

    /// Largest exponent in the matrix, `None` if every entry is null.
    pub fn max_exponent(&self) -> Option<u32> {
        self.entries.iter().flat_map(|e| e.iter().copied()).max()
    }

    /// Largest entry weight; 1 for monomial codes, 2 for binomial, ...
    pub fn code_type(&self) -> usize {
        self.entries.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// True when every entry has at most one exponent.
    pub fn is_monomial(&self) -> bool {
        self.code_type() <= 1
    }

    /// The sorted one-positions of column `j` of `H_s^T`: exponent `m` in row
    /// `i` places a one at position `m * c + i`.
    pub fn column_positions(&self, j: usize) -> Vec<u32> {
        let mut positions: Vec<u32> = (0..self.rows)
            .flat_map(|i| {
                self.entry(i, j).iter().map(move |&m| m * self.rows as u32 + i as u32)
            })
            .collect();
        positions.sort_unstable();
        positions
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn concat_horizontal(&self, other: &SymbolicMatrix) -> Result<SymbolicMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                detail: format!("cannot concatenate c = {} with c = {}", self.rows, other.rows),
            });
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries.push(self.entry(i, j).to_vec());
            }
            for j in 0..other.cols {
                entries.push(other.entry(i, j).to_vec());
            }
        }
        SymbolicMatrix::from_entries(self.rows, cols, entries)
    }

    /// Copy of the matrix restricted to the first `keep` columns.
    pub fn take_columns(&self, keep: usize) -> Result<SymbolicMatrix> {
        if keep == 0 || keep > self.cols {
            return Err(Error::DimensionMismatch {
                detail: format!("cannot keep {keep} of {} columns", self.cols),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * keep);
        for i in 0..self.rows {
            for j in 0..keep {
                entries.push(self.entry(i, j).to_vec());
            }
        }
        SymbolicMatrix::from_entries(self.rows, keep, entries)
    }
}

/// Monomial exponent matrix: entries are exponents, `-1` encodes null.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i32>,
}

impl ExponentMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<i32>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "expected {rows} x {cols} = {} entries, got {}",
                    rows * cols,
                    entries.len()
                ),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e < -1) {
            return Err(Error::DimensionMismatch {
                detail: format!("exponent {bad} below -1"),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<i32>>) -> Result<Self> {
        let c = rows.len();
        let a = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != a) {
            return Err(Error::DimensionMismatch { detail: String::from("ragged rows") });
        }
        Self::from_entries(c, a, rows.into_iter().flatten().collect())
    }

    pub fn c(&self) -> usize {
        self.rows
    }

    pub fn a(&self) -> usize {
        self.cols
    }

    /// Exponent at `(i, j)`; `-1` is a null entry.
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.cols + j]
    }

    /// Largest exponent, ignoring null entries.
    pub fn max_entry(&self) -> Option<i32> {
        self.entries.iter().copied().filter(|&e| e >= 0).max()
    }

    /// True when no entry is null.
    pub fn is_full(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    pub fn to_symbolic(&self) -> SymbolicMatrix {
        let entries = self
            .entries
            .iter()
            .map(|&e| if e < 0 { Vec::new() } else { vec![e as u32] })
            .collect();
        SymbolicMatrix::from_entries(self.rows, self.cols, entries)
            .expect("monomial entries are always valid")
    }

    /// Lossless view of a monomial symbolic matrix; `None` if any entry has
    /// more than one exponent.
    pub fn from_symbolic(h: &SymbolicMatrix) -> Option<ExponentMatrix> {
        if !h.is_monomial() {
            return None;
        }
        let entries = (0..h.c())
            .flat_map(|i| {
                (0..h.a()).map(move |j| h.entry(i, j).first().map(|&e| e as i32).unwrap_or(-1))
            })
            .collect();
        Some(ExponentMatrix { rows: h.c(), cols: h.a(), entries })
    }
}

/// Transposed syndrome former `H_s^T`: an `L_h x a` binary matrix stored as
/// sorted one-positions per column.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SyndromeFormer {
    height: usize,
    width: usize,
    columns: Vec<Vec<u32>>,
}

impl SyndromeFormer {
    /// Builds `H_s^T` from per-column one-positions. Every column must carry
    /// at least one one, and positions must fit under `height`.
    pub fn new(height: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        if height == 0 || columns.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let width = columns.len();
        let mut cleaned = Vec::with_capacity(width);
        for (j, mut col) in columns.into_iter().enumerate() {
            col.sort_unstable();
            col.dedup();
            if col.is_empty() {
                return Err(Error::ZeroWeightColumn { col: j });
            }
            if let Some(&max) = col.last() {
                if max as usize >= height {
                    return Err(Error::DimensionMismatch {
                        detail: format!("one at row {max} exceeds height {height} (column {j})"),
                    });
                }
            }
            cleaned.push(col);
        }
        Ok(Self { height, width, columns: cleaned })
    }

    /// Height `L_h` of `H_s^T`.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of columns `a`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.columns[j]
    }

    pub fn column_weight(&self, j: usize) -> usize {
        self.columns[j].len()
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        self.columns[col].binary_search(&(row as u32)).is_ok()
    }
}

/// Derived parameters of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CodeProfile {
    /// Block columns `a`.
    pub a: usize,
    /// Block rows `c`.
    pub c: usize,
    /// Per-column Hamming weights.
    pub column_weights: Vec<u32>,
    /// Syndrome former memory order `m_h` (largest exponent).
    pub m_h: u32,
    /// Height of `H_s^T`, `(m_h + 1) * c` for symbolic-born matrices.
    pub l_h: u32,
    /// Syndrome former constraint length `v_s = (m_h + 1) * a`.
    pub v_s: u64,
    /// Asymptotic rate `(a - c) / a`, reduced.
    pub rate_num: u64,
    pub rate_den: u64,
    /// All column weights equal.
    pub regular: bool,
    /// Some column has weight one (legal mid-search, unusual in a code).
    pub has_weight_one_columns: bool,
}

/// Terminated binary parity-check matrix: `blocks` block columns of `a`
/// variables each, `(blocks + m_h) * c` check rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryParityCheck {
    a: usize,
    c: usize,
    memory: usize,
    blocks: usize,
    /// Sorted check-row indices per variable column.
    col_ones: Vec<Vec<u32>>,
    /// Sorted variable-column indices per check row.
    row_ones: Vec<Vec<u32>>,
}

impl BinaryParityCheck {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Syndrome former memory order of the generating code.
    pub fn memory(&self) -> usize {
        self.memory
    }

    /// Number of block columns (termination length).
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn num_variables(&self) -> usize {
        self.blocks * self.a
    }

    pub fn num_checks(&self) -> usize {
        (self.blocks + self.memory) * self.c
    }

    /// Check rows adjacent to variable `v`.
    pub fn variable_checks(&self, v: usize) -> &[u32] {
        &self.col_ones[v]
    }

    /// Variable columns adjacent to check `r`.
    pub fn check_variables(&self, r: usize) -> &[u32] {
        &self.row_ones[r]
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        self.col_ones[col].binary_search(&(row as u32)).is_ok()
    }
}

/// Reads `H_s^T` back into polynomial form: the bit at row `m*c + i` of
/// column `j` becomes exponent `m` of entry `(i, j)`.
pub fn symbolic_from_syndrome_former(hs: &SyndromeFormer, c: usize) -> Result<SymbolicMatrix> {
    if c == 0 {
        return Err(Error::DimensionMismatch { detail: String::from("c must be positive") });
    }
    let a = hs.width();
    let mut entries = vec![Vec::new(); c * a];
    for j in 0..a {
        for &pos in hs.column(j) {
            let m = pos as usize / c;
            let i = pos as usize % c;
            entries[i * a + j].push(m as u32);
        }
    }
    SymbolicMatrix::from_entries(c, a, entries)
}

/// Stacks the blocks `H_0 .. H_{m_h}` into `H_s^T`, an `(m_h + 1) c x a`
/// binary matrix. Fails when the matrix is all-null or a column is empty.
pub fn syndrome_former_from_symbolic(h: &SymbolicMatrix) -> Result<SyndromeFormer> {
    let m_h = h.max_exponent().ok_or(Error::EmptyMatrix)?;
    for j in 0..h.a() {
        if h.column_weight(j) == 0 {
            return Err(Error::ZeroWeightColumn { col: j });
        }
    }
    let height = (m_h as usize + 1) * h.c();
    let columns = (0..h.a()).map(|j| h.column_positions(j)).collect();
    SyndromeFormer::new(height, columns)
}

/// Expands the code into a terminated parity-check matrix with `blocks`
/// block columns. Block column `t` occupies check rows
/// `t*c .. t*c + (m_h + 1)*c`.
pub fn expand_parity_check(h: &SymbolicMatrix, blocks: usize) -> Result<BinaryParityCheck> {
    if blocks == 0 {
        return Err(Error::ZeroBlocks);
    }
    let m_h = h.max_exponent().ok_or(Error::EmptyMatrix)? as usize;
    let a = h.a();
    let c = h.c();
    let num_vars = blocks * a;
    let num_checks = (blocks + m_h) * c;
    let mut col_ones: Vec<Vec<u32>> = Vec::with_capacity(num_vars);
    let mut row_ones: Vec<Vec<u32>> = vec![Vec::new(); num_checks];
    for t in 0..blocks {
        for j in 0..a {
            let v = (t * a + j) as u32;
            let mut rows = h.column_positions(j);
            for r in rows.iter_mut() {
                *r += (t * c) as u32;
            }
            for &r in &rows {
                row_ones[r as usize].push(v);
            }
            col_ones.push(rows);
        }
    }
    Ok(BinaryParityCheck { a, c, memory: m_h, blocks, col_ones, row_ones })
}

/// Derived code parameters. Errors on any zero-weight column.
pub fn profile(h: &SymbolicMatrix) -> Result<CodeProfile> {
    let m_h = h.max_exponent().ok_or(Error::EmptyMatrix)?;
    let mut column_weights = Vec::with_capacity(h.a());
    for j in 0..h.a() {
        let w = h.column_weight(j);
        if w == 0 {
            return Err(Error::ZeroWeightColumn { col: j });
        }
        column_weights.push(w as u32);
    }
    let a = h.a();
    let c = h.c();
    let l_h = (m_h + 1) * c as u32;
    let v_s = (m_h as u64 + 1) * a as u64;
    let num = a.saturating_sub(c) as u64;
    let den = a as u64;
    let g = gcd(num.max(1), den);
    let regular = column_weights.windows(2).all(|w| w[0] == w[1]);
    let has_weight_one_columns = column_weights.iter().any(|&w| w == 1);
    Ok(CodeProfile {
        a,
        c,
        column_weights,
        m_h,
        l_h,
        v_s,
        rate_num: num / g,
        rate_den: den / g,
        regular,
        has_weight_one_columns,
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn trinomial_column_reads_back() {
        let hs = SyndromeFormer::new(3, vec![vec![0, 1, 2]]).unwrap();
        let h = symbolic_from_syndrome_former(&hs, 1).unwrap();
        assert_eq!(h.entry(0, 0), &[0, 1, 2]);
        assert_eq!(h.code_type(), 3);
    }

    #[test]
    fn identity_like_reads_back() {
        let hs = SyndromeFormer::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let h = symbolic_from_syndrome_former(&hs, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected: &[u32] = if i == j { &[0] } else { &[] };
                assert_eq!(h.entry(i, j), expected);
            }
        }
    }

    #[test]
    fn round_trips_eq11() {
        let h = eq11();
        let hs = syndrome_former_from_symbolic(&h).unwrap();
        assert_eq!(hs.height(), 9);
        let back = symbolic_from_syndrome_former(&hs, 3).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn all_empty_matrix_is_rejected() {
        let h = SymbolicMatrix::from_entries(2, 2, vec![vec![], vec![], vec![], vec![]]).unwrap();
        assert_eq!(syndrome_former_from_symbolic(&h), Err(Error::EmptyMatrix));
    }

    #[test]
    fn eq10_former_shape() {
        let hs = syndrome_former_from_symbolic(&eq10()).unwrap();
        assert_eq!(hs.height(), 15);
        assert_eq!(hs.width(), 4);
        for j in 0..4 {
            assert_eq!(hs.column_weight(j), 3);
        }
    }

    #[test]
    fn single_entry_former() {
        let h = SymbolicMatrix::from_entries(1, 1, vec![vec![0]]).unwrap();
        let hs = syndrome_former_from_symbolic(&h).unwrap();
        assert_eq!(hs.height(), 1);
        assert!(hs.bit(0, 0));
    }

    #[test]
    fn expand_block_diagonal_when_memoryless() {
        let h = SymbolicMatrix::from_rows(vec![vec![vec![0], vec![0]]]).unwrap();
        let bp = expand_parity_check(&h, 3).unwrap();
        assert_eq!(bp.num_checks(), 3);
        assert_eq!(bp.num_variables(), 6);
        for t in 0..3 {
            for j in 0..2 {
                assert_eq!(bp.variable_checks(t * 2 + j), &[t as u32]);
            }
        }
    }

    #[test]
    fn expand_single_block() {
        let h = eq11();
        let bp = expand_parity_check(&h, 1).unwrap();
        assert_eq!(bp.num_checks(), 9);
        assert_eq!(bp.num_variables(), 4);
        for j in 0..4 {
            assert_eq!(bp.variable_checks(j), h.column_positions(j).as_slice());
        }
    }

    #[test]
    fn expand_band_structure() {
        // a = 5, c = 3, m_h = 4 band: block column t lives in rows t*c ..
        // t*c + (m_h + 1)*c.
        let h = SymbolicMatrix::from_rows(vec![
            vec![vec![0], vec![4], vec![0], vec![1], vec![2]],
            vec![vec![1], vec![0], vec![3], vec![0], vec![4]],
            vec![vec![2], vec![3], vec![4], vec![2], vec![0]],
        ])
        .unwrap();
        let bp = expand_parity_check(&h, 3).unwrap();
        assert_eq!(bp.num_checks(), (3 + 4) * 3);
        for t in 0..3 {
            for j in 0..5 {
                let rows = bp.variable_checks(t * 5 + j);
                assert!(rows.iter().all(|&r| r >= (t * 3) as u32 && r < ((t + 5) * 3) as u32));
            }
        }
        assert_eq!(expand_parity_check(&h, 0), Err(Error::ZeroBlocks));
    }

    #[test]
    fn profile_trivial() {
        let h = SymbolicMatrix::from_entries(1, 1, vec![vec![0]]).unwrap();
        let p = profile(&h).unwrap();
        assert_eq!(p.m_h, 0);
        assert_eq!(p.v_s, 1);
        assert_eq!((p.rate_num, p.rate_den), (0, 1));
    }

    #[test]
    fn profile_flags_weight_one_and_errors_on_empty() {
        let h = SymbolicMatrix::from_entries(2, 2, vec![vec![0], vec![1], vec![0], vec![]])
            .unwrap();
        let p = profile(&h).unwrap();
        assert!(p.has_weight_one_columns);
        assert!(!p.regular);

        let empty_col =
            SymbolicMatrix::from_entries(2, 2, vec![vec![0], vec![], vec![0], vec![]]).unwrap();
        assert_eq!(profile(&empty_col), Err(Error::ZeroWeightColumn { col: 1 }));
    }

    #[test]
    fn profile_invariant_vs() {
        let p = profile(&eq11()).unwrap();
        assert_eq!(p.m_h, 2);
        assert_eq!(p.l_h, 9);
        assert_eq!(p.v_s, (p.m_h as u64 + 1) * p.a as u64);
        assert_eq!((p.rate_num, p.rate_den), (1, 4));
    }

    #[test]
    fn exponent_matrix_round_trip() {
        let p = ExponentMatrix::from_rows(vec![vec![0, -1], vec![3, 2]]).unwrap();
        let h = p.to_symbolic();
        assert_eq!(h.entry(0, 1), &[] as &[u32]);
        assert_eq!(ExponentMatrix::from_symbolic(&h).unwrap(), p);
    }

    #[test]
    fn duplicate_exponents_rejected() {
        let r = SymbolicMatrix::from_entries(1, 1, vec![vec![3, 3]]);
        assert_eq!(r, Err(Error::DuplicateExponent { row: 0, col: 0 }));
    }
}

//! Deterministic generators for the explicit girth-6 code families.
//!
//! All generators produce `c = 3` codes with column weight 3:
//!
//! * [`construct_type1_g6`]: monomial codes meeting the girth-6 bound
//!   `m_h = ceil((a - 1) / 2)`,
//! * [`construct_type2_g6`]: mixed monomial/binomial codes with
//!   `m_h = ceil(a / 3)`,
//! * [`construct_type3_g6`]: trinomial codes from stored perfect difference
//!   family groups,
//! * [`construct_mixed_g6`]: a trinomial block concatenated with a Type-1
//!   block.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{ExponentMatrix, SymbolicMatrix};
use crate::{Error, Result};

/// Stored trinomial exponent groups avoiding length-4 cycles, by block
/// length. Each triple is used once per row of the symbolic matrix.
pub const TRINOMIAL_GROUPS: &[(usize, &[[u32; 3]])] = &[
    (6, &[[0, 1, 4], [0, 2, 7]]),
    (9, &[[0, 1, 5], [0, 6, 8], [0, 3, 10]]),
    (12, &[[0, 2, 9], [0, 3, 8], [0, 4, 10], [0, 1, 12]]),
    (15, &[[0, 11, 12], [0, 13, 15], [0, 7, 10], [0, 5, 9], [0, 8, 14]]),
    (18, &[[0, 6, 7], [0, 13, 15], [0, 14, 17], [0, 8, 12], [0, 11, 16], [0, 10, 19]]),
];

/// Monomial `c = 3` template for odd block length `a = 2k + 1`; the parity of
/// `k` selects between the two row patterns.
fn type1_template(k: usize) -> ExponentMatrix {
    let ku = k as i32;
    let (row0, row1, row2): (Vec<i32>, Vec<i32>, Vec<i32>) = if k % 2 == 0 {
        (
            // k + 1 entries of x^k, then k ones.
            core::iter::repeat(ku).take(k + 1).chain(core::iter::repeat(0).take(k)).collect(),
            (0..=ku).chain(1..=ku).collect(),
            (0..=ku).rev().chain((1..=ku).rev()).collect(),
        )
    } else {
        (
            core::iter::repeat(ku).take(k).chain(core::iter::repeat(0).take(k + 1)).collect(),
            (0..ku).chain(0..=ku).collect(),
            (0..ku).rev().chain((0..=ku).rev()).collect(),
        )
    };
    ExponentMatrix::from_rows(vec![row0, row1, row2]).expect("template rows are rectangular")
}

/// Type-1 monomial code with girth at least 6 and the smallest possible
/// memory order `m_h = ceil((a - 1) / 2)`. For even `a` the rightmost column
/// of the `a + 1` template is dropped, which cannot create cycles.
pub fn construct_type1_g6(a: usize) -> Result<ExponentMatrix> {
    if a < 3 {
        return Err(Error::BlockLengthTooSmall { a, min: 3 });
    }
    let k = a / 2;
    let template = type1_template(k);
    if a % 2 == 1 {
        Ok(template)
    } else {
        let rows = (0..3)
            .map(|i| (0..a).map(|j| template.get(i, j)).collect())
            .collect();
        ExponentMatrix::from_rows(rows)
    }
}

fn ones(n: usize) -> Vec<Vec<u32>> {
    vec![vec![0]; n]
}

/// The two repeated rows of the Type-2 blocks: `b1` pairs exponents
/// `(i, k + 1 - i)`, `b2` pairs `(i, k - i)`, each padded with ones to `k`
/// columns.
fn type2_rows(k: usize) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let ku = k as u32;
    let binoms_a: Vec<Vec<u32>> = (1..=(k as u32) / 2).map(|i| vec![i, ku + 1 - i]).collect();
    let binoms_b: Vec<Vec<u32>> = (0..=(ku.saturating_sub(1)) / 2).map(|i| vec![i, ku - i]).collect();
    let mut b1 = binoms_a;
    b1.extend(ones(k - b1.len()));
    let mut b2 = ones(k - binoms_b.len());
    b2.extend(binoms_b);
    (b1, b2)
}

/// One of the three `3 x k` Type-2 blocks; `null_row` cycles through the
/// rows so that column supports of different blocks overlap in at most one
/// row.
fn type2_block(k: usize, null_row: usize) -> SymbolicMatrix {
    let (b1, b2) = type2_rows(k);
    let empty: Vec<Vec<u32>> = vec![Vec::new(); k];
    let rows = match null_row {
        0 => vec![empty, b1, b2],
        1 => vec![b2, empty, b1],
        _ => vec![b1, b2, empty],
    };
    SymbolicMatrix::from_rows(rows).expect("block rows are rectangular")
}

/// Type-2 code with girth at least 6: three `3 x k` blocks with cyclically
/// shifted row supports, `k = ceil(a / 3)`, trimmed to `a` columns from the
/// right so every support pattern stays represented.
pub fn construct_type2_g6(a: usize) -> Result<SymbolicMatrix> {
    if a < 3 {
        return Err(Error::BlockLengthTooSmall { a, min: 3 });
    }
    let k = a.div_ceil(3);
    let full = type2_block(k, 0)
        .concat_horizontal(&type2_block(k, 1))?
        .concat_horizontal(&type2_block(k, 2))?;
    full.take_columns(a)
}

/// Type-3 code: each stored trinomial appears once per row in a block
/// diagonal of rows. Only the stored block lengths are available.
pub fn construct_type3_g6(a: usize) -> Result<SymbolicMatrix> {
    let group = TRINOMIAL_GROUPS
        .iter()
        .find(|(len, _)| *len == a)
        .map(|(_, g)| *g)
        .ok_or(Error::NoTrinomialGroup { a })?;
    let per_row = group.len();
    let mut rows = Vec::with_capacity(3);
    for i in 0..3 {
        let mut row: Vec<Vec<u32>> = Vec::with_capacity(a);
        for block in 0..3 {
            for trinomial in group {
                row.push(if block == i { trinomial.to_vec() } else { Vec::new() });
            }
        }
        debug_assert_eq!(row.len(), 3 * per_row);
        rows.push(row);
    }
    SymbolicMatrix::from_rows(rows)
}

/// Horizontal concatenation of a trinomial block and a Type-1 block:
/// `a = a_trinomial + 2 k_monomial + 1` columns with girth at least 6.
pub fn construct_mixed_g6(a_trinomial: usize, k_monomial: usize) -> Result<SymbolicMatrix> {
    if k_monomial < 1 {
        return Err(Error::InvalidQuery {
            detail: format!("monomial part needs k >= 1, got {k_monomial}"),
        });
    }
    let trinomial = construct_type3_g6(a_trinomial)?;
    let monomial = type1_template(k_monomial).to_symbolic();
    trinomial.concat_horizontal(&monomial)
}

//! The GL(1) approximation stages of equivariant homology of a point.
//!
//! Stage m is the truncated homology of `P^m`: one free rank in each
//! homology degree `2m, 2m-2, …, 0`, i.e. in shifted degrees
//! `0, -2, …, -2m`. The inclusion `P^m ⊂ P^(m+1)` matches shifted
//! degrees, so each shifted degree `-2j` stabilizes to rank 1 once
//! `m ≥ j` — the limit is one copy of the integers in every
//! nonpositive even degree.

/// One stage of the approximation, with the inclusion into the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bgl1Stage {
    pub m: usize,
    /// Rank in each shifted degree, indexed parallel to `shifted_degrees`.
    pub ranks: Vec<u32>,
    /// Shifted degrees `0, -2, …, -2m`.
    pub shifted_degrees: Vec<i64>,
    /// Matrix of the inclusion into stage m+1: rows indexed by the next
    /// stage's degrees, columns by this stage's.
    pub inclusion: Vec<Vec<u32>>,
}

/// Builds stage m: rank vector of all ones, length m+1, and the
/// degree-aligned inclusion into stage m+1.
pub fn bgl1_truncated(m: usize) -> Bgl1Stage {
    let ranks = vec![1u32; m + 1];
    let shifted_degrees = (0..=m).map(|j| -2 * j as i64).collect();
    let inclusion = (0..m + 2)
        .map(|row| {
            (0..m + 1)
                .map(|col| if row == col { 1 } else { 0 })
                .collect()
        })
        .collect();
    Bgl1Stage {
        m,
        ranks,
        shifted_degrees,
        inclusion,
    }
}

/// Composite inclusion matrix from stage `from` into stage `to`.
pub fn composed_inclusion(from: usize, to: usize) -> Vec<Vec<u32>> {
    assert!(to >= from);
    let mut matrix: Vec<Vec<u32>> = (0..from + 1)
        .map(|r| (0..from + 1).map(|c| if r == c { 1 } else { 0 }).collect())
        .collect();
    for stage in from..to {
        let step = bgl1_truncated(stage).inclusion;
        let rows = step.len();
        let cols = matrix[0].len();
        let mut next = vec![vec![0u32; cols]; rows];
        for (r, step_row) in step.iter().enumerate() {
            for c in 0..cols {
                next[r][c] = step_row
                    .iter()
                    .zip(matrix.iter())
                    .map(|(&s, m_row)| s * m_row[c])
                    .sum();
            }
        }
        matrix = next;
    }
    matrix
}

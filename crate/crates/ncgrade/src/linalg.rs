//! Exact row reduction over the rationals.
//!
//! Rows are sparse (sorted column/coefficient pairs) and elimination
//! keeps one normalized pivot row per leading column. This supports
//! the rank, span-membership, and span-equality questions the rest of
//! the workbench asks, with no floating point anywhere.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A sparse row: strictly increasing column indices with nonzero
/// coefficients.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Builds a sparse row from unsorted, possibly duplicated entries.
pub fn row_from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (col, c) in entries {
        if c.is_zero() {
            continue;
        }
        let slot = acc.entry(col).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            acc.remove(&col);
        }
    }
    acc.into_iter().collect()
}

/// `target -= factor · source`, merging sorted sparse rows.
fn eliminate(target: &SparseRow, factor: &Scalar, source: &SparseRow) -> SparseRow {
    let mut out = SparseRow::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        match (target.get(i), source.get(j)) {
            (Some((ct, vt)), Some((cs, vs))) if ct == cs => {
                let v = vt - &(factor * vs);
                if !v.is_zero() {
                    out.push((*ct, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ct, vt)), Some((cs, _))) if ct < cs => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (Some(_), Some((cs, vs))) => {
                out.push((*cs, -(factor * vs)));
                j += 1;
            }
            (Some((ct, vt)), None) => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (None, Some((cs, vs))) => {
                out.push((*cs, -(factor * vs)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// An echelonized row space: one pivot row per leading column, pivot
/// coefficient normalized to one.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowSpace {
    /// The zero subspace.
    pub fn new() -> Self {
        RowSpace::default()
    }

    /// Builds a space from a list of rows.
    pub fn from_rows(rows: impl IntoIterator<Item = SparseRow>) -> Self {
        let mut s = RowSpace::new();
        for r in rows {
            s.insert(r);
        }
        s
    }

    /// Current rank (number of pivots).
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the pivots until its leading column is
    /// pivot-free (or the row vanishes).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((col, coeff)) = row.first().cloned() {
            match self.pivots.get(&col) {
                Some(p) => row = eliminate(&row, &coeff, p),
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let row = self.reduce(row);
        let (col, lead) = row.first().cloned()?;
        let inv = lead.inverse().expect("leading coefficient nonzero");
        let normalized = row
            .into_iter()
            .map(|(c, v)| (c, &v * &inv))
            .collect::<SparseRow>();
        self.pivots.insert(col, normalized);
        Some(col)
    }

    /// True iff `row` lies in the span.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    RowSpace::from_rows(rows).rank()
}

//! Sparse matrices and rank computation. Over GF(2) rows are bit-packed into
//! u64 words; over other fields elimination works on sorted index-value rows
//! with sparsest-row pivot selection. The bar-complex differentials that
//! dominate Hochschild runs go through this path.

use crate::field::{FieldSpec, Scalar};

/// Row-sparse matrix: per-row sorted (column, scalar) pairs, no stored zeros.
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(u32, Scalar)>>,
    nnz: usize,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
            nnz: 0,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.nnz
    }

    /// Accumulate into an entry. Rows are built in arbitrary column order and
    /// normalized lazily by [`SparseMatrix::finish_row`]/[`SparseMatrix::rank`].
    pub fn add(&mut self, r: usize, c: usize, v: Scalar, field: &FieldSpec) {
        if field.is_zero(&v) {
            return;
        }
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r].push((c as u32, v));
        self.nnz += 1;
    }

    /// Raw row access; rows may hold unsorted duplicate columns until
    /// normalized by [`SparseMatrix::rank`].
    pub fn rows_iter(&self) -> impl Iterator<Item = &Vec<(u32, Scalar)>> {
        self.data.iter()
    }

    /// Sort a row, merge duplicate columns, drop zeros.
    fn normalize_row(row: &mut Vec<(u32, Scalar)>, field: &FieldSpec) {
        row.sort_by_key(|&(c, _)| c);
        let mut out: Vec<(u32, Scalar)> = Vec::with_capacity(row.len());
        for (c, v) in row.drain(..) {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => {
                    *lv = field.add(lv, &v);
                }
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !field.is_zero(v));
        *row = out;
    }

    pub fn rank(self, field: &FieldSpec) -> usize {
        self.rank_with_pivots(field).0
    }

    /// Rank together with the sorted pivot columns of the eliminated rows.
    /// In an echelonized family, rows pivoting in a trailing column block
    /// are supported entirely inside that block.
    pub fn rank_with_pivots(mut self, field: &FieldSpec) -> (usize, Vec<u32>) {
        for row in self.data.iter_mut() {
            Self::normalize_row(row, field);
        }
        self.nnz = self.data.iter().map(|r| r.len()).sum();
        let mut pivots = if field.characteristic() == 2 && field.degree() == 1 {
            rank_gf2(self)
        } else {
            rank_sparse_general(self, field)
        };
        pivots.sort_unstable();
        (pivots.len(), pivots)
    }
}

/// Compute the rank of a row stream without materializing a dense matrix.
pub fn sparse_rank(m: SparseMatrix, field: &FieldSpec) -> usize {
    m.rank(field)
}

/// Bit-packed elimination over GF(2); returns the pivot columns.
fn rank_gf2(m: SparseMatrix) -> Vec<u32> {
    let words = m.cols.div_ceil(64);
    // pivot_rows[i] = (pivot column, packed row)
    let mut pivot_rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut packed = vec![0u64; words];
    for row in m.data {
        if row.is_empty() {
            continue;
        }
        for w in packed.iter_mut() {
            *w = 0;
        }
        for (c, _) in row {
            packed[(c as usize) >> 6] ^= 1u64 << (c & 63);
        }
        loop {
            let Some(lead) = leading_bit(&packed) else {
                break;
            };
            match pivot_rows.binary_search_by_key(&lead, |(p, _)| *p) {
                Ok(idx) => {
                    let (_, prow) = &pivot_rows[idx];
                    let start = lead >> 6;
                    for (w, pw) in packed[start..].iter_mut().zip(&prow[start..]) {
                        *w ^= pw;
                    }
                }
                Err(idx) => {
                    pivot_rows.insert(idx, (lead, packed.clone()));
                    break;
                }
            }
        }
    }
    pivot_rows.into_iter().map(|(p, _)| p as u32).collect()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (i, &w) in row.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// General sparse elimination keyed on leading column, preferring the
/// sparsest available pivot row to limit fill-in. Returns the pivot columns.
fn rank_sparse_general(m: SparseMatrix, field: &FieldSpec) -> Vec<u32> {
    // pivots: leading column -> normalized pivot row (leading coeff 1).
    let mut pivots: std::collections::BTreeMap<u32, Vec<(u32, Scalar)>> =
        std::collections::BTreeMap::new();
    // Work queue ordered by (row length) so short rows claim pivots first.
    let mut queue: std::collections::BinaryHeap<std::cmp::Reverse<(usize, usize)>> =
        std::collections::BinaryHeap::new();
    let mut store: Vec<Vec<(u32, Scalar)>> = m.data;
    for (i, row) in store.iter().enumerate() {
        if !row.is_empty() {
            queue.push(std::cmp::Reverse((row.len(), i)));
        }
    }
    while let Some(std::cmp::Reverse((_, idx))) = queue.pop() {
        let mut row = std::mem::take(&mut store[idx]);
        if row.is_empty() {
            continue;
        }
        // Reduce against existing pivots until the leading column is free.
        loop {
            let Some(&(lead, ref coeff)) = row.first() else {
                break;
            };
            let coeff = coeff.clone();
            match pivots.get(&lead) {
                Some(prow) => {
                    row = axpy(&row, prow, &field.neg(&coeff), field);
                }
                None => {
                    let inv = field.inv(&coeff);
                    for (_, v) in row.iter_mut() {
                        *v = field.mul(v, &inv);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.into_keys().collect()
}

/// result = a + factor * b, both sorted by column.
fn axpy(
    a: &[(u32, Scalar)],
    b: &[(u32, Scalar)],
    factor: &Scalar,
    field: &FieldSpec,
) -> Vec<(u32, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|&(c, _)| c);
        let cb = b.get(j).map(|&(c, _)| c);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = field.add(&a[i].1, &field.mul(factor, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                let _ = x;
                i += 1;
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                let v = field.mul(factor, &b[j].1);
                if !field.is_zero(&v) {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_kernel, Matrix};

    fn dense_rank(rows: &[Vec<i64>], field: &FieldSpec) -> usize {
        let cols = rows[0].len();
        let m = Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
                .collect(),
            cols,
            field,
        );
        rank_kernel(&m, field).0
    }

    fn sparse_from(rows: &[Vec<i64>], field: &FieldSpec) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.add(i, j, field.from_int(v), field);
            }
        }
        m
    }

    #[test]
    fn gf2_rank_matches_dense() {
        let f = FieldSpec::prime_field(2).unwrap();
        let rows = vec![
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 0],
            vec![1, 1, 0, 1],
            vec![1, 0, 1, 1],
        ];
        assert_eq!(sparse_from(&rows, &f).rank(&f), dense_rank(&rows, &f));
    }

    #[test]
    fn gf5_rank_matches_dense() {
        let f = FieldSpec::prime_field(5).unwrap();
        let rows = vec![
            vec![1, 2, 3, 4, 0],
            vec![2, 4, 1, 3, 1],
            vec![3, 1, 4, 2, 2],
            vec![4, 3, 2, 1, 3],
            vec![0, 0, 0, 0, 0],
        ];
        assert_eq!(sparse_from(&rows, &f).rank(&f), dense_rank(&rows, &f));
    }

    #[test]
    fn duplicate_entries_accumulate() {
        let f = FieldSpec::prime_field(3).unwrap();
        let mut m = SparseMatrix::new(1, 2);
        m.add(0, 0, f.from_int(1), &f);
        m.add(0, 0, f.from_int(2), &f); // sums to zero mod 3
        m.add(0, 1, f.from_int(1), &f);
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn rational_sparse_rank() {
        let f = FieldSpec::rationals();
        let rows = vec![vec![1, 2], vec![2, 4], vec![0, 1]];
        assert_eq!(sparse_from(&rows, &f).rank(&f), 2);
    }
}

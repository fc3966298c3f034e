//! Dense row-major matrices over a [`FieldSpec`] and canonically echelonized
//! subspaces.

use crate::field::{FieldSpec, Scalar};
use std::fmt;

/// Dense matrix; entries live in one field, passed explicitly to every
/// operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: &FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: &FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: &FieldSpec) -> Self {
        let _ = field;
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self, field: &FieldSpec) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar], field: &FieldSpec) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = field.zero();
                for c in 0..self.cols {
                    if !field.is_zero(self.at(r, c)) && !field.is_zero(&v[c]) {
                        acc = field.add(&acc, &field.mul(self.at(r, c), &v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// columns in increasing order; rank = pivot count. Zero rows sink to
    /// the bottom.
    pub fn rref(&mut self, field: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !field.is_zero(self.at(r, col)));
            let Some(r0) = found else { continue };
            if r0 != pivot_row {
                for c in 0..self.cols {
                    self.entries
                        .swap(r0 * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = field.inv(self.at(pivot_row, col));
            for c in col..self.cols {
                let v = field.mul(self.at(pivot_row, c), &inv);
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || field.is_zero(self.at(r, col)) {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let sub = field.mul(&factor, self.at(pivot_row, c));
                    let v = field.sub(self.at(r, c), &sub);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A linear subspace in canonical form: the stored basis is in reduced row
/// echelon form with no zero rows, so two subspaces are equal iff their
/// representations are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: &FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: &FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, field),
            pivots: (0..ambient).collect(),
        }
    }

    /// Echelonize a spanning set.
    pub fn from_spanning(ambient: usize, rows: Vec<Vec<Scalar>>, field: &FieldSpec) -> Self {
        let mut m = Matrix::from_rows(rows, ambient, field);
        let pivots = m.rref(field);
        let rank = pivots.len();
        let basis = Matrix {
            rows: rank,
            cols: ambient,
            entries: m.entries[..rank * ambient].to_vec(),
        };
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.rows).map(|r| self.basis.row(r))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce a vector modulo this subspace (subtract the unique combination
    /// of basis rows matching its pivot coordinates).
    pub fn reduce(&self, v: &[Scalar], field: &FieldSpec) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if field.is_zero(&out[pc]) {
                continue;
            }
            let factor = out[pc].clone();
            for c in pc..self.ambient {
                let sub = field.mul(&factor, self.basis.at(row, c));
                out[c] = field.sub(&out[c], &sub);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar], field: &FieldSpec) -> bool {
        self.reduce(v, field).iter().all(|x| field.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace, field: &FieldSpec) -> bool {
        other.basis_rows().all(|r| self.contains(r, field))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace, field: &FieldSpec) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(|r| r.to_vec())
            .collect();
        Subspace::from_spanning(self.ambient, rows, field)
    }

    /// Intersection via the kernel of the stacked transposed bases: a vector
    /// lies in both spans iff some coefficient pair (x, y) has Ax = By.
    pub fn intersect(&self, other: &Subspace, field: &FieldSpec) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Subspace::zero(self.ambient, field);
        }
        let mut m = Matrix::zero(self.ambient, da + db, field);
        for (j, row) in self.basis_rows().enumerate() {
            for (i, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        for (j, row) in other.basis_rows().enumerate() {
            for (i, v) in row.iter().enumerate() {
                m.set(i, da + j, field.neg(v));
            }
        }
        let (_, ker) = rank_kernel(&m, field);
        let mut rows = Vec::new();
        for kv in ker.basis_rows() {
            let mut vec = vec![field.zero(); self.ambient];
            for (j, row) in self.basis_rows().enumerate() {
                if field.is_zero(&kv[j]) {
                    continue;
                }
                for (i, v) in row.iter().enumerate() {
                    vec[i] = field.add(&vec[i], &field.mul(&kv[j], v));
                }
            }
            rows.push(vec);
        }
        Subspace::from_spanning(self.ambient, rows, field)
    }
}

/// Rank and kernel of a matrix. The kernel basis is returned as a canonical
/// [`Subspace`] (re-echelonized), so repeated calls on equal inputs give
/// identical bases.
pub fn rank_kernel(m: &Matrix, field: &FieldSpec) -> (usize, Subspace) {
    let mut work = m.clone();
    let pivots = work.rref(field);
    let rank = pivots.len();
    let cols = m.cols();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut kernel_rows = Vec::with_capacity(cols - rank);
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(work.at(row, free));
        }
        kernel_rows.push(v);
    }
    (rank, Subspace::from_spanning(cols, kernel_rows, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn identity_has_full_rank_trivial_kernel() {
        let f = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::identity(3, &f);
        let (rank, ker) = rank_kernel(&m, &f);
        assert_eq!(rank, 3);
        assert_eq!(ker.dim(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let f = q();
        let m = Matrix::zero(2, 3, &f);
        let (rank, ker) = rank_kernel(&m, &f);
        assert_eq!(rank, 0);
        assert_eq!(ker.dim(), 3);
    }

    #[test]
    fn rank_one_kernel_matches_hand_elimination() {
        // [[1,2],[2,4]]: hand elimination leaves x + 2y = 0, kernel spanned
        // by (-2, 1).
        let f = q();
        let m = Matrix::from_rows(
            vec![
                vec![f.from_int(1), f.from_int(2)],
                vec![f.from_int(2), f.from_int(4)],
            ],
            2,
            &f,
        );
        let (rank, ker) = rank_kernel(&m, &f);
        assert_eq!(rank, 1);
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&[f.from_int(-2), f.from_int(1)], &f));
        // Canonical basis row is the pivot-normalized (1, -1/2).
        let row: Vec<_> = ker.basis().row(0).to_vec();
        assert_eq!(row[0], f.one());
        assert_eq!(row[1], f.parse_scalar("-1/2").unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = FieldSpec::prime_field(7).unwrap();
        let m = Matrix::from_rows(
            vec![
                vec![f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(4)],
                vec![f.from_int(2), f.from_int(4), f.from_int(6), f.from_int(1)],
                vec![f.from_int(3), f.from_int(6), f.from_int(2), f.from_int(5)],
            ],
            4,
            &f,
        );
        let (rank, ker) = rank_kernel(&m, &f);
        assert_eq!(rank + ker.dim(), 4);
        for row in ker.basis_rows() {
            for out in m.apply(row, &f) {
                assert!(f.is_zero(&out));
            }
        }
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let f = q();
        let e = |i: usize| {
            let mut v = vec![f.zero(); 3];
            v[i] = f.one();
            v
        };
        let xy = Subspace::from_spanning(3, vec![e(0), e(1)], &f);
        let yz = Subspace::from_spanning(3, vec![e(1), e(2)], &f);
        assert_eq!(xy.sum(&yz, &f).dim(), 3);
        let meet = xy.intersect(&yz, &f);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&e(1), &f));
    }

    #[test]
    fn reduce_is_idempotent() {
        let f = q();
        let s = Subspace::from_spanning(
            3,
            vec![vec![f.from_int(1), f.from_int(2), f.from_int(0)]],
            &f,
        );
        let v = vec![f.from_int(3), f.from_int(1), f.from_int(5)];
        let r1 = s.reduce(&v, &f);
        let r2 = s.reduce(&r1, &f);
        assert_eq!(r1, r2);
    }
}

//! Integer matrices, Smith normal form, and fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SmithError {
    #[error("Smith normal form requires a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
}

/// Dense arbitrary-precision integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r.into_iter().map(BigInt::from));
        }
        IntMatrix {
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

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(i64::try_from(self.at(r, c)).ok()?);
            }
            out.push(row);
        }
        Some(out)
    }
}

/// Elementary divisors d_1 | d_2 | ... | d_n of a square integer matrix,
/// nonnegative, zeros last. The product of the nonzero divisors equals
/// |det| when the determinant is nonzero.
///
/// Pivots are chosen as minimal-absolute-value nonzero entries, which keeps
/// coefficient growth tame at the sizes that occur here.
pub fn smith_normal_form(m: &IntMatrix) -> Result<Vec<BigInt>, SmithError> {
    if m.rows != m.cols {
        return Err(SmithError::NotSquare(m.rows, m.cols));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut diag: Vec<BigInt> = Vec::with_capacity(n);

    for k in 0..n {
        loop {
            // Minimal absolute value nonzero entry in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for r in k..n {
                for c in k..n {
                    let v = a.at(r, c);
                    if v.is_zero() {
                        continue;
                    }
                    match &best {
                        None => best = Some((r, c)),
                        Some((br, bc)) => {
                            if v.abs() < a.at(*br, *bc).abs() {
                                best = Some((r, c));
                            }
                        }
                    }
                }
            }
            let Some((pr, pc)) = best else {
                diag.push(BigInt::zero());
                break;
            };
            swap_rows(&mut a, k, pr);
            swap_cols(&mut a, k, pc);

            // Reduce column and row k by the pivot.
            let mut clean = true;
            for r in k + 1..n {
                if !a.at(r, k).is_zero() {
                    let q = div_nearest(a.at(r, k), a.at(k, k));
                    row_axpy(&mut a, r, k, &-q);
                    if !a.at(r, k).is_zero() {
                        clean = false;
                    }
                }
            }
            for c in k + 1..n {
                if !a.at(k, c).is_zero() {
                    let q = div_nearest(a.at(k, c), a.at(k, k));
                    col_axpy(&mut a, c, k, &-q);
                    if !a.at(k, c).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the block; if not, fold the
            // offending row in and restart the reduction.
            let pivot = a.at(k, k).clone();
            let mut offender = None;
            'scan: for r in k + 1..n {
                for c in k + 1..n {
                    if !(a.at(r, c) % &pivot).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            if let Some(r) = offender {
                row_axpy(&mut a, k, r, &BigInt::one());
                continue;
            }
            diag.push(pivot.abs());
            break;
        }
    }

    // The diagonal already satisfies the divisibility chain up to ordering of
    // zeros; enforce it pairwise anyway so any future pivot strategy change
    // cannot break the contract.
    let mut d = diag;
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (d[i].clone(), d[j].clone());
            if x.is_zero() && y.is_zero() {
                continue;
            }
            if x.is_zero() || y.is_zero() {
                // Zeros sink to the tail.
                if x.is_zero() {
                    d[i] = y;
                    d[j] = BigInt::zero();
                }
                continue;
            }
            if (&y % &x).is_zero() {
                continue;
            }
            let g = x.gcd(&y);
            let l = &x / &g * &y;
            d[i] = g;
            d[j] = l;
        }
    }
    Ok(d)
}

/// Determinant by Bareiss fraction-free elimination: all intermediate values
/// stay integral, no rational arithmetic needed.
pub fn bareiss_determinant(m: &IntMatrix) -> Result<BigInt, SmithError> {
    if m.rows != m.cols {
        return Err(SmithError::NotSquare(m.rows, m.cols));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let swap = (k + 1..n).find(|&r| !a.at(r, k).is_zero());
            match swap {
                Some(r) => {
                    swap_rows(&mut a, k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.set(i, j, &num / &prev);
            }
        }
        for i in k + 1..n {
            a.set(i, k, BigInt::zero());
        }
        prev = a.at(k, k).clone();
    }
    let det = a.at(n - 1, n - 1).clone();
    Ok(if sign < 0 { -det } else { det })
}

fn swap_rows(a: &mut IntMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        a.entries.swap(r1 * a.cols + c, r2 * a.cols + c);
    }
}

fn swap_cols(a: &mut IntMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..a.rows {
        a.entries.swap(r * a.cols + c1, r * a.cols + c2);
    }
}

/// row r += q * row k
fn row_axpy(a: &mut IntMatrix, r: usize, k: usize, q: &BigInt) {
    for c in 0..a.cols {
        let v = a.at(r, c) + q * a.at(k, c);
        a.set(r, c, v);
    }
}

/// col c += q * col k
fn col_axpy(a: &mut IntMatrix, c: usize, k: usize, q: &BigInt) {
    for r in 0..a.rows {
        let v = a.at(r, c) + q * a.at(r, k);
        a.set(r, c, v);
    }
}

/// Round-to-nearest integer division, which halves remainders compared to
/// truncation and keeps pivot reduction fast.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

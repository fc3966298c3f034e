//! Hochschild cohomology dimensions from the reduced (normalized) bar
//! complex.
//!
//! Cochain spaces are C^i = Hom(Abar^{(x)i}, A) with Abar = A / K*1. A basis
//! of Abar is given by the classes of all basis words except the first
//! trivial path; products are pushed back into Abar through the projection
//! that subtracts the identity component. dims[i] = dim ker d^i - rank
//! d^{i-1}; dims[0] is the center dimension, which doubles as a cross-check.
//!
//! Differentials are assembled as sparse matrices; ranks go through the
//! dense path for small sizes and bit-packed/sparse elimination otherwise.

use crate::algebra::FdAlgebra;
use crate::field::Scalar;
use crate::invariants::InvariantError;
use crate::linalg::{rank_kernel, sparse_rank, Matrix, SparseMatrix, DENSE_ENTRY_LIMIT};

/// Default cap on stored sparse entries per differential.
pub const DEFAULT_ENTRY_GUARD: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochschildDims {
    /// dims[i] = dim HH^i(A) for i = 0..=i_max.
    pub dims: Vec<usize>,
}

pub fn hochschild_dims(
    algebra: &FdAlgebra,
    i_max: usize,
    entry_guard: u64,
) -> Result<HochschildDims, InvariantError> {
    if i_max > 3 {
        return Err(InvariantError::HochschildTooDeep(i_max));
    }
    let d = algebra.dim();
    let dbar = d - 1;
    if dbar == 0 {
        // A = K: HH^0 = K, everything above vanishes.
        let mut dims = vec![0; i_max + 1];
        dims[0] = 1;
        return Ok(HochschildDims { dims });
    }

    let tables = Tables::new(algebra);
    // rank of d^i for i = 0..=i_max; cols(C^i) = d * dbar^i.
    let mut ranks = Vec::with_capacity(i_max + 1);
    for level in 0..=i_max {
        ranks.push(differential_rank(algebra, &tables, level, entry_guard)?);
    }
    let mut dims = Vec::with_capacity(i_max + 1);
    for level in 0..=i_max {
        let cols = d as u128 * (dbar as u128).pow(level as u32);
        let kernel = cols as usize - ranks[level];
        let image_below = if level == 0 { 0 } else { ranks[level - 1] };
        dims.push(kernel - image_below);
    }
    Ok(HochschildDims { dims })
}

/// Multiplication tables pushed through the Abar conventions: the class of
/// basis word u+1 represents Abar basis element u.
struct Tables {
    /// left[x][s]: expansion of rep(x) * b_s over the A basis, sparse.
    left: Vec<Vec<Vec<(usize, Scalar)>>>,
    /// right[x][s]: expansion of b_s * rep(x), sparse.
    right: Vec<Vec<Vec<(usize, Scalar)>>>,
    /// pimul[x][y]: projection to Abar of rep(x) * rep(y), sparse.
    pimul: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl Tables {
    fn new(algebra: &FdAlgebra) -> Tables {
        let d = algebra.dim();
        let dbar = d - 1;
        let field = &algebra.field;
        let s = algebra.vertex_count();
        // Abar projection of a sparse A-vector: drop coordinate 0, shifting
        // the identity component into the remaining trivial paths.
        let project = |entries: &[(usize, Scalar)]| -> Vec<(usize, Scalar)> {
            let mut id_coeff = field.zero();
            let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
            for (k, c) in entries {
                if *k == 0 {
                    id_coeff = c.clone();
                } else {
                    out.push((*k - 1, c.clone()));
                }
            }
            if !field.is_zero(&id_coeff) {
                // b_0 = 1 - (b_1 + ... + b_{s-1}) in Abar coordinates.
                let neg = field.neg(&id_coeff);
                for t in 0..s - 1 {
                    match out.iter_mut().find(|(k, _)| *k == t) {
                        Some((_, c)) => *c = field.add(c, &neg),
                        None => out.push((t, neg.clone())),
                    }
                }
                out.retain(|(_, c)| !field.is_zero(c));
            }
            out.sort_by_key(|&(k, _)| k);
            out
        };

        let mut left = Vec::with_capacity(dbar);
        let mut right = Vec::with_capacity(dbar);
        let mut pimul = Vec::with_capacity(dbar);
        for x in 0..dbar {
            let rep = x + 1;
            let mut lx = Vec::with_capacity(d);
            let mut rx = Vec::with_capacity(d);
            for s_idx in 0..d {
                lx.push(algebra.basis_product(rep, s_idx).to_vec());
                rx.push(algebra.basis_product(s_idx, rep).to_vec());
            }
            left.push(lx);
            right.push(rx);
            let mut px = Vec::with_capacity(dbar);
            for y in 0..dbar {
                px.push(project(algebra.basis_product(rep, y + 1)));
            }
            pimul.push(px);
        }
        Tables { left, right, pimul }
    }
}

/// Rank of the level-th bar differential d^level : C^level -> C^{level+1}.
fn differential_rank(
    algebra: &FdAlgebra,
    tables: &Tables,
    level: usize,
    entry_guard: u64,
) -> Result<usize, InvariantError> {
    let d = algebra.dim();
    let dbar = d - 1;
    let field = &algebra.field;
    let rows = d as u128 * (dbar as u128).pow(level as u32 + 1);
    let cols = d as u128 * (dbar as u128).pow(level as u32);
    let guard_err = |stored: u128| InvariantError::SizeGuard {
        level,
        rows,
        cols,
        stored,
        guard: entry_guard,
    };
    if rows > entry_guard as u128 {
        return Err(guard_err(rows));
    }

    let mut m = SparseMatrix::new(rows as usize, cols as usize);
    let mut tuple = vec![0usize; level + 1];
    let flat = |t: &[usize]| -> usize {
        let mut idx = 0usize;
        for &x in t {
            idx = idx * dbar + x;
        }
        idx
    };
    let minus_one = field.from_int(-1);
    loop {
        let rowbase = flat(&tuple) * d;
        // Leading term: x_1 * phi(x_2, ..., x_{level+1}).
        let colbase = flat(&tuple[1..]) * d;
        for s in 0..d {
            for (r, c) in &tables.left[tuple[0]][s] {
                m.add(rowbase + r, colbase + s, c.clone(), field);
            }
        }
        // Inner contractions with alternating signs.
        for j in 1..=level {
            let sign_neg = j % 2 == 1;
            let merged = &tables.pimul[tuple[j - 1]][tuple[j]];
            if merged.is_empty() {
                continue;
            }
            let mut col_tuple: Vec<usize> = Vec::with_capacity(level);
            col_tuple.extend_from_slice(&tuple[..j - 1]);
            col_tuple.push(0); // placeholder
            col_tuple.extend_from_slice(&tuple[j + 1..]);
            for (u, cu) in merged {
                col_tuple[j - 1] = *u;
                let cb = flat(&col_tuple) * d;
                let val = if sign_neg {
                    field.mul(cu, &minus_one)
                } else {
                    cu.clone()
                };
                for s in 0..d {
                    m.add(rowbase + s, cb + s, val.clone(), field);
                }
            }
        }
        // Trailing term: +/- phi(x_1, ..., x_level) * x_{level+1}.
        let colbase = flat(&tuple[..level]) * d;
        let sign_neg = (level + 1) % 2 == 1;
        for s in 0..d {
            for (r, c) in &tables.right[tuple[level]][s] {
                let val = if sign_neg {
                    field.mul(c, &minus_one)
                } else {
                    c.clone()
                };
                m.add(rowbase + r, colbase + s, val, field);
            }
        }
        if m.nnz() as u128 > entry_guard as u128 {
            return Err(guard_err(m.nnz() as u128));
        }
        // Odometer over dbar^{level+1} tuples.
        let mut pos = level + 1;
        loop {
            if pos == 0 {
                return Ok(finish_rank(m, field, rows as usize, cols as usize));
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < dbar {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

fn finish_rank(
    m: SparseMatrix,
    field: &crate::field::FieldSpec,
    rows: usize,
    cols: usize,
) -> usize {
    if rows * cols <= DENSE_ENTRY_LIMIT && field.characteristic() != 2 {
        // Small dense path reuses the generic echelon code.
        let mut dense = Matrix::zero(rows, cols, field);
        for (r, row) in m.rows_iter().enumerate() {
            for (c, v) in row {
                let cur = dense.at(r, *c as usize).clone();
                dense.set(r, *c as usize, field.add(&cur, v));
            }
        }
        let (rank, _) = rank_kernel(&dense, field);
        rank
    } else {
        sparse_rank(m, field)
    }
}

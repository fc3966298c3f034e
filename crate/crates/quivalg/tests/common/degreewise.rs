//! Independent dimension oracle: a degreewise linear-algebra quotient.
//!
//! Enumerate all free paths of length <= slice_len, span the ideal slice by
//! all products (path) * relation * (path) of total degree <= slice_len, and
//! count surviving classes of degree <= cutoff only. Classes near the slice
//! boundary are not yet saturated by ideal products (an element can vanish
//! only once products a few degrees above it enter the slice), so the cutoff
//! must sit safely below slice_len; callers verify saturation by comparing
//! two consecutive slice lengths.
//!
//! Columns are indexed with degrees above the cutoff first. In an echelon
//! family, rows pivoting inside the trailing (low-degree) block have no
//! support on the leading block, and those rows span exactly the ideal
//! elements of degree <= cutoff, so `low columns - low pivots` is the
//! truncated quotient dimension. No rewriting is involved anywhere.

use quivalg::linalg::SparseMatrix;
use quivalg::presentation::Presentation;
use std::collections::{HashMap, HashSet};

/// Dimensions of the quotient truncated at `cutoff`, per word length
/// (index 0 counts the trivial paths), using an ideal slice of degree
/// `slice_len`.
pub fn degreewise_dimensions(p: &Presentation, cutoff: usize, slice_len: usize) -> Vec<usize> {
    assert!(cutoff < slice_len);
    let field = &p.field;
    let quiver = &p.quiver;

    // Free paths by length: by_len[l] holds words of length l+1.
    let mut by_len: Vec<Vec<Vec<u16>>> = vec![vec![]];
    for a in 0..quiver.arrow_count() as u16 {
        by_len[0].push(vec![a]);
    }
    for l in 1..slice_len {
        let mut next = Vec::new();
        for w in &by_len[l - 1] {
            let end = quiver.arrow(*w.last().unwrap()).target;
            for (idx, _) in quiver.arrows_from(end) {
                let mut ext = w.clone();
                ext.push(idx);
                next.push(ext);
            }
        }
        by_len.push(next);
    }

    // Column order: degrees cutoff+1..=slice_len first, then the low block
    // (trivial paths, then degrees 1..=cutoff).
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    let mut next_col = 0usize;
    for l in (cutoff + 1..=slice_len).rev() {
        for w in &by_len[l - 1] {
            index.insert(w.clone(), next_col);
            next_col += 1;
        }
    }
    let low_start = next_col;
    let trivial_cols = quiver.vertex_count();
    next_col += trivial_cols;
    let mut low_len: Vec<usize> = vec![0; trivial_cols];
    for l in 1..=cutoff {
        for w in &by_len[l - 1] {
            index.insert(w.clone(), next_col);
            low_len.push(l);
            next_col += 1;
        }
    }
    let total = next_col;

    // Ideal slice rows: x * rel * y over all composable pairs within degree.
    let mut rows: Vec<Vec<(usize, quivalg::field::Scalar)>> = Vec::new();
    for rel in &p.relations {
        let rel_max = rel.poly.terms().iter().map(|(w, _)| w.len()).max().unwrap();
        let budget = slice_len.saturating_sub(rel_max);
        let mut lefts: Vec<Vec<u16>> = vec![Vec::new()];
        let mut rights: Vec<Vec<u16>> = vec![Vec::new()];
        for layer in by_len.iter().take(budget) {
            for w in layer {
                let (ws, wt) = quiver.word_endpoints(w).unwrap();
                if wt == rel.source {
                    lefts.push(w.clone());
                }
                if ws == rel.target {
                    rights.push(w.clone());
                }
            }
        }
        for x in &lefts {
            for y in &rights {
                if x.len() + rel_max + y.len() > slice_len {
                    continue;
                }
                let mut row = Vec::with_capacity(rel.poly.terms().len());
                for (w, c) in rel.poly.terms() {
                    let mut full = x.clone();
                    full.extend_from_slice(w);
                    full.extend_from_slice(y);
                    let col = *index.get(&full).expect("product stays within the slice");
                    row.push((col, c.clone()));
                }
                rows.push(row);
            }
        }
    }
    let mut m = SparseMatrix::new(rows.len(), total);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            m.add(r, c, v, field);
        }
    }

    let (_, pivots) = m.rank_with_pivots(field);
    let pivot_set: HashSet<usize> = pivots.iter().map(|&p| p as usize).collect();
    let mut free_by_len = vec![0usize; cutoff + 1];
    for col in low_start..total {
        if !pivot_set.contains(&col) {
            free_by_len[low_len[col - low_start]] += 1;
        }
    }
    free_by_len
}

/// Total truncated dimension; callers should check saturation by comparing
/// slice lengths N and N+1.
pub fn degreewise_dimension(p: &Presentation, cutoff: usize, slice_len: usize) -> usize {
    degreewise_dimensions(p, cutoff, slice_len).iter().sum()
}

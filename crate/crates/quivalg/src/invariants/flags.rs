//! Structural predicates: local, commutative, special biserial, Nakayama,
//! weak symmetry of the socle, and a Frobenius-form certificate.

use crate::algebra::FdAlgebra;
use crate::invariants::{find_frobenius_form, radical_socle, Confidence, FormSearch};
use crate::linalg::Subspace;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub local: bool,
    pub commutative: bool,
    /// At most two arrows in and out of each vertex, and each arrow extends
    /// nontrivially by at most one arrow on each side modulo the relations.
    pub special_biserial: bool,
    /// Every radical layer of every right and left projective has dimension
    /// at most one.
    pub nakayama: bool,
    /// Each indecomposable projective has one-dimensional socle concentrated
    /// at its own vertex.
    pub weakly_symmetric_socle: bool,
    /// A nondegenerate associative bilinear form was found.
    pub frobenius_certificate: bool,
    pub frobenius_confidence: Confidence,
}

pub fn structural_flags(algebra: &FdAlgebra, seed: u64, samples: u32) -> StructuralFlags {
    let local = algebra.vertex_count() == 1;
    let commutative = is_commutative(algebra);
    let special_biserial = special_biserial(algebra);
    let (nakayama, weakly_symmetric_socle) = layered_flags(algebra);
    let (frobenius_certificate, frobenius_confidence) =
        match find_frobenius_form(algebra, seed, samples) {
            FormSearch::Found(_) => (true, Confidence::Exact),
            FormSearch::NotFound(cert) => (false, cert.confidence),
        };
    StructuralFlags {
        local,
        commutative,
        special_biserial,
        nakayama,
        weakly_symmetric_socle,
        frobenius_certificate,
        frobenius_confidence,
    }
}

fn is_commutative(algebra: &FdAlgebra) -> bool {
    let d = algebra.dim();
    for i in 0..d {
        for j in i + 1..d {
            let ij = algebra.basis_product(i, j);
            let ji = algebra.basis_product(j, i);
            if ij != ji {
                return false;
            }
        }
    }
    true
}

fn special_biserial(algebra: &FdAlgebra) -> bool {
    let q = &algebra.quiver;
    for v in 0..q.vertex_count() {
        if q.arrows_from(v).count() > 2 || q.arrows_into(v).count() > 2 {
            return false;
        }
    }
    let arrows: Vec<_> = (0..q.arrow_count() as u16)
        .map(|a| algebra.arrow_element(a))
        .collect();
    for b in &arrows {
        let mut right_exts = 0;
        let mut left_exts = 0;
        for g in &arrows {
            if !algebra.is_zero_element(&algebra.multiply(b, g).unwrap()) {
                right_exts += 1;
            }
            if !algebra.is_zero_element(&algebra.multiply(g, b).unwrap()) {
                left_exts += 1;
            }
        }
        if right_exts > 1 || left_exts > 1 {
            return false;
        }
    }
    true
}

/// Nakayama: all radical layers of all projectives are at most
/// one-dimensional, on both sides. Weakly symmetric socle: soc(e_i A) is
/// one-dimensional and sits at vertex i, for every i.
fn layered_flags(algebra: &FdAlgebra) -> (bool, bool) {
    let field = &algebra.field;
    let s = algebra.vertex_count();
    let rs = match radical_socle(algebra) {
        Ok(rs) => rs,
        Err(_) => return (false, false),
    };

    let weakly = (0..s).all(|i| {
        let total: usize = rs.socle_profile[i].iter().sum();
        total == 1 && rs.socle_profile[i][i] == 1
    });

    // dim of e_i J^k (source projection) and J^k e_i (target projection).
    let graded_dim = |space: &Subspace, vertex: usize, by_source: bool| -> usize {
        let block: Vec<usize> = algebra
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| {
                if by_source {
                    b.source == vertex
                } else {
                    b.target == vertex
                }
            })
            .map(|(k, _)| k)
            .collect();
        if block.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<_>> = space
            .basis_rows()
            .map(|r| block.iter().map(|&k| r[k].clone()).collect())
            .collect();
        Subspace::from_spanning(block.len(), rows, field).dim()
    };

    let full = Subspace::full(algebra.dim(), field);
    let mut nakayama = true;
    'outer: for i in 0..s {
        for by_source in [true, false] {
            // dim e_i J^k for k = 0, 1, ..., ending at zero; successive
            // differences are the radical layer dimensions.
            let mut dims = vec![graded_dim(&full, i, by_source)];
            for jk in &rs.radical_powers {
                dims.push(graded_dim(jk, i, by_source));
            }
            dims.push(0);
            // The top layer (k = 0) is the simple at i; deeper layers must
            // stay at dimension <= 1.
            for w in dims.windows(2).skip(1) {
                if w[0] - w[1] > 1 {
                    nakayama = false;
                    break 'outer;
                }
            }
        }
    }
    (nakayama, weakly)
}

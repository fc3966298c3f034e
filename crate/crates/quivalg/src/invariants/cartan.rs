//! Cartan matrix, determinant, and elementary divisors.

use crate::algebra::FdAlgebra;
use crate::linalg::{bareiss_determinant, smith_normal_form, IntMatrix};
use num_bigint::BigInt;

/// Cartan data: entry (i,j) counts basis words from vertex i to vertex j,
/// which is the dimension of e_i A e_j. Convention: rows are sources. The
/// transposed convention changes neither |det| nor the elementary divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub matrix: IntMatrix,
    pub determinant: BigInt,
    pub elementary_divisors: Vec<BigInt>,
}

pub fn cartan(algebra: &FdAlgebra) -> CartanData {
    let s = algebra.vertex_count();
    let mut matrix = IntMatrix::zero(s, s);
    for b in &algebra.basis {
        let v = matrix.at(b.source, b.target) + 1;
        matrix.set(b.source, b.target, v);
    }
    let determinant = bareiss_determinant(&matrix).expect("cartan matrix is square");
    let elementary_divisors = smith_normal_form(&matrix).expect("cartan matrix is square");
    CartanData {
        matrix,
        determinant,
        elementary_divisors,
    }
}

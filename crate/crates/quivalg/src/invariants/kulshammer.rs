//! Külshammer tower: T_n(A) = {x : x^{p^n} in [A,A]} in characteristic p.
//!
//! The p^n-th power map descends to a Frobenius-semilinear map on A/[A,A]
//! because (x+y)^{p^n} = x^{p^n} + y^{p^n} modulo commutators; T_n/[A,A] is
//! its kernel, computed exactly via restriction of scalars.

use crate::algebra::FdAlgebra;
use crate::invariants::{commutator_space, InvariantError};
use crate::linalg::{semilinear_kernel, Matrix, Subspace};

#[derive(Debug, Clone)]
pub struct KulshammerTower {
    pub characteristic: u64,
    /// dims[n-1] = dim T_n(A)/[A,A] for n = 1..=n_max.
    pub dims: Vec<usize>,
    pub commutator_dim: usize,
    /// T_n(A) as subspaces of A, same indexing as `dims`.
    pub subspaces: Vec<Subspace>,
}

pub fn kulshammer_tower(
    algebra: &FdAlgebra,
    n_max: u32,
) -> Result<KulshammerTower, InvariantError> {
    let p = algebra.field.characteristic();
    if p == 0 {
        return Err(InvariantError::CharacteristicZero("T_n"));
    }
    let field = &algebra.field;
    let d = algebra.dim();
    let commutators = commutator_space(algebra);
    let c = commutators.dim();

    // Quotient coordinates: the non-pivot columns of [A,A].
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; d];
        for &pc in commutators.pivots() {
            v[pc] = true;
        }
        v
    };
    let free_cols: Vec<usize> = (0..d).filter(|&i| !pivot_set[i]).collect();
    let qdim = d - c;
    let project = |x: &[crate::field::Scalar]| -> Vec<crate::field::Scalar> {
        let reduced = commutators.reduce(x, field);
        free_cols.iter().map(|&i| reduced[i].clone()).collect()
    };

    let mut dims = Vec::with_capacity(n_max as usize);
    let mut subspaces = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        // Column f of the quotient map: class of (b_f)^{p^n}.
        let mut m = Matrix::zero(qdim, qdim, field);
        let mut exps = 1u64;
        for _ in 0..n {
            exps = exps.saturating_mul(p);
        }
        for (col, &f) in free_cols.iter().enumerate() {
            let powered = algebra.power(&algebra.basis_element(f), exps)?;
            for (row, v) in project(&powered.coeffs).into_iter().enumerate() {
                m.set(row, col, v);
            }
        }
        let kernel = semilinear_kernel(&m, n, field).expect("positive characteristic");
        dims.push(kernel.dim());
        // Lift: T_n = [A,A] + lifted kernel vectors.
        let mut rows: Vec<Vec<_>> = commutators.basis_rows().map(|r| r.to_vec()).collect();
        for kv in kernel.basis_rows() {
            let mut lifted = vec![field.zero(); d];
            for (j, &fc) in free_cols.iter().enumerate() {
                lifted[fc] = kv[j].clone();
            }
            rows.push(lifted);
        }
        subspaces.push(Subspace::from_spanning(d, rows, field));
    }
    Ok(KulshammerTower {
        characteristic: p,
        dims,
        commutator_dim: c,
        subspaces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::rewrite::complete_rewriting;

    fn build(text: &str) -> FdAlgebra {
        let p = Presentation::parse(text).unwrap();
        FdAlgebra::construct(complete_rewriting(&p, 30).unwrap()).unwrap()
    }

    #[test]
    fn dual_numbers_over_gf2() {
        // GF(2)[x]/(x^2): (a+bx)^2 = a^2, so T_1 = span{x} and
        // dim T_1/[A,A] = 1 ([A,A] = 0). Checked against enumerating all
        // four elements.
        let a = build("field char=2\nvertex v\narrow x v v\nrel x*x\n");
        let t = kulshammer_tower(&a, 3).unwrap();
        assert_eq!(t.commutator_dim, 0);
        assert_eq!(t.dims, vec![1, 1, 1]);
        let f = &a.field;
        assert!(t.subspaces[0].contains(&[f.zero(), f.one()], f));
        assert_eq!(t.subspaces[0].dim(), 1);
    }

    #[test]
    fn semisimple_product_has_trivial_tower() {
        // GF(p) x GF(p): the p-th power map permutes nothing to zero.
        let a = build("field char=3\nvertex v\nvertex w\n");
        let t = kulshammer_tower(&a, 2).unwrap();
        assert_eq!(t.dims, vec![0, 0]);
    }

    #[test]
    fn characteristic_zero_rejected() {
        let a = build("field char=0\nvertex v\n");
        assert!(matches!(
            kulshammer_tower(&a, 1),
            Err(InvariantError::CharacteristicZero(_))
        ));
    }

    #[test]
    fn tower_is_monotone() {
        let a = build(
            "field char=2\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - b*a\n",
        );
        let t = kulshammer_tower(&a, 3).unwrap();
        assert!(t.dims[0] <= t.dims[1] && t.dims[1] <= t.dims[2]);
        assert!(t.subspaces[0].contains_subspace(&commutator_space(&a), &a.field));
        assert!(t.subspaces[1].contains_subspace(&t.subspaces[0], &a.field));
    }
}

//! Commutator subspace [A,A] and the center Z(A).

use crate::algebra::{Element, FdAlgebra};
use crate::linalg::{rank_kernel, Matrix, Subspace};

/// Echelonized span of all commutators of basis pairs.
pub fn commutator_space(algebra: &FdAlgebra) -> Subspace {
    let d = algebra.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c = algebra
                .commutator(&algebra.basis_element(i), &algebra.basis_element(j))
                .expect("basis elements have matching dimension");
            if !algebra.is_zero_element(&c) {
                rows.push(c.coeffs);
            }
        }
    }
    Subspace::from_spanning(d, rows, &algebra.field)
}

/// Center as the kernel of the stacked maps x -> xg - gx over all arrow and
/// idempotent generators g.
pub fn center(algebra: &FdAlgebra) -> Subspace {
    let d = algebra.dim();
    let field = &algebra.field;
    let mut generators: Vec<Element> = (0..algebra.vertex_count())
        .map(|v| algebra.basis_element(v))
        .collect();
    for arrow in 0..algebra.quiver.arrow_count() as u16 {
        generators.push(algebra.arrow_element(arrow));
    }
    let mut stacked = Matrix::zero(generators.len() * d, d, field);
    for (gi, g) in generators.iter().enumerate() {
        for j in 0..d {
            let bj = algebra.basis_element(j);
            let xg = algebra.multiply(&bj, g).unwrap();
            let gx = algebra.multiply(g, &bj).unwrap();
            for r in 0..d {
                stacked.set(gi * d + r, j, field.sub(&xg.coeffs[r], &gx.coeffs[r]));
            }
        }
    }
    let (_, ker) = rank_kernel(&stacked, field);
    ker
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

    fn a_lambda_q(lambda: i64) -> FdAlgebra {
        build(&format!(
            "field char=0\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - {lambda}*b*a\n"
        ))
    }

    #[test]
    fn a2_commutator_is_spanned_by_ba() {
        // Expanding all sixteen basis commutators by hand leaves only
        // multiples of b*a: [a,b] = (2-1) b*a.
        let a = a_lambda_q(2);
        let c = commutator_space(&a);
        assert_eq!(c.dim(), 1);
        let f = &a.field;
        let mut ba = vec![f.zero(); 4];
        ba[3] = f.one();
        assert!(c.contains(&ba, f));
    }

    #[test]
    fn a1_is_commutative() {
        // lambda = 1 makes the two loops commute.
        let a = a_lambda_q(1);
        assert_eq!(commutator_space(&a).dim(), 0);
        assert_eq!(center(&a).dim(), 4);
    }

    #[test]
    fn a2_center_is_one_and_ba() {
        let a = a_lambda_q(2);
        let z = center(&a);
        assert_eq!(z.dim(), 2);
        let f = &a.field;
        let one = a.one_element();
        assert!(z.contains(&one.coeffs, f));
        let mut ba = vec![f.zero(); 4];
        ba[3] = f.one();
        assert!(z.contains(&ba, f));
    }

    #[test]
    fn product_of_fields_center_is_everything() {
        let a = build("field char=0\nvertex v\nvertex w\n");
        assert_eq!(center(&a).dim(), 2);
        assert_eq!(commutator_space(&a).dim(), 0);
    }
}

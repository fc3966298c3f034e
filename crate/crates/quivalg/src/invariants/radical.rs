//! Radical powers, Loewy length, and socle structure.

use crate::algebra::{Element, FdAlgebra};
use crate::invariants::InvariantError;
use crate::linalg::{rank_kernel, Matrix, Subspace};

#[derive(Debug, Clone)]
pub struct RadicalSocle {
    /// J^1, J^2, ... down to the last nonzero power.
    pub radical_powers: Vec<Subspace>,
    /// Right socle {x : xJ = 0}.
    pub socle: Subspace,
    /// Left socle {x : Jx = 0}.
    pub left_socle: Subspace,
    /// Smallest N with J^N = 0.
    pub loewy_length: usize,
    /// profile[i][j] = dim of the target-j component of soc(e_i A).
    pub socle_profile: Vec<Vec<usize>>,
}

pub fn radical_socle(algebra: &FdAlgebra) -> Result<RadicalSocle, InvariantError> {
    let d = algebra.dim();
    let s = algebra.vertex_count();
    let field = &algebra.field;

    // J = span of the nontrivial basis words; normal forms never produce
    // trivial paths, so this is a two-sided ideal.
    let radical_rows: Vec<Vec<_>> = (s..d).map(|i| algebra.basis_element(i).coeffs).collect();
    let radical = Subspace::from_spanning(d, radical_rows, field);

    let mut powers = Vec::new();
    let mut current = radical.clone();
    let mut loewy = 1usize;
    while current.dim() > 0 {
        powers.push(current.clone());
        let next_rows: Vec<Vec<_>> = radical
            .basis_rows()
            .flat_map(|x| {
                let xe = Element { coeffs: x.to_vec() };
                current
                    .basis_rows()
                    .map(|y| {
                        algebra
                            .multiply(&xe, &Element { coeffs: y.to_vec() })
                            .unwrap()
                            .coeffs
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let next = Subspace::from_spanning(d, next_rows, field);
        if next.dim() >= current.dim() {
            return Err(InvariantError::RadicalNotNilpotent(next.dim()));
        }
        current = next;
        loewy += 1;
        if loewy > d + 1 {
            return Err(InvariantError::RadicalNotNilpotent(current.dim()));
        }
    }

    let socle = annihilator_kernel(algebra, Side::Right);
    let left_socle = annihilator_kernel(algebra, Side::Left);

    // The socle is graded by (source, target): project basis rows of the
    // right socle onto each coordinate block and take ranks.
    let mut socle_profile = vec![vec![0usize; s]; s];
    for i in 0..s {
        for j in 0..s {
            let block: Vec<usize> = algebra
                .basis
                .iter()
                .enumerate()
                .filter(|(_, b)| b.source == i && b.target == j)
                .map(|(k, _)| k)
                .collect();
            if block.is_empty() {
                continue;
            }
            let rows: Vec<Vec<_>> = socle
                .basis_rows()
                .map(|r| block.iter().map(|&k| r[k].clone()).collect())
                .collect();
            socle_profile[i][j] = Subspace::from_spanning(block.len(), rows, field).dim();
        }
    }

    Ok(RadicalSocle {
        radical_powers: powers,
        socle,
        left_socle,
        loewy_length: loewy,
        socle_profile,
    })
}

enum Side {
    Left,
    Right,
}

/// Kernel of the stacked multiplications by all arrow generators on the
/// chosen side.
fn annihilator_kernel(algebra: &FdAlgebra, side: Side) -> Subspace {
    let d = algebra.dim();
    let field = &algebra.field;
    let arrows: Vec<Element> = (0..algebra.quiver.arrow_count() as u16)
        .map(|a| algebra.arrow_element(a))
        .collect();
    if arrows.is_empty() {
        return Subspace::full(d, field);
    }
    let mut stacked = Matrix::zero(arrows.len() * d, d, field);
    for (ai, a) in arrows.iter().enumerate() {
        for j in 0..d {
            let bj = algebra.basis_element(j);
            let prod = match side {
                Side::Right => algebra.multiply(&bj, a).unwrap(),
                Side::Left => algebra.multiply(a, &bj).unwrap(),
            };
            for r in 0..d {
                stacked.set(ai * d + r, j, prod.coeffs[r].clone());
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

    #[test]
    fn semisimple_loewy_one() {
        let a = build("field char=0\nvertex v\nvertex w\n");
        let r = radical_socle(&a).unwrap();
        assert_eq!(r.loewy_length, 1);
        assert!(r.radical_powers.is_empty());
        assert_eq!(r.socle.dim(), 2);
    }

    #[test]
    fn dual_numbers_loewy_two() {
        // GF(3)[x]/(x^2): one radical step, socle spanned by x.
        let a = build("field char=3\nvertex v\narrow x v v\nrel x*x\n");
        let r = radical_socle(&a).unwrap();
        assert_eq!(r.loewy_length, 2);
        assert_eq!(r.socle.dim(), 1);
        let f = &a.field;
        assert!(r.socle.contains(&[f.zero(), f.one()], f));
    }

    #[test]
    fn a2_loewy_three() {
        // J = {a, b, ba}, J^2 = {ba}, J^3 = 0.
        let a = build(
            "field char=0\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - 2*b*a\n",
        );
        let r = radical_socle(&a).unwrap();
        assert_eq!(r.loewy_length, 3);
        assert_eq!(r.radical_powers[0].dim(), 3);
        assert_eq!(r.radical_powers[1].dim(), 1);
        assert_eq!(r.socle_profile, vec![vec![1]]);
    }

    #[test]
    fn one_arrow_socle_sits_at_target() {
        // soc(e1 A) = span{f} concentrated at vertex 2.
        let a = build("field char=0\nvertex v\nvertex w\narrow f v w\n");
        let r = radical_socle(&a).unwrap();
        assert_eq!(r.loewy_length, 2);
        assert_eq!(r.socle_profile[0], vec![0, 1]);
        assert_eq!(r.socle_profile[1], vec![0, 1]);
    }
}

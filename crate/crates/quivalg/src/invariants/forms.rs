//! Symmetrizing bilinear forms and orthogonal quotients.
//!
//! A linear functional f gives the associative form (x, y) -> f(xy). The
//! form is symmetric iff f kills [A,A]; the algebra is symmetric iff some
//! such f is nondegenerate. The search space is therefore the annihilator of
//! [A,A] in the dual. Candidates: the sum of socle coordinate functionals
//! first, then an exhaustive sweep when the space is small over a finite
//! field, otherwise seeded random combinations. A miss is reported with an
//! exact or Schwartz-Zippel-style probabilistic certificate, plus a probe
//! over a quadratic extension for very small fields.

use crate::algebra::FdAlgebra;
use crate::field::{FieldSpec, Scalar};
use crate::invariants::{
    center, commutator_space, kulshammer_tower, radical_socle, InvariantError,
};
use crate::linalg::{rank_kernel, Matrix, Subspace};
use crate::prng::SplitMix64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Confidence {
    /// Every candidate in the search space over the base field was tested.
    Exact,
    /// Seeded random search; the payload is the number of samples drawn.
    Probabilistic(u32),
}

#[derive(Debug, Clone)]
pub struct BilinearFormData {
    /// Coefficients of the functional on the dual basis.
    pub functional: Vec<Scalar>,
    /// gram[i][j] = f(b_i * b_j).
    pub gram: Matrix,
    pub symmetric: bool,
    pub nondegenerate: bool,
}

#[derive(Debug, Clone)]
pub struct NotFoundCertificate {
    pub confidence: Confidence,
    /// Whether a nondegenerate form exists over a quadratic extension
    /// (probed only for base fields with fewer than 16 elements).
    pub extension_witness: Option<bool>,
}

#[derive(Debug, Clone)]
pub enum FormSearch {
    Found(BilinearFormData),
    NotFound(NotFoundCertificate),
}

impl FormSearch {
    pub fn found(&self) -> Option<&BilinearFormData> {
        match self {
            FormSearch::Found(f) => Some(f),
            FormSearch::NotFound(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.found().is_some()
    }

    /// The search was exhaustive, so the verdict is exact over the base
    /// field.
    pub fn is_exact(&self) -> bool {
        match self {
            FormSearch::Found(_) => true,
            FormSearch::NotFound(c) => c.confidence == Confidence::Exact,
        }
    }
}

/// Exhaustive sweeps are attempted when |K|^dim(candidate space) stays below
/// this bound.
const EXHAUSTIVE_LIMIT: u64 = 65_536;

/// Search for a symmetrizing form: symmetric (kills [A,A]) and
/// nondegenerate.
pub fn find_symmetrizing_form(algebra: &FdAlgebra, seed: u64, samples: u32) -> FormSearch {
    let commutators = commutator_space(algebra);
    let candidate_space = annihilator(algebra, &commutators);
    search(algebra, &candidate_space, seed, samples, true)
}

/// Search the full dual space for any nondegenerate associative form
/// (associativity of (x,y) -> f(xy) is automatic).
pub fn find_frobenius_form(algebra: &FdAlgebra, seed: u64, samples: u32) -> FormSearch {
    let space = Subspace::full(algebra.dim(), &algebra.field);
    search(algebra, &space, seed, samples, false)
}

/// Functionals annihilating the given subspace: kernel of its basis matrix.
fn annihilator(algebra: &FdAlgebra, space: &Subspace) -> Subspace {
    let field = &algebra.field;
    let d = algebra.dim();
    if space.dim() == 0 {
        return Subspace::full(d, field);
    }
    let rows: Vec<Vec<Scalar>> = space.basis_rows().map(|r| r.to_vec()).collect();
    let m = Matrix::from_rows(rows, d, field);
    let (_, ker) = rank_kernel(&m, field);
    ker
}

fn search(
    algebra: &FdAlgebra,
    candidate_space: &Subspace,
    seed: u64,
    samples: u32,
    require_symmetric: bool,
) -> FormSearch {
    let field = &algebra.field;
    let d = algebra.dim();
    let m = candidate_space.dim();
    if m == 0 {
        return FormSearch::NotFound(NotFoundCertificate {
            confidence: Confidence::Exact,
            extension_witness: Some(false),
        });
    }

    // Candidate 1: sum of socle coordinate functionals, when admissible.
    if let Ok(rs) = radical_socle(algebra) {
        let mut f = vec![field.zero(); d];
        for row in rs.socle.basis_rows() {
            for (i, v) in row.iter().enumerate() {
                f[i] = field.add(&f[i], v);
            }
        }
        if candidate_space.contains(&f, field) {
            if let Some(data) = evaluate(algebra, field, &f, require_symmetric) {
                return FormSearch::Found(data);
            }
        }
    }

    // Exhaustive sweep over small finite candidate spaces.
    if let Some(order) = field.order() {
        let mut total = 1u64;
        let mut feasible = true;
        for _ in 0..m {
            total = match total.checked_mul(order) {
                Some(t) if t <= EXHAUSTIVE_LIMIT => t,
                _ => {
                    feasible = false;
                    break;
                }
            };
        }
        if feasible {
            for code in 1..total {
                let mut rem = code;
                let mut f = vec![field.zero(); d];
                for row in candidate_space.basis_rows() {
                    let digit = Scalar::Fin(rem % order);
                    rem /= order;
                    if field.is_zero(&digit) {
                        continue;
                    }
                    for (i, v) in row.iter().enumerate() {
                        f[i] = field.add(&f[i], &field.mul(&digit, v));
                    }
                }
                if let Some(data) = evaluate(algebra, field, &f, require_symmetric) {
                    return FormSearch::Found(data);
                }
            }
            return FormSearch::NotFound(NotFoundCertificate {
                confidence: Confidence::Exact,
                extension_witness: extension_probe(algebra, candidate_space, seed, samples),
            });
        }
    }

    // Seeded random combinations over the base field.
    let mut rng = SplitMix64::new(seed);
    let rational_range = 2 * d as u64 + 1;
    for _ in 0..samples {
        let mut f = vec![field.zero(); d];
        let mut nonzero = false;
        for row in candidate_space.basis_rows() {
            let c = field.sample(&mut rng, rational_range);
            if field.is_zero(&c) {
                continue;
            }
            nonzero = true;
            for (i, v) in row.iter().enumerate() {
                f[i] = field.add(&f[i], &field.mul(&c, v));
            }
        }
        if !nonzero {
            continue;
        }
        if let Some(data) = evaluate(algebra, field, &f, require_symmetric) {
            return FormSearch::Found(data);
        }
    }
    FormSearch::NotFound(NotFoundCertificate {
        confidence: Confidence::Probabilistic(samples),
        extension_witness: extension_probe(algebra, candidate_space, seed, samples),
    })
}

/// Gram matrix of the functional; `Some` iff it passes the symmetry
/// requirement and is nondegenerate.
fn evaluate(
    algebra: &FdAlgebra,
    field: &FieldSpec,
    functional: &[Scalar],
    require_symmetric: bool,
) -> Option<BilinearFormData> {
    let d = algebra.dim();
    let mut gram = Matrix::zero(d, d, field);
    for i in 0..d {
        for j in 0..d {
            let mut acc = field.zero();
            for (k, c) in algebra.basis_product(i, j) {
                if !field.is_zero(&functional[*k]) {
                    acc = field.add(&acc, &field.mul(c, &functional[*k]));
                }
            }
            gram.set(i, j, acc);
        }
    }
    let symmetric = (0..d).all(|i| (i..d).all(|j| gram.at(i, j) == gram.at(j, i)));
    if require_symmetric && !symmetric {
        return None;
    }
    let (rank, _) = rank_kernel(&gram, field);
    let nondegenerate = rank == d;
    if !nondegenerate {
        return None;
    }
    Some(BilinearFormData {
        functional: functional.to_vec(),
        gram,
        symmetric,
        nondegenerate,
    })
}

/// Does a nondegenerate candidate exist over a quadratic extension? Probed
/// only for very small base fields, where base-field sampling alone is
/// inconclusive about existence over larger fields.
fn extension_probe(
    algebra: &FdAlgebra,
    candidate_space: &Subspace,
    seed: u64,
    samples: u32,
) -> Option<bool> {
    let field = &algebra.field;
    let order = field.order()?;
    if order >= 16 {
        return None;
    }
    let (big, gen_image) = field.quadratic_extension().ok()?;
    let d = algebra.dim();
    let m = candidate_space.dim();
    // Embed the candidate basis and the structure constants once.
    let basis_big: Vec<Vec<Scalar>> = candidate_space
        .basis_rows()
        .map(|r| r.iter().map(|v| field.embed(v, &big, &gen_image)).collect())
        .collect();
    let mut table_big: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            table_big.push(
                algebra
                    .basis_product(i, j)
                    .iter()
                    .map(|(k, c)| (*k, field.embed(c, &big, &gen_image)))
                    .collect(),
            );
        }
    }
    let mut rng = SplitMix64::new(seed ^ 0x5eed_ba5e);
    for _ in 0..samples.max(64) {
        let mut f = vec![big.zero(); d];
        let mut nonzero = false;
        for row in basis_big.iter().take(m) {
            let c = big.sample(&mut rng, 0);
            if big.is_zero(&c) {
                continue;
            }
            nonzero = true;
            for (i, v) in row.iter().enumerate() {
                f[i] = big.add(&f[i], &big.mul(&c, v));
            }
        }
        if !nonzero {
            continue;
        }
        let mut gram = Matrix::zero(d, d, &big);
        for i in 0..d {
            for j in 0..d {
                let mut acc = big.zero();
                for (k, c) in &table_big[i * d + j] {
                    acc = big.add(&acc, &big.mul(c, &f[*k]));
                }
                gram.set(i, j, acc);
            }
        }
        let (rank, _) = rank_kernel(&gram, &big);
        if rank == d {
            return Some(true);
        }
    }
    Some(false)
}

/// dim Z(A) - dim T_n(A)^perp for n = 1..=n_max, where the orthogonal is
/// taken against the given symmetrizing form. T_n contains [A,A], so its
/// orthogonal lands inside [A,A]^perp = Z(A); that containment is verified.
pub fn orthogonal_quotient_dims(
    algebra: &FdAlgebra,
    form: &BilinearFormData,
    n_max: u32,
) -> Result<Vec<usize>, InvariantError> {
    if !form.symmetric {
        return Err(InvariantError::FormRejected("form is not symmetric"));
    }
    if !form.nondegenerate {
        return Err(InvariantError::FormRejected("form is degenerate"));
    }
    let field = &algebra.field;
    let d = algebra.dim();
    let tower = kulshammer_tower(algebra, n_max)?;
    let z = center(algebra);
    let mut out = Vec::with_capacity(n_max as usize);
    for t_n in &tower.subspaces {
        let perp = if t_n.dim() == 0 {
            Subspace::full(d, field)
        } else {
            // Row per T_n basis vector t: y -> f(y * t).
            let mut m = Matrix::zero(t_n.dim(), d, field);
            for (r, t) in t_n.basis_rows().enumerate() {
                let t_el = crate::algebra::Element { coeffs: t.to_vec() };
                for j in 0..d {
                    let prod = algebra.multiply(&algebra.basis_element(j), &t_el)?;
                    let mut acc = field.zero();
                    for (k, c) in prod.coeffs.iter().enumerate() {
                        if !field.is_zero(c) && !field.is_zero(&form.functional[k]) {
                            acc = field.add(&acc, &field.mul(c, &form.functional[k]));
                        }
                    }
                    m.set(r, j, acc);
                }
            }
            let (_, ker) = rank_kernel(&m, field);
            ker
        };
        if !z.contains_subspace(&perp, field) {
            return Err(InvariantError::FormRejected(
                "orthogonal of T_n escapes the center; form is not associative-symmetric",
            ));
        }
        out.push(z.dim() - perp.dim());
    }
    Ok(out)
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
    fn dual_numbers_gf3_form_and_gram() {
        // GF(3)[x]/(x^2): the coefficient-of-x functional has Gram
        // [[0,1],[1,0]] by the hand multiplication table.
        let a = build("field char=3\nvertex v\narrow x v v\nrel x*x\n");
        let f = &a.field;
        let found = find_symmetrizing_form(&a, 0, 64);
        let data = found.found().expect("symmetric algebra");
        assert!(data.symmetric && data.nondegenerate);
        // The socle candidate is exactly coefficient-of-x.
        assert_eq!(data.functional, vec![f.zero(), f.one()]);
        assert_eq!(data.gram.at(0, 0), &f.zero());
        assert_eq!(data.gram.at(0, 1), &f.one());
        assert_eq!(data.gram.at(1, 0), &f.one());
    }

    #[test]
    fn a_lambda_2_has_no_symmetrizing_form() {
        // f must kill [A,A] = span{ba}, but ba spans the socle, so every
        // symmetric form is degenerate. The sweep is exhaustive over GF(5).
        let a = build(
            "field char=5\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - 2*b*a\n",
        );
        match find_symmetrizing_form(&a, 0, 64) {
            FormSearch::NotFound(cert) => {
                assert_eq!(cert.confidence, Confidence::Exact);
            }
            FormSearch::Found(_) => panic!("A(2) is not symmetric"),
        }
    }

    #[test]
    fn a_lambda_1_is_symmetric() {
        let a = build(
            "field char=5\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - b*a\n",
        );
        assert!(find_symmetrizing_form(&a, 0, 64).is_found());
    }

    #[test]
    fn frobenius_search_over_full_dual() {
        // The one-arrow path algebra is not self-injective: no functional
        // makes f(xy) nondegenerate.
        let a = build("field char=2\nvertex v\nvertex w\narrow f v w\n");
        assert!(!find_frobenius_form(&a, 0, 64).is_found());
        // Dual numbers are Frobenius.
        let b = build("field char=2\nvertex v\narrow x v v\nrel x*x\n");
        let res = find_frobenius_form(&b, 0, 64);
        assert!(res.is_found());
        assert!(res.is_exact());
    }

    #[test]
    fn dual_numbers_gf2_orthogonal_quotient() {
        // T_1 = span{x} = T_1^perp, Z = A: quotient dimension 1.
        let a = build("field char=2\nvertex v\narrow x v v\nrel x*x\n");
        let form = find_symmetrizing_form(&a, 0, 64).found().unwrap().clone();
        let dims = orthogonal_quotient_dims(&a, &form, 2).unwrap();
        assert_eq!(dims, vec![1, 1]);
    }

    #[test]
    fn degenerate_form_rejected() {
        let a = build("field char=2\nvertex v\narrow x v v\nrel x*x\n");
        let f = &a.field;
        let bad = BilinearFormData {
            functional: vec![f.one(), f.zero()],
            gram: Matrix::identity(2, f),
            symmetric: true,
            nondegenerate: false,
        };
        assert!(matches!(
            orthogonal_quotient_dims(&a, &bad, 1),
            Err(InvariantError::FormRejected(_))
        ));
    }
}

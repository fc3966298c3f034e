//! Finite-dimensional algebras from completed rewriting systems: basis,
//! structure constants, elements, multiplication.

use crate::field::{FieldSpec, Scalar};
use crate::poly::{Poly, Word};
use crate::quiver::{PathWord, Quiver};
use crate::rewrite::{CompletionError, RewritingSystem};
use std::collections::HashMap;

/// A basis path of the algebra: a trivial path at a vertex or an irreducible
/// arrow word, with cached endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisWord {
    pub word: Word,
    pub source: usize,
    pub target: usize,
}

/// Finite-dimensional algebra presented by basis words and structure
/// constants. Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct FdAlgebra {
    pub field: FieldSpec,
    pub quiver: Quiver,
    /// Trivial paths first (one per vertex, in vertex order), then the
    /// irreducible words in the monomial order.
    pub basis: Vec<BasisWord>,
    /// table[i * dim + j] = expansion of basis[i] * basis[j], sparse.
    table: Vec<Vec<(usize, Scalar)>>,
    rewriting: RewritingSystem,
}

/// Coefficient vector over an algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub coeffs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error("element length {0} does not match algebra dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("word does not compose in the quiver")]
    NonComposable,
}

impl FdAlgebra {
    /// Build the algebra of a complete rewriting system: the basis is the
    /// trivial paths plus all irreducible words, and products are normal
    /// forms of concatenations.
    pub fn construct(rs: RewritingSystem) -> Result<Self, AlgebraError> {
        if !rs.complete {
            return Err(AlgebraError::Completion(CompletionError::Incomplete));
        }
        let field = rs.field.clone();
        let quiver = rs.quiver.clone();
        let s = quiver.vertex_count();
        let mut basis: Vec<BasisWord> = Vec::with_capacity(s + rs.irreducible_words.len());
        for v in 0..s {
            basis.push(BasisWord {
                word: Vec::new(),
                source: v,
                target: v,
            });
        }
        for w in &rs.irreducible_words {
            let (source, target) = quiver.word_endpoints(w).expect("irreducible words compose");
            basis.push(BasisWord {
                word: w.clone(),
                source,
                target,
            });
        }
        let dim = basis.len();
        let index: HashMap<&[u16], usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.word.is_empty())
            .map(|(i, b)| (b.word.as_slice(), i))
            .collect();

        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let (bi, bj) = (&basis[i], &basis[j]);
                if bi.target != bj.source {
                    continue; // product is zero
                }
                let entry: Vec<(usize, Scalar)> = if bi.word.is_empty() {
                    vec![(j, field.one())]
                } else if bj.word.is_empty() {
                    vec![(i, field.one())]
                } else {
                    let mut concat = bi.word.clone();
                    concat.extend_from_slice(&bj.word);
                    let nf = rs.normal_form_poly(Poly::monomial(concat, field.one()));
                    nf.terms()
                        .iter()
                        .map(|(w, c)| {
                            let idx = *index
                                .get(w.as_slice())
                                .unwrap_or_else(|| panic!("normal form produced non-basis word"));
                            (idx, c.clone())
                        })
                        .collect()
                };
                table[i * dim + j] = entry;
            }
        }
        Ok(FdAlgebra {
            field,
            quiver,
            basis,
            table,
            rewriting: rs,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn rewriting(&self) -> &RewritingSystem {
        &self.rewriting
    }

    /// Sparse expansion of basis[i] * basis[j].
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn zero_element(&self) -> Element {
        Element {
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    /// The identity: sum of all vertex idempotents.
    pub fn one_element(&self) -> Element {
        let mut e = self.zero_element();
        for v in 0..self.vertex_count() {
            e.coeffs[v] = self.field.one();
        }
        e
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero_element();
        e.coeffs[i] = self.field.one();
        e
    }

    /// Index of the basis element for an arrow, when the arrow itself is
    /// irreducible; otherwise its normal form as an element.
    pub fn arrow_element(&self, arrow: u16) -> Element {
        let nf = self
            .rewriting
            .normal_form_poly(Poly::monomial(vec![arrow], self.field.one()));
        self.element_from_poly(&nf)
    }

    fn element_from_poly(&self, poly: &Poly) -> Element {
        let mut e = self.zero_element();
        for (w, c) in poly.terms() {
            let idx = self
                .basis
                .iter()
                .position(|b| &b.word == w)
                .expect("poly supported on basis words");
            e.coeffs[idx] = c.clone();
        }
        e
    }

    /// Bilinear product via the structure constants.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let dim = self.dim();
        if x.coeffs.len() != dim {
            return Err(AlgebraError::DimensionMismatch(x.coeffs.len(), dim));
        }
        if y.coeffs.len() != dim {
            return Err(AlgebraError::DimensionMismatch(y.coeffs.len(), dim));
        }
        let f = &self.field;
        let mut out = self.zero_element();
        for (i, ci) in x.coeffs.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, cj) in y.coeffs.iter().enumerate() {
                if f.is_zero(cj) {
                    continue;
                }
                let cij = f.mul(ci, cj);
                for (k, c) in self.basis_product(i, j) {
                    out.coeffs[*k] = f.add(&out.coeffs[*k], &f.mul(&cij, c));
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a formal sum of path words (trivial paths allowed) as
    /// an element of the algebra.
    pub fn normal_form(&self, terms: &[(Scalar, PathWord)]) -> Result<Element, AlgebraError> {
        let f = &self.field;
        let mut out = self.zero_element();
        let mut nontrivial: Vec<(Word, Scalar)> = Vec::new();
        for (c, pw) in terms {
            if pw.is_trivial() {
                if pw.source >= self.vertex_count() {
                    return Err(AlgebraError::NonComposable);
                }
                out.coeffs[pw.source] = f.add(&out.coeffs[pw.source], c);
            } else {
                if self.quiver.word_endpoints(&pw.arrows).is_none() {
                    return Err(AlgebraError::NonComposable);
                }
                nontrivial.push((pw.arrows.clone(), c.clone()));
            }
        }
        let nf = self
            .rewriting
            .normal_form_poly(Poly::from_terms(nontrivial, f));
        let reduced = self.element_from_poly(&nf);
        for (o, r) in out.coeffs.iter_mut().zip(&reduced.coeffs) {
            *o = f.add(o, r);
        }
        Ok(out)
    }

    /// x*y - y*x.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let xy = self.multiply(x, y)?;
        let yx = self.multiply(y, x)?;
        Ok(Element {
            coeffs: xy
                .coeffs
                .iter()
                .zip(&yx.coeffs)
                .map(|(a, b)| self.field.sub(a, b))
                .collect(),
        })
    }

    pub fn is_zero_element(&self, x: &Element) -> bool {
        x.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// x^n by binary powering.
    pub fn power(&self, x: &Element, n: u64) -> Result<Element, AlgebraError> {
        let mut acc = self.one_element();
        let mut base = x.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base)?;
            }
            base = self.multiply(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// JSON document: field, vertices, arrows, basis words (as arrow-name
    /// lists with endpoints), and sparse structure-constant triples.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let f = &self.field;
        let basis: Vec<_> = self
            .basis
            .iter()
            .map(|b| {
                json!({
                    "source": self.quiver.vertices[b.source],
                    "target": self.quiver.vertices[b.target],
                    "arrows": b.word.iter().map(|&i| self.quiver.arrow(i).name.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut constants = Vec::new();
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in self.basis_product(i, j) {
                    constants.push(json!([i, j, k, f.format_scalar(c)]));
                }
            }
        }
        json!({
            "field": {
                "characteristic": f.characteristic(),
                "degree": f.degree(),
                "modulus": f.modulus(),
            },
            "vertices": self.quiver.vertices,
            "arrows": self.quiver.arrows.iter().map(|a| {
                json!({"name": a.name, "source": self.quiver.vertices[a.source], "target": self.quiver.vertices[a.target]})
            }).collect::<Vec<_>>(),
            "basis": basis,
            "structure_constants": constants,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::rewrite::complete_rewriting;

    pub(crate) fn build(text: &str) -> FdAlgebra {
        let p = Presentation::parse(text).unwrap();
        let rs = complete_rewriting(&p, 30).unwrap();
        FdAlgebra::construct(rs).unwrap()
    }

    fn a2_gf5() -> FdAlgebra {
        build(
            "field char=5\nvertex v\narrow a v v\narrow b v v\nrel a*a\nrel b*b\nrel a*b - 2*b*a\n",
        )
    }

    #[test]
    fn a2_basis_and_products() {
        let a = a2_gf5();
        assert_eq!(a.dim(), 4);
        let f = a.field.clone();
        // alpha * beta = 2 beta*alpha (basis index 3).
        let alpha = a.basis_element(1);
        let beta = a.basis_element(2);
        let prod = a.multiply(&alpha, &beta).unwrap();
        let mut expected = a.zero_element();
        expected.coeffs[3] = f.from_int(2);
        assert_eq!(prod, expected);
        // Identity acts trivially.
        let one = a.one_element();
        for i in 0..a.dim() {
            let b = a.basis_element(i);
            assert_eq!(a.multiply(&one, &b).unwrap(), b);
            assert_eq!(a.multiply(&b, &one).unwrap(), b);
        }
    }

    #[test]
    fn base_field_algebra() {
        let a = build("field char=0\nvertex v\n");
        assert_eq!(a.dim(), 1);
        let one = a.one_element();
        assert_eq!(a.multiply(&one, &one).unwrap(), one);
    }

    #[test]
    fn path_algebra_of_one_arrow() {
        let a = build("field char=0\nvertex v\nvertex w\narrow f v w\n");
        assert_eq!(a.dim(), 3);
        let arrow = a.basis_element(2);
        // f*f does not compose: zero.
        assert!(a.is_zero_element(&a.multiply(&arrow, &arrow).unwrap()));
        // Orthogonal idempotents.
        let e1 = a.basis_element(0);
        let e2 = a.basis_element(1);
        assert!(a.is_zero_element(&a.multiply(&e1, &e2).unwrap()));
        assert_eq!(a.multiply(&e1, &e1).unwrap(), e1);
    }

    #[test]
    fn normal_form_of_formal_sums() {
        let a = a2_gf5();
        let f = a.field.clone();
        // e*w = w.
        let w = PathWord {
            source: 0,
            arrows: vec![1, 0],
        };
        let nf = a.normal_form(&[(f.one(), w.clone())]).unwrap();
        assert_eq!(nf, a.basis_element(3));
        // beta*alpha*beta reduces to zero.
        let bab = PathWord {
            source: 0,
            arrows: vec![1, 0, 1],
        };
        let nf = a.normal_form(&[(f.one(), bab)]).unwrap();
        assert!(a.is_zero_element(&nf));
        // Trivial path contributes to the idempotent coordinate.
        let nf = a
            .normal_form(&[(f.from_int(3), PathWord::trivial(0))])
            .unwrap();
        assert_eq!(nf.coeffs[0], f.from_int(3));
    }

    #[test]
    fn associativity_on_all_basis_triples() {
        let a = a2_gf5();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let (bi, bj, bk) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
                    let left = a.multiply(&a.multiply(&bi, &bj).unwrap(), &bk).unwrap();
                    let right = a.multiply(&bi, &a.multiply(&bj, &bk).unwrap()).unwrap();
                    assert_eq!(left, right, "associativity fails at ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = a2_gf5();
        let bad = Element {
            coeffs: vec![a.field.zero(); 3],
        };
        assert!(matches!(
            a.multiply(&bad, &a.one_element()),
            Err(AlgebraError::DimensionMismatch(3, 4))
        ));
    }
}

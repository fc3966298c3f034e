//! Scalar-weighted formal sums of path words, sorted by the monomial order.

use crate::field::{FieldSpec, Scalar};
use crate::quiver::word_cmp;
use std::cmp::Ordering;

pub type Word = Vec<u16>;

/// Formal sum of words with nonzero coefficients, kept sorted ascending in
/// the monomial order; the leading term is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<(Word, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<(Word, Scalar)>, field: &FieldSpec) -> Self {
        terms.sort_by(|a, b| word_cmp(&a.0, &b.0));
        let mut out: Vec<(Word, Scalar)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => {
                    *lc = field.add(lc, &c);
                }
                _ => out.push((w, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Poly { terms: out }
    }

    pub fn monomial(word: Word, coeff: Scalar) -> Self {
        Poly {
            terms: vec![(word, coeff)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Word, Scalar)> {
        self.terms.last()
    }

    pub fn add(&self, other: &Poly, field: &FieldSpec) -> Poly {
        let mut out: Vec<(Word, Scalar)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let pick_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => match word_cmp(&a.0, &b.0) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        let c = field.add(&a.1, &b.1);
                        if !field.is_zero(&c) {
                            out.push((a.0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if pick_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                out.push(other.terms[j].clone());
                j += 1;
            }
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &Scalar, field: &FieldSpec) -> Poly {
        if field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), field.mul(v, c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, field: &FieldSpec) -> Poly {
        self.add(&other.scale(&field.from_int(-1), field), field)
    }

    /// Multiply every word by `left` on the left and `right` on the right.
    /// Order is preserved because the monomial order is compatible with
    /// concatenation by fixed words.
    pub fn sandwich(&self, left: &[u16], right: &[u16]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut nw = Vec::with_capacity(left.len() + w.len() + right.len());
                    nw.extend_from_slice(left);
                    nw.extend_from_slice(w);
                    nw.extend_from_slice(right);
                    (nw, c.clone())
                })
                .collect(),
        }
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.iter().map(|(w, _)| w.len()).max().unwrap_or(0)
    }
}

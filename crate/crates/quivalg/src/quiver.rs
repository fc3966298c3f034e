//! Quivers and path words.
//!
//! Paths compose left to right: in the word `a*b` the arrow `a` is traversed
//! first, so `source(a*b) = source(a)` and `target(a*b) = target(b)`.

use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("arrow `{0}` references unknown vertex `{1}`")]
    UnknownVertex(String, String),
    #[error("too many arrows (limit {0})")]
    TooManyArrows(usize),
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        if arrows.len() > u16::MAX as usize {
            return Err(QuiverError::TooManyArrows(u16::MAX as usize));
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(QuiverError::DuplicateArrow(a.name.clone()));
            }
            if a.source >= vertices.len() {
                return Err(QuiverError::UnknownVertex(
                    a.name.clone(),
                    a.source.to_string(),
                ));
            }
            if a.target >= vertices.len() {
                return Err(QuiverError::UnknownVertex(
                    a.name.clone(),
                    a.target.to_string(),
                ));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<u16> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .map(|i| i as u16)
    }

    pub fn arrow(&self, idx: u16) -> &Arrow {
        &self.arrows[idx as usize]
    }

    /// Check arrow-index word composability; returns (source, target).
    pub fn word_endpoints(&self, word: &[u16]) -> Option<(usize, usize)> {
        let first = self.arrow(*word.first()?);
        let mut current = first.target;
        for &idx in &word[1..] {
            let a = self.arrow(idx);
            if a.source != current {
                return None;
            }
            current = a.target;
        }
        Some((first.source, current))
    }

    pub fn word_name(&self, word: &[u16]) -> String {
        word.iter()
            .map(|&i| self.arrow(i).name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn arrows_from(&self, vertex: usize) -> impl Iterator<Item = (u16, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == vertex)
            .map(|(i, a)| (i as u16, a))
    }

    pub fn arrows_into(&self, vertex: usize) -> impl Iterator<Item = (u16, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == vertex)
            .map(|(i, a)| (i as u16, a))
    }
}

/// A path in a quiver: a composable arrow sequence, or a trivial path at a
/// vertex when the sequence is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    /// Source vertex; for an empty word this is the tagging vertex.
    pub source: usize,
    pub arrows: Vec<u16>,
}

impl PathWord {
    pub fn trivial(vertex: usize) -> Self {
        PathWord {
            source: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: Vec<u16>) -> Option<Self> {
        let (source, _) = quiver.word_endpoints(&arrows)?;
        Some(PathWord { source, arrows })
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        match self.arrows.last() {
            Some(&a) => quiver.arrow(a).target,
            None => self.source,
        }
    }
}

/// Length-first, then lexicographic by arrow declaration order, with
/// earlier-declared arrows ranking larger. This is the monomial order used
/// everywhere: it is length-compatible, so nilpotence of the radical shows up
/// as the absence of long irreducible words, and in a relation like
/// `a*b - 2*b*a` the word on the declared-first arrow leads.
pub fn word_cmp(a: &[u16], b: &[u16]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| b.cmp(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertex_quiver() -> Quiver {
        Quiver::new(
            vec!["v1".into(), "v2".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 0,
                },
                Arrow {
                    name: "g".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 0,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn endpoints_follow_left_to_right_composition() {
        let q = two_vertex_quiver();
        // a then g: loop at v1 then v1 -> v2.
        assert_eq!(q.word_endpoints(&[0, 1]), Some((0, 1)));
        // g then a does not compose: g ends at v2, a starts at v1.
        assert_eq!(q.word_endpoints(&[1, 0]), None);
        // g then b is a cycle at v1.
        assert_eq!(q.word_endpoints(&[1, 2]), Some((0, 0)));
    }

    #[test]
    fn duplicate_arrow_rejected() {
        let err = Quiver::new(
            vec!["v".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 0,
                },
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 0,
                },
            ],
        );
        assert_eq!(err, Err(QuiverError::DuplicateArrow("a".into())));
    }

    #[test]
    fn word_order_is_length_then_lex() {
        assert_eq!(word_cmp(&[1, 0], &[0, 1, 0]), Ordering::Less);
        assert_eq!(word_cmp(&[0, 1], &[1, 0]), Ordering::Greater);
        assert_eq!(word_cmp(&[1], &[1]), Ordering::Equal);
    }
}

//! Quiver presentations and their line-based text format.
//!
//! ```text
//! # comment
//! field char=5                      # or: field char=2 degree=2 modulus=1,1,1
//! vertex v1
//! vertex v2
//! arrow a v1 v1
//! arrow g v1 v2
//! arrow b v2 v1
//! rel a*a*g
//! rel a*a*a - g*b
//! ```
//!
//! Every `rel` line is a sum of terms set equal to zero. A term is an
//! optional scalar factor chain followed by a `*`-joined path; scalar factors
//! are integers, fractions `a/b` (rationals only), `t`, or `t^i` (extension
//! fields). Terms with equal paths accumulate, so extension coefficients such
//! as `t+1` are written as two terms: `t^1*b*b + b*b`.

use crate::field::{FieldError, FieldSpec, Scalar};
use crate::poly::Poly;
use crate::quiver::{Arrow, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: field must be declared once before any other entry")]
    FieldPlacement { line: usize },
    #[error("line {line}: {0}", line = .1)]
    Field(FieldError, usize),
    #[error("line {line}: {0}", line = .1)]
    Quiver(QuiverError, usize),
    #[error("line {line}: path `{path}` does not compose")]
    NonComposable { line: usize, path: String },
    #[error("line {line}: relation involves trivial path")]
    TrivialPathInRelation { line: usize },
    #[error("line {line}: relation mixes source/target: `{detail}`")]
    Inhomogeneous { line: usize, detail: String },
    #[error("line {line}: relation is zero after collecting terms")]
    ZeroRelation { line: usize },
    #[error("missing field declaration")]
    MissingField,
    #[error("presentation has no vertices")]
    NoVertices,
}

/// A relation: a nonzero formal sum of composable nontrivial paths sharing
/// one source and one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub poly: Poly,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Validate and normalize raw relation polynomials: nonzero scalars,
    /// nontrivial composable words, source/target homogeneous.
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        raw_relations: Vec<Poly>,
    ) -> Result<Self, ParseError> {
        if quiver.vertex_count() == 0 {
            return Err(ParseError::NoVertices);
        }
        let mut relations = Vec::with_capacity(raw_relations.len());
        for poly in raw_relations {
            relations.push(validate_relation(&field, &quiver, poly, 0)?);
        }
        Ok(Presentation {
            field,
            quiver,
            relations,
        })
    }

    /// Parse the presentation file format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut field: Option<FieldSpec> = None;
        let mut vertices: Vec<String> = Vec::new();
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut rel_lines: Vec<(usize, String)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap();
            match keyword {
                "field" => {
                    if field.is_some() || !vertices.is_empty() || !arrows.is_empty() {
                        return Err(ParseError::FieldPlacement { line: line_no });
                    }
                    field = Some(parse_field_line(tokens, line_no)?);
                }
                "vertex" => {
                    if field.is_none() {
                        return Err(ParseError::FieldPlacement { line: line_no });
                    }
                    let name = tokens.next().ok_or_else(|| ParseError::Syntax {
                        line: line_no,
                        message: "vertex needs a name".into(),
                    })?;
                    if tokens.next().is_some() {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            message: "trailing tokens after vertex name".into(),
                        });
                    }
                    vertices.push(name.to_string());
                }
                "arrow" => {
                    if field.is_none() {
                        return Err(ParseError::FieldPlacement { line: line_no });
                    }
                    let (name, src, tgt) = match (tokens.next(), tokens.next(), tokens.next()) {
                        (Some(n), Some(s), Some(t)) => (n, s, t),
                        _ => {
                            return Err(ParseError::Syntax {
                                line: line_no,
                                message: "arrow needs: name source target".into(),
                            })
                        }
                    };
                    let source = vertices.iter().position(|v| v == src).ok_or_else(|| {
                        ParseError::Syntax {
                            line: line_no,
                            message: format!("unknown source vertex `{src}`"),
                        }
                    })?;
                    let target = vertices.iter().position(|v| v == tgt).ok_or_else(|| {
                        ParseError::Syntax {
                            line: line_no,
                            message: format!("unknown target vertex `{tgt}`"),
                        }
                    })?;
                    arrows.push(Arrow {
                        name: name.to_string(),
                        source,
                        target,
                    });
                }
                "rel" => {
                    if field.is_none() {
                        return Err(ParseError::FieldPlacement { line: line_no });
                    }
                    let rest = line.strip_prefix("rel").unwrap().trim().to_string();
                    rel_lines.push((line_no, rest));
                }
                other => {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("unknown keyword `{other}`"),
                    })
                }
            }
        }

        let field = field.ok_or(ParseError::MissingField)?;
        if vertices.is_empty() {
            return Err(ParseError::NoVertices);
        }
        let quiver = Quiver::new(vertices, arrows).map_err(|e| ParseError::Quiver(e, 0))?;

        let mut relations = Vec::with_capacity(rel_lines.len());
        for (line_no, body) in rel_lines {
            let poly = parse_relation_body(&field, &quiver, &body, line_no)?;
            relations.push(validate_relation(&field, &quiver, poly, line_no)?);
        }
        Ok(Presentation {
            field,
            quiver,
            relations,
        })
    }

    /// Serialize back to the text format. Parsing the result reproduces this
    /// presentation exactly.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        let f = &self.field;
        match (f.characteristic(), f.degree()) {
            (0, _) => out.push_str("field char=0\n"),
            (p, 1) => out.push_str(&format!("field char={p}\n")),
            (p, k) => {
                let m = f
                    .modulus()
                    .unwrap()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("field char={p} degree={k} modulus={m}\n"));
            }
        }
        for v in &self.quiver.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.quiver.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            ));
        }
        for rel in &self.relations {
            out.push_str("rel ");
            out.push_str(&self.format_poly(&rel.poly));
            out.push('\n');
        }
        out
    }

    /// Render a relation polynomial in the `rel` line syntax, splitting
    /// extension-field coefficients into per-power terms.
    fn format_poly(&self, poly: &Poly) -> String {
        let f = &self.field;
        let mut pieces: Vec<(bool, String)> = Vec::new(); // (negative, body)
        for (word, coeff) in poly.terms().iter().rev() {
            let path = self.quiver.word_name(word);
            match coeff {
                Scalar::Rat(r) => {
                    let neg = r < &num_rational::BigRational::from_integer(0.into());
                    let a = if neg { -r } else { r.clone() };
                    let scalar_txt = if a == num_rational::BigRational::from_integer(1.into()) {
                        String::new()
                    } else if a.denom() == &num_bigint::BigInt::from(1) {
                        format!("{}*", a.numer())
                    } else {
                        format!("{}/{}*", a.numer(), a.denom())
                    };
                    pieces.push((neg, format!("{scalar_txt}{path}")));
                }
                Scalar::Fin(v) => {
                    if f.degree() == 1 {
                        let txt = if *v == 1 {
                            path.clone()
                        } else {
                            format!("{v}*{path}")
                        };
                        pieces.push((false, txt));
                    } else {
                        // One emitted term per nonzero digit of the scalar.
                        for (i, d) in f.decode(*v).into_iter().enumerate() {
                            if d == 0 {
                                continue;
                            }
                            let mut factors = String::new();
                            if d != 1 {
                                factors.push_str(&format!("{d}*"));
                            }
                            if i > 0 {
                                factors.push_str(&format!("t^{i}*"));
                            }
                            pieces.push((false, format!("{factors}{path}")));
                        }
                    }
                }
            }
        }
        let mut s = String::new();
        for (i, (neg, body)) in pieces.iter().enumerate() {
            if i == 0 {
                if *neg {
                    s.push_str("- ");
                }
            } else {
                s.push_str(if *neg { " - " } else { " + " });
            }
            s.push_str(body);
        }
        s
    }
}

fn parse_field_line(
    tokens: std::str::SplitWhitespace<'_>,
    line: usize,
) -> Result<FieldSpec, ParseError> {
    let mut char_v: Option<u64> = None;
    let mut degree: Option<u32> = None;
    let mut modulus: Option<Vec<i64>> = None;
    for tok in tokens {
        let (key, value) = tok.split_once('=').ok_or_else(|| ParseError::Syntax {
            line,
            message: format!("expected key=value, got `{tok}`"),
        })?;
        match key {
            "char" => {
                char_v = Some(value.parse().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("bad characteristic `{value}`"),
                })?)
            }
            "degree" => {
                degree = Some(value.parse().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("bad degree `{value}`"),
                })?)
            }
            "modulus" => {
                let coeffs: Result<Vec<i64>, _> =
                    value.split(',').map(|c| c.parse::<i64>()).collect();
                modulus = Some(coeffs.map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("bad modulus list `{value}`"),
                })?);
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("unknown field option `{other}`"),
                })
            }
        }
    }
    let p = char_v.ok_or_else(|| ParseError::Syntax {
        line,
        message: "field line needs char=<p>".into(),
    })?;
    let spec = match (p, degree.unwrap_or(1)) {
        (0, 1) => Ok(FieldSpec::rationals()),
        (0, _) => Err(FieldError::BadDegree(degree.unwrap())),
        (p, 1) => FieldSpec::prime_field(p),
        (p, k) => {
            let m = modulus.ok_or(FieldError::BadModulus);
            match m {
                Ok(m) => {
                    if m.len() != k as usize + 1 {
                        Err(FieldError::BadModulus)
                    } else {
                        FieldSpec::extension(p, &m)
                    }
                }
                Err(e) => Err(e),
            }
        }
    };
    spec.map_err(|e| ParseError::Field(e, line))
}

/// Parse a relation body: terms separated by top-level `+`/`-`.
fn parse_relation_body(
    field: &FieldSpec,
    quiver: &Quiver,
    body: &str,
    line: usize,
) -> Result<Poly, ParseError> {
    if body.is_empty() {
        return Err(ParseError::Syntax {
            line,
            message: "empty relation".into(),
        });
    }
    let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<(Vec<u16>, Scalar)> = Vec::new();
    let mut term = String::new();
    let mut sign = 1i64;
    let mut chars = compact.chars().peekable();
    if let Some(&c) = chars.peek() {
        if c == '+' || c == '-' {
            sign = if c == '-' { -1 } else { 1 };
            chars.next();
        }
    }
    let mut flush = |term: &mut String, sign: i64| -> Result<(), ParseError> {
        if term.is_empty() {
            return Err(ParseError::Syntax {
                line,
                message: "dangling sign".into(),
            });
        }
        let (word, coeff) = parse_term(field, quiver, term, line)?;
        let coeff = if sign < 0 { field.neg(&coeff) } else { coeff };
        terms.push((word, coeff));
        term.clear();
        Ok(())
    };
    while let Some(c) = chars.next() {
        match c {
            '+' | '-' => {
                flush(&mut term, sign)?;
                sign = if c == '-' { -1 } else { 1 };
            }
            _ => term.push(c),
        }
    }
    flush(&mut term, sign)?;
    Ok(Poly::from_terms(terms, field))
}

/// One term: `*`-joined factors, scalar factors first by convention but
/// accepted anywhere; remaining factors must name arrows in path order.
fn parse_term(
    field: &FieldSpec,
    quiver: &Quiver,
    term: &str,
    line: usize,
) -> Result<(Vec<u16>, Scalar), ParseError> {
    let mut coeff = field.one();
    let mut word: Vec<u16> = Vec::new();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(ParseError::Syntax {
                line,
                message: "empty factor in term".into(),
            });
        }
        if let Some(idx) = quiver.arrow_index(factor) {
            word.push(idx);
            continue;
        }
        let scalar_like = factor == "t"
            || factor.starts_with("t^")
            || factor
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_digit() || c == '-');
        if scalar_like {
            let v = field.parse_scalar(factor).map_err(|e| ParseError::Syntax {
                line,
                message: e.to_string(),
            })?;
            if field.is_zero(&v) {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("zero scalar factor `{factor}`"),
                });
            }
            coeff = field.mul(&coeff, &v);
        } else {
            return Err(ParseError::Syntax {
                line,
                message: format!("`{factor}` is neither an arrow nor a scalar"),
            });
        }
    }
    if word.is_empty() {
        return Err(ParseError::TrivialPathInRelation { line });
    }
    if quiver.word_endpoints(&word).is_none() {
        return Err(ParseError::NonComposable {
            line,
            path: quiver.word_name(&word),
        });
    }
    Ok((word, coeff))
}

fn validate_relation(
    field: &FieldSpec,
    quiver: &Quiver,
    poly: Poly,
    line: usize,
) -> Result<Relation, ParseError> {
    let _ = field;
    if poly.is_zero() {
        return Err(ParseError::ZeroRelation { line });
    }
    let mut endpoints: Option<(usize, usize)> = None;
    for (word, _) in poly.terms() {
        if word.is_empty() {
            return Err(ParseError::TrivialPathInRelation { line });
        }
        let ep = quiver
            .word_endpoints(word)
            .ok_or_else(|| ParseError::NonComposable {
                line,
                path: quiver.word_name(word),
            })?;
        match endpoints {
            None => endpoints = Some(ep),
            Some(prev) if prev == ep => {}
            Some(prev) => {
                return Err(ParseError::Inhomogeneous {
                    line,
                    detail: format!(
                        "{} goes {}->{} but {} goes {}->{}",
                        quiver.word_name(&poly.terms()[0].0),
                        quiver.vertices[prev.0],
                        quiver.vertices[prev.1],
                        quiver.word_name(word),
                        quiver.vertices[ep.0],
                        quiver.vertices[ep.1],
                    ),
                })
            }
        }
    }
    let (source, target) = endpoints.unwrap();
    Ok(Relation {
        poly,
        source,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_LAMBDA_2_GF5: &str = "\
# A(lambda) at lambda = 2 over GF(5)
field char=5
vertex v
arrow a v v
arrow b v v
rel a*a
rel b*b
rel a*b - 2*b*a
";

    #[test]
    fn parses_a_lambda_example() {
        let p = Presentation::parse(A_LAMBDA_2_GF5).unwrap();
        assert_eq!(p.quiver.vertex_count(), 1);
        assert_eq!(p.quiver.arrow_count(), 2);
        assert_eq!(p.relations.len(), 3);
        let last = &p.relations[2];
        assert_eq!(last.poly.terms().len(), 2);
    }

    #[test]
    fn empty_quiver_is_valid() {
        let p = Presentation::parse("field char=0\nvertex v\n").unwrap();
        assert_eq!(p.quiver.vertex_count(), 1);
        assert!(p.relations.is_empty());
    }

    #[test]
    fn trivial_path_in_relation_rejected() {
        // `2` alone parses as a scalar factor with no path.
        let text = "field char=5\nvertex v\narrow a v v\nrel 2\n";
        let err = Presentation::parse(text).unwrap_err();
        assert!(matches!(err, ParseError::TrivialPathInRelation { line: 4 }));
    }

    #[test]
    fn non_composable_path_rejected() {
        let text = "field char=0\nvertex v\nvertex w\narrow a v w\nrel a*a\n";
        let err = Presentation::parse(text).unwrap_err();
        assert!(matches!(err, ParseError::NonComposable { line: 5, .. }));
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let text = "field char=0\nvertex v\nvertex w\narrow a v w\narrow l v v\nrel a - l\n";
        let err = Presentation::parse(text).unwrap_err();
        assert!(matches!(err, ParseError::Inhomogeneous { line: 6, .. }));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let text = "field char=0\nvertex v\nbogus line\n";
        match Presentation::parse(text).unwrap_err() {
            ParseError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn emit_parse_roundtrip() {
        let p = Presentation::parse(A_LAMBDA_2_GF5).unwrap();
        let text = p.emit();
        let q = Presentation::parse(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(text, q.emit());
    }

    #[test]
    fn extension_scalars_roundtrip() {
        let text = "\
field char=2 degree=2 modulus=1,1,1
vertex v
arrow a v v
arrow b v v
rel t^1*a*b + a*b - b*a
";
        let p = Presentation::parse(text).unwrap();
        // t + 1 accumulated on a*b.
        let rel = &p.relations[0];
        assert_eq!(rel.poly.terms().len(), 2);
        let again = Presentation::parse(&p.emit()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn duplicate_arrow_name_rejected() {
        let text = "field char=0\nvertex v\narrow a v v\narrow a v v\n";
        assert!(matches!(
            Presentation::parse(text).unwrap_err(),
            ParseError::Quiver(QuiverError::DuplicateArrow(_), _)
        ));
    }

    #[test]
    fn scalar_not_in_field_rejected() {
        let text = "field char=5\nvertex v\narrow a v v\nrel t^1*a\n";
        assert!(matches!(
            Presentation::parse(text).unwrap_err(),
            ParseError::Syntax { line: 4, .. }
        ));
    }
}

//! Invariant reports: assemble every computed invariant of one algebra into
//! a serializable document, and compare two reports field by field.
//!
//! Comparison never claims equivalence. `Distinguished` means some invariant
//! of Morita type differs over the same base field; `NotDistinguished` means
//! only that these invariants do not separate the two algebras.

use crate::algebra::FdAlgebra;
use crate::field::FieldSpec;
use crate::invariants::{
    cartan, center, commutator_space, find_symmetrizing_form, hochschild_dims, kulshammer_tower,
    orthogonal_quotient_dims, radical_socle, structural_flags, Confidence, FormSearch,
    InvariantError, StructuralFlags, DEFAULT_ENTRY_GUARD,
};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportConfig {
    pub n_max: u32,
    pub hh_max: usize,
    pub seed: u64,
    pub samples: u32,
    pub degree_bound: usize,
    pub hh_entry_guard: u64,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            n_max: 3,
            hh_max: 2,
            seed: 0,
            samples: 64,
            degree_bound: 30,
            hh_entry_guard: DEFAULT_ENTRY_GUARD,
        }
    }
}

/// What the report describes: a catalog family instance or an input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraIdentity {
    Family {
        family: String,
        params: Vec<(String, String)>,
    },
    File {
        file_hash: String,
    },
}

impl AlgebraIdentity {
    /// FNV-1a hash of a presentation file, stable across platforms.
    pub fn from_file_text(text: &str) -> AlgebraIdentity {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in text.as_bytes() {
            h ^= *b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        AlgebraIdentity::File {
            file_hash: format!("{h:016x}"),
        }
    }

    pub fn label(&self) -> String {
        match self {
            AlgebraIdentity::Family { family, params } => {
                if params.is_empty() {
                    family.clone()
                } else {
                    let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    format!("{}({})", family, ps.join(","))
                }
            }
            AlgebraIdentity::File { file_hash } => format!("file:{file_hash}"),
        }
    }
}

/// Integers that may exceed i64 serialize as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntValue {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntValue {
    fn from(v: &BigInt) -> Self {
        match i64::try_from(v) {
            Ok(s) => IntValue::Small(s),
            Err(_) => IntValue::Big(v.to_string()),
        }
    }
}

impl std::fmt::Display for IntValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntValue::Small(v) => write!(f, "{v}"),
            IntValue::Big(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub characteristic: u64,
    pub degree: u32,
    pub modulus: Option<Vec<u64>>,
}

impl FieldDescriptor {
    pub fn of(field: &FieldSpec) -> Self {
        FieldDescriptor {
            characteristic: field.characteristic(),
            degree: field.degree(),
            modulus: field.modulus().map(|m| m.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanReport {
    pub matrix: Vec<Vec<IntValue>>,
    pub det: IntValue,
    pub divisors: Vec<IntValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KulshammerReport {
    /// dims[n-1] = dim T_n/[A,A].
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalReport {
    /// dims[n-1] = dim Z(A)/T_n(A)^perp.
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochschildReport {
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub found: bool,
    pub confidence: Confidence,
    /// For small fields: whether a form exists over a quadratic extension.
    pub extension_witness: Option<bool>,
}

/// A computed section or the reason it was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MaybeComputed<T> {
    Value(T),
    Skipped { skipped: String },
}

impl<T> MaybeComputed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            MaybeComputed::Value(v) => Some(v),
            MaybeComputed::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub algebra: AlgebraIdentity,
    pub field: FieldDescriptor,
    pub dimension: usize,
    pub cartan: CartanReport,
    pub dim_commutator: usize,
    pub dim_center: usize,
    /// dim Z(A) / (soc(A) meet Z(A)).
    pub dim_center_mod_reynolds: usize,
    /// dim Z(A) / (Z(A) meet J(A)).
    pub dim_center_mod_central_radical: usize,
    pub kulshammer: MaybeComputed<KulshammerReport>,
    pub symmetrizing_form: FormReport,
    pub orthogonal_quotient: MaybeComputed<OrthogonalReport>,
    pub hh: MaybeComputed<HochschildReport>,
    pub flags: StructuralFlags,
    pub loewy_length: usize,
}

/// Compute every configured invariant of the algebra. Size-guard failures
/// land in `skipped` fields instead of failing the report.
pub fn build_report(
    algebra: &FdAlgebra,
    identity: AlgebraIdentity,
    config: &ReportConfig,
) -> Result<InvariantReport, InvariantError> {
    let field = &algebra.field;
    let cartan_data = cartan(algebra);
    let commutators = commutator_space(algebra);
    let z = center(algebra);
    let rad = radical_socle(algebra)?;

    // Reynolds quotient Z/(soc meet Z) and the central-radical quotient
    // Z/(Z meet J): two candidate readings of the center-modulo-ideal row;
    // reports carry both.
    let socle_meet_z = rad.socle.intersect(&z, field);
    let dim_center_mod_reynolds = z.dim() - socle_meet_z.dim();
    let central_radical = match rad.radical_powers.first() {
        Some(j) => z.intersect(j, field).dim(),
        None => 0,
    };
    let dim_center_mod_central_radical = z.dim() - central_radical;

    let kulshammer = if field.characteristic() == 0 {
        MaybeComputed::Skipped {
            skipped: "not applicable (characteristic 0)".into(),
        }
    } else {
        let tower = kulshammer_tower(algebra, config.n_max)?;
        MaybeComputed::Value(KulshammerReport { dims: tower.dims })
    };

    let form_search = find_symmetrizing_form(algebra, config.seed, config.samples);
    let symmetrizing_form = match &form_search {
        FormSearch::Found(_) => FormReport {
            found: true,
            confidence: Confidence::Exact,
            extension_witness: None,
        },
        FormSearch::NotFound(cert) => FormReport {
            found: false,
            confidence: cert.confidence.clone(),
            extension_witness: cert.extension_witness,
        },
    };

    let orthogonal_quotient = if field.characteristic() == 0 {
        MaybeComputed::Skipped {
            skipped: "not applicable (characteristic 0)".into(),
        }
    } else {
        match form_search.found() {
            Some(form) => MaybeComputed::Value(OrthogonalReport {
                dims: orthogonal_quotient_dims(algebra, form, config.n_max)?,
            }),
            None => MaybeComputed::Skipped {
                skipped: "no symmetrizing form found".into(),
            },
        }
    };

    let hh = match hochschild_dims(algebra, config.hh_max, config.hh_entry_guard) {
        Ok(h) => MaybeComputed::Value(HochschildReport { dims: h.dims }),
        Err(e @ InvariantError::SizeGuard { .. }) => MaybeComputed::Skipped {
            skipped: format!("skipped: {e}"),
        },
        Err(e) => return Err(e),
    };

    let flags = structural_flags(algebra, config.seed, config.samples);

    let cartan_report = CartanReport {
        matrix: (0..cartan_data.matrix.rows())
            .map(|i| {
                (0..cartan_data.matrix.cols())
                    .map(|j| IntValue::from(cartan_data.matrix.at(i, j)))
                    .collect()
            })
            .collect(),
        det: IntValue::from(&cartan_data.determinant),
        divisors: cartan_data
            .elementary_divisors
            .iter()
            .map(IntValue::from)
            .collect(),
    };

    Ok(InvariantReport {
        algebra: identity,
        field: FieldDescriptor::of(field),
        dimension: algebra.dim(),
        cartan: cartan_report,
        dim_commutator: commutators.dim(),
        dim_center: z.dim(),
        dim_center_mod_reynolds,
        dim_center_mod_central_radical,
        kulshammer,
        symmetrizing_form,
        orthogonal_quotient,
        hh,
        flags,
        loewy_length: rad.loewy_length,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Equal,
    Differs,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantVerdict {
    pub invariant: String,
    pub left: String,
    pub right: String,
    pub verdict: Verdict,
    /// Whether a difference in this field refutes stable equivalence of
    /// Morita type.
    pub morita_type: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Overall {
    Distinguished,
    NotDistinguished,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonResult {
    pub overall: Overall,
    /// Names of the Morita-type invariants that differ.
    pub distinguishing: Vec<String>,
    pub verdicts: Vec<InvariantVerdict>,
}

/// Absolute value of a reported integer, for Cartan determinant comparison.
fn abs_int(v: &IntValue) -> String {
    match v {
        IntValue::Small(s) => s.unsigned_abs().to_string(),
        IntValue::Big(s) => s
            .parse::<BigInt>()
            .map(|b| b.abs().to_string())
            .unwrap_or_else(|_| s.clone()),
    }
}

/// Elementary divisors different from 1, as a sorted multiset string.
fn divisors_key(divs: &[IntValue]) -> String {
    let mut parts: Vec<String> = divs
        .iter()
        .filter(|d| !matches!(d, IntValue::Small(1)))
        .map(|d| match d {
            IntValue::Small(s) => s.to_string(),
            IntValue::Big(s) => s.clone(),
        })
        .collect();
    parts.sort();
    format!("[{}]", parts.join(","))
}

pub fn compare_reports(left: &InvariantReport, right: &InvariantReport) -> ComparisonResult {
    if left.field != right.field {
        return ComparisonResult {
            overall: Overall::Incomparable,
            distinguishing: Vec::new(),
            verdicts: vec![InvariantVerdict {
                invariant: "field".into(),
                left: format!("{:?}", left.field),
                right: format!("{:?}", right.field),
                verdict: Verdict::Incomparable,
                morita_type: false,
            }],
        };
    }

    let mut verdicts = Vec::new();
    {
        let mut push = |invariant: &str, l: String, r: String, morita: bool| {
            let verdict = if l == r {
                Verdict::Equal
            } else {
                Verdict::Differs
            };
            verdicts.push(InvariantVerdict {
                invariant: invariant.to_string(),
                left: l,
                right: r,
                verdict,
                morita_type: morita,
            });
        };
        push(
            "dimension",
            left.dimension.to_string(),
            right.dimension.to_string(),
            false,
        );
        push(
            "loewy_length",
            left.loewy_length.to_string(),
            right.loewy_length.to_string(),
            false,
        );
        push(
            "cartan.det.abs",
            abs_int(&left.cartan.det),
            abs_int(&right.cartan.det),
            true,
        );
        push(
            "cartan.divisors",
            divisors_key(&left.cartan.divisors),
            divisors_key(&right.cartan.divisors),
            true,
        );
        push(
            "dim_commutator",
            left.dim_commutator.to_string(),
            right.dim_commutator.to_string(),
            false,
        );
        push(
            "dim_center",
            left.dim_center.to_string(),
            right.dim_center.to_string(),
            false,
        );
        push(
            "dim_center_mod_reynolds",
            left.dim_center_mod_reynolds.to_string(),
            right.dim_center_mod_reynolds.to_string(),
            true,
        );
        push(
            "dim_center_mod_central_radical",
            left.dim_center_mod_central_radical.to_string(),
            right.dim_center_mod_central_radical.to_string(),
            false,
        );
        for (name, l, r) in [
            ("flags.local", left.flags.local, right.flags.local),
            (
                "flags.commutative",
                left.flags.commutative,
                right.flags.commutative,
            ),
            (
                "flags.special_biserial",
                left.flags.special_biserial,
                right.flags.special_biserial,
            ),
            ("flags.nakayama", left.flags.nakayama, right.flags.nakayama),
            (
                "flags.weakly_symmetric_socle",
                left.flags.weakly_symmetric_socle,
                right.flags.weakly_symmetric_socle,
            ),
        ] {
            push(name, l.to_string(), r.to_string(), false);
        }
    }

    // Numeric towers compare only when computed on both sides.
    fn both(
        l: Option<String>,
        r: Option<String>,
        name: &str,
        morita: bool,
        vs: &mut Vec<InvariantVerdict>,
    ) {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "n/a".into());
        match (l, r) {
            (Some(a), Some(b)) => {
                let verdict = if a == b {
                    Verdict::Equal
                } else {
                    Verdict::Differs
                };
                vs.push(InvariantVerdict {
                    invariant: name.into(),
                    left: a,
                    right: b,
                    verdict,
                    morita_type: morita,
                });
            }
            (a, b) => vs.push(InvariantVerdict {
                invariant: name.into(),
                left: opt(a),
                right: opt(b),
                verdict: Verdict::Incomparable,
                morita_type: false,
            }),
        }
    }
    both(
        left.kulshammer.value().map(|k| format!("{:?}", k.dims)),
        right.kulshammer.value().map(|k| format!("{:?}", k.dims)),
        "kulshammer.dims",
        true,
        &mut verdicts,
    );
    both(
        left.orthogonal_quotient
            .value()
            .map(|o| format!("{:?}", o.dims)),
        right
            .orthogonal_quotient
            .value()
            .map(|o| format!("{:?}", o.dims)),
        "orthogonal_quotient.dims",
        true,
        &mut verdicts,
    );
    // HH^0 = dim Z is informational; the tail from HH^1 on refutes Morita
    // type.
    both(
        left.hh
            .value()
            .and_then(|h| h.dims.first().map(|d| d.to_string())),
        right
            .hh
            .value()
            .and_then(|h| h.dims.first().map(|d| d.to_string())),
        "hh.dims[0]",
        false,
        &mut verdicts,
    );
    both(
        left.hh.value().map(|h| format!("{:?}", &h.dims[1..])),
        right.hh.value().map(|h| format!("{:?}", &h.dims[1..])),
        "hh.dims[1..]",
        true,
        &mut verdicts,
    );

    // Existence of a symmetrizing form refutes Morita type only when the
    // negative side is exact.
    let sym_exact = |r: &InvariantReport| {
        r.symmetrizing_form.found || r.symmetrizing_form.confidence == Confidence::Exact
    };
    let sym_morita = left.symmetrizing_form.found != right.symmetrizing_form.found
        && sym_exact(left)
        && sym_exact(right);
    verdicts.push(InvariantVerdict {
        invariant: "symmetric".into(),
        left: left.symmetrizing_form.found.to_string(),
        right: right.symmetrizing_form.found.to_string(),
        verdict: if left.symmetrizing_form.found == right.symmetrizing_form.found {
            Verdict::Equal
        } else {
            Verdict::Differs
        },
        morita_type: sym_morita,
    });

    let distinguishing: Vec<String> = verdicts
        .iter()
        .filter(|v| v.morita_type && v.verdict == Verdict::Differs)
        .map(|v| v.invariant.clone())
        .collect();
    let overall = if distinguishing.is_empty() {
        Overall::NotDistinguished
    } else {
        Overall::Distinguished
    };
    ComparisonResult {
        overall,
        distinguishing,
        verdicts,
    }
}

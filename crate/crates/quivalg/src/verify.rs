//! Verification of the reference invariant tables: Cartan determinants, the
//! center-modulo-ideal row, the Külshammer quotient separations in
//! characteristics 2 and 3, and the Hochschild separation in characteristic
//! 2. Each expectation is checked by recomputing the invariant from the
//! catalog presentation; failures become table rows, not errors.

use crate::algebra::FdAlgebra;
use crate::catalog::{instantiate, FamilyId, ParamSet};
use crate::field::{FieldSpec, Scalar};
use crate::invariants::{
    cartan, center, find_symmetrizing_form, hochschild_dims, orthogonal_quotient_dims,
    radical_socle,
};
use crate::report::ReportConfig;
use crate::rewrite::complete_rewriting;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CharSelector {
    Char0,
    Char2,
    Char3,
    All,
}

impl CharSelector {
    pub fn parse(text: &str) -> Option<CharSelector> {
        match text {
            "0" | "char0" => Some(CharSelector::Char0),
            "2" | "char2" => Some(CharSelector::Char2),
            "3" | "char3" => Some(CharSelector::Char3),
            "all" => Some(CharSelector::All),
            _ => None,
        }
    }

    fn includes(&self, c: CharSelector) -> bool {
        *self == CharSelector::All || *self == c
    }
}

/// One expectation row: where it comes from, what was expected, what the
/// engine produced.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub section: &'static str,
    pub algebra: String,
    pub invariant: &'static str,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    /// Source pointer for the expected value, in mathematical shorthand.
    pub citation: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationTable {
    pub rows: Vec<VerificationRow>,
    /// Which reading of the center-modulo-ideal row matched all reference
    /// values: "socle_meet_center" or "central_radical", when one did.
    pub center_quotient_candidate: Option<&'static str>,
}

impl VerificationTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("failed to build {algebra}: {message}")]
    Build { algebra: String, message: String },
}

/// The six reference algebras of the two-row invariant table, in column
/// order, with their determinant and dim-row values.
const TABLE_COLUMNS: [(FamilyId, i64, usize); 6] = [
    (FamilyId::L2Prime, 6, 3),
    (FamilyId::L3PrimeLambda, 12, 4),
    (FamilyId::L5Prime, 6, 2),
    (FamilyId::A1Lambda, 16, 2),
    (FamilyId::L9Prime, 4, 1),
    (FamilyId::A4, 12, 2),
];

/// Recorded regression value: dim Z(Lambda_5)/T_1(Lambda_5)^perp over GF(2)
/// is not printed in the reference; the engine's value is pinned here so
/// drifts are caught.
pub const LAMBDA5_ORTH_QUOTIENT_GF2: usize = 1;

struct Runner {
    config: ReportConfig,
    rows: Vec<VerificationRow>,
}

impl Runner {
    fn build(
        &self,
        id: FamilyId,
        params: &ParamSet,
        field: &FieldSpec,
    ) -> Result<FdAlgebra, VerifyError> {
        let err = |message: String| VerifyError::Build {
            algebra: format!("{}/{}", id.name(), field),
            message,
        };
        let pres = instantiate(id, params, field).map_err(|e| err(e.to_string()))?;
        let rs =
            complete_rewriting(&pres, self.config.degree_bound).map_err(|e| err(e.to_string()))?;
        FdAlgebra::construct(rs).map_err(|e| err(e.to_string()))
    }

    fn row(
        &mut self,
        section: &'static str,
        algebra: String,
        invariant: &'static str,
        expected: String,
        got: String,
        citation: &'static str,
    ) {
        let pass = expected == got;
        self.rows.push(VerificationRow {
            section,
            algebra,
            invariant,
            expected,
            got,
            pass,
            citation,
        });
    }
}

/// Default lambda for table verification: 2 over the rationals and prime
/// fields, the smallest element outside {0,1} over extensions.
pub fn default_lambda(field: &FieldSpec) -> Scalar {
    if field.characteristic() == 2 && field.degree() > 1 {
        field.generator()
    } else {
        field.from_int(2)
    }
}

fn lambda_params(field: &FieldSpec) -> ParamSet {
    ParamSet {
        lambda: Some(default_lambda(field)),
        ..Default::default()
    }
}

pub fn verify_paper_tables(
    selector: CharSelector,
    config: &ReportConfig,
) -> Result<VerificationTable, VerifyError> {
    let mut runner = Runner {
        config: config.clone(),
        rows: Vec::new(),
    };
    let mut center_quotient_candidate = None;

    if selector.includes(CharSelector::Char0) {
        // Determinant row over the rationals and again over GF(5): the
        // reference table prints 6, 12, 6, 16, 4, 12.
        for field in [FieldSpec::rationals(), FieldSpec::prime_field(5).unwrap()] {
            for (id, det, _) in TABLE_COLUMNS {
                let params = lambda_params(&field);
                let a = runner.build(id, &params, &field)?;
                let c = cartan(&a);
                runner.row(
                    "det-table",
                    format!("{}/{}", id.name(), field),
                    "cartan.det",
                    det.to_string(),
                    c.determinant.to_string(),
                    "det C row: 6, 12, 6, 16, 4, 12",
                );
            }
        }

        // Center-modulo-ideal row over the rationals: 3, 4, 2, 2, 1, 2.
        // Both candidate readings are computed; the table records which one
        // reproduces every column.
        let field = FieldSpec::rationals();
        let mut reynolds_vals = Vec::new();
        let mut radical_vals = Vec::new();
        for (id, _, _) in TABLE_COLUMNS {
            let params = lambda_params(&field);
            let a = runner.build(id, &params, &field)?;
            let z = center(&a);
            let rad = radical_socle(&a).map_err(|e| VerifyError::Build {
                algebra: id.name().into(),
                message: e.to_string(),
            })?;
            let reynolds = z.dim() - rad.socle.intersect(&z, &field).dim();
            let central_rad = match rad.radical_powers.first() {
                Some(j) => z.dim() - z.intersect(j, &field).dim(),
                None => z.dim(),
            };
            reynolds_vals.push(reynolds);
            radical_vals.push(central_rad);
        }
        let expected: Vec<usize> = TABLE_COLUMNS.iter().map(|&(_, _, d)| d).collect();
        let candidate = if reynolds_vals == expected {
            Some("socle_meet_center")
        } else if radical_vals == expected {
            Some("central_radical")
        } else {
            None
        };
        center_quotient_candidate = candidate;
        for (i, (id, _, dim_expected)) in TABLE_COLUMNS.iter().enumerate() {
            let got = match candidate {
                Some("socle_meet_center") => reynolds_vals[i],
                Some("central_radical") => radical_vals[i],
                _ => reynolds_vals[i],
            };
            runner.row(
                "dim-z-mod-r",
                format!(
                    "{}/QQ (socle_meet_center={}, central_radical={})",
                    id.name(),
                    reynolds_vals[i],
                    radical_vals[i]
                ),
                "dim_center_mod_r",
                dim_expected.to_string(),
                got.to_string(),
                "dim Z(A)/R(A) row: 3, 4, 2, 2, 1, 2",
            );
        }

        // Lambda-independence spot check: the printed values do not depend
        // on the chosen lambda.
        for (id, det, dimzr) in [
            (FamilyId::L3PrimeLambda, 12i64, 4usize),
            (FamilyId::A1Lambda, 16, 2),
        ] {
            let params = ParamSet {
                lambda: Some(field.from_int(3)),
                ..Default::default()
            };
            let a = runner.build(id, &params, &field)?;
            let c = cartan(&a);
            runner.row(
                "lambda-independence",
                format!("{}(lambda=3)/QQ", id.name()),
                "cartan.det",
                det.to_string(),
                c.determinant.to_string(),
                "det C row, second lambda",
            );
            let z = center(&a);
            let rad = radical_socle(&a).unwrap();
            let reynolds = z.dim() - rad.socle.intersect(&z, &field).dim();
            let central_rad = match rad.radical_powers.first() {
                Some(j) => z.dim() - z.intersect(j, &field).dim(),
                None => z.dim(),
            };
            let got = match center_quotient_candidate {
                Some("central_radical") => central_rad,
                _ => reynolds,
            };
            runner.row(
                "lambda-independence",
                format!("{}(lambda=3)/QQ", id.name()),
                "dim_center_mod_r",
                dimzr.to_string(),
                got.to_string(),
                "dim Z(A)/R(A) row, second lambda",
            );
        }
    }

    if selector.includes(CharSelector::Char3) {
        // dim Z/T_1^perp = 3 for Lambda_2' and 2 for Lambda_2 over GF(3).
        let field = FieldSpec::prime_field(3).unwrap();
        for (id, expected) in [(FamilyId::L2Prime, 3usize), (FamilyId::L2, 2)] {
            let a = runner.build(id, &ParamSet::default(), &field)?;
            let got = orth_quotient_n1(&mut runner, &a, id.name())?;
            runner.row(
                "kulshammer-char3",
                format!("{}/GF(3)", id.name()),
                "dim_z_mod_t1perp",
                expected.to_string(),
                got,
                "dim Z/T_1^perp: 3 vs 2 in characteristic 3",
            );
        }
    }

    if selector.includes(CharSelector::Char2) {
        // Over GF(4): 3 for Lambda_3'(lambda) and 2 for Lambda_3(mu), for
        // both admissible lambda.
        let gf4 = FieldSpec::extension(2, &[1, 1, 1]).unwrap();
        let t = gf4.generator();
        let t1 = gf4.add(&t, &gf4.one());
        for lam in [t.clone(), t1.clone()] {
            for (id, expected) in [(FamilyId::L3PrimeLambda, 3usize), (FamilyId::L3Lambda, 2)] {
                let params = ParamSet {
                    lambda: Some(lam.clone()),
                    ..Default::default()
                };
                let a = runner.build(id, &params, &gf4)?;
                let got = orth_quotient_n1(&mut runner, &a, id.name())?;
                runner.row(
                    "kulshammer-char2",
                    format!("{}(lambda={})/GF(4)", id.name(), gf4.format_scalar(&lam)),
                    "dim_z_mod_t1perp",
                    expected.to_string(),
                    got,
                    "dim Z/T_1^perp: 3 vs 2 in characteristic 2",
                );
            }
        }

        // Lambda_5' over GF(2): quotient dimension 0. (The reference prints
        // the subscript of the orthogonal as Lambda_3', an apparent typo for
        // Lambda_5'.)
        let gf2 = FieldSpec::prime_field(2).unwrap();
        let a = runner.build(FamilyId::L5Prime, &ParamSet::default(), &gf2)?;
        let got = orth_quotient_n1(&mut runner, &a, "L5p")?;
        runner.row(
            "kulshammer-char2",
            "L5p/GF(2)".into(),
            "dim_z_mod_t1perp",
            "0".into(),
            got,
            "dim Z/T_1^perp = 0 for the three-simples standard algebra",
        );

        // Regression: the unprinted companion value for Lambda_5.
        let a = runner.build(FamilyId::L5, &ParamSet::default(), &gf2)?;
        let got = orth_quotient_n1(&mut runner, &a, "L5")?;
        runner.row(
            "regression",
            "L5/GF(2)".into(),
            "dim_z_mod_t1perp",
            LAMBDA5_ORTH_QUOTIENT_GF2.to_string(),
            got,
            "recorded engine value, not printed in the reference",
        );

        // Hochschild separation: dim HH^2 = 4 for Lambda_9 and 3 for
        // Lambda_9'.
        for (id, expected) in [(FamilyId::L9, 4usize), (FamilyId::L9Prime, 3)] {
            let a = runner.build(id, &ParamSet::default(), &gf2)?;
            let hh = hochschild_dims(&a, 2, runner.config.hh_entry_guard).map_err(|e| {
                VerifyError::Build {
                    algebra: id.name().into(),
                    message: e.to_string(),
                }
            })?;
            runner.row(
                "hochschild-char2",
                format!("{}/GF(2)", id.name()),
                "hh2",
                expected.to_string(),
                hh.dims[2].to_string(),
                "dim HH^2: 4 vs 3 in characteristic 2",
            );
        }

        // Determinants of the nonstandard algebras, stated in the
        // characteristic-2 discussion: 12, 6, 4.
        let l3_params = ParamSet {
            lambda: Some(t),
            ..Default::default()
        };
        for (id, field, params, det) in [
            (FamilyId::L3Lambda, gf4.clone(), l3_params, 12i64),
            (FamilyId::L5, gf2.clone(), ParamSet::default(), 6),
            (FamilyId::L9, gf2.clone(), ParamSet::default(), 4),
        ] {
            let a = runner.build(id, &params, &field)?;
            let c = cartan(&a);
            runner.row(
                "nonstandard-dets",
                format!("{}/{}", id.name(), field),
                "cartan.det",
                det.to_string(),
                c.determinant.to_string(),
                "det C = 12, 6, 4 for the nonstandard algebras",
            );
        }
    }

    Ok(VerificationTable {
        rows: runner.rows,
        center_quotient_candidate,
    })
}

/// dim Z/T_1^perp via a symmetrizing form; reported as a string so missing
/// forms become readable failures instead of panics.
fn orth_quotient_n1(
    runner: &mut Runner,
    algebra: &FdAlgebra,
    name: &str,
) -> Result<String, VerifyError> {
    let _ = name;
    let search = find_symmetrizing_form(algebra, runner.config.seed, runner.config.samples);
    match search.found() {
        Some(form) => match orthogonal_quotient_dims(algebra, form, 1) {
            Ok(dims) => Ok(dims[0].to_string()),
            Err(e) => Ok(format!("error: {e}")),
        },
        None => Ok("no symmetrizing form found".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_parsing() {
        assert_eq!(CharSelector::parse("0"), Some(CharSelector::Char0));
        assert_eq!(CharSelector::parse("char2"), Some(CharSelector::Char2));
        assert_eq!(CharSelector::parse("all"), Some(CharSelector::All));
        assert_eq!(CharSelector::parse("7"), None);
    }

    #[test]
    fn char3_block_passes() {
        let table = verify_paper_tables(CharSelector::Char3, &ReportConfig::default()).unwrap();
        assert!(!table.rows.is_empty());
        for row in &table.rows {
            assert!(row.pass, "{row:?}");
        }
    }
}

//! Distinguishing the reference pairs: every pair the classification
//! separates by a printed invariant must come out `Distinguished`, with the
//! separating invariant listed. Reports and the verification table must also
//! reproduce bit-for-bit under the default seed.

use quivalg::algebra::FdAlgebra;
use quivalg::catalog::{instantiate, FamilyId, ParamSet};
use quivalg::field::FieldSpec;
use quivalg::report::{
    build_report, compare_reports, AlgebraIdentity, InvariantReport, Overall, ReportConfig,
};
use quivalg::rewrite::complete_rewriting;
use quivalg::verify::{verify_paper_tables, CharSelector};

fn report(id: FamilyId, lambda: Option<i64>, field: &FieldSpec) -> InvariantReport {
    let params = ParamSet {
        lambda: lambda.map(|v| field.from_int(v)),
        ..Default::default()
    };
    let p = instantiate(id, &params, field).unwrap();
    let a = FdAlgebra::construct(complete_rewriting(&p, 30).unwrap()).unwrap();
    build_report(
        &a,
        AlgebraIdentity::Family {
            family: id.name().into(),
            params: Vec::new(),
        },
        &ReportConfig::default(),
    )
    .unwrap()
}

#[test]
fn table_pairs_are_distinguished_over_q() {
    let q = FieldSpec::rationals();
    let reports = [
        report(FamilyId::L2Prime, None, &q),
        report(FamilyId::L3PrimeLambda, Some(2), &q),
        report(FamilyId::L5Prime, None, &q),
        report(FamilyId::A1Lambda, Some(2), &q),
        report(FamilyId::L9Prime, None, &q),
        report(FamilyId::A4, None, &q),
    ];
    for i in 0..reports.len() {
        for j in i + 1..reports.len() {
            let cmp = compare_reports(&reports[i], &reports[j]);
            assert_eq!(
                cmp.overall,
                Overall::Distinguished,
                "{} vs {} should be distinguished, verdicts: {:?}",
                reports[i].algebra.label(),
                reports[j].algebra.label(),
                cmp.distinguishing
            );
        }
    }
    // The Cartan determinant alone separates the three-simples pair.
    let cmp = compare_reports(&reports[2], &reports[3]);
    assert!(cmp
        .distinguishing
        .iter()
        .any(|d| d.starts_with("cartan.det")));
}

#[test]
fn nonstandard_pairs_distinguished_in_their_characteristic() {
    let gf3 = FieldSpec::prime_field(3).unwrap();
    let l2 = report(FamilyId::L2, None, &gf3);
    let l2p = report(FamilyId::L2Prime, None, &gf3);
    let cmp = compare_reports(&l2, &l2p);
    assert_eq!(cmp.overall, Overall::Distinguished);
    assert!(
        cmp.distinguishing
            .iter()
            .any(|d| d == "orthogonal_quotient.dims"),
        "expected the orthogonal quotient to separate, got {:?}",
        cmp.distinguishing
    );

    let gf2 = FieldSpec::prime_field(2).unwrap();
    let l9 = report(FamilyId::L9, None, &gf2);
    let l9p = report(FamilyId::L9Prime, None, &gf2);
    let cmp = compare_reports(&l9, &l9p);
    assert_eq!(cmp.overall, Overall::Distinguished);
    assert!(
        cmp.distinguishing.iter().any(|d| d == "hh.dims[1..]")
            || cmp.distinguishing.iter().any(|d| d == "kulshammer.dims"),
        "expected Hochschild or Kulshammer data to separate, got {:?}",
        cmp.distinguishing
    );

    let l5 = report(FamilyId::L5, None, &gf2);
    let l5p = report(FamilyId::L5Prime, None, &gf2);
    let cmp = compare_reports(&l5, &l5p);
    assert_eq!(cmp.overall, Overall::Distinguished);
}

#[test]
fn same_algebra_not_distinguished_and_no_equivalence_claim() {
    let gf5 = FieldSpec::prime_field(5).unwrap();
    let r1 = report(FamilyId::ALambda, Some(2), &gf5);
    let r2 = report(FamilyId::ALambda, Some(2), &gf5);
    let cmp = compare_reports(&r1, &r2);
    assert_eq!(cmp.overall, Overall::NotDistinguished);
    assert!(cmp.distinguishing.is_empty());
}

#[test]
fn scalar_problem_pairs_stay_undecided() {
    // Different admissible lambda values are not separated by these
    // invariants; the tool must refuse to claim anything beyond that.
    let q = FieldSpec::rationals();
    let r2 = report(FamilyId::L3PrimeLambda, Some(2), &q);
    let r3 = report(FamilyId::L3PrimeLambda, Some(3), &q);
    let cmp = compare_reports(&r2, &r3);
    assert_eq!(cmp.overall, Overall::NotDistinguished);
}

#[test]
fn report_json_roundtrip() {
    let gf3 = FieldSpec::prime_field(3).unwrap();
    let r = report(FamilyId::L2Prime, None, &gf3);
    let json = serde_json::to_string(&r).unwrap();
    let back: InvariantReport = serde_json::from_str(&json).unwrap();
    assert_eq!(r, back);
    assert_eq!(json, serde_json::to_string(&back).unwrap());
}

#[test]
fn verification_table_is_reproducible() {
    let config = ReportConfig::default();
    let t1 = verify_paper_tables(CharSelector::Char3, &config).unwrap();
    let t2 = verify_paper_tables(CharSelector::Char3, &config).unwrap();
    assert_eq!(
        serde_json::to_string(&t1).unwrap(),
        serde_json::to_string(&t2).unwrap()
    );
}

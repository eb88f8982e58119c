use std::collections::HashSet;

use super::*;
use crate::tensor::DEFAULT_TOL;

#[test]
fn catalog_is_large_and_ids_unique() {
    let all = list_identities();
    assert!(all.len() >= 50, "only {} identities", all.len());
    let ids: HashSet<_> = all.iter().map(|i| i.id).collect();
    assert_eq!(ids.len(), all.len());
}

#[test]
fn every_entry_builds_at_a_sample_point() {
    for ident in list_identities() {
        let p = &ident.points(DEFAULT_SEED)[0];
        let (l, r) = ident.instantiate(p).unwrap_or_else(|e| panic!("{}: {e}", ident.id));
        l.evaluate().unwrap_or_else(|e| panic!("{} lhs: {e}", ident.id));
        r.evaluate().unwrap_or_else(|e| panic!("{} rhs: {e}", ident.id));
    }
}

#[test]
fn verify_all_passes() {
    let reports = verify_all(DEFAULT_TOL, DEFAULT_SEED);
    let failed: Vec<_> =
        reports.iter().filter(|r| !r.pass).map(|r| format!("{} dev={:e} err={:?}", r.id, r.max_deviation, r.error)).collect();
    assert!(failed.is_empty(), "failures:\n{}", failed.join("\n"));
}

#[test]
fn reports_follow_catalog_order() {
    let ids: Vec<_> = verify_all(DEFAULT_TOL, 7).into_iter().map(|r| r.id).collect();
    let want: Vec<_> = list_identities().iter().map(|i| i.id.to_string()).collect();
    assert_eq!(ids, want);
}

#[test]
fn unknown_id_is_an_error() {
    assert_eq!(verify("no.such-thing", DEFAULT_TOL).unwrap_err(), CatalogError::UnknownId("no.such-thing".into()));
    assert!(matches!(instantiate("nope", &Params::new()), Err(CatalogError::UnknownId(_))));
}

#[test]
fn out_of_space_params_are_rejected() {
    let p = Params::new().with("x", ParamValue::Int(2)).with("z", ParamValue::Int(0));
    let err = instantiate("bell.sub-circuit", &p).unwrap_err();
    assert!(matches!(err, CatalogError::BadParam { ref name, .. } if name == "x"), "{err}");

    let missing = instantiate("bell.sub-circuit", &Params::new().with("x", ParamValue::Int(1))).unwrap_err();
    assert!(matches!(missing, CatalogError::BadParam { ref name, .. } if name == "z"));

    let extra = instantiate("cnot.wake-chain", &Params::new().with("q", ParamValue::Int(0))).unwrap_err();
    assert!(matches!(extra, CatalogError::BadParam { .. }));
}

#[test]
fn zero_tolerance_exposes_rounding() {
    let reports = verify_all(0.0, DEFAULT_SEED);
    assert!(reports.iter().any(|r| !r.pass));
    for r in reports.iter().filter(|r| !r.pass) {
        assert!(r.error.is_none(), "{}", r.id);
        assert!(r.max_deviation > 0.0 && r.max_deviation < 1e-12, "{} {}", r.id, r.max_deviation);
    }
}

#[test]
fn verification_is_deterministic() {
    let strip = |v: Vec<VerificationReport>| v.into_iter().map(|r| (r.id, r.points, r.max_deviation.to_bits())).collect::<Vec<_>>();
    assert_eq!(strip(verify_all(DEFAULT_TOL, 11)), strip(verify_all(DEFAULT_TOL, 11)));
}

#[test]
fn point_counts() {
    let count = |id| find(id).unwrap().points(DEFAULT_SEED).len();
    assert_eq!(count("cnot.wake-chain"), 1);
    assert_eq!(count("meas.cnot-to-2meas"), 8);
    assert_eq!(count("bell.marginals"), 16);
    assert_eq!(count("qft.matrix-element"), 256);
    assert_eq!(count("pauli.z-rotation"), 15);
}

#[test]
fn one_measurement_cnot_needs_exponent_k() {
    let dev = |j, k, printed| {
        let (l, r) = protocols::cnot_to_1meas_sides(j, k, printed).unwrap();
        l.evaluate().unwrap().max_deviation(&r.evaluate().unwrap()).unwrap()
    };
    for j in 0..2 {
        for k in 0..2 {
            assert!(dev(j, k, false) < 1e-12);
        }
    }
    // the printed exponent j agrees only when j = k
    assert!(dev(0, 1, true) > 0.5);
    assert!(dev(1, 0, true) > 0.5);
}

#[test]
fn teleportation_instance_has_factor_two() {
    let p = Params::new()
        .with("x", ParamValue::Int(1))
        .with("z", ParamValue::Int(1))
        .with("psi", ParamValue::State(vec![crate::tensor::c(0.6, 0.0), crate::tensor::c(0.0, 0.8)]));
    let (l, r) = instantiate("tele.main", &p).unwrap();
    let lhs = &l.terms[0];
    assert!(lhs.elements().iter().any(|e| matches!(e, crate::circuit::Element::Scalar(z) if (z.re - 2.0).abs() < 1e-15)));
    assert_eq!(r.terms[0].wires().len(), 1);
    assert!(l.evaluate().unwrap().max_deviation(&r.evaluate().unwrap()).unwrap() < 1e-12);
}

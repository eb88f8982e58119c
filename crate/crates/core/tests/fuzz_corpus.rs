//! Replays the checked-in fuzz corpus through the fuzz targets' properties.

use std::fs;
use std::path::PathBuf;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn circuit_seeds_parse_and_evaluate() {
    for (path, text) in seeds("parse_circuit") {
        let c = qcpaul::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        qcpaul::evaluate(&c).unwrap();
    }
}

#[test]
fn roundtrip_seeds() {
    for (path, text) in seeds("roundtrip_text") {
        let c = qcpaul::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(qcpaul::parse(&qcpaul::to_text(&c)).unwrap(), c, "{}", path.display());
    }
}

#[test]
fn cexpr_seeds() {
    for (path, text) in seeds("parse_cexpr") {
        let z = qcpaul::circuit::expr::parse_cexpr(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(z.re.is_finite() && z.im.is_finite());
    }
}

#[test]
fn garbage_does_not_panic() {
    for text in ["", "wires:", "wires: a a", "CNOT a -> b", "wires: a\nRZ( on a", "wires: a\nMAT2 [[1", "wires: a\nscalar exp(", "\u{0}\u{ff}"] {
        let _ = qcpaul::parse(text);
        let _ = qcpaul::circuit::expr::parse_cexpr(text);
    }
}

use super::dsl::ParseErrorKind;
use super::*;
use crate::gates;
use crate::random::{self, CircuitShape};
use crate::tensor::{approx_equal, c};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn eval(text: &str) -> EvalResult {
    evaluate(&parse(text).unwrap()).unwrap()
}

fn col(v: &[f64]) -> ComplexMatrix {
    ComplexMatrix::column(&v.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>())
}

#[test]
fn parse_small_program() {
    let circ = parse("wires: a b\nH a\nCNOT a -> b").unwrap();
    assert_eq!(circ.wires().len(), 2);
    assert_eq!(circ.elements(), &[Element::gate(Gate::H, "a"), Element::cnot("a", "b")]);
}

#[test]
fn hadamard_matrix_element_as_scalar() {
    let r = eval("wires: a\nket a |0>\nH a\nbra a <1|");
    assert_eq!(r.matrix.dims(), (1, 1));
    assert!(r.in_wires.is_empty() && r.out_wires.is_empty());
    for a in 0..2u8 {
        for b in 0..2u8 {
            let text = format!("wires: a\nket a |{b}>\nH a\nbra a <{a}|");
            let want = if a * b == 1 { -1.0 } else { 1.0 } / 2f64.sqrt();
            assert!((eval(&text).scalar().unwrap() - c(want, 0.0)).norm() < TOL);
        }
    }
}

#[test]
fn parse_errors_carry_line_and_wire() {
    let err = parse("wires: a\nket a |0>\nket a |1>").unwrap_err();
    assert_eq!(err.line, 3);
    assert_eq!(err.kind, ParseErrorKind::Circuit(CircuitError::DuplicateKet("a".into())));
    assert!(err.to_string().contains('a'));

    let err = parse("wires: a\n\nH q").unwrap_err();
    assert_eq!(err.line, 3);
    assert_eq!(err.kind, ParseErrorKind::Circuit(CircuitError::UnknownWire("q".into())));

    let err = parse("wires: a b\nMAT4 [[1, 0], [0, 1]] on a b").unwrap_err();
    assert!(matches!(err.kind, ParseErrorKind::MalformedMatrix(_)), "{err}");
    let err = parse("wires: a\nMAT2 [[1, 0], [0]] on a").unwrap_err();
    assert!(matches!(err.kind, ParseErrorKind::MalformedMatrix(_)), "{err}");

    let err = parse("wires: a\n# note\nFOO a").unwrap_err();
    assert_eq!((err.line, err.kind), (3, ParseErrorKind::UnknownGate("FOO".into())));

    let err = parse("wires: a\nbra a <0|\nbra a <1|").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::Circuit(CircuitError::DuplicateBra("a".into())));
    assert!(parse("").is_err());
    assert!(parse("H a").is_err());
    assert!(parse("wires: a a").is_err());
    assert!(parse("wires: a\nH a junk(").is_err());
    assert!(parse("wires: a b\nX a ctrl n(a)").is_err());
    assert!(parse("wires: a\nRZ(i) a").is_err());
    assert!(parse("wires: a\nproj [[1, 1], [0, 1]] on a").is_err());
}

#[test]
fn ket_and_bra_ordering_enforced() {
    assert_eq!(
        parse("wires: a\nH a\nket a |0>").unwrap_err().kind,
        ParseErrorKind::Circuit(CircuitError::KetAfterUse("a".into()))
    );
    assert_eq!(
        parse("wires: a\nbra a <0|\nH a").unwrap_err().kind,
        ParseErrorKind::Circuit(CircuitError::UseAfterBra("a".into()))
    );
}

#[test]
fn every_statement_form_parses() {
    let text = "\
wires: a b c
ket a [0.6, 0.8i]
ket b c [1, 0, 0, 1/sqrt(2)]
X a
Y b ctrl nbar(a)
Z c
S on a
H b
E a b
RZ(pi/8) c ctrl n(a) ctrl n(b)
ROT(0.1, -0.2, 0.3) a
MAT2 [[0, 1], [1, 0]] on b
MAT4 [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]] on c a
X c ctrl proj [[0.5, 0.5], [0.5, 0.5]] (b)
CNOT a -> b ctrl nbar(c)
projz 1 on a
projzz 0 on b c
projpair X Y 1 on a c
proj [[1, 0], [0, 0]] on b
scalar 2*exp(i*pi/3)
bra a <+X|
bra b <-Y|
bra c [1, -1]
";
    let circ = parse(text).unwrap();
    assert_eq!(circ.len(), 22);
    assert_eq!(parse(&to_text(&circ)).unwrap(), circ);
    let r = evaluate(&circ).unwrap();
    assert_eq!(r.matrix.dims(), (1, 1));
}

#[test]
fn cnot_sugar_round_trips() {
    let circ = parse("wires: a b\nX b ctrl n(a)").unwrap();
    assert_eq!(to_text(&circ), "wires: a b\nCNOT a -> b\n");
}

#[test]
fn bell_preparation() {
    let r = eval("wires: a b\nket a |0>\nket b |0>\nH a\nCNOT a -> b");
    let s = 0.5f64.sqrt();
    assert!(approx_equal(&r.matrix, &col(&[s, 0.0, 0.0, s]), TOL).unwrap());
    assert_eq!(r.out_wires, WireList::new(["a", "b"]).unwrap());
}

#[test]
fn cnot_flips_target() {
    let r = eval("wires: a b\nket a |1>\nket b |0>\nCNOT a -> b");
    assert_eq!(r.matrix, col(&[0.0, 0.0, 0.0, 1.0]));
}

#[test]
fn ancilla_readout_equals_projector_box() {
    for j in 0..2u8 {
        let lhs = eval(&format!("wires: a b\nket a |0>\nCNOT b -> a\nbra a <{j}|"));
        let rhs = eval(&format!("wires: b\nprojz {j} on b"));
        assert_eq!(lhs.in_wires, rhs.in_wires);
        assert!(approx_equal(&lhs.matrix, &rhs.matrix, TOL).unwrap());
        assert!(approx_equal(&lhs.matrix, &gates::proj_z(j), TOL).unwrap());
    }
}

#[test]
fn open_dot_control() {
    let r = eval("wires: a b\nX b ctrl nbar(a)");
    let want = &gates::nbar().kron(&gates::pauli(gates::Axis::X)) + &gates::n().kron(&gates::identity2());
    assert_eq!(r.matrix, want);
}

#[test]
fn adjoint_examples() {
    let h = parse("wires: a\nH a").unwrap();
    assert_eq!(h.adjoint(), h);
    let s = parse("wires: a\nscalar i").unwrap();
    assert_eq!(s.adjoint().elements(), &[Element::Scalar(c(0.0, -1.0))]);
    let k = parse("wires: a\nket a |+Y>\nS a").unwrap();
    let r = evaluate(&k).unwrap();
    let ra = evaluate(&k.adjoint()).unwrap();
    assert_eq!(ra.in_wires, r.out_wires);
    assert!(approx_equal(&ra.matrix, &r.matrix.dagger(), TOL).unwrap());
}

#[test]
fn compose_examples() {
    let cn = parse("wires: a b\nCNOT a -> b").unwrap();
    let empty = Circuit::over(&["a", "b"]).unwrap();
    assert_eq!(Circuit::compose(&cn, &empty).unwrap(), cn);
    let twice = Circuit::compose(&cn, &cn).unwrap();
    assert!(approx_equal(&evaluate(&twice).unwrap().matrix, &ComplexMatrix::identity(4), TOL).unwrap());
    let rev = parse("wires: a b\nCNOT b -> a").unwrap();
    let three = Circuit::compose(&Circuit::compose(&cn, &rev).unwrap(), &cn).unwrap();
    assert_eq!(evaluate(&three).unwrap().matrix, gates::exchanger());
    let other = Circuit::over(&["a", "c"]).unwrap();
    assert_eq!(Circuit::compose(&cn, &other).unwrap_err(), CircuitError::WireMismatch);
    let ended = parse("wires: a b\nbra a <0|").unwrap();
    assert!(Circuit::compose(&ended, &cn).is_err());
}

#[test]
fn element_wire_checks() {
    let mut circ = Circuit::over(&["a", "b"]).unwrap();
    assert!(matches!(circ.push(Element::controlled(Gate::E, &["a"], vec![])), Err(CircuitError::Arity(_))));
    assert!(matches!(circ.push(Element::controlled(Gate::X, &["a"], vec![Control::N("a".into())])), Err(CircuitError::RepeatedWire(_))));
    let not_proj = Control::Projector { matrix: gates::pauli(gates::Axis::X), wires: vec!["b".into()] };
    assert!(matches!(circ.push(Element::controlled(Gate::X, &["a"], vec![not_proj])), Err(CircuitError::NotIdempotent(_))));
    let bad_state = Element::Ket { wires: vec!["a".into(), "b".into()], state: StateSpec::Zero };
    assert!(matches!(circ.push(bad_state), Err(CircuitError::Arity(_))));
    assert!(Circuit::over(&["a"; 1]).is_ok());
    let many: Vec<String> = (0..13).map(|i| format!("w{i}")).collect();
    let refs: Vec<&str> = many.iter().map(String::as_str).collect();
    assert!(matches!(Circuit::over(&refs), Err(CircuitError::TooManyWires(13))));
}

#[test]
fn unnormalized_states_pass_through_linearly() {
    let r = eval("wires: a\nket a [2, 0]\nbra a [3, 0]");
    assert_eq!(r.scalar().unwrap(), c(6.0, 0.0));
}

fn rand_circuit(seed: u64, shape: &CircuitShape) -> Circuit {
    random::circuit(&mut ChaCha8Rng::seed_from_u64(seed), shape)
}

#[test]
fn adjoint_is_dagger_on_random_circuits() {
    let shape = CircuitShape { max_wires: 3, max_elements: 6, ..Default::default() };
    for seed in 0..200 {
        let circ = rand_circuit(seed, &shape);
        let r = evaluate(&circ).unwrap();
        let ra = evaluate(&circ.adjoint()).unwrap();
        assert_eq!((&ra.in_wires, &ra.out_wires), (&r.out_wires, &r.in_wires));
        assert!(approx_equal(&ra.matrix, &r.matrix.dagger(), 1e-10).unwrap(), "seed {seed}");
        let rc = evaluate(&circ.conjugate()).unwrap();
        assert!(approx_equal(&rc.matrix, &r.matrix.conj(), 1e-10).unwrap(), "seed {seed}");
        let rt = evaluate(&circ.transpose()).unwrap();
        assert!(approx_equal(&rt.matrix, &r.matrix.transpose(), 1e-10).unwrap(), "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let circ = rand_circuit(seed, &CircuitShape { max_wires: 4, max_elements: 10, ..Default::default() });
        prop_assert_eq!(parse(&to_text(&circ)).unwrap(), circ);
    }

    #[test]
    fn double_adjoint_evaluates_equal(seed in any::<u64>()) {
        let circ = rand_circuit(seed, &CircuitShape::default());
        let a = evaluate(&circ).unwrap();
        let b = evaluate(&circ.adjoint().adjoint()).unwrap();
        prop_assert!(a.max_deviation(&b).unwrap() <= 1e-12);
    }

    #[test]
    fn scalar_insertion_multiplies(seed in any::<u64>(), re in -2.0f64..2.0, im in -2.0f64..2.0, at in 0usize..8) {
        let circ = rand_circuit(seed, &CircuitShape::default());
        let z = c(re, im);
        let at = at.min(circ.len());
        let with = circ.splice(at, 0, vec![Element::Scalar(z)]).unwrap();
        let a = evaluate(&circ).unwrap();
        let b = evaluate(&with).unwrap();
        prop_assert!(approx_equal(&b.matrix, &a.matrix.scale(z), 1e-12).unwrap());
    }

    #[test]
    fn disjoint_elements_commute(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wires = random::labels(4);
        let e1 = random::body_element(&mut rng, &wires[..2], false);
        let e2 = random::body_element(&mut rng, &wires[2..], false);
        let all = WireList::new(wires.clone()).unwrap();
        let one = evaluate(&Circuit::new(all.clone(), vec![e1.clone(), e2.clone()]).unwrap()).unwrap();
        let two = evaluate(&Circuit::new(all, vec![e2, e1]).unwrap()).unwrap();
        prop_assert!(one.max_deviation(&two).unwrap() <= 1e-12);
    }

    #[test]
    fn fully_contracted_is_scalar(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let body = random::circuit(&mut rng, &CircuitShape { boundaries: false, ..Default::default() });
        let mut elements: Vec<Element> = body.wires().iter().map(|w| Element::ket(w, StateSpec::PlusX)).collect();
        elements.extend(body.elements().iter().cloned());
        elements.extend(body.wires().iter().map(|w| Element::bra(w, StateSpec::One)));
        let closed = Circuit::new(body.wires().clone(), elements).unwrap();
        prop_assert_eq!(evaluate(&closed).unwrap().matrix.dims(), (1, 1));
    }
}

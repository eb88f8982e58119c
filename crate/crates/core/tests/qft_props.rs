use proptest::prelude::*;

use qcpaul::circuit::{Element, Gate};
use qcpaul::qft::{self, QftForm};
use qcpaul::tensor::approx_equal;
use qcpaul::evaluate;

fn form(b: bool) -> QftForm {
    if b {
        QftForm::OneTwoThree
    } else {
        QftForm::ThreeTwoOne
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn built_qft_matches_dft(nb in 1usize..=6, f in any::<bool>()) {
        let c = qft::build_qft(nb, form(f)).unwrap();
        prop_assert!(approx_equal(&evaluate(&c).unwrap().matrix, &qft::dft_matrix(nb).unwrap(), 1e-9).unwrap());
    }

    #[test]
    fn gate_counts(nb in 1usize..=8, f in any::<bool>()) {
        let c = qft::build_qft(nb, form(f)).unwrap();
        let count = |p: fn(&Element) -> bool| c.elements().iter().filter(|e| p(e)).count();
        prop_assert_eq!(count(|e| matches!(e, Element::Gate { gate: Gate::H, .. })), nb);
        prop_assert_eq!(count(|e| matches!(e, Element::Gate { gate: Gate::Matrix(_), .. })), nb * (nb - 1) / 2);
        prop_assert_eq!(count(|e| matches!(e, Element::Gate { gate: Gate::E, .. })), nb / 2);
    }

    #[test]
    fn transpose_symmetry(nb in 1usize..=6, f in any::<bool>()) {
        let d = qft::dft_matrix(nb).unwrap();
        prop_assert!(approx_equal(&d, &d.transpose(), 1e-12).unwrap());
        let c = qft::build_qft(nb, form(f)).unwrap();
        let t = c.adjoint().conjugate();
        prop_assert!(approx_equal(&evaluate(&t).unwrap().matrix, &evaluate(&c).unwrap().matrix, 1e-10).unwrap());
    }

    #[test]
    fn reversal_is_an_involution(nb in 1usize..=6) {
        let r = evaluate(&qft::bit_reversal_circuit(nb).unwrap()).unwrap().matrix;
        prop_assert!(approx_equal(&(&r * &r), &qcpaul::ComplexMatrix::identity(1 << nb), 0.0).unwrap());
    }

    #[test]
    fn matrix_elements_match_dft(nb in 1usize..=5, x in 0usize..32, y in 0usize..32) {
        let (x, y) = (x % (1 << nb), y % (1 << nb));
        let got = qft::qft_matrix_element(&qft::bits_of(x, nb), &qft::bits_of(y, nb)).unwrap();
        prop_assert!((got - qft::dft_matrix(nb).unwrap().get(y, x)).norm() <= 1e-12);
    }
}

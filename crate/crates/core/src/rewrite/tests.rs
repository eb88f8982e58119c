use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sample;
use super::*;
use crate::circuit::{evaluate, ProjectorKind, StateSpec};
use crate::random;
use crate::tensor::{approx_equal, c, ComplexMatrix, WireList};

const SOUND_TOL: f64 = 1e-10;
const CIRCUITS_PER_RULE: usize = 500;

fn ctl_n(w: &str) -> Control {
    Control::N(w.to_string())
}

fn dev(a: &Circuit, b: &Circuit) -> f64 {
    evaluate(a).unwrap().max_deviation(&evaluate(b).unwrap()).unwrap()
}

#[test]
fn every_rule_has_a_generator_and_an_inverse_pairing() {
    for r in rules() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let labels = random::labels(4);
        let w: Vec<&str> = labels.iter().map(String::as_str).collect();
        let win = sample::window(r.id, &mut rng, &w).unwrap();
        assert_eq!(win.len(), r.arity, "{}", r.id);
        assert!(r.matches(&win).is_some(), "{} does not match its own window", r.id);
    }
}

#[test]
fn soundness_on_random_circuits() {
    for r in rules() {
        let mut rng = ChaCha8Rng::seed_from_u64(crate::catalog::fnv1a(r.id));
        let mut checked = 0;
        for _ in 0..CIRCUITS_PER_RULE {
            let circ = sample::circuit_with_site(r.id, &mut rng).unwrap();
            let sites = find_sites(&circ, r.id).unwrap();
            assert!(!sites.is_empty(), "{}: generated circuit has no site", r.id);
            for s in &sites {
                let out = apply(&circ, r.id, s).unwrap();
                assert_eq!(out.wires(), circ.wires());
                let d = dev(&circ, &out);
                assert!(d <= SOUND_TOL, "{} at {}: deviation {d:e}\n{}", r.id, s.start, crate::circuit::to_text(&circ));
                checked += 1;
            }
        }
        assert!(checked >= CIRCUITS_PER_RULE);
    }
}

#[test]
fn permutation_rules_make_progress() {
    let perm = [
        "wake-chain",
        "wake-chain-alt",
        "wake-loop",
        "wake-sigz",
        "perm-two-ctrl-u",
        "wake-times-dot",
        "wake-chain-gen",
        "wake-theta",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for id in perm {
        for _ in 0..50 {
            let circ = sample::circuit_with_site(id, &mut rng).unwrap();
            for s in find_sites(&circ, id).unwrap() {
                let out = apply(&circ, id, &s).unwrap();
                let again = find_sites(&out, id).unwrap();
                assert!(!again.iter().any(|t| t.same_match(&s)), "{id} re-matches at {}", s.start);
            }
        }
    }
}

#[test]
fn sampler_rejects_unknown_rules_and_short_wire_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    assert!(matches!(sample::window("nope", &mut rng, &["a", "b", "c"]), Err(RewriteError::UnknownRule(_))));
    assert!(sample::window("wake-loop", &mut rng, &["a", "b"]).is_err());
}

#[test]
fn empty_circuit_has_no_sites() {
    let c = Circuit::over(&["a", "b"]).unwrap();
    for r in rules() {
        assert!(find_sites(&c, r.id).unwrap().is_empty());
    }
}

#[test]
fn unknown_rule() {
    let c = Circuit::over(&["a"]).unwrap();
    assert_eq!(find_sites(&c, "nope").unwrap_err(), RewriteError::UnknownRule("nope".into()));
}

fn chain3() -> Circuit {
    CircuitBuilder::new(&["a", "b", "c"]).cnot("a", "b").cnot("b", "c").build().unwrap()
}

use crate::circuit::CircuitBuilder;

#[test]
fn wake_chain_emits_wake() {
    let c = chain3();
    let sites = find_sites(&c, "wake-chain").unwrap();
    assert_eq!(sites.len(), 1);
    let out = apply(&c, "wake-chain", &sites[0]).unwrap();
    let want = [Element::cnot("b", "c"), Element::cnot("a", "b"), Element::cnot("a", "c")];
    assert_eq!(out.elements(), &want[..]);
    // and back
    let back = apply_at(&out, "wake-chain-inv", 0).unwrap();
    assert_eq!(back, c);
}

#[test]
fn stale_site_is_rejected() {
    let c = chain3();
    let site = find_sites(&c, "wake-chain").unwrap().remove(0);
    let changed = CircuitBuilder::new(&["a", "b", "c"]).cnot("a", "c").cnot("b", "c").build().unwrap();
    assert_eq!(apply(&changed, "wake-chain", &site).unwrap_err(), RewriteError::StaleSite(0));
    let short = Circuit::over(&["a", "b", "c"]).unwrap();
    assert!(matches!(apply(&short, "wake-chain", &site), Err(RewriteError::StaleSite(0))));
}

#[test]
fn wrong_rule_for_site_is_no_match() {
    let c = chain3();
    let site = find_sites(&c, "wake-chain").unwrap().remove(0);
    assert!(matches!(apply(&c, "wake-loop", &site), Err(RewriteError::NoMatch { .. })));
}

#[test]
fn perm_two_ctrl_u_order_and_wake() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (u1, u2) = (random::unitary2(&mut rng), random::unitary2(&mut rng));
    let p1 = random::projector(&mut rng, 1);
    let pr = |m: &ComplexMatrix| Control::Projector { matrix: m.clone(), wires: vec!["a".into()] };
    // U2^{π2} first, then U1^{π1}, with π2 = 1 - π1
    let p2 = &ComplexMatrix::identity(2) - &p1;
    let c = CircuitBuilder::new(&["a", "c"])
        .ctrl(Gate::Matrix(u2.clone()), &["c"], vec![pr(&p2)])
        .ctrl(Gate::Matrix(u1.clone()), &["c"], vec![pr(&p1)])
        .build()
        .unwrap();
    let out = apply_at(&c, "perm-two-ctrl-u", 0).unwrap();
    assert_eq!(out.elements()[0], c.elements()[1]);
    assert_eq!(out.elements()[1], c.elements()[0]);
    let Element::Gate { gate: Gate::Matrix(w), controls, .. } = &out.elements()[2] else { panic!("wake") };
    let want = &(&(&u1 * &u2) * &u1.dagger()) * &u2.dagger();
    assert!(approx_equal(w, &want, 1e-12).unwrap());
    assert!(matches!(&controls[..], [Control::Projector { .. }]));
    assert!(dev(&c, &out) < SOUND_TOL);
}

#[test]
fn non_commuting_controls_do_not_match() {
        // |+><+| against n
    let (p, q) = (ComplexMatrix::from_real(2, 2, &[0.5, 0.5, 0.5, 0.5]), gates::n());
    let comm = (&(&p * &q) - &(&q * &p)).max_abs();
    assert!(comm > 1e-3, "oracle: commutator norm {comm}");
    let pr = |m: &ComplexMatrix| Control::Projector { matrix: m.clone(), wires: vec!["a".into()] };
    let c = CircuitBuilder::new(&["a", "c"])
        .ctrl(Gate::H, &["c"], vec![pr(&p)])
        .ctrl(Gate::Y, &["c"], vec![pr(&q)])
        .build()
        .unwrap();
    assert!(find_sites(&c, "perm-two-ctrl-u").unwrap().is_empty());
    let g = CircuitBuilder::new(&["a", "c"])
        .ctrl(Gate::Z, &["c"], vec![pr(&q)])
        .ctrl(Gate::X, &["c"], vec![pr(&p)])
        .build()
        .unwrap();
    assert!(find_sites(&g, "wake-chain-gen").unwrap().is_empty());
}

use crate::gates;

#[test]
fn wake_theta_wake() {
    let c = CircuitBuilder::new(&["a", "b"]).gate(Gate::Rz(0.4), "b").cnot("a", "b").build().unwrap();
    let out = apply_at(&c, "wake-theta", 0).unwrap();
    assert_eq!(out.elements()[2], Element::controlled(Gate::Rz(-0.8), &["b"], vec![ctl_n("a")]));
    assert!(dev(&c, &out) < SOUND_TOL);
}

#[test]
fn decompose_controlled_x_is_cnot() {
    let c = CircuitBuilder::new(&["a", "b"]).cnot("a", "b").build().unwrap();
    let out = decompose_controlled_u(&c, &Site::at(&c, 0).unwrap()).unwrap();
    assert_eq!(out.len(), 7);
    assert!(approx_equal(&evaluate(&out).unwrap().matrix, &gates::cnot(), 1e-12).unwrap());
}

#[test]
fn decompose_controlled_identity_is_identity() {
    let c = CircuitBuilder::new(&["a", "b"]).ctrl(Gate::Matrix(ComplexMatrix::identity(2)), &["b"], vec![ctl_n("a")]).build().unwrap();
    let out = decompose_controlled_u(&c, &Site::at(&c, 0).unwrap()).unwrap();
    assert!(approx_equal(&evaluate(&out).unwrap().matrix, &ComplexMatrix::identity(4), 1e-12).unwrap());
}

#[test]
fn decompose_n2_controlled_puts_phase_under_a_dot() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let u = random::unitary2(&mut rng);
    let c = CircuitBuilder::new(&["a", "b", "c"]).ctrl(Gate::Matrix(u), &["c"], vec![ctl_n("a"), ctl_n("b")]).build().unwrap();
    let out = decompose_controlled_u(&c, &Site::at(&c, 0).unwrap()).unwrap();
    let Element::Gate { targets, controls, gate: Gate::Matrix(m) } = &out.elements()[6] else { panic!("phase box") };
    assert_eq!(targets, &["b".to_string()]);
    assert_eq!(controls, &[ctl_n("a")]);
    assert!(m.get(0, 1).norm() < 1e-15 && (m.get(0, 0) - crate::tensor::c(1.0, 0.0)).norm() < 1e-15);
    assert!(dev(&c, &out) < SOUND_TOL);
}

#[test]
fn decompose_errors() {
    let e = CircuitBuilder::new(&["a", "b"]).exch("a", "b").build().unwrap();
    assert!(matches!(decompose_controlled_u(&e, &Site::at(&e, 0).unwrap()), Err(RewriteError::NoMatch { .. })));
    let bad = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 1.0]);
    let n = CircuitBuilder::new(&["a", "b"]).ctrl(Gate::Matrix(bad), &["b"], vec![ctl_n("a")]).build().unwrap();
    assert!(matches!(decompose_controlled_u(&n, &Site::at(&n, 0).unwrap()), Err(RewriteError::Gate(_))));
    assert!(matches!(Site::at(&n, 3), Err(RewriteError::OutOfBounds { .. })));
}

fn toffoli_oracle() -> ComplexMatrix {
    // permutation matrix swapping |110> and |111>
    let mut m = ComplexMatrix::zeros(8, 8);
    for i in 0..8usize {
        let j = if i >= 6 { i ^ 1 } else { i };
        m.set(j, i, c(1.0, 0.0));
    }
    m
}

#[test]
fn toffoli_reduced_and_decomposed() {
    let c = CircuitBuilder::new(&["a", "b", "c"]).ctrl(Gate::X, &["c"], vec![ctl_n("a"), ctl_n("b")]).build().unwrap();
    let mut cur = reduce_control(&c, &Site::at(&c, 0).unwrap()).unwrap();
    assert_eq!(cur.len(), 5);
    // decompose every remaining controlled one-wire unitary that is not a CNOT
    let mut i = 0;
    while i < cur.len() {
        let e = &cur.elements()[i];
        let controlled = matches!(e, Element::Gate { controls, .. } if !controls.is_empty());
        if controlled && as_cnot(e).is_none() {
            cur = decompose_controlled_u(&cur, &Site::at(&cur, i).unwrap()).unwrap();
            i += 7;
        } else {
            i += 1;
        }
    }
    for e in cur.elements() {
        if let Element::Gate { controls, .. } = e {
            assert!(controls.len() <= 1);
        }
    }
    assert!(approx_equal(&evaluate(&cur).unwrap().matrix, &toffoli_oracle(), 1e-12).unwrap());
}

#[test]
fn reduce_n3_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let u = random::unitary2(&mut rng);
    let c = CircuitBuilder::new(&["a", "b", "cc", "d"])
        .ctrl(Gate::Matrix(u), &["d"], vec![ctl_n("a"), ctl_n("b"), ctl_n("cc")])
        .build()
        .unwrap();
    let out = reduce_control(&c, &Site::at(&c, 0).unwrap()).unwrap();
    let Element::Gate { targets, controls, .. } = &out.elements()[1] else { panic!() };
    assert_eq!(targets, &["cc".to_string()]);
    assert_eq!(controls, &[ctl_n("a"), ctl_n("b")]);
    assert!(dev(&c, &out) < SOUND_TOL);
}

#[test]
fn nearest_neighbour_patterns() {
    let w = ["a", "b", "c", "d", "e", "f"];
    let c2 = CircuitBuilder::new(&w[..3]).cnot("a", "c").build().unwrap();
    let n2 = nearest_neighborize(&c2).unwrap();
    let want2 = [Element::cnot("b", "c"), Element::cnot("a", "b"), Element::cnot("b", "c"), Element::cnot("a", "b")];
    assert_eq!(n2.elements(), &want2[..]);
    let c3 = CircuitBuilder::new(&w[..4]).cnot("a", "d").build().unwrap();
    assert_eq!(nearest_neighborize(&c3).unwrap().len(), 8);
    let adj = CircuitBuilder::new(&w[..3]).cnot("a", "b").cnot("c", "b").h("a").build().unwrap();
    assert_eq!(nearest_neighborize(&adj).unwrap(), adj);
    for (ctl, tgt, count) in [("a", "e", 18), ("f", "a", 38), ("e", "b", 8), ("d", "b", 4)] {
        let c = CircuitBuilder::new(&w).cnot(ctl, tgt).build().unwrap();
        let out = nearest_neighborize(&c).unwrap();
        assert_eq!(out.len(), count, "{ctl}->{tgt}");
        let pos = |x: &str| w.iter().position(|y| *y == x).unwrap();
        for e in out.elements() {
            let (p, q) = as_cnot(e).unwrap();
            assert_eq!(pos(p).abs_diff(pos(q)), 1);
        }
        assert!(dev(&c, &out) < SOUND_TOL, "{ctl}->{tgt}");
    }
}

#[test]
fn nearest_neighbour_keeps_random_circuits() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let shape = random::CircuitShape { max_wires: 5, max_elements: 8, ..Default::default() };
    for _ in 0..100 {
        let c = random::circuit(&mut rng, &shape);
        let out = nearest_neighborize(&c).unwrap();
        assert!(dev(&c, &out) < SOUND_TOL);
    }
}

fn n3_circuit() -> Circuit {
    CircuitBuilder::new(&["a", "b", "c", "d", "e"])
        .ctrl(Gate::X, &["e"], vec![ctl_n("a"), ctl_n("b"), ctl_n("c")])
        .build()
        .unwrap()
}

#[test]
fn lower_n3_as_drawn() {
    let c = n3_circuit();
    let out = lower_n3_cnot(&c, &Site::at(&c, 0).unwrap(), "d").unwrap();
    assert_eq!(out.len(), 4);
    let (m1, m2) = (evaluate(&c).unwrap().matrix, evaluate(&out).unwrap().matrix);
    assert_eq!(m1.dims(), (32, 32));
    assert!(approx_equal(&m1, &m2, 1e-12).unwrap());
}

#[test]
fn lower_n3_twice() {
    let base = n3_circuit();
    let c = CircuitBuilder::from_circuit(base)
        .h("d")
        .ctrl(Gate::X, &["a"], vec![ctl_n("c"), ctl_n("d"), ctl_n("e")])
        .build()
        .unwrap();
    let once = lower_n3_cnot(&c, &Site::at(&c, 0).unwrap(), "d").unwrap();
    let last = once.len() - 1;
    let twice = lower_n3_cnot(&once, &Site::at(&once, last).unwrap(), "b").unwrap();
    assert_eq!(twice.len(), 9);
    assert!(dev(&c, &twice) < SOUND_TOL);
}

#[test]
fn lower_n3_rejections() {
    let c = n3_circuit();
    let s = Site::at(&c, 0).unwrap();
    assert_eq!(lower_n3_cnot(&c, &s, "a").unwrap_err(), RewriteError::NoAncilla("a".into()));
    assert_eq!(lower_n3_cnot(&c, &s, "zz").unwrap_err(), RewriteError::NoAncilla("zz".into()));
    let t = CircuitBuilder::new(&["a", "b", "c"]).ctrl(Gate::X, &["c"], vec![ctl_n("a"), ctl_n("b")]).build().unwrap();
    assert!(matches!(lower_n3_cnot(&t, &Site::at(&t, 0).unwrap(), "a"), Err(RewriteError::NoMatch { .. })));
    let closed = CircuitBuilder::new(&["a", "b", "c", "d", "e"])
        .bra_bit("d", 0)
        .ctrl(Gate::X, &["e"], vec![ctl_n("a"), ctl_n("b"), ctl_n("c")])
        .build()
        .unwrap();
    assert_eq!(lower_n3_cnot(&closed, &Site::at(&closed, 1).unwrap(), "d").unwrap_err(), RewriteError::NoAncilla("d".into()));
}

/// `c` with `ancilla` closed by `|0>` and `<0|`.
fn close(c: &Circuit, ancilla: &str) -> Circuit {
    let mut els = vec![Element::ket(ancilla, StateSpec::Zero)];
    els.extend(c.elements().iter().cloned());
    els.push(Element::bra(ancilla, StateSpec::Zero));
    Circuit::new(c.wires().clone(), els).unwrap()
}

#[test]
fn internal_measurement_to_final() {
    for j in 0..2 {
        let c = CircuitBuilder::new(&["a", "b"]).h("b").proj(ProjectorKind::Z(j), &["b"]).h("b").build().unwrap();
        let conv = Conversion::InternalToFinal { ancilla: "a".into() };
        let out = convert_measurement(&c, &Site::at(&c, 1).unwrap(), &conv).unwrap();
        assert!(dev(&close(&c, "a"), &out) < SOUND_TOL);
    }
}

#[test]
fn bibit_measurement_to_two_cnots() {
    let c = CircuitBuilder::new(&["a", "b"]).proj(ProjectorKind::ZZ(1), &["a", "b"]).build().unwrap();
    let out = convert_measurement(&c, &Site::at(&c, 0).unwrap(), &Conversion::BibitTo2Cnots).unwrap();
    assert_eq!(out.elements()[0], Element::cnot("a", "b"));
    assert_eq!(out.len(), 3);
    assert!(dev(&c, &out) < SOUND_TOL);
    let alt = convert_measurement(&c, &Site::at(&c, 0).unwrap(), &Conversion::BibitToAncilla { ancilla: "a".into() });
    assert_eq!(alt.unwrap_err(), RewriteError::NoAncilla("a".into()));
}

#[test]
fn bibit_to_ancilla_form() {
    for j in 0..2 {
        let c = CircuitBuilder::new(&["a", "b", "c"]).proj(ProjectorKind::ZZ(j), &["b", "c"]).build().unwrap();
        let conv = Conversion::BibitToAncilla { ancilla: "a".into() };
        let out = convert_measurement(&c, &Site::at(&c, 0).unwrap(), &conv).unwrap();
        assert!(dev(&close(&c, "a"), &out) < SOUND_TOL);
    }
}

#[test]
fn cnot_to_two_measurements() {
    for bits in 0..8u8 {
        let (k, j1, j2) = (bits >> 2 & 1, bits >> 1 & 1, bits & 1);
        let c = CircuitBuilder::new(&["a", "b", "c"]).h("a").cnot("a", "c").build().unwrap();
        let conv = Conversion::CnotTo2Meas { ancilla: "b".into(), k, j1, j2 };
        let out = convert_measurement(&c, &Site::at(&c, 1).unwrap(), &conv).unwrap();
        let Some(Element::Scalar(s)) = out.elements().last() else { panic!("scalar last") };
        let sign = if (k ^ j1) & j2 == 1 { -1.0 } else { 1.0 };
        assert!((s.re - sign * 2.0 * 2f64.sqrt()).abs() < 1e-15);
        assert!(dev(&close(&c, "b"), &out) < SOUND_TOL, "k={k} j1={j1} j2={j2}");
    }
}

#[test]
fn conversion_shape_mismatch() {
    let c = CircuitBuilder::new(&["a", "b"]).h("a").build().unwrap();
    let s = Site::at(&c, 0).unwrap();
    assert!(matches!(convert_measurement(&c, &s, &Conversion::BibitTo2Cnots), Err(RewriteError::NoMatch { .. })));
    assert!(matches!(Conversion::from_id("nope", None, [0; 3]), Err(RewriteError::UnknownRule(_))));
    assert_eq!(Conversion::from_id("cnot-to-2meas", Some("b"), [1, 0, 1]).unwrap().id(), "cnot-to-2meas");
}

#[test]
fn conversions_on_random_contexts() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let labels = random::labels(4);
        let core = vec![Element::Projector { kind: ProjectorKind::ZZ(rng.random_range(0..2)), targets: vec!["b".into(), "c".into()] }];
        let body: Vec<String> = labels[1..].to_vec();
        let mut els = Vec::new();
        for _ in 0..3 {
            els.push(random::body_element(&mut rng, &body, true));
        }
        els.extend(core);
        for _ in 0..3 {
            els.push(random::body_element(&mut rng, &body, true));
        }
        let c = Circuit::new(WireList::new(labels.clone()).unwrap(), els).unwrap();
        for conv in [Conversion::BibitTo2Cnots, Conversion::BibitToAncilla { ancilla: "a".into() }] {
            let out = convert_measurement(&c, &Site::at(&c, 3).unwrap(), &conv).unwrap();
            let before = if conv == Conversion::BibitTo2Cnots { c.clone() } else { close(&c, "a") };
            assert!(dev(&before, &out) < SOUND_TOL);
        }
    }
}

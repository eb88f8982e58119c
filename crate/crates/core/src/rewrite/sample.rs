//! Random circuits that contain a site for a given rule, for soundness
//! checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuit::{Circuit, Control, Element, Gate, ProjectorKind};
use crate::random;
use crate::tensor::{ComplexMatrix, WireList};

use super::{find_rule, RewriteError};

fn ctl_n(w: &str) -> Control {
    Control::N(w.to_string())
}

/// A control list on `w`, or on `w` and `extra`.
fn random_controls<R: Rng>(rng: &mut R, w: &str, extra: Option<&str>) -> Vec<Control> {
    let mut out = vec![random::random_control(rng, w)];
    if let (Some(e), true) = (extra, rng.random_bool(0.5)) {
        out.push(random::random_control(rng, e));
    }
    out
}

/// A control list that commutes with `p`: disjoint wires, or on the same
/// wire with the same projector or its complement.
fn commuting_controls<R: Rng>(rng: &mut R, p: &[Control], spare: &str) -> Vec<Control> {
    match rng.random_range(0..3) {
        0 => vec![random::random_control(rng, spare)],
        _ => {
            let first = &p[0];
            let m = first.matrix();
            let m = if rng.random_bool(0.5) { m } else { &ComplexMatrix::identity(2) - &m };
            let w = first.wires()[0].to_string();
            let mut out = vec![Control::Projector { matrix: m, wires: vec![w] }];
            if rng.random_bool(0.5) {
                out.push(random::random_control(rng, spare));
            }
            out
        }
    }
}

fn one_wire_unitary<R: Rng>(rng: &mut R) -> Gate {
    match rng.random_range(0..4) {
        0 => Gate::H,
        1 => Gate::Rz(rng.random_range(-3.0..3.0)),
        2 => Gate::Matrix(ComplexMatrix::identity(2)),
        _ => Gate::Matrix(random::unitary2(rng)),
    }
}

/// A left-hand window for a forward rule, over wires `w` (at least 3).
fn forward_window<R: Rng>(rule: &str, rng: &mut R, w: &[&str]) -> Option<Vec<Element>> {
    let (a, b, cc) = (w[0], w[1], w[2]);
    Some(match rule {
        "wake-chain" | "wake-chain-alt" => vec![Element::cnot(a, b), Element::cnot(b, cc)],
        "wake-loop" => vec![Element::cnot(a, b), Element::cnot(b, a)],
        "wake-sigz" => vec![Element::gate(Gate::Z, b), Element::cnot(a, b)],
        "perm-two-ctrl-u" => {
            loop {
                let p = random_controls(rng, a, None);
                let q = commuting_controls(rng, &p, b);
                let pair = vec![
                    Element::controlled(one_wire_unitary(rng), &[cc], p),
                    Element::controlled(one_wire_unitary(rng), &[cc], q),
                ];
                if pair[0] != pair[1] {
                    break pair;
                }
            }
        }
        "wake-times-dot" => vec![
            Element::controlled(one_wire_unitary(rng), &[cc], vec![ctl_n(b)]),
            Element::controlled(Gate::X, &[b], random_controls(rng, a, w.get(3).copied())),
        ],
        "wake-chain-gen" => {
            let p = random_controls(rng, a, None);
            let q = commuting_controls(rng, &p, b);
            vec![Element::controlled(Gate::Z, &[cc], q), Element::controlled(Gate::X, &[cc], p)]
        }
        "wake-theta" => vec![
            Element::gate(Gate::Rz(rng.random_range(-3.0..3.0)), b),
            Element::controlled(Gate::X, &[b], random_controls(rng, a, Some(cc))),
        ],
        "decompose-ctrl-u" => vec![Element::controlled(one_wire_unitary(rng), &[cc], random_controls(rng, a, Some(b)))],
        "reduce-control" => {
            let mut ctl = random_controls(rng, a, None);
            ctl.push(ctl_n(b));
            ctl.shuffle(rng);
            vec![Element::controlled(one_wire_unitary(rng), &[cc], ctl)]
        }
        "bibit-to-2cnots" => vec![Element::Projector { kind: ProjectorKind::ZZ(rng.random_range(0..2)), targets: vec![a.into(), b.into()] }],
        _ => return None,
    })
}

/// A random window that `rule` matches, over wires `w` (at least 3;
/// a fourth is used when present). Windows for an inverse rule are the
/// forward rule's output on a random forward window.
pub fn window<R: Rng>(rule: &str, rng: &mut R, w: &[&str]) -> Result<Vec<Element>, RewriteError> {
    if w.len() < 3 {
        return Err(RewriteError::OutOfBounds { start: 0, end: w.len() });
    }
    let unknown = || RewriteError::UnknownRule(rule.to_string());
    find_rule(rule)?;
    match rule.strip_suffix("-inv") {
        Some(fwd) => {
            let lhs = forward_window(fwd, rng, w).ok_or_else(unknown)?;
            find_rule(fwd)?.produce(&lhs)
        }
        None => forward_window(rule, rng, w).ok_or_else(unknown),
    }
}

/// Random kets, a random prefix, `core`, a random suffix and random bras
/// over `labels`.
pub fn embed<R: Rng>(rng: &mut R, labels: &[String], core: Vec<Element>) -> Circuit {
    let mut els = Vec::new();
    for l in labels {
        if rng.random_bool(0.3) {
            els.push(Element::ket(l, random::random_state(rng)));
        }
    }
    for _ in 0..rng.random_range(0..3) {
        els.push(random::body_element(rng, labels, true));
    }
    els.extend(core);
    for _ in 0..rng.random_range(0..3) {
        els.push(random::body_element(rng, labels, true));
    }
    for l in labels {
        if rng.random_bool(0.3) {
            els.push(Element::bra(l, random::random_state(rng)));
        }
    }
    Circuit::new(WireList::new(labels.to_vec()).expect("distinct labels"), els).expect("generated circuit is valid")
}


/// A circuit over three or four wires with a window for `rule` placed in
/// random context, on a random wire assignment.
pub fn circuit_with_site<R: Rng>(rule: &str, rng: &mut R) -> Result<Circuit, RewriteError> {
    let labels = random::labels(3 + rng.random_range(0..2));
    let mut order: Vec<&str> = labels.iter().map(String::as_str).collect();
    order.shuffle(rng);
    let core = window(rule, rng, &order)?;
    Ok(embed(rng, &labels, core))
}

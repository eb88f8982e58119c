//! Seeded generators for unitaries, states, projectors and whole circuits.

use std::f64::consts::PI;

use rand::Rng;

use crate::circuit::{Circuit, Control, Element, Gate, ProjectorKind, StateSpec};
use crate::gates::{self, Axis};
use crate::tensor::{c, Complex, ComplexMatrix, WireList};

/// `rotation(θ⃗)·diag(e^{iφ}, 1)` with uniformly drawn `θ⃗` and `φ`.
pub fn unitary2(rng: &mut impl Rng) -> ComplexMatrix {
    let t = [rng.random_range(-PI..PI), rng.random_range(-PI..PI), rng.random_range(-PI..PI)];
    gates::parameterized_unitary(t, rng.random_range(-PI..PI))
}

/// Random `2^k × 2^k` unitary: Kronecker product of one-wire unitaries
/// interleaved with CNOT layers, so it entangles.
pub fn unitary(rng: &mut impl Rng, k: usize) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(1 << k);
    for _ in 0..2 {
        let layer = (0..k).fold(ComplexMatrix::scalar(c(1.0, 0.0)), |acc, _| acc.kron(&unitary2(rng)));
        u = &layer * &u;
        for w in 0..k.saturating_sub(1) {
            let left = ComplexMatrix::identity(1 << w);
            let right = ComplexMatrix::identity(1 << (k - w - 2));
            u = &left.kron(&gates::cnot()).kron(&right) * &u;
        }
    }
    u
}

/// Random complex vector with entries in the unit square; not normalized.
pub fn vector(rng: &mut impl Rng, len: usize) -> Vec<Complex> {
    (0..len).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
}

/// Random orthogonal projector on `k` wires of rank between 0 and `2^k`.
pub fn projector(rng: &mut impl Rng, k: usize) -> ComplexMatrix {
    let dim = 1usize << k;
    let w = unitary(rng, k);
    let diag: Vec<Complex> = (0..dim).map(|_| c(rng.random_range(0..2) as f64, 0.0)).collect();
    &(&w * &ComplexMatrix::diag(&diag)) * &w.dagger()
}

/// Shape limits for [`circuit`].
#[derive(Clone, Debug)]
pub struct CircuitShape {
    pub max_wires: usize,
    pub max_elements: usize,
    /// Allow kets and bras.
    pub boundaries: bool,
    /// Allow scalar factors and projector boxes.
    pub non_unitary: bool,
}

impl Default for CircuitShape {
    fn default() -> Self {
        Self { max_wires: 3, max_elements: 6, boundaries: true, non_unitary: true }
    }
}

/// Wire labels `a`, `b`, ... .
pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn pick<'a>(rng: &mut impl Rng, pool: &'a [String], k: usize) -> Vec<&'a str> {
    let mut idx: Vec<usize> = (0..pool.len()).collect();
    for i in 0..k {
        let j = rng.random_range(i..idx.len());
        idx.swap(i, j);
    }
    idx[..k].iter().map(|&i| pool[i].as_str()).collect()
}

/// One of the six named one-wire states or a random vector.
pub fn random_state(rng: &mut impl Rng) -> StateSpec {
    match rng.random_range(0..7) {
        0 => StateSpec::Zero,
        1 => StateSpec::One,
        2 => StateSpec::PlusX,
        3 => StateSpec::MinusX,
        4 => StateSpec::PlusY,
        5 => StateSpec::MinusY,
        _ => StateSpec::Vector(vector(rng, 2)),
    }
}

/// A filled dot, an open dot or a random one-wire projector on `w`.
pub fn random_control(rng: &mut impl Rng, w: &str) -> Control {
    match rng.random_range(0..3) {
        0 => Control::N(w.to_string()),
        1 => Control::NBar(w.to_string()),
        _ => Control::Projector { matrix: projector(rng, 1), wires: vec![w.to_string()] },
    }
}

/// One random gate or projector over `wires`.
pub fn body_element(rng: &mut impl Rng, wires: &[String], non_unitary: bool) -> Element {
    let n = wires.len();
    let choices = if non_unitary { 12 } else { 10 };
    loop {
        let kind = rng.random_range(0..choices);
        let two = n >= 2;
        return match kind {
            0..=4 => {
                let gate = match rng.random_range(0..8) {
                    0 => Gate::X,
                    1 => Gate::Y,
                    2 => Gate::Z,
                    3 => Gate::H,
                    4 => Gate::S,
                    5 => Gate::Rz(rng.random_range(-PI..PI)),
                    6 => Gate::Rot([rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)]),
                    _ => Gate::Matrix(unitary2(rng)),
                };
                let n_ctrl = rng.random_range(0..n.min(3));
                let picked = pick(rng, wires, 1 + n_ctrl);
                let controls = picked[1..].iter().map(|w| random_control(rng, w)).collect();
                Element::controlled(gate, &[picked[0]], controls)
            }
            5 | 6 if two => {
                let picked = pick(rng, wires, 2);
                Element::cnot(picked[0], picked[1])
            }
            7 if two => {
                let picked = pick(rng, wires, 2);
                Element::controlled(Gate::E, &picked, vec![])
            }
            8 | 9 if two => {
                let picked = pick(rng, wires, 2);
                Element::controlled(Gate::Matrix(unitary(rng, 2)), &picked, vec![])
            }
            10 => {
                let k = if two { rng.random_range(1..3) } else { 1 };
                let picked = pick(rng, wires, k);
                let kind = match (k, rng.random_range(0..3)) {
                    (1, 0) => ProjectorKind::Z(rng.random_range(0..2)),
                    (1, _) => ProjectorKind::Matrix(projector(rng, 1)),
                    (_, 0) => ProjectorKind::ZZ(rng.random_range(0..2)),
                    (_, 1) => {
                        let a = Axis::ALL[rng.random_range(0..3)];
                        let b = Axis::ALL[rng.random_range(0..3)];
                        ProjectorKind::Pair(a, b, rng.random_range(0..2))
                    }
                    _ => ProjectorKind::Matrix(projector(rng, 2)),
                };
                Element::Projector { kind, targets: picked.iter().map(|s| s.to_string()).collect() }
            }
            11 => Element::Scalar(c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))),
            _ => continue,
        };
    }
}

/// A random valid circuit: kets first, then gates, projectors and scalars,
/// then bras.
pub fn circuit(rng: &mut impl Rng, shape: &CircuitShape) -> Circuit {
    let n = rng.random_range(1..=shape.max_wires);
    let wires = labels(n);
    let total = rng.random_range(0..=shape.max_elements);
    let mut elements = Vec::new();
    let (mut n_kets, mut n_bras) = (0, 0);
    if shape.boundaries && total > 0 {
        n_kets = rng.random_range(0..=n.min(total / 2));
        n_bras = rng.random_range(0..=n.min(total / 2));
    }
    for w in pick(rng, &wires, n_kets) {
        elements.push(Element::ket(w, random_state(rng)));
    }
    for _ in 0..total - n_kets - n_bras {
        elements.push(body_element(rng, &wires, shape.non_unitary));
    }
    for w in pick(rng, &wires, n_bras) {
        elements.push(Element::bra(w, random_state(rng)));
    }
    Circuit::new(WireList::new(wires).expect("distinct"), elements).expect("generated circuit is valid")
}

//! Shorthand used by the catalog entries.

use crate::circuit::{Circuit, CircuitBuilder, CircuitError, Control, Gate, StateSpec};
use crate::gates::Axis;
use crate::tensor::{c, Complex, ComplexMatrix};

use super::Side;

pub(super) type Built = Result<(Side, Side), CircuitError>;

pub(super) fn circ(wires: &[&str]) -> CircuitBuilder {
    CircuitBuilder::new(wires)
}

pub(super) fn n(w: &str) -> Control {
    Control::N(w.to_string())
}

pub(super) fn nbar(w: &str) -> Control {
    Control::NBar(w.to_string())
}

pub(super) fn pi(m: &ComplexMatrix, wires: &[&str]) -> Control {
    Control::Projector { matrix: m.clone(), wires: wires.iter().map(|s| s.to_string()).collect() }
}

pub(super) fn pair(lhs: CircuitBuilder, rhs: CircuitBuilder) -> Built {
    Ok((lhs.build()?.into(), rhs.build()?.into()))
}

pub(super) fn sum(terms: Vec<CircuitBuilder>) -> Result<Side, CircuitError> {
    Ok(Side::sum(terms.into_iter().map(CircuitBuilder::build).collect::<Result<Vec<Circuit>, _>>()?))
}

/// `(-1)^bit`
pub(super) fn sign(bit: u8) -> f64 {
    if bit & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub(super) fn pauli_gate(w: Axis) -> Gate {
    match w {
        Axis::X => Gate::X,
        Axis::Y => Gate::Y,
        Axis::Z => Gate::Z,
    }
}

pub(super) fn axis(i: u8) -> Axis {
    Axis::ALL[i as usize % 3]
}

/// `|±_w>` as a named state.
pub(super) fn eigen_state(w: Axis, minus: u8) -> StateSpec {
    match (w, minus & 1) {
        (Axis::X, 0) => StateSpec::PlusX,
        (Axis::X, _) => StateSpec::MinusX,
        (Axis::Y, 0) => StateSpec::PlusY,
        (Axis::Y, _) => StateSpec::MinusY,
        (Axis::Z, 0) => StateSpec::Zero,
        (Axis::Z, _) => StateSpec::One,
    }
}

pub(super) fn state(v: &[Complex]) -> StateSpec {
    StateSpec::Vector(v.to_vec())
}

pub(super) fn re(x: f64) -> Complex {
    c(x, 0.0)
}

pub(super) fn im(x: f64) -> Complex {
    c(0.0, x)
}

/// `exp(iφπ) = 1 + (e^{iφ} - 1)π` for a projector `π`.
pub(super) fn phase_on_projector(phi: f64, p: &ComplexMatrix) -> ComplexMatrix {
    let id = ComplexMatrix::identity(p.rows());
    &id + &p.scale(Complex::from_polar(1.0, phi) - 1.0)
}

/// `(-1)^π = 1 - 2π`.
pub(super) fn reflection(p: &ComplexMatrix) -> ComplexMatrix {
    &ComplexMatrix::identity(p.rows()) - &p.scale_real(2.0)
}

pub(super) fn matrix_power_dagger2(u: &ComplexMatrix) -> ComplexMatrix {
    let d = u.dagger();
    &d * &d
}

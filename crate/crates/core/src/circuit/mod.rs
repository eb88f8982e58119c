//! Circuit data model: elements over named wires in chronological order.
//!
//! Diagrams in the literature are often drawn with time flowing right to
//! left, so a diagram read left to right must be reversed before it is
//! stored here. Element 0 acts first.

mod dsl;
mod eval;
pub mod expr;

use std::collections::HashSet;

use thiserror::Error;

use crate::gates::{self, Axis};
use crate::tensor::{c, kron, Complex, ComplexMatrix, TensorError, WireList, MAX_WIRES};

pub use dsl::{parse, to_text, ParseError};
pub use eval::{evaluate, EvalResult};

/// Idempotence tolerance for projector payloads.
pub const PROJECTOR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircuitError {
    #[error("wire `{0}` is not declared")]
    UnknownWire(String),
    #[error("wire `{0}` is declared twice")]
    DuplicateWire(String),
    #[error("wire `{0}` already has a ket")]
    DuplicateKet(String),
    #[error("wire `{0}` already has a bra")]
    DuplicateBra(String),
    #[error("ket on wire `{0}` must precede every other use of the wire")]
    KetAfterUse(String),
    #[error("wire `{0}` is used after its bra")]
    UseAfterBra(String),
    #[error("wire `{0}` appears more than once in one element")]
    RepeatedWire(String),
    #[error("{0}")]
    Arity(String),
    #[error("projector on {0} is not idempotent")]
    NotIdempotent(String),
    #[error("register of {0} wires exceeds the limit of {MAX_WIRES}")]
    TooManyWires(usize),
    #[error("wire declarations differ")]
    WireMismatch,
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Gate(#[from] gates::GateError),
}

/// A gate payload acting on its target wires.
#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    X,
    Y,
    Z,
    H,
    /// `i^n = diag(1, i)`
    S,
    /// Exchanger on two wires.
    E,
    /// `exp(i θ σ_Z)`
    Rz(f64),
    /// `exp(i θ⃗·σ⃗)`
    Rot([f64; 3]),
    /// Explicit `2^k × 2^k` matrix on `k` wires.
    Matrix(ComplexMatrix),
}

impl Gate {
    pub fn arity(&self) -> usize {
        match self {
            Gate::E => 2,
            Gate::Matrix(m) => m.qubits().unwrap_or(0),
            _ => 1,
        }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        match self {
            Gate::X => gates::pauli(Axis::X),
            Gate::Y => gates::pauli(Axis::Y),
            Gate::Z => gates::pauli(Axis::Z),
            Gate::H => gates::h(),
            Gate::S => gates::phase_i_n(),
            Gate::E => gates::exchanger(),
            Gate::Rz(t) => gates::rz(*t),
            Gate::Rot(v) => gates::rotation(*v),
            Gate::Matrix(m) => m.clone(),
        }
    }

    pub fn dagger(&self) -> Gate {
        match self {
            Gate::S => Gate::Matrix(gates::phase_i_n().dagger()),
            Gate::Rz(t) => Gate::Rz(-t),
            Gate::Rot([x, y, z]) => Gate::Rot([-x, -y, -z]),
            Gate::Matrix(m) => Gate::Matrix(m.dagger()),
            g => g.clone(),
        }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Gate {
        match self {
            Gate::Y => Gate::Matrix(gates::pauli(Axis::Y).conj()),
            Gate::S => Gate::Matrix(gates::phase_i_n().conj()),
            Gate::Rz(t) => Gate::Rz(-t),
            // σ_Y is imaginary, σ_X and σ_Z real
            Gate::Rot([x, y, z]) => Gate::Rot([-x, *y, -z]),
            Gate::Matrix(m) => Gate::Matrix(m.conj()),
            g => g.clone(),
        }
    }
}

/// One control attached to a gate.
#[derive(Clone, Debug, PartialEq)]
pub enum Control {
    /// Filled dot: `n = |1><1|`.
    N(String),
    /// Open dot: `n̄ = |0><0|`.
    NBar(String),
    /// Arbitrary projector over one or more wires.
    Projector { matrix: ComplexMatrix, wires: Vec<String> },
}

impl Control {
    pub fn wires(&self) -> Vec<&str> {
        match self {
            Control::N(w) | Control::NBar(w) => vec![w.as_str()],
            Control::Projector { wires, .. } => wires.iter().map(String::as_str).collect(),
        }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        match self {
            Control::N(_) => gates::n(),
            Control::NBar(_) => gates::nbar(),
            Control::Projector { matrix, .. } => matrix.clone(),
        }
    }

    fn map_matrix(&self, f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> Control {
        match self {
            Control::Projector { matrix, wires } => Control::Projector { matrix: f(matrix), wires: wires.clone() },
            other => other.clone(),
        }
    }
}

/// Product projector of a control list, with the wires it acts on in order.
pub fn control_projector(controls: &[Control]) -> (ComplexMatrix, Vec<String>) {
    let mut m = ComplexMatrix::scalar(c(1.0, 0.0));
    let mut wires = Vec::new();
    for ctl in controls {
        m = kron(&m, &ctl.matrix());
        wires.extend(ctl.wires().into_iter().map(String::from));
    }
    (m, wires)
}

/// `π⊗U + (1-π)⊗I` over `[control wires..., target wires...]`.
pub fn controlled_matrix(projector: &ComplexMatrix, u: &ComplexMatrix) -> ComplexMatrix {
    let ip = ComplexMatrix::identity(projector.rows());
    let iu = ComplexMatrix::identity(u.rows());
    &kron(projector, u) + &kron(&(&ip - projector), &iu)
}

/// Projector payloads for mid-circuit measurement boxes.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjectorKind {
    /// `|j><j|` on one wire.
    Z(u8),
    /// `Π^j_{ZZ}` on two wires.
    ZZ(u8),
    /// `Π^j_{w1,w2}` on two wires.
    Pair(Axis, Axis, u8),
    /// Explicit idempotent matrix.
    Matrix(ComplexMatrix),
}

impl ProjectorKind {
    pub fn arity(&self) -> usize {
        match self {
            ProjectorKind::Z(_) => 1,
            ProjectorKind::ZZ(_) | ProjectorKind::Pair(..) => 2,
            ProjectorKind::Matrix(m) => m.qubits().unwrap_or(0),
        }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        match self {
            ProjectorKind::Z(j) => gates::proj_z(*j),
            ProjectorKind::ZZ(j) => gates::pi_pair(Axis::Z, Axis::Z, *j),
            ProjectorKind::Pair(a, b, j) => gates::pi_pair(*a, *b, *j),
            ProjectorKind::Matrix(m) => m.clone(),
        }
    }
}

/// A ket or bra payload.
///
/// Named states are single-wire. For a bra, a named state denotes the
/// conjugate transpose of the ket of the same name, while `Vector` holds the
/// covector entries exactly as written.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Zero,
    One,
    PlusX,
    MinusX,
    PlusY,
    MinusY,
    Vector(Vec<Complex>),
}

impl StateSpec {
    pub fn bit(j: u8) -> Self {
        if j & 1 == 0 {
            StateSpec::Zero
        } else {
            StateSpec::One
        }
    }

    /// Number of amplitudes.
    pub fn len(&self) -> usize {
        match self {
            StateSpec::Vector(v) => v.len(),
            _ => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn named_ket(&self) -> Option<Vec<Complex>> {
        let m = match self {
            StateSpec::Zero => gates::basis_ket(0),
            StateSpec::One => gates::basis_ket(1),
            StateSpec::PlusX => gates::eigenstate(Axis::X, true),
            StateSpec::MinusX => gates::eigenstate(Axis::X, false),
            StateSpec::PlusY => gates::eigenstate(Axis::Y, true),
            StateSpec::MinusY => gates::eigenstate(Axis::Y, false),
            StateSpec::Vector(_) => return None,
        };
        Some(m.data().to_vec())
    }

    /// Column entries when used as a ket.
    pub fn ket_entries(&self) -> Vec<Complex> {
        match self {
            StateSpec::Vector(v) => v.clone(),
            named => named.named_ket().expect("named state"),
        }
    }

    /// Row entries when used as a bra.
    pub fn bra_entries(&self) -> Vec<Complex> {
        match self {
            StateSpec::Vector(v) => v.clone(),
            named => named.named_ket().expect("named state").iter().map(|z| z.conj()).collect(),
        }
    }

    /// Switch between ket and bra readings of the same vector.
    fn flip(&self) -> StateSpec {
        match self {
            StateSpec::Vector(v) => StateSpec::Vector(v.iter().map(|z| z.conj()).collect()),
            named => named.clone(),
        }
    }

    fn conj(&self) -> StateSpec {
        match self {
            StateSpec::PlusY => StateSpec::MinusY,
            StateSpec::MinusY => StateSpec::PlusY,
            StateSpec::Vector(v) => StateSpec::Vector(v.iter().map(|z| z.conj()).collect()),
            named => named.clone(),
        }
    }
}

/// One box in a diagram.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Gate { gate: Gate, targets: Vec<String>, controls: Vec<Control> },
    Projector { kind: ProjectorKind, targets: Vec<String> },
    Ket { wires: Vec<String>, state: StateSpec },
    Bra { wires: Vec<String>, state: StateSpec },
    Scalar(Complex),
}

impl Element {
    pub fn gate(gate: Gate, target: &str) -> Self {
        Element::Gate { gate, targets: vec![target.to_string()], controls: vec![] }
    }

    pub fn controlled(gate: Gate, targets: &[&str], controls: Vec<Control>) -> Self {
        Element::Gate { gate, targets: targets.iter().map(|s| s.to_string()).collect(), controls }
    }

    /// `σ_X` on `target` controlled by `n(control)`.
    pub fn cnot(control: &str, target: &str) -> Self {
        Element::controlled(Gate::X, &[target], vec![Control::N(control.to_string())])
    }

    pub fn ket(wire: &str, state: StateSpec) -> Self {
        Element::Ket { wires: vec![wire.to_string()], state }
    }

    pub fn bra(wire: &str, state: StateSpec) -> Self {
        Element::Bra { wires: vec![wire.to_string()], state }
    }

    /// Every wire the element touches: controls first, then targets.
    pub fn wires(&self) -> Vec<&str> {
        match self {
            Element::Gate { targets, controls, .. } => {
                let mut w: Vec<&str> = controls.iter().flat_map(Control::wires).collect();
                w.extend(targets.iter().map(String::as_str));
                w
            }
            Element::Projector { targets, .. } => targets.iter().map(String::as_str).collect(),
            Element::Ket { wires, .. } | Element::Bra { wires, .. } => wires.iter().map(String::as_str).collect(),
            Element::Scalar(_) => vec![],
        }
    }

    /// The operator this element applies, with the wires it acts on, for
    /// gates and projectors.
    pub fn operator(&self) -> Option<(ComplexMatrix, Vec<&str>)> {
        match self {
            Element::Gate { gate, controls, .. } => {
                let u = gate.matrix();
                let op = if controls.is_empty() {
                    u
                } else {
                    controlled_matrix(&control_projector(controls).0, &u)
                };
                Some((op, self.wires()))
            }
            Element::Projector { kind, .. } => Some((kind.matrix(), self.wires())),
            _ => None,
        }
    }

    pub fn adjoint(&self) -> Element {
        match self {
            Element::Gate { gate, targets, controls } => Element::Gate {
                gate: gate.dagger(),
                targets: targets.clone(),
                controls: controls.iter().map(|ctl| ctl.map_matrix(ComplexMatrix::dagger)).collect(),
            },
            Element::Projector { kind: ProjectorKind::Matrix(m), targets } => {
                Element::Projector { kind: ProjectorKind::Matrix(m.dagger()), targets: targets.clone() }
            }
            Element::Projector { .. } => self.clone(),
            Element::Ket { wires, state } => Element::Bra { wires: wires.clone(), state: state.flip() },
            Element::Bra { wires, state } => Element::Ket { wires: wires.clone(), state: state.flip() },
            Element::Scalar(z) => Element::Scalar(z.conj()),
        }
    }

    pub fn conjugate(&self) -> Element {
        match self {
            Element::Gate { gate, targets, controls } => Element::Gate {
                gate: gate.conj(),
                targets: targets.clone(),
                controls: controls.iter().map(|ctl| ctl.map_matrix(ComplexMatrix::conj)).collect(),
            },
            Element::Projector { kind, targets } => {
                let kind = match kind {
                    ProjectorKind::Pair(a, b, j) => {
                        let flips = [a, b].iter().filter(|w| ***w == Axis::Y).count() as u8;
                        ProjectorKind::Pair(*a, *b, (j + flips) & 1)
                    }
                    ProjectorKind::Matrix(m) => ProjectorKind::Matrix(m.conj()),
                    k => k.clone(),
                };
                Element::Projector { kind, targets: targets.clone() }
            }
            Element::Ket { wires, state } => Element::Ket { wires: wires.clone(), state: state.conj() },
            Element::Bra { wires, state } => Element::Bra { wires: wires.clone(), state: state.conj() },
            Element::Scalar(z) => Element::Scalar(z.conj()),
        }
    }

    fn check_shape(&self) -> Result<(), CircuitError> {
        let wires = self.wires();
        let mut seen = HashSet::new();
        for w in &wires {
            if !seen.insert(*w) {
                return Err(CircuitError::RepeatedWire(w.to_string()));
            }
        }
        match self {
            Element::Gate { gate, targets, controls } => {
                match gate {
                    Gate::Matrix(m) if targets.is_empty() || m.qubits() != Some(targets.len()) => {
                        return Err(CircuitError::Arity(format!(
                            "{}x{} matrix on {} wires",
                            m.rows(),
                            m.cols(),
                            targets.len()
                        )));
                    }
                    Gate::Matrix(_) => {}
                    g if g.arity() != targets.len() => {
                        return Err(CircuitError::Arity(format!(
                            "gate acts on {} wires but {} targets were given",
                            g.arity(),
                            targets.len()
                        )));
                    }
                    _ => {}
                }
                for ctl in controls {
                    if let Control::Projector { matrix, wires } = ctl {
                        if wires.is_empty() || matrix.qubits() != Some(wires.len()) {
                            return Err(CircuitError::Arity(format!(
                                "{}x{} control projector on {} wires",
                                matrix.rows(),
                                matrix.cols(),
                                wires.len()
                            )));
                        }
                        if !matrix.is_idempotent(PROJECTOR_TOL) {
                            return Err(CircuitError::NotIdempotent(wires.join(" ")));
                        }
                    }
                }
            }
            Element::Projector { kind, targets } => {
                if targets.is_empty() || kind.arity() != targets.len() {
                    return Err(CircuitError::Arity(format!("projector arity {} on {} wires", kind.arity(), targets.len())));
                }
                if let ProjectorKind::Matrix(m) = kind {
                    if m.qubits() != Some(targets.len()) {
                        return Err(CircuitError::Arity(format!("{}x{} projector", m.rows(), m.cols())));
                    }
                    if !m.is_idempotent(PROJECTOR_TOL) {
                        return Err(CircuitError::NotIdempotent(targets.join(" ")));
                    }
                }
            }
            Element::Ket { wires, state } | Element::Bra { wires, state } => {
                let named = !matches!(state, StateSpec::Vector(_));
                if wires.is_empty() || (named && wires.len() != 1) || state.len() != 1 << wires.len() {
                    return Err(CircuitError::Arity(format!(
                        "state with {} amplitudes on {} wires",
                        state.len(),
                        wires.len()
                    )));
                }
                if let StateSpec::Vector(v) = state {
                    if v.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
                        return Err(TensorError::NonFinite(0).into());
                    }
                }
            }
            Element::Scalar(z) => {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(TensorError::NonFinite(0).into());
                }
            }
        }
        Ok(())
    }
}

/// Ordered elements over a declared register. Element 0 acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    wires: WireList,
    elements: Vec<Element>,
}

#[derive(Clone, Copy, Default)]
struct WireUse {
    used: bool,
    has_bra: bool,
}

impl Circuit {
    pub fn empty(wires: WireList) -> Result<Self, CircuitError> {
        if wires.len() > MAX_WIRES {
            return Err(CircuitError::TooManyWires(wires.len()));
        }
        Ok(Self { wires, elements: Vec::new() })
    }

    pub fn new(wires: WireList, elements: Vec<Element>) -> Result<Self, CircuitError> {
        let mut circuit = Self::empty(wires)?;
        for e in elements {
            circuit.push(e)?;
        }
        Ok(circuit)
    }

    /// Shorthand for building over string labels.
    pub fn over(labels: &[&str]) -> Result<Self, CircuitError> {
        let wires = WireList::new(labels.iter().copied()).map_err(|e| match e {
            TensorError::DuplicateWire(w) => CircuitError::DuplicateWire(w),
            other => other.into(),
        })?;
        Self::empty(wires)
    }

    pub fn wires(&self) -> &WireList {
        &self.wires
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn usage(&self) -> Vec<WireUse> {
        let mut u = vec![WireUse::default(); self.wires.len()];
        for e in &self.elements {
            let is_bra = matches!(e, Element::Bra { .. });
            for w in e.wires() {
                let p = self.wires.position(w).expect("validated");
                u[p].used = true;
                u[p].has_bra |= is_bra;
            }
        }
        u
    }

    /// Append one element, enforcing every structural invariant.
    pub fn push(&mut self, e: Element) -> Result<(), CircuitError> {
        e.check_shape()?;
        let usage = self.usage();
        for w in e.wires() {
            let p = self.wires.position(w).ok_or_else(|| CircuitError::UnknownWire(w.to_string()))?;
            let u = usage[p];
            match e {
                Element::Ket { .. } if u.used => {
                    let has_ket = self.elements.iter().any(|x| matches!(x, Element::Ket { wires, .. } if wires.iter().any(|k| k == w)));
                    return Err(if has_ket {
                        CircuitError::DuplicateKet(w.to_string())
                    } else {
                        CircuitError::KetAfterUse(w.to_string())
                    });
                }
                Element::Bra { .. } if u.has_bra => return Err(CircuitError::DuplicateBra(w.to_string())),
                _ if u.has_bra => return Err(CircuitError::UseAfterBra(w.to_string())),
                _ => {}
            }
        }
        self.elements.push(e);
        Ok(())
    }

    /// Replace `len` elements starting at `start` and revalidate.
    pub fn splice(&self, start: usize, len: usize, replacement: Vec<Element>) -> Result<Circuit, CircuitError> {
        let mut elements = self.elements[..start].to_vec();
        elements.extend(replacement);
        elements.extend_from_slice(&self.elements[start + len..]);
        Circuit::new(self.wires.clone(), elements)
    }

    /// Wires carrying a ket, in declaration order.
    pub fn ket_wires(&self) -> Vec<&str> {
        self.marked_wires(|e| matches!(e, Element::Ket { .. }))
    }

    /// Wires carrying a bra, in declaration order.
    pub fn bra_wires(&self) -> Vec<&str> {
        self.marked_wires(|e| matches!(e, Element::Bra { .. }))
    }

    fn marked_wires(&self, pred: impl Fn(&Element) -> bool) -> Vec<&str> {
        let marked: HashSet<&str> = self.elements.iter().filter(|e| pred(e)).flat_map(Element::wires).collect();
        self.wires.iter().filter(|w| marked.contains(w)).collect()
    }

    /// Conjugate transpose: reversed order, each element daggered.
    pub fn adjoint(&self) -> Circuit {
        let elements = self.elements.iter().rev().map(Element::adjoint).collect();
        Circuit::new(self.wires.clone(), elements).expect("adjoint of a valid circuit is valid")
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Circuit {
        Circuit { wires: self.wires.clone(), elements: self.elements.iter().map(Element::conjugate).collect() }
    }

    /// Transpose, as the conjugate of the adjoint.
    pub fn transpose(&self) -> Circuit {
        self.adjoint().conjugate()
    }

    /// `first` followed by `then`.
    pub fn compose(first: &Circuit, then: &Circuit) -> Result<Circuit, CircuitError> {
        if first.wires != then.wires {
            return Err(CircuitError::WireMismatch);
        }
        let mut out = first.clone();
        for e in &then.elements {
            out.push(e.clone())?;
        }
        Ok(out)
    }
}

/// Chained construction; the first error is reported by [`CircuitBuilder::build`].
pub struct CircuitBuilder {
    circuit: Result<Circuit, CircuitError>,
}

impl CircuitBuilder {
    pub fn new(labels: &[&str]) -> Self {
        Self { circuit: Circuit::over(labels) }
    }

    pub fn from_circuit(circuit: Circuit) -> Self {
        Self { circuit: Ok(circuit) }
    }

    pub fn push(mut self, e: Element) -> Self {
        if let Ok(circ) = &mut self.circuit {
            if let Err(err) = circ.push(e) {
                self.circuit = Err(err);
            }
        }
        self
    }

    pub fn extend(self, es: impl IntoIterator<Item = Element>) -> Self {
        es.into_iter().fold(self, CircuitBuilder::push)
    }

    pub fn gate(self, gate: Gate, target: &str) -> Self {
        self.push(Element::gate(gate, target))
    }

    pub fn x(self, w: &str) -> Self {
        self.gate(Gate::X, w)
    }

    pub fn y(self, w: &str) -> Self {
        self.gate(Gate::Y, w)
    }

    pub fn z(self, w: &str) -> Self {
        self.gate(Gate::Z, w)
    }

    pub fn h(self, w: &str) -> Self {
        self.gate(Gate::H, w)
    }

    /// `σ_X^bit`, omitted entirely when `bit` is 0.
    pub fn x_pow(self, w: &str, bit: u8) -> Self {
        if bit & 1 == 1 {
            self.x(w)
        } else {
            self
        }
    }

    /// `σ_Z^bit`, omitted entirely when `bit` is 0.
    pub fn z_pow(self, w: &str, bit: u8) -> Self {
        if bit & 1 == 1 {
            self.z(w)
        } else {
            self
        }
    }

    pub fn cnot(self, control: &str, target: &str) -> Self {
        self.push(Element::cnot(control, target))
    }

    pub fn exch(self, a: &str, b: &str) -> Self {
        self.push(Element::controlled(Gate::E, &[a, b], vec![]))
    }

    pub fn mat(self, m: ComplexMatrix, targets: &[&str]) -> Self {
        self.push(Element::controlled(Gate::Matrix(m), targets, vec![]))
    }

    pub fn ctrl(self, gate: Gate, targets: &[&str], controls: Vec<Control>) -> Self {
        self.push(Element::controlled(gate, targets, controls))
    }

    pub fn proj(self, kind: ProjectorKind, targets: &[&str]) -> Self {
        self.push(Element::Projector { kind, targets: targets.iter().map(|s| s.to_string()).collect() })
    }

    pub fn ket(self, w: &str, state: StateSpec) -> Self {
        self.push(Element::ket(w, state))
    }

    pub fn ket_bit(self, w: &str, bit: u8) -> Self {
        self.ket(w, StateSpec::bit(bit))
    }

    pub fn ket_vec(self, wires: &[&str], v: &ComplexMatrix) -> Self {
        let wires = wires.iter().map(|s| s.to_string()).collect();
        self.push(Element::Ket { wires, state: StateSpec::Vector(v.data().to_vec()) })
    }

    pub fn bra(self, w: &str, state: StateSpec) -> Self {
        self.push(Element::bra(w, state))
    }

    pub fn bra_bit(self, w: &str, bit: u8) -> Self {
        self.bra(w, StateSpec::bit(bit))
    }

    /// Bra `<v|` for a ket column `v`.
    pub fn bra_of(self, wires: &[&str], ket: &ComplexMatrix) -> Self {
        let wires = wires.iter().map(|s| s.to_string()).collect();
        let entries = ket.data().iter().map(|z| z.conj()).collect();
        self.push(Element::Bra { wires, state: StateSpec::Vector(entries) })
    }

    pub fn scalar(self, z: Complex) -> Self {
        self.push(Element::Scalar(z))
    }

    pub fn scalar_real(self, x: f64) -> Self {
        self.scalar(c(x, 0.0))
    }

    pub fn build(self) -> Result<Circuit, CircuitError> {
        self.circuit
    }
}

#[cfg(test)]
mod tests;

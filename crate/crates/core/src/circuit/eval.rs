//! Dense evaluation of a circuit to the linear map it denotes.

use crate::tensor::{apply_on_positions, c, Complex, ComplexMatrix, TensorError, WireList};

use super::{Circuit, CircuitError, Element};

/// The evaluated map from the un-prepared wires to the un-selected wires.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult {
    /// `2^|out_wires| × 2^|in_wires|`.
    pub matrix: ComplexMatrix,
    /// Wires without a ket, in declaration order.
    pub in_wires: WireList,
    /// Wires without a bra, in declaration order.
    pub out_wires: WireList,
}

impl EvalResult {
    /// Largest entrywise deviation from `other`; the wire signatures must match.
    pub fn max_deviation(&self, other: &EvalResult) -> Result<f64, CircuitError> {
        if self.in_wires != other.in_wires || self.out_wires != other.out_wires {
            return Err(CircuitError::WireMismatch);
        }
        Ok(self.matrix.max_abs_diff(&other.matrix)?)
    }

    /// The single amplitude of a fully contracted circuit.
    pub fn scalar(&self) -> Option<Complex> {
        (self.matrix.dims() == (1, 1)).then(|| self.matrix.get(0, 0))
    }
}

/// Sub-index formed by the bits of `idx` at `positions` (first = MSB).
fn gather_bits(idx: usize, positions: &[usize], n: usize) -> usize {
    positions.iter().fold(0, |acc, &p| (acc << 1) | ((idx >> (n - 1 - p)) & 1))
}

fn positions_of(wires: &WireList, labels: &[&str]) -> Result<Vec<usize>, TensorError> {
    wires.positions(labels)
}

/// Evaluate `circuit` to a dense matrix.
///
/// Kets are contracted into the input legs, every gate and projector is
/// applied in order on the full register, scalars multiply the result, and
/// bras contract the output legs.
pub fn evaluate(circuit: &Circuit) -> Result<EvalResult, CircuitError> {
    let wires = circuit.wires();
    let n = wires.len();
    let ket_wires = circuit.ket_wires();
    let bra_wires = circuit.bra_wires();
    let in_labels: Vec<&str> = wires.iter().filter(|w| !ket_wires.contains(w)).collect();
    let out_labels: Vec<&str> = wires.iter().filter(|w| !bra_wires.contains(w)).collect();
    let in_pos = positions_of(wires, &in_labels)?;
    let out_pos = positions_of(wires, &out_labels)?;

    let mut kets: Vec<(Vec<usize>, Vec<Complex>)> = Vec::new();
    let mut bras: Vec<(Vec<usize>, Vec<Complex>)> = Vec::new();
    let mut scalar = c(1.0, 0.0);
    for e in circuit.elements() {
        match e {
            Element::Ket { state, .. } => kets.push((positions_of(wires, &e.wires())?, state.ket_entries())),
            Element::Bra { state, .. } => bras.push((positions_of(wires, &e.wires())?, state.bra_entries())),
            Element::Scalar(z) => scalar *= z,
            _ => {}
        }
    }

    let dim = 1usize << n;
    let mut m = ComplexMatrix::zeros(dim, 1 << in_pos.len());
    for full in 0..dim {
        let amp = kets
            .iter()
            .fold(c(1.0, 0.0), |acc, (pos, v)| acc * v[gather_bits(full, pos, n)]);
        if amp != c(0.0, 0.0) {
            m.set(full, gather_bits(full, &in_pos, n), amp);
        }
    }

    for e in circuit.elements() {
        if let Some((op, targets)) = e.operator() {
            let pos = positions_of(wires, &targets)?;
            apply_on_positions(&op, &pos, n, &mut m)?;
        }
    }

    let cols = m.cols();
    let mut out = ComplexMatrix::zeros(1 << out_pos.len(), cols);
    for full in 0..dim {
        let coef = bras
            .iter()
            .fold(scalar, |acc, (pos, v)| acc * v[gather_bits(full, pos, n)]);
        if coef == c(0.0, 0.0) {
            continue;
        }
        let r = gather_bits(full, &out_pos, n);
        for col in 0..cols {
            let z = m.get(full, col);
            if z != c(0.0, 0.0) {
                out.set(r, col, out.get(r, col) + coef * z);
            }
        }
    }

    Ok(EvalResult {
        matrix: out,
        in_wires: WireList::new(in_labels.iter().copied())?,
        out_wires: WireList::new(out_labels.iter().copied())?,
    })
}

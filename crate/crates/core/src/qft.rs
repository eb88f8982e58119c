//! Quantum Fourier transform circuits with natural labelling.
//!
//! Wires are declared `nb-1, ..., 1, 0`, so wire `i` carries the binary digit
//! of weight `2^i` and the declaration order matches the basis convention
//! (first wire most significant).
//!
//! Both forms start with the bit reversal `R`, followed by the Hadamard and
//! controlled-phase ladder:
//!
//! * 1-2-3 form: for `k = 0, 1, ...`: `H(k)`, then `V(j, k)` for every `j > k`.
//! * 3-2-1 form: for `k = 0, 1, ...`: `V(j, k)` for every `j < k`, then `H(k)`.
//!
//! Here `V(α, β) = exp[iπ n(α) n(β) / 2^{|α-β|}]`. In this module a pair of
//! dots joined by a line means `V`, not the usual `σ_Z^{n(α)}(β)`.

use std::f64::consts::PI;

use thiserror::Error;

use crate::circuit::{evaluate, Circuit, CircuitBuilder, CircuitError, Control, Element, Gate};
use crate::tensor::{c, Complex, ComplexMatrix};

/// Largest supported register.
pub const MAX_QFT_BITS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QftError {
    #[error("number of bits {0} is outside 1..={MAX_QFT_BITS}")]
    Size(usize),
    #[error("V gate needs two distinct wires, got {0} twice")]
    SameWire(usize),
    #[error("bit vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// The two printed orderings of the Hadamard/V ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QftForm {
    OneTwoThree,
    ThreeTwoOne,
}

impl QftForm {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "123" => Some(QftForm::OneTwoThree),
            "321" => Some(QftForm::ThreeTwoOne),
            _ => None,
        }
    }
}

fn check_size(nb: usize) -> Result<(), QftError> {
    if (1..=MAX_QFT_BITS).contains(&nb) {
        Ok(())
    } else {
        Err(QftError::Size(nb))
    }
}

/// Wire labels `nb-1, ..., 0`.
pub fn qft_wires(nb: usize) -> Vec<String> {
    (0..nb).rev().map(|i| i.to_string()).collect()
}

fn label_refs(labels: &[String]) -> Vec<&str> {
    labels.iter().map(String::as_str).collect()
}

/// `diag(1, e^{iπ/2^d})`.
pub fn v_phase(distance: usize) -> ComplexMatrix {
    ComplexMatrix::diag(&[c(1.0, 0.0), Complex::from_polar(1.0, PI / f64::powi(2.0, distance as i32))])
}

/// `V(α, β)` as the phase `diag(1, e^{iπ/2^{|α-β|}})` on wire `β` controlled
/// by `n(α)`.
pub fn v_gate(alpha: usize, beta: usize) -> Result<Element, QftError> {
    if alpha == beta {
        return Err(QftError::SameWire(alpha));
    }
    let phase = v_phase(alpha.abs_diff(beta));
    Ok(Element::controlled(Gate::Matrix(phase), &[&beta.to_string()], vec![Control::N(alpha.to_string())]))
}

/// The `⌊nb/2⌋` disjoint exchangers `E(i, nb-1-i)`.
pub fn bit_reversal_circuit(nb: usize) -> Result<Circuit, QftError> {
    check_size(nb)?;
    let wires = qft_wires(nb);
    let mut b = CircuitBuilder::new(&label_refs(&wires));
    for i in 0..nb / 2 {
        b = b.exch(&i.to_string(), &(nb - 1 - i).to_string());
    }
    Ok(b.build()?)
}

/// The printed nearest-to-farthest exchanger network for the reversal,
/// generalized to any `nb`: for `k = nb-1` down to `1`, apply `E(i, k)` for
/// `i = k-1` down to `0`. It uses `nb(nb-1)/2` exchangers.
pub fn reversal_network(nb: usize) -> Result<Circuit, QftError> {
    check_size(nb)?;
    let wires = qft_wires(nb);
    let mut b = CircuitBuilder::new(&label_refs(&wires));
    for k in (1..nb).rev() {
        for i in (0..k).rev() {
            b = b.exch(&i.to_string(), &k.to_string());
        }
    }
    Ok(b.build()?)
}

/// The Hadamard/V ladder without the bit reversal.
pub fn qft_ladder(nb: usize, form: QftForm) -> Result<Circuit, QftError> {
    check_size(nb)?;
    let wires = qft_wires(nb);
    let mut b = CircuitBuilder::new(&label_refs(&wires));
    for k in 0..nb {
        let h = Element::gate(Gate::H, &k.to_string());
        match form {
            QftForm::OneTwoThree => {
                b = b.push(h);
                for j in k + 1..nb {
                    b = b.push(v_gate(j, k)?);
                }
            }
            QftForm::ThreeTwoOne => {
                for j in 0..k {
                    b = b.push(v_gate(j, k)?);
                }
                b = b.push(h);
            }
        }
    }
    Ok(b.build()?)
}

/// Bit reversal followed by the ladder of the requested form.
pub fn build_qft(nb: usize, form: QftForm) -> Result<Circuit, QftError> {
    Ok(Circuit::compose(&bit_reversal_circuit(nb)?, &qft_ladder(nb, form)?)?)
}

/// `<y|U|x> = e^{i2πxy/N}/√N` with `N = 2^nb`.
pub fn dft_matrix(nb: usize) -> Result<ComplexMatrix, QftError> {
    check_size(nb)?;
    let dim = 1usize << nb;
    let norm = (dim as f64).sqrt().recip();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for y in 0..dim {
        for x in 0..dim {
            let k = (x * y) % dim;
            m.set(y, x, Complex::from_polar(norm, 2.0 * PI * k as f64 / dim as f64));
        }
    }
    Ok(m)
}

/// One-wire circuit for the local factor of wire `k`:
/// `<y_k| H · Π_{j<k} diag(1, e^{iπ y_j / 2^{k-j}}) |x_{R(k)}>`.
///
/// Bits are given most significant first, so `bits[nb-1-i]` is digit `i`.
pub fn local_factor_circuit(k: usize, x_bits: &[u8], y_bits: &[u8]) -> Result<Circuit, QftError> {
    check_pair(x_bits, y_bits)?;
    Ok(local_factor_on(CircuitBuilder::new(&["k"]), "k", k, x_bits, y_bits).build()?)
}

fn check_pair(x_bits: &[u8], y_bits: &[u8]) -> Result<(), QftError> {
    if x_bits.len() != y_bits.len() {
        return Err(QftError::LengthMismatch(x_bits.len(), y_bits.len()));
    }
    check_size(x_bits.len())
}

fn local_factor_on(mut b: CircuitBuilder, w: &str, k: usize, x_bits: &[u8], y_bits: &[u8]) -> CircuitBuilder {
    let nb = x_bits.len();
    let digit = |bits: &[u8], i: usize| bits[nb - 1 - i] & 1;
    b = b.ket_bit(w, digit(x_bits, nb - 1 - k));
    for j in 0..k {
        let phase = if digit(y_bits, j) == 1 { v_phase(k - j) } else { ComplexMatrix::identity(2) };
        b = b.mat(phase, &[w]);
    }
    b.h(w).bra_bit(w, digit(y_bits, k))
}

/// All `nb` local factors side by side, factor `k` on wire `"k"`. The circuit
/// is fully contracted and its scalar is the product of the factors.
pub fn matrix_element_circuit(x_bits: &[u8], y_bits: &[u8]) -> Result<Circuit, QftError> {
    check_pair(x_bits, y_bits)?;
    let labels = qft_wires(x_bits.len());
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut b = CircuitBuilder::new(&refs);
    for k in 0..x_bits.len() {
        b = local_factor_on(b, &k.to_string(), k, x_bits, y_bits);
    }
    Ok(b.build()?)
}

/// `<y|U_FT|x>` as the product of the `nb` local factors.
pub fn qft_matrix_element(x_bits: &[u8], y_bits: &[u8]) -> Result<Complex, QftError> {
    let mut acc = c(1.0, 0.0);
    for k in 0..x_bits.len() {
        let r = evaluate(&local_factor_circuit(k, x_bits, y_bits)?)?;
        acc *= r.scalar().expect("fully contracted");
    }
    Ok(acc)
}

/// Most-significant-first bits of `x`.
pub fn bits_of(x: usize, nb: usize) -> Vec<u8> {
    (0..nb).rev().map(|i| ((x >> i) & 1) as u8).collect()
}

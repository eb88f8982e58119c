//! Column-by-column reference evaluator.
//!
//! Builds each output column by preparing a full-register state for one
//! input basis vector, applying each operator through explicit index
//! arithmetic, and contracting the bras at the end. It shares only the
//! local gate matrices with the library, not the contraction code.

use qcpaul::circuit::{Circuit, Element};
use qcpaul::tensor::{Complex, ComplexMatrix};

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Bits of `idx` at `pos` (MSB first), as a sub-index.
fn sub_index(idx: usize, pos: &[usize], n: usize) -> usize {
    let mut s = 0;
    for &p in pos {
        s = (s << 1) | ((idx >> (n - 1 - p)) & 1);
    }
    s
}

/// `idx` with the bits at `pos` replaced by those of `sub`.
fn with_sub(idx: usize, pos: &[usize], n: usize, sub: usize) -> usize {
    let k = pos.len();
    let mut out = idx;
    for (i, &p) in pos.iter().enumerate() {
        let bit = (sub >> (k - 1 - i)) & 1;
        let shift = n - 1 - p;
        out = (out & !(1 << shift)) | (bit << shift);
    }
    out
}

pub fn oracle_evaluate(circ: &Circuit) -> ComplexMatrix {
    let labels: Vec<&str> = circ.wires().iter().collect();
    let n = labels.len();
    let pos_of = |ws: &[&str]| -> Vec<usize> { ws.iter().map(|w| labels.iter().position(|l| l == w).unwrap()).collect() };

    let mut kets: Vec<(Vec<usize>, Vec<Complex>)> = Vec::new();
    let mut bras: Vec<(Vec<usize>, Vec<Complex>)> = Vec::new();
    for e in circ.elements() {
        match e {
            Element::Ket { state, .. } => kets.push((pos_of(&e.wires()), state.ket_entries())),
            Element::Bra { state, .. } => bras.push((pos_of(&e.wires()), state.bra_entries())),
            _ => {}
        }
    }
    let ket_pos: Vec<usize> = kets.iter().flat_map(|(p, _)| p.clone()).collect();
    let bra_pos: Vec<usize> = bras.iter().flat_map(|(p, _)| p.clone()).collect();
    let in_pos: Vec<usize> = (0..n).filter(|p| !ket_pos.contains(p)).collect();
    let out_pos: Vec<usize> = (0..n).filter(|p| !bra_pos.contains(p)).collect();
    let dim = 1usize << n;
    let (rows, cols) = (1usize << out_pos.len(), 1usize << in_pos.len());
    let mut result = ComplexMatrix::zeros(rows, cols);

    for x in 0..cols {
        let mut psi: Vec<Complex> = (0..dim)
            .map(|idx| {
                if sub_index(idx, &in_pos, n) != x {
                    return c(0.0, 0.0);
                }
                kets.iter().fold(c(1.0, 0.0), |acc, (p, v)| acc * v[sub_index(idx, p, n)])
            })
            .collect();
        for e in circ.elements() {
            if let Element::Scalar(z) = e {
                psi.iter_mut().for_each(|a| *a *= z);
                continue;
            }
            let Some((m, ws)) = e.operator() else { continue };
            let p = pos_of(&ws);
            let k = 1usize << p.len();
            psi = (0..dim)
                .map(|idx| {
                    let r = sub_index(idx, &p, n);
                    (0..k).fold(c(0.0, 0.0), |acc, s| acc + m.get(r, s) * psi[with_sub(idx, &p, n, s)])
                })
                .collect();
        }
        for (idx, amp) in psi.iter().enumerate() {
            let weight = bras.iter().fold(c(1.0, 0.0), |acc, (p, v)| acc * v[sub_index(idx, p, n)]);
            let y = sub_index(idx, &out_pos, n);
            let cur = result.get(y, x);
            result.set(y, x, cur + amp * weight);
        }
    }
    result
}

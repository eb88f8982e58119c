//! One-wire Pauli algebra and Hadamard matrices.

use crate::circuit::{Gate, ProjectorKind, StateSpec};
use crate::gates::{self, Axis};

use super::kit::*;
use super::params::{angle, bit, choice};
use super::{Identity, Params};

pub(super) static ENTRIES: &[Identity] = &[
    Identity::new(
        "pauli.mult-table",
        "Pauli products: each squares to one, distinct ones anticommute, XY = iZ cyclically",
        &[choice("a", 3), choice("b", 3)],
        mult_table,
    ),
    Identity::new(
        "pauli.eigenvectors",
        "|±_w> are the ±1 eigenvectors of σ_w",
        &[choice("w", 3), bit("s")],
        eigenvectors,
    ),
    Identity::new(
        "pauli.number-op",
        "n_w = (1-σ_w)/2, n̄_w = (1+σ_w)/2, σ_w = 1-2n_w",
        &[choice("w", 3), choice("form", 3)],
        number_op,
    ),
    Identity::new(
        "pauli.hadamard",
        "H² = 1, HXH = Z, HZH = X, H|0> = |0_X>, H|1> = |1_X>, H = (X+Z)/√2",
        &[choice("form", 6)],
        hadamard_rel,
    ),
    Identity::new(
        "pauli.phase-gate",
        "(i^n)² = Z, i^n X i^-n = Y, i^-n X i^n = -Y",
        &[choice("form", 3)],
        phase_gate,
    ),
    Identity::new(
        "pauli.bit-actions",
        "X^b|a> = |a⊕b>, Z^b|a> = (-1)^ab|a>, <a|H|b> = (-1)^ab/√2",
        &[choice("form", 3), bit("a"), bit("b")],
        bit_actions,
    ),
    Identity::new("pauli.z-rotation", "exp(iθZ) = cos θ + iZ sin θ", &[angle("theta")], z_rotation),
    Identity::new(
        "pauli.rotation",
        "exp(iθ⃗·σ⃗) = cos θ + i(θ̂·σ⃗) sin θ",
        &[angle("tx"), angle("ty"), angle("tz")],
        rotation,
    ),
    Identity::new(
        "pauli.lambda",
        "Λ^{xz} = X^x Z^z: adjoint is (-1)^{xz}Λ^{xz}, and Λ^{11} = -iY",
        &[bit("x"), bit("z"), choice("form", 2)],
        lambda,
    ),
    Identity::new("had.self-inverse", "H_nb² = 1", &[choice("nb", 4)], had_self_inverse),
    Identity::new("had.symmetric", "H_nb is its own transpose", &[choice("nb", 4)], had_symmetric),
    Identity::new(
        "had.tensor",
        "H_nb, built from its entry formula, is the nb-fold tensor power of H",
        &[choice("nb", 4)],
        had_tensor,
    ),
    Identity::new(
        "had.entries",
        "<b|H_3|b'> = (-1)^{b·b'}/√8",
        &[choice("x", 8), choice("y", 8)],
        had_entries,
    ),
];

const Q: &str = "q";

fn mult_table(p: &Params) -> Built {
    let (a, b) = (axis(p.int("a")), axis(p.int("b")));
    // σ_a σ_b: σ_b acts first
    let lhs = circ(&[Q]).gate(pauli_gate(b), Q).gate(pauli_gate(a), Q);
    let rhs = if a == b {
        circ(&[Q])
    } else {
        let third = Axis::ALL.into_iter().find(|w| *w != a && *w != b).expect("three axes");
        let cyclic = matches!((a, b), (Axis::X, Axis::Y) | (Axis::Y, Axis::Z) | (Axis::Z, Axis::X));
        circ(&[Q]).scalar(im(if cyclic { 1.0 } else { -1.0 })).gate(pauli_gate(third), Q)
    };
    pair(lhs, rhs)
}

fn eigenvectors(p: &Params) -> Built {
    let (w, s) = (axis(p.int("w")), p.int("s"));
    let lhs = circ(&[Q]).ket(Q, eigen_state(w, s)).gate(pauli_gate(w), Q);
    let rhs = circ(&[Q]).ket(Q, eigen_state(w, s)).scalar(re(sign(s)));
    pair(lhs, rhs)
}

fn number_op(p: &Params) -> Built {
    let w = axis(p.int("w"));
    let proj = |bar| ProjectorKind::Matrix(gates::number_op(w, bar));
    Ok(match p.int("form") {
        0 | 1 => {
            let bar = p.int("form") == 1;
            let s = if bar { 0.5 } else { -0.5 };
            let lhs = circ(&[Q]).proj(proj(bar), &[Q]).build()?.into();
            (lhs, sum(vec![circ(&[Q]).scalar(re(0.5)), circ(&[Q]).scalar(re(s)).gate(pauli_gate(w), Q)])?)
        }
        _ => {
            let lhs = circ(&[Q]).gate(pauli_gate(w), Q).build()?.into();
            (lhs, sum(vec![circ(&[Q]), circ(&[Q]).scalar(re(-2.0)).proj(proj(false), &[Q])])?)
        }
    })
}

fn hadamard_rel(p: &Params) -> Built {
    let base = || circ(&[Q]);
    Ok(match p.int("form") {
        0 => pair(base().h(Q).h(Q), base())?,
        1 => pair(base().h(Q).x(Q).h(Q), base().z(Q))?,
        2 => pair(base().h(Q).z(Q).h(Q), base().x(Q))?,
        3 => pair(base().ket(Q, StateSpec::Zero).h(Q), base().ket(Q, StateSpec::PlusX))?,
        4 => pair(base().ket(Q, StateSpec::One).h(Q), base().ket(Q, StateSpec::MinusX))?,
        _ => {
            let s = 0.5f64.sqrt();
            let rhs = sum(vec![base().scalar(re(s)).x(Q), base().scalar(re(s)).z(Q)])?;
            (base().h(Q).build()?.into(), rhs)
        }
    })
}

fn phase_gate(p: &Params) -> Built {
    let s_dag = Gate::S.dagger();
    let base = || circ(&[Q]);
    match p.int("form") {
        0 => pair(base().gate(Gate::S, Q).gate(Gate::S, Q), base().z(Q)),
        1 => pair(base().gate(s_dag, Q).x(Q).gate(Gate::S, Q), base().y(Q)),
        _ => pair(base().gate(Gate::S, Q).x(Q).gate(s_dag, Q), base().scalar(re(-1.0)).y(Q)),
    }
}

fn bit_actions(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    match p.int("form") {
        0 => pair(circ(&[Q]).ket_bit(Q, a).x_pow(Q, b), circ(&[Q]).ket_bit(Q, a ^ b)),
        1 => pair(circ(&[Q]).ket_bit(Q, a).z_pow(Q, b), circ(&[Q]).ket_bit(Q, a).scalar(re(sign(a & b)))),
        _ => pair(
            circ(&[Q]).ket_bit(Q, b).h(Q).bra_bit(Q, a),
            circ(&[]).scalar(re(sign(a & b) * 0.5f64.sqrt())),
        ),
    }
}

fn z_rotation(p: &Params) -> Built {
    let t = p.angle("theta");
    let rhs = sum(vec![circ(&[Q]).scalar(re(t.cos())), circ(&[Q]).scalar(im(t.sin())).z(Q)])?;
    Ok((circ(&[Q]).gate(Gate::Rz(t), Q).build()?.into(), rhs))
}

fn rotation(p: &Params) -> Built {
    let t = [p.angle("tx"), p.angle("ty"), p.angle("tz")];
    let norm = t.iter().map(|x| x * x).sum::<f64>().sqrt();
    // sin θ / θ, continuous at θ = 0
    let sinc = if norm == 0.0 { 1.0 } else { norm.sin() / norm };
    let mut terms = vec![circ(&[Q]).scalar(re(norm.cos()))];
    for (w, tk) in Axis::ALL.into_iter().zip(t) {
        terms.push(circ(&[Q]).scalar(im(sinc * tk)).gate(pauli_gate(w), Q));
    }
    Ok((circ(&[Q]).gate(Gate::Rot(t), Q).build()?.into(), sum(terms)?))
}

fn lambda(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    // Λ^{xz} = X^x Z^z: Z^z acts first
    let lam = || circ(&[Q]).z_pow(Q, z).x_pow(Q, x);
    match p.int("form") {
        0 => {
            let lhs = lam().build()?.adjoint();
            Ok((lhs.into(), lam().scalar(re(sign(x & z))).build()?.into()))
        }
        _ => {
            let rhs = match (x, z) {
                (0, 0) => circ(&[Q]),
                (1, 0) => circ(&[Q]).x(Q),
                (1, 1) => circ(&[Q]).scalar(im(-1.0)).y(Q),
                _ => circ(&[Q]).z(Q),
            };
            pair(lam(), rhs)
        }
    }
}

const HAD_WIRES: [&str; 4] = ["a", "b", "c", "d"];

fn had_layer(nb: usize) -> crate::circuit::CircuitBuilder {
    let wires = &HAD_WIRES[..nb];
    wires.iter().fold(circ(wires), |b, w| b.h(w))
}

fn had_matrix(nb: usize) -> crate::circuit::CircuitBuilder {
    let wires = &HAD_WIRES[..nb];
    circ(wires).mat(gates::hadamard(nb).expect("nb in 1..=4"), wires)
}

fn had_self_inverse(p: &Params) -> Built {
    let nb = p.int("nb") as usize + 1;
    let wires = &HAD_WIRES[..nb];
    let twice = circ(wires).mat(gates::hadamard(nb).expect("nb"), wires).mat(gates::hadamard(nb).expect("nb"), wires);
    pair(twice, circ(wires))
}

fn had_symmetric(p: &Params) -> Built {
    let nb = p.int("nb") as usize + 1;
    let lhs = had_matrix(nb).build()?.transpose();
    Ok((lhs.into(), had_matrix(nb).build()?.into()))
}

fn had_tensor(p: &Params) -> Built {
    let nb = p.int("nb") as usize + 1;
    pair(had_matrix(nb), had_layer(nb))
}

fn had_entries(p: &Params) -> Built {
    let (x, y) = (p.int("x"), p.int("y"));
    let wires = &HAD_WIRES[..3];
    let mut lhs = circ(wires);
    for (i, w) in wires.iter().enumerate() {
        lhs = lhs.ket_bit(w, (x >> (2 - i)) & 1);
    }
    for w in wires {
        lhs = lhs.h(w);
    }
    for (i, w) in wires.iter().enumerate() {
        lhs = lhs.bra_bit(w, (y >> (2 - i)) & 1);
    }
    let parity = ((x & y).count_ones() & 1) as u8;
    pair(lhs, circ(&[]).scalar(re(sign(parity) / 8f64.sqrt())))
}

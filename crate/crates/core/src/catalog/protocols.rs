//! Measurements, exchange scattering, teleportation, dense coding and the
//! quantum Fourier transform.

use crate::circuit::{Circuit, CircuitBuilder, CircuitError, ProjectorKind};
use crate::gates;
use crate::qft::{self, QftError, QftForm};

use super::kit::*;
use super::params::{bit, choice, state};
use super::{Identity, Params};

pub(super) static ENTRIES: &[Identity] = &[
    Identity::new(
        "meas.internal-to-final",
        "a one-qubit internal measurement equals a CNOT onto a fresh ancilla measured at the end",
        &[bit("j")],
        internal_to_final,
    ),
    Identity::new(
        "meas.bibit-to-2cnots",
        "Π^j_ZZ(a,b) = CNOT(a→b) P_j(b) CNOT(a→b)",
        &[bit("j")],
        bibit_to_2cnots,
    ),
    Identity::new(
        "meas.bibit-to-1cnot",
        "<k|_a Π^j_ZZ = <k|_a X^k(b) P_j(b) CNOT(a→b)",
        &[bit("j"), bit("k")],
        bibit_to_1cnot,
    ),
    Identity::new(
        "meas.bibit-alt",
        "Π^j_ZZ(b,c) via two CNOTs into an ancilla measured at the end",
        &[bit("j")],
        bibit_alt,
    ),
    Identity::new(
        "meas.cnot-to-2meas",
        "CNOT(a→c) from two bibit measurements through an ancilla, factor (-1)^{(k+j1)j2} 2√2",
        &[bit("k"), bit("j1"), bit("j2")],
        cnot_to_2meas,
    ),
    Identity::new(
        "meas.cnot-to-1meas",
        "CNOT(a→b)|j>_b = (-1)^{jk} √2 Z^k(a) Π^j_ZZ H(b)|k>_b",
        &[bit("j"), bit("k")],
        cnot_to_1meas,
    ),
    Identity::new(
        "scat.exchanger",
        "√2 <z|_a H(a) E |ψ,0> = |ψ>_b",
        &[bit("z"), state("psi")],
        scat_exchanger,
    ),
    Identity::new(
        "scat.cnot1",
        "√2 <z|_a Z^z(b) H(a) CNOT(a→b) |ψ,0> = |ψ>_b",
        &[bit("z"), state("psi")],
        scat_cnot1,
    ),
    Identity::new(
        "scat.cnot2",
        "√2 <x|_a X^x(b) CNOT(b→a) H(b) |ψ,0> = |ψ>_b",
        &[bit("x"), state("psi")],
        scat_cnot2,
    ),
    Identity::new(
        "scat.proj",
        "2 <j|_a Z^j(b) X^k(b) H(a) Π^k_ZZ H(b) |ψ,0> = |ψ>_b",
        &[bit("j"), bit("k"), state("psi")],
        scat_proj,
    ),
    Identity::new(
        "tele.main",
        "2 <B_xz|_{ab} |ψ>_a |B^xz>_{bc} = |ψ>_c",
        &[bit("x"), bit("z"), state("psi")],
        tele_main,
    ),
    Identity::new(
        "tele.variant",
        "2 <B^xz|_{ab} Λ^{xz}(c) |ψ>_a |B00>_{bc} = |ψ>_c",
        &[bit("x"), bit("z"), state("psi")],
        tele_variant,
    ),
    Identity::new(
        "dense.coding",
        "two classical bits a, b sent through one half of a Bell pair arrive intact",
        &[bit("a"), bit("b")],
        dense_coding,
    ),
    Identity::new(
        "qft.123-eq-321",
        "the 1-2-3 and 3-2-1 orderings give the same QFT circuit matrix",
        &[choice("nb", 5)],
        qft_forms,
    ),
    Identity::new("qft.symmetric", "U_FT is a symmetric matrix", &[choice("nb", 5)], qft_symmetric),
    Identity::new(
        "qft.vs-dft",
        "the QFT circuit equals the discrete Fourier matrix ω^{xy}/√N",
        &[choice("nb", 5)],
        qft_vs_dft,
    ),
    Identity::new(
        "qft.reversal",
        "the exchanger network reverses the qubit order",
        &[choice("nb", 5)],
        qft_reversal,
    ),
    Identity::new(
        "qft.matrix-element",
        "<y|U_FT|x> is a product of one-qubit local factors (nb = 4)",
        &[choice("x", 16), choice("y", 16)],
        qft_matrix_element,
    ),
];

const AB: [&str; 2] = ["a", "b"];
const ABC: [&str; 3] = ["a", "b", "c"];
const ABCD: [&str; 4] = ["a", "b", "c", "d"];

fn psi(p: &Params) -> crate::circuit::StateSpec {
    super::kit::state(p.state("psi"))
}

fn internal_to_final(p: &Params) -> Built {
    let j = p.int("j");
    let lhs = circ(&["b"]).proj(ProjectorKind::Z(j), &["b"]);
    let rhs = circ(&AB).ket_bit("a", 0).cnot("b", "a").bra_bit("a", j);
    pair(lhs, rhs)
}

fn bibit_to_2cnots(p: &Params) -> Built {
    let j = p.int("j");
    let lhs = circ(&AB).proj(ProjectorKind::ZZ(j), &AB);
    let rhs = circ(&AB).cnot("a", "b").proj(ProjectorKind::Z(j), &["b"]).cnot("a", "b");
    pair(lhs, rhs)
}

fn bibit_to_1cnot(p: &Params) -> Built {
    let (j, k) = (p.int("j"), p.int("k"));
    let lhs = circ(&AB).proj(ProjectorKind::ZZ(j), &AB).bra_bit("a", k);
    let rhs = circ(&AB).cnot("a", "b").proj(ProjectorKind::Z(j), &["b"]).x_pow("b", k).bra_bit("a", k);
    pair(lhs, rhs)
}

fn bibit_alt(p: &Params) -> Built {
    let j = p.int("j");
    let lhs = circ(&["b", "c"]).proj(ProjectorKind::ZZ(j), &["b", "c"]);
    let rhs = circ(&ABC).ket_bit("a", 0).cnot("c", "a").cnot("b", "a").bra_bit("a", j);
    pair(lhs, rhs)
}

fn cnot_to_2meas(p: &Params) -> Built {
    let (k, j1, j2) = (p.int("k"), p.int("j1"), p.int("j2"));
    let lhs = circ(&["a", "c"]).cnot("a", "c");
    let rhs = circ(&ABC)
        .ket_bit("b", 0)
        .h("b")
        .proj(ProjectorKind::ZZ(j1), &["a", "b"])
        .h("b")
        .h("c")
        .proj(ProjectorKind::ZZ(j2), &["b", "c"])
        .h("b")
        .h("c")
        .z_pow("a", j2)
        .x_pow("c", k ^ j1)
        .bra_bit("b", k)
        .scalar(re(sign((k ^ j1) & j2) * 2.0 * 2f64.sqrt()));
    pair(lhs, rhs)
}

/// Both sides of the one-measurement CNOT identity. The phase correction
/// acts on wire `a` with exponent `k`; `printed_exponent` swaps it for `j`.
pub(crate) fn cnot_to_1meas_sides(j: u8, k: u8, printed_exponent: bool) -> Built {
    let lhs = circ(&AB).ket_bit("b", j).cnot("a", "b");
    let e = if printed_exponent { j } else { k };
    let rhs = circ(&AB)
        .ket_bit("b", k)
        .h("b")
        .proj(ProjectorKind::ZZ(j), &AB)
        .z_pow("a", e)
        .scalar(re(sign(j & k) * 2f64.sqrt()));
    pair(lhs, rhs)
}

fn cnot_to_1meas(p: &Params) -> Built {
    cnot_to_1meas_sides(p.int("j"), p.int("k"), false)
}

fn ket_psi_b(p: &Params) -> CircuitBuilder {
    circ(&["b"]).ket("b", psi(p))
}

fn scat_exchanger(p: &Params) -> Built {
    let z = p.int("z");
    let lhs = circ(&AB).ket("a", psi(p)).ket_bit("b", 0).exch("a", "b").h("a").bra_bit("a", z).scalar(re(2f64.sqrt()));
    pair(lhs, ket_psi_b(p))
}

fn scat_cnot1(p: &Params) -> Built {
    let z = p.int("z");
    let lhs = circ(&AB)
        .ket("a", psi(p))
        .ket_bit("b", 0)
        .cnot("a", "b")
        .h("a")
        .z_pow("b", z)
        .bra_bit("a", z)
        .scalar(re(2f64.sqrt()));
    pair(lhs, ket_psi_b(p))
}

fn scat_cnot2(p: &Params) -> Built {
    let x = p.int("x");
    let lhs = circ(&AB)
        .ket("a", psi(p))
        .ket_bit("b", 0)
        .h("b")
        .cnot("b", "a")
        .x_pow("b", x)
        .bra_bit("a", x)
        .scalar(re(2f64.sqrt()));
    pair(lhs, ket_psi_b(p))
}

fn scat_proj(p: &Params) -> Built {
    let (j, k) = (p.int("j"), p.int("k"));
    let lhs = circ(&AB)
        .ket("a", psi(p))
        .ket_bit("b", 0)
        .h("b")
        .proj(ProjectorKind::ZZ(k), &AB)
        .h("a")
        .x_pow("b", k)
        .z_pow("b", j)
        .bra_bit("a", j)
        .scalar(re(2.0));
    pair(lhs, ket_psi_b(p))
}

fn ket_psi_c(p: &Params) -> CircuitBuilder {
    circ(&["c"]).ket("c", psi(p))
}

fn tele_main(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let lhs = circ(&ABC)
        .ket("a", psi(p))
        .ket_vec(&["b", "c"], &gates::bell_super(x, z))
        .bra_of(&AB, &gates::bell_sub(x, z))
        .scalar(re(2.0));
    pair(lhs, ket_psi_c(p))
}

fn tele_variant(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let lhs = circ(&ABC)
        .ket("a", psi(p))
        .ket_vec(&["b", "c"], &gates::bell_sub(0, 0))
        .z_pow("c", z)
        .x_pow("c", x)
        .bra_of(&AB, &gates::bell_super(x, z))
        .scalar(re(2.0));
    pair(lhs, ket_psi_c(p))
}

fn dense_coding(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    let lhs = circ(&ABCD)
        .ket_bit("a", a)
        .ket_bit("b", b)
        .ket_bit("c", 0)
        .ket_bit("d", 0)
        .h("d")
        .cnot("d", "c")
        .ctrl(crate::circuit::Gate::Z, &["c"], vec![n("b")])
        .cnot("a", "c")
        .cnot("d", "c")
        .h("d");
    let rhs = circ(&ABCD).ket_bit("a", a).ket_bit("b", b).ket_bit("c", a).ket_bit("d", b);
    pair(lhs, rhs)
}

fn q<T>(r: Result<T, QftError>) -> Result<T, CircuitError> {
    r.map_err(|e| match e {
        QftError::Circuit(e) => e,
        other => CircuitError::Arity(other.to_string()),
    })
}

fn nb_of(p: &Params) -> usize {
    p.int("nb") as usize + 1
}

fn qft_forms(p: &Params) -> Built {
    let nb = nb_of(p);
    let lhs = q(qft::build_qft(nb, QftForm::OneTwoThree))?;
    let rhs = q(qft::build_qft(nb, QftForm::ThreeTwoOne))?;
    Ok((lhs.into(), rhs.into()))
}

fn qft_symmetric(p: &Params) -> Built {
    let c = q(qft::build_qft(nb_of(p), QftForm::OneTwoThree))?;
    Ok((c.transpose().into(), c.into()))
}

fn qft_vs_dft(p: &Params) -> Built {
    let nb = nb_of(p);
    let c = q(qft::build_qft(nb, QftForm::OneTwoThree))?;
    let labels = qft::qft_wires(nb);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let rhs = circ(&refs).mat(q(qft::dft_matrix(nb))?, &refs).build()?;
    Ok((c.into(), rhs.into()))
}

fn qft_reversal(p: &Params) -> Built {
    let nb = nb_of(p);
    Ok((q(qft::reversal_network(nb))?.into(), q(qft::bit_reversal_circuit(nb))?.into()))
}

fn qft_matrix_element(p: &Params) -> Built {
    const NB: usize = 4;
    let (xb, yb) = (qft::bits_of(p.int("x") as usize, NB), qft::bits_of(p.int("y") as usize, NB));
    let labels = qft::qft_wires(NB);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let body: Circuit = q(qft::build_qft(NB, QftForm::OneTwoThree))?;
    let mut b = circ(&refs);
    for (w, bit) in refs.iter().zip(&xb) {
        b = b.ket_bit(w, *bit);
    }
    b = b.extend(body.elements().iter().cloned());
    for (w, bit) in refs.iter().zip(&yb) {
        b = b.bra_bit(w, *bit);
    }
    let rhs = q(qft::matrix_element_circuit(&xb, &yb))?;
    Ok((b.build()?.into(), rhs.into()))
}

//! CNOTs, their wake identities, and projector-controlled unitaries.
//!
//! Entries are written in chronological order: the rightmost box of a
//! printed diagram is the first element here.

use crate::circuit::{CircuitBuilder, Gate, ProjectorKind};
use crate::gates::{self, Axis};
use crate::tensor::{kron, ComplexMatrix};

use super::kit::*;
use super::params::{angle, bit, choice, commuting, projector, unitary};
use super::{Identity, Params};

pub(super) static ENTRIES: &[Identity] = &[
    Identity::new("cnot.basis-action", "CNOT(a→b)|a,b> = |a, b⊕a>", &[bit("a"), bit("b")], basis_action),
    Identity::new(
        "cnot.toffoli-basis",
        "X^{n(a)n(b)}(c)|a,b,c> = |a, b, c⊕ab>",
        &[bit("a"), bit("b"), bit("c")],
        toffoli_basis,
    ),
    Identity::new("cnot.open-basis", "X^{n̄(a)}(b)|a,b> = |a, b⊕ā>", &[bit("a"), bit("b")], open_basis),
    Identity::new("cnot.zz-basis", "(-1)^{n(a)n(b)}|a,b> = (-1)^{ab}|a,b>", &[bit("a"), bit("b")], zz_basis),
    Identity::new(
        "cnot.cz-symmetric",
        "Z^{n(a)}(b) = Z^{n(b)}(a) = (-1)^{n(a)n(b)}",
        &[choice("form", 2)],
        cz_symmetric,
    ),
    Identity::new(
        "cnot.sign-form",
        "controlled NOTs as (-1) raised to a product of number operators",
        &[choice("form", 3)],
        sign_form,
    ),
    Identity::new("cnot.nbar-form", "CNOT(b→a) = X(a)n(b) + n̄(b)", &[], nbar_form),
    Identity::new("cnot.pauli-sum", "CNOT(b→a) = ½ Σ_{x,z} (-1)^{xz} X^x(a) Z^z(b)", &[], pauli_sum),
    Identity::new(
        "cnot.wake-chain",
        "moving CNOT(a←b) right across CNOT(b←c) leaves the wake CNOT(a←c)",
        &[],
        wake_chain,
    ),
    Identity::new(
        "cnot.wake-chain-alt",
        "moving CNOT(a←b) left across CNOT(b←c) leaves the wake CNOT(a←c)",
        &[],
        wake_chain_alt,
    ),
    Identity::new(
        "cnot.wake-loop",
        "permuting CNOT(a←b) and CNOT(b←a) leaves a two-CNOT wake",
        &[],
        wake_loop,
    ),
    Identity::new("cnot.wake-sigz", "moving Z(b) across CNOT(a→b) leaves the wake Z(a)", &[], wake_sigz),
    Identity::new(
        "cnot.two-brothers",
        "nearest-neighbour CNOT palindrome on 3 wires equals two commuting CNOTs",
        &[],
        two_brothers,
    ),
    Identity::new(
        "cnot.three-brothers",
        "nearest-neighbour CNOT palindrome on 4 wires equals three commuting CNOTs",
        &[],
        three_brothers,
    ),
    Identity::new("cnot.nn2", "CNOT across one wire as four nearest-neighbour CNOTs", &[], nn2),
    Identity::new("cnot.nn3", "CNOT across two wires as eight nearest-neighbour CNOTs", &[], nn3),
    Identity::new(
        "gen.oval-pair",
        "(-1)^{π1 π2} equals (1-2π2) controlled by π1",
        &[projector("pi1", 1), projector("pi2", 1)],
        oval_pair,
    ),
    Identity::new(
        "gen.oval-special",
        "(-1)^{n n} = Z controlled by n, CNOT = (-1)^{n n_X}",
        &[choice("form", 2)],
        oval_special,
    ),
    Identity::new(
        "gen.ctrl-u-decomp",
        "U^π = e^{iθ̄π} V e^{iΔZ/2} X^π e^{-iΔZ/2} X^π V†",
        &[projector("pi", 2), unitary("U", 1)],
        ctrl_u_decomp,
    ),
    Identity::new("gen.n1-ctrl-u", "n-controlled U decomposed with CNOTs", &[unitary("U", 1)], n1_ctrl_u),
    Identity::new("gen.n2-ctrl-u", "n²-controlled U decomposed with n²-controlled NOTs", &[unitary("U", 1)], n2_ctrl_u),
    Identity::new(
        "gen.perm-two-ctrl-u",
        "U1^{π1} U2^{π2} = (U1 U2 U1† U2†)^{π1 π2} U2^{π2} U1^{π1} for commuting π1, π2",
        &[commuting("pi", 2), unitary("U1", 1), unitary("U2", 1)],
        perm_two_ctrl_u,
    ),
    Identity::new(
        "gen.wake-times-dot",
        "moving X(b)^{π} across U(c)^{n(b)} leaves the wake U^π U^{-2 π n(b)}",
        &[projector("pi", 1), unitary("U", 1)],
        wake_times_dot,
    ),
    Identity::new(
        "gen.sqrt-reduction",
        "U^{π n(b)} from square roots of U and two π-controlled NOTs",
        &[projector("pi", 1), unitary("U", 1)],
        sqrt_reduction,
    ),
    Identity::new("gen.n2-sqrt", "n²-controlled U from square roots of U", &[unitary("U", 1)], n2_sqrt),
    Identity::new("gen.n3-sqrt", "n³-controlled U from square roots of U", &[unitary("U", 1)], n3_sqrt),
    Identity::new(
        "gen.wake-chain-gen",
        "moving X^{π1} across Z^{π2} leaves the wake (-1)^{π1 π2}",
        &[commuting("pi", 2)],
        wake_chain_gen,
    ),
    Identity::new(
        "gen.n3-to-n2",
        "n³-controlled NOT from four n²-controlled NOTs through a spare wire",
        &[],
        n3_to_n2,
    ),
    Identity::new(
        "gen.wake-theta",
        "moving X^π across exp(iθZ) leaves the wake exp(-2iθZ)^π",
        &[projector("pi", 1), angle("theta")],
        wake_theta,
    ),
];

const AB: [&str; 2] = ["a", "b"];
const ABC: [&str; 3] = ["a", "b", "c"];
const ABCD: [&str; 4] = ["a", "b", "c", "d"];
const ABCDE: [&str; 5] = ["a", "b", "c", "d", "e"];

fn kets(wires: &[&str], bits: &[u8]) -> CircuitBuilder {
    wires.iter().zip(bits).fold(circ(wires), |b, (w, v)| b.ket_bit(w, *v))
}

fn basis_action(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    pair(kets(&AB, &[a, b]).cnot("a", "b"), kets(&AB, &[a, b ^ a]))
}

fn toffoli_basis(p: &Params) -> Built {
    let (a, b, cc) = (p.int("a"), p.int("b"), p.int("c"));
    let lhs = kets(&ABC, &[a, b, cc]).ctrl(Gate::X, &["c"], vec![n("a"), n("b")]);
    pair(lhs, kets(&ABC, &[a, b, cc ^ (a & b)]))
}

fn open_basis(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    let lhs = kets(&AB, &[a, b]).ctrl(Gate::X, &["b"], vec![nbar("a")]);
    pair(lhs, kets(&AB, &[a, b ^ (1 - a)]))
}

fn zz_basis(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    let lhs = kets(&AB, &[a, b]).ctrl(Gate::Z, &["b"], vec![n("a")]);
    pair(lhs, kets(&AB, &[a, b]).scalar(re(sign(a & b))))
}

fn cz_symmetric(p: &Params) -> Built {
    let lhs = circ(&AB).ctrl(Gate::Z, &["b"], vec![n("a")]);
    let rhs = match p.int("form") {
        0 => circ(&AB).ctrl(Gate::Z, &["a"], vec![n("b")]),
        _ => circ(&AB).mat(reflection(&kron(&gates::n(), &gates::n())), &AB),
    };
    pair(lhs, rhs)
}

fn sign_form(p: &Params) -> Built {
    let nx = gates::number_op(Axis::X, false);
    match p.int("form") {
        0 => pair(circ(&AB).cnot("a", "b"), circ(&AB).mat(reflection(&kron(&gates::n(), &nx)), &AB)),
        1 => pair(
            circ(&ABC).ctrl(Gate::X, &["c"], vec![n("a"), n("b")]),
            circ(&ABC).mat(reflection(&kron(&kron(&gates::n(), &gates::n()), &nx)), &ABC),
        ),
        _ => pair(
            circ(&AB).ctrl(Gate::X, &["b"], vec![nbar("a")]),
            circ(&AB).mat(reflection(&kron(&gates::nbar(), &nx)), &AB),
        ),
    }
}

fn nbar_form(_: &Params) -> Built {
    let lhs = circ(&AB).cnot("b", "a").build()?.into();
    let rhs = sum(vec![
        circ(&AB).proj(ProjectorKind::Z(1), &["b"]).x("a"),
        circ(&AB).proj(ProjectorKind::Z(0), &["b"]),
    ])?;
    Ok((lhs, rhs))
}

fn pauli_sum(_: &Params) -> Built {
    let lhs = circ(&AB).cnot("b", "a").build()?.into();
    let mut terms = Vec::new();
    for x in 0..2u8 {
        for z in 0..2u8 {
            terms.push(circ(&AB).scalar(re(0.5 * sign(x & z))).x_pow("a", x).z_pow("b", z));
        }
    }
    Ok((lhs, sum(terms)?))
}

fn wake_chain(_: &Params) -> Built {
    let lhs = circ(&ABC).cnot("c", "b").cnot("b", "a");
    let rhs = circ(&ABC).cnot("b", "a").cnot("c", "b").cnot("c", "a");
    pair(lhs, rhs)
}

fn wake_chain_alt(_: &Params) -> Built {
    let lhs = circ(&ABC).cnot("c", "b").cnot("b", "a");
    let rhs = circ(&ABC).cnot("c", "a").cnot("b", "a").cnot("c", "b");
    pair(lhs, rhs)
}

fn wake_loop(_: &Params) -> Built {
    let lhs = circ(&AB).cnot("a", "b").cnot("b", "a");
    let rhs = circ(&AB).cnot("b", "a").cnot("a", "b").cnot("b", "a").cnot("a", "b");
    pair(lhs, rhs)
}

fn wake_sigz(_: &Params) -> Built {
    let lhs = circ(&AB).z("b").cnot("a", "b");
    let rhs = circ(&AB).cnot("a", "b").z("b").z("a");
    pair(lhs, rhs)
}

fn two_brothers(_: &Params) -> Built {
    let lhs = circ(&ABC).cnot("a", "b").cnot("b", "c").cnot("a", "b");
    let rhs = circ(&ABC).cnot("b", "c").cnot("a", "c");
    pair(lhs, rhs)
}

fn three_brothers(_: &Params) -> Built {
    let lhs = circ(&ABCD).cnot("a", "b").cnot("b", "c").cnot("c", "d").cnot("b", "c").cnot("a", "b");
    let rhs = circ(&ABCD).cnot("c", "d").cnot("b", "d").cnot("a", "d");
    pair(lhs, rhs)
}

fn nn2(_: &Params) -> Built {
    let lhs = circ(&ABC).cnot("b", "c").cnot("a", "b").cnot("b", "c").cnot("a", "b");
    pair(lhs, circ(&ABC).cnot("a", "c"))
}

fn nn3(_: &Params) -> Built {
    let lhs = circ(&ABCD)
        .cnot("b", "c")
        .cnot("c", "d")
        .cnot("b", "c")
        .cnot("a", "b")
        .cnot("b", "c")
        .cnot("c", "d")
        .cnot("b", "c")
        .cnot("a", "b");
    pair(lhs, circ(&ABCD).cnot("a", "d"))
}

fn oval_pair(p: &Params) -> Built {
    let (p1, p2) = (p.matrix("pi1"), p.matrix("pi2"));
    let lhs = circ(&AB).mat(reflection(&kron(p1, p2)), &AB);
    let rhs = circ(&AB).ctrl(Gate::Matrix(reflection(p2)), &["b"], vec![pi(p1, &["a"])]);
    pair(lhs, rhs)
}

fn oval_special(p: &Params) -> Built {
    match p.int("form") {
        0 => pair(
            circ(&AB).ctrl(Gate::Z, &["b"], vec![n("a")]),
            circ(&AB).mat(reflection(&kron(&gates::n(), &gates::n())), &AB),
        ),
        _ => pair(
            circ(&AB).cnot("a", "b"),
            circ(&AB).ctrl(Gate::Matrix(reflection(&gates::number_op(Axis::X, false))), &["b"], vec![n("a")]),
        ),
    }
}

/// `V† , X^π, e^{-iΔZ/2}, X^π, e^{iΔZ/2}, V` on `target`, then the phase
/// box produced by `phase`.
fn decomposition(
    b: CircuitBuilder,
    u: &ComplexMatrix,
    target: &str,
    ctrl: &[crate::circuit::Control],
    phase: impl FnOnce(CircuitBuilder, f64) -> CircuitBuilder,
) -> Result<CircuitBuilder, crate::circuit::CircuitError> {
    let d = gates::diagonalize_2x2_unitary(u)?;
    let b = b
        .mat(d.v.dagger(), &[target])
        .ctrl(Gate::X, &[target], ctrl.to_vec())
        .gate(Gate::Rz(-d.delta / 2.0), target)
        .ctrl(Gate::X, &[target], ctrl.to_vec())
        .gate(Gate::Rz(d.delta / 2.0), target)
        .mat(d.v.clone(), &[target]);
    Ok(phase(b, d.theta_bar))
}

fn ctrl_u_decomp(p: &Params) -> Built {
    let (proj, u) = (p.matrix("pi"), p.matrix("U"));
    let ctrl = [pi(proj, &["a", "b"])];
    let lhs = circ(&ABC).ctrl(Gate::Matrix(u.clone()), &["c"], ctrl.to_vec());
    let rhs = decomposition(circ(&ABC), u, "c", &ctrl, |b, tb| b.mat(phase_on_projector(tb, proj), &["a", "b"]))?;
    pair(lhs, rhs)
}

fn n1_ctrl_u(p: &Params) -> Built {
    let u = p.matrix("U");
    let lhs = circ(&AB).ctrl(Gate::Matrix(u.clone()), &["b"], vec![n("a")]);
    let rhs = decomposition(circ(&AB), u, "b", &[n("a")], |b, tb| b.mat(phase_on_projector(tb, &gates::n()), &["a"]))?;
    pair(lhs, rhs)
}

fn n2_ctrl_u(p: &Params) -> Built {
    let u = p.matrix("U");
    let lhs = circ(&ABC).ctrl(Gate::Matrix(u.clone()), &["c"], vec![n("a"), n("b")]);
    let rhs = decomposition(circ(&ABC), u, "c", &[n("a"), n("b")], |b, tb| {
        b.ctrl(Gate::Matrix(phase_on_projector(tb, &gates::n())), &["b"], vec![n("a")])
    })?;
    pair(lhs, rhs)
}

fn perm_two_ctrl_u(p: &Params) -> Built {
    let (p1, p2) = p.pair("pi");
    let (u1, u2) = (p.matrix("U1"), p.matrix("U2"));
    let wake = &(&(u1 * u2) * &u1.dagger()) * &u2.dagger();
    let c1 = || vec![pi(p1, &["a", "b"])];
    let c2 = || vec![pi(p2, &["a", "b"])];
    let lhs = circ(&ABC).ctrl(Gate::Matrix(u2.clone()), &["c"], c2()).ctrl(Gate::Matrix(u1.clone()), &["c"], c1());
    let rhs = circ(&ABC)
        .ctrl(Gate::Matrix(u1.clone()), &["c"], c1())
        .ctrl(Gate::Matrix(u2.clone()), &["c"], c2())
        .ctrl(Gate::Matrix(wake), &["c"], vec![pi(&(p1 * p2), &["a", "b"])]);
    pair(lhs, rhs)
}

fn wake_times_dot(p: &Params) -> Built {
    let (proj, u) = (p.matrix("pi"), p.matrix("U"));
    let ug = || Gate::Matrix(u.clone());
    let lhs = circ(&ABC).ctrl(ug(), &["c"], vec![n("b")]).ctrl(Gate::X, &["b"], vec![pi(proj, &["a"])]);
    let rhs = circ(&ABC)
        .ctrl(Gate::X, &["b"], vec![pi(proj, &["a"])])
        .ctrl(ug(), &["c"], vec![n("b")])
        .ctrl(ug(), &["c"], vec![pi(proj, &["a"])])
        .ctrl(Gate::Matrix(matrix_power_dagger2(u)), &["c"], vec![pi(proj, &["a"]), n("b")]);
    pair(lhs, rhs)
}

/// `√U^{n(mid)}, X(mid)^{ctrl}, √U†^{n(mid)}, X(mid)^{ctrl}, √U^{ctrl}`.
fn sqrt_pattern(
    b: CircuitBuilder,
    u: &ComplexMatrix,
    ctrl: Vec<crate::circuit::Control>,
    mid: &str,
    target: &str,
) -> Result<CircuitBuilder, crate::circuit::CircuitError> {
    let root = gates::sqrt_unitary(u)?;
    Ok(b.ctrl(Gate::Matrix(root.clone()), &[target], vec![n(mid)])
        .ctrl(Gate::X, &[mid], ctrl.clone())
        .ctrl(Gate::Matrix(root.dagger()), &[target], vec![n(mid)])
        .ctrl(Gate::X, &[mid], ctrl.clone())
        .ctrl(Gate::Matrix(root), &[target], ctrl))
}

fn sqrt_reduction(p: &Params) -> Built {
    let (proj, u) = (p.matrix("pi"), p.matrix("U"));
    let lhs = circ(&ABC).ctrl(Gate::Matrix(u.clone()), &["c"], vec![pi(proj, &["a"]), n("b")]);
    pair(lhs, sqrt_pattern(circ(&ABC), u, vec![pi(proj, &["a"])], "b", "c")?)
}

fn n2_sqrt(p: &Params) -> Built {
    let u = p.matrix("U");
    let lhs = circ(&ABC).ctrl(Gate::Matrix(u.clone()), &["c"], vec![n("a"), n("b")]);
    pair(lhs, sqrt_pattern(circ(&ABC), u, vec![n("a")], "b", "c")?)
}

fn n3_sqrt(p: &Params) -> Built {
    let u = p.matrix("U");
    let lhs = circ(&ABCD).ctrl(Gate::Matrix(u.clone()), &["d"], vec![n("a"), n("b"), n("c")]);
    pair(lhs, sqrt_pattern(circ(&ABCD), u, vec![n("a"), n("b")], "c", "d")?)
}

fn wake_chain_gen(p: &Params) -> Built {
    let (p1, p2) = p.pair("pi");
    let lhs = circ(&ABC).ctrl(Gate::Z, &["c"], vec![pi(p2, &["a", "b"])]).ctrl(Gate::X, &["c"], vec![pi(p1, &["a", "b"])]);
    let rhs = circ(&ABC)
        .ctrl(Gate::X, &["c"], vec![pi(p1, &["a", "b"])])
        .ctrl(Gate::Z, &["c"], vec![pi(p2, &["a", "b"])])
        .mat(reflection(&(p1 * p2)), &["a", "b"]);
    pair(lhs, rhs)
}

fn n3_to_n2(_: &Params) -> Built {
    let ctrl_x = |b: CircuitBuilder, c1: &str, c2: &str, t: &str| b.ctrl(Gate::X, &[t], vec![n(c1), n(c2)]);
    let mut lhs = circ(&ABCDE);
    for _ in 0..2 {
        lhs = ctrl_x(lhs, "a", "d", "e");
        lhs = ctrl_x(lhs, "b", "c", "d");
    }
    let rhs = circ(&ABCDE).ctrl(Gate::X, &["e"], vec![n("a"), n("b"), n("c")]);
    pair(lhs, rhs)
}

fn wake_theta(p: &Params) -> Built {
    let (proj, t) = (p.matrix("pi"), p.angle("theta"));
    let lhs = circ(&AB).gate(Gate::Rz(t), "b").ctrl(Gate::X, &["b"], vec![pi(proj, &["a"])]);
    let rhs = circ(&AB)
        .ctrl(Gate::X, &["b"], vec![pi(proj, &["a"])])
        .gate(Gate::Rz(t), "b")
        .ctrl(Gate::Rz(-2.0 * t), &["b"], vec![pi(proj, &["a"])]);
    pair(lhs, rhs)
}

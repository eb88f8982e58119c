//! The exchanger, Bell states and the GHZ state.

use crate::circuit::{CircuitBuilder, Gate, ProjectorKind};
use crate::gates;
use crate::tensor::{kron, ComplexMatrix};

use super::kit::*;
use super::params::{bit, choice, unitary};
use super::{Identity, Params};

pub(super) static ENTRIES: &[Identity] = &[
    Identity::new("exch.basis-action", "E|a,b> = |b,a>", &[bit("a"), bit("b")], exch_basis),
    Identity::new("exch.symmetric", "E(a,b) = E(b,a)", &[], exch_symmetric),
    Identity::new("exch.def-involution", "E² = 1", &[], exch_involution),
    Identity::new("exch.3cnot", "E(a,b) is three alternating CNOTs", &[], exch_3cnot),
    Identity::new(
        "exch.four-forms",
        "the four alternating CNOT circuits, with closed or open controls, are all E",
        &[choice("form", 3)],
        exch_four_forms,
    ),
    Identity::new(
        "exch.uv-invariance",
        "E (U⊗V) E = V⊗U for 2×2 unitaries U, V",
        &[unitary("U", 1), unitary("V", 1)],
        exch_uv,
    ),
    Identity::new(
        "exch.n-nbar",
        "E = n n + n̄ n̄ + X X (n n̄ + n̄ n)",
        &[],
        exch_n_nbar,
    ),
    Identity::new(
        "exch.heisenberg",
        "E = ½ Σ (-1)^{xz} Λ^{xz} ⊗ Λ^{xz} = ½(1 + X·X + Y·Y + Z·Z)",
        &[choice("form", 2)],
        exch_heisenberg,
    ),
    Identity::new("exch.three-wire", "E(a,c) = E(a,b) E(b,c) E(a,b)", &[], exch_three_wire),
    Identity::new("bell.b00-circuit", "|B00> = CNOT(a→b) H(a) |0,0>", &[], bell_b00),
    Identity::new("bell.move-x", "X(b)|B00> = X(a)|B00>", &[], |_| bell_move(Gate::X)),
    Identity::new("bell.move-z", "Z(b)|B00> = Z(a)|B00>", &[], |_| bell_move(Gate::Z)),
    Identity::new("bell.move-h", "H(b)|B00> = H(a)|B00>", &[], |_| bell_move(Gate::H)),
    Identity::new(
        "bell.xz-table",
        "|B_xz> = Λ^{xz}(b)|B00>, |B^xz> = Λ^{xz}(a)|B00>",
        &[bit("x"), bit("z"), choice("form", 2)],
        bell_xz_table,
    ),
    Identity::new(
        "bell.swap-eigen",
        "E|B^xz> = |B_xz> = (-1)^{xz}|B^xz>",
        &[bit("x"), bit("z"), choice("form", 2)],
        bell_swap_eigen,
    ),
    Identity::new(
        "bell.sub-circuit",
        "|B_xz> = CNOT(a→b) H(a) |z,x>",
        &[bit("x"), bit("z")],
        bell_sub_circuit,
    ),
    Identity::new(
        "bell.super-circuit",
        "|B^xz> = CNOT(b→a) H(b) |x,z>",
        &[bit("x"), bit("z")],
        bell_super_circuit,
    ),
    Identity::new(
        "bell.orthonormal",
        "<B_x'z'|B_xz> = δ(x,x')δ(z,z')",
        &[bit("x"), bit("z"), bit("x2"), bit("z2")],
        bell_orthonormal,
    ),
    Identity::new("bell.completeness", "Σ_xz |B_xz><B_xz| = 1", &[], bell_completeness),
    Identity::new(
        "bell.marginals",
        "each one-qubit marginal of |B_xz> is uniform: P(a|x,z) = ½",
        &[bit("a"), bit("x"), bit("z"), choice("which", 2)],
        bell_marginals,
    ),
    Identity::new("ghz.circuit", "|GHZ> = CNOT(c→a) CNOT(c→b) H(c) |000>", &[], ghz_circuit),
    Identity::new(
        "ghz.xyy",
        "X Y Y, Y X Y and Y Y X each have eigenvalue -1 on |GHZ>",
        &[choice("pos", 3)],
        ghz_xyy,
    ),
    Identity::new("ghz.product", "(XYY)(YXY)(YYX)|GHZ> = -|GHZ>", &[], ghz_product),
    Identity::new("ghz.xxx", "X X X|GHZ> = |GHZ>", &[], ghz_xxx),
];

const AB: [&str; 2] = ["a", "b"];
const ABC: [&str; 3] = ["a", "b", "c"];

fn b00() -> ComplexMatrix {
    gates::bell_sub(0, 0)
}

fn exch_basis(p: &Params) -> Built {
    let (a, b) = (p.int("a"), p.int("b"));
    pair(circ(&AB).ket_bit("a", a).ket_bit("b", b).exch("a", "b"), circ(&AB).ket_bit("a", b).ket_bit("b", a))
}

fn exch_symmetric(_: &Params) -> Built {
    pair(circ(&AB).exch("a", "b"), circ(&AB).exch("b", "a"))
}

fn exch_involution(_: &Params) -> Built {
    pair(circ(&AB).exch("a", "b").exch("a", "b"), circ(&AB))
}

fn exch_3cnot(_: &Params) -> Built {
    pair(circ(&AB).exch("a", "b"), circ(&AB).cnot("b", "a").cnot("a", "b").cnot("b", "a"))
}

fn exch_four_forms(p: &Params) -> Built {
    let ox = |b: CircuitBuilder, ctrl: &str, t: &str| b.ctrl(Gate::X, &[t], vec![nbar(ctrl)]);
    let base = circ(&AB).cnot("b", "a").cnot("a", "b").cnot("b", "a");
    let other = match p.int("form") {
        0 => ox(ox(ox(circ(&AB), "b", "a"), "a", "b"), "b", "a"),
        1 => ox(ox(ox(circ(&AB), "a", "b"), "b", "a"), "a", "b"),
        _ => circ(&AB).cnot("a", "b").cnot("b", "a").cnot("a", "b"),
    };
    pair(base, other)
}

fn exch_uv(p: &Params) -> Built {
    let (u, v) = (p.matrix("U"), p.matrix("V"));
    let lhs = circ(&AB).mat(v.dagger(), &["a"]).mat(u.dagger(), &["b"]).exch("a", "b").mat(u.clone(), &["a"]).mat(v.clone(), &["b"]);
    pair(lhs, circ(&AB).exch("a", "b"))
}

fn exch_n_nbar(_: &Params) -> Built {
    let (nn, bb) = (gates::n(), gates::nbar());
    let proj = |l: &ComplexMatrix, r: &ComplexMatrix| circ(&AB).proj(ProjectorKind::Matrix(kron(l, r)), &AB);
    let rhs = sum(vec![
        proj(&nn, &nn),
        proj(&bb, &bb),
        proj(&nn, &bb).x("a").x("b"),
        proj(&bb, &nn).x("a").x("b"),
    ])?;
    Ok((circ(&AB).exch("a", "b").build()?.into(), rhs))
}

fn exch_heisenberg(p: &Params) -> Built {
    let lhs = circ(&AB).exch("a", "b").build()?.into();
    let terms = match p.int("form") {
        0 => {
            let mut t = Vec::new();
            for x in 0..2u8 {
                for z in 0..2u8 {
                    // Λ^{xz} = X^x Z^z on each wire
                    t.push(circ(&AB).scalar(re(0.5 * sign(x & z))).z_pow("a", z).x_pow("a", x).z_pow("b", z).x_pow("b", x));
                }
            }
            t
        }
        _ => vec![
            circ(&AB).scalar(re(0.5)),
            circ(&AB).scalar(re(0.5)).x("a").x("b"),
            circ(&AB).scalar(re(0.5)).y("a").y("b"),
            circ(&AB).scalar(re(0.5)).z("a").z("b"),
        ],
    };
    Ok((lhs, sum(terms)?))
}

fn exch_three_wire(_: &Params) -> Built {
    pair(circ(&ABC).exch("a", "c"), circ(&ABC).exch("a", "b").exch("b", "c").exch("a", "b"))
}

fn bell_b00(_: &Params) -> Built {
    pair(circ(&AB).ket_vec(&AB, &b00()), circ(&AB).ket_bit("a", 0).ket_bit("b", 0).h("a").cnot("a", "b"))
}

fn bell_move(g: Gate) -> Built {
    pair(circ(&AB).ket_vec(&AB, &b00()).gate(g.clone(), "b"), circ(&AB).ket_vec(&AB, &b00()).gate(g, "a"))
}

fn bell_xz_table(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let (w, target) = if p.int("form") == 0 { ("b", gates::bell_sub(x, z)) } else { ("a", gates::bell_super(x, z)) };
    let lhs = circ(&AB).ket_vec(&AB, &b00()).z_pow(w, z).x_pow(w, x);
    pair(lhs, circ(&AB).ket_vec(&AB, &target))
}

fn bell_swap_eigen(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let sup = gates::bell_super(x, z);
    let lhs = circ(&AB).ket_vec(&AB, &sup).exch("a", "b");
    let rhs = if p.int("form") == 0 {
        circ(&AB).ket_vec(&AB, &gates::bell_sub(x, z))
    } else {
        circ(&AB).ket_vec(&AB, &sup).scalar(re(sign(x & z)))
    };
    pair(lhs, rhs)
}

fn bell_sub_circuit(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let lhs = circ(&AB).ket_bit("a", z).ket_bit("b", x).h("a").cnot("a", "b");
    pair(lhs, circ(&AB).ket_vec(&AB, &gates::bell_sub(x, z)))
}

fn bell_super_circuit(p: &Params) -> Built {
    let (x, z) = (p.int("x"), p.int("z"));
    let lhs = circ(&AB).ket_bit("a", x).ket_bit("b", z).h("b").cnot("b", "a");
    pair(lhs, circ(&AB).ket_vec(&AB, &gates::bell_super(x, z)))
}

fn bell_orthonormal(p: &Params) -> Built {
    let (x, z, x2, z2) = (p.int("x"), p.int("z"), p.int("x2"), p.int("z2"));
    let lhs = circ(&AB).ket_vec(&AB, &gates::bell_sub(x, z)).bra_of(&AB, &gates::bell_sub(x2, z2));
    let delta = if (x, z) == (x2, z2) { 1.0 } else { 0.0 };
    pair(lhs, circ(&[]).scalar(re(delta)))
}

fn bell_completeness(_: &Params) -> Built {
    let mut terms = Vec::new();
    for x in 0..2 {
        for z in 0..2 {
            let v = gates::bell_sub(x, z);
            terms.push(circ(&AB).proj(ProjectorKind::Matrix(&v * &v.dagger()), &AB));
        }
    }
    Ok((sum(terms)?, circ(&AB).build()?.into()))
}

/// `<B_xz| P_a(w) |B_xz>`, the probability that wire `w` reads `a`; the
/// projector sums `|<a,b|B_xz>|²` over the other wire's outcome.
fn bell_marginals(p: &Params) -> Built {
    let (a, x, z) = (p.int("a"), p.int("x"), p.int("z"));
    let w = AB[p.int("which") as usize];
    let v = gates::bell_sub(x, z);
    let lhs = circ(&AB).ket_vec(&AB, &v).proj(ProjectorKind::Z(a), &[w]).bra_of(&AB, &v);
    pair(lhs, circ(&[]).scalar(re(0.5)))
}

fn ghz_ket() -> CircuitBuilder {
    circ(&ABC).ket_vec(&ABC, &gates::ghz())
}

fn ghz_circuit(_: &Params) -> Built {
    let rhs = circ(&ABC).ket_bit("a", 0).ket_bit("b", 0).ket_bit("c", 0).h("c").cnot("c", "b").cnot("c", "a");
    pair(ghz_ket(), rhs)
}

fn xyy(b: CircuitBuilder, pos: usize) -> CircuitBuilder {
    ABC.iter().enumerate().fold(b, |b, (i, w)| if i == pos { b.x(w) } else { b.y(w) })
}

fn ghz_xyy(p: &Params) -> Built {
    pair(xyy(ghz_ket(), p.int("pos") as usize), ghz_ket().scalar(re(-1.0)))
}

fn ghz_product(_: &Params) -> Built {
    // YYX acts first
    let lhs = xyy(xyy(xyy(ghz_ket(), 2), 1), 0);
    pair(lhs, ghz_ket().scalar(re(-1.0)))
}

fn ghz_xxx(_: &Params) -> Built {
    pair(ghz_ket().x("a").x("b").x("c"), ghz_ket())
}

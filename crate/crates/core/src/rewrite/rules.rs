//! The rule table.

use crate::circuit::{Control, Element, Gate, ProjectorKind};
use crate::gates;
use crate::tensor::ComplexMatrix;

use super::lower::{decompose_window, reduce_window};
use super::{as_cnot, commuting_product, single_target, Bindings, RewriteError, RewriteRule, MATCH_TOL};

type Out = Result<Vec<Element>, RewriteError>;

pub(super) static RULES: &[RewriteRule] = &[
    RewriteRule::forward(
        "wake-chain",
        2,
        "CNOT(p→q) CNOT(q→r) becomes CNOT(q→r) CNOT(p→q) plus the wake CNOT(p→r)",
        chain_match,
        chain_produce,
    ),
    RewriteRule::inverse("wake-chain-inv", 3, "drop the CNOT(p→r) wake", swap_first_two, chain_match, chain_produce),
    RewriteRule::forward(
        "wake-chain-alt",
        2,
        "CNOT(p→q) CNOT(q→r) becomes the wake CNOT(p→r) then CNOT(q→r) CNOT(p→q)",
        chain_match,
        chain_alt_produce,
    ),
    RewriteRule::inverse(
        "wake-chain-alt-inv",
        3,
        "drop the leading CNOT(p→r) wake",
        |w| vec![w[2].clone(), w[1].clone()],
        chain_match,
        chain_alt_produce,
    ),
    RewriteRule::forward(
        "wake-loop",
        2,
        "CNOT(a→b) CNOT(b→a) becomes CNOT(b→a) CNOT(a→b) plus a two-CNOT wake",
        loop_match,
        loop_produce,
    ),
    RewriteRule::inverse("wake-loop-inv", 4, "drop the two-CNOT wake", swap_first_two, loop_match, loop_produce),
    RewriteRule::forward(
        "wake-sigz",
        2,
        "Z(t) CNOT(c→t) becomes CNOT(c→t) Z(t) plus the wake Z(c)",
        sigz_match,
        sigz_produce,
    ),
    RewriteRule::inverse("wake-sigz-inv", 3, "drop the Z(c) wake", swap_first_two, sigz_match, sigz_produce),
    RewriteRule::forward(
        "perm-two-ctrl-u",
        2,
        "A^P B^Q becomes B^Q A^P plus the wake (B A B† A†)^{PQ}, for commuting P, Q",
        perm_match,
        perm_produce,
    ),
    RewriteRule::inverse("perm-two-ctrl-u-inv", 3, "drop the controlled commutator wake", swap_first_two, perm_match, perm_produce),
    RewriteRule::forward(
        "wake-times-dot",
        2,
        "U(t)^{n(m)} X(m)^P becomes X(m)^P U(t)^{n(m)} plus the wake U^P (U†)²^{P n(m)}",
        dot_match,
        dot_produce,
    ),
    RewriteRule::inverse("wake-times-dot-inv", 4, "drop the U^P (U†)²^{P n(m)} wake", swap_first_two, dot_match, dot_produce),
    RewriteRule::forward(
        "wake-chain-gen",
        2,
        "Z(t)^Q X(t)^P becomes X(t)^P Z(t)^Q plus the wake (-1)^{PQ}, for commuting P, Q",
        gen_match,
        gen_produce,
    ),
    RewriteRule::inverse("wake-chain-gen-inv", 3, "drop the (-1)^{PQ} wake", swap_first_two, gen_match, gen_produce),
    RewriteRule::forward(
        "wake-theta",
        2,
        "exp(iθZ)(t) X(t)^P becomes X(t)^P exp(iθZ)(t) plus the wake exp(-2iθZ)^P",
        theta_match,
        theta_produce,
    ),
    RewriteRule::inverse("wake-theta-inv", 3, "drop the exp(-2iθZ)^P wake", swap_first_two, theta_match, theta_produce),
    RewriteRule::forward(
        "decompose-ctrl-u",
        1,
        "U^π as V† X^π e^{-iΔZ/2} X^π e^{iΔZ/2} V followed by the phase e^{iθ̄π}",
        decompose_match,
        decompose_window,
    ),
    RewriteRule::forward(
        "reduce-control",
        1,
        "U^{π n(m)} as square roots of U under n(m) and π, with two X(m)^π",
        reduce_match,
        reduce_window,
    ),
    RewriteRule::forward(
        "bibit-to-2cnots",
        1,
        "Π^j_ZZ(a,b) as CNOT(a→b) P_j(b) CNOT(a→b)",
        bibit_match,
        bibit_produce,
    ),
    RewriteRule::inverse(
        "bibit-to-2cnots-inv",
        3,
        "CNOT(a→b) P_j(b) CNOT(a→b) as Π^j_ZZ(a,b)",
        bibit_undo,
        bibit_match,
        bibit_produce,
    ),
];

fn swap_first_two(w: &[Element]) -> Vec<Element> {
    if w.len() < 2 {
        return Vec::new();
    }
    vec![w[1].clone(), w[0].clone()]
}

fn bind(pairs: &[(&'static str, &str)]) -> Bindings {
    pairs.iter().map(|(k, v)| (*k, v.to_string())).collect()
}

fn cnot(c: &str, t: &str) -> Element {
    Element::cnot(c, t)
}

fn chain_match(w: &[Element]) -> Option<Bindings> {
    let (p, q) = as_cnot(&w[0])?;
    let (q2, r) = as_cnot(&w[1])?;
    (q == q2 && r != p).then(|| bind(&[("p", p), ("q", q), ("r", r)]))
}

fn chain_wires(w: &[Element]) -> (&str, &str, &str) {
    let (p, q) = as_cnot(&w[0]).expect("matched");
    let (_, r) = as_cnot(&w[1]).expect("matched");
    (p, q, r)
}

fn chain_produce(w: &[Element]) -> Out {
    let (p, q, r) = chain_wires(w);
    Ok(vec![cnot(q, r), cnot(p, q), cnot(p, r)])
}

fn chain_alt_produce(w: &[Element]) -> Out {
    let (p, q, r) = chain_wires(w);
    Ok(vec![cnot(p, r), cnot(q, r), cnot(p, q)])
}

fn loop_match(w: &[Element]) -> Option<Bindings> {
    let (a, b) = as_cnot(&w[0])?;
    let (b2, a2) = as_cnot(&w[1])?;
    (a == a2 && b == b2).then(|| bind(&[("a", a), ("b", b)]))
}

fn loop_produce(w: &[Element]) -> Out {
    let (a, b) = as_cnot(&w[0]).expect("matched");
    Ok(vec![cnot(b, a), cnot(a, b), cnot(b, a), cnot(a, b)])
}

fn sigz_match(w: &[Element]) -> Option<Bindings> {
    let (g, t, ctl) = single_target(&w[0])?;
    let (c, t2) = as_cnot(&w[1])?;
    (matches!(g, Gate::Z) && ctl.is_empty() && t == t2).then(|| bind(&[("c", c), ("t", t)]))
}

fn sigz_produce(w: &[Element]) -> Out {
    let (c, t) = as_cnot(&w[1]).expect("matched");
    Ok(vec![cnot(c, t), Element::gate(Gate::Z, t), Element::gate(Gate::Z, c)])
}

fn is_unitary2(g: &Gate) -> bool {
    g.matrix().is_unitary(MATCH_TOL)
}

fn perm_match(w: &[Element]) -> Option<Bindings> {
    let (a, t, p) = single_target(&w[0])?;
    let (b, t2, q) = single_target(&w[1])?;
    // swapping equal elements would leave the window unchanged
    if t != t2 || p.is_empty() || q.is_empty() || w[0] == w[1] || !is_unitary2(a) || !is_unitary2(b) {
        return None;
    }
    commuting_product(p, q)?;
    Some(bind(&[("t", t)]))
}

fn perm_produce(w: &[Element]) -> Out {
    let (a, t, p) = single_target(&w[0]).expect("matched");
    let (b, _, q) = single_target(&w[1]).expect("matched");
    let (am, bm) = (a.matrix(), b.matrix());
    let wake = &(&(&bm * &am) * &bm.dagger()) * &am.dagger();
    let (pq, union) = commuting_product(p, q).ok_or_else(|| RewriteError::NoMatch { rule: "perm-two-ctrl-u".into(), at: 0 })?;
    Ok(vec![
        w[1].clone(),
        w[0].clone(),
        Element::controlled(Gate::Matrix(wake), &[t], vec![Control::Projector { matrix: pq, wires: union }]),
    ])
}

fn dot_match(w: &[Element]) -> Option<Bindings> {
    let (u, t, ctl) = single_target(&w[0])?;
    let [Control::N(m)] = ctl else { return None };
    let (x, m2, p) = single_target(&w[1])?;
    let touches = |ws: Vec<&str>| ws.contains(&t) || ws.contains(&m.as_str());
    let p_wires: Vec<&str> = p.iter().flat_map(Control::wires).collect();
    (matches!(x, Gate::X) && m2 == m && !p.is_empty() && !touches(p_wires) && is_unitary2(u))
        .then(|| bind(&[("t", t), ("m", m)]))
}

fn dot_produce(w: &[Element]) -> Out {
    let (u, t, ctl) = single_target(&w[0]).expect("matched");
    let (_, _, p) = single_target(&w[1]).expect("matched");
    let ud = u.matrix().dagger();
    let mut both = p.to_vec();
    both.extend_from_slice(ctl);
    Ok(vec![
        w[1].clone(),
        w[0].clone(),
        Element::controlled(u.clone(), &[t], p.to_vec()),
        Element::controlled(Gate::Matrix(&ud * &ud), &[t], both),
    ])
}

fn gen_match(w: &[Element]) -> Option<Bindings> {
    let (z, t, q) = single_target(&w[0])?;
    let (x, t2, p) = single_target(&w[1])?;
    if !matches!(z, Gate::Z) || !matches!(x, Gate::X) || t != t2 || p.is_empty() || q.is_empty() {
        return None;
    }
    commuting_product(p, q)?;
    Some(bind(&[("t", t)]))
}

fn gen_produce(w: &[Element]) -> Out {
    let (_, _, q) = single_target(&w[0]).expect("matched");
    let (_, _, p) = single_target(&w[1]).expect("matched");
    let (pq, union) = commuting_product(p, q).ok_or_else(|| RewriteError::NoMatch { rule: "wake-chain-gen".into(), at: 0 })?;
    let refl = &ComplexMatrix::identity(pq.rows()) - &pq.scale_real(2.0);
    let wires: Vec<&str> = union.iter().map(String::as_str).collect();
    Ok(vec![w[1].clone(), w[0].clone(), Element::controlled(Gate::Matrix(refl), &wires, vec![])])
}

fn theta_match(w: &[Element]) -> Option<Bindings> {
    let (rz, t, ctl) = single_target(&w[0])?;
    let (x, t2, p) = single_target(&w[1])?;
    (matches!(rz, Gate::Rz(_)) && ctl.is_empty() && matches!(x, Gate::X) && t == t2 && !p.is_empty())
        .then(|| bind(&[("t", t)]))
}

fn theta_produce(w: &[Element]) -> Out {
    let (Gate::Rz(theta), t, _) = single_target(&w[0]).expect("matched") else { unreachable!("matched Rz") };
    let (_, _, p) = single_target(&w[1]).expect("matched");
    Ok(vec![w[1].clone(), w[0].clone(), Element::controlled(Gate::Rz(-2.0 * theta), &[t], p.to_vec())])
}

fn decompose_match(w: &[Element]) -> Option<Bindings> {
    let (g, t, ctl) = single_target(&w[0])?;
    (!ctl.is_empty() && is_unitary2(g)).then(|| bind(&[("t", t)]))
}

fn reduce_match(w: &[Element]) -> Option<Bindings> {
    let (g, t, ctl) = single_target(&w[0])?;
    if ctl.len() < 2 || !is_unitary2(g) {
        return None;
    }
    ctl.iter().rev().find_map(|c| match c {
        Control::N(m) => Some(bind(&[("t", t), ("m", m)])),
        _ => None,
    })
}

fn bibit_match(w: &[Element]) -> Option<Bindings> {
    match &w[0] {
        Element::Projector { kind: ProjectorKind::ZZ(_), targets } => Some(bind(&[("a", &targets[0]), ("b", &targets[1])])),
        _ => None,
    }
}

fn bibit_produce(w: &[Element]) -> Out {
    let Element::Projector { kind: ProjectorKind::ZZ(j), targets } = &w[0] else { unreachable!("matched ZZ") };
    let (a, b) = (targets[0].as_str(), targets[1].as_str());
    Ok(vec![cnot(a, b), Element::Projector { kind: ProjectorKind::Z(*j), targets: vec![b.to_string()] }, cnot(a, b)])
}

fn bibit_undo(w: &[Element]) -> Vec<Element> {
    match (as_cnot(&w[0]), &w[1]) {
        (Some((a, b)), Element::Projector { kind, targets }) if targets.len() == 1 => {
            let m = kind.matrix();
            let j = if m.max_abs_diff(&gates::proj_z(1)).is_ok_and(|d| d <= MATCH_TOL) { 1 } else { 0 };
            vec![Element::Projector { kind: ProjectorKind::ZZ(j), targets: vec![a.to_string(), b.to_string()] }]
        }
        _ => Vec::new(),
    }
}

//! Control lowering: decomposing and reducing controlled unitaries, the
//! n³-controlled NOT, and nearest-neighbour CNOT layouts.

use crate::circuit::{Circuit, Control, Element, Gate};
use crate::gates;
use crate::tensor::{Complex, ComplexMatrix};

use super::{as_cnot, single_target, RewriteError, Site};

fn no_match(rule: &str, at: usize) -> RewriteError {
    RewriteError::NoMatch { rule: rule.to_string(), at }
}

fn phase_on(phi: f64, p: &ComplexMatrix) -> ComplexMatrix {
    let id = ComplexMatrix::identity(p.rows());
    &id + &p.scale(Complex::from_polar(1.0, phi) - 1.0)
}

/// `U^π → V†, X^π, e^{-iΔZ/2}, X^π, e^{iΔZ/2}, V, e^{iθ̄π}` on a one-element
/// window. The phase box goes on the last control's wires, controlled by
/// the others; with no controls it is a scalar.
pub(super) fn decompose_window(w: &[Element]) -> Result<Vec<Element>, RewriteError> {
    let (g, t, ctl) = single_target(&w[0]).ok_or_else(|| no_match("decompose-ctrl-u", 0))?;
    let d = gates::diagonalize_2x2_unitary(&g.matrix())?;
    let x = || Element::controlled(Gate::X, &[t], ctl.to_vec());
    let mut out = vec![
        Element::controlled(Gate::Matrix(d.v.dagger()), &[t], vec![]),
        x(),
        Element::gate(Gate::Rz(-d.delta / 2.0), t),
        x(),
        Element::gate(Gate::Rz(d.delta / 2.0), t),
        Element::controlled(Gate::Matrix(d.v.clone()), &[t], vec![]),
    ];
    match ctl.split_last() {
        None => out.push(Element::Scalar(Complex::from_polar(1.0, d.theta_bar))),
        Some((last, rest)) => {
            let wires = last.wires();
            out.push(Element::controlled(Gate::Matrix(phase_on(d.theta_bar, &last.matrix())), &wires, rest.to_vec()));
        }
    }
    Ok(out)
}

/// `U^{π n(m)} → √U^{n(m)}, X(m)^π, √U†^{n(m)}, X(m)^π, √U^π`, taking `m`
/// from the last filled-dot control.
pub(super) fn reduce_window(w: &[Element]) -> Result<Vec<Element>, RewriteError> {
    let (g, t, ctl) = single_target(&w[0]).ok_or_else(|| no_match("reduce-control", 0))?;
    let pos = ctl.iter().rposition(|c| matches!(c, Control::N(_))).ok_or_else(|| no_match("reduce-control", 0))?;
    if ctl.len() < 2 {
        return Err(no_match("reduce-control", 0));
    }
    let m = ctl[pos].wires()[0].to_string();
    let mut rest = ctl.to_vec();
    rest.remove(pos);
    let root = gates::sqrt_unitary(&g.matrix())?;
    let dot = || vec![Control::N(m.clone())];
    Ok(vec![
        Element::controlled(Gate::Matrix(root.clone()), &[t], dot()),
        Element::controlled(Gate::X, &[&m], rest.clone()),
        Element::controlled(Gate::Matrix(root.dagger()), &[t], dot()),
        Element::controlled(Gate::X, &[&m], rest.clone()),
        Element::controlled(Gate::Matrix(root), &[t], rest),
    ])
}

fn replace_one(
    c: &Circuit,
    site: &Site,
    name: &str,
    f: fn(&[Element]) -> Result<Vec<Element>, RewriteError>,
) -> Result<Circuit, RewriteError> {
    site.check_fresh(c)?;
    if site.len() != 1 {
        return Err(no_match(name, site.start));
    }
    let out = f(site.window()).map_err(|e| match e {
        RewriteError::NoMatch { rule, .. } => RewriteError::NoMatch { rule, at: site.start },
        other => other,
    })?;
    Ok(c.splice(site.start, 1, out)?)
}

/// Replace the controlled single-wire unitary at `site` by its
/// seven-element decomposition.
pub fn decompose_controlled_u(c: &Circuit, site: &Site) -> Result<Circuit, RewriteError> {
    replace_one(c, site, "decompose-ctrl-u", decompose_window)
}

/// Remove one filled-dot control from the unitary at `site` using square
/// roots of its payload.
pub fn reduce_control(c: &Circuit, site: &Site) -> Result<Circuit, RewriteError> {
    replace_one(c, site, "reduce-control", reduce_window)
}

/// Replace the n³-controlled NOT at `site` by four n²-controlled NOTs that
/// borrow `ancilla`. The ancilla may be in any state; it is returned
/// unchanged.
pub fn lower_n3_cnot(c: &Circuit, site: &Site, ancilla: &str) -> Result<Circuit, RewriteError> {
    site.check_fresh(c)?;
    let bad = || no_match("lower-n3-cnot", site.start);
    let (g, t, ctl) = single_target(&site.window()[0]).ok_or_else(bad)?;
    let dots: Vec<&str> = ctl
        .iter()
        .filter_map(|k| match k {
            Control::N(w) => Some(w.as_str()),
            _ => None,
        })
        .collect();
    if !matches!(g, Gate::X) || ctl.len() != 3 || dots.len() != 3 {
        return Err(bad());
    }
    if !c.wires().contains(ancilla) || ancilla == t || dots.contains(&ancilla) {
        return Err(RewriteError::NoAncilla(ancilla.to_string()));
    }
    let closed_before = c.elements()[..site.start]
        .iter()
        .any(|e| matches!(e, Element::Bra { .. }) && e.wires().contains(&ancilla));
    let opened_after = c.elements()[site.start..]
        .iter()
        .any(|e| matches!(e, Element::Ket { .. }) && e.wires().contains(&ancilla));
    if closed_before || opened_after {
        return Err(RewriteError::NoAncilla(ancilla.to_string()));
    }
    let n = |w: &str| Control::N(w.to_string());
    let (a, b, cc) = (dots[0], dots[1], dots[2]);
    let outer = || Element::controlled(Gate::X, &[t], vec![n(a), n(ancilla)]);
    let inner = || Element::controlled(Gate::X, &[ancilla], vec![n(b), n(cc)]);
    Ok(c.splice(site.start, 1, vec![outer(), inner(), outer(), inner()])?)
}

/// Nearest-neighbour CNOTs equal to `CNOT(wires[a] → wires[t])`.
///
/// Distance 2 and 3 use the fixed four- and eight-CNOT patterns. Longer
/// spans bridge through the wire next to the target,
/// `C(a→t) = C(b→t) C(a→b) C(b→t) C(a→b)`, and recurse on `C(a→b)`, so the
/// count grows as `2 + 2 f(d-1)`.
fn nn_cnot(wires: &[&str], a: usize, t: usize) -> Vec<Element> {
    let d = a.abs_diff(t);
    let step = |from: usize, k: usize| if t > a { from + k } else { from - k };
    let cn = |x: usize, y: usize| Element::cnot(wires[x], wires[y]);
    match d {
        0 | 1 => vec![cn(a, t)],
        2 => {
            let b = step(a, 1);
            vec![cn(b, t), cn(a, b), cn(b, t), cn(a, b)]
        }
        3 => {
            let (b, m) = (step(a, 1), step(a, 2));
            vec![cn(b, m), cn(m, t), cn(b, m), cn(a, b), cn(b, m), cn(m, t), cn(b, m), cn(a, b)]
        }
        _ => {
            let b = if t > a { t - 1 } else { t + 1 };
            let inner = nn_cnot(wires, a, b);
            let mut out = vec![cn(b, t)];
            out.extend(inner.iter().cloned());
            out.push(cn(b, t));
            out.extend(inner);
            out
        }
    }
}

/// Replace every CNOT whose wires are not adjacent in declaration order by
/// nearest-neighbour CNOTs. Other elements are kept as they are.
pub fn nearest_neighborize(c: &Circuit) -> Result<Circuit, RewriteError> {
    let labels: Vec<&str> = c.wires().iter().collect();
    let pos = |w: &str| labels.iter().position(|l| *l == w).expect("declared");
    let mut out = Vec::with_capacity(c.len());
    for e in c.elements() {
        match as_cnot(e) {
            Some((ctl, tgt)) => out.extend(nn_cnot(&labels, pos(ctl), pos(tgt))),
            None => out.push(e.clone()),
        }
    }
    Ok(Circuit::new(c.wires().clone(), out)?)
}

//! Conversions between measurement boxes and CNOT circuits.
//!
//! Conversions that need an ancilla prepare it in `|0>` and close it with a
//! bra, so the ancilla must be declared and otherwise unused. The result
//! then equals the original circuit with the ancilla closed by `|0>` and
//! `<0|`.

use crate::circuit::{Circuit, Element, Gate, ProjectorKind, StateSpec};
use crate::tensor::c;

use super::{as_cnot, RewriteError, Site};

/// A measurement rewrite, named after the identity it applies.
#[derive(Clone, Debug, PartialEq)]
pub enum Conversion {
    /// `P_j(b)` → `|0>_a, CNOT(b→a), <j|_a`.
    InternalToFinal { ancilla: String },
    /// `Π^j_ZZ(a,b)` → `CNOT(a→b), P_j(b), CNOT(a→b)`.
    BibitTo2Cnots,
    /// `Π^j_ZZ(b,c)` → `|0>_a, CNOT(c→a), CNOT(b→a), <j|_a`.
    BibitToAncilla { ancilla: String },
    /// `CNOT(a→c)` → two bibit measurements through ancilla `b` with
    /// outcomes `j1`, `j2`, final bit `k` and factor `(-1)^{(k+j1)j2} 2√2`.
    CnotTo2Meas { ancilla: String, k: u8, j1: u8, j2: u8 },
}

impl Conversion {
    pub const IDS: [&'static str; 4] = ["internal-to-final", "bibit-to-2cnots", "bibit-alt", "cnot-to-2meas"];

    pub fn id(&self) -> &'static str {
        match self {
            Conversion::InternalToFinal { .. } => Self::IDS[0],
            Conversion::BibitTo2Cnots => Self::IDS[1],
            Conversion::BibitToAncilla { .. } => Self::IDS[2],
            Conversion::CnotTo2Meas { .. } => Self::IDS[3],
        }
    }

    /// Build from an id; `ancilla` and `bits` are used where needed.
    pub fn from_id(id: &str, ancilla: Option<&str>, bits: [u8; 3]) -> Result<Self, RewriteError> {
        let anc = || ancilla.map(String::from).ok_or_else(|| RewriteError::NoAncilla(String::new()));
        Ok(match id {
            "internal-to-final" => Conversion::InternalToFinal { ancilla: anc()? },
            "bibit-to-2cnots" => Conversion::BibitTo2Cnots,
            "bibit-alt" => Conversion::BibitToAncilla { ancilla: anc()? },
            "cnot-to-2meas" => Conversion::CnotTo2Meas { ancilla: anc()?, k: bits[0] & 1, j1: bits[1] & 1, j2: bits[2] & 1 },
            other => return Err(RewriteError::UnknownRule(other.to_string())),
        })
    }

    fn ancilla(&self) -> Option<&str> {
        match self {
            Conversion::InternalToFinal { ancilla }
            | Conversion::BibitToAncilla { ancilla }
            | Conversion::CnotTo2Meas { ancilla, .. } => Some(ancilla),
            Conversion::BibitTo2Cnots => None,
        }
    }
}

fn check_ancilla(circ: &Circuit, ancilla: &str) -> Result<(), RewriteError> {
    let used = circ.elements().iter().any(|e| e.wires().contains(&ancilla));
    if !circ.wires().contains(ancilla) || used {
        return Err(RewriteError::NoAncilla(ancilla.to_string()));
    }
    Ok(())
}

fn proj(kind: ProjectorKind, wires: &[&str]) -> Element {
    Element::Projector { kind, targets: wires.iter().map(|s| s.to_string()).collect() }
}

/// Replace the element at `site` according to `conv`.
pub fn convert_measurement(circ: &Circuit, site: &Site, conv: &Conversion) -> Result<Circuit, RewriteError> {
    site.check_fresh(circ)?;
    let mismatch = || RewriteError::NoMatch { rule: conv.id().to_string(), at: site.start };
    if site.len() != 1 {
        return Err(mismatch());
    }
    if let Some(a) = conv.ancilla() {
        check_ancilla(circ, a)?;
    }
    let e = &site.window()[0];
    let out = match (conv, e) {
        (Conversion::InternalToFinal { ancilla }, Element::Projector { kind: ProjectorKind::Z(j), targets }) => {
            let a = ancilla.as_str();
            vec![Element::ket(a, StateSpec::Zero), Element::cnot(&targets[0], a), Element::bra(a, StateSpec::bit(*j))]
        }
        (Conversion::BibitTo2Cnots, Element::Projector { kind: ProjectorKind::ZZ(j), targets }) => {
            let (a, b) = (targets[0].as_str(), targets[1].as_str());
            vec![Element::cnot(a, b), proj(ProjectorKind::Z(*j), &[b]), Element::cnot(a, b)]
        }
        (Conversion::BibitToAncilla { ancilla }, Element::Projector { kind: ProjectorKind::ZZ(j), targets }) => {
            let a = ancilla.as_str();
            vec![
                Element::ket(a, StateSpec::Zero),
                Element::cnot(&targets[1], a),
                Element::cnot(&targets[0], a),
                Element::bra(a, StateSpec::bit(*j)),
            ]
        }
        (Conversion::CnotTo2Meas { ancilla, k, j1, j2 }, e) => {
            let (a, t) = as_cnot(e).ok_or_else(mismatch)?;
            let b = ancilla.as_str();
            let h = |w: &str| Element::gate(Gate::H, w);
            let mut out = vec![
                Element::ket(b, StateSpec::Zero),
                h(b),
                proj(ProjectorKind::ZZ(*j1), &[a, b]),
                h(b),
                h(t),
                proj(ProjectorKind::ZZ(*j2), &[b, t]),
                h(b),
                h(t),
            ];
            if *j2 == 1 {
                out.push(Element::gate(Gate::Z, a));
            }
            if k ^ j1 == 1 {
                out.push(Element::gate(Gate::X, t));
            }
            out.push(Element::bra(b, StateSpec::bit(*k)));
            let sign = if (k ^ j1) & j2 == 1 { -1.0 } else { 1.0 };
            out.push(Element::Scalar(c(sign * 2.0 * 2f64.sqrt(), 0.0)));
            out
        }
        _ => return Err(mismatch()),
    };
    Ok(circ.splice(site.start, 1, out)?)
}

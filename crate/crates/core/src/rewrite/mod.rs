//! Directed, semantics-preserving rewrites on circuits.
//!
//! A [`RewriteRule`] matches a window of consecutive elements and replaces
//! it with an equal sequence. Rules read left to right in chronological
//! order: the window is the identity's left side and the replacement its
//! right side. Every rule `r` that only permutes or expands has an inverse
//! registered as `r-inv`.
//!
//! Operations that need more than a window (a spare wire, measurement
//! outcomes) are plain functions: [`lower_n3_cnot`], [`convert_measurement`]
//! and [`nearest_neighborize`].

mod lower;
mod measure;
mod rules;
pub mod sample;

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Control, Element, Gate};
use crate::gates::GateError;
use crate::tensor::{embed, ComplexMatrix, TensorError, WireList};

pub use lower::{decompose_controlled_u, lower_n3_cnot, nearest_neighborize, reduce_control};
pub use measure::{convert_measurement, Conversion};

/// Numerical tolerance for structural matches on matrix payloads.
pub const MATCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RewriteError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("site at {0} no longer matches the circuit")]
    StaleSite(usize),
    #[error("rule `{rule}` does not match at {at}")]
    NoMatch { rule: String, at: usize },
    #[error("window {start}..{end} is out of bounds")]
    OutOfBounds { start: usize, end: usize },
    #[error("wire `{0}` cannot serve as an ancilla here")]
    NoAncilla(String),
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

impl From<TensorError> for RewriteError {
    fn from(e: TensorError) -> Self {
        RewriteError::Circuit(e.into())
    }
}

/// Named wires (or other labels) bound by a matcher.
pub type Bindings = Vec<(&'static str, String)>;

/// Where a rule matched.
#[derive(Clone, Debug, PartialEq)]
pub struct Site {
    pub start: usize,
    pub bindings: Bindings,
    window: Vec<Element>,
}

impl Site {
    /// A one-element site at `start`, for the operations that act on a
    /// single element.
    pub fn at(c: &Circuit, start: usize) -> Result<Self, RewriteError> {
        Self::capture(c, start, 1, Vec::new())
    }

    fn capture(c: &Circuit, start: usize, len: usize, bindings: Bindings) -> Result<Self, RewriteError> {
        let end = start + len;
        if end > c.len() || len == 0 {
            return Err(RewriteError::OutOfBounds { start, end });
        }
        Ok(Self { start, bindings, window: c.elements()[start..end].to_vec() })
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// The matched elements as they were when the site was found.
    pub fn window(&self) -> &[Element] {
        &self.window
    }

    /// Same position and the same matched elements.
    pub fn same_match(&self, other: &Site) -> bool {
        self.start == other.start && self.window == other.window
    }

    fn check_fresh(&self, c: &Circuit) -> Result<(), RewriteError> {
        let end = self.start + self.window.len();
        if end > c.len() || c.elements()[self.start..end] != self.window[..] {
            return Err(RewriteError::StaleSite(self.start));
        }
        Ok(())
    }
}

type MatchFn = fn(&[Element]) -> Option<Bindings>;
type ProduceFn = fn(&[Element]) -> Result<Vec<Element>, RewriteError>;

enum RuleKind {
    Forward { matcher: MatchFn, producer: ProduceFn },
    /// Matches a window equal to the forward rule's output on `undo(window)`.
    Inverse { undo: fn(&[Element]) -> Vec<Element>, matcher: MatchFn, producer: ProduceFn },
}

pub struct RewriteRule {
    pub id: &'static str,
    /// Number of consecutive elements matched.
    pub arity: usize,
    pub summary: &'static str,
    kind: RuleKind,
}

impl std::fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteRule").field("id", &self.id).field("arity", &self.arity).finish()
    }
}

impl RewriteRule {
    const fn forward(id: &'static str, arity: usize, summary: &'static str, matcher: MatchFn, producer: ProduceFn) -> Self {
        Self { id, arity, summary, kind: RuleKind::Forward { matcher, producer } }
    }

    const fn inverse(
        id: &'static str,
        arity: usize,
        summary: &'static str,
        undo: fn(&[Element]) -> Vec<Element>,
        matcher: MatchFn,
        producer: ProduceFn,
    ) -> Self {
        Self { id, arity, summary, kind: RuleKind::Inverse { undo, matcher, producer } }
    }

    /// Bindings if the rule matches `window` exactly.
    pub fn matches(&self, window: &[Element]) -> Option<Bindings> {
        if window.len() != self.arity {
            return None;
        }
        match &self.kind {
            RuleKind::Forward { matcher, .. } => matcher(window),
            RuleKind::Inverse { undo, matcher, producer } => {
                let lhs = undo(window);
                if lhs.is_empty() {
                    return None;
                }
                let b = matcher(&lhs)?;
                let redo = producer(&lhs).ok()?;
                same_sequence(&redo, window).then_some(b)
            }
        }
    }

    /// Replacement for a matching window.
    pub fn produce(&self, window: &[Element]) -> Result<Vec<Element>, RewriteError> {
        match &self.kind {
            RuleKind::Forward { producer, .. } => producer(window),
            RuleKind::Inverse { undo, .. } => Ok(undo(window)),
        }
    }
}

/// Every registered rule.
pub fn rules() -> &'static [RewriteRule] {
    rules::RULES
}

pub fn find_rule(id: &str) -> Result<&'static RewriteRule, RewriteError> {
    rules().iter().find(|r| r.id == id).ok_or_else(|| RewriteError::UnknownRule(id.to_string()))
}

/// All sites where `rule_id` matches, in ascending order.
pub fn find_sites(c: &Circuit, rule_id: &str) -> Result<Vec<Site>, RewriteError> {
    let rule = find_rule(rule_id)?;
    let els = c.elements();
    let mut out = Vec::new();
    if els.len() < rule.arity {
        return Ok(out);
    }
    for start in 0..=els.len() - rule.arity {
        if let Some(b) = rule.matches(&els[start..start + rule.arity]) {
            out.push(Site::capture(c, start, rule.arity, b)?);
        }
    }
    Ok(out)
}

/// Replace the window at `site` with the rule's output.
pub fn apply(c: &Circuit, rule_id: &str, site: &Site) -> Result<Circuit, RewriteError> {
    let rule = find_rule(rule_id)?;
    site.check_fresh(c)?;
    if site.len() != rule.arity || rule.matches(site.window()).is_none() {
        return Err(RewriteError::NoMatch { rule: rule_id.to_string(), at: site.start });
    }
    let out = rule.produce(site.window())?;
    Ok(c.splice(site.start, site.len(), out)?)
}

/// Apply `rule_id` at the first site starting at or after `index`.
pub fn apply_at(c: &Circuit, rule_id: &str, index: usize) -> Result<Circuit, RewriteError> {
    let site = find_sites(c, rule_id)?
        .into_iter()
        .find(|s| s.start == index)
        .ok_or_else(|| RewriteError::NoMatch { rule: rule_id.to_string(), at: index })?;
    apply(c, rule_id, &site)
}

// ---- shared matching helpers ----

pub(crate) fn single_target(e: &Element) -> Option<(&Gate, &str, &[Control])> {
    match e {
        Element::Gate { gate, targets, controls } if targets.len() == 1 && gate.arity() == 1 => {
            Some((gate, targets[0].as_str(), controls.as_slice()))
        }
        _ => None,
    }
}

/// `(control, target)` of a CNOT with a single filled dot.
pub(crate) fn as_cnot(e: &Element) -> Option<(&str, &str)> {
    match single_target(e)? {
        (Gate::X, t, [Control::N(c)]) => Some((c.as_str(), t)),
        _ => None,
    }
}

fn control_wires(controls: &[Control]) -> Vec<String> {
    controls.iter().flat_map(|c| c.wires()).map(String::from).collect()
}

/// Product projector of `controls`, embedded on `union`.
pub(crate) fn projector_on(controls: &[Control], union: &[String]) -> Result<ComplexMatrix, RewriteError> {
    let (m, wires) = crate::circuit::control_projector(controls);
    Ok(embed(&m, &WireList::new(wires)?, &WireList::new(union.to_vec())?)?)
}

/// Union of control wires of two control lists, first-seen order.
pub(crate) fn union_wires(a: &[Control], b: &[Control]) -> Vec<String> {
    let mut out = control_wires(a);
    for w in control_wires(b) {
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// `π1 π2` over the union of their wires, if the two commute.
pub(crate) fn commuting_product(p: &[Control], q: &[Control]) -> Option<(ComplexMatrix, Vec<String>)> {
    let union = union_wires(p, q);
    let (pm, qm) = (projector_on(p, &union).ok()?, projector_on(q, &union).ok()?);
    let pq = &pm * &qm;
    let qp = &qm * &pm;
    (pq.max_abs_diff(&qp).ok()? <= MATCH_TOL).then_some((pq, union))
}

fn same_element(a: &Element, b: &Element) -> bool {
    match (a, b) {
        (Element::Scalar(x), Element::Scalar(y)) => (x - y).norm() <= MATCH_TOL,
        (Element::Gate { .. }, Element::Gate { .. }) | (Element::Projector { .. }, Element::Projector { .. }) => {
            if a.wires() != b.wires() {
                return false;
            }
            match (a.operator(), b.operator()) {
                (Some((ma, _)), Some((mb, _))) => ma.max_abs_diff(&mb).is_ok_and(|d| d <= MATCH_TOL),
                _ => false,
            }
        }
        _ => a == b,
    }
}

pub(crate) fn same_sequence(a: &[Element], b: &[Element]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| same_element(x, y))
}

#[cfg(test)]
mod tests;

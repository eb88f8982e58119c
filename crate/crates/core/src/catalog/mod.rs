//! Circuit identities as checkable data.
//!
//! Each [`Identity`] builds a left and right [`Side`] from a parameter point.
//! A side is a sum of circuits (most have a single term). Verification
//! evaluates both sides at every point of the parameter space and compares
//! the resulting maps entrywise, scalars included.
//!
//! Both sides must leave the same wires open. Their declarations may differ
//! by ancilla wires that are fully closed by a ket and a bra on one side.

mod cnot;
mod kit;
mod params;
mod pauli;
mod protocols;
mod states;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::circuit::{evaluate, Circuit, CircuitError, EvalResult};

pub use params::{
    angle, bit, choice, commuting, fnv1a, projector, sample_points, state, unitary, ParamKind, ParamSpec, ParamValue,
    Params, ANGLE_GRID, DEFAULT_SEED, RANDOM_DRAWS,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown identity `{0}`")]
    UnknownId(String),
    #[error("parameter `{name}` of `{id}`: {msg}")]
    BadParam { id: String, name: String, msg: String },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// A sum of circuits over the same open wires.
#[derive(Clone, Debug, PartialEq)]
pub struct Side {
    pub terms: Vec<Circuit>,
}

impl Side {
    pub fn sum(terms: Vec<Circuit>) -> Self {
        Self { terms }
    }

    pub fn evaluate(&self) -> Result<EvalResult, CircuitError> {
        let mut terms = self.terms.iter();
        let first = terms.next().ok_or_else(|| CircuitError::Arity("empty sum".into()))?;
        let mut acc = evaluate(first)?;
        for t in terms {
            let r = evaluate(t)?;
            if r.in_wires != acc.in_wires || r.out_wires != acc.out_wires {
                return Err(CircuitError::WireMismatch);
            }
            acc.matrix = acc.matrix.try_add(&r.matrix)?;
        }
        Ok(acc)
    }
}

impl From<Circuit> for Side {
    fn from(c: Circuit) -> Self {
        Self { terms: vec![c] }
    }
}

type Builder = fn(&Params) -> Result<(Side, Side), CircuitError>;

/// A parameterized equality between two circuit expressions.
pub struct Identity {
    pub id: &'static str,
    /// Short description of the equation this entry encodes.
    pub citation: &'static str,
    pub params: &'static [ParamSpec],
    build: Builder,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("params", &self.params).finish()
    }
}

impl Identity {
    pub(crate) const fn new(
        id: &'static str,
        citation: &'static str,
        params: &'static [ParamSpec],
        build: Builder,
    ) -> Self {
        Self { id, citation, params, build }
    }

    /// Every point checked by [`verify`].
    pub fn points(&self, seed: u64) -> Vec<Params> {
        sample_points(self.params, seed, self.id)
    }

    fn check_params(&self, p: &Params) -> Result<(), CatalogError> {
        let bad = |name: &str, msg: String| CatalogError::BadParam { id: self.id.into(), name: name.into(), msg };
        for spec in self.params {
            match p.get(spec.name) {
                None => return Err(bad(spec.name, "missing".into())),
                Some(v) if !v.fits(spec.kind) => return Err(bad(spec.name, format!("expected {}", spec.kind.describe()))),
                Some(_) => {}
            }
        }
        if let Some((name, _)) = p.iter().find(|(n, _)| !self.params.iter().any(|s| s.name == *n)) {
            return Err(bad(name, "not a parameter of this identity".into()));
        }
        Ok(())
    }

    /// Build both sides at `p`.
    pub fn instantiate(&self, p: &Params) -> Result<(Side, Side), CatalogError> {
        self.check_params(p)?;
        Ok((self.build)(p)?)
    }

    /// Largest entrywise deviation between the sides at `p`.
    pub fn deviation(&self, p: &Params) -> Result<f64, CatalogError> {
        let (l, r) = self.instantiate(p)?;
        Ok(l.evaluate()?.max_deviation(&r.evaluate()?)?)
    }
}

/// Outcome of checking one identity at every point of its space.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub citation: String,
    pub points: usize,
    pub max_deviation: f64,
    pub pass: bool,
    pub elapsed: Duration,
    /// First build or evaluation failure, if any.
    pub error: Option<String>,
}

/// All identities, grouped by topic, in a fixed order.
pub fn list_identities() -> Vec<&'static Identity> {
    pauli::ENTRIES
        .iter()
        .chain(cnot::ENTRIES)
        .chain(states::ENTRIES)
        .chain(protocols::ENTRIES)
        .collect()
}

pub fn find(id: &str) -> Result<&'static Identity, CatalogError> {
    list_identities().into_iter().find(|i| i.id == id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

pub fn instantiate(id: &str, p: &Params) -> Result<(Side, Side), CatalogError> {
    find(id)?.instantiate(p)
}

fn run(identity: &Identity, tol: f64, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let points = identity.points(seed);
    let mut max_dev: f64 = 0.0;
    let mut error = None;
    for p in &points {
        match identity.deviation(p) {
            Ok(d) if d.is_nan() => max_dev = f64::INFINITY,
            Ok(d) => max_dev = max_dev.max(d),
            Err(e) => {
                max_dev = f64::INFINITY;
                error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    VerificationReport {
        id: identity.id.to_string(),
        citation: identity.citation.to_string(),
        points: points.len(),
        max_deviation: max_dev,
        pass: error.is_none() && max_dev <= tol,
        elapsed: start.elapsed(),
        error,
    }
}

pub fn verify_with_seed(id: &str, tol: f64, seed: u64) -> Result<VerificationReport, CatalogError> {
    Ok(run(find(id)?, tol, seed))
}

/// Check one identity with the default seed.
pub fn verify(id: &str, tol: f64) -> Result<VerificationReport, CatalogError> {
    verify_with_seed(id, tol, DEFAULT_SEED)
}

/// Check every identity in parallel; reports come back in catalog order.
pub fn verify_all(tol: f64, seed: u64) -> Vec<VerificationReport> {
    list_identities().par_iter().map(|i| run(i, tol, seed)).collect()
}

#[cfg(test)]
mod tests;

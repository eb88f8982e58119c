//! Parameter spaces and the seeded sampler that enumerates them.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::random;
use crate::tensor::{c, Complex, ComplexMatrix};

/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Fixed angles checked for every angle parameter.
pub const ANGLE_GRID: [f64; 5] = [0.0, PI / 7.0, PI / 3.0, 1.0, 2.5];

/// Seeded random draws per continuous slot.
pub const RANDOM_DRAWS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Bit,
    /// Integer in `0..n`.
    Choice(u8),
    Angle,
    /// Unitary on the given number of wires.
    Unitary(usize),
    /// One-wire state vector.
    State,
    /// Projector on the given number of wires.
    Projector(usize),
    /// Two commuting projectors on the given number of wires.
    CommutingProjectors(usize),
}

impl ParamKind {
    pub fn is_discrete(self) -> bool {
        matches!(self, ParamKind::Bit | ParamKind::Choice(_))
    }

    fn range(self) -> u8 {
        match self {
            ParamKind::Bit => 2,
            ParamKind::Choice(n) => n,
            _ => 1,
        }
    }

    fn has_degenerate_cases(self) -> bool {
        !self.is_discrete() && self != ParamKind::Angle
    }

    pub fn describe(self) -> String {
        match self {
            ParamKind::Bit => "bit".into(),
            ParamKind::Choice(n) => format!("0..{n}"),
            ParamKind::Angle => "angle".into(),
            ParamKind::Unitary(k) => format!("unitary on {k} wire(s)"),
            ParamKind::State => "one-wire state".into(),
            ParamKind::Projector(k) => format!("projector on {k} wire(s)"),
            ParamKind::CommutingProjectors(k) => format!("commuting projector pair on {k} wire(s)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

pub const fn bit(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Bit }
}

pub const fn choice(name: &'static str, n: u8) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Choice(n) }
}

pub const fn angle(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Angle }
}

pub const fn unitary(name: &'static str, wires: usize) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Unitary(wires) }
}

pub const fn state(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::State }
}

pub const fn projector(name: &'static str, wires: usize) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Projector(wires) }
}

pub const fn commuting(name: &'static str, wires: usize) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::CommutingProjectors(wires) }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Int(u8),
    Angle(f64),
    Matrix(ComplexMatrix),
    State(Vec<Complex>),
    Pair(ComplexMatrix, ComplexMatrix),
}

impl ParamValue {
    /// Whether this value belongs to `kind`.
    pub fn fits(&self, kind: ParamKind) -> bool {
        let is_proj = |m: &ComplexMatrix, k: usize| m.qubits() == Some(k) && m.is_idempotent(1e-9);
        match (self, kind) {
            (ParamValue::Int(v), ParamKind::Bit | ParamKind::Choice(_)) => *v < kind.range(),
            (ParamValue::Angle(t), ParamKind::Angle) => t.is_finite(),
            (ParamValue::Matrix(m), ParamKind::Unitary(k)) => m.qubits() == Some(k) && m.is_unitary(1e-9),
            (ParamValue::Matrix(m), ParamKind::Projector(k)) => is_proj(m, k),
            (ParamValue::State(v), ParamKind::State) => v.len() == 2,
            (ParamValue::Pair(p, q), ParamKind::CommutingProjectors(k)) => {
                is_proj(p, k) && is_proj(q, k) && (&(p * q) - &(q * p)).max_abs() <= 1e-9
            }
            _ => false,
        }
    }
}

/// One point of a parameter space, by name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    values: Vec<(String, ParamValue)>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: ParamValue) {
        match self.values.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.values.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ParamValue)> {
        self.values.iter().map(|(n, v)| (n.as_str(), v))
    }

    fn expect(&self, name: &str) -> &ParamValue {
        self.get(name).unwrap_or_else(|| panic!("parameter `{name}` missing"))
    }

    /// Discrete parameter value.
    pub fn int(&self, name: &str) -> u8 {
        match self.expect(name) {
            ParamValue::Int(v) => *v,
            other => panic!("parameter `{name}` is not discrete: {other:?}"),
        }
    }

    pub fn angle(&self, name: &str) -> f64 {
        match self.expect(name) {
            ParamValue::Angle(t) => *t,
            other => panic!("parameter `{name}` is not an angle: {other:?}"),
        }
    }

    pub fn matrix(&self, name: &str) -> &ComplexMatrix {
        match self.expect(name) {
            ParamValue::Matrix(m) => m,
            other => panic!("parameter `{name}` is not a matrix: {other:?}"),
        }
    }

    pub fn state(&self, name: &str) -> &[Complex] {
        match self.expect(name) {
            ParamValue::State(v) => v,
            other => panic!("parameter `{name}` is not a state: {other:?}"),
        }
    }

    pub fn pair(&self, name: &str) -> (&ComplexMatrix, &ComplexMatrix) {
        match self.expect(name) {
            ParamValue::Pair(p, q) => (p, q),
            other => panic!("parameter `{name}` is not a projector pair: {other:?}"),
        }
    }
}

/// 64-bit FNV-1a, used to give every identity its own random stream.
pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn random_commuting(rng: &mut impl Rng, k: usize) -> ParamValue {
    let dim = 1 << k;
    let w = random::unitary(rng, k);
    let mut diag = || -> Vec<Complex> { (0..dim).map(|_| c(rng.random_range(0..2) as f64, 0.0)).collect() };
    let (d1, d2) = (diag(), diag());
    let conj = |d: &[Complex]| &(&w * &ComplexMatrix::diag(d)) * &w.dagger();
    ParamValue::Pair(conj(&d1), conj(&d2))
}

/// Value of a continuous slot at sample index `s`.
///
/// Indices `0..5` take the angle grid, `5..15` are random draws, and for
/// matrix and state slots `15` and `16` are degenerate cases.
fn continuous_value(kind: ParamKind, s: usize, rng: &mut impl Rng) -> ParamValue {
    let grid = ANGLE_GRID.len();
    let degenerate = grid + RANDOM_DRAWS;
    match kind {
        ParamKind::Angle => {
            let draw = rng.random_range(-PI..PI);
            ParamValue::Angle(if s < grid { ANGLE_GRID[s] } else { draw })
        }
        ParamKind::Unitary(k) => {
            let phi = rng.random_range(-PI..PI);
            let dim = 1 << k;
            match s.checked_sub(degenerate) {
                Some(0) => ParamValue::Matrix(ComplexMatrix::identity(dim)),
                Some(_) => ParamValue::Matrix(ComplexMatrix::identity(dim).scale(Complex::from_polar(1.0, phi))),
                None if k == 1 => ParamValue::Matrix(random::unitary2(rng)),
                None => ParamValue::Matrix(random::unitary(rng, k)),
            }
        }
        ParamKind::State => match s.checked_sub(degenerate) {
            Some(0) => ParamValue::State(vec![c(1.0, 0.0), c(0.0, 0.0)]),
            _ => {
                let v = random::vector(rng, 2);
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                ParamValue::State(v.iter().map(|z| z / norm).collect())
            }
        },
        ParamKind::Projector(k) => match s.checked_sub(degenerate) {
            Some(0) => ParamValue::Matrix(ComplexMatrix::zeros(1 << k, 1 << k)),
            Some(_) => ParamValue::Matrix(ComplexMatrix::identity(1 << k)),
            None => ParamValue::Matrix(random::projector(rng, k)),
        },
        ParamKind::CommutingProjectors(k) => {
            let id = ComplexMatrix::identity(1 << k);
            match s.checked_sub(degenerate) {
                Some(0) => ParamValue::Pair(id.clone(), id),
                Some(_) => ParamValue::Pair(ComplexMatrix::zeros(1 << k, 1 << k), id),
                None => random_commuting(rng, k),
            }
        }
        ParamKind::Bit | ParamKind::Choice(_) => unreachable!("discrete"),
    }
}

/// Every checked point of `specs`: the cartesian product of the discrete
/// parameters with the continuous sample schedule. Deterministic in `seed`
/// and `stream`.
pub fn sample_points(specs: &[ParamSpec], seed: u64, stream: &str) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(stream));
    let continuous: Vec<&ParamSpec> = specs.iter().filter(|p| !p.kind.is_discrete()).collect();
    let n_cont = if continuous.is_empty() {
        1
    } else if continuous.iter().any(|p| p.kind.has_degenerate_cases()) {
        ANGLE_GRID.len() + RANDOM_DRAWS + 2
    } else {
        ANGLE_GRID.len() + RANDOM_DRAWS
    };
    let cont_samples: Vec<Vec<(&str, ParamValue)>> = (0..n_cont)
        .map(|s| continuous.iter().map(|p| (p.name, continuous_value(p.kind, s, &mut rng))).collect())
        .collect();

    let mut discrete = vec![Params::new()];
    for p in specs.iter().filter(|p| p.kind.is_discrete()) {
        discrete = discrete
            .into_iter()
            .flat_map(|base| (0..p.kind.range()).map(move |v| base.clone().with(p.name, ParamValue::Int(v))))
            .collect();
    }

    let mut out = Vec::with_capacity(discrete.len() * n_cont);
    for d in &discrete {
        for sample in &cont_samples {
            let mut point = d.clone();
            for (name, v) in sample {
                point.set(name, v.clone());
            }
            out.push(point);
        }
    }
    out
}

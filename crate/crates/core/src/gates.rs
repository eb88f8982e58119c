//! Named matrices, states and projectors, plus 2×2 unitary analysis.

use std::f64::consts::PI;

use thiserror::Error;

use crate::tensor::{c, kron, Complex, ComplexMatrix, MAX_WIRES};

/// Tolerance used when deciding whether an input is unitary.
const UNITARY_TOL: f64 = 1e-9;

/// Eigenvalue gap below which a 2×2 unitary counts as a multiple of identity.
const DEGENERATE_GAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GateError {
    #[error("expected a 2x2 unitary, got a {0}x{1} matrix")]
    NotTwoByTwo(usize, usize),
    #[error("matrix is not unitary (deviation {0:.2e})")]
    NotUnitary(f64),
    #[error("Hadamard size {0} is outside 1..={MAX_WIRES}")]
    HadamardSize(usize),
}

/// Pauli axis label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "X",
            Axis::Y => "Y",
            Axis::Z => "Z",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "X" | "x" => Some(Axis::X),
            "Y" | "y" => Some(Axis::Y),
            "Z" | "z" => Some(Axis::Z),
            _ => None,
        }
    }
}

pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn pauli(w: Axis) -> ComplexMatrix {
    let z = c(0.0, 0.0);
    let data = match w {
        Axis::X => vec![z, c(1.0, 0.0), c(1.0, 0.0), z],
        Axis::Y => vec![z, c(0.0, -1.0), c(0.0, 1.0), z],
        Axis::Z => vec![c(1.0, 0.0), z, z, c(-1.0, 0.0)],
    };
    ComplexMatrix::new(2, 2, data).expect("pauli literal")
}

/// The `nb`-fold tensor power of the one-bit Hadamard, built from the entry
/// formula `(-1)^{b·b'} / sqrt(2^nb)`.
pub fn hadamard(nb: usize) -> Result<ComplexMatrix, GateError> {
    if nb == 0 || nb > MAX_WIRES {
        return Err(GateError::HadamardSize(nb));
    }
    let dim = 1usize << nb;
    let norm = (dim as f64).sqrt().recip();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            let sign = if (r & col).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            m.set(r, col, c(sign * norm, 0.0));
        }
    }
    Ok(m)
}

/// One-bit Hadamard.
pub fn h() -> ComplexMatrix {
    hadamard(1).expect("nb = 1")
}

/// `n_w = (1 - σ_w)/2`, or `n̄_w = (1 + σ_w)/2` when `bar` is set.
pub fn number_op(w: Axis, bar: bool) -> ComplexMatrix {
    let sign = if bar { 1.0 } else { -1.0 };
    (&identity2() + &pauli(w).scale_real(sign)).scale_real(0.5)
}

/// `n = |1><1|`.
pub fn n() -> ComplexMatrix {
    number_op(Axis::Z, false)
}

/// `n̄ = |0><0|`.
pub fn nbar() -> ComplexMatrix {
    number_op(Axis::Z, true)
}

/// `Λ^{x,z} = σ_X^x σ_Z^z`.
///
/// One listing of the four values prints `Λ^{00} = σ_Z`; that line is a typo
/// for `Λ^{01} = σ_Z`, which is what this function returns.
pub fn lambda_xz(x: u8, z: u8) -> ComplexMatrix {
    let mut m = identity2();
    if x & 1 == 1 {
        m = &m * &pauli(Axis::X);
    }
    if z & 1 == 1 {
        m = &m * &pauli(Axis::Z);
    }
    m
}

/// The phase gate `i^n = diag(1, i)`.
pub fn phase_i_n() -> ComplexMatrix {
    ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)])
}

/// `exp(i θ⃗·σ⃗) = cos θ + i sin θ (θ̂·σ⃗)` with `θ = |θ⃗|`.
pub fn rotation(theta: [f64; 3]) -> ComplexMatrix {
    let norm = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
    if norm == 0.0 {
        return identity2();
    }
    let (s, cs) = norm.sin_cos();
    let mut gen = ComplexMatrix::zeros(2, 2);
    for (axis, t) in Axis::ALL.iter().zip(theta) {
        gen = &gen + &pauli(*axis).scale_real(t / norm);
    }
    &identity2().scale_real(cs) + &gen.scale(c(0.0, s))
}

/// `exp(i θ σ_Z) = diag(e^{iθ}, e^{-iθ})`.
pub fn rz(theta: f64) -> ComplexMatrix {
    ComplexMatrix::diag(&[Complex::from_polar(1.0, theta), Complex::from_polar(1.0, -theta)])
}

/// Eigenvector of `σ_w` with eigenvalue `sign` (±1), as a 2×1 column.
pub fn eigenstate(w: Axis, positive: bool) -> ComplexMatrix {
    let s = 0.5f64.sqrt();
    let v = match (w, positive) {
        (Axis::X, true) => [c(s, 0.0), c(s, 0.0)],
        (Axis::X, false) => [c(s, 0.0), c(-s, 0.0)],
        (Axis::Y, true) => [c(s, 0.0), c(0.0, s)],
        (Axis::Y, false) => [c(s, 0.0), c(0.0, -s)],
        (Axis::Z, true) => [c(1.0, 0.0), c(0.0, 0.0)],
        (Axis::Z, false) => [c(0.0, 0.0), c(1.0, 0.0)],
    };
    ComplexMatrix::column(&v)
}

/// Computational basis ket `|bit>`.
pub fn basis_ket(bit: u8) -> ComplexMatrix {
    eigenstate(Axis::Z, bit & 1 == 0)
}

/// Basis ket of several bits, first bit most significant.
pub fn basis_ket_bits(bits: &[u8]) -> ComplexMatrix {
    let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | (b & 1) as usize);
    let mut v = vec![c(0.0, 0.0); 1 << bits.len()];
    v[idx] = c(1.0, 0.0);
    ComplexMatrix::column(&v)
}

/// `Π^j_{w1,w2} = (1 + (-1)^j σ_{w1}⊗σ_{w2}) / 2`.
pub fn pi_pair(w1: Axis, w2: Axis, j: u8) -> ComplexMatrix {
    let sign = if j & 1 == 0 { 1.0 } else { -1.0 };
    (&ComplexMatrix::identity(4) + &kron(&pauli(w1), &pauli(w2)).scale_real(sign)).scale_real(0.5)
}

/// `|j><j|` on one wire.
pub fn proj_z(j: u8) -> ComplexMatrix {
    if j & 1 == 0 {
        nbar()
    } else {
        n()
    }
}

/// Controlled-NOT on `(control, target)`.
pub fn cnot() -> ComplexMatrix {
    &kron(&nbar(), &identity2()) + &kron(&n(), &pauli(Axis::X))
}

/// The two-qubit exchanger (swap).
pub fn exchanger() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        m.set(r, col, c(1.0, 0.0));
    }
    m
}

/// `|B_{xz}> = (|0,x> + (-1)^z |1,x̄>)/√2`, equal to `Λ^{xz}` on the second
/// qubit of `|B_{00}>`.
pub fn bell_sub(x: u8, z: u8) -> ComplexMatrix {
    let (x, z) = ((x & 1) as usize, z & 1);
    let s = 0.5f64.sqrt();
    let mut v = vec![c(0.0, 0.0); 4];
    v[x] = c(s, 0.0);
    v[2 | (1 - x)] = c(if z == 0 { s } else { -s }, 0.0);
    ComplexMatrix::column(&v)
}

/// `|B^{xz}> = (|x,0> + (-1)^z |x̄,1>)/√2`, equal to `Λ^{xz}` on the first
/// qubit of `|B_{00}>`.
pub fn bell_super(x: u8, z: u8) -> ComplexMatrix {
    let (x, z) = ((x & 1) as usize, z & 1);
    let s = 0.5f64.sqrt();
    let mut v = vec![c(0.0, 0.0); 4];
    v[x << 1] = c(s, 0.0);
    v[((1 - x) << 1) | 1] = c(if z == 0 { s } else { -s }, 0.0);
    ComplexMatrix::column(&v)
}

/// `(|000> + |111>)/√2`.
pub fn ghz() -> ComplexMatrix {
    let s = 0.5f64.sqrt();
    let mut v = vec![c(0.0, 0.0); 8];
    v[0] = c(s, 0.0);
    v[7] = c(s, 0.0);
    ComplexMatrix::column(&v)
}

/// Eigen-decomposition `u = V diag(e^{iθ1}, e^{iθ2}) V† = e^{iθ̄} V e^{iΔσ_Z} V†`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryDiagonalization {
    pub v: ComplexMatrix,
    pub theta1: f64,
    pub theta2: f64,
    /// `(θ1 - θ2)/2`
    pub delta: f64,
    /// `(θ1 + θ2)/2`
    pub theta_bar: f64,
}

impl UnitaryDiagonalization {
    /// `V diag(e^{iθ1}, e^{iθ2}) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::diag(&[Complex::from_polar(1.0, self.theta1), Complex::from_polar(1.0, self.theta2)]);
        &(&self.v * &d) * &self.v.dagger()
    }
}

fn check_unitary_2x2(u: &ComplexMatrix) -> Result<(), GateError> {
    if u.dims() != (2, 2) {
        return Err(GateError::NotTwoByTwo(u.rows(), u.cols()));
    }
    let dev = (&u.dagger() * u).max_abs_diff(&identity2()).expect("2x2");
    if dev > UNITARY_TOL {
        return Err(GateError::NotUnitary(dev));
    }
    Ok(())
}

/// Phase in `(-π, π]`.
pub fn principal_arg(z: Complex) -> f64 {
    let a = z.arg();
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Rotate a unit column so its first entry is real and nonnegative, or, if
/// that entry vanishes, the second entry is real and positive.
fn normalize_phase(v: [Complex; 2]) -> [Complex; 2] {
    let pivot = if v[0].norm() > 1e-12 { v[0] } else { v[1] };
    let ph = pivot.conj() / pivot.norm();
    [v[0] * ph, v[1] * ph]
}

/// Diagonalize a 2×2 unitary. Eigenphases lie in `(-π, π]` and are sorted
/// `θ1 ≤ θ2`; a degenerate spectrum gives `V = I`.
pub fn diagonalize_2x2_unitary(u: &ComplexMatrix) -> Result<UnitaryDiagonalization, GateError> {
    check_unitary_2x2(u)?;
    let (a, b, cc, d) = (u.get(0, 0), u.get(0, 1), u.get(1, 0), u.get(1, 1));
    let tr = a + d;
    let det = a * d - b * cc;
    let disc = (tr * tr - det * 4.0).sqrt();
    let l1 = (tr + disc) * 0.5;
    let l2 = (tr - disc) * 0.5;
    if (l1 - l2).norm() < DEGENERATE_GAP {
        let phi = principal_arg(tr);
        return Ok(UnitaryDiagonalization { v: identity2(), theta1: phi, theta2: phi, delta: 0.0, theta_bar: phi });
    }
    let (mut t1, mut t2) = (principal_arg(l1), principal_arg(l2));
    let mut lam = l1;
    if t1 > t2 {
        std::mem::swap(&mut t1, &mut t2);
        lam = l2;
    }
    // null vector of (u - λ) for the eigenvalue with phase t1
    let cand1 = [b, lam - a];
    let cand2 = [lam - d, cc];
    let norm = |v: &[Complex; 2]| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    let raw = if norm(&cand1) >= norm(&cand2) { cand1 } else { cand2 };
    let nr = norm(&raw);
    let v1 = normalize_phase([raw[0] / nr, raw[1] / nr]);
    let v2 = normalize_phase([-v1[1].conj(), v1[0].conj()]);
    let v = ComplexMatrix::new(2, 2, vec![v1[0], v2[0], v1[1], v2[1]]).expect("finite");
    Ok(UnitaryDiagonalization { v, theta1: t1, theta2: t2, delta: (t1 - t2) / 2.0, theta_bar: (t1 + t2) / 2.0 })
}

/// Principal square root: eigenphases in `(-π, π]` halved.
pub fn sqrt_unitary(u: &ComplexMatrix) -> Result<ComplexMatrix, GateError> {
    let dg = diagonalize_2x2_unitary(u)?;
    let half = UnitaryDiagonalization { theta1: dg.theta1 / 2.0, theta2: dg.theta2 / 2.0, ..dg };
    Ok(half.reconstruct())
}

/// Unitary of the form `rotation(θ⃗)·diag(e^{iφ}, 1)`.
pub fn parameterized_unitary(theta: [f64; 3], phi: f64) -> ComplexMatrix {
    &rotation(theta) * &ComplexMatrix::diag(&[Complex::from_polar(1.0, phi), c(1.0, 0.0)])
}

//! Dense complex linear algebra over small qubit registers.
//!
//! Basis convention: for a register listed as `[w0, w1, ..., w(n-1)]`, wire
//! `w0` is the most significant bit of the basis index, so `|01>` on `[a, b]`
//! is the column `(0, 1, 0, 0)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

/// Scalar type for every matrix entry.
pub type Complex = Complex64;

/// Largest register the dense kernels accept.
pub const MAX_WIRES: usize = 12;

/// Default comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("non-finite entry at index {0}")]
    NonFinite(usize),
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("wire `{0}` is not in the register")]
    UnknownWire(String),
    #[error("duplicate wire `{0}`")]
    DuplicateWire(String),
    #[error("register of {0} wires exceeds the limit of {MAX_WIRES}")]
    TooManyWires(usize),
}

/// Build a complex scalar, rejecting NaN and infinities.
pub fn complex(re: f64, im: f64) -> Result<Complex, TensorError> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex::new(re, im))
    } else {
        Err(TensorError::NonFinite(0))
    }
}

/// Shorthand for in-crate literals known to be finite.
#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Dense row-major complex matrix with explicit dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self, TensorError> {
        if rows == 0 || cols == 0 {
            return Err(TensorError::Empty);
        }
        if data.len() != rows * cols {
            return Err(TensorError::Dimension(format!(
                "{} entries supplied for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(i) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(TensorError::NonFinite(i));
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self, TensorError> {
        let r = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != cols) {
            return Err(TensorError::Dimension("ragged rows".into()));
        }
        Self::new(r, cols, rows.iter().flatten().copied().collect())
    }

    /// Build from real row-major entries; panics on a length mismatch.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Self {
        Self::new(rows, cols, data.iter().map(|&x| c(x, 0.0)).collect())
            .expect("static real matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        Self { rows, cols, data: vec![Complex::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn diag(entries: &[Complex]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m.data[i * n + i] = z;
        }
        m
    }

    /// Column vector (ket).
    pub fn column(entries: &[Complex]) -> Self {
        Self { rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    /// Row vector (bra).
    pub fn row(entries: &[Complex]) -> Self {
        Self { rows: 1, cols: entries.len(), data: entries.to_vec() }
    }

    pub fn scalar(z: Complex) -> Self {
        Self { rows: 1, cols: 1, data: vec![z] }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex) {
        self.data[i * self.cols + j] = z;
    }

    pub fn try_matmul(&self, rhs: &Self) -> Result<Self, TensorError> {
        if self.cols != rhs.rows {
            return Err(TensorError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, z: Complex) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * z).collect() }
    }

    pub fn scale_real(&self, x: f64) -> Self {
        self.scale(c(x, 0.0))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex, Complex) -> Complex) -> Result<Self, TensorError> {
        if self.dims() != rhs.dims() {
            return Err(TensorError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, TensorError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, TensorError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        kron(self, rhs)
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64, TensorError> {
        if self.dims() != rhs.dims() {
            return Err(TensorError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.data.iter().zip(&rhs.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && (&self.dagger() * self)
                .max_abs_diff(&Self::identity(self.rows))
                .is_ok_and(|d| d <= tol)
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.is_square() && (self * self).max_abs_diff(self).is_ok_and(|d| d <= tol)
    }

    /// Dimension as a power of two, if it is one.
    pub fn qubits(&self) -> Option<usize> {
        (self.is_square() && self.rows.is_power_of_two()).then(|| self.rows.trailing_zeros() as usize)
    }

    /// Matrix exponential by scaled Taylor series; intended for small matrices.
    pub fn exp(&self) -> Self {
        assert!(self.is_square(), "exp of a non-square matrix");
        let norm = self.data.iter().map(|z| z.norm()).sum::<f64>().max(1e-300);
        let squarings = norm.log2().ceil().max(0.0) as u32 + 1;
        let a = self.scale_real(0.5f64.powi(squarings as i32));
        let mut term = Self::identity(self.rows);
        let mut sum = term.clone();
        for k in 1..30 {
            term = (&term * &a).scale_real(1.0 / k as f64);
            sum = &sum + &term;
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| fmt_complex(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn fmt_complex(z: Complex) -> String {
    let clean = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.6}")
    } else if re == 0.0 {
        format!("{im:.6}i")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_matmul(rhs).expect("matrix product dimensions")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum dimensions")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference dimensions")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

/// Kronecker product: `(a⊗b)[i1*rb + i2, j1*cb + j2] = a[i1, j1] * b[i2, j2]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca) = a.dims();
    let (rb, cb) = b.dims();
    let cols = ca * cb;
    let mut data = vec![Complex::new(0.0, 0.0); ra * rb * cols];
    for i1 in 0..ra {
        for j1 in 0..ca {
            let x = a.get(i1, j1);
            for i2 in 0..rb {
                let row = (i1 * rb + i2) * cols + j1 * cb;
                for j2 in 0..cb {
                    data[row + j2] = x * b.get(i2, j2);
                }
            }
        }
    }
    ComplexMatrix { rows: ra * rb, cols, data }
}

/// Ordered list of distinct wire labels. The first wire is the most
/// significant basis bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WireList(Vec<String>);

impl WireList {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, TensorError> {
        let mut out: Vec<String> = Vec::new();
        for l in labels {
            let l = l.into();
            if out.contains(&l) {
                return Err(TensorError::DuplicateWire(l));
            }
            out.push(l);
        }
        Ok(Self(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|w| w == label)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.position(label).is_some()
    }

    /// Positions of `labels` within this list.
    pub fn positions<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>, TensorError> {
        labels
            .iter()
            .map(|l| self.position(l.as_ref()).ok_or_else(|| TensorError::UnknownWire(l.as_ref().to_string())))
            .collect()
    }
}

impl fmt::Display for WireList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

/// Apply `op` to the listed target positions of an `n_wires` register and
/// identity elsewhere, left-multiplying every column of `m` in place.
///
/// `positions[0]` addresses the most significant bit of `op`'s index.
pub fn apply_on_positions(
    op: &ComplexMatrix,
    positions: &[usize],
    n_wires: usize,
    m: &mut ComplexMatrix,
) -> Result<(), TensorError> {
    let k = positions.len();
    if op.rows() != 1 << k || op.cols() != 1 << k {
        return Err(TensorError::Dimension(format!(
            "operator is {}x{} but acts on {} wires",
            op.rows(),
            op.cols(),
            k
        )));
    }
    if m.rows() != 1 << n_wires {
        return Err(TensorError::Dimension(format!(
            "matrix has {} rows, register needs {}",
            m.rows(),
            1usize << n_wires
        )));
    }
    for (i, &p) in positions.iter().enumerate() {
        if p >= n_wires || positions[..i].contains(&p) {
            return Err(TensorError::Dimension(format!("bad target position {p}")));
        }
    }
    // bit masks in the full index, op index bit (k-1-i) <-> position i
    let masks: Vec<usize> = positions.iter().map(|&p| 1usize << (n_wires - 1 - p)).collect();
    let target_mask: usize = masks.iter().sum();
    let sub = 1usize << k;
    let offsets: Vec<usize> = (0..sub)
        .map(|s| {
            masks
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> (k - 1 - i) & 1 == 1)
                .map(|(_, &mk)| mk)
                .sum()
        })
        .collect();
    let cols = m.cols();
    let mut gathered = vec![Complex::new(0.0, 0.0); sub];
    for base in 0..(1usize << n_wires) {
        if base & target_mask != 0 {
            continue;
        }
        for col in 0..cols {
            for (s, &off) in offsets.iter().enumerate() {
                gathered[s] = m.data[(base | off) * cols + col];
            }
            for (r, &off) in offsets.iter().enumerate() {
                let row = &op.data[r * sub..(r + 1) * sub];
                let acc = row.iter().zip(&gathered).fold(Complex::new(0.0, 0.0), |acc, (&a, &b)| acc + a * b);
                m.data[(base | off) * cols + col] = acc;
            }
        }
    }
    Ok(())
}

/// The `2^n x 2^n` matrix acting as `op` on `targets` (in the order given)
/// and as identity on the rest of `all_wires`.
pub fn embed(op: &ComplexMatrix, targets: &WireList, all_wires: &WireList) -> Result<ComplexMatrix, TensorError> {
    let n = all_wires.len();
    if n > MAX_WIRES {
        return Err(TensorError::TooManyWires(n));
    }
    let k = targets.len();
    if op.rows() != 1 << k || op.cols() != 1 << k {
        return Err(TensorError::Dimension(format!(
            "operator is {}x{} but {} targets were given",
            op.rows(),
            op.cols(),
            k
        )));
    }
    let pos = all_wires.positions(targets.as_slice())?;
    let dim = 1usize << n;
    let bit = |idx: usize, p: usize| (idx >> (n - 1 - p)) & 1;
    let target_mask: usize = pos.iter().map(|&p| 1usize << (n - 1 - p)).sum();
    let sub_index = |idx: usize| pos.iter().fold(0usize, |acc, &p| (acc << 1) | bit(idx, p));
    let mut out = ComplexMatrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            if r & !target_mask != col & !target_mask {
                continue;
            }
            out.data[r * dim + col] = op.get(sub_index(r), sub_index(col));
        }
    }
    Ok(out)
}

/// True iff every entry of `a - b` has modulus at most `tol`.
pub fn approx_equal(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<bool, TensorError> {
    Ok(a.max_abs_diff(b)? <= tol)
}

/// Find a unit-modulus `λ` with `a ≈ λ·b`, reading `λ` off the
/// largest-magnitude entry of `b`.
pub fn equal_up_to_phase(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<Option<Complex>, TensorError> {
    if a.dims() != b.dims() {
        return Err(TensorError::Dimension(format!(
            "{}x{} vs {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let (idx, pivot) = b
        .data
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .map(|(i, z)| (i, *z))
        .expect("non-empty matrix");
    if pivot.norm() == 0.0 {
        return Ok((a.max_abs() <= tol).then(|| c(1.0, 0.0)));
    }
    let ratio = a.data[idx] / pivot;
    if ratio.norm() == 0.0 {
        return Ok(None);
    }
    let lambda = ratio / ratio.norm();
    Ok(approx_equal(a, &b.scale(lambda), tol)?.then_some(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut impl Rng, r: usize, cc: usize) -> ComplexMatrix {
        let data = (0..r * cc).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        ComplexMatrix::new(r, cc, data).unwrap()
    }

    fn sz() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0])
    }

    fn sx() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
    }

    fn cnot() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        for (r, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            m.set(r, col, c(1.0, 0.0));
        }
        m
    }

    fn wires(ls: &[&str]) -> WireList {
        WireList::new(ls.iter().copied()).unwrap()
    }

    #[test]
    fn kron_of_sigma_z_pair_is_diagonal() {
        let zz = kron(&sz(), &sz());
        let expect = ComplexMatrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(zz, expect);
        assert_eq!(kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_matches_index_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 2, 2);
            let b = random_matrix(&mut rng, 2, 2);
            let k = kron(&a, &b);
            for i1 in 0..2 {
                for j1 in 0..2 {
                    for i2 in 0..2 {
                        for j2 in 0..2 {
                            assert_eq!(k.get(i1 * 2 + i2, j1 * 2 + j2), a.get(i1, j1) * b.get(i2, j2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn basis_ket_01_is_second_unit_vector() {
        let k0 = ComplexMatrix::column(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let k1 = ComplexMatrix::column(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let v = kron(&k0, &k1);
        assert_eq!(v.data(), &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn embed_adjacent_is_kron_with_identity() {
        let e = embed(&sx(), &wires(&["b"]), &wires(&["a", "b"])).unwrap();
        assert_eq!(e, kron(&ComplexMatrix::identity(2), &sx()));
    }

    #[test]
    fn embed_cnot_basis_action() {
        let e = embed(&cnot(), &wires(&["a", "b"]), &wires(&["a", "b", "c"])).unwrap();
        for a in 0..2usize {
            for b in 0..2usize {
                for cc in 0..2usize {
                    let col = a << 2 | b << 1 | cc;
                    let row = a << 2 | (a ^ b) << 1 | cc;
                    for r in 0..8 {
                        let want = if r == row { 1.0 } else { 0.0 };
                        assert_eq!(e.get(r, col), c(want, 0.0));
                    }
                }
            }
        }
    }

    /// Permutation-conjugation oracle: move targets to the front, act with
    /// `op ⊗ I`, move them back.
    fn permutation_oracle(op: &ComplexMatrix, targets: &[usize], n: usize) -> ComplexMatrix {
        let mut order: Vec<usize> = targets.to_vec();
        order.extend((0..n).filter(|p| !targets.contains(p)));
        let dim = 1 << n;
        // P maps |x> (original order) to |x'> with wire order `order`
        let mut p = ComplexMatrix::zeros(dim, dim);
        for x in 0..dim {
            let y = order.iter().fold(0usize, |acc, &w| (acc << 1) | (x >> (n - 1 - w) & 1));
            p.set(y, x, c(1.0, 0.0));
        }
        let k = targets.len();
        let full = kron(op, &ComplexMatrix::identity(1 << (n - k)));
        &(&p.transpose() * &full) * &p
    }

    #[test]
    fn embed_reordered_matches_permutation_oracle() {
        let all = wires(&["a", "b", "c"]);
        let e = embed(&cnot(), &wires(&["c", "a"]), &all).unwrap();
        assert_eq!(e, permutation_oracle(&cnot(), &[2, 0], 3));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let all4 = wires(&["a", "b", "c", "d"]);
        for tg in [["d", "b"], ["b", "a"], ["c", "d"]] {
            let op = random_matrix(&mut rng, 4, 4);
            let pos = all4.positions(&tg).unwrap();
            let e = embed(&op, &wires(&tg), &all4).unwrap();
            assert!(approx_equal(&e, &permutation_oracle(&op, &pos, 4), 1e-14).unwrap());
        }
    }

    #[test]
    fn apply_kernel_agrees_with_embed() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let all = wires(&["a", "b", "c", "d"]);
        for tg in [vec!["c"], vec!["d", "a"], vec!["b", "d", "a"]] {
            let op = random_matrix(&mut rng, 1 << tg.len(), 1 << tg.len());
            let m0 = random_matrix(&mut rng, 16, 3);
            let mut m = m0.clone();
            let pos = all.positions(&tg).unwrap();
            apply_on_positions(&op, &pos, 4, &mut m).unwrap();
            let e = embed(&op, &wires(&tg), &all).unwrap();
            assert!(approx_equal(&m, &(&e * &m0), 1e-13).unwrap());
        }
    }

    #[test]
    fn embed_errors() {
        let all = wires(&["a", "b"]);
        assert!(matches!(embed(&cnot(), &wires(&["a"]), &all), Err(TensorError::Dimension(_))));
        assert!(matches!(embed(&sx(), &wires(&["z"]), &all), Err(TensorError::UnknownWire(_))));
        assert!(WireList::new(["a", "a"]).is_err());
    }

    #[test]
    fn approx_equal_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 3, 2);
        assert!(approx_equal(&a, &a, 0.0).unwrap());
        let s = 0.5f64.sqrt();
        let h = ComplexMatrix::from_real(2, 2, &[s, s, s, -s]);
        assert!(approx_equal(&(&h * &h), &ComplexMatrix::identity(2), 1e-10).unwrap());
        let mut b = a.clone();
        b.set(0, 0, b.get(0, 0) + c(1e-6, 0.0));
        assert!(!approx_equal(&a, &b, 1e-10).unwrap());
        assert!(approx_equal(&a, &ComplexMatrix::zeros(2, 2), 1.0).is_err());
    }

    #[test]
    fn phase_detection() {
        let s = 0.5f64.sqrt();
        let h = ComplexMatrix::from_real(2, 2, &[s, s, s, -s]);
        let ph = Complex::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let lam = equal_up_to_phase(&h.scale(ph), &h, 1e-12).unwrap().unwrap();
        assert!((lam - ph).norm() < 1e-12);
        assert_eq!(equal_up_to_phase(&sx(), &sz(), 1e-10).unwrap(), None);
        let sy = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let lam11 = &sx() * &sz();
        let lam = equal_up_to_phase(&lam11, &sy, 1e-12).unwrap().unwrap();
        assert!((lam - c(0.0, -1.0)).norm() < 1e-12);
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert!(complex(f64::NAN, 0.0).is_err());
        assert!(ComplexMatrix::new(1, 1, vec![c(f64::INFINITY, 0.0)]).is_err());
        assert!(ComplexMatrix::new(2, 1, vec![c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn exp_of_diagonal() {
        let m = ComplexMatrix::diag(&[c(0.0, 0.3), c(0.0, -0.3)]);
        let e = m.exp();
        let want = ComplexMatrix::diag(&[Complex::from_polar(1.0, 0.3), Complex::from_polar(1.0, -0.3)]);
        assert!(approx_equal(&e, &want, 1e-13).unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_int_matrix(r: usize, cc: usize) -> impl Strategy<Value = ComplexMatrix> {
            proptest::collection::vec((-3i32..=3, -3i32..=3), r * cc).prop_map(move |v| {
                ComplexMatrix::new(r, cc, v.into_iter().map(|(a, b)| c(a as f64, b as f64)).collect()).unwrap()
            })
        }

        proptest! {
            #[test]
            fn kron_is_associative(a in small_int_matrix(2, 2), b in small_int_matrix(2, 1), cm in small_int_matrix(1, 2)) {
                prop_assert_eq!(kron(&kron(&a, &b), &cm), kron(&a, &kron(&b, &cm)));
            }

            #[test]
            fn embeds_on_distinct_wires_commute(a in small_int_matrix(2, 2), b in small_int_matrix(2, 2), w in 0usize..3, v in 0usize..3) {
                prop_assume!(w != v);
                let all = wires(&["a", "b", "c"]);
                let names = ["a", "b", "c"];
                let ea = embed(&a, &wires(&[names[w]]), &all).unwrap();
                let eb = embed(&b, &wires(&[names[v]]), &all).unwrap();
                prop_assert_eq!(&ea * &eb, &eb * &ea);
            }

            #[test]
            fn embed_on_full_register_in_order_is_identity_map(a in small_int_matrix(8, 8)) {
                let all = wires(&["a", "b", "c"]);
                prop_assert_eq!(embed(&a, &all, &all).unwrap(), a);
            }

            #[test]
            fn approx_equal_symmetric(a in small_int_matrix(2, 3), b in small_int_matrix(2, 3), tol in 0.0f64..5.0) {
                prop_assert_eq!(approx_equal(&a, &b, tol).unwrap(), approx_equal(&b, &a, tol).unwrap());
            }
        }
    }
}

//! Fixed-size complex linear algebra for one and two qubits.
//!
//! Two-qubit indices pair as `2 * a + b` with qubit A the slow index and
//! qubit B the fast one, so `|0>⊗|1>` is the basis vector `e_1` (second
//! entry). Every other module relies on this ordering.

use nalgebra::{Matrix2, Matrix4, Vector2, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat2 = Matrix2<Complex64>;
pub type CVec2 = Vector2<Complex64>;
pub type CMat4 = Matrix4<Complex64>;
pub type CVec4 = Vector4<Complex64>;

/// Entrywise tolerance on `U†U - I` used by unitarity checks.
pub const UNITARY_TOL: f64 = 1e-10;
/// Tolerance on `Σ|ψ_i|² - 1` for normalized states.
pub const NORM_TOL: f64 = 1e-12;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Tensor product with the `(A slow, B fast)` index pairing.
pub trait Kron<Rhs = Self> {
    type Output;
    fn kron(&self, rhs: &Rhs) -> Self::Output;
}

impl Kron for CMat2 {
    type Output = CMat4;

    fn kron(&self, rhs: &CMat2) -> CMat4 {
        CMat4::from_fn(|r, col| self[(r / 2, col / 2)] * rhs[(r % 2, col % 2)])
    }
}

impl Kron for CVec2 {
    type Output = CVec4;

    fn kron(&self, rhs: &CVec2) -> CVec4 {
        CVec4::from_fn(|r, _| self[r / 2] * rhs[r % 2])
    }
}

pub fn kron<T: Kron>(a: &T, b: &T) -> T::Output {
    a.kron(b)
}

pub fn identity2() -> CMat2 {
    CMat2::identity()
}

/// Pauli matrices σ1, σ2, σ3.
pub fn pauli(index: usize) -> CMat2 {
    match index {
        1 => CMat2::new(ZERO, ONE, ONE, ZERO),
        2 => CMat2::new(ZERO, -I, I, ZERO),
        3 => CMat2::new(ONE, ZERO, ZERO, -ONE),
        _ => identity2(),
    }
}

pub fn swap() -> CMat4 {
    let mut s = CMat4::zeros();
    s[(0, 0)] = ONE;
    s[(1, 2)] = ONE;
    s[(2, 1)] = ONE;
    s[(3, 3)] = ONE;
    s
}

pub fn cnot() -> CMat4 {
    let mut m = CMat4::zeros();
    m[(0, 0)] = ONE;
    m[(1, 1)] = ONE;
    m[(2, 3)] = ONE;
    m[(3, 2)] = ONE;
    m
}

/// Largest entry of `|U†U - I|`.
pub fn unitarity_defect(u: &CMat4) -> f64 {
    let g = u.adjoint() * u - CMat4::identity();
    g.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn ensure_unitary(u: &CMat4, tol: f64) -> Result<()> {
    let d = unitarity_defect(u);
    if d.is_finite() && d <= tol {
        Ok(())
    } else {
        Err(Error::NotUnitary(d))
    }
}

pub fn norm_sqr(v: &CVec4) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

pub fn ensure_normalized(v: &CVec4) -> Result<()> {
    let n = norm_sqr(v);
    if (n - 1.0).abs() <= NORM_TOL {
        Ok(())
    } else {
        Err(Error::NotNormalized(n))
    }
}

/// `<a|b>`
pub fn inner(a: &CVec4, b: &CVec4) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Eigenvalues `(λ1, λ2)`, `λ1 ≥ λ2`, of the reduced density matrix of
/// qubit A.
pub fn schmidt_spectrum(state: &CVec4) -> Result<(f64, f64)> {
    ensure_normalized(state)?;
    let n = norm_sqr(state);
    // ρ_A has trace n and determinant |ad - bc|².
    let det = (state[0] * state[3] - state[1] * state[2]).norm_sqr();
    let disc = (n * n - 4.0 * det).max(0.0).sqrt();
    let hi = 0.5 * (n + disc);
    let lo = (0.5 * (n - disc)).max(0.0);
    Ok((hi, lo))
}

/// Concurrence `2|ad - bc|` of a normalized pure state given in the
/// computational basis.
pub fn concurrence(state: &CVec4) -> Result<f64> {
    ensure_normalized(state)?;
    Ok(concurrence_unchecked(state))
}

pub(crate) fn concurrence_unchecked(state: &CVec4) -> f64 {
    2.0 * (state[0] * state[3] - state[1] * state[2]).norm()
}

/// Linear entropy `1 - Tr ρ_A²` of a pure two-qubit state; maximum 1/2.
pub fn state_linear_entropy(state: &CVec4) -> f64 {
    // Tr ρ_A² = 1 - 2 det ρ_A for a unit-trace 2×2 density matrix.
    let n = norm_sqr(state);
    let det = (state[0] * state[3] - state[1] * state[2]).norm_sqr();
    1.0 - (n * n - 2.0 * det) / (n * n)
}

/// Realignment `R[(a_out,a_in),(b_out,b_in)] = U[(a_out,b_out),(a_in,b_in)]`.
pub fn reshuffle(u: &CMat4) -> CMat4 {
    CMat4::from_fn(|r, col| {
        let (a_out, a_in) = (r / 2, r % 2);
        let (b_out, b_in) = (col / 2, col % 2);
        u[(2 * a_out + b_out, 2 * a_in + b_in)]
    })
}

/// Operator-Schmidt coefficients of a two-qubit unitary, sorted
/// descending. Their squares sum to 4.
pub fn operator_schmidt_values(u: &CMat4) -> Result<[f64; 4]> {
    ensure_unitary(u, UNITARY_TOL)?;
    let sv = reshuffle(u).singular_values();
    let mut out = [sv[0], sv[1], sv[2], sv[3]];
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// Operator linear entropy `1 - Σ λ_i²` with `λ_i = s_i² / 4`.
pub fn operator_linear_entropy(u: &CMat4) -> Result<f64> {
    let s = operator_schmidt_values(u)?;
    Ok(1.0 - s.iter().map(|x| (x * x / 4.0).powi(2)).sum::<f64>())
}

/// Fourth root of the determinant, principal branch.
pub fn det_fourth_root(u: &CMat4) -> Complex64 {
    u.determinant().powf(0.25)
}

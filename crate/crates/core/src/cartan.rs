//! Cartan coordinates, the magic basis and the nonlocal part `U_d`.
//!
//! `U_d(c) = exp(i/2 · Σ c_j σ_j⊗σ_j)` is diagonal in the magic basis with
//! eigenvalues `exp(i h_j / 2)`, where the `h_j` are the linear forms
//! returned by [`eigenphases`]. Local equivalence classes are labelled by
//! canonical coordinates in the Weyl chamber
//! `π/2 ≥ c1 ≥ c2 ≥ |c3| ≥ 0`, with `(π/2, c2, c3)` and `(π/2, c2, -c3)`
//! naming the same class.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, TAU};

use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::numerics::{c, det_fourth_root, ensure_unitary, CMat4, CVec4, UNITARY_TOL, ZERO};

/// Tolerance for the `c1 = π/2` identification in [`canonicalize`].
pub const EDGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CartanCoord {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl CartanCoord {
    pub const fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    /// Coordinates given as multiples of π.
    pub fn from_pi_units(c1: f64, c2: f64, c3: f64) -> Self {
        Self::new(c1 * PI, c2 * PI, c3 * PI)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Membership in the closed chamber `π/2 ≥ c1 ≥ c2 ≥ |c3| ≥ 0`.
    pub fn in_chamber(&self, tol: f64) -> bool {
        self.c1 <= FRAC_PI_2 + tol && self.c1 >= self.c2 - tol && self.c2 >= self.c3.abs() - tol && self.c2 >= -tol
    }

    pub fn max_abs_diff(&self, other: &CartanCoord) -> f64 {
        (self.c1 - other.c1)
            .abs()
            .max((self.c2 - other.c2).abs())
            .max((self.c3 - other.c3).abs())
    }

    pub fn eigenphases(&self) -> EigenPhases {
        eigenphases(self)
    }

    pub fn squared_eigenvalues(&self) -> SquaredEigenvalues {
        squared_eigenvalues(self)
    }
}

/// Eigenvalues `h_j` of `H = Σ c_j σ_j⊗σ_j` on the magic basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenPhases(pub [f64; 4]);

impl EigenPhases {
    pub fn get(&self, j: usize) -> f64 {
        self.0[j]
    }
}

/// Points `z_j = exp(i h_j)` on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquaredEigenvalues(pub [Complex64; 4]);

impl SquaredEigenvalues {
    pub fn get(&self, j: usize) -> Complex64 {
        self.0[j]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.0.iter()
    }
}

pub fn eigenphases(c: &CartanCoord) -> EigenPhases {
    let h1 = c.c1 - c.c2 + c.c3;
    let h2 = c.c1 + c.c2 - c.c3;
    let h3 = -c.c1 - c.c2 - c.c3;
    // closes the sum exactly; equals -c1 + c2 + c3 up to rounding
    let h4 = -(h1 + h2 + h3);
    EigenPhases([h1, h2, h3, h4])
}

pub fn squared_eigenvalues(c: &CartanCoord) -> SquaredEigenvalues {
    let h = eigenphases(c);
    SquaredEigenvalues(h.0.map(|x| Complex64::from_polar(1.0, x)))
}

/// Columns are `|Ψ1>..|Ψ4>` in the computational basis:
/// `Ψ1 = (|00>+|11>)/√2`, `Ψ2 = i(|01>+|10>)/√2`,
/// `Ψ3 = (|01>-|10>)/√2`, `Ψ4 = i(|00>-|11>)/√2`.
pub fn magic_basis() -> CMat4 {
    let r = c(FRAC_1_SQRT_2, 0.0);
    let i = c(0.0, FRAC_1_SQRT_2);
    #[rustfmt::skip]
    let m = CMat4::new(
        r,    ZERO, ZERO, i,
        ZERO, i,    r,    ZERO,
        ZERO, i,    -r,   ZERO,
        r,    ZERO, ZERO, -i,
    );
    m
}

pub fn magic_to_computational(alpha: &[Complex64; 4]) -> CVec4 {
    magic_basis() * CVec4::from_column_slice(alpha)
}

pub fn computational_to_magic(state: &CVec4) -> [Complex64; 4] {
    let v = magic_basis().adjoint() * state;
    [v[0], v[1], v[2], v[3]]
}

/// `U_d = Σ_j exp(i h_j/2) |Ψ_j><Ψ_j|`.
pub fn build_nonlocal(c: &CartanCoord) -> CMat4 {
    let b = magic_basis();
    let h = eigenphases(c);
    let d = CMat4::from_diagonal(&CVec4::from_fn(|j, _| Complex64::from_polar(1.0, 0.5 * h.0[j])));
    b * d * b.adjoint()
}

/// Canonical coordinates of the local-equivalence class of `u`.
///
/// The determinant is scaled to one, the gate is moved into the magic
/// basis and the spectrum of `m = U_Bᵀ U_B` gives the squared eigenvalues
/// up to an overall sign and ordering, both of which are absorbed by
/// [`canonicalize`].
pub fn extract_coords(u: &CMat4) -> Result<CartanCoord> {
    ensure_unitary(u, UNITARY_TOL)?;
    let u = u / det_fourth_root(u);
    let b = magic_basis();
    let ub = b.adjoint() * u * b;
    let m = ub.transpose() * ub;

    let mut theta = symmetric_unitary_spectrum(&m).map(|z| z.arg());
    theta.sort_by(|a, b| b.total_cmp(a));
    // det m = 1, so the phases sum to a multiple of 2π
    let turns = (theta.iter().sum::<f64>() / TAU).round() as i64;
    if turns > 0 {
        for t in theta.iter_mut().take(turns as usize) {
            *t -= TAU;
        }
    } else if turns < 0 {
        for t in theta.iter_mut().rev().take((-turns) as usize) {
            *t += TAU;
        }
    }
    let [h1, h2, _, h4] = theta;
    Ok(canonicalize([0.5 * (h1 + h2), 0.5 * (h2 + h4), 0.5 * (h1 + h4)]))
}

/// Eigenvalues of a complex symmetric unitary matrix.
///
/// Its real and imaginary parts are commuting real symmetric matrices, so
/// an orthogonal eigenbasis of `Re m + r Im m` diagonalizes `m` for all
/// but finitely many `r`.
fn symmetric_unitary_spectrum(m: &CMat4) -> [Complex64; 4] {
    const MIXES: [f64; 5] = [
        0.618_033_988_749_895,
        1.324_717_957_244_746,
        -0.453_397_651_516_404,
        2.414_213_562_373_095,
        -1.839_286_755_214_161,
    ];
    let re = Matrix4::from_fn(|r, col| 0.5 * (m[(r, col)].re + m[(col, r)].re));
    let im = Matrix4::from_fn(|r, col| 0.5 * (m[(r, col)].im + m[(col, r)].im));

    let mut best: Option<(f64, [Complex64; 4])> = None;
    for r in MIXES {
        let eig = SymmetricEigen::new(re + im * r);
        let o = eig.eigenvectors.map(|x| c(x, 0.0));
        let d = o.transpose() * m * o;
        let off = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| d[(i, j)].norm())
            .fold(0.0, f64::max);
        let diag = [d[(0, 0)], d[(1, 1)], d[(2, 2)], d[(3, 3)]].map(|z| z / z.norm());
        if best.as_ref().is_none_or(|(e, _)| off < *e) {
            best = Some((off, diag));
        }
        if off < 1e-13 {
            break;
        }
    }
    best.expect("at least one mixing coefficient").1
}

/// Reduce an arbitrary triple to its canonical Weyl-chamber representative.
///
/// Uses the Weyl-group action on coordinates: shifts of any coordinate by
/// π, permutations, and sign flips of pairs. Idempotent.
pub fn canonicalize(raw: [f64; 3]) -> CartanCoord {
    let mut v = raw.map(reduce_half_open);
    v.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    let negatives = v.iter().filter(|x| x.is_sign_negative() && **x != 0.0).count();
    let mut v = v.map(f64::abs);
    if negatives % 2 == 1 {
        v[2] = -v[2];
    }
    if FRAC_PI_2 - v[0] < EDGE_TOL {
        v[2] = v[2].abs();
    }
    if v[2] == 0.0 {
        v[2] = 0.0;
    }
    CartanCoord::new(v[0], v[1], v[2])
}

/// Uniform grid `(i, j, k) · step` over the canonical chamber with
/// `j ≤ i`, `|k| ≤ j`. On the `c1 = π/2` face only `c3 ≥ 0` is kept, so
/// every class appears once.
pub fn chamber_grid(step: f64) -> Vec<CartanCoord> {
    let top = (FRAC_PI_2 / step + 1e-9).floor() as i64;
    let mut out = Vec::new();
    for i in 0..=top {
        let on_edge = (FRAC_PI_2 - i as f64 * step).abs() < EDGE_TOL;
        for j in 0..=i {
            let lo = if on_edge { 0 } else { -j };
            for k in lo..=j {
                out.push(CartanCoord::new(i as f64 * step, j as f64 * step, k as f64 * step));
            }
        }
    }
    out
}

/// `x` modulo π into `(-π/2, π/2]`.
fn reduce_half_open(x: f64) -> f64 {
    if x > -FRAC_PI_2 && x <= FRAC_PI_2 {
        return x;
    }
    let r = x.rem_euclid(PI);
    if r > FRAC_PI_2 {
        r - PI
    } else {
        r
    }
}

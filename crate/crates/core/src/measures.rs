//! Chords between squared eigenvalues and the nonlocal measures they carry.
//!
//! Direct chords join `z_j` and `z_k`; conjugate chords join `z_j` and
//! `conj(z_k)`. Entangling power is `(1/72) Σ |z_j - z_k|²`, gate
//! typicality `(1/12) Σ |z_j - conj z_k|²`, and the operator linear
//! entropy is `(1/64) Σ (|z_j - z_k|² + 2 |z_j - conj z_k|²)`. Every
//! measure is also computed from explicit matrices so the two can be
//! compared.

use num_complex::Complex64;
use serde::Serialize;

use crate::cartan::{squared_eigenvalues, CartanCoord, SquaredEigenvalues};
use crate::error::{Error, Result};
use crate::numerics::{ensure_unitary, operator_linear_entropy, swap, CMat4, UNITARY_TOL};
use crate::states::MagicState;

/// Agreement required between independent routes to the same measure.
pub const ROUTE_TOL: f64 = 1e-9;

/// Index pairs `(j, k)`, `j < k`, in the order used by [`ChordSet`].
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChordKind {
    Direct,
    Conjugate,
}

/// Squared chord lengths, one entry per pair in [`PAIRS`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordSet {
    pub direct: [f64; 6],
    pub conjugate: [f64; 6],
}

impl ChordSet {
    fn slot(j: usize, k: usize) -> Result<usize> {
        if j >= 4 {
            return Err(Error::IndexOutOfRange(j));
        }
        if k >= 4 {
            return Err(Error::IndexOutOfRange(k));
        }
        if j == k {
            return Err(Error::CoincidentIndices(j));
        }
        let key = (j.min(k), j.max(k));
        Ok(PAIRS.iter().position(|p| *p == key).expect("pair table is complete"))
    }

    /// `|z_j - z_k|²`; symmetric in `j` and `k`.
    pub fn direct_sq(&self, j: usize, k: usize) -> Result<f64> {
        Ok(self.direct[Self::slot(j, k)?])
    }

    /// `|z_j - conj z_k|²`; symmetric in `j` and `k` as well.
    pub fn conjugate_sq(&self, j: usize, k: usize) -> Result<f64> {
        Ok(self.conjugate[Self::slot(j, k)?])
    }

    pub fn direct_sum(&self) -> f64 {
        self.direct.iter().sum()
    }

    pub fn conjugate_sum(&self) -> f64 {
        self.conjugate.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NonlocalMeasures {
    pub e_p: f64,
    pub g_t: f64,
    #[serde(rename = "L")]
    pub l: f64,
}

pub fn chords(z: &SquaredEigenvalues) -> ChordSet {
    let direct = PAIRS.map(|(j, k)| (z.get(j) - z.get(k)).norm_sqr());
    let conjugate = PAIRS.map(|(j, k)| (z.get(j) - z.get(k).conj()).norm_sqr());
    ChordSet { direct, conjugate }
}

pub fn entangling_power(ch: &ChordSet) -> f64 {
    ch.direct_sum() / 72.0
}

/// Gate typicality from all six conjugate chords.
pub fn gate_typicality_chords(ch: &ChordSet) -> f64 {
    ch.conjugate_sum() / 12.0
}

/// Gate typicality from the three conjugate chords leaving `anchor`.
pub fn gate_typicality_anchor(ch: &ChordSet, anchor: usize) -> Result<f64> {
    let mut s = 0.0;
    for k in (0..4).filter(|&k| k != anchor) {
        s += ch.conjugate_sq(anchor, k)?;
    }
    Ok(s / 6.0)
}

/// `1 - (cos 2c1 + cos 2c2 + cos 2c3) / 3`.
pub fn gate_typicality_cartan(c: &CartanCoord) -> f64 {
    1.0 - ((2.0 * c.c1).cos() + (2.0 * c.c2).cos() + (2.0 * c.c3).cos()) / 3.0
}

/// Gate typicality, checked against the anchored and closed-form routes.
pub fn gate_typicality(ch: &ChordSet, c: &CartanCoord) -> Result<f64> {
    let g = gate_typicality_chords(ch);
    for anchor in 0..4 {
        agree(
            "gate typicality",
            "all conjugate chords",
            g,
            "anchored chords",
            gate_typicality_anchor(ch, anchor)?,
            ROUTE_TOL,
        )?;
    }
    agree(
        "gate typicality",
        "all conjugate chords",
        g,
        "cartan cosines",
        gate_typicality_cartan(c),
        ROUTE_TOL,
    )?;
    Ok(g)
}

/// `L = (3/8)(3 e_p + g_t)`.
pub fn linear_entropy_from_measures(e_p: f64, g_t: f64) -> f64 {
    0.375 * (3.0 * e_p + g_t)
}

/// `L = (1/64) Σ (direct + 2 conjugate)`.
pub fn linear_entropy_from_chords(ch: &ChordSet) -> f64 {
    (ch.direct_sum() + 2.0 * ch.conjugate_sum()) / 64.0
}

/// Linear entropy by both chord routes; they must agree to 1e-12.
pub fn linear_entropy(ch: &ChordSet, e_p: f64, g_t: f64) -> Result<f64> {
    let from_chords = linear_entropy_from_chords(ch);
    agree(
        "linear entropy",
        "measures",
        linear_entropy_from_measures(e_p, g_t),
        "chords",
        from_chords,
        1e-12,
    )?;
    Ok(from_chords)
}

/// The three measures of a class from its chord set.
pub fn measures_from_coords(c: &CartanCoord) -> Result<NonlocalMeasures> {
    let ch = chords(&squared_eigenvalues(c));
    let e_p = entangling_power(&ch);
    let g_t = gate_typicality(&ch, c)?;
    let l = linear_entropy(&ch, e_p, g_t)?;
    Ok(NonlocalMeasures { e_p, g_t, l })
}

/// Measures from the operator entanglement of `U`, `U·SWAP` and `SWAP`:
/// `e_p = (4/9)(L(U) + L(US) - L(S))`, `g_t = (4/3)(L(U) - L(US) + L(S))`.
pub fn measures_from_matrix(u: &CMat4) -> Result<NonlocalMeasures> {
    ensure_unitary(u, UNITARY_TOL)?;
    let s = swap();
    let l_u = operator_linear_entropy(u)?;
    let l_us = operator_linear_entropy(&(u * s))?;
    let l_s = operator_linear_entropy(&s)?;
    let mirror = l_us - l_s;
    Ok(NonlocalMeasures {
        e_p: 4.0 / 9.0 * (l_u + mirror),
        g_t: 4.0 / 3.0 * (l_u - mirror),
        l: l_u,
    })
}

/// Every route to every measure for one class.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureRoutes {
    pub e_p_chords: f64,
    pub e_p_matrix: f64,
    pub g_t_chords: f64,
    pub g_t_anchors: [f64; 4],
    pub g_t_cartan: f64,
    pub g_t_matrix: f64,
    pub l_measures: f64,
    pub l_chords: f64,
    pub l_operator_schmidt: f64,
}

impl MeasureRoutes {
    /// Evaluate all routes using `u` as the matrix representative of `c`.
    pub fn evaluate(c: &CartanCoord, u: &CMat4) -> Result<Self> {
        let ch = chords(&squared_eigenvalues(c));
        let e_p = entangling_power(&ch);
        let g_t = gate_typicality_chords(&ch);
        let m = measures_from_matrix(u)?;
        let mut anchors = [0.0; 4];
        for (j, a) in anchors.iter_mut().enumerate() {
            *a = gate_typicality_anchor(&ch, j)?;
        }
        Ok(Self {
            e_p_chords: e_p,
            e_p_matrix: m.e_p,
            g_t_chords: g_t,
            g_t_anchors: anchors,
            g_t_cartan: gate_typicality_cartan(c),
            g_t_matrix: m.g_t,
            l_measures: linear_entropy_from_measures(e_p, g_t),
            l_chords: linear_entropy_from_chords(&ch),
            l_operator_schmidt: m.l,
        })
    }

    /// Fails with the first pair of routes that differ by more than `tol`.
    pub fn check(&self, tol: f64) -> Result<()> {
        agree("entangling power", "chords", self.e_p_chords, "matrix", self.e_p_matrix, tol)?;
        for a in self.g_t_anchors {
            agree("gate typicality", "chords", self.g_t_chords, "anchored chords", a, tol)?;
        }
        agree("gate typicality", "chords", self.g_t_chords, "cartan cosines", self.g_t_cartan, tol)?;
        agree("gate typicality", "chords", self.g_t_chords, "matrix", self.g_t_matrix, tol)?;
        agree("linear entropy", "measures", self.l_measures, "chords", self.l_chords, tol)?;
        agree(
            "linear entropy",
            "chords",
            self.l_chords,
            "operator schmidt",
            self.l_operator_schmidt,
            tol,
        )?;
        Ok(())
    }

    pub fn measures(&self) -> NonlocalMeasures {
        NonlocalMeasures {
            e_p: self.e_p_chords,
            g_t: self.g_t_chords,
            l: self.l_chords,
        }
    }
}

fn agree(quantity: &'static str, left_route: &'static str, left: f64, right_route: &'static str, right: f64, tol: f64) -> Result<()> {
    if (left - right).abs() <= tol {
        Ok(())
    } else {
        Err(Error::RouteDisagreement {
            quantity,
            left_route,
            left,
            right_route,
            right,
        })
    }
}

/// Magic-basis amplitudes of `[U_d|Ψ_j> ± i U_d^(†)|Ψ_k>]/√2`.
///
/// The direct kind applies `U_d` to both vectors, the conjugate kind
/// applies `U_d†` to `|Ψ_k>`. The concurrence of the result is half the
/// matching chord length.
pub fn chord_state(c: &CartanCoord, j: usize, k: usize, kind: ChordKind, plus: bool) -> Result<MagicState> {
    ChordSet::slot(j, k)?;
    let h = c.eigenphases();
    let sign = if plus { 1.0 } else { -1.0 };
    let hk = match kind {
        ChordKind::Direct => h.get(k),
        ChordKind::Conjugate => -h.get(k),
    };
    let mut alpha = [Complex64::new(0.0, 0.0); 4];
    alpha[j] = Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, 0.5 * h.get(j));
    alpha[k] = Complex64::new(0.0, sign) * Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, 0.5 * hk);
    MagicState::new(alpha)
}

//! Product states that the nonlocal part of a perfect entangler maps to
//! maximally entangled states.
//!
//! In the magic basis the concurrence of `Σ α_j |Ψ_j>` is `|Σ α_j²|`, and
//! `U_d` multiplies `α_j` by `exp(i h_j/2)`. Writing the origin as a convex
//! combination `Σ w_j z_j = 0` therefore gives the product state
//! `α_j = √w_j · exp(-i(n_j π + h_j/2))`, whose image has real amplitudes
//! and concurrence one. The constructions below differ in which simplex
//! supplies the weights:
//!
//! * a chord through the origin: `(|Ψ_j> ± i|Ψ_k>)/√2`;
//! * a chamber face, where two `z_j` coincide and the hull is a triangle;
//!   the second state splits the doubled vertex with a mixing parameter `p`;
//! * a tetrahedral class, where the origin lies in two triangles of the
//!   quadrilateral and each triangle yields one state.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::cartan::{build_nonlocal, magic_to_computational, CartanCoord, EigenPhases, SquaredEigenvalues};
use crate::error::{Error, Result};
use crate::numerics::{concurrence_unchecked, inner, norm_sqr, CVec4, NORM_TOL};
use crate::regions::{classify, diametral_chords, faces, is_perfect_entangler, zero_simplices, Face};

/// Input states must have concurrence below this to count as product.
pub const PRODUCT_TOL: f64 = 1e-9;
/// Output states must have concurrence above `1 - MES_TOL`.
pub const MES_TOL: f64 = 1e-9;
/// Pairs with `|<φ1|φ2>|` below this are orthogonal.
pub const OVERLAP_TOL: f64 = 1e-9;
/// Slack before `|p| > 1` counts as infeasible.
const MIXING_SLACK: f64 = 1e-12;

/// A normalized state given by its magic-basis amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagicState {
    pub alpha: [Complex64; 4],
}

impl MagicState {
    pub fn new(alpha: [Complex64; 4]) -> Result<Self> {
        let n: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self { alpha })
    }

    pub fn to_computational(&self) -> CVec4 {
        magic_to_computational(&self.alpha)
    }

    /// `|Σ α_j²|`
    pub fn concurrence(&self) -> f64 {
        self.alpha.iter().map(|a| a * a).sum::<Complex64>().norm()
    }

    pub fn overlap(&self, other: &MagicState) -> f64 {
        self.alpha
            .iter()
            .zip(other.alpha.iter())
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .norm()
    }
}

/// Concurrence of a normalized state from its magic-basis amplitudes.
pub fn concurrence_magic(alpha: &[Complex64; 4]) -> Result<f64> {
    Ok(MagicState::new(*alpha)?.concurrence())
}

/// Convex weights expressing the origin in a simplex of the `z_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BarycentricWeights {
    /// `(eigenvalue index, weight)` in simplex vertex order.
    pub entries: Vec<(usize, f64)>,
}

impl BarycentricWeights {
    pub fn weight(&self, index: usize) -> f64 {
        self.entries.iter().find(|(j, _)| *j == index).map_or(0.0, |(_, w)| *w)
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|(_, w)| w).sum()
    }

    /// `|Σ w_j z_j|`
    pub fn residual(&self, z: &SquaredEigenvalues) -> f64 {
        self.entries.iter().map(|&(j, w)| z.get(j) * w).sum::<Complex64>().norm()
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Weights of the origin in triangle `tri` as ratios of signed areas.
///
/// The weight of a vertex is the area of the sub-triangle spanned by the
/// origin and the opposite edge over the area of the whole triangle.
pub fn barycentric_weights(z: &SquaredEigenvalues, tri: [usize; 3], tol: f64) -> Result<BarycentricWeights> {
    if let Some(&bad) = tri.iter().find(|&&j| j >= 4) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let [a, b, c] = tri.map(|j| z.get(j));
    let area2 = cross(b - a, c - a);
    if area2.abs() < tol {
        return Err(Error::DegenerateTriangle(tri));
    }
    let w = [cross(b, c) / area2, cross(c, a) / area2, cross(a, b) / area2];
    if w.iter().any(|x| *x < -tol) {
        return Err(Error::OutsideTriangle(tri));
    }
    Ok(BarycentricWeights {
        entries: tri.iter().copied().zip(w.map(|x| x.max(0.0))).collect(),
    })
}

/// Weights of the origin on the segment `z_j z_k`.
pub fn segment_weights(z: &SquaredEigenvalues, j: usize, k: usize, tol: f64) -> Result<BarycentricWeights> {
    let (a, b) = (z.get(j), z.get(k));
    let d = a - b;
    let len2 = d.norm_sqr();
    if len2 < tol * tol {
        return Err(Error::CoincidentIndices(j));
    }
    // 0 = t a + (1 - t) b
    let t = (-b * d.conj()).re / len2;
    let foot = a * t + b * (1.0 - t);
    if foot.norm() > tol || !(-tol..=1.0 + tol).contains(&t) {
        return Err(Error::NotDiametral(j, k));
    }
    Ok(BarycentricWeights {
        entries: vec![(j, t), (k, 1.0 - t)],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "lowercase")]
pub enum Construction {
    Diametral {
        pair: (usize, usize),
    },
    /// Triangle in role order `(a, b, s)`; `s` is the doubled vertex
    /// whose partner is `partner`.
    Face {
        face: Face,
        triangle: [usize; 3],
        partner: usize,
    },
    /// Triangles in role order `(shared, own, shared)`.
    Quadrilateral {
        first: [usize; 3],
        second: [usize; 3],
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductStatePair {
    pub construction: Construction,
    pub phi1: MagicState,
    pub phi2: MagicState,
    /// `(a, b, c, d, f, g)` for face pairs, `(a', b', c', d', f', g')` for
    /// quadrilateral pairs; absent for diametral pairs.
    pub phase_integers: Option<[i64; 6]>,
    /// Mixing parameter of the second face state.
    pub p: Option<f64>,
    pub orthogonal: bool,
    pub overlap: f64,
}

impl ProductStatePair {
    fn new(construction: Construction, phi1: MagicState, phi2: MagicState, phase_integers: Option<[i64; 6]>, p: Option<f64>) -> Self {
        let overlap = phi1.overlap(&phi2);
        Self {
            construction,
            phi1,
            phi2,
            phase_integers,
            p,
            orthogonal: overlap < OVERLAP_TOL,
            overlap,
        }
    }
}

/// `√w · exp(-i(nπ + h/2))`
fn simplex_amplitude(weight: f64, turns: i64, h: f64) -> Complex64 {
    Complex64::from_polar(weight.sqrt(), -(turns as f64 * PI + 0.5 * h))
}

fn simplex_state(h: &EigenPhases, w: &BarycentricWeights, turns: [i64; 3]) -> Result<MagicState> {
    let mut alpha = [Complex64::new(0.0, 0.0); 4];
    for (&(j, wj), n) in w.entries.iter().zip(turns) {
        alpha[j] = simplex_amplitude(wj, n, h.get(j));
    }
    MagicState::new(alpha)
}

/// `(|Ψ_j> ± i|Ψ_k>)/√2` for a chord `(j, k)` through the origin.
pub fn construct_pair_diametral(c: &CartanCoord, pair: (usize, usize), tol: f64) -> Result<ProductStatePair> {
    let (j, k) = pair;
    if j >= 4 || k >= 4 {
        return Err(Error::IndexOutOfRange(j.max(k)));
    }
    let key = (j.min(k), j.max(k));
    if !diametral_chords(c, tol).contains(&key) {
        return Err(Error::NotDiametral(j, k));
    }
    let state = |sign: f64| {
        let mut alpha = [Complex64::new(0.0, 0.0); 4];
        alpha[j] = Complex64::new(FRAC_1_SQRT_2, 0.0);
        alpha[k] = Complex64::new(0.0, sign * FRAC_1_SQRT_2);
        MagicState::new(alpha)
    };
    Ok(ProductStatePair::new(
        Construction::Diametral { pair },
        state(1.0)?,
        state(-1.0)?,
        None,
        None,
    ))
}

/// Face pair: one triangle state and a second one that splits the doubled
/// vertex as `p|Ψ_s> + √(1-p²)|Ψ_s'>`.
pub fn construct_pair_face(c: &CartanCoord, tol: f64) -> Result<ProductStatePair> {
    if !is_perfect_entangler(c, tol) {
        return Err(Error::NotPerfectEntangler);
    }
    let face = *faces(c, tol)
        .first()
        .ok_or_else(|| Error::RegionMismatch(format!("{c:?} is not on a chamber face")))?;
    let (s, partner) = face.coincident_pair();
    // (a, b) take the roles of Ψ3 and Ψ2 on the c1 = c2 face
    let (a, b) = match face {
        Face::C1EqC2 => (2, 1),
        Face::C2EqC3 => (2, 3),
        Face::C2EqMinusC3 => (0, 1),
    };
    let z = c.squared_eigenvalues();
    let h = c.eigenphases();
    let w = barycentric_weights(&z, [a, b, s], tol)?;
    let (wa, wb, ws) = (w.weight(a), w.weight(b), w.weight(s));

    // <Φ1|Φ2> = w_a - w_b + p w_s with (d-a), (g-c) even and (f-b) odd
    let ints: [i64; 6] = [0, 0, 0, 0, 1, 0];
    let p = if ws < tol { 0.0 } else { (wb - wa) / ws };
    if p.abs() > 1.0 + MIXING_SLACK {
        return Err(Error::InfeasibleMixing(p));
    }
    let p = p.clamp(-1.0, 1.0);

    let phi1 = simplex_state(&h, &w, [ints[0], ints[1], ints[2]])?;
    let mut alpha = [Complex64::new(0.0, 0.0); 4];
    alpha[a] = simplex_amplitude(wa, ints[3], h.get(a));
    alpha[b] = simplex_amplitude(wb, ints[4], h.get(b));
    let shared = simplex_amplitude(ws, ints[5], h.get(s));
    alpha[s] = shared * p;
    alpha[partner] = shared * (1.0 - p * p).max(0.0).sqrt();
    let phi2 = MagicState::new(alpha)?;

    Ok(ProductStatePair::new(
        Construction::Face {
            face,
            triangle: [a, b, s],
            partner,
        },
        phi1,
        phi2,
        Some(ints),
        Some(p),
    ))
}

/// Quadrilateral pair built from the two triangles that contain the
/// origin. Orthogonal exactly when the products of the weights at the
/// two shared vertices agree.
pub fn construct_pair_quadrilateral(c: &CartanCoord, tol: f64) -> Result<ProductStatePair> {
    let label = classify(c, tol);
    if !label.is_tetrahedral() {
        return Err(Error::RegionMismatch(format!(
            "quadrilateral construction needs T1/T2/T3, got {:?}",
            label.kind
        )));
    }
    let z = c.squared_eigenvalues();
    let report = zero_simplices(&z, tol);
    let [t1, t2] = report.containing_triangles[..] else {
        return Err(Error::RegionMismatch(format!(
            "expected two triangles containing the origin, found {:?}",
            report.containing_triangles
        )));
    };
    let shared: Vec<usize> = t1.iter().copied().filter(|j| t2.contains(j)).collect();
    let [p, q] = shared[..] else {
        return Err(Error::RegionMismatch(format!("triangles {t1:?} and {t2:?} do not share an edge")));
    };
    let (lead, tail) = if q == 2 { (q, p) } else { (p, q) };
    let own = |t: [usize; 3]| t.into_iter().find(|j| !shared.contains(j)).expect("one vertex is not shared");
    let (o1, o2) = (own(t1), own(t2));
    let first = [lead, o1.min(o2), tail];
    let second = [lead, o1.max(o2), tail];

    let h = c.eigenphases();
    let w1 = barycentric_weights(&z, first, tol)?;
    let w2 = barycentric_weights(&z, second, tol)?;
    // (d'-a') even, (g'-c') odd
    let ints: [i64; 6] = [0, 0, 0, 0, 0, 1];
    let phi1 = simplex_state(&h, &w1, [ints[0], ints[1], ints[2]])?;
    let phi2 = simplex_state(&h, &w2, [ints[3], ints[4], ints[5]])?;
    Ok(ProductStatePair::new(
        Construction::Quadrilateral { first, second },
        phi1,
        phi2,
        Some(ints),
        None,
    ))
}

/// Every pair the region of `c` supports: all diametral pairs if any,
/// otherwise the face pair, otherwise the quadrilateral pair.
pub fn construct_pairs(c: &CartanCoord, tol: f64) -> Result<Vec<ProductStatePair>> {
    if !is_perfect_entangler(c, tol) {
        return Err(Error::NotPerfectEntangler);
    }
    let planes = diametral_chords(c, tol);
    if !planes.is_empty() {
        return planes.into_iter().map(|pair| construct_pair_diametral(c, pair, tol)).collect();
    }
    if !faces(c, tol).is_empty() {
        return Ok(vec![construct_pair_face(c, tol)?]);
    }
    Ok(vec![construct_pair_quadrilateral(c, tol)?])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairVerification {
    pub input_concurrence: [f64; 2],
    pub output_concurrence: [f64; 2],
    pub norms: [f64; 2],
    pub overlap: f64,
    pub product_tol: f64,
    pub mes_tol: f64,
    pub overlap_tol: f64,
    pub inputs_product: bool,
    pub outputs_maximal: bool,
    pub orthonormal: bool,
    pub pass: bool,
}

/// Checks a pair in the computational basis against `build_nonlocal(c)`,
/// using `2|ad - bc|` for every concurrence.
pub fn verify_pair(c: &CartanCoord, pair: &ProductStatePair) -> PairVerification {
    let u = build_nonlocal(c);
    let inputs = [pair.phi1.to_computational(), pair.phi2.to_computational()];
    let outputs = inputs.map(|v| u * v);
    let conc = |v: &CVec4| concurrence_unchecked(v) / norm_sqr(v);
    let input_concurrence = [conc(&inputs[0]), conc(&inputs[1])];
    let output_concurrence = [conc(&outputs[0]), conc(&outputs[1])];
    let norms = inputs.map(|v| norm_sqr(&v).sqrt());
    let overlap = inner(&inputs[0], &inputs[1]).norm();

    let inputs_product = input_concurrence.iter().all(|x| *x < PRODUCT_TOL);
    let outputs_maximal = output_concurrence.iter().all(|x| *x > 1.0 - MES_TOL);
    let normalized = norms.iter().all(|n| (n - 1.0).abs() < 1e-12);
    let orthonormal = normalized && overlap < OVERLAP_TOL;
    let pass = normalized && inputs_product && outputs_maximal && (!pair.orthogonal || orthonormal);
    PairVerification {
        input_concurrence,
        output_concurrence,
        norms,
        overlap,
        product_tol: PRODUCT_TOL,
        mes_tol: MES_TOL,
        overlap_tol: OVERLAP_TOL,
        inputs_product,
        outputs_maximal,
        orthonormal,
        pass,
    }
}

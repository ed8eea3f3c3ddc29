//! Region taxonomy of the Weyl chamber.
//!
//! A class is a perfect entangler when the origin lies in the convex hull
//! of its squared eigenvalues. Within that region, chords through the
//! origin (`|h_j - h_k| = π`) pick out five planes, the three chamber
//! faces `c1 = c2`, `c2 = ±c3` collapse the hull to a triangle, and the
//! rest splits into three tetrahedra `T1`, `T2`, `T3` along the planes
//! `c1 ± c3 = π/2`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::cartan::{CartanCoord, SquaredEigenvalues};
use crate::error::{Error, Result};
use crate::measures::PAIRS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionKind {
    NonPE,
    DiametralPlane,
    FaceTriangle,
    T1,
    T2,
    T3,
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Face {
    #[serde(rename = "c1=c2")]
    C1EqC2,
    #[serde(rename = "c2=c3")]
    C2EqC3,
    #[serde(rename = "c2=-c3")]
    C2EqMinusC3,
}

impl Face {
    /// The pair of eigenvalue indices that coincide on this face.
    pub fn coincident_pair(self) -> (usize, usize) {
        match self {
            Face::C1EqC2 => (0, 3),
            Face::C2EqC3 => (0, 1),
            Face::C2EqMinusC3 => (2, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Face::C1EqC2 => "c1=c2",
            Face::C2EqC3 => "c2=c3",
            Face::C2EqMinusC3 => "c2=-c3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialClass {
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "iSWAP")]
    ISwap,
    SqrtSWAP,
    SqrtSWAPDag,
    #[serde(rename = "SPE")]
    Spe,
}

impl SpecialClass {
    pub fn name(self) -> &'static str {
        match self {
            SpecialClass::Cnot => "CNOT",
            SpecialClass::ISwap => "iSWAP",
            SpecialClass::SqrtSWAP => "SqrtSWAP",
            SpecialClass::SqrtSWAPDag => "SqrtSWAPDag",
            SpecialClass::Spe => "SPE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionLabel {
    pub kind: RegionKind,
    /// Diametral chords `(j, k)`, zero-based, `j < k`.
    pub planes: Vec<(usize, usize)>,
    pub faces: Vec<Face>,
    pub special: Option<SpecialClass>,
}

impl RegionLabel {
    /// Short label such as `T1`, `FaceTriangle:c1=c2` or `Special:CNOT`.
    pub fn short(&self) -> String {
        match (self.kind, self.special, self.faces.first()) {
            (RegionKind::Special, Some(s), _) => format!("Special:{}", s.name()),
            (RegionKind::FaceTriangle, _, Some(f)) => format!("FaceTriangle:{}", f.name()),
            (k, _, _) => format!("{k:?}"),
        }
    }

    pub fn is_tetrahedral(&self) -> bool {
        matches!(self.kind, RegionKind::T1 | RegionKind::T2 | RegionKind::T3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HullKind {
    Point,
    Segment,
    Triangle,
    Quadrilateral,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSimplexReport {
    pub hull_kind: HullKind,
    /// Triangles of three distinct points containing the origin, as sorted
    /// zero-based index triples.
    pub containing_triangles: Vec<[usize; 3]>,
    pub diametral_pairs: Vec<(usize, usize)>,
}

impl ZeroSimplexReport {
    pub fn contains_zero(&self) -> bool {
        !self.containing_triangles.is_empty() || !self.diametral_pairs.is_empty()
    }
}

/// `c1 + c2 ≥ π/2` and `c2 ± c3 ≤ π/2`, boundaries included within `tol`.
pub fn is_perfect_entangler(c: &CartanCoord, tol: f64) -> bool {
    c.c1 + c.c2 >= FRAC_PI_2 - tol && c.c2 + c.c3 <= FRAC_PI_2 + tol && c.c2 - c.c3 <= FRAC_PI_2 + tol
}

fn wrap_angle(x: f64) -> f64 {
    let r = (x + PI).rem_euclid(TAU) - PI;
    if r == -PI {
        PI
    } else {
        r
    }
}

/// Pairs whose phase gap is `π` (mod 2π) within `tol`.
pub fn diametral_chords(c: &CartanCoord, tol: f64) -> Vec<(usize, usize)> {
    let h = c.eigenphases();
    PAIRS
        .iter()
        .copied()
        .filter(|&(j, k)| PI - wrap_angle(h.get(j) - h.get(k)).abs() < tol)
        .collect()
}

/// Coordinate-space plane on which the chord `(j, k)` passes through the
/// origin.
pub fn plane_equation(pair: (usize, usize)) -> &'static str {
    match pair {
        (0, 1) => "c2-c3=pi/2",
        (1, 2) => "c1+c2=pi/2",
        (2, 3) => "c2+c3=pi/2",
        (0, 2) => "c1+c3=pi/2",
        (1, 3) => "c1-c3=pi/2",
        (0, 3) => "c1-c2=pi/2",
        _ => "",
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Distance from `p` to the segment `ab`.
fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Signed-area containment test with boundary counted as inside.
///
/// Each edge contributes the signed distance from `p` to its supporting
/// line; `p` is inside when none of them is below `-tol`. Triangles whose
/// area is below `tol` fall back to containment in their longest edge.
pub fn point_in_triangle(p: Complex64, a: Complex64, b: Complex64, c: Complex64, tol: f64) -> bool {
    let area2 = cross(b - a, c - a);
    let edges = [(a, b), (b, c), (c, a)];
    let longest = edges
        .iter()
        .copied()
        .max_by(|x, y| (x.1 - x.0).norm().total_cmp(&(y.1 - y.0).norm()))
        .expect("three edges");
    let scale = (longest.1 - longest.0).norm();
    if area2.abs() <= tol * scale.max(1.0) {
        return segment_distance(p, longest.0, longest.1) <= tol;
    }
    let orient = area2.signum();
    edges.iter().all(|&(u, v)| {
        let e = v - u;
        orient * cross(e, p - u) / e.norm() >= -tol
    })
}

/// Barycentric-free summary of which simplices of the `z_j` hold the
/// origin.
pub fn zero_simplices(z: &SquaredEigenvalues, tol: f64) -> ZeroSimplexReport {
    let distinct = |j: usize, k: usize| (z.get(j) - z.get(k)).norm() >= tol;

    let mut reps: Vec<Complex64> = Vec::with_capacity(4);
    for p in z.iter() {
        if reps.iter().all(|r| (r - p).norm() >= tol) {
            reps.push(*p);
        }
    }
    let hull_kind = match reps.len() {
        1 => HullKind::Point,
        2 => HullKind::Segment,
        3 => HullKind::Triangle,
        _ => HullKind::Quadrilateral,
    };

    let origin = Complex64::new(0.0, 0.0);
    let containing_triangles = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        .into_iter()
        .filter(|&[j, k, l]| distinct(j, k) && distinct(k, l) && distinct(j, l))
        .filter(|&[j, k, l]| point_in_triangle(origin, z.get(j), z.get(k), z.get(l), tol))
        .collect();

    let diametral_pairs = PAIRS.iter().copied().filter(|&(j, k)| (z.get(j) + z.get(k)).norm() < tol).collect();

    ZeroSimplexReport {
        hull_kind,
        containing_triangles,
        diametral_pairs,
    }
}

/// Chamber faces that contain `c`.
pub fn faces(c: &CartanCoord, tol: f64) -> Vec<Face> {
    let mut out = Vec::new();
    if (c.c1 - c.c2).abs() < tol {
        out.push(Face::C1EqC2);
    }
    if (c.c2 - c.c3).abs() < tol {
        out.push(Face::C2EqC3);
    }
    if (c.c2 + c.c3).abs() < tol {
        out.push(Face::C2EqMinusC3);
    }
    out
}

pub fn special_class(c: &CartanCoord, tol: f64) -> Option<SpecialClass> {
    let named = [
        (SpecialClass::Cnot, CartanCoord::new(FRAC_PI_2, 0.0, 0.0)),
        (SpecialClass::ISwap, CartanCoord::new(FRAC_PI_2, FRAC_PI_2, 0.0)),
        (SpecialClass::SqrtSWAP, CartanCoord::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4)),
        (SpecialClass::SqrtSWAPDag, CartanCoord::new(FRAC_PI_4, FRAC_PI_4, -FRAC_PI_4)),
    ];
    if let Some((s, _)) = named.iter().find(|(_, p)| c.max_abs_diff(p) < tol) {
        return Some(*s);
    }
    if (c.c1 - FRAC_PI_2).abs() < tol && c.c3.abs() < tol && c.c2 <= FRAC_PI_2 + tol {
        return Some(SpecialClass::Spe);
    }
    None
}

/// Region label with priority special > plane > face > tetrahedron.
pub fn classify(c: &CartanCoord, tol: f64) -> RegionLabel {
    if !is_perfect_entangler(c, tol) {
        return RegionLabel {
            kind: RegionKind::NonPE,
            planes: Vec::new(),
            faces: faces(c, tol),
            special: None,
        };
    }
    let planes = diametral_chords(c, tol);
    let faces = faces(c, tol);
    let special = special_class(c, tol);
    let kind = if special.is_some() {
        RegionKind::Special
    } else if !planes.is_empty() {
        RegionKind::DiametralPlane
    } else if !faces.is_empty() {
        RegionKind::FaceTriangle
    } else if c.c1 + c.c3 < FRAC_PI_2 && c.c1 - c.c3 < FRAC_PI_2 {
        RegionKind::T1
    } else if c.c1 + c.c3 > FRAC_PI_2 {
        RegionKind::T2
    } else {
        RegionKind::T3
    };
    RegionLabel {
        kind,
        planes,
        faces,
        special,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthogonalityReport {
    pub region: RegionKind,
    pub residual: f64,
    pub satisfied: bool,
}

/// Cross-multiplied orthogonality condition of the tetrahedral region
/// containing `c`:
///
/// * T1: `sin 2(c2-c3) · sin 2(c1-c3) = sin 2(c2+c3) · sin 2(c1+c3)`
/// * T2: `sin 2(c1-c2) · sin 2(c1-c3) = sin 2(c1+c2) · sin 2(c1+c3)`
/// * T3: `sin 2(c1-c2) · sin 2(c1+c3) = sin 2(c1+c2) · sin 2(c1-c3)`
pub fn orthogonality_condition(c: &CartanCoord, tol: f64) -> Result<OrthogonalityReport> {
    let label = classify(c, tol);
    let s = |x: f64| (2.0 * x).sin();
    let (c1, c2, c3) = (c.c1, c.c2, c.c3);
    let residual = match label.kind {
        RegionKind::T1 => s(c2 - c3) * s(c1 - c3) - s(c2 + c3) * s(c1 + c3),
        RegionKind::T2 => s(c1 - c2) * s(c1 - c3) - s(c1 + c2) * s(c1 + c3),
        RegionKind::T3 => s(c1 - c2) * s(c1 + c3) - s(c1 + c2) * s(c1 - c3),
        other => {
            return Err(Error::RegionMismatch(format!(
                "orthogonality condition needs a tetrahedral class, got {other:?}"
            )))
        }
    };
    Ok(OrthogonalityReport {
        region: label.kind,
        residual,
        satisfied: residual.abs() < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::squared_eigenvalues;
    use crate::DEFAULT_TOL as TOL;

    const CNOT: CartanCoord = CartanCoord::new(FRAC_PI_2, 0.0, 0.0);
    const SQRT_SWAP: CartanCoord = CartanCoord::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4);
    const SWAP: CartanCoord = CartanCoord::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2);
    const ISWAP: CartanCoord = CartanCoord::new(FRAC_PI_2, FRAC_PI_2, 0.0);

    fn pi(a: f64, b: f64, c: f64) -> CartanCoord {
        CartanCoord::from_pi_units(a, b, c)
    }

    #[test]
    fn perfect_entangler_examples() {
        assert!(is_perfect_entangler(&CNOT, TOL));
        assert!(!is_perfect_entangler(&SWAP, TOL));
        assert!(!is_perfect_entangler(&CartanCoord::new(0.0, 0.0, 0.0), TOL));
    }

    #[test]
    fn diametral_examples() {
        assert_eq!(diametral_chords(&CNOT, TOL), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(diametral_chords(&SQRT_SWAP, TOL), vec![(0, 2), (1, 2), (2, 3)]);
        assert!(diametral_chords(&pi(3.0 / 8.0, 0.25, 1.0 / 16.0), TOL).is_empty());
    }

    #[test]
    fn zero_simplex_examples() {
        let r = zero_simplices(&squared_eigenvalues(&pi(3.0 / 8.0, 0.25, 1.0 / 16.0)), TOL);
        assert_eq!(r.hull_kind, HullKind::Quadrilateral);
        // {3,1,2} and {3,4,2} in one-based labels
        assert_eq!(r.containing_triangles, vec![[0, 1, 2], [1, 2, 3]]);
        assert!(r.diametral_pairs.is_empty());

        let r = zero_simplices(&squared_eigenvalues(&CNOT), TOL);
        assert_eq!(r.hull_kind, HullKind::Segment);
        assert_eq!(r.diametral_pairs, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(r.containing_triangles.is_empty());

        let r = zero_simplices(&squared_eigenvalues(&CartanCoord::new(0.0, 0.0, 0.0)), TOL);
        assert_eq!(r.hull_kind, HullKind::Point);
        assert!(!r.contains_zero());
    }

    #[test]
    fn triangle_predicate_edges_and_degenerate() {
        let o = Complex64::new(0.0, 0.0);
        let a = Complex64::new(1.0, 0.0);
        let b = Complex64::new(-1.0, 0.0);
        let c = Complex64::new(0.0, 1.0);
        assert!(point_in_triangle(o, a, b, c, 1e-12));
        assert!(!point_in_triangle(Complex64::new(0.0, -0.1), a, b, c, 1e-12));
        // zero-area triangle reduces to its longest edge
        assert!(point_in_triangle(o, a, b, a, 1e-12));
        assert!(!point_in_triangle(o, a, c, a, 1e-12));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&pi(3.0 / 8.0, 0.25, 1.0 / 16.0), TOL).kind, RegionKind::T1);
        assert_eq!(classify(&pi(7.0 / 16.0, 0.25, 0.125), TOL).kind, RegionKind::T2);
        assert_eq!(classify(&pi(7.0 / 16.0, 0.25, -0.125), TOL).kind, RegionKind::T3);

        let l = classify(&ISWAP, TOL);
        assert_eq!(l.kind, RegionKind::Special);
        assert_eq!(l.special, Some(SpecialClass::ISwap));
        // |h1-h2|, |h3-h4|, |h1-h3|, |h2-h4|
        assert_eq!(l.planes, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);

        assert_eq!(classify(&SWAP, TOL).kind, RegionKind::NonPE);
        let l = classify(&pi(0.5, 0.3, 0.0), TOL);
        assert_eq!(l.special, Some(SpecialClass::Spe));
        assert_eq!(l.planes, vec![(0, 2), (1, 3)]);

        let l = classify(&pi(3.0 / 8.0, 3.0 / 8.0, 1.0 / 16.0), TOL);
        assert_eq!(l.kind, RegionKind::FaceTriangle);
        assert_eq!(l.faces, vec![Face::C1EqC2]);
        assert_eq!(l.short(), "FaceTriangle:c1=c2");
    }

    #[test]
    fn orthogonality_examples() {
        let r = orthogonality_condition(&pi(3.0 / 8.0, 0.25, 0.0), TOL).unwrap();
        assert_eq!(r.region, RegionKind::T1);
        assert!(r.satisfied, "{r:?}");

        let r = orthogonality_condition(&pi(0.5, 0.25, 0.125), TOL).unwrap();
        assert_eq!(r.region, RegionKind::T2);
        assert!(r.satisfied, "{r:?}");

        let r = orthogonality_condition(&pi(3.0 / 8.0, 0.25, 1.0 / 16.0), TOL).unwrap();
        assert!(!r.satisfied);
        assert!(r.residual.abs() > 1e-3);

        assert!(matches!(orthogonality_condition(&CNOT, TOL), Err(Error::RegionMismatch(_))));
    }

    #[test]
    fn face_coincidences() {
        let z = squared_eigenvalues(&CartanCoord::new(1.0, 1.0, 0.3));
        assert!((z.get(0) - z.get(3)).norm() < 1e-14);
        let z = squared_eigenvalues(&CartanCoord::new(1.2, 0.3, 0.3));
        assert!((z.get(0) - z.get(1)).norm() < 1e-14);
        let z = squared_eigenvalues(&CartanCoord::new(1.2, 0.3, -0.3));
        assert!((z.get(2) - z.get(3)).norm() < 1e-14);
    }
}

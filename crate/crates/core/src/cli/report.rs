//! JSON reports. Indices are one-based here; every float is rounded to 15
//! significant digits so output is byte-stable.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use super::gates::ResolvedGate;
use super::CliError;
use crate::cartan::{eigenphases, squared_eigenvalues, CartanCoord};
use crate::measures::{chords, MeasureRoutes, NonlocalMeasures, PAIRS, ROUTE_TOL};
use crate::oracle::{mc_entangling_power, Estimate, SampleConfig};
use crate::regions::{classify, is_perfect_entangler, plane_equation, zero_simplices, HullKind};
use crate::states::{construct_pairs, verify_pair, Construction, MagicState, PairVerification, ProductStatePair};

/// `x` rounded to 15 significant digits, with `-0` mapped to `0`.
pub fn round15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = serde_json::Number::from_f64(round15(x)).map_or(Value::Null, Value::Number);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with rounded floats and a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut v = serde_json::to_value(report).expect("reports serialize");
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn one_based_pair((j, k): (usize, usize)) -> [usize; 2] {
    [j + 1, k + 1]
}

fn one_based_triple(t: [usize; 3]) -> [usize; 3] {
    t.map(|j| j + 1)
}

fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Serialize)]
pub struct GateInfo {
    pub label: String,
    pub source: &'static str,
}

#[derive(Serialize)]
pub struct Coordinates {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub pi_units: [f64; 3],
}

impl From<&CartanCoord> for Coordinates {
    fn from(c: &CartanCoord) -> Self {
        Self {
            c1: c.c1,
            c2: c.c2,
            c3: c.c3,
            pi_units: c.to_array().map(|x| x / PI),
        }
    }
}

#[derive(Serialize)]
pub struct ChordReport {
    pub pair: [usize; 2],
    pub direct_sq: f64,
    pub conjugate_sq: f64,
}

#[derive(Serialize)]
pub struct PlaneReport {
    pub pair: [usize; 2],
    pub equation: &'static str,
}

#[derive(Serialize)]
pub struct RegionReport {
    pub label: String,
    pub kind: crate::regions::RegionKind,
    pub perfect_entangler: bool,
    pub planes: Vec<PlaneReport>,
    pub faces: Vec<crate::regions::Face>,
    pub special: Option<crate::regions::SpecialClass>,
}

#[derive(Serialize)]
pub struct ZeroSimplexJson {
    pub hull_kind: HullKind,
    pub contains_zero: bool,
    pub containing_triangles: Vec<[usize; 3]>,
    pub diametral_pairs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct StateReport {
    pub magic: [[f64; 2]; 4],
    pub computational: [[f64; 2]; 4],
}

impl From<&MagicState> for StateReport {
    fn from(s: &MagicState) -> Self {
        let v = s.to_computational();
        Self {
            magic: s.alpha.map(complex_pair),
            computational: [v[0], v[1], v[2], v[3]].map(complex_pair),
        }
    }
}

#[derive(Serialize)]
pub struct PairReport {
    pub construction: &'static str,
    /// Chord endpoints or triangles, one-based.
    pub simplices: Vec<Vec<usize>>,
    pub face: Option<crate::regions::Face>,
    pub phase_integers: Option<[i64; 6]>,
    pub p: Option<f64>,
    pub orthogonal: bool,
    pub overlap: f64,
    pub phi1: StateReport,
    pub phi2: StateReport,
    pub verification: PairVerification,
}

impl PairReport {
    fn new(c: &CartanCoord, pair: &ProductStatePair) -> Self {
        let (construction, simplices, face) = match pair.construction {
            Construction::Diametral { pair } => ("diametral", vec![one_based_pair(pair).to_vec()], None),
            Construction::Face { face, triangle, partner } => {
                ("face", vec![one_based_triple(triangle).to_vec(), vec![partner + 1]], Some(face))
            }
            Construction::Quadrilateral { first, second } => (
                "quadrilateral",
                vec![one_based_triple(first).to_vec(), one_based_triple(second).to_vec()],
                None,
            ),
        };
        Self {
            construction,
            simplices,
            face,
            phase_integers: pair.phase_integers,
            p: pair.p,
            orthogonal: pair.orthogonal,
            overlap: pair.overlap,
            phi1: (&pair.phi1).into(),
            phi2: (&pair.phi2).into(),
            verification: verify_pair(c, pair),
        }
    }
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub gate: GateInfo,
    pub coordinates: Coordinates,
    pub eigenphases: [f64; 4],
    pub squared_eigenvalues: [[f64; 2]; 4],
    pub chords: Vec<ChordReport>,
    pub measures: NonlocalMeasures,
    pub routes: MeasureRoutes,
    pub region: RegionReport,
    pub zero_simplices: ZeroSimplexJson,
    pub pairs: Vec<PairReport>,
}

fn region_report(c: &CartanCoord, tol: f64) -> RegionReport {
    let label = classify(c, tol);
    RegionReport {
        label: label.short(),
        kind: label.kind,
        perfect_entangler: is_perfect_entangler(c, tol),
        planes: label
            .planes
            .iter()
            .map(|&p| PlaneReport {
                pair: one_based_pair(p),
                equation: plane_equation(p),
            })
            .collect(),
        faces: label.faces.clone(),
        special: label.special,
    }
}

fn pair_reports(c: &CartanCoord, tol: f64) -> Result<Vec<PairReport>, CliError> {
    let pairs = construct_pairs(c, tol).map_err(CliError::from)?;
    Ok(pairs.iter().map(|p| PairReport::new(c, p)).collect())
}

pub fn analyze(gate: &ResolvedGate, tol: f64) -> Result<AnalysisReport, CliError> {
    let c = &gate.coords;
    let z = squared_eigenvalues(c);
    let ch = chords(&z);
    let routes = MeasureRoutes::evaluate(c, &gate.matrix).map_err(CliError::from)?;
    routes.check(ROUTE_TOL).map_err(CliError::from)?;
    let zs = zero_simplices(&z, tol);
    let pairs = if is_perfect_entangler(c, tol) {
        pair_reports(c, tol)?
    } else {
        Vec::new()
    };
    Ok(AnalysisReport {
        gate: GateInfo {
            label: gate.label.clone(),
            source: gate.source,
        },
        coordinates: c.into(),
        eigenphases: eigenphases(c).0,
        squared_eigenvalues: z.0.map(complex_pair),
        chords: PAIRS
            .iter()
            .enumerate()
            .map(|(i, &p)| ChordReport {
                pair: one_based_pair(p),
                direct_sq: ch.direct[i],
                conjugate_sq: ch.conjugate[i],
            })
            .collect(),
        measures: routes.measures(),
        routes,
        region: region_report(c, tol),
        zero_simplices: ZeroSimplexJson {
            hull_kind: zs.hull_kind,
            contains_zero: zs.contains_zero(),
            containing_triangles: zs.containing_triangles.iter().map(|&t| one_based_triple(t)).collect(),
            diametral_pairs: zs.diametral_pairs.iter().map(|&p| one_based_pair(p)).collect(),
        },
        pairs,
    })
}

#[derive(Serialize)]
pub struct StatesReport {
    pub gate: GateInfo,
    pub coordinates: Coordinates,
    pub region: RegionReport,
    pub pairs: Vec<PairReport>,
    pub all_pass: bool,
}

pub fn states(gate: &ResolvedGate, tol: f64) -> Result<StatesReport, CliError> {
    let c = &gate.coords;
    let pairs = pair_reports(c, tol)?;
    Ok(StatesReport {
        gate: GateInfo {
            label: gate.label.clone(),
            source: gate.source,
        },
        coordinates: c.into(),
        region: region_report(c, tol),
        all_pass: pairs.iter().all(|p| p.verification.pass),
        pairs,
    })
}

#[derive(Serialize)]
pub struct EntanglingPowerRoutes {
    pub chords: f64,
    pub matrix: f64,
    pub monte_carlo: Estimate,
}

#[derive(Serialize)]
pub struct Agreement {
    pub chords_vs_matrix: bool,
    pub chords_vs_monte_carlo: bool,
    pub matrix_vs_monte_carlo: bool,
    pub route_tol: f64,
    pub sigma_band: f64,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub gate: GateInfo,
    pub coordinates: Coordinates,
    pub samples: usize,
    pub seed: u64,
    pub e_p: EntanglingPowerRoutes,
    pub agreement: Agreement,
    pub pass: bool,
}

/// Width of the Monte Carlo acceptance band in standard errors.
pub const SIGMA_BAND: f64 = 3.0;

pub fn verify(gate: &ResolvedGate, cfg: &SampleConfig) -> Result<VerifyReport, CliError> {
    let c = &gate.coords;
    let routes = MeasureRoutes::evaluate(c, &gate.matrix).map_err(CliError::from)?;
    let mc = mc_entangling_power(&gate.matrix, cfg).map_err(CliError::from)?;
    let agreement = Agreement {
        chords_vs_matrix: (routes.e_p_chords - routes.e_p_matrix).abs() <= ROUTE_TOL,
        chords_vs_monte_carlo: mc.within(routes.e_p_chords, SIGMA_BAND),
        matrix_vs_monte_carlo: mc.within(routes.e_p_matrix, SIGMA_BAND),
        route_tol: ROUTE_TOL,
        sigma_band: SIGMA_BAND,
    };
    let pass = agreement.chords_vs_matrix && agreement.chords_vs_monte_carlo && agreement.matrix_vs_monte_carlo;
    Ok(VerifyReport {
        gate: GateInfo {
            label: gate.label.clone(),
            source: gate.source,
        },
        coordinates: c.into(),
        samples: cfg.sample_count,
        seed: cfg.seed,
        e_p: EntanglingPowerRoutes {
            chords: routes.e_p_chords,
            matrix: routes.e_p_matrix,
            monte_carlo: mc,
        },
        agreement,
        pass,
    })
}

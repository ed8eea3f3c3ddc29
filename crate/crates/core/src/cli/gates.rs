//! Gate specifications: named gates, coordinate triples and matrix files.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::CliError;
use crate::cartan::{build_nonlocal, canonicalize, extract_coords, CartanCoord};
use crate::numerics::{c, cnot, ensure_unitary, swap, CMat4, ONE, UNITARY_TOL, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGate {
    I,
    Cnot,
    ISwap,
    Swap,
    SqrtSwap,
    SqrtSwapDag,
    SqrtISwap,
    MSqrtISwap,
}

impl NamedGate {
    pub const ALL: [NamedGate; 8] = [
        NamedGate::I,
        NamedGate::Cnot,
        NamedGate::ISwap,
        NamedGate::Swap,
        NamedGate::SqrtSwap,
        NamedGate::SqrtSwapDag,
        NamedGate::SqrtISwap,
        NamedGate::MSqrtISwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGate::I => "I",
            NamedGate::Cnot => "CNOT",
            NamedGate::ISwap => "ISWAP",
            NamedGate::Swap => "SWAP",
            NamedGate::SqrtSwap => "SQRT_SWAP",
            NamedGate::SqrtSwapDag => "SQRT_SWAP_DAG",
            NamedGate::SqrtISwap => "SQRT_ISWAP",
            NamedGate::MSqrtISwap => "M_SQRT_ISWAP",
        }
    }

    /// Canonical coordinates of the class the gate represents.
    pub fn coords(self) -> CartanCoord {
        let (a, b, c3) = match self {
            NamedGate::I => (0.0, 0.0, 0.0),
            NamedGate::Cnot => (FRAC_PI_2, 0.0, 0.0),
            NamedGate::ISwap => (FRAC_PI_2, FRAC_PI_2, 0.0),
            NamedGate::Swap => (FRAC_PI_2, FRAC_PI_2, FRAC_PI_2),
            NamedGate::SqrtSwap => (FRAC_PI_4, FRAC_PI_4, FRAC_PI_4),
            NamedGate::SqrtSwapDag => (FRAC_PI_4, FRAC_PI_4, -FRAC_PI_4),
            NamedGate::SqrtISwap => (FRAC_PI_4, FRAC_PI_4, 0.0),
            NamedGate::MSqrtISwap => (FRAC_PI_2, FRAC_PI_4, FRAC_PI_4),
        };
        CartanCoord::new(a, b, c3)
    }

    /// A matrix in the class: the textbook matrix where its class matches
    /// [`NamedGate::coords`], otherwise `U_d` itself.
    pub fn matrix(self) -> CMat4 {
        let r = c(FRAC_1_SQRT_2, 0.0);
        let ir = c(0.0, FRAC_1_SQRT_2);
        let i = c(0.0, 1.0);
        match self {
            NamedGate::I => CMat4::identity(),
            NamedGate::Cnot => cnot(),
            NamedGate::Swap => swap(),
            #[rustfmt::skip]
            NamedGate::ISwap => CMat4::new(
                ONE,  ZERO, ZERO, ZERO,
                ZERO, ZERO, i,    ZERO,
                ZERO, i,    ZERO, ZERO,
                ZERO, ZERO, ZERO, ONE,
            ),
            #[rustfmt::skip]
            NamedGate::SqrtISwap => CMat4::new(
                ONE,  ZERO, ZERO, ZERO,
                ZERO, r,    ir,   ZERO,
                ZERO, ir,   r,    ZERO,
                ZERO, ZERO, ZERO, ONE,
            ),
            NamedGate::SqrtSwap | NamedGate::SqrtSwapDag | NamedGate::MSqrtISwap => build_nonlocal(&self.coords()),
        }
    }
}

impl fmt::Display for NamedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        NamedGate::ALL.into_iter().find(|g| g.name() == key).ok_or_else(|| {
            let names: Vec<_> = NamedGate::ALL.iter().map(|g| g.name()).collect();
            CliError::Usage(format!("unknown gate '{s}'; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GateSpec {
    Named(NamedGate),
    Coords { values: [f64; 3], pi_units: bool },
    Matrix(PathBuf),
}

/// A gate reduced to its class and a matrix representative.
#[derive(Debug, Clone)]
pub struct ResolvedGate {
    pub label: String,
    pub source: &'static str,
    pub coords: CartanCoord,
    pub matrix: CMat4,
}

pub fn parse_coords(s: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("--coords expects three comma-separated numbers, got '{s}'"));
    let [a, b, c3] = parts[..] else { return Err(bad()) };
    let num = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    Ok([num(a)?, num(b)?, num(c3)?])
}

impl GateSpec {
    pub fn resolve(&self) -> Result<ResolvedGate, CliError> {
        match self {
            GateSpec::Named(g) => Ok(ResolvedGate {
                label: g.name().to_string(),
                source: "named",
                coords: g.coords(),
                matrix: g.matrix(),
            }),
            GateSpec::Coords { values, pi_units } => {
                let scale = if *pi_units { std::f64::consts::PI } else { 1.0 };
                let raw = values.map(|x| x * scale);
                let label = if *pi_units {
                    format!("({}π, {}π, {}π)", values[0], values[1], values[2])
                } else {
                    format!("({}, {}, {})", values[0], values[1], values[2])
                };
                Ok(ResolvedGate {
                    label,
                    source: "coords",
                    coords: canonicalize(raw),
                    matrix: build_nonlocal(&CartanCoord::new(raw[0], raw[1], raw[2])),
                })
            }
            GateSpec::Matrix(path) => {
                let matrix = read_matrix(path)?;
                let coords = extract_coords(&matrix).map_err(|e| CliError::InvalidMatrix(e.to_string()))?;
                Ok(ResolvedGate {
                    label: path.display().to_string(),
                    source: "matrix",
                    coords,
                    matrix,
                })
            }
        }
    }
}

#[derive(Deserialize)]
struct MatrixFile {
    matrix: [[[f64; 2]; 4]; 4],
}

/// Reads `{"matrix": [[[re, im] × 4] × 4]}`, row-major in the basis
/// `|00>, |01>, |10>, |11>`.
pub fn read_matrix(path: &Path) -> Result<CMat4, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn parse_matrix(text: &str) -> Result<CMat4, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("malformed matrix JSON: {e}")))?;
    let file: MatrixFile =
        serde_json::from_value(value).map_err(|e| CliError::InvalidMatrix(format!("expected a 4x4 array of [re, im] pairs: {e}")))?;
    let m = CMat4::from_fn(|r, col| {
        let [re, im] = file.matrix[r][col];
        c(re, im)
    });
    ensure_unitary(&m, UNITARY_TOL).map_err(|e| CliError::InvalidMatrix(e.to_string()))?;
    Ok(m)
}

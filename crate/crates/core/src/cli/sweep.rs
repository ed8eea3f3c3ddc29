//! CSV atlas of the canonical chamber.

use std::f64::consts::PI;
use std::fmt::Write;

use super::report::round15;
use super::CliError;
use crate::cartan::chamber_grid;
use crate::measures::measures_from_coords;
use crate::regions::classify;

pub const HEADER: &str = "c1,c2,c3,e_p,g_t,L,region,planes";

/// Largest accepted grid step, with slack for `π/8` given in radians.
const MAX_STEP: f64 = PI / 8.0 + 1e-12;

/// Rows over [`chamber_grid`] with one-based diametral pairs such as
/// `13;24` in the last column.
pub fn sweep_csv(step: f64, tol: f64) -> Result<String, CliError> {
    if !(step > 0.0 && step <= MAX_STEP) {
        return Err(CliError::Usage(format!("--step must lie in (0, π/8], got {step}")));
    }
    let mut out = String::from(HEADER);
    out.push('\n');
    for c in chamber_grid(step) {
        let m = measures_from_coords(&c).map_err(CliError::from)?;
        let label = classify(&c, tol);
        let planes: Vec<String> = label.planes.iter().map(|(j, k)| format!("{}{}", j + 1, k + 1)).collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            round15(c.c1),
            round15(c.c2),
            round15(c.c3),
            round15(m.e_p),
            round15(m.g_t),
            round15(m.l),
            label.short(),
            planes.join(";")
        );
    }
    Ok(out)
}

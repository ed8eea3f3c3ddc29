//! Monte Carlo oracles that do not go through the chord formulas.
//!
//! Sample `i` of a run with seed `s` draws from `ChaCha8Rng` seeded with
//! `s` and switched to stream `i`. Each sample owns its generator, so
//! results do not depend on how rayon schedules the work; per-sample
//! values are collected in index order and reduced serially.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{chamber_grid, extract_coords};
use crate::error::{Error, Result};
use crate::numerics::{ensure_unitary, state_linear_entropy, CMat4, CVec2, CVec4, Kron, UNITARY_TOL};
use crate::regions::is_perfect_entangler;
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub sample_count: usize,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(sample_count: usize, seed: u64) -> Result<Self> {
        if sample_count == 0 {
            return Err(Error::EmptySample);
        }
        Ok(Self { sample_count, seed })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
}

impl Estimate {
    /// Mean and `s/√N` with the unbiased sample deviation `s`.
    pub fn from_samples(xs: &[f64]) -> Result<Self> {
        let n = xs.len();
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let mean = xs.iter().sum::<f64>() / n as f64;
        if n == 1 {
            return Ok(Self { mean, std_error: 0.0 });
        }
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        Ok(Self {
            mean,
            std_error: (var / n as f64).sqrt(),
        })
    }

    /// `|mean - target| ≤ k · std_error`, with exact equality required when
    /// the error vanishes.
    pub fn within(&self, target: f64, k: f64) -> bool {
        (self.mean - target).abs() <= k * self.std_error + 1e-15
    }
}

/// Generator for sample `index` of a run seeded with `seed`.
pub fn substream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random qubit state.
pub fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> CVec2 {
    let v = CVec2::new(complex_normal(rng), complex_normal(rng));
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / n)
}

/// Tensor product of two independent Haar-random qubit states.
pub fn haar_product_state<R: Rng + ?Sized>(rng: &mut R) -> CVec4 {
    let a = haar_qubit(rng);
    let b = haar_qubit(rng);
    a.kron(&b)
}

/// Haar-random element of SU(4): QR of a complex Ginibre matrix with the
/// phases of `diag R` moved into `Q`, then divided by a fourth root of
/// the determinant.
pub fn haar_random_su4<R: Rng + ?Sized>(rng: &mut R) -> CMat4 {
    let g = CMat4::from_fn(|_, _| complex_normal(rng));
    let (q, r) = g.qr().unpack();
    let mut u = q;
    for col in 0..4 {
        let d = r[(col, col)];
        let phase = d / d.norm();
        u.column_mut(col).apply(|z| *z *= phase);
    }
    let root = u.determinant().powf(0.25);
    u.map(|z| z / root)
}

fn sample_values<F>(cfg: &SampleConfig, f: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    (0..cfg.sample_count as u64)
        .into_par_iter()
        .map(|i| f(&mut substream_rng(cfg.seed, i)))
        .collect()
}

/// Mean linear entropy `1 - Tr ρ_A²` of `U` applied to Haar product states.
pub fn mc_entangling_power(u: &CMat4, cfg: &SampleConfig) -> Result<Estimate> {
    ensure_unitary(u, UNITARY_TOL)?;
    let xs = sample_values(cfg, |rng| state_linear_entropy(&(u * haar_product_state(rng))));
    Estimate::from_samples(&xs)
}

/// Fraction of Haar-random SU(4) draws whose canonical coordinates are
/// perfect entanglers.
pub fn pe_volume_fraction(cfg: &SampleConfig) -> Result<Estimate> {
    let flags: Vec<Result<bool>> = (0..cfg.sample_count as u64)
        .into_par_iter()
        .map(|i| {
            let u = haar_random_su4(&mut substream_rng(cfg.seed, i));
            extract_coords(&u).map(|c| is_perfect_entangler(&c, DEFAULT_TOL))
        })
        .collect();
    let xs = flags
        .into_iter()
        .map(|f| f.map(|pe| if pe { 1.0 } else { 0.0 }))
        .collect::<Result<Vec<f64>>>()?;
    Estimate::from_samples(&xs)
}

/// Fraction of points of [`chamber_grid`] that are perfect entanglers,
/// i.e. the Euclidean rather than Haar volume fraction.
pub fn grid_pe_fraction(step: f64) -> f64 {
    let grid = chamber_grid(step);
    let pe = grid.par_iter().filter(|c| is_perfect_entangler(c, DEFAULT_TOL)).count();
    pe as f64 / grid.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{cnot, swap, unitarity_defect};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn product_draws_are_normalized_products() {
        for i in 0..50 {
            let v = haar_product_state(&mut substream_rng(42, i));
            let (l1, l2) = crate::numerics::schmidt_spectrum(&v).unwrap();
            assert_abs_diff_eq!(l1, 1.0, epsilon = 1e-12);
            assert!(l2 < 1e-12);
        }
    }

    #[test]
    fn first_draw_is_frozen() {
        let v = haar_product_state(&mut substream_rng(42, 0));
        let again = haar_product_state(&mut substream_rng(42, 0));
        assert_eq!(v, again);
        let want = FIRST_DRAW_SEED_42;
        for (z, (re, im)) in v.iter().zip(want) {
            assert!((z.re - re).abs() < 1e-14 && (z.im - im).abs() < 1e-14, "{v:?}");
        }
    }

    const FIRST_DRAW_SEED_42: [(f64, f64); 4] = [
        (0.38417181341453044, -0.4334260482457617),
        (-0.6530659082207242, -0.34498480912290186),
        (0.21214159424980364, -0.01802935059792879),
        (-0.0864411482839278, -0.2573773375098406),
    ];

    #[test]
    fn identity_has_zero_power() {
        let cfg = SampleConfig::new(1000, 1).unwrap();
        let est = mc_entangling_power(&CMat4::identity(), &cfg).unwrap();
        assert!(est.mean.abs() < 1e-15);
    }

    #[test]
    fn swap_and_cnot_power() {
        let cfg = SampleConfig::new(20_000, 3).unwrap();
        let est = mc_entangling_power(&swap(), &cfg).unwrap();
        assert!(est.mean.abs() < 1e-12);
        let est = mc_entangling_power(&cnot(), &cfg).unwrap();
        assert!(est.within(2.0 / 9.0, 3.0), "{est:?}");
    }

    #[test]
    fn determinism() {
        let cfg = SampleConfig::new(2000, 9).unwrap();
        let a = mc_entangling_power(&cnot(), &cfg).unwrap();
        let b = mc_entangling_power(&cnot(), &cfg).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }

    #[test]
    fn qubit_population_is_half() {
        let xs: Vec<f64> = (0..20_000).map(|i| haar_qubit(&mut substream_rng(5, i))[0].norm_sqr()).collect();
        let est = Estimate::from_samples(&xs).unwrap();
        assert!(est.within(0.5, 3.0), "{est:?}");
    }

    #[test]
    fn su4_draws() {
        for i in 0..20 {
            let u = haar_random_su4(&mut substream_rng(11, i));
            assert!(unitarity_defect(&u) < 1e-10);
            assert!((u.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
            assert!(extract_coords(&u).unwrap().in_chamber(1e-12));
        }
    }

    #[test]
    fn trace_moment_is_stable_across_seeds() {
        // E|Tr U|² = 1 for Haar U(4) and SU(4)
        let moment = |seed: u64| {
            let xs: Vec<f64> = (0..10_000)
                .map(|i| haar_random_su4(&mut substream_rng(seed, i)).trace().norm_sqr())
                .collect();
            Estimate::from_samples(&xs).unwrap()
        };
        let (a, b) = (moment(1), moment(2));
        assert!(a.within(1.0, 4.0) && b.within(1.0, 4.0), "{a:?} {b:?}");
        assert!((a.mean - b.mean).abs() < 4.0 * (a.std_error.powi(2) + b.std_error.powi(2)).sqrt());
    }

    #[test]
    fn single_sample_fraction() {
        let est = pe_volume_fraction(&SampleConfig::new(1, 0).unwrap()).unwrap();
        assert!(est.mean == 0.0 || est.mean == 1.0);
    }

    #[test]
    fn coarse_grid_fraction() {
        let f = grid_pe_fraction(PI / 32.0);
        assert!((f - 0.5).abs() < 0.02, "{f}");
    }

    #[test]
    fn empty_config_rejected() {
        assert_eq!(SampleConfig::new(0, 1), Err(Error::EmptySample));
    }
}

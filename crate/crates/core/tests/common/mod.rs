//! Samplers and closed-form reference values shared by the integration
//! tests. Nothing here calls the chord or matrix routes of the library.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use argand::numerics::{CMat2, CMat4, Kron};
use argand::CartanCoord;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type PlaneForm = ((usize, usize), fn(&CartanCoord) -> f64);

/// Diametral chord and the coordinate combination equal to π/2 on its plane.
pub const PLANES: [PlaneForm; 5] = [
    ((0, 1), |k| k.c2 - k.c3),
    ((1, 2), |k| k.c1 + k.c2),
    ((2, 3), |k| k.c2 + k.c3),
    ((0, 2), |k| k.c1 + k.c3),
    ((1, 3), |k| k.c1 - k.c3),
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the canonical chamber by rejection from a box.
pub fn random_canonical<R: Rng>(rng: &mut R) -> CartanCoord {
    loop {
        let c1 = rng.random_range(0.0..FRAC_PI_2);
        let c2 = rng.random_range(0.0..FRAC_PI_2);
        let c3 = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
        if c1 >= c2 && c2 >= c3.abs() {
            return CartanCoord::new(c1, c2, c3);
        }
    }
}

/// Haar SU(2) from a uniform unit quaternion.
pub fn random_su2<R: Rng>(rng: &mut R) -> CMat2 {
    let q: [f64; 4] = loop {
        let v = [0; 4].map(|_| rng.random_range(-1.0..1.0f64));
        let n = v.iter().map(|x| x * x).sum::<f64>();
        if n > 1e-6 && n <= 1.0 {
            break v.map(|x| x / n.sqrt());
        }
    };
    let a = Complex64::new(q[0], q[1]);
    let b = Complex64::new(q[2], q[3]);
    CMat2::new(a, -b.conj(), b, a.conj())
}

pub fn random_local<R: Rng>(rng: &mut R) -> CMat4 {
    random_su2(rng).kron(&random_su2(rng))
}

/// Reference entangling power in Cartan coordinates.
pub fn e_p_reference(c: &CartanCoord) -> f64 {
    let (a, b, d) = ((2.0 * c.c1).cos(), (2.0 * c.c2).cos(), (2.0 * c.c3).cos());
    (3.0 - (a * b + b * d + d * a)) / 18.0
}

/// Reference gate typicality in Cartan coordinates.
pub fn g_t_reference(c: &CartanCoord) -> f64 {
    1.0 - ((2.0 * c.c1).cos() + (2.0 * c.c2).cos() + (2.0 * c.c3).cos()) / 3.0
}

/// Points of the diametral planes restricted to the perfect-entangler
/// region, one plane per draw in turn.
pub fn random_on_plane<R: Rng>(rng: &mut R, plane: usize) -> CartanCoord {
    let h = FRAC_PI_2;
    match plane % 5 {
        // c1 + c2 = π/2
        0 => {
            let c1 = rng.random_range(FRAC_PI_4..h);
            let c2 = h - c1;
            CartanCoord::new(c1, c2, rng.random_range(-c2..=c2))
        }
        // c2 - c3 = π/2
        1 => {
            let c2 = rng.random_range(FRAC_PI_4..h);
            CartanCoord::new(rng.random_range(c2..=h), c2, c2 - h)
        }
        // c2 + c3 = π/2
        2 => {
            let c2 = rng.random_range(FRAC_PI_4..h);
            CartanCoord::new(rng.random_range(c2..=h), c2, h - c2)
        }
        // c1 + c3 = π/2
        3 => {
            let c1 = rng.random_range(FRAC_PI_4..h);
            CartanCoord::new(c1, rng.random_range(h - c1..=c1), h - c1)
        }
        // c1 - c3 = π/2
        _ => {
            let c1 = rng.random_range(FRAC_PI_4..h);
            CartanCoord::new(c1, rng.random_range(h - c1..=c1), c1 - h)
        }
    }
}

/// Perfect entanglers on the chamber faces `c1 = c2`, `c2 = c3`,
/// `c2 = -c3`.
pub fn random_on_face<R: Rng>(rng: &mut R, face: usize) -> CartanCoord {
    let h = FRAC_PI_2;
    match face % 3 {
        0 => {
            let c1 = rng.random_range(FRAC_PI_4..h);
            let m = h - c1;
            CartanCoord::new(c1, c1, rng.random_range(-m..=m))
        }
        1 => {
            let c2 = rng.random_range(0.0..FRAC_PI_4);
            CartanCoord::new(rng.random_range((h - c2).max(c2)..h), c2, c2)
        }
        _ => {
            let c2 = rng.random_range(0.0..FRAC_PI_4);
            CartanCoord::new(rng.random_range((h - c2).max(c2)..h), c2, -c2)
        }
    }
}

/// Perfect entanglers with `c3 = 0`.
pub fn random_c3_zero<R: Rng>(rng: &mut R) -> CartanCoord {
    let c1 = rng.random_range(FRAC_PI_4..FRAC_PI_2);
    CartanCoord::new(c1, rng.random_range(FRAC_PI_2 - c1..=c1), 0.0)
}

/// Perfect entanglers with `c1 = π/2`; `c3` takes either sign, so the
/// negative half is the mirror image of the canonical one.
pub fn random_c1_edge<R: Rng>(rng: &mut R) -> CartanCoord {
    let c2 = rng.random_range(0.0..FRAC_PI_2);
    let m = c2.min(FRAC_PI_2 - c2);
    CartanCoord::new(FRAC_PI_2, c2, rng.random_range(-m..=m))
}

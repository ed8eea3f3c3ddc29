//! Nonlocal analysis of two-qubit gates through the Argand diagram of the
//! squared eigenvalues of their nonlocal part.
//!
//! A gate `U = L1 · U_d(c1, c2, c3) · L2` is reduced to its Cartan
//! coordinates. The four squared eigenvalues `z_j = exp(i h_j)` of `U_d`
//! sit on the unit circle, and the chords between them (and between `z_j`
//! and `conj(z_k)`) carry the entangling power, gate typicality and
//! operator linear entropy of the gate. For perfect entanglers the
//! simplices of the `z_j` that contain the origin yield pairs of product
//! states that `U_d` maps to maximally entangled states.
//!
//! Conventions used throughout the crate:
//!
//! * two-qubit basis order `|00>, |01>, |10>, |11>` with qubit A as the
//!   slow index;
//! * eigenvalue and magic-basis indices are zero-based in code
//!   (`0..4` stands for `1..4` in the usual labelling); reports print
//!   them one-based;
//! * `U_d(c) = exp(i/2 · Σ c_j σ_j⊗σ_j)`.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod measures;
pub mod numerics;
pub mod oracle;
pub mod regions;
pub mod states;

pub use cartan::{CartanCoord, EigenPhases, SquaredEigenvalues};
pub use error::{Error, Result};
pub use measures::{ChordSet, NonlocalMeasures};
pub use regions::{RegionKind, RegionLabel, ZeroSimplexReport};
pub use states::{MagicState, ProductStatePair};

/// Default tolerance for plane, face and special-class membership.
pub const DEFAULT_TOL: f64 = 1e-9;

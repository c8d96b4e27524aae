//! Tensor product decompositions and the verification engines built on them.
//!
//! * [`theta`]: `Θ` on quantum LS paths.
//! * [`xi`]: `Ξ` on semi-infinite LS paths.
//! * [`chain`]: `ι(η, w)` and `ζ(η, w)`.
//! * [`similarity`]: `Σ_N` and `Σ'_N`.
//! * [`verify`] and [`lemmas`]: exhaustive checks producing [`crate::report::Report`]s.

pub mod chain;
pub mod lemmas;
pub mod sample;
pub mod similarity;
pub mod theta;
pub mod verify;
pub mod xi;

pub use chain::{iota_zeta, lift_chain, IotaZeta};
pub use theta::ThetaMap;
pub use xi::{XiMap, XiStrategy, DEFAULT_DEPTH};

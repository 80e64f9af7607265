//! Leading-order vacuum-excitation and spontaneous-emission probabilities
//! for a finite-size superconducting qubit coupled to an infinite 1+1D
//! transmission-line continuum, with a soft UV cutoff on the mode expansion
//! and finite-time cosine-trapezoid switching of the interaction.
//!
//! The pipeline: [`formfactor`] evaluates the qubit's smearing transform and
//! the cutoff weight, [`switching`] supplies the spectral kernel of the
//! switching envelope, and [`response`] integrates their product over modes
//! with oscillation-aware adaptive quadrature and certified tail truncation.
//! [`oracle`] provides brute-force numeric references that gate every
//! closed form used on that path, [`sweep`] produces the model-comparison
//! datasets (relative differences across shapes, cutoff models, sizes,
//! scales, and switching times), and [`verify`] bundles the cross-checks.
//!
//! Everything works in natural units with the qubit gap as the reference
//! scale; [`units`] documents the laboratory conversions.
//!
//! With the default `parallel` feature, sweeps fan grid points out over a
//! rayon pool; the sequential fallback produces byte-identical output.

pub mod error;
pub mod formfactor;
mod math;
pub mod oracle;
pub mod params;
pub mod quad;
pub mod response;
pub mod sweep;
pub mod switching;
pub mod units;
pub mod verify;

pub use error::Error;
pub use params::{
    validate, Bundle, CutoffModel, CutoffSpec, ProbabilityResult, Process, QubitConfig,
    ScaleDefaults, SmearingShape, SmearingSpec, SwitchingProfile,
};
pub use response::{
    coupling_from_spin_boson, transition_probability, QuadratureSettings,
};

/// Crate version, embedded in manifests and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

//! Conversions between natural units (Omega_0 = 1, hbar = c = 1) and
//! laboratory units.
//!
//! The reference gap is Omega_0 = 10 GHz. Whether that figure denotes an
//! ordinary or an angular frequency changes the length conversion:
//!
//! * ordinary (f = 10 GHz, the convention used here): the natural length
//!   unit is c / f = 3.0 cm, so a 10 um qubit measures about 3.3e-4 in
//!   units of 1/Omega_0 - consistent with the shipped sigma0 = 1e-4 scale;
//! * angular (omega = 2*pi*10 GHz): the natural length unit shrinks by
//!   2*pi to 4.8 mm and a 10 um qubit would measure about 2.1e-3.
//!
//! The core math is unit-free either way; only these boundary helpers care.
//! Each conversion is a single IEEE multiplication or division, so a
//! round-trip reproduces the input up to at most one ulp.

/// Reference gap in GHz (ordinary frequency).
pub const OMEGA0_GHZ: f64 = 10.0;

/// Reference gap in Hz.
pub const OMEGA0_HZ: f64 = 1.0e10;

/// Speed of light in m/s (exact by definition).
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Natural length unit c / Omega_0 in meters.
pub const NATURAL_LENGTH_M: f64 = SPEED_OF_LIGHT_M_PER_S / OMEGA0_HZ;

/// Frequency in GHz -> units of Omega_0.
pub fn frequency_from_ghz(f_ghz: f64) -> f64 {
    f_ghz / OMEGA0_GHZ
}

/// Frequency in units of Omega_0 -> GHz.
pub fn frequency_to_ghz(f_natural: f64) -> f64 {
    f_natural * OMEGA0_GHZ
}

/// Length in micrometers -> units of 1/Omega_0.
pub fn length_from_um(x_um: f64) -> f64 {
    x_um * 1.0e-6 / NATURAL_LENGTH_M
}

/// Length in units of 1/Omega_0 -> micrometers.
pub fn length_to_um(x_natural: f64) -> f64 {
    x_natural * NATURAL_LENGTH_M * 1.0e6
}

/// Reference gap in 1/ns: exactly 10 natural time units per nanosecond.
pub const OMEGA0_PER_NS: f64 = 10.0;

/// Time in nanoseconds -> units of 1/Omega_0.
pub fn time_from_ns(t_ns: f64) -> f64 {
    t_ns * OMEGA0_PER_NS
}

/// Time in units of 1/Omega_0 -> nanoseconds.
pub fn time_to_ns(t_natural: f64) -> f64 {
    t_natural / OMEGA0_PER_NS
}

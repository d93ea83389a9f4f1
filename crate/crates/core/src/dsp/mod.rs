//! Signal-processing primitives shared by preprocessing and feature
//! extraction: Welch spectral estimation and zero-phase recursive filtering.

pub mod butter;
pub mod welch;

pub use butter::{bandpass_sections, filtfilt, lowpass_sections, Biquad};
pub use welch::{welch_psd, Psd, WelchConfig};

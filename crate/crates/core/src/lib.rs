//! Exact spectra of isolated hypersurface singularities and the polar degree
//! of projective hypersurfaces with isolated singular points.
//!
//! The crate covers
//!
//! * spectra as elements of `Z[Q]` ([`spectrum`]),
//! * closed-form spectra of the A/D/E/J catalog and of Fermat germs ([`catalog`]),
//! * polar degrees of singularity configurations ([`polar`]),
//! * semicontinuity of the spectrum against the Fermat germ ([`semicontinuity`]),
//! * exhaustive configuration searches ([`search`]) and the finiteness bounds
//!   on dimension and degree ([`bounds`]).
//!
//! The arithmetic is generic over the integer type carrying spectral numbers
//! ([`SpectralInt`]); the aliases below fix it to `BigInt`.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod huh_lists;
pub mod polar;
pub mod scalar;
pub mod search;
pub mod semicontinuity;
pub mod spectrum;

pub use num_bigint::BigInt;

pub use catalog::{fermat_spectrum, spectrum_from_weights, Family, GermClass, GermKind};
pub use error::{Error, Result};
pub use polar::Configuration;
pub use scalar::SpectralInt;
pub use spectrum::WindowKind;

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::Ratio<BigInt>;

/// Spectrum over arbitrary-precision rationals.
pub type Spectrum = spectrum::Spectrum<BigInt>;

/// Window end point over arbitrary-precision rationals.
pub type Bound = spectrum::Bound<BigInt>;

/// Spectrum over `i64` fractions, for callers that know denominators stay small.
pub type SmallSpectrum = spectrum::Spectrum<i64>;

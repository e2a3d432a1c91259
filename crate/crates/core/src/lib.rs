//! Tangent-space computations for universal Teichmüller space.
//!
//! A tangent direction is given by a Beltrami coefficient `mu` on the unit
//! disc. This crate computes its two classical faces — the Fourier
//! coefficients of the induced Zygmund boundary vector field and the first
//! variations of the normalized schlicht power-series coefficients — and
//! verifies the identities tying them together: the coefficient duality
//! between the two models, the Hilbert-transform realization of the complex
//! structure, the conformal-welding derivative, the Weil–Petersson pairing,
//! the first-order period-matrix variation, and the Ahlfors–Weill route
//! through solutions of `v'' = phi v`.
//!
//! Core types are generic over the coefficient scalar (see [`scalar`]); the
//! series algebra also runs over `BigRational`, so the route comparisons
//! that are exact identities can be checked in exact arithmetic. The
//! `*64` aliases below fix `f64` for ordinary numerical work.

pub mod ahlfors_weill;
pub mod beltrami;
pub mod error;
pub mod example_family;
pub mod laurent;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod structures;
pub mod tol;
pub mod variation;
pub mod zygmund;

pub use error::{Error, Result};
pub use scalar::{RealScalar, Scalar};

/// Complex double.
pub type C64 = num_complex::Complex<f64>;
/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Complex number over the exact rational scalar.
pub type CRational = num_complex::Complex<Rational>;

pub type FourierField64 = series::FourierField<f64>;
pub type SchlichtVariation64 = series::SchlichtVariation<f64>;
pub type PolarGrid64 = quadrature::PolarGrid<f64>;
pub type BeltramiSpec64 = beltrami::BeltramiSpec<f64>;
pub type QuadraticDifferential64 = beltrami::QuadraticDifferential<f64>;

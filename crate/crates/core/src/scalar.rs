//! Scalar abstractions: the coefficient field everything is generic over.
//!
//! Two levels. [`Scalar`] is the algebraic layer (complex arithmetic,
//! conjugation, exact comparison) and admits both floating-point types and
//! `BigRational`, so the series identities can be checked in exact rational
//! arithmetic. [`RealScalar`] adds the floating-point operations needed for
//! quadrature, sampling and transcendental evaluation; only `f32`/`f64`
//! qualify.

use std::fmt::Debug;
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive};

/// Coefficient scalar for the series algebra.
///
/// Implemented by `f32`, `f64` and `num_rational::BigRational`.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + Signed + FromPrimitive + ToPrimitive + PartialEq + Debug + 'static
{
    /// Converts a small integer constant (truncation orders, `k^3 - k`
    /// weights and the like). Panics only if the scalar type cannot hold
    /// the integer, which no supported type does for the ranges we use.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer constant not representable in scalar type")
    }

    /// Best-effort `f64` view, used for residual reporting and tolerance
    /// checks; exact scalars round.
    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Num
        + Clone
        + Neg<Output = T>
        + Signed
        + FromPrimitive
        + ToPrimitive
        + PartialEq
        + Debug
        + 'static
{
}

/// Floating-point scalar: everything in [`Scalar`] plus `Float` and the
/// usual constants. Satisfied by `f32` and `f64`.
pub trait RealScalar: Scalar + Float + FloatConst {}

impl<T: Scalar + Float + FloatConst> RealScalar for T {}

/// The imaginary unit over any scalar.
pub fn imag_unit<S: Scalar>() -> Complex<S> {
    Complex::new(S::zero(), S::one())
}

/// A real integer constant as a complex scalar.
pub fn c_int<S: Scalar>(n: i64) -> Complex<S> {
    Complex::new(S::from_int(n), S::zero())
}

/// Magnitude of a complex value as `f64`, for defect reporting. Uses
/// `|re| + |im|` (the 1-norm) so that it stays exact for rational scalars.
pub fn abs1_f64<S: Scalar>(z: &Complex<S>) -> f64 {
    z.re.abs().approx_f64() + z.im.abs().approx_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn rational_is_a_scalar() {
        let half = BigRational::from_int(1) / BigRational::from_int(2);
        assert_eq!(half.approx_f64(), 0.5);
        let z = Complex::new(half.clone(), BigRational::from_int(0));
        assert_eq!((z.clone() + z).re, BigRational::from_int(1));
    }

    #[test]
    fn imag_unit_squares_to_minus_one() {
        let i = imag_unit::<f64>();
        assert_eq!(i * i, c_int(-1));
        let i = imag_unit::<BigRational>();
        assert_eq!(i.clone() * i, c_int(-1));
    }
}

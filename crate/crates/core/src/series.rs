//! Truncated-series types: boundary Fourier fields, schlicht coefficient
//! variations, and the Möbius (sl2) normalization.
//!
//! A real vector field `u(e^{i theta}) d/dtheta` on the circle is stored by
//! its Fourier coefficients `a_k`, `|k| <= K`, with the reality constraint
//! `a_{-k} = conj(a_k)` enforced structurally: mutation goes through
//! [`FourierField::set_mode`], which writes conjugate pairs.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{abs1_f64, RealScalar, Scalar};
use crate::tol;

/// Truncated Fourier coefficients of a real boundary vector field.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierField<S: Scalar> {
    order: usize,
    /// Dense coefficients, index `k + order` for `k` in `[-order, order]`.
    coeffs: Vec<Complex<S>>,
}

impl<S: Scalar> FourierField<S> {
    /// The zero field at truncation `order`.
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![Complex::new(S::zero(), S::zero()); 2 * order + 1],
        }
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient `a_k`; zero outside the stored range.
    pub fn coeff(&self, k: isize) -> Complex<S> {
        let order = self.order as isize;
        if k.abs() > order {
            Complex::new(S::zero(), S::zero())
        } else {
            self.coeffs[(k + order) as usize].clone()
        }
    }

    /// Sets the conjugate pair `a_k = value`, `a_{-k} = conj(value)`.
    /// For `k = 0` the imaginary part is discarded (the mean of a real
    /// field is real). Panics if `k > order`.
    pub fn set_mode(&mut self, k: usize, value: Complex<S>) {
        assert!(k <= self.order, "mode {k} beyond truncation {}", self.order);
        if k == 0 {
            self.coeffs[self.order] = Complex::new(value.re, S::zero());
        } else {
            self.coeffs[self.order + k] = value.clone();
            self.coeffs[self.order - k] = value.conj();
        }
    }

    /// Builds a field from `(k, a_k)` pairs with `k >= 0`; conjugate modes
    /// are filled in automatically.
    pub fn from_modes<I>(order: usize, modes: I) -> Self
    where
        I: IntoIterator<Item = (usize, Complex<S>)>,
    {
        let mut f = Self::zero(order);
        for (k, v) in modes {
            f.set_mode(k, v);
        }
        f
    }

    /// Builds a field from a full coefficient vector (index `k + order`)
    /// without checking the reality constraint. Intended for ingesting
    /// external data; [`FourierField::reality_defect`] reports violations.
    pub fn from_raw_coeffs(order: usize, coeffs: Vec<Complex<S>>) -> Result<Self> {
        if coeffs.len() != 2 * order + 1 {
            return Err(Error::OutOfRange {
                what: format!(
                    "coefficient vector length {} does not match 2*{order}+1",
                    coeffs.len()
                ),
            });
        }
        Ok(Self { order, coeffs })
    }

    /// Max over `k` of `|a_{-k} - conj(a_k)|`, as `f64`.
    pub fn reality_defect(&self) -> f64 {
        (0..=self.order as isize)
            .map(|k| abs1_f64(&(self.coeff(-k) - self.coeff(k).conj())))
            .fold(0.0, f64::max)
    }

    /// Copy with the Möbius modes `a_{-1}, a_0, a_1` set to zero. All
    /// `|k| >= 2` coefficients are untouched; idempotent.
    pub fn sl2_normalize(&self) -> Self {
        let mut out = self.clone();
        let zero = Complex::new(S::zero(), S::zero());
        for k in -1isize..=1 {
            out.coeffs[(k + self.order as isize) as usize] = zero.clone();
        }
        out
    }

    /// True when the Möbius modes are exactly zero.
    pub fn is_sl2_normalized(&self) -> bool {
        (-1isize..=1).all(|k| self.coeff(k).is_zero())
    }

    /// Largest coefficient magnitude (1-norm per coefficient), as `f64`.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(abs1_f64).fold(0.0, f64::max)
    }

    /// Largest coefficient difference against `other`, as `f64`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let order = self.order.max(other.order) as isize;
        (-order..=order)
            .map(|k| abs1_f64(&(self.coeff(k) - other.coeff(k))))
            .fold(0.0, f64::max)
    }

    /// Largest magnitude among modes `|k| >= 2`, as `f64`. A tangent
    /// direction is infinitesimally trivial at this truncation when this
    /// vanishes (below tolerance) for its variation field.
    pub fn max_nontrivial_coeff(&self) -> f64 {
        (2..=self.order as isize)
            .flat_map(|k| [k, -k])
            .map(|k| abs1_f64(&self.coeff(k)))
            .fold(0.0, f64::max)
    }
}

impl<S: RealScalar> FourierField<S> {
    /// Discrete Fourier extraction from samples of a real field at the
    /// uniform angles `theta_j = 2 pi j / N`.
    ///
    /// Requires `N >= 4K + 2`; the returned coefficients are
    /// `a_k = (1/N) sum_j u(theta_j) e^{-ik theta_j}`, with the reality
    /// constraint holding exactly by construction.
    pub fn from_samples(samples: &[S], order: usize) -> Result<Self> {
        let n = samples.len();
        let min = 4 * order + 2;
        if n < min {
            return Err(Error::TruncationTooSmall { n, order, min });
        }
        let nf = S::from_int(n as i64);
        let two_pi = S::PI() + S::PI();
        let mut field = Self::zero(order);
        for k in 0..=order {
            let mut acc = Complex::new(S::zero(), S::zero());
            for (j, &u) in samples.iter().enumerate() {
                let phase = -two_pi * S::from_int(k as i64) * S::from_int(j as i64) / nf;
                acc = acc + Complex::new(phase.cos(), phase.sin()).scale(u);
            }
            field.set_mode(k, acc.unscale(nf));
        }
        Ok(field)
    }

    /// Evaluates the field at angle `theta`.
    ///
    /// Errors with [`Error::InconsistentField`] if the reality constraint is
    /// violated beyond tolerance; otherwise the (real) value of
    /// `sum_k a_k e^{ik theta}` is returned.
    pub fn evaluate(&self, theta: S) -> Result<S> {
        let defect = self.reality_defect();
        if defect > tol::FIELD_REALITY {
            return Err(Error::InconsistentField { defect });
        }
        let mut acc = self.coeff(0).re;
        for k in 1..=self.order as isize {
            let phase = theta * S::from_int(k as i64);
            let e = Complex::new(phase.cos(), phase.sin());
            let term = self.coeff(k) * e;
            acc = acc + term.re + term.re; // a_k e^{ik t} + conj pair
        }
        Ok(acc)
    }

    /// Samples the field at `n` uniform angles starting from zero, with an
    /// optional phase offset.
    pub fn sample_uniform(&self, n: usize, offset: S) -> Result<Vec<S>> {
        let two_pi = S::PI() + S::PI();
        (0..n)
            .map(|j| self.evaluate(two_pi * S::from_int(j as i64) / S::from_int(n as i64) + offset))
            .collect()
    }
}

/// Truncated first variations `gamma_k = d/dt c_k(t) |_0` of normalized
/// schlicht coefficients; indices run over `2 <= k <= K` (the normalization
/// has no `c_0` or `c_1`).
#[derive(Debug, Clone, PartialEq)]
pub struct SchlichtVariation<S: Scalar> {
    order: usize,
    gamma: Vec<Complex<S>>, // index k - 2
}

impl<S: Scalar> SchlichtVariation<S> {
    /// The zero variation at truncation `order` (needs `order >= 2`).
    pub fn zero(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::TruncationOrder { order, min: 2 });
        }
        Ok(Self {
            order,
            gamma: vec![Complex::new(S::zero(), S::zero()); order - 1],
        })
    }

    /// Builds from the coefficient list for `k = 2, ..., order`.
    pub fn from_coeffs(order: usize, gamma: Vec<Complex<S>>) -> Result<Self> {
        if order < 2 {
            return Err(Error::TruncationOrder { order, min: 2 });
        }
        if gamma.len() != order - 1 {
            return Err(Error::OutOfRange {
                what: format!("expected {} coefficients, got {}", order - 1, gamma.len()),
            });
        }
        Ok(Self { order, gamma })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `gamma_k`; zero outside `[2, order]`.
    pub fn gamma(&self, k: usize) -> Complex<S> {
        if (2..=self.order).contains(&k) {
            self.gamma[k - 2].clone()
        } else {
            Complex::new(S::zero(), S::zero())
        }
    }

    /// Sets `gamma_k`; panics outside `[2, order]`.
    pub fn set_gamma(&mut self, k: usize, value: Complex<S>) {
        assert!(
            (2..=self.order).contains(&k),
            "index {k} outside [2, {}]",
            self.order
        );
        self.gamma[k - 2] = value;
    }

    /// Iterates `(k, gamma_k)` for `k = 2, ..., order`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Complex<S>)> {
        self.gamma.iter().enumerate().map(|(i, g)| (i + 2, g))
    }

    /// Largest coefficient difference against `other`, as `f64`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let hi = self.order.max(other.order);
        (2..=hi)
            .map(|k| abs1_f64(&(self.gamma(k) - other.gamma(k))))
            .fold(0.0, f64::max)
    }

    /// Largest coefficient magnitude, as `f64`.
    pub fn max_coeff(&self) -> f64 {
        self.gamma.iter().map(abs1_f64).fold(0.0, f64::max)
    }
}

/// Power-series coefficients of a schlicht function under the 0,1,infinity
/// normalization: `f(zeta) = zeta (a + b_1/zeta + b_2/zeta^2 + ...)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSchlichtCoefficients<S: Scalar> {
    /// Leading coefficient; must be nonzero.
    pub a: Complex<S>,
    /// `b_k` for `k = 1, ..., K` (index `k - 1`).
    pub b: Vec<Complex<S>>,
}

impl<S: Scalar> RawSchlichtCoefficients<S> {
    /// Renormalizes to the residue-one form: `c_k = b_k / a` for `k >= 2`
    /// (`c_0` and `c_1` are absorbed by the Möbius normalization).
    ///
    /// Errors when the leading coefficient vanishes.
    pub fn normalize(&self) -> Result<Vec<Complex<S>>> {
        if self.a.is_zero() {
            return Err(Error::DegenerateNormalization);
        }
        Ok(self
            .b
            .iter()
            .skip(1)
            .map(|bk| bk.clone() / self.a.clone())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_samples_give_zero_field() {
        let field = FourierField::<f64>::from_samples(&[0.0; 40], 8).unwrap();
        assert_eq!(field.max_coeff(), 0.0);
        assert_eq!(field.evaluate(0.7).unwrap(), 0.0);
    }

    #[test]
    fn sine_field_coefficients() {
        // u(theta) = 2 sin 2 theta = -i e^{2 i theta} + i e^{-2 i theta}
        let n = 64;
        let samples: Vec<f64> = (0..n)
            .map(|j| 2.0 * (2.0 * 2.0 * PI * j as f64 / n as f64).sin())
            .collect();
        let field = FourierField::from_samples(&samples, 8).unwrap();
        assert!((field.coeff(2) - c(0.0, -1.0)).norm() < 1e-12);
        assert!((field.coeff(-2) - c(0.0, 1.0)).norm() < 1e-12);
        for k in -8isize..=8 {
            if k.abs() != 2 {
                assert!(field.coeff(k).norm() < 1e-12, "stray mode {k}");
            }
        }
    }

    #[test]
    fn cosine_field_coefficients() {
        let n = 64;
        let samples: Vec<f64> = (0..n)
            .map(|j| (3.0 * 2.0 * PI * j as f64 / n as f64).cos())
            .collect();
        let field = FourierField::from_samples(&samples, 8).unwrap();
        assert!((field.coeff(3) - c(0.5, 0.0)).norm() < 1e-12);
        assert!((field.coeff(-3) - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn sample_count_precondition() {
        let err = FourierField::<f64>::from_samples(&[0.0; 33], 8).unwrap_err();
        assert_eq!(
            err,
            Error::TruncationTooSmall {
                n: 33,
                order: 8,
                min: 34
            }
        );
    }

    #[test]
    fn evaluate_sine_field() {
        let field = FourierField::from_modes(4, [(2usize, c(0.0, -1.0))]);
        assert_abs_diff_eq!(field.evaluate(PI / 4.0).unwrap(), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(field.evaluate(0.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn evaluate_rejects_inconsistent_field() {
        let mut coeffs = vec![c(0.0, 0.0); 5];
        coeffs[4] = c(1.0, 0.0); // a_2 = 1 with a_{-2} = 0
        let field = FourierField::from_raw_coeffs(2, coeffs).unwrap();
        assert!(matches!(
            field.evaluate(0.3),
            Err(Error::InconsistentField { .. })
        ));
    }

    #[test]
    fn sl2_normalize_kills_moebius_modes() {
        let field = FourierField::from_modes(4, [(0usize, c(5.0, 0.0))]);
        assert_eq!(field.sl2_normalize().max_coeff(), 0.0);

        let field = FourierField::from_modes(4, [(1usize, c(0.0, 1.0)), (2, c(1.0, 0.0))]);
        let norm = field.sl2_normalize();
        assert_eq!(norm.coeff(1), c(0.0, 0.0));
        assert_eq!(norm.coeff(2), c(1.0, 0.0));
        assert_eq!(norm.coeff(-2), c(1.0, 0.0));
        assert!(norm.is_sl2_normalized());
    }

    #[test]
    fn normalize_schlicht_examples() {
        let raw = RawSchlichtCoefficients {
            a: c(1.0, 0.0),
            b: vec![c(0.0, 0.0); 4],
        };
        assert!(raw.normalize().unwrap().iter().all(|v| v.is_zero()));

        let raw = RawSchlichtCoefficients {
            a: c(2.0, 0.0),
            b: vec![c(0.0, 0.0), c(4.0, 0.0)],
        };
        assert_eq!(raw.normalize().unwrap()[0], c(2.0, 0.0));

        let raw = RawSchlichtCoefficients {
            a: c(0.0, 0.0),
            b: vec![c(1.0, 0.0)],
        };
        assert_eq!(raw.normalize().unwrap_err(), Error::DegenerateNormalization);
    }

    #[test]
    fn first_order_normalization_recovers_b_dot() {
        // a(t) = 1 + t adot, b_k(t) = t bdot_k: d/dt c_k |_0 = bdot_k
        let adot = c(0.3, -0.7);
        let bdot = [c(0.5, 0.2), c(-1.0, 0.4), c(0.0, -0.9)];
        let t = 1e-6;
        let raw = RawSchlichtCoefficients {
            a: c(1.0, 0.0) + adot.scale(t),
            b: bdot.iter().map(|v| v.scale(t)).collect(),
        };
        let cks = raw.normalize().unwrap();
        for (i, ck) in cks.iter().enumerate() {
            let derivative = ck.unscale(t);
            assert!(
                (derivative - bdot[i + 1]).norm() < 1e-4,
                "k={}, got {derivative}",
                i + 2
            );
        }
    }

    proptest! {
        #[test]
        fn reality_invariant_from_samples(values in proptest::collection::vec(-10.0f64..10.0, 42)) {
            let field = FourierField::from_samples(&values, 10).unwrap();
            prop_assert!(field.reality_defect() < 1e-12);
        }

        #[test]
        fn sl2_normalize_is_idempotent(re in -5.0f64..5.0, im in -5.0f64..5.0) {
            let field = FourierField::from_modes(
                6,
                [(0usize, c(re, 0.0)), (1, c(im, re)), (3, c(re, im))],
            );
            let once = field.sl2_normalize();
            prop_assert_eq!(once.clone(), once.sl2_normalize());
        }

        #[test]
        fn trig_polynomial_round_trip(
            modes in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 5),
        ) {
            let order = 8;
            let mut field = FourierField::zero(order);
            for (k, (re, im)) in modes.iter().enumerate() {
                field.set_mode(k + 2, c(*re, *im));
            }
            let n = 4 * order + 2;
            let samples = field.sample_uniform(n, 0.0).unwrap();
            let back = FourierField::from_samples(&samples, order).unwrap();
            prop_assert!(back.max_diff(&field) < 1e-12);
        }
    }
}

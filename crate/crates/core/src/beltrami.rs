//! Beltrami coefficients on the unit disc and their reflection to the
//! exterior.
//!
//! Only the direction of a tangent vector matters here, so no bound
//! `||mu||_inf < 1` is imposed; the variation formulas are linear in `mu`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quadrature::PolarGrid;
use crate::scalar::{RealScalar, Scalar};
use crate::tol;

/// Taylor coefficients `h_0, h_1, ..., h_M` of a holomorphic quadratic
/// differential `phi` on the disc (polynomial truncation of the
/// Nehari-bounded class).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticDifferential<S: Scalar> {
    h: Vec<Complex<S>>,
}

impl<S: Scalar> QuadraticDifferential<S> {
    pub fn new(h: Vec<Complex<S>>) -> Self {
        Self { h }
    }

    pub fn zero() -> Self {
        Self { h: Vec::new() }
    }

    /// Coefficient `h_m`; zero beyond the stored degree.
    pub fn coeff(&self, m: usize) -> Complex<S> {
        self.h
            .get(m)
            .cloned()
            .unwrap_or_else(|| Complex::new(S::zero(), S::zero()))
    }

    pub fn coeffs(&self) -> &[Complex<S>] {
        &self.h
    }

    /// Degree of the highest nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.h.iter().rposition(|c| !c.is_zero())
    }

    /// Coefficient-wise scaling by a complex constant.
    pub fn scaled(&self, alpha: &Complex<S>) -> Self {
        Self {
            h: self.h.iter().map(|c| c.clone() * alpha.clone()).collect(),
        }
    }
}

impl<S: RealScalar> QuadraticDifferential<S> {
    /// Horner evaluation of `phi(z)`.
    pub fn evaluate(&self, z: Complex<S>) -> Complex<S> {
        let mut acc = Complex::new(S::zero(), S::zero());
        for c in self.h.iter().rev() {
            acc = acc * z + c.clone();
        }
        acc
    }
}

/// Beltrami coefficient values sampled on a polar quadrature grid.
/// No interpolation: values exist only at the grid nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledMu<T: RealScalar> {
    radii: Vec<T>,
    ntheta: usize,
    /// Row-major `i * ntheta + j`.
    values: Vec<Complex<T>>,
}

impl<T: RealScalar> SampledMu<T> {
    /// Wraps node values aligned with `grid` (row-major, radial-major).
    pub fn on_grid(grid: &PolarGrid<T>, values: Vec<Complex<T>>) -> Result<Self> {
        let expect = grid.nr() * grid.ntheta();
        if values.len() != expect {
            return Err(Error::OutOfRange {
                what: format!("expected {expect} node values, got {}", values.len()),
            });
        }
        Ok(Self {
            radii: grid.radii().to_vec(),
            ntheta: grid.ntheta(),
            values,
        })
    }

    /// Samples a closed-form coefficient onto the grid.
    pub fn from_fn<F>(grid: &PolarGrid<T>, mut f: F) -> Self
    where
        F: FnMut(Complex<T>) -> Complex<T>,
    {
        let values = grid.nodes().map(|n| f(n.z)).collect();
        Self {
            radii: grid.radii().to_vec(),
            ntheta: grid.ntheta(),
            values,
        }
    }

    pub fn nr(&self) -> usize {
        self.radii.len()
    }

    pub fn ntheta(&self) -> usize {
        self.ntheta
    }

    fn value(&self, i: usize, j: usize) -> Complex<T> {
        self.values[i * self.ntheta + j].clone()
    }

    /// Node lookup by position; errors off-node.
    fn lookup(&self, z: Complex<T>) -> Result<Complex<T>> {
        let r = z.norm();
        let two_pi = T::PI() + T::PI();
        let mut theta = z.im.atan2(z.re);
        if theta < T::zero() {
            theta = theta + two_pi;
        }
        let tol = T::from(tol::GRID_NODE_MATCH).unwrap();
        let i = match self
            .radii
            .iter()
            .position(|&ri| (ri - r).abs() <= tol)
        {
            Some(i) => i,
            None => {
                return Err(Error::OffGridSample {
                    re: z.re.approx_f64(),
                    im: z.im.approx_f64(),
                })
            }
        };
        let step = two_pi / T::from_int(self.ntheta as i64);
        let jf = (theta / step).round();
        let j = (jf.to_usize().unwrap_or(0)) % self.ntheta;
        let diff = (theta - jf * step).abs();
        if diff > tol {
            return Err(Error::OffGridSample {
                re: z.re.approx_f64(),
                im: z.im.approx_f64(),
            });
        }
        Ok(self.value(i, j))
    }
}

/// A Beltrami coefficient `mu` on the open unit disc.
#[derive(Debug, Clone, PartialEq)]
pub enum BeltramiSpec<T: RealScalar> {
    /// Identically zero.
    Zero,
    /// Harmonic (Bers) form `mu(z) = conj(phi(z)) (1 - |z|^2)^2`.
    Harmonic(QuadraticDifferential<T>),
    /// The closed-form family `mu(z) = -n z^2 conj(z)^{n-1}`, `n >= 3`.
    ExampleFamily { n: u32 },
    /// A single monomial `mu(z) = c z^p conj(z)^q`.
    Monomial { c: Complex<T>, p: u32, q: u32 },
    /// Externally sampled values aligned to a quadrature grid.
    Sampled(SampledMu<T>),
}

impl<T: RealScalar> BeltramiSpec<T> {
    /// The example family; requires `n >= 3`.
    pub fn example_family(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange {
                what: format!("example family needs n >= 3, got {n}"),
            });
        }
        Ok(Self::ExampleFamily { n })
    }

    /// Pointwise value `mu(z)` for `|z| < 1`.
    ///
    /// The sampled variant only answers at its grid nodes.
    pub fn evaluate(&self, z: Complex<T>) -> Result<Complex<T>> {
        if z.norm_sqr() >= T::one() {
            return Err(Error::OutsideDomain {
                re: z.re.approx_f64(),
                im: z.im.approx_f64(),
            });
        }
        Ok(self.value_unchecked(z)?)
    }

    /// Evaluation without the domain check; used by quadrature loops whose
    /// nodes are interior by construction.
    fn value_unchecked(&self, z: Complex<T>) -> Result<Complex<T>> {
        Ok(match self {
            Self::Zero => Complex::new(T::zero(), T::zero()),
            Self::Harmonic(phi) => {
                let factor = T::one() - z.norm_sqr();
                phi.evaluate(z).conj().scale(factor * factor)
            }
            Self::ExampleFamily { n } => {
                let zb = z.conj();
                (z * z * zb.powu(n - 1)).scale(-T::from_int(i64::from(*n)))
            }
            Self::Monomial { c, p, q } => c.clone() * z.powu(*p) * z.conj().powu(*q),
            Self::Sampled(s) => s.lookup(z)?,
        })
    }

    /// Value at a known grid node; the fast path for quadrature, which for
    /// sampled data indexes directly instead of searching.
    pub(crate) fn value_at_node(&self, i: usize, j: usize, z: Complex<T>) -> Result<Complex<T>> {
        match self {
            Self::Sampled(s) => {
                if i < s.nr() && j < s.ntheta() {
                    Ok(s.value(i, j))
                } else {
                    Err(Error::OffGridSample {
                        re: z.re.approx_f64(),
                        im: z.im.approx_f64(),
                    })
                }
            }
            _ => self.value_unchecked(z),
        }
    }

    /// The reflected coefficient on the exterior,
    /// `mu~(w) = conj(mu(1/conj(w))) * z^2 / conj(z)^2` with `z = 1/conj(w)`.
    pub fn reflect(&self, w: Complex<T>) -> Result<Complex<T>> {
        if w.norm_sqr() <= T::one() {
            return Err(Error::OutsideDomain {
                re: w.re.approx_f64(),
                im: w.im.approx_f64(),
            });
        }
        let z = w.conj().inv();
        let ratio = (z / z.conj()).powu(2);
        Ok(self.evaluate(z)?.conj() * ratio)
    }

    /// The direction `alpha * mu` as a spec. The example family becomes a
    /// monomial; harmonic forms stay harmonic with `phi` scaled by
    /// `conj(alpha)`.
    pub fn scaled(&self, alpha: Complex<T>) -> Self {
        match self {
            Self::Zero => Self::Zero,
            Self::Harmonic(phi) => Self::Harmonic(phi.scaled(&alpha.conj())),
            Self::ExampleFamily { n } => Self::Monomial {
                c: alpha.scale(-T::from_int(i64::from(*n))),
                p: 2,
                q: *n - 1,
            },
            Self::Monomial { c, p, q } => Self::Monomial {
                c: c.clone() * alpha,
                p: *p,
                q: *q,
            },
            Self::Sampled(s) => Self::Sampled(SampledMu {
                radii: s.radii.clone(),
                ntheta: s.ntheta,
                values: s.values.iter().map(|v| v.clone() * alpha).collect(),
            }),
        }
    }

    /// The direction `i * mu`.
    pub fn times_i(&self) -> Self {
        self.scaled(Complex::new(T::zero(), T::one()))
    }

    /// Short provenance label for reports.
    pub fn label(&self) -> String {
        match self {
            Self::Zero => "zero".into(),
            Self::Harmonic(phi) => format!("harmonic(deg {})", phi.degree().map_or(-1, |d| d as i64)),
            Self::ExampleFamily { n } => format!("example(n={n})"),
            Self::Monomial { c, p, q } => {
                format!("monomial(c={}+{}i, p={p}, q={q})", c.re.approx_f64(), c.im.approx_f64())
            }
            Self::Sampled(s) => format!("sampled({}x{})", s.nr(), s.ntheta()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::monomial_disc_integral;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_everywhere() {
        let mu = BeltramiSpec::<f64>::Zero;
        assert_eq!(mu.evaluate(c(0.3, 0.1)).unwrap(), c(0.0, 0.0));
        assert_eq!(mu.reflect(c(2.0, 1.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn example_family_pointwise() {
        // n = 3 at z = 1/2: -3 (1/4)(1/4) = -3/16
        let mu = BeltramiSpec::<f64>::example_family(3).unwrap();
        let v = mu.evaluate(c(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(v.re, -3.0 / 16.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn example_family_needs_n_at_least_three() {
        assert!(BeltramiSpec::<f64>::example_family(2).is_err());
    }

    #[test]
    fn harmonic_center_value() {
        let phi = QuadraticDifferential::new(vec![c(1.0, 0.0)]);
        let mu = BeltramiSpec::Harmonic(phi);
        assert_eq!(mu.evaluate(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn domain_is_the_open_disc() {
        let mu = BeltramiSpec::<f64>::example_family(3).unwrap();
        assert!(matches!(
            mu.evaluate(c(1.0, 0.0)),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(matches!(
            mu.reflect(c(0.5, 0.0)),
            Err(Error::OutsideDomain { .. })
        ));
    }

    #[test]
    fn reflection_matches_defining_relation() {
        // mu~(w) at w = 2 against conj(mu(1/2)) z^2/conj(z)^2 with z = 1/2
        let mu = BeltramiSpec::<f64>::example_family(3).unwrap();
        let got = mu.reflect(c(2.0, 0.0)).unwrap();
        let z = c(0.5, 0.0);
        let want = mu.evaluate(z).unwrap().conj() * (z / z.conj()).powu(2);
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn harmonic_values_decay_at_the_boundary() {
        let phi = QuadraticDifferential::new(vec![c(1.0, 0.5), c(-0.3, 0.0)]);
        let mu = BeltramiSpec::Harmonic(phi);
        let mut last = f64::INFINITY;
        for k in 1..8 {
            let r = 1.0 - 0.5f64.powi(k);
            let v = mu.evaluate(c(r, 0.0)).unwrap().norm();
            assert!(v < last || v < 1e-12);
            last = v;
        }
        assert!(last < 1e-3);
    }

    #[test]
    fn sampled_round_trip_and_off_node() {
        let grid = PolarGrid::<f64>::new(6, 10).unwrap();
        let family = BeltramiSpec::<f64>::example_family(4).unwrap();
        let sampled = BeltramiSpec::Sampled(SampledMu::from_fn(&grid, |z| {
            family.evaluate(z).unwrap()
        }));
        for node in grid.nodes() {
            let a = sampled.evaluate(node.z).unwrap();
            let b = family.evaluate(node.z).unwrap();
            assert!((a - b).norm() < 1e-15);
        }
        assert!(matches!(
            sampled.evaluate(c(0.123, 0.456)),
            Err(Error::OffGridSample { .. })
        ));
    }

    #[test]
    fn monomial_moments_hit_the_closed_form() {
        // integrate mu * z^{k-2} for mu = c z^p conj(z)^q
        let grid = PolarGrid::<f64>::new(32, 128).unwrap();
        let cc = c(0.7, -0.2);
        let mu = BeltramiSpec::Monomial { c: cc, p: 1, q: 3 };
        for k in 2u32..=6 {
            let got = grid
                .integrate_disc(|z| mu.evaluate(z).unwrap() * z.powu(k - 2))
                .unwrap();
            let want = cc * monomial_disc_integral::<f64>(1 + k - 2, 3);
            assert!((got - want).norm() < 1e-12, "k={k}");
        }
    }

    proptest! {
        #[test]
        fn reflection_preserves_modulus(re in -0.6f64..0.6, im in -0.6f64..0.6) {
            prop_assume!((re * re + im * im) > 1e-4);
            let w = c(re, im).inv(); // |w| > 1
            let mu = BeltramiSpec::<f64>::example_family(5).unwrap();
            let z = w.conj().inv();
            let lhs = mu.reflect(w).unwrap().norm();
            let rhs = mu.evaluate(z).unwrap().norm();
            prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + rhs));
        }
    }
}

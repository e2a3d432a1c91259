//! Numerical integration over the open unit disc in polar coordinates.
//!
//! The rule is a tensor product: Gauss–Legendre in the radius (mapped to
//! `(0, 1)`, area Jacobian `r` folded into the weights) and the uniform
//! trapezoid rule in the angle, which is spectrally accurate for the
//! periodic factor. It integrates `z^p conj(z)^q` exactly (to rounding)
//! whenever `p + q + 1 <= 2*nr - 1` and `|p - q| < ntheta`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{RealScalar, Scalar};

/// A quadrature node with its weight.
#[derive(Debug, Clone, Copy)]
pub struct GridNode<T> {
    /// Radial index.
    pub i: usize,
    /// Angular index.
    pub j: usize,
    /// The node `r_i * exp(i theta_j)`.
    pub z: Complex<T>,
    /// Area weight; weights sum to pi.
    pub w: T,
}

/// Polar quadrature grid on the unit disc.
#[derive(Debug, Clone)]
pub struct PolarGrid<T: RealScalar> {
    radii: Vec<T>,
    radial_weights: Vec<T>, // Gauss weight times r (Jacobian)
    angles: Vec<T>,
    unit_points: Vec<Complex<T>>, // exp(i theta_j)
    angular_weight: T,
}

impl<T: RealScalar> PolarGrid<T> {
    /// Builds an `nr x ntheta` grid. Both counts must be positive.
    pub fn new(nr: usize, ntheta: usize) -> Result<Self> {
        if nr == 0 || ntheta == 0 {
            return Err(Error::OutOfRange {
                what: format!("grid sizes must be positive, got nr={nr}, ntheta={ntheta}"),
            });
        }
        let (nodes, weights) = gauss_legendre::<T>(nr);
        let half = T::from_int(2).recip();
        let radii: Vec<T> = nodes.iter().map(|&x| (x + T::one()) * half).collect();
        let radial_weights: Vec<T> = weights
            .iter()
            .zip(&radii)
            .map(|(&w, &r)| w * half * r)
            .collect();
        let two_pi = T::PI() + T::PI();
        let step = two_pi / T::from_int(ntheta as i64);
        let angles: Vec<T> = (0..ntheta).map(|j| step * T::from_int(j as i64)).collect();
        let unit_points = angles
            .iter()
            .map(|&t| Complex::new(t.cos(), t.sin()))
            .collect();
        Ok(Self {
            radii,
            radial_weights,
            angles,
            unit_points,
            angular_weight: step,
        })
    }

    pub fn nr(&self) -> usize {
        self.radii.len()
    }

    pub fn ntheta(&self) -> usize {
        self.angles.len()
    }

    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    pub fn angles(&self) -> &[T] {
        &self.angles
    }

    /// The node `r_i exp(i theta_j)`.
    pub fn node(&self, i: usize, j: usize) -> Complex<T> {
        self.unit_points[j].scale(self.radii[i])
    }

    /// The area weight of node `(i, j)`.
    pub fn weight(&self, i: usize, j: usize) -> T {
        let _ = j;
        self.radial_weights[i] * self.angular_weight
    }

    /// All nodes with weights, radial-major.
    pub fn nodes(&self) -> impl Iterator<Item = GridNode<T>> + '_ {
        (0..self.nr()).flat_map(move |i| {
            (0..self.ntheta()).map(move |j| GridNode {
                i,
                j,
                z: self.node(i, j),
                w: self.weight(i, j),
            })
        })
    }

    /// Integrates `f` over the unit disc with respect to area measure.
    ///
    /// Fails if `f` is not finite at some node, identifying the node.
    pub fn integrate_disc<F>(&self, mut f: F) -> Result<Complex<T>>
    where
        F: FnMut(Complex<T>) -> Complex<T>,
    {
        let mut acc = Complex::new(T::zero(), T::zero());
        for node in self.nodes() {
            let v = f(node.z);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::IntegrationDomain {
                    i: node.i,
                    j: node.j,
                    re: node.z.re.approx_f64(),
                    im: node.z.im.approx_f64(),
                });
            }
            acc = acc + v.scale(node.w);
        }
        Ok(acc)
    }

    /// Sum of all weights; converges to pi.
    pub fn total_weight(&self) -> T {
        let radial: T = self
            .radial_weights
            .iter()
            .fold(T::zero(), |acc, &w| acc + w);
        radial * self.angular_weight * T::from_int(self.ntheta() as i64)
    }
}

/// Closed form of the disc integral of `z^p conj(z)^q`:
/// `pi / (p + 1)` when `p == q`, zero otherwise.
pub fn monomial_disc_integral<T: RealScalar>(p: u32, q: u32) -> Complex<T> {
    if p == q {
        Complex::new(T::PI() / T::from_int(i64::from(p) + 1), T::zero())
    } else {
        Complex::new(T::zero(), T::zero())
    }
}

/// Gauss–Legendre nodes and weights on `(-1, 1)`, by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre<T: RealScalar>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1, "rule needs at least one node");
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::from_int(n as i64);
    let quarter = T::from_int(4).recip();
    let half = T::from_int(2).recip();
    for i in 0..n {
        // Tricomi-style initial guess, then Newton.
        let mut x = (T::PI() * (T::from_int(i as i64 + 1) - quarter) / (nf + half)).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= T::epsilon() * x.abs().max(T::one()) {
                let (_, d) = legendre_with_derivative(n, x);
                dp = d;
                break;
            }
        }
        nodes[i] = -x; // ascending order
        weights[i] = T::from_int(2) / ((T::one() - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// `P_n(x)` and `P_n'(x)` via the three-term recurrence.
fn legendre_with_derivative<T: RealScalar>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, T::zero());
    }
    for k in 2..=n {
        let kf = T::from_int(k as i64);
        let p2 = ((T::from_int(2 * k as i64 - 1) * x * p1) - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let d = T::from_int(n as i64) * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

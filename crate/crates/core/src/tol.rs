//! Named tolerances and artifact constants.
//!
//! Every threshold asserted by the verification suites is defined here,
//! once, so that tests, library guards and the CLI agree on the numbers.

/// Identities backed by disc quadrature on the default grid.
///
/// The integrands are polynomial in `z`, `conj(z)`; the polar rule is exact
/// for them and the residual is pure accumulation of rounding over ~10^4
/// nodes, observed well below 1e-10. 1e-8 leaves margin.
pub const QUADRATURE_IDENTITY: f64 = 1e-8;

/// Agreement of the quadrature rule with the closed-form monomial integrals.
pub const QUADRATURE_ORACLE: f64 = 1e-10;

/// Identities that are exact coefficient algebra; only rounding remains.
pub const ALGEBRAIC: f64 = 1e-12;

/// Reality guard when evaluating a Fourier field pointwise. Fields built by
/// this crate satisfy the constraint to ~1e-16; violating it by more than
/// this means the field was assembled inconsistently.
pub const FIELD_REALITY: f64 = 1e-9;

/// Exterior evaluation guard: pointwise first variations are only computed
/// for `|zeta| > 1 + EXTERIOR_GUARD`. Artifact constant, not a theorem.
pub const EXTERIOR_GUARD: f64 = 1e-3;

/// Boundary-sampled cross-validation of the two-integral variation formula
/// against the area-integral coefficients. Relaxed: the Cauchy-type kernel
/// degrades plain polar quadrature near the circle.
pub const BOUNDARY_CROSS_CHECK: f64 = 1e-3;

/// Node-vs-pole coincidence guard for integrands with poles at 0 and 1.
pub const SINGULAR_NODE: f64 = 1e-14;

/// Complex-dilatation finite-difference check: step and accepted defect.
/// With central differences the truncation error is O(h^2) = 1e-10 and the
/// cancellation error O(eps/h) = 1e-11; 1e-4 is generous.
pub const DILATATION_STEP: f64 = 1e-5;
pub const DILATATION: f64 = 1e-4;

/// Interior margin required by the dilatation check.
pub const DILATATION_MARGIN: f64 = 1e-2;

/// Branch agreement of the closed-form example map on the unit circle.
pub const BRANCH_AGREEMENT: f64 = 1e-12;

/// Relative stability demanded of the Zygmund-quotient estimate under
/// grid-density doubling.
pub const REFINEMENT_STABILITY: f64 = 0.05;

/// Tolerance for matching a sampled point to a grid node (radius and angle).
pub const GRID_NODE_MATCH: f64 = 1e-12;

/// Default truncation order for cross-model comparisons.
pub const DEFAULT_ORDER: usize = 32;

/// Default quadrature grid (radial x angular): exact for every monomial
/// appearing up to the default truncation order, with ample margin.
pub const DEFAULT_NR: usize = 64;
pub const DEFAULT_NTHETA: usize = 256;

/// Default half-width of the line grid used by the Zygmund estimator.
pub const LINE_HALF_WIDTH: f64 = 50.0;

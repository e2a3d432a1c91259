//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Too few samples for the requested truncation order.
    #[error("{n} samples cannot resolve truncation order {order}; need at least {min}")]
    TruncationTooSmall { n: usize, order: usize, min: usize },

    /// Truncation order outside the operation's admissible range.
    #[error("truncation order {order} out of range (minimum {min})")]
    TruncationOrder { order: usize, min: usize },

    /// A Fourier field failed the reality constraint `a_{-k} = conj(a_k)`.
    #[error("field is not real-valued: max |a_-k - conj(a_k)| = {defect:.3e}")]
    InconsistentField { defect: f64 },

    /// Vanishing leading coefficient in a schlicht normalization.
    #[error("degenerate normalization: leading coefficient is zero")]
    DegenerateNormalization,

    /// Evaluation point outside the variant's domain of definition.
    #[error("point ({re}, {im}) outside the domain of definition")]
    OutsideDomain { re: f64, im: f64 },

    /// A sampled coefficient was queried away from its grid nodes.
    #[error("({re}, {im}) is not a grid node; sampled coefficients do not interpolate")]
    OffGridSample { re: f64, im: f64 },

    /// The integrand was not finite at a quadrature node.
    #[error("integrand not finite at node ({i}, {j}) = ({re}, {im})")]
    IntegrationDomain { i: usize, j: usize, re: f64, im: f64 },

    /// A quadrature node coincides with an integrand pole.
    #[error("quadrature node within {tol:e} of the pole at ({re}, {im})")]
    SingularNode { re: f64, im: f64, tol: f64 },

    /// Exterior evaluation point inside the boundary guard band.
    #[error("evaluation point must satisfy |zeta| > 1 + {guard}")]
    BoundaryGuard { guard: f64 },

    /// Second-difference offset not aligned with the sample grid.
    #[error("offset {t} is not a positive multiple of the grid spacing {h}")]
    GridShape { t: f64, h: f64 },

    /// Parameter outside its admissible range.
    #[error("parameter out of range: {what}")]
    OutOfRange { what: String },

    /// Finite-difference stencil leaves the unit disc.
    #[error("stencil of step {h:e} around ({re}, {im}) leaves the unit disc")]
    StepTooLarge { h: f64, re: f64, im: f64 },

    /// Ratio expansion left the normalized series form.
    #[error("normalization defect: constant term {defect:.3e} after ratio expansion")]
    NormalizationDefect { defect: f64 },

    /// Two routes that must agree algebraically did not.
    #[error("route disagreement in {what}: defect {defect:.3e}")]
    RouteDisagreement { what: String, defect: f64 },
}

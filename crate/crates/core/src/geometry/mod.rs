//! Cubic surfaces in P³ and the lines on them.

mod cubic;
mod fermat;
mod finder;
mod line;
mod random;
mod residual;

pub use cubic::{cubic_monomials, CubicSurface, Exponents, Form, MonomialJson, SurfaceJson};
pub use fermat::{fermat_lines_exact, parse_fermat_line, ExactLine, LineColor};
pub use finder::{find_lines, FinderOptions, LineFinderReport, NewtonStats};
pub use line::{
    normalize_plucker, plucker_minors, plucker_of_span, plucker_quadric, projective_distance, ComplexJson, LineChart,
    LineJson, Plucker, Point, ProjectiveLine, PLUCKER_PAIRS,
};
pub use random::{random_symmetric_cubic, SampledSurface};
pub use residual::{
    conditioning, is_simple_zero, line_residual, newton_step, restrict_to_line, restriction_jacobian,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("unknown surface {0:?} (expected fermat or clebsch)")]
    UnknownName(String),
    #[error("malformed surface: {0}")]
    Malformed(String),
    #[error("degenerate surface: {0}")]
    DegenerateSurface(String),
    #[error("spanning points are linearly dependent")]
    DependentSpan,
    #[error("no coordinate chart contains the line")]
    NoChartContainsLine,
    #[error("no smooth surface found after {0} attempts")]
    BudgetExhausted(usize),
}

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use super::cubic::CubicSurface;
use super::line::{LineChart, ProjectiveLine};
use super::GeometryError;

/// Coefficients `(r3, r2, r1, r0)` of `F` restricted to the chart line,
/// `F = r3 w³ + r2 w²z + r1 wz² + r0 z³`. All four vanish iff the line lies
/// on `V(F)`.
pub fn restrict_to_line(f: &CubicSurface, chart: &LineChart) -> [Complex64; 4] {
    let (u, v) = chart.pencil();
    let r = f.form().on_pencil(&u, &v);
    [r[0], r[1], r[2], r[3]]
}

/// Derivative of [`restrict_to_line`] in the chart parameters `(a, b, c, d)`.
///
/// Moving `a` shifts `x_i` by `w`, so its column is `w·∂ᵢF` on the line; `b`
/// contributes `z·∂ᵢF`, and `c`, `d` the same with `∂ⱼF`.
pub fn restriction_jacobian(f: &CubicSurface, chart: &LineChart) -> Matrix4<Complex64> {
    let (u, v) = chart.pencil();
    let (i, j) = chart.dependent();
    let qi = f.partial(i).on_pencil(&u, &v);
    let qj = f.partial(j).on_pencil(&u, &v);
    let zero = Complex64::new(0.0, 0.0);
    let times_w = |q: &[Complex64]| [q[0], q[1], q[2], zero];
    let times_z = |q: &[Complex64]| [zero, q[0], q[1], q[2]];
    let cols = [times_w(&qi), times_z(&qi), times_w(&qj), times_z(&qj)];
    Matrix4::from_fn(|r, c| cols[c][r])
}

pub fn max_abs(r: &[Complex64]) -> f64 {
    r.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Max residual coefficient of `F` on the line, measured in its best chart.
pub fn line_residual(f: &CubicSurface, line: &ProjectiveLine) -> f64 {
    max_abs(&restrict_to_line(f, &line.best_chart()))
}

/// Ratio of smallest to largest singular value of the restriction Jacobian
/// at the line, in its best chart.
pub fn conditioning(f: &CubicSurface, line: &ProjectiveLine) -> f64 {
    let chart = line.best_chart();
    let sv = restriction_jacobian(f, &chart).singular_values();
    let max = sv.max();
    if max == 0.0 {
        0.0
    } else {
        sv.min() / max
    }
}

/// Whether `line` is a nondegenerate zero of the restriction section.
pub fn is_simple_zero(f: &CubicSurface, line: &ProjectiveLine, threshold: f64) -> Result<bool, GeometryError> {
    if !(0..6).any(|k| line.in_chart(k).is_some()) {
        return Err(GeometryError::NoChartContainsLine);
    }
    Ok(conditioning(f, line) > threshold)
}

/// One Newton step `x ← x − J⁻¹ r`. Returns the step, or `None` when the
/// Jacobian is numerically singular.
pub fn newton_step(f: &CubicSurface, chart: &mut LineChart) -> Option<f64> {
    let r = Vector4::from(restrict_to_line(f, chart));
    let jac = restriction_jacobian(f, chart);
    let delta = jac.lu().solve(&r)?;
    if delta.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return None;
    }
    for k in 0..4 {
        chart.params[k] -= delta[k];
    }
    Some(delta.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt())
}

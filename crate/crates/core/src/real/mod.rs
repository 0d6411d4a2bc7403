//! Real lines on real cubic surfaces and their hyperbolic/elliptic type.
//!
//! Along a line `ℓ ⊂ X` the tangent planes of `X` all contain `ℓ`, so they
//! trace the pencil of planes through `ℓ` by a degree-two map
//! `t ↦ [α(t) : β(t)]`. The map identifies pairs of points with the same
//! tangent plane; the fixed points of that involution are the roots of the
//! Wronskian `αβ′ − α′β`. A real line is hyperbolic when they are real.

use nalgebra::{Matrix4, RowVector4, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::{CubicSurface, ProjectiveLine};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RealError {
    #[error("surface not real")]
    SurfaceNotReal,
    #[error("line is not real")]
    NotRealLine,
    #[error("line {index}: tangent involution is degenerate (discriminant {disc:e})")]
    DegenerateInvolution { index: usize, disc: f64 },
    #[error("Segre identity fails: {hyperbolic} hyperbolic, {elliptic} elliptic")]
    SegreViolation { hyperbolic: usize, elliptic: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineType {
    Hyperbolic,
    Elliptic,
}

/// Whether some unit phase makes the Plücker vector real. The stored
/// normalization has a pivot entry equal to 1, so that phase is trivial.
pub fn is_real_line(line: &ProjectiveLine, tol: f64) -> bool {
    line.plucker().iter().map(|c| c.im * c.im).sum::<f64>().sqrt() < tol
}

/// An orthonormal pair of real points spanning `line`.
pub fn real_span(line: &ProjectiveLine) -> Result<[Vector4<f64>; 2], RealError> {
    let [p, q] = line.span();
    let rows = [p.map(|c| c.re), p.map(|c| c.im), q.map(|c| c.re), q.map(|c| c.im)];
    let m = Matrix4::from_rows(&rows.map(RowVector4::from));
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let s = &svd.singular_values;
    // A real plane has exactly two independent real directions.
    if s[order[2]] > 1e-8 * s[order[0]] {
        return Err(RealError::NotRealLine);
    }
    let row = |k: usize| Vector4::from_iterator(v_t.row(order[k]).iter().copied());
    Ok([row(0), row(1)])
}

/// Two orthonormal real covectors vanishing on the span.
fn complement(span: &[Vector4<f64>; 2]) -> [Vector4<f64>; 2] {
    let e0 = span[0].normalize();
    let e1 = (span[1] - e0 * e0.dot(&span[1])).normalize();
    let mut basis = vec![e0, e1];
    let mut out = Vec::new();
    // Gram-Schmidt over the coordinate axes, taking the largest remainder
    // each round.
    let mut candidates: Vec<Vector4<f64>> = (0..4)
        .map(|k| {
            let mut e = Vector4::zeros();
            e[k] = 1.0;
            for b in &basis {
                e -= b * b.dot(&e);
            }
            e
        })
        .collect();
    while out.len() < 2 {
        let (k, _) = candidates
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("nonempty");
        let mut v = candidates.remove(k);
        for b in &basis {
            v -= b * b.dot(&v);
        }
        let v = v.normalize();
        basis.push(v);
        out.push(v);
        for c in candidates.iter_mut() {
            *c -= v * v.dot(c);
        }
    }
    [out[0], out[1]]
}

/// The tangent-plane map along a real line in pencil coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilCoordinates {
    /// Real points with `ℓ(t) = P₀ + t·P₁`.
    pub span: [Vector4<f64>; 2],
    /// Covectors `A`, `B` vanishing on `ℓ`.
    pub planes: [Vector4<f64>; 2],
    /// `α(t) = α₀ + α₁t + α₂t²`.
    pub alpha: [f64; 3],
    pub beta: [f64; 3],
}

impl PencilCoordinates {
    pub fn new(f: &CubicSurface, line: &ProjectiveLine) -> Result<Self, RealError> {
        Self::from_span(f, real_span(line)?)
    }

    /// Uses a given real parametrization of the line.
    pub fn from_span(f: &CubicSurface, span: [Vector4<f64>; 2]) -> Result<Self, RealError> {
        let planes = complement(&span);
        let c = |v: &Vector4<f64>| -> [Complex64; 4] { std::array::from_fn(|k| Complex64::new(v[k], 0.0)) };
        let (p0, p1) = (c(&span[0]), c(&span[1]));
        // ∇F along the line: each partial restricts to a binary quadratic
        // with coefficients [w², wz, z²], i.e. [1, t, t²] at [w:z] = [1:t].
        let grad: Vec<Vec<Complex64>> = (0..4).map(|k| f.partial(k).on_pencil(&p0, &p1)).collect();
        let project = |a: &Vector4<f64>| -> [f64; 3] {
            std::array::from_fn(|d| (0..4).map(|k| grad[k][d].re * a[k]).sum())
        };
        Ok(PencilCoordinates {
            span,
            planes,
            alpha: project(&planes[0]),
            beta: project(&planes[1]),
        })
    }

    /// `W = αβ′ − α′β`, as `[W₀, W₁, W₂]`.
    pub fn wronskian(&self) -> [f64; 3] {
        let [a0, a1, a2] = self.alpha;
        let [b0, b1, b2] = self.beta;
        [a0 * b1 - a1 * b0, 2.0 * (a0 * b2 - a2 * b0), a1 * b2 - a2 * b1]
    }

    pub fn discriminant(&self) -> f64 {
        let [w0, w1, w2] = self.wronskian();
        w1 * w1 - 4.0 * w0 * w2
    }

    /// `|disc| / max|Wᵢ|²`; small values mean a non-generic line.
    pub fn relative_discriminant(&self) -> f64 {
        let scale = self.wronskian().iter().fold(0.0f64, |m, w| m.max(w.abs()));
        if scale == 0.0 {
            0.0
        } else {
            self.discriminant() / (scale * scale)
        }
    }
}

const DEGENERATE: f64 = 1e-9;

/// Type of a real line on a real cubic.
pub fn line_type(f: &CubicSurface, line: &ProjectiveLine) -> Result<LineType, RealError> {
    type_of(f, line, 0)
}

fn type_of(f: &CubicSurface, line: &ProjectiveLine, index: usize) -> Result<LineType, RealError> {
    let pencil = PencilCoordinates::new(f, line)?;
    let rel = pencil.relative_discriminant();
    if rel.abs() < DEGENERATE {
        return Err(RealError::DegenerateInvolution {
            index,
            disc: pencil.discriminant(),
        });
    }
    Ok(if rel > 0.0 { LineType::Hyperbolic } else { LineType::Elliptic })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineReality {
    pub index: usize,
    pub real: bool,
    #[serde(rename = "type")]
    pub kind: Option<LineType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealLineAnalysis {
    pub real_count: usize,
    pub hyperbolic: usize,
    pub elliptic: usize,
    pub lines: Vec<LineReality>,
}

/// Classifies each line and checks `h − e = 3`.
pub fn analyze_real(f: &CubicSurface, lines: &[ProjectiveLine], tol_real: f64) -> Result<RealLineAnalysis, RealError> {
    if !f.is_real() {
        return Err(RealError::SurfaceNotReal);
    }
    let per_line = lines
        .iter()
        .enumerate()
        .map(|(index, l)| {
            let real = is_real_line(l, tol_real);
            let kind = if real { Some(type_of(f, l, index)?) } else { None };
            Ok(LineReality { index, real, kind })
        })
        .collect::<Result<Vec<_>, RealError>>()?;
    let count = |t: LineType| per_line.iter().filter(|l| l.kind == Some(t)).count();
    let analysis = RealLineAnalysis {
        real_count: per_line.iter().filter(|l| l.real).count(),
        hyperbolic: count(LineType::Hyperbolic),
        elliptic: count(LineType::Elliptic),
        lines: per_line,
    };
    if analysis.hyperbolic != analysis.elliptic + 3 {
        return Err(RealError::SegreViolation {
            hyperbolic: analysis.hyperbolic,
            elliptic: analysis.elliptic,
        });
    }
    Ok(analysis)
}

#[cfg(test)]
mod tests;

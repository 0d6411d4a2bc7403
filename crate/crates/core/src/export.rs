//! Real lines as line segments in an affine chart, written as Wavefront OBJ.

use std::fmt::Write as _;

use nalgebra::{Matrix3x4, Vector3, Vector4};
use num_complex::Complex64;

use crate::geometry::{CubicSurface, ProjectiveLine};
use crate::real::{is_real_line, real_span};

/// The affine chart `{h·x = 1}` with orthonormal coordinates around the
/// point closest to the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineChart {
    pub name: String,
    pub covector: Vector4<f64>,
    origin: Vector4<f64>,
    /// Rows: an orthonormal basis of `h⊥`.
    basis: Matrix3x4<f64>,
}

impl AffineChart {
    pub fn new(name: impl Into<String>, covector: [f64; 4]) -> Self {
        let h = Vector4::from(covector);
        let origin = h / h.norm_squared();
        let unit = h.normalize();
        let mut rows: Vec<Vector4<f64>> = Vec::new();
        for k in 0..4 {
            let mut e = Vector4::zeros();
            e[k] = 1.0;
            e -= unit * unit.dot(&e);
            for r in &rows {
                e -= r * r.dot(&e);
            }
            if e.norm() > 1e-6 && rows.len() < 3 {
                rows.push(e.normalize());
            }
        }
        let basis = Matrix3x4::from_rows(&[rows[0].transpose(), rows[1].transpose(), rows[2].transpose()]);
        AffineChart {
            name: name.into(),
            covector: h,
            origin,
            basis,
        }
    }

    /// `x₀ = 1`, coordinates `(x₁, x₂, x₃)`.
    pub fn x0() -> Self {
        AffineChart::new("x0", [1.0, 0.0, 0.0, 0.0])
    }

    /// `Σxᵢ = 1`, invariant under coordinate permutations.
    pub fn sum() -> Self {
        AffineChart::new("sum", [1.0, 1.0, 1.0, 1.0])
    }

    /// `2x₀ + x₁ + x₂ + x₃ = 1`.
    pub fn tilted() -> Self {
        AffineChart::new("tilted", [2.0, 1.0, 1.0, 1.0])
    }

    /// Fixed irrational covector.
    pub fn generic() -> Self {
        AffineChart::new("generic", [1.0, std::f64::consts::SQRT_2 - 1.0, 0.5_f64.sqrt(), 0.3])
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "x0" => Some(Self::x0()),
            "sum" => Some(Self::sum()),
            "tilted" => Some(Self::tilted()),
            "generic" => Some(Self::generic()),
            _ => None,
        }
    }

    pub fn to_affine(&self, x: &Vector4<f64>) -> Vector3<f64> {
        self.basis * (x / self.covector.dot(x) - self.origin)
    }

    pub fn to_projective(&self, y: &Vector3<f64>) -> Vector4<f64> {
        self.origin + self.basis.transpose() * y
    }

    /// The part of a real line within distance `radius` of the chart
    /// origin, or `None` if it misses the ball or lies at infinity.
    pub fn clip(&self, span: &[Vector4<f64>; 2], radius: f64) -> Option<[Vector3<f64>; 2]> {
        let [p, q] = span;
        let (s0, s1) = (self.covector.dot(p), self.covector.dot(q));
        let scale = self.covector.norm();
        if s0.abs().max(s1.abs()) < 1e-9 * scale {
            return None;
        }
        let point = (p * s0 + q * s1) / (s0 * s0 + s1 * s1);
        let dir = self.basis * (p * s1 - q * s0);
        let a = self.basis * (point - self.origin);
        let d = dir.normalize();
        let m = a - d * a.dot(&d);
        let dist = m.norm();
        if dist >= radius {
            return None;
        }
        let half = (radius * radius - dist * dist).sqrt();
        Some([m - d * half, m + d * half])
    }
}

/// Of the built-in charts, the first that shows every line as a segment,
/// else the one that shows the most.
pub fn choose_chart(spans: &[[Vector4<f64>; 2]], radius: f64) -> AffineChart {
    let candidates = [AffineChart::x0(), AffineChart::sum(), AffineChart::tilted(), AffineChart::generic()];
    let shown = |c: &AffineChart| spans.iter().filter(|s| c.clip(s, radius).is_some()).count();
    if let Some(c) = candidates.iter().find(|c| shown(c) == spans.len()) {
        return c.clone();
    }
    candidates
        .iter()
        .rev()
        .max_by_key(|c| shown(c))
        .expect("nonempty")
        .clone()
}

/// A named set of lines exported as one OBJ group.
#[derive(Clone, Debug)]
pub struct LineGroup {
    pub name: String,
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ObjExport {
    pub chart: AffineChart,
    pub radius: f64,
    /// `(group name, segments)`.
    pub groups: Vec<(String, Vec<[Vector3<f64>; 2]>)>,
}

impl ObjExport {
    pub fn segment_count(&self) -> usize {
        self.groups.iter().map(|(_, s)| s.len()).sum()
    }

    pub fn to_obj(&self) -> String {
        let h = self.chart.covector;
        let mut out = String::new();
        let _ = writeln!(out, "# real lines, chart {} (h = [{}, {}, {}, {}]), radius {}", self.chart.name, h[0], h[1], h[2], h[3], self.radius);
        let mut next = 1;
        for (name, segments) in &self.groups {
            let _ = writeln!(out, "g {name}");
            for [a, b] in segments {
                for v in [a, b] {
                    let _ = writeln!(out, "v {:.12} {:.12} {:.12}", v[0], v[1], v[2]);
                }
                let _ = writeln!(out, "l {} {}", next, next + 1);
                next += 2;
            }
        }
        out
    }
}

/// Clips the real lines among `groups` to the ball of `radius`. Non-real
/// lines are skipped; `chart = None` picks one with [`choose_chart`].
pub fn export_real_lines(
    lines: &[ProjectiveLine],
    groups: &[LineGroup],
    radius: f64,
    tol_real: f64,
    chart: Option<AffineChart>,
) -> ObjExport {
    let spans: Vec<Option<[Vector4<f64>; 2]>> = lines
        .iter()
        .map(|l| if is_real_line(l, tol_real) { real_span(l).ok() } else { None })
        .collect();
    let real: Vec<[Vector4<f64>; 2]> = spans.iter().flatten().copied().collect();
    let chart = chart.unwrap_or_else(|| choose_chart(&real, radius));
    let groups = groups
        .iter()
        .filter_map(|g| {
            let segments: Vec<[Vector3<f64>; 2]> = g
                .lines
                .iter()
                .filter_map(|&i| spans[i].as_ref())
                .filter_map(|s| chart.clip(s, radius))
                .collect();
            (!segments.is_empty()).then(|| (g.name.clone(), segments))
        })
        .collect();
    ObjExport { chart, radius, groups }
}

/// Vertices and groups read back from [`ObjExport::to_obj`] output.
#[derive(Clone, Debug, Default)]
pub struct ParsedObj {
    pub chart: Option<[f64; 4]>,
    pub vertices: Vec<Vector3<f64>>,
    /// `(group name, number of segments)`.
    pub groups: Vec<(String, usize)>,
}

pub fn parse_obj(text: &str) -> ParsedObj {
    let mut out = ParsedObj::default();
    for line in text.lines() {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("#") => {
                if let (Some(start), Some(end)) = (line.find("h = ["), line.find(']')) {
                    let nums: Vec<f64> = line[start + 5..end].split(',').filter_map(|s| s.trim().parse().ok()).collect();
                    if nums.len() == 4 {
                        out.chart = Some([nums[0], nums[1], nums[2], nums[3]]);
                    }
                }
            }
            Some("g") => out.groups.push((words.next().unwrap_or("").to_string(), 0)),
            Some("v") => {
                let v: Vec<f64> = words.filter_map(|w| w.parse().ok()).collect();
                if v.len() == 3 {
                    out.vertices.push(Vector3::new(v[0], v[1], v[2]));
                }
            }
            Some("l") => {
                if let Some(g) = out.groups.last_mut() {
                    g.1 += 1;
                }
            }
            _ => {}
        }
    }
    out
}

/// `|F|` at an affine chart point, homogenized with the chart covector.
pub fn surface_value(f: &CubicSurface, chart: &AffineChart, y: &Vector3<f64>) -> f64 {
    let x = chart.to_projective(y);
    f.eval(&std::array::from_fn(|k| Complex64::new(x[k], 0.0))).norm()
}

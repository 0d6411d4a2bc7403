use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeometryError;

pub type Point = [Complex64; 4];
pub type Plucker = [Complex64; 6];

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// 2×2 minors `p_ij = p_i q_j − p_j q_i` in [`PLUCKER_PAIRS`] order,
/// unnormalized.
pub fn plucker_minors(p: &Point, q: &Point) -> Plucker {
    PLUCKER_PAIRS.map(|(i, j)| p[i] * q[j] - p[j] * q[i])
}

/// Rescales so the entry of largest modulus is exactly 1. Entries within a
/// relative `1e-9` of the maximum count as tied; the lowest index wins.
pub fn normalize_plucker(p: &Plucker) -> Plucker {
    let max = p.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let pivot = p
        .iter()
        .position(|x| x.norm() >= max * (1.0 - 1e-9))
        .expect("nonzero vector");
    let s = p[pivot];
    let mut out = p.map(|x| x / s);
    out[pivot] = Complex64::new(1.0, 0.0);
    out
}

/// Plücker vector of the line through `p` and `q`.
pub fn plucker_of_span(p: &Point, q: &Point) -> Result<Plucker, GeometryError> {
    let m = plucker_minors(p, q);
    if norm(&m) <= 1e-14 * norm(p) * norm(q) {
        return Err(GeometryError::DependentSpan);
    }
    Ok(normalize_plucker(&m))
}

/// `p01·p23 − p02·p13 + p03·p12`.
pub fn plucker_quadric(p: &Plucker) -> Complex64 {
    p[0] * p[5] - p[1] * p[4] + p[2] * p[3]
}

/// Sine of the angle between two vectors as points of projective space;
/// zero iff they are proportional.
pub fn projective_distance(u: &[Complex64], v: &[Complex64]) -> f64 {
    let nu = norm(u);
    let nv = norm(v);
    let uh: Vec<Complex64> = u.iter().map(|x| x / nu).collect();
    let vh: Vec<Complex64> = v.iter().map(|x| x / nv).collect();
    let c = inner(&uh, &vh);
    // Length of the component of v̂ orthogonal to û; stable near zero.
    let perp: Vec<Complex64> = vh.iter().zip(&uh).map(|(y, x)| y - c * x).collect();
    norm(&perp).min(1.0)
}

/// A line in P³ with an orthonormal spanning pair and normalized Plücker
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveLine {
    span: [Point; 2],
    plucker: Plucker,
}

impl ProjectiveLine {
    pub fn from_span(p: &Point, q: &Point) -> Result<Self, GeometryError> {
        let np = norm(p);
        if np == 0.0 {
            return Err(GeometryError::DependentSpan);
        }
        let e1: Point = p.map(|x| x / np);
        let c = inner(&e1, q);
        let mut r: Point = [zero(); 4];
        for k in 0..4 {
            r[k] = q[k] - c * e1[k];
        }
        let nr = norm(&r);
        if nr <= 1e-12 * norm(q) || nr == 0.0 {
            return Err(GeometryError::DependentSpan);
        }
        let e2: Point = r.map(|x| x / nr);
        let plucker = plucker_of_span(&e1, &e2)?;
        Ok(ProjectiveLine { span: [e1, e2], plucker })
    }

    pub fn span(&self) -> &[Point; 2] {
        &self.span
    }

    pub fn plucker(&self) -> &Plucker {
        &self.plucker
    }

    pub fn distance(&self, other: &ProjectiveLine) -> f64 {
        projective_distance(&self.plucker, &other.plucker)
    }

    /// Coordinatewise complex conjugate line.
    pub fn conj(&self) -> ProjectiveLine {
        let [p, q] = self.span;
        ProjectiveLine::from_span(&p.map(|x| x.conj()), &q.map(|x| x.conj())).expect("conjugation keeps independence")
    }

    /// The chart with the largest free minor; every line lies in it.
    pub fn best_chart(&self) -> LineChart {
        let k = (0..6)
            .max_by(|&a, &b| {
                self.plucker[a]
                    .norm()
                    .partial_cmp(&self.plucker[b].norm())
                    .expect("finite")
                    .then(b.cmp(&a))
            })
            .expect("six entries");
        self.in_chart(k).expect("largest minor is nonzero")
    }

    /// Coordinates of the line in chart `chart_index`, if it lies there.
    pub fn in_chart(&self, chart_index: usize) -> Option<LineChart> {
        let (k, l) = PLUCKER_PAIRS[chart_index];
        let [p, q] = &self.span;
        let det = p[k] * q[l] - p[l] * q[k];
        if det.norm() < 1e-12 {
            return None;
        }
        // Row-reduce so columns k, l form the identity.
        let inv = [[q[l] / det, -p[l] / det], [-q[k] / det, p[k] / det]];
        let u: Point = std::array::from_fn(|m| inv[0][0] * p[m] + inv[0][1] * q[m]);
        let v: Point = std::array::from_fn(|m| inv[1][0] * p[m] + inv[1][1] * q[m]);
        let (i, j) = LineChart::dependent_of(chart_index);
        Some(LineChart {
            chart_index,
            params: [u[i], v[i], u[j], v[j]],
        })
    }

    pub fn to_json(&self, residual: f64) -> LineJson {
        LineJson {
            span: self.span.map(|p| p.map(ComplexJson::from)),
            plucker: self.plucker.map(ComplexJson::from),
            residual,
        }
    }

    pub fn from_json(json: &LineJson) -> Result<Self, GeometryError> {
        let [p, q] = json.span.map(|p| p.map(Complex64::from));
        ProjectiveLine::from_span(&p, &q)
    }
}

/// Affine chart of the Grassmannian: with free coordinates `(k, l)` and
/// dependent `(i, j)`, the line is `x_i = a·x_k + b·x_l`, `x_j = c·x_k + d·x_l`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineChart {
    /// Index into [`PLUCKER_PAIRS`] of the free pair.
    pub chart_index: usize,
    /// `(a, b, c, d)`.
    pub params: [Complex64; 4],
}

impl LineChart {
    pub fn new(chart_index: usize, params: [Complex64; 4]) -> Self {
        assert!(chart_index < 6);
        LineChart { chart_index, params }
    }

    pub fn free(&self) -> (usize, usize) {
        PLUCKER_PAIRS[self.chart_index]
    }

    pub fn dependent(&self) -> (usize, usize) {
        LineChart::dependent_of(self.chart_index)
    }

    fn dependent_of(chart_index: usize) -> (usize, usize) {
        let (k, l) = PLUCKER_PAIRS[chart_index];
        let mut rest = (0..4).filter(|&m| m != k && m != l);
        (rest.next().expect("two left"), rest.next().expect("two left"))
    }

    /// The points `u` (at `[w:z] = [1:0]`) and `v` (at `[0:1]`) spanning the
    /// line.
    pub fn pencil(&self) -> (Point, Point) {
        let (k, l) = self.free();
        let (i, j) = self.dependent();
        let [a, b, c, d] = self.params;
        let mut u = [zero(); 4];
        let mut v = [zero(); 4];
        u[k] = Complex64::new(1.0, 0.0);
        v[l] = Complex64::new(1.0, 0.0);
        u[i] = a;
        v[i] = b;
        u[j] = c;
        v[j] = d;
        (u, v)
    }

    pub fn to_line(&self) -> ProjectiveLine {
        let (u, v) = self.pencil();
        ProjectiveLine::from_span(&u, &v).expect("chart pencils are independent")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(c: Complex64) -> Self {
        ComplexJson { re: c.re, im: c.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(c: ComplexJson) -> Self {
        Complex64::new(c.re, c.im)
    }
}

/// Line schema: `{"span": [[4 complex], [4 complex]], "plucker": [6 complex], "residual": f}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineJson {
    pub span: [[ComplexJson; 4]; 2],
    pub plucker: [ComplexJson; 6],
    pub residual: f64,
}

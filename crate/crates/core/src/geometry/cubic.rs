use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group::Permutation;

use super::GeometryError;

/// Exponent tuple of a monomial in `x0..x3`.
pub type Exponents = [u8; 4];

/// The 20 cubic monomials, in descending lexicographic order of exponents.
pub fn cubic_monomials() -> Vec<Exponents> {
    homogeneous_exponents(3)
}

fn homogeneous_exponents(degree: u8) -> Vec<Exponents> {
    let mut out = Vec::new();
    for a in (0..=degree).rev() {
        for b in (0..=degree - a).rev() {
            for c in (0..=degree - a - b).rev() {
                out.push([a, b, c, degree - a - b - c]);
            }
        }
    }
    out
}

/// A homogeneous polynomial in four variables as a list of terms.
#[derive(Clone, Debug, PartialEq)]
pub struct Form {
    degree: u8,
    terms: Vec<(Exponents, Complex64)>,
}

impl Form {
    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn eval(&self, x: &[Complex64; 4]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut m = *c;
                for (xi, &k) in x.iter().zip(e) {
                    m *= xi.powu(k as u32);
                }
                m
            })
            .sum()
    }

    pub fn partial(&self, var: usize) -> Form {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|(e, c)| {
                let mut d = *e;
                d[var] -= 1;
                (d, c * e[var] as f64)
            })
            .collect();
        Form {
            degree: self.degree - 1,
            terms,
        }
    }

    /// Substitutes `x = w·u + z·v` and returns the binary form coefficients
    /// of `w^d, w^(d-1) z, ..., z^d`.
    pub fn on_pencil(&self, u: &[Complex64; 4], v: &[Complex64; 4]) -> Vec<Complex64> {
        let d = self.degree as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); d + 1];
        for (e, c) in &self.terms {
            // Binary polynomial indexed by the power of z.
            let mut poly = vec![*c];
            for m in 0..4 {
                for _ in 0..e[m] {
                    let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
                    for (p, coeff) in poly.iter().enumerate() {
                        next[p] += coeff * u[m];
                        next[p + 1] += coeff * v[m];
                    }
                    poly = next;
                }
            }
            for (slot, coeff) in out.iter_mut().zip(poly) {
                *slot += coeff;
            }
        }
        out
    }
}

/// A cubic surface `V(F) ⊂ P³`, stored by its 20 monomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicSurface {
    coeffs: Vec<Complex64>,
    form: Form,
    gradient: [Form; 4],
}

impl CubicSurface {
    /// Coefficients in [`cubic_monomials`] order. The zero form is rejected
    /// as degenerate.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, GeometryError> {
        if coeffs.len() != 20 {
            return Err(GeometryError::Malformed(format!("expected 20 coefficients, got {}", coeffs.len())));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(GeometryError::Malformed("non-finite coefficient".into()));
        }
        if coeffs.iter().all(|c| c.norm() == 0.0) {
            return Err(GeometryError::DegenerateSurface("identically zero form".into()));
        }
        let terms: Vec<(Exponents, Complex64)> = cubic_monomials()
            .into_iter()
            .zip(coeffs.iter().copied())
            .filter(|(_, c)| c.norm() != 0.0)
            .collect();
        let form = Form { degree: 3, terms };
        let gradient = [0, 1, 2, 3].map(|i| form.partial(i));
        Ok(CubicSurface { coeffs, form, gradient })
    }

    pub fn from_terms(terms: &[(Exponents, Complex64)]) -> Result<Self, GeometryError> {
        let monomials = cubic_monomials();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 20];
        for (e, c) in terms {
            let idx = monomials
                .iter()
                .position(|m| m == e)
                .ok_or_else(|| GeometryError::Malformed(format!("exponents {e:?} do not sum to 3")))?;
            coeffs[idx] += c;
        }
        CubicSurface::new(coeffs)
    }

    /// `c1·Σxᵢ³ + c2·Σ_{i≠j} xᵢ²xⱼ + c3·Σ_{i<j<k} xᵢxⱼxₖ`.
    pub fn symmetric(c: [f64; 3]) -> Result<Self, GeometryError> {
        let coeffs = cubic_monomials()
            .into_iter()
            .map(|e| {
                let mut sorted = e;
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let value = match sorted {
                    [3, 0, 0, 0] => c[0],
                    [2, 1, 0, 0] => c[1],
                    [1, 1, 1, 0] => c[2],
                    _ => unreachable!("cubic exponent pattern"),
                };
                Complex64::new(value, 0.0)
            })
            .collect();
        CubicSurface::new(coeffs)
    }

    pub fn fermat() -> Self {
        CubicSurface::symmetric([1.0, 0.0, 0.0]).expect("nonzero")
    }

    /// `Σxᵢ³ − (Σxᵢ)³`, the Clebsch diagonal surface with `x4 = −Σxᵢ`
    /// eliminated.
    pub fn clebsch() -> Self {
        // (Σxᵢ)³ = Σxᵢ³ + 3Σ_{i≠j} xᵢ²xⱼ + 6Σ_{i<j<k} xᵢxⱼxₖ
        CubicSurface::symmetric([0.0, -3.0, -6.0]).expect("nonzero")
    }

    pub fn builtin(name: &str) -> Result<Self, GeometryError> {
        match name.trim().to_ascii_lowercase().as_str() {
            "fermat" => Ok(CubicSurface::fermat()),
            "clebsch" => Ok(CubicSurface::clebsch()),
            other => Err(GeometryError::UnknownName(other.to_string())),
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: Exponents) -> Complex64 {
        cubic_monomials()
            .iter()
            .position(|m| *m == e)
            .map(|i| self.coeffs[i])
            .unwrap_or_default()
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn partial(&self, var: usize) -> &Form {
        &self.gradient[var]
    }

    pub fn eval(&self, x: &[Complex64; 4]) -> Complex64 {
        self.form.eval(x)
    }

    pub fn gradient_at(&self, x: &[Complex64; 4]) -> [Complex64; 4] {
        [0, 1, 2, 3].map(|i| self.gradient[i].eval(x))
    }

    pub fn scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self) -> bool {
        let tol = 1e-12 * self.scale();
        self.coeffs.iter().all(|c| c.im.abs() <= tol)
    }

    /// The image surface `σ(V(F))`, with `σ` moving coordinate `i` to
    /// position `σ(i)`.
    pub fn permuted(&self, g: &Permutation) -> CubicSurface {
        let terms: Vec<(Exponents, Complex64)> = cubic_monomials()
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .map(|(e, c)| {
                let mut image = [0u8; 4];
                for (i, &k) in e.iter().enumerate() {
                    image[g.apply(i)] = k;
                }
                (image, c)
            })
            .collect();
        CubicSurface::from_terms(&terms).expect("permuting keeps the form nonzero")
    }

    /// Whether every coordinate permutation in `group` fixes the
    /// coefficients (up to rounding).
    pub fn is_invariant_under(&self, group: &[Permutation]) -> bool {
        let tol = 1e-12 * self.scale();
        group.iter().all(|g| {
            self.permuted(g)
                .coeffs
                .iter()
                .zip(&self.coeffs)
                .all(|(a, b)| (a - b).norm() <= tol)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_invariant_under(&Permutation::all())
    }

    pub fn to_json(&self) -> SurfaceJson {
        SurfaceJson {
            monomials: cubic_monomials()
                .into_iter()
                .zip(&self.coeffs)
                .filter(|(_, c)| c.norm() != 0.0)
                .map(|(exponents, c)| MonomialJson {
                    exponents,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SurfaceJson) -> Result<Self, GeometryError> {
        let mut terms = Vec::with_capacity(json.monomials.len());
        for m in &json.monomials {
            if m.exponents.iter().map(|&k| k as u32).sum::<u32>() != 3 {
                return Err(GeometryError::Malformed(format!(
                    "exponents {:?} do not sum to 3",
                    m.exponents
                )));
            }
            terms.push((m.exponents, Complex64::new(m.re, m.im)));
        }
        if terms.is_empty() {
            return Err(GeometryError::DegenerateSurface("identically zero form".into()));
        }
        CubicSurface::from_terms(&terms)
    }
}

/// Surface file schema: `{"monomials": [{"exponents": [..], "re": .., "im": ..}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub monomials: Vec<MonomialJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: Exponents,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn twenty_monomials() {
        let m = cubic_monomials();
        assert_eq!(m.len(), 20);
        assert_eq!(m[0], [3, 0, 0, 0]);
        assert_eq!(m[19], [0, 0, 0, 3]);
        assert!(m.iter().all(|e| e.iter().map(|&k| k as u32).sum::<u32>() == 3));
    }

    #[test]
    fn builtin_coefficients() {
        let f = CubicSurface::builtin("fermat").unwrap();
        assert_eq!(f.coeff([3, 0, 0, 0]), c(1.0, 0.0));
        assert_eq!(f.coeff([1, 1, 1, 0]), c(0.0, 0.0));
        let cl = CubicSurface::builtin("clebsch").unwrap();
        assert_eq!(cl.coeff([1, 1, 1, 0]), c(-6.0, 0.0));
        assert_eq!(cl.coeff([3, 0, 0, 0]), c(0.0, 0.0));
        assert_eq!(cl.coeff([2, 0, 1, 0]), c(-3.0, 0.0));
        assert!(f.is_symmetric() && cl.is_symmetric());
        assert!(f.is_real() && cl.is_real());
        assert!(matches!(CubicSurface::builtin("cayley"), Err(GeometryError::UnknownName(_))));
    }

    #[test]
    fn clebsch_matches_its_defining_expression() {
        // Multinomial check at random points: Σxᵢ³ − (Σxᵢ)³.
        let cl = CubicSurface::clebsch();
        let pts = [[0.3, -1.2, 2.0, 0.7], [1.0, 1.0, 1.0, 1.0], [-0.5, 0.25, 3.0, -2.0]];
        for p in pts {
            let x = p.map(|t| c(t, 0.0));
            let s: f64 = p.iter().sum();
            let expect: f64 = p.iter().map(|t| t * t * t).sum::<f64>() - s * s * s;
            assert!((cl.eval(&x).re - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_form_is_degenerate() {
        assert!(matches!(
            CubicSurface::new(vec![c(0.0, 0.0); 20]),
            Err(GeometryError::DegenerateSurface(_))
        ));
        let empty = SurfaceJson { monomials: vec![] };
        assert!(matches!(CubicSurface::from_json(&empty), Err(GeometryError::DegenerateSurface(_))));
    }

    #[test]
    fn asymmetric_form_is_detected() {
        let f = CubicSurface::from_terms(&[([3, 0, 0, 0], c(1.0, 0.0)), ([0, 3, 0, 0], c(2.0, 0.0))]).unwrap();
        assert!(!f.is_symmetric());
        let g: Permutation = "(3 4)".parse().unwrap();
        assert!(f.is_invariant_under(&[g]));
    }

    #[test]
    fn pencil_substitution() {
        // Fermat along x1 = x3 = 0: w³ + z³.
        let f = CubicSurface::fermat();
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let u = [one, zero, zero, zero];
        let v = [zero, zero, one, zero];
        assert_eq!(f.form().on_pencil(&u, &v), vec![one, zero, zero, one]);
    }

    #[test]
    fn json_round_trip() {
        let cl = CubicSurface::clebsch();
        let text = serde_json::to_string(&cl.to_json()).unwrap();
        let back: SurfaceJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CubicSurface::from_json(&back).unwrap(), cl);
        let bad: SurfaceJson = serde_json::from_str(r#"{"monomials":[{"exponents":[1,1,0,0],"re":1.0,"im":0.0}]}"#).unwrap();
        assert!(matches!(CubicSurface::from_json(&bad), Err(GeometryError::Malformed(_))));
    }
}

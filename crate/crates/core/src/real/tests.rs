use super::*;
use crate::equivariant::{act_on_line, euler_number};
use crate::geometry::{fermat_lines_exact, find_lines, parse_fermat_line, FinderOptions};
use crate::group::{ClassName, GroupLattice, Permutation};
use proptest::prelude::*;

const TOL_REAL: f64 = 1e-8;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn lift(v: [f64; 4]) -> [Complex64; 4] {
    v.map(|x| c(x, 0.0))
}

#[test]
fn fermat_reality() {
    assert!(is_real_line(&parse_fermat_line("w:-w:z:-z").unwrap(), TOL_REAL));
    assert!(!is_real_line(&parse_fermat_line("w:-w:z:ζz").unwrap(), TOL_REAL));
    for l in fermat_lines_exact() {
        assert_eq!(is_real_line(&l.line, TOL_REAL), is_real_line(&l.line.conj(), TOL_REAL));
    }
}

#[test]
fn real_span_of_a_real_line() {
    let line = parse_fermat_line("w:-w:z:-z").unwrap();
    let [p, q] = real_span(&line).unwrap();
    let back = ProjectiveLine::from_span(&lift(p.into()), &lift(q.into())).unwrap();
    assert!(back.distance(&line) < 1e-12);
}

#[test]
fn phase_rotation_is_removed() {
    let p = [c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)];
    let q = [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
    let line = ProjectiveLine::from_span(&p, &q).unwrap();
    let [a, b] = real_span(&line).unwrap();
    let back = ProjectiveLine::from_span(&lift(a.into()), &lift(b.into())).unwrap();
    assert!(back.distance(&parse_fermat_line("w:-w:z:-z").unwrap()) < 1e-12);
}

#[test]
fn complex_line_has_no_real_span() {
    let line = parse_fermat_line("w:-w:z:ζz").unwrap();
    assert_eq!(real_span(&line), Err(RealError::NotRealLine));
}

proptest! {
    #[test]
    fn real_span_round_trip(p in prop::array::uniform4(-2.0f64..2.0), q in prop::array::uniform4(-2.0f64..2.0),
                            phase in 0.0f64..std::f64::consts::TAU, mix in prop::array::uniform4(-1.0f64..1.0)) {
        let (pc, qc) = (lift(p), lift(q));
        // Scramble the span by a complex GL₂ change.
        let u = c(mix[0], mix[1]) * Complex64::from_polar(1.0, phase);
        let v = c(mix[2], mix[3]);
        let p2: [Complex64; 4] = std::array::from_fn(|k| pc[k] * Complex64::from_polar(1.0, phase) + qc[k] * u);
        let q2: [Complex64; 4] = std::array::from_fn(|k| qc[k] + pc[k] * v);
        let Ok(line) = ProjectiveLine::from_span(&p2, &q2) else { return Ok(()) };
        let Ok(direct) = ProjectiveLine::from_span(&pc, &qc) else { return Ok(()) };
        prop_assume!(direct.distance(&line) < 1e-9);
        prop_assert!(is_real_line(&line, 1e-7));
        let [a, b] = real_span(&line).unwrap();
        let back = ProjectiveLine::from_span(&lift(a.into()), &lift(b.into())).unwrap();
        prop_assert!(back.distance(&line) < 1e-9);
    }
}

#[test]
fn pencil_decomposes_the_gradient() {
    let f = CubicSurface::clebsch();
    let report = find_lines(&f, 3, &FinderOptions::default()).unwrap();
    for l in &report.lines {
        let pc = PencilCoordinates::new(&f, l).unwrap();
        for a in &pc.planes {
            assert!(a.dot(&pc.span[0]).abs() < 1e-12 && a.dot(&pc.span[1]).abs() < 1e-12);
        }
        for t in [-1.3, 0.0, 0.4, 2.5] {
            let x = pc.span[0] + pc.span[1] * t;
            let grad = f.gradient_at(&lift(x.into())).map(|g| g.re);
            let fit = |k: usize| {
                let ev = |q: &[f64; 3]| q[0] + q[1] * t + q[2] * t * t;
                ev(&pc.alpha) * pc.planes[0][k] + ev(&pc.beta) * pc.planes[1][k]
            };
            for (k, g) in grad.iter().enumerate() {
                assert!((g - fit(k)).abs() < 1e-9, "gradient component {k}");
            }
        }
    }
}

#[test]
fn type_ignores_reparametrization() {
    let f = CubicSurface::clebsch();
    let report = find_lines(&f, 3, &FinderOptions::default()).unwrap();
    for l in &report.lines {
        let base = line_type(&f, l).unwrap();
        let [p, q] = real_span(l).unwrap();
        for (a, b, cc, d) in [(2.0, 1.0, -0.5, 3.0), (0.0, 1.0, 1.0, 0.0), (-1.0, 0.3, 0.2, 0.7)] {
            let span = [p * a + q * b, p * cc + q * d];
            let pc = PencilCoordinates::from_span(&f, span).unwrap();
            let kind = if pc.discriminant() > 0.0 { LineType::Hyperbolic } else { LineType::Elliptic };
            assert_eq!(kind, base);
        }
    }
}

#[test]
fn fermat_counts() {
    let f = CubicSurface::fermat();
    let lines: Vec<ProjectiveLine> = fermat_lines_exact().into_iter().map(|l| l.line).collect();
    let a = analyze_real(&f, &lines, TOL_REAL).unwrap();
    assert_eq!((a.real_count, a.hyperbolic, a.elliptic), (3, 3, 0));
}

#[test]
fn clebsch_counts_and_orbit_constancy() {
    let f = CubicSurface::clebsch();
    let lines = find_lines(&f, 3, &FinderOptions::default()).unwrap().lines;
    let a = analyze_real(&f, &lines, TOL_REAL).unwrap();
    assert_eq!((a.real_count, a.hyperbolic, a.elliptic), (27, 15, 12));
    let d = euler_number(&lines, &GroupLattice::shared(ClassName::S4), 1e-6).unwrap();
    for o in d.orbits() {
        let kinds: Vec<_> = o.members.iter().map(|&i| a.lines[i].kind).collect();
        assert!(kinds.iter().all(|k| *k == kinds[0]));
    }
    for l in &lines {
        for g in Permutation::all() {
            assert_eq!(line_type(&f, &act_on_line(&g, l)).unwrap(), line_type(&f, l).unwrap());
        }
    }
}

#[test]
fn complex_surface_is_rejected() {
    let mut coeffs = CubicSurface::fermat().coeffs().to_vec();
    coeffs[5] = c(0.0, 1.0);
    let f = CubicSurface::new(coeffs).unwrap();
    assert_eq!(analyze_real(&f, &[], TOL_REAL), Err(RealError::SurfaceNotReal));
    assert_eq!(RealError::SurfaceNotReal.to_string(), "surface not real");
}

#[test]
fn json_shape() {
    let f = CubicSurface::fermat();
    let lines: Vec<ProjectiveLine> = fermat_lines_exact().into_iter().map(|l| l.line).collect();
    let v = serde_json::to_value(analyze_real(&f, &lines, TOL_REAL).unwrap()).unwrap();
    assert_eq!(v["real_count"], 3);
    assert_eq!(v["hyperbolic"], 3);
    assert_eq!(v["elliptic"], 0);
    assert_eq!(v["lines"][0]["real"], false);
    assert!(v["lines"][0]["type"].is_null());
    assert_eq!(v["lines"][26]["type"], "hyperbolic");
}

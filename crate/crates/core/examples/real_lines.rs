//! Real lines and their hyperbolic/elliptic types on the Clebsch surface and a random cubic.

use equivariant_lines::geometry::{find_lines, random_symmetric_cubic, CubicSurface, FinderOptions};
use equivariant_lines::real::analyze_real;

fn main() {
    let opts = FinderOptions::default();
    let clebsch = CubicSurface::clebsch();
    let sampled = random_symmetric_cubic(4, 20, &opts).expect("smooth draw");
    let surfaces = [
        ("clebsch".to_string(), find_lines(&clebsch, 0, &opts).expect("smooth").lines, clebsch),
        (format!("random {:.3?}", sampled.coefficients), sampled.report.lines, sampled.surface),
    ];
    for (name, lines, f) in &surfaces {
        let a = analyze_real(f, lines, 1e-8).expect("real smooth cubic");
        println!("{name}: {} real, {} hyperbolic, {} elliptic", a.real_count, a.hyperbolic, a.elliptic);
    }
}

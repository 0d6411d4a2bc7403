//! Finds the 27 lines on the Fermat cubic and matches them to the closed-form list.

use equivariant_lines::geometry::{fermat_lines_exact, find_lines, CubicSurface, FinderOptions};

fn main() {
    let f = CubicSurface::fermat();
    let report = find_lines(&f, 0, &FinderOptions::default()).expect("Fermat cubic is smooth");
    println!(
        "{} lines from {} Newton starts ({} converged)",
        report.lines.len(),
        report.stats.starts_used,
        report.stats.converged
    );
    let exact = fermat_lines_exact();
    for (line, residual) in report.lines.iter().zip(&report.residuals) {
        let (nearest, dist) = exact
            .iter()
            .map(|e| (e, line.distance(&e.line)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("27 exact lines");
        let color = format!("{:?}", nearest.color);
        println!("{color:<6}[{:<15}] distance {dist:.1e}, residual {residual:.1e}", nearest.notation);
    }
}

//! Orbit decomposition of the lines under S4 and under a smaller group.

use equivariant_lines::equivariant::euler_number;
use equivariant_lines::geometry::{find_lines, CubicSurface, FinderOptions};
use equivariant_lines::group::{ClassName, GroupLattice};

fn main() {
    let f = CubicSurface::symmetric([1.0, -0.4, 2.5]).expect("cubic");
    let lines = find_lines(&f, 0, &FinderOptions::default()).expect("smooth surface").lines;
    for group in [ClassName::S4, ClassName::A4, ClassName::C3] {
        let d = euler_number(&lines, &GroupLattice::shared(group), 1e-6).expect("S4-invariant line set");
        println!("{:>3}: {}", group.as_str(), d.euler_number());
        for orbit in d.orbits() {
            println!("     {} lines with stabilizer {}", orbit.members.len(), d.label(orbit));
        }
    }
}

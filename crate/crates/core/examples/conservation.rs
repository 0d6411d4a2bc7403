//! The S4 line count is the same on every smooth symmetric cubic.

use equivariant_lines::equivariant::euler_number;
use equivariant_lines::geometry::{random_symmetric_cubic, FinderOptions};
use equivariant_lines::group::{ClassName, GroupLattice};

fn main() {
    let s4 = GroupLattice::shared(ClassName::S4);
    let opts = FinderOptions::default();
    for seed in 0..5 {
        let s = random_symmetric_cubic(seed, 20, &opts).expect("smooth draw");
        let d = euler_number(&s.report.lines, &s4, 1e-6).expect("S4-invariant line set");
        println!("seed {seed} coefficients {:>6.3?}: {}", s.coefficients, d.euler_number());
    }
}

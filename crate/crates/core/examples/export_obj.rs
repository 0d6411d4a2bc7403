//! Writes the 27 real lines of the Clebsch surface as an OBJ file, one group per orbit.

use equivariant_lines::equivariant::euler_number;
use equivariant_lines::export::{export_real_lines, LineGroup};
use equivariant_lines::geometry::{find_lines, CubicSurface, FinderOptions};
use equivariant_lines::group::{ClassName, GroupLattice};

fn main() {
    let f = CubicSurface::clebsch();
    let lines = find_lines(&f, 0, &FinderOptions::default()).expect("smooth").lines;
    let d = euler_number(&lines, &GroupLattice::shared(ClassName::S4), 1e-6).expect("symmetric");
    let groups: Vec<LineGroup> = d
        .orbits()
        .iter()
        .map(|o| LineGroup {
            name: format!("orbit-{}", d.label(o)),
            lines: o.members.clone(),
        })
        .collect();
    let obj = export_real_lines(&lines, &groups, 3.0, 1e-8, None);
    let path = std::env::temp_dir().join("clebsch_lines.obj");
    std::fs::write(&path, obj.to_obj()).expect("writable temp dir");
    println!("{} segments in chart {} written to {}", obj.segment_count(), obj.chart.name, path.display());
}

//! The line count over every subgroup class, computed directly and by restriction.

use equivariant_lines::equivariant::{compare_to_reference, reference_row, table1_rows};
use equivariant_lines::geometry::{find_lines, CubicSurface, FinderOptions};

fn main() {
    let lines = find_lines(&CubicSurface::fermat(), 0, &FinderOptions::default()).expect("smooth").lines;
    for row in table1_rows(&lines, 1e-6).expect("symmetric surface") {
        let reference = reference_row(row.group);
        println!(
            "{:<7} {:<75} restriction {}, published {:?}",
            row.group.as_str(),
            row.direct.euler_number().to_string(),
            if row.agrees() { "agrees" } else { "differs" },
            compare_to_reference(row.direct.euler_number(), reference),
        );
    }
}

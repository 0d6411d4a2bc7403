//! Arithmetic in the Burnside ring of S4: products, marks, restriction and characters.

use equivariant_lines::burnside::{marks, multiply, perm_character, restrict_to, solve_character, BurnsideElement};
use equivariant_lines::group::{ClassName, GroupLattice};

fn main() {
    let s4 = GroupLattice::shared(ClassName::S4);
    let lines = BurnsideElement::parse_in(&s4, "[S4/C2o] + [S4/C2e] + [S4/D8]").expect("valid element");
    let d8 = BurnsideElement::parse_in(&s4, "[S4/D8]").expect("valid element");
    println!("lines            = {lines}  (cardinality {})", lines.cardinality());
    println!("[S4/D8]^2        = {}", multiply(&d8, &d8).expect("same ring"));
    println!("marks(lines)     = {:?}", marks(&lines));
    for target in [ClassName::D8, ClassName::K4norm] {
        let ring = GroupLattice::shared(target);
        let res = restrict_to(&lines, &ring).expect("subgroup of S4");
        let chi = perm_character(&res);
        let sols = solve_character(&chi).expect("valid character");
        println!("res to {:<7}   = {res}", target.as_str());
        println!("  character {:?} has {} G-set solutions", chi.values(), sols.solutions.len());
    }
}

use super::classes::SubgroupClass;
use super::subgroup::Subgroup;

/// Table of marks of an ambient group: entry `(i, j)` counts the points of
/// `G/K_j` fixed by `H_i`, with rows and columns in class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    marks: Vec<Vec<i64>>,
}

impl TableOfMarks {
    /// Counts fixed cosets directly: `gK` is fixed by `H` iff `g⁻¹Hg ⊆ K`.
    pub fn compute(group: &Subgroup, classes: &[SubgroupClass]) -> Self {
        let marks = classes
            .iter()
            .map(|h| {
                classes
                    .iter()
                    .map(|k| fixed_cosets(group, &h.representative, &k.representative) as i64)
                    .collect()
            })
            .collect();
        TableOfMarks { marks }
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn get(&self, h: usize, k: usize) -> i64 {
        self.marks[h][k]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.marks
    }
}

fn fixed_cosets(group: &Subgroup, h: &Subgroup, k: &Subgroup) -> usize {
    group
        .left_coset_reps(k)
        .iter()
        .filter(|g| {
            let g_inv = g.inverse();
            h.elements()
                .iter()
                .all(|x| k.contains(&g_inv.compose(x).compose(g)))
        })
        .count()
}

#[cfg(test)]
mod tests {
    use crate::group::{ClassName, GroupLattice, Subgroup};

    fn s4() -> GroupLattice {
        GroupLattice::standard(ClassName::S4)
    }

    fn idx(l: &GroupLattice, label: &str) -> usize {
        l.class_by_label(label).unwrap()
    }

    #[test]
    fn first_row_is_the_index() {
        let l = s4();
        let t = l.table_of_marks();
        for (k, class) in l.classes().iter().enumerate() {
            assert_eq!(t.get(0, k), (24 / class.order()) as i64);
        }
        assert_eq!(t.get(0, idx(&l, "D8")), 3);
    }

    #[test]
    fn d8_diagonal_is_normalizer_index() {
        let l = s4();
        let d8 = ClassName::D8.representative();
        let normalizer = d8.normalizer_in(&Subgroup::symmetric());
        let i = idx(&l, "D8");
        assert_eq!(l.table_of_marks().get(i, i), (normalizer.order() / d8.order()) as i64);
        assert_eq!(l.table_of_marks().get(i, i), 1);
    }

    #[test]
    fn transposition_fixes_nothing_in_even_class() {
        let l = s4();
        assert_eq!(l.table_of_marks().get(idx(&l, "C2o"), idx(&l, "C2e")), 0);
    }

    #[test]
    fn triangular_with_positive_diagonal() {
        for name in ClassName::ALL {
            let l = GroupLattice::standard(name);
            let t = l.table_of_marks();
            let g = l.group();
            for (i, h) in l.classes().iter().enumerate() {
                assert!(t.get(i, i) > 0);
                for (j, k) in l.classes().iter().enumerate() {
                    let subconjugate = g
                        .elements()
                        .iter()
                        .any(|x| h.representative.conjugate(x).is_subgroup_of(&k.representative));
                    if t.get(i, j) != 0 {
                        assert!(subconjugate, "{name}: {} -> {}", h.label, k.label);
                        assert!(i <= j);
                    }
                }
            }
        }
    }

    #[test]
    fn marks_match_the_conjugation_count() {
        for name in ClassName::ALL {
            let l = GroupLattice::standard(name);
            let g = l.group();
            for (i, h) in l.classes().iter().enumerate() {
                for (j, k) in l.classes().iter().enumerate() {
                    let count = g
                        .elements()
                        .iter()
                        .filter(|x| h.representative.conjugate(&x.inverse()).is_subgroup_of(&k.representative))
                        .count();
                    assert_eq!(count % k.order(), 0);
                    assert_eq!(l.table_of_marks().get(i, j), (count / k.order()) as i64);
                }
            }
        }
    }
}

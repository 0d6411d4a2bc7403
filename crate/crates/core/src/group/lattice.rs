use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use super::classes::{classify_subgroup, ClassName, ElementClass, SubgroupClass};
use super::marks::TableOfMarks;
use super::perm::Permutation;
use super::subgroup::{enumerate_subgroups, Subgroup};
use super::GroupError;

/// Subgroup classes, element classes and table of marks of one subgroup of
/// S₄, viewed as an ambient group in its own right.
#[derive(Clone, Debug)]
pub struct GroupLattice {
    group: Subgroup,
    name: ClassName,
    classes: Vec<SubgroupClass>,
    element_classes: Vec<ElementClass>,
    marks: TableOfMarks,
    products: OnceLock<ProductTable>,
}

/// `products[i][j]` holds the coefficients of `[G/H_i]·[G/H_j]`.
pub(crate) type ProductTable = Vec<Vec<Vec<i64>>>;

impl GroupLattice {
    pub fn new(group: Subgroup) -> Self {
        let name = classify_subgroup(&group);
        let classes = subgroup_classes(&group);
        let element_classes = element_classes(&group);
        let marks = TableOfMarks::compute(&group, &classes);
        GroupLattice {
            group,
            name,
            classes,
            element_classes,
            marks,
            products: OnceLock::new(),
        }
    }

    /// Lattice of the fixed representative of an S₄ class.
    pub fn standard(name: ClassName) -> Self {
        GroupLattice::new(name.representative())
    }

    /// Process-wide shared lattice of a standard representative, built once.
    pub fn shared(name: ClassName) -> Arc<GroupLattice> {
        static CACHE: [OnceLock<Arc<GroupLattice>>; 11] = [const { OnceLock::new() }; 11];
        let slot = ClassName::ALL.iter().position(|&c| c == name).expect("listed class");
        Arc::clone(CACHE[slot].get_or_init(|| Arc::new(GroupLattice::standard(name))))
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn name(&self) -> ClassName {
        self.name
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn element_classes(&self) -> &[ElementClass] {
        &self.element_classes
    }

    pub fn table_of_marks(&self) -> &TableOfMarks {
        &self.marks
    }

    /// Index of the class containing `h`, which must be a subgroup of the
    /// ambient group.
    pub fn class_of(&self, h: &Subgroup) -> Result<usize, GroupError> {
        self.classes
            .iter()
            .position(|c| c.order() == h.order() && c.members.contains(h))
            .ok_or_else(|| GroupError::NotInLattice(format!("{h:?}")))
    }

    pub fn class_by_label(&self, label: &str) -> Result<usize, GroupError> {
        let label = label.trim();
        let normalized = match label {
            "C2D" | "C2Delta" | "C2d" => "C2Δ",
            other => other,
        };
        if let Some(i) = self.classes.iter().position(|c| c.label == normalized) {
            return Ok(i);
        }
        // Fall back to the S₄ class name when it picks out a single class.
        if let Ok(name) = normalized.parse::<ClassName>() {
            let hits: Vec<usize> = (0..self.classes.len())
                .filter(|&i| self.classes[i].name == name)
                .collect();
            if hits.len() == 1 {
                return Ok(hits[0]);
            }
        }
        Err(GroupError::UnknownClass(format!("{label} in {}", self.name)))
    }

    pub fn element_class_of(&self, g: &Permutation) -> usize {
        self.element_classes
            .iter()
            .position(|c| c.members.contains(g))
            .expect("element of the ambient group")
    }

    pub(crate) fn products_with(&self, build: impl FnOnce(&GroupLattice) -> ProductTable) -> &ProductTable {
        self.products.get_or_init(|| build(self))
    }

    /// `[G : H]` for the class at `index`.
    pub fn index_of_class(&self, index: usize) -> usize {
        self.order() / self.classes[index].order()
    }
}

fn is_klein_four(g: &Subgroup) -> bool {
    g.order() == 4 && !g.is_cyclic()
}

/// Conjugacy classes of subgroups of `g` under conjugation by `g`, sorted by
/// order, then S₄ class name, then label.
fn subgroup_classes(g: &Subgroup) -> Vec<SubgroupClass> {
    let mut remaining: BTreeSet<Subgroup> = enumerate_subgroups(g).into_iter().collect();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    while let Some(h) = remaining.iter().next().cloned() {
        let members: BTreeSet<Subgroup> = g.elements().iter().map(|x| h.conjugate(x)).collect();
        for m in &members {
            remaining.remove(m);
        }
        let members: Vec<Subgroup> = members.into_iter().collect();
        let name = classify_subgroup(&h);
        let standard = name.representative();
        let representative = if members.contains(&standard) {
            standard
        } else {
            members[0].clone()
        };
        classes.push(SubgroupClass {
            name,
            label: name.as_str().to_string(),
            representative,
            members,
        });
    }
    assign_labels(g, &mut classes);
    classes.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then(a.name.cmp(&b.name))
            .then_with(|| a.label.cmp(&b.label))
    });
    classes
}

fn assign_labels(g: &Subgroup, classes: &mut [SubgroupClass]) {
    if is_klein_four(g) {
        label_klein_four(g, classes);
        return;
    }
    for name in ClassName::ALL {
        let mut dup: Vec<usize> = (0..classes.len()).filter(|&i| classes[i].name == name).collect();
        if dup.len() < 2 {
            continue;
        }
        let standard = name.representative();
        dup.sort_by_key(|&i| {
            (
                !classes[i].members.contains(&standard),
                classes[i].representative.clone(),
            )
        });
        for (k, &i) in dup.iter().enumerate() {
            classes[i].label = format!("{}.{}", name.as_str(), k + 1);
        }
    }
}

/// Left/right/diagonal labels for the three order-2 subgroups of a Klein four
/// group. With a transposition present, Δ is generated by the double
/// transposition and L by the transposition moving the smallest point. For
/// the normal Klein group, Δ = ⟨(1 2)(3 4)⟩, L = ⟨(1 3)(2 4)⟩, R = ⟨(1 4)(2 3)⟩.
fn label_klein_four(g: &Subgroup, classes: &mut [SubgroupClass]) {
    let involutions: Vec<Permutation> = g.elements().iter().copied().filter(|x| !x.is_identity()).collect();
    let (left, right, diagonal) = if classify_subgroup(g) == ClassName::K4norm {
        let p = |s: &str| s.parse::<Permutation>().expect("static cycle");
        (p("(1 3)(2 4)"), p("(1 4)(2 3)"), p("(1 2)(3 4)"))
    } else {
        let diagonal = *involutions
            .iter()
            .find(|x| x.cycle_type() == [2, 2])
            .expect("non-normal Klein group has a double transposition");
        let mut transpositions: Vec<Permutation> =
            involutions.iter().copied().filter(|x| x.cycle_type() == [2, 1, 1]).collect();
        transpositions.sort_by_key(|t| (0..4).find(|&i| t.apply(i) != i));
        (transpositions[0], transpositions[1], diagonal)
    };
    for class in classes.iter_mut().filter(|c| c.order() == 2) {
        // Elements are sorted and the identity sorts first.
        let x = class.representative.elements()[1];
        class.label = if x == left {
            "C2L"
        } else if x == right {
            "C2R"
        } else if x == diagonal {
            "C2Δ"
        } else {
            unreachable!("involution outside the Klein group")
        }
        .to_string();
    }
}

fn element_classes(g: &Subgroup) -> Vec<ElementClass> {
    let mut remaining: BTreeSet<Permutation> = g.elements().iter().copied().collect();
    let mut out: Vec<ElementClass> = Vec::new();
    while let Some(x) = remaining.iter().next().copied() {
        let members: BTreeSet<Permutation> = g.elements().iter().map(|y| x.conjugate_by(y)).collect();
        for m in &members {
            remaining.remove(m);
        }
        let members: Vec<Permutation> = members.into_iter().collect();
        let representative = *members.iter().min_by_key(|p| p.cycles()).expect("nonempty class");
        out.push(ElementClass {
            representative,
            members,
        });
    }
    out.sort_by_key(|c| {
        (
            c.representative.order(),
            c.representative.moved_points(),
            c.representative,
        )
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(l: &GroupLattice) -> Vec<String> {
        l.classes().iter().map(|c| c.label.clone()).collect()
    }

    #[test]
    fn s4_has_eleven_classes_in_fixed_order() {
        let l = GroupLattice::standard(ClassName::S4);
        assert_eq!(
            labels(&l),
            ["e", "C2o", "C2e", "C3", "K4norm", "K4", "C4", "S3", "D8", "A4", "S4"]
        );
        let total: usize = l.classes().iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 30);
        for (c, name) in l.classes().iter().zip(ClassName::ALL) {
            assert_eq!(c.representative, name.representative());
        }
    }

    #[test]
    fn s4_element_classes() {
        let l = GroupLattice::standard(ClassName::S4);
        let reps: Vec<String> = l.element_classes().iter().map(|c| c.representative.to_string()).collect();
        assert_eq!(reps, ["()", "(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4)"]);
        let sizes: Vec<usize> = l.element_classes().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, [1, 6, 3, 8, 6]);
    }

    #[test]
    fn klein_labels() {
        let k4 = GroupLattice::standard(ClassName::K4);
        assert_eq!(labels(&k4), ["e", "C2L", "C2R", "C2Δ", "K4"]);
        let l = &k4.classes()[k4.class_by_label("C2L").unwrap()];
        assert_eq!(l.representative, Subgroup::generated_by_cycles(&["(1 2)"]).unwrap());
        let r = &k4.classes()[k4.class_by_label("C2R").unwrap()];
        assert_eq!(r.representative, Subgroup::generated_by_cycles(&["(3 4)"]).unwrap());

        let v4 = GroupLattice::standard(ClassName::K4norm);
        assert_eq!(labels(&v4), ["e", "C2L", "C2R", "C2Δ", "K4norm"]);
        let d = &v4.classes()[v4.class_by_label("C2D").unwrap()];
        assert_eq!(d.representative, ClassName::C2e.representative());
    }

    #[test]
    fn d8_classes() {
        let d8 = GroupLattice::standard(ClassName::D8);
        assert_eq!(
            labels(&d8),
            ["e", "C2o", "C2e.1", "C2e.2", "K4norm", "K4", "C4", "D8"]
        );
        // The centre ⟨(1 2)(3 4)⟩ is its own class.
        let centre = &d8.classes()[d8.class_by_label("C2e.1").unwrap()];
        assert_eq!(centre.members.len(), 1);
        assert_eq!(centre.representative, ClassName::C2e.representative());
        assert!(d8.class_by_label("C2e").is_err());
        assert_eq!(d8.element_classes().len(), 5);
    }

    #[test]
    fn class_counts_of_standard_subgroups() {
        let expected = [
            (ClassName::E, 1),
            (ClassName::C2o, 2),
            (ClassName::C2e, 2),
            (ClassName::C3, 2),
            (ClassName::K4norm, 5),
            (ClassName::K4, 5),
            (ClassName::C4, 3),
            (ClassName::S3, 4),
            (ClassName::D8, 8),
            (ClassName::A4, 5),
            (ClassName::S4, 11),
        ];
        for (name, n) in expected {
            assert_eq!(GroupLattice::standard(name).classes().len(), n, "{name}");
        }
    }
}

//! The published table of orbit types for every subgroup class, with each
//! printed label resolved to classes of our lattices.

use crate::burnside::BurnsideElement;
use crate::group::ClassName;

/// One published row. Each term is a coefficient and the labels whose
/// coefficients it sums: a printed label such as `C2e` inside `D8` covers
/// two classes there.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub group: ClassName,
    pub printed: &'static str,
    pub terms: &'static [(i64, &'static [&'static str])],
}

pub const REFERENCE_TABLE1: [ReferenceRow; 11] = [
    ReferenceRow {
        group: ClassName::E,
        printed: "27[e/e]",
        terms: &[(27, &["e"])],
    },
    ReferenceRow {
        group: ClassName::C2o,
        printed: "12[C2/e] + 3[C2/C2]",
        terms: &[(12, &["e"]), (3, &["C2o"])],
    },
    ReferenceRow {
        group: ClassName::C2e,
        printed: "10[C2/e] + 7[C2/C2]",
        terms: &[(10, &["e"]), (7, &["C2e"])],
    },
    ReferenceRow {
        group: ClassName::C3,
        printed: "9[C3/e]",
        terms: &[(9, &["e"])],
    },
    ReferenceRow {
        group: ClassName::K4norm,
        printed: "[K4/e] + 4[K4/C2L] + 4[K4/C2R] + 2[K4/C2Δ] + 3[K4/K4]",
        terms: &[(1, &["e"]), (4, &["C2L"]), (4, &["C2R"]), (2, &["C2Δ"]), (3, &["K4norm"])],
    },
    ReferenceRow {
        group: ClassName::K4,
        printed: "4[K4/e] + [K4/C2L] + [K4/C2R] + 3[K4/C2Δ] + [K4/K4]",
        terms: &[(4, &["e"]), (1, &["C2L"]), (1, &["C2R"]), (3, &["C2Δ"]), (1, &["K4"])],
    },
    ReferenceRow {
        group: ClassName::C4,
        // The order-2 subgroup of C4 is generated by a double transposition.
        printed: "5[C4/e] + 3[C4/C2o] + [C4/C4]",
        terms: &[(5, &["e"]), (3, &["C2e"]), (1, &["C4"])],
    },
    ReferenceRow {
        group: ClassName::S3,
        printed: "3[S3/e] + 3[S3/C2o]",
        terms: &[(3, &["e"]), (3, &["C2o"])],
    },
    ReferenceRow {
        group: ClassName::D8,
        printed: "[D8/e] + 3[D8/C2e] + [D8/C2o] + [D8/K4] + [D8/D8]",
        terms: &[
            (1, &["e"]),
            (3, &["C2e.1", "C2e.2"]),
            (1, &["C2o"]),
            (1, &["K4norm", "K4"]),
            (1, &["D8"]),
        ],
    },
    ReferenceRow {
        group: ClassName::A4,
        printed: "[A4/e] + 2[A4/C2e] + [A4/K4]",
        terms: &[(1, &["e"]), (2, &["C2e"]), (1, &["K4norm"])],
    },
    ReferenceRow {
        group: ClassName::S4,
        printed: "[S4/C2o] + [S4/C2e] + [S4/D8]",
        terms: &[(1, &["C2o"]), (1, &["C2e"]), (1, &["D8"])],
    },
];

pub fn reference_row(group: ClassName) -> &'static ReferenceRow {
    REFERENCE_TABLE1
        .iter()
        .find(|r| r.group == group)
        .expect("every class has a row")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowMatch {
    Exact,
    /// Equal after exchanging the `C2L` and `C2R` coefficients.
    SwappedLR,
    Differs,
}

impl RowMatch {
    pub fn is_match(self) -> bool {
        self != RowMatch::Differs
    }
}

fn matches(coeffs: &[i64], x: &BurnsideElement, row: &ReferenceRow) -> bool {
    let ring = x.ring();
    let mut covered = vec![false; coeffs.len()];
    for (k, labels) in row.terms {
        let mut sum = 0;
        for label in *labels {
            let Ok(i) = ring.class_by_label(label) else { return false };
            covered[i] = true;
            sum += coeffs[i];
        }
        if sum != *k {
            return false;
        }
    }
    coeffs.iter().zip(&covered).all(|(&c, &seen)| seen || c == 0)
}

pub fn compare_to_reference(x: &BurnsideElement, row: &ReferenceRow) -> RowMatch {
    if x.ring().name() != row.group {
        return RowMatch::Differs;
    }
    let coeffs = x.coeffs().to_vec();
    if matches(&coeffs, x, row) {
        return RowMatch::Exact;
    }
    let ring = x.ring();
    if let (Ok(l), Ok(r)) = (ring.class_by_label("C2L"), ring.class_by_label("C2R")) {
        let mut swapped = coeffs;
        swapped.swap(l, r);
        if matches(&swapped, x, row) {
            return RowMatch::SwappedLR;
        }
    }
    RowMatch::Differs
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::subgroup::Subgroup;
use super::GroupError;

/// The eleven conjugacy classes of subgroups of S₄.
///
/// The variant order is the tie-break used when sorting classes of equal
/// subgroup order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassName {
    E,
    C2o,
    C2e,
    C3,
    K4norm,
    K4,
    C4,
    S3,
    D8,
    A4,
    S4,
}

impl ClassName {
    pub const ALL: [ClassName; 11] = [
        ClassName::E,
        ClassName::C2o,
        ClassName::C2e,
        ClassName::C3,
        ClassName::K4norm,
        ClassName::K4,
        ClassName::C4,
        ClassName::S3,
        ClassName::D8,
        ClassName::A4,
        ClassName::S4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::E => "e",
            ClassName::C2o => "C2o",
            ClassName::C2e => "C2e",
            ClassName::C3 => "C3",
            ClassName::K4norm => "K4norm",
            ClassName::K4 => "K4",
            ClassName::C4 => "C4",
            ClassName::S3 => "S3",
            ClassName::D8 => "D8",
            ClassName::A4 => "A4",
            ClassName::S4 => "S4",
        }
    }

    pub fn order(self) -> usize {
        match self {
            ClassName::E => 1,
            ClassName::C2o | ClassName::C2e => 2,
            ClassName::C3 => 3,
            ClassName::K4norm | ClassName::K4 | ClassName::C4 => 4,
            ClassName::S3 => 6,
            ClassName::D8 => 8,
            ClassName::A4 => 12,
            ClassName::S4 => 24,
        }
    }

    /// Fixed representative of the class inside S₄.
    ///
    /// The D₈ representative is the stabilizer of the real Fermat line
    /// `[w:-w:z:-z]`; the non-normal K₄, C₄ and C2o representatives sit
    /// inside it.
    pub fn representative(self) -> Subgroup {
        let gens: &[&str] = match self {
            ClassName::E => &[],
            ClassName::C2o => &["(1 2)"],
            ClassName::C2e => &["(1 2)(3 4)"],
            ClassName::C3 => &["(1 2 3)"],
            ClassName::K4norm => &["(1 2)(3 4)", "(1 3)(2 4)"],
            ClassName::K4 => &["(1 2)", "(3 4)"],
            ClassName::C4 => &["(1 3 2 4)"],
            ClassName::S3 => &["(1 2 3)", "(1 2)"],
            ClassName::D8 => &["(1 3)(2 4)", "(1 2)", "(3 4)"],
            ClassName::A4 => &["(1 2 3)", "(1 2)(3 4)"],
            ClassName::S4 => &["(1 2 3 4)", "(1 2)"],
        };
        Subgroup::generated_by_cycles(gens).expect("static generators parse")
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .or(match s {
                "1" | "E" | "C1" => Some(ClassName::E),
                "K4n" | "V4" | "K4◁" => Some(ClassName::K4norm),
                _ => None,
            })
            .ok_or_else(|| GroupError::UnknownClass(s.to_string()))
    }
}

/// S₄-conjugacy class of a subgroup of S₄, from its order and cycle types.
pub fn classify_subgroup(h: &Subgroup) -> ClassName {
    let elements = h.elements();
    let has_transposition = elements.iter().any(|g| g.cycle_type() == [2, 1, 1]);
    match h.order() {
        1 => ClassName::E,
        2 if has_transposition => ClassName::C2o,
        2 => ClassName::C2e,
        3 => ClassName::C3,
        4 if elements.iter().any(|g| g.order() == 4) => ClassName::C4,
        4 if elements
            .iter()
            .filter(|g| !g.is_identity())
            .all(|g| g.cycle_type() == [2, 2]) =>
        {
            ClassName::K4norm
        }
        4 => ClassName::K4,
        6 => ClassName::S3,
        8 => ClassName::D8,
        12 => ClassName::A4,
        24 => ClassName::S4,
        n => unreachable!("subgroup of S4 with order {n}"),
    }
}

/// A conjugacy class of subgroups inside some ambient subgroup of S₄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// S₄-conjugacy class of the members.
    pub name: ClassName,
    /// Name used inside the ambient group; equals `name` unless the ambient
    /// group has several classes fusing to the same S₄ class.
    pub label: String,
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// A conjugacy class of elements of the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
}

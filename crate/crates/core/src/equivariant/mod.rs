//! Orbit decompositions of lines under coordinate permutations, and the
//! Burnside-ring Euler number they define.

mod reference;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::burnside::{restrict_to, transfer, BurnsideElement, BurnsideError, ClassFunction};
use crate::geometry::{CubicSurface, FinderOptions, GeometryError, ProjectiveLine};
use crate::group::{orbits, ClassName, GroupError, GroupLattice, Permutation, Subgroup};

pub use reference::{compare_to_reference, reference_row, ReferenceRow, RowMatch, REFERENCE_TABLE1};

#[derive(Debug, thiserror::Error)]
pub enum EquivariantError {
    #[error("lines are not closed under {group}: line {point} has no image under {element}")]
    NotClosed {
        group: ClassName,
        point: usize,
        element: Permutation,
    },
    #[error("{group}: direct orbits {direct} differ from restriction {restricted}")]
    Mismatch {
        group: ClassName,
        direct: String,
        restricted: String,
    },
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `g·ℓ`: coordinate `i` of each spanning point moves to position `g(i)`.
pub fn act_on_line(g: &Permutation, line: &ProjectiveLine) -> ProjectiveLine {
    let [p, q] = line.span();
    let move_point = |x: &[num_complex::Complex64; 4]| {
        let mut y = *x;
        for (i, xi) in x.iter().enumerate() {
            y[g.apply(i)] = *xi;
        }
        y
    };
    ProjectiveLine::from_span(&move_point(p), &move_point(q)).expect("permuting coordinates keeps independence")
}

#[derive(Clone, Debug)]
pub struct LineOrbit {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted line indices.
    pub members: Vec<usize>,
    /// Stabilizer of the representative.
    pub stabilizer: Subgroup,
    /// Class index of the stabilizer in the acting group's lattice.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    ring: Arc<GroupLattice>,
    orbits: Vec<LineOrbit>,
    euler_number: BurnsideElement,
}

impl OrbitDecomposition {
    pub fn ring(&self) -> &Arc<GroupLattice> {
        &self.ring
    }

    pub fn group(&self) -> &Subgroup {
        self.ring.group()
    }

    /// Ordered by stabilizer class, then by representative.
    pub fn orbits(&self) -> &[LineOrbit] {
        &self.orbits
    }

    pub fn euler_number(&self) -> &BurnsideElement {
        &self.euler_number
    }

    pub fn label(&self, orbit: &LineOrbit) -> &str {
        &self.ring.classes()[orbit.class].label
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    pub fn to_json(&self) -> OrbitDecompositionJson {
        OrbitDecompositionJson {
            group: self.ring.name().to_string(),
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitJson {
                    stabilizer: self.label(o).to_string(),
                    size: o.members.len(),
                    members: o.members.clone(),
                })
                .collect(),
            euler_number: self.euler_number.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub stabilizer: String,
    pub size: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecompositionJson {
    pub group: String,
    pub orbits: Vec<OrbitJson>,
    pub euler_number: String,
}

fn same_line(tol: f64) -> impl Fn(&ProjectiveLine, &ProjectiveLine) -> bool {
    move |a, b| a.distance(b) < tol
}

/// Orbits of `lines` under the ambient group of `ring`, and
/// `Σ_orbits [G/G_ℓ]`.
pub fn euler_number(
    lines: &[ProjectiveLine],
    ring: &Arc<GroupLattice>,
    tol_match: f64,
) -> Result<OrbitDecomposition, EquivariantError> {
    let found = orbits(ring.group(), lines, act_on_line, same_line(tol_match)).map_err(|e| match e {
        GroupError::PointsNotClosed { point, element } => EquivariantError::NotClosed {
            group: ring.name(),
            point,
            element,
        },
        other => EquivariantError::Group(other),
    })?;
    let mut out: Vec<LineOrbit> = found
        .into_iter()
        .map(|o| {
            let class = ring.class_of(&o.stabilizer).map_err(EquivariantError::Group)?;
            Ok(LineOrbit {
                representative: o.members[0],
                members: o.members,
                stabilizer: o.stabilizer,
                class,
            })
        })
        .collect::<Result<_, EquivariantError>>()?;
    out.sort_by_key(|o| (o.class, o.representative));
    let mut total = BurnsideElement::zero(ring);
    for o in &out {
        total = &total + &transfer(ring, o.class);
    }
    Ok(OrbitDecomposition {
        ring: Arc::clone(ring),
        orbits: out,
        euler_number: total,
    })
}

/// Number of lines fixed by each element class, counted directly.
pub fn line_character(
    lines: &[ProjectiveLine],
    ring: &Arc<GroupLattice>,
    tol_match: f64,
) -> ClassFunction {
    let eq = same_line(tol_match);
    let values = ring
        .element_classes()
        .iter()
        .map(|c| {
            lines
                .iter()
                .filter(|l| eq(&act_on_line(&c.representative, l), l))
                .count() as i64
        })
        .collect();
    ClassFunction::new(ring, values)
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub group: ClassName,
    pub direct: OrbitDecomposition,
    pub restricted: BurnsideElement,
}

impl Table1Row {
    pub fn agrees(&self) -> bool {
        self.direct.euler_number() == &self.restricted
    }
}

/// For each subgroup class, the orbits under its fixed representative,
/// both directly and by restricting the S₄ answer.
pub fn table1_rows(lines: &[ProjectiveLine], tol_match: f64) -> Result<Vec<Table1Row>, EquivariantError> {
    let s4 = euler_number(lines, &GroupLattice::shared(ClassName::S4), tol_match)?;
    ClassName::ALL
        .iter()
        .map(|&name| {
            let ring = GroupLattice::shared(name);
            Ok(Table1Row {
                group: name,
                direct: euler_number(lines, &ring, tol_match)?,
                restricted: restrict_to(s4.euler_number(), &ring)?,
            })
        })
        .collect()
}

/// Like [`table1_rows`], failing on the first row where the two answers
/// differ.
pub fn table1(lines: &[ProjectiveLine], tol_match: f64) -> Result<Vec<Table1Row>, EquivariantError> {
    let rows = table1_rows(lines, tol_match)?;
    if let Some(bad) = rows.iter().find(|r| !r.agrees()) {
        return Err(EquivariantError::Mismatch {
            group: bad.group,
            direct: bad.direct.euler_number().to_string(),
            restricted: bad.restricted.to_string(),
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug)]
pub struct Conservation {
    pub first: OrbitDecomposition,
    pub second: OrbitDecomposition,
}

impl Conservation {
    pub fn holds(&self) -> bool {
        self.first.euler_number() == self.second.euler_number()
    }
}

/// Finds the lines on both surfaces and compares their Euler numbers over
/// `group`.
pub fn verify_conservation(
    f1: &CubicSurface,
    f2: &CubicSurface,
    group: ClassName,
    seed: u64,
    opts: &FinderOptions,
    tol_match: f64,
) -> Result<Conservation, EquivariantError> {
    let ring = GroupLattice::shared(group);
    let decompose = |f: &CubicSurface| -> Result<OrbitDecomposition, EquivariantError> {
        let report = crate::geometry::find_lines(f, seed, opts)?;
        euler_number(&report.lines, &ring, tol_match)
    };
    Ok(Conservation {
        first: decompose(f1)?,
        second: decompose(f2)?,
    })
}

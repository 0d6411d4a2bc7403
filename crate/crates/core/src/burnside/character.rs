use std::sync::Arc;

use crate::group::{GroupLattice, Subgroup};

use super::{BurnsideElement, BurnsideError};

/// An integer class function, one value per element conjugacy class of the
/// ambient group, in [`GroupLattice::element_classes`] order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    ring: Arc<GroupLattice>,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(ring: &Arc<GroupLattice>, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), ring.element_classes().len());
        ClassFunction {
            ring: Arc::clone(ring),
            values,
        }
    }

    pub fn ring(&self) -> &Arc<GroupLattice> {
        &self.ring
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value at the identity.
    pub fn degree(&self) -> i64 {
        self.values[0]
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.ring.group() == other.ring.group() && self.values == other.values
    }
}

impl Eq for ClassFunction {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSolutions {
    pub solutions: Vec<BurnsideElement>,
    pub unique: bool,
}

/// All G-sets (nonnegative Burnside elements) whose permutation character is
/// `chi`, by bounded depth-first search over coefficient vectors.
pub fn solve_character(chi: &ClassFunction) -> Result<CharacterSolutions, BurnsideError> {
    let ring = chi.ring();
    if chi.degree() < 0 {
        return Err(BurnsideError::BadCharacter("negative value at the identity".into()));
    }
    let n = ring.classes().len();
    // columns[j][c]: fixed points of class c on G/K_j.
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            ring.element_classes()
                .iter()
                .map(|c| {
                    let cyclic = Subgroup::generated_by(&[c.representative]);
                    let h = ring.class_of(&cyclic).expect("cyclic subgroup");
                    ring.table_of_marks().get(h, j)
                })
                .collect()
        })
        .collect();
    let sizes: Vec<i64> = (0..n).map(|j| ring.index_of_class(j) as i64).collect();

    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; n];
    let mut partial = vec![0i64; chi.values.len()];
    search(0, chi.degree(), &sizes, &columns, &chi.values, &mut current, &mut partial, &mut found);

    if found.is_empty() {
        return Err(BurnsideError::NoSolution);
    }
    let unique = found.len() == 1;
    Ok(CharacterSolutions {
        solutions: found.into_iter().map(|c| BurnsideElement::from_coeffs(ring, c)).collect(),
        unique,
    })
}

#[allow(clippy::too_many_arguments)]
fn search(
    j: usize,
    remaining: i64,
    sizes: &[i64],
    columns: &[Vec<i64>],
    target: &[i64],
    current: &mut Vec<i64>,
    partial: &mut Vec<i64>,
    found: &mut Vec<Vec<i64>>,
) {
    if j == sizes.len() {
        if remaining == 0 && partial.as_slice() == target {
            found.push(current.clone());
        }
        return;
    }
    if j == sizes.len() - 1 {
        // [G/G] has size one; its coefficient is forced.
        let c = remaining / sizes[j];
        if c * sizes[j] == remaining {
            apply(current, partial, columns, j, c);
            search(j + 1, 0, sizes, columns, target, current, partial, found);
            apply(current, partial, columns, j, -c);
        }
        return;
    }
    for c in 0..=remaining / sizes[j] {
        apply(current, partial, columns, j, c);
        search(j + 1, remaining - c * sizes[j], sizes, columns, target, current, partial, found);
        apply(current, partial, columns, j, -c);
    }
}

fn apply(current: &mut [i64], partial: &mut [i64], columns: &[Vec<i64>], j: usize, delta: i64) {
    current[j] += delta;
    for (p, col) in partial.iter_mut().zip(&columns[j]) {
        *p += delta * col;
    }
}

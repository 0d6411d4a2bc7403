use std::collections::BTreeSet;
use std::fmt;

use super::perm::Permutation;
use super::GroupError;

/// A subgroup of S₄, stored as its sorted element list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<Permutation>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup {
            elements: vec![Permutation::IDENTITY],
        }
    }

    pub fn symmetric() -> Self {
        Subgroup {
            elements: Permutation::all(),
        }
    }

    /// Smallest subgroup containing `generators`.
    pub fn generated_by(generators: &[Permutation]) -> Self {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::IDENTITY);
        let mut frontier: Vec<Permutation> = vec![Permutation::IDENTITY];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = g.compose(&x);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            elements: set.into_iter().collect(),
        }
    }

    /// Parses generators in cycle notation, e.g. `["(1 3)(2 4)", "(1 2)"]`.
    pub fn generated_by_cycles(generators: &[&str]) -> Result<Self, GroupError> {
        let gens = generators
            .iter()
            .map(|s| s.parse::<Permutation>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subgroup::generated_by(&gens))
    }

    /// Checks the subgroup axioms on an explicit element set.
    pub fn from_elements(elements: impl IntoIterator<Item = Permutation>) -> Result<Self, GroupError> {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        if !set.contains(&Permutation::IDENTITY) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for a in &set {
            if !set.contains(&a.inverse()) {
                return Err(GroupError::NotASubgroup(format!("missing inverse of {a}")));
            }
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(GroupError::NotASubgroup(format!("{a}·{b} not in set")));
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Subgroup {
        let mut elements: Vec<Permutation> = self.elements.iter().map(|h| h.conjugate_by(g)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().copied().filter(|g| other.contains(g)).collect(),
        }
    }

    pub fn normalizer_in(&self, ambient: &Subgroup) -> Subgroup {
        Subgroup {
            elements: ambient
                .elements
                .iter()
                .copied()
                .filter(|g| self.conjugate(g) == *self)
                .collect(),
        }
    }

    pub fn is_normal_in(&self, ambient: &Subgroup) -> bool {
        ambient.elements.iter().all(|g| self.conjugate(g) == *self)
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|g| g.order() == self.order())
    }

    /// One representative per left coset `gK` of `k` in `self`, taken as the
    /// smallest element of the coset. Sorted.
    pub fn left_coset_reps(&self, k: &Subgroup) -> Vec<Permutation> {
        let mut reps: BTreeSet<Permutation> = BTreeSet::new();
        for g in &self.elements {
            reps.insert(coset_rep(g, k));
        }
        reps.into_iter().collect()
    }
}

/// Canonical representative of the left coset `gK`.
pub fn coset_rep(g: &Permutation, k: &Subgroup) -> Permutation {
    k.elements()
        .iter()
        .map(|x| g.compose(x))
        .min()
        .expect("subgroup is nonempty")
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

/// Every subgroup of `g` exactly once, sorted by order and then elements.
///
/// Grows the set of known subgroups by adjoining one element at a time;
/// every subgroup arises this way from the trivial group.
pub fn enumerate_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    found.insert(Subgroup::trivial());
    let mut frontier = vec![Subgroup::trivial()];
    while let Some(h) = frontier.pop() {
        for x in g.elements() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.elements().to_vec();
            gens.push(*x);
            let bigger = Subgroup::generated_by(&gens);
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

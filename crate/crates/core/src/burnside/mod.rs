//! The Burnside ring of a subgroup of S₄: the value ring of equivariant
//! Euler numbers.
//!
//! Elements are integer combinations of orbit types `[G/H]`, one per
//! conjugacy class of subgroups. Products are computed from double cosets
//! and restrictions from orbits on explicit coset spaces; the mark
//! homomorphism is kept as an independent check on both.

mod character;
mod notation;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::group::{coset_rep, orbits, GroupError, GroupLattice, Permutation, Subgroup};

pub use character::{solve_character, CharacterSolutions, ClassFunction};
pub use notation::parse_element;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("elements live over different ambient groups ({0} vs {1})")]
    AmbientMismatch(String, String),
    #[error("cannot parse Burnside element: {0}")]
    Parse(String),
    #[error("no nonnegative Burnside element has this permutation character")]
    NoSolution,
    #[error("invalid character: {0}")]
    BadCharacter(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An integer combination of orbit types `[G/H]` over a fixed ambient group.
#[derive(Clone)]
pub struct BurnsideElement {
    ring: Arc<GroupLattice>,
    coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(ring: &Arc<GroupLattice>) -> Self {
        BurnsideElement {
            ring: Arc::clone(ring),
            coeffs: vec![0; ring.classes().len()],
        }
    }

    /// The one-point G-set `[G/G]`.
    pub fn one(ring: &Arc<GroupLattice>) -> Self {
        transfer(ring, ring.classes().len() - 1)
    }

    pub fn from_coeffs(ring: &Arc<GroupLattice>, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), ring.classes().len(), "one coefficient per class");
        BurnsideElement {
            ring: Arc::clone(ring),
            coeffs,
        }
    }

    pub fn ring(&self) -> &Arc<GroupLattice> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, label: &str) -> Result<i64, BurnsideError> {
        Ok(self.coeffs[self.ring.class_by_label(label)?])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Cardinality of the underlying G-set (virtual if coefficients are
    /// negative).
    pub fn cardinality(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * self.ring.index_of_class(i) as i64)
            .sum()
    }

    fn same_ambient(&self, other: &BurnsideElement) -> Result<(), BurnsideError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.group() == other.ring.group() {
            Ok(())
        } else {
            Err(BurnsideError::AmbientMismatch(
                self.ring.name().to_string(),
                other.ring.name().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
        self.same_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
        self.same_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &BurnsideElement, f: impl Fn(i64, i64) -> i64) -> BurnsideElement {
        BurnsideElement {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> BurnsideElement {
        BurnsideElement {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.group() == other.ring.group() && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement({self})")
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.checked_add(rhs).expect("ambient groups agree")
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.checked_sub(rhs).expect("ambient groups agree")
    }
}

impl Mul for &BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: &BurnsideElement) -> BurnsideElement {
        multiply(self, rhs).expect("ambient groups agree")
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        self.scale(-1)
    }
}

/// `Tr_H^G(1) = [G/H]` for the class at `class`.
pub fn transfer(ring: &Arc<GroupLattice>, class: usize) -> BurnsideElement {
    let mut x = BurnsideElement::zero(ring);
    x.coeffs[class] = 1;
    x
}

/// Transfer by class label, e.g. `"D8"` or `"C2L"`.
pub fn transfer_by_label(ring: &Arc<GroupLattice>, label: &str) -> Result<BurnsideElement, BurnsideError> {
    Ok(transfer(ring, ring.class_by_label(label)?))
}

/// Mark vector: entry `H` is the number of `H`-fixed points.
pub fn marks(x: &BurnsideElement) -> Vec<i64> {
    let table = x.ring.table_of_marks();
    (0..table.len())
        .map(|h| (0..table.len()).map(|k| x.coeffs[k] * table.get(h, k)).sum())
        .collect()
}

/// Product of two elements, from the double coset formula
/// `[G/H]·[G/K] = Σ_{HgK} [G/(H ∩ gKg⁻¹)]`.
pub fn multiply(x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    x.same_ambient(y)?;
    let ring = &x.ring;
    let n = ring.classes().len();
    let table = ring.products_with(|l| {
        (0..n)
            .map(|i| (0..n).map(|j| basis_product(l, i, j)).collect())
            .collect()
    });
    let mut out = BurnsideElement::zero(ring);
    for i in (0..n).filter(|&i| x.coeffs[i] != 0) {
        for j in (0..n).filter(|&j| y.coeffs[j] != 0) {
            for (slot, c) in out.coeffs.iter_mut().zip(&table[i][j]) {
                *slot += x.coeffs[i] * y.coeffs[j] * c;
            }
        }
    }
    Ok(out)
}

fn basis_product(ring: &GroupLattice, i: usize, j: usize) -> Vec<i64> {
    let g = ring.group();
    let h = &ring.classes()[i].representative;
    let k = &ring.classes()[j].representative;
    let mut seen: Vec<Vec<Permutation>> = Vec::new();
    let mut out = vec![0i64; ring.classes().len()];
    for x in g.elements() {
        let mut double: Vec<Permutation> = h
            .elements()
            .iter()
            .flat_map(|a| k.elements().iter().map(move |b| a.compose(x).compose(b)))
            .collect();
        double.sort_unstable();
        double.dedup();
        if seen.contains(&double) {
            continue;
        }
        seen.push(double);
        let meet = h.intersection(&k.conjugate(x));
        out[ring.class_of(&meet).expect("intersection is a subgroup of the ambient group")] += 1;
    }
    out
}

/// `Res^G_H`, with `H` taken as a new ambient group.
pub fn restrict(x: &BurnsideElement, h: &Subgroup) -> Result<BurnsideElement, BurnsideError> {
    restrict_to(x, &Arc::new(GroupLattice::new(h.clone())))
}

/// Restriction into an already built lattice of a subgroup.
pub fn restrict_to(x: &BurnsideElement, target: &Arc<GroupLattice>) -> Result<BurnsideElement, BurnsideError> {
    let g = x.ring.group();
    let h = target.group();
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotInLattice(format!("{h:?}")).into());
    }
    let mut out = BurnsideElement::zero(target);
    for (j, class) in x.ring.classes().iter().enumerate() {
        if x.coeffs[j] == 0 {
            continue;
        }
        let k = &class.representative;
        let cosets = g.left_coset_reps(k);
        let orbs = orbits(h, &cosets, |a, c| coset_rep(&a.compose(c), k), |a, b| a == b)?;
        for orbit in orbs {
            out.coeffs[target.class_of(&orbit.stabilizer)?] += x.coeffs[j];
        }
    }
    Ok(out)
}

/// Permutation character: the value at an element `g` is the number of
/// points fixed by `g`, i.e. the mark at `⟨g⟩`.
pub fn perm_character(x: &BurnsideElement) -> ClassFunction {
    let m = marks(x);
    let values = x
        .ring
        .element_classes()
        .iter()
        .map(|c| {
            let cyclic = Subgroup::generated_by(&[c.representative]);
            m[x.ring.class_of(&cyclic).expect("cyclic subgroup of the ambient group")]
        })
        .collect();
    ClassFunction::new(&x.ring, values)
}

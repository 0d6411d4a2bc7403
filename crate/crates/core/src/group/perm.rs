use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// Number of points permuted. The coordinate action on P³ permutes four
/// homogeneous coordinates.
pub const DEGREE: usize = 4;

/// A permutation of `{0, 1, 2, 3}` stored as its image table.
///
/// Parsing and display use 1-based cycle notation, so `(1 2)` swaps the
/// coordinates `x0` and `x1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; DEGREE]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3]);

    pub fn from_images(images: [u8; DEGREE]) -> Result<Self, GroupError> {
        let mut seen = [false; DEGREE];
        for &i in &images {
            let i = i as usize;
            if i >= DEGREE || seen[i] {
                return Err(GroupError::NotABijection(images.to_vec()));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from 1-based cycles, e.g. `&[&[1, 3], &[2, 4]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self, GroupError> {
        let mut images = [0u8, 1, 2, 3];
        let mut used = [false; DEGREE];
        for cycle in cycles {
            for (pos, &label) in cycle.iter().enumerate() {
                if label == 0 || label as usize > DEGREE || used[label as usize - 1] {
                    return Err(GroupError::BadCycle(format!("{cycles:?}")));
                }
                used[label as usize - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[label as usize - 1] = next - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn images(&self) -> [u8; DEGREE] {
        self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self.compose(other)` maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut out = [0u8; DEGREE];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Permutation(out)
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = [0u8; DEGREE];
        for i in 0..DEGREE {
            out[self.0[i] as usize] = i as u8;
        }
        Permutation(out)
    }

    /// `g h g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Cycle lengths in nonincreasing order, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let fixed = DEGREE - lengths.iter().sum::<usize>();
        lengths.extend(std::iter::repeat_n(1, fixed));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    pub fn moved_points(&self) -> usize {
        (0..DEGREE).filter(|&i| self.apply(i) != i).count()
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub(crate) fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; DEGREE];
        let mut out = Vec::new();
        for start in 0..DEGREE {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            out.push(cycle);
        }
        out
    }

    /// All 24 permutations in lexicographic order of image tables.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Ok(p) = Permutation::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let labels: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", labels.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = GroupError;

    /// Parses 1-based cycle notation: `()`, `e`, `(1 2)(3 4)`, `(1,2,3)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "()" {
            return Ok(Permutation::IDENTITY);
        }
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| GroupError::BadCycle(s.to_string()))?;
            let close = open
                .find(')')
                .ok_or_else(|| GroupError::BadCycle(s.to_string()))?;
            let body = &open[..close];
            let labels = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u8>().map_err(|_| GroupError::BadCycle(s.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if !labels.is_empty() {
                cycles.push(labels);
            }
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[u8]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(&refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn transposition_is_an_involution() {
        assert_eq!(p("(1 2)").compose(&p("(1 2)")), Permutation::IDENTITY);
    }

    #[test]
    fn disjoint_transpositions_compose() {
        assert_eq!(p("(1 2)").compose(&p("(3 4)")), p("(1 2)(3 4)"));
        assert_eq!(p("(3 4)").compose(&p("(1 2)")), p("(1 2)(3 4)"));
    }

    #[test]
    fn three_cycle_after_transposition() {
        // Direct evaluation: (1 2) then (1 2 3).
        // 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1, 4 fixed.
        let product = p("(1 2 3)").compose(&p("(1 2)"));
        assert_eq!(product.images(), [2, 1, 0, 3]);
        assert_eq!(product, p("(1 3)"));
    }

    #[test]
    fn group_axioms_on_all_of_s4() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        for a in &all {
            assert_eq!(a.compose(&a.inverse()), Permutation::IDENTITY);
            assert_eq!(Permutation::IDENTITY.compose(a), *a);
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(&b.compose(c)), a.compose(b).compose(c));
                }
            }
        }
    }

    #[test]
    fn display_round_trips() {
        for g in Permutation::all() {
            assert_eq!(p(&g.to_string()), g);
        }
        assert_eq!(p("(1 3 2 4)").to_string(), "(1 3 2 4)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images([0, 0, 1, 2]).is_err());
        assert!("(1 5)".parse::<Permutation>().is_err());
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_types_and_orders() {
        assert_eq!(p("(1 2)(3 4)").cycle_type(), vec![2, 2]);
        assert_eq!(p("(1 2 3)").order(), 3);
        assert_eq!(p("(1 2 3 4)").order(), 4);
        assert_eq!(Permutation::IDENTITY.order(), 1);
    }
}

use super::perm::Permutation;
use super::subgroup::Subgroup;
use super::GroupError;

/// One orbit of a finite action, given by indices into the point list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted; the first entry is the representative.
    pub members: Vec<usize>,
    /// Stabilizer of the representative.
    pub stabilizer: Subgroup,
}

/// `{g ∈ G : g·x ≡ x}`.
pub fn stabilizer<P, A, E>(group: &Subgroup, x: &P, act: A, eq: E) -> Subgroup
where
    A: Fn(&Permutation, &P) -> P,
    E: Fn(&P, &P) -> bool,
{
    let elements: Vec<Permutation> = group
        .elements()
        .iter()
        .copied()
        .filter(|g| eq(&act(g, x), x))
        .collect();
    Subgroup::from_elements(elements).expect("stabilizer of an action is a subgroup")
}

/// Partitions `points` into orbits under `group`, in order of first
/// appearance.
///
/// Fails with [`GroupError::PointsNotClosed`] if some image matches no
/// listed point. Points are matched with `eq`; the first match wins.
pub fn orbits<P, A, E>(group: &Subgroup, points: &[P], act: A, eq: E) -> Result<Vec<Orbit>, GroupError>
where
    A: Fn(&Permutation, &P) -> P,
    E: Fn(&P, &P) -> bool,
{
    let mut assigned: Vec<Option<usize>> = vec![None; points.len()];
    let mut out: Vec<Orbit> = Vec::new();
    for start in 0..points.len() {
        if assigned[start].is_some() {
            continue;
        }
        let mut members = Vec::new();
        let mut stab = Vec::new();
        for g in group.elements() {
            let image = act(g, &points[start]);
            let hit = points
                .iter()
                .position(|q| eq(&image, q))
                .ok_or(GroupError::PointsNotClosed { point: start, element: *g })?;
            if hit == start {
                stab.push(*g);
            }
            match assigned[hit] {
                None => {
                    assigned[hit] = Some(out.len());
                    members.push(hit);
                }
                Some(o) if o == out.len() => {}
                Some(_) => return Err(GroupError::PointsNotClosed { point: start, element: *g }),
            }
        }
        members.sort_unstable();
        out.push(Orbit {
            members,
            stabilizer: Subgroup::from_elements(stab)
                .map_err(|_| GroupError::PointsNotClosed { point: start, element: Permutation::IDENTITY })?,
        });
    }
    Ok(out)
}

//! Enumeration of inclusion-maximal transitive subsets.

use crate::error::{Error, Result};
use crate::set::ChoiceSet;
use crate::tournament::Tournament;

/// Largest `within` accepted by [`maximal_transitive_subsets`].
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// All inclusion-maximal transitive subsets of `within`, as parent-carrier
/// sets, ordered by their ascending member lists.
pub fn maximal_transitive_subsets(t: &Tournament, within: &ChoiceSet) -> Result<Vec<ChoiceSet>> {
    maximal_transitive_subsets_capped(t, within, DEFAULT_ENUMERATION_CAP)
}

pub fn maximal_transitive_subsets_capped(
    t: &Tournament,
    within: &ChoiceSet,
    cap: usize,
) -> Result<Vec<ChoiceSet>> {
    if within.carrier_order() != t.order() {
        return Err(Error::SizeMismatch { expected: t.order(), actual: within.carrier_order() });
    }
    if within.is_empty() {
        return Err(Error::EmptySet);
    }
    if within.len() > cap {
        return Err(Error::CapExceeded { size: within.len(), cap });
    }
    let members = within.to_vec();
    let mut out = Vec::new();
    let mut current = ChoiceSet::empty(t.order());
    extend(t, within, &members, 0, &mut current, &mut out);
    let mut keyed: Vec<_> = out.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort();
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

// Each transitive subset is visited once, as the ascending sequence of its
// members; a node is emitted when nothing in `within` can join it.
fn extend(
    t: &Tournament,
    within: &ChoiceSet,
    members: &[usize],
    from: usize,
    current: &mut ChoiceSet,
    out: &mut Vec<ChoiceSet>,
) {
    let maximal = within
        .difference(current)
        .iter()
        .all(|b| !t.extends_transitively(current, b));
    if maximal {
        out.push(current.clone());
        return;
    }
    for (i, &b) in members.iter().enumerate().skip(from) {
        if current.contains(b) || !t.extends_transitively(current, b) {
            continue;
        }
        current.insert(b);
        extend(t, within, members, i + 1, current, out);
        current.remove(b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_has_three_pairs() {
        let c = Tournament::three_cycle();
        let sets = maximal_transitive_subsets(&c, &c.alternatives()).unwrap();
        let lists: Vec<_> = sets.iter().map(ChoiceSet::to_vec).collect();
        assert_eq!(lists, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn chain_is_its_own_unique_maximal_set() {
        let t = Tournament::transitive(4).unwrap();
        let sets = maximal_transitive_subsets(&t, &t.alternatives()).unwrap();
        assert_eq!(sets, vec![t.alternatives()]);
    }

    #[test]
    fn cap_and_empty_guard() {
        let t = Tournament::transitive(20).unwrap();
        assert_eq!(
            maximal_transitive_subsets(&t, &t.alternatives()),
            Err(Error::CapExceeded { size: 20, cap: 16 })
        );
        assert_eq!(
            maximal_transitive_subsets_capped(&t, &t.alternatives(), 20).unwrap().len(),
            1
        );
        assert_eq!(maximal_transitive_subsets(&t, &ChoiceSet::empty(20)), Err(Error::EmptySet));
    }
}

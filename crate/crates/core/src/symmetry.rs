use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ChoiceSet;
use crate::tournament::Tournament;

/// Orbits of the group generated by `generators`, each of which must be an
/// automorphism of `t`. Sorted by smallest member.
pub fn orbits(t: &Tournament, generators: &[Permutation]) -> Result<Vec<ChoiceSet>> {
    for (i, g) in generators.iter().enumerate() {
        if !t.is_automorphism(g)? {
            return Err(Error::NotAnAutomorphism(i));
        }
    }
    let n = t.order();
    let mut assigned = ChoiceSet::empty(n);
    let mut out = Vec::new();
    for start in 0..n {
        if assigned.contains(start) {
            continue;
        }
        let mut orbit = ChoiceSet::singleton(n, start)?;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for g in generators {
                let y = g.apply(x);
                if !orbit.contains(y) {
                    orbit.insert(y);
                    queue.push(y);
                }
            }
        }
        assigned.union_with(&orbit);
        out.push(orbit);
    }
    Ok(out)
}

use crate::set::ChoiceSet;
use crate::tournament::Tournament;

/// Alternatives of maximum Copeland score.
pub fn copeland_set(t: &Tournament) -> ChoiceSet {
    let scores = t.scores();
    let best = scores.iter().copied().max().unwrap_or(0);
    let mut out = ChoiceSet::empty(t.order());
    for (x, &s) in scores.iter().enumerate() {
        if s == best {
            out.insert(x);
        }
    }
    out
}

/// The top strongly connected component: everything that can reach a
/// Copeland winner, which always lies in that component.
pub fn top_cycle(t: &Tournament) -> ChoiceSet {
    let seed = copeland_set(t).first().expect("tournaments are nonempty");
    let mut reached = ChoiceSet::singleton(t.order(), seed).expect("seed in range");
    let mut frontier = reached.clone();
    while !frontier.is_empty() {
        let mut next = ChoiceSet::empty(t.order());
        for x in &frontier {
            next.union_with(t.col(x));
        }
        frontier = next.difference(&reached);
        reached.union_with(&frontier);
    }
    reached
}

/// Uncovered set via the covering relation: `y` covers `x` when `y ≻ x`
/// and the dominion of `x` is a strict subset of the dominion of `y`.
pub fn uncovered_set_by_covering(t: &Tournament) -> ChoiceSet {
    let mut out = ChoiceSet::empty(t.order());
    for x in 0..t.order() {
        let covered = t.col(x).iter().any(|y| t.row(x).is_subset(t.row(y)));
        if !covered {
            out.insert(x);
        }
    }
    out
}

/// Alternatives reaching every other alternative in at most two steps.
pub fn two_step_kings(t: &Tournament) -> ChoiceSet {
    let mut out = ChoiceSet::empty(t.order());
    for x in 0..t.order() {
        let mut reach = t.row(x).clone();
        for z in t.row(x) {
            reach.union_with(t.row(z));
        }
        reach.insert(x);
        if reach.len() == t.order() {
            out.insert(x);
        }
    }
    out
}

/// The uncovered set. Both characterizations are computed and must agree.
pub fn uncovered_set(t: &Tournament) -> ChoiceSet {
    let by_covering = uncovered_set_by_covering(t);
    assert_eq!(
        by_covering,
        two_step_kings(t),
        "covering and two-step characterizations of the uncovered set disagree"
    );
    by_covering
}

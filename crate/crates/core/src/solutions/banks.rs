//! Banks set membership by refutation search.
//!
//! `x` is in the Banks set iff some transitive `B` inside the dominion of
//! `x` has no common dominator of `B ∪ {x}`: such a `B ∪ {x}` extends to an
//! inclusion-maximal transitive set, and any element added on the way must
//! sit below `x`, so `x` stays its maximum.
//!
//! The search grows a chain `C` and tracks `W`, the common dominators of
//! `C ∪ {x}`. While `W` is nonempty, some `w ∈ W` has to be beaten by the
//! final chain, so it suffices to branch on the members that beat `w` and
//! still fit into `C`. Picking the `w` with the fewest such counters keeps
//! the tree narrow; chains already refuted are memoized.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::set::ChoiceSet;
use crate::tournament::{AlternativeId, Tournament};

/// Result of a membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BanksOutcome {
    pub member: bool,
    /// A transitive subset `B` of the dominion such that `B ∪ {x}` is an
    /// inclusion-maximal transitive set topped by `x`.
    pub witness: Option<ChoiceSet>,
    /// Search nodes expanded.
    pub nodes: usize,
}

pub fn banks_member(t: &Tournament, x: AlternativeId) -> Result<bool> {
    Ok(banks_member_with_witness(t, x)?.member)
}

pub fn banks_member_with_witness(t: &Tournament, x: AlternativeId) -> Result<BanksOutcome> {
    let dominion = t.dominion(x)?.clone();
    let mut search = Search {
        t,
        dominion,
        refuted: HashSet::new(),
        nodes: 0,
    };
    let mut chain = ChoiceSet::empty(t.order());
    let common = t.dominators(x)?.clone();
    let found = search.run(&mut chain, &common);
    if found {
        // Saturate: extra members only shrink the common dominators.
        for b in search.dominion.iter() {
            if !chain.contains(b) && t.extends_transitively(&chain, b) {
                chain.insert(b);
            }
        }
    }
    Ok(BanksOutcome {
        member: found,
        witness: found.then_some(chain),
        nodes: search.nodes,
    })
}

/// Banks set, members evaluated in parallel and collected by index.
pub fn banks_set(t: &Tournament) -> ChoiceSet {
    let flags: Vec<bool> = (0..t.order())
        .into_par_iter()
        .map(|x| banks_member(t, x).expect("index in range"))
        .collect();
    let mut out = ChoiceSet::empty(t.order());
    for (x, _) in flags.iter().enumerate().filter(|(_, &f)| f) {
        out.insert(x);
    }
    out
}

/// Members of a transitive set from the top of the order to the bottom.
pub fn dominance_order(t: &Tournament, s: &ChoiceSet) -> Vec<AlternativeId> {
    let mut v: Vec<_> = s.iter().map(|y| (t.row(y).intersection_len(s), y)).collect();
    v.sort_by(|a, b| b.cmp(a));
    v.into_iter().map(|(_, y)| y).collect()
}

struct Search<'a> {
    t: &'a Tournament,
    dominion: ChoiceSet,
    refuted: HashSet<ChoiceSet>,
    nodes: usize,
}

impl Search<'_> {
    // On success `chain` is left holding the witness.
    fn run(&mut self, chain: &mut ChoiceSet, common: &ChoiceSet) -> bool {
        if common.is_empty() {
            return true;
        }
        if self.refuted.contains(chain) {
            return false;
        }
        self.nodes += 1;
        let t = self.t;
        let insertable: ChoiceSet = {
            let mut s = ChoiceSet::empty(t.order());
            for b in self.dominion.difference(chain).iter() {
                if t.extends_transitively(chain, b) {
                    s.insert(b);
                }
            }
            s
        };
        let mut pivot: Option<ChoiceSet> = None;
        for w in common {
            let counters = insertable.intersection(t.col(w));
            if counters.is_empty() {
                // Nothing can escape w from here.
                self.refuted.insert(chain.clone());
                return false;
            }
            if pivot.as_ref().is_none_or(|p| counters.len() < p.len()) {
                pivot = Some(counters);
            }
        }
        for b in &pivot.expect("common dominators nonempty") {
            chain.insert(b);
            let next = common.intersection(t.col(b));
            if self.run(chain, &next) {
                return true;
            }
            chain.remove(b);
        }
        self.refuted.insert(chain.clone());
        false
    }
}

mod common;

use proptest::prelude::*;
use tournament_solutions::transitive::maximal_transitive_subsets;
use tournament_solutions::{ChoiceSet, Permutation, Tournament};

fn tournament(max: usize) -> impl Strategy<Value = Tournament> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut upper = vec![vec![false; n]; n];
            for (x, row) in upper.iter_mut().enumerate() {
                for cell in row.iter_mut().skip(x + 1) {
                    *cell = it.next().unwrap();
                }
            }
            Tournament::from_upper(n, |x, y| upper[x][y]).unwrap()
        })
    })
}

fn with_permutation(max: usize) -> impl Strategy<Value = (Tournament, Permutation)> {
    tournament(max).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(t, image)| (t, Permutation::new(image).unwrap()))
    })
}

fn with_subset(max: usize) -> impl Strategy<Value = (Tournament, ChoiceSet)> {
    tournament(max).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), prop::collection::vec(any::<bool>(), n)).prop_map(move |(t, keep)| {
            let s = ChoiceSet::from_indices(n, (0..n).filter(|&x| keep[x])).unwrap();
            (t, s)
        })
    })
}

proptest! {
    #[test]
    fn score_identities(t in tournament(20)) {
        let n = t.order();
        for x in 0..n {
            let score = t.copeland_score(x).unwrap();
            prop_assert_eq!(score + t.dominators(x).unwrap().len(), n - 1);
            let all = t.dominion(x).unwrap().union(t.dominators(x).unwrap()).with(x);
            prop_assert_eq!(all.len(), n);
        }
        prop_assert_eq!(t.scores().iter().sum::<usize>(), n * (n - 1) / 2);
    }

    #[test]
    fn skew_adjacency_is_skew(t in tournament(15)) {
        let m = t.skew_adjacency();
        for x in 0..t.order() {
            for y in 0..t.order() {
                prop_assert_eq!(m.get(x, y) + m.get(y, x), 0);
                prop_assert_eq!(m.get(x, y).abs(), i8::from(x != y));
            }
        }
    }

    #[test]
    fn permutation_round_trip((t, sigma) in with_permutation(12)) {
        let moved = t.apply_permutation(&sigma).unwrap();
        for x in 0..t.order() {
            for y in 0..t.order() {
                prop_assert_eq!(moved.dominates(sigma.apply(x), sigma.apply(y)), t.dominates(x, y));
            }
        }
        prop_assert_eq!(moved.apply_permutation(&sigma.inverse()).unwrap(), t);
    }

    #[test]
    fn transitivity_matches_triples((t, s) in with_subset(9)) {
        let m = common::matrix(&t);
        prop_assert_eq!(t.is_transitive_subset(&s), common::transitive_by_triples(&m, &s.to_vec()));
    }

    #[test]
    fn maximal_transitive_subsets_are_maximal((t, s) in with_subset(10)) {
        prop_assume!(!s.is_empty());
        let sets = maximal_transitive_subsets(&t, &s).unwrap();
        prop_assert!(!sets.is_empty());
        for b in &sets {
            prop_assert!(b.is_subset(&s));
            prop_assert!(t.is_transitive_subset(b));
            for y in s.difference(b).iter() {
                prop_assert!(!t.is_transitive_subset(&b.with(y)));
            }
        }
        let mut lists: Vec<_> = sets.iter().map(ChoiceSet::to_vec).collect();
        let before = lists.len();
        lists.dedup();
        prop_assert_eq!(lists.len(), before);
    }

    #[test]
    fn restriction_inherits_dominance((t, s) in with_subset(12)) {
        prop_assume!(!s.is_empty());
        let r = t.restrict(&s).unwrap();
        prop_assert_eq!(r.tournament.order(), s.len());
        for a in 0..s.len() {
            for b in 0..s.len() {
                prop_assert_eq!(r.tournament.dominates(a, b), t.dominates(r.parent_index[a], r.parent_index[b]));
            }
        }
    }
}

#[test]
fn maximal_transitive_subsets_match_brute_force_on_all_order_5() {
    for t in tournament_solutions::search::enumerate_labeled(5).unwrap() {
        let mut ours: Vec<u64> = maximal_transitive_subsets(&t, &t.alternatives())
            .unwrap()
            .iter()
            .map(|s| s.iter().map(|x| 1u64 << x).sum())
            .collect();
        let mut brute = common::maximal_transitive_masks(&common::matrix(&t));
        ours.sort_unstable();
        brute.sort_unstable();
        assert_eq!(ours, brute, "{}", common::rows(&t));
    }
}

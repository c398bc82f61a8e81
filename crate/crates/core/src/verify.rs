//! Mechanical check of every claim about the order-36 construction.
//!
//! Each check recomputes what it needs from the tournament alone. Banks
//! membership of the inner block is established by exhausting the
//! refutation search, independently of the spoiler argument, which is
//! checked on its own in check `i`.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construction::{self, block, label, triangle, ORDER};
use crate::error::{Error, Result};
use crate::games::slacks;
use crate::io::fraction;
use crate::set::ChoiceSet;
use crate::solutions::{banks_member_with_witness, bipartisan_set, copeland_set, dominance_order};
use crate::symmetry::orbits;
use crate::tournament::Tournament;
use crate::transitive::maximal_transitive_subsets;
use crate::Rational;

pub const REPORT_SCHEMA: &str = "tournament-verification-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub status: CheckStatus,
    pub summary: String,
    pub witness: Value,
}

impl Check {
    fn new(id: &'static str, name: &'static str, ok: bool, summary: impl Into<String>, witness: Value) -> Self {
        Self {
            id,
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            summary: summary.into(),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Named check results; passes iff no check failed.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub order: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Run check `g`. Reoriented variants need not keep the automorphisms.
    pub automorphisms: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { automorphisms: true }
    }
}

/// All checks, including the automorphism and orbit check.
pub fn verify_theorem(t: &Tournament) -> Result<VerificationReport> {
    verify_with(t, VerifyOptions::default())
}

/// All checks except `g`, which is reported as skipped.
pub fn verify_variant(t: &Tournament) -> Result<VerificationReport> {
    verify_with(t, VerifyOptions { automorphisms: false })
}

pub fn verify_with(t: &Tournament, opts: VerifyOptions) -> Result<VerificationReport> {
    if t.order() != ORDER {
        return Err(Error::SizeMismatch { expected: ORDER, actual: t.order() });
    }
    let inner = block(0);
    let outer = inner.complement();
    let (bp, lottery) = bipartisan_set(t)?;
    let ba = banks_check_data(t);

    let mut checks = vec![
        check_validity(t),
        check_bipartisan(t, &inner, &bp, &lottery)?,
        check_outer_counts(t, &inner, &outer),
        check_banks(&ba, &outer),
        check_partition(&ba.set, &bp),
        check_degrees(t, &inner),
    ];
    checks.push(if opts.automorphisms {
        check_automorphisms(t, &inner)
    } else {
        Check {
            id: "g",
            name: "automorphisms_and_orbits",
            status: CheckStatus::Skipped,
            summary: "skipped for reoriented variants".into(),
            witness: Value::Null,
        }
    });
    checks.push(check_inner_transitive_subsets(t, &inner, &outer)?);
    checks.push(check_spoilers(t)?);

    let passed = checks.iter().all(|c| c.status != CheckStatus::Fail);
    Ok(VerificationReport { schema: REPORT_SCHEMA, order: t.order(), passed, checks })
}

fn labels(s: &ChoiceSet) -> Vec<String> {
    s.iter().map(label).collect()
}

fn check_validity(t: &Tournament) -> Check {
    // Re-validate from the raw matrix rather than trusting the type.
    let ok = Tournament::from_matrix(&t.matrix()).is_ok() && t.order() == ORDER;
    let rule_layout = construction::is_paper_layout(t);
    Check::new(
        "a",
        "validity",
        ok,
        format!("order {}, asymmetric and connex", t.order()),
        json!({ "order": t.order(), "edges": t.scores().iter().sum::<usize>(), "paper_layout": rule_layout }),
    )
}

fn check_bipartisan(t: &Tournament, inner: &ChoiceSet, bp: &ChoiceSet, p: &crate::Lottery) -> Result<Check> {
    let ninth = Rational::new(1.into(), 9.into());
    let weights_ok = inner.iter().all(|x| *p.weight(x) == ninth);
    let slack = slacks(&t.skew_adjacency(), p)?;
    let slack_ok = (0..ORDER).all(|y| {
        if inner.contains(y) {
            slack[y].is_zero()
        } else {
            slack[y] == ninth
        }
    });
    let support_ok = bp == inner;
    let distinct_slacks: std::collections::BTreeSet<String> = slack.iter().map(fraction).collect();
    Ok(Check::new(
        "b",
        "bipartisan_set_uniform",
        support_ok && weights_ok && slack_ok,
        format!("support {} with weights {}", bp, fraction(p.weight(bp.first().unwrap_or(0)))),
        json!({
            "support": bp.to_vec(),
            "support_labels": labels(bp),
            "weights": p.weights().iter().map(fraction).collect::<Vec<_>>(),
            "distinct_slacks": distinct_slacks,
            "sum": fraction(&p.weights().iter().cloned().fold(Rational::zero(), |a, b| a + b)),
            "sum_is_one": p.weights().iter().cloned().fold(Rational::zero(), |a, b| a + b).is_one(),
        }),
    ))
}

fn check_outer_counts(t: &Tournament, inner: &ChoiceSet, outer: &ChoiceSet) -> Check {
    let bad: Vec<Value> = outer
        .iter()
        .filter_map(|y| {
            let beats = t.row(y).intersection_len(inner);
            let beaten = t.col(y).intersection_len(inner);
            (beats != 4 || beaten != 5).then(|| json!({ "id": y, "beats": beats, "beaten_by": beaten }))
        })
        .collect();
    let spot = t.col(11).intersection(inner);
    Check::new(
        "c",
        "outer_vs_inner_counts",
        bad.is_empty(),
        format!("{} outer alternatives deviate from 4 wins / 5 losses against the inner block", bad.len()),
        json!({ "violations": bad, "inner_dominators_of_11": spot.to_vec() }),
    )
}

struct BanksData {
    set: ChoiceSet,
    witnesses: Vec<(usize, Vec<usize>)>,
    refutation_nodes: Vec<(usize, usize)>,
}

fn banks_check_data(t: &Tournament) -> BanksData {
    use rayon::prelude::*;
    let outcomes: Vec<_> = (0..t.order())
        .into_par_iter()
        .map(|x| banks_member_with_witness(t, x).expect("index in range"))
        .collect();
    let mut set = ChoiceSet::empty(t.order());
    let mut witnesses = Vec::new();
    let mut refutation_nodes = Vec::new();
    for (x, o) in outcomes.into_iter().enumerate() {
        match o.witness {
            Some(b) => {
                set.insert(x);
                witnesses.push((x, dominance_order(t, &b.with(x))));
            }
            None => refutation_nodes.push((x, o.nodes)),
        }
    }
    BanksData { set, witnesses, refutation_nodes }
}

fn check_banks(ba: &BanksData, outer: &ChoiceSet) -> Check {
    Check::new(
        "d",
        "banks_set",
        ba.set == *outer,
        format!("Banks set has {} members; {} refuted by exhaustive search", ba.set.len(), ba.refutation_nodes.len()),
        json!({
            "members": ba.set.to_vec(),
            "maximal_chains": ba.witnesses.iter().map(|(x, c)| json!({ "id": x, "chain": c })).collect::<Vec<_>>(),
            "refuted": ba.refutation_nodes.iter().map(|(x, n)| json!({ "id": x, "label": label(*x), "nodes": n })).collect::<Vec<_>>(),
        }),
    )
}

fn check_partition(ba: &ChoiceSet, bp: &ChoiceSet) -> Check {
    let disjoint = ba.is_disjoint(bp);
    let covers = ba.union(bp).len() == ORDER;
    Check::new(
        "e",
        "partition",
        disjoint && covers,
        format!("disjoint: {disjoint}, union is everything: {covers}"),
        json!({ "intersection": ba.intersection(bp).to_vec(), "uncovered": ba.union(bp).complement().to_vec() }),
    )
}

fn check_degrees(t: &Tournament, inner: &ChoiceSet) -> Check {
    let scores = t.scores();
    let ok = scores
        .iter()
        .enumerate()
        .all(|(x, &s)| s == if inner.contains(x) { 19 } else { 17 });
    Check::new(
        "f",
        "degrees",
        ok,
        "Copeland scores 19 on the inner block, 17 elsewhere",
        json!({ "scores": scores, "copeland_set": copeland_set(t).to_vec() }),
    )
}

fn check_automorphisms(t: &Tournament, inner: &ChoiceSet) -> Check {
    let gens = construction::generators();
    let names = ["phi", "psi1", "psi2", "psi3"];
    let auto: Vec<bool> = gens.iter().map(|g| t.is_automorphism(g).unwrap_or(false)).collect();
    let (orbit_sets, ok) = match orbits(t, &gens) {
        Ok(o) => {
            let ok = o.len() == 2 && o[0] == *inner && o[1] == inner.complement();
            (o.iter().map(ChoiceSet::to_vec).collect::<Vec<_>>(), ok)
        }
        Err(_) => (Vec::new(), false),
    };
    Check::new(
        "g",
        "automorphisms_and_orbits",
        ok && auto.iter().all(|&a| a),
        format!("{} orbits", orbit_sets.len()),
        json!({
            "automorphisms": names.iter().zip(&auto).map(|(n, a)| json!({ "name": n, "is_automorphism": a })).collect::<Vec<_>>(),
            "orbits": orbit_sets,
        }),
    )
}

fn check_inner_transitive_subsets(t: &Tournament, inner: &ChoiceSet, outer: &ChoiceSet) -> Result<Check> {
    let restricted = t.restrict(inner)?.tournament;
    let regular = restricted.scores().iter().all(|&s| s == 4);
    let sets = maximal_transitive_subsets(t, inner)?;
    let mut all_dominated = true;
    let mut dominators_per_set = Vec::new();
    let mut seen_dominators = ChoiceSet::empty(ORDER);
    let mut unique = true;
    for s in &sets {
        let dom = t.common_dominators(s).intersection(outer);
        all_dominated &= !dom.is_empty();
        unique &= dom.len() == 1;
        seen_dominators.union_with(&dom);
        dominators_per_set.push(json!({ "set": s.to_vec(), "dominated_by": dom.to_vec() }));
    }
    let ok = regular && sets.len() == 27 && sets.iter().all(|s| s.len() == 4) && all_dominated;
    Ok(Check::new(
        "h",
        "inner_maximal_transitive_subsets",
        ok,
        format!("inner block regular: {regular}; {} maximal transitive subsets", sets.len()),
        json!({
            "regular_degree_4": regular,
            "count": sets.len(),
            "sizes": sets.iter().map(ChoiceSet::len).collect::<Vec<_>>(),
            "subsets": dominators_per_set,
            // Reported, not required: is each subset's outer dominator unique?
            "each_dominator_unique": unique,
            "distinct_dominators": seen_dominators.len(),
        }),
    ))
}

/// The three sets of the spoiler argument for `v0_3_3` and their claimed
/// dominators `v2_2_1`, `v2_2_2`, `v2_2_3`.
pub fn spoiler_sets() -> [(ChoiceSet, usize); 3] {
    let inner_first = |a: usize, b: usize| ChoiceSet::from_indices(ORDER, [a, b]).expect("valid");
    let mk = |pair: ChoiceSet, p: u8, q: u8, d: usize| (pair.union(&triangle(3, p)).union(&triangle(3, q)), d);
    [
        mk(inner_first(1, 2), 1, 2, 21),
        mk(inner_first(0, 2), 2, 3, 22),
        mk(inner_first(0, 1), 1, 3, 23),
    ]
}

/// Check `i`: the three spoiler sets are dominated as claimed and every
/// maximal transitive subset of `Δ⁰₁ ∪ Δ³` lies inside one of them.
pub fn check_spoilers(t: &Tournament) -> Result<Check> {
    let spoilers = spoiler_sets();
    let dominated: Vec<bool> = spoilers
        .iter()
        .map(|(s, d)| s.is_subset(t.row(*d)))
        .collect();
    let space = triangle(0, 1).union(&block(3));
    let sets = maximal_transitive_subsets(t, &space)?;
    let strays: Vec<Vec<usize>> = sets
        .iter()
        .filter(|m| !spoilers.iter().any(|(s, _)| m.is_subset(s)))
        .map(ChoiceSet::to_vec)
        .collect();
    // Outside the 12-element space, the dominion of v0_3_3 plus v0_3_3
    // itself must be beaten by all three spoilers.
    let rest = t.row(8).difference(&space).with(8);
    let also_in_dominion = [21, 22, 23].iter().all(|&d| rest.is_subset(t.row(d)));
    Ok(Check::new(
        "i",
        "spoilers",
        dominated.iter().all(|&d| d) && strays.is_empty() && also_in_dominion,
        format!("{} maximal transitive subsets of the 12-element space, {} outside the spoiler sets", sets.len(), strays.len()),
        json!({
            "spoiler_sets": spoilers.iter().zip(&dominated).map(|((s, d), ok)| json!({
                "set": s.to_vec(), "dominator": d, "dominator_label": label(*d), "dominated": ok,
            })).collect::<Vec<_>>(),
            "maximal_transitive_subsets": sets.iter().map(ChoiceSet::to_vec).collect::<Vec<_>>(),
            "strays": strays,
            "rest_of_dominion_dominated": also_in_dominion,
        }),
    ))
}

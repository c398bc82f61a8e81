//! Reference oracles. Each one works from the raw dominance matrix by
//! brute force and shares no code path with the algorithm it checks.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use tournament_solutions::{Rational, Tournament};

pub fn matrix(t: &Tournament) -> Vec<Vec<bool>> {
    t.matrix()
}

/// No 3-cycle among the members, checked over all triples.
pub fn transitive_by_triples(m: &[Vec<bool>], members: &[usize]) -> bool {
    for &a in members {
        for &b in members {
            for &c in members {
                if m[a][b] && m[b][c] && m[c][a] {
                    return false;
                }
            }
        }
    }
    true
}

fn members_of(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&x| mask >> x & 1 == 1).collect()
}

/// Every inclusion-maximal transitive subset of the whole tournament, as
/// bitmasks, by checking all `2^n` subsets.
pub fn maximal_transitive_masks(m: &[Vec<bool>]) -> Vec<u64> {
    let n = m.len();
    let transitive: Vec<bool> = (0..1u64 << n)
        .map(|mask| transitive_by_triples(m, &members_of(mask, n)))
        .collect();
    (0..1u64 << n)
        .filter(|&mask| {
            transitive[mask as usize]
                && (0..n).all(|y| mask >> y & 1 == 1 || !transitive[(mask | 1 << y) as usize])
        })
        .collect()
}

/// Banks set straight from its definition: maxima of maximal transitive
/// subsets.
pub fn banks_brute_force(t: &Tournament) -> Vec<usize> {
    let m = matrix(t);
    let n = m.len();
    let mut out = vec![false; n];
    for mask in maximal_transitive_masks(&m) {
        let members = members_of(mask, n);
        let top = members
            .iter()
            .copied()
            .find(|&x| members.iter().all(|&y| y == x || m[x][y]))
            .expect("transitive sets have a maximum");
        out[top] = true;
    }
    (0..n).filter(|&x| out[x]).collect()
}

/// Gaussian elimination over the rationals. Returns the unique solution of
/// `a·x = b`, or `None` when the system is inconsistent or underdetermined.
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = f.clone() * a[r][j].clone();
                    a[i][j] = a[i][j].clone() - d;
                }
                b[i] = b[i].clone() - f * b[r].clone();
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !b[i].is_zero()) || pivot_cols.len() < cols {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// The equilibrium by support enumeration over odd-size supports: on the
/// support every column constraint is tight, off it every constraint holds.
/// Returns the weights of the unique equilibrium found.
pub fn bipartisan_by_support_enumeration(t: &Tournament) -> Vec<Rational> {
    let m = matrix(t);
    let n = m.len();
    let payoff = |x: usize, y: usize| -> i64 {
        if m[x][y] {
            1
        } else if m[y][x] {
            -1
        } else {
            0
        }
    };
    let mut found: Vec<Vec<Rational>> = Vec::new();
    for mask in 1u64..1 << n {
        if mask.count_ones() % 2 == 0 {
            continue;
        }
        let s = members_of(mask, n);
        let mut a: Vec<Vec<Rational>> = s.iter().map(|&y| s.iter().map(|&x| q(payoff(x, y))).collect()).collect();
        let mut b = vec![q(0); s.len()];
        a.push(vec![q(1); s.len()]);
        b.push(q(1));
        let Some(p) = solve_unique(a, b) else { continue };
        if p.iter().any(|v| !v.is_positive()) {
            continue;
        }
        let ok = (0..n).filter(|y| !s.contains(y)).all(|y| {
            let v = s.iter().zip(&p).fold(q(0), |acc, (&x, w)| acc + w.clone() * q(payoff(x, y)));
            !v.is_negative()
        });
        if ok {
            let mut full = vec![q(0); n];
            for (&x, w) in s.iter().zip(p) {
                full[x] = w;
            }
            found.push(full);
        }
    }
    assert_eq!(found.len(), 1, "expected a unique equilibrium, found {}", found.len());
    found.pop().unwrap()
}

/// Top cycle from Landau's condition: the smallest `k` such that the `k`
/// highest scorers collect `C(k,2) + k(n−k)` wins, i.e. beat everyone else.
pub fn top_cycle_by_scores(t: &Tournament) -> Vec<usize> {
    let n = t.order();
    let scores = t.scores();
    let mut by_score: Vec<usize> = (0..n).collect();
    by_score.sort_by_key(|&x| std::cmp::Reverse(scores[x]));
    let mut total = 0;
    for k in 1..=n {
        total += scores[by_score[k - 1]];
        if total == k * (k - 1) / 2 + k * (n - k) {
            let mut top = by_score[..k].to_vec();
            top.sort_unstable();
            return top;
        }
    }
    unreachable!("k = n always satisfies the condition")
}

/// Lexicographically least row-major matrix over all `n!` relabelings.
pub fn canonical_brute_force(t: &Tournament) -> Vec<bool> {
    let m = matrix(t);
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        // perm[p] is the vertex at position p.
        let key: Vec<bool> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).map(|(p, q)| m[perm[p]][perm[q]]).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Row-major 0/1 text, for comparing tournaments in messages.
pub fn rows(t: &Tournament) -> String {
    tournament_solutions::io::format_tournament(t)
}

//! Exact primal simplex with Bland's rule for symmetric zero-sum games.
//!
//! The set `{p ≥ 0, Σp = 1, Mᵀp ≥ 0}` of a skew-symmetric game is exactly
//! its set of optimal strategies (the value is zero), and for tournaments
//! it is a single point. The solver reaches it through the classical LP of
//! the shifted game, whose origin is feasible, and certifies the result
//! against the system above before returning.

use crate::error::{Error, Result};
use crate::games::{ExactScalar, Lottery};
use crate::tournament::SkewAdjacency;

/// Counters from one solve, for diagnostics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PivotStats {
    pub pivots: usize,
}

/// The equilibrium lottery of the symmetric zero-sum game `m`.
pub fn solve_symmetric_zero_sum<F: ExactScalar>(m: &SkewAdjacency) -> Result<(Lottery<F>, PivotStats)> {
    let n = m.order();
    let entries: Vec<Vec<F>> = (0..n)
        .map(|x| (0..n).map(|y| F::from_entry(m.get(x, y))).collect())
        .collect();
    solve_unchecked(&entries)
}

/// Same as [`solve_symmetric_zero_sum`] for an arbitrary skew-symmetric
/// matrix over `F`.
pub fn solve_skew_symmetric<F: ExactScalar>(m: &[Vec<F>]) -> Result<(Lottery<F>, PivotStats)> {
    let n = m.len();
    for (x, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: x, len: row.len(), expected: n });
        }
        for y in 0..n {
            if (row[y].clone() + m[y][x].clone()) != F::zero() {
                return Err(Error::Solver(format!("matrix is not skew-symmetric at ({x}, {y})")));
            }
        }
    }
    solve_unchecked(m)
}

struct Tableau<F> {
    // rows × (cols + 1); last column is the right-hand side.
    cells: Vec<Vec<F>>,
    // Reduced costs of the objective; negative entries may enter.
    cost: Vec<F>,
    basis: Vec<usize>,
    cols: usize,
}

impl<F: ExactScalar> Tableau<F> {
    fn rhs(&self, r: usize) -> &F {
        &self.cells[r][self.cols]
    }

    // Bland: lowest-index improving column.
    fn entering(&self) -> Option<usize> {
        (0..self.cols).find(|&j| self.cost[j].is_negative())
    }

    // Bland: minimum ratio, ties to the lowest-index basic variable.
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, F)> = None;
        for r in 0..self.cells.len() {
            let a = &self.cells[r][col];
            if !a.is_positive() {
                continue;
            }
            let ratio = self.rhs(r).clone() / a.clone();
            let better = match &best {
                None => true,
                Some((br, bratio)) => ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br]),
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.cells[row][col].clone();
        for v in self.cells[row].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() / p.clone();
            }
        }
        let pivot_row = self.cells[row].clone();
        for (r, cells) in self.cells.iter_mut().enumerate() {
            if r != row {
                eliminate(cells, &pivot_row, col);
            }
        }
        eliminate(&mut self.cost, &pivot_row, col);
        self.basis[row] = col;
    }
}

fn eliminate<F: ExactScalar>(target: &mut [F], pivot_row: &[F], col: usize) {
    let factor = target[col].clone();
    if factor.is_zero() {
        return;
    }
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *t = t.clone() - factor.clone() * p.clone();
        }
    }
}

// Shifting every payoff by `c > max |m|` gives a game with positive value
// `c` and the same optimal strategies. For it, `max Σw s.t. (m + c)·w ≤ 1,
// w ≥ 0` starts feasible at the origin, and `w / Σw` is an optimal column
// strategy, i.e. `Σ_y m(x,y)·q(y) ≤ 0` for all `x`. Skew symmetry turns
// that into `Σ_x q(x)·m(x,y) ≥ 0`, the equilibrium system itself.
fn solve_unchecked<F: ExactScalar>(m: &[Vec<F>]) -> Result<(Lottery<F>, PivotStats)> {
    let n = m.len();
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    let largest = m
        .iter()
        .flatten()
        .map(|v| v.abs())
        .fold(F::zero(), |a, b| if b > a { b } else { a });
    let shift = largest + F::one();

    // Columns: w_0..w_{n-1}, then slacks.
    let cols = 2 * n;
    let mut cells = vec![vec![F::zero(); cols + 1]; n];
    for (x, row) in cells.iter_mut().enumerate() {
        for y in 0..n {
            row[y] = m[x][y].clone() + shift.clone();
        }
        row[n + x] = F::one();
        row[cols] = F::one();
    }
    let mut cost = vec![F::zero(); cols + 1];
    for c in cost.iter_mut().take(n) {
        *c = -F::one();
    }
    let basis = (n..cols).collect();
    let mut tab = Tableau { cells, cost, basis, cols };

    let mut stats = PivotStats::default();
    while let Some(col) = tab.entering() {
        let row = tab
            .leaving(col)
            .ok_or_else(|| Error::Solver("shifted game LP is unbounded".into()))?;
        tab.pivot(row, col);
        stats.pivots += 1;
    }

    let mut w = vec![F::zero(); n];
    for (r, &var) in tab.basis.iter().enumerate() {
        if var < n {
            w[var] = tab.rhs(r).clone();
        }
    }
    let total = w.iter().cloned().fold(F::zero(), |a, b| a + b);
    if !total.is_positive() {
        return Err(Error::Solver("optimal point is the origin".into()));
    }
    let lottery = Lottery::new(w.into_iter().map(|v| v / total.clone()).collect())?;
    if !satisfies_system(m, &lottery) {
        return Err(Error::Solver("solution fails the equilibrium inequalities".into()));
    }
    Ok((lottery, stats))
}

fn satisfies_system<F: ExactScalar>(m: &[Vec<F>], p: &Lottery<F>) -> bool {
    let n = m.len();
    (0..n).all(|y| {
        let s = (0..n).fold(F::zero(), |acc, x| acc + p.weight(x).clone() * m[x][y].clone());
        !s.is_negative()
    })
}

use crate::error::Result;
use crate::games::{solve_symmetric_zero_sum, PivotStats};
use crate::set::ChoiceSet;
use crate::tournament::Tournament;
use crate::{Lottery, Rational};

/// Support of the unique equilibrium of the tournament game, and the
/// equilibrium itself.
pub fn bipartisan_set(t: &Tournament) -> Result<(ChoiceSet, Lottery)> {
    let (set, lottery, _) = bipartisan_set_with_stats(t)?;
    Ok((set, lottery))
}

pub fn bipartisan_set_with_stats(t: &Tournament) -> Result<(ChoiceSet, Lottery, PivotStats)> {
    let (lottery, stats) = solve_symmetric_zero_sum::<Rational>(&t.skew_adjacency())?;
    Ok((lottery.support(), lottery, stats))
}

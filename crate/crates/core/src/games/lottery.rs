use crate::error::{Error, Result};
use crate::games::ExactScalar;
use crate::set::ChoiceSet;
use crate::tournament::SkewAdjacency;

/// A probability distribution over alternatives with exact weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Lottery<F> {
    weights: Vec<F>,
}

impl<F: ExactScalar> Lottery<F> {
    /// Checks nonnegativity and that the weights sum to exactly one.
    pub fn new(weights: Vec<F>) -> Result<Self> {
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::Solver("negative lottery weight".into()));
        }
        let total = weights.iter().cloned().fold(F::zero(), |a, b| a + b);
        if !total.is_one() {
            return Err(Error::Solver(format!("lottery weights sum to {total:?}")));
        }
        Ok(Self { weights })
    }

    /// Uniform over `s`, zero elsewhere.
    pub fn uniform_on(s: &ChoiceSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let k = (0..s.len()).fold(F::zero(), |a, _| a + F::one());
        let share = F::one() / k;
        let weights = (0..s.carrier_order())
            .map(|x| if s.contains(x) { share.clone() } else { F::zero() })
            .collect();
        Self::new(weights)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, x: usize) -> &F {
        &self.weights[x]
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }

    /// Alternatives with strictly positive weight.
    pub fn support(&self) -> ChoiceSet {
        let mut s = ChoiceSet::empty(self.weights.len());
        for (x, w) in self.weights.iter().enumerate() {
            if w.is_positive() {
                s.insert(x);
            }
        }
        s
    }
}

/// `Σ_x p(x)·M(x,y)` for every column `y`.
pub fn slacks<F: ExactScalar>(m: &SkewAdjacency, p: &Lottery<F>) -> Result<Vec<F>> {
    let n = m.order();
    if p.len() != n {
        return Err(Error::SizeMismatch { expected: n, actual: p.len() });
    }
    Ok((0..n)
        .map(|y| {
            (0..n).fold(F::zero(), |acc, x| match m.get(x, y) {
                0 => acc,
                1 => acc + p.weight(x).clone(),
                _ => acc - p.weight(x).clone(),
            })
        })
        .collect())
}

/// Whether `p` is a distribution satisfying every constraint
/// `Σ_x p(x)·M(x,y) ≥ 0` exactly.
pub fn verify_equilibrium<F: ExactScalar>(m: &SkewAdjacency, p: &Lottery<F>) -> Result<bool> {
    let slack = slacks(m, p)?;
    let total = p.weights().iter().cloned().fold(F::zero(), |a, b| a + b);
    Ok(total.is_one()
        && p.weights().iter().all(|w| !w.is_negative())
        && slack.iter().all(|s| !s.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::Tournament;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn rejects_non_distributions() {
        let half = Q::new(1.into(), 2.into());
        assert!(Lottery::new(vec![half.clone(), half.clone()]).is_ok());
        assert!(Lottery::new(vec![half.clone()]).is_err());
        assert!(Lottery::new(vec![Q::from_entry(2), Q::from_entry(-1)]).is_err());
    }

    #[test]
    fn point_mass_on_cycle_is_not_an_equilibrium() {
        let m = Tournament::three_cycle().skew_adjacency();
        let p = Lottery::new(vec![Q::from_entry(1), Q::from_entry(0), Q::from_entry(0)]).unwrap();
        assert!(!verify_equilibrium(&m, &p).unwrap());
        let u = Lottery::<Q>::uniform_on(&ChoiceSet::full(3)).unwrap();
        assert!(verify_equilibrium(&m, &u).unwrap());
        let short = Lottery::new(vec![Q::from_entry(1)]).unwrap();
        assert!(matches!(verify_equilibrium(&m, &short), Err(Error::SizeMismatch { .. })));
    }
}

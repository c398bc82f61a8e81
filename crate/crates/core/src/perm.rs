use crate::error::{Error, Result};
use crate::set::ChoiceSet;

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Self { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(Self { image: other.image.iter().map(|&x| self.image[x]).collect() })
    }

    pub fn apply_set(&self, s: &ChoiceSet) -> ChoiceSet {
        let mut out = ChoiceSet::empty(s.carrier_order());
        for x in s {
            out.insert(self.image[x]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_and_compose() {
        let p = Permutation::new(vec![2, 0, 1, 3]).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        let q = Permutation::new(vec![1, 0, 3, 2]).unwrap();
        let pq = p.compose(&q).unwrap();
        for x in 0..4 {
            assert_eq!(pq.apply(x), p.apply(q.apply(x)));
        }
    }
}

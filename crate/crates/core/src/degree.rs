//! Multidegrees in `N^n` with the componentwise partial order and join.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x^a`.
///
/// The derived `Ord` is lexicographic and only used for sorting; the
/// divisibility order is [`Multidegree::leq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<u32>);

/// Difference of two multidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedDegree(Vec<i64>);

impl Multidegree {
    pub fn new(coords: Vec<u32>) -> Self {
        Multidegree(coords)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(alloc::vec![0; n])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.len(), found: other.len() })
        }
    }

    /// `a ⪯ b`: every coordinate of `a` is at most that of `b`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.le(other))
    }

    /// Least upper bound (coordinatewise maximum).
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.vee(other))
    }

    /// [`leq`](Self::leq) for degrees already known to have equal length.
    pub fn le(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "multidegrees of different lengths");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// [`join`](Self::join) for degrees already known to have equal length.
    pub fn vee(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "multidegrees of different lengths");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Join of a family; `None` for the empty family.
    pub fn join_all<'a>(mut degrees: impl Iterator<Item = &'a Multidegree>) -> Option<Multidegree> {
        let first = degrees.next()?.clone();
        Some(degrees.fold(first, |acc, d| acc.vee(d)))
    }

    /// `self − other` when it lies in `N^n`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.len(), other.len(), "multidegrees of different lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Multidegree)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b)).collect::<Option<Vec<_>>>().map(Multidegree).ok_or(Error::DegreeOverflow)
    }

    pub fn difference(&self, other: &Self) -> Result<SignedDegree> {
        self.check_len(other)?;
        Ok(SignedDegree(self.0.iter().zip(&other.0).map(|(&a, &b)| a as i64 - b as i64).collect()))
    }

    /// Indices (0-based) of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }
}

impl SignedDegree {
    pub fn new(coords: Vec<i64>) -> Self {
        SignedDegree(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(v: Vec<u32>) -> Self {
        Multidegree(v)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Smallest superset of `degrees` closed under pairwise joins, sorted.
pub fn join_closure(degrees: impl IntoIterator<Item = Multidegree>) -> Vec<Multidegree> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut all: Vec<Multidegree> = Vec::new();
    let mut queue: Vec<Multidegree> = Vec::new();
    for d in degrees {
        if seen.insert(d.clone()) {
            queue.push(d);
        }
    }
    while let Some(d) = queue.pop() {
        for other in &all {
            let j = d.vee(other);
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
        all.push(d);
    }
    all.sort();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn order_examples() {
        assert!(d(&[2, 1]).leq(&d(&[3, 2])).unwrap());
        assert!(d(&[2, 1]).leq(&d(&[2, 1])).unwrap());
        assert!(!d(&[3, 0]).leq(&d(&[2, 3])).unwrap());
        assert!(d(&[1]).leq(&d(&[1, 2])).is_err());
    }

    #[test]
    fn join_examples() {
        assert_eq!(d(&[3, 0]).join(&d(&[2, 1])).unwrap(), d(&[3, 1]));
        assert_eq!(d(&[2, 1]).join(&d(&[2, 1])).unwrap(), d(&[2, 1]));
        let all = [d(&[2, 1]), d(&[1, 2]), d(&[0, 3])];
        assert_eq!(Multidegree::join_all(all.iter()).unwrap(), d(&[2, 3]));
        assert!(d(&[1]).join(&d(&[1, 2])).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(d(&[1, 0, 2]).support(), alloc::vec![0, 2]);
        assert_eq!(d(&[3, 0]).difference(&d(&[2, 1])).unwrap().support(), alloc::vec![0, 1]);
        assert!(d(&[0, 0]).support().is_empty());
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(d(&[u32::MAX]).checked_add(&d(&[1])), Err(Error::DegreeOverflow));
    }

    #[test]
    fn closure_of_two_incomparable() {
        let c = join_closure([d(&[1, 0]), d(&[0, 1]), d(&[1, 0])]);
        assert_eq!(c, alloc::vec![d(&[0, 1]), d(&[1, 0]), d(&[1, 1])]);
    }

    fn deg3() -> impl Strategy<Value = Multidegree> {
        proptest::collection::vec(0u32..5, 3).prop_map(Multidegree::new)
    }

    proptest! {
        #[test]
        fn join_is_least_upper_bound(a in deg3(), b in deg3(), c in deg3()) {
            let j = a.vee(&b);
            prop_assert!(a.le(&j) && b.le(&j));
            prop_assert_eq!(j.clone(), b.vee(&a));
            prop_assert_eq!(a.vee(&a), a.clone());
            prop_assert_eq!(j.vee(&c), a.vee(&b.vee(&c)));
            if a.le(&c) && b.le(&c) {
                prop_assert!(j.le(&c));
            }
            if a.le(&b) && b.le(&a) {
                prop_assert_eq!(a, b);
            }
        }
    }
}

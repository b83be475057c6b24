//! Complexes of vector spaces and of free multigraded modules.

use alloc::string::String;
use alloc::vec::Vec;

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// A bounded complex of finite-dimensional vector spaces in positions
/// `0..dims.len()`. `diffs[i]` is the differential from position `i + 1` to
/// position `i`, a `dims[i] × dims[i + 1]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorComplex {
    field: Field,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl VectorComplex {
    pub fn new(field: Field, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::MalformedComplex(alloc::format!("{} positions but {} differentials", dims.len(), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.rows() != dims[i] || d.cols() != dims[i + 1] || d.field() != field {
                return Err(Error::MalformedComplex(alloc::format!("differential {} has the wrong shape", i + 1)));
            }
        }
        Ok(VectorComplex { field, dims, diffs })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_i: position i → i − 1`, for `1 ≤ i < dims.len()`.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        i.checked_sub(1).and_then(|k| self.diffs.get(k))
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.diffs
    }

    /// First position `i` where `d_i ∘ d_{i+1} ≠ 0`.
    pub fn composite_failure(&self) -> Option<usize> {
        (1..self.diffs.len()).find(|&i| !(&self.diffs[i - 1] * &self.diffs[i]).is_zero())
    }

    /// `dim H_i` for every position, by exact ranks.
    pub fn homology_dims(&self) -> Result<Vec<usize>> {
        if let Some(position) = self.composite_failure() {
            return Err(Error::NotAComplex { position });
        }
        let ranks: Vec<usize> = self.diffs.iter().map(Matrix::rank).collect();
        Ok((0..self.dims.len())
            .map(|i| {
                let outgoing = if i == 0 { 0 } else { ranks[i - 1] };
                let incoming = ranks.get(i).copied().unwrap_or(0);
                self.dims[i] - outgoing - incoming
            })
            .collect())
    }

    /// Homology vanishes in every position except possibly 0.
    pub fn is_exact(&self) -> Result<bool> {
        Ok(self.homology_dims()?.iter().skip(1).all(|&h| h == 0))
    }

    /// Exact with `H_0 = 0` as well.
    pub fn is_split_exact(&self) -> Result<bool> {
        Ok(self.homology_dims()?.iter().all(|&h| h == 0))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// A basis element of a free module in a [`GradedComplex`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub degree: Multidegree,
    pub label: String,
}

impl Generator {
    pub fn new(degree: Multidegree, label: impl Into<String>) -> Self {
        Generator { degree, label: label.into() }
    }
}

/// A bounded complex of free multigraded modules. `levels[i]` lists the
/// generators of the module in homological position `i`; `diffs[i]` holds
/// the scalar coefficients of the differential from level `i + 1` to level
/// `i`. The monomial part of each entry is forced: a nonzero entry in row
/// `k`, column `j` is `c · x^(deg(col j) − deg(row k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    field: Field,
    n: usize,
    levels: Vec<Vec<Generator>>,
    diffs: Vec<Matrix>,
}

impl GradedComplex {
    /// Checks shapes and homogeneity.
    pub fn new(field: Field, n: usize, levels: Vec<Vec<Generator>>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != levels.len().max(1) {
            return Err(Error::MalformedComplex(alloc::format!("{} levels but {} differentials", levels.len(), diffs.len())));
        }
        for g in levels.iter().flatten() {
            if g.degree.len() != n {
                return Err(Error::Dimension { expected: n, found: g.degree.len() });
            }
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.rows() != levels[i].len() || d.cols() != levels[i + 1].len() || d.field() != field {
                return Err(Error::MalformedComplex(alloc::format!("differential {} has the wrong shape", i + 1)));
            }
        }
        let x = GradedComplex { field, n, levels, diffs };
        if let Some((level, row, col)) = x.homogeneity_violation() {
            return Err(Error::NegativeShift { level, row: row + 1, col: col + 1 });
        }
        Ok(x)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Vec<Generator>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[Generator] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Number of levels, counting position 0.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Scalar matrix of `d_i: level i → level i − 1`.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        i.checked_sub(1).and_then(|k| self.diffs.get(k))
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.diffs
    }

    /// Monomial exponent of entry `(row, col)` of `d_level`, or `None` when
    /// the column degree does not dominate the row degree.
    pub fn shift(&self, level: usize, row: usize, col: usize) -> Option<Multidegree> {
        self.levels[level][col].degree.checked_sub(&self.levels[level - 1][row].degree)
    }

    /// First nonzero entry `(level, row, col)` (0-based row and column)
    /// whose shift would be negative.
    pub fn homogeneity_violation(&self) -> Option<(usize, usize, usize)> {
        for (k, d) in self.diffs.iter().enumerate() {
            for (row, col, _) in d.nonzero_entries() {
                if self.shift(k + 1, row, col).is_none() {
                    return Some((k + 1, row, col));
                }
            }
        }
        None
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity_violation().is_none()
    }

    /// Generator degrees per level, each level sorted.
    pub fn graded_ranks(&self) -> Vec<Vec<Multidegree>> {
        self.levels
            .iter()
            .map(|l| {
                let mut d: Vec<_> = l.iter().map(|g| g.degree.clone()).collect();
                d.sort();
                d
            })
            .collect()
    }

    /// Removes empty top levels.
    pub(crate) fn trim(mut self) -> Self {
        while self.levels.len() > 1 && self.levels.last().is_some_and(Vec::is_empty) {
            self.levels.pop();
            self.diffs.pop();
        }
        self
    }

    pub(crate) fn into_parts(self) -> (Field, usize, Vec<Vec<Generator>>, Vec<Matrix>) {
        (self.field, self.n, self.levels, self.diffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_is_split_exact() {
        let c = VectorComplex::new(Q, alloc::vec![1, 1], alloc::vec![Matrix::identity(Q, 1)]).unwrap();
        assert_eq!(c.homology_dims().unwrap(), alloc::vec![0, 0]);
        assert!(c.is_split_exact().unwrap());
    }

    #[test]
    fn zero_complex_has_no_homology() {
        let c = VectorComplex::new(Q, alloc::vec![0, 0, 0], alloc::vec![Matrix::zeros(Q, 0, 0), Matrix::zeros(Q, 0, 0)]).unwrap();
        assert_eq!(c.homology_dims().unwrap(), alloc::vec![0, 0, 0]);
    }

    #[test]
    fn non_complex_is_reported() {
        let one = Matrix::identity(Q, 1);
        let c = VectorComplex::new(Q, alloc::vec![1, 1, 1], alloc::vec![one.clone(), one]).unwrap();
        assert_eq!(c.homology_dims(), Err(Error::NotAComplex { position: 1 }));
    }

    #[test]
    fn shapes_are_checked() {
        assert!(VectorComplex::new(Q, alloc::vec![1, 2], alloc::vec![Matrix::zeros(Q, 2, 1)]).is_err());
        let g = |d: &[u32]| Generator::new(Multidegree::new(d.to_vec()), "g");
        let bad = GradedComplex::new(Q, 1, alloc::vec![alloc::vec![g(&[2])], alloc::vec![g(&[1])]], alloc::vec![Matrix::identity(Q, 1)]);
        assert_eq!(bad, Err(Error::NegativeShift { level: 1, row: 1, col: 1 }));
    }
}

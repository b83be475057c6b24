//! Checking complexes: `d² = 0`, strands, homology, exactness, minimality,
//! and minimization by cancelling unit entries.

use alloc::vec::Vec;

use crate::complex::{GradedComplex, VectorComplex};
use crate::degree::{join_closure, Multidegree};
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};

/// A strand with nonzero homology above position 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyFailure {
    pub degree: Multidegree,
    pub position: usize,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub is_complex: bool,
    pub homogeneous: bool,
    pub tested_degrees: Vec<Multidegree>,
    pub failures: Vec<HomologyFailure>,
    pub minimal: bool,
}

impl ExactnessReport {
    /// A homogeneous complex whose strands have no homology above position 0.
    pub fn is_exact(&self) -> bool {
        self.is_complex && self.homogeneous && self.failures.is_empty()
    }
}

/// Every composite of consecutive differentials vanishes. For a homogeneous
/// complex all terms of a composite entry share one monomial, so the scalar
/// product decides.
pub fn check_d2(x: &GradedComplex) -> bool {
    let d = x.differentials();
    (1..d.len()).all(|i| (&d[i - 1] * &d[i]).is_zero())
}

/// The degree-`a` part of `x` as a complex over the base field: generators
/// of degree `⪯ a` at each level, with the scalar coefficients between them.
pub fn strand(x: &GradedComplex, a: &Multidegree) -> VectorComplex {
    let keep: Vec<Vec<usize>> =
        x.levels().iter().map(|l| l.iter().enumerate().filter(|(_, g)| g.degree.le(a)).map(|(i, _)| i).collect()).collect();
    let dims = keep.iter().map(Vec::len).collect();
    let diffs = x.differentials().iter().enumerate().map(|(i, d)| d.submatrix(&keep[i], &keep[i + 1])).collect();
    VectorComplex::new(x.field(), dims, diffs).expect("restriction of a well-formed complex")
}

pub fn homology_dims(v: &VectorComplex) -> Result<Vec<usize>> {
    v.homology_dims()
}

/// Degrees at which strands are compared: the join-closure of every
/// generator degree in the complex. A strand only depends on which
/// generators lie below the degree, and each such pattern is realized by a
/// point of the closure.
pub fn test_degrees(x: &GradedComplex) -> Vec<Multidegree> {
    join_closure(x.levels().iter().flatten().map(|g| g.degree.clone()))
}

pub fn is_resolution(x: &GradedComplex) -> ExactnessReport {
    let is_complex = check_d2(x);
    let homogeneous = x.is_homogeneous();
    let tested_degrees = test_degrees(x);
    let mut failures = Vec::new();
    if is_complex {
        for a in &tested_degrees {
            let h = strand(x, a).homology_dims().expect("d² = 0 was checked");
            for (position, &dimension) in h.iter().enumerate().skip(1) {
                if dimension > 0 {
                    failures.push(HomologyFailure { degree: a.clone(), position, dimension });
                }
            }
        }
    }
    ExactnessReport { is_complex, homogeneous, tested_degrees, failures, minimal: is_minimal(x) }
}

/// No nonzero entry joins two generators of the same degree, i.e. every
/// entry lies in the maximal ideal.
pub fn is_minimal(x: &GradedComplex) -> bool {
    find_unit(x, PivotOrder::First).is_none()
}

/// Which unit entry [`minimize_with`] cancels next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Smallest `(level, row, col)`.
    First,
    /// Largest `(level, row, col)`.
    Last,
}

fn find_unit(x: &GradedComplex, order: PivotOrder) -> Option<(usize, usize, usize)> {
    let mut units = x.differentials().iter().enumerate().flat_map(|(k, d)| {
        let level = k + 1;
        d.nonzero_entries()
            .filter(move |&(row, col, _)| x.level(level)[col].degree == x.level(level - 1)[row].degree)
            .map(move |(row, col, _)| (level, row, col))
    });
    match order {
        PivotOrder::First => units.next(),
        PivotOrder::Last => units.last(),
    }
}

pub fn minimize(x: &GradedComplex) -> GradedComplex {
    minimize_with(x, PivotOrder::First)
}

/// Repeatedly cancels a pair of generators joined by a nonzero scalar entry
/// between equal degrees, splitting off `0 → Q → Q → 0`, until the complex
/// is minimal. Homology is unchanged.
pub fn minimize_with(x: &GradedComplex, order: PivotOrder) -> GradedComplex {
    let mut cur = x.clone();
    while let Some((level, row, col)) = find_unit(&cur, order) {
        cur = cancel(cur, level, row, col);
    }
    cur
}

fn without(m: &Matrix, drop_row: Option<usize>, drop_col: Option<usize>) -> Matrix {
    let rows: Vec<usize> = (0..m.rows()).filter(|&i| Some(i) != drop_row).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&j| Some(j) != drop_col).collect();
    m.submatrix(&rows, &cols)
}

/// Cancels generator `col` of `level` against generator `row` of
/// `level − 1`, where `d_level[row][col]` is a unit.
fn cancel(x: GradedComplex, level: usize, row: usize, col: usize) -> GradedComplex {
    let (field, n, mut levels, mut diffs) = x.into_parts();
    let d = &diffs[level - 1];
    let inv = d.get(row, col).inv().expect("pivot is a unit");
    let mut reduced = without(d, Some(row), Some(col));
    let rows: Vec<usize> = (0..d.rows()).filter(|&i| i != row).collect();
    let cols: Vec<usize> = (0..d.cols()).filter(|&j| j != col).collect();
    for (ri, &i) in rows.iter().enumerate() {
        let a = d.get(i, col);
        if a.is_zero() {
            continue;
        }
        let factor: Scalar = a * &inv;
        for (cj, &j) in cols.iter().enumerate() {
            let b = d.get(row, j);
            if !b.is_zero() {
                let v = reduced.get(ri, cj) - &(&factor * b);
                reduced.set(ri, cj, v);
            }
        }
    }
    diffs[level - 1] = reduced;
    if level < diffs.len() {
        diffs[level] = without(&diffs[level], Some(col), None);
    }
    if level >= 2 {
        diffs[level - 2] = without(&diffs[level - 2], None, Some(row));
    }
    levels[level].remove(col);
    levels[level - 1].remove(row);
    GradedComplex::new(field, n, levels, diffs).expect("cancellation keeps the complex homogeneous").trim()
}

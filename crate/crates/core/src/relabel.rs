//! Quasi-equivalent morphisms and relabeling a resolution along a map of
//! LCM-lattices.
//!
//! A column correspondence is a permutation `p` of `0..e`: column `i` of the
//! first morphism is identified with column `p[i]` of the second.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::complex::{Generator, GradedComplex};
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice::DEFAULT_MAX_COLUMNS;
use crate::morphism::{k_subsets, Morphism};
use crate::IndexSet;

/// A finite table of degrees `a ↦ f(a)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelabelMap {
    table: BTreeMap<Multidegree, Multidegree>,
}

impl RelabelMap {
    /// Repeating a key with the same value is allowed.
    pub fn new(pairs: impl IntoIterator<Item = (Multidegree, Multidegree)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (from, to) in pairs {
            match table.get(&from) {
                Some(old) if *old != to => return Err(Error::DuplicateKey(from)),
                _ => {
                    table.insert(from, to);
                }
            }
        }
        Ok(RelabelMap { table })
    }

    pub fn identity(degrees: impl IntoIterator<Item = Multidegree>) -> Self {
        RelabelMap { table: degrees.into_iter().map(|d| (d.clone(), d)).collect() }
    }

    pub fn get(&self, a: &Multidegree) -> Result<&Multidegree> {
        self.table.get(a).ok_or_else(|| Error::MissingKey(a.clone()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Multidegree, &Multidegree)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

fn check_correspondence(phi: &Morphism, phi2: &Morphism, corr: &[usize]) -> Result<()> {
    if phi.e() != phi2.e() {
        return Err(Error::RankMismatch { left: phi.e(), right: phi2.e() });
    }
    let e = phi.e();
    let mut seen = alloc::vec![false; e];
    if corr.len() != e {
        return Err(Error::InvalidCorrespondence(e));
    }
    for &j in corr {
        if j >= e || seen[j] {
            return Err(Error::InvalidCorrespondence(e));
        }
        seen[j] = true;
    }
    Ok(())
}

pub fn identity_correspondence(e: usize) -> Vec<usize> {
    (0..e).collect()
}

/// The two maps `U → V` agree for suitable bases of the images exactly when
/// the coefficient matrices have the same kernel once the columns are
/// matched up.
pub fn check_quasi_equivalent(phi: &Morphism, phi2: &Morphism, corr: &[usize]) -> Result<bool> {
    check_correspondence(phi, phi2, corr)?;
    if phi.field() != phi2.field() {
        return Err(Error::FieldMismatch);
    }
    let permuted = phi2.coefficient_matrix().select_columns(corr);
    Ok(phi.coefficient_matrix().kernel_basis() == permuted.kernel_basis())
}

/// `f(|e_i|) = |e′_{p(i)}|` for every column `i`.
pub fn check_qe_compatible(f: &RelabelMap, phi: &Morphism, phi2: &Morphism, corr: &[usize]) -> Result<bool> {
    check_correspondence(phi, phi2, corr)?;
    for (i, d) in phi.source_degrees().iter().enumerate() {
        if *f.get(d)? != phi2.source_degrees()[corr[i]] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First set `S` of columns with `|S| ≥ min_size` (by size, then
/// lexicographically) such that `f` of the join of `|e_i|, i ∈ S` differs
/// from the join of the corresponding `|e′_i|`.
pub fn check_join_preserving(
    f: &RelabelMap,
    phi: &Morphism,
    phi2: &Morphism,
    min_size: usize,
    corr: &[usize],
) -> Result<Option<IndexSet>> {
    check_correspondence(phi, phi2, corr)?;
    let e = phi.e();
    if e > DEFAULT_MAX_COLUMNS {
        return Err(Error::TooManyColumns { columns: e, cap: DEFAULT_MAX_COLUMNS });
    }
    for k in min_size.max(1)..=e {
        for s in k_subsets(e, k) {
            let a = phi.face_degree(&s);
            let image: Vec<usize> = s.iter().map(|&i| corr[i]).collect();
            if *f.get(&a)? != phi2.face_degree(&image) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Rewrites a complex over `φ` as one over `φ′`: position 0 becomes the
/// target of `φ′`, the first differential becomes the coefficient matrix of
/// `φ′`, and every higher generator degree `a` becomes `f(a)`. All other
/// coefficients are kept. Columns are matched by position.
pub fn relabel(f: &RelabelMap, x: &GradedComplex, phi2: &Morphism) -> Result<GradedComplex> {
    let (field, _, levels, mut diffs) = x.clone().into_parts();
    if field != phi2.field() {
        return Err(Error::FieldMismatch);
    }
    if levels.len() < 2 {
        return Err(Error::MalformedComplex(format!("{} levels, need at least 2", levels.len())));
    }
    if levels[1].len() != phi2.e() {
        return Err(Error::Dimension { expected: phi2.e(), found: levels[1].len() });
    }
    let mut out = Vec::with_capacity(levels.len());
    out.push(phi2.target_degrees().iter().enumerate().map(|(i, d)| Generator::new(d.clone(), format!("g{}", i + 1))).collect());
    for (i, (g, target)) in levels[1].iter().zip(phi2.source_degrees()).enumerate() {
        if f.get(&g.degree)? != target {
            return Err(Error::QeIncompatible { column: i + 1 });
        }
    }
    out.push(levels[1].iter().zip(phi2.source_degrees()).map(|(g, d)| Generator::new(d.clone(), g.label.clone())).collect());
    for level in &levels[2..] {
        let mut mapped = Vec::with_capacity(level.len());
        for g in level {
            mapped.push(Generator::new(f.get(&g.degree)?.clone(), g.label.clone()));
        }
        out.push(mapped);
    }
    diffs[0] = phi2.coefficient_matrix().clone();
    GradedComplex::new(field, phi2.n(), out, diffs)
}

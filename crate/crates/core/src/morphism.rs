//! Multigraded morphisms `φ: E → G` and their coefficient data.

use alloc::string::String;
use alloc::vec::Vec;

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice;
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::IndexSet;

/// One coefficient of an input morphism, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: Scalar,
}

/// Unchecked morphism data as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMorphism {
    pub field: Field,
    pub n: usize,
    pub vars: Vec<String>,
    pub source_degrees: Vec<Multidegree>,
    pub target_degrees: Vec<Multidegree>,
    pub entries: Vec<RawEntry>,
}

/// A homogeneous morphism of free multigraded modules. The entry in row `i`,
/// column `j` is `c_ij · x^(|e_j| − |g_i|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    field: Field,
    n: usize,
    vars: Vec<String>,
    source_degrees: Vec<Multidegree>,
    target_degrees: Vec<Multidegree>,
    coefficients: Matrix,
}

/// How the coordinates on `V = im(s)` were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VBasis {
    /// `r = g`: `V = W` and `υ_1, …, υ_g` is the dual of the target basis.
    DualOfTarget,
    /// `r < g`: the reduced echelon basis of the column space of `C`.
    Echelon,
}

/// The linear algebra attached to a morphism: `s: U → W` with matrix `C`,
/// its rank and image, and the matrix of `U → V` in the chosen `V`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffData {
    pub c: Matrix,
    pub rank: usize,
    pub image: Subspace,
    /// `rank × e`; column `l` holds the coordinates of `s(e_l)`.
    pub coords: Matrix,
    pub basis_mode: VBasis,
}

impl CoeffData {
    /// `K_I`: functionals on `V` vanishing on `span{s(e_i) : i ∈ I}`, in
    /// coordinates dual to the chosen basis of `V`.
    pub fn k_space(&self, face: &[usize]) -> Subspace {
        let restricted = self.coords.select_columns(face);
        restricted.column_space_basis().annihilator()
    }
}

/// Coordinates of every column of `c` in the echelon basis of `sub`.
pub fn coordinates_in(sub: &Subspace, c: &Matrix) -> Result<Matrix> {
    let mut out = Matrix::zeros(c.field(), sub.dim(), c.cols());
    for j in 0..c.cols() {
        let x = sub.coordinates(&c.column(j)).ok_or(Error::NotASuperspace)?;
        for (i, v) in x.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

impl Morphism {
    pub fn validate(raw: RawMorphism) -> Result<Self> {
        let RawMorphism { field, n, vars, source_degrees, target_degrees, entries } = raw;
        if source_degrees.is_empty() || target_degrees.is_empty() {
            return Err(Error::EmptyModule);
        }
        if !vars.is_empty() && vars.len() != n {
            return Err(Error::Dimension { expected: n, found: vars.len() });
        }
        for d in source_degrees.iter().chain(&target_degrees) {
            if d.len() != n {
                return Err(Error::Dimension { expected: n, found: d.len() });
            }
        }
        let (g, e) = (target_degrees.len(), source_degrees.len());
        let mut coefficients = Matrix::zeros(field, g, e);
        let mut given = alloc::vec![false; g * e];
        for RawEntry { row, col, coeff } in entries {
            if row == 0 || col == 0 || row > g || col > e {
                return Err(Error::EntryOutOfRange { row, col });
            }
            if coeff.field() != field {
                return Err(Error::FieldMismatch);
            }
            let k = (row - 1) * e + (col - 1);
            if given[k] {
                return Err(Error::DuplicateEntry { row, col });
            }
            given[k] = true;
            if coeff.is_zero() {
                continue;
            }
            if source_degrees[col - 1].checked_sub(&target_degrees[row - 1]).is_none() {
                return Err(Error::Homogeneity { row, col });
            }
            coefficients.set(row - 1, col - 1, coeff);
        }
        Ok(Morphism { field, n, vars, source_degrees, target_degrees, coefficients })
    }

    /// Builds a morphism from a dense coefficient matrix (`g × e`).
    pub fn from_matrix(source_degrees: Vec<Multidegree>, target_degrees: Vec<Multidegree>, coefficients: &Matrix) -> Result<Self> {
        let n = source_degrees.first().map_or(0, Multidegree::len);
        let entries = coefficients
            .nonzero_entries()
            .map(|(i, j, c)| RawEntry { row: i + 1, col: j + 1, coeff: c.clone() })
            .collect();
        if coefficients.rows() != target_degrees.len() {
            return Err(Error::Dimension { expected: target_degrees.len(), found: coefficients.rows() });
        }
        if coefficients.cols() != source_degrees.len() {
            return Err(Error::Dimension { expected: source_degrees.len(), found: coefficients.cols() });
        }
        Self::validate(RawMorphism { field: coefficients.field(), n, vars: Vec::new(), source_degrees, target_degrees, entries })
    }

    pub fn with_vars(mut self, vars: Vec<String>) -> Result<Self> {
        if !vars.is_empty() && vars.len() != self.n {
            return Err(Error::Dimension { expected: self.n, found: vars.len() });
        }
        self.vars = vars;
        Ok(self)
    }

    pub fn to_raw(&self) -> RawMorphism {
        RawMorphism {
            field: self.field,
            n: self.n,
            vars: self.vars.clone(),
            source_degrees: self.source_degrees.clone(),
            target_degrees: self.target_degrees.clone(),
            entries: self
                .coefficients
                .nonzero_entries()
                .map(|(i, j, c)| RawEntry { row: i + 1, col: j + 1, coeff: c.clone() })
                .collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Declared variable names; empty when none were given.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Rank of the source module.
    pub fn e(&self) -> usize {
        self.source_degrees.len()
    }

    /// Rank of the target module.
    pub fn g(&self) -> usize {
        self.target_degrees.len()
    }

    pub fn source_degrees(&self) -> &[Multidegree] {
        &self.source_degrees
    }

    pub fn target_degrees(&self) -> &[Multidegree] {
        &self.target_degrees
    }

    pub fn coefficient_matrix(&self) -> &Matrix {
        &self.coefficients
    }

    /// Columns whose coefficients are all zero (0-based). Such morphisms are
    /// accepted but are never minimal presentations.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.e()).filter(|&j| (0..self.g()).all(|i| self.coefficients.get(i, j).is_zero())).collect()
    }

    /// `|e_I|`, the join of the source degrees over `face`; zero for the
    /// empty face.
    pub fn face_degree(&self, face: &[usize]) -> Multidegree {
        Multidegree::join_all(face.iter().map(|&i| &self.source_degrees[i])).unwrap_or_else(|| Multidegree::zero(self.n))
    }

    pub fn coeff_data(&self) -> CoeffData {
        let c = self.coefficients.clone();
        let image = c.column_space_basis();
        let rank = image.dim();
        let coords = coordinates_in(&image, &c).expect("columns lie in the column space");
        let basis_mode = if rank == self.g() { VBasis::DualOfTarget } else { VBasis::Echelon };
        CoeffData { c, rank, image, coords, basis_mode }
    }

    pub fn rank(&self) -> usize {
        self.coefficients.rank()
    }

    /// `I_a = { j : |e_j| ⪯ a }`, ascending.
    pub fn columns_leq(&self, a: &Multidegree) -> IndexSet {
        (0..self.e()).filter(|&j| self.source_degrees[j].le(a)).collect()
    }

    pub fn k_space(&self, face: &[usize]) -> Subspace {
        self.coeff_data().k_space(face)
    }

    /// Every choice of `r` columns of `C` is linearly independent.
    pub fn is_uniform_rank(&self) -> bool {
        let r = self.rank();
        k_subsets(self.e(), r).all(|cols| self.coefficients.select_columns(&cols).rank() == r)
    }

    /// For all `i < j`, `supp(|e_i| − |e_j|)` contains `supp(|e_i|) ∪ supp(|e_j|)`.
    pub fn is_combinatorially_generic(&self) -> bool {
        self.combinatorial_genericity_witness().is_none()
    }

    /// First pair `(i, j)` (0-based) violating combinatorial genericity.
    pub fn combinatorial_genericity_witness(&self) -> Option<(usize, usize)> {
        let degs = &self.source_degrees;
        for i in 0..self.e() {
            for j in i + 1..self.e() {
                let diff = degs[i].coords().iter().zip(degs[j].coords());
                let ok = diff.into_iter().all(|(a, b)| (*a == 0 && *b == 0) || a != b);
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_generic(&self) -> bool {
        self.is_combinatorially_generic() && self.is_uniform_rank()
    }

    /// Checks `rank C_a = min(r, |I_a|)` for every multidegree `a`, returning
    /// the first failing degree. Only joins of source degrees need checking:
    /// any `a` has the same `I_a` as the join of the degrees it dominates.
    pub fn maximal_rank_witness(&self) -> Result<Option<Multidegree>> {
        let r = self.rank();
        let lattice = lattice::LcmLattice::of(self)?;
        for a in lattice.elements() {
            let cols = self.columns_leq(a);
            if self.coefficients.select_columns(&cols).rank() != r.min(cols.len()) {
                return Ok(Some(a.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_maximal_rank_everywhere(&self) -> Result<bool> {
        Ok(self.maximal_rank_witness()?.is_none())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - k + i {
                    c[i] += 1;
                    for t in i + 1..k {
                        c[t] = c[t - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        cur = next;
        Some(out)
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn deg(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    /// The 4×2 example: source degrees (3,0),(2,1),(1,2),(0,3); target
    /// degrees (0,0),(1,0); coefficients [[1,1,1,1],[1,2,3,0]].
    pub fn ex() -> Morphism {
        let c = Matrix::from_i64_rows(Field::Rational, &[&[1, 1, 1, 1], &[1, 2, 3, 0]]);
        Morphism::from_matrix(
            alloc::vec![deg(&[3, 0]), deg(&[2, 1]), deg(&[1, 2]), deg(&[0, 3])],
            alloc::vec![deg(&[0, 0]), deg(&[1, 0])],
            &c,
        )
        .unwrap()
    }

    /// The same coefficients over `k[u,v,w]` with source degrees
    /// (2,1,0),(1,1,1),(2,0,1),(1,0,2).
    pub fn phi_prime() -> Morphism {
        let c = Matrix::from_i64_rows(Field::Rational, &[&[1, 1, 1, 1], &[1, 2, 3, 0]]);
        Morphism::from_matrix(
            alloc::vec![deg(&[2, 1, 0]), deg(&[1, 1, 1]), deg(&[2, 0, 1]), deg(&[1, 0, 2])],
            alloc::vec![deg(&[0, 0, 0]), deg(&[1, 0, 0])],
            &c,
        )
        .unwrap()
    }

    /// 0-based face from the 1-based notation.
    pub fn face(one_based: &[usize]) -> Vec<usize> {
        one_based.iter().map(|i| i - 1).collect()
    }
}
